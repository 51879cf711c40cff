#!/usr/bin/env python3
# Copyright (c) 2026 the spdisp authors
# SPDX-License-Identifier: Apache-2.0
#
# Generates tests/data/erfc_reference.csv: reference values of the complex
# complementary error function computed with mpmath at 40 significant digits,
# rounded to double precision. The table is generated once and committed; the
# unit tests compare the C++ implementation against it and never regenerate it.
#
# Point set: a uniform grid over [-8,8]^2, seeded random points, a ring around
# |xi| = 4, points hugging the real and imaginary axes (including offsets that
# stress the sampling poles of trapezoidal Faddeeva evaluations at multiples
# of h = 0.25), and the origin's neighborhood.
import csv
import random

import mpmath as mp

mp.mp.dps = 40

def rows():
    pts = []
    x = -8.0
    while x <= 8.0 + 1e-12:
        y = -8.0
        while y <= 8.0 + 1e-12:
            pts.append((x, y))
            y += 1.0
        x += 1.0
    rng = random.Random(20260814)
    for _ in range(160):
        pts.append((rng.uniform(-8, 8), rng.uniform(-8, 8)))
    for k in range(64):
        th = 2 * mp.pi * k / 64
        for r in (3.75, 4.0, 4.25):
            pts.append((float(r * mp.cos(th)), float(r * mp.sin(th))))
    for k in range(1, 31):
        pts.append((1e-9, 0.25 * k))
        pts.append((-1e-9, -0.25 * k))
        pts.append((0.25 * k, 1e-9))
        pts.append((0.25 * k + 1e-9, 0.0))
        pts.append((0.0, 0.25 * k + 1e-9))
    pts += [(0.0, 0.0), (1e-300, 0.0), (1.0, 0.0), (-1.0, 0.0), (0.0, 1.0)]
    for (x, y) in pts:
        v = mp.erfc(mp.mpc(x, y))
        yield (repr(float(x)), repr(float(y)),
               mp.nstr(v.real, 17, strip_zeros=False),
               mp.nstr(v.imag, 17, strip_zeros=False))

with open("tests/data/erfc_reference.csv", "w", newline="") as f:
    wr = csv.writer(f)
    wr.writerow(["re_xi", "im_xi", "re_erfc", "im_erfc"])
    for r in rows():
        wr.writerow(r)
print("wrote tests/data/erfc_reference.csv")
