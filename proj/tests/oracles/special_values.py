#!/usr/bin/env python3
# Copyright 2026 The prngbench Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

# Copyright 2026 The prngbench Authors.
# SPDX-License-Identifier: Apache-2.0
"""High-precision reference values frozen into tests/special_functions_test.cpp."""
from mpmath import mp, mpf, gammainc, ncdf, exp, factorial, quad, inf, binomial

mp.dps = 50


def chi_sf(x, k):
    return gammainc(mpf(k) / 2, mpf(x) / 2, inf, regularized=True)


def pois_left(lam, k):
    lam = mpf(lam)
    return sum(exp(-lam) * lam**j / factorial(j) for j in range(k + 1))


def pois_right(lam, k):
    return 1 - pois_left(lam, k - 1) if k > 0 else mpf(1)


for x, k in [(2, 2), (10, 5), (0.5, 1), (30, 10), (100, 50), (1000, 900), (4200, 4032),
             (3800, 4032), (1e-3, 3), (150, 3), (700, 600), (75, 60)]:
    print("chi_sf", x, k, mp.nstr(chi_sf(x, k), 25))
for z in [1.96, -1, -5, -10, -20, -37.5, 0.3, 8]:
    print("ncdf", z, mp.nstr(ncdf(z), 25))
for lam, k in [(1, 0), (128, 128), (128, 100), (128, 170), (8149.3, 8149), (8149.3, 8500),
               (0.5, 3), (3.8, 12), (1, 6)]:
    print("pois", lam, k, mp.nstr(pois_left(lam, k), 25), mp.nstr(pois_right(lam, k), 25))
print("u32max", mp.nstr(mpf(4294967295) / mpf(2)**32, 25))
print("mte", mp.nstr(1 - (1 - mpf("0.002"))**160, 25))
