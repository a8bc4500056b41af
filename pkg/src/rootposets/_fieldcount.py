"""Counting points of (Z/q)^p off a family of affine hyperplanes.

Hyperplane h is ``sum_i F[h, i] * n_i == K[h] (mod q)``.  The first p-1
coordinates are walked with an odometer while the partial sums are kept
incrementally; for each prefix the forbidden values of the last
coordinate are stamped into a scratch array.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _modinv(a, q):
    # q is prime
    r = 1
    e = q - 2
    b = a % q
    while e > 0:
        if e & 1:
            r = (r * b) % q
        b = (b * b) % q
        e >>= 1
    return r


@njit(cache=True)
def count_complement(F, K, q):
    nh, p = F.shape
    Fm = F % q
    Km = K % q
    last = Fm[:, p - 1]
    inv_last = np.zeros(nh, dtype=np.int64)
    for h in range(nh):
        if last[h] != 0:
            inv_last[h] = _modinv(last[h], q)
    partial = np.zeros(nh, dtype=np.int64)
    coords = np.zeros(max(p - 1, 1), dtype=np.int64)
    stamp = np.zeros(q, dtype=np.int64)
    tick = 0
    total = 0
    while True:
        tick += 1
        dead = False
        marked = 0
        for h in range(nh):
            rhs = Km[h] - partial[h]
            if rhs < 0:
                rhs += q
            if last[h] == 0:
                if rhs == 0:
                    dead = True
                    break
            else:
                x = (rhs * inv_last[h]) % q
                if stamp[x] != tick:
                    stamp[x] = tick
                    marked += 1
        if not dead:
            total += q - marked
        # advance the odometer over the first p-1 coordinates
        i = 0
        while i < p - 1:
            for h in range(nh):
                s = partial[h] + Fm[h, i]
                partial[h] = s - q if s >= q else s
            coords[i] += 1
            if coords[i] < q:
                break
            coords[i] = 0
            i += 1
        if i >= p - 1:
            break
    return total


def count_points(forms, levels, q: int, rank: int) -> int:
    if len(forms) == 0:
        return q**rank
    F = np.ascontiguousarray(np.array(forms, dtype=np.int64))
    K = np.ascontiguousarray(np.array(levels, dtype=np.int64))
    return int(count_complement(F, K, q))
