"""Independent reference computations used to cross-check the library.

Nothing here goes through the Weyl character formula or the finite Fourier
transform: rank-1 characters are plain weight sums, and SU(2) fusion comes
from decomposing tensor products of weight multisets and folding at the level.
"""
from __future__ import annotations

import cmath
import math
from collections import Counter
from fractions import Fraction

from loopfix.exact import Cyclotomic, exp2pi


def su2_weight_sum(l: int, phase: Fraction) -> Cyclotomic:
    """sum_{j=0}^{l} t^{(l-2j) rho} where t^rho = exp(2 pi i phase)."""
    total = Cyclotomic.zero()
    for j in range(l + 1):
        total = total + exp2pi((l - 2 * j) * phase)
    return total


def su2_weights(l: int) -> Counter:
    """Weight multiset of the irreducible of highest weight l (in units of omega)."""
    return Counter(range(-l, l + 1, 2))


def su2_decompose(weights: Counter) -> Counter:
    """Peel off highest weights until nothing is left."""
    weights = Counter(weights)
    out = Counter()
    while +weights:
        top = max(w for w, m in weights.items() if m)
        m = weights[top]
        out[top] += m
        for w in su2_weights(top):
            weights[w] -= m
        assert all(v >= 0 for v in weights.values())
        weights = +weights
    return out


def su2_fold(decomp: Counter, k: int) -> Counter:
    """Fold a tensor decomposition into level k by affine reflection of l + 1 modulo 2(k + 2)."""
    n = k + 2
    out = Counter()
    for l, m in decomp.items():
        x = (l + 1) % (2 * n)
        if x % n == 0:
            continue
        if x < n:
            out[x - 1] += m
        else:
            out[2 * n - x - 1] -= m
    return +out


def su2_fusion(a: int, b: int, k: int) -> Counter:
    prod = Counter()
    for x, mx in su2_weights(a).items():
        for y, my in su2_weights(b).items():
            prod[x + y] += mx * my
    return su2_fold(su2_decompose(prod), k)


def su2_verlinde_float(k: int, genus: int) -> float:
    """Closed trigonometric form sum_j (S_0j)^(2 - 2g), S_0j = sqrt(2/(k+2)) sin(pi (j+1)/(k+2))."""
    n = k + 2
    return sum((math.sqrt(2 / n) * math.sin(math.pi * (j + 1) / n)) ** (2 - 2 * genus) for j in range(k + 1))


def float_weight_sum(l: int, phase: float) -> complex:
    return sum(cmath.exp(2j * math.pi * (l - 2 * j) * phase) for j in range(l + 1))
