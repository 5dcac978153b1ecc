"""Exact integer-point enumeration for positive definite rational forms.

The Gram matrix is reduced once to a sum of weighted complete squares

    q(z) = sum_i c_i (z_i + sum_{j > i} u_ij z_j)^2,   c_i > 0 rational,

by symmetric elimination (no square roots, so everything stays in Q).
Enumeration then walks the coordinates with exact interval bounds, which
is exhaustive: every lattice point inside the ellipsoid q <= bound is
visited.  Coordinates are scanned in the zigzag order 0, 1, -1, 2, -2,
... so the first witness found is deterministic and small.

Enumeration effort is capped by ADCFORMS_MAX_ENUM (default 10**7 visited
nodes) to keep desk-scale guarantees.
"""

from __future__ import annotations

import math
import os
from fractions import Fraction as QQ

from .errors import EnumerationBudgetExceeded, NotPositiveDefinite

DEFAULT_MAX_ENUM = 10 ** 7


class Budget:
    """Counts enumeration work; raises once the cap is exceeded."""

    def __init__(self, limit: int | None = None):
        if limit is None:
            limit = int(os.environ.get("ADCFORMS_MAX_ENUM", DEFAULT_MAX_ENUM))
        self.limit = limit
        self.used = 0

    def spend(self, n: int = 1) -> None:
        self.used += n
        if self.used > self.limit:
            raise EnumerationBudgetExceeded(
                f"enumeration exceeded {self.limit} candidates")


def zigzag():
    """0, 1, -1, 2, -2, ...: the canonical scan order for one coordinate."""
    yield 0
    k = 1
    while True:
        yield k
        yield -k
        k += 1


def square_decomposition(g: list[list[QQ]]) -> list[tuple[QQ, list[QQ]]]:
    """LDL^T-style weights c_i and multipliers u_i; fails unless q > 0."""
    n = len(g)
    m = [[QQ(x) for x in row] for row in g]
    out = []
    for i in range(n):
        c = m[i][i]
        if c <= 0:
            raise NotPositiveDefinite("completing the square hit a nonpositive pivot")
        u = [m[i][j] / c for j in range(i + 1, n)]
        for r in range(i + 1, n):
            for s in range(r, n):
                m[r][s] -= c * u[r - i - 1] * u[s - i - 1]
                m[s][r] = m[r][s]
        out.append((c, u))
    return out


def _floor_sqrt_plus(f: QQ, t: QQ) -> int:
    """floor(sqrt(f) + t) for f >= 0, computed exactly."""
    num, den = f.numerator, f.denominator
    r = math.isqrt(num * den)  # sqrt(f) is in [r/den, (r+1)/den]
    m = (QQ(r + 1, den) + t).__floor__()

    def ok(k: int) -> bool:
        d = QQ(k) - t
        return d <= 0 or d * d <= f

    while not ok(m):
        m -= 1
    while ok(m + 1):
        m += 1
    return m


def integer_interval(c: QQ, s: QQ, bound: QQ) -> tuple[int, int]:
    """All integers z with c (z + s)^2 <= bound, as [lo, hi] (may be empty)."""
    if bound < 0:
        return 1, 0
    f = bound / c
    return -_floor_sqrt_plus(f, s), _floor_sqrt_plus(f, -s)


def _zigzag_interval(lo: int, hi: int):
    if lo > hi:
        return
    for k in zigzag():
        if lo <= k <= hi:
            yield k
        if k > 0 and (k > hi and -k < lo):
            return


class Enumerator:
    """Shared recursion for offset lattice enumeration of one Gram matrix.

    Internally the variable order is reversed so that the search chooses
    the original coordinate 0 in the outermost loop; together with the
    zigzag scan this fixes the documented "first witness" order.
    """

    def __init__(self, g: list[list[QQ]]):
        n = len(g)
        rev = [[g[n - 1 - i][n - 1 - j] for j in range(n)] for i in range(n)]
        self.n = n
        self.decomp = square_decomposition(rev)

    # -- all points with q(y - x) <= bound ------------------------------------

    def points(self, x: list[QQ], bound: QQ, budget: Budget):
        """Yield (y, q(y - x)) exactly, for every integer y in the ellipsoid."""
        n = self.n
        xrev = [QQ(x[n - 1 - i]) for i in range(n)]
        y = [0] * n

        def rec(i: int, rem: QQ, chosen_z: list[QQ]):
            # chosen_z[j] for j > i already fixed (reversed labels)
            budget.spend()
            c, u = self.decomp[i]
            t = sum((uj * chosen_z[j] for uj, j in zip(u, range(i + 1, n))), QQ(0))
            s = t - xrev[i]
            lo, hi = integer_interval(c, s, rem)
            for yi in _zigzag_interval(lo, hi):
                z = QQ(yi) + s
                term = c * z * z
                chosen_z[i] = QQ(yi) - xrev[i]
                y[i] = yi
                if i == 0:
                    yield tuple(reversed(y)), bound - (rem - term)
                else:
                    yield from rec(i - 1, rem - term, chosen_z)

        if n == 0:
            return
        yield from rec(n - 1, QQ(bound), [QQ(0)] * n)

    # -- closest lattice point -------------------------------------------------

    def closest(self, x: list[QQ], budget: Budget,
                start: tuple[QQ, tuple[int, ...]] | None = None) -> tuple[QQ, tuple[int, ...]]:
        """min over y in Z^n of q(y - x), with the first minimizing y found.

        `start` seeds the branch-and-bound with a known (value, point).
        """
        n = self.n
        xrev = [QQ(x[n - 1 - i]) for i in range(n)]
        if start is None:
            y0 = tuple(_round_half_to_zero(v) for v in x)
            start = (self.value_at([QQ(a) - QQ(b) for a, b in zip(y0, x)]), y0)
        best_val, best_y = start

        y = [0] * n

        def rec(i: int, acc: QQ, chosen_z: list[QQ]):
            nonlocal best_val, best_y
            budget.spend()
            c, u = self.decomp[i]
            t = sum((uj * chosen_z[j] for uj, j in zip(u, range(i + 1, n))), QQ(0))
            s = t - xrev[i]
            lo, hi = integer_interval(c, s, best_val - acc)
            for yi in _zigzag_interval(lo, hi):
                z = QQ(yi) + s
                term = c * z * z
                new_acc = acc + term
                if new_acc > best_val:
                    continue
                chosen_z[i] = QQ(yi) - xrev[i]
                y[i] = yi
                if i == 0:
                    if new_acc < best_val:
                        best_val, best_y = new_acc, tuple(reversed(y))
                else:
                    rec(i - 1, new_acc, chosen_z)

        rec(n - 1, QQ(0), [QQ(0)] * n)
        return best_val, best_y

    def value_at(self, zrows: list[QQ]) -> QQ:
        """q(z) from the decomposition (z in original coordinate order)."""
        n = self.n
        z = [zrows[n - 1 - i] for i in range(n)]
        total = QQ(0)
        for i in range(n):
            c, u = self.decomp[i]
            inner = z[i] + sum((uj * z[j] for uj, j in zip(u, range(i + 1, n))), QQ(0))
            total += c * inner * inner
        return total


def _round_half_to_zero(v: QQ) -> int:
    v = QQ(v)
    q, r = divmod(v.numerator, v.denominator)
    if 2 * r > v.denominator:
        return q + 1
    if 2 * r < v.denominator:
        return q
    return q if q >= 0 else q + 1


def diagonal_representations(coeffs: list[int], target: int, budget: Budget):
    """Integer solutions of sum a_i y_i^2 = target for positive a_i.

    Same first-found order as Enumerator.points: coordinate 0 outermost,
    zigzag per coordinate, positive square root before negative.
    """
    n = len(coeffs)
    y = [0] * n

    def rec(i: int, rem: int):
        budget.spend()
        if i == n - 1:
            a = coeffs[i]
            if rem % a == 0:
                s2 = rem // a
                r = math.isqrt(s2)
                if r * r == s2:
                    y[i] = r
                    yield tuple(y)
                    if r:
                        y[i] = -r
                        yield tuple(y)
            return
        a = coeffs[i]
        for k in zigzag():
            term = a * k * k
            if term > rem:
                if k > 0:
                    return
                continue
            y[i] = k
            yield from rec(i + 1, rem - term)

    if target < 0:
        return
    yield from rec(0, target)
