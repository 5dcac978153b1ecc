"""Arithmetic in GF(q) for odd prime powers q.

Field elements are encoded as integers in [0, q): write the integer in
base p and read the digits (low to high) as the coefficients of a
polynomial over GF(p), reduced modulo a fixed monic irreducible of degree
k.  The modulus is the irreducible with the smallest integer encoding,
found by exhaustive search, so the encoding is deterministic.  For prime
q everything collapses to arithmetic mod p.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import AdcError
from .intarith import factorint


class GFq:
    """Field operations on int-encoded elements of GF(p**k), p odd."""

    def __init__(self, q: int):
        fac = factorint(q)
        if len(fac) != 1:
            raise AdcError(f"{q} is not a prime power")
        (p, k), = fac.items()
        if p == 2:
            raise AdcError("characteristic 2 is not supported")
        self.q = q
        self.p = p
        self.k = k
        self.modulus = None if k == 1 else self._find_modulus()
        self._sqrt = self._sqrt_table()

    # -- encoding -----------------------------------------------------------

    def _digits(self, a: int) -> list[int]:
        p, out = self.p, []
        for _ in range(self.k):
            a, r = divmod(a, p)
            out.append(r)
        return out

    def _encode(self, digits) -> int:
        a = 0
        for d in reversed(digits):
            a = a * self.p + d
        return a

    def _find_modulus(self) -> list[int]:
        # monic degree-k polynomial over GF(p) without lower-degree monic factors
        p, k = self.p, self.k
        for enc in range(p ** k):
            cand = self._digits(enc) + [1]
            if self._irreducible(cand):
                return cand
        raise AdcError("no irreducible modulus found")  # pragma: no cover

    def _irreducible(self, f: list[int]) -> bool:
        p = self.p
        deg = len(f) - 1
        for d in range(1, deg // 2 + 1):
            for enc in range(p ** d):
                g = self._digits_of_len(enc, d) + [1]
                if self._polydivmod_p(f, g)[1] == []:
                    return False
        return True

    def _digits_of_len(self, a: int, n: int) -> list[int]:
        p, out = self.p, []
        for _ in range(n):
            a, r = divmod(a, p)
            out.append(r)
        return out

    def _polydivmod_p(self, f, g):
        # dense division of GF(p)[x] coefficient lists (g monic not required)
        p = self.p
        f = list(f)
        inv_lead = pow(g[-1], p - 2, p)
        q = [0] * max(0, len(f) - len(g) + 1)
        for i in range(len(f) - len(g), -1, -1):
            c = f[i + len(g) - 1] * inv_lead % p
            q[i] = c
            if c:
                for j, gj in enumerate(g):
                    f[i + j] = (f[i + j] - c * gj) % p
        while f and f[-1] == 0:
            f.pop()
        return q, f

    # -- field operations ---------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        p = self.p
        da, db = self._digits(a), self._digits(b)
        return self._encode([(x + y) % p for x, y in zip(da, db)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        p = self.p
        return self._encode([(-x) % p for x in self._digits(a)])

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        p = self.p
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        while len(prod) >= len(self.modulus):
            c = prod[-1]
            if c:
                off = len(prod) - len(self.modulus)
                for j, mj in enumerate(self.modulus):
                    prod[off + j] = (prod[off + j] - c * mj) % p
            prod.pop()
        prod += [0] * (self.k - len(prod))
        return self._encode(prod)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF(q)")
        return self.pow(a, self.q - 2)

    def pow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    # -- squares ------------------------------------------------------------

    def _sqrt_table(self) -> dict[int, int]:
        table: dict[int, int] = {}
        for x in range(self.q):
            s = self.mul(x, x)
            if s not in table:
                table[s] = x
        return table

    def is_square(self, a: int) -> bool:
        return a in self._sqrt

    def sqrt(self, a: int) -> int:
        """Canonical square root (smallest encoding); KeyError if non-square."""
        return self._sqrt[a]

    def nonsquare(self) -> int:
        """Smallest-encoded non-square, for residue-class arguments."""
        for x in range(1, self.q):
            if x not in self._sqrt:
                return x
        raise AdcError("every element is a square?")  # pragma: no cover


@lru_cache(maxsize=None)
def GF(q: int) -> GFq:
    return GFq(q)
