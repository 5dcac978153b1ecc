"""Coefficient rings with multiplicative norms, and their fraction fields.

Three ring families are supported, each an integral domain R together
with an exact element representation and a norm |.| : R -> N satisfying

    |x| = 0  iff  x = 0,
    |xy| = |x| |y|,
    |x| = 1  iff  x is a unit.

* ``Integers()``          -- Python ints, |x| = abs(x).
* ``PolyOverFq(q)``       -- dense polynomials over GF(q) for an odd prime
  power q, |f| = base**deg(f) with base = q unless overridden.  All bases
  give equivalent norms; base q makes |f| the cardinality of R/(f).
* ``LocalizedIntegers(S)`` -- the subring Z[1/p : p in S] of Q for a
  finite set of primes S.  Element values are rationals whose denominator
  is supported on S; the norm of x is the part of the numerator coprime
  to S, so the primes of S become units.

``Fraction`` is an element of the fraction field (Q, or GF(q)(t)), kept
in lowest terms with a positive (resp. monic) denominator.  Over a
localization the canonical representative simply uses coprime integers,
which is a valid choice of numerator and denominator inside the larger
ring.

All values are immutable; all operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as QQ
from typing import Union

from . import fqpoly
from .errors import AdcError, NotPrime, ZeroInput, ZeroValuation
from .finitefield import GF, GFq
from .intarith import is_prime, is_squarefree_int, strip_primes

NormValue = Union[int, QQ]


@dataclass(frozen=True)
class RingContext:
    """Which coefficient ring is active, together with its norm."""

    kind: str  # "Z" | "FqT" | "Zloc"
    q: int | None = None
    primes: tuple[int, ...] | None = None
    norm_base: int | None = None

    def gf(self) -> GFq:
        assert self.kind == "FqT"
        return GF(self.q)

    def __repr__(self) -> str:
        if self.kind == "Z":
            return "Z"
        if self.kind == "FqT":
            return f"F{self.q}[t]"
        return "Z[1/" + ",1/".join(str(p) for p in self.primes) + "]"


def Integers() -> RingContext:
    return RingContext("Z")


def PolyOverFq(q: int, norm_base: int | None = None) -> RingContext:
    GF(q)  # validates odd prime power
    if norm_base is None:
        norm_base = q
    if norm_base < 2:
        raise AdcError("norm base must be at least 2")
    return RingContext("FqT", q=q, norm_base=norm_base)


def LocalizedIntegers(primes) -> RingContext:
    ps = tuple(sorted(set(int(p) for p in primes)))
    if not ps:
        raise AdcError("localization needs a nonempty set of primes")
    for p in ps:
        if not is_prime(p):
            raise AdcError(f"{p} is not prime")
    return RingContext("Zloc", primes=ps)


ElementValue = Union[int, QQ, tuple]


@dataclass(frozen=True)
class Element:
    """An element of the active ring, in canonical representation."""

    ring: RingContext
    value: ElementValue

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "Element") -> None:
        if self.ring != other.ring:
            raise AdcError("ring mismatch")

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        if self.ring.kind == "FqT":
            return Element(self.ring, fqpoly.add(self.ring.gf(), self.value, other.value))
        return elem(self.ring, self.value + other.value)

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __neg__(self) -> "Element":
        if self.ring.kind == "FqT":
            return Element(self.ring, fqpoly.neg(self.ring.gf(), self.value))
        return elem(self.ring, -self.value)

    def __mul__(self, other: "Element") -> "Element":
        self._check(other)
        if self.ring.kind == "FqT":
            return Element(self.ring, fqpoly.mul(self.ring.gf(), self.value, other.value))
        return elem(self.ring, self.value * other.value)

    def __divmod__(self, other: "Element") -> tuple["Element", "Element"]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero element")
        if self.ring.kind == "FqT":
            q, r = fqpoly.divmod_poly(self.ring.gf(), self.value, other.value)
            return Element(self.ring, q), Element(self.ring, r)
        if self.ring.kind == "Z":
            q, r = divmod(self.value, other.value)
            return Element(self.ring, q), Element(self.ring, r)
        raise AdcError("divmod is not defined over a localization")

    def is_zero(self) -> bool:
        return self.value == 0 or self.value == ()

    def is_unit(self) -> bool:
        return norm(self) == 1

    def degree(self) -> int:
        if self.ring.kind != "FqT":
            raise AdcError("degree is only defined for polynomials")
        return fqpoly.deg(self.value)

    def __repr__(self) -> str:
        if self.ring.kind == "FqT":
            return fqpoly.poly_str(self.value)
        return str(self.value)


def elem(ring: RingContext, value) -> Element:
    """Coerce a raw value into a canonical Element of the given ring."""
    if isinstance(value, Element):
        if value.ring != ring:
            raise AdcError("ring mismatch")
        return value
    if ring.kind == "Z":
        if isinstance(value, QQ):
            if value.denominator != 1:
                raise AdcError(f"{value} is not an integer")
            value = value.numerator
        return Element(ring, int(value))
    if ring.kind == "Zloc":
        v = QQ(value)
        s, rest = strip_primes(v.denominator, ring.primes) if v != 0 else (1, 1)
        if rest != 1:
            raise AdcError(f"denominator of {v} is not supported on {ring.primes}")
        return Element(ring, int(v) if v.denominator == 1 else v)
    # FqT
    gf = ring.gf()
    if isinstance(value, int):
        value = (value,) if value else ()
    cs = list(value)
    if gf.k == 1:
        cs = [c % gf.p for c in cs]
    else:
        for c in cs:
            if not 0 <= c < gf.q:
                raise AdcError(f"coefficient {c} outside GF({gf.q}) encoding range")
    return Element(ring, fqpoly.normalize(cs))


def zero(ring: RingContext) -> Element:
    return elem(ring, 0 if ring.kind != "FqT" else ())


def one(ring: RingContext) -> Element:
    return elem(ring, 1 if ring.kind != "FqT" else (1,))


@dataclass(frozen=True)
class Fraction:
    """num/den in the fraction field, in lowest terms, canonically normalized."""

    num: Element
    den: Element

    @property
    def ring(self) -> RingContext:
        return self.num.ring

    def __add__(self, other: "Fraction") -> "Fraction":
        return make_fraction(self.num * other.den + other.num * self.den,
                             self.den * other.den)

    def __sub__(self, other: "Fraction") -> "Fraction":
        return self + (-other)

    def __neg__(self) -> "Fraction":
        return Fraction(-self.num, self.den)

    def __mul__(self, other: "Fraction") -> "Fraction":
        return make_fraction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "Fraction") -> "Fraction":
        if other.is_zero():
            raise ZeroDivisionError("division by zero fraction")
        return make_fraction(self.num * other.den, self.den * other.num)

    def scale(self, c: Element) -> "Fraction":
        return make_fraction(self.num * c, self.den)

    def divide_by(self, c: Element) -> "Fraction":
        return make_fraction(self.num, self.den * c)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_integral(self) -> bool:
        """Does the fraction lie in the ring itself?"""
        if self.ring.kind == "Z":
            return self.den.value == 1
        if self.ring.kind == "Zloc":
            return strip_primes(self.den.value, self.ring.primes)[1] == 1
        return fqpoly.deg(self.den.value) == 0

    def to_element(self) -> Element:
        if not self.is_integral():
            raise AdcError(f"{self} is not integral")
        if self.ring.kind == "Z":
            return self.num
        if self.ring.kind == "Zloc":
            return elem(self.ring, QQ(_as_int(self.num), _as_int(self.den)))
        gf = self.ring.gf()
        return Element(self.ring, fqpoly.scale(gf, gf.inv(self.den.value[0]), self.num.value))

    def as_rational(self) -> QQ:
        """Value as a stdlib Fraction; integer-based rings only."""
        if self.ring.kind == "FqT":
            raise AdcError("not a rational number")
        return QQ(_qq(self.num.value), _qq(self.den.value))

    def __repr__(self) -> str:
        if self.den == one(self.ring):
            return repr(self.num)
        n, d = repr(self.num), repr(self.den)
        if "+" in n:
            n = f"({n})"
        if "+" in d:
            d = f"({d})"
        return f"{n}/{d}"


def _qq(v) -> QQ:
    return v if isinstance(v, QQ) else QQ(v)


def _as_int(e: Element) -> int:
    v = e.value
    if isinstance(v, QQ):
        raise AdcError("expected an integer-valued element")
    return v


def make_fraction(num: Element, den: Element) -> Fraction:
    """Canonicalize num/den: lowest terms, positive or monic denominator."""
    if num.ring != den.ring:
        raise AdcError("ring mismatch")
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    ring = num.ring
    if ring.kind in ("Z", "Zloc"):
        x = _qq(num.value) / _qq(den.value)
        return Fraction(Element(ring, x.numerator), Element(ring, x.denominator))
    gf = ring.gf()
    n, d = num.value, den.value
    g = fqpoly.gcd(gf, n, d)
    if fqpoly.deg(g) > 0:
        n = fqpoly.divmod_poly(gf, n, g)[0]
        d = fqpoly.divmod_poly(gf, d, g)[0]
    if d[-1] != 1:
        c = gf.inv(d[-1])
        n = fqpoly.scale(gf, c, n)
        d = fqpoly.scale(gf, c, d)
    return Fraction(Element(ring, n), Element(ring, d))


def frac(ring: RingContext, num, den=1) -> Fraction:
    if ring.kind == "Z" and (isinstance(num, QQ) or isinstance(den, QQ)):
        x = QQ(num) / QQ(den)
        return make_fraction(elem(ring, x.numerator), elem(ring, x.denominator))
    return make_fraction(elem(ring, num), elem(ring, den))


# -- norms --------------------------------------------------------------------


def norm(e: Element) -> NormValue:
    """Multiplicative norm of a ring element; a natural number."""
    ring = e.ring
    if e.is_zero():
        return 0
    if ring.kind == "Z":
        return abs(e.value)
    if ring.kind == "FqT":
        return ring.norm_base ** fqpoly.deg(e.value)
    # localization: primes of S contribute nothing
    v = _qq(e.value)
    return strip_primes(v.numerator, ring.primes)[1]


def norm_fraction(x: Fraction) -> QQ:
    """Extension of the norm to the fraction field, |a/b| = |a|/|b|."""
    if x.is_zero():
        return QQ(0)
    return QQ(norm(x.num)) / QQ(norm(x.den))


# -- the scalar Euclidean step ------------------------------------------------


def _round_nearest_tie_to_zero(a: int, b: int) -> int:
    """Nearest integer to a/b (b > 0); exact ties round toward zero."""
    q, r = divmod(a, b)
    if 2 * r > b:
        return q + 1
    if 2 * r < b:
        return q
    return q if q >= 0 else q + 1


def euclidean_step_scalar(ring: RingContext, x: Fraction) -> Element:
    """A ring element y with |x - y| < 1.

    Integers: nearest integer, ties toward zero.  Polynomials: the
    polynomial quotient, so the difference is a proper fraction.
    Localizations: clear the S-part s of the denominator, round the
    remaining integer quotient, and divide the rounded value back by s.
    """
    if ring.kind == "Z":
        return Element(ring, _round_nearest_tie_to_zero(_as_int(x.num), _as_int(x.den)))
    if ring.kind == "FqT":
        q, _ = fqpoly.divmod_poly(ring.gf(), x.num.value, x.den.value)
        return Element(ring, q)
    a, b = _as_int(x.num), _as_int(x.den)
    s, b_free = strip_primes(b, ring.primes)
    y0 = _round_nearest_tie_to_zero(a, b_free)
    return elem(ring, QQ(y0, s))


# -- valuations and squarefree tests -------------------------------------------


def _require_prime(p: Element) -> None:
    ring = p.ring
    if p.is_zero():
        raise NotPrime("0 is not prime")
    if ring.kind in ("Z", "Zloc"):
        v = p.value
        if isinstance(v, QQ):
            raise NotPrime(f"{p!r} is not a prime integer")
        if ring.kind == "Zloc" and abs(v) in ring.primes:
            raise NotPrime(f"{p!r} is a unit in {ring!r}")
        if not is_prime(abs(v)):
            raise NotPrime(f"{p!r} is not prime")
    else:
        if not fqpoly.is_irreducible(ring.gf(), p.value):
            raise NotPrime(f"{p!r} is not irreducible")


def valuation(e: Element, p: Element) -> int:
    """Largest k with p**k dividing e; requires e != 0 and p prime."""
    if e.ring != p.ring:
        raise AdcError("ring mismatch")
    if e.is_zero():
        raise ZeroValuation("valuation of 0 requested")
    _require_prime(p)
    ring = e.ring
    if ring.kind in ("Z", "Zloc"):
        n = _qq(e.value).numerator  # denominator is supported on S, coprime to p
        pv = abs(p.value)
        k = 0
        while n % pv == 0:
            n //= pv
            k += 1
        return k
    gf = ring.gf()
    f, k = e.value, 0
    while True:
        q, r = fqpoly.divmod_poly(gf, f, p.value)
        if r != ():
            return k
        f, k = q, k + 1


def is_squarefree(e: Element) -> bool:
    """No prime of the ring divides e twice.

    Integers go through factorization; polynomials through gcd with the
    derivative (a vanishing derivative of a nonconstant polynomial means
    a p-th power, since every element of GF(q) is one).
    """
    if e.is_zero():
        raise ZeroInput("squarefree is undefined at 0")
    ring = e.ring
    if ring.kind == "Z":
        return is_squarefree_int(e.value)
    if ring.kind == "Zloc":
        free = strip_primes(_qq(e.value).numerator, ring.primes)[1]
        return free == 1 or is_squarefree_int(free)
    gf = ring.gf()
    f = e.value
    if fqpoly.deg(f) <= 0:
        return True
    d = fqpoly.derivative(gf, f)
    if d == ():
        return False
    return fqpoly.deg(fqpoly.gcd(gf, f, d)) == 0
