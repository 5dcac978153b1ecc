"""Euclidean steps for quadratic forms, Euclideanity, and classification.

A form q over a normed ring is Euclidean when every rational point can be
moved into the unit-norm ball around a lattice point: for x outside R^n
there is y in R^n with 0 < |q(x - y)| < 1.  Two step-capable families are
implemented directly on forms:

* diagonal forms with positive integer coefficients summing to < 4,
  over the integers or a localization (coordinatewise rounding after
  clearing the inverted primes);
* forms over GF(q)[t] whose coefficients have degree <= 1 and which are
  certified anisotropic (coordinatewise polynomial division; the
  non-archimedean estimate max|a_ij| * max|r_i/g_i|^2 < 1 does the rest).

A third step lives on explicit hyperbolic-split shapes over the integers
localized at one prime; see SplitForm / split_euclidean_step.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction as QQ

from . import fqpoly
from .errors import (AdcError, AnisotropicPartViolation, BoundTooSmall,
                     NonPositiveCoefficient, NotImplementedFamily,
                     NotPositiveDefinite, StepFailed)
from .forms import (FractionVector, QuadraticForm, anisotropic_constant_reduction,
                    as_fraction_vector, evaluate, fraction_vector, gram_rational,
                    is_positive_definite)
from .intarith import vp
from .lattice import Budget, Enumerator, _round_half_to_zero
from .rings import Element, elem, frac, norm_fraction, strip_primes

DIAGONAL_ROUNDING = "diagonal_rounding"
POLY_DIVISION = "poly_division"


class EuclideanClass(Enum):
    EUCLIDEAN = "euclidean"
    BOUNDARY_EUCLIDEAN = "boundary_euclidean"
    NOT_EUCLIDEAN = "not_euclidean"
    UNKNOWN = "unknown"


def fqt_anisotropic_certified(q: QuadraticForm) -> bool | None:
    """Certified anisotropy over GF(q)(t): exact for constant-coefficient,
    unary, and binary forms; None when no certificate is available."""
    gf = q.ring.gf()
    if all(fqpoly.deg(c.value) <= 0 for c in q.coeffs):
        return anisotropic_constant_reduction(q)
    if q.dim == 1:
        return True
    if q.dim == 2:
        a = q.coeff(0, 0).value
        b = q.coeff(0, 1).value
        c = q.coeff(1, 1).value
        if a == () or c == ():
            return False
        delta = fqpoly.sub(gf, fqpoly.mul(gf, b, b),
                           fqpoly.scale(gf, 4 % gf.p, fqpoly.mul(gf, a, c)))
        # binary form isotropic over the fraction field iff b^2 - 4ac is a
        # square there, which for a polynomial means a polynomial square
        return fqpoly.sqrt_poly(gf, delta) is None
    return None


def euclidean_family(q: QuadraticForm) -> str | None:
    """Which implemented Euclidean step family q belongs to, if any."""
    if q.ring.kind in ("Z", "Zloc"):
        if not q.is_diagonal():
            return None
        diag = [c.value for c in q.diagonal()]
        if all(isinstance(a, int) and a >= 1 for a in diag) and sum(diag) < 4:
            return DIAGONAL_ROUNDING
        return None
    if all(fqpoly.deg(c.value) <= 1 for c in q.coeffs):
        if fqt_anisotropic_certified(q):
            return POLY_DIVISION
    return None


def euclidean_step_form(q, x, p: int | None = None) -> tuple:
    """A lattice vector y with |q(x - y)| < 1, for the implemented families.

    `q` is a QuadraticForm in a step-capable family, or a SplitForm (then
    `p` names the local prime and plain rationals are expected in x).
    """
    if isinstance(q, SplitForm):
        if p is None:
            raise AdcError("split forms need the local prime p")
        return split_euclidean_step(q, x, p)
    x = as_fraction_vector(x)
    family = euclidean_family(q)
    if family is None:
        raise NotImplementedFamily(f"no Euclidean step implemented for {q!r}")
    if family == DIAGONAL_ROUNDING:
        y = _rounding_step(q, x)
    else:
        gf = q.ring.gf()
        y = tuple(Element(q.ring, fqpoly.divmod_poly(gf, e.num.value, e.den.value)[0])
                  for e in x.entries)
    diff = evaluate(q, x - fraction_vector(q.ring, y))
    if norm_fraction(diff) >= 1:
        raise StepFailed(f"step left norm {norm_fraction(diff)} >= 1")  # pragma: no cover
    return y


def _rounding_step(q: QuadraticForm, x: FractionVector) -> tuple[Element, ...]:
    # Clear the inverted primes from a common denominator, round the
    # integer part coordinatewise, then divide the rounding back out.
    vals = [e.as_rational() for e in x.entries]
    den = math.lcm(*(v.denominator for v in vals)) if vals else 1
    if q.ring.kind == "Zloc":
        s, den_free = strip_primes(den, q.ring.primes)
    else:
        s, den_free = 1, den
    out = []
    for v in vals:
        a = v.numerator * (den // v.denominator)
        y0 = _round_half_to_zero(QQ(a, den_free))
        out.append(elem(q.ring, QQ(y0, s)))
    return tuple(out)


# -- Euclideanity ---------------------------------------------------------------


@dataclass(frozen=True)
class EuclideanityReport:
    """max over searched x of min over y of |q(x - y)|, with its witness."""

    value_kind: str  # "exact" | "lower_bound"
    value: QQ
    witness: FractionVector
    denom_bound: int | None = None


def euclideanity_diagonal_z(coeffs) -> QQ:
    """(a_1 + ... + a_n) / 4 for positive diagonal integer forms."""
    cs = [int(a) for a in coeffs]
    if any(a < 1 for a in cs):
        raise NonPositiveCoefficient(f"diagonal coefficients must be positive: {cs}")
    return QQ(sum(cs), 4)


def euclideanity_search(q: QuadraticForm, denom_bound: int,
                        budget: Budget | None = None) -> EuclideanityReport:
    """Exact max of E(q, x) over x with coordinate denominators <= the bound.

    Each E(q, x) is an exact closest-lattice-point computation, so the
    result is a certified lower bound for the Euclideanity, and is exact
    for diagonal forms once the all-halves point is inside the grid.
    """
    if denom_bound < 1:
        raise BoundTooSmall("denominator bound must be at least 1")
    if q.ring.kind != "Z":
        raise NotPositiveDefinite("the search runs over positive definite integer forms")
    if not is_positive_definite(q):
        raise NotPositiveDefinite(f"{q!r} is not positive definite")
    budget = budget or Budget()
    enum = Enumerator(gram_rational(q))
    n = q.dim
    best = QQ(0)
    best_x = [QQ(0)] * n
    for dp in range(1, denom_bound + 1):
        for ks in itertools.product(range(dp), repeat=n):
            x = [QQ(k, dp) for k in ks]
            if math.lcm(*(v.denominator for v in x)) != dp:
                continue  # already seen at a smaller denominator
            val = enum.closest(x, budget)[0]
            if val > best:
                best, best_x = val, x
    exact = q.is_diagonal() and denom_bound >= 2
    return EuclideanityReport(
        value_kind="exact" if exact else "lower_bound",
        value=best,
        witness=fraction_vector(q.ring, best_x),
        denom_bound=None if exact else denom_bound,
    )


def is_euclidean(q: QuadraticForm) -> EuclideanClass:
    """Classify q as Euclidean / boundary-Euclidean / not / unknown.

    Decided exactly for positive diagonal integer forms (threshold at
    coefficient sum 4, with attainment checked at the all-halves deep
    hole) and for certified-anisotropic degree <= 1 forms over GF(q)[t].
    For other positive definite integer forms a searched value >= 1 is a
    proof of non-Euclideanity; anything else stays unknown.
    """
    if q.ring.kind == "Z":
        if q.is_diagonal():
            diag = [c.value for c in q.diagonal()]
            if all(a >= 1 for a in diag):
                s = sum(diag)
                if s < 4:
                    return EuclideanClass.EUCLIDEAN
                if s == 4:
                    halves = [QQ(1, 2)] * q.dim
                    attained = Enumerator(gram_rational(q)).closest(halves, Budget())[0]
                    if attained == 1:
                        return EuclideanClass.BOUNDARY_EUCLIDEAN
                    return EuclideanClass.UNKNOWN  # pragma: no cover
                return EuclideanClass.NOT_EUCLIDEAN
            return EuclideanClass.UNKNOWN
        if is_positive_definite(q):
            report = euclideanity_search(q, 2)
            if report.value >= 1:
                return EuclideanClass.NOT_EUCLIDEAN
        return EuclideanClass.UNKNOWN
    if q.ring.kind == "FqT":
        if all(fqpoly.deg(c.value) <= 1 for c in q.coeffs):
            if fqt_anisotropic_certified(q):
                return EuclideanClass.EUCLIDEAN
        return EuclideanClass.UNKNOWN
    return EuclideanClass.UNKNOWN


def classify_euclidean_diagonal_z() -> list[tuple[int, ...]]:
    """All multisets of positive integers with sum < 4: the diagonal
    integral Euclidean forms, as nondecreasing coefficient tuples."""
    found = []

    def build(prefix, remaining, minimum):
        for a in range(minimum, remaining + 1):
            found.append(tuple(prefix + [a]))
            build(prefix + [a], remaining - a, a)

    build([], 3, 1)
    return sorted(found, key=lambda t: (len(t), t))


# -- hyperbolic-split step over Z localized at p ---------------------------------


@dataclass(frozen=True)
class SplitForm:
    """x1 x2 + ... + x_{2r-1} x_{2r} + sum_i d_i w_i^2 with the diagonal
    tail anisotropic over the p-adic numbers."""

    planes: int
    tail: tuple[int, ...] = ()

    @property
    def dim(self) -> int:
        return 2 * self.planes + len(self.tail)

    def evaluate(self, xs) -> QQ:
        xs = [QQ(v) for v in xs]
        total = QQ(0)
        for i in range(self.planes):
            total += xs[2 * i] * xs[2 * i + 1]
        for d, w in zip(self.tail, xs[2 * self.planes:]):
            total += d * w * w
        return total


def _vp_or_inf(x: QQ, p: int):
    return math.inf if x == 0 else vp(x, p)


def split_euclidean_step(qsplit: SplitForm, x, p: int) -> tuple[int, ...]:
    """y with v_p(q(x - y)) < 0, following the hyperbolic case analysis.

    Pairs are normalized so the second slot of a pair carries its smaller
    valuation, pairs are sorted by the valuation of their product
    (largest first), and a pair holding a negative-valuation coordinate
    is moved last if the sort alone did not surface one; the case split
    then only ever edits the last pair.  The returned y has entries in
    {0, 1}, so it lies in every localization of the integers.
    """
    if qsplit.planes < 0 or qsplit.dim < 1:
        raise AdcError("empty split form")
    xs = [QQ(v) for v in x]
    if len(xs) != qsplit.dim:
        raise AdcError(f"expected {qsplit.dim} coordinates, got {len(xs)}")
    vals = [_vp_or_inf(v, p) for v in xs]
    if all(v >= 0 for v in vals):
        raise AdcError("x is p-integral; no step needed")

    r = qsplit.planes
    pairs = []
    for i in range(r):
        a, b = 2 * i, 2 * i + 1
        if vals[b] > vals[a]:
            a, b = b, a
        pairs.append((a, b))
    pairs.sort(key=lambda ab: -_prod_val(xs, ab, p))
    if pairs and vals[pairs[-1][1]] >= 0:
        worst = min(range(r), key=lambda k: vals[pairs[k][1]])
        if vals[pairs[worst][1]] < 0:
            pairs.append(pairs.pop(worst))

    tail_x = xs[2 * r:]
    alpha = QQ(0)
    for d, w in zip(qsplit.tail, tail_x):
        alpha += d * w * w

    y = [0] * qsplit.dim
    if not pairs or vals[pairs[-1][1]] >= 0:
        # hyperbolic block integral: the anisotropic tail must blow up
        if _vp_or_inf(alpha, p) >= 0:
            raise AnisotropicPartViolation(
                "tail took a p-integral value on a non-integral point")
        return tuple(y)

    a_last, b_last = pairs[-1]
    beta = QQ(0)
    for a, b in pairs[:-1]:
        beta += xs[a] * xs[b]
    s = alpha + beta + xs[a_last] * xs[b_last]
    if _vp_or_inf(s, p) > vals[b_last]:
        y[a_last] = 1
    result = qsplit.evaluate([xi - yi for xi, yi in zip(xs, y)])
    if _vp_or_inf(result, p) >= 0:
        raise StepFailed(f"split step left valuation {_vp_or_inf(result, p)}")
    return tuple(y)


def _prod_val(xs, pair, p: int):
    return _vp_or_inf(xs[pair[0]] * xs[pair[1]], p)
