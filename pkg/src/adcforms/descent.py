"""Descent from rational to integral representations, and its consumers.

Given a witness (t, x') with q(x') = t^2 d over a step-capable Euclidean
form, one descent move rounds x'/t to a lattice point y, sets z = x'/t - y
and

    a = q(y) - d,   b = 2 d t - 2(x'.y),   T = a t + b,   X = a x' + b y,

which satisfies q(X) = T^2 d with |T| = |t| |q(z)| strictly smaller than
|t|.  Iterating reaches a unit t, i.e. an integral representation.  The
module also houses the bounded searches that feed the descent (witness
search, exact representation tests for definite forms) and the non-ADC
certificate tooling built on them.

Enumeration order everywhere: t by increasing norm, vectors coordinate 0
outermost in the zigzag order 0, 1, -1, 2, -2, ..., so first-found
results are reproducible.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction as QQ

from . import fqpoly
from .errors import (BadStep, InvalidWitness, NotDecidable,
                     NotEuclideanFamily, ZeroInput)
from .euclid import euclidean_family, euclidean_step_form
from .forms import (FractionVector, QuadraticForm, definite_diagonal_fqt,
                    evaluate, evaluate_elements, fraction_vector,
                    gram_rational, is_positive_definite, quadratic_form,
                    twice_bilinear_elements)
from .lattice import Budget, Enumerator, diagonal_representations
from .rings import (Element, Integers, elem, make_fraction, norm,
                    norm_fraction, one, strip_primes)


@dataclass(frozen=True)
class Witness:
    """Certificate of a rational representation: q(xprime) = t^2 * d."""

    t: Element
    xprime: tuple[Element, ...]
    d: Element


def make_witness(q: QuadraticForm, t, xprime, d) -> Witness:
    t = elem(q.ring, t)
    d = elem(q.ring, d)
    xp = tuple(elem(q.ring, v) for v in xprime)
    if t.is_zero():
        raise InvalidWitness("t must be nonzero")
    lhs = evaluate_elements(q, xp)
    if lhs != t * t * d:
        raise InvalidWitness(f"q(x') = {lhs!r} but t^2 d = {(t * t * d)!r}")
    return Witness(t, xp, d)


@dataclass(frozen=True)
class DescentStep:
    """One descent move with every intermediate quantity, for auditing."""

    t: Element
    xprime: tuple[Element, ...]
    y: tuple[Element, ...]
    z: FractionVector
    a: Element
    b: Element
    T: Element
    X: tuple[Element, ...]


@dataclass(frozen=True)
class DescentTrace:
    steps: tuple[DescentStep, ...]
    final: tuple[Element, ...] | None = None
    stalled: str | None = None

    @property
    def succeeded(self) -> bool:
        return self.final is not None


def descent_step_detailed(q: QuadraticForm, w: Witness, y) -> DescentStep:
    """Apply one descent move; requires 0 < |q(x'/t - y)| < 1."""
    y = tuple(elem(q.ring, v) for v in y)
    x = FractionVector(tuple(make_fraction(xi, w.t) for xi in w.xprime))
    z = x - fraction_vector(q.ring, y)
    qz = evaluate(q, z)
    if qz.is_zero():
        raise BadStep("q(z) = 0: the point x'/t - y is isotropic or already integral")
    if norm_fraction(qz) >= 1:
        raise BadStep(f"|q(z)| = {norm_fraction(qz)} is not < 1")
    a = evaluate_elements(q, y) - w.d
    b = elem(q.ring, 2) * w.d * w.t - twice_bilinear_elements(q, w.xprime, y)
    T = a * w.t + b
    X = tuple(a * xi + b * yi for xi, yi in zip(w.xprime, y))
    assert evaluate_elements(q, X) == T * T * w.d
    assert make_fraction(T, one(q.ring)) == make_fraction(w.t, one(q.ring)) * qz
    assert norm(T) < norm(w.t)
    return DescentStep(w.t, w.xprime, y, z, a, b, T, X)


def descent_step(q: QuadraticForm, w: Witness, y) -> Witness:
    step = descent_step_detailed(q, w, y)
    return Witness(step.T, step.X, w.d)


def adc_descend(q: QuadraticForm, w: Witness) -> DescentTrace:
    """Iterate Euclidean step + descent move until t becomes a unit.

    Terminates because |T| < |t| strictly in each round and norms are
    positive integers.  When x'/t is already integral the loop
    short-circuits without a step.
    """
    if euclidean_family(q) is None:
        raise NotEuclideanFamily(f"no Euclidean step available for {q!r}")
    make_witness(q, w.t, w.xprime, w.d)  # revalidate
    steps: list[DescentStep] = []
    for _ in range(int(norm(w.t)) + 1):
        x = FractionVector(tuple(make_fraction(xi, w.t) for xi in w.xprime))
        if x.is_integral():
            return DescentTrace(tuple(steps), final=x.to_elements())
        y = euclidean_step_form(q, x)
        z = x - fraction_vector(q.ring, y)
        if evaluate(q, z).is_zero():
            return DescentTrace(tuple(steps),
                                stalled="Euclidean step hit an isotropic offset")
        step = descent_step_detailed(q, w, y)
        steps.append(step)
        w = Witness(step.T, step.X, w.d)
    return DescentTrace(tuple(steps), stalled="descent failed to terminate")  # pragma: no cover


# -- representation search -------------------------------------------------------


@dataclass(frozen=True)
class RepresentationResult:
    status: str  # "yes" | "no" | "no_up_to"
    vector: tuple[Element, ...] | None = None
    bound: int | None = None


@dataclass(frozen=True)
class NotFoundUpTo:
    bound: int


def _zero_vector(q: QuadraticForm) -> tuple[Element, ...]:
    return tuple(elem(q.ring, 0 if q.ring.kind != "FqT" else ()) for _ in range(q.dim))


def _int_rep_search(q: QuadraticForm, target: int, budget: Budget):
    """First integer vector with q(v) = target for positive definite q over Z."""
    if target < 0:
        return None
    if target == 0:
        return tuple(0 for _ in range(q.dim))
    if q.is_diagonal():
        coeffs = [c.value for c in q.diagonal()]
        for v in diagonal_representations(coeffs, target, budget):
            return v
        return None
    enum = Enumerator(gram_rational(q))
    for v, val in enum.points([QQ(0)] * q.dim, QQ(target), budget):
        if val == target:
            return v
    return None


def _box_vectors(n: int, box: int):
    rng = [0] + [s * k for k in range(1, box + 1) for s in (1, -1)]
    return itertools.product(rng, repeat=n)


def _zloc_scalings(primes, cap: int):
    """All products of the inverted primes with exponents <= cap, ascending."""
    sigmas = [1]
    for p in primes:
        sigmas = [s * p ** e for s in sigmas for e in range(cap + 1)]
    return sorted(set(sigmas))


def _fqt_diag_reps(q: QuadraticForm, target, budget: Budget):
    """Polynomial vectors with q(v) = target, degrees bounded by the
    no-leading-cancellation estimate deg(v_i) <= (deg target - deg a_i)/2,
    which is exhaustive for definite diagonal forms."""
    gf = q.ring.gf()
    coeffs = [c.value for c in q.diagonal()]
    n = q.dim
    v: list = [()] * n

    def last_top_ok(rem) -> bool:
        # necessary condition for a_{n-1} y^2 = rem: degree parity and a
        # square leading coefficient after dividing out the leading of a
        a = coeffs[n - 1]
        if rem == ():
            return True
        if (fqpoly.deg(rem) - fqpoly.deg(a)) % 2:
            return False
        return gf.is_square(gf.mul(rem[-1], gf.inv(a[-1])))

    def rec(i: int, rem):
        budget.spend()
        a = coeffs[i]
        if i == n - 1:
            if not last_top_ok(rem):
                return
            if a == (1,):
                quo, r = rem, ()
            else:
                quo, r = fqpoly.divmod_poly(gf, rem, a)
            if r != ():
                return
            s = fqpoly.sqrt_poly(gf, quo)
            if s is None:
                return
            v[i] = s
            yield tuple(v)
            if s != ():
                v[i] = fqpoly.neg(gf, s)
                yield tuple(v)
            return
        bound = (fqpoly.deg(rem) - fqpoly.deg(a)) // 2 if rem != () else 0
        if rem == () or bound < 0:
            candidates = [()]
        else:
            candidates = fqpoly.all_of_degree_at_most(gf, bound)
        # a candidate too short to disturb the remainder's top cannot fix a
        # leading coefficient the last coordinate already rejects
        prune_low = (i == n - 2 and rem != () and not last_top_ok(rem))
        da = fqpoly.deg(a)
        dr = fqpoly.deg(rem)
        for cand in candidates:
            if prune_low and 2 * fqpoly.deg(cand) + da < dr:
                continue
            v[i] = cand
            sq = fqpoly.mul(gf, cand, cand)
            term = sq if a == (1,) else fqpoly.mul(gf, a, sq)
            yield from rec(i + 1, fqpoly.sub(gf, rem, term))

    if fqpoly.deg(target) >= 0:
        yield from rec(0, target)


def _fqt_diag_rep_search(q: QuadraticForm, target, budget: Budget):
    return next(_fqt_diag_reps(q, target, budget), None)


def iter_representations(q: QuadraticForm, d, budget: Budget | None = None):
    """All ring vectors with q(v) = d, in the canonical first-found order.

    Only the exhaustively searchable families: positive definite integer
    forms and diagonal forms over GF(q)[t] within the definite degree
    bounds.
    """
    budget = budget or Budget()
    d = elem(q.ring, d)
    if q.ring.kind == "Z":
        if not is_positive_definite(q):
            raise NotDecidable("need a positive definite integer form")
        if d.value < 0:
            return
        if d.value == 0:
            yield _zero_vector(q)
            return
        if q.is_diagonal():
            coeffs = [c.value for c in q.diagonal()]
            for v in diagonal_representations(coeffs, d.value, budget):
                yield tuple(elem(q.ring, c) for c in v)
            return
        enum = Enumerator(gram_rational(q))
        for v, val in enum.points([QQ(0)] * q.dim, QQ(d.value), budget):
            if val == d.value:
                yield tuple(elem(q.ring, c) for c in v)
        return
    if q.ring.kind == "FqT" and q.is_diagonal():
        for v in _fqt_diag_reps(q, d.value, budget):
            yield tuple(Element(q.ring, c) for c in v)
        return
    raise NotDecidable("no exhaustive enumeration for this form")


def represents_integrally(q: QuadraticForm, d, box_bound: int | None = None,
                          budget: Budget | None = None) -> RepresentationResult:
    """Does q take the value d on R^n?

    Definite forms get a definitive yes/no: over the integers through
    exact ellipsoid enumeration, over GF(q)[t] for diagonal definite
    forms through exhaustive degree bounds.  Everything else is a bounded
    search and an honest NoUpTo on failure.  Over a localization the
    search scales denominators through the inverted primes (exponents up
    to box_bound, default 4).
    """
    budget = budget or Budget()
    d = elem(q.ring, d)
    if d.is_zero():
        return RepresentationResult("yes", _zero_vector(q))
    if q.ring.kind == "Z":
        if is_positive_definite(q):
            v = _int_rep_search(q, d.value, budget)
            if v is not None:
                return RepresentationResult("yes", tuple(elem(q.ring, c) for c in v))
            return RepresentationResult("no")
        box = box_bound if box_bound is not None else 20
        for v in _box_vectors(q.dim, box):
            budget.spend()
            vec = tuple(elem(q.ring, c) for c in v)
            if evaluate_elements(q, vec) == d:
                return RepresentationResult("yes", vec)
        return RepresentationResult("no_up_to", bound=box)
    if q.ring.kind == "Zloc":
        return _represents_zloc(q, d, box_bound if box_bound is not None else 4, budget)
    return _represents_fqt(q, d, box_bound, budget)


def _clear_to_integer_form(q: QuadraticForm) -> tuple[QuadraticForm, int]:
    """(sigma * q over Z, sigma): clears inverted-prime denominators."""
    dens = [QQ(c.value).denominator for c in q.coeffs]
    sigma = math.lcm(*dens) if dens else 1
    entries = {}
    for i in range(q.dim):
        for j in range(i, q.dim):
            c = QQ(q.coeff(i, j).value) * sigma
            if c:
                entries[(i, j)] = int(c)
    return quadratic_form(Integers(), q.dim, entries), sigma


def _represents_zloc(q: QuadraticForm, d: Element, cap: int,
                     budget: Budget) -> RepresentationResult:
    qz, sigma_c = _clear_to_integer_form(q)
    dval = QQ(d.value)
    posdef = is_positive_definite(qz)
    if posdef and dval < 0:
        return RepresentationResult("no")
    for sigma in _zloc_scalings(q.ring.primes, cap):
        target = dval * sigma * sigma * sigma_c
        if target.denominator != 1:
            continue
        if posdef:
            v = _int_rep_search(qz, int(target), budget)
        else:
            v = None
            for vec in _box_vectors(q.dim, 20):
                budget.spend()
                if evaluate_elements(qz, tuple(elem(qz.ring, c) for c in vec)).value == target:
                    v = vec
                    break
        if v is not None:
            vec = tuple(elem(q.ring, QQ(c, sigma)) for c in v)
            assert evaluate_elements(q, vec) == d
            return RepresentationResult("yes", vec)
    return RepresentationResult("no_up_to", bound=cap)


def _represents_fqt(q: QuadraticForm, d: Element, box_bound: int | None,
                    budget: Budget) -> RepresentationResult:
    gf = q.ring.gf()
    if q.is_diagonal():
        v = _fqt_diag_rep_search(q, d.value, budget)
        if v is not None:
            return RepresentationResult("yes", tuple(Element(q.ring, c) for c in v))
        if definite_diagonal_fqt(q):
            return RepresentationResult("no")
        return RepresentationResult("no_up_to",
                                    bound=max(0, fqpoly.deg(d.value) // 2))
    bound = box_bound if box_bound is not None else max(0, fqpoly.deg(d.value) // 2)
    polys = list(fqpoly.all_of_degree_at_most(gf, bound))
    for v in itertools.product(polys, repeat=q.dim):
        budget.spend()
        vec = tuple(Element(q.ring, c) for c in v)
        if evaluate_elements(q, vec) == d:
            return RepresentationResult("yes", vec)
    return RepresentationResult("no_up_to", bound=bound)


# -- witness search ----------------------------------------------------------------


def witness_search(q: QuadraticForm, d, t_bound: int,
                   budget: Budget | None = None):
    """First witness (t, x') with q(x') = t^2 d, or NotFoundUpTo.

    t runs over positive integers up to t_bound (over GF(q)[t]: over
    nonzero polynomials of degree up to t_bound, in encoding order); for
    each t the vector search is the same one represents_integrally uses.
    """
    budget = budget or Budget()
    d = elem(q.ring, d)
    if d.is_zero():
        raise ZeroInput("witness search needs a nonzero target")
    if q.ring.kind == "Z":
        posdef = is_positive_definite(q)
        if posdef and d.value < 0:
            return NotFoundUpTo(t_bound)
        for t in range(1, t_bound + 1):
            target = t * t * d.value
            if posdef:
                v = _int_rep_search(q, target, budget)
            else:
                v = None
                for vec in _box_vectors(q.dim, 20):
                    budget.spend()
                    if evaluate_elements(q, tuple(elem(q.ring, c) for c in vec)).value == target:
                        v = vec
                        break
            if v is not None:
                return make_witness(q, t, v, d)
        return NotFoundUpTo(t_bound)
    if q.ring.kind == "Zloc":
        qz, sigma_c = _clear_to_integer_form(q)
        dval = QQ(d.value)
        s0 = strip_primes(dval.denominator, q.ring.primes)[0]
        if is_positive_definite(qz) and dval < 0:
            return NotFoundUpTo(t_bound)
        for t in range(1, t_bound + 1):
            target = dval * t * t * s0 * s0 * sigma_c
            assert target.denominator == 1
            v = _int_rep_search(qz, int(target), budget)
            if v is not None:
                xp = tuple(elem(q.ring, QQ(c, s0)) for c in v)
                return make_witness(q, t, xp, d)
        return NotFoundUpTo(t_bound)
    # GF(q)[t]: t_bound caps the degree of t.  Only monic t are scanned:
    # (t, x') is a witness exactly when (ut, ux') is, so unit scalings of
    # t add nothing.
    gf = q.ring.gf()
    for tdeg in range(0, t_bound + 1):
        for enc in range(gf.q ** tdeg):
            low = list(fqpoly.from_encoding(enc, gf))
            t = tuple(low + [0] * (tdeg - len(low)) + [1])
            target = fqpoly.mul(gf, fqpoly.mul(gf, t, t), d.value)
            if q.is_diagonal():
                v = _fqt_diag_rep_search(q, target, budget)
            else:
                res = _represents_fqt(q, Element(q.ring, target), None, budget)
                v = tuple(c.value for c in res.vector) if res.status == "yes" else None
            if v is not None:
                return make_witness(q, Element(q.ring, t),
                                    tuple(Element(q.ring, c) for c in v), d)
    return NotFoundUpTo(t_bound)


# -- certificates and audits ---------------------------------------------------------


def non_adc_certificate_check(q: QuadraticForm, a: int, b: int,
                              budget: Budget | None = None) -> bool:
    """Does (a, b) certify failure of the descent property: q represents
    a^2 b but not b?"""
    if q.ring.kind != "Z" or not is_positive_definite(q):
        raise NotDecidable("certificates need a positive definite integer form")
    budget = budget or Budget()
    rep_big = represents_integrally(q, a * a * b, budget=budget)
    rep_small = represents_integrally(q, b, budget=budget)
    return rep_big.status == "yes" and rep_small.status == "no"


def non_adc_certificate_search(q: QuadraticForm, a_bound: int, b_bound: int,
                               budget: Budget | None = None):
    """First certificate pair in the scan a = 1..a_bound, b = 1..b_bound."""
    if q.ring.kind != "Z" or not is_positive_definite(q):
        raise NotDecidable("certificates need a positive definite integer form")
    budget = budget or Budget()
    for a in range(1, a_bound + 1):
        for b in range(1, b_bound + 1):
            if non_adc_certificate_check(q, a, b, budget=budget):
                return (a, b)
    return NotFoundUpTo(max(a_bound, b_bound))


@dataclass(frozen=True)
class AdcAuditReport:
    checked: int
    witnessed: int
    violations: tuple
    inconclusive: tuple

    @property
    def clean(self) -> bool:
        return not self.violations and not self.inconclusive


def is_adc_empirical(q: QuadraticForm, d_values, t_bound: int,
                     budget: Budget | None = None) -> AdcAuditReport:
    """Audit: every d with a rational witness must be integrally represented.

    Reports the d where the check failed (violations) and the d where the
    integral search was inconclusive.
    """
    budget = budget or Budget()
    checked = witnessed = 0
    violations, inconclusive = [], []
    for d in d_values:
        checked += 1
        w = witness_search(q, d, t_bound, budget=budget)
        if isinstance(w, NotFoundUpTo):
            continue
        witnessed += 1
        rep = represents_integrally(q, d, budget=budget)
        if rep.status == "no":
            violations.append(d)
        elif rep.status == "no_up_to":
            inconclusive.append(d)
    return AdcAuditReport(checked, witnessed, tuple(violations), tuple(inconclusive))
