"""Local representability over the p-adic integers and the classical
global consequences: the three-squares criterion and its constructive
pipeline, the 290-sweep for sign-universality, and one-sided local
maximality at odd primes.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .descent import (NotFoundUpTo, adc_descend, represents_integrally,
                      witness_search)
from .errors import (DyadicPlace, NotDecidable, NotPrime, SearchExhausted,
                     WrongDimension, WrongRing, ZeroTarget)
from .forms import (Maximality, QuadraticForm, _minors_positive,
                    diagonal_form, discriminant, gram_rational,
                    is_positive_definite)
from .intarith import factorint, is_prime, vp
from .lattice import Budget
from .rings import Element, Integers, elem, is_squarefree


def three_squares_predicate(n: int) -> bool:
    """n is a sum of three integer squares iff n >= 0 and stripping all
    factors of 4 never leaves a residue of 7 mod 8."""
    if n < 0:
        return False
    while n % 4 == 0 and n > 0:
        n //= 4
    return n % 8 != 7


def sum_three_squares(n: int, t_bound: int = 32) -> tuple[int, int, int] | None:
    """Integers (a, b, c) with a^2 + b^2 + c^2 = n, or None when impossible.

    Runs the constructive pipeline: rational witness search followed by
    descent to an integral point.  Raises SearchExhausted if no witness
    shows up within t_bound, which signals a too-small bound, never
    impossibility (the predicate already ruled on that).
    """
    if not three_squares_predicate(n):
        return None
    if n == 0:
        return (0, 0, 0)
    q = diagonal_form(Integers(), [1, 1, 1])
    w = witness_search(q, n, t_bound)
    if isinstance(w, NotFoundUpTo):
        raise SearchExhausted(f"no witness for {n} with t <= {t_bound}")
    trace = adc_descend(q, w)
    assert trace.succeeded
    a, b, c = (e.value for e in trace.final)
    assert a * a + b * b + c * c == n
    return (a, b, c)


@dataclass(frozen=True)
class LocalVerdict:
    place: str
    represents: str  # "yes" | "no" | "inconclusive"
    evidence: object = None


def zp_represents_diagonal(q: QuadraticForm, d: int, p: int,
                           budget: Budget | None = None) -> LocalVerdict:
    """Does the diagonal integer form represent d over the p-adic integers?

    Walks solutions of q(x) = d mod p^j level by level up to
    k = 2 v_p(4 d disc) + 3.  A solution whose gradient has valuation m
    with j >= 2m + 1 lifts by Hensel's lemma, giving a definitive yes; no
    solutions at all is a definitive no; a solution surviving to level k
    with every partial derivative too singular stays inconclusive.
    """
    if q.ring.kind != "Z":
        raise WrongRing("local solubility is implemented for integer forms")
    if not q.is_diagonal():
        raise NotDecidable("only diagonal forms are handled") from None
    if d == 0:
        raise ZeroTarget("local representability of 0 is not handled")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    budget = budget or Budget()
    diag = [c.value for c in q.diagonal()]
    disc = math.prod(diag)
    k = 2 * vp(4 * abs(d) * abs(disc), p) + 3
    n = q.dim
    place = f"p={p}"

    def value_mod(x, mod):
        return sum(a * xi * xi for a, xi in zip(diag, x)) % mod

    deep = False

    def certify(x, j) -> bool:
        for a, xi in zip(diag, x):
            if xi % p ** j == 0:
                continue
            m = vp(2 * a * xi, p)
            if 2 * m + 1 <= j:
                return True
        return False

    def rec(x, j):
        nonlocal deep
        budget.spend()
        if certify(x, j):
            return (x, j)
        if j == k:
            deep = True
            return None
        mod = p ** (j + 1)
        step = p ** j
        for e in itertools.product(range(p), repeat=n):
            lift = tuple((xi + step * ei) % mod for xi, ei in zip(x, e))
            if (value_mod(lift, mod) - d) % mod == 0:
                hit = rec(lift, j + 1)
                if hit:
                    return hit
        return None

    for x in itertools.product(range(p), repeat=n):
        if (value_mod(x, p) - d) % p == 0:
            hit = rec(x, 1)
            if hit:
                return LocalVerdict(place, "yes", evidence=hit)
    if deep:
        return LocalVerdict(place, "inconclusive",
                            evidence=f"singular solutions survive to p^{k}")
    return LocalVerdict(place, "no", evidence=f"no solutions mod p^{k}")


def real_place_verdict(q: QuadraticForm, d: int) -> LocalVerdict:
    """Sign analysis at the real place for integer forms."""
    if q.ring.kind != "Z":
        raise WrongRing("real place applies to integer forms")
    if is_positive_definite(q):
        if d >= 0:
            return LocalVerdict("real", "yes", evidence="positive definite, d >= 0")
        return LocalVerdict("real", "no", evidence="positive definite, d < 0")
    if _minors_positive([[-x for x in row] for row in gram_rational(q)]):
        if d <= 0:
            return LocalVerdict("real", "yes", evidence="negative definite, d <= 0")
        return LocalVerdict("real", "no", evidence="negative definite, d > 0")
    return LocalVerdict("real", "yes", evidence="indefinite over the reals")


def sign_universal_check_290(q: QuadraticForm, budget: Budget | None = None) -> bool:
    """Positive definite forms in >= 4 variables: representing 1..290
    integrally is equivalent to representing everything the real place
    allows."""
    if q.dim < 4:
        raise WrongDimension("the 290-sweep needs at least 4 variables")
    if q.ring.kind != "Z" or not is_positive_definite(q):
        raise WrongRing("the 290-sweep needs a positive definite integer form")
    budget = budget or Budget()
    for m in range(1, 291):
        if represents_integrally(q, m, budget=budget).status != "yes":
            return False
    return True


def unary_adc(a) -> bool:
    """a x^2 has the descent property exactly when a is squarefree."""
    if isinstance(a, Element):
        return is_squarefree(a)
    return is_squarefree(elem(Integers(), a))


def binary_aq_adc_z(a: int) -> bool:
    """Descent property for a (x^2 + y^2): a squarefree with every prime
    factor congruent to 3 mod 4.

    An even a fails at d = a/2 (rationally hit via the half-integer point)
    and a prime factor p = 1 mod 4 fails at d = a/p, so only products of
    distinct 3 mod 4 primes survive; for those, any integer d with d/a a
    rational sum of two squares forces d/a to be an integral one.
    """
    if a < 1:
        raise ZeroTarget("a must be a positive integer")
    fac = factorint(a)
    if any(e > 1 for e in fac.values()):
        return False
    return all(p % 4 == 3 for p in fac)


def local_maximality_nondyadic(q: QuadraticForm, p: int) -> Maximality:
    """One-sided criterion at an odd prime: discriminant valuation <= 1
    forces the local lattice to be maximal; nothing is claimed otherwise."""
    if p == 2:
        raise DyadicPlace("the criterion is nondyadic")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if q.ring.kind != "Z":
        raise WrongRing("local maximality is implemented for integer forms")
    disc = discriminant(q).as_rational()
    if vp(disc.numerator, p) <= 1:
        return Maximality.MAXIMAL
    return Maximality.UNKNOWN
