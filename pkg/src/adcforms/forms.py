"""Quadratic forms over the supported rings: evaluation, polarization,
discriminants, and structural predicates.

A form is stored by its polynomial coefficients c_ij (i <= j) rather than
by its Gram matrix, because interesting integral forms routinely have
half-integral Gram entries off the diagonal; the Gram matrix is derived
on demand.  Degenerate forms are rejected at construction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction as QQ

from . import fqpoly
from .errors import (AdcError, Degenerate, DimensionMismatch,
                     NonConstantCoefficients, WrongRing)
from .intarith import is_squarefree_int
from .rings import (Element, Fraction, RingContext, elem, frac, make_fraction,
                    one, zero)


def _ut_index(i: int, j: int, n: int) -> int:
    return i * n - i * (i - 1) // 2 + (j - i)


@dataclass(frozen=True)
class QuadraticForm:
    """Homogeneous degree-2 polynomial sum of c_ij x_i x_j over i <= j."""

    ring: RingContext
    dim: int
    coeffs: tuple[Element, ...]  # dense upper triangle, row by row

    def coeff(self, i: int, j: int) -> Element:
        if i > j:
            i, j = j, i
        return self.coeffs[_ut_index(i, j, self.dim)]

    def is_diagonal(self) -> bool:
        n = self.dim
        return all(self.coeff(i, j).is_zero()
                   for i in range(n) for j in range(i + 1, n))

    def diagonal(self) -> tuple[Element, ...]:
        return tuple(self.coeff(i, i) for i in range(self.dim))

    def __repr__(self) -> str:
        terms = []
        for i in range(self.dim):
            for j in range(i, self.dim):
                c = self.coeff(i, j)
                if c.is_zero():
                    continue
                var = f"x{i + 1}^2" if i == j else f"x{i + 1}x{j + 1}"
                cs = repr(c)
                terms.append(var if cs == "1" else f"({cs}){var}" if len(cs) > 2 else f"{cs}{var}")
        return " + ".join(terms) if terms else "0"


def quadratic_form(ring: RingContext, dim: int, entries) -> QuadraticForm:
    """Build a form from {(i, j): value} or [(i, j, value), ...], 0-based i <= j."""
    if dim < 1:
        raise AdcError("dimension must be at least 1")
    table = [zero(ring)] * (dim * (dim + 1) // 2)
    items = entries.items() if hasattr(entries, "items") else ((i, j, v) for i, j, v in entries)
    for entry in items:
        (i, j), v = entry if len(entry) == 2 else ((entry[0], entry[1]), entry[2])
        if not (0 <= i <= j < dim):
            raise AdcError(f"bad coefficient index ({i}, {j}) for dimension {dim}")
        table[_ut_index(i, j, dim)] = elem(ring, v)
    q = QuadraticForm(ring, dim, tuple(table))
    if _det(gram(q).entries, ring).is_zero():
        raise Degenerate("form is degenerate over the fraction field")
    return q


def diagonal_form(ring: RingContext, coeffs) -> QuadraticForm:
    cs = list(coeffs)
    return quadratic_form(ring, len(cs), {(i, i): c for i, c in enumerate(cs)})


@dataclass(frozen=True)
class FractionVector:
    """A vector over the fraction field, used for rational points of K^n."""

    entries: tuple[Fraction, ...]

    @property
    def dim(self) -> int:
        return len(self.entries)

    @property
    def ring(self) -> RingContext:
        return self.entries[0].ring

    def __add__(self, other: "FractionVector") -> "FractionVector":
        return FractionVector(tuple(a + b for a, b in zip(self.entries, other.entries, strict=True)))

    def __sub__(self, other: "FractionVector") -> "FractionVector":
        return FractionVector(tuple(a - b for a, b in zip(self.entries, other.entries, strict=True)))

    def is_integral(self) -> bool:
        return all(x.is_integral() for x in self.entries)

    def to_elements(self) -> tuple[Element, ...]:
        return tuple(x.to_element() for x in self.entries)

    def __repr__(self) -> str:
        return "(" + ", ".join(repr(x) for x in self.entries) + ")"


def fraction_vector(ring: RingContext, values) -> FractionVector:
    """Coerce ints, rationals, (num, den) pairs or Fractions into a vector."""
    out = []
    for v in values:
        if isinstance(v, Fraction):
            if v.ring != ring:
                raise AdcError("ring mismatch")
            out.append(v)
        elif isinstance(v, tuple) and len(v) == 2 and ring.kind == "FqT" and not isinstance(v[0], int):
            out.append(frac(ring, v[0], v[1]))
        elif isinstance(v, tuple) and ring.kind != "FqT":
            out.append(frac(ring, v[0], v[1]))
        else:
            out.append(frac(ring, v))
    return FractionVector(tuple(out))


def element_vector(ring: RingContext, values) -> tuple[Element, ...]:
    return tuple(elem(ring, v) for v in values)


def as_fraction_vector(v) -> FractionVector:
    if isinstance(v, FractionVector):
        return v
    ring = v[0].ring
    return FractionVector(tuple(make_fraction(x, one(ring)) for x in v))


# -- evaluation ----------------------------------------------------------------


def evaluate(q: QuadraticForm, x: FractionVector) -> Fraction:
    """Exact value of q at a point of K^n."""
    x = as_fraction_vector(x)
    if x.dim != q.dim:
        raise DimensionMismatch(f"form has {q.dim} variables, point has {x.dim}")
    total = frac(q.ring, 0)
    for i in range(q.dim):
        for j in range(i, q.dim):
            c = q.coeff(i, j)
            if c.is_zero():
                continue
            total = total + (x.entries[i] * x.entries[j]).scale(c)
    return total


def evaluate_elements(q: QuadraticForm, v: tuple[Element, ...]) -> Element:
    """Value of q on a ring point, computed entirely inside the ring."""
    if len(v) != q.dim:
        raise DimensionMismatch(f"form has {q.dim} variables, point has {len(v)}")
    total = zero(q.ring)
    for i in range(q.dim):
        for j in range(i, q.dim):
            c = q.coeff(i, j)
            if c.is_zero():
                continue
            total = total + c * v[i] * v[j]
    return total


def bilinear(q: QuadraticForm, x: FractionVector, y: FractionVector) -> Fraction:
    """Polarization (q(x+y) - q(x) - q(y)) / 2; bilinear, with x.x = q(x)."""
    x, y = as_fraction_vector(x), as_fraction_vector(y)
    num = evaluate(q, x + y) - evaluate(q, x) - evaluate(q, y)
    return num.divide_by(elem(q.ring, 2))


def twice_bilinear_elements(q: QuadraticForm, v, w) -> Element:
    """2(v.w) = q(v+w) - q(v) - q(w); stays in the ring for ring points."""
    s = tuple(a + b for a, b in zip(v, w, strict=True))
    return evaluate_elements(q, s) - evaluate_elements(q, v) - evaluate_elements(q, w)


# -- Gram matrix and discriminant ------------------------------------------------


@dataclass(frozen=True)
class GramHalfMatrix:
    """Symmetric matrix with B_ii = c_ii and B_ij = c_ij / 2; 2B_ij is integral."""

    entries: tuple[tuple[Fraction, ...], ...]


def gram(q: QuadraticForm) -> GramHalfMatrix:
    two = elem(q.ring, 2)
    rows = []
    for i in range(q.dim):
        row = []
        for j in range(q.dim):
            c = q.coeff(i, j)
            f = make_fraction(c, one(q.ring))
            row.append(f if i == j else f.divide_by(two))
        rows.append(tuple(row))
    return GramHalfMatrix(tuple(rows))


def _det(rows, ring: RingContext) -> Fraction:
    n = len(rows)
    m = [list(r) for r in rows]
    det = frac(ring, 1)
    for col in range(n):
        piv = next((r for r in range(col, n) if not m[r][col].is_zero()), None)
        if piv is None:
            return frac(ring, 0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det = det * m[col][col]
        for r in range(col + 1, n):
            if m[r][col].is_zero():
                continue
            factor = m[r][col] / m[col][col]
            for c in range(col, n):
                m[r][c] = m[r][c] - factor * m[col][c]
    return det


def discriminant(q: QuadraticForm) -> Fraction:
    """Determinant of the half-integral Gram matrix, unnormalized."""
    d = _det(gram(q).entries, q.ring)
    if d.is_zero():
        raise Degenerate("zero discriminant")
    return d


def discriminant_degree(q: QuadraticForm) -> int:
    """Degree of the discriminant for forms over GF(q)[t] (2 is a unit there)."""
    if q.ring.kind != "FqT":
        raise WrongRing("discriminant degree is a polynomial-ring notion")
    d = discriminant(q)
    return fqpoly.deg(d.num.value) - fqpoly.deg(d.den.value)


def gram_rational(q: QuadraticForm) -> list[list[QQ]]:
    """Gram matrix as stdlib rationals; integer-based rings only."""
    if q.ring.kind == "FqT":
        raise WrongRing("rational Gram matrix needs an integer-based ring")
    return [[f.as_rational() for f in row] for row in gram(q).entries]


# -- predicates ------------------------------------------------------------------


def is_positive_definite(q: QuadraticForm) -> bool:
    """All leading principal minors positive, in exact rational arithmetic."""
    if q.ring.kind != "Z":
        raise WrongRing("positive definiteness is implemented over the integers")
    return _minors_positive(gram_rational(q))


def _minors_positive(g: list[list[QQ]]) -> bool:
    n = len(g)
    for k in range(1, n + 1):
        if _qq_det([row[:k] for row in g[:k]]) <= 0:
            return False
    return True


def _qq_det(m: list[list[QQ]]) -> QQ:
    n = len(m)
    m = [row[:] for row in m]
    det = QQ(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return QQ(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            if m[r][col] != 0:
                f = m[r][col] / m[col][col]
                for c in range(col, n):
                    m[r][c] -= f * m[col][c]
    return det


@dataclass(frozen=True)
class IsotropyResult:
    status: str  # "isotropic" | "anisotropic" | "no_witness"
    witness: tuple[Element, ...] | None = None
    bound: int | None = None


def _int_points(n: int, bound: int):
    rng = [0] + [s * k for k in range(1, bound + 1) for s in (1, -1)]
    return itertools.product(rng, repeat=n)


def is_isotropic_bounded(q: QuadraticForm, height_bound: int) -> IsotropyResult:
    """Bounded search for a nonzero ring zero of q.

    Positive (or negative) definite integer forms are reported anisotropic
    outright; otherwise the verdict is only as strong as the bound.
    """
    if height_bound < 1:
        raise AdcError("height bound must be at least 1")
    if q.ring.kind in ("Z", "Zloc"):
        g = gram_rational(q)
        if _minors_positive(g) or _minors_positive([[-x for x in row] for row in g]):
            return IsotropyResult("anisotropic")
        for v in _int_points(q.dim, height_bound):
            if all(c == 0 for c in v):
                continue
            vec = element_vector(q.ring, v)
            if evaluate_elements(q, vec).is_zero():
                return IsotropyResult("isotropic", witness=vec)
        return IsotropyResult("no_witness", bound=height_bound)
    gf = q.ring.gf()
    polys = list(fqpoly.all_of_degree_at_most(gf, height_bound))
    for v in itertools.product(polys, repeat=q.dim):
        if all(c == () for c in v):
            continue
        vec = tuple(Element(q.ring, c) for c in v)
        if evaluate_elements(q, vec).is_zero():
            return IsotropyResult("isotropic", witness=vec)
    return IsotropyResult("no_witness", bound=height_bound)


def anisotropic_constant_reduction(q: QuadraticForm) -> bool:
    """Anisotropy of a constant-coefficient form over GF(q)[t].

    A constant form is anisotropic over GF(q)(t) exactly when it is
    anisotropic over GF(q), which a finite scan decides.
    """
    if q.ring.kind != "FqT":
        raise WrongRing("constant reduction applies over GF(q)[t]")
    gf = q.ring.gf()
    consts = {}
    for i in range(q.dim):
        for j in range(i, q.dim):
            c = q.coeff(i, j)
            if fqpoly.deg(c.value) > 0:
                raise NonConstantCoefficients(f"coefficient of x{i+1}x{j+1} is {c!r}")
            consts[(i, j)] = c.value[0] if c.value else 0
    for v in itertools.product(range(gf.q), repeat=q.dim):
        if all(c == 0 for c in v):
            continue
        total = 0
        for (i, j), cij in consts.items():
            if cij:
                total = gf.add(total, gf.mul(cij, gf.mul(v[i], v[j])))
        if total == 0:
            return False
    return True


class Maximality(Enum):
    MAXIMAL = "maximal"
    NOT_MAXIMAL = "not_maximal"
    UNKNOWN = "unknown"


def maximality_special_z(q: QuadraticForm) -> Maximality:
    """Maximality of the standard lattice for the special integral families.

    Decides unary forms a x^2 (squarefree a), binary forms x^2 + a y^2
    (squarefree a congruent to 1 or 2 mod 4), and sums of n squares
    (n <= 3).  Everything else is Unknown: the odd-prime discriminant
    criterion is one-sided and there is no dyadic test here.
    """
    if q.ring.kind != "Z":
        raise WrongRing("these criteria are specific to integral forms")
    n = q.dim
    if n == 1:
        a = q.coeff(0, 0).value
        return Maximality.MAXIMAL if is_squarefree_int(a) else Maximality.NOT_MAXIMAL
    if q.is_diagonal():
        diag = [c.value for c in q.diagonal()]
        if all(a == 1 for a in diag):
            return Maximality.MAXIMAL if n <= 3 else Maximality.NOT_MAXIMAL
        if n == 2 and diag[0] == 1:
            a = diag[1]
            ok = is_squarefree_int(a) and a % 4 in (1, 2)
            return Maximality.MAXIMAL if ok else Maximality.NOT_MAXIMAL
    return Maximality.UNKNOWN


def definite_diagonal_fqt(q: QuadraticForm) -> bool | None:
    """Anisotropy at the infinite place for diagonal forms over GF(q)[t].

    Splitting the coefficients a_i = lc_i t^{m_i} (1 + O(1/t)) by the
    parity of m_i gives two residue forms over GF(q); the form is
    definite exactly when both blocks are anisotropic over GF(q), i.e.
    each has dimension <= 2 and any 2-dimensional block has -lc_1 lc_2 a
    non-square.  Returns None for non-diagonal forms.
    """
    if q.ring.kind != "FqT":
        raise WrongRing("definiteness at t = infinity is a polynomial-ring notion")
    if not q.is_diagonal():
        return None
    gf = q.ring.gf()
    blocks: dict[int, list[int]] = {0: [], 1: []}
    for c in q.diagonal():
        blocks[fqpoly.deg(c.value) % 2].append(c.value[-1])
    for lcs in blocks.values():
        if len(lcs) > 2:
            return False
        if len(lcs) == 2:
            prod = gf.neg(gf.mul(lcs[0], lcs[1]))
            if gf.is_square(prod):
                return False
    return True
