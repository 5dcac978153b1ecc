"""JSON wire formats.

Rings: {"ring": "Z"} | {"ring": "FqT", "q": 3} | {"ring": "Zloc", "primes": [2, 5]}.
Elements: decimal strings for integer-based rings ("12", "-7", "3/2" over a
localization) and low-to-high coefficient arrays for polynomials.
Fractions: {"num": <element>, "den": <element>}, with the shorthand "p/q"
accepted for integer-based rings.  No floats anywhere.
"""

from __future__ import annotations

from fractions import Fraction as QQ

from .errors import AdcError
from .forms import FractionVector, QuadraticForm, fraction_vector, quadratic_form
from .rings import (Element, Fraction, Integers, LocalizedIntegers, PolyOverFq,
                    RingContext, elem, frac)


def ring_to_json(ring: RingContext) -> dict:
    if ring.kind == "Z":
        return {"ring": "Z"}
    if ring.kind == "FqT":
        out = {"ring": "FqT", "q": ring.q}
        if ring.norm_base != ring.q:
            out["norm_base"] = ring.norm_base
        return out
    return {"ring": "Zloc", "primes": list(ring.primes)}


def ring_from_json(obj: dict) -> RingContext:
    kind = obj.get("ring")
    if kind == "Z":
        return Integers()
    if kind == "FqT":
        return PolyOverFq(int(obj["q"]), obj.get("norm_base"))
    if kind == "Zloc":
        return LocalizedIntegers(obj["primes"])
    raise AdcError(f"unknown ring descriptor {obj!r}")


def element_to_json(e: Element):
    if e.ring.kind == "FqT":
        return list(e.value)
    return str(e.value)


def element_from_json(ring: RingContext, obj) -> Element:
    if ring.kind == "FqT":
        if not isinstance(obj, (list, tuple)):
            raise AdcError(f"polynomial element expected, got {obj!r}")
        return elem(ring, [int(c) for c in obj])
    if isinstance(obj, str):
        return elem(ring, QQ(obj))
    return elem(ring, int(obj))


def fraction_to_json(x: Fraction):
    if x.ring.kind != "FqT" and x.den.value == 1:
        return str(x.num.value)
    return {"num": element_to_json(x.num), "den": element_to_json(x.den)}


def fraction_from_json(ring: RingContext, obj) -> Fraction:
    if isinstance(obj, dict):
        num = element_from_json(ring, obj["num"])
        den = element_from_json(ring, obj["den"])
        return frac(ring, num, den)
    if isinstance(obj, str) and ring.kind != "FqT":
        v = QQ(obj)
        return frac(ring, v.numerator, v.denominator)
    if isinstance(obj, int) and ring.kind != "FqT":
        return frac(ring, obj)
    if isinstance(obj, (list, tuple)) and ring.kind == "FqT":
        return frac(ring, element_from_json(ring, obj))
    raise AdcError(f"cannot parse fraction from {obj!r}")


def vector_to_json(v: FractionVector) -> list:
    return [fraction_to_json(x) for x in v.entries]


def vector_from_json(ring: RingContext, obj) -> FractionVector:
    return fraction_vector(ring, [fraction_from_json(ring, x) for x in obj])


def form_to_json(q: QuadraticForm) -> dict:
    coeffs = []
    for i in range(q.dim):
        for j in range(i, q.dim):
            c = q.coeff(i, j)
            if not c.is_zero():
                coeffs.append([i + 1, j + 1, element_to_json(c)])
    return {"ring": ring_to_json(q.ring), "dim": q.dim, "coeffs": coeffs}


def form_from_json(obj: dict) -> QuadraticForm:
    ring = ring_from_json(obj["ring"])
    dim = int(obj["dim"])
    entries = {}
    for i, j, val in obj["coeffs"]:
        entries[(int(i) - 1, int(j) - 1)] = element_from_json(ring, val)
    return quadratic_form(ring, dim, entries)
