"""Named forms used throughout the tests and the CLI."""

from __future__ import annotations

from .errors import UnknownFixture
from .forms import QuadraticForm, diagonal_form, quadratic_form
from .rings import Integers, PolyOverFq


def _nebe5() -> QuadraticForm:
    # x1^2 + x1 x4 + x2^2 + x2 x5 + x3^2 + x3 x5 + x4^2 + x4 x5 + 2 x5^2
    return quadratic_form(Integers(), 5, {
        (0, 0): 1, (0, 3): 1,
        (1, 1): 1, (1, 4): 1,
        (2, 2): 1, (2, 4): 1,
        (3, 3): 1, (3, 4): 1,
        (4, 4): 2,
    })


_BUILDERS = {
    "sum2": lambda: diagonal_form(Integers(), [1, 1]),
    "sum3": lambda: diagonal_form(Integers(), [1, 1, 1]),
    "sum4": lambda: diagonal_form(Integers(), [1, 1, 1, 1]),
    "q1": lambda: diagonal_form(Integers(), [1, 3]),
    "q2": lambda: diagonal_form(Integers(), [2, 2]),
    "hex": lambda: quadratic_form(Integers(), 2, {(0, 0): 1, (0, 1): 1, (1, 1): 1}),
    "nebe5": _nebe5,
    "fqt-sum2": lambda: diagonal_form(PolyOverFq(3), [1, 1]),
}

_ALIASES = {
    "three-squares": "sum3",
    "two-squares": "sum2",
    "four-squares": "sum4",
}


def fixture_names() -> list[str]:
    return sorted(_BUILDERS)


def load_fixture(name: str) -> QuadraticForm:
    key = _ALIASES.get(name, name)
    try:
        return _BUILDERS[key]()
    except KeyError:
        raise UnknownFixture(
            f"unknown fixture {name!r}; available: {', '.join(fixture_names())}") from None
