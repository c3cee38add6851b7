"""The three benchmark ideals and the (ideal, order) cells of the timing table."""

from __future__ import annotations

from .fields import QQ, Field
from .monomials import parse_order
from .polynomials import Ideal, Ring
from .text import parse_polynomial

IDEALS = {
    "I1": (
        ("x", "y", "z", "t", "u"),
        [
            "35*y^4 - 30*x*y^2 - 210*y^2*z + 3*x^2 + 30*x*z - 105*z^2 + 140*y*t - 21*u",
            "5*x*y^3 - 140*y^3*z - 3*x^2*y + 45*x*y*z - 420*y*z^2 + 210*y^2*t - 25*x*t + 70*z*t + 126*y*u",
        ],
    ),
    "I2": (
        ("w", "x", "y", "z"),
        ["w + x + y + z", "w*x + x*y + y*z + z*w", "w*x*y + x*y*z + y*z*w + z*w*x", "w*x*y*z - 1"],
    ),
    "I3": (("x", "y", "z", "t"), ["x^31 - x^6 - x - y", "x^8 - z", "x^10 - t"]),
}

# the table's columns, in order
CELLS = [("I1", "lex"), ("I1", "grevlex"), ("I2", "lex"), ("I2", "grevlex"), ("I3", "grevlex")]


def benchmark_ideal(name: str, order: str = "grevlex", field: Field = QQ) -> Ideal:
    names, gens = IDEALS[name]
    ring = Ring(len(names), parse_order(order), field, names)
    return Ideal([parse_polynomial(g, ring) for g in gens], ring)
