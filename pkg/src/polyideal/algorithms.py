"""Uniform entry point over every Groebner basis algorithm in the package."""

from __future__ import annotations

from functools import partial

from .f4 import f4
from .f5 import f5
from .groebner import buchberger, reduce_gb
from .hilbert import calc_gb_via_homog, degree_by_degree_gb, hilbert_driven_gb
from .polynomials import as_ideal

ALGORITHMS = ("buchberger", "dbyd", "hilb", "f4", "f5")


def compute_gb(algo: str, ideal, backend: str = "dense", strategy: str = "normal"):
    """Unreduced Groebner basis of ``ideal`` computed by ``algo``.

    ``dbyd`` and ``hilb`` go through homogenisation, so they accept any
    ideal.  ``backend`` and ``strategy`` only matter for ``f4``.
    """
    ideal = as_ideal(ideal)
    if algo == "buchberger":
        return buchberger(ideal)
    if algo == "dbyd":
        return calc_gb_via_homog(degree_by_degree_gb, ideal)
    if algo == "hilb":
        return calc_gb_via_homog(hilbert_driven_gb, ideal)
    if algo == "f4":
        return f4(ideal, backend=backend, strategy=strategy)
    if algo == "f5":
        return [lp.poly for lp in f5(ideal)]
    raise ValueError(f"unknown algorithm {algo!r}; choose from {', '.join(ALGORITHMS)}")


def reduced_gb(algo: str, ideal, **kw):
    return reduce_gb(compute_gb(algo, ideal, **kw))


def algorithm(algo: str, **kw):
    """``compute_gb`` with the algorithm (and options) fixed."""
    return partial(compute_gb, algo, **kw)
