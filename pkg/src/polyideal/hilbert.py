"""Hilbert-Poincare series and the Groebner algorithms that use them.

An :class:`HPS` is stored as its numerator over ``(1 - t)^n``; Taylor
coefficients are expanded on demand.  The second half of the module holds
the degree-by-degree algorithm for homogeneous ideals, its Hilbert-driven
variant, and :func:`calc_gb_via_homog`, which lets any algorithm for
homogeneous input handle arbitrary ideals.
"""

from __future__ import annotations

from concurrent.futures import Executor, ThreadPoolExecutor
from dataclasses import dataclass
from itertools import islice
from math import comb
from operator import le, sub

from .errors import ArityMismatch, NotHomogeneous
from .groebner import Reducers, _reduce, gm_update
from .monomials import GREVLEX, MonomialOrder
from .polynomials import Ideal, Polynomial, as_ideal, homogenise, unhomogenise

__all__ = [
    "HPS",
    "conv",
    "taylor_coeffs",
    "hps_add",
    "hps_module_action",
    "hilbert_numerator",
    "hilbert_series",
    "degree_by_degree_gb",
    "hilbert_driven_gb",
    "calc_gb_via_homog",
]


# -- univariate integer polynomials as coefficient tuples, low degree first --


def _trim(c):
    c = list(c)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return tuple(c) if c else (0,)


def _padd(a, b):
    n = max(len(a), len(b))
    return _trim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))


def _pmul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _shift(a, d):
    return _trim((0,) * d + tuple(a))


# -- series arithmetic ------------------------------------------------------


def _prefix(xs, k):
    head = list(islice(iter(xs), k))
    return head + [0] * (k - len(head))


def conv(xs, ys, k: int, parallel: bool = False, executor: Executor | None = None) -> list[int]:
    """First ``k`` coefficients of the Cauchy product of two integer sequences.

    Inputs may be finite (zero-extended) or infinite iterables.  Coefficient
    ``m >= 1`` is assembled from three partial sums, ``x0*y[m]``,
    ``y0*x[m]`` and the product of the two tails; with ``parallel=True``
    those are evaluated as separate tasks.  Integer sums are exact, so both
    schedules give identical output.
    """
    if k <= 0:
        return []
    x = _prefix(xs, k)
    y = _prefix(ys, k)

    def tail(m):
        return sum(x[i] * y[m - i] for i in range(1, m))

    if not parallel:
        return [x[0] * y[0]] + [x[0] * y[m] + y[0] * x[m] + tail(m) for m in range(1, k)]

    own = executor is None
    pool = executor or ThreadPoolExecutor(max_workers=3)
    try:
        futures = [
            (pool.submit(lambda m=m: x[0] * y[m]), pool.submit(lambda m=m: y[0] * x[m]), pool.submit(tail, m))
            for m in range(1, k)
        ]
        return [x[0] * y[0]] + [a.result() + b.result() + c.result() for a, b, c in futures]
    finally:
        if own:
            pool.shutdown()


@dataclass(frozen=True)
class HPS:
    """Hilbert-Poincare series ``numerator / (1 - t)^arity``."""

    arity: int
    numerator: tuple

    def __post_init__(self):
        object.__setattr__(self, "numerator", _trim(self.numerator))

    def taylor(self, k: int) -> list[int]:
        return taylor_coeffs(self, k)

    def __add__(self, other: "HPS") -> "HPS":
        return hps_add(self, other)

    def __rmul__(self, f) -> "HPS":
        return hps_module_action(f, self)

    def __eq__(self, other):
        if not isinstance(other, HPS):
            return NotImplemented
        return self.arity == other.arity and self.numerator == other.numerator

    def __hash__(self):
        return hash((self.arity, self.numerator))

    def __str__(self):
        return f"({format_int_poly(self.numerator)}) / (1 - t)^{self.arity}"


def format_int_poly(c) -> str:
    parts = []
    for d, a in enumerate(c):
        if not a:
            continue
        mag = abs(a)
        mono = "" if d == 0 else ("t" if d == 1 else f"t^{d}")
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
        if not parts:
            parts.append(f"-{body}" if a < 0 else body)
        else:
            parts.append(f" - {body}" if a < 0 else f" + {body}")
    return "".join(parts) or "0"


def _coeff_at(num, n, m):
    if n == 0:
        return num[m] if m < len(num) else 0
    return sum(a * comb(m - d + n - 1, n - 1) for d, a in enumerate(num) if a and d <= m)


def taylor_coeffs(h: HPS, k: int) -> list[int]:
    """First ``k`` Taylor coefficients: ``sum_d num_d * C(m - d + n - 1, n - 1)``."""
    if k < 0:
        raise ValueError(f"cannot take {k} coefficients")
    return [_coeff_at(h.numerator, h.arity, m) for m in range(k)]


def hps_add(a: HPS, b: HPS) -> HPS:
    if a.arity != b.arity:
        raise ArityMismatch(f"series over (1-t)^{a.arity} and (1-t)^{b.arity}")
    return HPS(a.arity, _padd(a.numerator, b.numerator))


def hps_module_action(f, a: HPS) -> HPS:
    """Multiply the series by the integer polynomial ``f`` (coefficients low first)."""
    return HPS(a.arity, _pmul(tuple(f), a.numerator))


# -- Hilbert numerators of monomial ideals ----------------------------------


def _minimalize(monos):
    out = []
    for m in sorted(set(monos), key=sum):
        if not any(all(map(le, g, m)) for g in out):
            out.append(m)
    return out


def _numerator(gens):
    if not gens:
        return (1,)
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in gens]
    if sum(map(len, supports)) == len(frozenset().union(*supports)):
        result = (1,)
        for m in gens:
            d = sum(m)
            result = _pmul(result, (1,) + (0,) * (d - 1) + (-1,)) if d else (0,)
        return result
    n = len(gens[0])
    counts = [0] * n
    for m in gens:
        for i, e in enumerate(m):
            if e:
                counts[i] += 1
    var = max(range(n), key=lambda i: counts[i])
    exps = sorted(m[var] for m in gens if m[var])
    e = exps[(len(exps) - 1) // 2]
    pivot = tuple(e if i == var else 0 for i in range(n))
    plus = _minimalize(gens + [pivot])
    colon = _minimalize([tuple(max(a - b, 0) for a, b in zip(m, pivot)) for m in gens])
    return _padd(_numerator(plus), _shift(_numerator(colon), e))


def hilbert_numerator(monos) -> tuple:
    """Numerator over ``(1 - t)^n`` of the Hilbert series of ``k[x] / <monos>``.

    Computed by the pivot recursion
    ``N(I) = N(I + <p>) + t^deg(p) * N(I : p)`` with ``p`` a power of the
    most frequent variable; returned as a coefficient tuple, low degree first.
    """
    monos = [tuple(m) for m in monos]
    if not monos:
        return (1,)
    if any(not any(m) for m in monos):
        return (0,)
    return _numerator(_minimalize(monos))


def hilbert_series(monos, arity: int | None = None) -> HPS:
    monos = [tuple(m) for m in monos]
    if arity is None:
        if not monos:
            raise ValueError("arity is required for an empty generator list")
        arity = len(monos[0])
    return HPS(arity, hilbert_numerator(monos))


# -- degree-by-degree and Hilbert-driven algorithms -------------------------


class _Pair:
    __slots__ = ("i", "j", "lcm", "deg", "key")

    def __init__(self, i, j, lcm, key):
        self.i, self.j, self.lcm = i, j, lcm
        self.deg = sum(lcm)
        self.key = (self.deg, key(lcm), i, j)


def _homogeneous_gb(ideal: Ideal, target: HPS | None = None) -> list[Polynomial]:
    ring = ideal.ring
    field = ring.field
    key = ring.order.key
    n = ring.arity

    polys: list[Polynomial] = []
    lms: list = []
    active: list[int] = []
    pairs: list[_Pair] = []
    red = Reducers(ring)
    inputs = sorted(
        ((f.total_degree(), i, f) for i, f in enumerate(ideal)), key=lambda t: (t[0], t[1])
    )
    cache = {"n": None, "num": None}

    def make_pair(i, j, lcm):
        return _Pair(i, j, lcm, key)

    def current_numerator():
        if cache["n"] != len(polys):
            cache["num"] = hilbert_numerator([lms[g] for g in active])
            cache["n"] = len(polys)
        return cache["num"]

    def hilbert_done(d):
        return _coeff_at(current_numerator(), n, d) == _coeff_at(target.numerator, n, d)

    def add(h):
        nonlocal active, pairs, red
        k = len(polys)
        polys.append(h)
        lms.append(h.lead_monomial())
        active, pairs = gm_update(lms, active, pairs, k, make_pair)
        red = Reducers(ring, [polys[g] for g in active])

    while pairs or inputs:
        if target is not None and current_numerator() == target.numerator:
            break
        d = min([p.deg for p in pairs] + [t[0] for t in inputs[:1]])
        while True:
            if target is not None and hilbert_done(d):
                inputs = [t for t in inputs if t[0] != d]
                pairs = [p for p in pairs if p.deg != d]
                break
            if inputs and inputs[0][0] == d:
                terms = inputs.pop(0)[2]._terms
            else:
                batch = [p for p in pairs if p.deg == d]
                if not batch:
                    break
                best = min(batch, key=lambda p: p.key)
                pairs.remove(best)
                fi, fj = polys[best.i], polys[best.j]
                sp = fi.mul_term(tuple(map(sub, best.lcm, lms[best.i]))) - fj.mul_term(
                    tuple(map(sub, best.lcm, lms[best.j]))
                )
                terms = sp._terms
            rem = _reduce(terms, red, ring)
            if rem:
                add(Polynomial._raw(ring, rem).monic())
    return [polys[g] for g in active]


def degree_by_degree_gb(ideal) -> list[Polynomial]:
    """Groebner basis of a homogeneous ideal, one degree at a time.

    Pairs and input generators are handled in nondecreasing degree; when
    degree ``d`` begins the basis is complete below ``d``.
    """
    ideal = as_ideal(ideal)
    if not ideal.is_homogeneous():
        raise NotHomogeneous("degree-by-degree needs homogeneous generators")
    return _homogeneous_gb(ideal)


def hilbert_driven_gb(
    ideal, easy_order: MonomialOrder = GREVLEX, target_order: MonomialOrder | None = None
) -> list[Polynomial]:
    """Groebner basis for ``target_order`` guided by the Hilbert series.

    A basis for ``easy_order`` is computed first; the Hilbert series of its
    lead ideal then tells the target run when a degree is finished, so the
    remaining pairs of that degree are dropped unreduced.  The result lives
    in the ring with ``target_order`` (the ideal's own order by default).
    """
    ideal = as_ideal(ideal)
    if not ideal.is_homogeneous():
        raise NotHomogeneous("the Hilbert-driven algorithm needs homogeneous generators")
    ring = ideal.ring
    target_ring = ring.with_order(target_order or ring.order)
    easy_ring = ring.with_order(easy_order)
    easy = _homogeneous_gb(ideal.map(lambda f: f.with_ring(easy_ring)))
    series = HPS(ring.arity, hilbert_numerator([g.lead_monomial() for g in easy]))
    return _homogeneous_gb(ideal.map(lambda f: f.with_ring(target_ring)), target=series)


def calc_gb_via_homog(algo, ideal) -> list[Polynomial]:
    """Run ``algo`` directly on homogeneous input, otherwise on the
    homogenisation, mapping the result back with ``h = 1``."""
    ideal = as_ideal(ideal)
    if ideal.is_homogeneous():
        return algo(ideal)
    return [unhomogenise(g) for g in algo(ideal.map(homogenise))]
