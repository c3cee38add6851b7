"""Division, S-polynomials and the Buchberger algorithm.

The reduction kernel works on raw term dicts with a heap of pending
monomials, so the lead term is found in logarithmic time rather than by a
scan.  Buchberger's algorithm selects pairs by the sugar strategy and
prunes them with the Gebauer-Moller installation of the product and chain
criteria.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from operator import add, le, sub

from .errors import NotABasis, ZeroPolynomial
from .monomials import coprime
from .polynomials import Ideal, Polynomial, Ring, as_ideal

__all__ = [
    "DivisionResult",
    "normal_form",
    "reduce_poly",
    "s_poly",
    "buchberger",
    "buchberger_with_cofactors",
    "reduce_gb",
    "is_groebner_basis",
    "ideal_membership",
    "dot",
    "express",
    "Reducers",
]


@dataclass(frozen=True)
class DivisionResult:
    quotients: list
    remainder: Polynomial


class Reducers:
    """Lead data of a list of divisors, in list order.

    Each entry is ``(lead monomial, tail terms, 1/lead coefficient)``.
    """

    __slots__ = ("ring", "entries")

    def __init__(self, ring: Ring, polys=()):
        self.ring = ring
        self.entries = []
        for g in polys:
            self.append(g)

    def append(self, g: Polynomial):
        self.ring.check(g.ring)
        lm = g.lead_monomial()
        lc = g._terms[lm]
        inv = 1 if lc == 1 else self.ring.field.inv(lc)
        tail = [(m, c) for m, c in g._terms.items() if m != lm]
        self.entries.append((lm, tail, inv))

    def __len__(self):
        return len(self.entries)

    def find(self, m):
        for j, entry in enumerate(self.entries):
            if all(map(le, entry[0], m)):
                return j
        return None


def _reduce(terms: dict, reducers: Reducers, ring: Ring, quotients=None, full=True) -> dict:
    """Reduce ``terms`` modulo ``reducers``; returns the remainder dict.

    When ``quotients`` is a list of dicts (one per reducer) the quotient
    terms are accumulated into it.  With ``full=False`` only the lead term
    is reduced, the rest is copied verbatim once the lead is irreducible.
    """
    mod = ring.field.mod
    rkey = ring.order.rkey
    entries = reducers.entries
    p = dict(terms)
    heap = [(rkey(m), m) for m in p]
    heapq.heapify(heap)
    push, pop = heapq.heappush, heapq.heappop
    rem = {}
    while heap:
        m = pop(heap)[1]
        c = p.pop(m, None)
        if c is None:
            continue
        for j, (lm, tail, inv) in enumerate(entries):
            if all(map(le, lm, m)):
                break
        else:
            rem[m] = c
            if not full:
                rem.update(p)
                return rem
            continue
        q = tuple(map(sub, m, lm))
        coef = c if inv == 1 else c * inv
        if mod:
            coef %= mod
        if quotients is not None:
            qd = quotients[j]
            v = qd.get(q, 0) + coef
            if mod:
                v %= mod
            if v:
                qd[q] = v
            else:
                qd.pop(q, None)
        for tm, tc in tail:
            nm = tuple(map(add, q, tm))
            v = p.get(nm)
            if v is None:
                v = -coef * tc
                if mod:
                    v %= mod
                p[nm] = v
                push(heap, (rkey(nm), nm))
            else:
                v = v - coef * tc
                if mod:
                    v %= mod
                if v:
                    p[nm] = v
                else:
                    del p[nm]
    return rem


def normal_form(f: Polynomial, divisors) -> DivisionResult:
    """Multivariate division of ``f`` by ``divisors``.

    The first divisor (in list order) whose lead divides the current lead
    term is used.  ``f == sum(q_i * g_i) + remainder`` holds exactly.
    """
    ring = f.ring
    divisors = list(divisors)
    for g in divisors:
        ring.check(g.ring)
        if not g:
            raise ZeroPolynomial("cannot divide by the zero polynomial")
    red = Reducers(ring, divisors)
    quot = [{} for _ in divisors]
    rem = _reduce(f._terms, red, ring, quot)
    return DivisionResult([Polynomial._raw(ring, q) for q in quot], Polynomial._raw(ring, rem))


def reduce_poly(f: Polynomial, divisors) -> Polynomial:
    """Remainder of ``f`` modulo ``divisors`` (a :class:`Reducers` or a list)."""
    red = divisors if isinstance(divisors, Reducers) else Reducers(f.ring, divisors)
    return Polynomial._raw(f.ring, _reduce(f._terms, red, f.ring))


def s_poly(f: Polynomial, g: Polynomial) -> Polynomial:
    """``(L/lt f)*f - (L/lt g)*g`` with ``L`` the lcm of the lead monomials."""
    f.ring.check(g.ring)
    lf, lg = f.lead_monomial(), g.lead_monomial()
    lcm = tuple(map(max, lf, lg))
    field = f.ring.field
    a = f.mul_term(tuple(map(sub, lcm, lf)), field.inv(f._terms[lf]))
    b = g.mul_term(tuple(map(sub, lcm, lg)), field.inv(g._terms[lg]))
    return a - b


# -- Buchberger -------------------------------------------------------------


class _Pair:
    __slots__ = ("i", "j", "lcm", "sugar", "key")

    def __init__(self, i, j, lcm, sugar, key):
        self.i, self.j, self.lcm, self.sugar, self.key = i, j, lcm, sugar, key


def _divides(a, b):
    return all(map(le, a, b))


def gm_update(lms, active, pairs, h, make_pair):
    """Gebauer-Moller update after adding basis element ``h``.

    ``lms[k]`` is the lead monomial of element ``k``; ``active`` the current
    basis indices; ``pairs`` the pending pairs.  Returns the new
    ``(active, pairs)``.  ``make_pair(i, j, lcm)`` builds a pair object
    exposing ``i``, ``j`` and ``lcm``.
    """
    lh = lms[h]
    cands = [(g, tuple(map(max, lh, lms[g]))) for g in active]
    kept = []
    for idx, (g, lcm) in enumerate(cands):
        if coprime(lh, lms[g]):
            kept.append((g, lcm))
            continue
        # chain criterion among the new pairs
        redundant = False
        for g2, l2 in cands[idx + 1:]:
            if _divides(l2, lcm):
                redundant = True
                break
        if not redundant:
            for g2, l2 in kept:
                if _divides(l2, lcm):
                    redundant = True
                    break
        if not redundant:
            kept.append((g, lcm))
    # product criterion
    new = [make_pair(g, h, lcm) for g, lcm in kept if not coprime(lh, lms[g])]
    survivors = []
    for p in pairs:
        if _divides(lh, p.lcm):
            l1 = tuple(map(max, lms[p.i], lh))
            l2 = tuple(map(max, lms[p.j], lh))
            if l1 != p.lcm and l2 != p.lcm:
                continue
        survivors.append(p)
    survivors.extend(new)
    active = [g for g in active if not _divides(lh, lms[g])]
    active.append(h)
    return active, survivors


def buchberger(ideal) -> list[Polynomial]:
    """A monic Groebner basis of ``ideal`` with respect to its ring's order."""
    return [p for p, _ in _buchberger(as_ideal(ideal), track=False)]


def buchberger_with_cofactors(ideal):
    """Like :func:`buchberger` but also returns, for each basis element, the
    list of cofactors expressing it in the original generators."""
    return _buchberger(as_ideal(ideal), track=True)


def _buchberger(ideal: Ideal, track: bool):
    ring = ideal.ring
    field = ring.field
    mod = field.mod
    key = ring.order.key
    ngens = len(ideal)
    zero = ring.zero()

    polys: list[Polynomial] = []
    lms: list = []
    sugars: list[int] = []
    cofs: list = []
    active: list[int] = []
    pairs: list[_Pair] = []
    red = Reducers(ring)
    red_index: list[int] = []  # reducer slot -> basis index

    def make_pair(i, j, lcm):
        dl = sum(lcm)
        s = max(sugars[i] + dl - sum(lms[i]), sugars[j] + dl - sum(lms[j]))
        return _Pair(i, j, lcm, s, (s, key(lcm), i, j))

    def add_element(h: Polynomial, sugar: int, cof):
        nonlocal active, pairs, red, red_index
        k = len(polys)
        polys.append(h)
        lms.append(h.lead_monomial())
        sugars.append(sugar)
        cofs.append(cof)
        active, pairs = gm_update(lms, active, pairs, k, make_pair)
        red = Reducers(ring, [polys[g] for g in active])
        red_index = list(active)
        # keep tails reduced; over Q this damps coefficient growth
        lm = lms[k]
        for slot, g in enumerate(active):
            if g == k:
                continue
            p = polys[g]
            if not any(all(map(le, lm, m)) for m in p._terms if m != lms[g]):
                continue
            tail = {m: c for m, c in p._terms.items() if m != lms[g]}
            rem, cofs[g] = reduce_tracked(tail, cofs[g])
            rem[lms[g]] = p._terms[lms[g]]
            polys[g] = Polynomial._raw(ring, rem)
            red.entries[slot] = Reducers(ring, [polys[g]]).entries[0]

    def reduce_tracked(terms, cof):
        quot = [{} for _ in red.entries] if track else None
        rem = _reduce(terms, red, ring, quot)
        if track and any(quot):
            cof = list(cof)
            for slot, qd in enumerate(quot):
                if qd:
                    q = Polynomial._raw(ring, qd)
                    src = cofs[red_index[slot]]
                    cof = [c - q * s for c, s in zip(cof, src)]
        return rem, cof

    for idx, f in enumerate(ideal):
        lc = f.lead_coeff_raw()
        inv = field.inv(lc)
        h = f.monic()
        cof = None
        if track:
            cof = [zero] * ngens
            cof[idx] = ring.constant(inv)
        add_element(h, f.total_degree(), cof)

    while pairs:
        best = min(pairs, key=lambda p: p.key)
        pairs.remove(best)
        i, j = best.i, best.j
        fi, fj = polys[i], polys[j]
        ui = tuple(map(sub, best.lcm, lms[i]))
        uj = tuple(map(sub, best.lcm, lms[j]))
        sp = fi.mul_term(ui) - fj.mul_term(uj)
        cof = None
        if track:
            a = ring.monomial(ui)
            b = ring.monomial(uj)
            cof = [a * x - b * y for x, y in zip(cofs[i], cofs[j])]
        rem, cof = reduce_tracked(sp._terms, cof)
        if not rem:
            continue
        h = Polynomial._raw(ring, rem)
        lc = h.lead_coeff_raw()
        if lc != 1:
            inv = field.inv(lc)
            h = h.scale(inv)
            if track:
                cof = [c.scale(inv) for c in cof]
        add_element(h, best.sugar, cof)

    out = [(polys[g], cofs[g]) for g in active]
    return out


def dot(generators, cofactors) -> Polynomial:
    """``sum(c_i * g_i)``."""
    generators = list(generators)
    total = generators[0].ring.zero()
    for g, c in zip(generators, cofactors):
        if c:
            total = total + c * g
    return total


def reduce_gb(basis, check: bool = False) -> list[Polynomial]:
    """Interreduce ``basis`` into the reduced Groebner basis, sorted by
    descending lead monomial.  With ``check=True`` the input is first
    S-tested and :class:`NotABasis` raised on failure."""
    polys = [g.monic() for g in basis if g]
    if not polys:
        return []
    if check and not is_groebner_basis(polys):
        raise NotABasis("input fails the S-test")
    ring = polys[0].ring
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(polys):
            others = polys[:i] + polys[i + 1:]
            if not others:
                break
            r = reduce_poly(polys[i], Reducers(ring, others))
            if r._terms != polys[i]._terms:
                changed = True
                if r:
                    polys[i] = r.monic()
                else:
                    del polys[i]
                    continue
            i += 1
    unique = {}
    for g in polys:
        unique.setdefault(g.lead_monomial(), g)
    rkey = ring.order.rkey
    return [unique[m] for m in sorted(unique, key=rkey)]


def is_groebner_basis(basis) -> bool:
    """The S-test: every pairwise S-polynomial reduces to zero."""
    polys = [g for g in basis]
    if not polys:
        return True
    ring = polys[0].ring
    red = Reducers(ring, polys)
    for a in range(len(polys)):
        for b in range(a + 1, len(polys)):
            sp = s_poly(polys[a], polys[b])
            if sp and _reduce(sp._terms, red, ring):
                return False
    return True


def express(f: Polynomial, tracked, generators):
    """Cofactors of ``f`` over ``generators`` from a cofactor-tracked basis
    (as returned by :func:`buchberger_with_cofactors`), or ``None`` when
    ``f`` is not in the ideal.  The result is checked by re-expansion."""
    ring = f.ring
    div = normal_form(f, [p for p, _ in tracked])
    if div.remainder:
        return None
    cs = [ring.zero()] * len(generators)
    for q, (_, cof) in zip(div.quotients, tracked):
        if q:
            cs = [c + q * x for c, x in zip(cs, cof)]
    if dot(generators, cs) != f:
        raise AssertionError("cofactors failed to re-expand; this is a bug")
    return cs


def ideal_membership(f: Polynomial, ideal):
    """Decide ``f in ideal``; on success also return verified cofactors
    ``cs`` with ``f == dot(ideal.generators, cs)``."""
    ideal = as_ideal(ideal)
    ideal.ring.check(f.ring)
    cs = express(f, buchberger_with_cofactors(ideal), ideal.generators)
    return (False, None) if cs is None else (True, cs)
