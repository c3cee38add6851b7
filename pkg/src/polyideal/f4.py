"""Faugere's F4: S-pairs reduced in batches by Gaussian elimination.

The matrix storage is pluggable (any class with the ``from_rows`` /
``gauss_reduction`` / ``row_items`` surface of :mod:`polyideal.matrices`),
and so is pair selection: a strategy maps two basis polynomials to an
orderable weight and every pair of minimal weight enters the same matrix.
"""

from __future__ import annotations

import heapq
from operator import le, sub

from .groebner import gm_update
from .matrices import get_backend
from .polynomials import Polynomial, as_ideal

__all__ = ["f4", "symbolic_preprocessing", "normal_strategy", "degree_strategy", "STRATEGIES"]


def normal_strategy(f: Polynomial, g: Polynomial):
    """Total degree of the lcm of the lead monomials."""
    return sum(map(max, f.lead_monomial(), g.lead_monomial()))


def degree_strategy(f: Polynomial, g: Polynomial):
    """Largest total degree of the two polynomials themselves."""
    return max(f.total_degree(), g.total_degree())


STRATEGIES = {"normal": normal_strategy, "degree": degree_strategy}


def symbolic_preprocessing(pairs, basis):
    """Build the F4 matrix for ``pairs`` against reducer candidates ``basis``.

    ``pairs`` is a list of ``(f, g)`` polynomial pairs; ``basis`` the
    reducers in insertion order.  Returns ``(columns, rows)`` with columns
    the monomials in descending order and each row a ``{column: coeff}``
    dict.  The rows are both lcm multiples of every pair, plus one reducer
    multiple for every reducible monomial that is not already a row lead.
    """
    if not pairs:
        return [], []
    ring = pairs[0][0].ring
    rkey = ring.order.rkey
    products = []
    seen = set()

    def add_product(u, g):
        tag = (u, id(g))
        if tag not in seen:
            seen.add(tag)
            products.append((u, g))

    for f, g in pairs:
        lf, lg = f.lead_monomial(), g.lead_monomial()
        lcm = tuple(map(max, lf, lg))
        add_product(tuple(map(sub, lcm, lf)), f)
        add_product(tuple(map(sub, lcm, lg)), g)
    leads = [(g.lead_monomial(), g) for g in basis]

    def mono_of(u, g):
        return [tuple(a + b for a, b in zip(u, m)) for m in g._terms]

    done = set(tuple(a + b for a, b in zip(u, g.lead_monomial())) for u, g in products)
    monos = set()
    heap = []
    for u, g in products:
        for m in mono_of(u, g):
            if m not in monos:
                monos.add(m)
                heapq.heappush(heap, (rkey(m), m))
    while heap:
        m = heapq.heappop(heap)[1]
        if m in done:
            continue
        done.add(m)
        for lm, g in leads:
            if all(map(le, lm, m)):
                u = tuple(map(sub, m, lm))
                add_product(u, g)
                for nm in mono_of(u, g):
                    if nm not in monos:
                        monos.add(nm)
                        heapq.heappush(heap, (rkey(nm), nm))
                break
    columns = sorted(monos, key=rkey)
    col = {m: j for j, m in enumerate(columns)}
    rows = []
    for u, g in products:
        rows.append({col[tuple(a + b for a, b in zip(u, m))]: c for m, c in g._terms.items()})
    return columns, rows


class _Pair:
    __slots__ = ("i", "j", "lcm", "weight", "key")

    def __init__(self, i, j, lcm, weight, key):
        self.i, self.j, self.lcm, self.weight, self.key = i, j, lcm, weight, key


def f4(ideal, backend="dense", strategy=normal_strategy) -> list[Polynomial]:
    """Groebner basis of ``ideal`` by F4.

    ``backend`` is a matrix class or ``"dense"``/``"sparse"``; ``strategy``
    a callable ``(f, g) -> weight`` or a key of :data:`STRATEGIES`.
    """
    ideal = as_ideal(ideal)
    ring = ideal.ring
    mat = get_backend(backend)
    if isinstance(strategy, str):
        strategy = STRATEGIES[strategy]
    key = ring.order.key

    polys: list[Polynomial] = []
    lms: list = []
    active: list[int] = []
    pairs: list[_Pair] = []

    def make_pair(i, j, lcm):
        w = strategy(polys[i], polys[j])
        return _Pair(i, j, lcm, w, (w, key(lcm), i, j))

    def add(h):
        nonlocal active, pairs
        k = len(polys)
        polys.append(h)
        lms.append(h.lead_monomial())
        active, pairs = gm_update(lms, active, pairs, k, make_pair)

    for f in ideal:
        add(f.monic())

    while pairs:
        wmin = min(p.weight for p in pairs)
        chosen = sorted((p for p in pairs if p.weight == wmin), key=lambda p: p.key)
        pairs = [p for p in pairs if p.weight != wmin]
        columns, rows = symbolic_preprocessing(
            [(polys[p.i], polys[p.j]) for p in chosen], [polys[g] for g in active]
        )
        old_leads = {min(r) for r in rows if r}
        reduced = mat.from_rows(rows, ring.field, len(columns)).gauss_reduction()
        for r in range(reduced.nrows):
            items = reduced.row_items(r)
            if not items:
                continue
            lead = min(items)
            if lead in old_leads:
                continue
            add(Polynomial._raw(ring, {columns[j]: v for j, v in items.items()}))
    return [polys[g] for g in active]
