"""A signature-based Groebner basis routine in the style of F5.

Every intermediate polynomial carries a module vector expressing it over
the (monic) inputs, and a signature, the lead term of that vector under
the position-over-term module order: compare the input index first, then
the monomial.  Pairs are processed in increasing signature.  Reduction only
uses reducer multiples of strictly smaller signature, results that reduce
to zero become syzygy signatures, and the standard criterion skips any
signature divisible by a known syzygy.

There is no rewritten criterion.  Instead each signature is processed at
most once, and a result that is still top reducible by a multiple of equal
signature is dropped as redundant.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from operator import add, le, sub
from typing import NamedTuple

from .errors import DegreeBoundExceeded, InconsistentLabel, ZeroPolynomial
from .groebner import dot
from .polynomials import Polynomial, Ring, as_ideal

__all__ = [
    "Signature",
    "LabeledPolynomial",
    "monoize",
    "koszul_syzygies",
    "standard_criterion",
    "reduce_signature",
    "regular_s_vector",
    "f5",
    "DEFAULT_DEGREE_BOUND",
]

DEFAULT_DEGREE_BOUND = 200


class Signature(NamedTuple):
    index: int
    monomial: tuple

    def times(self, u) -> "Signature":
        return Signature(self.index, tuple(map(add, self.monomial, u)))


def _sig_key(order, s: Signature):
    return (s.index, order.key(s.monomial))


@dataclass(frozen=True)
class LabeledPolynomial:
    """``poly == sum(vector[i] * inputs[i])`` with ``signature`` the lead of ``vector``."""

    signature: Signature
    vector: tuple
    poly: Polynomial

    def check(self, inputs) -> None:
        if dot(inputs, self.vector) != self.poly:
            raise InconsistentLabel(f"vector does not re-expand to the polynomial at {self.signature}")
        lead = _vector_signature(self.vector)
        if lead is not None and lead != self.signature:
            raise InconsistentLabel(f"vector lead {lead} differs from signature {self.signature}")


def _vector_signature(vector):
    for i in range(len(vector) - 1, -1, -1):
        if vector[i]:
            return Signature(i, vector[i].lead_monomial())
    return None


def monoize(f: Polynomial) -> Polynomial:
    """Scale ``f`` to lead coefficient 1."""
    if not f:
        raise ZeroPolynomial("cannot monoize the zero polynomial")
    return f.monic()


def koszul_syzygies(inputs) -> list[Signature]:
    """Lead signatures ``(n, lm(f_m))`` of the Koszul syzygies, ``m < n``."""
    inputs = list(inputs)
    return [
        Signature(n, inputs[m].lead_monomial()) for n in range(len(inputs)) for m in range(n)
    ]


def standard_criterion(sig: Signature, syz) -> bool:
    """True when a known syzygy signature divides ``sig``."""
    return any(s.index == sig.index and all(map(le, s.monomial, sig.monomial)) for s in syz)


# -- raw term-dict kernels --------------------------------------------------


def _axpy(dst: dict, c, u, src: dict, mod):
    """``dst -= c * x^u * src`` in place."""
    for m, v in src.items():
        nm = tuple(map(add, m, u))
        w = dst.get(nm, 0) - c * v
        if mod:
            w %= mod
        if w:
            dst[nm] = w
        else:
            dst.pop(nm, None)


def _scaled(terms: dict, c, mod):
    if mod:
        return {m: v * c % mod for m, v in terms.items()}
    return {m: v * c for m, v in terms.items()}


def _shifted(terms: dict, u):
    return {tuple(map(add, m, u)): v for m, v in terms.items()}


class _Elem:
    """Internal labeled element: signature, sig key, lead, raw terms, raw vector."""

    __slots__ = ("sig", "skey", "lm", "terms", "vec")

    def __init__(self, sig, skey, terms, vec, lm=None):
        self.sig, self.skey, self.terms, self.vec = sig, skey, terms, vec
        self.lm = lm


def _sig_reduce(terms: dict, vec: list, skey, basis, ring: Ring):
    """Signature-safe full reduction of ``(terms, vec)``; returns new raw pair."""
    order = ring.order
    mod = ring.field.mod
    rkey = order.rkey
    p = dict(terms)
    vec = [dict(v) for v in vec]
    out = {}
    heap = [(rkey(m), m) for m in p]
    heapq.heapify(heap)
    queued = set(p)
    while heap:
        m = heapq.heappop(heap)[1]
        queued.discard(m)
        c = p.get(m)
        if not c:
            continue
        red = None
        for g in basis:
            if all(map(le, g.lm, m)):
                u = tuple(map(sub, m, g.lm))
                if (g.skey[0], order.key(tuple(map(add, g.sig.monomial, u)))) < skey:
                    red = g, u
                    break
        if red is None:
            out[m] = p.pop(m)
            continue
        g, u = red
        # g is monic, so its lead cancels m exactly
        del p[m]
        for gm, gv in g.terms.items():
            if gm == g.lm:
                continue
            nm = tuple(map(add, gm, u))
            w = p.get(nm, 0) - c * gv
            if mod:
                w %= mod
            if w:
                p[nm] = w
                if nm not in queued and nm not in out:
                    queued.add(nm)
                    heapq.heappush(heap, (rkey(nm), nm))
            else:
                p.pop(nm, None)
        for i, gvec in enumerate(g.vec):
            if gvec:
                _axpy(vec[i], c, u, gvec, mod)
    return out, vec


def _wrap(ring, raw_vec):
    return tuple(Polynomial._raw(ring, v) for v in raw_vec)


def reduce_signature(inputs, g: LabeledPolynomial, basis) -> tuple:
    """Signature-safe normal form of ``g`` against ``basis``.

    Only multiples ``u * b`` with ``u * sig(b) < sig(g)`` are used, so the
    result keeps ``g``'s signature.  Returns ``(vector, poly)``; raises
    :class:`InconsistentLabel` if ``g`` or a basis element does not
    re-expand to its polynomial.
    """
    inputs = list(inputs)
    g.check(inputs)
    ring = g.poly.ring
    order = ring.order
    elems = []
    for b in basis:
        b.check(inputs)
        pb = b.poly
        if not pb:
            continue
        lc = pb.lead_coeff_raw()
        inv = ring.field.inv(lc)
        mod = ring.field.mod
        elems.append(
            _Elem(
                b.signature,
                _sig_key(order, b.signature),
                _scaled(pb._terms, inv, mod),
                [_scaled(v._terms, inv, mod) for v in b.vector],
                pb.lead_monomial(),
            )
        )
    terms, vec = _sig_reduce(g.poly._terms, [v._terms for v in g.vector], _sig_key(order, g.signature), elems, ring)
    return _wrap(ring, vec), Polynomial._raw(ring, terms)


class _Pending:
    """A lazily materialised S-vector ``x^a * big - x^b * small`` (both monic)."""

    __slots__ = ("sig", "skey", "big", "a", "small", "b")

    def __init__(self, sig, skey, big, a, small, b):
        self.sig, self.skey, self.big, self.a, self.small, self.b = sig, skey, big, a, small, b

    def materialise(self, mod):
        terms = _shifted(self.big.terms, self.a)
        vec = [_shifted(v, self.a) for v in self.big.vec]
        if self.small is not None:
            _axpy(terms, 1, self.b, self.small.terms, mod)
            for i, v in enumerate(self.small.vec):
                if v:
                    _axpy(vec[i], 1, self.b, v, mod)
        return terms, vec


def _s_vector(order, new: _Elem, old: _Elem):
    lcm = tuple(map(max, new.lm, old.lm))
    a = tuple(map(sub, lcm, new.lm))
    b = tuple(map(sub, lcm, old.lm))
    sa, sb = new.sig.times(a), old.sig.times(b)
    ka, kb = _sig_key(order, sa), _sig_key(order, sb)
    if ka == kb:
        return None
    if ka > kb:
        return _Pending(sa, ka, new, a, old, b)
    return _Pending(sb, kb, old, b, new, a)


def _to_elem(ring, lp: LabeledPolynomial) -> _Elem:
    p = lp.poly
    inv = ring.field.inv(p.lead_coeff_raw())
    mod = ring.field.mod
    return _Elem(
        lp.signature,
        _sig_key(ring.order, lp.signature),
        _scaled(p._terms, inv, mod),
        [_scaled(v._terms, inv, mod) for v in lp.vector],
        p.lead_monomial(),
    )


def regular_s_vector(new: LabeledPolynomial, old: LabeledPolynomial):
    """S-pair of two labeled polynomials lifted to the module.

    Returns ``None`` when both sides of the pair carry the same signature,
    otherwise the S-vector (a :class:`LabeledPolynomial`) labelled by the
    larger one.  Both inputs are normalised to lead coefficient 1 first.
    """
    ring = new.poly.ring
    pend = _s_vector(ring.order, _to_elem(ring, new), _to_elem(ring, old))
    if pend is None:
        return None
    terms, vec = pend.materialise(ring.field.mod)
    return LabeledPolynomial(pend.sig, _wrap(ring, vec), Polynomial._raw(ring, terms))


def f5(inputs, degree_bound: int | None = DEFAULT_DEGREE_BOUND, debug: bool = False, trace=None):
    """Signature-based Groebner basis of the ideal spanned by ``inputs``.

    The inputs are made monic first, and vectors refer to those monic
    inputs.  Returns a list of :class:`LabeledPolynomial` whose polynomials
    form a Groebner basis.  ``degree_bound`` caps the degree of any pair
    processed (``None`` disables the guard); ``debug`` re-checks every
    label as it is produced.  If ``trace`` is a list, each processed
    signature is appended to it together with the outcome: ``"basis"``,
    ``"syzygy"`` or ``"redundant"``.
    """
    ideal = as_ideal(inputs)
    ring = ideal.ring
    order = ring.order
    mod = ring.field.mod
    i0 = [monoize(f) for f in ideal]
    n = len(i0)
    unit = ring.one()._terms

    syzs = koszul_syzygies(i0)
    basis: list[_Elem] = []
    heap = []
    tick = itertools.count()
    seen = set()

    def push(entry):
        if entry.skey not in seen:
            seen.add(entry.skey)
            heapq.heappush(heap, (entry.skey, next(tick), entry))

    zero = (0,) * ring.arity
    for i, f in enumerate(i0):
        vec = [{} for _ in range(n)]
        vec[i] = dict(unit)
        e = _Elem(Signature(i, zero), (i, order.key(zero)), f._terms, vec, f.lead_monomial())
        push(_Pending(e.sig, e.skey, e, zero, None, None))

    while heap:
        _, _, entry = heapq.heappop(heap)
        sig = entry.sig
        if standard_criterion(sig, syzs):
            continue
        terms, vec = entry.materialise(mod)
        if not terms:
            syzs.append(sig)
            if trace is not None:
                trace.append((sig, "syzygy"))
            continue
        if degree_bound is not None and max(map(sum, terms)) > degree_bound:
            raise DegreeBoundExceeded(f"pair at signature {sig} exceeds degree {degree_bound}")
        terms, vec = _sig_reduce(terms, vec, entry.skey, basis, ring)
        if debug:
            lp = LabeledPolynomial(sig, _wrap(ring, vec), Polynomial._raw(ring, terms))
            lp.check(i0)
        if not terms:
            syzs.append(sig)
            if trace is not None:
                trace.append((sig, "syzygy"))
            continue
        ph = Polynomial._raw(ring, terms)
        lm = ph.lead_monomial()
        if _singular_top_reducible(order, lm, entry.skey, basis):
            if trace is not None:
                trace.append((sig, "redundant"))
            continue
        if trace is not None:
            trace.append((sig, "basis"))
        inv = ring.field.inv(ph.lead_coeff_raw())
        h = _Elem(sig, entry.skey, _scaled(terms, inv, mod), [_scaled(v, inv, mod) for v in vec], lm)
        for old in basis:
            pend = _s_vector(order, h, old)
            if pend is not None:
                push(pend)
        basis.append(h)

    return [
        LabeledPolynomial(g.sig, _wrap(ring, g.vec), Polynomial._raw(ring, g.terms)) for g in basis
    ]


def _singular_top_reducible(order, lm, skey, basis) -> bool:
    for g in basis:
        if all(map(le, g.lm, lm)):
            u = tuple(map(sub, lm, g.lm))
            if (g.skey[0], order.key(tuple(map(add, g.sig.monomial, u)))) == skey:
                return True
    return False
