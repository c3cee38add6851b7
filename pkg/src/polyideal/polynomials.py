"""Sparse multivariate polynomials over exact fields.

A :class:`Ring` fixes arity, monomial order, coefficient field and
(optionally) variable names.  A :class:`Polynomial` is an immutable map from
exponent tuples to raw nonzero coefficients tagged with its ring; terms are
sorted on demand and the order is cached.  Arithmetic between polynomials
of different rings raises :class:`RingMismatch`; moving between rings is
explicit, through :func:`conv_poly`, :func:`inj_vars_offset`,
:func:`remap_variables` or :func:`lift_map`.
"""

from __future__ import annotations

import dataclasses
from collections.abc import Mapping
from fractions import Fraction
from functools import lru_cache
from operator import add

from .errors import (
    ArityMismatch,
    ArityOverflow,
    DuplicateVariable,
    ExponentOverflow,
    IncompatibleRings,
    NameNotFound,
    NoNames,
    NotHomogenisedRing,
    RingMismatch,
    ZeroPolynomial,
)
from .fields import QQ, Field, FpElement
from .monomials import MAX_EXPONENT, GREVLEX, HomogInduced, MonomialOrder

__all__ = [
    "Ring",
    "Polynomial",
    "Ideal",
    "conv_poly",
    "inj_vars",
    "inj_vars_offset",
    "inj_vars_at_end",
    "remap_variables",
    "lift_map",
    "homogenise",
    "unhomogenise",
    "is_homogeneous",
    "homogenised_ring",
]


@dataclasses.dataclass(frozen=True)
class Ring:
    """Descriptor of a polynomial ring ``field[x_0, ..., x_{n-1}]``.

    ``base`` is set only on homogenised rings and points at the ring that
    :func:`unhomogenise` maps back into.
    """

    arity: int
    order: MonomialOrder = GREVLEX
    field: Field = QQ
    names: tuple | None = None
    base: "Ring | None" = dataclasses.field(default=None, repr=False)

    def __post_init__(self):
        if self.arity < 0:
            raise ValueError("arity must be non-negative")
        if self.names is not None:
            names = tuple(self.names)
            object.__setattr__(self, "names", names)
            if len(names) != self.arity:
                raise ArityMismatch(f"{len(names)} names for arity {self.arity}")
            seen = set()
            for name in names:
                if name in seen:
                    raise DuplicateVariable(f"the variable {name!r} occurs twice")
                seen.add(name)

    @property
    def variable_names(self) -> tuple:
        if self.names is not None:
            return self.names
        return tuple(f"x{i}" for i in range(self.arity))

    def zero(self) -> "Polynomial":
        return Polynomial._raw(self, {})

    def one(self) -> "Polynomial":
        return Polynomial._raw(self, {(0,) * self.arity: self.field.one})

    def constant(self, c) -> "Polynomial":
        c = self.field.convert(c)
        return Polynomial._raw(self, {(0,) * self.arity: c} if c else {})

    def gen(self, i) -> "Polynomial":
        if isinstance(i, str):
            if self.names is None:
                raise NoNames("ring has no variable names")
            try:
                i = self.names.index(i)
            except ValueError:
                raise NameNotFound(i) from None
        if not 0 <= i < self.arity:
            raise IndexError(f"variable index {i} out of range")
        m = tuple(1 if k == i else 0 for k in range(self.arity))
        return Polynomial._raw(self, {m: self.field.one})

    def gens(self) -> list["Polynomial"]:
        return [self.gen(i) for i in range(self.arity)]

    def monomial(self, m, c=1) -> "Polynomial":
        return self.from_terms({tuple(m): c})

    def from_terms(self, terms) -> "Polynomial":
        """Build a polynomial from ``{exponents: coefficient}``, validating both."""
        out = {}
        conv = self.field.convert
        for m, c in dict(terms).items():
            m = tuple(int(e) for e in m)
            if len(m) != self.arity:
                raise ArityMismatch(f"monomial {m} in a ring of arity {self.arity}")
            if any(e < 0 for e in m):
                raise ValueError(f"negative exponent in {m}")
            if any(e > MAX_EXPONENT for e in m):
                raise ExponentOverflow(f"exponent exceeds {MAX_EXPONENT}")
            c = conv(c)
            if c:
                out[m] = c
        return Polynomial._raw(self, out)

    def parse(self, text: str) -> "Polynomial":
        from .text import parse_polynomial

        return parse_polynomial(text, self)

    def with_order(self, order: MonomialOrder) -> "Ring":
        if order == self.order:
            return self
        return dataclasses.replace(self, order=order)

    def header(self) -> str:
        """The ``ring <field> [<names>] <order>`` line used by the text formats."""
        return f"ring {self.field.name} [{','.join(self.variable_names)}] {self.order!r}"

    def check(self, other: "Ring"):
        if self is not other and self != other:
            raise RingMismatch(f"{self} vs {other}")


class Polynomial:
    """Immutable sparse polynomial.  Build through :class:`Ring` helpers."""

    __slots__ = ("ring", "_terms", "_sorted", "_lm", "__weakref__")

    def __init__(self, ring: Ring, terms=None):
        p = ring.from_terms(terms or {})
        self.ring = ring
        self._terms = p._terms
        self._sorted = None
        self._lm = None

    @classmethod
    def _raw(cls, ring, terms):
        # trusted constructor: terms already canonical and nonzero
        self = object.__new__(cls)
        self.ring = ring
        self._terms = terms
        self._sorted = None
        self._lm = None
        return self

    # -- inspection -----------------------------------------------------

    @property
    def field(self) -> Field:
        return self.ring.field

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def nterms(self) -> int:
        return len(self._terms)

    def terms(self) -> list:
        """``[(monomial, raw coefficient), ...]`` in strictly descending order."""
        if self._sorted is None:
            rkey = self.ring.order.rkey
            self._sorted = sorted(self._terms.items(), key=lambda t: rkey(t[0]))
        return self._sorted

    def monomials(self) -> list:
        return [m for m, _ in self.terms()]

    def coefficient(self, m):
        return self.ring.field.element(self._terms.get(tuple(m), self.ring.field.zero))

    def as_dict(self) -> dict:
        return dict(self._terms)

    def lead_monomial(self):
        if self._lm is None:
            if not self._terms:
                raise ZeroPolynomial("zero polynomial has no lead term")
            if self._sorted is not None:
                self._lm = self._sorted[0][0]
            else:
                key = self.ring.order.key
                self._lm = max(self._terms, key=key)
        return self._lm

    def lead_coeff_raw(self):
        return self._terms[self.lead_monomial()]

    def lead_coeff(self):
        return self.ring.field.element(self.lead_coeff_raw())

    def lead_term(self):
        """``(coefficient, monomial)`` of the greatest term."""
        m = self.lead_monomial()
        return self.ring.field.element(self._terms[m]), m

    def total_degree(self) -> int:
        """Maximum total degree of a term; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    degree = total_degree

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def is_monic(self) -> bool:
        return bool(self._terms) and self.lead_coeff_raw() == 1

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self.ring.check(other.ring)
            return other
        if isinstance(other, (int, Fraction, FpElement)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        mod = self.ring.field.mod
        res = dict(self._terms)
        for m, c in other._terms.items():
            v = res.get(m)
            if v is None:
                res[m] = c
            else:
                v = v + c
                if mod:
                    v %= mod
                if v:
                    res[m] = v
                else:
                    del res[m]
        return Polynomial._raw(self.ring, res)

    __radd__ = __add__

    def __neg__(self):
        mod = self.ring.field.mod
        if mod:
            return Polynomial._raw(self.ring, {m: mod - c for m, c in self._terms.items()})
        return Polynomial._raw(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FpElement)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._terms or not other._terms:
            return self.ring.zero()
        if self.total_degree() + other.total_degree() > MAX_EXPONENT:
            raise ExponentOverflow("product degree exceeds exponent limit")
        mod = self.ring.field.mod
        res = {}
        get = res.get
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(map(add, m1, m2))
                res[m] = get(m, 0) + c1 * c2
        if mod:
            res = {m: c % mod for m, c in res.items() if c % mod}
        else:
            res = {m: c for m, c in res.items() if c}
        return Polynomial._raw(self.ring, res)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative int")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c) -> "Polynomial":
        """Multiply by a field scalar."""
        c = self.ring.field.convert(c)
        if not c:
            return self.ring.zero()
        mod = self.ring.field.mod
        if mod:
            return Polynomial._raw(self.ring, {m: v * c % mod for m, v in self._terms.items()})
        return Polynomial._raw(self.ring, {m: v * c for m, v in self._terms.items()})

    def mul_term(self, mono, c=None) -> "Polynomial":
        """Multiply by the term ``c * x^mono`` (``c`` raw, default 1)."""
        mod = self.ring.field.mod
        if c is None:
            return Polynomial._raw(
                self.ring, {tuple(map(add, m, mono)): v for m, v in self._terms.items()}
            )
        if not c:
            return self.ring.zero()
        if mod:
            return Polynomial._raw(
                self.ring, {tuple(map(add, m, mono)): v * c % mod for m, v in self._terms.items()}
            )
        return Polynomial._raw(
            self.ring, {tuple(map(add, m, mono)): v * c for m, v in self._terms.items()}
        )

    def monic(self) -> "Polynomial":
        """Scale so the lead coefficient is 1; ZeroPolynomial on zero."""
        lc = self.lead_coeff_raw()
        if lc == 1:
            return self
        return self.scale(self.ring.field.inv(lc))

    def with_ring(self, ring: Ring) -> "Polynomial":
        """Same terms, different (compatible arity) ring; used for order changes."""
        if ring.arity != self.ring.arity:
            raise ArityMismatch(f"arity {self.ring.arity} vs {ring.arity}")
        if ring.field is not self.ring.field:
            raise IncompatibleRings("different coefficient fields")
        return Polynomial._raw(ring, self._terms)

    def lift_map(self, assign, zero=None):
        return lift_map(assign, self, zero)

    # -- comparison and display ----------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Fraction, FpElement)):
            try:
                return self._terms == self.ring.constant(other)._terms
            except TypeError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.ring.arity, frozenset(self._terms.items())))

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r}, {self.ring.header()})"


def format_monomial(m, names) -> str:
    parts = []
    for e, name in zip(m, names):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(f: Polynomial) -> str:
    """Render terms in descending order, ``^`` for powers, ``0`` for zero."""
    if not f._terms:
        return "0"
    names = f.ring.variable_names
    fmt = f.ring.field.format
    out = []
    for i, (m, c) in enumerate(f.terms()):
        s = fmt(c)
        neg = s.startswith("-")
        if neg:
            s = s[1:]
        mono = format_monomial(m, names)
        if mono:
            body = mono if s == "1" else f"{s}*{mono}"
        else:
            body = s
        if i == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


class Ideal:
    """A finite ordered list of nonzero generators over one ring."""

    __slots__ = ("ring", "generators")

    def __init__(self, generators, ring: Ring | None = None):
        gens = tuple(generators)
        if ring is None:
            if not gens:
                raise ValueError("an empty ideal needs an explicit ring")
            ring = gens[0].ring
        for g in gens:
            ring.check(g.ring)
            if not g:
                raise ZeroPolynomial("ideal generators must be nonzero")
        self.ring = ring
        self.generators = gens

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __getitem__(self, i):
        return self.generators[i]

    def map(self, fn) -> "Ideal":
        gens = [fn(g) for g in self.generators]
        return Ideal(gens, gens[0].ring if gens else None)

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def __eq__(self, other):
        return isinstance(other, Ideal) and self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        return f"Ideal([{', '.join(map(str, self.generators))}])"


def as_ideal(obj) -> Ideal:
    return obj if isinstance(obj, Ideal) else Ideal(obj)


# -- casting --------------------------------------------------------------


def lift_map(assign, f: Polynomial, zero=None):
    """Evaluate ``f`` under the ring homomorphism sending ``x_i`` to ``assign[i]``.

    ``assign`` is a sequence, a mapping or a callable on variable indices.  Coefficients
    enter the target as public field elements (``Fraction`` or
    :class:`FpElement`), so the target must accept those as scalars.
    """
    n = f.ring.arity
    if callable(assign):
        images = [assign(i) for i in range(n)]
    elif isinstance(assign, Mapping):
        missing = [i for i in range(n) if i not in assign]
        if missing:
            raise ArityMismatch(f"no image for variables {missing}")
        images = [assign[i] for i in range(n)]
    else:
        images = list(assign)
        if len(images) != n:
            raise ArityMismatch(f"{len(images)} images for {n} variables")
    element = f.ring.field.element
    powers = [{} for _ in range(n)]

    def power(i, e):
        cache = powers[i]
        if e not in cache:
            cache[e] = images[i] ** e
        return cache[e]

    total = zero
    for m, c in f.terms():
        term = element(c)
        for i, e in enumerate(m):
            if e:
                term = term * power(i, e)
        total = term if total is None else total + term
    if total is None:
        return element(0) if zero is None else zero
    return total


def conv_poly(f: Polynomial, target: Ring) -> Polynomial:
    """Re-tag ``f`` with a ring of identical arity, order and field."""
    if target is f.ring or target == f.ring:
        return f
    if target.arity != f.ring.arity or target.order != f.ring.order or target.field is not f.ring.field:
        raise IncompatibleRings(f"cannot convert {f.ring} into {target}")
    return Polynomial._raw(target, f._terms)


def inj_vars_offset(k: int, f: Polynomial, target: Ring) -> Polynomial:
    """Send variable ``i`` of ``f`` to variable ``i + k`` of ``target``."""
    n, m = f.ring.arity, target.arity
    if target.field is not f.ring.field:
        raise IncompatibleRings("different coefficient fields")
    if k < 0 or k + n > m:
        raise ArityOverflow(f"offset {k} + arity {n} exceeds target arity {m}")
    if k == 0 and (target is f.ring or target == f.ring):
        return f
    pre, post = (0,) * k, (0,) * (m - n - k)
    return Polynomial._raw(target, {pre + mono + post: c for mono, c in f._terms.items()})


def inj_vars(f: Polynomial, target: Ring) -> Polynomial:
    return inj_vars_offset(0, f, target)


def inj_vars_at_end(f: Polynomial, target: Ring) -> Polynomial:
    return inj_vars_offset(target.arity - f.ring.arity, f, target)


def remap_variables(f: Polynomial, target: Ring) -> Polynomial:
    """Send each variable to the same-named variable of ``target``."""
    if f.ring.names is None or target.names is None:
        raise NoNames("both rings need variable names")
    if target.field is not f.ring.field:
        raise IncompatibleRings("different coefficient fields")
    index = {name: j for j, name in enumerate(target.names)}
    try:
        where = [index[name] for name in f.ring.names]
    except KeyError as exc:
        raise NameNotFound(f"variable {exc.args[0]!r} not in target ring") from None
    m = target.arity
    out = {}
    for mono, c in f._terms.items():
        e = [0] * m
        for i, j in enumerate(where):
            e[j] = mono[i]
        out[tuple(e)] = c
    return Polynomial._raw(target, out)


# -- homogenisation -------------------------------------------------------


@lru_cache(maxsize=256)
def homogenised_ring(ring: Ring) -> Ring:
    names = None
    if ring.names is not None:
        h = "h"
        while h in ring.names:
            h += "_"
        names = ring.names + (h,)
    return Ring(ring.arity + 1, HomogInduced(ring.order), ring.field, names, base=ring)


def is_homogeneous(f: Polynomial) -> bool:
    return f.is_homogeneous()


def homogenise(f: Polynomial) -> Polynomial:
    """Multiply each term by ``h^(D - deg)``, ``h`` appended as the last variable."""
    ring = homogenised_ring(f.ring)
    d = f.total_degree()
    if d > MAX_EXPONENT:
        raise ExponentOverflow(f"homogenising exponent exceeds {MAX_EXPONENT}")
    return Polynomial._raw(ring, {m + (d - sum(m),): c for m, c in f._terms.items()})


def unhomogenise(f: Polynomial) -> Polynomial:
    """Set the homogenising variable to 1."""
    base = f.ring.base
    if base is None:
        raise NotHomogenisedRing("polynomial does not live in a homogenised ring")
    mod = base.field.mod
    out = {}
    for m, c in f._terms.items():
        k = m[:-1]
        v = out.get(k)
        if v is None:
            out[k] = c
        else:
            v = v + c
            if mod:
                v %= mod
            if v:
                out[k] = v
            else:
                del out[k]
    return Polynomial._raw(base, out)
