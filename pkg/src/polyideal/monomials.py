"""Exponent vectors and monomial orders.

A monomial is a plain tuple of non-negative ints.  Orders are small value
objects exposing two sort keys: ``key(m)`` increases with the order and
``rkey(m)`` decreases with it (so a min-heap on ``rkey`` pops the greatest
monomial first).  Both keys are tuples, cheap to build and compare.
"""

from __future__ import annotations

import re
from operator import add, le, sub

from .errors import ArityMismatch, ExponentOverflow, NotDivisible, ParseError

Monomial = tuple

MAX_EXPONENT = 2**32 - 1

LT, EQ, GT = -1, 0, 1


def total_degree(m: Monomial) -> int:
    return sum(m)


def one(n: int) -> Monomial:
    return (0,) * n


def variable(i: int, n: int) -> Monomial:
    return tuple(1 if k == i else 0 for k in range(n))


def _check_arity(a, b):
    if len(a) != len(b):
        raise ArityMismatch(f"monomials of arity {len(a)} and {len(b)}")


def mul_monomial(a: Monomial, b: Monomial) -> Monomial:
    _check_arity(a, b)
    m = tuple(map(add, a, b))
    if m and max(m) > MAX_EXPONENT:
        raise ExponentOverflow(f"exponent exceeds {MAX_EXPONENT}")
    return m


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    """True iff ``a`` divides ``b``."""
    _check_arity(a, b)
    return all(map(le, a, b))


def div_monomial(b: Monomial, a: Monomial) -> Monomial:
    """The quotient ``b / a``; NotDivisible unless ``a`` divides ``b``."""
    _check_arity(a, b)
    q = tuple(map(sub, b, a))
    if any(e < 0 for e in q):
        raise NotDivisible(f"{a} does not divide {b}")
    return q


def lcm_monomial(a: Monomial, b: Monomial) -> Monomial:
    _check_arity(a, b)
    return tuple(map(max, a, b))


def coprime(a: Monomial, b: Monomial) -> bool:
    return not any(x and y for x, y in zip(a, b))


class MonomialOrder:
    """Base class.  Subclasses implement ``key`` and ``rkey``."""

    __slots__ = ()

    def key(self, m):
        raise NotImplementedError

    def rkey(self, m):
        raise NotImplementedError

    def compare(self, a: Monomial, b: Monomial) -> int:
        _check_arity(a, b)
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __eq__(self, other):
        return type(self) is type(other) and self._ident() == other._ident()

    def __hash__(self):
        return hash((type(self).__name__, self._ident()))

    def _ident(self):
        return ()

    def __reduce__(self):
        return (type(self), self._ident())


class Lex(MonomialOrder):
    """Lexicographic order: the leftmost differing exponent decides."""

    __slots__ = ()

    def key(self, m):
        return m

    def rkey(self, m):
        return tuple([-e for e in m])

    def __repr__(self):
        return "lex"


class Grevlex(MonomialOrder):
    """Degree first, then the rightmost differing exponent; smaller wins."""

    __slots__ = ()

    def key(self, m):
        return (sum(m),) + tuple([-e for e in reversed(m)])

    def rkey(self, m):
        return (-sum(m),) + m[::-1]

    def __repr__(self):
        return "grevlex"


class Graded(MonomialOrder):
    """Total degree, ties broken by ``base``.  ``Graded(Graded(o)) is Graded(o)``."""

    __slots__ = ("base",)

    def __new__(cls, base: MonomialOrder):
        if isinstance(base, Graded):
            return base
        obj = super().__new__(cls)
        obj.base = base
        return obj

    def __init__(self, base):
        pass

    def key(self, m):
        return (sum(m), self.base.key(m))

    def rkey(self, m):
        return (-sum(m), self.base.rkey(m))

    def _ident(self):
        return (self.base,)

    def __repr__(self):
        return f"graded({self.base!r})"


class HomogInduced(MonomialOrder):
    """Order on a homogenised ring whose homogenising variable comes last.

    The original variables are compared with ``base``; on a tie the
    monomial with the larger power of the homogenising variable is greater,
    which keeps 1 the minimum.  On homogeneous polynomials only the first
    comparison ever matters.
    """

    __slots__ = ("base",)

    def __init__(self, base: MonomialOrder):
        self.base = base

    def key(self, m):
        return (self.base.key(m[:-1]), m[-1])

    def rkey(self, m):
        return (self.base.rkey(m[:-1]), -m[-1])

    def _ident(self):
        return (self.base,)

    def __repr__(self):
        return f"homog({self.base!r})"


LEX = Lex()
GREVLEX = Grevlex()


def graded(order: MonomialOrder) -> MonomialOrder:
    return Graded(order)


def compare_monomials(order: MonomialOrder, a: Monomial, b: Monomial) -> int:
    """Return LT (-1), EQ (0) or GT (1)."""
    return order.compare(a, b)


def parse_order(text: str) -> MonomialOrder:
    """Parse ``lex``, ``grevlex``, ``grlex``, ``graded(<o>)``, ``homog(<o>)``."""
    s = text.strip().lower().replace(" ", "")

    def parse(i):
        m = re.match(r"[a-z]+", s[i:])
        if not m:
            raise ParseError(f"bad monomial order {text!r}", 1, i + 1)
        name, i = m.group(), i + m.end()
        if name in ("lex", "plex"):
            return LEX, i
        if name in ("grevlex", "degrevlex", "drl"):
            return GREVLEX, i
        if name in ("grlex", "deglex"):
            return Graded(LEX), i
        if name in ("graded", "homog"):
            if i >= len(s) or s[i] != "(":
                raise ParseError(f"expected '(' after {name}", 1, i + 1)
            inner, i = parse(i + 1)
            if i >= len(s) or s[i] != ")":
                raise ParseError("expected ')'", 1, i + 1)
            return (Graded(inner) if name == "graded" else HomogInduced(inner)), i + 1
        raise ParseError(f"unknown monomial order {name!r}", 1, i - len(name) + 1)

    order, end = parse(0)
    if end != len(s):
        raise ParseError(f"trailing text in monomial order {text!r}", 1, end + 1)
    return order
