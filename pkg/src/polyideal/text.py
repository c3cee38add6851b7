"""Text formats: polynomial grammar, ring header lines and ideal files.

Grammar (whitespace-insensitive)::

    poly := ['+'|'-'] term (('+'|'-') term)*
    term := coeff? ('*'? var ('^' nat)?)*
    coeff := nat ('/' nat)?

A ring header reads ``ring <field> [<names>] <order>``, e.g.
``ring Q [x,y,z] grevlex`` or ``ring fp:32003 [w,x,y,z] lex``.
"""

from __future__ import annotations

import re

from .errors import DuplicateVariable, ParseError, UnknownVariable
from .fields import parse_field
from .monomials import parse_order
from .polynomials import Polynomial, Ring

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<pow>\*\*|\^)
  | (?P<op>[-+*/])
    """,
    re.X,
)


def _tokens(text, line):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos + 1)
        kind = m.lastgroup
        if kind != "ws":
            out.append((kind, m.group(), pos + 1))
        pos = m.end()
    out.append(("end", "", len(text) + 1))
    return out


def parse_polynomial(text: str, ring: Ring, line: int = 1) -> Polynomial:
    """Parse ``text`` into a polynomial of ``ring``.

    Errors carry 1-based line/column; ``UnknownVariable`` for names outside
    the ring.
    """
    toks = _tokens(text, line)
    index = {name: i for i, name in enumerate(ring.variable_names)}
    field = ring.field
    mod = field.mod
    n = ring.arity
    i = 0
    terms: dict = {}

    def peek():
        return toks[i]

    def expect_num():
        nonlocal i
        kind, val, col = toks[i]
        if kind != "num":
            raise ParseError(f"expected a number, found {val or 'end of input'!r}", line, col)
        i += 1
        return int(val)

    if peek()[0] == "end":
        raise ParseError("empty polynomial", line, 1)

    first = True
    while True:
        kind, val, col = peek()
        sign = 1
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
        elif not first:
            raise ParseError(f"expected '+' or '-', found {val!r}", line, col)
        first = False

        # coefficient
        coeff = None
        kind, val, col = peek()
        if kind == "num":
            num = expect_num()
            den = 1
            if peek()[:2] == ("op", "/"):
                i += 1
                den = expect_num()
                if den == 0:
                    raise ParseError("zero denominator", line, toks[i - 1][2])
            coeff = field.parse(f"{num}/{den}" if den != 1 else str(num))
        exps = [0] * n
        have_var = False
        while True:
            kind, val, col = peek()
            if kind == "op" and val == "*":
                if coeff is None and not have_var:
                    raise ParseError("term cannot start with '*'", line, col)
                nxt = toks[i + 1]
                if nxt[0] != "name":
                    raise ParseError(f"expected a variable after '*', found {nxt[1]!r}", line, nxt[2])
                i += 1
                continue
            if kind != "name":
                break
            if val not in index:
                raise UnknownVariable(f"{val} is not listed as a variable", line, col)
            i += 1
            e = 1
            if peek()[0] == "pow":
                i += 1
                e = expect_num()
            exps[index[val]] += e
            have_var = True
        if coeff is None and not have_var:
            kind, val, col = peek()
            raise ParseError(f"expected a term, found {val or 'end of input'!r}", line, col)
        if coeff is None:
            coeff = field.one
        if sign < 0:
            coeff = field.neg(coeff)
        m = tuple(exps)
        v = terms.get(m, 0) + coeff
        if mod:
            v %= mod
        terms[m] = v
        if peek()[0] == "end":
            break
    return Polynomial._raw(ring, {m: c for m, c in terms.items() if c})


_HEADER = re.compile(r"^\s*ring\s+(?P<field>\S+)\s*\[(?P<names>[^\]]*)\]\s*(?P<order>.*?)\s*$", re.I)


def parse_ring_header(text: str, line: int = 1) -> Ring:
    m = _HEADER.match(text)
    if m is None:
        raise ParseError("expected 'ring <field> [<names>] <order>'", line, 1)
    field = parse_field(m.group("field"))
    raw = [s.strip() for s in m.group("names").split(",")]
    names = [s for s in raw if s]
    if len(names) != len(raw) and names:
        raise ParseError("empty variable name", line, m.start("names") + 1)
    for name in names:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
            raise ParseError(f"bad variable name {name!r}", line, m.start("names") + 1)
    seen = set()
    for name in names:
        if name in seen:
            raise DuplicateVariable(f"the variable {name!r} occurs twice", line, m.start("names") + 1)
        seen.add(name)
    order_text = m.group("order") or "grevlex"
    try:
        order = parse_order(order_text)
    except ParseError as exc:
        raise ParseError(exc.message, line, m.start("order") + exc.column) from None
    return Ring(len(names), order, field, tuple(names))


def format_ideal(ring: Ring, polys) -> str:
    """Header line plus one polynomial per line."""
    return "\n".join([ring.header(), *(str(p) for p in polys)]) + "\n"


def parse_ideal_text(text: str, ring: Ring | None = None):
    """Parse a header (unless ``ring`` is given) followed by one polynomial per line.

    Blank lines and ``#`` comments are skipped; a trailing comma on a line
    is ignored.  Returns ``(ring, [Polynomial, ...])``.
    """
    polys = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].rstrip()
        if not body.strip():
            continue
        if ring is None:
            ring = parse_ring_header(body, lineno)
            continue
        if body.endswith(","):
            body = body[:-1]
        polys.append(parse_polynomial(body, ring, lineno))
    if ring is None:
        raise ParseError("missing ring header", 1, 1)
    return ring, polys
