"""Property-based checking: seeded generators, a property registry with
shrinking and per-case time limits, and an external-oracle comparison.

Every case derives its own seed from the configuration seed and the case
index, so a failure report is enough to replay the exact input::

    >>> report = run_property("prop_passesSTest_f4", GenConfig(seed=7), count=20)
    >>> report.passed
    True
"""

from __future__ import annotations

import os
import random
import shlex
import subprocess
import sys
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable

from .algorithms import compute_gb
from .errors import OracleUnavailable, ParseError, ProtocolError, Timeout
from .fields import GF, Field
from .groebner import (
    Reducers,
    _reduce,
    buchberger_with_cofactors,
    dot,
    ideal_membership,
    is_groebner_basis,
    reduce_gb,
)
from .monomials import GREVLEX, MonomialOrder
from .polynomials import (
    Ideal,
    Polynomial,
    Ring,
    homogenise,
    inj_vars_offset,
    remap_variables,
    unhomogenise,
)
from .text import format_ideal, parse_polynomial, parse_ring_header
from .timeout import time_limit

__all__ = [
    "GenConfig",
    "gen_element",
    "gen_monomial",
    "gen_polynomial",
    "gen_ideal",
    "Property",
    "PROPERTIES",
    "register",
    "run_property",
    "run_all",
    "Report",
    "Counterexample",
    "OracleReport",
    "oracle_compare",
    "configured_oracle",
    "loopback_oracle",
]

_SEED_SPACE = 2**64


def _default_names(n):
    return tuple("xyzwuv"[:n]) if n <= 6 else tuple(f"x{i}" for i in range(n))


@dataclass(frozen=True)
class GenConfig:
    """Bounds for the random generators; equal configs generate equal data."""

    arity: int = 3
    max_degree: int = 4
    max_terms: int = 4
    max_generators: int = 4
    field: Field = field(default_factory=GF)
    seed: int = 0
    order: MonomialOrder = GREVLEX

    def __post_init__(self):
        for name in ("arity", "max_degree", "max_terms", "max_generators"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be at least 1")
        if not 0 <= self.seed < _SEED_SPACE:
            raise ValueError("seed must fit in 64 bits")

    def ring(self) -> Ring:
        return Ring(self.arity, self.order, self.field, _default_names(self.arity))

    def rng(self) -> random.Random:
        return random.Random(self.seed)

    def for_case(self, i: int) -> "GenConfig":
        return replace(self, seed=case_seed(self.seed, i))


def case_seed(seed: int, i: int) -> int:
    return random.Random(f"{seed}/{i}").getrandbits(64)


def gen_element(rng: random.Random, fld: Field):
    """A nonzero raw element of ``fld``."""
    if fld.mod:
        return rng.randrange(1, fld.mod)
    return Fraction(rng.choice((-1, 1)) * rng.randint(1, 9), rng.randint(1, 5))


def gen_monomial(rng: random.Random, arity: int, max_degree: int) -> tuple:
    exps = [0] * arity
    for _ in range(rng.randint(0, max_degree)):
        exps[rng.randrange(arity)] += 1
    return tuple(exps)


def gen_polynomial(cfg: GenConfig, rng: random.Random | None = None, ring: Ring | None = None) -> Polynomial:
    """A nonzero polynomial with at most ``max_terms`` terms of degree at most ``max_degree``."""
    rng = rng or cfg.rng()
    ring = ring or cfg.ring()
    terms = {}
    for _ in range(rng.randint(1, cfg.max_terms)):
        terms[gen_monomial(rng, ring.arity, cfg.max_degree)] = gen_element(rng, ring.field)
    return Polynomial._raw(ring, terms)


def gen_ideal(cfg: GenConfig, rng: random.Random | None = None) -> Ideal:
    rng = rng or cfg.rng()
    ring = cfg.ring()
    return Ideal([gen_polynomial(cfg, rng, ring) for _ in range(rng.randint(1, cfg.max_generators))], ring)


# -- property registry --------------------------------------------------


def _describe_ideal(cfg: GenConfig) -> str:
    ideal = gen_ideal(cfg)
    return format_ideal(ideal.ring, ideal.generators).rstrip()


@dataclass(frozen=True)
class Property:
    name: str
    check: Callable[[GenConfig], object]
    describe: Callable[[GenConfig], str] = _describe_ideal

    def holds(self, cfg: GenConfig) -> bool:
        return self.check(cfg) is not False


PROPERTIES: dict[str, Property] = {}


def register(name: str, describe=None):
    def deco(fn):
        PROPERTIES[name] = Property(name, fn, describe or _describe_ideal)
        return fn

    return deco


def _describe_element(cfg):
    return f"q = {cfg.field.format(gen_element(cfg.rng(), cfg.field))} in {cfg.field.name}"


@register("prop_division", describe=_describe_element)
def prop_division(cfg: GenConfig):
    """Division-ring laws for a random nonzero element and a random element."""
    fld = cfg.field
    rng = cfg.rng()
    q = gen_element(rng, fld)
    r = fld.convert(rng.randrange(-50, 50))
    one = fld.one
    inv = fld.inv(q)
    return (
        fld.mul(inv, q) == one
        and fld.mul(q, inv) == one
        and fld.mul(q, one) == q
        and fld.mul(one, q) == q
        and fld.mul(fld.div(r, q), q) == r
        and fld.add(q, fld.neg(q)) == fld.zero
    )


def _stest(algo, **kw):
    def prop(cfg):
        return is_groebner_basis(compute_gb(algo, gen_ideal(cfg), **kw))

    prop.__name__ = f"prop_passesSTest_{algo}"
    return prop


for _algo in ("buchberger", "f4", "f5", "hilb", "dbyd"):
    register(f"prop_passesSTest_{_algo}")(_stest(_algo))
register("prop_passesSTest_f4_sparse")(_stest("f4", backend="sparse"))


@register("prop_member_cofactors")
def prop_member_cofactors(cfg: GenConfig):
    """Tracked cofactors re-expand exactly, and every generator is a verified member."""
    ideal = gen_ideal(cfg)
    gens = ideal.generators
    for g, cof in buchberger_with_cofactors(ideal):
        if dot(gens, cof) != g:
            return False
    for f in gens:
        ok, cs = ideal_membership(f, ideal)
        if not ok or dot(gens, cs) != f:
            return False
    return True


CROSS_VARIANTS = (
    ("buchberger", {}),
    ("f4", {"backend": "dense"}),
    ("f4", {"backend": "sparse"}),
    ("f5", {}),
    ("hilb", {}),
    ("dbyd", {}),
)


@register("prop_cross_algorithm")
def prop_cross_algorithm(cfg: GenConfig):
    """All algorithms agree on the reduced basis."""
    ideal = gen_ideal(cfg)
    results = [reduce_gb(compute_gb(algo, ideal, **kw)) for algo, kw in CROSS_VARIANTS]
    return all(r == results[0] for r in results[1:])


def _describe_poly(cfg):
    return str(gen_polynomial(cfg))


@register("prop_homog_roundtrip", describe=_describe_poly)
def prop_homog_roundtrip(cfg: GenConfig):
    f = gen_polynomial(cfg)
    h = homogenise(f)
    return h.is_homogeneous() and unhomogenise(h) == f


@register("prop_cast_homomorphism")
def prop_cast_homomorphism(cfg: GenConfig):
    """Variable injections and by-name remaps respect +, * and 1."""
    rng = cfg.rng()
    ring = cfg.ring()
    f = gen_polynomial(cfg, rng, ring)
    g = gen_polynomial(cfg, rng, ring)
    names = ring.names
    wide = Ring(ring.arity + 2, ring.order, ring.field, ("a",) + names + ("b",))
    shuffled = list(names) + ["c"]
    rng.shuffle(shuffled)
    renamed = Ring(len(shuffled), ring.order, ring.field, tuple(shuffled))
    k = rng.randint(0, 2)
    maps = [lambda p: inj_vars_offset(k, p, wide), lambda p: remap_variables(p, renamed)]
    for phi in maps:
        if phi(f + g) != phi(f) + phi(g) or phi(f * g) != phi(f) * phi(g):
            return False
        image = phi(ring.one())
        if image != image.ring.one():
            return False
    return True


# -- runner ---------------------------------------------------------------


@dataclass(frozen=True)
class Counterexample:
    case: int
    seed: int
    config: GenConfig
    message: str
    witness: str

    def __str__(self):
        return (
            f"case {self.case} (seed {self.seed}, degree<={self.config.max_degree}, "
            f"terms<={self.config.max_terms}, generators<={self.config.max_generators}): "
            f"{self.message}\n{self.witness}"
        )


@dataclass(frozen=True)
class Report:
    name: str
    cases: int
    passed: bool
    failure: Counterexample | None = None

    def __str__(self):
        if self.passed:
            return f"{self.name}: OK, passed {self.cases} tests"
        return f"{self.name}: FAILED after {self.cases} tests\n{self.failure}"


def _outcome(prop: Property, cfg: GenConfig, timeout):
    """``None`` when the case passes, otherwise a failure message."""
    try:
        with time_limit(timeout):
            ok = prop.holds(cfg)
    except Timeout:
        return f"timed out after {timeout:g} s"
    except Exception as exc:  # any crash is a counterexample too
        return f"raised {type(exc).__name__}: {exc}"
    return None if ok else "property is false"


def _shrink(prop: Property, cfg: GenConfig, message: str, timeout):
    for attr in ("max_degree", "max_terms", "max_generators"):
        while getattr(cfg, attr) > 1:
            smaller = replace(cfg, **{attr: getattr(cfg, attr) - 1})
            msg = _outcome(prop, smaller, timeout)
            if msg is None:
                break
            cfg, message = smaller, msg
    return cfg, message


def run_property(prop, cfg: GenConfig | None = None, count: int = 100, timeout: float | None = 10.0) -> Report:
    """Check ``prop`` (a registered name, :class:`Property` or callable) on ``count`` cases."""
    cfg = cfg or GenConfig()
    if isinstance(prop, str):
        prop = PROPERTIES[prop]
    elif not isinstance(prop, Property):
        prop = Property(getattr(prop, "__name__", "property"), prop)
    for i in range(count):
        case_cfg = cfg.for_case(i)
        msg = _outcome(prop, case_cfg, timeout)
        if msg is None:
            continue
        small, msg = _shrink(prop, case_cfg, msg, timeout)
        try:
            witness = prop.describe(small)
        except Exception as exc:
            witness = f"<could not describe input: {exc}>"
        return Report(prop.name, i + 1, False, Counterexample(i, small.seed, small, msg, witness))
    return Report(prop.name, count, True)


def run_all(cfg: GenConfig | None = None, count: int = 100, names=None, timeout: float | None = 10.0):
    return [run_property(n, cfg, count, timeout) for n in (names or PROPERTIES)]


# -- external oracle --------------------------------------------------------


@dataclass(frozen=True)
class OracleReport:
    agree: bool
    ours: list
    theirs: list
    ours_not_in_theirs: list = field(default_factory=list)
    theirs_not_in_ours: list = field(default_factory=list)


ORACLE_ENV = "POLYIDEAL_ORACLE"


def configured_oracle():
    """Command from the ``POLYIDEAL_ORACLE`` environment variable, or ``None``."""
    cmd = os.environ.get(ORACLE_ENV)
    return shlex.split(cmd) if cmd else None


def loopback_oracle(algo: str = "buchberger"):
    """Our own command-line ``gb`` run in a subprocess."""
    return [sys.executable, "-m", "polyideal", "gb", "--algo", algo]


def _parse_oracle_output(text: str, ring: Ring):
    polys = []
    header_seen = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip().rstrip(",")
        if not body:
            continue
        if not header_seen and not polys and body.lower().startswith("ring"):
            header_seen = True
            theirs = parse_ring_header(body, lineno)
            if theirs.arity != ring.arity or theirs.field != ring.field:
                raise ProtocolError(f"oracle answered in a different ring: {body}")
            continue
        polys.append(parse_polynomial(body, ring, lineno))
    return polys


def oracle_compare(ideal, command=None, timeout: float = 60.0, algo: str = "buchberger") -> OracleReport:
    """Compare our reduced basis with an external command's.

    The command reads a ring header and one generator per line on stdin
    and answers with its basis in the same grammar (an optional header
    line first).  The bases agree when each side's elements all reduce to
    zero modulo the other side.
    """
    if command is None:
        command = configured_oracle()
    if not command:
        raise OracleUnavailable(f"no oracle configured (set {ORACLE_ENV})")
    if isinstance(command, str):
        command = shlex.split(command)
    ring = ideal.ring
    request = format_ideal(ring, ideal.generators)
    try:
        proc = subprocess.run(command, input=request, capture_output=True, text=True, timeout=timeout)
    except (FileNotFoundError, PermissionError) as exc:
        raise OracleUnavailable(f"cannot run oracle {command[0]!r}: {exc}") from None
    except subprocess.TimeoutExpired:
        raise ProtocolError(f"oracle gave no answer within {timeout:g} s") from None
    if proc.returncode != 0:
        raise ProtocolError(f"oracle exited with status {proc.returncode}: {proc.stderr.strip()}")
    try:
        theirs = _parse_oracle_output(proc.stdout, ring)
    except ParseError as exc:
        raise ProtocolError(f"unreadable oracle answer: {exc}") from None
    ours = reduce_gb(compute_gb(algo, ideal))
    theirs = [p for p in theirs if p]

    def not_in(xs, basis):
        if not basis:
            return list(xs)
        red = Reducers(ring, basis)
        return [p for p in xs if _reduce(p._terms, red, ring)]

    a, b = not_in(ours, theirs), not_in(theirs, ours)
    return OracleReport(not a and not b, ours, theirs, a, b)
