"""The ten acceptance criteria, one test each.

Every test records a single PASS/FAIL line (shown in the terminal summary,
or inline with ``pytest -s``) and then asserts on the same outcome.
"""

import random
import time
from contextlib import contextmanager
from itertools import product

import pytest

from polyideal import (
    GF,
    GREVLEX,
    LEX,
    QQ,
    HPS,
    Graded,
    calc_gb_via_homog,
    conv,
    dot,
    f5,
    hilbert_driven_gb,
    hilbert_numerator,
    homogenise,
    ideal_membership,
    is_groebner_basis,
    reduce_gb,
    taylor_coeffs,
    unhomogenise,
)
from polyideal.algorithms import compute_gb
from polyideal.benchmarks import benchmark_ideal
from polyideal.cli import BENCH_ROWS, bench
from polyideal.groebner import reduce_poly
from polyideal.matrices import gauss_reduction
from polyideal.verify import GenConfig, gen_ideal, gen_polynomial

from acceptance_log import record
from oracles import F, cauchy, grevlex_cmp, in_row_space, lex_cmp, minor_rank, monomials_upto, standard_monomials_count

FP = GF(32003)

# the algorithm variants whose reduced bases must coincide
VARIANTS = (
    ("buchberger", lambda I: compute_gb("buchberger", I)),
    ("f4/dense", lambda I: compute_gb("f4", I, backend="dense")),
    ("f4/sparse", lambda I: compute_gb("f4", I, backend="sparse")),
    ("f5", lambda I: compute_gb("f5", I)),
    ("hilb via homog", lambda I: calc_gb_via_homog(hilbert_driven_gb, I)),
)


@contextmanager
def criterion(number, title):
    """Record FAIL if the body raises; the body calls ``done`` with its verdict."""
    state = {"ok": None, "detail": ""}

    def done(ok, detail=""):
        state.update(ok=bool(ok), detail=detail)

    try:
        yield done
    except Exception as exc:
        record(number, title, False, f"{type(exc).__name__}: {exc}")
        raise
    record(number, title, state["ok"], state["detail"])
    assert state["ok"], state["detail"]


def random_ideals():
    """100 ideals over GF(32003) and 25 over Q, arity cycling through 1..3."""
    out = []
    for i in range(100):
        cfg = GenConfig(arity=1 + i % 3, field=FP, seed=2024).for_case(i)
        out.append(("fp", i, gen_ideal(cfg)))
    for i in range(25):
        cfg = GenConfig(arity=1 + i % 3, field=QQ, seed=2025).for_case(i)
        out.append(("q", i, gen_ideal(cfg)))
    return out


@pytest.fixture(scope="module")
def computed():
    """Raw and reduced bases of every variant on every random ideal, plus timing."""
    start = time.perf_counter()
    rows = []
    for fld, i, ideal in random_ideals():
        raw = {name: run(ideal) for name, run in VARIANTS}
        rows.append((fld, i, ideal, raw, {name: reduce_gb(b) for name, b in raw.items()}))
    return rows, time.perf_counter() - start


def test_criterion_01_cross_algorithm_agreement(computed):
    with criterion(1, "reduced bases agree across buchberger, f4 dense/sparse, f5, hilbert-driven") as done:
        rows, elapsed = computed
        bad = [
            f"{fld}#{i}:{name}"
            for fld, i, _, _, red in rows
            for name, b in red.items()
            if b != red["buchberger"]
        ]
        n_fp = sum(1 for r in rows if r[0] == "fp")
        n_q = len(rows) - n_fp
        done(
            not bad and n_fp >= 100 and n_q >= 25 and elapsed < 600,
            f"{n_fp} GF(32003) + {n_q} Q ideals, {elapsed:.1f} s, mismatches: {bad[:5] or 'none'}",
        )


def test_criterion_02_s_test_everywhere(computed):
    with criterion(2, "every produced basis passes the S-test") as done:
        rows, _ = computed
        checked = 0
        failures = []
        for fld, i, _, raw, red in rows:
            for name in raw:
                for kind, basis in (("raw", raw[name]), ("reduced", red[name])):
                    checked += 1
                    if not is_groebner_basis(basis):
                        failures.append(f"{fld}#{i}:{name}:{kind}")
        for name in ("I1", "I2", "I3"):
            for order in ("lex", "grevlex") if name != "I3" else ("grevlex",):
                ideal = benchmark_ideal(name, order, FP)
                for algo in ("buchberger", "f5", "dbyd", "hilb"):
                    checked += 1
                    if not is_groebner_basis(compute_gb(algo, ideal)):
                        failures.append(f"{name}/{order}:{algo}")
        done(not failures, f"{checked} bases, failures: {failures[:5] or 'none'}")


def test_criterion_03_membership_cofactors(computed):
    with criterion(3, "generators reduce to zero and membership cofactors re-expand") as done:
        rows, _ = computed
        rng = random.Random(3)
        checked = 0
        failures = []
        for fld, i, ideal, _, red in rows:
            if fld != "fp":
                continue
            gb = red["buchberger"]
            gens = ideal.generators
            # the generators themselves, then one random combination of them
            combo = sum((g * gen_polynomial(GenConfig(arity=ideal.ring.arity, field=FP, max_degree=2, seed=rng.getrandbits(32)), ring=ideal.ring) for g in gens), ideal.ring.zero())
            for f in list(gens) + [combo]:
                checked += 1
                ok, cs = ideal_membership(f, ideal)
                if reduce_poly(f, gb) or not ok or dot(gens, cs) != f:
                    failures.append(f"#{i}")
        done(not failures and checked >= 200, f"{checked} members over 100 ideals, failures: {failures[:5] or 'none'}")


def test_criterion_04_f5_labels():
    with criterion(4, "F5 labels satisfy poly = sum of vector[i] * inputs[i]") as done:
        cases = [("I2", benchmark_ideal("I2", "grevlex", QQ))]
        cases += [(f"random#{i}", gen_ideal(GenConfig(field=FP, seed=404).for_case(i))) for i in range(25)]
        bad = []
        elements = 0
        for label, ideal in cases:
            inputs = [g.monic() for g in ideal.generators if g]
            for lp in f5(ideal):
                elements += 1
                if dot(inputs, lp.vector) != lp.poly:
                    bad.append(label)
        done(not bad, f"{len(cases)} ideals, {elements} labeled elements, inconsistent: {bad[:5] or 'none'}")


def random_monomial_ideal(rng):
    n = rng.randint(1, 3)
    gens = []
    for _ in range(rng.randint(1, 5)):
        d = rng.randint(0, 5)
        m = [0] * n
        for _ in range(d):
            m[rng.randrange(n)] += 1
        gens.append(tuple(m))
    return n, gens


def test_criterion_05_hilbert_numerator():
    with criterion(5, "Hilbert numerator fixture and Taylor coefficients against counting") as done:
        fixture = hilbert_numerator([(2, 0), (1, 1)])
        rng = random.Random(5)
        bad = []
        for case in range(50):
            n, gens = random_monomial_ideal(rng)
            got = taylor_coeffs(HPS(n, hilbert_numerator(gens)), 11)
            want = [standard_monomials_count(gens, n, d) for d in range(11)]
            if got != want:
                bad.append(case)
        done(fixture == (1, 0, -2, 1) and not bad, f"numerator {list(fixture)}, 50 ideals through degree 10, mismatches: {bad or 'none'}")


def test_criterion_06_conv():
    with criterion(6, "conv equals the Cauchy product; parallel and sequential identical") as done:
        rng = random.Random(6)
        bad = []
        for case in range(100):
            k = rng.randint(0, 32)
            xs = [rng.randint(-10**6, 10**6) for _ in range(rng.randint(0, 40))]
            ys = [rng.randint(-10**6, 10**6) for _ in range(rng.randint(0, 40))]
            seq = conv(xs, ys, k)
            par = conv(xs, ys, k, parallel=True)
            if seq != cauchy(xs, ys, k) or par != seq:
                bad.append(case)
        done(not bad, f"100 pairs, k <= 32, mismatches: {bad or 'none'}")


def _sign(x):
    return (x > 0) - (x < 0)


def test_criterion_07_orders():
    with criterion(7, "Lex/Grevlex match definitions; Graded(Graded(o)) equals Graded(o)") as done:
        monos = monomials_upto(3, 5)
        pairs = 0
        bad = []
        for a, b in product(monos, repeat=2):
            pairs += 1
            if _sign(LEX.compare(a, b)) != lex_cmp(a, b):
                bad.append(("lex", a, b))
            if _sign(GREVLEX.compare(a, b)) != grevlex_cmp(a, b):
                bad.append(("grevlex", a, b))
            for base in (LEX, GREVLEX):
                once, twice = Graded(base), Graded(Graded(base))
                if _sign(once.compare(a, b)) != _sign(twice.compare(a, b)):
                    bad.append(("graded", base, a, b))
        done(not bad, f"{pairs} pairs, mismatches: {bad[:3] or 'none'}")


def test_criterion_08_homogenisation():
    with criterion(8, "unhomogenise after homogenise is the identity; via-homog bases pass the S-test") as done:
        bad_round = []
        for i in range(200):
            cfg = GenConfig(arity=1 + i % 3, field=FP if i % 2 else QQ, seed=808).for_case(i)
            f = gen_polynomial(cfg)
            h = homogenise(f)
            if not h.is_homogeneous() or unhomogenise(h) != f:
                bad_round.append(i)
        found, i, bad_gb = 0, 0, []
        while found < 50:
            ideal = gen_ideal(GenConfig(field=FP, seed=809).for_case(i))
            i += 1
            if ideal.is_homogeneous():
                continue
            found += 1
            basis = calc_gb_via_homog(hilbert_driven_gb, ideal)
            if not (basis and basis[0].ring == ideal.ring and is_groebner_basis(basis)):
                bad_gb.append(i - 1)
        done(not bad_round and not bad_gb, f"200 round trips, 50 non-homogeneous ideals, failures: {(bad_round + bad_gb) or 'none'}")


def test_criterion_09_benchmark_termination():
    with criterion(9, "bench finishes B/DbyD/Hilb/F5 cells within 120 s each with S-tested output") as done:
        _, cells = bench(timeout=120.0)
        required = {"B", "DbyD", "Hilb", "F5"}
        expected = {label for label, _ in BENCH_ROWS}
        missing = [f"{c.row}:{c.ideal}/{c.order}={c.status}" for c in cells if c.row in required and c.status != "ok"]
        wrong = [f"{c.row}:{c.ideal}/{c.order}" for c in cells if c.status in ("wrong", "error")]
        slow = [c for c in cells if c.row in required and c.ms is not None and c.ms > 120_000]
        f4 = ", ".join(f"{c.ideal}/{c.order}={c.render()}" for c in cells if c.row == "F4")
        done(
            {c.row for c in cells} == expected and len(cells) == 25 and not missing and not wrong and not slow,
            f"{len(cells)} cells; not ok: {missing or 'none'}; wrong: {wrong or 'none'}; F4 {f4}",
        )


def random_matrix(rng, field):
    rows, cols = rng.randint(1, 8), rng.randint(1, 10)
    rank = rng.randint(0, min(rows, cols))
    if rng.random() < 0.5 or rank == 0:
        return [[field.convert(rng.randint(-5, 5)) for _ in range(cols)] for _ in range(rows)]
    # low rank on purpose: a product of random rows x rank and rank x cols factors
    a = [[rng.randint(-3, 3) for _ in range(rank)] for _ in range(rows)]
    b = [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rank)]
    return [[field.convert(sum(a[i][t] * b[t][j] for t in range(rank))) for j in range(cols)] for i in range(rows)]


def test_criterion_10_gaussian_elimination():
    with criterion(10, "RREF preserves row space, is idempotent, and rank matches minors") as done:
        rng = random.Random(10)
        bad = []
        total = 0
        for field in (QQ, FP):
            fld = F(field.mod)
            for case in range(100):
                total += 1
                m = random_matrix(rng, field)
                for backend in ("dense", "sparse"):
                    red = gauss_reduction(m, field, backend)
                    out = red.to_lists()
                    nonzero = [r for r in out if any(r)]
                    # forward inclusion plus rank equality of the stacked matrix gives equal spans
                    spans = all(in_row_space(r, nonzero, fld) for r in m)
                    stacked = gauss_reduction(m + nonzero, field, backend).rank() == len(nonzero)
                    idem = red.gauss_reduction() == red
                    rank_ok = red.rank() == minor_rank(m, fld)
                    if not (spans and stacked and idem and rank_ok):
                        bad.append((repr(field), case, backend))
        done(not bad, f"{total} matrices up to 8x10, both backends, failures: {bad[:5] or 'none'}")
