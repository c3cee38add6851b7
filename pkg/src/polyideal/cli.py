"""Command-line front end: ``gb``, ``hilbert``, ``bench`` and ``check``.

Input files hold a ring header followed by one polynomial per line::

    ring Q [x,y,z] grevlex
    x*y*z + 2*y - 3*z*x + 1
    x^2 - y

Exit status: 0 on success, 1 for an algorithm error or a failed check,
2 for unreadable input, 3 when ``--timeout`` expires.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field, replace

from .algorithms import ALGORITHMS, compute_gb
from .benchmarks import CELLS, benchmark_ideal
from .errors import AlgebraError, ParseError, Timeout
from .f5 import f5
from .fields import QQ, Field, parse_field
from .groebner import buchberger_with_cofactors, express, is_groebner_basis, reduce_gb, s_poly, reduce_poly
from .hilbert import HPS, format_int_poly, hilbert_numerator, taylor_coeffs
from .monomials import MonomialOrder, parse_order
from .polynomials import Ideal, Ring, format_monomial
from .text import format_ideal, parse_polynomial, parse_ring_header
from .timeout import time_limit

EXIT_OK, EXIT_ALGO, EXIT_PARSE, EXIT_TIMEOUT = 0, 1, 2, 3


@dataclass
class JobSpec:
    ring: Ring
    generators: list  # source texts, one per generator
    polys: list
    algorithm: str = "buchberger"
    backend: str = "dense"
    strategy: str = "normal"
    emit_cofactors: bool = False
    output: str = "text"
    extra: dict = field(default_factory=dict)

    def ideal(self) -> Ideal:
        return Ideal(self.polys, self.ring)


def parse_job(
    text: str,
    algorithm: str = "buchberger",
    order: MonomialOrder | str | None = None,
    field: Field | str | None = None,
    **flags,
) -> JobSpec:
    """Read a header line plus generators; ``order``/``field`` override the header."""
    lines = text.splitlines()
    ring = None
    gens, polys = [], []
    for lineno, raw in enumerate(lines, start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        if ring is None:
            ring = parse_ring_header(body, lineno)
            if isinstance(order, str):
                order = parse_order(order)
            if isinstance(field, str):
                field = parse_field(field)
            if order is not None:
                ring = replace(ring, order=order)
            if field is not None:
                ring = replace(ring, field=field)
            continue
        if body.endswith(","):
            body = body[:-1].rstrip()
        polys.append(parse_polynomial(body, ring, lineno))
        gens.append(body)
    if ring is None:
        raise ParseError("missing ring header", 1, 1)
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    return JobSpec(ring, gens, polys, algorithm, **flags)


def _signature_text(ring, sig):
    mono = format_monomial(sig.monomial, ring.variable_names)
    return f"e{sig.index}" if not any(sig.monomial) else f"{mono}*e{sig.index}"


def _solve(spec: JobSpec):
    """Reduced basis plus, if requested, per-element annotations."""
    polys = [p for p in spec.polys if p]
    if not polys:
        return [], None
    ideal = Ideal(polys, spec.ring)
    if spec.emit_cofactors and spec.algorithm == "f5":
        # f5 labels refer to the monic inputs; rescale to the originals
        labeled = f5(ideal)
        inv = [spec.ring.field.inv(p.lead_coeff_raw()) for p in polys]
        notes = []
        basis = []
        for lp in labeled:
            basis.append(lp.poly)
            notes.append(
                {
                    "signature": _signature_text(spec.ring, lp.signature),
                    "cofactors": [str(v.scale(c)) for v, c in zip(lp.vector, inv)],
                }
            )
        return basis, notes
    basis = reduce_gb(compute_gb(spec.algorithm, ideal, backend=spec.backend, strategy=spec.strategy))
    if not spec.emit_cofactors:
        return basis, None
    tracked = buchberger_with_cofactors(ideal)
    notes = [{"cofactors": [str(c) for c in express(g, tracked, polys)]} for g in basis]
    return basis, notes


def run_job(spec: JobSpec) -> str:
    """Compute and render the job's basis (text or JSON)."""
    start = time.perf_counter()
    basis, notes = _solve(spec)
    elapsed = (time.perf_counter() - start) * 1000
    if spec.output == "json":
        doc = {
            "ring": spec.ring.header(),
            "algorithm": spec.algorithm,
            "basis": [str(g) for g in basis],
            "elapsed_ms": round(elapsed, 3),
        }
        if notes is not None:
            doc["annotations"] = notes
        return json.dumps(doc, indent=2) + "\n"
    if notes is None:
        return format_ideal(spec.ring, basis)
    lines = [spec.ring.header()]
    for g, note in zip(basis, notes):
        tag = f" at {note['signature']}" if "signature" in note else ""
        lines.append(f"{g}  # cofactors{tag}: [{', '.join(note['cofactors'])}]")
    return "\n".join(lines) + "\n"


def hilbert_report(spec: JobSpec, terms: int = 10) -> str:
    start = time.perf_counter()
    polys = [p for p in spec.polys if p]
    basis = reduce_gb(compute_gb(spec.algorithm, Ideal(polys, spec.ring))) if polys else []
    n = spec.ring.arity
    series = HPS(n, hilbert_numerator([g.lead_monomial() for g in basis]))
    coeffs = taylor_coeffs(series, terms)
    elapsed = (time.perf_counter() - start) * 1000
    if spec.output == "json":
        doc = {
            "ring": spec.ring.header(),
            "algorithm": spec.algorithm,
            "arity": n,
            "numerator": list(series.numerator),
            "coefficients": coeffs,
            "elapsed_ms": round(elapsed, 3),
        }
        return json.dumps(doc, indent=2) + "\n"
    return (
        f"{spec.ring.header()}\n"
        f"numerator: {format_int_poly(series.numerator)}\n"
        f"series: {series}\n"
        f"coefficients: {' '.join(map(str, coeffs))}\n"
    )


# -- benchmark --------------------------------------------------------------

BENCH_ROWS = [("B", "buchberger"), ("DbyD", "dbyd"), ("Hilb", "hilb"), ("F5", "f5"), ("F4", "f4")]

DISCLAIMER = "# wall-clock ms on this machine; timings depend on hardware and load and are not comparable across machines"


@dataclass
class Cell:
    ideal: str
    order: str
    row: str
    status: str  # "ok", "timeout", "wrong", "error"
    ms: float | None = None
    size: int | None = None

    def render(self):
        if self.status == "ok":
            return f"{self.ms:.3f}"
        return self.status


def bench(ideals=None, rows=None, timeout: float | None = 120.0, field: Field = QQ, backend="dense", strategy="normal"):
    """Time every selected (ideal, order, algorithm) cell; each basis is S-tested."""
    cells = []
    columns = [c for c in CELLS if ideals is None or c[0] in ideals]
    for label, algo in BENCH_ROWS:
        if rows is not None and label not in rows and algo not in rows:
            continue
        for name, order in columns:
            ideal = benchmark_ideal(name, order, field)
            try:
                with time_limit(timeout):
                    start = time.perf_counter()
                    basis = compute_gb(algo, ideal, backend=backend, strategy=strategy)
                    ms = (time.perf_counter() - start) * 1000
            except Timeout:
                cells.append(Cell(name, order, label, "timeout"))
                continue
            except AlgebraError:
                cells.append(Cell(name, order, label, "error"))
                continue
            status = "ok" if is_groebner_basis(basis) else "wrong"
            cells.append(Cell(name, order, label, status, ms if status == "ok" else None, len(basis)))
    return columns, cells


def render_bench(columns, cells) -> str:
    heads = [f"{n} ({o.capitalize() if o == 'lex' else 'Grevlex'})" for n, o in columns]
    labels = []
    for c in cells:
        if c.row not in labels:
            labels.append(c.row)
    table = {(c.row, c.ideal, c.order): c.render() for c in cells}
    width = max([len(h) for h in heads] + [10])
    out = ["".ljust(6) + "".join(h.rjust(width + 2) for h in heads)]
    for label in labels:
        out.append(label.ljust(6) + "".join(table[(label, n, o)].rjust(width + 2) for n, o in columns))
    out.append(DISCLAIMER)
    return "\n".join(out) + "\n"


# -- argument parsing ---------------------------------------------------


def _add_job_options(p):
    p.add_argument("file", nargs="?", default="-", help="job file (default: stdin)")
    p.add_argument("--algo", choices=ALGORITHMS, default="buchberger")
    p.add_argument("--order", help="override the header's monomial order")
    p.add_argument("--field", help="override the header's field: q or fp:<p>")
    p.add_argument("--backend", choices=("dense", "sparse"), default="dense", help="F4 matrix backend")
    p.add_argument("--strategy", choices=("normal", "degree"), default="normal", help="F4 pair selection")
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.add_argument("--timeout", type=float, default=None, metavar="S", help="give up after S seconds")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polyideal", description="Groebner bases of polynomial ideals")
    sub = parser.add_subparsers(dest="command", required=True)

    gb = sub.add_parser("gb", help="reduced Groebner basis of an ideal")
    _add_job_options(gb)
    gb.add_argument("--emit-cofactors", action="store_true", help="print each element's cofactors")

    hb = sub.add_parser("hilbert", help="Hilbert series of the lead-term ideal")
    _add_job_options(hb)
    hb.add_argument("-k", "--terms", type=int, default=10, help="number of series coefficients")

    bn = sub.add_parser("bench", help="time the benchmark ideals")
    bn.add_argument("--ideal", action="append", choices=("I1", "I2", "I3"), help="restrict to an ideal")
    bn.add_argument("--algo", action="append", help="restrict to a row (B, DbyD, Hilb, F5, F4 or algorithm name)")
    bn.add_argument("--field", default="q")
    bn.add_argument("--backend", choices=("dense", "sparse"), default="dense")
    bn.add_argument("--strategy", choices=("normal", "degree"), default="normal")
    bn.add_argument("--timeout", type=float, default=120.0, metavar="S", help="per-cell budget")
    bn.add_argument("--json", action="store_true")

    ck = sub.add_parser("check", help="S-test a basis, or run the property suite")
    ck.add_argument("file", nargs="?", default="-")
    ck.add_argument("--properties", action="store_true", help="run the registered properties instead")
    ck.add_argument("--property", action="append", dest="names", metavar="NAME")
    ck.add_argument("--count", type=int, default=100)
    ck.add_argument("--seed", type=int, default=0)
    ck.add_argument("--field", default=None)
    ck.add_argument("--timeout", type=float, default=10.0, metavar="S", help="per-case limit")
    ck.add_argument("--json", action="store_true")
    return parser


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _job(args, **flags):
    return parse_job(
        _read(args.file),
        algorithm=args.algo,
        order=args.order,
        field=args.field,
        backend=args.backend,
        strategy=args.strategy,
        output="json" if args.json else "text",
        **flags,
    )


def _cmd_gb(args, out):
    spec = _job(args, emit_cofactors=args.emit_cofactors)
    with time_limit(args.timeout):
        out.write(run_job(spec))
    return EXIT_OK


def _cmd_hilbert(args, out):
    spec = _job(args)
    with time_limit(args.timeout):
        out.write(hilbert_report(spec, args.terms))
    return EXIT_OK


def _cmd_bench(args, out):
    columns, cells = bench(
        ideals=args.ideal,
        rows=args.algo,
        timeout=args.timeout,
        field=parse_field(args.field),
        backend=args.backend,
        strategy=args.strategy,
    )
    if args.json:
        doc = {"disclaimer": DISCLAIMER.lstrip("# "), "cells": [c.__dict__ for c in cells]}
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write(render_bench(columns, cells))
    return EXIT_ALGO if any(c.status in ("wrong", "error") for c in cells) else EXIT_OK


def _first_failing_pair(basis):
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            if reduce_poly(s_poly(basis[a], basis[b]), basis):
                return a, b
    return None


def _cmd_check(args, out):
    if args.properties:
        from .verify import GenConfig, run_all

        cfg = GenConfig(seed=args.seed) if args.field is None else GenConfig(seed=args.seed, field=parse_field(args.field))
        reports = run_all(cfg, args.count, args.names, args.timeout)
        if args.json:
            out.write(json.dumps([{"name": r.name, "cases": r.cases, "passed": r.passed,
                                   "failure": str(r.failure) if r.failure else None} for r in reports], indent=2) + "\n")
        else:
            for r in reports:
                out.write(f"{r}\n")
        return EXIT_OK if all(r.passed for r in reports) else EXIT_ALGO
    spec = parse_job(_read(args.file), field=args.field)
    basis = [p for p in spec.polys if p]
    bad = _first_failing_pair(basis)
    if args.json:
        out.write(json.dumps({"ring": spec.ring.header(), "groebner": bad is None,
                              "failing_pair": list(bad) if bad else None}) + "\n")
    elif bad is None:
        out.write(f"ok: {len(basis)} polynomials pass the S-test\n")
    else:
        out.write(f"not a Groebner basis: the S-polynomial of polynomials {bad[0] + 1} and {bad[1] + 1} does not reduce to zero\n")
    return EXIT_OK if bad is None else EXIT_ALGO


COMMANDS = {"gb": _cmd_gb, "hilbert": _cmd_hilbert, "bench": _cmd_bench, "check": _cmd_check}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except ParseError as exc:
        print(f"error: line {exc.line}, column {exc.column}: {exc.message}", file=sys.stderr)
        return EXIT_PARSE
    except Timeout as exc:
        print(f"error: timeout ({exc})", file=sys.stderr)
        return EXIT_TIMEOUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (AlgebraError, ValueError, ArithmeticError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ALGO


if __name__ == "__main__":
    sys.exit(main())
