import io
import json
import subprocess
import sys

import pytest

from polyideal import GF, LEX
from polyideal.benchmarks import IDEALS
from polyideal.cli import (
    DISCLAIMER,
    EXIT_ALGO,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_TIMEOUT,
    main,
    parse_job,
    run_job,
)
from polyideal.errors import DuplicateVariable, UnknownVariable

SAMPLE = "ring Q [x,y,z] grevlex\nx*y*z + 2*y - 3*z*x + 1\n"


def job_text(name, order):
    names, gens = IDEALS[name]
    return f"ring Q [{','.join(names)}] {order}\n" + "\n".join(gens) + "\n"


I2_JOB = job_text("I2", "grevlex")


def run(argv, stdin=None):
    out = io.StringIO()
    if stdin is not None:
        old = sys.stdin
        sys.stdin = io.StringIO(stdin)
    try:
        code = main(argv, out)
    finally:
        if stdin is not None:
            sys.stdin = old
    return code, out.getvalue()


def write(tmp_path, text, name="job.txt"):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_parse_job_example():
    spec = parse_job(SAMPLE)
    assert len(spec.polys) == 1
    assert spec.ring.variable_names == ("x", "y", "z")
    assert spec.generators == ["x*y*z + 2*y - 3*z*x + 1"]


def test_parse_job_errors():
    with pytest.raises(DuplicateVariable):
        parse_job("ring Q [x,y,x] lex\nx\n")
    with pytest.raises(UnknownVariable):
        parse_job("ring Q [a] lex\nw + a\n")


def test_parse_job_overrides():
    spec = parse_job(SAMPLE, order="lex", field="fp:7")
    assert spec.ring.order == LEX and spec.ring.field == GF(7)


@pytest.mark.parametrize("algo", ["buchberger", "dbyd", "hilb", "f4", "f5"])
def test_trivial_ideal(tmp_path, algo):
    code, out = run(["gb", "--algo", algo, write(tmp_path, "ring Q [x,y] lex\nx\n")])
    assert code == EXIT_OK
    assert out.splitlines()[1:] == ["x"]


def test_stdin_input():
    code, out = run(["gb"], stdin="ring Q [x] lex\nx^2 - x\n")
    assert code == EXIT_OK and out.splitlines()[-1] == "x^2 - x"


def test_deterministic_output(tmp_path):
    path = write(tmp_path, I2_JOB)
    assert run(["gb", path]) == run(["gb", path])
    a = json.loads(run(["gb", "--json", path])[1])
    b = json.loads(run(["gb", "--json", path])[1])
    a.pop("elapsed_ms"), b.pop("elapsed_ms")
    assert a == b


def test_i2_output_passes_check(tmp_path):
    code, out = run(["gb", write(tmp_path, I2_JOB)])
    assert code == EXIT_OK
    code, msg = run(["check", write(tmp_path, out, "basis.txt")])
    assert code == EXIT_OK, msg


def test_check_rejects_non_basis(tmp_path):
    code, msg = run(["check", write(tmp_path, "ring Q [x,y] lex\nx*y - 1\nx^2 - y\n")])
    assert code == EXIT_ALGO


def test_json_keys(tmp_path):
    code, out = run(["gb", "--json", "--algo", "f4", write(tmp_path, I2_JOB)])
    doc = json.loads(out)
    assert code == EXIT_OK
    assert {"ring", "algorithm", "basis", "elapsed_ms"} <= set(doc)
    assert doc["algorithm"] == "f4" and doc["ring"].startswith("ring Q [w,x,y,z]")


def test_algorithms_print_same_basis(tmp_path):
    path = write(tmp_path, I2_JOB)
    outs = {run(["gb", "--algo", a, path])[1] for a in ("buchberger", "dbyd", "hilb", "f4", "f5")}
    outs.add(run(["gb", "--algo", "f4", "--backend", "sparse", "--strategy", "degree", path])[1])
    assert len(outs) == 1


def test_emit_cofactors(tmp_path):
    path = write(tmp_path, "ring Q [x,y] grevlex\n2*x^2 - y\nx*y - 1\n")
    for algo in ("buchberger", "f5"):
        code, out = run(["gb", "--json", "--emit-cofactors", "--algo", algo, path])
        doc = json.loads(out)
        assert code == EXIT_OK
        assert len(doc["annotations"]) == len(doc["basis"])
        assert all(len(a["cofactors"]) == 2 for a in doc["annotations"])


def test_parse_error_exit(tmp_path):
    assert run(["gb", write(tmp_path, "ring Q [x,y,x] lex\nx\n")])[0] == EXIT_PARSE
    assert run(["gb", write(tmp_path, "ring Q [a] lex\nw\n")])[0] == EXIT_PARSE
    assert run(["gb", write(tmp_path, "ring Q [x] lex\nx +* 1\n")])[0] == EXIT_PARSE
    assert run(["gb", str(tmp_path / "missing.txt")])[0] == EXIT_PARSE


def test_algorithm_error_exit(tmp_path):
    code, _ = run(["gb", "--field", "fp:4", write(tmp_path, "ring Q [x] lex\nx\n")])
    assert code == EXIT_ALGO
    # homogenising would push the new variable past the exponent limit
    code, _ = run(["gb", "--algo", "hilb", write(tmp_path, "ring Q [x,y] grevlex\nx^4294967295*y + 1\n")])
    assert code == EXIT_ALGO
    code, _ = run(["hilbert", "-k", "-1", write(tmp_path, "ring Q [x] lex\nx\n")])
    assert code == EXIT_ALGO


def test_timeout_exit(tmp_path):
    path = write(tmp_path, job_text("I1", "lex"))
    code, _ = run(["gb", "--algo", "f4", "--timeout", "0.01", path])
    assert code == EXIT_TIMEOUT


def test_hilbert_subcommand(tmp_path):
    path = write(tmp_path, "ring Q [x,y] grevlex\nx^2\nx*y\n")
    code, out = run(["hilbert", "--json", path])
    assert code == EXIT_OK
    assert json.loads(out)["numerator"] == [1, 0, -2, 1]
    code, out = run(["hilbert", "-k", "5", path])
    assert code == EXIT_OK and "1 - 2*t^2 + t^3" in out


def test_bench_i2_layout():
    code, out = run(["bench", "--ideal", "I2", "--timeout", "60"])
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert DISCLAIMER in lines
    header = next(l for l in lines if "I2" in l)
    assert header.count("I2") == 2
    rows = [l for l in lines if l.split() and l.split()[0] in ("B", "DbyD", "Hilb", "F5", "F4")]
    assert [r.split()[0] for r in rows] == ["B", "DbyD", "Hilb", "F5", "F4"]
    assert all(len(r.split()) == 3 for r in rows)
    assert "wrong" not in out and "error" not in out


def test_check_properties():
    code, out = run(["check", "--properties", "--property", "prop_division", "--count", "20", "--seed", "9"])
    assert code == EXIT_OK and "prop_division" in out


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "polyideal", "gb", write(tmp_path, "ring Q [x,y] lex\nx\n")],
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert proc.returncode == 0 and proc.stdout.splitlines()[-1] == "x"
