import json
import subprocess
import sys

import pytest

from cyclering.cli import RECORD_FIELDS, UsageError, bench_rows, dispatch, main
from cyclering.decide import deep_decide
from cyclering.parser import parse_equation


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_dispatch_decide_worked_example():
    rec = dispatch(parse_equation("C(1,8400)*X=C(6000,8316000)"), "decide")
    assert rec["verdict"] is True
    assert rec["intermediates"] == {"pi_f": 11, "e": 1200}
    assert rec["classification"] == "Basic(8400,8316000,6000)"


def test_dispatch_count():
    assert dispatch(parse_equation("C(1,4)*X=C(12,12)"), "count")["count"] == 16


def test_dispatch_enumerate_basic_only():
    with pytest.raises(UsageError, match="Basic only"):
        dispatch(parse_equation("C(2,2)*X=C(4,4)"), "enumerate")


def test_dispatch_unsupported():
    with pytest.raises(UsageError, match="unsupported"):
        dispatch(parse_equation("X^2=C(1,1)"), "decide")


def test_dispatch_matches_deep_decide():
    for p in range(1, 25):
        for q in range(1, 49):
            for n in (1, 2, 3, 6, 10):
                rec = dispatch(parse_equation(f"C(1,{p})*X = C({n},{q})"), "decide")
                assert rec["verdict"] == deep_decide(p, q, n).verdict


def test_decide_exit_codes(capsys):
    code, out, _ = run(capsys, "decide", "C(1,8400)*X=C(6000,8316000)")
    assert code == 0 and "pi_f=11, e=1200" in out
    code, out, _ = run(capsys, "decide", "C(1,2)*X=C(5,4)")
    assert code == 1 and "DeficientPartFails" in out
    code, _, err = run(capsys, "decide", "C(1,2)*X=C(5,")
    assert code == 2 and "line 1, column 14" in err
    code, _, err = run(capsys, "decide", "X^2 = C(1,1)")
    assert code == 2 and "unsupported" in err
    code, _, _ = run(capsys, "decide")
    assert code == 2


def test_numeric_flags(capsys):
    code, out, _ = run(capsys, "decide", "--p", "8400", "--q", "8316000", "--n", "6000", "--json")
    assert code == 0 and json.loads(out)["intermediates"] == {"pi_f": 11, "e": 1200}
    code, out, _ = run(capsys, "decide", "--m", "2", "--p", "2", "--q", "4", "--n", "4", "--json")
    rec = json.loads(out)
    assert code == 0 and rec["classification"] == "Scaled(2,2,4,4)" and rec["witness"] == "C(1,4)"
    code, _, _ = run(capsys, "decide", "--p", "0", "--q", "4", "--n", "4")
    assert code == 2


def test_json_records_have_stable_fields(capsys):
    for argv in (["decide", "C(1,4)*X=C(12,12)"], ["count", "C(1,4)*X=C(12,12)"],
                 ["enumerate", "C(1,4)*X=C(12,12)"], ["decide", "(C(1,2)+C(1,3))*X=C(10,6)"],
                 ["decide", "C(1,3)*X=C(3,6)+C(5,12)"], ["eval", "C(1,2)*C(1,3)"]):
        code, out, _ = run(capsys, *argv, "--json")
        lines = out.strip().splitlines()
        assert len(lines) == 1
        rec = json.loads(lines[0])
        assert tuple(rec) == RECORD_FIELDS


def test_enumerate_and_count(capsys):
    code, out, _ = run(capsys, "enumerate", "C(1,4)*X=C(12,12)")
    lines = out.split()
    assert code == 0 and len(lines) == 16 and lines[0] == "C(3,12)" and lines[-1] == "C(12,3)"
    code, out, _ = run(capsys, "enumerate", "C(1,4)*X=C(12,12)", "--limit", "2")
    assert out.split() == ["C(3,12)", "C(2,6)+C(2,12)"]
    code, out, _ = run(capsys, "count", "C(1,4)*X=C(12,12)")
    assert code == 0 and out.strip() == "16"
    code, out, _ = run(capsys, "count", "C(1,2)*X=C(5,4)")
    assert code == 1 and out.strip() == "0"
    code, _, err = run(capsys, "enumerate", "C(2,2)*X=C(4,4)")
    assert code == 2 and "Basic only" in err


def test_paper_strict_flag(capsys):
    code, out, _ = run(capsys, "decide", "C(2,2)*X=C(4,4)", "--paper-strict", "--json")
    rec = json.loads(out)
    assert code == 0
    assert rec["verdict"] is True
    assert rec["paper_strict_verdict"] is False and rec["paper_strict_disagrees"] is True


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "C(1,4)*(C(2,12)+C(1,6)+C(2,3))")
    assert code == 0 and out.strip() == "C(12,12)"
    code, _, err = run(capsys, "eval", "C(1,2)*X")
    assert code == 2 and "unbound" in err


def test_oracle_check_small(capsys):
    code, out, _ = run(capsys, "oracle-check", "--p-max", "30", "--n-max", "12", "--json")
    rec = json.loads(out)
    assert code == 0 and rec["triples"] == 30 * 30 * 12 and rec["disagreements"] == 0


def test_oracle_check_workers(capsys):
    code, out, _ = run(capsys, "oracle-check", "--p-max", "20", "--n-max", "6",
                       "--workers", "2", "--json")
    rec = json.loads(out)
    assert code == 0 and rec["triples"] == 20 * 20 * 6 and rec["disagreements"] == 0


def test_bench(capsys):
    rows = bench_rows(max_bits=40, step=8)
    assert rows and all(r["gcd_calls"] <= r["gcd_bound"] for r in rows)
    code, out, _ = run(capsys, "bench", "--max-bits", "24", "--json")
    assert code == 0 and all(json.loads(l)["command"] == "bench" for l in out.splitlines())


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cyclering", "count", "C(1,4)*X=C(12,12)"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "16"
    proc = subprocess.run([sys.executable, "-m", "cyclering", "decide", "C(1,4)*X=("],
                          capture_output=True, text=True)
    assert proc.returncode == 2 and "column" in proc.stderr
