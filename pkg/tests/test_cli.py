import json
import subprocess
import sys
from pathlib import Path

import pytest

from qgain.cli import main
from qgain.qgg import format_qgg, parse_qgg

GOLDEN = Path(__file__).parent / "golden"

# (argv with {g} for the golden directory, expected stdout file)
CASES = [
    ("check {g}/c4.qgg", "check_c4.json"),
    ("check {g}/c5.qgg", "check_c5.json"),
    ("check {g}/k23.qgg", "check_k23.json"),
    ("check {g}/c6_extremal.qgg", "check_c6_extremal.json"),
    ("check {g}/gen_kpq_3_3_s7.qgg", "check_gen_kpq_3_3_s7.json"),
    ("rank {g}/c4.qgg --method exact", "rank_exact_c4.json"),
    ("rank {g}/c4.qgg --method adjoint", "rank_adjoint_c4.json"),
    ("rank {g}/mixed.qgg --method exact", "rank_exact_mixed.json"),
    ("rank {g}/mixed.qgg --method adjoint", "rank_adjoint_mixed.json"),
    ("rank {g}/empty.qgg --method exact", "rank_exact_empty.json"),
    ("rank {g}/empty.qgg --method adjoint", "rank_adjoint_empty.json"),
    ("rank {g}/lenient.qgg --method adjoint --lenient", "rank_adjoint_lenient.json"),
    ("girth {g}/k23.qgg", "girth_k23.json"),
    ("girth {g}/p6.qgg", "girth_p6.json"),
    ("girth {g}/c9.qgg", "girth_c9.json"),
    ("gen cycle 6", "c6_extremal.qgg"),
    ("gen cycle 8", "gen_cycle_8.qgg"),
    ("gen kpq 3 3 --seed 7", "gen_kpq_3_3_s7.qgg"),
    ("switch {g}/p6.qgg --normalize-tree", "switch_p6_normalized.qgg"),
    ("switch {g}/mixed.qgg --theta {g}/mixed.theta", "switch_mixed_theta.qgg"),
    ("enumerate --max-n 4 --gains q8", "enumerate_n4_q8.json"),
    ("enumerate --max-n 6 --gains q8 --samples 10 --seed 3", "enumerate_n6_s10_seed3.json"),
    ("enumerate --max-n 4 --gains rational --samples 2 --seed 5", "enumerate_n4_rational.json"),
]


def run(capsys, line):
    code = main(line.format(g=GOLDEN).split())
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("line,expected", CASES, ids=[c[1] for c in CASES])
def test_golden(capsys, line, expected):
    code, out, _ = run(capsys, line)
    assert code == 0
    assert out == (GOLDEN / expected).read_text()
    code2, out2, _ = run(capsys, line)
    assert (code2, out2) == (code, out)


def test_check_examples_exact_fields(capsys):
    expected = {
        "c6_extremal.qgg": {"g": 6, "r": 4, "equality": True, "case": "cycle"},
        "k23.qgg": {"g": 4, "r": 2, "equality": True, "case": "complete_bipartite"},
        "c5.qgg": {"g": 5, "r": 5, "equality": False},
    }
    for name, fields in expected.items():
        _, out, _ = run(capsys, f"check {{g}}/{name}")
        report = json.loads(out)
        assert {k: report.get(k) for k in fields} == fields
        assert ("case" in report) == fields["equality"]


def test_json_keys_sorted(capsys):
    _, out, _ = run(capsys, "check {g}/k23.qgg")
    keys = list(json.loads(out))
    assert keys == sorted(keys)


@pytest.mark.parametrize("name", [p.name for p in GOLDEN.glob("*.qgg")
                                  if p.name not in ("lenient.qgg", "nonunit.qgg")])
def test_parse_roundtrip_on_golden_inputs(name):
    text = (GOLDEN / name).read_text()
    doc = parse_qgg(text)
    canon = format_qgg(doc)
    assert parse_qgg(canon) == doc
    assert format_qgg(parse_qgg(canon)) == canon


def test_identity_theta_keeps_gains(capsys, tmp_path):
    src = GOLDEN / "mixed.qgg"
    code, out, _ = run(capsys, f"switch {src} --theta {{g}}/identity.theta")
    assert code == 0 and out == format_qgg(parse_qgg(src.read_text()))


def test_switch_preserves_rank(capsys, tmp_path):
    _, switched, _ = run(capsys, "switch {g}/mixed.qgg --theta {g}/mixed.theta")
    f = tmp_path / "s.qgg"
    f.write_text(switched)
    _, before, _ = run(capsys, "rank {g}/mixed.qgg")
    _, after, _ = run(capsys, f"rank {f}")
    assert json.loads(before)["rank"] == json.loads(after)["rank"]


def test_gen_then_check_pipeline(capsys, tmp_path):
    for seed in (0, 7, 11):
        _, text, _ = run(capsys, f"gen kpq 3 4 --seed {seed} --units rational")
        f = tmp_path / f"k{seed}.qgg"
        f.write_text(text)
        code, out, _ = run(capsys, f"check {f}")
        rep = json.loads(out)
        assert code == 0 and rep["r"] == 2 and rep["case"] == "complete_bipartite"


@pytest.mark.parametrize("line,fragment", [
    ("check {g}/p6.qgg", "tree"),
    ("check {g}/disconnected.qgg", "connected"),
    ("rank {g}/nonunit.qgg", "line 3"),
    ("rank {g}/lenient.qgg", "line 3"),
    ("rank {g}/lenient.qgg --lenient", "exact unit"),
    ("girth {g}/missing.qgg", "No such file"),
    ("switch {g}/mixed.qgg --theta {g}/c4.qgg", "theta"),
])
def test_input_errors_exit_1(capsys, line, fragment):
    code, out, err = run(capsys, line)
    assert code == 1 and out == "" and fragment in err


def test_require_cycle(capsys):
    code, out, _ = run(capsys, "girth {g}/p6.qgg --require-cycle")
    assert code == 1 and json.loads(out) == {"girth": "acyclic"}


@pytest.mark.parametrize("line", ["enumerate --max-n 8", "gen cycle 5", "gen kpq 3",
                                  "gen kpq 1 3", "rank", "bogus", "switch {g}/c4.qgg"])
def test_usage_errors_exit_1(capsys, line):
    with pytest.raises(SystemExit) as exc:
        main(line.format(g=GOLDEN).split())
    assert exc.value.code == 1
    assert "usage" in capsys.readouterr().err


def test_budget_error_exit_1(capsys):
    code, _, err = run(capsys, "enumerate --max-n 4 --budget 100 --no-downgrade")
    assert code == 1 and "budget" in err


def test_violation_exit_2(capsys, monkeypatch):
    import qgain.cli as cli
    from qgain.theorem import EqualityCase, TheoremReport
    bad = TheoremReport(6, 2, False, False, EqualityCase.NONE)
    monkeypatch.setattr(cli, "check_theorem", lambda g: bad)
    code, out, _ = run(capsys, "check {g}/c4.qgg")
    assert code == 2 and json.loads(out)["bound_holds"] is False


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "qgain", "check", str(GOLDEN / "c4.qgg")],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert out.stdout == (GOLDEN / "check_c4.json").read_text()
