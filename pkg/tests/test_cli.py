"""Golden tests: every expected value is computed here from the oracles or module functions,
never captured from an earlier CLI run."""
import json
import subprocess
import sys

import pytest

import oracles
from edgecore.algebra import QQ, determinant
from edgecore.cli import UsageError, main, parse_candidate_file
from edgecore.coreops import detB_closed_form, psi_B_matrix
from edgecore.graph import cycle_graph, whiskered_cycle


def run_json(capsys, *argv):
    code = main([*argv, "--output", "json"])
    out = capsys.readouterr().out
    assert code == 0, out
    return json.loads(out)


def run_text(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_classify(capsys):
    got = run_json(capsys, "classify", "--builtin", "c4")
    assert {k: got[k] for k in ("kind", "s", "n", "d", "ell")} == {
        "kind": "UniqueEvenCycle", "s": 4, "n": 4, "d": 4, "ell": 3}
    assert (got["command"], got["seed"], got["field"]) == ("classify", 0, "q")


@pytest.mark.parametrize("name,d,r", [("c4", 4, 2), ("c6", 6, 2), ("c6", 6, 3)])
def test_mu(capsys, name, d, r):
    got = run_json(capsys, "mu", "--builtin", name, "--power", str(r), "--field", "q")
    assert got["mu"] == oracles.count_power_monomials(oracles.cycle_edges(d), r)
    if (name, r) == ("c6", 3):
        assert got["mu"] == 55


def test_check_reduction_true_and_false(capsys):
    got = run_json(capsys, "check-reduction", "--builtin", "c4", "--family", "basic", "--t", "4")
    E = oracles.cycle_edges(4)
    assert got["is_reduction"] is oracles.is_reduction_oracle(E, 4, 4, [1, 1, 1, -1], 1) is True
    # obstructed candidate: a computed "false", still exit 0
    got = run_json(capsys, "check-reduction", "--builtin", "c4", "--field", "fp:2", "--family", "basic", "--t", "4")
    assert got["is_reduction"] is False


def test_reduction_number(capsys):
    got = run_json(capsys, "reduction-number", "--builtin", "c6", "--family", "basic", "--t", "6")
    E = oracles.cycle_edges(6)
    want = next(r for r in range(4) if oracles.is_reduction_oracle(E, 6, 6, [1] * 5 + [-1], r))
    assert got["reduction_number"] == want == got["expected"] == 2


def test_obstruction(capsys, tmp_path):
    f = tmp_path / "cand.txt"
    f.write_text("t=4\n1,-2,2,-1\n")
    got = run_json(capsys, "obstruction", "--builtin", "c4", "--coeff-file", str(f))
    # 1 * 2 == (-2) * (-1)
    assert got["obstructed"] is True
    assert not oracles.is_reduction_oracle(oracles.cycle_edges(4), 4, 4, [1, -2, 2, -1], 1)


def test_colon_counterexample(capsys, tmp_path):
    f = tmp_path / "h.txt"
    f.write_text("t=2\n1,-1,1,1,0,1\n")
    got = run_json(capsys, "colon", "--builtin", "counterexample", "--coeff-file", str(f))
    assert got["colon_degree1_basis"] == ["x1", "x2", "x3", "x4", "x5"]
    assert got["colon_is_m"] is False


def test_colon_whiskered(capsys):
    got = run_json(capsys, "colon", "--builtin", "whiskered-c4", "--family", "even-walk")
    assert got["colon_dim"] == got["n"] == 5 and got["colon_is_m"] is True


def test_core_whiskered_table(capsys):
    got = run_json(capsys, "core", "--builtin", "whiskered-c4", "--max-deg", "4")
    assert [r["deg"] for r in got["degrees"]] == [2, 3, 4]
    assert got["verdict"] == "equal"
    E = [(1, 2), (2, 3), (3, 4), (1, 4), (1, 5)]
    # (mI)_3 = span of x_j e_i
    gens = oracles.piece_generators(oracles.edge_exprs(E, 5), 5, 2)
    xs = oracles.xs(5)
    deg3 = [x * g for x in xs for g in gens]
    assert got["degrees"][1]["mI_dim"] == oracles.span_dim(deg3, 5, 3)
    assert list(got)[:3] == ["command", "seed", "field"]
    assert list(got)[3:10] == ["method", "char", "d", "families", "degrees", "verdict", "n_half"]


def test_core_text_cites_formula(capsys):
    code, out = run_text(capsys, "core", "--builtin", "c4", "--max-deg", "5")
    assert code == 0
    assert "whiskered core formula" in out.out
    for k in range(2, 6):
        assert any(line.split()[:1] == [str(k)] for line in out.out.splitlines())


def test_core_non_whiskered_reports_exclusion(capsys):
    got = run_json(capsys, "core", "--builtin", "counterexample")
    assert got["all_excluded"] is True


def test_core_on_basic_graph_is_usage_error(capsys, tmp_path):
    f = tmp_path / "tree.txt"
    f.write_text("a b\nb c\n")
    code, out = run_text(capsys, "core", str(f))
    assert code == 2 and "basic" in out.err


def test_detb(capsys):
    got = run_json(capsys, "detb", "--builtin", "c4", "--b", "1,2,3,4")
    assert got["B"] == [[0, 4, 0, -1], [-2, 0, 1, 0], [0, -3, 0, 2], [3, 0, -4, 0]]
    assert got["det"] == oracles.det_oracle(got["B"]) == 25 == got["closed_form"]
    got = run_json(capsys, "detb", "--builtin", "whiskered-c4", "--b", "1,2,3,4,5")
    assert got["B"] == psi_B_matrix(whiskered_cycle(4, [1]), [1, 2, 3, 4, 5]).tolist()
    assert "det" not in got


def test_intersect_core(capsys):
    got = run_json(capsys, "intersect-core", "--builtin", "c4", "--max-deg", "3")
    assert got["verdict"] == "equal"
    assert got["degrees"][1]["core_dim"] == oracles.span_dim(
        oracles.piece_generators(oracles.edge_exprs(oracles.cycle_edges(4), 4), 4, 3), 4, 3)
    code, out = run_text(capsys, "intersect-core", "--builtin", "whiskered-c4")
    assert code == 2
    got = run_json(capsys, "intersect-core", "--builtin", "whiskered-c4", "--experimental", "--max-deg", "3")
    assert got["verdict"] == "upper-bound-only"


def test_counterexample(capsys):
    got = run_json(capsys, "counterexample", "--samples", "5")
    assert got["colon_basis"] == ["x1", "x2", "x3", "x4", "x5"]
    assert got["witness_in_mI_not_in_H"] is not None
    assert got["core"]["verdict"] == "unequal"


def test_random_candidate_is_seeded(capsys):
    a = run_json(capsys, "check-reduction", "--builtin", "c6", "--random", "--seed", "5")
    b = run_json(capsys, "check-reduction", "--builtin", "c6", "--random", "--seed", "5")
    c = run_json(capsys, "check-reduction", "--builtin", "c6", "--random", "--seed", "6")
    assert a == b and a["candidate"] != c["candidate"]


def test_json_byte_identical_across_processes():
    cmd = [sys.executable, "-m", "edgecore", "counterexample", "--samples", "4", "--output", "json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first


@pytest.mark.parametrize("argv,needle", [
    (["classify", "--builtin", "c4", "--field", "fp:4"], "prime"),
    (["mu", "--builtin", "c4"], "--power"),
    (["check-reduction", "--builtin", "c4"], "exactly one"),
    (["check-reduction", "--builtin", "c6", "--family", "jt"], "--t"),
    (["check-reduction", "--builtin", "whiskered-c4", "--family", "basic", "--t", "5"], ""),
    (["classify", "/nonexistent/graph.txt"], "cannot read"),
    (["classify"], "graph"),
    (["detb", "--builtin", "c4", "--b", "1,x,3,4"], "malformed"),
    (["detb", "--builtin", "counterexample", "--b", "1,1,1,1,1,1"], ""),
])
def test_usage_errors_exit_2(capsys, argv, needle):
    code, out = run_text(capsys, *argv)
    assert code == 2
    assert out.err.startswith("error:") and needle in out.err


def test_graph_file_input(capsys, tmp_path):
    f = tmp_path / "sq.txt"
    f.write_text("# a square\na b\nb c\nc d\nd a\n")
    got = run_json(capsys, "mu", str(f), "--power", "2")
    assert got["mu"] == 9


def test_parse_candidate_file(tmp_path):
    f = tmp_path / "c.txt"
    f.write_text("t=4\n1,1,1,-1\n")
    c = parse_candidate_file(f, 4)
    assert c.t == 4 and [int(a) for a in c.coeffs] == [1, 1, 1, -1]
    f.write_text("t=4\n1,1,-1\n")
    with pytest.raises(ValueError, match="expected 4"):
        parse_candidate_file(f, 4)
    f.write_text("t=2\n1,0,1,-1\n")
    with pytest.raises(ValueError, match="position 2 is 0 not -1"):
        parse_candidate_file(f, 4)
    f.write_text("t=4\n1,x1,1,-1\n")
    with pytest.raises(ValueError, match="non-constant"):
        parse_candidate_file(f, 4)
    with pytest.raises(UsageError):
        parse_candidate_file(tmp_path / "missing.txt", 4)


def test_detb_closed_form_matches_cli_module():
    b = [2, -1, 3, 5, 1, 7]
    B = psi_B_matrix(cycle_graph(6), b)
    assert determinant(B) == detB_closed_form(b) == QQ((2 * 3 * 1 - (-1) * 5 * 7) ** 2)
