import json

import pytest

from signedach.cli import main
from signedach.formulas import complete_graph
from signedach.io import serialize_graph


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_psi_on_negative_k5(capsys, write):
    path = write("k5.sg", serialize_graph(complete_graph(5)))
    code, out, _ = run(capsys, "psi", path)
    assert code == 0 and "psi: 2" in out
    code, out, _ = run(capsys, "--json", "psi", path)
    data = json.loads(out)
    assert data["result"]["psi"] == 2 and data["exit_code"] == 0
    assert data["witness"] and data["certificate"] and "nodes" in data and "elapsed_seconds" in data


def test_json_output_covers_the_text_output(capsys, write):
    path = write("k5.sg", serialize_graph(complete_graph(4, 1)))
    _, text, _ = run(capsys, "chi", path)
    _, js, _ = run(capsys, "chi", path, "--json")
    data = json.loads(js)
    for key, value in data["result"].items():
        assert f"{key}: {value}" in text
    assert "witness: " + " ".join(data["witness"]) in text


def test_equiv_on_tree_signatures(capsys, write):
    a = write("a.sg", "sg 4\n0 1 +\n1 2 -\n1 3 -\n")
    b = write("b.sg", "sg 4\n0 1 -\n1 2 -\n1 3 +\n")
    code, out, _ = run(capsys, "equiv", a, b)
    assert code == 0 and "equivalent: yes" in out


def test_equiv_no_and_mismatch(capsys, write):
    a = write("a.sg", "sg 3\n0 1 +\n1 2 +\n0 2 +\n")
    b = write("b.sg", "sg 3\n0 1 +\n1 2 +\n0 2 -\n")
    c = write("c.sg", "sg 3\n0 1 +\n")
    assert run(capsys, "equiv", a, b)[0] == 1
    assert run(capsys, "equiv", a, c)[0] == 2


def test_verify_reduce_and_witness(capsys, write):
    g = write("g.sg", "sg 5\n0 1 -\n1 4 -\n3 4 +\n0 2 +\n1 2 +\n2 3 +\n2 4 +\n")
    col = write("g.col", "col 4\n0 +1\n1 +2\n2 -1\n3 -2\n4 +2\n")
    code, out, _ = run(capsys, "verify", g, col)
    assert code == 0 and "complete: yes" in out
    code, out, _ = run(capsys, "reduce", g, col)
    assert code == 0 and "equals_kstar: yes" in out and "(1,2,+)" in out
    code, out, _ = run(capsys, "witness", g, col)
    assert code == 0 and "complete: True" in out
    bad = write("bad.col", "col 4\n0 1\n1 1\n2 1\n3 1\n4 1\n")
    code, out, _ = run(capsys, "verify", g, bad)
    assert code == 1 and "proper: no" in out
    assert run(capsys, "witness", g, bad)[0] == 1


def test_verify_inferred(capsys, write):
    g = write("p.sg", "sg 3\n0 1 -\n1 2 +\n")
    col = write("p.col", "col 2\n0 1+\n1 1+\n2 1-\n")
    assert run(capsys, "verify", "--inferred", g, col)[0] == 0
    # plain reading of an inferred file is a usage error
    assert run(capsys, "verify", g, col)[0] == 2
    incomplete = write("q.col", "col 3\n0 1+\n1 1+\n2 1-\n")
    code, out, _ = run(capsys, "verify", "--inferred", g, incomplete)
    assert code == 1 and "unused magnitudes: [0]" in out


def test_gen_outputs_parseable_graphs(capsys, write):
    code, out, _ = run(capsys, "gen", "remove-vertex", "6")
    assert code == 0 and "# family remove-vertex 6" in out
    path = write("gen.sg", out)
    code, out, _ = run(capsys, "psi", path)
    assert "psi: 6" in out
    base = write("p3.sg", "sg 3\n0 1 +\n1 2 +\n")
    code, out, _ = run(capsys, "--json", "gen", "np-reduction", base, "2")
    data = json.loads(out)
    assert code == 0 and data["result"]["order"] == 55 and data["result"]["size"] == 734


def test_unknown_family_and_command(capsys):
    code, _, err = run(capsys, "gen", "nonsense")
    assert code == 2 and "usage" in err
    code, _, err = run(capsys, "frobnicate")
    assert code == 2 and "usage" in err


def test_parse_errors_exit_2(capsys, write):
    path = write("loop.sg", "sg 2\n0 0 +\n")
    code, _, err = run(capsys, "psi", path)
    assert code == 2 and "line 2" in err
    assert run(capsys, "psi", "/nonexistent/file.sg")[0] == 2


def test_budget_exhaustion_exit_3(capsys, write):
    path = write("k7.sg", serialize_graph(complete_graph(7)))
    code, _, err = run(capsys, "--node-budget", "3", "psi", path)
    assert code == 3 and "budget" in err
    code, _, _ = run(capsys, "psi", path, "--node-budget", "3")
    assert code == 3


def test_formula_commands(capsys):
    code, out, _ = run(capsys, "formula", "path", "10", "+-+-+-+-+")
    assert code == 0 and "psi: 6" in out
    code, out, _ = run(capsys, "formula", "cycle", "4", "odd")
    assert "psi: 4" in out
    code, out, _ = run(capsys, "formula", "clique", "6", "minus-matching", "2")
    assert "psi: 3" in out
    assert run(capsys, "formula", "clique", "4", "negative")[0] == 2
    assert run(capsys, "formula", "torus", "4")[0] == 2


def test_check_command(capsys):
    code, out, _ = run(capsys, "check", "--seed", "42", "--max-n", "4", "--trials", "5")
    assert code == 0 and out.strip().endswith("all suites passed")
    code2, out2, _ = run(capsys, "--seed", "42", "check", "--max-n", "4", "--trials", "5")
    assert out2 == out
    code, out, _ = run(capsys, "--json", "check", "--trials", "0")
    assert json.loads(out)["result"]["passed"] is True
