import json

import pytest

from hypertrees.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compose_example(capsys):
    code, out, _ = run(capsys, "compose", "--family", "FH", "1<3>", "1", "1<2>")
    assert code == 0 and out.strip() == "1<2<3>> + 1<2><3>"


def test_enumerate_example(capsys):
    code, out, _ = run(capsys, "enumerate", "--family", "FH", "--arity", "2")
    assert code == 0 and len(out.splitlines()) == 3


def test_enumerate_output_reparses(capsys):
    from hypertrees import parse_forest, format_forest

    _, out, _ = run(capsys, "enumerate", "--family", "FG", "--arity", "3")
    assert all(format_forest(parse_forest(line)) == line for line in out.splitlines())


def test_cohomology_json(capsys):
    code, out, _ = run(capsys, "cohomology", "--arity", "3", "--convention", "dgComGreg")
    data = json.loads(out)
    assert code == 0
    assert set(data) == {"arity", "convention", "dims_per_degree", "betti", "euler_char", "elapsed_ms"}
    assert data["betti"] == [9, 0, 0] and data["euler_char"] == 9


def test_cohomology_dump(capsys, tmp_path):
    code, out, _ = run(capsys, "cohomology", "--arity", "2", "--dump-matrices", str(tmp_path))
    assert code == 0 and len(json.loads(out)["matrices"]) == 1


def test_diff_reduce_series(capsys):
    assert run(capsys, "diff", "1<2>", "--convention", "Greg-1")[1].strip() == "-B<1><2>"
    assert run(capsys, "reduce", "B<1><2,3>")[1].strip() == "{B<1><2>,3} + {B<1><3>,2}"
    assert run(capsys, "reduce", "B<1><2,3>", "--strategy", "random", "--seed", "4")[1].strip() == \
        "{B<1><2>,3} + {B<1><3>,2}"
    _, out, _ = run(capsys, "series", "--family", "FRG", "--order", "4", "--format", "json")
    assert json.loads(out)["counts"] == [0, 1, 4, 35, 484]


def test_series_oeis(capsys, tmp_path):
    good = tmp_path / "good.txt"
    good.write_text("1 1\n2 3\n3 22\n")
    bad = tmp_path / "bad.txt"
    bad.write_text("1 1\n2 4\n")
    assert run(capsys, "series", "--oeis", "A005264", "--bfile", str(good))[0] == 0
    code, _, err = run(capsys, "series", "--oeis", "A005264", "--bfile", str(bad))
    assert code == 1 and "oeis.A005264" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["nonsense"],
        ["compose", "--family", "FH", "1<<", "1", "1"],
        ["compose", "--family", "RT", "{1,2}", "1", "1"],
        ["compose", "--family", "RT", "1<2>", "5", "1"],
        ["enumerate", "--family", "FG", "--arity", "9"],
        ["enumerate", "--family", "FG"],
        ["series", "--bfile", "x.txt"],
        ["series", "--oeis", "A000001", "--bfile", "x.txt"],
        ["diff", "{1,2}", "--convention", "Greg-1"],
        ["cohomology", "--arity", "9"],
        ["verify", "--max-arity", "9"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--max-arity", "3", "--seed", "5", "--format", "json")
    data = json.loads(out)
    assert data["seed"] == 5
    ids = [c["check_id"] for c in data["checks"]]
    assert ids == sorted(ids)
    failed = [c for c in data["checks"] if c["status"] == "fail"]
    assert code == (1 if failed else 0)
    assert not failed, failed


def test_verify_names_failing_check(capsys, monkeypatch):
    from hypertrees import cli

    monkeypatch.setattr(cli, "verify_checks", lambda k, seed: [("broken.check", lambda: ("fail", "forced"))])
    code, out, err = run(capsys, "verify")
    assert code == 1 and "check failed: broken.check" in err and "seed 0" in out
