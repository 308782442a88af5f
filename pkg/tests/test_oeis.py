import pytest

from hypertrees.oeis import (
    ACCEPTANCE_IDS,
    BFileError,
    TARGETS,
    bfile_path,
    compare,
    compare_sequence,
    compare_triangle,
    parse_bfile,
)


def test_parse_bfile():
    text = "# comment\n\n1 1\n2 3\n3 22\n"
    assert parse_bfile(text) == [(1, 1), (2, 3), (3, 22)]
    with pytest.raises(BFileError):
        parse_bfile("# only comments\n")
    with pytest.raises(BFileError):
        parse_bfile("1 x\n")
    with pytest.raises(BFileError):
        parse_bfile("7\n")


def test_sequence_comparison_reports_mismatches():
    ok = compare_sequence({1: 1, 2: 3}, [(1, 1), (2, 3), (3, 22)])
    assert ok.ok and ok.compared == 2
    bad = compare_sequence({1: 1, 2: 4}, [(1, 1), (2, 3)])
    assert not bad.ok and bad.mismatches == [(2, 4, 3)]
    assert not compare_sequence({5: 1}, [(1, 1)]).ok


def test_triangle_alignment_is_detected():
    rows = [[1], [2, 1], [9, 10, 3]]
    flat = [v for r in rows for v in r]
    assert compare_triangle(rows, list(enumerate(flat))).ok
    shifted = compare_triangle(rows, list(enumerate([1] + flat)))
    assert shifted.ok and "offset 1" in shifted.details
    reversed_rows = [v for r in rows for v in reversed(r)]
    assert "descending" in compare_triangle(rows, list(enumerate(reversed_rows))).details
    assert not compare_triangle(rows, list(enumerate([7] * 10))).ok


def test_compare_reads_files(tmp_path):
    path = tmp_path / "b005264.txt"
    path.write_text("\n".join(f"{n} {v}" for n, v in enumerate([1, 3, 22, 262], 1)))
    result = compare("A005264", path, 4)
    assert result.ok
    assert bfile_path("A005264", tmp_path) == path
    assert bfile_path("A048160", tmp_path) is None


def test_targets_cover_acceptance_ids():
    assert set(ACCEPTANCE_IDS) <= set(TARGETS)
    assert TARGETS["A002104"].compute(5) == {1: 1, 2: 3, 3: 8, 4: 24, 5: 89}
