"""Comparison of computed counts with OEIS b-files read from disk.

Nothing here reaches the network: b-files (``bNNNNNN.txt``) are read from a
path given on the command line or from a directory.  A triangle is compared
row by row after flattening; because b-files of triangles differ in whether
they start at row 0 or row 1 and in the direction rows are read, every
alignment in :data:`TRIANGLE_SHIFTS` and both row directions are tried and the
one that matched is reported.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .enumeration import count_bigraded, enumerate_family, marginal, shapes
from .series import lc_multilinear_dim


class BFileError(ValueError):
    pass


def parse_bfile(text: str) -> List[Tuple[int, int]]:
    """``[(n, a(n)), ...]`` from b-file text; ``#`` lines and blanks are skipped."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) < 2:
            raise BFileError(f"line {lineno}: expected 'n a(n)', got {raw!r}")
        try:
            out.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise BFileError(f"line {lineno}: {exc}") from None
    if not out:
        raise BFileError("empty b-file")
    return out


def read_bfile(path) -> List[Tuple[int, int]]:
    return parse_bfile(Path(path).read_text())


# --- what we compute for each id ------------------------------------------------


def _sequence(values: Callable[[int], int], max_n: int) -> Dict[int, int]:
    return {n: values(n) for n in range(1, max_n + 1)}


def _triangle(family: str, axis: str, max_n: int) -> List[List[int]]:
    rows = []
    for n in range(1, max_n + 1):
        m = marginal(count_bigraded(family, n), axis)
        rows.append([m.get(k, 0) for k in range(n)])
    return rows


@dataclass(frozen=True)
class Target:
    oeis_id: str
    description: str
    kind: str  # "sequence" or "triangle"
    compute: Callable[[int], object]
    default_max_n: int


TARGETS: Dict[str, Target] = {
    "A005264": Target("A005264", "|Greg(n)|", "sequence",
                      lambda N: _sequence(lambda n: len(enumerate_family("Greg", n)), N), 6),
    "A048160": Target("A048160", "Greg(n) by number of black vertices", "triangle",
                      lambda N: _triangle("Greg", "k", N), 6),
    "A052888": Target("A052888", "|FH(n)| (dimensions of ComPreLie)", "sequence",
                      lambda N: _sequence(lambda n: len(enumerate_family("FH", n)), N), 6),
    # The logarithmic-numbers label: our u_n are n![t^n] of -ln(1-t)exp(t)
    # (u_4 = 24); the comparison reports whatever the b-file says.
    "A002104": Target("A002104", "u_n = n![t^n] -ln(1-t)exp(t) (ComPreLie dual)", "sequence",
                      lambda N: _sequence(lc_multilinear_dim, N), 8),
    "A364709": Target("A364709", "FH(n) by hypertree weight", "triangle",
                      lambda N: _triangle("FH", "j", N), 6),
    "A364816": Target("A364816", "|FG(n)|", "sequence",
                      lambda N: _sequence(lambda n: len(enumerate_family("FG", n)), N), 5),
    "A367752": Target("A367752", "shapes of rooted hypertrees", "sequence",
                      lambda N: _sequence(lambda n: len(shapes(n, trees_only=True)), N), 5),
    "A367753": Target("A367753", "shapes of forests of rooted hypertrees", "sequence",
                      lambda N: _sequence(lambda n: len(shapes(n)), N), 5),
}

ACCEPTANCE_IDS = ("A005264", "A048160", "A364709", "A364816", "A367752", "A367753")
TRIANGLE_SHIFTS = (0, 1)  # leading b-file entries before row n=1 (a row 0 holds one entry)


@dataclass
class Comparison:
    oeis_id: str
    ok: bool
    compared: int
    details: str
    mismatches: List[Tuple[int, int, int]] = field(default_factory=list)


def compare_sequence(ours: Dict[int, int], bfile: Sequence[Tuple[int, int]], oeis_id: str = "") -> Comparison:
    theirs = dict(bfile)
    common = sorted(set(ours) & set(theirs))
    bad = [(n, ours[n], theirs[n]) for n in common if ours[n] != theirs[n]]
    ok = bool(common) and not bad
    detail = f"{len(common)} terms compared (n={common[0]}..{common[-1]})" if common else "no overlapping indices"
    return Comparison(oeis_id, ok, len(common), detail, bad)


def compare_triangle(rows: List[List[int]], bfile: Sequence[Tuple[int, int]], oeis_id: str = "") -> Comparison:
    values = [v for _, v in sorted(bfile)]
    best: Optional[Comparison] = None
    for direction in ("ascending", "descending"):
        flat = [v for row in rows for v in (row if direction == "ascending" else reversed(row))]
        for shift in TRIANGLE_SHIFTS:
            window = values[shift : shift + len(flat)]
            if len(window) < len(flat):
                continue
            bad = [(i, a, b) for i, (a, b) in enumerate(zip(flat, window)) if a != b]
            cmp = Comparison(oeis_id, not bad, len(flat),
                             f"{len(rows)} rows, {direction} in k, b-file offset {shift}", bad)
            if cmp.ok:
                return cmp
            if best is None or len(bad) < len(best.mismatches):
                best = cmp
    if best is None:
        return Comparison(oeis_id, False, 0, "b-file shorter than the computed triangle")
    best.details = "no alignment matches; closest: " + best.details
    return best


def compare(oeis_id: str, bfile_path, max_n: Optional[int] = None) -> Comparison:
    if oeis_id not in TARGETS:
        raise KeyError(f"no computed counterpart for {oeis_id}")
    target = TARGETS[oeis_id]
    data = read_bfile(bfile_path)
    ours = target.compute(max_n or target.default_max_n)
    if target.kind == "sequence":
        return compare_sequence(ours, data, oeis_id)
    return compare_triangle(ours, data, oeis_id)


def bfile_directory() -> Optional[Path]:
    """``$HYPERTREES_OEIS_DIR`` if set, else ``tests/data/oeis`` under the working directory."""
    env = os.environ.get("HYPERTREES_OEIS_DIR")
    if env:
        return Path(env)
    local = Path("tests/data/oeis")
    return local if local.is_dir() else None


def bfile_path(oeis_id: str, directory=None) -> Optional[Path]:
    directory = Path(directory) if directory else bfile_directory()
    if directory is None:
        return None
    path = directory / f"b{oeis_id[1:]}.txt"
    return path if path.is_file() else None
