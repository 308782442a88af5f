"""Command-line workbench: ``hypertrees <subcommand> ...``.

Exit codes: 0 success, 1 a check failed (the failing check is named on
stderr), 2 usage error (bad flags, unparsable forest, arity out of range).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Callable, List, Optional, Tuple

from . import checks, oeis
from .enumeration import ArityTooLarge, DEFAULT_MAX_ARITY, enumerate_family
from .forest import Family, InvalidStructure, ParseError, format_forest, labels, parse_forest
from .lincomb import LinComb
from .operad import FamilyMismatch, LabelIsBlack, LabelNotFound, compose, insert, reduce, reduce_with_strategy

FAMILIES = [f.value for f in Family]
CONVENTIONS = ["Greg-1", "dgComGreg"]
VERIFY_MAX_ARITY = 5


class UsageError(Exception):
    pass


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=None if args.compact else 2))
    else:
        print(text)


def _forest(text: str, family=None) -> Tuple:
    try:
        return parse_forest(text, family, strict_labels=False)
    except (ParseError, InvalidStructure) as exc:
        raise UsageError(str(exc)) from None


# --- subcommands ----------------------------------------------------------------


def cmd_enumerate(args) -> int:
    family = Family.parse(args.family)
    if args.arity is None:
        raise UsageError("enumerate needs --arity")
    forests = enumerate_family(family, args.arity, max_arity=args.max_arity or DEFAULT_MAX_ARITY[family])
    lines = [format_forest(f) for f in forests]
    _emit(args, {"family": family.value, "arity": args.arity, "count": len(lines), "forests": lines},
          "\n".join(lines))
    return 0


def cmd_compose(args) -> int:
    family = Family.parse(args.family)
    S, T = _forest(args.S, family), _forest(args.T, family)
    i = args.i
    a, b = sorted(labels(S)), sorted(labels(T))
    standard = a == list(range(1, len(a) + 1)) and b == list(range(1, len(b) + 1))
    if standard:
        result = compose(S, i, T, family, args.graded)
    elif i in a and not (set(a) - {i}) & set(b):
        # disjoint label sets: plain insertion, labels kept as written
        result = insert(S, i, T, family, args.graded)
    else:
        raise UsageError("labels must be 1..n and 1..m, or S without i disjoint from T")
    _emit(args, {"family": family.value, "S": format_forest(S), "i": i, "T": format_forest(T),
                 "result": str(result)}, str(result))
    return 0


def cmd_reduce(args) -> int:
    f = _forest(args.forest, Family.FG)
    if args.strategy == "innermost":
        result = reduce(f, args.graded)
    else:
        import random

        result = LinComb(reduce_with_strategy(f, args.strategy, random.Random(args.seed), args.graded))
    _emit(args, {"input": format_forest(f), "strategy": args.strategy, "seed": args.seed,
                 "result": str(result)}, str(result))
    return 0


def cmd_diff(args) -> int:
    from .differential import Convention, d0, d_partition, differential

    conv = Convention.parse(args.convention)
    f = _forest(args.forest, conv.family)
    fn = {"full": differential, "d0": d0, "partition": d_partition}[args.part]
    result = fn(f, conv)
    _emit(args, {"input": format_forest(f), "convention": conv.value, "part": args.part,
                 "result": str(result)}, str(result))
    return 0


def cmd_cohomology(args) -> int:
    from .cohomology import CochainComplex
    from .differential import Convention

    if args.arity is None:
        raise UsageError("cohomology needs --arity")
    if not 1 <= args.arity <= (args.max_arity or VERIFY_MAX_ARITY):
        raise UsageError(f"--arity must be between 1 and {args.max_arity or VERIFY_MAX_ARITY}")
    conv = Convention.parse(args.convention)
    start = time.perf_counter()
    cx = CochainComplex.build(args.arity, conv)
    betti = cx.betti()
    payload = {
        "arity": args.arity,
        "convention": conv.value,
        "dims_per_degree": cx.dims,
        "betti": betti,
        "euler_char": cx.euler_char(),
        "elapsed_ms": round((time.perf_counter() - start) * 1000, 1),
    }
    if args.dump_matrices:
        written = cx.dump_matrices(Path(args.dump_matrices))
        payload["matrices"] = [str(p) for p in written]
    text = "\n".join(f"{k:16} {v}" for k, v in payload.items())
    if args.format == "text":
        print(text)
    else:
        print(json.dumps(payload, indent=None if args.compact else 2))
    return 0


def cmd_series(args) -> int:
    from .series import SERIES_IDS, bigraded_table, hilbert

    if args.bfile and not args.oeis:
        raise UsageError("--bfile needs --oeis")
    if args.oeis:
        return _series_oeis(args)
    if args.family not in SERIES_IDS:
        raise UsageError(f"series --family must be one of {', '.join(SERIES_IDS)}")
    order = args.order or 8
    s = hilbert(args.family, order)
    counts = [int(c) for c in s.egf_counts(1, 1)]
    payload = {"series": args.family, "order": order, "counts": counts}
    lines = [f"{n:3} {c}" for n, c in enumerate(counts) if n]
    if args.bigraded:
        table = sorted(bigraded_table(s).items())
        payload["bigraded"] = [[n, j, k, c] for (n, j, k), c in table if c]
        lines = [f"{n:3} u^{j} v^{k} {c}" for (n, j, k), c in table if c]
    _emit(args, payload, "\n".join(lines))
    return 0


def _series_oeis(args) -> int:
    if args.oeis not in oeis.TARGETS:
        raise UsageError(f"no computed counterpart for {args.oeis}; known: {', '.join(oeis.TARGETS)}")
    path = Path(args.bfile) if args.bfile else oeis.bfile_path(args.oeis)
    if path is None or not path.is_file():
        raise UsageError(f"b-file for {args.oeis} not found (pass --bfile or set HYPERTREES_OEIS_DIR)")
    try:
        cmp = oeis.compare(args.oeis, path, args.order)
    except oeis.BFileError as exc:
        raise UsageError(f"{path}: {exc}") from None
    payload = {"oeis": args.oeis, "bfile": str(path), "ok": cmp.ok, "compared": cmp.compared,
               "details": cmp.details, "mismatches": cmp.mismatches[:20]}
    status = "match" if cmp.ok else "MISMATCH"
    _emit(args, payload, f"{args.oeis}: {status} ({cmp.details})")
    if not cmp.ok:
        print(f"check failed: oeis.{args.oeis}", file=sys.stderr)
    return 0 if cmp.ok else 1


# --- verify ---------------------------------------------------------------------

Check = Tuple[str, Callable[[], Tuple[str, str]]]


def _from_report(rep: checks.Report) -> Tuple[str, str]:
    return ("pass" if rep.ok else "fail"), str(rep) + ("" if rep.ok else ": " + "; ".join(rep.failures[:3]))


def _equal(got, want) -> Tuple[str, str]:
    return ("pass" if got == want else "fail"), f"got {got}, expected {want}"


def verify_checks(k: int, seed: int) -> List[Check]:
    from .cohomology import complex_for
    from .differential import check_d_squared
    from .relations import PRESENTATION_IDS, relator_values
    from .series import dual_dims, hilbert, koszul_check
    from .suboperad import suboperad_dims
    from .operad import generator

    out: List[Check] = []
    out.append(("counts.arity2", lambda: _equal(
        [sorted(format_forest(f) for f in enumerate_family(fam, 2)) for fam in ("Greg", "FH")],
        [["1<2>", "2<1>", "B<1><2>"], ["1<2>", "2<1>", "{1,2}"]])))
    for fam in FAMILIES:
        out.append((f"enumeration.{fam}", lambda fam=fam: _from_report(
            checks.check_enumeration_series(fam, None if k >= 5 else k))))
    for oid in oeis.ACCEPTANCE_IDS:
        out.append((f"oeis.{oid}", lambda oid=oid: _oeis_check(oid)))
    for i, fam in enumerate(FAMILIES):
        out.append((f"axioms.{fam}", lambda fam=fam, i=i: _from_report(
            checks.check_axioms(fam, min(k, 5), 1000, seed + i))))
    for i, fam in enumerate(("Greg", "FG", "FRG")):
        out.append((f"axioms.{fam}.graded", lambda fam=fam, i=i: _from_report(
            checks.check_axioms(fam, min(k, 5), 300, seed + 10 + i, graded=True))))
    for pid in PRESENTATION_IDS:
        def rel(pid=pid):
            bad = [name for name, v in relator_values(pid) if v]
            return ("fail" if bad else "pass"), f"{len(relator_values(pid))} relators, nonzero: {bad}"
        out.append((f"relators.{pid}", rel))
    out.append(("reduce.confluence", lambda: _from_report(checks.check_confluence(min(k, 4), 500, seed))))
    out.append(("reduce.confluence.graded", lambda: _from_report(
        checks.check_confluence(min(k, 4), 500, seed + 1, graded=True))))
    out.append(("reduce.fixed_points", lambda: _from_report(checks.check_fixed_points(min(k, 4)))))
    for conv in CONVENTIONS:
        def dsq(conv=conv):
            bad = []
            for n in range(1, k + 1):
                ok, failures = check_d_squared(n, conv)
                bad += [format_forest(f) for f, _ in failures[:3]]
            return ("fail" if bad else "pass"), f"n<={k}, failures: {bad}"
        out.append((f"differential.d_squared.{conv}", dsq))
        out.append((f"differential.leibniz.{conv}", lambda conv=conv: _from_report(
            checks.check_leibniz_random(conv, min(k, 4), 500, seed))))
    from math import factorial

    out.append(("cohomology.betti.Greg-1", lambda: _equal(
        [complex_for(n, "Greg-1").betti() for n in range(1, k + 1)],
        [[factorial(n - 1)] + [0] * (n - 1) for n in range(1, k + 1)])))
    out.append(("cohomology.betti.dgComGreg", lambda: _equal(
        [complex_for(n, "dgComGreg").betti() for n in range(1, k + 1)],
        [[n ** (n - 1)] + [0] * (n - 1) for n in range(1, k + 1)])))
    out.append(("cohomology.euler", lambda: _equal(
        [[complex_for(n, "dgComGreg").euler_char() for n in range(1, k + 1)],
         [int(c) for c in hilbert("FRG", k).egf_counts(1, -1)[1:]]],
        [[n ** (n - 1) for n in range(1, k + 1)]] * 2)))
    out.append(("fman.dims", lambda: _equal(
        [suboperad_dims([generator("l"), generator("c")], k, Family.FH),
         [int(c) for c in hilbert("FMan", k).egf_counts(1, 1)[1:]]],
        [[int(c) for c in hilbert("FRG", k).egf_counts(1, -1)[1:]]] * 2)))
    out.append(("fman.two_oracles", lambda: _from_report(checks.check_two_oracles(k))))

    def koszul():
        ok = all(koszul_check(hilbert(a, 8), hilbert(a + "_dual", 8)) for a in ("ComPreLie", "ComGreg"))
        u4 = dual_dims("ComPreLie_dual", 4)[3]
        d4 = dual_dims("ComGreg_dual", 4)[3]
        good = ok and u4 == 24 and d4 == 27
        return ("pass" if good else "fail"), (
            f"f(-f!(-t)) = t through t^8: {ok}; u_4 = {u4}; dim ComGreg!(4) = {d4}; "
            "u_n follow -ln(1-t)exp(t), which differs from the A002104 label from n=3 on")
    out.append(("series.koszul", koszul))
    return sorted(out, key=lambda c: c[0])


def _oeis_check(oid: str) -> Tuple[str, str]:
    path = oeis.bfile_path(oid)
    if path is None:
        return "skip", f"b{oid[1:]}.txt not found (set HYPERTREES_OEIS_DIR to a directory of b-files)"
    cmp = oeis.compare(oid, path)
    return ("pass" if cmp.ok else "fail"), f"{path}: {cmp.details}"


def cmd_verify(args) -> int:
    k = args.max_arity or VERIFY_MAX_ARITY
    if not 1 <= k <= VERIFY_MAX_ARITY:
        raise UsageError(f"--max-arity must be between 1 and {VERIFY_MAX_ARITY}")
    seed = args.seed
    results = []
    for check_id, fn in verify_checks(k, seed):
        start = time.perf_counter()
        try:
            status, details = fn()
        except Exception as exc:  # a crash is a failed check, not a usage error
            status, details = "fail", f"{type(exc).__name__}: {exc}"
        elapsed = round((time.perf_counter() - start) * 1000, 1)
        results.append({"check_id": check_id, "status": status, "details": details, "elapsed_ms": elapsed})
        if args.format == "text":
            print(f"{status:4}  {check_id:34} {elapsed:9.1f} ms  {details}", flush=True)
    failed = [r["check_id"] for r in results if r["status"] == "fail"]
    skipped = [r["check_id"] for r in results if r["status"] == "skip"]
    overall = "fail" if failed else "pass"
    if args.format == "json":
        print(json.dumps({"seed": seed, "max_arity": k, "status": overall, "checks": results},
                         indent=None if args.compact else 2))
    else:
        print(f"seed {seed}, max arity {k}: {len(results) - len(failed) - len(skipped)} passed, "
              f"{len(failed)} failed, {len(skipped)} skipped")
    for check_id in failed:
        print(f"check failed: {check_id}", file=sys.stderr)
    return 1 if failed else 0


# --- entry point ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default=None)
    common.add_argument("--compact", action="store_true", help="single-line JSON")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-arity", type=int, default=None)

    p = argparse.ArgumentParser(prog="hypertrees", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", parents=[common], help="list the forests of a family in one arity")
    e.add_argument("--family", choices=FAMILIES, required=True)
    e.add_argument("--arity", type=int)
    e.set_defaults(func=cmd_enumerate, default_format="text")

    c = sub.add_parser("compose", parents=[common], help="partial composition S o_i T")
    c.add_argument("--family", choices=FAMILIES, default="FG")
    c.add_argument("--graded", action="store_true", help="black vertices odd")
    c.add_argument("S")
    c.add_argument("i", type=int)
    c.add_argument("T")
    c.set_defaults(func=cmd_compose, default_format="text")

    r = sub.add_parser("reduce", parents=[common], help="normal form in reduced forests")
    r.add_argument("forest")
    r.add_argument("--strategy", choices=["innermost", "outermost", "random"], default="innermost")
    r.add_argument("--graded", action="store_true")
    r.set_defaults(func=cmd_reduce, default_format="text")

    d = sub.add_parser("diff", parents=[common], help="apply the differential")
    d.add_argument("forest")
    d.add_argument("--convention", choices=CONVENTIONS, default="dgComGreg")
    d.add_argument("--part", choices=["full", "d0", "partition"], default="full")
    d.set_defaults(func=cmd_diff, default_format="text")

    h = sub.add_parser("cohomology", parents=[common], help="dimensions and Betti numbers in one arity")
    h.add_argument("--arity", type=int)
    h.add_argument("--convention", choices=CONVENTIONS, default="dgComGreg")
    h.add_argument("--dump-matrices", metavar="DIR")
    h.set_defaults(func=cmd_cohomology, default_format="json")

    s = sub.add_parser("series", parents=[common], help="coefficient tables n! [t^n] and OEIS comparison")
    s.add_argument("--family", default="FH", help="series id (RT, Greg, FH, FG, FRG, ComPreLie, ...)")
    s.add_argument("--order", type=int)
    s.add_argument("--bigraded", action="store_true", help="split counts by u and v degree")
    s.add_argument("--oeis", metavar="ID")
    s.add_argument("--bfile", metavar="PATH")
    s.set_defaults(func=cmd_series, default_format="text")

    v = sub.add_parser("verify", parents=[common], help="run every invariant check")
    v.set_defaults(func=cmd_verify, default_format="text")
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the message
        return int(exc.code or 0)
    if args.format is None:
        args.format = args.default_format
    try:
        return args.func(args)
    except (UsageError, ArityTooLarge, FamilyMismatch, LabelNotFound, LabelIsBlack, ValueError) as exc:
        print(f"hypertrees {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
