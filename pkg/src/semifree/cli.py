"""Command-line surface: check, count, ring, solve, reduce, search.

Input files are plain text.  A document looks like

    # the two-point configuration in dimension 6
    n = 3
    point A weights 1 1 -2 moment -1/2
    point B weights -1 -1 2 moment 1/2

Rationals are written p/q or as plain integers.  Exit codes: 0 success,
1 a mathematical constraint failed, 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import localization, reduction
from .cube import (
    ModelData,
    all_subsets,
    alpha_class,
    equivariant_chern_series,
    hypercube_data,
    restrict_class,
    subset_id,
)
from .errors import (
    DuplicateId,
    InputError,
    SemifreeError,
    WrongWeightCount,
    ZeroWeight,
)
from .fixed_points import FixedPoint, FixedPointData, counts, validate
from .pipeline import run_pipeline

EXIT_OK = 0
EXIT_CONSTRAINT = 1
EXIT_INPUT = 2


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise InputError(f"bad rational {text!r}") from e


def parse_document(text: str) -> FixedPointData:
    """Parse the fixed-point data document format described above."""
    n = None
    points = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("n"):
            parts = line.replace("=", " ").split()
            if len(parts) != 2 or parts[0] != "n":
                raise InputError(f"line {lineno}: expected 'n = <int>'")
            try:
                n = int(parts[1])
            except ValueError:
                raise InputError(f"line {lineno}: bad n {parts[1]!r}")
        elif line.startswith("point"):
            if n is None:
                raise InputError(f"line {lineno}: 'n = ...' must come first")
            tokens = line.split()
            if len(tokens) < 3 or tokens[2] != "weights":
                raise InputError(
                    f"line {lineno}: expected 'point <id> weights w1 ... [moment p/q]'"
                )
            pid = tokens[1]
            rest = tokens[3:]
            moment = None
            if "moment" in rest:
                i = rest.index("moment")
                if i + 1 != len(rest) - 1:
                    raise InputError(f"line {lineno}: moment takes one value")
                moment = parse_rational(rest[i + 1])
                rest = rest[:i]
            try:
                weights = tuple(int(w) for w in rest)
            except ValueError:
                raise InputError(f"line {lineno}: weights must be integers")
            if not weights:
                raise InputError(f"line {lineno}: no weights given")
            points.append(FixedPoint(pid, weights, moment))
        else:
            raise InputError(f"line {lineno}: unrecognized directive {line!r}")
    if n is None:
        raise InputError("missing 'n = <int>' line")
    if not points:
        raise InputError("no points given")
    return FixedPointData(n, tuple(points))


def load_document(path: str) -> FixedPointData:
    try:
        with open(path) as f:
            text = f.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e}") from e
    return parse_document(text)


def cmd_check(args) -> int:
    data = load_document(args.file)
    validate(data)
    max_degree = args.max_degree if args.max_degree is not None else data.n
    failed = False
    if data.semifree:
        report = localization.verify_moment_equations(data)
        for l, s in report.sums:
            print(f"moment equation l={l}: sum = {s}"
                  + ("" if s == 0 else "  FAIL"))
        failed |= not report.passed
    else:
        print("data is not semifree; skipping moment equations")
    creport = localization.consistency_check(data, max_degree)
    for entry in creport.entries:
        mono = " ".join(
            f"c{i+1}^{e}" if e > 1 else f"c{i+1}"
            for i, e in enumerate(entry.exponents)
            if e
        ) or "1"
        status = "ok" if entry.ok else "FAIL"
        print(f"integral of {mono} (degree {entry.degree}): "
              f"{entry.value} * x^{entry.degree - data.n}  {status}")
    failed |= not creport.passed
    print("check:", "FAIL" if failed else "PASS")
    return EXIT_CONSTRAINT if failed else EXIT_OK


def cmd_count(args) -> int:
    cv = localization.predict_counts(args.n, args.N0)
    print(" ".join(str(c) for c in cv.N))
    return EXIT_OK


def _ring_tables(n: int):
    subsets = all_subsets(n)
    basis = []
    for J in subsets:
        row = [str(restrict_class(alpha_class(J), Jp)) for Jp in subsets]
        basis.append({"subset": sorted(J), "id": subset_id(J), "restrictions": row})
    chern = [str(c) for c in equivariant_chern_series(n, n)]
    return {
        "n": n,
        "points": [subset_id(J) for J in subsets],
        "basis": basis,
        "chern_series": chern,
    }


def cmd_ring(args) -> int:
    tables = _ring_tables(args.n)
    if args.format == "structured":
        print(json.dumps(tables, indent=2))
        return EXIT_OK
    print(f"model ring for n={args.n}: Z[a1..a{args.n}, y]/(ai*y - ai^2)")
    print("points:", " ".join(tables["points"]))
    for row in tables["basis"]:
        label = "alpha_" + (row["id"][1:] or "0")
        print(f"{label}: " + "  ".join(row["restrictions"]))
    for i, c in enumerate(tables["chern_series"], start=1):
        print(f"c{i} = {c}")
    return EXIT_OK


def cmd_solve(args) -> int:
    data = load_document(args.file)
    cert, bijection = run_pipeline(data)
    n = data.n
    print(f"counts: {' '.join(str(c) for c in counts(data).N)}")
    for k in range(n + 1):
        print(f"level {k}: generator sum = {cert.level_sums[k]}, "
              f"values = {list(cert.level_value_multisets[k])}")
    print("bijection certificate:")
    for pid, _ in cert.table.point_levels:
        J = bijection.subsets[pid]
        print(f"  {pid} -> {{{', '.join(str(i) for i in sorted(J))}}}")
    print("restriction data is isomorphic to the model's")
    return EXIT_OK


def cmd_reduce(args) -> int:
    if args.file:
        data = load_document(args.file)
        pres = reduction.presentation_from_data(data)
        n = data.n
        moment_data = data
    else:
        if args.n is None:
            raise InputError("reduce needs --n (with optional --c) or a file")
        n = args.n
        c = parse_rational(args.c) if args.c else None
        model = ModelData(n, c)
        pres = reduction.kernel_generators(model)
        moment_data = hypercube_data(n, with_moment=True, c=model.c)
    max_degree = args.max_degree if args.max_degree is not None else 2 * (n - 1)
    q = reduction.graded_quotient(pres, max_degree)
    print("betti:", " ".join(str(r) for r in q.ranks))
    failed = False
    for i, r in enumerate(q.ranks):
        by_count = reduction.betti_by_counting(moment_data, i)
        if by_count != r:
            print(f"degree {2*i}: quotient rank {r} != counting rank {by_count}  FAIL")
            failed = True
    if any(q.torsion):
        print("torsion:", q.torsion, " FAIL")
        failed = True
    duality = reduction.poincare_check(q, n)
    print("poincare duality:", "ok" if duality.passed else "FAIL")
    failed |= not duality.passed
    for entry in reduction.reduced_chern_series(pres, min(n, max_degree // 2)):
        print(f"c{entry.degree} image: {list(entry.coefficients)}")
    print("euler characteristic:", q.euler_characteristic)
    return EXIT_CONSTRAINT if failed else EXIT_OK


def cmd_search(args) -> int:
    results = localization.search_candidates(
        args.n, args.points, args.bound, args.degree
    )
    print(f"{len(results)} configuration(s) pass all checks up to degree {args.degree}")
    for config in results:
        print("  " + "  ".join("(" + ",".join(map(str, w)) + ")" for w in config))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semifree",
        description="Exact localization computations for circle actions "
        "with isolated fixed points.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate data and run all integral constraints")
    p.add_argument("file")
    p.add_argument("--max-degree", type=int, default=None)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("count", help="fixed-point counts forced by the moment equations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--N0", type=int, default=1)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("ring", help="model ring basis, restriction table, Chern series")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.set_defaults(func=cmd_ring)

    p = sub.add_parser("solve", help="run the deduction pipeline on a data file")
    p.add_argument("file")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("reduce", help="cohomology of the reduction at level zero")
    p.add_argument("file", nargs="?", default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--c", default=None)
    p.add_argument("--max-degree", type=int, default=None)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("search", help="enumerate weight data passing the sieve")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, DuplicateId, WrongWeightCount, ZeroWeight) as e:
        print(f"input error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except SemifreeError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONSTRAINT


if __name__ == "__main__":
    sys.exit(main())
