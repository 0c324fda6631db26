"""Command-line front end: count, expand, verify, classes, phi.

Every run is deterministic: identical arguments produce byte-identical
output, so files written with --out are stable across runs and machines.
The ``verify`` subcommand exits nonzero iff any check fails; documented
deviations (bundled claims the oracles refute, with pinned witnesses) do
not fail a run but are labelled in the report.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import census, perms, series
from . import verify as verify_mod

_VALID_FORMATS = {
    "count": ("text", "json"),
    "expand": ("text", "json"),
    "verify": ("text", "json"),
    "classes": ("csv", "json"),
    "phi": ("text", "csv", "json"),
}


def _pattern_arg(text: str) -> str:
    if text not in perms.PATTERN_NAMES:
        raise argparse.ArgumentTypeError(
            f"unknown pattern {text!r}; valid names: {', '.join(perms.PATTERN_NAMES)}"
        )
    return text


def _emit(text: str, out: str | None) -> None:
    if out is None:
        print(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True)


# ---------------------------------------------------------------------------
# count


def _parse_input_permutation(text: str) -> tuple[int, ...]:
    cleaned = text.strip()
    if cleaned.startswith("("):
        return perms.perm_from_cycles(perms.parse_cycles(cleaned))
    return perms.parse_permutation(cleaned)


def cmd_count(args: argparse.Namespace) -> int:
    word = _parse_input_permutation(args.perm)
    cycles = perms.to_cycle_form(word, args.convention)
    if args.pair is not None:
        p_b = perms.parse_pattern(args.pair[0])
        p_w = perms.parse_pattern(args.pair[1])
        between, within = perms.count_pair(cycles, p_b, p_w)
        pattern_label = f"{p_b.name} (between), {p_w.name} (within)"
    else:
        pattern = perms.parse_pattern(args.pattern)
        result = perms.count_cyclic(cycles, pattern)
        between, within = result.between, result.within
        pattern_label = pattern.name
    payload = {
        "input": args.perm.strip(),
        "cycle_form": perms.format_cycles(cycles),
        "convention": args.convention,
        "pattern": pattern_label,
        "between": between,
        "within": within,
        "total": between + within,
        "cycles": len(cycles),
    }
    if args.format == "json":
        _emit(_json_text(payload), args.out)
    else:
        lines = [
            f"input: {payload['input']}",
            f"cycle form [{args.convention}]: {payload['cycle_form']}",
            f"pattern: {pattern_label}",
            f"between: {between}",
            f"within: {within}",
            f"total: {between + within}",
            f"cycles: {len(cycles)}",
        ]
        _emit("\n".join(lines), args.out)
    return 0


# ---------------------------------------------------------------------------
# expand


def cmd_expand(args: argparse.Namespace) -> int:
    t_max = 6 if args.n_max is None else args.n_max
    if t_max < 0:
        raise ValueError("--n-max must be nonnegative")
    f = series.expand_f(t_max, q=args.q, x=args.x, y=args.y)
    pinned = {
        name: value
        for name, value in (("q", args.q), ("x", args.x), ("y", args.y))
        if value is not None
    }
    if args.format == "json":
        rows = []
        for n in range(t_max + 1):
            row = f.coefficient_poly("t", n)
            rows.append(
                {
                    "t": n,
                    "terms": [
                        {"q": key[0], "x": key[1], "y": key[2], "coeff": coeff}
                        for key, coeff in row.sorted_terms()
                    ],
                }
            )
        _emit(_json_text({"t_max": t_max, "pinned": pinned, "rows": rows}), args.out)
    else:
        header = "F(q, x, y, t)"
        if pinned:
            fixed = ", ".join(f"{k}={v}" for k, v in sorted(pinned.items()))
            header += f" at {fixed}"
        lines = [f"{header}, rows by t-degree up to t^{t_max}"]
        for n in range(t_max + 1):
            lines.append(f"t^{n}: {f.coefficient_poly('t', n).to_text()}")
        _emit("\n".join(lines), args.out)
    return 0


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args: argparse.Namespace) -> int:
    names = args.suites or None
    if names:
        unknown = [name for name in names if name not in verify_mod.SUITES]
        if unknown:
            raise ValueError(
                f"unknown suite names {unknown}; available: {', '.join(verify_mod.SUITES)}"
            )
    results = verify_mod.run_all(names, bound=args.n_max)
    if args.format == "json":
        payload = [
            {"suite": r.suite, "name": r.name, "status": r.status, "details": r.details}
            for r in results
        ]
        _emit(_json_text(payload), args.out)
    else:
        _emit(verify_mod.format_report(results), args.out)
    return 0 if all(r.ok for r in results) else 1


# ---------------------------------------------------------------------------
# classes


def _partition_csv(classes: list[list[tuple[str, str]]]) -> str:
    lines = ["class,between,within"]
    for index, members in enumerate(classes, start=1):
        for p_b, p_w in members:
            lines.append(f"{index},{p_b},{p_w}")
    return "\n".join(lines)


def _diff_against_table(classes: list[list[tuple[str, str]]]) -> dict:
    """Compare a computed partition with the bundled table of groups.

    Reports bundled groups that split across computed classes, and
    multi-pair computed classes whose member set matches no single group
    (coincidences the table does not list, or unions of its rows).
    """
    class_of = {
        pair: index
        for index, members in enumerate(classes, start=1)
        for pair in members
    }
    groups = census.conjectured_equivalences()
    split = []
    intact = 0
    for group in groups:
        ids = sorted({class_of[pair] for pair in group.pairs})
        if len(ids) == 1:
            intact += 1
        else:
            split.append({"row": group.row, "kind": group.kind, "classes": ids})
    group_sets = {tuple(sorted(group.pairs)) for group in groups}
    row_of = {pair: group.row for group in groups for pair in group.pairs}
    unmatched = []
    for index, members in enumerate(classes, start=1):
        if len(members) < 2 or tuple(members) in group_sets:
            continue
        rows = sorted({row_of[pair] for pair in members if pair in row_of})
        unmatched.append({"class": index, "pairs": members, "overlaps_rows": rows})
    return {
        "groups_total": len(groups),
        "groups_intact": intact,
        "groups_split": split,
        "classes_without_matching_group": unmatched,
    }


def _diff_text(diff: dict, n_max: int, stat: str, with_cycles: bool, total: int) -> str:
    refinement = "on" if with_cycles else "off"
    lines = [
        f"computed {total} classes over 144 pairs "
        f"(n_max={n_max}, stat={stat}, cycles={refinement})",
        f"bundled groups intact: {diff['groups_intact']}/{diff['groups_total']}",
    ]
    for record in diff["groups_split"]:
        ids = ", ".join(str(i) for i in record["classes"])
        lines.append(f"  split: row {record['row']} [{record['kind']}] -> classes {ids}")
    unmatched = diff["classes_without_matching_group"]
    if unmatched:
        lines.append("multi-pair classes matching no single bundled group:")
        for record in unmatched:
            pairs = " ".join(f"{b}|{w}" for b, w in record["pairs"])
            rows = ", ".join(str(r) for r in record["overlaps_rows"]) or "none"
            lines.append(f"  class {record['class']} (overlaps rows {rows}): {pairs}")
    return "\n".join(lines)


def cmd_classes(args: argparse.Namespace) -> int:
    n_max = census.DEFAULT_MAX_N if args.n_max is None else args.n_max
    classes = census.partition_classes(
        n_max,
        args.stat,
        args.with_cycles,
        args.convention,
        workers=args.workers,
    )
    diff = _diff_against_table(classes)
    if args.format == "json":
        payload = {
            "n_max": n_max,
            "stat": args.stat,
            "with_cycles": args.with_cycles,
            "convention": args.convention,
            "classes": [[list(pair) for pair in members] for members in classes],
            "table_diff": diff,
        }
        _emit(_json_text(payload), args.out)
        return 0
    csv_text = _partition_csv(classes)
    diff_text = _diff_text(diff, n_max, args.stat, args.with_cycles, len(classes))
    if args.out is None:
        _emit(csv_text + "\n\n" + diff_text, None)
    else:
        _emit(csv_text, args.out)
        _emit(diff_text, None)
    return 0


# ---------------------------------------------------------------------------
# phi


def _phi_rows(n_values: list[int]) -> list[tuple[int, int, int, int]]:
    return [
        (i, m, n, series.coeff_closed(i, m, n))
        for i in range(3)
        for n in n_values
        for m in range(n + 1)
    ]


def cmd_phi(args: argparse.Namespace) -> int:
    if args.n is not None:
        n_values = [args.n]
        t_max = args.n
    else:
        t_max = 10 if args.n_max is None else args.n_max
        n_values = list(range(t_max + 1))
    if t_max < 0:
        raise ValueError("the requested size bound must be nonnegative")
    rows = _phi_rows(n_values)
    mismatches = []
    if args.check:
        f = series.expand_f(t_max, 2, y=1)
        mismatches = [
            {"i": i, "m": m, "n": n, "closed": value, "series": f.coeff(q=i, x=m, t=n)}
            for i, m, n, value in rows
            if value != f.coeff(q=i, x=m, t=n)
        ]
    if args.format == "json":
        payload = {
            "rows": [{"i": i, "m": m, "n": n, "value": v} for i, m, n, v in rows],
            "checked": bool(args.check),
            "mismatches": mismatches,
        }
        _emit(_json_text(payload), args.out)
    elif args.format == "csv":
        lines = ["i,m,n,value"] + [f"{i},{m},{n},{v}" for i, m, n, v in rows]
        _emit("\n".join(lines), args.out)
    else:
        width = max(len(str(v)) for _, _, _, v in rows)
        lines = ["coefficient of q^i x^m t^n at y = 1, closed forms for i <= 2"]
        for i, m, n, v in rows:
            lines.append(f"i={i} m={m:2d} n={n:2d}  {v:>{width}d}")
        if args.check:
            lines.append(
                "all values match the series expansion"
                if not mismatches
                else f"MISMATCHES against the series: {mismatches}"
            )
        _emit("\n".join(lines), args.out)
    return 1 if mismatches else 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclepat",
        description=(
            "Exact enumeration of glued patterns over permutation cycle words, "
            "their Motzkin path weights, and the joint series."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, command: str) -> None:
        p.add_argument(
            "--format",
            choices=_VALID_FORMATS[command],
            default=_VALID_FORMATS[command][0],
            help="output format (default %(default)s)",
        )
        p.add_argument("--out", metavar="FILE", help="write the main output to FILE")

    p_count = sub.add_parser(
        "count",
        help="count pattern occurrences in one permutation's cycle word",
    )
    p_count.add_argument(
        "perm",
        help="permutation: cycle form \"(2 7 5 3 6 8)(1 4)\", one-line digits "
        "\"47613852\", or comma-separated \"4,7,6,1,3,8,5,2\"",
    )
    p_count.add_argument(
        "--pattern",
        type=_pattern_arg,
        default="2-13",
        help="pattern name such as 2-13 (default %(default)s)",
    )
    p_count.add_argument(
        "--pair",
        nargs=2,
        type=_pattern_arg,
        metavar=("BETWEEN", "WITHIN"),
        help="two patterns: count between-occurrences of the first and "
        "within-occurrences of the second",
    )
    p_count.add_argument(
        "--convention",
        choices=perms.CONVENTIONS,
        default="dec-min",
        help="cycle listing convention (default %(default)s)",
    )
    add_common(p_count, "count")
    p_count.set_defaults(func=cmd_count)

    p_expand = sub.add_parser(
        "expand", help="expand the joint series F(q, x, y, t) by t-degree"
    )
    p_expand.add_argument("--n-max", type=int, help="highest t-degree (default 6)")
    for name in ("q", "x", "y"):
        p_expand.add_argument(
            f"--{name}", type=int, help=f"pin variable {name} to an integer"
        )
    add_common(p_expand, "expand")
    p_expand.set_defaults(func=cmd_expand)

    p_verify = sub.add_parser(
        "verify", help="run verification suites; nonzero exit on any failure"
    )
    p_verify.add_argument(
        "suites",
        nargs="*",
        metavar="SUITE",
        help=f"suite names (default: all); available: {', '.join(verify_mod.SUITES)}",
    )
    p_verify.add_argument(
        "--n-max",
        type=int,
        help="override each suite's sweep bound (witnesses are pinned at the defaults)",
    )
    add_common(p_verify, "verify")
    p_verify.set_defaults(func=cmd_verify)

    p_classes = sub.add_parser(
        "classes",
        help="partition the 144 pattern pairs by distribution and diff the bundled table",
    )
    p_classes.add_argument(
        "--n-max", type=int, help=f"check sizes up to n (default {census.DEFAULT_MAX_N})"
    )
    p_classes.add_argument(
        "--stat",
        choices=("sum", "joint"),
        default="sum",
        help="statistic reading (default %(default)s)",
    )
    p_classes.add_argument(
        "--with-cycles",
        action="store_true",
        help="refine distributions by cycle count",
    )
    p_classes.add_argument(
        "--convention",
        choices=perms.CONVENTIONS,
        default="dec-min",
        help="cycle listing convention (default %(default)s)",
    )
    p_classes.add_argument(
        "--workers", type=int, default=1, help="census worker processes (default 1)"
    )
    add_common(p_classes, "classes")
    p_classes.set_defaults(func=cmd_classes)

    p_phi = sub.add_parser(
        "phi", help="tabulate the closed coefficient formulas for q^i, i <= 2"
    )
    p_phi.add_argument("--n", type=int, help="single t-degree n")
    p_phi.add_argument("--n-max", type=int, help="t-degrees 0..n (default 10)")
    p_phi.add_argument(
        "--check",
        action="store_true",
        help="cross-check every value against the series expansion",
    )
    add_common(p_phi, "phi")
    p_phi.set_defaults(func=cmd_phi)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (census.EnumerationLimitError, ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
