"""Command-line interface.

Verbs: build, crit, matrix, skeleton, hyper, hasse, verify, sweep,
bench.  Exit codes: 0 success, 1 verification mismatch, 2 parameter
error, 3 resource cap exceeded.  All output is deterministic.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .crowns import (
    ParameterError,
    build_layered_crown,
    crit_pairs_closed_form,
)
from .cycles import (
    DEFAULT_MAX_CYCLE_LEN,
    DEFAULT_SUBSET_BUDGET,
    BudgetExceededError,
    SkeletonGraph,
    enumerate_hyperedges,
    skeleton,
)
from .matrix import (
    MODE_CORRECTED,
    MODES,
    LabelMismatchError,
    MatrixMismatchError,
    bench,
    canonical_labels,
    layered_matrix,
    oracle_matrix,
)
from .poset import CriticalPair, PosetError
from .report import sweep, verify
from .serialize import (
    MATRIX_FORMATS,
    POSET_FORMATS,
    SKELETON_FORMATS,
    dual_label,
    export_matrix,
    export_poset,
    export_skeleton,
    pair_label,
    pairs_are_single,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_PARAMETER = 2
EXIT_RESOURCE = 3


def _emit(text: str, path: str | None) -> None:
    if path:
        Path(path).write_bytes(text.encode("utf-8"))
    else:
        sys.stdout.write(text)


def _add_crown_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-n", type=int, required=True, help="crown width parameter")
    parser.add_argument("-k", type=int, required=True, help="miss count parameter")
    parser.add_argument("-l", type=int, default=1, help="layer count (default 1)")
    parser.add_argument(
        "--permissive", action="store_true", help="allow n=2 (oracle paths only)"
    )


def _add_mode(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--mode",
        choices=MODES,
        default=MODE_CORRECTED,
        help="closed-form variant (default corrected)",
    )


def _add_method(parser: argparse.ArgumentParser, default: str = "both") -> None:
    parser.add_argument(
        "--method",
        choices=("formula", "oracle", "both"),
        default=default,
        help=f"computation route (default {default})",
    )


def _add_output(parser: argparse.ArgumentParser, formats: tuple[str, ...], default: str) -> None:
    parser.add_argument("--format", choices=formats, default=default)
    parser.add_argument("-o", dest="output", default=None, help="write to file")


def _oracle_pairs(args: argparse.Namespace):
    """Poset plus its critical pairs, canonically ordered when possible."""
    poset = build_layered_crown(args.n, args.k, args.l, args.permissive)
    actual = poset.critical_pairs()
    try:
        labels = canonical_labels(args.n, args.k, args.l, args.permissive)
        ordered = [label.pair for label in labels]
        if set(ordered) == actual and len(ordered) == len(actual):
            return poset, ordered
    except ParameterError:
        pass
    return poset, sorted(actual)


def cmd_build(args: argparse.Namespace) -> int:
    poset = build_layered_crown(args.n, args.k, args.l, args.permissive)
    _emit(export_poset(poset, args.format), args.output)
    return EXIT_OK


def cmd_hasse(args: argparse.Namespace) -> int:
    poset = build_layered_crown(args.n, args.k, args.l, args.permissive)
    _emit(export_poset(poset, "dot"), args.output)
    return EXIT_OK


def _crit_text(pairs: list[CriticalPair], fmt: str) -> str:
    single = pairs_are_single(pairs)
    if fmt == "pretty":
        return "".join(pair_label(p, single) + "\n" for p in pairs)
    doc = [
        {
            "lowerRow": p.lower.row,
            "lowerPos": p.lower.pos,
            "upperRow": p.upper.row,
            "upperPos": p.upper.pos,
        }
        for p in pairs
    ]
    return json.dumps(doc, indent=2) + "\n"


def cmd_crit(args: argparse.Namespace) -> int:
    if args.method == "formula":
        pairs = crit_pairs_closed_form(args.n, args.k, args.l)
    elif args.method == "oracle":
        _, pairs = _oracle_pairs(args)
    else:
        pairs = crit_pairs_closed_form(args.n, args.k, args.l)
        poset = build_layered_crown(args.n, args.k, args.l, args.permissive)
        if set(pairs) != poset.critical_pairs():
            print("critical pairs: formula and oracle disagree", file=sys.stderr)
            return EXIT_MISMATCH
    _emit(_crit_text(pairs, args.format), args.output)
    return EXIT_OK


def cmd_matrix(args: argparse.Namespace) -> int:
    if args.method == "formula":
        matrix = layered_matrix(args.n, args.k, args.l, args.mode)
    elif args.method == "oracle":
        matrix = oracle_matrix(args.n, args.k, args.l, args.permissive)
    else:
        matrix = layered_matrix(args.n, args.k, args.l, args.mode)
        oracle = oracle_matrix(args.n, args.k, args.l, args.permissive)
        if matrix.labels != oracle.labels or matrix.entries != oracle.entries:
            diff = sum(
                1
                for frow, orow in zip(matrix.entries, oracle.entries)
                for fbit, obit in zip(frow, orow)
                if fbit != obit
            )
            print(f"matrix: formula and oracle disagree in {diff} entries", file=sys.stderr)
            return EXIT_MISMATCH
    _emit(export_matrix(matrix, args.format), args.output)
    return EXIT_OK


def _formula_skeleton(args: argparse.Namespace) -> SkeletonGraph:
    matrix = layered_matrix(args.n, args.k, args.l, args.mode)
    edges = frozenset(
        (i, j)
        for i in range(matrix.dim)
        for j in range(i + 1, matrix.dim)
        if matrix.entries[i][j]
    )
    return SkeletonGraph(tuple(label.pair for label in matrix.labels), edges)


def cmd_skeleton(args: argparse.Namespace) -> int:
    if args.method == "formula":
        graph = _formula_skeleton(args)
    elif args.method == "oracle":
        poset, pairs = _oracle_pairs(args)
        graph = skeleton(poset, pairs)
    else:
        formula = _formula_skeleton(args)
        poset, pairs = _oracle_pairs(args)
        graph = skeleton(poset, pairs)
        if formula.vertices != graph.vertices or formula.edges != graph.edges:
            print("skeleton: formula and oracle disagree", file=sys.stderr)
            return EXIT_MISMATCH
    _emit(export_skeleton(graph, args.format), args.output)
    return EXIT_OK


def cmd_hyper(args: argparse.Namespace) -> int:
    poset, pairs = _oracle_pairs(args)
    hyperedges = enumerate_hyperedges(poset, pairs, args.max_cycle_len, args.budget)
    index = {pair: i for i, pair in enumerate(pairs)}
    single = pairs_are_single(pairs)
    keyed = sorted(
        (len(edge), tuple(sorted(index[p] for p in edge))) for edge in hyperedges
    )
    if args.format == "pretty":
        text = "".join(
            " ".join(dual_label(pairs[i], single) for i in members) + "\n"
            for _, members in keyed
        )
    else:
        doc = [
            {"size": size, "members": [pair_label(pairs[i], single) for i in members]}
            for size, members in keyed
        ]
        text = json.dumps(doc, indent=2) + "\n"
    _emit(text, args.output)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    report = verify(args.n, args.k, args.l, args.mode)
    print(report.summary())
    for row, col, fbit, obit in report.mismatches[:10]:
        print(f"  mismatch ({row}, {col}): formula={fbit} oracle={obit}")
    if len(report.mismatches) > 10:
        print(f"  ... {len(report.mismatches) - 10} more")
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_sweep(args: argparse.Namespace) -> int:
    result = sweep(
        args.n_max,
        args.k_max,
        args.l_max,
        nk_max=args.nk_max,
        mode=args.mode,
        budget=args.budget,
        jobs=args.jobs,
    )
    for report in result.reports:
        print(report.summary())
    passed = sum(1 for r in result.reports if r.ok)
    status = "complete" if result.complete else "INCOMPLETE (budget exceeded)"
    print(f"sweep: {len(result.reports)} tuples, {passed} pass, "
          f"{len(result.reports) - passed} fail ({status})")
    if not result.all_ok:
        return EXIT_MISMATCH
    if not result.complete:
        return EXIT_RESOURCE
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    report = bench(args.n, args.k, args.l, args.mode)
    print(
        f"bench n={args.n} k={args.k} l={args.l}: dim={report.dimension} "
        f"formula={report.formula_seconds:.6f}s oracle={report.oracle_seconds:.6f}s"
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crownskel",
        description="Generalized crowns, critical pairs, and skeleton adjacency matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct a layered crown poset")
    _add_crown_args(p)
    _add_output(p, POSET_FORMATS, "pretty")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("hasse", help="cover diagram in DOT form")
    _add_crown_args(p)
    p.add_argument("-o", dest="output", default=None)
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("crit", help="critical pairs in canonical order")
    _add_crown_args(p)
    _add_method(p)
    _add_output(p, ("pretty", "json"), "pretty")
    p.set_defaults(func=cmd_crit)

    p = sub.add_parser("matrix", help="skeleton adjacency matrix")
    _add_crown_args(p)
    _add_method(p)
    _add_mode(p)
    _add_output(p, MATRIX_FORMATS, "pretty")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("skeleton", help="skeleton graph of the critical pairs")
    _add_crown_args(p)
    _add_method(p, default="oracle")
    _add_mode(p)
    _add_output(p, SKELETON_FORMATS, "pretty")
    p.set_defaults(func=cmd_skeleton)

    p = sub.add_parser("hyper", help="bounded enumeration of strict-cycle hyperedges")
    _add_crown_args(p)
    p.add_argument("--max-cycle-len", type=int, default=DEFAULT_MAX_CYCLE_LEN)
    p.add_argument("--budget", type=int, default=DEFAULT_SUBSET_BUDGET)
    _add_output(p, ("pretty", "json"), "pretty")
    p.set_defaults(func=cmd_hyper)

    p = sub.add_parser("verify", help="compare closed form against the oracle")
    _add_crown_args(p)
    _add_mode(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="verify a whole parameter box")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--l-max", type=int, required=True)
    p.add_argument("--nk-max", type=int, default=None, help="cap on n+k")
    _add_mode(p)
    p.add_argument("--budget", type=int, default=None, help="max tuples to verify")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("bench", help="time closed form against the oracle")
    _add_crown_args(p)
    _add_mode(p)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (MatrixMismatchError, LabelMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (ParameterError, PosetError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMETER


if __name__ == "__main__":
    raise SystemExit(main())
