"""Command-line interface.

Subcommands: index, split, merge, annex, paradox, gen, bench. Exit codes:
0 success, 1 domain error (message on stderr), 2 usage error.
"""

from __future__ import annotations

import argparse
import sys

from . import bench as bench_mod
from .backend import available_backends
from .errors import GameError
from .indices import IndexKind, compute_banzhaf, compute_shapley
from .instances import (
    REDUCTION_VARIANTS,
    dictator_family,
    partition_reduction,
    random_game,
    tight_split_family,
    unanimity_game,
)
from .manipulation import (
    SplitAction,
    best_split,
    evaluate_annexation,
    evaluate_merge,
    evaluate_split,
    scan_annexation_nonmonotonicity,
)
from .textio import (
    FORMATS,
    describe_action,
    format_fraction,
    game_to_document,
    game_to_text,
    parse_game,
    render_index_table,
    render_report,
)

_INDEX_KINDS = {
    "bz": IndexKind.BANZHAF,
    "bzp": IndexKind.BANZHAF_PROB,
    "ss": IndexKind.SHAPLEY_SHUBIK,
}


def _csv_ints(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers, got {text!r}")


def _add_common(parser: argparse.ArgumentParser, with_method: bool = True) -> None:
    parser.add_argument("--game", required=True, help="game text, e.g. '[5;2,2,2]'")
    parser.add_argument(
        "--format", choices=FORMATS, default="human", help="output format"
    )
    parser.add_argument(
        "--digits", type=int, default=6, help="significant digits for decimals"
    )
    if with_method:
        parser.add_argument(
            "--method",
            choices=("enum", "dp", "auto"),
            default="auto",
            help="counting engine (auto: enum for tiny games, dp otherwise)",
        )


def _add_index_kind(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--index",
        choices=sorted(_INDEX_KINDS),
        default="bz",
        help="payoff index: bz = normalized Banzhaf, ss = Shapley-Shubik, "
        "bzp = probabilistic Banzhaf (non-standard across games of "
        "different sizes)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wvgkit",
        description="Exact power indices and manipulation analysis for "
        "weighted voting games",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("index", help="swing counts and power indices")
    _add_common(p)

    p = sub.add_parser("split", help="evaluate a split, or search the best one")
    _add_common(p)
    p.add_argument("--player", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--parts", type=_csv_ints, help="explicit parts, e.g. 1,1")
    group.add_argument(
        "--max-parts", type=int, help="search all splits into up to this many parts"
    )
    _add_index_kind(p)

    p = sub.add_parser("merge", help="evaluate a voluntary merge")
    _add_common(p)
    p.add_argument("--members", type=_csv_ints, required=True, help="e.g. 1,2")
    _add_index_kind(p)

    p = sub.add_parser("annex", help="evaluate an annexation")
    _add_common(p)
    p.add_argument("--player", type=int, required=True)
    p.add_argument("--targets", type=_csv_ints, required=True, help="e.g. 2,3")
    _add_index_kind(p)

    p = sub.add_parser(
        "paradox", help="scan one player's single-target annexations for "
        "non-monotonicity witnesses"
    )
    _add_common(p)
    p.add_argument("--player", type=int, required=True)
    _add_index_kind(p)

    p = sub.add_parser("gen", help="construct named families and instances")
    kind = p.add_mutually_exclusive_group(required=True)
    kind.add_argument(
        "--family", choices=("tight-split", "dictator"), help="named game family"
    )
    kind.add_argument(
        "--unanimity", type=_csv_ints, metavar="WEIGHTS", help="unanimity game"
    )
    kind.add_argument(
        "--reduction", choices=REDUCTION_VARIANTS, help="reduction instance"
    )
    kind.add_argument("--random", action="store_true", help="seeded random game")
    p.add_argument("--n", type=int, help="size parameter (family/random)")
    p.add_argument("--values", type=_csv_ints, help="reduction input values")
    p.add_argument("--max-weight", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--proper", action="store_true", help="force a proper game")
    p.add_argument("--format", choices=("human", "structured"), default="human")

    p = sub.add_parser("bench", help="time enum vs dp across sizes and backends")
    p.add_argument("--sizes", type=_csv_ints, default=[12, 16, 20])
    p.add_argument("--max-weight", type=int, default=50)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument(
        "--backends",
        default=",".join(available_backends()),
        help="comma-separated kernel backends",
    )
    p.add_argument("--repeat", type=int, default=2)

    return parser


def _cmd_index(args) -> int:
    game = parse_game(args.game)
    banzhaf = compute_banzhaf(game, method=args.method)
    shapley = compute_shapley(game, method=args.method)
    print(
        render_index_table(
            game, banzhaf, shapley, args.format, args.digits, method=args.method
        )
    )
    return 0


def _cmd_split(args) -> int:
    game = parse_game(args.game)
    kind = _INDEX_KINDS[args.index]
    if args.parts is not None:
        report = evaluate_split(
            game, SplitAction(args.player, tuple(args.parts)), kind, args.method
        )
        print(render_report(report, args.format, args.digits))
        return 0
    report = best_split(game, args.player, args.max_parts, kind, args.method)
    if report is None:
        print("no beneficial split")
        return 0
    print(render_report(report, args.format, args.digits))
    return 0


def _cmd_merge(args) -> int:
    game = parse_game(args.game)
    report = evaluate_merge(
        game, args.members, _INDEX_KINDS[args.index], args.method
    )
    print(render_report(report, args.format, args.digits))
    return 0


def _cmd_annex(args) -> int:
    game = parse_game(args.game)
    report = evaluate_annexation(
        game, args.player, args.targets, _INDEX_KINDS[args.index], args.method
    )
    print(render_report(report, args.format, args.digits))
    return 0


def _cmd_paradox(args) -> int:
    game = parse_game(args.game)
    kind = _INDEX_KINDS[args.index]
    witnesses = scan_annexation_nonmonotonicity(game, args.player, kind, args.method)
    if not witnesses:
        print("no non-monotonicity witnesses")
        return 0
    print(f"{len(witnesses)} witness pair(s): heavier target j pays less than k")
    for j, k in witnesses:
        heavier = evaluate_annexation(game, args.player, {j}, kind, args.method)
        lighter = evaluate_annexation(game, args.player, {k}, kind, args.method)
        print(
            f"  j={j} (weight {game.weights[j - 1]}, payoff "
            f"{format_fraction(heavier.after, args.digits)})  <  "
            f"k={k} (weight {game.weights[k - 1]}, payoff "
            f"{format_fraction(lighter.after, args.digits)})"
        )
    return 0


def _cmd_gen(args) -> int:
    focus = None
    if args.family:
        if args.n is None:
            raise GameError("--family needs --n")
        game = (
            tight_split_family(args.n)
            if args.family == "tight-split"
            else dictator_family(args.n)
        )
    elif args.unanimity is not None:
        game = unanimity_game(args.unanimity)
    elif args.reduction:
        if not args.values:
            raise GameError("--reduction needs --values")
        built = partition_reduction(args.values, args.reduction)
        game, focus = built.game, built.focus
    else:
        if args.n is None:
            raise GameError("--random needs --n")
        game = random_game(args.n, args.max_weight, args.seed, args.proper)

    if args.format == "structured":
        import json

        doc = {"game": game_to_document(game)}
        if focus is not None:
            doc["focus"] = describe_action(focus)
        print(json.dumps(doc, sort_keys=True, separators=(",", ": "), indent=2))
    else:
        print(game_to_text(game))
        if focus is not None:
            print(f"focus: {describe_action(focus)}")
    return 0


def _cmd_bench(args) -> int:
    backends = [b.strip() for b in args.backends.split(",") if b.strip()]
    rows = bench_mod.run_bench(
        args.sizes, args.max_weight, args.seed, backends, args.repeat
    )
    print(bench_mod.format_bench_table(rows))
    return 0


_HANDLERS = {
    "index": _cmd_index,
    "split": _cmd_split,
    "merge": _cmd_merge,
    "annex": _cmd_annex,
    "paradox": _cmd_paradox,
    "gen": _cmd_gen,
    "bench": _cmd_bench,
}


def run_command(argv: list[str]) -> int:
    """Parse argv and run; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args)
    except GameError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:  # pragma: no cover - thin wrapper
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":  # pragma: no cover
    main()
