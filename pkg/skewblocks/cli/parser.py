"""
Argument parser for the skewblocks command line.

    skewblocks count     --patterns 132 --n-max 6 --by-blocks
    skewblocks verify    --lemma good --pattern 3142 --n-max 7
    skewblocks series    --from-pattern 132 --n-max 8 indecomposable-part
    skewblocks series    supercritical --num 0,1 --den 1,-1
    skewblocks classify  --pattern 1324 --depth 8
"""

import argparse

LEMMAS = ("132", "good", "mongen", "counterexample", "inverse")

SERIES_OPS = (
    "quasi-inverse",
    "indecomposable-part",
    "power",
    "eval",
    "dominates",
    "supercritical",
    "square-exceeds",
)

# The pattern set whose block counts are known to increase
COUNTEREXAMPLE_PATTERNS = "123,132"


def _global_options() -> argparse.ArgumentParser:
    """Flags shared by every subcommand; unset flags fall back to the environment."""
    parent = argparse.ArgumentParser(add_help=False)
    group = parent.add_argument_group("run options")
    group.add_argument("--ceiling", type=int, help="largest n any enumeration may reach (env SKEWBLOCKS_N_CEILING)")
    group.add_argument("--threads", help="worker processes, integer or 'auto' (env SKEWBLOCKS_THREADS)")
    group.add_argument("--format", choices=("text", "csv", "json"), help="output format (default text)")
    group.add_argument("--output", help="write the result to this file instead of stdout")
    group.add_argument("--verbose", action="store_true", default=None, help="log progress on stderr")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parent = _global_options()
    parser = argparse.ArgumentParser(
        prog="skewblocks",
        description="Count pattern avoiders by skew blocks and check the block-count claims built on them.",
    )
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    count = commands.add_parser("count", parents=[parent], help="count avoiders, optionally by skew blocks")
    count.add_argument("--patterns", required=True, help="patterns to avoid, e.g. 132 or 123,132")
    count.add_argument("--n-max", type=int, default=8, help="largest length counted (default 8)")
    count.add_argument("--by-blocks", action="store_true", help="show the table by number of skew blocks")

    verify = commands.add_parser("verify", parents=[parent], help="exhaustively check a block-count claim")
    verify.add_argument("--lemma", required=True, choices=LEMMAS)
    verify.add_argument("--pattern", help="pattern for --lemma good / mongen")
    verify.add_argument(
        "--patterns",
        default=COUNTEREXAMPLE_PATTERNS,
        help=f"pattern set for --lemma counterexample (default {COUNTEREXAMPLE_PATTERNS})",
    )
    verify.add_argument("--n-max", type=int, default=8, help="check every length up to this (default 8)")
    verify.add_argument("--depth", type=int, help="Wilf evidence depth for --lemma mongen")
    verify.add_argument(
        "--diagnostic",
        action="store_true",
        help="run --lemma good on a pattern outside its hypotheses and label the report",
    )

    series = commands.add_parser("series", parents=[parent], help="exact power series operations")
    series.add_argument("op", choices=SERIES_OPS)
    source = series.add_mutually_exclusive_group()
    source.add_argument("--from-pattern", help="build the operand from the avoiders of these patterns")
    source.add_argument("--coeffs", help="operand coefficients c_0,c_1,... (rationals allowed)")
    series.add_argument("--n-max", type=int, default=8, help="truncation order for --from-pattern (default 8)")
    series.add_argument("--kind", help="'total' or 'blocks:<l>' (default depends on op)")
    series.add_argument("--exponent", type=int, default=2, help="exponent for power (default 2)")
    series.add_argument("--z0", help="evaluation point for eval / truncated supercritical, e.g. 1/4")
    series.add_argument("--against", help="second operand for dominates: a kind or a coefficient list")
    series.add_argument("--num", help="numerator coefficients of a rational G for supercritical")
    series.add_argument("--den", default="1", help="denominator coefficients of a rational G (default 1)")

    classify = commands.add_parser("classify", parents=[parent], help="theorem coverage and Wilf classes")
    target = classify.add_mutually_exclusive_group(required=True)
    target.add_argument("--pattern", help="report which route covers this pattern")
    target.add_argument("--all-of-length", type=int, metavar="K", help="group all patterns of length K")
    classify.add_argument("--depth", type=int, help="compare Av_1..Av_N (env SKEWBLOCKS_WILF_DEPTH)")

    return parser
