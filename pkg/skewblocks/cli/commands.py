"""
Subcommand handlers. Each takes the parsed arguments and the RunConfig and
returns (Emission, exit code); exceptions are mapped to exit codes by main.
"""

import logging
from typing import List, Optional, Tuple

from skewblocks.classify.applicability import theorem_applicability
from skewblocks.classify.monotonicity import table_violations
from skewblocks.classify.wilf import wilf_classes
from skewblocks.cli import render
from skewblocks.cli.render import Emission
from skewblocks.cli.run_config import RunConfig
from skewblocks.core.config import config
from skewblocks.core.exceptions import PreconditionError
from skewblocks.enumeration.engine import as_pattern_set, check_ceiling, count_by_blocks
from skewblocks.maps.harness import verify_left_inverse, verify_lemma_132, verify_lemma_good
from skewblocks.maps.models import MapReport
from skewblocks.perm.permutation import Permutation, parse_pattern_list, parse_permutation
from skewblocks.series.rational import RationalFunction
from skewblocks.series.supercritical import (
    rational_supercritical,
    sequence_bound_violations,
    square_exceeds,
    truncated_supercritical,
)
from skewblocks.series.truncated import (
    TruncatedSeries,
    coefficient_dominates,
    eval_partial,
    indecomposable_part,
    parse_coefficients,
    parse_kind,
    power,
    quasi_inverse,
    series_from_counts,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FALSIFIED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

Result = Tuple[Emission, int]


def _require_pattern(text: Optional[str], lemma: str) -> Permutation:
    if not text:
        raise PreconditionError(f"--lemma {lemma} needs --pattern")
    return parse_permutation(text)


# ============================================================================
# count
# ============================================================================

def run_count(args, run: RunConfig) -> Result:
    patterns = parse_pattern_list(args.patterns)
    table = count_by_blocks(args.n_max, patterns, ceiling=run.n_ceiling, workers=run.workers)
    return render.count_table(table, run.n_ceiling, args.by_blocks), EXIT_OK


# ============================================================================
# verify
# ============================================================================

def _reports_result(title: str, reports: List[MapReport]) -> Result:
    passed = all(r.passed for r in reports)
    logger.info(f"{title}: {'pass' if passed else 'FAIL'}")
    return render.map_reports(title, reports), EXIT_OK if passed else EXIT_FALSIFIED


def _verify_132(args, run: RunConfig) -> Result:
    check_ceiling(args.n_max, run.n_ceiling)
    reports = [verify_lemma_132(n, ceiling=run.n_ceiling) for n in range(1, args.n_max + 1)]
    return _reports_result(f"f: Av_{{n,2}}(132) -> Av_{{n,1}}(132), n <= {args.n_max}", reports)


def _verify_good(args, run: RunConfig) -> Result:
    q = _require_pattern(args.pattern, "good")
    check_ceiling(args.n_max, run.n_ceiling)
    reports = [
        verify_lemma_good(q, n, diagnostic=args.diagnostic, ceiling=run.n_ceiling)
        for n in range(1, args.n_max + 1)
    ]
    return _reports_result(f"g: Av_{{n,2}}({q}) -> Av_{{n,1}}({q}), n <= {args.n_max}", reports)


def _verify_inverse(args, run: RunConfig) -> Result:
    check_ceiling(args.n_max, run.n_ceiling)
    reports = [verify_left_inverse(n, ceiling=run.n_ceiling) for n in range(2, args.n_max + 1)]
    return _reports_result(f"h(g(p)) = p on two-block permutations, n <= {args.n_max}", reports)


def _verify_counterexample(args, run: RunConfig) -> Result:
    """Passes when the block counts are NOT monotone."""
    pattern_set = as_pattern_set(parse_pattern_list(args.patterns))
    table = count_by_blocks(args.n_max, pattern_set, ceiling=run.n_ceiling, workers=run.workers)
    found = table_violations(table)
    title = f"Monotonicity of {pattern_set} to n = {args.n_max} (violations expected)"
    return render.violations(title, found), EXIT_OK if found else EXIT_FALSIFIED


def _verify_mongen(args, run: RunConfig) -> Result:
    q = _require_pattern(args.pattern, "mongen")
    table = count_by_blocks(args.n_max, [q], ceiling=run.n_ceiling, workers=run.workers)
    found = table_violations(table)
    bound = sequence_bound_violations(table)

    depth = args.depth
    if depth is None:
        depth = max(len(q), min(run.n_ceiling, config.WILF_DEPTH))
    report = theorem_applicability(q, depth, ceiling=run.n_ceiling)

    notes = [f"coverage: {report.condition.value}"]
    if bound:
        notes.append(f"Av_n > n*Av_(n,1) at n = {', '.join(str(n) for n in bound)}")
    else:
        notes.append(f"Av_n <= n*Av_(n,1) for every n <= {args.n_max}")

    map_reports: List[MapReport] = []
    if report.covered and report.good_form is not None:
        map_reports = [
            verify_lemma_good(report.good_form, n, ceiling=run.n_ceiling)
            for n in range(1, args.n_max + 1)
        ]
        for r in map_reports:
            notes.append(r.summary())

    passed = not found and not bound and all(r.passed for r in map_reports)
    title = f"Monotonicity of {{{q}}} to n = {args.n_max}"
    emission = render.violations(title, found, notes)
    data = dict(emission.data)
    data["applicability"] = report.to_dict()
    data["bound_violations"] = bound
    data["map_reports"] = [r.to_dict() for r in map_reports]
    return Emission(text=emission.text, data=data, csv=emission.csv), EXIT_OK if passed else EXIT_FALSIFIED


VERIFIERS = {
    "132": _verify_132,
    "good": _verify_good,
    "inverse": _verify_inverse,
    "counterexample": _verify_counterexample,
    "mongen": _verify_mongen,
}


def run_verify(args, run: RunConfig) -> Result:
    if args.n_max < 1:
        raise PreconditionError(f"--n-max must be at least 1, got {args.n_max}")
    return VERIFIERS[args.lemma](args, run)


# ============================================================================
# series
# ============================================================================

DEFAULT_KINDS = {"indecomposable-part": "total"}


def _operand(args, run: RunConfig, kind_text: str) -> Tuple[str, TruncatedSeries]:
    if args.coeffs:
        return "G", parse_coefficients(args.coeffs)
    if args.from_pattern:
        pattern_set = as_pattern_set(parse_pattern_list(args.from_pattern))
        table = count_by_blocks(args.n_max, pattern_set, ceiling=run.n_ceiling, workers=run.workers)
        kind, ell = parse_kind(kind_text)
        label = f"A_{pattern_set}" if kind == "total" else f"A_{ell},{pattern_set}"
        return label, series_from_counts(table, kind, ell)
    raise PreconditionError("give --from-pattern or --coeffs")


def _against(args, run: RunConfig) -> Tuple[str, TruncatedSeries]:
    text = (args.against or "").strip()
    if not text:
        raise PreconditionError("dominates needs --against")
    if text.lower().startswith(("total", "blocks")):
        if not args.from_pattern:
            raise PreconditionError("--against as a kind needs --from-pattern")
        return _operand(args, run, text)
    return "H", parse_coefficients(text)


def run_series(args, run: RunConfig) -> Result:
    op = args.op
    if op == "supercritical" and args.num:
        G = RationalFunction.from_text(args.num, args.den)
        return render.verdict(f"G = {G}", rational_supercritical(G)), EXIT_OK

    label, G = _operand(args, run, args.kind or DEFAULT_KINDS.get(op, "blocks:1"))

    if op == "quasi-inverse":
        return render.series(f"1/(1 - {label})", quasi_inverse(G)), EXIT_OK
    if op == "indecomposable-part":
        return render.series(f"1 - 1/{label}", indecomposable_part(G)), EXIT_OK
    if op == "power":
        return render.series(f"({label})^{args.exponent}", power(G, args.exponent)), EXIT_OK
    if op == "eval":
        if args.z0 is None:
            raise PreconditionError("eval needs --z0")
        return render.scalar(f"{label} at z0 = {args.z0}", "value", eval_partial(G, args.z0)), EXIT_OK
    if op == "dominates":
        other_label, H = _against(args, run)
        outcome = coefficient_dominates(G, H)
        value = "true" if outcome else f"false (first at n = {outcome.witness})"
        return (
            render.scalar(f"{label} >= {other_label} coefficientwise", "dominates", value),
            EXIT_OK if outcome else EXIT_FALSIFIED,
        )
    if op == "supercritical":
        if args.z0 is None:
            raise PreconditionError("supercritical needs --num/--den, or a series with --z0")
        return render.verdict(label, truncated_supercritical(G, args.z0)), EXIT_OK
    if op == "square-exceeds":
        n = square_exceeds(G)
        shown = "none" if n is None else n
        return render.scalar(f"[z^n]({label})^2 > [z^n]{label}", "first_n", shown), EXIT_OK

    raise PreconditionError(f"unknown series op {op!r}")


# ============================================================================
# classify
# ============================================================================

def run_classify(args, run: RunConfig) -> Result:
    if args.pattern:
        q = parse_permutation(args.pattern)
        report = theorem_applicability(q, args.depth, ceiling=run.n_ceiling)
        return render.applicability(report), EXIT_OK
    classification = wilf_classes(args.all_of_length, args.depth, ceiling=run.n_ceiling, workers=run.workers)
    return render.wilf(classification), EXIT_OK


HANDLERS = {
    "count": run_count,
    "verify": run_verify,
    "series": run_series,
    "classify": run_classify,
}
