"""
Turning results into the three output formats.

Every command produces an Emission carrying all three renderings; the run
configuration picks one. Text is for people (aligned columns, a caption);
CSV and JSON are the machine contracts and contain no timestamps, so
repeated runs are byte-identical.
"""

import csv
import io
import json
from dataclasses import dataclass
from typing import Any, List, Sequence

from skewblocks.classify.models import ApplicabilityReport, MonotonicityViolation, WilfClassification
from skewblocks.enumeration.models import CountTable
from skewblocks.maps.models import MapReport
from skewblocks.series.supercritical import SupercriticalVerdict
from skewblocks.series.truncated import TruncatedSeries

# Counterexamples shown per report in text mode
TEXT_COUNTEREXAMPLE_LIMIT = 10


@dataclass(frozen=True)
class Emission:
    text: str
    data: Any
    csv: str

    def render(self, output_format: str) -> str:
        if output_format == "json":
            return json.dumps(self.data, indent=2) + "\n"
        if output_format == "csv":
            return self.csv
        return self.text if self.text.endswith("\n") else self.text + "\n"


def rows_to_csv(header: Sequence[Any], rows: Sequence[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def aligned(header: Sequence[Any], rows: Sequence[Sequence[Any]]) -> str:
    """Right-aligned columns separated by two spaces."""
    cells = [[str(c) for c in header]] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


# ============================================================================
# COUNT TABLES
# ============================================================================

def count_table(table: CountTable, ceiling: int, by_blocks: bool) -> Emission:
    if by_blocks:
        caption = f"Av_{{n,l}}({table.pattern_set}) for n <= {table.n_max} (ceiling {ceiling})"
        header = ["n"] + [f"l={ell}" for ell in range(1, table.n_max + 1)] + ["total"]
        rows = [[n] + table.row(n) + [table.total[n]] for n in range(table.n_max + 1)]
    else:
        caption = f"Av_n({table.pattern_set}) for n <= {table.n_max} (ceiling {ceiling})"
        header = ["n", "total"]
        rows = [[n, table.total[n]] for n in range(table.n_max + 1)]
    return Emission(text=f"{caption}\n{aligned(header, rows)}", data=table.to_dict(), csv=table.to_csv())


# ============================================================================
# VERIFICATION
# ============================================================================

def map_reports(title: str, reports: List[MapReport]) -> Emission:
    lines = [title]
    for report in reports:
        lines.append(report.summary())
        for c in report.counterexamples[:TEXT_COUNTEREXAMPLE_LIMIT]:
            output = "-" if c.output is None else str(c.output)
            lines.append(f"    {c.input} -> {output}: {c.diagnosis}")
        hidden = len(report.counterexamples) - TEXT_COUNTEREXAMPLE_LIMIT
        if hidden > 0:
            lines.append(f"    ... {hidden} more")
        for note in report.notes:
            lines.append(f"    note: {note}")

    header = ["map", "pattern", "n", "domain_size", "image_size", "codomain_size",
              "well_defined", "injective", "surjective", "counterexamples", "passed"]
    rows = [
        [r.map_name, "" if r.pattern is None else str(r.pattern), r.n, r.domain_size, r.image_size,
         "" if r.codomain_size is None else r.codomain_size, r.well_defined, r.injective,
         r.surjective, len(r.counterexamples), r.passed]
        for r in reports
    ]
    return Emission(
        text="\n".join(lines),
        data={"title": title, "reports": [r.to_dict() for r in reports]},
        csv=rows_to_csv(header, rows),
    )


def violations(title: str, found: List[MonotonicityViolation], extra: Sequence[str] = ()) -> Emission:
    header = ["n", "ell", "av_n_ell", "av_n_ell_plus_1"]
    rows = [[v.n, v.ell, v.lower, v.upper] for v in found]
    if found:
        body = aligned(header, rows)
    else:
        body = "no violations"
    text = "\n".join([title, body] + list(extra))
    return Emission(
        text=text,
        data={"title": title, "violations": [v.to_dict() for v in found], "notes": list(extra)},
        csv=rows_to_csv(header, rows),
    )


# ============================================================================
# SERIES
# ============================================================================

def series(label: str, s: TruncatedSeries) -> Emission:
    rows = [[n, c.numerator, c.denominator] for n, c in enumerate(s.coefficients)]
    return Emission(
        text=f"{label} = {s}",
        data={"label": label, "series": s.to_dict()},
        csv=rows_to_csv(["n", "numerator", "denominator"], rows),
    )


def scalar(label: str, name: str, value: Any) -> Emission:
    return Emission(
        text=f"{label}: {name} = {value}",
        data={"label": label, name: str(value) if not isinstance(value, (bool, int, type(None))) else value},
        csv=rows_to_csv(["label", name], [[label, value]]),
    )


def verdict(label: str, v: SupercriticalVerdict) -> Emission:
    lines = [f"{label}: {v.status.value}", f"  evidence: {v.evidence}"]
    if v.witness is not None:
        lines.append(f"  witness: z0 = {v.witness}, G(z0) = {v.value}")
    data = v.to_dict()
    return Emission(
        text="\n".join(lines),
        data={"label": label, **data},
        csv=rows_to_csv(list(data.keys()), [[("" if x is None else x) for x in data.values()]]),
    )


# ============================================================================
# CLASSIFICATION
# ============================================================================

def applicability(report: ApplicabilityReport) -> Emission:
    lines = [
        f"pattern {report.pattern}: {report.condition.value}",
        f"  skew-indecomposable form: {report.skew_indecomposable_form}",
    ]
    if report.witness is not None:
        lines.append(f"  witness: {report.witness} ({report.evidence})")
    if report.good_form is not None:
        lines.append(f"  good form: {report.good_form}")
    lines.append(f"  depth: {report.depth}")
    for observation in report.observations:
        lines.append(f"  observation: {observation}")

    data = report.to_dict()
    row = [("" if v is None else v) for k, v in data.items() if k != "observations"]
    header = [k for k in data if k != "observations"]
    return Emission(text="\n".join(lines), data=data, csv=rows_to_csv(header, [row]))


def wilf(classification: WilfClassification) -> Emission:
    caption = (
        f"Wilf classes of length {classification.k}, {classification.evidence} "
        f"({len(classification.classes)} class(es))"
    )
    header = ["class", "symmetry only", "patterns", "Av_1..Av_N"]
    rows = [
        [c.class_id, "yes" if c.symmetry_only else "no", " ".join(str(q) for q in c.patterns),
         ",".join(str(x) for x in c.counts)]
        for c in classification.classes
    ]
    return Emission(
        text=f"{caption}\n{aligned(header, rows)}",
        data=classification.to_dict(),
        csv=classification.to_csv(),
    )
