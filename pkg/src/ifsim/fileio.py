"""Input documents, report documents and table rendering.

Input is JSON. A decision matrix looks like::

    {
      "kind": "decision-matrix",
      "universe": ["C1", "C2", "C3", "C4"],
      "indicator_kinds": ["benefit", "benefit", "cost", "benefit"],
      "weights": [0.3, 0.3, 0.2, 0.2],
      "rows": [{"label": "A1", "values": [[0.8, 0.1], [0.5, 0.2], [0.5, 0.3], [0.5, 0.2]]}]
    }

A diagnosis case uses ``"kind": "diagnosis-case"``, omits
``indicator_kinds`` and adds ``"patient": {"label": "B", "values": [...]}``.
``weights`` is optional in both.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal
from typing import Any, Sequence

from .core import EPS_VALIDATION, Ifs
from .diagnosis import DiagnosisCase, DiagnosisReport
from .errors import InputValidationError, ParseError
from .madm import DecisionMatrix, IndicatorKind, MeasureComparison, RankingReport
from .measures import EPS_WEIGHT_SUM, MeasureKind, WeightVector

DECISION_MATRIX = "decision-matrix"
DIAGNOSIS_CASE = "diagnosis-case"

Pair = tuple[float, float]
Row = tuple[str, tuple[Pair, ...]]

_KEYS = {
    DECISION_MATRIX: {"kind", "universe", "indicator_kinds", "weights", "rows"},
    DIAGNOSIS_CASE: {"kind", "universe", "weights", "rows", "patient"},
}


@dataclass(frozen=True)
class InputDocument:
    kind: str
    universe: tuple[str, ...]
    rows: tuple[Row, ...]
    indicator_kinds: tuple[str, ...] | None = None
    weights: tuple[float, ...] | None = None
    patient: Row | None = None

    def to_decision_matrix(self, weights: Sequence[float] | None = None) -> DecisionMatrix:
        if self.kind != DECISION_MATRIX:
            raise InputValidationError([f"expected a {DECISION_MATRIX} document, got {self.kind}"])
        w = _pick_weights(weights, self.weights, len(self.universe))
        if w is None:
            w = WeightVector.uniform(len(self.universe))
        return DecisionMatrix.build(self.rows, self.universe, self.indicator_kinds, w)

    def to_diagnosis_case(self, weights: Sequence[float] | None = None) -> DiagnosisCase:
        if self.kind != DIAGNOSIS_CASE:
            raise InputValidationError([f"expected a {DIAGNOSIS_CASE} document, got {self.kind}"])
        diseases = tuple(
            (label, Ifs.from_pairs(self.universe, values)) for label, values in self.rows
        )
        patient = Ifs.from_pairs(self.universe, self.patient[1])
        w = _pick_weights(weights, self.weights, len(self.universe))
        return DiagnosisCase(diseases, patient, w)


def _pick_weights(override, own, n) -> WeightVector | None:
    raw = override if override is not None else own
    if raw is None:
        return None
    problems = _weight_problems(list(raw), n, "weights")
    if problems:
        raise InputValidationError(problems)
    return WeightVector(tuple(raw))


def _is_number(x: Any) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool) and math.isfinite(x)


def _weight_problems(raw: Any, n: int, where: str) -> list[str]:
    if not isinstance(raw, list) or not all(_is_number(x) for x in raw):
        return [f"{where}: must be a list of numbers"]
    problems = []
    if len(raw) != n:
        problems.append(f"{where}: {len(raw)} weights for {n} universe elements")
    for i, x in enumerate(raw):
        if not 0.0 <= x <= 1.0:
            problems.append(f"{where}[{i}] = {x!r} is outside [0, 1]")
    total = math.fsum(raw)
    if abs(total - 1.0) > EPS_WEIGHT_SUM:
        problems.append(f"{where}: weight-sum = {total:g} != 1")
    return problems


def _parse_row(raw: Any, where: str, universe: Sequence[str], problems: list[str]) -> Row | None:
    if not isinstance(raw, dict):
        problems.append(f"{where}: must be an object with 'label' and 'values'")
        return None
    extra = set(raw) - {"label", "values"}
    if extra:
        problems.append(f"{where}: unknown field(s) {sorted(extra)}")
    label = raw.get("label")
    if not isinstance(label, str) or not label:
        problems.append(f"{where}.label: must be a nonempty string")
        label = where
    values = raw.get("values")
    if not isinstance(values, list):
        problems.append(f"{where}.values: must be a list of [mu, nu] pairs")
        return None
    if universe and len(values) != len(universe):
        problems.append(
            f"{where}.values: row {label} has {len(values)} entries, universe has {len(universe)}"
        )
    pairs = []
    for j, pair in enumerate(values):
        col = universe[j] if j < len(universe) else f"#{j}"
        at = f"at row {label}, col {col} ({where}.values[{j}])"
        if not isinstance(pair, list) or len(pair) != 2:
            problems.append(f"bad pair arity {at}: expected [mu, nu]")
            continue
        if not all(_is_number(x) for x in pair):
            problems.append(f"non-numeric pair {pair!r} {at}")
            continue
        mu, nu = float(pair[0]), float(pair[1])
        ok = True
        for name, x in (("mu", mu), ("nu", nu)):
            if x < -EPS_VALIDATION or x > 1.0 + EPS_VALIDATION:
                problems.append(f"{name} = {x:g} outside [0, 1] {at}")
                ok = False
        if ok and mu + nu > 1.0 + EPS_VALIDATION:
            problems.append(f"mu+nu = {mu + nu:g} > 1 {at}")
        pairs.append((mu, nu))
    return (label, tuple(pairs))


def parse_input(text: bytes | str) -> InputDocument:
    """Parse and validate an input document.

    Raises :class:`ParseError` for malformed JSON and
    :class:`InputValidationError` listing every violation otherwise.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8: {exc}") from None
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(raw, dict):
        raise InputValidationError(["top level: must be an object"])

    problems: list[str] = []
    kind = raw.get("kind")
    if kind not in _KEYS:
        problems.append(f"kind: must be one of {sorted(_KEYS)}, got {kind!r}")
        raise InputValidationError(problems)
    extra = set(raw) - _KEYS[kind]
    if extra:
        problems.append(f"unknown field(s) for {kind}: {sorted(extra)}")

    universe = raw.get("universe")
    if not isinstance(universe, list) or not universe or not all(
        isinstance(u, str) and u for u in universe
    ):
        problems.append("universe: must be a nonempty list of nonempty strings")
        universe = []
    else:
        dupes = sorted({u for u in universe if universe.count(u) > 1})
        if dupes:
            problems.append(f"universe: label collision {dupes}")

    rows_raw = raw.get("rows")
    rows: list[Row] = []
    if not isinstance(rows_raw, list) or not rows_raw:
        problems.append("rows: must be a nonempty list")
    else:
        for i, r in enumerate(rows_raw):
            row = _parse_row(r, f"rows[{i}]", universe, problems)
            if row is not None:
                rows.append(row)
        labels = [label for label, _ in rows]
        dupes = sorted({x for x in labels if labels.count(x) > 1})
        if dupes:
            problems.append(f"rows: label collision {dupes}")

    indicator_kinds = None
    if kind == DECISION_MATRIX:
        ik = raw.get("indicator_kinds")
        if not isinstance(ik, list):
            problems.append("indicator_kinds: required list of 'benefit'/'cost'")
        else:
            if universe and len(ik) != len(universe):
                problems.append(
                    f"indicator_kinds: {len(ik)} kinds for {len(universe)} universe elements"
                )
            valid = {k.value for k in IndicatorKind}
            for j, k in enumerate(ik):
                if k not in valid:
                    problems.append(f"indicator_kinds[{j}]: unknown indicator kind {k!r}")
            indicator_kinds = tuple(ik)

    patient = None
    if kind == DIAGNOSIS_CASE:
        if "patient" not in raw:
            problems.append("patient: required for a diagnosis-case")
        else:
            patient = _parse_row(raw["patient"], "patient", universe, problems)
            if patient is not None and patient[0] in {label for label, _ in rows}:
                problems.append(f"patient: label collision with a row ({patient[0]!r})")

    weights = raw.get("weights")
    if weights is not None:
        problems.extend(_weight_problems(weights, len(universe), "weights"))
        if isinstance(weights, list) and all(_is_number(x) for x in weights):
            weights = tuple(float(x) for x in weights)

    if problems:
        raise InputValidationError(problems)
    return InputDocument(
        kind=kind,
        universe=tuple(universe),
        rows=tuple(rows),
        indicator_kinds=indicator_kinds,
        weights=weights,
        patient=patient,
    )


def _row_json(row: Row) -> dict:
    label, values = row
    return {"label": label, "values": [list(p) for p in values]}


def render_input(doc: InputDocument) -> str:
    out: dict[str, Any] = {"kind": doc.kind, "universe": list(doc.universe)}
    if doc.indicator_kinds is not None:
        out["indicator_kinds"] = list(doc.indicator_kinds)
    if doc.weights is not None:
        out["weights"] = list(doc.weights)
    out["rows"] = [_row_json(r) for r in doc.rows]
    if doc.patient is not None:
        out["patient"] = _row_json(doc.patient)
    return json.dumps(out, indent=2) + "\n"


def document_from_matrix(matrix: DecisionMatrix) -> InputDocument:
    return InputDocument(
        kind=DECISION_MATRIX,
        universe=matrix.indicators,
        rows=tuple(
            (label, tuple(v.as_tuple() for v in row))
            for label, row in zip(matrix.alternatives, matrix.entries)
        ),
        indicator_kinds=tuple(k.value for k in matrix.kinds),
        weights=matrix.weights.weights,
    )


# -- reports ---------------------------------------------------------------


def _ifs_json(ifs: Ifs) -> list[dict]:
    return [{"label": label, "mu": v.mu, "nu": v.nu} for label, v in ifs.elements]


def _measure_json(measure) -> dict:
    out = {"measure": measure.name}
    if measure.kind is MeasureKind.S6_LI_CHENG:
        out["p"] = measure.p
    return out


def _ranking_json(report: RankingReport) -> dict:
    return {
        **_measure_json(report.measure),
        "scores": dict(report.scores),
        "ranking": list(report.ranking),
        "best": report.best,
        "ties": [list(t) for t in report.ties],
        "degenerate": {k: list(v) for k, v in report.degenerate.items()},
    }


def _diagnosis_json(report: DiagnosisReport) -> dict:
    return {
        **_measure_json(report.measure),
        "scores": dict(report.scores),
        "ranking": list(report.ranking),
        "diagnosis": report.diagnosis,
        "ties": [list(t) for t in report.ties],
        "degenerate": {k: list(v) for k, v in (report.degenerate or {}).items()},
    }


def rank_report(report: RankingReport) -> dict:
    return {"command": "rank", "ideal": _ifs_json(report.ideal), **_ranking_json(report)}


def comparison_report(comparison: MeasureComparison) -> dict:
    ideal = _ifs_json(comparison.reports[0].ideal) if comparison.reports else []
    return {
        "command": "compare",
        "kind": DECISION_MATRIX,
        "ideal": ideal,
        "results": [_ranking_json(r) for r in comparison.reports],
        "best_alternatives": sorted(comparison.best_alternatives),
        "unanimous": comparison.unanimous,
    }


def diagnosis_report(report: DiagnosisReport, weights: Sequence[float] | None) -> dict:
    return {
        "command": "diagnose",
        "weights": list(weights) if weights is not None else None,
        **_diagnosis_json(report),
    }


def diagnosis_comparison_report(reports: Sequence[DiagnosisReport], weights: Sequence[float]) -> dict:
    return {
        "command": "compare",
        "kind": DIAGNOSIS_CASE,
        "weights": list(weights),
        "results": [_diagnosis_json(r) for r in reports],
        "diagnoses": sorted({r.diagnosis for r in reports}),
    }


def dumps_report(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


# -- tables ----------------------------------------------------------------


def round4(x: float) -> str:
    """Round half-to-even on the shortest decimal form, 4 places."""
    return str(Decimal(repr(x)).quantize(Decimal("0.0001"), rounding=ROUND_HALF_EVEN))


def _table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    widths = [max(len(str(c)) for c in col) for col in zip(header, *rows)]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    lines = [fmt.format(*header), "  ".join("-" * w for w in widths)]
    lines.extend(fmt.format(*r) for r in rows)
    return "\n".join(line.rstrip() for line in lines) + "\n"


def _result_rows(results: list[dict], winner_key: str) -> str:
    labels = list(results[0]["scores"]) if results else []
    header = ["measure", *labels, winner_key]
    rows = []
    for r in results:
        name = r["measure"] + (f"(p={r['p']:g})" if "p" in r else "")
        rows.append([name, *(round4(r["scores"][a]) for a in labels), r[winner_key]])
    return _table(header, rows)


def render_table(report: dict) -> str:
    """Human-readable rendering of a report produced by this module."""
    command = report["command"]
    if command == "rank":
        scores = report["scores"]
        position = {a: i for i, a in enumerate(report["ranking"], start=1)}
        rows = [[a, round4(s), str(position[a])] for a, s in scores.items()]
        text = f"measure: {report['measure']}\n" + _table(["alternative", "score", "rank"], rows)
        return text + f"best: {report['best']}\n"
    if command == "diagnose":
        position = {a: i for i, a in enumerate(report["ranking"], start=1)}
        rows = [[d, round4(s), str(position[d])] for d, s in report["scores"].items()]
        text = f"measure: {report['measure']}\n" + _table(["disease", "score", "rank"], rows)
        return text + f"diagnosis: {report['diagnosis']}\n"
    if report.get("kind") == DIAGNOSIS_CASE:
        return _result_rows(report["results"], "diagnosis")
    return _result_rows(report["results"], "best")
