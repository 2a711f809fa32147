"""Pattern-recognition style diagnosis.

Each disease is an IFS over a common symptom universe; a patient is another
IFS over the same universe. The patient's symptom vector is projected onto
each disease's per-symptom direction and the projections are summed
(optionally weighted). The disease with the largest score is the diagnosis.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import Ifs, check_aligned
from .errors import AlignmentError, InvalidIfnError
from .measures import MeasureId, MeasureKind, WeightVector, Weights, evaluate, projection_similarity
from .ranking import rank_scores


@dataclass(frozen=True)
class DiagnosisCase:
    diseases: tuple[tuple[str, Ifs], ...]
    patient: Ifs
    weights: WeightVector | None = None

    def __post_init__(self) -> None:
        diseases = tuple((str(label), ifs) for label, ifs in self.diseases)
        if not diseases:
            raise InvalidIfnError("a diagnosis case needs at least one disease")
        labels = [label for label, _ in diseases]
        if len(set(labels)) != len(labels):
            raise InvalidIfnError("disease labels must be unique")
        for _, ifs in diseases:
            check_aligned(ifs, self.patient)
        if self.weights is not None and len(self.weights) != len(self.patient):
            raise AlignmentError(f"{len(self.weights)} weights for {len(self.patient)} symptoms")
        object.__setattr__(self, "diseases", diseases)

    @property
    def symptoms(self) -> tuple[str, ...]:
        return self.patient.labels

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.diseases)


@dataclass(frozen=True)
class DiagnosisReport:
    measure: MeasureId
    scores: dict[str, float]
    ranking: tuple[str, ...]
    ties: tuple[tuple[str, ...], ...] = ()
    degenerate: dict[str, tuple[str, ...]] | None = None

    @property
    def diagnosis(self) -> str:
        return self.ranking[0]


_PROJECTION = MeasureId(MeasureKind.PROJECTION)


def _report(measure: MeasureId, labels, scores, degenerate=None) -> DiagnosisReport:
    ranking, ties = rank_scores(labels, [scores[d] for d in labels])
    return DiagnosisReport(measure, scores, ranking, ties, degenerate or {})


def diagnose(case: DiagnosisCase) -> DiagnosisReport:
    """Score each disease by projecting the patient onto it.

    Without case weights every symptom has weight 1 (an unnormalized sum).
    """
    weights: Weights = case.weights if case.weights is not None else [1.0] * len(case.patient)
    scores = {
        label: projection_similarity(case.patient, disease, weights)
        for label, disease in case.diseases
    }
    return _report(_PROJECTION, case.labels, scores)


def compare_diagnosis_measures(
    case: DiagnosisCase, measures: Sequence[MeasureId], w: Weights
) -> list[DiagnosisReport]:
    """One report per measure, scoring ``S(disease, patient)`` under weights ``w``.

    The projection measure keeps the direction used by :func:`diagnose`.
    """
    reports = []
    for measure in measures:
        scores: dict[str, float] = {}
        degenerate: dict[str, tuple[str, ...]] = {}
        for label, disease in case.diseases:
            if measure.kind is MeasureKind.PROJECTION:
                scores[label] = projection_similarity(case.patient, disease, w)
                continue
            result = evaluate(measure, disease, case.patient, w)
            scores[label] = result.value
            if result.degenerate:
                degenerate[label] = result.degenerate
        reports.append(_report(measure, case.labels, scores, degenerate))
    return reports
