"""Multi-attribute decision making against an ideal scheme.

Alternatives are rows of a decision matrix of IFNs, indicators are columns.
The ideal scheme takes the best IFN component per indicator (max membership
and min non-membership for benefit indicators, the reverse for cost
indicators). Each alternative is then scored by its similarity to the ideal;
with the projection measure the alternative is projected onto the ideal.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .core import EPS_VALIDATION, Ifn, Ifs, as_ifn
from .errors import AlignmentError, IdealConstructionError, InvalidIfnError, WeightError
from .measures import MeasureId, WeightVector, evaluate
from .ranking import rank_scores


class IndicatorKind(enum.Enum):
    BENEFIT = "benefit"
    COST = "cost"


@dataclass(frozen=True)
class DecisionMatrix:
    alternatives: tuple[str, ...]
    indicators: tuple[str, ...]
    kinds: tuple[IndicatorKind, ...]
    entries: tuple[tuple[Ifn, ...], ...]
    weights: WeightVector

    def __post_init__(self) -> None:
        alternatives = tuple(str(a) for a in self.alternatives)
        indicators = tuple(str(c) for c in self.indicators)
        kinds = tuple(IndicatorKind(k) for k in self.kinds)
        entries = tuple(tuple(as_ifn(v) for v in row) for row in self.entries)
        weights = self.weights
        if not isinstance(weights, WeightVector):
            weights = WeightVector(tuple(weights))

        m = len(indicators)
        if not alternatives or not m:
            raise InvalidIfnError("a decision matrix needs at least one alternative and one indicator")
        if len(set(alternatives)) != len(alternatives):
            raise InvalidIfnError("alternative labels must be unique")
        if len(set(indicators)) != m:
            raise InvalidIfnError("indicator labels must be unique")
        if len(kinds) != m:
            raise AlignmentError(f"{len(kinds)} indicator kinds for {m} indicators")
        if len(entries) != len(alternatives):
            raise AlignmentError(f"{len(entries)} rows for {len(alternatives)} alternatives")
        for label, row in zip(alternatives, entries):
            if len(row) != m:
                raise AlignmentError(f"row {label!r} has {len(row)} entries, expected {m}")
        if len(weights) != m:
            raise WeightError(f"{len(weights)} weights for {m} indicators")

        object.__setattr__(self, "alternatives", alternatives)
        object.__setattr__(self, "indicators", indicators)
        object.__setattr__(self, "kinds", kinds)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "weights", weights)

    @classmethod
    def build(
        cls,
        rows: Iterable[tuple[str, Sequence[Ifn | Sequence[float]]]],
        indicators: Sequence[str],
        kinds: Sequence[IndicatorKind | str],
        weights: WeightVector | Sequence[float],
    ) -> DecisionMatrix:
        rows = list(rows)
        return cls(
            alternatives=tuple(label for label, _ in rows),
            indicators=tuple(indicators),
            kinds=tuple(IndicatorKind(k) for k in kinds),
            entries=tuple(tuple(values) for _, values in rows),
            weights=weights if isinstance(weights, WeightVector) else WeightVector(tuple(weights)),
        )

    def row(self, i: int) -> Ifs:
        return Ifs.from_pairs(self.indicators, self.entries[i])

    def rows(self) -> list[tuple[str, Ifs]]:
        return [(label, self.row(i)) for i, label in enumerate(self.alternatives)]


def ideal_scheme(matrix: DecisionMatrix) -> Ifs:
    ideal = []
    for j, kind in enumerate(matrix.kinds):
        column = [row[j] for row in matrix.entries]
        if kind is IndicatorKind.BENEFIT:
            mu, nu = max(x.mu for x in column), min(x.nu for x in column)
        else:
            mu, nu = min(x.mu for x in column), max(x.nu for x in column)
        # mu + nu is bounded by the row holding the extreme mu, so this never fires
        if mu + nu > 1.0 + EPS_VALIDATION:
            raise IdealConstructionError(
                f"ideal for indicator {matrix.indicators[j]!r} is ({mu}, {nu})"
            )
        ideal.append(Ifn(mu, nu))
    return Ifs.from_pairs(matrix.indicators, ideal)


@dataclass(frozen=True)
class RankingReport:
    measure: MeasureId
    ideal: Ifs
    scores: dict[str, float]
    ranking: tuple[str, ...]
    ties: tuple[tuple[str, ...], ...] = ()
    degenerate: dict[str, tuple[str, ...]] = field(default_factory=dict)

    @property
    def best(self) -> str:
        return self.ranking[0]


def rank(matrix: DecisionMatrix, measure: MeasureId) -> RankingReport:
    """Score every alternative against the ideal scheme and rank them, best first."""
    ideal = ideal_scheme(matrix)
    scores: dict[str, float] = {}
    degenerate: dict[str, tuple[str, ...]] = {}
    for label, row in matrix.rows():
        result = evaluate(measure, row, ideal, matrix.weights)
        scores[label] = result.value
        if result.degenerate:
            degenerate[label] = result.degenerate
    ranking, ties = rank_scores(matrix.alternatives, [scores[a] for a in matrix.alternatives])
    return RankingReport(measure, ideal, scores, ranking, ties, degenerate)


@dataclass(frozen=True)
class MeasureComparison:
    reports: tuple[RankingReport, ...]

    @property
    def best(self) -> dict[str, str]:
        """Best alternative per measure, keyed by the measure's display name."""
        return {str(r.measure): r.best for r in self.reports}

    @property
    def best_alternatives(self) -> frozenset[str]:
        return frozenset(r.best for r in self.reports)

    @property
    def unanimous(self) -> bool:
        return len(self.best_alternatives) == 1


def compare_measures(matrix: DecisionMatrix, measures: Sequence[MeasureId]) -> MeasureComparison:
    return MeasureComparison(tuple(rank(matrix, m) for m in measures))
