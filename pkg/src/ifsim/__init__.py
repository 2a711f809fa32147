"""Intuitionistic fuzzy sets: algebra, similarity measures, and decision pipelines."""

from .core import (
    Ifn,
    Ifs,
    Ordering,
    accuracy,
    add,
    compare,
    hesitancy,
    join,
    meet,
    multiply,
    norm3,
    power,
    scale,
    score,
)
from .diagnosis import DiagnosisCase, DiagnosisReport, compare_diagnosis_measures, diagnose
from .errors import (
    AlignmentError,
    DomainError,
    IdealConstructionError,
    IfsError,
    InputValidationError,
    InvalidIfnError,
    ParseError,
    WeightError,
)
from .madm import (
    DecisionMatrix,
    IndicatorKind,
    MeasureComparison,
    RankingReport,
    compare_measures,
    ideal_scheme,
    rank,
)
from .measures import (
    ConnectionNumber,
    MeasureId,
    MeasureKind,
    WeightVector,
    all_measures,
    connection_number,
    cosine_ifn,
    evaluate,
    projection_similarity,
    similarity,
)

__version__ = "0.1.0"
