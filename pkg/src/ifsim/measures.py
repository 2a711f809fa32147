"""Similarity measures between two aligned intuitionistic fuzzy sets.

Every measure is selected by a :class:`MeasureId` and evaluated through
:func:`similarity` (value only) or :func:`evaluate` (value plus the labels of
elements where the measure degenerated). All sums run left to right in
universe order so results are bit-reproducible.

The projection measure is directional: ``projection_similarity(a, b, w)``
projects ``a`` onto ``b``'s per-element direction and is not symmetric.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

from .core import Ifn, Ifs, check_aligned, hesitancy, norm3
from .errors import AlignmentError, DomainError, WeightError

EPS_WEIGHT_SUM = 1e-9


@dataclass(frozen=True, slots=True)
class WeightVector:
    """Nonnegative weights over a universe, summing to 1."""

    weights: tuple[float, ...]

    def __post_init__(self) -> None:
        weights = tuple(float(w) for w in self.weights)
        if not weights:
            raise WeightError("weight vector is empty")
        for i, w in enumerate(weights):
            if math.isnan(w) or not 0.0 <= w <= 1.0:
                raise WeightError(f"weight {i} = {w!r} is outside [0, 1]")
        total = math.fsum(weights)
        if abs(total - 1.0) > EPS_WEIGHT_SUM:
            raise WeightError(f"weights sum to {total!r}, expected 1")
        object.__setattr__(self, "weights", weights)

    @classmethod
    def uniform(cls, n: int) -> WeightVector:
        if n < 1:
            raise WeightError("uniform weights need n >= 1")
        return cls((1.0 / n,) * n)

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)


Weights = WeightVector | Sequence[float]


def resolve_weights(w: Weights | None, n: int) -> tuple[float, ...]:
    """Return the raw weight tuple for a universe of size ``n``.

    ``None`` means uniform ``1/n``. A plain sequence is accepted unnormalized
    (nonnegative, positive total), which is how unit-weight sums are expressed.
    """
    if w is None:
        return WeightVector.uniform(n).weights
    if isinstance(w, WeightVector):
        weights = w.weights
    else:
        weights = tuple(float(x) for x in w)
        for i, x in enumerate(weights):
            if math.isnan(x) or x < 0.0 or math.isinf(x):
                raise WeightError(f"weight {i} = {x!r} must be a finite nonnegative real")
        if not any(weights):
            raise WeightError("weights must not all be zero")
    if len(weights) != n:
        raise AlignmentError(f"{len(weights)} weights for a universe of size {n}")
    return weights


class MeasureKind(enum.Enum):
    S1_HAMMING = "s1-hamming"
    S2_EUCLIDEAN = "s2-euclidean"
    S3_HAMMING_HESITANCY = "s3-hamming-h"
    S4_EUCLIDEAN_HESITANCY = "s4-euclidean-h"
    S5_HAUSDORFF = "s5-hausdorff"
    S6_LI_CHENG = "s6-licheng"
    S7_COSINE_2D = "s7-cosine2d"
    S8_COSINE_3D = "s8-cosine3d"
    S9_SPA_ABSOLUTE = "s9-spa"
    S10_SPA_RATIO = "s10-spa-ratio"
    PROJECTION = "projection"


@dataclass(frozen=True, slots=True)
class MeasureId:
    """A measure selector. ``p`` is the Li-Cheng exponent and only matters for S6."""

    kind: MeasureKind
    p: float = 2.0

    def __post_init__(self) -> None:
        p = float(self.p)
        if self.kind is MeasureKind.S6_LI_CHENG and not p >= 1.0:
            raise DomainError(f"Li-Cheng exponent p must be >= 1, got {p!r}")
        object.__setattr__(self, "p", p)

    @property
    def name(self) -> str:
        return self.kind.value

    def __str__(self) -> str:
        if self.kind is MeasureKind.S6_LI_CHENG:
            return f"{self.name}(p={self.p:g})"
        return self.name

    @classmethod
    def from_name(cls, name: str, p: float = 2.0) -> MeasureId:
        try:
            kind = MeasureKind(name.strip().lower())
        except ValueError:
            raise ValueError(
                f"unknown measure {name!r}; valid names: {', '.join(MEASURE_NAMES)}"
            ) from None
        return cls(kind, p)


MEASURE_NAMES: tuple[str, ...] = tuple(k.value for k in MeasureKind)


def all_measures(p: float = 2.0) -> tuple[MeasureId, ...]:
    return tuple(MeasureId(k, p) for k in MeasureKind)


@dataclass(frozen=True, slots=True)
class ConnectionNumber:
    """Set-pair connection number ``(a, b, c)``: identity, discrepancy, contrary."""

    a: float
    b: float
    c: float


def connection_number(x: Ifn) -> ConnectionNumber:
    a = x.mu * (1.0 - x.nu)
    c = x.nu * (1.0 - x.mu)
    return ConnectionNumber(a, 1.0 - a - c, c)


def _dot3(a: Ifn, b: Ifn) -> float:
    return a.mu * b.mu + a.nu * b.nu + hesitancy(a) * hesitancy(b)


def cosine_ifn(a: Ifn, b: Ifn) -> float:
    """Cosine of the angle between the ``(mu, nu, pi)`` vectors of two IFNs."""
    value = _dot3(a, b) / (norm3(a) * norm3(b))
    return min(1.0, value)


@dataclass(frozen=True, slots=True)
class MeasureResult:
    value: float
    degenerate: tuple[str, ...] = ()


def _hamming(a: Ifs, b: Ifs, w: tuple[float, ...]) -> float:
    d = 0.0
    for wi, x, y in zip(w, a, b):
        d += wi * (abs(x.mu - y.mu) + abs(x.nu - y.nu))
    return 1.0 - 0.5 * d


def _euclidean(a: Ifs, b: Ifs, w: tuple[float, ...]) -> float:
    d = 0.0
    for wi, x, y in zip(w, a, b):
        d += wi * ((x.mu - y.mu) ** 2 + (x.nu - y.nu) ** 2)
    return 1.0 - 0.5 * d


def _hamming_h(a: Ifs, b: Ifs, w: tuple[float, ...]) -> float:
    d = 0.0
    for wi, x, y in zip(w, a, b):
        d += wi * (abs(x.mu - y.mu) + abs(x.nu - y.nu) + abs(hesitancy(x) - hesitancy(y)))
    return 1.0 - 0.5 * d


def _euclidean_h(a: Ifs, b: Ifs, w: tuple[float, ...]) -> float:
    d = 0.0
    for wi, x, y in zip(w, a, b):
        d += wi * (
            (x.mu - y.mu) ** 2 + (x.nu - y.nu) ** 2 + (hesitancy(x) - hesitancy(y)) ** 2
        )
    return 1.0 - 0.5 * d


def _hausdorff(a: Ifs, b: Ifs, w: tuple[float, ...]) -> float:
    d = 0.0
    for wi, x, y in zip(w, a, b):
        d += wi * max(abs(x.mu - y.mu), abs(x.nu - y.nu), abs(hesitancy(x) - hesitancy(y)))
    return 1.0 - d


def _li_cheng(a: Ifs, b: Ifs, w: tuple[float, ...], p: float) -> float:
    d = 0.0
    for wi, x, y in zip(w, a, b):
        phi_x = (x.mu + 1.0 - x.nu) / 2.0
        phi_y = (y.mu + 1.0 - y.nu) / 2.0
        d += wi * abs(phi_x - phi_y) ** p
    return 1.0 - d ** (1.0 / p)


def _cosine_2d(a: Ifs, b: Ifs, w: tuple[float, ...]) -> MeasureResult:
    total = 0.0
    degenerate = []
    for label, wi, x, y in zip(a.labels, w, a, b):
        denom = math.hypot(x.mu, x.nu) * math.hypot(y.mu, y.nu)
        if denom == 0.0:
            # undefined for a (0, 0) element; counts as no evidence of similarity
            degenerate.append(label)
            continue
        total += wi * min(1.0, (x.mu * y.mu + x.nu * y.nu) / denom)
    return MeasureResult(total, tuple(degenerate))


def _cosine_3d(a: Ifs, b: Ifs, w: tuple[float, ...]) -> float:
    total = 0.0
    for wi, x, y in zip(w, a, b):
        total += wi * cosine_ifn(x, y)
    return total


def _spa_absolute(a: Ifs, b: Ifs, w: tuple[float, ...]) -> float:
    total = 0.0
    for wi, x, y in zip(w, a, b):
        cx, cy = connection_number(x), connection_number(y)
        diff = abs(cx.a - cy.a) + abs(cx.b - cy.b) + abs(cx.c - cy.c)
        total += wi * (1.0 - diff / 3.0)
    return total


def _spa_ratio(a: Ifs, b: Ifs, w: tuple[float, ...]) -> float:
    # denominator > 0: each element's max-sum is >= a + b + c = 1
    num = 0.0
    den = 0.0
    for wi, x, y in zip(w, a, b):
        cx, cy = connection_number(x), connection_number(y)
        num += wi * (min(cx.a, cy.a) + min(cx.b, cy.b) + min(cx.c, cy.c))
        den += wi * (max(cx.a, cy.a) + max(cx.b, cy.b) + max(cx.c, cy.c))
    return num / den


def projection_similarity(a: Ifs, b: Ifs, w: Weights | None = None) -> float:
    """Weighted projection of ``a`` onto ``b``, element by element.

    Each term is ``dot(a_i, b_i) / |b_i|``, i.e. ``|a_i| * cos(a_i, b_i)``;
    it rewards both agreement in direction and length of ``a``.
    """
    check_aligned(a, b)
    weights = resolve_weights(w, len(a))
    total = 0.0
    for wi, x, y in zip(weights, a, b):
        total += wi * _dot3(x, y) / norm3(y)
    return total


def evaluate(measure: MeasureId, a: Ifs, b: Ifs, w: Weights | None = None) -> MeasureResult:
    """Evaluate ``measure`` on ``(a, b)``, reporting degenerate elements (S7 only)."""
    check_aligned(a, b)
    weights = resolve_weights(w, len(a))
    kind = measure.kind
    if kind is MeasureKind.S7_COSINE_2D:
        return _cosine_2d(a, b, weights)
    if kind is MeasureKind.S6_LI_CHENG:
        return MeasureResult(_li_cheng(a, b, weights, measure.p))
    if kind is MeasureKind.PROJECTION:
        return MeasureResult(projection_similarity(a, b, weights))
    return MeasureResult(_SIMPLE[kind](a, b, weights))


def similarity(measure: MeasureId, a: Ifs, b: Ifs, w: Weights | None = None) -> float:
    return evaluate(measure, a, b, w).value


_SIMPLE = {
    MeasureKind.S1_HAMMING: _hamming,
    MeasureKind.S2_EUCLIDEAN: _euclidean,
    MeasureKind.S3_HAMMING_HESITANCY: _hamming_h,
    MeasureKind.S4_EUCLIDEAN_HESITANCY: _euclidean_h,
    MeasureKind.S5_HAUSDORFF: _hausdorff,
    MeasureKind.S8_COSINE_3D: _cosine_3d,
    MeasureKind.S9_SPA_ABSOLUTE: _spa_absolute,
    MeasureKind.S10_SPA_RATIO: _spa_ratio,
}
