"""Intuitionistic fuzzy numbers and sets.

An IFN is a pair ``(mu, nu)`` of membership and non-membership degrees with
``mu, nu in [0, 1]`` and ``mu + nu <= 1``. The hesitancy ``pi = 1 - mu - nu``
is always derived, never stored.

The six algebraic operators are available both as functions and as
operator overloads on :class:`Ifn`::

    a & b     meet (intersection)
    a | b     join (union)
    a + b     probabilistic sum
    a * b     product
    lam * a   scalar multiple, lam > 0
    a ** lam  power, lam > 0
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import AlignmentError, DomainError, InvalidIfnError

#: Construction tolerance: violations up to this size are clamped, larger ones rejected.
EPS_VALIDATION = 1e-9
#: Score/accuracy tie band used by :func:`compare`.
EPS_COMPARE = 1e-12


def _clamp_unit(x: float, what: str) -> float:
    if math.isnan(x):
        raise InvalidIfnError(f"{what} is NaN")
    if x < 0.0:
        if x < -EPS_VALIDATION:
            raise InvalidIfnError(f"{what} = {x!r} < 0")
        return 0.0
    if x > 1.0:
        if x > 1.0 + EPS_VALIDATION:
            raise InvalidIfnError(f"{what} = {x!r} > 1")
        return 1.0
    return x


@dataclass(frozen=True, slots=True)
class Ifn:
    """An intuitionistic fuzzy number ``(mu, nu)``."""

    mu: float
    nu: float

    def __post_init__(self) -> None:
        mu = _clamp_unit(float(self.mu), "mu")
        nu = _clamp_unit(float(self.nu), "nu")
        total = mu + nu
        if total > 1.0:
            if total > 1.0 + EPS_VALIDATION:
                raise InvalidIfnError(f"mu+nu = {total:g} > 1 for ({mu!r}, {nu!r})")
            nu = 1.0 - mu
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "nu", nu)

    @property
    def pi(self) -> float:
        return hesitancy(self)

    def as_tuple(self) -> tuple[float, float]:
        return (self.mu, self.nu)

    def __iter__(self) -> Iterator[float]:
        yield self.mu
        yield self.nu

    def __and__(self, other: Ifn) -> Ifn:
        return meet(self, other)

    def __or__(self, other: Ifn) -> Ifn:
        return join(self, other)

    def __add__(self, other: Ifn) -> Ifn:
        if not isinstance(other, Ifn):
            return NotImplemented
        return add(self, other)

    def __mul__(self, other: Ifn) -> Ifn:
        if not isinstance(other, Ifn):
            return NotImplemented
        return multiply(self, other)

    def __rmul__(self, lam: float) -> Ifn:
        if isinstance(lam, Ifn):
            return NotImplemented
        return scale(lam, self)

    def __pow__(self, lam: float) -> Ifn:
        return power(self, lam)


def as_ifn(value: Ifn | Sequence[float]) -> Ifn:
    """Coerce a ``(mu, nu)`` pair to :class:`Ifn`; pass Ifn through unchanged."""
    if isinstance(value, Ifn):
        return value
    mu, nu = value
    return Ifn(mu, nu)


def hesitancy(a: Ifn) -> float:
    pi = 1.0 - a.mu - a.nu
    # construction guarantees mu + nu <= 1 up to rounding
    return min(1.0, max(0.0, pi))


def score(a: Ifn) -> float:
    return a.mu - a.nu


def accuracy(a: Ifn) -> float:
    return a.mu + a.nu


def norm3(a: Ifn) -> float:
    """Euclidean length of the vector ``(mu, nu, pi)``; lies in ``[1/sqrt(3), 1]``."""
    pi = hesitancy(a)
    return math.sqrt(a.mu * a.mu + a.nu * a.nu + pi * pi)


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def compare(a: Ifn, b: Ifn) -> Ordering:
    """Order two IFNs by score, breaking score ties by accuracy.

    Differences within :data:`EPS_COMPARE` count as ties.
    """
    ds = score(a) - score(b)
    if ds > EPS_COMPARE:
        return Ordering.GREATER
    if ds < -EPS_COMPARE:
        return Ordering.LESS
    dh = accuracy(a) - accuracy(b)
    if dh > EPS_COMPARE:
        return Ordering.GREATER
    if dh < -EPS_COMPARE:
        return Ordering.LESS
    return Ordering.EQUAL


def meet(a: Ifn, b: Ifn) -> Ifn:
    return Ifn(min(a.mu, b.mu), max(a.nu, b.nu))


def join(a: Ifn, b: Ifn) -> Ifn:
    return Ifn(max(a.mu, b.mu), min(a.nu, b.nu))


def add(a: Ifn, b: Ifn) -> Ifn:
    return Ifn(a.mu + b.mu - a.mu * b.mu, a.nu * b.nu)


def multiply(a: Ifn, b: Ifn) -> Ifn:
    return Ifn(a.mu * b.mu, a.nu + b.nu - a.nu * b.nu)


def _check_lambda(lam: float) -> float:
    lam = float(lam)
    if not lam > 0.0 or math.isinf(lam):
        raise DomainError(f"lambda must be a finite positive real, got {lam!r}")
    return lam


# nu <= 1 - mu implies nu**lam <= (1 - mu)**lam; taking the min is exact for valid
# inputs and stops rounding in mu + nu from being amplified by small lam.


def scale(lam: float, a: Ifn) -> Ifn:
    lam = _check_lambda(lam)
    rest = (1.0 - a.mu) ** lam
    return Ifn(1.0 - rest, min(a.nu**lam, rest))


def power(a: Ifn, lam: float) -> Ifn:
    lam = _check_lambda(lam)
    rest = (1.0 - a.nu) ** lam
    return Ifn(min(a.mu**lam, rest), 1.0 - rest)


@dataclass(frozen=True, slots=True)
class Ifs:
    """An IFS over a finite, ordered universe of labeled elements.

    Element order is the alignment key when two sets are compared.
    """

    elements: tuple[tuple[str, Ifn], ...]

    def __post_init__(self) -> None:
        elements = tuple((str(label), as_ifn(value)) for label, value in self.elements)
        if not elements:
            raise InvalidIfnError("an IFS needs at least one element")
        seen: set[str] = set()
        for label, _ in elements:
            if label in seen:
                raise InvalidIfnError(f"duplicate element label {label!r}")
            seen.add(label)
        object.__setattr__(self, "elements", elements)

    @classmethod
    def from_pairs(
        cls, labels: Iterable[str], values: Iterable[Ifn | Sequence[float]]
    ) -> Ifs:
        labels = list(labels)
        values = list(values)
        if len(labels) != len(values):
            raise AlignmentError(f"{len(labels)} labels but {len(values)} values")
        return cls(tuple(zip(labels, values)))

    @classmethod
    def from_values(cls, values: Iterable[Ifn | Sequence[float]], prefix: str = "x") -> Ifs:
        """Build a set with generated labels ``x1, x2, ...``."""
        return cls(tuple((f"{prefix}{i}", v) for i, v in enumerate(values, start=1)))

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.elements)

    @property
    def values(self) -> tuple[Ifn, ...]:
        return tuple(value for _, value in self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Ifn]:
        return iter(self.values)

    def __getitem__(self, index: int) -> Ifn:
        return self.elements[index][1]


def check_aligned(a: Ifs, b: Ifs) -> None:
    """Raise :class:`AlignmentError` unless both sets share labels in the same order."""
    if len(a) != len(b):
        raise AlignmentError(f"universe sizes differ: {len(a)} vs {len(b)}")
    if a.labels != b.labels:
        diff = next(i for i, (x, y) in enumerate(zip(a.labels, b.labels)) if x != y)
        raise AlignmentError(
            f"universe labels differ at position {diff}: "
            f"{a.labels[diff]!r} vs {b.labels[diff]!r}"
        )


def includes(a: Ifs, b: Ifs) -> bool:
    """True iff ``a`` is contained in ``b`` (mu_a <= mu_b and nu_a >= nu_b everywhere)."""
    check_aligned(a, b)
    return all(x.mu <= y.mu and x.nu >= y.nu for x, y in zip(a, b))
