"""Data model for the fixed-point data of a circle action with isolated fixed points.

A fixed point carries the integer weights of the circle action on its
tangent space; its index is twice the number of negative weights.  All
values are immutable once validated.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    DuplicateId,
    MissingMomentValue,
    WrongWeightCount,
    ZeroIsCritical,
    ZeroWeight,
)


@dataclass(frozen=True)
class FixedPoint:
    id: str
    weights: tuple[int, ...]
    moment_value: Fraction | None = None

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if self.moment_value is not None and not isinstance(
            self.moment_value, Fraction
        ):
            object.__setattr__(self, "moment_value", Fraction(self.moment_value))

    @property
    def negative_count(self) -> int:
        """Number of negative weights; the Morse index is twice this."""
        return sum(1 for w in self.weights if w < 0)

    @property
    def index(self) -> int:
        return 2 * self.negative_count

    @property
    def weight_product(self) -> int:
        p = 1
        for w in self.weights:
            p *= w
        return p


@dataclass(frozen=True)
class FixedPointData:
    n: int
    points: tuple[FixedPoint, ...] = field(default_factory=tuple)

    def __post_init__(self):
        # deterministic ordering: by (index, id)
        ordered = tuple(sorted(self.points, key=lambda p: (p.index, p.id)))
        object.__setattr__(self, "points", ordered)

    @property
    def semifree(self) -> bool:
        return all(abs(w) == 1 for p in self.points for w in p.weights)

    def point(self, pid: str) -> FixedPoint:
        for p in self.points:
            if p.id == pid:
                return p
        raise KeyError(pid)


@dataclass(frozen=True)
class CountVector:
    """N[k] = number of fixed points with k negative weights, k = 0..n."""

    N: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "N", tuple(int(c) for c in self.N))
        if any(c < 0 for c in self.N):
            raise ValueError("counts must be nonnegative")

    @property
    def total(self) -> int:
        return sum(self.N)


def validate(data: FixedPointData) -> None:
    """Check all invariants; raises naming the offending point."""
    seen = set()
    for p in data.points:
        if p.id in seen:
            raise DuplicateId(f"duplicate point id {p.id!r}")
        seen.add(p.id)
        if len(p.weights) != data.n:
            raise WrongWeightCount(
                f"point {p.id!r} has {len(p.weights)} weights, expected {data.n}"
            )
        if any(w == 0 for w in p.weights):
            raise ZeroWeight(f"point {p.id!r} has a zero weight")


def counts(data: FixedPointData) -> CountVector:
    """Tally points by their number of negative weights."""
    N = [0] * (data.n + 1)
    for p in data.points:
        N[p.negative_count] += 1
    return CountVector(tuple(N))


def split_by_moment_sign(
    data: FixedPointData,
) -> tuple[list[FixedPoint], list[FixedPoint]]:
    """Partition points into (positive moment, negative moment).

    Every point must carry a nonzero moment value: zero would make the
    reduction level critical.
    """
    plus, minus = [], []
    for p in data.points:
        if p.moment_value is None:
            raise MissingMomentValue(f"point {p.id!r} has no moment value")
        if p.moment_value == 0:
            raise ZeroIsCritical(f"point {p.id!r} has moment value 0")
        (plus if p.moment_value > 0 else minus).append(p)
    return plus, minus
