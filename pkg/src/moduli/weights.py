"""
Weighted Configurations
Weight vectors, weighted points on P^1, coincidence strata and symmetry groups
"""

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, List, Sequence, Tuple, Union

from src.fields import FieldDescriptor
from src.geometry import Map2, Point1, common_field
from src.utils.helpers import WeightText


def _integer_weight(w) -> int:
    if isinstance(w, bool) or not hasattr(w, "__index__"):
        raise ValueError(f"Weights must be integers, got {w!r}")
    return int(w)


@dataclass(frozen=True)
class WeightVector:
    """Ordered positive integer weights, at least three of them"""

    weights: Tuple[int, ...]

    def __post_init__(self):
        weights = tuple(_integer_weight(w) for w in self.weights)
        if len(weights) < 3:
            raise ValueError(f"A weight vector has at least 3 entries, got {len(weights)}")
        if any(w < 1 for w in weights):
            raise ValueError(f"Weights must be positive, got {weights}")
        object.__setattr__(self, 'weights', weights)

    @classmethod
    def parse(cls, text: str) -> "WeightVector":
        """Accepts "2^5,1^2" and "2,2,2,2,2,1,1\""""
        return cls(tuple(WeightText.parse(text)))

    @classmethod
    def of(cls, weights: Union[str, Sequence[int], "WeightVector"]) -> "WeightVector":
        if isinstance(weights, WeightVector):
            return weights
        if isinstance(weights, str):
            return cls.parse(weights)
        return cls(tuple(weights))

    @property
    def total(self) -> int:
        return sum(self.weights)

    def __len__(self) -> int:
        return len(self.weights)

    def __getitem__(self, i: int) -> int:
        return self.weights[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self.weights)

    def sorted(self) -> "WeightVector":
        """Descending order"""
        return WeightVector(tuple(sorted(self.weights, reverse=True)))

    def __str__(self) -> str:
        return WeightText.format(list(self.weights))


class Stability(Enum):
    STABLE = "Stable"
    STRICTLY_SEMISTABLE = "StrictlySemistable"
    UNSTABLE = "Unstable"


@dataclass(frozen=True, eq=False)
class P1Config:
    """Weighted points on P^1; coincidences allowed"""

    points: Tuple[Point1, ...]
    weights: WeightVector

    def __post_init__(self):
        weights = WeightVector.of(self.weights)
        if len(self.points) != len(weights):
            raise ValueError(f"{len(self.points)} points but {len(weights)} weights")
        F = common_field(p.field for p in self.points)
        object.__setattr__(self, 'points', tuple(p.lift(F) for p in self.points))
        object.__setattr__(self, 'weights', weights)

    @classmethod
    def from_affine(cls, field: FieldDescriptor, values, weights) -> "P1Config":
        """Points from affine values (INFINITY allowed)"""
        return cls(tuple(Point1.from_affine(field, v) for v in values), WeightVector.of(weights))

    @property
    def field(self) -> FieldDescriptor:
        return self.points[0].field

    def __len__(self) -> int:
        return len(self.points)

    def apply(self, g: Map2) -> "P1Config":
        return P1Config(tuple(g.apply(p) for p in self.points), self.weights)

    def permute(self, sigma: Sequence[int]) -> "P1Config":
        """Index i moves to sigma[i] (0-based)"""
        points: List[Point1] = [None] * len(self)
        weights: List[int] = [0] * len(self)
        for i, target in enumerate(sigma):
            points[target] = self.points[i]
            weights[target] = self.weights[i]
        return P1Config(tuple(points), WeightVector(tuple(weights)))

    def lift(self, field: FieldDescriptor) -> "P1Config":
        return P1Config(tuple(p.lift(field) for p in self.points), self.weights)

    def distinct_count(self) -> int:
        return len(set(self.points))

    def __eq__(self, other):
        if not isinstance(other, P1Config):
            return NotImplemented
        return self.weights == other.weights and self.points == other.points

    def __hash__(self):
        return hash((self.points, self.weights))

    def __repr__(self) -> str:
        values = ", ".join(str(p.affine()) for p in self.points)
        return f"P1Config([{values}], {self.weights})"


@dataclass(frozen=True)
class Stratum:
    """Coincidence partition (blocks ordered by first index) and merged weights"""

    partition: Tuple[Tuple[int, ...], ...]
    merged: WeightVector


@dataclass(frozen=True)
class SymmetryGroup:
    """Product of symmetric groups on blocks of 0-based indices"""

    blocks: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(tuple(sorted(b)) for b in self.blocks if b)
        seen = [i for b in blocks for i in b]
        if len(seen) != len(set(seen)):
            raise ValueError(f"Symmetry blocks overlap: {blocks}")
        object.__setattr__(self, 'blocks', tuple(sorted(blocks)))

    @classmethod
    def trivial(cls) -> "SymmetryGroup":
        return cls(())

    @classmethod
    def from_weights(cls, weights: Union[str, Sequence[int], WeightVector]) -> "SymmetryGroup":
        """All permutations of points of equal weight"""
        weights = WeightVector.of(weights)
        groups: Dict[int, List[int]] = {}
        for i, w in enumerate(weights):
            groups.setdefault(w, []).append(i)
        return cls(tuple(tuple(b) for b in groups.values() if len(b) > 1))

    @classmethod
    def of_blocks(cls, *blocks: Sequence[int]) -> "SymmetryGroup":
        return cls(tuple(tuple(b) for b in blocks))

    def respects(self, weights: WeightVector) -> bool:
        return all(len({weights[i] for i in b}) == 1 for b in self.blocks)

    def order(self) -> int:
        result = 1
        for b in self.blocks:
            for k in range(2, len(b) + 1):
                result *= k
        return result

    def elements(self, n: int) -> Iterator[Tuple[int, ...]]:
        """Every group element as a 0-based image tuple on range(n), identity first"""
        per_block = [list(itertools.permutations(b)) for b in self.blocks]
        for choice in itertools.product(*per_block):
            sigma = list(range(n))
            for block, image in zip(self.blocks, choice):
                for src, dst in zip(block, image):
                    sigma[src] = dst
            yield tuple(sigma)
