"""
Plane Configurations
Six labeled, pairwise distinct points of P^2
"""

from dataclasses import dataclass
from typing import Dict, Iterator, Mapping, Sequence, Tuple, Union

from src.fields import FieldDescriptor
from src.utils.exceptions import InvalidConfiguration

from .objects import Map3, Point2, common_field

LABELS = (1, 2, 3, 4, 5, 6)

Permutation = Union[Mapping[int, int], Sequence[int]]


def permutation_map(perm: Permutation, size: int = 6) -> Dict[int, int]:
    """
    Normalize a label permutation to a dict on 1..size

    A sequence lists the images of 1, 2, ...; labels beyond its length are fixed.
    """
    if isinstance(perm, Mapping):
        mapping = {i: i for i in range(1, size + 1)}
        mapping.update(perm)
    else:
        mapping = {i + 1: v for i, v in enumerate(perm)}
        for i in range(len(perm) + 1, size + 1):
            mapping[i] = i
    if sorted(mapping) != list(range(1, size + 1)) or sorted(mapping.values()) != list(range(1, size + 1)):
        raise ValueError(f"Not a permutation of 1..{size}: {perm}")
    return mapping


@dataclass(frozen=True, eq=False)
class PlaneConfig:
    """Points m1..m6, all in one field"""

    points: Tuple[Point2, ...]

    def __post_init__(self):
        if len(self.points) != 6:
            raise InvalidConfiguration(f"A plane configuration has 6 points, got {len(self.points)}")
        F = common_field(p.field for p in self.points)
        pts = tuple(p.lift(F) for p in self.points)
        for i in range(6):
            for j in range(i + 1, 6):
                if pts[i] == pts[j]:
                    raise InvalidConfiguration(f"Points m{i + 1} and m{j + 1} coincide")
        object.__setattr__(self, 'points', pts)

    @classmethod
    def of(cls, field: FieldDescriptor, rows) -> "PlaneConfig":
        return cls(tuple(Point2.of(field, *row) for row in rows))

    @property
    def field(self) -> FieldDescriptor:
        return self.points[0].field

    def __getitem__(self, label: int) -> Point2:
        """Point by label, 1-based"""
        return self.points[label - 1]

    def __iter__(self) -> Iterator[Point2]:
        return iter(self.points)

    def __eq__(self, other):
        if not isinstance(other, PlaneConfig):
            return NotImplemented
        return all(a == b for a, b in zip(self.points, other.points))

    def __hash__(self):
        return hash(self.points)

    def lift(self, field: FieldDescriptor) -> "PlaneConfig":
        return PlaneConfig(tuple(p.lift(field) for p in self.points))

    def apply(self, g: Map3) -> "PlaneConfig":
        return PlaneConfig(tuple(g.apply(p) for p in self.points))

    def replace(self, label: int, point: Point2) -> "PlaneConfig":
        pts = list(self.points)
        pts[label - 1] = point
        return PlaneConfig(tuple(pts))

    def key(self) -> bytes:
        return b";".join(p.key() for p in self.points)

    def __repr__(self) -> str:
        return f"PlaneConfig({', '.join(repr(p) for p in self.points)})"


def permute_labels(cfg: PlaneConfig, perm: Permutation) -> PlaneConfig:
    """
    Relabel a configuration: the point labeled i gets label perm(i)

    Args:
        cfg: Configuration
        perm: Permutation of 1..6, or of 1..5 with 6 fixed
    """
    mapping = permutation_map(perm, 6)
    pts = [None] * 6
    for i, p in enumerate(cfg.points, start=1):
        pts[mapping[i] - 1] = p
    return PlaneConfig(tuple(pts))
