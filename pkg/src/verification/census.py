"""
Boundary Divisor Census
The 36 boundary divisors of marked six-point configurations and their S5 orbits
"""

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Sequence, Set, Tuple

from src.fields import FieldDescriptor
from src.geometry import Conic, Point2, collinear, common_field
from src.geometry.linalg import null_space


class DivisorClass(Enum):
    ON_CONIC = "A_OnConic"
    COLLINEAR_WITH_6 = "B_CollinearWith6"
    COLLINEAR_AMONG_5 = "C_CollinearAmong5"
    COLLISION = "D_Collision"


@dataclass(frozen=True)
class DivisorLabel:
    kind: DivisorClass
    indices: Tuple[int, ...] = ()

    def __post_init__(self):
        indices = tuple(sorted(self.indices))
        expected, bound = {
            DivisorClass.ON_CONIC: (0, 0),
            DivisorClass.COLLINEAR_WITH_6: (2, 5),
            DivisorClass.COLLINEAR_AMONG_5: (3, 5),
            DivisorClass.COLLISION: (2, 6),
        }[self.kind]
        if len(indices) != expected or len(set(indices)) != expected \
                or any(i < 1 or i > bound for i in indices):
            raise ValueError(f"{self.kind.value} needs {expected} distinct labels in 1..{bound}, got {indices}")
        object.__setattr__(self, 'indices', indices)

    def __lt__(self, other):
        return (self.kind.value, self.indices) < (other.kind.value, other.indices)

    def permuted(self, perm: Dict[int, int]) -> "DivisorLabel":
        return DivisorLabel(self.kind, tuple(perm.get(i, i) for i in self.indices))

    def __str__(self) -> str:
        if not self.indices:
            return self.kind.value
        return f"{self.kind.value}({','.join(map(str, self.indices))})"


def _all_labels() -> List[DivisorLabel]:
    labels = [DivisorLabel(DivisorClass.ON_CONIC)]
    labels += [DivisorLabel(DivisorClass.COLLINEAR_WITH_6, p) for p in itertools.combinations(range(1, 6), 2)]
    labels += [DivisorLabel(DivisorClass.COLLINEAR_AMONG_5, t) for t in itertools.combinations(range(1, 6), 3)]
    labels += [DivisorLabel(DivisorClass.COLLISION, p) for p in itertools.combinations(range(1, 7), 2)]
    return labels


def s5_permutations() -> List[Dict[int, int]]:
    """Permutations of labels 1..5 fixing 6"""
    return [dict(zip(range(1, 6), image)) for image in itertools.permutations(range(1, 6))]


def boundary_divisors() -> Tuple[List[DivisorLabel], List[List[DivisorLabel]]]:
    """
    All boundary divisor labels and their S5 orbits

    Returns:
        (labels in class order, orbits in order of first member, each sorted)
    """
    labels = _all_labels()
    perms = s5_permutations()
    orbits: List[List[DivisorLabel]] = []
    seen: Set[DivisorLabel] = set()
    for label in labels:
        if label in seen:
            continue
        orbit = sorted({label.permuted(perm) for perm in perms})
        seen.update(orbit)
        orbits.append(orbit)
    return labels, orbits


def census_summary() -> Dict[str, object]:
    labels, orbits = boundary_divisors()
    counts: Dict[str, int] = {}
    for label in labels:
        counts[label.kind.value] = counts.get(label.kind.value, 0) + 1
    return {
        "total": len(labels),
        "classes": counts,
        "orbits": [{"size": len(orbit), "members": [str(label) for label in orbit]} for orbit in orbits],
    }


def _monomial_row(p: Point2) -> list:
    x, y, z = p.coords
    return [x * x, y * y, z * z, x * y, x * z, y * z]


def _on_smooth_conic(points: Sequence[Point2], field: FieldDescriptor) -> bool:
    basis = null_space([_monomial_row(p) for p in points])
    # a pencil means four collinear points, so no irreducible member
    if len(basis) != 1:
        return False
    return Conic.from_coefficients(field, *basis[0]).is_irreducible


def detect_divisors(points: Sequence[Point2]) -> Set[DivisorLabel]:
    """
    Boundary divisors a raw six-point tuple lies on

    Collisions are D; collinear triples of distinct points are B or C; six
    distinct points on one irreducible conic are A. Six points on a line
    pair only meet B or C divisors.
    """
    F = common_field(p.field for p in points)
    points = [p.lift(F) for p in points]
    found: Set[DivisorLabel] = set()
    for i, j in itertools.combinations(range(1, 7), 2):
        if points[i - 1] == points[j - 1]:
            found.add(DivisorLabel(DivisorClass.COLLISION, (i, j)))
    for t in itertools.combinations(range(1, 7), 3):
        a, b, c = (points[k - 1] for k in t)
        if a == b or b == c or a == c or not collinear(a, b, c):
            continue
        if 6 in t:
            found.add(DivisorLabel(DivisorClass.COLLINEAR_WITH_6, t[:2]))
        else:
            found.add(DivisorLabel(DivisorClass.COLLINEAR_AMONG_5, t))
    distinct = not any(label.kind is DivisorClass.COLLISION for label in found)
    if distinct and _on_smooth_conic(points, F):
        found.add(DivisorLabel(DivisorClass.ON_CONIC))
    return found
