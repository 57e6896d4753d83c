"""
Six Plane Points to Seven Weighted Points
The projection from m6 of m1..m5 and of the two tangency points of the
conic through m1..m5, its on-conic variant, fibers and the inverse lift
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from src.cremona import SwapSet, geometric_swap
from src.fields import FieldDescriptor, FieldKind, sqrt
from src.geometry import (
    INFINITY,
    Conic,
    PlaneConfig,
    Point1,
    Point2,
    common_field,
    conic_through_five,
    map2_from_triples,
    project_from,
    tangent_line_at,
    tangent_points,
)
from src.geometry.linalg import null_space
from src.moduli import (
    P1Config,
    SymmetryGroup,
    WeightVector,
    collision_stratum,
)
from src.utils.exceptions import (
    CubicBridgeError,
    ExtensionDepthExceeded,
    NotGeneric,
    NotInDomain,
    NotInStratum,
    NotOnConic,
    UnliftableOverField,
)
from src.utils.logger import get_logger

from .classification import StratumKind, classify
from .planar import normal_form_key

logger = get_logger(__name__)

PHI_WEIGHTS = WeightVector((2, 2, 2, 2, 2, 1, 1))
ON_CONIC_WEIGHTS = WeightVector((2, 2, 2, 2, 2, 2))

# merged strata a phi67 output may land in
OUTPUT_STRATA = {
    WeightVector((2, 2, 2, 2, 2, 1, 1)),
    WeightVector((3, 2, 2, 2, 2, 1)),
    WeightVector((3, 3, 2, 2, 2)),
    WeightVector((4, 2, 2, 2, 1, 1)),
}


@dataclass(frozen=True, eq=False)
class P1Output:
    """Five ordered weight-2 points and an unordered weight-1 pair"""

    ordered: Tuple[Point1, ...]
    pair: Tuple[Point1, Point1]

    def __post_init__(self):
        if len(self.ordered) != 5 or len(self.pair) != 2:
            raise NotInStratum("A phi output has 5 ordered points and a pair")
        F = common_field(p.field for p in self.ordered + tuple(self.pair))
        ordered = tuple(p.lift(F) for p in self.ordered)
        pair = tuple(sorted((p.lift(F) for p in self.pair), key=lambda p: p.key()))
        if pair[0] == pair[1]:
            raise NotInStratum("The two weight-1 points coincide")
        object.__setattr__(self, 'ordered', ordered)
        object.__setattr__(self, 'pair', pair)
        merged = output_stratum(self)
        if merged not in OUTPUT_STRATA:
            raise NotInStratum(f"Coincidence pattern {merged} is not a phi stratum")

    @property
    def field(self) -> FieldDescriptor:
        return self.ordered[0].field

    def permute(self, perm: Dict[int, int]) -> "P1Output":
        """The point labeled i gets label perm[i] (labels 1..5)"""
        ordered: List[Optional[Point1]] = [None] * 5
        for i, p in enumerate(self.ordered, start=1):
            ordered[perm.get(i, i) - 1] = p
        return P1Output(tuple(ordered), self.pair)

    def __eq__(self, other):
        if not isinstance(other, P1Output):
            return NotImplemented
        return self.ordered == other.ordered and self.pair == other.pair

    def __hash__(self):
        return hash((self.ordered, self.pair))

    def __repr__(self) -> str:
        ordered = ", ".join(str(p.affine()) for p in self.ordered)
        pair = ", ".join(str(p.affine()) for p in self.pair)
        return f"P1Output([{ordered}], {{{pair}}})"


def as_p1_config(out: P1Output, ordered_symmetric: bool = False) -> Tuple[P1Config, SymmetryGroup]:
    """
    The seven weighted points (2^5, 1^2) and their label symmetry

    Args:
        out: phi output
        ordered_symmetric: also allow S5 on the ordered points

    Returns:
        (configuration, symmetry group: S2 on the pair, optionally times S5)
    """
    cfg = P1Config(out.ordered + tuple(out.pair), PHI_WEIGHTS)
    blocks = [(5, 6)]
    if ordered_symmetric:
        blocks.append((0, 1, 2, 3, 4))
    return cfg, SymmetryGroup.of_blocks(*blocks)


def output_stratum(out: P1Output) -> WeightVector:
    points = out.ordered + tuple(out.pair)
    return collision_stratum(P1Config(points, PHI_WEIGHTS)).merged


def phi67(cfg: PlaneConfig) -> P1Output:
    """
    Project m1..m5 and the tangency points of the conic through m1..m5 from m6

    Raises:
        NotInDomain: cfg is not GenericSmooth or CollinearThrough6
    """
    stratum = classify(cfg)
    if stratum.kind not in (StratumKind.GENERIC_SMOOTH, StratumKind.COLLINEAR_THROUGH_6):
        raise NotInDomain(f"phi67 is not defined on {stratum}")
    conic = conic_through_five(cfg.points[:5])
    m6 = cfg[6]
    t1, t2 = tangent_points(conic, m6)
    ordered = tuple(project_from(m6, p) for p in cfg.points[:5])
    pair = (project_from(m6, t1), project_from(m6, t2))
    return P1Output(ordered, pair)


def _tangent_class(conic: Conic, point: Point2) -> Point1:
    """Pencil class at point of the tangent line to conic there"""
    line = tangent_line_at(conic, point)
    for v in null_space([list(line.coords)]):
        other = Point2(tuple(v))
        if other != point:
            return project_from(point, other)
    raise NotOnConic("Tangent line has no second point")


def project_six_on_conic(points: Sequence[Point2], conic: Conic) -> P1Config:
    """Project m1..m5 from m6; a point equal to m6 and m6 itself take the tangent class"""
    m6 = points[5]
    tangent = _tangent_class(conic, m6)
    images = tuple(tangent if p == m6 else project_from(m6, p) for p in points[:5])
    return P1Config(images + (tangent,), ON_CONIC_WEIGHTS)


def conic_through_six(points: Sequence[Point2]) -> Conic:
    """Rank 3 conic through the first five distinct points, containing all six"""
    distinct: List[Point2] = []
    for p in points:
        if all(p != q for q in distinct):
            distinct.append(p)
    if len(distinct) < 5:
        raise NotOnConic(f"Only {len(distinct)} distinct points; the conic is not determined")
    try:
        conic = conic_through_five(distinct[:5])
    except CubicBridgeError as e:
        raise NotOnConic(f"No irreducible conic through the points: {e}") from e
    missing = [i for i, p in enumerate(points, start=1) if not conic.contains(p)]
    if missing:
        raise NotOnConic(f"m{missing[0]} is off the conic through the other points")
    return conic


def phi67_on_conic(cfg) -> P1Config:
    """
    Six points on one irreducible conic projected from m6, weights (2^6)

    Point 6 is the tangent direction at m6. A raw tuple with one coincident
    pair is accepted; the coincident points project to one class.

    Raises:
        NotOnConic: the points are not on a common rank 3 conic
    """
    points = tuple(cfg)
    F = common_field(p.field for p in points)
    points = tuple(p.lift(F) for p in points)
    conic = conic_through_six(points)
    return project_six_on_conic(points, conic)


def fiber_orbit(cfg: PlaneConfig) -> List[PlaneConfig]:
    """
    Swap images of cfg, one per plane moduli class, in swap-set order

    Raises:
        NotGeneric: cfg is not GenericSmooth
    """
    stratum = classify(cfg)
    if stratum.kind is not StratumKind.GENERIC_SMOOTH:
        raise NotGeneric(f"Fiber orbits need a GenericSmooth configuration, got {stratum}")
    seen = set()
    orbit: List[PlaneConfig] = []
    for swap in SwapSet.all_subsets():
        image = geometric_swap(cfg, swap)
        key = normal_form_key(image.points)
        if key not in seen:
            seen.add(key)
            orbit.append(image)
    logger.debug(f"Fiber orbit of size {len(orbit)}")
    return orbit


def _check_lift_pattern(out: P1Output):
    for i in range(5):
        for j in range(i + 1, 5):
            if out.ordered[i] == out.ordered[j]:
                raise NotInStratum(f"Ordered points {i + 1} and {j + 1} coincide; no plane lift")


def lift(out: P1Output) -> PlaneConfig:
    """
    A Veronese-frame configuration whose phi image is out

    The Moebius map sending pair[0], pair[1] to infinity, 0 and the first
    ordered point outside the pair to 1 gives values lambda_i; then
    m_i = [1, sqrt(lambda_i), lambda_i] and m6 = [0, 1, 0]. An ordered point
    at pair[0] lifts to [0, 0, 1]. Already normalized input is left fixed.

    Raises:
        UnliftableOverField: a square root is missing (over Q every lambda_i
            must be a square; elsewhere one quadratic layer may be added)
        NotInStratum: two ordered points coincide
    """
    _check_lift_pattern(out)
    F = out.field
    ref = next(p for p in out.ordered if p != out.pair[0] and p != out.pair[1])
    g = map2_from_triples((out.pair[0], ref, out.pair[1]),
                          (Point1.from_affine(F, INFINITY), Point1.from_affine(F, 1),
                           Point1.from_affine(F, 0)))
    values = [g.apply(p).affine() for p in out.ordered]

    field = F
    roots = []
    for lam in values:
        if lam is INFINITY:
            roots.append(None)
            continue
        lam = lam.lift(field)
        try:
            root, E = sqrt(lam)
        except ExtensionDepthExceeded as e:
            raise UnliftableOverField(f"{lam} has no square root in {field}") from e
        if E != field:
            if field.kind is FieldKind.RATIONALS:
                raise UnliftableOverField(f"{lam} is not a rational square")
            logger.debug(f"Lift extends {field} to {E}")
            field = E
        roots.append((root, lam))

    points = []
    for entry in roots:
        if entry is None:
            points.append(Point2.of(field, 0, 0, 1))
            continue
        root, lam = entry
        points.append(Point2((field.one(), root.lift(field), lam.lift(field))))
    points.append(Point2.of(field, 0, 1, 0))
    return PlaneConfig(tuple(points))
