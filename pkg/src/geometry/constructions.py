"""
Projective Constructions
Incidence, conics through five points, tangency, projection and frames
"""

from typing import List, Sequence, Tuple

from src.fields import FieldDescriptor, Scalar, sqrt
from src.utils.exceptions import (
    CenterEqualsPoint,
    DegenerateConic,
    DegenerateFrame,
    DegenerateTriple,
    NotIrreducible,
    NotUnique,
    PointNotOnConic,
    PointOnConic,
)
from src.utils.logger import get_logger

from . import linalg
from .objects import (
    INFINITY,
    AffineValue,
    Conic,
    Line,
    Map2,
    Map3,
    Point1,
    Point2,
    common_field,
)

logger = get_logger(__name__)


def _unify(*objects):
    """Lift objects into their common field"""
    F = common_field(o.field for o in objects)
    return [o.lift(F) for o in objects]


def collinear(p: Point2, q: Point2, r: Point2) -> bool:
    p, q, r = _unify(p, q, r)
    return linalg.det3((p.coords, q.coords, r.coords)).is_zero()


def join(p: Point2, q: Point2) -> Line:
    """Line through two distinct points"""
    p, q = _unify(p, q)
    return Line(linalg.cross(p.coords, q.coords))


def meet(a: Line, b: Line) -> Point2:
    """Intersection point of two distinct lines"""
    a, b = _unify(a, b)
    return Point2(linalg.cross(a.coords, b.coords))


def _monomials(p: Point2) -> List[Scalar]:
    x, y, z = p.coords
    return [x * x, y * y, z * z, x * y, x * z, y * z]


def conic_through_five(points: Sequence[Point2]) -> Conic:
    """
    The conic through five points

    Args:
        points: Five pairwise distinct points

    Returns:
        The unique conic through them

    Raises:
        NotUnique: four of the points are collinear (a pencil of conics)
        NotIrreducible: the unique conic is a line pair; carried on the error
    """
    if len(points) != 5:
        raise ValueError(f"conic_through_five needs 5 points, got {len(points)}")
    points = _unify(*points)
    basis = linalg.null_space([_monomials(p) for p in points])
    if len(basis) != 1:
        raise NotUnique(f"Conics through the five points form a {len(basis) - 1}-dimensional family")
    conic = Conic.from_coefficients(points[0].field, *basis[0])
    if not conic.is_irreducible:
        raise NotIrreducible(f"Conic through the five points has rank {conic.rank}", conic)
    return conic


def evaluate_conic(conic: Conic, p: Point2) -> Scalar:
    return conic.evaluate(p)


def polar_line(conic: Conic, p: Point2) -> Line:
    if not conic.is_irreducible:
        raise DegenerateConic(f"Polar needs a rank 3 conic, got rank {conic.rank}")
    F = common_field((conic.field, p.field))
    return Line(tuple(linalg.mat_vec(conic.lift(F).gram, p.lift(F).coords)))


def _line_points(line: Line) -> Tuple[List[Scalar], List[Scalar]]:
    """Two distinct points spanning a line"""
    u, v = linalg.null_space([list(line.coords)])
    return u, v


def _combine(s: Scalar, u: Sequence[Scalar], t: Scalar, v: Sequence[Scalar]) -> Point2:
    return Point2(tuple(s * a + t * b for a, b in zip(u, v)))


def tangent_points(conic: Conic, p: Point2) -> Tuple[Point2, Point2]:
    """
    Points of tangency of the two tangent lines from p to conic

    Solves the restriction of the conic to the polar line of p. When the
    discriminant is not a square the points live in a quadratic extension
    and are conjugate.

    Returns:
        Both points, sorted by canonical key

    Raises:
        PointOnConic: p lies on the conic
        ExtensionDepthExceeded: already extended and the discriminant is a non-square
    """
    if conic.contains(p):
        raise PointOnConic(f"{p} lies on the conic")
    polar = polar_line(conic, p)
    conic = conic.lift(polar.field)
    u, v = _line_points(polar)
    qu, qv, b = conic.bilinear(u, u), conic.bilinear(v, v), conic.bilinear(u, v)
    F = polar.field
    if qu.is_zero() or qv.is_zero():
        a, w = (u, v) if qu.is_zero() else (v, u)
        qw = conic.bilinear(w, w)
        pair = (Point2(tuple(a)), _combine(qw, a, b * -2, w))
    else:
        root, E = sqrt(b * b - qu * qv)
        if E != F:
            logger.debug(f"Tangency points need {E}")
            u = [x.lift(E) for x in u]
            v = [x.lift(E) for x in v]
            b, qv = b.lift(E), qv.lift(E)
        pair = tuple(_combine(qv, u, -b + sign * root, v) for sign in (1, -1))
    return tuple(sorted(pair, key=lambda q: q.key()))


def second_intersection(conic: Conic, a: Point2, m: Point2) -> Point2:
    """
    Other intersection of line(a, m) with conic, computed as Q(m) a - 2 B(a, m) m

    Returns a itself when the line is tangent at a.
    """
    if not conic.contains(a):
        raise PointNotOnConic(f"{a} is not on the conic")
    if conic.contains(m):
        raise PointOnConic(f"{m} lies on the conic")
    conic, a, m = _unify(conic, a, m)
    qm = conic.bilinear(m.coords, m.coords)
    b = conic.bilinear(a.coords, m.coords)
    return Point2(tuple(qm * x - b * 2 * y for x, y in zip(a.coords, m.coords)))


def tangent_line_at(conic: Conic, a: Point2) -> Line:
    if not conic.contains(a):
        raise PointNotOnConic(f"{a} is not on the conic")
    return polar_line(conic, a)


def project_from(center: Point2, p: Point2) -> Point1:
    """
    Project p from center onto P^1

    With k the first nonzero coordinate of the center (canonically 1) the
    pencil coordinates are p_i - c_i p_k for the two indices i != k.
    """
    center, p = _unify(center, p)
    if center == p:
        raise CenterEqualsPoint(f"Cannot project {p} from itself")
    c = center.coords
    k = next(i for i in range(3) if not c[i].is_zero())
    forms = [p.coords[i] - c[i] * p.coords[k] for i in range(3) if i != k]
    return Point1(tuple(forms))


def pencil_line(center: Point2, image: Point1) -> Line:
    """The line through center whose projection class is image"""
    F = common_field((center.field, image.field))
    c = center.lift(F).coords
    k = next(i for i in range(3) if not c[i].is_zero())
    others = [i for i in range(3) if i != k]
    a, b = image.lift(F).coords
    # points of the line: center + (direction with p_k = 0, p_others = (a, b))
    direction = [F.zero()] * 3
    direction[others[0]], direction[others[1]] = a, b
    return join(Point2(c), Point2(tuple(direction)))


def _bracket(a: Point1, b: Point1) -> Scalar:
    return linalg.det2(a.coords[0], a.coords[1], b.coords[0], b.coords[1])


def cross_ratio(a: Point1, b: Point1, c: Point1, d: Point1) -> AffineValue:
    """
    Image of d under the Moebius map sending a, b, c to 0, 1, infinity

    Returns:
        A Scalar, or INFINITY when d = c
    """
    a, b, c, d = _unify(a, b, c, d)
    if a == b or b == c or a == c:
        raise DegenerateTriple("cross_ratio needs three pairwise distinct points")
    num = _bracket(d, a) * _bracket(b, c)
    den = _bracket(d, c) * _bracket(b, a)
    if den.is_zero():
        return INFINITY
    return num / den


def _frame_matrix(points: Sequence[Sequence[Scalar]], n: int) -> List[List[Scalar]]:
    """Columns scaled so they sum to the last point"""
    cols = [list(p) for p in points[:n]]
    m = linalg.transpose(cols)
    lam = linalg.solve(m, points[n])
    if lam is None or any(x.is_zero() for x in lam):
        raise DegenerateFrame("Frame points are not in general position")
    return [[m[i][j] * lam[j] for j in range(n)] for i in range(n)]


def map_from_frames(src: Sequence[Point2], dst: Sequence[Point2]) -> Map3:
    """
    The projectivity sending four points in general position to four others

    Raises:
        DegenerateFrame: three points of either frame are collinear
    """
    objs = _unify(*src, *dst)
    s, d = objs[:4], objs[4:]
    ms = _frame_matrix([p.coords for p in s], 3)
    md = _frame_matrix([p.coords for p in d], 3)
    return Map3(tuple(tuple(r) for r in linalg.mat_mul(md, linalg.inverse(ms))))


def map2_from_triples(src: Sequence[Point1], dst: Sequence[Point1]) -> Map2:
    """The Moebius map sending three distinct points to three distinct points"""
    objs = _unify(*src, *dst)
    s, d = objs[:3], objs[3:]
    ms = _frame_matrix([p.coords for p in s], 2)
    md = _frame_matrix([p.coords for p in d], 2)
    return Map2(tuple(tuple(r) for r in linalg.mat_mul(md, linalg.inverse(ms))))


def standard_frame(field: FieldDescriptor) -> Tuple[Point2, Point2, Point2, Point2]:
    return (Point2.of(field, 1, 0, 0), Point2.of(field, 0, 1, 0),
            Point2.of(field, 0, 0, 1), Point2.of(field, 1, 1, 1))


def veronese_normalize(points: Sequence[Point2]) -> Tuple[Map3, List[Point2]]:
    """
    Move a generic six-point configuration to the Veronese normal form

    The conic through m1..m5 goes to y^2 = xz, m6 to [0,1,0] and m1 to
    [1,1,1]. The tangency point first by canonical key goes to [0,0,1], the
    other to [1,0,0], so a normalized configuration is left fixed.

    Args:
        points: m1..m6

    Returns:
        (map, transported points); coordinates may be in the tangency extension
    """
    conic = conic_through_five(points[:5])
    t_inf, t_zero = tangent_points(conic, points[5])
    F = t_inf.field
    lifted = [p.lift(F) for p in points]
    g = map_from_frames((t_zero, lifted[5], t_inf, lifted[0]), standard_frame(F))
    return g, [g.apply(p) for p in lifted]
