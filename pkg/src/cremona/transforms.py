"""
Cremona Transforms
The standard quadratic involution and its conjugates at arbitrary triples
"""

from typing import Iterable, List, Sequence, Tuple

from src.geometry import (
    Point2,
    collinear,
    common_field,
    map_from_frames,
    standard_frame,
)
from src.utils.exceptions import (
    CollinearBase,
    DegenerateFourthPoint,
    IndeterminatePoint,
    ZeroForm,
)
from src.utils.logger import get_logger

from .forms import TernaryForm

logger = get_logger(__name__)


def _zero_count(p: Point2) -> int:
    return sum(1 for c in p.coords if c.is_zero())


def std_cremona_eval(p: Point2) -> Point2:
    """
    [x, y, z] -> [yz, xz, xy]

    Points on an edge of the coordinate triangle go to the opposite vertex.

    Raises:
        IndeterminatePoint: p is a coordinate vertex
    """
    if _zero_count(p) >= 2:
        raise IndeterminatePoint(f"{p} is a vertex of the coordinate triangle")
    x, y, z = p.coords
    return Point2((y * z, x * z, x * y))


def std_cremona_form_image(form: TernaryForm) -> TernaryForm:
    """
    Defining form of the image curve under the standard involution

    Substitutes [yz, xz, xy] and removes the largest monomial factor. A
    single-term form is a union of triangle edges; its substitution is
    returned whole, so x gives yz.

    Raises:
        ZeroForm: form is zero
    """
    if form.is_zero():
        raise ZeroForm("Cannot transform the zero form")
    image = TernaryForm(form.field, tuple(((b + c, a + c, a + b), coeff)
                                          for (a, b, c), coeff in form.terms))
    if len(image.terms) == 1:
        return image
    return image.divide_monomial(image.monomial_content())


def fourth_frame_label(points: Sequence[Point2], base: Sequence[int]) -> int:
    """Lowest non-base label whose point is not collinear with two base points"""
    b1, b2, b3 = (points[i - 1] for i in base)
    for label in range(1, len(points) + 1):
        if label in base:
            continue
        p = points[label - 1]
        if not (collinear(b1, b2, p) or collinear(b1, b3, p) or collinear(b2, b3, p)):
            return label
    raise DegenerateFourthPoint(f"No point is in general position with base {sorted(base)}")


def based_cremona(points: Sequence[Point2], base: Iterable[int]) -> Tuple[Point2, ...]:
    """
    Quadratic Cremona transform based at three labeled points

    Base points map to themselves; a non-base point on the line through two
    base points maps to the third; every other point maps by g^-1 psi g, where
    g sends the sorted base points and the fourth frame point to the standard
    frame.

    Args:
        points: Six labeled points; coincidences are allowed
        base: Three distinct labels

    Returns:
        The six image points

    Raises:
        CollinearBase: base points coincide or are collinear
        DegenerateFourthPoint: no admissible fourth frame point
        IndeterminatePoint: a non-base point coincides with a base point
    """
    base = tuple(sorted(set(base)))
    if len(base) != 3:
        raise ValueError(f"A Cremona base is three distinct labels, got {base}")
    F = common_field(p.field for p in points)
    points = [p.lift(F) for p in points]
    b1, b2, b3 = (points[i - 1] for i in base)
    if collinear(b1, b2, b3):
        raise CollinearBase(f"Base points {base} are collinear")
    fourth = fourth_frame_label(points, base)
    g = map_from_frames((b1, b2, b3, points[fourth - 1]), standard_frame(F))
    g_inv = g.inverse()
    logger.debug(f"Cremona at {base} with fourth frame point m{fourth}")
    vertices = standard_frame(F)[:3]

    images: List[Point2] = []
    for label, p in enumerate(points, start=1):
        if label in base:
            images.append(p)
            continue
        q = g.apply(p)
        zeros = [i for i, c in enumerate(q.coords) if c.is_zero()]
        if len(zeros) >= 2:
            raise IndeterminatePoint(f"m{label} coincides with a base point")
        if len(zeros) == 1:
            images.append(g_inv.apply(vertices[zeros[0]]))
            continue
        images.append(g_inv.apply(std_cremona_eval(q)))
    return tuple(images)
