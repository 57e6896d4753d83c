"""
Plane Moduli
Equality of labeled six-point configurations modulo PGL_3
"""

import itertools
from typing import Sequence, Tuple

from src.geometry import (
    Point2,
    collinear,
    common_field,
    map_from_frames,
    standard_frame,
)
from src.utils.exceptions import NoFrame


def first_frame(points: Sequence[Point2]) -> Tuple[int, int, int, int]:
    """Lexicographically first four labels in general position"""
    for labels in itertools.combinations(range(1, len(points) + 1), 4):
        quad = [points[i - 1] for i in labels]
        if not any(collinear(*triple) for triple in itertools.combinations(quad, 3)):
            return labels
    raise NoFrame("No four points of the configuration are in general position")


def plane_normal_form(points: Sequence[Point2]) -> Tuple[Tuple[int, ...], Tuple[Point2, ...]]:
    """
    Frame labels and the configuration moved so that frame is standard

    Two configurations are projectively equivalent label by label exactly
    when their normal forms agree.
    """
    frame = first_frame(points)
    F = points[0].field
    g = map_from_frames([points[i - 1] for i in frame], standard_frame(F))
    return frame, tuple(g.apply(p) for p in points)


def normal_form_key(points: Sequence[Point2]) -> bytes:
    frame, moved = plane_normal_form(points)
    return ",".join(map(str, frame)).encode() + b"|" + b";".join(p.key() for p in moved)


def moduli_equal_plane(a: Sequence[Point2], b: Sequence[Point2]) -> bool:
    """
    Whether some projectivity sends a to b label by label

    Raises:
        NoFrame: a or b has no four points in general position
    """
    a, b = tuple(a), tuple(b)
    F = common_field(p.field for p in a + b)
    a = tuple(p.lift(F) for p in a)
    b = tuple(p.lift(F) for p in b)
    frame_a = first_frame(a)
    frame_b = first_frame(b)
    if frame_a != frame_b:
        return False
    g = map_from_frames([a[i - 1] for i in frame_a], [b[i - 1] for i in frame_a])
    return all(g.apply(p) == q for p, q in zip(a, b))
