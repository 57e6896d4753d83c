"""
Init file for geometry module
"""

from .objects import (
    INFINITY,
    Conic,
    Infinity,
    Line,
    Map2,
    Map3,
    Point1,
    Point2,
    common_field,
)
from .constructions import (
    collinear,
    conic_through_five,
    cross_ratio,
    evaluate_conic,
    join,
    map2_from_triples,
    map_from_frames,
    meet,
    pencil_line,
    polar_line,
    project_from,
    second_intersection,
    standard_frame,
    tangent_line_at,
    tangent_points,
    veronese_normalize,
)
from .configuration import LABELS, PlaneConfig, permutation_map, permute_labels

__all__ = [
    'INFINITY',
    'Conic',
    'Infinity',
    'Line',
    'Map2',
    'Map3',
    'Point1',
    'Point2',
    'common_field',
    'collinear',
    'conic_through_five',
    'cross_ratio',
    'evaluate_conic',
    'join',
    'map2_from_triples',
    'map_from_frames',
    'meet',
    'pencil_line',
    'polar_line',
    'project_from',
    'second_intersection',
    'standard_frame',
    'tangent_line_at',
    'tangent_points',
    'veronese_normalize',
    'LABELS',
    'PlaneConfig',
    'permutation_map',
    'permute_labels',
]
