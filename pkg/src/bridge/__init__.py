"""
Init file for bridge module
"""

from .classification import StratumClass, StratumKind, classify, collinear_triples
from .planar import first_frame, moduli_equal_plane, normal_form_key, plane_normal_form
from .phi import (
    OUTPUT_STRATA,
    P1Output,
    as_p1_config,
    conic_through_six,
    fiber_orbit,
    lift,
    output_stratum,
    phi67,
    phi67_on_conic,
    project_six_on_conic,
)
from .identification import collinear_to_conic, cremona_base_for, degenerate_limit_check_I

__all__ = [
    'StratumClass',
    'StratumKind',
    'classify',
    'collinear_triples',
    'first_frame',
    'moduli_equal_plane',
    'normal_form_key',
    'plane_normal_form',
    'OUTPUT_STRATA',
    'P1Output',
    'as_p1_config',
    'conic_through_six',
    'fiber_orbit',
    'lift',
    'output_stratum',
    'phi67',
    'phi67_on_conic',
    'project_six_on_conic',
    'collinear_to_conic',
    'cremona_base_for',
    'degenerate_limit_check_I',
]
