"""
Init file for moduli module
"""

from .weights import P1Config, Stability, Stratum, SymmetryGroup, WeightVector
from .strata import (
    ball_dimension,
    classify_weight,
    collision_poset,
    collision_stratum,
    descendants,
    stability,
    stable_strata,
)
from .equivalence import first_distinct_triple, fingerprint, moduli_equal, moduli_witness

__all__ = [
    'P1Config',
    'Stability',
    'Stratum',
    'SymmetryGroup',
    'WeightVector',
    'ball_dimension',
    'classify_weight',
    'collision_poset',
    'collision_stratum',
    'descendants',
    'stability',
    'stable_strata',
    'first_distinct_triple',
    'fingerprint',
    'moduli_equal',
    'moduli_witness',
]
