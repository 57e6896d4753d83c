"""
Init file for verification module
"""

from .census import (
    DivisorClass,
    DivisorLabel,
    boundary_divisors,
    census_summary,
    detect_divisors,
    s5_permutations,
)
from .report import Report, TrialOutcome, TrialPlan
from .sampling import (
    random_collinear_config,
    random_degenerate_limit_witness,
    random_generic_config,
    random_on_conic_config,
    random_projectivity,
)
from .suites import SUITE_NAMES, SUITES, get_suite, run_suite, run_trial

__all__ = [
    'DivisorClass',
    'DivisorLabel',
    'boundary_divisors',
    'census_summary',
    'detect_divisors',
    's5_permutations',
    'Report',
    'TrialOutcome',
    'TrialPlan',
    'random_collinear_config',
    'random_degenerate_limit_witness',
    'random_generic_config',
    'random_on_conic_config',
    'random_projectivity',
    'SUITE_NAMES',
    'SUITES',
    'get_suite',
    'run_suite',
    'run_trial',
]
