"""
Init file for src module
"""

__version__ = "1.0.0"

from .fields import FieldDescriptor, Scalar
from .geometry import Conic, Map2, Map3, PlaneConfig, Point1, Point2
from .cremona import CremonaWord, SwapSet, TernaryForm, based_cremona, swap_word
from .moduli import P1Config, SymmetryGroup, WeightVector, descendants, moduli_equal
from .bridge import P1Output, classify, collinear_to_conic, fiber_orbit, lift, phi67, phi67_on_conic
from .serialization import ConfigFile, parse_config, serialize_config
from .verification import Report, TrialPlan, boundary_divisors, run_suite
from .utils import LoggerManager, ConfigLoader, get_logger, get_config_loader

__all__ = [
    '__version__',
    'FieldDescriptor',
    'Scalar',
    'Conic',
    'Map2',
    'Map3',
    'PlaneConfig',
    'Point1',
    'Point2',
    'CremonaWord',
    'SwapSet',
    'TernaryForm',
    'based_cremona',
    'swap_word',
    'P1Config',
    'SymmetryGroup',
    'WeightVector',
    'descendants',
    'moduli_equal',
    'P1Output',
    'classify',
    'collinear_to_conic',
    'fiber_orbit',
    'lift',
    'phi67',
    'phi67_on_conic',
    'ConfigFile',
    'parse_config',
    'serialize_config',
    'Report',
    'TrialPlan',
    'boundary_divisors',
    'run_suite',
    'LoggerManager',
    'ConfigLoader',
    'get_logger',
    'get_config_loader',
]
