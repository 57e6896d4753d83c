"""
Init file for utils module
"""

from .logger import LoggerManager, get_logger
from .config_loader import ConfigLoader, get_config_loader
from .helpers import JsonProcessor, WeightText, SplitMix64, mix_seed

__all__ = [
    'LoggerManager',
    'get_logger',
    'ConfigLoader',
    'get_config_loader',
    'JsonProcessor',
    'WeightText',
    'SplitMix64',
    'mix_seed',
]
