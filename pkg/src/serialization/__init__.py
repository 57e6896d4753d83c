"""
Init file for serialization module
"""

from .config_io import (
    ConfigFile,
    config_from_dict,
    decode_field,
    decode_points,
    decode_scalar,
    encode_field,
    encode_points,
    encode_scalar,
    field_choice_text,
    load_config,
    p1_config_file,
    parse_config,
    parse_field_choice,
    plane_config_file,
    serialize_config,
)

__all__ = [
    'ConfigFile',
    'config_from_dict',
    'decode_field',
    'decode_points',
    'decode_scalar',
    'encode_field',
    'encode_points',
    'encode_scalar',
    'field_choice_text',
    'load_config',
    'p1_config_file',
    'parse_config',
    'parse_field_choice',
    'plane_config_file',
    'serialize_config',
]
