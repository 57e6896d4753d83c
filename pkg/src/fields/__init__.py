"""
Init file for fields module
"""

from .descriptor import FieldDescriptor, FieldKind, canonical_non_residue, is_prime, squarefree_decompose
from .scalar import (
    Scalar,
    arith,
    canonical_key,
    conjugate,
    element,
    norm,
    one,
    sqrt,
    zero,
)

__all__ = [
    'FieldDescriptor',
    'FieldKind',
    'canonical_non_residue',
    'is_prime',
    'squarefree_decompose',
    'Scalar',
    'arith',
    'canonical_key',
    'conjugate',
    'element',
    'norm',
    'one',
    'sqrt',
    'zero',
]
