"""
Init file for cremona module
"""

from .forms import TernaryForm
from .transforms import (
    based_cremona,
    fourth_frame_label,
    std_cremona_eval,
    std_cremona_form_image,
)
from .words import (
    GENERATOR_PAIRS,
    BasedCremona,
    CremonaToken,
    CremonaWord,
    Projectivity,
    Relabel,
    SwapSet,
    apply_word,
    generator_matrix,
    generator_swap_set,
    generator_word,
    geometric_swap,
    parse_token,
    rank_mod2,
    swap_word,
)

__all__ = [
    'TernaryForm',
    'based_cremona',
    'fourth_frame_label',
    'std_cremona_eval',
    'std_cremona_form_image',
    'GENERATOR_PAIRS',
    'BasedCremona',
    'CremonaToken',
    'CremonaWord',
    'Projectivity',
    'Relabel',
    'SwapSet',
    'apply_word',
    'generator_matrix',
    'generator_swap_set',
    'generator_word',
    'geometric_swap',
    'parse_token',
    'rank_mod2',
    'swap_word',
]
