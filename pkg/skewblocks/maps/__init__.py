"""
Maps that move one entry to turn a two-block avoider into a one-block
avoider, and the exhaustive harnesses that check them.
"""

from .models import Counterexample, MapReport
from .moves import f_move_max, g_move_rightmost_big, h_move_last_left_of_rightmost_block
from .harness import OUTSIDE_HYPOTHESES, verify_left_inverse, verify_lemma_132, verify_lemma_good

__all__ = [
    "Counterexample",
    "MapReport",
    "f_move_max",
    "g_move_rightmost_big",
    "h_move_last_left_of_rightmost_block",
    "OUTSIDE_HYPOTHESES",
    "verify_left_inverse",
    "verify_lemma_132",
    "verify_lemma_good",
]
