"""Solver and analysis toolkit for generalized diagonal Wythoff Nim."""

from .games import (
    GameSpec,
    OutcomeGrid,
    followers,
    is_legal_move,
    nim_spec,
    solve_bruteforce,
    validate_spec,
    wythoff_extension,
    wythoff_spec,
)
from .sieve import PTable, compute_pi, derive_rows, derive_sequences, verify_involution
from .wythoff import beatty_a, beatty_b, classify_pair, zeckendorf, z_shift
from .words import find_split_witness, word_prefix
from .analysis import (
    check_wythoff_equivalence,
    detect_multi_split,
    detect_split,
    full_ratio_series,
    ratio_series,
    verify_closed_form,
)

__version__ = "0.1.0"

__all__ = [
    "GameSpec",
    "OutcomeGrid",
    "PTable",
    "beatty_a",
    "beatty_b",
    "check_wythoff_equivalence",
    "classify_pair",
    "compute_pi",
    "derive_rows",
    "derive_sequences",
    "detect_multi_split",
    "detect_split",
    "find_split_witness",
    "followers",
    "full_ratio_series",
    "is_legal_move",
    "nim_spec",
    "ratio_series",
    "solve_bruteforce",
    "validate_spec",
    "verify_closed_form",
    "verify_involution",
    "word_prefix",
    "wythoff_extension",
    "wythoff_spec",
    "zeckendorf",
    "z_shift",
]
