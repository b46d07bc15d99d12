"""Unique codings on fat Sierpinski gaskets: critical bases, univoque sets and their geometry."""

from .config import DEFAULT, Config
from .critical import beta_c, beta_G, beta_hat, beta_ladder, critical_table
from .errors import (BetaTooSmall, DepthExceeded, IsolationFailed, NotAdmissible,
                     NotIrreducible, PrecisionExhausted, Undecidable, UnivoqueError)
from .expansion import Beta, delta_inverse, quasi_greedy_one
from .interval import RealInterval
from .membership import check_membership, classify_regime, count_codings
from .symbolic import Digit, EPSequence, parse_sequence
from .tm import TMFamily

__all__ = [
    "DEFAULT", "Config", "beta_c", "beta_G", "beta_hat", "beta_ladder", "critical_table",
    "BetaTooSmall", "DepthExceeded", "IsolationFailed", "NotAdmissible", "NotIrreducible",
    "PrecisionExhausted", "Undecidable", "UnivoqueError", "Beta", "delta_inverse",
    "quasi_greedy_one", "RealInterval", "check_membership", "classify_regime", "count_codings",
    "Digit", "EPSequence", "parse_sequence", "TMFamily",
]

__version__ = "0.1.0"
