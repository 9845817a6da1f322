"""Exact arithmetic for the adic successor on binary sequences.

The package represents 2-adic integers as eventually periodic digit
sequences and implements, with no approximation anywhere: the odometer,
the partial order whose successor map realizes the Morse system, the
integer bit rule n -> n +/- a_r equivalent to that successor, the
skew-product presentation over the odometer, the doubling substitution
with orbit codings, and the two-sided extension acting on exact
solenoid points together with its dyadic-rational translation action.
"""

from .errors import (
    AlternatingPoint,
    AmbiguousWindow,
    BoundExceeded,
    DomainError,
    MaxPoint,
    MinPoint,
)
from .dyadic import (
    ALT_01,
    ALT_10,
    MINUS_ONE,
    ZERO,
    DyadicRational,
    EpSeq,
    add_integer,
    add_one,
    differentiate,
    double,
    first_pair_index,
    flip,
    integrate,
    shift_drop,
    subtract_one,
)
from .adic import (
    Ordering,
    OrbitClass,
    SkewPoint,
    classify_orbit,
    compare,
    f_inv,
    f_map,
    morse_predecessor,
    morse_successor,
    phi,
    phi_prefix,
    skew_step,
    skew_unstep,
    step_parity,
    successor_prefix,
)
from .arith import (
    CaseTag,
    a_of,
    classify,
    morse_int,
    theta,
    theta_level_counts,
    time_change_check,
)
from .substitution import (
    DIFF_RULES,
    ZETA,
    CodingWindow,
    apply_morphism,
    coding,
    desubstitute,
    is_factor,
    substitution_fixed_point,
    thue_morse_digit,
    thue_morse_prefix,
    word_diff,
    word_flip,
    zeta,
)
from .solenoid import (
    BiSeq,
    SolenoidCoord,
    d_hat,
    m_family,
    m_hat,
    m_hat_inv,
    pi,
    q2_translate,
    s_hat,
    t_family,
    t_hat,
)

__version__ = "0.1.0"

__all__ = [
    "ALT_01",
    "ALT_10",
    "AlternatingPoint",
    "AmbiguousWindow",
    "BiSeq",
    "BoundExceeded",
    "CaseTag",
    "CodingWindow",
    "DIFF_RULES",
    "DomainError",
    "DyadicRational",
    "EpSeq",
    "MINUS_ONE",
    "MaxPoint",
    "MinPoint",
    "Ordering",
    "OrbitClass",
    "SkewPoint",
    "SolenoidCoord",
    "ZERO",
    "ZETA",
    "a_of",
    "add_integer",
    "add_one",
    "apply_morphism",
    "classify",
    "classify_orbit",
    "coding",
    "compare",
    "d_hat",
    "desubstitute",
    "differentiate",
    "double",
    "f_inv",
    "f_map",
    "first_pair_index",
    "flip",
    "integrate",
    "is_factor",
    "m_family",
    "m_hat",
    "m_hat_inv",
    "morse_int",
    "morse_predecessor",
    "morse_successor",
    "phi",
    "phi_prefix",
    "pi",
    "q2_translate",
    "s_hat",
    "shift_drop",
    "skew_step",
    "skew_unstep",
    "step_parity",
    "substitution_fixed_point",
    "subtract_one",
    "successor_prefix",
    "t_family",
    "t_hat",
    "theta",
    "theta_level_counts",
    "thue_morse_digit",
    "thue_morse_prefix",
    "time_change_check",
    "word_diff",
    "word_flip",
    "zeta",
]
