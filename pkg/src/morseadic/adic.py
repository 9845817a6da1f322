"""The adic successor on 2-adic sequences and its skew-product form.

The partial order compares two cofinal sequences at their last point of
disagreement; which digit wins there is decided by the next digit they
share (0 before 1 under a shared 0, 1 before 0 under a shared 1).  The
successor map replaces everything below the first adjacent equal pair
"aa" with the opposite digit, keeping the pair's second digit and the
rest.  Iterating it from 0 walks the nonnegative integers in the order
0, 1, 3, 2, 7, 6, 4, 5, 15, ...

The same map is a skew product over the odometer: differentiate the
sequence, add one to the result, and re-integrate, with the starting
digit driven by the cocycle `phi` of the base point.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import lcm

from .dyadic import (
    ALT_01,
    ALT_10,
    EpSeq,
    MINUS_ONE,
    ZERO,
    _split,
    add_one,
    differentiate,
    first_pair_index,
    integrate,
    subtract_one,
)
from .errors import BoundExceeded, MaxPoint, MinPoint


class Ordering(enum.Enum):
    LESS = "<"
    EQUAL = "="
    GREATER = ">"
    INCOMPARABLE = "incomparable"


def compare(x: EpSeq, y: EpSeq) -> Ordering:
    """Four-valued comparison; sequences that are not cofinal are
    incomparable rather than an error."""
    if x == y:
        return Ordering.EQUAL
    if not x.is_cofinal(y):
        return Ordering.INCOMPARABLE
    top = max(len(x.preperiod), len(y.preperiod)) + lcm(
        len(x.period), len(y.period)
    )
    j = next(i for i in range(top - 1, -1, -1) if x.digit(i) != y.digit(i))
    shared = x.digit(j + 1)
    # under a shared 0 the digit 0 comes first, under a shared 1 the digit 1
    less = x.digit(j) == shared
    return Ordering.LESS if less else Ordering.GREATER


def morse_successor(x: EpSeq, extend_at_max: bool = False) -> EpSeq:
    """Immediate successor in the adic order.

    Scan to the first adjacent equal pair aa (ending at index k), replace
    all digits below k with the complement of a, keep the rest.  The two
    alternating points have no pair; with the extension flag they map to
    the constant sequences ((01)... to all ones, (10)... to all zeros),
    otherwise MaxPoint is raised.
    """
    if x.is_max():
        if extend_at_max:
            return MINUS_ONE if x == ALT_01 else ZERO
        raise MaxPoint(f"{x} has no successor")
    k = first_pair_index(x)
    a = x.digit(k)
    _, tpre, tper = _split(x, k)
    return EpSeq(tuple([1 - a] * k) + tpre, tper)


def morse_predecessor(y: EpSeq, extend_at_min: bool = False) -> EpSeq:
    """Inverse of morse_successor.

    An image starts with a constant run (the complement block), so read
    the run length k and rebuild the alternating prefix that ends in the
    pair at (k-1, k).  The constant sequences have no predecessor; with
    the flag they unwind the extension (all zeros to (10)..., all ones to
    (01)...).
    """
    if y.is_min():
        if extend_at_min:
            return ALT_10 if y == ZERO else ALT_01
        raise MinPoint(f"{y} has no predecessor")
    c = y.digit(0)
    m, kper = len(y.preperiod), len(y.period)
    k = next(i for i in range(1, m + kper + 1) if y.digit(i) != c)
    a = y.digit(k)
    head = [a if (k - 1 - i) % 2 == 0 else 1 - a for i in range(k)]
    _, tpre, tper = _split(y, k)
    return EpSeq(tuple(head) + tpre, tper)


def phi(y: EpSeq) -> int:
    """Cocycle of the skew representation: 0 when y starts with an odd
    number of 1s, 1 when even (including none).  Both constant sequences
    take the value 1."""
    m, k = len(y.preperiod), len(y.period)
    run = next((i for i in range(m + k) if y.digit(i) == 0), None)
    if run is None:
        return 1
    return 1 if run % 2 == 0 else 0


def step_parity(x: EpSeq) -> int:
    """Parity of the step the successor takes at x, i.e. phi evaluated at
    the differentiated point.  Equals (morse_successor(x) - x) mod 2, and
    drives the left half of the two-sided extension."""
    return phi(differentiate(x))


@dataclass(frozen=True, slots=True)
class SkewPoint:
    """A point of the skew product: base sequence plus a fiber digit."""

    base: EpSeq
    fiber: int


def f_map(x: EpSeq) -> SkewPoint:
    """Conjugacy onto the skew product: (differentiated sequence, digit 0)."""
    return SkewPoint(differentiate(x), x.digit(0))


def f_inv(p: SkewPoint) -> EpSeq:
    """Inverse of f_map: integrate the base starting from the fiber digit."""
    return integrate(p.base, p.fiber)


def skew_step(p: SkewPoint) -> SkewPoint:
    """Odometer on the base, fiber shifted by the cocycle at the base.
    Conjugated through f_map this is exactly morse_successor."""
    return SkewPoint(add_one(p.base), p.fiber ^ phi(p.base))


def skew_unstep(p: SkewPoint) -> SkewPoint:
    """Inverse of skew_step."""
    base = subtract_one(p.base)
    return SkewPoint(base, p.fiber ^ phi(base))


class OrbitClass(enum.Enum):
    GENERIC = "Generic"
    POS_SEMIORBIT_ZEROS = "PosSemiorbitOfZeros"
    POS_SEMIORBIT_ONES = "PosSemiorbitOfOnes"
    NEG_SEMIORBIT_10 = "NegSemiorbitOf10"
    NEG_SEMIORBIT_01 = "NegSemiorbitOf01"


def _cyclic_pairs(per):
    k = len(per)
    has00 = any(per[i] == 0 and per[(i + 1) % k] == 0 for i in range(k))
    has11 = any(per[i] == 1 and per[(i + 1) % k] == 1 for i in range(k))
    return has00, has11


def classify_orbit(x: EpSeq, bound: int | None = None) -> OrbitClass:
    """Locate x's orbit: generic (infinitely many 00 and 11 pairs, orbit =
    cofinality class) or one of the four exceptional semiorbits.

    Exceptional points are resolved by iterating the predecessor (toward a
    constant sequence) and the successor (toward an alternating one) in
    lockstep, at most `bound` steps each; the default budget is
    4 * (preperiod + period length) + 8.  If neither direction resolves,
    BoundExceeded is raised rather than guessing.
    """
    has00, has11 = _cyclic_pairs(x.period)
    if has00 and has11:
        return OrbitClass.GENERIC
    if bound is None:
        bound = 4 * (len(x.preperiod) + len(x.period)) + 8
    back = fwd = x
    back_live = True
    for _ in range(bound + 1):
        if back_live:
            if back.is_min():
                return (
                    OrbitClass.POS_SEMIORBIT_ZEROS
                    if back == ZERO
                    else OrbitClass.POS_SEMIORBIT_ONES
                )
            if back.is_max():
                back_live = False  # predecessors stay alternating forever
            else:
                back = morse_predecessor(back)
        if fwd.is_max():
            return (
                OrbitClass.NEG_SEMIORBIT_10
                if fwd == ALT_10
                else OrbitClass.NEG_SEMIORBIT_01
            )
        fwd = morse_successor(fwd)
    raise BoundExceeded(f"{x} not resolved within {bound} steps")


# -- cylinder (prefix) action -----------------------------------------
#
# A length-m prefix w pins the cylinder of all sequences starting with w.
# When w already shows an adjacent equal pair, the successor acts on the
# whole cylinder at once; these helpers compute that action on prefixes
# packed into ints (bit i = digit i).


def successor_prefix(bits: int, m: int) -> int | None:
    """Prefix image under the successor, or None when the prefix has no
    adjacent equal pair (the cylinder does not map to one cylinder)."""
    prev = bits & 1
    for k in range(1, m):
        cur = (bits >> k) & 1
        if cur == prev:
            mask = (1 << k) - 1
            if cur == 0:
                return (bits & ~mask) | mask
            return bits & ~mask
        prev = cur
    return None


def phi_prefix(bits: int, m: int) -> int | None:
    """Value of phi on the cylinder, or None when the prefix is all ones
    (the leading run may continue past the window)."""
    for i in range(m):
        if ((bits >> i) & 1) == 0:
            return 1 if i % 2 == 0 else 0
    return None
