"""Two-sided extension: exact points of the binary solenoid.

A BiSeq is a bi-infinite binary sequence ... x_{-2} x_{-1} . x_0 x_1 ...
with both tails eventually periodic, stored as a pair of one-sided
EpSeq halves.  These form the rational skeleton of the solenoid: dense,
closed under every map below, and exact, so identities can be tested as
structural equalities.

Maps: translation by one (t_hat), the invertible two-sided shift
(s_hat, k=1 is multiplication by 2), two-sided differentiation (d_hat),
the extended successor (m_hat) and its inverse, the conjugate families
t_family / m_family, and translation by any dyadic rational
(q2_translate), which together realize an action of the group of
dyadic rationals.

m_hat moves the right half one successor step and flips the left half
exactly when the step changes digit 0's parity, i.e. when
step_parity(right) is 1.  That choice is forced: it is the only
extension commuting with d_hat in the sense t_hat(d_hat(x)) ==
d_hat(m_hat(x)) while restricting to the one-sided successor on points
with zero left half.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from . import dyadic
from .dyadic import (
    DyadicRational,
    EpSeq,
    add_integer,
    add_one,
    differentiate,
    shift_drop,
)
from .adic import morse_predecessor, morse_successor, step_parity

_LITERAL = re.compile(r"^\(([01]+)\)([01]*)\.([01]*\([01]+\))$")


def _prepend(bit: int, x: EpSeq) -> EpSeq:
    return EpSeq((bit,) + x.preperiod, x.period)


@dataclass(frozen=True, slots=True)
class BiSeq:
    """Exact two-sided binary sequence.

    right holds digits x_0, x_1, ...; left holds the other tail with
    left.digit(j) = x_{-1-j}, so left reads outward from the binary
    point.  Literal form "(p)abc.xyz(q)": the part before the dot is
    the left half written right to left (abc are x_{-3} x_{-2} x_{-1},
    p the left period), the part after is an ordinary right literal.
    """

    left: EpSeq = dyadic.ZERO
    right: EpSeq = dyadic.ZERO

    @classmethod
    def parse(cls, text: str) -> "BiSeq":
        m = _LITERAL.match(text)
        if not m:
            raise ValueError(f"not a two-sided literal: {text!r}")
        per = tuple(int(c) for c in reversed(m.group(1)))
        pre = tuple(int(c) for c in reversed(m.group(2)))
        return cls(EpSeq(pre, per), EpSeq.parse(m.group(3)))

    def digit(self, n: int) -> int:
        if n >= 0:
            return self.right.digit(n)
        return self.left.digit(-n - 1)

    def flip(self) -> "BiSeq":
        return BiSeq(self.left.flip(), self.right.flip())

    def __str__(self) -> str:
        per = "".join(str(b) for b in reversed(self.left.period))
        pre = "".join(str(b) for b in reversed(self.left.preperiod))
        return f"({per}){pre}.{self.right}"


@dataclass(frozen=True, slots=True)
class SolenoidCoord:
    """Coordinate chart (y, lam): the right half as a 2-adic point and
    the left half read as a binary fraction lam = sum x_{-n} 2^{-n},
    reduced mod 1."""

    y: EpSeq
    lam: Fraction

    def __str__(self) -> str:
        return f"(y={self.y}, lam={self.lam})"


def pi(x: BiSeq) -> SolenoidCoord:
    """Project to (y, lam) coordinates.  Collapses the countably many
    double binary expansions (an all-ones left gives lam = 1 = 0)."""
    pre, per = x.left.preperiod, x.left.period
    m, k = len(pre), len(per)
    head = 0
    for b in pre:
        head = head * 2 + b
    tail = 0
    for b in per:
        tail = tail * 2 + b
    lam = Fraction(head * ((1 << k) - 1) + tail, (1 << m) * ((1 << k) - 1))
    return SolenoidCoord(x.right, lam % 1)


def t_hat(x: BiSeq) -> BiSeq:
    """Add one: odometer on the right half, left half untouched."""
    return BiSeq(x.left, add_one(x.right))


def _shift_up(x: BiSeq) -> BiSeq:
    # multiply by 2: every digit moves one place toward +infinity
    return BiSeq(shift_drop(x.left), _prepend(x.left.digit(0), x.right))


def _shift_down(x: BiSeq) -> BiSeq:
    return BiSeq(_prepend(x.right.digit(0), x.left), shift_drop(x.right))


def s_hat(x: BiSeq, k: int = 1) -> BiSeq:
    """k-fold two-sided shift: digit(result, n) = digit(x, n - k).
    k = 1 multiplies the point by 2 (lam doubles mod 1, y gains the
    carried digit); unlike the one-sided shift this is invertible."""
    for _ in range(k):
        x = _shift_up(x)
    for _ in range(-k):
        x = _shift_down(x)
    return x


def d_hat(x: BiSeq) -> BiSeq:
    """Two-sided differentiation: digit n of the result is
    digit(x, n) xor digit(x, n+1) for every n, so d_hat(flip(x)) ==
    d_hat(x) and the right half is differentiate(right)."""
    pre, per = x.left.preperiod, x.left.period
    m, k = len(pre), len(per)
    digits = [x.digit(-1 - j) ^ x.digit(-j) for j in range(m + k + 1)]
    left = EpSeq(tuple(digits[: m + 1]), tuple(digits[m + 1 :]))
    return BiSeq(left, differentiate(x.right))


def m_hat(x: BiSeq, extend_at_max: bool = False) -> BiSeq:
    """Extended successor: right steps to its successor, left flips iff
    the step flips digit 0's parity (step_parity(right) == 1).

    Unique extension satisfying t_hat(d_hat(x)) == d_hat(m_hat(x)) and
    restricting to morse_successor on zero-left points.  Raises MaxPoint
    when the right half is alternating, unless extend_at_max.
    """
    par = step_parity(x.right)
    right = morse_successor(x.right, extend_at_max=extend_at_max)
    return BiSeq(x.left.flip() if par else x.left, right)


def m_hat_inv(x: BiSeq, extend_at_min: bool = False) -> BiSeq:
    """Inverse of m_hat: right steps back, left unflips by the parity
    of the new right.  Raises MinPoint when the right half is constant,
    unless extend_at_min."""
    right = morse_predecessor(x.right, extend_at_min=extend_at_min)
    par = step_parity(right)
    return BiSeq(x.left.flip() if par else x.left, right)


def t_family(i: int, x: BiSeq) -> BiSeq:
    """Conjugate translation s_hat(i) . t_hat . s_hat(-i): adds 2^i,
    so t_family(i) applied twice equals t_family(i+1)."""
    return s_hat(t_hat(s_hat(x, -i)), i)


def m_family(i: int, x: BiSeq, extend_at_max: bool = False) -> BiSeq:
    """Conjugate successor s_hat(i) . m_hat . s_hat(-i); applied twice
    it equals m_family(i+1).  MaxPoint propagates from the conjugated
    point."""
    return s_hat(m_hat(s_hat(x, -i), extend_at_max=extend_at_max), i)


def q2_translate(q: DyadicRational, x: BiSeq) -> BiSeq:
    """Translate by the dyadic rational q = num / 2^exp: shift up so q
    becomes an integer, add it with full carries, shift back.  Additive
    in q; q = 1 is t_hat."""
    y = s_hat(x, q.exp)
    y = BiSeq(y.left, add_integer(y.right, q.num))
    return s_hat(y, -q.exp)
