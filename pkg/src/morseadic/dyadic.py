"""Exact arithmetic on eventually periodic binary digit sequences.

A one-sided sequence x = x0 x1 x2 ... over {0,1} is stored as a finite
preperiod plus a repeating period, index 0 being the least significant
digit.  Under x -> sum(x_i * 2^i) these are exactly the 2-adic expansions
of rationals p/q with odd q; integers are the sequences with period (0)
or (1).

Canonical form: the period is primitive, and the preperiod is as short as
possible (its last digit never equals the last period digit, which would
let it fold into a rotated period).  Two values denote the same sequence
iff their canonical forms are identical, so ``==`` decides sequence
equality and every identity in this package can be tested exactly.

Text literals spell the preperiod and then the period in parentheses:
"01(10)" is 0,1,1,0,1,0,... (the expansion of 2/3), "(1)" is -1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import AlternatingPoint

_LITERAL = re.compile(r"^([01]*)\(([01]+)\)$")


def _primitive(per: tuple) -> tuple:
    k = len(per)
    for d in range(1, k):
        if k % d == 0 and per[:d] * (k // d) == per:
            return per[:d]
    return per


def _canonical(pre, per):
    per = _primitive(tuple(per))
    pre = list(pre)
    # Fold a preperiod digit that matches the period's last digit into a
    # right-rotation of the period; repeats until the form is unique.
    while pre and pre[-1] == per[-1]:
        pre.pop()
        per = per[-1:] + per[:-1]
    return tuple(pre), per


@dataclass(frozen=True, slots=True)
class EpSeq:
    """An eventually periodic 0/1 sequence in canonical form."""

    preperiod: tuple = ()
    period: tuple = (0,)

    def __post_init__(self):
        if not self.period:
            raise ValueError("period must be nonempty")
        for b in self.preperiod:
            if b != 0 and b != 1:
                raise ValueError("digits must be 0 or 1")
        for b in self.period:
            if b != 0 and b != 1:
                raise ValueError("digits must be 0 or 1")
        pre, per = _canonical(self.preperiod, self.period)
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "period", per)

    # -- constructors -------------------------------------------------

    @classmethod
    def from_integer(cls, n: int) -> "EpSeq":
        if n >= 0:
            bits = []
            while n:
                bits.append(n & 1)
                n >>= 1
            return cls(tuple(bits), (0,))
        m = -n - 1  # two's complement: digits are the flip of m's digits
        bits = []
        while m:
            bits.append(1 - (m & 1))
            m >>= 1
        return cls(tuple(bits), (1,))

    @classmethod
    def from_rational(cls, p: int, q: int) -> "EpSeq":
        """Expansion of p/q for odd q.  Digits come from repeatedly
        peeling the low bit: x0 = p mod 2, then p <- (p - x0*q) / 2.
        The numerator state eventually cycles, giving the period."""
        if q == 0 or q % 2 == 0:
            raise ValueError("denominator must be odd")
        if q < 0:
            p, q = -p, -q
        seen = {}
        digits = []
        n = p
        while n not in seen:
            seen[n] = len(digits)
            bit = n & 1
            digits.append(bit)
            n = (n - bit * q) >> 1
        cut = seen[n]
        return cls(tuple(digits[:cut]), tuple(digits[cut:]))

    @classmethod
    def parse(cls, text: str) -> "EpSeq":
        m = _LITERAL.match(text)
        if not m:
            raise ValueError(f"not a sequence literal: {text!r}")
        pre = tuple(int(c) for c in m.group(1))
        per = tuple(int(c) for c in m.group(2))
        return cls(pre, per)

    # -- accessors ----------------------------------------------------

    def digit(self, i: int) -> int:
        if i < 0:
            raise IndexError("digit index must be nonnegative")
        pre = self.preperiod
        if i < len(pre):
            return pre[i]
        per = self.period
        return per[(i - len(pre)) % len(per)]

    def to_rational(self) -> Fraction:
        """Exact value sum(x_i 2^i) as a Fraction with odd denominator."""
        m, k = len(self.preperiod), len(self.period)
        head = 0
        for b in reversed(self.preperiod):
            head = (head << 1) | b
        tail = 0
        for b in reversed(self.period):
            tail = (tail << 1) | b
        # geometric tail: 2^m * tail / (1 - 2^k), cleared to a positive odd
        # denominator 2^k - 1
        return Fraction(head * ((1 << k) - 1) - (tail << m), (1 << k) - 1)

    def flip(self) -> "EpSeq":
        """Complement every digit; the value becomes -x - 1."""
        return EpSeq(
            tuple(1 - b for b in self.preperiod),
            tuple(1 - b for b in self.period),
        )

    def is_min(self) -> bool:
        """True for the two constant sequences (no predecessor)."""
        return not self.preperiod and self.period in ((0,), (1,))

    def is_max(self) -> bool:
        """True for the two alternating sequences (no successor)."""
        return not self.preperiod and self.period in ((0, 1), (1, 0))

    def is_eventually_constant(self) -> bool:
        return self.period in ((0,), (1,))

    def is_eventually_alternating(self) -> bool:
        return self.period in ((0, 1), (1, 0))

    def is_cofinal(self, other: "EpSeq") -> bool:
        """True when the two sequences differ in only finitely many digits."""
        start = max(len(self.preperiod), len(other.preperiod))
        span = lcm(len(self.period), len(other.period))
        return all(
            self.digit(i) == other.digit(i) for i in range(start, start + span)
        )

    def __str__(self) -> str:
        pre = "".join(str(b) for b in self.preperiod)
        per = "".join(str(b) for b in self.period)
        return f"{pre}({per})"


ZERO = EpSeq((), (0,))
MINUS_ONE = EpSeq((), (1,))
ALT_01 = EpSeq((), (0, 1))  # value -2/3
ALT_10 = EpSeq((), (1, 0))  # value -1/3


def _split(x: EpSeq, n: int):
    """First n digits as a list, plus (preperiod, period) of the tail
    starting at index n."""
    pre, per = x.preperiod, x.period
    m, k = len(pre), len(per)
    if n <= m:
        return list(pre[:n]), pre[n:], per
    head = list(pre) + [per[i % k] for i in range(n - m)]
    j = (n - m) % k
    return head, (), per[j:] + per[:j]


def flip(x: EpSeq) -> EpSeq:
    return x.flip()


def add_one(x: EpSeq) -> EpSeq:
    """The odometer: flip the leading 1s and the first 0.  The all-ones
    sequence wraps to all zeros."""
    m, k = len(x.preperiod), len(x.period)
    for i in range(m + k):
        if x.digit(i) == 0:
            _, tpre, tper = _split(x, i + 1)
            return EpSeq(tuple([0] * i + [1]) + tpre, tper)
    return ZERO  # canonical all-ones is exactly "(1)"


def subtract_one(x: EpSeq) -> EpSeq:
    """Inverse of add_one; all zeros wraps to all ones."""
    m, k = len(x.preperiod), len(x.period)
    for i in range(m + k):
        if x.digit(i) == 1:
            _, tpre, tper = _split(x, i + 1)
            return EpSeq(tuple([1] * i + [0]) + tpre, tper)
    return MINUS_ONE


def add_integer(x: EpSeq, t: int) -> EpSeq:
    """Exact x + t by binary carry arithmetic.

    Python's arithmetic right shift gives the two's-complement digits of
    t, which are its 2-adic digits, so one carry loop covers both signs.
    Past the preperiod and t's significant bits, the state (period phase,
    carry) must repeat, which closes the period of the sum.
    """
    m, k = len(x.preperiod), len(x.period)
    start = max(m, abs(t).bit_length() + 1)
    digits = []
    carry = 0
    for i in range(start):
        s = x.digit(i) + ((t >> i) & 1) + carry
        digits.append(s & 1)
        carry = s >> 1
    tbit = 1 if t < 0 else 0
    seen = {}
    tail = []
    i = start
    while True:
        key = ((i - m) % k, carry)
        if key in seen:
            cut = seen[key]
            return EpSeq(tuple(digits) + tuple(tail[:cut]), tuple(tail[cut:]))
        seen[key] = len(tail)
        s = x.digit(i) + tbit + carry
        tail.append(s & 1)
        carry = s >> 1
        i += 1


def differentiate(x: EpSeq) -> EpSeq:
    """Adjacent-digit sum mod 2: digit i of the result is x_i xor x_{i+1}.

    Constant sequences map to all zeros, alternating ones to all ones,
    and a sequence and its flip have the same image.
    """
    m, k = len(x.preperiod), len(x.period)
    pre = tuple(x.digit(i) ^ x.digit(i + 1) for i in range(m))
    per = tuple(x.digit(m + i) ^ x.digit(m + i + 1) for i in range(k))
    return EpSeq(pre, per)


def integrate(y: EpSeq, x0: int) -> EpSeq:
    """Invert differentiate given the starting digit x0.

    x_{n+1} = x_n xor y_n, a running parity of y's prefix.  If the xor of
    y's period is 1 the result's period doubles (a second pass flips it).
    The two preimages of y are integrate(y, 0) and its flip.
    """
    if x0 not in (0, 1):
        raise ValueError("starting digit must be 0 or 1")
    m, k = len(y.preperiod), len(y.period)
    s = x0
    pre = []
    for i in range(m):
        pre.append(s)
        s ^= y.digit(i)
    span = k if sum(y.period) % 2 == 0 else 2 * k
    per = []
    for i in range(span):
        per.append(s)
        s ^= y.digit(m + i)
    return EpSeq(tuple(pre), tuple(per))


def shift_drop(x: EpSeq) -> EpSeq:
    """Drop digit 0, i.e. x -> (x - x_0) / 2.  Two-to-one."""
    if x.preperiod:
        return EpSeq(x.preperiod[1:], x.period)
    return EpSeq((), x.period[1:] + x.period[:1])


def double(x: EpSeq) -> EpSeq:
    """Prepend a zero digit, i.e. x -> 2x.  shift_drop(double(x)) == x."""
    return EpSeq((0,) + x.preperiod, x.period)


def first_pair_index(x: EpSeq) -> int:
    """Least k >= 1 with digit(k-1) == digit(k).

    Only the two purely alternating sequences have no such k; scanning one
    preperiod plus one full period (with wraparound) decides.
    """
    m, k = len(x.preperiod), len(x.period)
    prev = x.digit(0)
    for i in range(1, m + k + 1):
        cur = x.digit(i)
        if cur == prev:
            return i
        prev = cur
    raise AlternatingPoint(f"{x} has no adjacent equal digits")


@dataclass(frozen=True, slots=True)
class DyadicRational:
    """num / 2**exp in lowest terms (num odd unless exp == 0)."""

    num: int
    exp: int

    def __post_init__(self):
        if self.exp < 0:
            raise ValueError("exponent must be nonnegative")
        num, exp = self.num, self.exp
        while exp > 0 and num % 2 == 0:
            num //= 2
            exp -= 1
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "exp", exp)

    @classmethod
    def from_fraction(cls, f: Fraction) -> "DyadicRational":
        d = f.denominator
        e = d.bit_length() - 1
        if d != 1 << e:
            raise ValueError(f"{f} is not a dyadic rational")
        return cls(f.numerator, e)

    @classmethod
    def parse(cls, text: str) -> "DyadicRational":
        return cls.from_fraction(Fraction(text))

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, 1 << self.exp)

    def __add__(self, other: "DyadicRational") -> "DyadicRational":
        return DyadicRational.from_fraction(self.as_fraction() + other.as_fraction())

    def __str__(self) -> str:
        if self.exp == 0:
            return str(self.num)
        return f"{self.num}/{1 << self.exp}"
