"""Exact dyadic rationals p / 2**e.

Every game number and every edit cost in this package is a dyadic
rational, so all distance arithmetic stays exact: no floats anywhere in
the core.  Values are kept in lowest terms (odd numerator unless the
exponent is zero).
"""

from __future__ import annotations

import re
from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class Dyadic:
    """p / 2**e in lowest terms; e == 0 iff the value is an integer."""

    num: int
    exp: int = 0

    def __post_init__(self):
        num, exp = self.num, self.exp
        if exp < 0:
            num <<= -exp
            exp = 0
        while exp > 0 and num % 2 == 0:
            num //= 2
            exp -= 1
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "exp", exp)

    # -- constructors ------------------------------------------------

    @staticmethod
    def pow2(k: int) -> "Dyadic":
        """2**k for any integer k."""
        if k >= 0:
            return Dyadic(1 << k)
        return Dyadic(1, -k)

    @staticmethod
    def parse(text: str) -> "Dyadic":
        m = re.fullmatch(r"\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?", text)
        if not m:
            raise ValueError(f"not a dyadic rational: {text!r}")
        num = int(m.group(1))
        if m.group(2) is None:
            return Dyadic(num)
        den = int(m.group(2))
        if den <= 0 or den & (den - 1):
            raise ValueError(f"denominator must be a power of 2: {text!r}")
        return Dyadic(num, den.bit_length() - 1)

    # -- queries -----------------------------------------------------

    @property
    def den(self) -> int:
        return 1 << self.exp

    def is_integer(self) -> bool:
        return self.exp == 0

    def floor(self) -> int:
        return self.num >> self.exp

    def ceil(self) -> int:
        return -((-self.num) >> self.exp)

    def __float__(self) -> float:
        return self.num / (1 << self.exp)

    def __bool__(self) -> bool:
        return self.num != 0

    def __str__(self) -> str:
        if self.exp == 0:
            return str(self.num)
        return f"{self.num}/{1 << self.exp}"

    def __repr__(self) -> str:
        return f"Dyadic({self.num}, {self.exp})"

    # -- arithmetic --------------------------------------------------

    def __neg__(self) -> "Dyadic":
        return Dyadic(-self.num, self.exp)

    def __abs__(self) -> "Dyadic":
        return Dyadic(abs(self.num), self.exp)

    def _pair(self, other) -> tuple["Dyadic", "Dyadic"]:
        if isinstance(other, int):
            other = Dyadic(other)
        if not isinstance(other, Dyadic):
            return NotImplemented, NotImplemented
        return self, other

    def __add__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        e = max(a.exp, b.exp)
        return Dyadic((a.num << (e - a.exp)) + (b.num << (e - b.exp)), e)

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        return Dyadic(a.num * b.num, a.exp + b.exp)

    __rmul__ = __mul__

    def _cmp(self, other) -> int:
        a, b = self._pair(other)
        e = max(a.exp, b.exp)
        la, lb = a.num << (e - a.exp), b.num << (e - b.exp)
        return (la > lb) - (la < lb)

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = Dyadic(other)
        if not isinstance(other, Dyadic):
            return NotImplemented
        return self.num == other.num and self.exp == other.exp

    def __hash__(self):
        return hash((self.num, self.exp))


ZERO = Dyadic(0)
ONE = Dyadic(1)


def simplest_between(lo: Dyadic | None, hi: Dyadic | None) -> Dyadic:
    """The simplest dyadic strictly between lo and hi (None = unbounded).

    Simplest means smallest denominator, breaking ties toward the value
    closest to zero; among integers that is the one of least magnitude.
    This is the simplicity rule used when a game {x|y} with numbers
    x < y collapses to a number.
    """
    if lo is not None and hi is not None and lo._cmp(hi) >= 0:
        raise ValueError(f"empty interval ({lo}, {hi})")
    if (lo is None or lo < ZERO) and (hi is None or hi > ZERO):
        return ZERO
    if lo is None:
        # everything below hi: largest integer < hi
        return Dyadic(hi.ceil() - 1)
    if hi is None:
        return Dyadic(lo.floor() + 1)
    if lo >= ZERO:
        n = lo.floor() + 1
        if Dyadic(n) < hi:
            return Dyadic(n)
    else:
        n = hi.ceil() - 1
        if Dyadic(n) > lo:
            return Dyadic(n)
    # No integer inside: the unique dyadic of least exponent in (lo, hi).
    e = 1
    while True:
        p = (lo.num << (e - lo.exp)) + 1 if e >= lo.exp else None
        if p is None:
            # lo has finer resolution than 2^-e; take smallest multiple > lo
            p = (lo.num >> (lo.exp - e)) + 1
        cand = Dyadic(p, e)
        if cand > lo and cand < hi:
            return cand
        e += 1
