"""Exact coefficient rings: the integers, the rationals and prime fields.

Scalars are plain Python values (``int`` for Z and GF(p), ``Fraction`` for Q);
the ring object knows how to normalize and combine them.  Signs are always
passed around as parity exponents and applied with :meth:`RingSpec.signed`,
so formulas behave uniformly in characteristic 2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZero, NotAField, RingMismatch, UnknownRing

INTEGERS = "Z"
RATIONALS = "Q"
PRIME_FIELD = "GF"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class RingSpec:
    kind: str
    p: int = 0

    def __post_init__(self):
        if self.kind == PRIME_FIELD:
            if not _is_prime(self.p):
                raise UnknownRing(f"GF({self.p}): characteristic must be prime")
        elif self.kind in (INTEGERS, RATIONALS):
            if self.p != 0:
                raise UnknownRing(f"{self.kind} takes no characteristic")
        else:
            raise UnknownRing(f"unknown ring kind {self.kind!r}")

    def __str__(self):
        return f"GF{self.p}" if self.kind == PRIME_FIELD else self.kind

    @property
    def is_field(self) -> bool:
        return self.kind != INTEGERS

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def zero(self):
        return Fraction(0) if self.kind == RATIONALS else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == RATIONALS else 1

    def coerce(self, value):
        """Bring an int, Fraction or decimal/fraction string into this ring."""
        if isinstance(value, str):
            value = Fraction(value.strip())
        if self.kind == INTEGERS:
            if isinstance(value, Fraction):
                if value.denominator != 1:
                    raise RingMismatch(f"{value} is not an integer")
                value = value.numerator
            return int(value)
        if self.kind == RATIONALS:
            return Fraction(value)
        if isinstance(value, Fraction):
            num = value.numerator % self.p
            den = value.denominator % self.p
            if den == 0:
                raise DivisionByZero(f"{value} has no image in GF({self.p})")
            return num * pow(den, -1, self.p) % self.p
        return int(value) % self.p

    def add(self, a, b):
        s = a + b
        return s % self.p if self.p else s

    def sub(self, a, b):
        s = a - b
        return s % self.p if self.p else s

    def mul(self, a, b):
        s = a * b
        return s % self.p if self.p else s

    def neg(self, a):
        return (-a) % self.p if self.p else -a

    def is_zero(self, a) -> bool:
        return a == 0

    def inv(self, a):
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in {self}")
        if self.kind == INTEGERS:
            if a in (1, -1):
                return a
            raise NotAField(f"{a} is not a unit in Z")
        if self.kind == RATIONALS:
            return 1 / Fraction(a)
        return pow(a, -1, self.p)

    def signed(self, parity: int, a):
        """Return ``(-1)**parity * a``."""
        return self.neg(a) if parity % 2 else a

    def format(self, a) -> str:
        return str(a)

    def check_same(self, other: "RingSpec"):
        if self != other:
            raise RingMismatch(f"{self} vs {other}")


ZZ = RingSpec(INTEGERS)
QQ = RingSpec(RATIONALS)


def GF(p: int) -> RingSpec:
    return RingSpec(PRIME_FIELD, p)


GF2 = GF(2)

_GF_RE = re.compile(r"^GF\(?(\d+)\)?$")


def parse_ring(name: str) -> RingSpec:
    """Map a selector string such as ``"Z"``, ``"Q"`` or ``"GF3"`` to a ring."""
    name = name.strip()
    if name.upper() in ("Z", "ZZ"):
        return ZZ
    if name.upper() in ("Q", "QQ"):
        return QQ
    m = _GF_RE.match(name.upper())
    if m:
        return GF(int(m.group(1)))
    raise UnknownRing(f"unknown ring selector {name!r}")
