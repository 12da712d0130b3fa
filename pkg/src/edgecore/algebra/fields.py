"""Exact coefficient fields: the rationals and prime fields F_p.

Rationals are plain :class:`fractions.Fraction` values.  Elements of F_p are
:class:`Mod` instances carrying their field, so mixing residues from different
primes (or residues with rationals) fails loudly instead of silently coercing.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache


class FieldMismatch(TypeError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class Mod:
    """Residue class in F_p, stored as its representative in [0, p-1]."""

    __slots__ = ("v", "field")

    def __init__(self, v: int, field: "PrimeField"):
        self.v = v % field.p
        self.field = field

    def _coerce(self, other):
        if isinstance(other, Mod):
            if other.field is not self.field:
                raise FieldMismatch(f"cannot combine elements of {self.field} and {other.field}")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction) and other.denominator == 1:
            return other.numerator
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Mod(self.v + o, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Mod(self.v - o, self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Mod(o - self.v, self.field)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Mod(self.v * o, self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o % self.field.p == 0:
            raise ZeroDivisionError(f"division by zero in {self.field}")
        return Mod(self.v * pow(o, -1, self.field.p), self.field)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.v:
            raise ZeroDivisionError(f"division by zero in {self.field}")
        return Mod(o * pow(self.v, -1, self.field.p), self.field)

    def __neg__(self):
        return Mod(-self.v, self.field)

    def __pow__(self, e: int):
        return Mod(pow(self.v, e, self.field.p), self.field)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.v == o % self.field.p

    def __hash__(self):
        return hash((self.v, self.field.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"{self.v} (mod {self.field.p})"

    def __str__(self):
        return str(self.v)


class RationalField:
    char = 0
    name = "q"

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def __call__(self, x) -> Fraction:
        if isinstance(x, Mod):
            raise FieldMismatch("cannot lift an F_p residue to Q")
        return Fraction(x)

    def parse(self, text: str) -> Fraction:
        """Parse ``"p/q"`` or an integer literal."""
        return Fraction(text.strip())

    def contains(self, x) -> bool:
        return isinstance(x, (int, Fraction)) and not isinstance(x, bool)

    def random_nonzero(self, rng: random.Random, bound: int = 100) -> Fraction:
        # Q has no uniform distribution; draw from the nonzero integers in [-bound, bound].
        v = rng.randint(1, bound)
        return Fraction(v if rng.random() < 0.5 else -v)

    def __repr__(self):
        return "QQ"

    def __str__(self):
        return "Q"


class PrimeField:
    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.char = p
        self.name = f"fp:{p}"

    @property
    def zero(self):
        return Mod(0, self)

    @property
    def one(self):
        return Mod(1, self)

    def __call__(self, x) -> Mod:
        if isinstance(x, Mod):
            if x.field is not self:
                raise FieldMismatch(f"{x!r} is not in {self}")
            return x
        if isinstance(x, Fraction):
            return Mod(x.numerator, self) / Mod(x.denominator, self)
        return Mod(int(x), self)

    def parse(self, text: str) -> Mod:
        return self(Fraction(text.strip()))

    def contains(self, x) -> bool:
        return isinstance(x, Mod) and x.field is self

    def elements(self):
        return [Mod(v, self) for v in range(self.p)]

    def random_nonzero(self, rng: random.Random) -> Mod:
        return Mod(rng.randrange(1, self.p), self)

    def __repr__(self):
        return f"GF({self.p})"

    def __str__(self):
        return f"F_{self.p}"


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    """Return the (unique, cached) prime field with ``p`` elements."""
    return PrimeField(p)


def parse_field(text: str):
    """Parse a field name: ``"q"`` for the rationals, ``"fp:<prime>"`` for F_p."""
    s = text.strip().lower()
    if s in ("q", "qq"):
        return QQ
    if s.startswith("fp:"):
        try:
            p = int(s[3:])
        except ValueError:
            raise ValueError(f"bad prime in field {text!r}") from None
        return GF(p)
    raise ValueError(f"unknown field {text!r} (expected 'q' or 'fp:<prime>')")
