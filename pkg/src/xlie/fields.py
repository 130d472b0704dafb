"""Exact scalar fields: the rationals and the prime fields F_p.

Scalars are plain Python values: `fractions.Fraction` over the rationals,
`int` residues in [0, p) over F_p.  A `FieldSpec` names the field and
carries the scalar-level operations; bulk linear algebra lives in
`xlie.linalg` and dispatches on the field kind.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[Fraction, int]

RATIONAL = "Rational"
PRIME = "Prime"

MAX_PRIME = 2**31 - 1

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")
_PRIME_RE = re.compile(r"^[+-]?\d+$")


def _is_prime(p: int) -> bool:
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


@dataclass(frozen=True)
class FieldSpec:
    """An exact field: kind Rational (p = 0) or Prime (p a prime < 2^31)."""

    kind: str
    p: int = 0

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def is_prime_field(self) -> bool:
        return self.kind == PRIME

    def zero(self) -> Scalar:
        return 0 if self.p else Fraction(0)

    def one(self) -> Scalar:
        return 1 if self.p else Fraction(1)

    def coerce(self, x: int | Fraction) -> Scalar:
        """Normalize an integer or fraction into this field."""
        if self.p:
            if isinstance(x, Fraction):
                if x.denominator % self.p == 0:
                    raise ZeroDivisionError(f"denominator divisible by {self.p}")
                return x.numerator * pow(x.denominator, self.p - 2, self.p) % self.p
            return x % self.p
        return Fraction(x)

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return (a + b) % self.p if self.p else a + b

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return (a - b) % self.p if self.p else a - b

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return (a * b) % self.p if self.p else a * b

    def neg(self, a: Scalar) -> Scalar:
        return -a % self.p if self.p else -a

    def inv(self, a: Scalar) -> Scalar:
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.p:
            return pow(a, self.p - 2, self.p)
        return 1 / a

    def parse(self, s: str) -> Scalar:
        """Parse a scalar string: "a" or "a/b" over Q, a decimal residue mod p."""
        if not isinstance(s, str):
            raise ValueError(f"scalar must be a string, got {type(s).__name__}")
        if self.p:
            if not _PRIME_RE.match(s):
                raise ValueError(f"not a residue: {s!r}")
            return int(s) % self.p
        if not _RATIONAL_RE.match(s):
            raise ValueError(f"not a rational: {s!r}")
        try:
            return Fraction(s)
        except ZeroDivisionError:
            raise ValueError(f"zero denominator: {s!r}") from None

    def format(self, v: Scalar) -> str:
        """Canonical string form: reduced "a/b" with b > 0, or "a"."""
        return str(v)

    def __str__(self) -> str:
        return f"F_{self.p}" if self.p else "Q"


QQ = FieldSpec(RATIONAL)


def GF(p: int) -> FieldSpec:
    """The prime field F_p.  Requires p prime and p < 2^31."""
    if not isinstance(p, int) or isinstance(p, bool):
        raise ValueError(f"p must be an integer, got {p!r}")
    if p > MAX_PRIME:
        raise ValueError(f"p = {p} exceeds 2^31 - 1")
    if not _is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    return FieldSpec(PRIME, p)
