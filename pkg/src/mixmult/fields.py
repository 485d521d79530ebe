"""Exact coefficient fields: the rationals and prime fields F_p.

Elements are plain Python values (``Fraction`` for the rationals, ``int`` in
``[0, p)`` for F_p); a :class:`FieldSpec` carries the arithmetic. Keeping
coefficients unboxed keeps the polynomial inner loops cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError

DEFAULT_PRIME = 32003


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; the witness set covers all 64-bit inputs."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for p in small:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The rationals when ``p`` is None, otherwise the prime field F_p."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not is_prime(self.p):
            raise InputError(f"field characteristic {self.p} is not prime")

    @staticmethod
    def rationals() -> "FieldSpec":
        return FieldSpec(None)

    @staticmethod
    def prime_field(p: int) -> "FieldSpec":
        return FieldSpec(p)

    @property
    def is_prime_field(self) -> bool:
        return self.p is not None

    def __str__(self) -> str:
        return "Q" if self.p is None else f"F{self.p}"

    # -- element construction ------------------------------------------------

    @property
    def zero(self):
        return 0 if self.p is not None else Fraction(0)

    @property
    def one(self):
        return 1 if self.p is not None else Fraction(1)

    def coerce(self, a):
        """Map an int or Fraction into the field."""
        if self.p is None:
            return a if isinstance(a, Fraction) else Fraction(a)
        if isinstance(a, Fraction):
            den = a.denominator % self.p
            if den == 0:
                raise InputError(
                    f"denominator {a.denominator} is zero modulo {self.p}"
                )
            return a.numerator * pow(den, self.p - 2, self.p) % self.p
        return a % self.p

    # -- arithmetic ----------------------------------------------------------

    def add(self, a, b):
        return (a + b) % self.p if self.p is not None else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p is not None else a - b

    def mul(self, a, b):
        return a * b % self.p if self.p is not None else a * b

    def neg(self, a):
        return -a % self.p if self.p is not None else -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("field inverse of zero")
        if self.p is not None:
            return pow(a, self.p - 2, self.p)
        return 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))
