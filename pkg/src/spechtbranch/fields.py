"""Exact coefficient fields: the rationals and the prime fields GF(p).

Scalars are plain Python objects: ``int`` residues in ``0..p-1`` for GF(p),
``int``/``Fraction`` for the rationals.  No floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A coefficient field, given by its characteristic (0 or a prime)."""

    characteristic: int

    def __post_init__(self):
        c = self.characteristic
        if c != 0 and not _is_prime(c):
            raise ValueError(f"characteristic must be 0 or a prime, got {c}")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        return cls(int(text.strip()))

    @property
    def is_modular(self) -> bool:
        return self.characteristic != 0

    def __str__(self) -> str:
        if self.characteristic == 0:
            return "Q"
        return f"GF({self.characteristic})"

    # -- scalar arithmetic ------------------------------------------------

    def scalar(self, x) -> "int | Fraction":
        """Reduce an integer or Fraction into the field."""
        p = self.characteristic
        if p:
            if isinstance(x, Fraction):
                if x.denominator % p == 0:
                    raise ZeroDivisionError(f"denominator divisible by {p}")
                return x.numerator * pow(x.denominator, p - 2, p) % p
            return int(x) % p
        if isinstance(x, Fraction) and x.denominator == 1:
            return x.numerator
        return x

    def zero(self):
        return 0

    def one(self):
        return 1

    def inv(self, a):
        p = self.characteristic
        if p:
            a = int(a) % p
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return pow(a, p - 2, p)
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return Fraction(1, 1) / Fraction(a)

    def neg(self, a):
        if self.characteristic:
            return (-a) % self.characteristic
        return -a

    def render(self, a) -> str:
        """Scalar as text: a residue for GF(p), num/den for Q."""
        if self.characteristic:
            return str(int(a) % self.characteristic)
        return str(Fraction(a))

    # -- array support -----------------------------------------------------

    @property
    def dtype(self):
        return np.int64 if self.characteristic else object

    def reduce_array(self, a: np.ndarray) -> np.ndarray:
        if self.characteristic:
            return a % self.characteristic
        return a

    def array(self, data) -> np.ndarray:
        out = np.array(data, dtype=self.dtype)
        return self.reduce_array(out)

    def zeros(self, shape) -> np.ndarray:
        if self.characteristic:
            return np.zeros(shape, dtype=np.int64)
        return np.zeros(shape, dtype=object)


QQ = FieldSpec(0)


def GF(p: int) -> FieldSpec:
    spec = FieldSpec(p)
    if not spec.is_modular:
        raise ValueError("GF needs a prime; use QQ for characteristic 0")
    return spec
