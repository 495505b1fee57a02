"""Exact multiples of integer powers of e.

An EScaled value is q * e^s with q an exact rational and s a small integer.
Arithmetic never evaluates e; only approx() crosses into high-precision
floating point, with guard digits on top of the requested precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp, mpf

from .sequences import bell, complementary_bell

# extra working digits used by every approximate evaluation
GUARD_DIGITS = 10


@dataclass(frozen=True)
class EScaled:
    """q * e^s. The zero value is canonicalized to (0, 0)."""

    coeff: Fraction
    epower: int

    def __post_init__(self) -> None:
        c = self.coeff if isinstance(self.coeff, Fraction) else Fraction(self.coeff)
        object.__setattr__(self, "coeff", c)
        if c == 0:
            object.__setattr__(self, "epower", 0)

    def __add__(self, other: "EScaled") -> "EScaled":
        if not isinstance(other, EScaled):
            return NotImplemented
        # zero is the additive identity regardless of the stored epower
        if self.coeff == 0:
            return other
        if other.coeff == 0:
            return self
        if self.epower != other.epower:
            raise ValueError(
                f"cannot add e^{self.epower} and e^{other.epower} terms exactly"
            )
        return EScaled(self.coeff + other.coeff, self.epower)

    def __mul__(self, other: "EScaled | int | Fraction") -> "EScaled":
        if isinstance(other, EScaled):
            return EScaled(self.coeff * other.coeff, self.epower + other.epower)
        if isinstance(other, (int, Fraction)):
            return EScaled(self.coeff * other, self.epower)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self) -> "EScaled":
        return EScaled(-self.coeff, self.epower)

    def __str__(self) -> str:
        return f"{self.coeff}*e^{self.epower}"


def dobinski(n: int) -> EScaled:
    """Bell_n * e, the closed form of sum k^n / k!."""
    return EScaled(Fraction(bell(n)), 1)


def inv_dobinski(n: int) -> EScaled:
    """complementary_bell(n) / e, the closed form of sum (-1)^k k^n / k!."""
    return EScaled(Fraction(complementary_bell(n)), -1)


def fermi(n: int) -> EScaled:
    """Bell_n * e^2."""
    return EScaled(Fraction(bell(n)), 2)


def inv_fermi(n: int) -> EScaled:
    """complementary_bell(n) * e^-2."""
    return EScaled(Fraction(complementary_bell(n)), -2)


def gas(n: int, sigma: int) -> EScaled:
    """Bell_n * e^(1 - sigma) for sigma in {+1, -1}."""
    if sigma not in (1, -1):
        raise ValueError("gas requires sigma in {+1, -1}")
    return EScaled(Fraction(bell(n)), 1 - sigma)


def format_significant(value, digits: int) -> str:
    """Render an mpmath value to `digits` significant figures.

    Zero carries no significant digits of its own, so it is rendered as
    "0." followed by digits-1 zeros to keep column widths stable.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    if value == 0:
        return "0" if digits == 1 else "0." + "0" * (digits - 1)
    # nstr falls back to str() for types it does not know, floats included
    return mp.nstr(mp.mpf(value), digits, strip_zeros=False)


def approx(x: EScaled, digits: int) -> str:
    """Decimal approximation of x correct to `digits` significant figures."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    if x.coeff == 0:
        return format_significant(0, digits)
    with mp.workdps(digits + GUARD_DIGITS):
        val = (
            mpf(x.coeff.numerator)
            / x.coeff.denominator
            * mp.e ** x.epower
        )
        return format_significant(val, digits)
