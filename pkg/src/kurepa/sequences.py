"""Exact integer sequences around the left factorial.

Everything here is exact: plain Python ints, Fractions for the one
rational-valued sum, and dense integer polynomials. The Stirling and Bell
tables are memoized module-wide and grow to the largest index requested;
fills are lock-guarded so concurrent readers see only committed rows.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction


def factorial(n: int) -> int:
    """n! for n >= 0."""
    if n < 0:
        raise ValueError("factorial is undefined for negative n")
    return math.factorial(n)


def left_factorial(n: int) -> int:
    """!n = 0! + 1! + ... + (n-1)! for n >= 1.

    The value at n = 0 (the empty sum) is deliberately rejected: the
    sequence is published starting at !1 = 1 and downstream consumers
    rely on that convention.
    """
    if n < 1:
        raise ValueError("left_factorial requires n >= 1")
    acc = 0
    f = 1
    for m in range(n):
        acc += f
        f *= m + 1
    return acc


def alt_left_factorial(n: int) -> int:
    """Alternating variant: sum of (-1)^m * m! over 0 <= m < n, with value 0 at n = 0."""
    if n < 0:
        raise ValueError("alt_left_factorial requires n >= 0")
    acc = 0
    f = 1
    for m in range(n):
        acc += -f if m % 2 else f
        f *= m + 1
    return acc


def guy_alternating(n: int) -> int:
    """Sum of (-1)^(n-m) * m! over 1 <= m <= n; empty sum is 0.

    Signs are anchored at the top so the m = n term is always +n!.
    """
    if n < 0:
        raise ValueError("guy_alternating requires n >= 0")
    acc = 0
    f = 1
    for m in range(1, n + 1):
        f *= m
        acc += f if (n - m) % 2 == 0 else -f
    return acc


def wagstaff(n: int) -> int:
    """!n - 1 for n >= 1."""
    return left_factorial(n) - 1


# Stirling numbers of the second kind, row-major. _stirling_rows[n][k] = S(n, k)
# for 0 <= k <= n. Rows are append-only; the lock guards fills only.
_stirling_rows: list[list[int]] = [[1]]
_stirling_lock = threading.Lock()

# Bell numbers, computed with the Bell triangle one row at a time so memory
# stays O(n) rather than O(n^2). _bell_values[n] = Bell_n.
_bell_values: list[int] = [1]
_bell_last_row: list[int] = [1]
_bell_lock = threading.Lock()


def _ensure_stirling(n: int) -> None:
    with _stirling_lock:
        while len(_stirling_rows) <= n:
            prev = _stirling_rows[-1]
            m = len(_stirling_rows)  # building row m from row m-1
            row = [0] * (m + 1)
            for k in range(1, m):
                row[k] = k * prev[k] + prev[k - 1]
            row[m] = 1
            _stirling_rows.append(row)


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k), 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        raise ValueError("stirling2 requires 0 <= k <= n")
    _ensure_stirling(n)
    return _stirling_rows[n][k]


def bell(n: int) -> int:
    """Bell number Bell_n, via the Bell triangle."""
    if n < 0:
        raise ValueError("bell requires n >= 0")
    global _bell_last_row
    with _bell_lock:
        while len(_bell_values) <= n:
            prev = _bell_last_row
            row = [prev[-1]]
            for x in prev:
                row.append(row[-1] + x)
            _bell_last_row = row
            _bell_values.append(row[0])
    return _bell_values[n]


def complementary_bell(n: int) -> int:
    """Alternating row sum of Stirling numbers: sum of (-1)^k S(n, k)."""
    if n < 0:
        raise ValueError("complementary_bell requires n >= 0")
    _ensure_stirling(n)
    row = _stirling_rows[n]
    return sum(-v if k % 2 else v for k, v in enumerate(row))


def derangement(n: int) -> int:
    """Derangement count via D_n = n * D_{n-1} + (-1)^n, D_0 = 1."""
    if n < 0:
        raise ValueError("derangement requires n >= 0")
    d = 1
    for m in range(1, n + 1):
        d = m * d + (1 if m % 2 == 0 else -1)
    return d


@dataclass(frozen=True)
class DensePoly:
    """Dense integer polynomial: coeffs[k] is the coefficient of x^k.

    The zero polynomial is the empty tuple; otherwise the leading
    coefficient is nonzero.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        c = tuple(self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        # degree of the zero polynomial is -1 by convention
        return len(self.coeffs) - 1

    def eval(self, x: int | Fraction) -> int | Fraction:
        """Exact Horner evaluation."""
        acc: int | Fraction = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def touchard_poly(n: int) -> DensePoly:
    """Polynomial with coefficient S(n, k) on x^k."""
    if n < 0:
        raise ValueError("touchard_poly requires n >= 0")
    _ensure_stirling(n)
    return DensePoly(tuple(_stirling_rows[n]))


def fubini_poly(n: int) -> DensePoly:
    """Ordered-set-partition polynomial: coefficient k! * S(n, k) on x^k."""
    if n < 0:
        raise ValueError("fubini_poly requires n >= 0")
    _ensure_stirling(n)
    f = 1
    out = []
    for k, s in enumerate(_stirling_rows[n]):
        if k > 0:
            f *= k
        out.append(f * s)
    return DensePoly(tuple(out))


def kurepa_poly(n: int) -> DensePoly:
    """Degree-n polynomial with coefficient k! on x^k; at x = 1 it sums to !(n+1)."""
    if n < 0:
        raise ValueError("kurepa_poly requires n >= 0")
    out = []
    f = 1
    for k in range(n + 1):
        if k > 0:
            f *= k
        out.append(f)
    return DensePoly(tuple(out))


def factorial_sum(n: int) -> int:
    """Sum of k! over 0 <= k <= n for n >= 1, with the published 0 at n = 0.

    This is the shifted left factorial !(n+1) away from the origin; the
    n = 0 value follows the table convention used by the gcd scans.
    """
    if n < 0:
        raise ValueError("factorial_sum requires n >= 0")
    if n == 0:
        return 0
    return left_factorial(n + 1)


def half_left_factorial(n: int) -> int:
    """r_n = factorial_sum(n) / 2, exact (the sum is even for n >= 1); r_0 = 0."""
    if n < 0:
        raise ValueError("half_left_factorial requires n >= 0")
    if n == 0:
        return 0
    s = left_factorial(n + 1)
    if s % 2:
        raise ArithmeticError("factorial sum is odd, cannot halve exactly")
    return s // 2


def consecutive_factorial_sum(k: int, n: int) -> int:
    """Sum of n consecutive factorials starting at k!: k! + (k+1)! + ... + (k+n-1)!."""
    if k < 0 or n < 1:
        raise ValueError("consecutive_factorial_sum requires k >= 0 and n >= 1")
    f = math.factorial(k)
    acc = 0
    for i in range(n):
        acc += f
        f *= k + i + 1
    return acc


def reciprocal_factorial_sum(k: int, n: int) -> Fraction:
    """Exact rational sum 1/k! + 1/(k+1)! + ... + 1/(k+n-1)!."""
    if k < 0 or n < 1:
        raise ValueError("reciprocal_factorial_sum requires k >= 0 and n >= 1")
    f = math.factorial(k)
    acc = Fraction(0)
    for i in range(n):
        acc += Fraction(1, f)
        f *= k + i + 1
    return acc
