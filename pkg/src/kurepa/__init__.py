"""Exact workbench for left factorials and their Bell-number relatives.

Everything integer-valued is computed with arbitrary-precision ints,
values on the e scale keep their rational coefficient and integer e power,
and the few genuinely real-valued checks run through mpmath at a declared
precision. Published claims are re-checked, never assumed: see report.
"""

from .decomp import (
    Basis,
    Decomposition,
    decompose_sequence,
    greedy_bell_decomposition,
    kurepa_sequence_sum,
)
from .discrepancy import MATCH, MISMATCH, DiscrepancyReport
from .efactor import EScaled, dobinski, fermi, inv_dobinski
from .gcdlab import gcd_euclid, gcd_stein
from .report import full_report, mismatches
from .sequences import (
    bell,
    complementary_bell,
    derangement,
    factorial,
    factorial_sum,
    half_left_factorial,
    kurepa_poly,
    left_factorial,
    stirling2,
)
from .verifier import left_factorial_mod, run_search, sieve_primes

__version__ = "0.1.0"

__all__ = [
    "Basis",
    "Decomposition",
    "DiscrepancyReport",
    "EScaled",
    "MATCH",
    "MISMATCH",
    "bell",
    "complementary_bell",
    "decompose_sequence",
    "derangement",
    "dobinski",
    "factorial",
    "factorial_sum",
    "fermi",
    "full_report",
    "gcd_euclid",
    "gcd_stein",
    "greedy_bell_decomposition",
    "half_left_factorial",
    "inv_dobinski",
    "kurepa_poly",
    "kurepa_sequence_sum",
    "left_factorial",
    "left_factorial_mod",
    "mismatches",
    "run_search",
    "sieve_primes",
    "stirling2",
]
