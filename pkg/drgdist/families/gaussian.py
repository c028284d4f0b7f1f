from __future__ import annotations
from fractions import Fraction
from math import comb, prod

from ..shared import FamilyParameterError


def gaussian_binomial(n: int, m: int, b: int) -> Fraction:
    """
    The Gaussian binomial [n choose m]_b, exactly
    0 if m < 0, binomial(n, m) if b = 1, else prod_{h<m} (b^{n-h} - 1) / (b^{m-h} - 1)
    Negative bases are supported
    """
    if b in (0, -1):
        raise FamilyParameterError(f"Gaussian binomial base must not be 0 or -1, got {b}")
    if m < 0:
        return Fraction(0)
    if b == 1:
        return Fraction(comb(n, m))
    base = Fraction(b)
    num = prod((base ** (n - h) - 1 for h in range(m)), start=Fraction(1))
    den = prod((base ** (m - h) - 1 for h in range(m)), start=Fraction(1))
    return num / den


def q_int(n: int, b: int) -> Fraction:
    """
    [n choose 1]_b, i.e. 1 + b + ... + b^{n-1} for n >= 0
    """
    return gaussian_binomial(n, 1, b)
