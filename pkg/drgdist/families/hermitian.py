from __future__ import annotations
from fractions import Fraction
from math import comb, prod

from ..shared import FamilyParameterError
from .gaussian import gaussian_binomial


def _check(d: int, q: int) -> None:
    if d < 1 or q < 2:
        raise FamilyParameterError(f"Hermitian forms graphs need d >= 1 and q >= 2, got d={d}, q={q}")


def hermitian_eigenvalues(d: int, q: int) -> list[Fraction]:
    """
    theta_i = ((-q)^{2d-i} - 1) / (q + 1) in formula order, i = 0..d (not sorted)
    """
    _check(d, q)
    return [Fraction((-q) ** (2 * d - i) - 1, q + 1) for i in range(d + 1)]


def hermitian_eigenmatrix(d: int, q: int) -> list[list[Fraction]]:
    """
    P[i][j] = v_j(theta_i) = (-1)^j sum_h (-q)^{C(j-h,2) + hd} [d-h choose d-j]_b [d-i choose h]_b, b = -q
    Rows follow formula order of hermitian_eigenvalues
    """
    _check(d, q)
    b = -q

    def v(i: int, j: int) -> Fraction:
        terms = (
            Fraction(b) ** (comb(j - h, 2) + h * d)
            * gaussian_binomial(d - h, d - j, b)
            * gaussian_binomial(d - i, h, b)
            for h in range(j + 1)
        )
        return (-1) ** j * sum(terms, Fraction(0))

    return [[v(i, j) for j in range(d + 1)] for i in range(d + 1)]


def hermitian_cosines(d: int, q: int) -> list[list[Fraction]]:
    """
    W[i][r] = w_r(theta_i) = v_r(theta_i) / k_r in formula order
    """
    P = hermitian_eigenmatrix(d, q)
    return [[P[i][r] / P[0][r] for r in range(d + 1)] for i in range(d + 1)]


def hermitian_w_d(d: int, q: int, j: int) -> Fraction:
    """
    w_d(theta_j) = 1 / prod_{h<j} ((-q)^{d-h} + 1) in formula order
    """
    _check(d, q)
    return 1 / prod((Fraction((-q) ** (d - h) + 1) for h in range(j)), start=Fraction(1))
