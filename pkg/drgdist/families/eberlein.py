from __future__ import annotations
from math import comb

from ..shared import FamilyParameterError


def _c(n: int, m: int) -> int:
    return comb(n, m) if 0 <= m <= n else 0


def eberlein(j: int, i: int, n: int, d: int) -> int:
    """
    E_j(i) = sum_h (-1)^h C(i,h) C(d-i,j-h) C(n-d-i,j-h),
    the eigenvalue of the distance-j graph of J(n, d) on its i-th eigenspace
    """
    if not (0 <= i <= d and 0 <= j <= d and 2 * d <= n):
        raise FamilyParameterError(f"Eberlein polynomial needs 0 <= i, j <= d <= n/2, got {(j, i, n, d)}")
    return sum((-1) ** h * _c(i, h) * _c(d - i, j - h) * _c(n - d - i, j - h) for h in range(j + 1))


def eberlein_odd(i: int, d: int) -> int:
    """
    E_{ceil(d/2)}(i) on J(2d+1, d), the eigenvalues of the distance-d graph of the Odd graph O_{d+1}:
    sum_{h<=i} (-1)^{i-h} C(i,h) C(d-h, ceil(d/2)) C(d-i+h+1, floor(d/2)+1)
    """
    if not 0 <= i <= d:
        raise FamilyParameterError(f"Need 0 <= i <= d, got i={i}, d={d}")
    up, down = (d + 1) // 2, d // 2 + 1
    return sum((-1) ** (i - h) * _c(i, h) * _c(d - h, up) * _c(d - i + h + 1, down) for h in range(i + 1))


def odd_smallest_eigenvalue_indices(d: int) -> tuple[int, ...]:
    """
    The indices i in 1..d minimizing E_{ceil(d/2)}(i) on J(2d+1, d)
    """
    if d < 2:
        raise FamilyParameterError(f"Need d >= 2, got {d}")
    vals = [eberlein_odd(i, d) for i in range(1, d + 1)]
    low = min(vals)
    return tuple(i for i, v in enumerate(vals, start=1) if v == low)


def odd_cosine_distance(d: int, r: int) -> int:
    """
    The Johnson distance j between two vertices at distance r in O_{d+1}, so that
    w_r(theta) of O_{d+1} is a cosine of the distance-j graph of J(2d+1, d)
    """
    return r // 2 if r % 2 == 0 else (2 * d - r + 1) // 2
