from __future__ import annotations
from typing import TYPE_CHECKING
from fractions import Fraction
from math import isfinite

from .config import TOL, Tolerances

if TYPE_CHECKING:
    from collections.abc import Sequence


# p/q is rejected when |x - p/q| * q^2 exceeds this
_STABILITY: float = 1e-4


def rel_close(x: float, y: float, rel: float) -> bool:
    """
    :return: True if x and y agree within rel, relative to the larger magnitude (absolute near 0)
    """
    return abs(x - y) <= rel * max(1.0, abs(x), abs(y))


def as_rational(x: float, *, tol: Tolerances = TOL) -> Fraction | None:
    """
    Continued fraction reconstruction of x with a bounded denominator
    :return: The fraction if it reproduces x within tol.certify_rel, else None
    """
    if not isfinite(x):
        return None
    frac = Fraction(x).limit_denominator(tol.max_denominator)
    err = abs(float(frac) - x)
    if err > tol.certify_rel * max(1.0, abs(x)) or err * frac.denominator**2 > _STABILITY:
        return None
    return frac


def fmt_value(x: float, *, exact: bool = True, tol: Tolerances = TOL) -> str:
    """
    Format a value the way the reproduced tables print it: p/q when exact, else 6 significant digits
    """
    if not isfinite(x):
        return "inf" if x > 0 else "-inf"
    if exact and (frac := as_rational(x, tol=tol)) is not None:
        return str(frac.numerator) if frac.denominator == 1 else f"{frac.numerator}/{frac.denominator}"
    return f"{x:.6g}"


def argmax_late(values: Sequence[float], rel: float) -> int:
    """
    :return: The index of the maximum, ties within rel broken toward the larger index
    """
    best = max(values)
    return max(i for i, v in enumerate(values) if v == best or rel_close(v, best, rel))
