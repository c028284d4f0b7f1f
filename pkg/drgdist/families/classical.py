from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
from logging import getLogger

from ..shared import FamilyParameterError
from ..scheme import IntersectionArray
from .gaussian import q_int


_LOG = "classical"


@dataclass(kw_only=True, frozen=True, slots=True)
class ClassicalParameters:
    """
    Classical parameters (d, b, alpha, beta) with b not in {0, -1}:
    b_i = ([d] - [i])(beta - alpha [i]) and c_i = [i](1 + alpha [i-1]), where [i] = [i choose 1]_b
    """

    d: int
    b: int
    alpha: Fraction
    beta: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))
        if self.d < 1:
            raise FamilyParameterError(f"Classical parameters need d >= 1, got {self.d}")
        if self.b in (0, -1):
            raise FamilyParameterError(f"Classical parameters need b not in {{0, -1}}, got {self.b}")

    def intersection_numbers(self) -> tuple[list[Fraction], list[Fraction]]:
        """
        :return: (b_0..b_{d-1}, c_1..c_d), exactly
        """
        d, b, al, be = self.d, self.b, self.alpha, self.beta
        bs = [(q_int(d, b) - q_int(i, b)) * (be - al * q_int(i, b)) for i in range(d)]
        cs = [q_int(i, b) * (1 + al * q_int(i - 1, b)) for i in range(1, d + 1)]
        return bs, cs

    def eigenvalues(self) -> list[Fraction]:
        """
        theta_i = [d-i](beta - alpha [i]) - [i], i = 0..d, in formula order
        Sorted descending only when b >= 1
        """
        d, b, al, be = self.d, self.b, self.alpha, self.beta
        return [q_int(d - i, b) * (be - al * q_int(i, b)) - q_int(i, b) for i in range(d + 1)]

    def c2_sq_upper(self) -> Fraction:
        """
        d^2 b^{d-1} / [d]_b, the embedding distortion squared when b >= 1
        """
        return Fraction(self.d**2) * Fraction(self.b) ** (self.d - 1) / q_int(self.d, self.b)


def classical_to_ia(p: ClassicalParameters, *, name: str = "") -> IntersectionArray:
    """
    :raises FamilyParameterError: if some intersection number is not a positive integer
    """
    bs, cs = p.intersection_numbers()
    if bad := [i for i in bs + cs if i.denominator != 1 or i <= 0]:
        raise FamilyParameterError(f"{p} gives intersection number {bad[0]}, not a positive integer")
    ret = IntersectionArray(b=tuple(int(i) for i in bs), c=tuple(int(i) for i in cs), name=name)
    getLogger(_LOG).debug("%s -> %s", p, ret)
    return ret
