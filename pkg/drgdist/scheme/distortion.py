from __future__ import annotations
from dataclasses import dataclass
from typing import TYPE_CHECKING
from logging import getLogger
from math import inf, sqrt

import numpy as np

from ..shared import DegenerateSpectrum, InvalidArray, NotAntipodal, ReportThis
from ..shared import TOL, TRACE, LFloats, rel_close, argmax_late, as_rational
from .intersection_array import is_antipodal
from .spectrum import spectrum

if TYPE_CHECKING:
    from fractions import Fraction
    from ..shared import Tolerances
    from .intersection_array import IntersectionArray
    from .spectrum import Spectrum


_LOG = "distortion"


@dataclass(kw_only=True, frozen=True, slots=True)
class DistortionReport:
    """
    Distortion data of the canonical embedding of a distance-regular graph
    r and j are 1-indexed; bound_table[r-1][j-1] is the (r, j) entry
    """

    ia: IntersectionArray
    embedding_distortion_sq: float
    most_contracted_r: int
    bound_table: tuple[tuple[float, ...], ...]
    lower_bound_sq_per_r: tuple[float, ...]
    best_lower_bound_sq: float
    best_r: int
    diameter_bound_sq: float
    small_r_wins: bool
    certified: bool
    cover_index: int | None

    @property
    def c2_sq(self) -> float | tuple[float, float]:
        """
        c_2(G)^2 when certified, else the interval it is known to lie in
        """
        if self.certified:
            return self.embedding_distortion_sq
        return (self.best_lower_bound_sq, self.embedding_distortion_sq)

    def c2_sq_exact(self, *, tol: Tolerances = TOL) -> Fraction | None:
        return as_rational(self.embedding_distortion_sq, tol=tol) if self.certified else None


def embedding_distortion_sq(spec: Spectrum, *, tol: Tolerances = TOL) -> tuple[float, int]:
    """
    The squared distortion of the embedding onto the theta_1 eigenspace:
    max over r of r^2 (1 - w_1(theta_1)) / (1 - w_r(theta_1))
    :return: The distortion squared and the most contracted distance r (ties go to the larger r)
    :raises DegenerateSpectrum: if 1 - w_r(theta_1) <= 0 for some r >= 1
    """
    w = spec.W[1]
    den = 1.0 - w[1:]
    if (bad := np.flatnonzero(den <= tol.infinity_abs)).size:
        raise DegenerateSpectrum(f"1 - w_{bad[0] + 1}(theta_1) = {den[bad[0]]} <= 0 for {spec.ia}")
    r = np.arange(1, spec.d + 1)
    values = (r**2 * (1.0 - w[1]) / den).tolist()
    best = argmax_late(values, tol.certify_rel)
    return values[best], best + 1


def _bound_row(spec: Spectrum, r: int, tol: Tolerances) -> np.ndarray:
    num = 1.0 - spec.W[1:, 1]
    den = 1.0 - spec.W[1:, r]
    return np.where(den > tol.infinity_abs, r * r * num / np.maximum(den, tol.infinity_abs), inf)


def vallentin_bound_sq(spec: Spectrum, r: int, *, tol: Tolerances = TOL) -> float:
    """
    The lower bound r^2 min_j (1 - w_1(theta_j)) / (1 - w_r(theta_j)) on c_2(G)^2, j = 1..d
    Terms whose denominator is at most tol.infinity_abs are +inf and drop out of the minimum
    """
    if not 1 <= r <= spec.d:
        raise ValueError(f"r must be in 1..{spec.d}, got {r}")
    row = _bound_row(spec, r, tol)
    if np.isinf(row).all():
        raise DegenerateSpectrum(f"Every bound term at r = {r} is infinite for {spec.ia}")
    return float(row.min())


def analyze(ia: IntersectionArray, *, tol: Tolerances = TOL) -> DistortionReport:
    """
    Compute the embedding upper bound and every lower bound, and certify c_2(G)^2 when they meet
    :raises ReportThis: if a lower bound exceeds the embedding distortion
    """
    log = getLogger(_LOG)
    spec = spectrum(ia, tol=tol)
    emb, most_contracted = embedding_distortion_sq(spec, tol=tol)
    table = tuple(tuple(float(i) for i in _bound_row(spec, r, tol)) for r in range(1, ia.d + 1))
    for r, row in enumerate(table, start=1):
        log.log(TRACE, "%s bound row r=%d: %s", ia, r, LFloats(row))
    per_r = tuple(vallentin_bound_sq(spec, r, tol=tol) for r in range(1, ia.d + 1))
    best_r = argmax_late(per_r, tol.certify_rel) + 1
    lb = per_r[best_r - 1]
    if lb > emb and not rel_close(lb, emb, tol.certify_rel):
        raise ReportThis(f"Lower bound {lb} exceeds the embedding distortion {emb} for {ia}")
    tail = max(per_r[-2:])
    small = ia.d > 2 and max(per_r[:-2]) > tail and not rel_close(max(per_r[:-2]), tail, tol.certify_rel)
    if small:
        log.warning("A distance r <= d-2 gives the best lower bound for %s: %s", ia, LFloats(per_r))
    ret = DistortionReport(
        ia=ia,
        embedding_distortion_sq=emb,
        most_contracted_r=most_contracted,
        bound_table=table,
        lower_bound_sq_per_r=per_r,
        best_lower_bound_sq=lb,
        best_r=best_r,
        diameter_bound_sq=per_r[-1],
        small_r_wins=small,
        certified=rel_close(lb, emb, tol.certify_rel),
        cover_index=is_antipodal(ia),
    )
    log.debug("%s: c2^2 %s (best r=%d, most contracted r=%d)", ia, ret.c2_sq, best_r, most_contracted)
    return ret


#
# Antipodal covers
#


def antipodal_counterexample_check(ia: IntersectionArray, spec: Spectrum, *, tol: Tolerances = TOL) -> bool:
    """
    For an antipodal r-cover of diameter d >= 2r the distance d-1 is more contracted than d,
    making it a counterexample to the r = d conjecture, iff theta_1 / k < (d^2 - 2rd + r) / d^2
    :raises NotAntipodal: if ia is not antipodal
    """
    if (r := is_antipodal(ia)) is None:
        raise NotAntipodal(f"{ia} is not antipodal")
    d = ia.d
    if d < 2 * r:
        return False
    lhs, rhs = spec.theta[1] / spec.k, (d * d - 2 * r * d + r) / (d * d)
    return bool(lhs < rhs and not rel_close(lhs, rhs, tol.certify_rel))


@dataclass(kw_only=True, frozen=True, slots=True)
class AntipodalRow:
    """
    Closed-form cosines of an antipodal r-cover at theta_j
    """

    j: int
    w_d: float
    w_d_minus_1: float
    ratio: float  # (1 - w_{d-1}(theta_j)) / (1 - w_1(theta_j))


def antipodal_ratio_table(ia: IntersectionArray, spec: Spectrum) -> list[AntipodalRow]:
    """
    w_d(theta_j) is 1 for even j and -1/(r-1) for odd j; w_{d-1}(theta_j) is theta_j/k for even j
    and -theta_j/(k(r-1)) for odd j
    :raises NotAntipodal: if ia is not antipodal
    """
    if (r := is_antipodal(ia)) is None:
        raise NotAntipodal(f"{ia} is not antipodal")
    ret = []
    for j in range(1, ia.d + 1):
        x = float(spec.theta[j]) / ia.k
        if j % 2 == 0:
            ret.append(AntipodalRow(j=j, w_d=1.0, w_d_minus_1=x, ratio=1.0))
        else:
            ratio = (1 + x / (r - 1)) / (1 - x)
            ret.append(AntipodalRow(j=j, w_d=-1 / (r - 1), w_d_minus_1=-x / (r - 1), ratio=ratio))
    return ret


#
# Closed forms for small diameter
#


def diameter3_ratio(ia: IntersectionArray, theta: float) -> tuple[float, float]:
    """
    :return: (1 - w_2) / (1 - w_1) and (1 - w_3) / (1 - w_1) at theta, in closed form
    """
    if ia.d < 3:
        raise InvalidArray(f"Needs diameter at least 3, got {ia.d}")
    k, (_, a1, a2, *_), (b1, b2), c2 = ia.k, ia.a, ia.b[1:3], ia.c[1]
    s1, s2 = k + theta - a1, k + theta - a2
    return s1 / b1, (s1 * s2 - k * theta - b1 * c2 - k) / (b1 * b2)


def diameter3_closed_form(ia: IntersectionArray, *, tol: Tolerances = TOL) -> float:
    """
    c_2(G)^2 of a diameter 3 distance-regular graph:
    max{4 b_1 / (theta_0 + theta_1 - a_1), 9 b_1 b_2 / ((theta_0 + theta_1 - a_1)(theta_0 + theta_1 - a_2)
    - theta_0 theta_1 - b_1 c_2 - theta_0)}
    """
    if ia.d != 3:
        raise InvalidArray(f"The diameter 3 closed form needs d = 3, got {ia.d}")
    two, three = diameter3_ratio(ia, float(spectrum(ia, tol=tol).theta[1]))
    return max(4 / two, 9 / three)


def srg_closed_form(ia: IntersectionArray) -> tuple[float, float]:
    """
    c_2(G)^2 of a strongly regular graph, from (k, lambda, mu) alone
    :return: 4(1 + 1/s) and 4(v-k-1)(k-r) / (k(v-k+r)), where r > 0 > s are the other eigenvalues
    """
    if ia.d != 2:
        raise InvalidArray(f"Strongly regular graphs have d = 2, got {ia.d}")
    k, lam, mu, v = ia.k, ia.a[1], ia.c[1], float(ia.n)
    disc = sqrt((lam - mu) ** 2 + 4 * (k - mu))
    r, s = (lam - mu + disc) / 2, (lam - mu - disc) / 2
    return 4 * (1 + 1 / s), 4 * (v - k - 1) * (k - r) / (k * (v - k + r))
