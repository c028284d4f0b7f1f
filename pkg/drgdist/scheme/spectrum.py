from __future__ import annotations
from dataclasses import dataclass
from typing import TYPE_CHECKING
from functools import cache
from logging import getLogger

from numpy.polynomial import Polynomial
from scipy.linalg import eigh_tridiagonal
import numpy as np

from ..shared import TOL, TRACE, LFloats, DegenerateSpectrum, EigenvalueMismatch

if TYPE_CHECKING:
    from ..shared import Tolerances
    from .intersection_array import IntersectionArray


_LOG = "spectrum"


def _frozen(x: np.ndarray) -> np.ndarray:
    x.setflags(write=False)
    return x


@dataclass(kw_only=True, frozen=True, slots=True, eq=False)
class Spectrum:
    """
    The distinct eigenvalues of a distance-regular graph and their cosine sequences
    theta is strictly decreasing with theta[0] = k and W[j][r] = w_r(theta_j)
    m[j] is the multiplicity of theta_j
    Arrays are read-only
    """

    ia: IntersectionArray
    theta: np.ndarray
    W: np.ndarray
    m: np.ndarray

    @property
    def d(self) -> int:
        return self.ia.d

    @property
    def k(self) -> int:
        return self.ia.k


def characteristic_polynomial(ia: IntersectionArray) -> Polynomial:
    """
    det(x I - L) of the (d+1)x(d+1) tridiagonal intersection matrix L, by the leading-minor recurrence
    """
    x = Polynomial([0.0, 1.0])
    prev, cur = Polynomial([1.0]), x - ia.a[0]
    for i in range(1, ia.d + 1):
        prev, cur = cur, (x - ia.a[i]) * cur - ia.b[i - 1] * ia.c[i - 1] * prev
    return cur


def eigenvalues(ia: IntersectionArray, *, tol: Tolerances = TOL) -> np.ndarray:
    """
    The d+1 distinct eigenvalues, sorted descending, with theta_0 = k exactly
    The intersection matrix is symmetrized by the diagonal similarity sqrt(k_i), giving
    diagonal a_i and off-diagonal sqrt(b_i c_{i+1})
    :raises DegenerateSpectrum: if two eigenvalues are closer than tol.separation_rel * k
    """
    diag = np.array(ia.a, dtype=float)
    off = np.sqrt(np.array(ia.b, dtype=float) * np.array(ia.c, dtype=float))
    theta = eigh_tridiagonal(diag, off, eigvals_only=True)[::-1].copy()
    k = ia.k
    if abs(theta[0] - k) > tol.match_rel * k:
        raise DegenerateSpectrum(f"Largest eigenvalue of {ia} is {theta[0]}, not k = {k}")
    theta[0] = k
    if (gaps := -np.diff(theta)).size and gaps.min() <= tol.separation_rel * k:
        j = int(gaps.argmin())
        raise DegenerateSpectrum(f"Eigenvalues {j} and {j + 1} of {ia} collide: {theta[j]} ~ {theta[j + 1]}")
    getLogger(_LOG).log(TRACE, "Eigenvalues of %s: %s", ia, LFloats(theta))
    return theta


def _cosines(ia: IntersectionArray, theta: float) -> np.ndarray:
    w = np.empty(ia.d + 1)
    w[0] = 1.0
    w[1] = theta / ia.k
    for r in range(1, ia.d):
        w[r + 1] = ((theta - ia.a[r]) * w[r] - ia.c[r - 1] * w[r - 1]) / ia.b[r]
    return w


def recurrence_residuals(ia: IntersectionArray, theta: float, w: np.ndarray) -> np.ndarray:
    """
    |theta w_r - c_r w_{r-1} - a_r w_r - b_r w_{r+1}| for r = 0..d (with w_{-1} = w_{d+1} = 0)
    """
    padded = np.concatenate(([0.0], w, [0.0]))
    c, b = np.array(ia.c_full, dtype=float), np.array(ia.b_full, dtype=float)
    return np.abs(theta * w - c * padded[:-2] - np.array(ia.a) * w - b * padded[2:])


def cosine_sequence(ia: IntersectionArray, theta: float, *, tol: Tolerances = TOL) -> np.ndarray:
    """
    The cosine sequence (w_0, ..., w_d) of theta by forward recurrence:
    w_0 = 1, w_1 = theta / k, theta w_r = c_r w_{r-1} + a_r w_r + b_r w_{r+1}
    theta is first snapped to the nearest computed eigenvalue
    :raises EigenvalueMismatch: if theta is not within tol.match_rel * k of an eigenvalue
    """
    vals = eigenvalues(ia, tol=tol)
    j = int(np.abs(vals - theta).argmin())
    if abs(vals[j] - theta) > tol.match_rel * ia.k:
        raise EigenvalueMismatch(f"{theta} is not an eigenvalue of {ia}; nearest is {vals[j]}")
    return _frozen(_cosines(ia, float(vals[j])))


@cache
def spectrum(ia: IntersectionArray, *, tol: Tolerances = TOL) -> Spectrum:
    """
    Eigenvalues, cosine matrix and multiplicities m_j = n / sum_i k_i w_i(theta_j)^2
    """
    log = getLogger(_LOG)
    theta = eigenvalues(ia, tol=tol)
    W = np.vstack([_cosines(ia, float(t)) for t in theta])
    for j, t in enumerate(theta):
        if (res := recurrence_residuals(ia, float(t), W[j]).max()) > tol.residual_rel * ia.k:
            log.warning("Cosine recurrence residual %g at theta_%d of %s", res, j, ia)
    if np.abs(W).max() > 1 + tol.residual_rel:
        log.warning("Cosine sequence of %s leaves [-1, 1]; not a distance-regular array", ia)
    # w_d(theta_j) has sign (-1)^j
    if bad := [j for j, i in enumerate(W[:, -1]) if i * (-1) ** j <= 0]:
        log.warning("w_d(theta_j) of %s has the wrong sign at j = %s", ia, bad)
    kd = np.array([float(i) for i in ia.k_dist])
    m = float(ia.n) / (W**2 @ kd)
    log.debug("Spectrum of %s: theta=%s m=%s", ia, LFloats(theta), LFloats(m, 4))
    log.log(TRACE, "Cosine matrix of %s:\n%s", ia, W)
    return Spectrum(ia=ia, theta=_frozen(theta), W=_frozen(W), m=_frozen(m))
