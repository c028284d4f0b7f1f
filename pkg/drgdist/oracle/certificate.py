from __future__ import annotations
from dataclasses import dataclass
from typing import TYPE_CHECKING
from logging import getLogger

from ..shared import TOL, TRACE, LFloats, CertificateError

if TYPE_CHECKING:
    from ..shared import Tolerances
    from ..scheme import IntersectionArray, Spectrum


_LOG = "certificate"


@dataclass(kw_only=True, frozen=True, slots=True)
class QAlphaCertificate:
    """
    Q_alpha = (k_1 - alpha k_r) A_0 - A_1 + alpha A_r at the largest alpha keeping it positive semidefinite
    eigenvalues[j] is the eigenvalue of Q_alpha on the theta_j eigenspace
    """

    r: int
    alpha_star: float
    bound_sq: float
    eigenvalues: tuple[float, ...]


def qalpha_certificate(
    ia: IntersectionArray, spec: Spectrum, r: int, *, tol: Tolerances = TOL
) -> QAlphaCertificate:
    """
    alpha* = min_j k_1 (1 - w_1(theta_j)) / (k_r (1 - w_r(theta_j))) over j = 1..d, skipping +inf terms
    The certified bound is r^2 alpha* k_r / k_1
    :raises CertificateError: if no term is finite, the row sums of Q_alpha* are not 0,
        or it has a negative eigenvalue
    """
    if not 1 <= r <= ia.d:
        raise ValueError(f"r must be in 1..{ia.d}, got {r}")
    k1, kr = float(ia.k_dist[1]), float(ia.k_dist[r])
    W = spec.W
    den = 1.0 - W[1:, r]
    finite = den > tol.infinity_abs
    if not finite.any():
        raise CertificateError(f"No finite alpha for r = {r} on {ia}")
    alpha = float((k1 * (1.0 - W[1:, 1][finite]) / (kr * den[finite])).min())
    eig = k1 * (1.0 - W[:, 1]) - alpha * kr * (1.0 - W[:, r])
    getLogger(_LOG).log(TRACE, "Q_alpha eigenvalues for %s, r=%d: %s", ia, r, LFloats(eig))
    # Row sums of Q_alpha are its eigenvalue on the all-ones vector
    if abs(eig[0]) > tol.residual_rel * ia.k:
        raise CertificateError(f"Q_alpha for r = {r} on {ia} has row sum {eig[0]}, not 0")
    if (low := eig.min()) < -tol.residual_rel * ia.k:
        raise CertificateError(f"Q_alpha for r = {r} on {ia} has eigenvalue {low}")
    return QAlphaCertificate(
        r=r, alpha_star=alpha, bound_sq=r * r * alpha * kr / k1, eigenvalues=tuple(float(i) for i in eig)
    )
