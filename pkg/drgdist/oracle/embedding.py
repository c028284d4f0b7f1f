from __future__ import annotations
from dataclasses import dataclass
from typing import TYPE_CHECKING
from logging import getLogger
from math import inf

from scipy.spatial.distance import pdist
from scipy.linalg import eigh
import numpy as np

from ..shared import TOL, LFloats, EigenvalueMismatch, ReportThis, rel_close
from ..scheme import spectrum
from .graphs import extract_ia

if TYPE_CHECKING:
    from ..shared import Tolerances
    from .graphs import ExplicitGraph


_LOG = "embedding"
_AGREE: float = 1e-7


@dataclass(kw_only=True, frozen=True, slots=True)
class EmbeddingCheck:
    """
    The spectral embedding of an explicit graph measured against the cosine sequence prediction
    realized[r-1] and predicted[r-1] are the embedded lengths S_r of pairs at distance r
    """

    graph: str
    theta_index: int
    theta: float
    multiplicity: int
    realized: tuple[float, ...]
    predicted: tuple[float, ...]
    max_deviation: float  # Relative, over every pair
    cosine_deviation: float  # Eigenvector cosines vs recurrence cosines
    expansion: float
    injective: bool  # False when two vertices share an image
    distortion_sq: float  # +inf when not injective

    def ok(self, *, tol: Tolerances = TOL) -> bool:
        """
        Realized lengths match the prediction within 1e-7 and, at theta_1, the expansion is 1
        """
        expansion_ok = self.theta_index != 1 or rel_close(self.expansion, 1.0, tol.certify_rel)
        return self.max_deviation <= _AGREE and self.cosine_deviation <= _AGREE and expansion_ok


def spectral_embedding_check(g: ExplicitGraph, theta_index: int, *, tol: Tolerances = TOL) -> EmbeddingCheck:
    """
    Embed g by the normalized projection onto the eigenspace of theta_{theta_index} (descending order):
    rho(x) = u(x) / sqrt(2 (u(x), u(x)) (1 - w_1(theta))), then measure every pairwise distance
    :raises EigenvalueMismatch: if the eigenspace dimension disagrees with the multiplicity formula
    """
    log = getLogger(_LOG)
    ia = extract_ia(g)
    spec = spectrum(ia, tol=tol)
    if not 1 <= theta_index <= ia.d:
        raise ValueError(f"theta_index must be in 1..{ia.d}, got {theta_index}")
    theta, w = float(spec.theta[theta_index]), spec.W[theta_index]
    vals, vecs = eigh(g.A.astype(np.float64))
    cluster = np.abs(vals - theta) <= tol.cluster_rel * ia.k
    if (dim := int(cluster.sum())) != round(spec.m[theta_index]):
        raise EigenvalueMismatch(
            f"Eigenspace of {theta} in {g.name} has dimension {dim}, expected {spec.m[theta_index]:.6g}"
        )
    U = vecs[:, cluster]
    gram = U @ U.T
    norms = np.diag(gram)
    if np.ptp(norms) > tol.residual_rel * norms.max():
        raise ReportThis(f"(u(x), u(x)) depends on the vertex in {g.name}: spread {np.ptp(norms)}")
    rho = U / np.sqrt(2 * norms[:, None] * (1 - w[1]))
    iu = np.triu_indices(g.n, k=1)
    lengths, dist = pdist(rho), g.D[iu]
    cosines = gram[iu] / norms[0]
    predicted = np.sqrt(np.clip((1 - w[1:]) / (1 - w[1]), 0.0, None))
    realized, dev, cos_dev = [], 0.0, 0.0
    for r in range(1, ia.d + 1):
        mask = dist == r
        realized.append(float(lengths[mask].mean()))
        dev = max(dev, float(np.abs(lengths[mask] - predicted[r - 1]).max()) / max(predicted[r - 1], 1.0))
        cos_dev = max(cos_dev, float(np.abs(cosines[mask] - w[r]).max()))
    ratio = lengths / dist
    expansion = float(ratio.max())
    injective = bool((1 - w[1:]).min() > tol.infinity_abs)
    if not injective:
        r = int((1 - w[1:]).argmin()) + 1
        log.info("theta_%d of %s identifies vertices at distance %d", theta_index, g.name, r)
    contraction = float(1 / ratio.min()) if injective else inf
    ret = EmbeddingCheck(
        graph=g.name,
        theta_index=theta_index,
        theta=theta,
        multiplicity=dim,
        realized=tuple(realized),
        predicted=tuple(float(i) for i in predicted),
        max_deviation=dev,
        cosine_deviation=cos_dev,
        expansion=expansion,
        injective=injective,
        distortion_sq=(expansion * contraction) ** 2,
    )
    log.debug("%s at theta=%g: S_r=%s, distortion^2=%g", g.name, theta, LFloats(realized), ret.distortion_sq)
    return ret
