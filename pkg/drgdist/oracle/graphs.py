from __future__ import annotations
from dataclasses import dataclass
from typing import TYPE_CHECKING
from itertools import combinations, product
from logging import getLogger
from math import comb

from scipy.sparse.csgraph import shortest_path
from human_readable import listing
import networkx as nx
import numpy as np

from ..shared import TOL, GraphTooLarge, UnknownFamily, FamilyParameterError, NotDistanceRegular
from ..scheme import IntersectionArray

if TYPE_CHECKING:
    from collections.abc import Callable, Sequence
    from ..shared import Tolerances


_LOG = "graphs"


@dataclass(kw_only=True, frozen=True, slots=True, eq=False)
class ExplicitGraph:
    """
    A small connected graph with its adjacency and all-pairs distance matrices
    """

    name: str
    A: np.ndarray
    D: np.ndarray
    d: int

    @property
    def n(self) -> int:
        return self.A.shape[0]

    @classmethod
    def from_adjacency(cls, A: np.ndarray, name: str) -> ExplicitGraph:
        """
        :raises NotDistanceRegular: if the graph is not connected
        """
        A = np.asarray(A, dtype=np.int8)
        dist = shortest_path(A, method="D", unweighted=True, directed=False)
        if not np.isfinite(dist).all():
            raise NotDistanceRegular(f"{name} is not connected")
        D = dist.astype(np.int64)
        for i in (A, D):
            i.setflags(write=False)
        getLogger(_LOG).debug("Built %s: n=%d, diameter %d", name, len(A), D.max())
        return cls(name=name, A=A, D=D, d=int(D.max()))

    @classmethod
    def from_networkx(cls, g: nx.Graph, name: str) -> ExplicitGraph:
        return cls.from_adjacency(nx.to_numpy_array(g, dtype=np.int8), name)


def _subsets(n: int, d: int) -> np.ndarray:
    """
    The incidence matrix of all d-subsets of range(n), one row per subset
    """
    ret = np.zeros((comb(n, d), n), dtype=np.float64)
    for row, s in enumerate(combinations(range(n), d)):
        ret[row, list(s)] = 1
    return ret


def _hamming(d: int, q: int) -> np.ndarray:
    words = np.array(list(product(range(q), repeat=d)), dtype=np.int64)
    return ((words[:, None, :] != words[None, :, :]).sum(axis=-1) == 1).astype(np.int8)


def _johnson(n: int, d: int) -> np.ndarray:
    M = _subsets(n, d)
    return np.rint(M @ M.T).astype(np.int64) == d - 1


def _odd(d: int) -> np.ndarray:
    M = _subsets(2 * d + 1, d)
    return np.rint(M @ M.T).astype(np.int64) == 0


@dataclass(kw_only=True, frozen=True, slots=True)
class _Kind:
    params: tuple[str, ...]
    size: Callable[..., int]
    valid: Callable[..., bool]
    build: Callable[..., np.ndarray | nx.Graph]


GRAPH_KINDS: dict[str, _Kind] = {
    "hypercube": _Kind(params=("d",), size=lambda d: 2**d, valid=lambda d: d >= 1, build=nx.hypercube_graph),
    "hamming": _Kind(
        params=("d", "q"), size=lambda d, q: q**d, valid=lambda d, q: d >= 1 and q >= 2, build=_hamming
    ),
    "johnson": _Kind(params=("n", "d"), size=comb, valid=lambda n, d: 1 <= d and 2 * d <= n, build=_johnson),
    "odd": _Kind(params=("d",), size=lambda d: comb(2 * d + 1, d), valid=lambda d: d >= 1, build=_odd),
    "cycle": _Kind(params=("n",), size=lambda n: n, valid=lambda n: n >= 3, build=nx.cycle_graph),
    "path": _Kind(params=("n",), size=lambda n: n, valid=lambda n: n >= 2, build=nx.path_graph),
    "petersen": _Kind(params=(), size=lambda: 10, valid=lambda: True, build=nx.petersen_graph),
    "icosahedron": _Kind(params=(), size=lambda: 12, valid=lambda: True, build=nx.icosahedral_graph),
}


def build_graph(kind: str, params: Sequence[int], *, tol: Tolerances = TOL) -> ExplicitGraph:
    """
    Construct a small explicit graph
    :raises UnknownFamily: on an unknown kind
    :raises FamilyParameterError: on bad parameters
    :raises GraphTooLarge: if the graph would exceed tol.max_vertices
    """
    if (k := GRAPH_KINDS.get(kind)) is None:
        raise UnknownFamily(f"Unknown graph kind {kind!r}; known: {listing(sorted(GRAPH_KINDS), ',', 'and')}")
    if len(params) != len(k.params) or not k.valid(*params):
        want = listing(list(k.params), ",", "and") if k.params else "no parameters"
        raise FamilyParameterError(f"Bad parameters {tuple(params)} for {kind}; takes {want}")
    if (n := k.size(*params)) > tol.max_vertices:
        raise GraphTooLarge(f"{kind}{tuple(params)} has {n} vertices, over the cap of {tol.max_vertices}")
    name = f"{kind}({','.join(map(str, params))})"
    g = k.build(*params)
    if isinstance(g, nx.Graph):
        return ExplicitGraph.from_networkx(g, name)
    return ExplicitGraph.from_adjacency(g, name)


def extract_ia(g: ExplicitGraph) -> IntersectionArray:
    """
    Count, for every pair (x, y) at distance i, the neighbors of y at distance i-1 and i+1 from x
    :raises NotDistanceRegular: with the first pair whose counts differ from the rest of its class
    """
    A = g.A.astype(np.float64)
    N = [np.rint((g.D == t).astype(np.float64) @ A).astype(np.int64) for t in range(g.d + 1)]
    b: list[int] = []
    c: list[int] = []

    def count(i: int, t: int, what: str) -> int:
        mask = g.D == i
        vals = N[t][mask]
        if (bad := np.flatnonzero(vals != vals[0])).size:
            x, y = np.argwhere(mask)[bad[0]]
            raise NotDistanceRegular(f"{g.name}: {what} is not constant", (int(x), int(y)))
        return int(vals[0])

    for i in range(g.d + 1):
        if i < g.d:
            b.append(count(i, i + 1, f"b_{i}"))
        if i > 0:
            c.append(count(i, i - 1, f"c_{i}"))
    ret = IntersectionArray(b=tuple(b), c=tuple(c), name=g.name)
    getLogger(_LOG).debug("%s is distance-regular: %s", g.name, ret)
    return ret
