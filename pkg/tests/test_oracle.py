from math import inf

import pytest

from drgdist.shared import Tolerances, GraphTooLarge, UnknownFamily, FamilyParameterError, NotDistanceRegular
from drgdist.scheme import parse_intersection_array, analyze
from drgdist.oracle import build_graph, extract_ia, spectral_embedding_check


class TestGraphs:
    @pytest.mark.parametrize(
        "kind, params, text",
        [
            ("petersen", [], "{3,2;1,1}"),
            ("icosahedron", [], "{5,2,1;1,2,5}"),
            ("hypercube", [2], "{2,1;1,2}"),
            ("hypercube", [3], "{3,2,1;1,2,3}"),
            ("hypercube", [4], "{4,3,2,1;1,2,3,4}"),
            ("hypercube", [5], "{5,4,3,2,1;1,2,3,4,5}"),
            ("hypercube", [6], "{6,5,4,3,2,1;1,2,3,4,5,6}"),
            ("hamming", [2, 3], "{4,2;1,2}"),
            ("hamming", [3, 3], "{6,4,2;1,2,3}"),
            ("johnson", [5, 2], "{6,2;1,4}"),
            ("johnson", [6, 3], "{9,4,1;1,4,9}"),
            ("johnson", [7, 3], "{12,6,2;1,4,9}"),
            ("odd", [3], "{4,3,3;1,1,2}"),
            ("cycle", [6], "{2,1,1;1,1,2}"),
        ],
    )
    def test_extract(self, kind, params, text):
        g = build_graph(kind, params)
        assert extract_ia(g) == parse_intersection_array(text)
        assert g.name == f"{kind}({','.join(map(str, params))})"

    def test_distances(self):
        g = build_graph("cycle", [5])
        assert g.n == 5
        assert g.d == 2
        assert (g.D == g.D.T).all()
        assert not g.D.flags.writeable

    def test_not_distance_regular(self):
        with pytest.raises(NotDistanceRegular) as e:
            extract_ia(build_graph("path", [4]))
        assert e.value.pair == (1, 1)

    def test_unknown(self):
        with pytest.raises(UnknownFamily):
            build_graph("nope", [])

    @pytest.mark.parametrize("kind, params", [("hamming", [3]), ("johnson", [4, 3]), ("petersen", [1])])
    def test_bad_params(self, kind, params):
        with pytest.raises(FamilyParameterError):
            build_graph(kind, params)

    def test_too_large(self):
        with pytest.raises(GraphTooLarge):
            build_graph("odd", [7])
        with pytest.raises(GraphTooLarge):
            build_graph("hypercube", [6], tol=Tolerances(max_vertices=32))


class TestEmbedding:
    @pytest.mark.parametrize(
        "kind, params, expected",
        [
            ("petersen", [], 2),
            *(("hypercube", [d], d) for d in range(2, 7)),
            ("hamming", [2, 3], 2),
            ("odd", [3], 27 / 7),
            ("johnson", [5, 2], 2),
            ("johnson", [7, 3], 3),
            ("cycle", [6], 9 / 4),
        ],
    )
    def test_theta_1(self, kind, params, expected):
        g = build_graph(kind, params)
        check = spectral_embedding_check(g, 1)
        assert check.ok()
        assert check.injective
        assert check.expansion == pytest.approx(1, abs=1e-9)
        assert check.cosine_deviation <= 1e-7
        assert check.distortion_sq == pytest.approx(expected, rel=1e-7)
        assert check.distortion_sq == pytest.approx(analyze(extract_ia(g)).embedding_distortion_sq, rel=1e-7)
        assert check.realized == pytest.approx(check.predicted)

    def test_petersen(self):
        check = spectral_embedding_check(build_graph("petersen", []), 1)
        assert check.theta == pytest.approx(1)
        assert check.multiplicity == 5
        assert check.predicted == pytest.approx([1, 2**0.5])

    def test_other_eigenspace(self):
        check = spectral_embedding_check(build_graph("petersen", []), 2)
        assert check.theta == pytest.approx(-2)
        assert check.multiplicity == 4
        assert check.ok()

    def test_theta_index_range(self):
        with pytest.raises(ValueError):
            spectral_embedding_check(build_graph("petersen", []), 3)

    def test_path(self):
        with pytest.raises(NotDistanceRegular):
            spectral_embedding_check(build_graph("path", [4]), 1)

    def test_antipodal_collapse(self):
        # Antipodal vertices of the cube share an image on the theta_2 eigenspace
        check = spectral_embedding_check(build_graph("hypercube", [3]), 2)
        assert check.ok()
        assert not check.injective
        assert check.distortion_sq == inf
        assert check.predicted[-1] == pytest.approx(0, abs=1e-6)
