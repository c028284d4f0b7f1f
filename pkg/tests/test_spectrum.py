from importlib import import_module
from fractions import Fraction

import numpy as np
import pytest

from drgdist.shared import EigenvalueMismatch, DegenerateSpectrum, Tolerances
from drgdist.scheme import (
    parse_intersection_array,
    characteristic_polynomial,
    cosine_sequence,
    eigenvalues,
    spectrum,
    recurrence_residuals,
)
from drgdist.families import hermitian_eigenvalues, hermitian_cosines, hermitian_w_d

from .conftest import ARRAYS, HYPERCUBE_4, GOLAY_1, build


class TestEigenvalues:
    def test_petersen(self, petersen):
        assert eigenvalues(petersen) == pytest.approx([3, 1, -2])

    def test_cube(self, cube):
        assert eigenvalues(cube) == pytest.approx([3, 1, -1, -3])

    def test_largest_is_exactly_k(self):
        ia = parse_intersection_array(GOLAY_1)
        assert eigenvalues(ia)[0] == 22

    def test_characteristic_polynomial(self, petersen, cube):
        for ia in (petersen, cube):
            roots = np.sort(characteristic_polynomial(ia).roots().real)[::-1]
            assert roots == pytest.approx(eigenvalues(ia), abs=1e-9)

    def test_collision(self, petersen):
        with pytest.raises(DegenerateSpectrum):
            eigenvalues(petersen, tol=Tolerances(separation_rel=1.0))


class TestCosines:
    def test_petersen(self, petersen):
        assert cosine_sequence(petersen, 1) == pytest.approx([1, 1 / 3, -1 / 3])
        assert cosine_sequence(petersen, -2) == pytest.approx([1, -2 / 3, 1 / 6])

    def test_snaps_to_eigenvalue(self, petersen):
        assert cosine_sequence(petersen, 1 + 1e-8) == pytest.approx([1, 1 / 3, -1 / 3])

    def test_trivial(self, cube):
        assert cosine_sequence(cube, 3) == pytest.approx([1, 1, 1, 1])

    def test_mismatch(self, petersen):
        with pytest.raises(EigenvalueMismatch):
            cosine_sequence(petersen, 0.5)

    def test_read_only(self, petersen):
        w = cosine_sequence(petersen, 1)
        with pytest.raises(ValueError):
            w[0] = 2


class TestSpectrum:
    def test_petersen(self, petersen):
        spec = spectrum(petersen)
        assert spec.d == 2 and spec.k == 3
        assert spec.theta == pytest.approx([3, 1, -2])
        assert spec.m == pytest.approx([1, 5, 4])
        assert spec.W[1] == pytest.approx([1, 1 / 3, -1 / 3])

    def test_cube(self, cube):
        assert spectrum(cube).m == pytest.approx([1, 3, 3, 1])

    def test_hypercube(self):
        assert spectrum(parse_intersection_array(HYPERCUBE_4)).m == pytest.approx([1, 4, 6, 4, 1])

    def test_multiplicities_sum_to_n(self):
        ia = parse_intersection_array(GOLAY_1)
        assert spectrum(ia).m.sum() == pytest.approx(float(ia.n))

    def test_cached(self, petersen):
        assert spectrum(petersen) is spectrum(parse_intersection_array("{3,2;1,1}"))

    def test_read_only(self, cube):
        spec = spectrum(cube)
        for i in (spec.theta, spec.W, spec.m):
            assert not i.flags.writeable

    def test_wrong_sign_warns(self, petersen, monkeypatch, caplog):
        module = import_module("drgdist.scheme.spectrum")
        real = module._cosines

        def flipped(ia, theta):
            w = real(ia, theta)
            w[-1] = -w[-1]
            return w

        monkeypatch.setattr(module, "_cosines", flipped)
        spectrum.cache_clear()
        try:
            spectrum(petersen)
        finally:
            spectrum.cache_clear()
        assert "wrong sign" in caplog.text


class TestHermitian:
    """
    The closed-form eigenmatrix of the Hermitian forms graphs against the recurrence
    """

    @pytest.mark.parametrize(
        "d, q, text",
        [(2, 2, "{5,4;1,2}"), (3, 2, "{21,20,16;1,2,12}"), (2, 3, "{20,18;1,6}")],
    )
    def test_eigenvalues_and_w_d(self, d, q, text):
        spec = spectrum(parse_intersection_array(text))
        formula = hermitian_eigenvalues(d, q)
        assert sorted(map(float, formula), reverse=True) == pytest.approx(spec.theta.tolist())
        for i, theta in enumerate(formula):
            j = int(np.abs(spec.theta - float(theta)).argmin())
            assert float(hermitian_w_d(d, q, i)) == pytest.approx(spec.W[j][d])

    def test_cosines(self):
        spec = spectrum(parse_intersection_array("{5,4;1,2}"))
        assert hermitian_eigenvalues(2, 2) == [5, -3, 1]
        W = hermitian_cosines(2, 2)
        assert W[2] == [1, Fraction(1, 5), Fraction(-1, 5)]
        for row, theta in zip(W, hermitian_eigenvalues(2, 2)):
            j = int(np.abs(spec.theta - float(theta)).argmin())
            assert [float(i) for i in row] == pytest.approx(spec.W[j].tolist())


@pytest.mark.parametrize("source", ARRAYS)
class TestInvariants:
    def test_recurrence_residuals(self, source):
        ia = build(source)
        spec = spectrum(ia)
        for theta, w in zip(spec.theta, spec.W):
            assert recurrence_residuals(ia, float(theta), w).max() <= 1e-9 * ia.k

    def test_last_cosine_alternates(self, source):
        W = spectrum(build(source)).W
        assert (np.sign(W[:, -1]) == (-1) ** np.arange(len(W))).all()

    def test_multiplicities_sum_to_n(self, source):
        ia = build(source)
        assert spectrum(ia).m.sum() == pytest.approx(float(ia.n), rel=1e-6)

    def test_orthogonality(self, source):
        ia = build(source)
        W = spectrum(ia).W
        gram = (W * np.array([float(i) for i in ia.k_dist])) @ W.T
        off = gram[~np.eye(len(W), dtype=bool)]
        assert np.abs(off).max() <= 1e-6 * float(ia.n)
