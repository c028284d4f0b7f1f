import pytest

from drgdist.shared import CertificateError
from drgdist.scheme import Spectrum, parse_intersection_array, spectrum, analyze, vallentin_bound_sq
from drgdist.oracle import qalpha_certificate

from .conftest import CORPUS, COUNTEREXAMPLES, HYPERCUBE_4


@pytest.mark.parametrize("text", [HYPERCUBE_4, *(i[0] for i in COUNTEREXAMPLES)])
def test_matches_bound(text):
    ia = parse_intersection_array(text)
    spec = spectrum(ia)
    for r in range(1, ia.d + 1):
        cert = qalpha_certificate(ia, spec, r)
        assert cert.r == r
        assert cert.bound_sq == pytest.approx(vallentin_bound_sq(spec, r))
        assert cert.eigenvalues[0] == 0
        assert min(cert.eigenvalues[1:]) == pytest.approx(0, abs=1e-9 * ia.k)


@pytest.mark.parametrize("name, text, v, expected, rel", CORPUS)
def test_certifies_corpus(name, text, v, expected, rel):
    ia = parse_intersection_array(text, name=name)
    spec = spectrum(ia)
    for r in range(1, ia.d + 1):
        cert = qalpha_certificate(ia, spec, r)
        assert cert.bound_sq == pytest.approx(vallentin_bound_sq(spec, r), rel=1e-9)
        assert min(cert.eigenvalues) >= -1e-9 * ia.k
    report = analyze(ia)
    assert qalpha_certificate(ia, spec, report.best_r).bound_sq == pytest.approx(report.c2_sq, rel=1e-9)


def test_petersen(petersen):
    cert = qalpha_certificate(petersen, spectrum(petersen), 2)
    # alpha* = k_1 (1 - w_1) / (k_2 (1 - w_2)) at theta = 1
    assert cert.alpha_star == pytest.approx(3 * (2 / 3) / (6 * (4 / 3)))
    assert cert.bound_sq == pytest.approx(2)


def test_r_range(petersen):
    with pytest.raises(ValueError):
        qalpha_certificate(petersen, spectrum(petersen), 0)


def test_nonzero_row_sums(petersen):
    spec = spectrum(petersen)
    W = spec.W.copy()
    W[0, 1] = 0.9
    bad = Spectrum(ia=petersen, theta=spec.theta, W=W, m=spec.m)
    with pytest.raises(CertificateError, match="row sum"):
        qalpha_certificate(petersen, bad, 2)
