import pytest

from drgdist.shared import ParseError
from drgdist.scheme import (
    ConjectureVerdict,
    CorpusEntry,
    CorpusSummary,
    parse_intersection_array,
    read_corpus,
    check_conjecture1,
    check_conjecture2,
    check_corpus,
    is_feasible,
    analyze,
    spectrum,
    verdict,
)

from .conftest import CORPUS, COUNTEREXAMPLES, CUBE, PETERSEN


class TestVerdict:
    def test_petersen(self, petersen):
        v = verdict(petersen)
        assert v.all_hold
        assert v.conj1_argmin_r == 2
        assert v.conj2_witness is None

    def test_diameter_one(self):
        v = verdict(parse_intersection_array("{4;1}"))
        assert v.all_hold
        assert v.conj1_argmin_r == 1

    def test_conjecture1(self, cube):
        assert check_conjecture1(spectrum(cube)) == (True, 3)

    def test_conjecture2(self, petersen):
        assert check_conjecture2(spectrum(petersen)) == (True, None)

    @pytest.mark.parametrize("name, text, v, expected, rel", CORPUS)
    def test_corpus(self, name, text, v, expected, rel):
        ia = parse_intersection_array(text)
        result = verdict(ia)
        assert result.all_hold
        assert result.conj1_argmin_r == ia.d - 1

    @pytest.mark.parametrize("text", [i[0] for i in COUNTEREXAMPLES])
    def test_counterexamples_are_antipodal(self, text):
        ia = parse_intersection_array(text)
        result = verdict(ia, report=analyze(ia))
        assert result.conj3_holds
        assert result.antipodal_consistent
        assert result.conj1_argmin_r == ia.d - 1


class TestCorpus:
    def test_shipped(self, corpus_lines):
        entries, summary = check_corpus(corpus_lines)
        assert len(entries) == len(CORPUS)
        assert all(i.ok for i in entries)
        assert summary.all_hold
        assert (summary.total, summary.checked, summary.errors) == (24, 24, 0)
        assert summary.certified == 24
        assert summary.infeasible == 0
        assert summary.argmin_d_minus_1 == 24
        assert summary.failed_lines == []

    @pytest.mark.parametrize("workers", [1, 3])
    def test_errors_are_per_line(self, workers):
        lines = ["# three arrays", PETERSEN, "bad : {3,2;1", f"cube : {CUBE}"]
        entries, summary = check_corpus(lines, workers=workers)
        assert [i.line.line_no for i in entries] == [2, 3, 4]
        assert isinstance(entries[1].error, ParseError)
        assert entries[0].ok and entries[2].ok
        assert not entries[1].ok
        assert (summary.total, summary.checked, summary.errors) == (3, 2, 1)
        assert summary.failed_lines == [3]
        assert not summary.all_hold

    def test_failed_verdict(self, petersen):
        line = read_corpus([PETERSEN])[0]
        failing = ConjectureVerdict(
            conj1_holds=False,
            conj1_argmin_r=1,
            conj2_holds=True,
            conj2_witness=None,
            conj3_holds=True,
            antipodal_consistent=False,
        )
        entry = CorpusEntry(
            line=line,
            report=analyze(petersen),
            verdict=failing,
            feasibility=is_feasible(petersen, spectrum(petersen)),
        )
        summary = CorpusSummary()
        summary.add(entry)
        assert not entry.ok
        assert summary.conj1_failures == 1
        assert summary.antipodal_failures == 1
        assert summary.argmin_d_minus_1 == 1
        assert summary.failed_lines == [1]
