from fractions import Fraction
from math import inf, sqrt
import json

import pytest

from drgdist.shared import TOL, Tolerances, UsageError, ParseError
from drgdist.shared import rel_close, as_rational, fmt_value, argmax_late


class TestTolerances:
    def test_defaults(self, tmp_path):
        assert Tolerances.load({}, tmp_path / "missing.json") == TOL
        assert Tolerances.load({}, None) == TOL

    def test_precedence(self, tmp_path):
        path = tmp_path / "conf.json"
        path.write_text(json.dumps({"certify_rel": 1e-6, "max_vertices": 50}), encoding="utf-8")
        tol = Tolerances.load({"certify_rel": 1e-4, "unrelated": 3}, path)
        assert tol.certify_rel == 1e-4
        assert tol.max_vertices == 50
        assert tol.match_rel == TOL.match_rel
        assert Tolerances.load({"certify_rel": None}, path).certify_rel == 1e-6

    def test_unknown_key(self, tmp_path):
        path = tmp_path / "conf.json"
        path.write_text(json.dumps({"certify": 1e-6}), encoding="utf-8")
        with pytest.raises(UsageError):
            Tolerances.load({}, path)

    def test_positive(self):
        with pytest.raises(UsageError):
            Tolerances(certify_rel=0)
        with pytest.raises(UsageError):
            Tolerances(max_vertices=-1)

    def test_dumps(self, tmp_path):
        path = tmp_path / "conf.json"
        path.write_text(Tolerances(max_denominator=99).dumps(), encoding="utf-8")
        assert Tolerances.load({}, path).max_denominator == 99
        assert "max_denominator: 99" in str(Tolerances(max_denominator=99))


class TestNumbers:
    def test_rel_close(self):
        assert rel_close(1e9, 1e9 + 0.5, 1e-9)
        assert not rel_close(1e9, 1e9 + 5, 1e-9)
        assert rel_close(0.0, 1e-12, 1e-9)
        assert not rel_close(0.0, 1e-6, 1e-9)

    def test_as_rational(self):
        assert as_rational(35 / 3) == Fraction(35, 3)
        assert as_rational(2.0) == 2
        assert as_rational(468 / 29) == Fraction(468, 29)
        assert as_rational(sqrt(2)) is None
        assert as_rational(9 * (sqrt(68) - 1) / (sqrt(68) + 1)) is None
        assert as_rational(inf) is None

    def test_fmt_value(self):
        assert fmt_value(35 / 3) == "35/3"
        assert fmt_value(3.0) == "3"
        assert fmt_value(35 / 3, exact=False) == "11.6667"
        assert fmt_value(sqrt(2)) == "1.41421"
        assert fmt_value(inf) == "inf"
        assert fmt_value(-inf) == "-inf"

    def test_argmax_late(self):
        assert argmax_late([1.0, 3.0, 2.0], 1e-9) == 1
        assert argmax_late([1.0, 3.0, 3.0 - 1e-12, 2.0], 1e-9) == 2
        assert argmax_late([5.0], 1e-9) == 0


def test_parse_error_caret():
    e = ParseError("Bad", "{3,x}", 3)
    assert str(e).splitlines() == ["Bad at position 3", "  {3,x}", "     ^"]
    assert isinstance(e, UsageError)
