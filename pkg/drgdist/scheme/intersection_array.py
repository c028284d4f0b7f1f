from __future__ import annotations
from dataclasses import dataclass, field
from typing import TYPE_CHECKING
from fractions import Fraction
from logging import getLogger
import re

from ..shared import TOL, ParseError, InvalidArray

if TYPE_CHECKING:
    from collections.abc import Iterable
    from ..shared import Tolerances
    from .spectrum import Spectrum


_LOG = "intersection_array"
_TOKEN = re.compile(r"\s*(?:(?P<int>[+-]?\d+)|(?P<punct>[{},;])|(?P<bad>\S))")


@dataclass(kw_only=True, frozen=True, slots=True)
class IntersectionArray:
    """
    The intersection array {b_0, ..., b_{d-1}; c_1, ..., c_d} of a distance-regular graph
    Derived quantities are exact: a_i are integers, k_i and n are Fractions
    """

    b: tuple[int, ...]
    c: tuple[int, ...]
    name: str = field(default="", compare=False)
    d: int = field(init=False)
    k: int = field(init=False)
    a: tuple[int, ...] = field(init=False)
    k_dist: tuple[Fraction, ...] = field(init=False)
    n: Fraction = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "b", tuple(self.b))
        object.__setattr__(self, "c", tuple(self.c))
        if len(self.b) != len(self.c):
            raise InvalidArray(f"b-part has {len(self.b)} entries but c-part has {len(self.c)}")
        if not self.b:
            raise InvalidArray("Diameter must be at least 1")
        if bad := [i for i in self.b + self.c if i <= 0]:
            raise InvalidArray(f"Intersection numbers must be positive, got {bad[0]}")
        if self.c[0] != 1:
            raise InvalidArray(f"c_1 must be 1, got {self.c[0]}")
        d, k = len(self.b), self.b[0]
        bf, cf = self.b + (0,), (0,) + self.c
        a = tuple(k - bf[i] - cf[i] for i in range(d + 1))
        if (neg := next((i for i, x in enumerate(a) if x < 0), None)) is not None:
            raise InvalidArray(f"a_{neg} = {a[neg]} < 0 (k < b_{neg} + c_{neg})")
        kd = [Fraction(1)]
        for i in range(d):
            kd.append(kd[-1] * self.b[i] / self.c[i])
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "k_dist", tuple(kd))
        object.__setattr__(self, "n", sum(kd, Fraction(0)))

    @property
    def b_full(self) -> tuple[int, ...]:
        """
        b_0, ..., b_d with b_d = 0
        """
        return self.b + (0,)

    @property
    def c_full(self) -> tuple[int, ...]:
        """
        c_0, ..., c_d with c_0 = 0
        """
        return (0,) + self.c

    def __str__(self) -> str:
        return format_intersection_array(self)

    def label(self) -> str:
        return f"{self.name} : {self}" if self.name else str(self)


def format_intersection_array(ia: IntersectionArray) -> str:
    """
    The canonical string form, ex. {3,2;1,1}
    """
    return "{" + ",".join(map(str, ia.b)) + ";" + ",".join(map(str, ia.c)) + "}"


_DESCRIBE = {"{": "'{'", "}": "'}'", ",": "','", ";": "';'", "int": "an integer"}


def parse_intersection_array(text: str, *, name: str = "") -> IntersectionArray:
    """
    Parse an array of the form '{' int (',' int)* ';' int (',' int)* '}'
    Whitespace between tokens is ignored
    :raises ParseError: on syntax errors
    :raises InvalidArray: when the numbers violate an intersection array invariant
    """
    halves: list[list[int]] = [[]]
    expect: tuple[str, ...] = ("{",)
    end = 0
    for m in _TOKEN.finditer(text):
        pos = m.start(m.lastgroup)
        if m.group("bad") is not None:
            raise ParseError(f"Unexpected character {m.group('bad')!r}", text, pos)
        if not expect:
            raise ParseError("Trailing characters after '}'", text, pos)
        tok = m.group("punct") or "int"
        if tok not in expect:
            want = " or ".join(_DESCRIBE[i] for i in expect)
            raise ParseError(f"Expected {want}, got {_DESCRIBE[tok]}", text, pos)
        match tok:
            case "int":
                halves[-1].append(int(m.group("int")))
                expect = (",", ";") if len(halves) == 1 else (",", "}")
            case ";":
                halves.append([])
                expect = ("int",)
            case "}":
                expect = ()
            case _:
                expect = ("int",)
        end = m.end()
    if expect:
        want = " or ".join(_DESCRIBE[i] for i in expect)
        raise ParseError(f"Unexpected end of input, expected {want}", text, end)
    b, c = halves
    getLogger(_LOG).debug("Parsed b=%s c=%s", b, c)
    return IntersectionArray(b=tuple(b), c=tuple(c), name=name)


#
# Corpus files
#


@dataclass(kw_only=True, frozen=True, slots=True)
class CorpusLine:
    """
    One non-empty, non-comment line of a corpus file
    Exactly one of ia and error is set
    """

    line_no: int
    text: str
    name: str
    ia: IntersectionArray | None = None
    error: ParseError | InvalidArray | None = None


def read_corpus(lines: Iterable[str]) -> list[CorpusLine]:
    """
    Read corpus lines of the form [name :] {b...; c...} [# comment]
    Parse errors are recorded per line; processing continues
    """
    log = getLogger(_LOG)
    ret: list[CorpusLine] = []
    for no, raw in enumerate(lines, start=1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        name, body = "", text
        if (brace := text.find("{")) > 0 and ":" in text[:brace]:
            name, body = (i.strip() for i in text.split(":", 1))
        try:
            ia = parse_intersection_array(body, name=name)
            ret.append(CorpusLine(line_no=no, text=text, name=name, ia=ia))
        except (ParseError, InvalidArray) as e:
            log.warning("Line %d: %s", no, str(e).split("\n", 1)[0])
            ret.append(CorpusLine(line_no=no, text=text, name=name, error=e))
    log.info("Read %d corpus lines", len(ret))
    return ret


#
# Classification
#


@dataclass(kw_only=True, frozen=True, slots=True)
class FeasibilityReport:
    """
    The minimal feasibility battery of an intersection array
    """

    k_integral: bool
    n_integral: bool
    b_nonincreasing: bool
    c_nondecreasing: bool
    multiplicities_integral: bool
    multiplicities: tuple[float, ...]

    @property
    def ok(self) -> bool:
        return not self.failures()

    def failures(self) -> list[str]:
        names = ("k_integral", "n_integral", "b_nonincreasing", "c_nondecreasing", "multiplicities_integral")
        return [i for i in names if not getattr(self, i)]


def is_feasible(ia: IntersectionArray, spec: Spectrum, *, tol: Tolerances = TOL) -> FeasibilityReport:
    """
    Check integrality of k_i, n and the multiplicities, and monotonicity of b_i and c_i
    """
    ret = FeasibilityReport(
        k_integral=all(i.denominator == 1 for i in ia.k_dist),
        n_integral=ia.n.denominator == 1,
        b_nonincreasing=all(x >= y for x, y in zip(ia.b, ia.b[1:])),
        c_nondecreasing=all(x <= y for x, y in zip(ia.c, ia.c[1:])),
        multiplicities_integral=all(abs(m - round(m)) <= tol.multiplicity_abs for m in spec.m),
        multiplicities=tuple(float(m) for m in spec.m),
    )
    if not ret.ok:
        getLogger(_LOG).debug("%s fails feasibility: %s", ia, ret.failures())
    return ret


def is_antipodal(ia: IntersectionArray) -> int | None:
    """
    Antipodal iff b_i = c_{d-i} for all i except possibly floor(d/2)
    :return: The cover index r = k_d + 1 (the fiber size) if antipodal, else None
    """
    bf, cf, d = ia.b_full, ia.c_full, ia.d
    if any(bf[i] != cf[d - i] for i in range(d + 1) if i != d // 2):
        return None
    if (kd := ia.k_dist[d]).denominator != 1:
        getLogger(_LOG).debug("%s matches the antipodal pattern but k_d = %s is not integral", ia, kd)
        return None
    return int(kd) + 1


def is_bipartite(ia: IntersectionArray) -> bool:
    return all(i == 0 for i in ia.a)
