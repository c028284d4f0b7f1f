from __future__ import annotations
from dataclasses import dataclass, asdict
from typing import TYPE_CHECKING, Any
from importlib.resources import files
from fractions import Fraction
from logging import getLogger
from json import dumps

from ..shared import TOL, fmt_value, rel_close
from ..scheme import parse_intersection_array, is_feasible, spectrum, analyze
from ..families import closed_form_row, family_ia

if TYPE_CHECKING:
    from ..shared import Tolerances


_LOG = "tables"
_DECIMAL_REL: float = 1e-5
CORPUS_FILE = "antipodal_arrays.txt"

# (v, intersection array, printed c_2(G)^2); a leading ~ marks a rounded decimal
_ANTIPODAL: tuple[tuple[int, str, str], ...] = (
    (1104, "{76,75,6,1;1,6,75,76}", "~7.14773"),
    (1600, "{85,84,5,1;1,5,84,85}", "~7.23867"),
    (1568, "{116,115,10,1;1,10,115,116}", "~7.47073"),
    (1232, "{135,128,18,1;1,18,128,135}", "36/5"),
    (1850, "{154,150,15,1;1,15,150,154}", "15/2"),
    (2000, "{243,224,36,1;1,36,224,243}", "36/5"),
    (2048, "{22,21,20,3,2,1;1,2,3,20,21,22}", "35/3"),
)
_BIPARTITE: tuple[tuple[int, str, str], ...] = (
    (704, "{26,25,24,2,1;1,2,24,25,26}", "10"),
    (420, "{33,32,27,6,1;1,6,27,32,33}", "64/7"),
    (704, "{36,35,32,4,1;1,4,32,35,36}", "112/11"),
    (1408, "{37,36,35,2,1;1,2,35,36,37}", "120/11"),
    (532, "{45,44,36,9,1;1,9,36,44,45}", "176/19"),
    (784, "{46,45,40,6,1;1,6,40,45,46}", "72/7"),
    (1276, "{49,48,45,4,1;1,4,45,48,49}", "320/29"),
    (1300, "{55,54,50,5,1;1,5,50,54,55}", "144/13"),
    (648, "{57,56,45,12,1;1,12,45,56,57}", "28/3"),
    (1104, "{76,75,64,12,1;1,12,64,75,76}", "240/23"),
    (1600, "{85,84,75,10,1;1,10,75,84,85}", "56/5"),
    (1334, "{96,95,80,16,1;1,16,80,95,96}", "304/29"),
    (1568, "{116,115,96,20,1;1,20,96,115,116}", "368/35"),
    (4114, "{16,15,15,14,2,1,1;1,1,2,14,15,15,16}", "180/11"),
    (2048, "{22,21,20,16,6,2,1;1,2,6,16,20,21,22}", "27/2"),
    (4096, "{23,22,21,20,3,2,1;1,2,3,20,21,22,23}", "63/4"),
    (19140, "{105,104,100,75,30,5,1;1,5,30,75,100,104,105}", "468/29"),
)

# (family, parameters); every instance of the b >= 1 and b <= -1 closed-form tables
_CLASSICAL: tuple[tuple[str, tuple[int | str, ...]], ...] = (
    ("hamming", (3, 2)),
    ("hamming", (4, 3)),
    ("johnson", (7, 3)),
    ("halved-cube", (8,)),
    ("doob", (3,)),
    ("grassmann", (2, 6, 3)),
    ("twisted-grassmann", (2, 7, 3)),
    ("bilinear", (2, 3, 2)),
    ("dual-polar", (3, 1, 2)),
    ("dual-polar", (2, "1/2", 4)),
    ("alternating", (4, 2)),
    ("quadratic", (5, 2)),
    ("half-dual-polar", (4, 2)),
    ("symplectic-1or2", (5, 2)),
    ("pseudo-dm", (3, 0, 2)),
    ("gosset", ()),
    ("e77", (2,)),
    ("affine-e6", (2,)),
)
_NEGATIVE_CLASSICAL: tuple[tuple[str, tuple[int | str, ...]], ...] = (
    ("witt-m24", ()),
    ("witt-m23", ()),
    ("ternary-golay", ()),
    ("triality", (2,)),
    ("unitary-dual-polar", (2, 2)),
    ("unitary-dual-polar", (3, 2)),
    ("hermitian", (2, 2)),
    ("hermitian", (3, 2)),
    ("hermitian", (2, 3)),
)
TABLE_IDS: tuple[str, ...] = ("antipodal", "bipartite", "classical", "negative-classical")


@dataclass(kw_only=True, frozen=True, slots=True)
class TableRow:
    """
    One reproduced row: the printed value against the computed one
    """

    table: str
    label: str
    expected: float
    computed: float
    rel: float
    ok: bool
    note: str = ""

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


def _expected(text: str) -> tuple[float, float]:
    """
    :return: The printed value and the relative tolerance it is known to
    """
    if text.startswith("~"):
        return float(text[1:]), _DECIMAL_REL
    return float(Fraction(text)), 0.0


def _corpus_rows(table: str, data: tuple[tuple[int, str, str], ...], tol: Tolerances) -> list[TableRow]:
    ret = []
    for v, text, printed in data:
        ia = parse_intersection_array(text)
        report = analyze(ia, tol=tol)
        expected, rel = _expected(printed)
        rel = max(rel, tol.certify_rel)
        notes = []
        if ia.n != v:
            notes.append(f"v = {ia.n}, printed {v}")
        if not report.certified:
            notes.append("not certified")
        if not is_feasible(ia, spectrum(ia, tol=tol), tol=tol).ok:
            notes.append("infeasible")
        computed = report.embedding_distortion_sq
        ok = not notes and rel_close(computed, expected, rel)
        ret.append(
            TableRow(
                table=table,
                label=text,
                expected=expected,
                computed=computed,
                rel=rel,
                ok=ok,
                note="; ".join(notes),
            )
        )
    return ret


def _closed_form_rows(
    table: str, data: tuple[tuple[str, tuple[int | str, ...]], ...], tol: Tolerances
) -> list[TableRow]:
    ret = []
    for name, params in data:
        row = closed_form_row(name, params, f"table {table}")
        ia = family_ia(name, params)
        report = analyze(ia, tol=tol)
        computed = report.embedding_distortion_sq
        note = "" if report.certified or table == "classical" else "not certified"
        ok = not note and rel_close(computed, row.c2_sq, tol.certify_rel)
        label = f"{name}({','.join(map(str, params))})"
        ret.append(
            TableRow(
                table=table,
                label=label,
                expected=row.c2_sq,
                computed=computed,
                rel=tol.certify_rel,
                ok=ok,
                note=note,
            )
        )
    return ret


def table_rows(table: str, *, tol: Tolerances = TOL) -> list[TableRow]:
    """
    Recompute every row of a reproduced table
    :raises ValueError: on an unknown table id
    """
    match table:
        case "antipodal":
            ret = _corpus_rows(table, _ANTIPODAL, tol)
        case "bipartite":
            ret = _corpus_rows(table, _BIPARTITE, tol)
        case "classical":
            ret = _closed_form_rows(table, _CLASSICAL, tol)
        case "negative-classical":
            ret = _closed_form_rows(table, _NEGATIVE_CLASSICAL, tol)
        case _:
            raise ValueError(f"Unknown table {table!r}")
    if bad := [i.label for i in ret if not i.ok]:
        getLogger(_LOG).error("Table %s: %d mismatching row(s): %s", table, len(bad), bad)
    return ret


def render(rows: list[TableRow], *, tol: Tolerances = TOL) -> str:
    """
    Fixed-width rendering with one match marker per row
    """
    cells = [
        (
            i.table,
            i.label,
            fmt_value(i.expected, exact=i.rel <= tol.certify_rel, tol=tol),
            fmt_value(i.computed, tol=tol),
            "ok" if i.ok else "MISMATCH",
        )
        for i in rows
    ]
    head = ("table", "instance", "printed", "computed", "")
    widths = [max(len(row[c]) for row in (head, *cells)) for c in range(len(head))]
    lines = ["  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in (head, *cells)]
    lines += [f"  {i.label}: {i.note}" for i in rows if i.note]
    return "\n".join(lines)


def render_json(rows: list[TableRow]) -> str:
    return "\n".join(dumps(i.to_dict(), sort_keys=True) for i in rows)


def corpus_text() -> str:
    """
    The shipped corpus of both antipodal tables
    """
    return (files("drgdist") / "data" / CORPUS_FILE).read_text(encoding="utf-8")
