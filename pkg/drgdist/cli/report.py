from __future__ import annotations
from dataclasses import dataclass, asdict, fields
from typing import TYPE_CHECKING, Any
from json import loads, dumps
from math import inf, isinf

from ..shared import TOL, NotAntipodal, fmt_value, rel_close
from ..scheme import (
    format_intersection_array,
    antipodal_counterexample_check,
    is_bipartite,
    is_feasible,
    spectrum,
    analyze,
    verdict,
)

if TYPE_CHECKING:
    from typing import Self
    from ..scheme import IntersectionArray, DistortionReport, ConjectureVerdict, FeasibilityReport
    from ..shared import Tolerances


# pylint: disable=too-many-instance-attributes
@dataclass(kw_only=True, frozen=True, slots=True)
class Report:
    """
    Everything the CLI prints about one intersection array
    Every field is a plain value so the record survives a JSON round trip
    """

    source: str
    array: str
    d: int
    k: int
    n: str
    cover_index: int | None
    bipartite: bool
    feasible: bool
    feasibility_failures: tuple[str, ...]
    multiplicities: tuple[float, ...]
    embedding_distortion_sq: float
    most_contracted_r: int
    bound_table: tuple[tuple[float, ...], ...]
    lower_bound_sq_per_r: tuple[float, ...]
    best_lower_bound_sq: float
    best_r: int
    diameter_bound_sq: float
    small_r_wins: bool
    certified: bool
    c2_sq_exact: str | None
    beats_diameter_bound: bool
    antipodal_criterion: bool | None
    conj1_holds: bool
    conj1_argmin_r: int
    conj2_holds: bool
    conj2_witness: tuple[int, int] | None
    conj3_holds: bool
    antipodal_consistent: bool
    closed_form_c2_sq: float | None = None
    closed_form_agrees: bool | None = None

    @property
    def c2_sq(self) -> float | tuple[float, float]:
        if self.certified:
            return self.embedding_distortion_sq
        return (self.best_lower_bound_sq, self.embedding_distortion_sq)

    @property
    def conjectures_hold(self) -> bool:
        return self.conj1_holds and self.conj2_holds and self.conj3_holds and self.antipodal_consistent

    @classmethod
    def build(
        cls,
        source: str,
        ia: IntersectionArray,
        report: DistortionReport,
        verdict_: ConjectureVerdict,
        feasibility: FeasibilityReport,
        *,
        closed_form: float | None = None,
        tol: Tolerances = TOL,
    ) -> Self:
        """
        Flatten the per-module records into one Report
        closed_form is compared against the embedding distortion, the upper end of the c_2(G)^2 interval
        """
        try:
            criterion: bool | None = antipodal_counterexample_check(ia, spectrum(ia, tol=tol), tol=tol)
        except NotAntipodal:
            criterion = None
        exact = report.c2_sq_exact(tol=tol)
        beats = report.best_lower_bound_sq > report.diameter_bound_sq and not rel_close(
            report.best_lower_bound_sq, report.diameter_bound_sq, tol.certify_rel
        )
        return cls(
            source=source,
            array=format_intersection_array(ia),
            d=ia.d,
            k=ia.k,
            n=str(ia.n),
            cover_index=report.cover_index,
            bipartite=is_bipartite(ia),
            feasible=feasibility.ok,
            feasibility_failures=tuple(feasibility.failures()),
            multiplicities=feasibility.multiplicities,
            embedding_distortion_sq=report.embedding_distortion_sq,
            most_contracted_r=report.most_contracted_r,
            bound_table=report.bound_table,
            lower_bound_sq_per_r=report.lower_bound_sq_per_r,
            best_lower_bound_sq=report.best_lower_bound_sq,
            best_r=report.best_r,
            diameter_bound_sq=report.diameter_bound_sq,
            small_r_wins=report.small_r_wins,
            certified=report.certified,
            c2_sq_exact=None if exact is None else str(exact),
            beats_diameter_bound=report.certified and beats,
            antipodal_criterion=criterion,
            conj1_holds=verdict_.conj1_holds,
            conj1_argmin_r=verdict_.conj1_argmin_r,
            conj2_holds=verdict_.conj2_holds,
            conj2_witness=verdict_.conj2_witness,
            conj3_holds=verdict_.conj3_holds,
            antipodal_consistent=verdict_.antipodal_consistent,
            closed_form_c2_sq=closed_form,
            closed_form_agrees=(
                None
                if closed_form is None
                else rel_close(closed_form, report.embedding_distortion_sq, tol.certify_rel)
            ),
        )

    #
    # Structured output
    #

    def to_dict(self) -> dict[str, Any]:
        """
        +inf is stored as None
        """
        ret = asdict(self)
        ret["bound_table"] = [[None if isinf(i) else i for i in row] for row in self.bound_table]
        return ret

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> Self:
        kw = {i.name: d[i.name] for i in fields(cls) if i.name in d}
        kw["bound_table"] = tuple(tuple(inf if i is None else i for i in row) for row in d["bound_table"])
        for i in ("feasibility_failures", "multiplicities", "lower_bound_sq_per_r"):
            kw[i] = tuple(kw[i])
        if kw["conj2_witness"] is not None:
            kw["conj2_witness"] = tuple(kw["conj2_witness"])
        return cls(**kw)

    def dumps(self) -> str:
        return dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def loads(cls, text: str) -> Self:
        return cls.from_dict(loads(text))

    #
    # Human output
    #

    def table(self, *, all_r: bool = False, tol: Tolerances = TOL) -> str:
        """
        A fixed-width key : value rendering; all_r adds the full (r, j) bound table
        """
        fmt = lambda x: fmt_value(x, tol=tol)
        if self.certified:
            c2 = self.c2_sq_exact or fmt(self.embedding_distortion_sq)
        else:
            c2 = f"[{fmt(self.best_lower_bound_sq)}, {fmt(self.embedding_distortion_sq)}]"
        emb = f"{fmt(self.embedding_distortion_sq)} at r = {self.most_contracted_r}"
        argmin = self.conj1_argmin_r
        rows: list[tuple[str, str]] = [
            ("source", self.source),
            ("array", self.array),
            ("d, k, n", f"{self.d}, {self.k}, {self.n}"),
            ("antipodal", "no" if self.cover_index is None else f"{self.cover_index}-cover"),
            ("bipartite", "yes" if self.bipartite else "no"),
            ("feasible", "yes" if self.feasible else f"NO ({', '.join(self.feasibility_failures)})"),
            ("c2^2", c2 + ("" if self.certified else " (not certified)")),
            ("embedding distortion^2", emb),
            ("best lower bound^2", f"{fmt(self.best_lower_bound_sq)} at r = {self.best_r}"),
            ("r = d bound^2", fmt(self.diameter_bound_sq)),
            ("beats r = d bound", "yes" if self.beats_diameter_bound else "no"),
        ]
        if self.antipodal_criterion is not None:
            rows.append(("antipodal criterion", "fires" if self.antipodal_criterion else "does not fire"))
        if self.small_r_wins:
            rows.append(("small r wins", "YES"))
        rows += [
            ("conjecture 1", f"{'holds' if self.conj1_holds else 'FAILS'} (argmin r = {argmin})"),
            ("conjecture 2", "holds" if self.conj2_holds else f"FAILS (r, j = {self.conj2_witness})"),
            ("conjecture 3", "holds" if self.conj3_holds else "FAILS"),
            ("antipodal consistent", "yes" if self.antipodal_consistent else "NO"),
        ]
        if self.closed_form_c2_sq is not None:
            mark = "matches" if self.closed_form_agrees else "MISMATCH"
            rows.append(("closed form c2^2", f"{fmt(self.closed_form_c2_sq)} ({mark})"))
        width = max(len(i) for i, _ in rows)
        out = "\n".join(f"{i.ljust(width)} : {k}" for i, k in rows)
        if all_r:
            out += "\n" + bound_table_str(self.bound_table, tol=tol)
        return out


def bound_table_str(table: tuple[tuple[float, ...], ...], *, tol: Tolerances = TOL) -> str:
    """
    Rows are r, columns are j, both from 1
    """
    cells = [[fmt_value(i, exact=False, tol=tol) for i in row] for row in table]
    width = max(8, *(len(i) for row in cells for i in row))
    head = "r \\ j " + " ".join(str(j).rjust(width) for j in range(1, len(table[0]) + 1))
    body = [f"{r:<5} " + " ".join(i.rjust(width) for i in row) for r, row in enumerate(cells, start=1)]
    return "\n".join([head, *body])


def analyze_report(
    source: str, ia: IntersectionArray, *, closed_form: float | None = None, tol: Tolerances = TOL
) -> Report:
    """
    Run every check on ia and collect the results
    """
    report = analyze(ia, tol=tol)
    feasibility = is_feasible(ia, spectrum(ia, tol=tol), tol=tol)
    v = verdict(ia, tol=tol, report=report)
    return Report.build(source, ia, report, v, feasibility, closed_form=closed_form, tol=tol)
