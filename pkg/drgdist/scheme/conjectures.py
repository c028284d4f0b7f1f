from __future__ import annotations
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import TYPE_CHECKING
from logging import getLogger

from tqdm.contrib.logging import logging_redirect_tqdm
import numpy as np
import tqdm

from ..shared import TOL, DegenerateSpectrum, rel_close, argmax_late
from .intersection_array import read_corpus, is_feasible, is_antipodal
from .distortion import analyze
from .spectrum import spectrum

if TYPE_CHECKING:
    from collections.abc import Iterable
    from ..shared import Tolerances
    from .intersection_array import CorpusLine, FeasibilityReport, IntersectionArray
    from .distortion import DistortionReport
    from .spectrum import Spectrum


_LOG = "conjectures"


@dataclass(kw_only=True, frozen=True, slots=True)
class ConjectureVerdict:
    """
    Per-instance verdicts on where the canonical embedding is most contracted
    conj1: the minimum of (1 - w_r(theta_1)) / r^2 occurs at r in {d-1, d}
    conj2: for every r >= 2, j = 1 maximizes (1 - w_r(theta_j)) / (1 - w_1(theta_j))
    conj3: c_2(G)^2 is certified by the bound at r in {d-1, d}, with r = d-1 only for antipodal graphs
    """

    conj1_holds: bool
    conj1_argmin_r: int
    conj2_holds: bool
    conj2_witness: tuple[int, int] | None
    conj3_holds: bool
    antipodal_consistent: bool

    @property
    def all_hold(self) -> bool:
        return self.conj1_holds and self.conj2_holds and self.conj3_holds and self.antipodal_consistent


def check_conjecture1(spec: Spectrum, *, tol: Tolerances = TOL) -> tuple[bool, int]:
    """
    :return: Whether min_r (1 - w_r(theta_1)) / r^2 is attained at r in {d-1, d}, and the argmin r
    (ties broken toward the larger r)
    """
    d = spec.d
    r = np.arange(1, d + 1)
    ratios = ((1.0 - spec.W[1, 1:]) / r**2).tolist()
    argmin = argmax_late([-i for i in ratios], tol.certify_rel) + 1
    return rel_close(min(ratios), min(ratios[-2:]), tol.certify_rel), argmin


def check_conjecture2(spec: Spectrum, *, tol: Tolerances = TOL) -> tuple[bool, tuple[int, int] | None]:
    """
    :return: Whether j = 1 maximizes (1 - w_r(theta_j)) / (1 - w_1(theta_j)) over j for every r in 2..d,
    and the first (r, j) where some j != 1 strictly exceeds it
    """
    den = 1.0 - spec.W[1:, 1]
    for r in range(2, spec.d + 1):
        ratios = (1.0 - spec.W[1:, r]) / den
        for j in range(2, spec.d + 1):
            if ratios[j - 1] > ratios[0] and not rel_close(ratios[j - 1], ratios[0], tol.certify_rel):
                getLogger(_LOG).info("%s: j=%d beats j=1 at r=%d", spec.ia, j, r)
                return False, (r, j)
    return True, None


def verdict(
    ia: IntersectionArray, *, tol: Tolerances = TOL, report: DistortionReport | None = None
) -> ConjectureVerdict:
    """
    Check all conjectures on one array; diameter 1 arrays hold vacuously
    """
    d, antipodal = ia.d, is_antipodal(ia) is not None
    if d == 1:
        return ConjectureVerdict(
            conj1_holds=True,
            conj1_argmin_r=1,
            conj2_holds=True,
            conj2_witness=None,
            conj3_holds=True,
            antipodal_consistent=True,
        )
    spec = spectrum(ia, tol=tol)
    report = analyze(ia, tol=tol) if report is None else report
    c1, argmin = check_conjecture1(spec, tol=tol)
    c2, witness = check_conjecture2(spec, tol=tol)
    best_r = report.best_r
    c3 = report.certified and best_r >= d - 1 and (best_r == d or antipodal)
    return ConjectureVerdict(
        conj1_holds=c1,
        conj1_argmin_r=argmin,
        conj2_holds=c2,
        conj2_witness=witness,
        conj3_holds=c3,
        antipodal_consistent=argmin == d or antipodal,
    )


#
# Corpus checking
#


@dataclass(kw_only=True, frozen=True, slots=True)
class CorpusEntry:
    """
    The outcome for one corpus line
    Exactly one of (report, verdict, feasibility) and error is set
    """

    line: CorpusLine
    report: DistortionReport | None = None
    verdict: ConjectureVerdict | None = None
    feasibility: FeasibilityReport | None = None
    error: Exception | None = None

    @property
    def ok(self) -> bool:
        return self.error is None and self.verdict is not None and self.verdict.all_hold


@dataclass(kw_only=True, slots=True)
class CorpusSummary:
    """
    Aggregate counts over a corpus; every count is order independent
    """

    total: int = 0
    checked: int = 0
    errors: int = 0
    infeasible: int = 0
    certified: int = 0
    conj1_failures: int = 0
    conj2_failures: int = 0
    conj3_failures: int = 0
    antipodal_failures: int = 0
    argmin_d_minus_1: int = 0
    failed_lines: list[int] = field(default_factory=list)

    @property
    def all_hold(self) -> bool:
        return not self.failed_lines

    def add(self, entry: CorpusEntry) -> None:
        self.total += 1
        if entry.error is not None:
            self.errors += 1
            self.failed_lines.append(entry.line.line_no)
            return
        assert entry.verdict is not None and entry.report is not None and entry.feasibility is not None
        self.checked += 1
        v = entry.verdict
        self.infeasible += not entry.feasibility.ok
        self.certified += entry.report.certified
        self.conj1_failures += not v.conj1_holds
        self.conj2_failures += not v.conj2_holds
        self.conj3_failures += not v.conj3_holds
        self.antipodal_failures += not v.antipodal_consistent
        self.argmin_d_minus_1 += entry.line.ia is not None and v.conj1_argmin_r == entry.line.ia.d - 1
        if not v.all_hold:
            self.failed_lines.append(entry.line.line_no)


def _check_line(line: CorpusLine, tol: Tolerances) -> CorpusEntry:
    if line.ia is None:
        return CorpusEntry(line=line, error=line.error)
    try:
        report = analyze(line.ia, tol=tol)
        return CorpusEntry(
            line=line,
            report=report,
            verdict=verdict(line.ia, tol=tol, report=report),
            feasibility=is_feasible(line.ia, spectrum(line.ia, tol=tol), tol=tol),
        )
    except (DegenerateSpectrum, ValueError) as e:
        getLogger(_LOG).warning("Line %d: %s", line.line_no, e)
        return CorpusEntry(line=line, error=e)


def check_corpus(
    lines: Iterable[str], *, workers: int = 1, progress: bool = False, tol: Tolerances = TOL
) -> tuple[list[CorpusEntry], CorpusSummary]:
    """
    Check every array of a corpus; errors are recorded per line and processing continues
    Entries are returned in corpus order regardless of workers
    """
    log = getLogger(_LOG)
    parsed = read_corpus(lines)
    summary = CorpusSummary()
    with logging_redirect_tqdm():
        pbar = tqdm.tqdm(
            total=len(parsed), disable=not progress, dynamic_ncols=True, leave=False, unit="array"
        )
        with pbar, ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
            entries = []
            for entry in pool.map(lambda i: _check_line(i, tol), parsed):
                entries.append(entry)
                summary.add(entry)
                pbar.update(1)
    for entry in entries:
        if entry.verdict is not None and not entry.verdict.all_hold:
            assert entry.report is not None
            log.warning("Line %d %s: %s", entry.line.line_no, entry.line.ia, entry.verdict)
            log.warning("Bound table: %s", entry.report.bound_table)
    log.info("Checked %d of %d arrays; %d failing", summary.checked, summary.total, len(summary.failed_lines))
    return entries, summary
