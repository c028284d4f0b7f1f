"""
This file converts the output of the CLI into library calls and prints the results
This is a distinct file from the CLI because importing numpy and scipy is slow
"""

from __future__ import annotations
from logging import StreamHandler, getLevelName, getLogger
from typing import TYPE_CHECKING
from dataclasses import asdict
from json import dumps
import sys

from zstdlib.log import CuteFormatter
from human_readable import listing

from ..shared import (
    log,
    ExitCode,
    Tolerances,
    UsageError,
    ReportThis,
    InvalidArray,
    CertificateError,
    DegenerateSpectrum,
    EigenvalueMismatch,
    NotDistanceRegular,
    fmt_value,
)
from ..scheme import parse_intersection_array, check_corpus
from ..families import list_families, family_ia, closed_form_c2_sq
from ..oracle import GRAPH_KINDS, build_graph, spectral_embedding_check
from .tables import TABLE_IDS, table_rows, render, render_json, corpus_text
from .report import Report, analyze_report, bound_table_str

if TYPE_CHECKING:
    from argparse import ArgumentParser, Namespace
    from ..scheme import CorpusEntry


_LOG = "main"


def _emit(text: str) -> None:
    print(text, flush=True)


def _exit(code: int) -> None:
    if code != ExitCode.ok:
        getLogger(_LOG).debug("Exiting with code %d", code)
        sys.exit(code)


#
# Commands
#


def _report_out(ns: Namespace, report: Report, tol: Tolerances) -> None:
    _emit(report.dumps() if ns.json else report.table(all_r=ns.all_r, tol=tol))


def _analyze(ns: Namespace, tol: Tolerances) -> int:
    ia = parse_intersection_array(ns.array)
    report = analyze_report(ns.array, ia, tol=tol)
    _report_out(ns, report, tol)
    if not report.feasible:
        failures = listing(list(report.feasibility_failures), ",", "and")
        getLogger(_LOG).warning("%s is infeasible: %s", ia, failures)
        return ExitCode.rejected
    return ExitCode.ok


def _family(ns: Namespace, tol: Tolerances) -> int:
    ia = family_ia(ns.name, ns.params)
    report = analyze_report(ia.name, ia, closed_form=closed_form_c2_sq(ns.name, ns.params), tol=tol)
    _report_out(ns, report, tol)
    if not report.feasible or not report.closed_form_agrees:
        return ExitCode.rejected
    return ExitCode.ok


def _entry_out(ns: Namespace, entry: CorpusEntry, tol: Tolerances) -> None:
    line = entry.line
    if entry.error is not None:
        msg = str(entry.error).split("\n", 1)[0]
        if ns.json:
            _emit(dumps({"line": line.line_no, "text": line.text, "error": msg}, sort_keys=True))
        else:
            _emit(f"line {line.line_no}: ERROR {msg}")
        return
    assert line.ia is not None and entry.report is not None
    assert entry.verdict is not None and entry.feasibility is not None
    source = line.name or f"line {line.line_no}"
    report = Report.build(source, line.ia, entry.report, entry.verdict, entry.feasibility, tol=tol)
    if ns.json:
        _emit(dumps({"line": line.line_no, "report": report.to_dict()}, sort_keys=True))
        return
    c2 = report.c2_sq_exact or fmt_value(report.embedding_distortion_sq, exact=False, tol=tol)
    status = "ok" if entry.ok else "FAIL"
    _emit(f"line {line.line_no:<4} {status:<4} {source:<12} {report.array}  c2^2 = {c2}  r = {report.best_r}")
    if not entry.ok:
        _emit(report.table(tol=tol))
        _emit(bound_table_str(report.bound_table, tol=tol))


def _corpus(ns: Namespace, tol: Tolerances) -> int:
    try:
        text = corpus_text() if ns.path is None else ns.path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise UsageError(f"Cannot read corpus {ns.path}: {e}") from e
    entries, summary = check_corpus(text.splitlines(), workers=ns.threads, progress=ns.progress, tol=tol)
    for i in entries:
        _entry_out(ns, i, tol)
    msg = (
        f"{summary.total} lines: {summary.checked} checked, {summary.errors} errors, "
        f"{summary.infeasible} infeasible, {summary.certified} certified, "
        f"{len(summary.failed_lines)} failing"
    )
    if ns.json:
        summary_d = {"total": summary.total, "checked": summary.checked, "failed_lines": summary.failed_lines}
        _emit(dumps({"summary": summary_d}, sort_keys=True))
    else:
        _emit(msg)
    if summary.all_hold or ns.keep_going:
        return ExitCode.ok
    return ExitCode.parse_error if summary.errors == len(summary.failed_lines) else ExitCode.rejected


def _oracle(ns: Namespace, tol: Tolerances) -> int:
    g = build_graph(ns.kind, ns.params, tol=tol)
    if not 1 <= ns.theta_index <= g.d:
        raise UsageError(f"--theta-index must be in 1..{g.d} for {g.name}")
    check = spectral_embedding_check(g, ns.theta_index, tol=tol)
    ok = check.ok(tol=tol)
    if ns.json:
        d = asdict(check) | {"ok": ok}
        if not check.injective:
            d["distortion_sq"] = None
        _emit(dumps(d, sort_keys=True))
    else:
        rows = [
            ("graph", check.graph),
            ("theta", f"theta_{check.theta_index} = {fmt_value(check.theta, tol=tol)}"),
            ("multiplicity", str(check.multiplicity)),
            ("realized S_r", ", ".join(fmt_value(i, exact=False) for i in check.realized)),
            ("predicted S_r", ", ".join(fmt_value(i, exact=False) for i in check.predicted)),
            ("max deviation", f"{check.max_deviation:.3g}"),
            ("cosine deviation", f"{check.cosine_deviation:.3g}"),
            ("expansion", fmt_value(check.expansion, exact=False)),
            ("distortion^2", fmt_value(check.distortion_sq, tol=tol) if check.injective else "not injective"),
            ("agrees", "yes" if ok else "NO"),
        ]
        width = max(len(i) for i, _ in rows)
        _emit("\n".join(f"{i.ljust(width)} : {k}" for i, k in rows))
    return ExitCode.ok if ok else ExitCode.rejected


def _table(ns: Namespace, tol: Tolerances) -> int:
    rows = [r for t in (TABLE_IDS if ns.table == "all" else (ns.table,)) for r in table_rows(t, tol=tol)]
    _emit(render_json(rows) if ns.json else render(rows, tol=tol))
    return ExitCode.ok if all(i.ok for i in rows) else ExitCode.rejected


def _list(ns: Namespace, _: Tolerances) -> int:
    fams = list_families()
    if ns.json:
        for i in fams:
            d = {"id": i.id, "aliases": i.aliases, "params": i.params, "valid": i.valid}
            _emit(dumps(d, sort_keys=True))
        return ExitCode.ok
    width = max(len(i.id) for i in fams)
    for i in fams:
        also = f" (also {listing(list(i.aliases), ',', 'and')})" if i.aliases else ""
        _emit(f"{i.id.ljust(width)} : {i.title}{also}; params: {' '.join(i.params) or '-'}; {i.valid}")
    _emit("")
    _emit("oracle graph kinds: " + ", ".join(f"{k}({','.join(v.params)})" for k, v in GRAPH_KINDS.items()))
    return ExitCode.ok


_COMMANDS = {
    "analyze": _analyze,
    "corpus": _corpus,
    "family": _family,
    "oracle": _oracle,
    "table": _table,
    "list": _list,
}


def _config_log(parsed: Namespace) -> None:
    # Log config
    log.define_trace()
    root = getLogger()
    root.setLevel(lvl := log.level(parsed.verbose))
    assert len(root.handlers) == 0, "Root logger should not have any handlers"
    root.addHandler(sh := StreamHandler())
    sh.setFormatter(CuteFormatter(**log.CF_KWARGS, colored=not parsed.no_color_log))
    getLogger(_LOG).info(
        "Logging level set to %s with colors %sABLED",
        getLevelName(lvl),
        "DIS" if parsed.no_color_log else "EN",
    )


def main(parser: ArgumentParser, parsed: Namespace) -> None:
    _config_log(parsed)
    try:
        tol = Tolerances.load({"certify_rel": parsed.certify_rel}, parsed.config_file)
        getLogger(_LOG).debug("%s", tol)
        code = _COMMANDS[parsed.command](parsed, tol)
    except (UsageError, InvalidArray) as e:
        parser.error(str(e))
    except (DegenerateSpectrum, EigenvalueMismatch, NotDistanceRegular, CertificateError) as e:
        getLogger(_LOG).error("%s: %s", type(e).__name__, e)
        code = ExitCode.rejected
    except ReportThis:
        getLogger(_LOG).critical("Internal consistency check failed", exc_info=True)
        raise
    _exit(code)
