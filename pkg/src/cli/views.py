"""
CLI Views
서비스 결과를 텍스트 표 (pandas) 와 JSON 으로 렌더링
"""
import json
from typing import Dict, List, Sequence

import pandas as pd

from src.domain.fixed_point_ring.value_objects import QuotientSummary
from src.domain.grassmannian.value_objects import PoincarePoly
from src.domain.root_system.entities import ChamberWeight, WeylElement
from src.domain.root_system.value_objects import Coweight
from src.domain.verification.entities import (
    AdmissibilityReport,
    FactorCheckResult,
    PresentationComparison,
    VerificationReport,
)


def _table(rows: List[Dict], columns: Sequence[str]) -> str:
    if not rows:
        return "(empty)"
    return pd.DataFrame(rows, columns=list(columns)).to_string(index=False)


def dumps(payload) -> str:
    """바이트 안정 JSON (키 정렬)"""
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)


def hilbert_text(coefficients: Sequence[int]) -> str:
    """[1, 1] → "1 + x" (빈 목록은 "0")"""
    terms = []
    for k, c in enumerate(coefficients):
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            power = "x" if k == 1 else f"x^{k}"
            terms.append(power if c == 1 else f"{c}{power}")
    return " + ".join(terms) if terms else "0"


def render_dgamma(gammas: Sequence[ChamberWeight], d_values: Dict, a_values: Dict) -> str:
    rows = [
        {
            "gamma": str(g),
            "j": g.source_j,
            "witness": g.witness.label(),
            "D_gamma": d_values[g.coords],
            "A_gamma": a_values[g.coords],
        }
        for g in gammas
    ]
    return _table(rows, ["gamma", "j", "witness", "D_gamma", "A_gamma"])


def render_polytope(lambdas: Dict[WeylElement, Coweight]) -> str:
    rows = [
        {"w": w.label(), "length": w.length, "lambda_w": list(lam.coords)}
        for w, lam in sorted(lambdas.items(), key=lambda item: (item[0].length, item[0].word))
    ]
    return _table(rows, ["w", "length", "lambda_w"])


def render_report(report: VerificationReport) -> str:
    ring = "INFINITE" if report.ring_dim is None else str(report.ring_dim)
    verdict = "PASS" if report.passed else ("FAIL" if report.is_anomaly else "MISMATCH (explore)")
    lines = [
        f"module     : {report.module}",
        f"e          : {list(report.e)}",
        f"ring       : dim {ring}, hilbert {hilbert_text(report.ring_hilbert)}",
        f"chi        : {report.chi} ({report.chi_source})",
        f"poincare   : {PoincarePoly(tuple(report.poincare))}",
        f"dim_match  : {report.dim_match}",
        f"series     : {report.series_match}",
        f"mode       : {report.mode.value}",
        f"verdict    : {verdict}",
    ]
    lines.extend(f"note       : {note}" for note in report.notes)
    return "\n".join(lines)


def render_scan(reports: Sequence[VerificationReport]) -> str:
    rows = [
        {
            "e": list(r.e),
            "ring_dim": "INF" if r.ring_dim is None else r.ring_dim,
            "ring_hilbert": hilbert_text(r.ring_hilbert),
            "chi": r.chi,
            "poincare": str(PoincarePoly(tuple(r.poincare))),
            "dim": "ok" if r.dim_match else "X",
            "series": "ok" if r.series_match else "X",
        }
        for r in reports
    ]
    passed = sum(1 for r in reports if r.passed)
    ring_total = sum(r.ring_dim or 0 for r in reports)
    chi_total = sum(r.chi or 0 for r in reports)
    summary = (
        f"\n{passed}/{len(reports)} pass, {len(reports) - passed} fail | "
        f"Σ ring_dim = {ring_total}, Σ chi = {chi_total}"
    )
    return _table(rows, ["e", "ring_dim", "ring_hilbert", "chi", "poincare", "dim", "series"]) + summary


def render_factor_checks(results: Sequence[FactorCheckResult]) -> str:
    rows = [
        {"e": list(r.e), "lhs": r.lhs, "rhs": r.rhs, "terms": len(r.terms), "holds": r.holds}
        for r in results
    ]
    holding = sum(1 for r in results if r.holds)
    return _table(rows, ["e", "lhs", "rhs", "terms", "holds"]) + f"\n{holding}/{len(results)} hold"


def render_admissibility(reports: Sequence[AdmissibilityReport]) -> str:
    rows = [
        {
            "type": r.label,
            "|W|": r.group_order,
            "(word, j) checked": r.words_checked,
            "counterexamples": len(r.counterexamples),
        }
        for r in reports
    ]
    return _table(rows, ["type", "|W|", "(word, j) checked", "counterexamples"])


def summary_dict(summary: QuotientSummary) -> Dict:
    return {"dimension": summary.dimension, "hilbert": list(summary.hilbert)}


def render_comparison(comparison: PresentationComparison) -> str:
    return "\n".join([
        f"module      : {comparison.module}",
        f"e           : {list(comparison.e)}",
        f"finite      : {comparison.finite}",
        f"elimination : {comparison.elimination} (cutoff {comparison.cutoff}, "
        f"{'stable' if comparison.stable else 'unstable'})",
        f"agree       : {comparison.agree}",
    ])
