"""
MV Cycle Fixed-Point Verifier - Command Line Interface

서브커맨드:
    validate, dgamma, polytope, chi, ring, verify, scan, factor-check,
    admissible, presentations

종료 코드: 0 모든 검사 통과 / 1 불일치 또는 이상 / 2 입력 오류
"""
import argparse
import logging
import sys
from typing import Callable, Dict, Optional, Sequence, Tuple

from config import EXIT_CODES, VERSION
from src.cli import views
from src.cli.dependencies import Container, build_container
from src.domain.exceptions import InputError, MVCycleError, RelationViolationError
from src.domain.grassmannian.value_objects import DimVector
from src.domain.quiver.entities import ModuleSource
from src.domain.root_system.value_objects import CartanFamily
from src.domain.verification.entities import VerificationMode
from src.services.weyl_group_service import pairing, weyl_service_for

logger = logging.getLogger(__name__)

OK = EXIT_CODES["ok"]
MISMATCH = EXIT_CODES["mismatch"]
INPUT_ERROR = EXIT_CODES["input_error"]


# =============================================================================
# 인자 해석 보조
# =============================================================================

def parse_e(text: Optional[str], source: ModuleSource) -> Tuple[int, ...]:
    """--e "1,0" → (1, 0) (rank 와 0 <= e <= d 검사)"""
    if text is None:
        raise InputError("--e is required for this command")
    vector = DimVector.parse(text)
    module = source.module
    if vector.rank != module.quiver.rank:
        raise InputError(f"--e {text} does not match rank {module.quiver.rank}")
    if not vector.fits(module.dims):
        raise InputError(f"--e {text} must satisfy 0 <= e <= d = {list(module.dims)}")
    return tuple(vector.coords)


def parse_type(text: str) -> Tuple[str, int]:
    """"A3" → ("A", 3)"""
    text = text.strip()
    try:
        family = CartanFamily.parse(text[0]).value
        return family, int(text[1:])
    except (IndexError, ValueError):
        raise InputError(f"Cartan type {text!r} must look like 'A3' or 'D4'")


def load_source(c: Container, path: str) -> ModuleSource:
    """모듈 파일을 읽고 전사영 관계식을 확인"""
    source = c.module_repo.load(path)
    c.pi_service.validate_module(source.module)
    return source


def _mode(args) -> Optional[VerificationMode]:
    return VerificationMode(args.mode) if getattr(args, "mode", None) else None


# =============================================================================
# 서브커맨드
# =============================================================================

def cmd_validate(args, c: Container) -> int:
    source = load_source(c, args.module)
    module = source.module
    kq = c.pi_service.is_kq_module(module)
    if args.json:
        print(views.dumps({"module": module.display_name(), "dims": list(module.dims), "valid": True, "kq_module": kq}))
    else:
        print(f"ok: {module.display_name()} d={list(module.dims)} on {module.cartan.label} (kQ-module: {kq})")
    return OK


def cmd_dgamma(args, c: Container) -> int:
    module = load_source(c, args.module).module
    gammas = weyl_service_for(module.cartan).chamber_weights()
    d_values = {g.coords: c.pi_service.d_gamma(module, g.weight) for g in gammas}
    a_values = {g.coords: -c.pi_service.d_gamma(module, -g.weight) for g in gammas}
    if args.json:
        print(views.dumps([
            {"gamma": list(g.coords), "D_gamma": d_values[g.coords], "A_gamma": a_values[g.coords]}
            for g in gammas
        ]))
    else:
        print(views.render_dgamma(gammas, d_values, a_values))
    return OK


def cmd_polytope(args, c: Container) -> int:
    module = load_source(c, args.module).module
    weyl = weyl_service_for(module.cartan)
    data = c.pi_service.polytope_data(module, weyl)
    pseudo_weyl = weyl.check_pseudo_weyl(data.lambdas)
    consistent = all(
        data.a_gamma[w.column(i).coords] == pairing(w.column(i), data.lambdas[w])
        for w in weyl.weyl_elements()
        for i in module.cartan.vertices
    )
    if args.json:
        print(views.dumps({
            "lambdas": {w.label(): list(lam.coords) for w, lam in data.lambdas.items()},
            "pseudo_weyl": pseudo_weyl,
            "consistent": consistent,
        }))
    else:
        print(views.render_polytope(data.lambdas))
        print(f"\npseudo-Weyl: {pseudo_weyl} | A_(w w_i) = (lambda_w, w w_i): {consistent}")
    return OK if pseudo_weyl and consistent else MISMATCH


def cmd_chi(args, c: Container) -> int:
    source = load_source(c, args.module)
    e = parse_e(args.e, source)
    spec = c.verification_service.interval_spec(source)
    euler = c.grassmannian_service.euler_cc(spec, e) if spec is not None else None
    poincare = c.grassmannian_service.poincare_poly(source.module, e)
    chi, betti = poincare.evaluate(1), poincare.betti_numbers()
    points = c.grassmannian_service.count_points_fq(source.module, e, args.q) if args.q else None
    if args.json:
        print(views.dumps({
            "e": list(e), "euler_cc": euler, "chi": chi, "betti": betti,
            "poincare": poincare.as_list(), "points": points, "q": args.q,
        }))
    else:
        print(f"euler_cc : {euler if euler is not None else 'n/a (not an interval module)'}")
        print(f"poincare : {poincare}  (chi = P(1) = {chi}, betti {betti})")
        if points is not None:
            print(f"|Gr_e(F_{args.q})| = {points}")
    if euler is not None and euler != chi:
        logger.warning(f"[CLI] euler_cc {euler} != P(1) {chi}")
        return MISMATCH
    return OK


def cmd_ring(args, c: Container) -> int:
    source = load_source(c, args.module)
    e = parse_e(args.e, source)
    if args.cutoff is not None:
        presentation = c.ring_service.elimination_presentation(source.module, e, args.cutoff)
    else:
        presentation = c.ring_service.presentation(source.module, e)
    summary = c.ring_service.quotient_dimension(presentation)
    if args.json:
        print(views.dumps({
            "variables": presentation.variable_names,
            "generators": len(presentation.generators),
            "provenance": presentation.by_provenance(),
            "unit_ideal": presentation.is_unit_ideal,
            **views.summary_dict(summary),
        }))
    else:
        print(presentation.to_canonical_text(), end="")
        print(f"\n{summary}  (hilbert {views.hilbert_text(summary.hilbert)})")
    return MISMATCH if summary.is_infinite else OK


def _emit_reports(args, c: Container, reports) -> None:
    if args.json:
        payload = [r.to_dict() for r in reports]
        print(views.dumps(payload[0] if args.command == "verify" else payload))
    elif args.command == "verify":
        print(views.render_report(reports[0]))
    else:
        print(views.render_scan(reports))
    if args.output:
        path = c.report_repo.save(list(reports), args.output)
        logger.info(f"[CLI] report written to {path}")


def cmd_verify(args, c: Container) -> int:
    source = load_source(c, args.module)
    e = parse_e(args.e, source)
    report = c.verification_service.verify(source, e, _mode(args))
    _emit_reports(args, c, [report])
    return MISMATCH if report.is_anomaly else OK


def cmd_scan(args, c: Container) -> int:
    source = load_source(c, args.module)
    reports = c.verification_service.scan(source, _mode(args), show_progress=not args.json)
    _emit_reports(args, c, reports)
    return MISMATCH if any(r.is_anomaly for r in reports) else OK


def cmd_factor_check(args, c: Container) -> int:
    first = load_source(c, args.first).module
    second = load_source(c, args.second).module
    if args.e is not None:
        dims = tuple(a + b for a, b in zip(first.dims, second.dims))
        vector = DimVector.parse(args.e)
        if vector.rank != len(dims) or not vector.fits(dims):
            raise InputError(f"--e {args.e} must satisfy 0 <= e <= d1 + d2 = {list(dims)}")
        results = [c.verification_service.factor_check(first, second, vector.coords)]
    else:
        results = c.verification_service.factor_check_all(first, second)
    if args.json:
        print(views.dumps([
            {"e": list(r.e), "lhs": r.lhs, "rhs": r.rhs, "holds": r.holds} for r in results
        ]))
    else:
        print(views.render_factor_checks(results))
    return OK if all(r.holds for r in results) else MISMATCH


def cmd_admissible(args, c: Container) -> int:
    types = [parse_type(t) for t in args.types] if args.types else None
    reports = c.verification_service.admissibility(types)
    if args.json:
        print(views.dumps([
            {
                "type": r.label, "group_order": r.group_order, "words_checked": r.words_checked,
                "counterexamples": [[list(word), j] for word, j in r.counterexamples],
            }
            for r in reports
        ]))
    else:
        print(views.render_admissibility(reports))
    return OK if all(r.holds for r in reports) else MISMATCH


def cmd_presentations(args, c: Container) -> int:
    source = load_source(c, args.module)
    e = parse_e(args.e, source)
    comparison = c.verification_service.compare_presentations(source.module, e)
    if args.json:
        print(views.dumps({
            "module": comparison.module, "e": list(comparison.e),
            "finite": views.summary_dict(comparison.finite),
            "elimination": views.summary_dict(comparison.elimination),
            "cutoff": comparison.cutoff, "stable": comparison.stable, "agree": comparison.agree,
        }))
    else:
        print(views.render_comparison(comparison))
    return OK if comparison.agree else MISMATCH


COMMANDS: Dict[str, Callable] = {
    "validate": cmd_validate,
    "dgamma": cmd_dgamma,
    "polytope": cmd_polytope,
    "chi": cmd_chi,
    "ring": cmd_ring,
    "verify": cmd_verify,
    "scan": cmd_scan,
    "factor-check": cmd_factor_check,
    "admissible": cmd_admissible,
    "presentations": cmd_presentations,
}


# =============================================================================
# 파서
# =============================================================================

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="JSON 출력 (키 정렬)")
    common.add_argument("--max-dim", type=int, default=None, help="점 개수 세기의 Σ d_i 상한")
    common.add_argument("--workers", type=int, default=None, help="scan 병렬 워커 수")
    common.add_argument("-v", "--verbose", action="store_true", help="DEBUG 로그")

    parser = argparse.ArgumentParser(
        prog="mvcycle",
        description="MV cycle fixed-point ring vs quiver Grassmannian verifier",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)

    def module_cmd(name: str, help_text: str, needs_e: bool = False) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("module", help="모듈 JSON 파일")
        if needs_e:
            p.add_argument("--e", required=True, help='차원 벡터, 예: "1,0"')
        return p

    module_cmd("validate", "전사영 관계식 검증")
    module_cmd("dgamma", "Γ 위의 D_γ, A_γ 표")
    module_cmd("polytope", "λ_w 표와 pseudo-Weyl 검사")
    chi = module_cmd("chi", "χ, Poincaré 다항식, F_q 점 개수", needs_e=True)
    chi.add_argument("--q", type=int, default=None, help="점 개수를 셀 소수 q")
    ring = module_cmd("ring", "고정점 환 표현과 몫환 차원", needs_e=True)
    ring.add_argument("--cutoff", type=int, default=None, help="소거 표현 cutoff (생략하면 유한 표현)")

    for name, help_text, needs_e in (("verify", "(M, e) 한 건 검증", True), ("scan", "모든 e 검증", False)):
        p = module_cmd(name, help_text, needs_e=needs_e)
        mode = p.add_mutually_exclusive_group()
        mode.add_argument("--assert", dest="mode", action="store_const", const="assert")
        mode.add_argument("--explore", dest="mode", action="store_const", const="explore")
        p.add_argument("--output", default=None, help="JSON 리포트 저장 경로")

    factor = sub.add_parser("factor-check", parents=[common], help="직합 차원 분해 항등식")
    factor.add_argument("first")
    factor.add_argument("second")
    factor.add_argument("--e", default=None, help="생략하면 0 <= e <= d1 + d2 전체")

    adm = sub.add_parser("admissible", parents=[common], help="축약 단어 admissibility 전수 검사")
    adm.add_argument("types", nargs="*", help="Cartan 타입 (예: A3 D4), 생략하면 기본 목록")

    module_cmd("presentations", "유한 표현과 소거 표현 비교", needs_e=True)
    return parser


def run(args: argparse.Namespace) -> int:
    """해석된 인자로 서브커맨드 실행, 종료 코드 반환"""
    try:
        container = build_container(max_dim=args.max_dim, workers=args.workers)
        return COMMANDS[args.command](args, container)
    except RelationViolationError as e:
        print(f"input error: {e} (vertices {e.vertices})", file=sys.stderr)
        return INPUT_ERROR
    except InputError as e:
        print(f"input error: {e}", file=sys.stderr)
        return INPUT_ERROR
    except MVCycleError as e:
        print(f"error: {e}", file=sys.stderr)
        return MISMATCH


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return run(args)
