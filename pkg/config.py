"""
MV Cycle Fixed-Point Verifier - Configuration
MV 사이클 고정점 환 / 퀴버 그라스마니안 검증 도구 설정 파일
"""
import os
from pathlib import Path

from dotenv import load_dotenv

# =============================================================================
# 프로젝트 경로 설정
# =============================================================================
BASE_DIR = Path(__file__).parent.absolute()
CONFIG_DIR = BASE_DIR / "config"
EXAMPLES_DIR = BASE_DIR / "data" / "modules"

# .env 가 있으면 환경변수 오버라이드 로드 (없으면 무시)
load_dotenv(BASE_DIR / ".env")


def _env_int(name: str, default: int) -> int:
    """정수 환경변수 조회 (잘못된 값이면 기본값)"""
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        return default


VERSION = "1.0.0"

# =============================================================================
# Weyl 군 / 루트 시스템 설정
# =============================================================================
WEYL_CONFIG = {
    "max_group_order": _env_int("MVCYCLE_MAX_GROUP_ORDER", 100_000),  # |W| 상한 (E8 차단)
    "dynkin_catalog": CONFIG_DIR / "dynkin_diagrams.yaml",
}

# 부록 admissibility 전수 검사 기본 대상
ADMISSIBILITY_CONFIG = {
    "default_types": [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("D", 4)],
}

# =============================================================================
# 유한체 점 개수 세기 설정
# =============================================================================
POINT_COUNT_CONFIG = {
    "max_total_dim": _env_int("MVCYCLE_MAX_TOTAL_DIM", 8),  # Σ d_i 상한
    "max_enumeration": 2_000_000,  # 열거할 부분공간 튜플 수 상한
    "strategy": "leaf",            # "leaf" (잎 정점 닫힌 식) 또는 "brute"
}

# =============================================================================
# 고정점 환 (Gröbner 기저) 설정
# =============================================================================
RING_CONFIG = {
    "groebner_method": "buchberger",
    "monomial_order": "weighted-grevlex",  # 가중치 차수 호환 역사전식
    "elimination_extra_orders": 6,         # 소거 표현 cutoff 추가 단계 수
}

# =============================================================================
# 스캔 / 병렬 처리 설정
# =============================================================================
SCAN_CONFIG = {
    "max_cases": _env_int("MVCYCLE_MAX_SCAN_CASES", 4096),  # Π (d_i + 1) 상한
    "max_workers": _env_int("MVCYCLE_MAX_WORKERS", 4),
}

# =============================================================================
# 리포트 설정
# =============================================================================
REPORT_CONFIG = {
    "json_indent": 2,
    "reports_dir": Path(os.getenv("MVCYCLE_REPORTS_DIR", str(BASE_DIR / "reports"))),
}

# 종료 코드
EXIT_CODES = {
    "ok": 0,
    "mismatch": 1,
    "input_error": 2,
}
