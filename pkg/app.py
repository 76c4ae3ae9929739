"""
MV 사이클 고정점 환 / 퀴버 그라스마니안 검증 도구 - 메인 진입점

사용 예:
    python app.py verify data/modules/a1_k2.json --e 1
    python app.py scan data/modules/a2_interval_12_plus_22.json --json
"""
import logging
import sys
from pathlib import Path

# 프로젝트 루트 경로
PROJECT_ROOT = Path(__file__).parent.absolute()
sys.path.insert(0, str(PROJECT_ROOT))

from src.cli.app import build_parser, run  # noqa: E402


def main() -> int:
    args = build_parser().parse_args()
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
