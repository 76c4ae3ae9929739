"""
Report Repository - Infrastructure Layer
IReportRepository 인터페이스의 JSON 파일 기반 구현체

같은 입력과 버전이면 바이트 단위로 같은 파일을 쓴다 (키 정렬, 시간 필드 없음).
"""
import json
import logging
from pathlib import Path
from typing import List, Optional, Sequence, Union

from config import REPORT_CONFIG
from src.domain.exceptions import InputError
from src.domain.repositories.interfaces import IReportRepository
from src.domain.verification.entities import VerificationReport

logger = logging.getLogger(__name__)


def render_reports(reports: Sequence[VerificationReport], indent: Optional[int] = None) -> str:
    """리포트 목록 → 정렬된 키의 JSON 문자열"""
    indent = REPORT_CONFIG["json_indent"] if indent is None else indent
    return json.dumps([r.to_dict() for r in reports], sort_keys=True, indent=indent, ensure_ascii=False)


class JSONReportRepository(IReportRepository):
    """
    JSON 리포트 저장소

    상대 경로는 reports_dir 기준으로 해석한다.
    """

    def __init__(self, reports_dir: Optional[Union[str, Path]] = None):
        self.reports_dir = Path(reports_dir or REPORT_CONFIG["reports_dir"])

    def _resolve(self, path: Union[str, Path]) -> Path:
        file_path = Path(path)
        return file_path if file_path.is_absolute() else self.reports_dir / file_path

    def save(self, reports: List[VerificationReport], path: Union[str, Path]) -> Path:
        file_path = self._resolve(path)
        file_path.parent.mkdir(parents=True, exist_ok=True)
        with open(file_path, 'w', encoding='utf-8') as f:
            f.write(render_reports(reports) + "\n")
        logger.info(f"[ReportRepository] saved {len(reports)} reports to {file_path}")
        return file_path

    def load(self, path: Union[str, Path]) -> List[dict]:
        file_path = self._resolve(path)
        if not file_path.exists():
            raise InputError(f"report file not found: {file_path}")
        with open(file_path, 'r', encoding='utf-8') as f:
            data = json.load(f)
        if not isinstance(data, list):
            raise InputError(f"report file {file_path} must hold a JSON list")
        return data
