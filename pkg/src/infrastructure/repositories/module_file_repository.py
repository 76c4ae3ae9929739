"""
Module File Repository - Infrastructure Layer
IModuleRepository 인터페이스의 JSON 파일 기반 구현체

지원 형식:
    구간 형식  {"family": "A", "rank": 2, "intervals": [{"from": 1, "to": 2, "mult": 1}]}
    행렬 형식  {"family", "rank", "orientation": "rightward" | [[s, t], ...],
               "dims": [...], "maps": {"1->2": [[1]], "2->1": [["1/2"]]}}
행렬 성분은 정수 또는 "p/q" 문자열. 선택 키 "name" 은 리포트 식별자로 쓴다.
"""
import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from src.domain.exceptions import InputError
from src.domain.quiver.entities import (
    ArrowKey,
    IntervalSpec,
    ModuleSource,
    PiModule,
    Quiver,
    RationalMatrix,
)
from src.domain.repositories.interfaces import IDynkinCatalogRepository, IModuleRepository
from src.infrastructure.repositories.dynkin_diagram_repository import YAMLDynkinCatalogRepository

logger = logging.getLogger(__name__)


def parse_entry(value: Any) -> Fraction:
    """정수 또는 "p/q" 문자열을 Fraction 으로 (실수는 거부)"""
    if isinstance(value, bool):
        raise InputError(f"matrix entry {value!r} must be an integer or a 'p/q' string")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise InputError(f"matrix entry {value!r} is not a rational number")
    raise InputError(f"matrix entry {value!r} must be an integer or a 'p/q' string")


def format_entry(value: Fraction) -> Union[int, str]:
    return int(value) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def parse_arrow_label(label: str) -> ArrowKey:
    """"1->2" → (1, 2)"""
    try:
        source, target = label.split("->")
        return int(source), int(target)
    except ValueError:
        raise InputError(f"map label {label!r} must look like '1->2'")


class JSONModuleFileRepository(IModuleRepository):
    """
    JSON 모듈 파일 저장소

    사용 예:
        repo = JSONModuleFileRepository()
        source = repo.load("data/modules/a2_interval_12.json")
        repo.save("out.json", source.intervals)
    """

    def __init__(self, catalog: Optional[IDynkinCatalogRepository] = None):
        self.catalog = catalog or YAMLDynkinCatalogRepository()

    # =========================================================================
    # 읽기
    # =========================================================================

    def load(self, path: Union[str, Path]) -> ModuleSource:
        file_path = Path(path)
        if not file_path.exists():
            raise InputError(f"module file not found: {file_path}")
        try:
            with open(file_path, 'r', encoding='utf-8') as f:
                data = json.load(f)
        except (json.JSONDecodeError, UnicodeDecodeError) as e:
            raise InputError(f"{file_path} is not valid UTF-8 JSON: {e}")

        source = self.from_dict(data, default_name=file_path.stem)
        logger.info(
            f"[ModuleFile] loaded {source.module.display_name()} "
            f"d={list(source.module.dims)} from {file_path}"
        )
        return source

    def from_dict(self, data: Any, default_name: str = "") -> ModuleSource:
        """
        JSON 객체 → ModuleSource

        행렬 형식의 전사영 관계식은 확인하지 않는다 (PiModuleService.validate_module 의 몫).

        Raises:
            InputError: 스키마 위반
        """
        if not isinstance(data, dict):
            raise InputError("module file must contain a JSON object")
        for key in ("family", "rank"):
            if key not in data:
                raise InputError(f"module file is missing '{key}'")
        cartan = self.catalog.cartan(str(data["family"]), data["rank"])
        name = str(data.get("name", ""))

        if "intervals" in data:
            spec = self._parse_intervals(cartan.rank, data["intervals"])
            module = spec.build_module(cartan, name=name)
            return ModuleSource(quiver=module.quiver, module=module, intervals=spec)

        if "dims" not in data:
            raise InputError("module file needs either 'intervals' or 'dims' + 'maps'")
        quiver = Quiver(cartan=cartan, orientation=self._parse_orientation(cartan, data.get("orientation", "rightward")))
        dims = self._parse_dims(cartan.rank, data["dims"])
        maps = self._parse_maps(data.get("maps", {}))
        module = PiModule(quiver=quiver, dims=dims, maps=maps, name=name or default_name)
        return ModuleSource(quiver=quiver, module=module, intervals=None)

    @staticmethod
    def _parse_intervals(rank: int, raw: Any) -> IntervalSpec:
        if not isinstance(raw, list):
            raise InputError("'intervals' must be a list")
        triples: List[Tuple[int, int, int]] = []
        for item in raw:
            if not isinstance(item, dict) or "from" not in item or "to" not in item:
                raise InputError(f"interval entry {item!r} needs 'from' and 'to'")
            try:
                triples.append((int(item["from"]), int(item["to"]), int(item.get("mult", 1))))
            except (TypeError, ValueError):
                raise InputError(f"interval entry {item!r} must hold integers")
        return IntervalSpec.of(rank, triples)

    @staticmethod
    def _parse_orientation(cartan, raw: Any) -> Tuple[ArrowKey, ...]:
        if raw == "rightward":
            return tuple(cartan.edges())
        if not isinstance(raw, list) or any(not isinstance(e, list) or len(e) != 2 for e in raw):
            raise InputError("'orientation' must be 'rightward' or a list of [source, target] pairs")
        return tuple((int(s), int(t)) for s, t in raw)

    @staticmethod
    def _parse_dims(rank: int, raw: Any) -> Tuple[int, ...]:
        if not isinstance(raw, list) or len(raw) != rank:
            raise InputError(f"'dims' must be a list of {rank} nonnegative integers")
        if any(isinstance(d, bool) or not isinstance(d, int) or d < 0 for d in raw):
            raise InputError(f"'dims' must be nonnegative integers, got {raw}")
        return tuple(raw)

    @staticmethod
    def _parse_maps(raw: Any) -> Dict[ArrowKey, RationalMatrix]:
        if not isinstance(raw, dict):
            raise InputError("'maps' must be an object keyed by arrow labels like '1->2'")
        maps: Dict[ArrowKey, RationalMatrix] = {}
        for label, matrix in raw.items():
            if not isinstance(matrix, list) or any(not isinstance(row, list) for row in matrix):
                raise InputError(f"map {label} must be a list of rows")
            maps[parse_arrow_label(label)] = tuple(
                tuple(parse_entry(x) for x in row) for row in matrix
            )
        return maps

    # =========================================================================
    # 쓰기
    # =========================================================================

    def to_dict(self, source: Union[IntervalSpec, PiModule]) -> Dict[str, Any]:
        if isinstance(source, IntervalSpec):
            return {
                "family": "A",
                "rank": source.rank,
                "intervals": [
                    {"from": iv.start, "to": iv.end, "mult": iv.mult}
                    for iv in source.normalized().intervals
                ],
            }
        module = source
        data: Dict[str, Any] = {
            "family": module.cartan.family.value,
            "rank": module.cartan.rank,
            "orientation": [list(key) for key in module.quiver.orientation],
            "dims": list(module.dims),
            "maps": {
                arrow.label: [[format_entry(x) for x in row] for row in module.phi(*arrow.key)]
                for arrow in module.quiver.arrows()
            },
        }
        if module.name:
            data["name"] = module.name
        return data

    def save(self, path: Union[str, Path], source: Union[IntervalSpec, PiModule]) -> Path:
        file_path = Path(path)
        file_path.parent.mkdir(parents=True, exist_ok=True)
        with open(file_path, 'w', encoding='utf-8') as f:
            json.dump(self.to_dict(source), f, indent=2, ensure_ascii=False)
        logger.info(f"[ModuleFile] saved {file_path}")
        return file_path
