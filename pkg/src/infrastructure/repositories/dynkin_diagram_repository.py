"""
YAML 기반 Dynkin 다이어그램 카탈로그 구현
"""
import logging
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import yaml

from config import WEYL_CONFIG
from src.domain.exceptions import InputError
from src.domain.repositories.interfaces import IDynkinCatalogRepository
from src.domain.root_system.value_objects import CartanData, CartanFamily

logger = logging.getLogger(__name__)

# 모듈 수준 캐시 (경로별 1회 로드)
_CATALOG_CACHE: Dict[Path, dict] = {}


def _load_catalog_once(yaml_path: Path) -> dict:
    """카탈로그를 한 번만 로드 (모듈 수준 캐싱)"""
    if yaml_path in _CATALOG_CACHE:
        return _CATALOG_CACHE[yaml_path]

    if not yaml_path.exists():
        raise InputError(f"Dynkin catalogue not found: {yaml_path}")

    with open(yaml_path, 'r', encoding='utf-8') as f:
        data = yaml.safe_load(f) or {}

    if 'families' not in data:
        raise InputError(f"Dynkin catalogue {yaml_path} has no 'families' section")

    _CATALOG_CACHE[yaml_path] = data['families']
    logger.debug(f"[DynkinCatalog] loaded {len(data['families'])} families from {yaml_path}")
    return _CATALOG_CACHE[yaml_path]


class YAMLDynkinCatalogRepository(IDynkinCatalogRepository):
    """
    YAML 파일에서 Dynkin 트리 모양을 읽는 Repository

    A_n 은 경로, D_n 은 n-2 에서 분기, E_n 은 변 목록을 그대로 사용한다.
    """

    def __init__(self, yaml_path: Optional[Path] = None):
        self.yaml_path = Path(yaml_path or WEYL_CONFIG["dynkin_catalog"])
        self._families = _load_catalog_once(self.yaml_path)

    def edges(self, family: str, rank: int) -> List[Tuple[int, int]]:
        fam = CartanFamily.parse(family)
        entry = self._families.get(fam.value)
        if entry is None:
            raise InputError(f"family {fam.value} missing from the Dynkin catalogue")

        shape = entry.get('shape')
        min_rank = entry.get('min_rank', 1)
        if shape in ('path', 'fork') and rank < min_rank:
            raise InputError(f"{fam.value}{rank} is not a valid Cartan type (rank must be >= {min_rank})")

        if shape == 'path':
            return [(i, i + 1) for i in range(1, rank)]
        if shape == 'fork':
            path = [(i, i + 1) for i in range(1, rank - 1)]
            return path + [(rank - 2, rank)]
        if shape == 'explicit':
            ranks = entry.get('ranks', {})
            if rank not in ranks:
                raise InputError(
                    f"{fam.value}{rank} is not a valid Cartan type (available ranks: {sorted(ranks)})"
                )
            return [tuple(sorted(edge)) for edge in ranks[rank]['edges']]

        raise InputError(f"unknown Dynkin shape {shape!r} for family {fam.value}")

    def cartan(self, family: str, rank: int) -> CartanData:
        if not isinstance(rank, int) or rank < 1:
            raise InputError(f"rank must be a positive integer, got {rank!r}")
        fam = CartanFamily.parse(family)
        matrix = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
        for i, j in self.edges(fam.value, rank):
            matrix[i - 1][j - 1] = -1
            matrix[j - 1][i - 1] = -1
        return CartanData(
            family=fam,
            rank=rank,
            cartan=tuple(tuple(row) for row in matrix),
        )
