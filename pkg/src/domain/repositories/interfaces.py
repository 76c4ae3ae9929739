"""
Repository 인터페이스 - Clean Architecture Domain Layer
의존성 역전 원칙(DIP) 적용: 도메인 레이어가 인터페이스를 정의하고,
인프라 레이어가 구현체를 제공
"""
from abc import ABC, abstractmethod
from pathlib import Path
from typing import List, Union

from src.domain.quiver.entities import IntervalSpec, ModuleSource, PiModule
from src.domain.root_system.value_objects import CartanData
from src.domain.verification.entities import VerificationReport


class IDynkinCatalogRepository(ABC):
    """
    Dynkin 다이어그램 카탈로그 Repository 인터페이스

    구현체 예시:
    - YAMLDynkinCatalogRepository: config/dynkin_diagrams.yaml
    """

    @abstractmethod
    def edges(self, family: str, rank: int) -> List[tuple]:
        """
        (family, rank) 의 Dynkin 트리 변 목록

        Raises:
            InputError: 유효하지 않은 ADE 쌍
        """
        pass

    @abstractmethod
    def cartan(self, family: str, rank: int) -> CartanData:
        """(family, rank) 의 Cartan 데이터"""
        pass


class IModuleRepository(ABC):
    """
    모듈 파일 Repository 인터페이스

    구현체 예시:
    - JSONModuleFileRepository: 구간 형식 / 행렬 형식 JSON
    """

    @abstractmethod
    def load(self, path: Union[str, Path]) -> ModuleSource:
        """
        모듈 파일 로드 및 검증

        Raises:
            InputError: 스키마 위반
            RelationViolationError: 전사영 관계식 위반
        """
        pass

    @abstractmethod
    def save(self, path: Union[str, Path], source: Union[IntervalSpec, PiModule]) -> Path:
        """읽기 스키마와 같은 형식으로 저장"""
        pass


class IReportRepository(ABC):
    """
    검증 리포트 Repository 인터페이스

    구현체 예시:
    - JSONReportRepository: 정렬된 키의 JSON 리스트
    """

    @abstractmethod
    def save(self, reports: List[VerificationReport], path: Union[str, Path]) -> Path:
        pass

    @abstractmethod
    def load(self, path: Union[str, Path]) -> List[dict]:
        pass
