"""
Infrastructure Layer
Clean Architecture: External Dependencies and Implementations

구현체는 하위 모듈에서 직접 import 한다 (서비스 계층이 Dynkin 카탈로그를 쓰므로
여기서 재노출하면 순환 import 가 생긴다).
- repositories.dynkin_diagram_repository.YAMLDynkinCatalogRepository
- repositories.module_file_repository.JSONModuleFileRepository
- repositories.report_repository.JSONReportRepository
"""
