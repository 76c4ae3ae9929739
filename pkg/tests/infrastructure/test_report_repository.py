"""
JSONReportRepository 테스트
"""
import pytest

from src.domain.exceptions import InputError
from src.domain.verification.entities import VerificationMode, VerificationReport
from src.infrastructure.repositories.report_repository import JSONReportRepository, render_reports


def make_report(e, elapsed=0.0):
    return VerificationReport(
        module="A1:k^2", e=e, ring_dim=2, ring_hilbert=[1, 1], chi=2, poincare=[1, 1],
        dim_match=True, series_match=True, mode=VerificationMode.ASSERT, elapsed_seconds=elapsed,
    )


@pytest.fixture
def repo(tmp_path):
    return JSONReportRepository(reports_dir=tmp_path)


class TestReportRepository:

    def test_keys_sorted(self):
        text = render_reports([make_report((1,))])
        keys = ['"chi"', '"dim_match"', '"e"', '"mode"', '"module"', '"poincare"']
        positions = [text.index(key) for key in keys]
        assert positions == sorted(positions)

    def test_byte_stable(self, repo, tmp_path):
        first = repo.save([make_report((1,), elapsed=0.1)], "a.json")
        second = repo.save([make_report((1,), elapsed=9.9)], "b.json")
        assert first.read_bytes() == second.read_bytes()
        assert first.parent == tmp_path

    def test_round_trip(self, repo):
        repo.save([make_report((0,)), make_report((1,))], "scan.json")
        data = repo.load("scan.json")
        assert [row["e"] for row in data] == [[0], [1]]
        assert data[0]["mode"] == "assert"

    def test_missing(self, repo):
        with pytest.raises(InputError):
            repo.load("missing.json")

    def test_not_a_list(self, repo, tmp_path):
        (tmp_path / "obj.json").write_text("{}", encoding="utf-8")
        with pytest.raises(InputError):
            repo.load("obj.json")
