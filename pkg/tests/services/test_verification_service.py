"""
Verification Service Tests
verify / scan / factor_check / compare_presentations
"""
from fractions import Fraction
from unittest.mock import MagicMock, patch

import pytest

from src.domain.exceptions import BoundExceededError, InputError, PavingAssumptionError
from src.domain.fixed_point_ring.value_objects import QuotientSummary
from src.domain.quiver.entities import ModuleSource, PiModule, Quiver
from src.domain.verification.entities import VerificationMode
from src.services.quiver_grassmannian_service import QuiverGrassmannianService
from src.services.verification_service import VerificationService, all_dimension_vectors
from src.services.weyl_group_service import cartan_matrix


@pytest.fixture
def verification(pi_service):
    return VerificationService(
        pi_service=pi_service,
        grassmannian_service=QuiverGrassmannianService(max_total_dim=8),
        max_workers=2,
    )


def star_source():
    quiver = Quiver.rightward(cartan_matrix("A", 2))
    module = PiModule(
        quiver=quiver, dims=(1, 1), maps={(2, 1): ((Fraction(1, 2),),)}, name="A2:star",
    )
    return ModuleSource(quiver=quiver, module=module)


class TestDimensionVectors:

    def test_lexicographic(self):
        assert all_dimension_vectors((1, 2)) == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)]

    def test_zero(self):
        assert all_dimension_vectors((0, 0)) == [(0, 0)]


class TestModes:

    def test_kq_module_asserts(self, verification, interval_module):
        assert verification.default_mode(interval_module(2, [(1, 2, 1)])) == VerificationMode.ASSERT

    def test_star_module_explores(self, verification):
        assert verification.default_mode(star_source().module) == VerificationMode.EXPLORE

    def test_interval_spec_from_decomposition(self, verification, interval_module):
        module = interval_module(2, [(1, 2, 1), (2, 2, 1)])
        source = ModuleSource(quiver=module.quiver, module=module)
        assert verification.interval_spec(source).label() == "A2:[1,2]+[2,2]"

    def test_interval_spec_unavailable(self, verification):
        assert verification.interval_spec(star_source()) is None


class TestVerify:

    def test_a1_k2(self, verification, interval_source):
        report = verification.verify(interval_source(1, [(1, 1, 2)]), (1,))
        assert report.ring_dim == 2
        assert report.chi == 2
        assert report.ring_hilbert == [1, 1]
        assert report.poincare == [1, 1]
        assert report.passed

    def test_empty_grassmannian(self, verification, interval_source):
        report = verification.verify(interval_source(2, [(1, 2, 1)]), (1, 0))
        assert report.ring_dim == 0
        assert report.chi == 0
        assert report.poincare == []
        assert report.series_match is True

    def test_report_dict_excludes_timing(self, verification, interval_source):
        data = verification.verify(interval_source(1, [(1, 1, 1)]), (0,)).to_dict()
        assert "elapsed_seconds" not in data
        assert data["mode"] == "assert"

    def test_star_module_uses_poincare_chi(self, verification):
        report = verification.verify(star_source(), (0, 1))
        assert report.mode == VerificationMode.EXPLORE
        assert report.chi_source == "poincare"

    def test_paving_failure_is_recorded_in_explore_mode(self, verification, interval_source):
        error = PavingAssumptionError([Fraction(-1), Fraction(1)])
        with patch.object(verification.grassmannian_service, "poincare_poly", side_effect=error):
            report = verification.verify(
                interval_source(1, [(1, 1, 2)]), (1,), mode=VerificationMode.EXPLORE
            )
        assert report.poincare == []
        assert report.series_match is False
        assert report.chi == 2
        assert any("nonnegative integer" in note for note in report.notes)
        assert report.is_anomaly is False

    def test_paving_failure_raises_in_assert_mode(self, verification, interval_source):
        error = PavingAssumptionError([Fraction(1, 2)])
        with patch.object(verification.grassmannian_service, "poincare_poly", side_effect=error):
            with pytest.raises(PavingAssumptionError):
                verification.verify(interval_source(1, [(1, 1, 2)]), (1,), mode=VerificationMode.ASSERT)

    def test_infinite_ring_is_anomaly(self, pi_service, interval_source):
        ring_service = MagicMock()
        ring_service.ring_summary.return_value = QuotientSummary.infinite()
        service = VerificationService(pi_service=pi_service, ring_service=ring_service)
        report = service.verify(interval_source(1, [(1, 1, 1)]), (1,), mode=VerificationMode.EXPLORE)
        assert report.ring_dim is None
        assert report.is_anomaly is True
        assert "fixed-point ring is infinite dimensional" in report.notes


class TestScan:

    def test_a1_k3(self, verification, interval_source):
        reports = verification.scan(interval_source(1, [(1, 1, 3)]))
        assert [r.e for r in reports] == [(0,), (1,), (2,), (3,)]
        assert [r.ring_dim for r in reports] == [1, 3, 3, 1]
        assert all(r.passed for r in reports)

    def test_zero_module(self, verification, pi_service):
        quiver = Quiver.rightward(cartan_matrix("A", 2))
        source = ModuleSource(quiver=quiver, module=pi_service.zero_module(quiver))
        reports = verification.scan(source)
        assert len(reports) == 1
        assert reports[0].passed

    def test_a2_interval_sum(self, verification, interval_source):
        reports = verification.scan(interval_source(2, [(1, 2, 1), (2, 2, 1)]))
        assert len(reports) == 6
        assert all(r.passed for r in reports)
        assert sum(r.ring_dim for r in reports) == 6

    def test_case_bound(self, pi_service, interval_source):
        service = VerificationService(pi_service=pi_service, max_cases=3)
        with pytest.raises(BoundExceededError):
            service.scan(interval_source(1, [(1, 1, 3)]))


class TestFactorCheck:

    def test_a1_split(self, verification, interval_module):
        simple = interval_module(1, [(1, 1, 1)])
        result = verification.factor_check(simple, simple, (1,))
        assert result.lhs == 2
        assert result.rhs == 2
        assert result.holds

    def test_all_vectors(self, verification, interval_module):
        first = interval_module(2, [(1, 2, 1)])
        second = interval_module(2, [(2, 2, 1)])
        results = verification.factor_check_all(first, second)
        assert len(results) == 6
        assert all(r.holds for r in results)

    def test_infinite_factor_makes_rhs_unknown(self, pi_service, interval_module):
        ring_service = MagicMock()
        ring_service.ring_summary.return_value = QuotientSummary.infinite()
        service = VerificationService(pi_service=pi_service, ring_service=ring_service)
        simple = interval_module(1, [(1, 1, 1)])
        result = service.factor_check(simple, simple, (1,))
        assert result.rhs is None
        assert result.holds is False


class TestComparePresentations:

    def test_agree_on_a1(self, verification, interval_module):
        comparison = verification.compare_presentations(interval_module(1, [(1, 1, 2)]), (1,))
        assert comparison.agree
        assert comparison.finite.dimension == 2


class TestAdmissibility:

    def test_delegates_to_sweep(self, verification):
        reports = verification.admissibility([("A", 2)])
        assert reports[0].label == "A2"
        assert reports[0].holds


class TestBoundsConfiguration:

    def test_zero_case_bound_is_not_replaced_by_default(self, pi_service):
        assert VerificationService(pi_service=pi_service, max_cases=0).max_cases == 0

    def test_zero_workers(self, pi_service):
        with pytest.raises(InputError):
            VerificationService(pi_service=pi_service, max_workers=0)
