"""
Fixed-Point Ring Service Tests
유한 표현, γ 관계식, 소거 표현, 몫환 차원 / Hilbert 급수
"""
from fractions import Fraction
from math import comb
from unittest.mock import MagicMock

import pytest

from src.domain.exceptions import InputError
from src.domain.fixed_point_ring.value_objects import Generator, RingPresentation, RingVariable
from src.domain.quiver.entities import Quiver
from src.domain.root_system.value_objects import Coweight, Weight
from src.services.fixed_point_ring_service import FixedPointRingService
from src.services.subspace_enumeration import gaussian_binomial
from src.services.weyl_group_service import cartan_matrix, weyl_service_for
from tests.conftest import FIXTURES_DIR


@pytest.fixture
def ring_service(pi_service):
    return FixedPointRingService(pi_service)


class TestPresentation:

    def test_golden_text_a1_k2(self, ring_service, interval_module):
        module = interval_module(1, [(1, 1, 2)])
        text = ring_service.presentation(module, (1,)).to_canonical_text()
        expected = (FIXTURES_DIR / "a1_k2_e1_presentation.txt").read_text(encoding="utf-8")
        assert text == expected

    def test_generation_is_deterministic(self, ring_service, interval_module):
        module = interval_module(3, [(1, 3, 1), (2, 2, 1)])
        first = ring_service.presentation(module, (0, 1, 1)).to_canonical_text()
        second = ring_service.presentation(module, (0, 1, 1)).to_canonical_text()
        assert first == second

    def test_ab_relations_come_first(self, ring_service, interval_module):
        module = interval_module(2, [(1, 2, 1), (2, 2, 1)])
        presentation = ring_service.presentation(module, (0, 1))
        kinds = [g.provenance.split("[", 1)[0] for g in presentation.generators]
        assert kinds == sorted(kinds, key=lambda k: k != "ab")

    def test_weighted_homogeneous(self, ring_service, interval_module):
        module = interval_module(3, [(1, 2, 1), (2, 3, 1)])
        assert ring_service.presentation(module, (0, 1, 1)).is_weighted_homogeneous()

    def test_empty_component_gives_unit(self, ring_service, interval_module):
        module = interval_module(2, [(1, 2, 1)])
        presentation = ring_service.presentation(module, (1, 0))
        assert presentation.is_unit_ideal is True

    def test_zero_module_has_no_variables(self, ring_service, pi_service, a2):
        module = pi_service.zero_module(Quiver.rightward(a2))
        presentation = ring_service.presentation(module, (0, 0))
        assert presentation.variables == ()
        assert presentation.generators == ()

    @pytest.mark.parametrize("e", [(3,), (-1,), (1, 0)])
    def test_invalid_e(self, ring_service, interval_module, e):
        with pytest.raises(InputError):
            ring_service.presentation(interval_module(1, [(1, 1, 2)]), e)


class TestCyclePresentation:

    def test_negative_truncation_is_unit(self, ring_service, a1):
        presentation = ring_service.cycle_presentation(
            a1, {(1,): 0, (-1,): 0}, Coweight((1,)), label="test"
        )
        assert presentation.is_unit_ideal is True
        assert presentation.generators[0].provenance == "unit[truncation]"

    def test_missing_chamber_weight(self, ring_service, a2):
        with pytest.raises(InputError):
            ring_service.cycle_presentation(a2, {(1, 0): 0}, Coweight((0, 0)))

    def test_a_gamma_uses_kernel_dimensions(self, a2):
        pi_service = MagicMock()
        pi_service.kernel_dimension.return_value = 1
        service = FixedPointRingService(pi_service)
        module = MagicMock()
        module.cartan = a2
        a_gamma = service.a_gamma(module)
        assert set(a_gamma.values()) == {-1}
        assert pi_service.kernel_dimension.call_count == len(weyl_service_for(a2).chamber_weights())


class TestGammaRelations:

    def test_interval_has_no_relation_for_star_direction(self, ring_service, interval_module):
        module = interval_module(2, [(1, 2, 1)])
        assert ring_service.gamma_relations(module, (1, 1), Weight((1, -1))) == []

    def test_negative_bound_gives_unit(self, ring_service, interval_module):
        module = interval_module(2, [(1, 2, 1)])
        generators = ring_service.gamma_relations(module, (1, 0), Weight((-1, 1)))
        assert len(generators) == 1
        assert generators[0].is_unit()

    def test_rejects_non_chamber_weight(self, ring_service, interval_module):
        module = interval_module(2, [(1, 2, 1)])
        with pytest.raises(InputError):
            ring_service.gamma_relations(module, (1, 1), Weight((1, 1)))


class TestQuotientDimension:

    @pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
    def test_a1_vector_space_matches_grassmannian(self, ring_service, interval_module, d):
        module = interval_module(1, [(1, 1, d)])
        for e in range(d + 1):
            summary = ring_service.ring_summary(module, (e,))
            assert summary.dimension == comb(d, e)
            assert summary.hilbert == gaussian_binomial(d, e).coefficients

    @pytest.mark.parametrize("triples,e,dimension", [
        ([(1, 2, 1)], (1, 0), 0),
        ([(1, 2, 1)], (1, 1), 1),
        ([(1, 2, 1)], (0, 1), 1),
        ([(1, 2, 1)], (0, 0), 1),
        ([(1, 2, 1), (2, 2, 1)], (0, 1), 2),
        ([(1, 2, 1), (2, 2, 1)], (1, 1), 1),
    ])
    def test_a2_examples(self, ring_service, interval_module, triples, e, dimension):
        assert ring_service.ring_summary(interval_module(2, triples), e).dimension == dimension

    def test_two_points_hilbert(self, ring_service, interval_module):
        summary = ring_service.ring_summary(interval_module(2, [(1, 2, 1), (2, 2, 1)]), (0, 1))
        assert summary.hilbert == (1, 1)

    def test_zero_module(self, ring_service, pi_service, a3):
        module = pi_service.zero_module(Quiver.rightward(a3))
        summary = ring_service.ring_summary(module, (0, 0, 0))
        assert summary.dimension == 1
        assert summary.hilbert == (1,)

    def test_free_variable_is_infinite(self, ring_service):
        presentation = RingPresentation(variables=(RingVariable("a", 1, 1),), generators=())
        assert ring_service.quotient_dimension(presentation).is_infinite

    def test_unit_ideal(self, ring_service):
        unit = Generator(provenance="unit[test]", terms=(((0,), Fraction(1)),))
        presentation = RingPresentation(
            variables=(RingVariable("a", 1, 1),), generators=(unit,), is_unit_ideal=True,
        )
        assert ring_service.quotient_dimension(presentation).dimension == 0


class TestElimination:

    def test_a1_k2_relation(self, ring_service, interval_module):
        module = interval_module(1, [(1, 1, 2)])
        presentation = ring_service.elimination_presentation(module, (1,), 2)
        assert presentation.variable_names == ["a1_1"]
        assert [g.provenance for g in presentation.generators] == ["gamma[-w1,k=2]"]
        assert ring_service.quotient_dimension(presentation).dimension == 2

    def test_stabilizes(self, ring_service, interval_module):
        result = ring_service.stable_elimination_summary(interval_module(1, [(1, 1, 2)]), (1,))
        assert result.stable is True
        assert result.cutoff == 3
        assert result.summary.dimension == 2

    def test_agrees_with_finite_presentation(self, ring_service, interval_module):
        module = interval_module(2, [(1, 2, 1), (2, 2, 1)])
        result = ring_service.stable_elimination_summary(module, (0, 1))
        assert result.summary.same_size(ring_service.ring_summary(module, (0, 1)))

    def test_negative_cutoff(self, ring_service, interval_module):
        with pytest.raises(InputError):
            ring_service.elimination_presentation(interval_module(1, [(1, 1, 1)]), (1,), -1)

    def test_no_extra_orders_is_unstable(self, pi_service, interval_module):
        service = FixedPointRingService(pi_service, elimination_extra_orders=0)
        result = service.stable_elimination_summary(interval_module(1, [(1, 1, 2)]), (1,))
        assert result.stable is False
        assert result.cutoff == 2
