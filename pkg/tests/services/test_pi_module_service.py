"""
Pi-Module Service Tests
전사영 관계식, 구간 모듈, 경로 사상, φ_γ / D_γ, 다면체 데이터
"""
from fractions import Fraction

import pytest

from src.domain.exceptions import InputError, RelationViolationError, UnsupportedInputError
from src.domain.quiver.entities import IntervalSpec, PiModule, Quiver
from src.domain.root_system.value_objects import Coweight, Weight
from src.services import exact_linear_algebra as ela
from src.services.weyl_group_service import cartan_matrix, pairing, weyl_service_for

ONE = Fraction(1)
ZERO = Fraction(0)


def explicit_a2(phi_12, phi_21):
    quiver = Quiver.rightward(cartan_matrix("A", 2))
    return PiModule(
        quiver=quiver,
        dims=(1, 1),
        maps={(1, 2): ((Fraction(phi_12),),), (2, 1): ((Fraction(phi_21),),)},
    )


class TestValidateModule:
    """전사영 관계식 Σ ε(a) φ_a φ_{a*} = 0"""

    def test_kq_module_is_valid(self, pi_service):
        assert pi_service.validate_module(explicit_a2(1, 0)) is True

    def test_both_directions_nonzero_violates_at_both_vertices(self, pi_service):
        with pytest.raises(RelationViolationError) as exc_info:
            pi_service.validate_module(explicit_a2(1, 1))
        assert exc_info.value.vertices == [1, 2]

    def test_all_zero_maps(self, pi_service):
        assert pi_service.validate_module(explicit_a2(0, 0)) is True

    def test_shape_mismatch(self):
        quiver = Quiver.rightward(cartan_matrix("A", 2))
        with pytest.raises(InputError):
            PiModule(quiver=quiver, dims=(1, 2), maps={(1, 2): ((ONE,),)})

    def test_non_kq_module_can_satisfy_relation(self, pi_service):
        module = explicit_a2(0, Fraction(1, 2))
        assert pi_service.validate_module(module) is True
        assert pi_service.is_kq_module(module) is False

    def test_relation_matrix_signs(self, pi_service):
        module = explicit_a2(1, 1)
        # 정점 1 로 들어오는 화살표는 E* (ε = -1)
        assert pi_service.relation_matrix(module, 1) == ((-ONE,),)
        assert pi_service.relation_matrix(module, 2) == ((ONE,),)

    def test_orientation_must_cover_edges(self):
        with pytest.raises(InputError):
            Quiver(cartan=cartan_matrix("A", 3), orientation=((1, 2),))


class TestBuildFromIntervals:

    def test_single_interval(self, interval_module):
        module = interval_module(2, [(1, 2, 1)])
        assert module.dims == (1, 1)
        assert module.phi(1, 2) == ((ONE,),)
        assert module.phi(2, 1) == ((ZERO,),)

    def test_interval_with_multiplicity(self, interval_module):
        module = interval_module(3, [(2, 3, 2)])
        assert module.dims == (0, 2, 2)
        assert module.phi(2, 3) == ((ONE, ZERO), (ZERO, ONE))

    def test_simples_have_zero_arrow(self, interval_module):
        module = interval_module(2, [(1, 1, 1), (2, 2, 1)])
        assert module.dims == (1, 1)
        assert module.phi(1, 2) == ((ZERO,),)

    def test_non_type_a_rejected(self, pi_service):
        with pytest.raises(InputError):
            pi_service.build_from_intervals(cartan_matrix("D", 4), IntervalSpec.of(4, [(1, 1, 1)]))

    def test_interval_outside_rank(self):
        with pytest.raises(InputError):
            IntervalSpec.of(2, [(1, 3, 1)])


class TestDirectSum:

    def test_zero_is_neutral(self, pi_service, interval_module):
        module = interval_module(2, [(1, 2, 1)])
        total = pi_service.direct_sum(module, pi_service.zero_module(module.quiver))
        assert total.dims == module.dims
        assert total.phi(1, 2) == module.phi(1, 2)

    def test_dims_add(self, pi_service, interval_module):
        first = interval_module(3, [(1, 3, 1)])
        second = interval_module(3, [(2, 2, 1), (3, 3, 2)])
        assert pi_service.direct_sum(first, second).dims == (1, 2, 3)

    def test_star_maps_are_block_diagonal(self, pi_service):
        total = pi_service.direct_sum(explicit_a2(0, Fraction(1, 2)), explicit_a2(0, Fraction(1, 3)))
        assert total.phi(2, 1) == ((Fraction(1, 2), ZERO), (ZERO, Fraction(1, 3)))
        assert total.phi(1, 2) == ((ZERO, ZERO), (ZERO, ZERO))

    def test_quiver_mismatch(self, pi_service, interval_module):
        with pytest.raises(InputError):
            pi_service.direct_sum(interval_module(2, [(1, 1, 1)]), interval_module(3, [(1, 1, 1)]))

    def test_d_gamma_is_additive(self, pi_service, interval_module):
        first = interval_module(3, [(1, 2, 1), (3, 3, 1)])
        second = interval_module(3, [(2, 3, 1), (1, 1, 1)])
        total = pi_service.direct_sum(first, second)
        for gamma in weyl_service_for(total.cartan).chamber_weights():
            assert pi_service.d_gamma(total, gamma.weight) == (
                pi_service.d_gamma(first, gamma.weight) + pi_service.d_gamma(second, gamma.weight)
            )


class TestPathMaps:

    def test_rightward_arrow(self, pi_service, interval_module):
        module = interval_module(2, [(1, 2, 1)])
        assert pi_service.path_map(module, 1, 2) == ((ONE,),)

    def test_star_direction_is_zero(self, pi_service, interval_module):
        module = interval_module(2, [(1, 2, 1)])
        assert pi_service.path_map(module, 2, 1) == ((ZERO,),)

    def test_two_step_composition(self, pi_service, interval_module):
        module = interval_module(3, [(1, 3, 1), (1, 2, 1)])
        # φ_13 = φ_{2→3} ∘ φ_{1→2}: [1,3] 성분만 살아남는다
        composed = pi_service.path_map(module, 1, 3)
        assert ela.rank(ela.to_domain_matrix(composed, 1, 2)) == 1

    def test_identity_on_diagonal(self, pi_service, interval_module):
        module = interval_module(3, [(2, 3, 2)])
        assert pi_service.path_map(module, 2, 2) == ((ONE, ZERO), (ZERO, ONE))


class TestPhiGammaAndD:

    @pytest.fixture
    def module(self, interval_module):
        return interval_module(2, [(1, 2, 1)])

    def test_fundamental_weight_has_zero_source(self, pi_service, module):
        assert pi_service.phi_gamma(module, Weight((1, 0))).shape == (1, 0)

    def test_block_is_forward_path_map(self, pi_service, module):
        phi = pi_service.phi_gamma(module, Weight((-1, 1)))
        assert ela.to_fractions(phi) == ((ONE,),)

    def test_block_is_star_path_map(self, pi_service, module):
        phi = pi_service.phi_gamma(module, Weight((1, -1)))
        assert ela.to_fractions(phi) == ((ZERO,),)

    def test_d_gamma_examples(self, pi_service, module):
        assert pi_service.d_gamma(module, Weight((-1, 1))) == 1
        assert pi_service.d_gamma(module, Weight((1, -1))) == 0

    def test_d_of_fundamental_weights(self, pi_service, interval_module):
        module = interval_module(3, [(1, 2, 1), (2, 3, 2)])
        for i in (1, 2, 3):
            assert pi_service.d_gamma(module, -Weight.fundamental(3, i)) == 0
            assert pi_service.d_gamma(module, Weight.fundamental(3, i)) == module.dim(i)

    def test_multiplicity_two_rejected(self, pi_service):
        d4 = cartan_matrix("D", 4)
        module = pi_service.zero_module(Quiver.rightward(d4))
        with pytest.raises(UnsupportedInputError):
            pi_service.phi_gamma(module, Weight((-1, 2, -1, -1)))


class TestPolytopeData:

    def test_zero_module(self, pi_service, a2):
        module = pi_service.zero_module(Quiver.rightward(a2))
        data = pi_service.polytope_data(module)
        assert all(lam == Coweight.zero(2) for lam in data.lambdas.values())

    def test_a1_vector_space(self, pi_service, interval_module):
        module = interval_module(1, [(1, 1, 3)])
        weyl = weyl_service_for(module.cartan)
        e, s = weyl.weyl_elements()
        data = pi_service.polytope_data(module)
        assert data.lambdas[e] == Coweight((0,))
        assert data.lambdas[s] == Coweight((3,))

    def test_identity_vertex_of_interval(self, pi_service, interval_module):
        module = interval_module(2, [(1, 2, 1)])
        data = pi_service.polytope_data(module)
        assert data.lambdas[weyl_service_for(module.cartan).identity()] == Coweight((0, 0))

    @pytest.mark.parametrize("rank,triples", [
        (2, [(1, 2, 1), (2, 2, 1)]),
        (3, [(1, 3, 1), (2, 2, 1)]),
        (3, [(1, 1, 1), (2, 3, 2)]),
    ])
    def test_consistency_and_pseudo_weyl(self, pi_service, interval_module, rank, triples):
        module = interval_module(rank, triples)
        weyl = weyl_service_for(module.cartan)
        data = pi_service.polytope_data(module, weyl)
        for w in weyl.weyl_elements():
            for i in module.cartan.vertices:
                gamma = w.column(i)
                assert data.a_gamma[gamma.coords] == pairing(gamma, data.lambdas[w])
        assert weyl.check_pseudo_weyl(data.lambdas) is True


class TestDecomposeIntervals:

    @pytest.mark.parametrize("rank,triples", [
        (2, [(1, 2, 1), (2, 2, 1)]),
        (3, [(1, 3, 1), (2, 3, 2), (1, 1, 1)]),
        (3, []),
    ])
    def test_recovers_intervals(self, pi_service, interval_module, rank, triples):
        module = interval_module(rank, triples)
        recovered = pi_service.decompose_intervals(module)
        assert recovered.normalized() == IntervalSpec.of(rank, triples).normalized()

    def test_rejects_star_maps(self, pi_service):
        with pytest.raises(InputError):
            pi_service.decompose_intervals(explicit_a2(0, 1))
