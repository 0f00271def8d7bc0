"""Group/Lie-algebra membership, Jordan forms, centralizers, sampling."""

import pytest

from ahspringer import linalg
from ahspringer.errors import DomainError
from ahspringer.groups import (
    CentralizerSpace,
    GroupSpec,
    JordanType,
    centralizer_space,
    commutator_map_planes,
    default_form,
    enumerate_nilpotents,
    in_group,
    in_lie_algebra,
    jordan_nilpotent,
    jordan_type_of,
    nilpotency_degree,
    nilpotent_order,
    random_group_element,
    random_nilpotent,
    unipotent_order_exponent,
    upper_nilradical_basis,
)
from ahspringer.matrices import FpMatrix
from ahspringer.rng import stream


class TestJordan:
    def test_single_block(self):
        j3 = jordan_nilpotent(JordanType((3,)), 5)
        assert j3.planes[0].tolist() == [[0, 1, 0], [0, 0, 1], [0, 0, 0]]

    def test_trivial_blocks(self):
        assert jordan_nilpotent(JordanType((1, 1)), 3).is_zero()

    def test_mixed_block_degree(self):
        x = jordan_nilpotent(JordanType((2, 1)), 2)
        assert nilpotency_degree(x) == 2

    def test_partition_validation(self):
        with pytest.raises(ValueError):
            JordanType(())
        with pytest.raises(ValueError):
            JordanType((1, 2))
        with pytest.raises(ValueError):
            JordanType((2, 0))

    @pytest.mark.parametrize("partition", [(3,), (2, 1), (2, 2), (3, 2, 1), (4, 1)])
    def test_power_rank_formula(self, partition):
        # rank(J^k) = sum_i max(part_i - k, 0)
        t = JordanType(partition)
        x = jordan_nilpotent(t, 3)
        for k in range(sum(partition) + 1):
            expected = sum(max(part - k, 0) for part in partition)
            assert linalg.rank(x ** k) == expected

    @pytest.mark.parametrize("partition", [(3,), (2, 1), (2, 2, 1), (4, 2)])
    def test_jordan_type_round_trip(self, partition):
        x = jordan_nilpotent(JordanType(partition), 2)
        assert jordan_type_of(x).partition == partition


class TestNilpotentOrder:
    def test_examples(self):
        assert nilpotent_order(jordan_nilpotent(JordanType((3,)), 2)) == 2
        assert nilpotent_order(jordan_nilpotent(JordanType((5,)), 2)) == 3
        assert nilpotent_order(FpMatrix.zeros(7, 1, 4)) == 0

    def test_direct_powering_oracle(self):
        # p^m is the first p-power at which the matrix dies
        for p in (2, 3):
            for partition in ((3,), (4, 2), (5,)):
                x = jordan_nilpotent(JordanType(partition), p)
                m = nilpotent_order(x)
                assert (x ** (p ** m)).is_zero()
                if m:
                    assert not (x ** (p ** (m - 1))).is_zero()

    def test_non_nilpotent_raises(self):
        with pytest.raises(DomainError):
            nilpotent_order(FpMatrix.identity(3, 1, 2))
        with pytest.raises(DomainError):
            nilpotency_degree(FpMatrix.from_rows(2, 1, [[1, 1], [0, 1]]))

    def test_unipotent_order(self):
        j = jordan_nilpotent(JordanType((3,)), 2)
        u = FpMatrix.identity(2, 1, 3) + j
        assert unipotent_order_exponent(u) == 2
        with pytest.raises(DomainError):
            unipotent_order_exponent(j)


class TestMembership:
    def test_identity_in_every_group(self):
        for kind, n, p in (("GL", 3, 2), ("SL", 3, 2), ("SO", 3, 3), ("Sp", 4, 3)):
            assert in_group(GroupSpec(kind, n), FpMatrix.identity(p, 1, n))

    def test_sp2_lie_algebra_example(self):
        x = FpMatrix.from_rows(3, 1, [[0, 1], [0, 0]])
        spec = GroupSpec("Sp", 2)
        assert spec.form_for(3, 1) == FpMatrix.from_rows(3, 1, [[0, 1], [-1, 0]])
        assert in_lie_algebra(spec, x)

    def test_sl_determinant_example(self):
        g = FpMatrix.from_rows(3, 1, [[2, 0], [0, 1]])
        assert not in_group(GroupSpec("SL", 2), g)
        assert in_group(GroupSpec("GL", 2), g)

    def test_characteristic_two_rejected_for_forms(self):
        with pytest.raises(ValueError):
            in_group(GroupSpec("SO", 3), FpMatrix.identity(2, 1, 3))
        with pytest.raises(ValueError):
            in_lie_algebra(GroupSpec("Sp", 4), FpMatrix.zeros(2, 1, 4))

    def test_sp_needs_even_dimension(self):
        with pytest.raises(ValueError):
            GroupSpec("Sp", 3)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            in_group(GroupSpec("GL", 3), FpMatrix.identity(3, 1, 2))

    @pytest.mark.parametrize("kind,n,p", [("GL", 4, 3), ("SL", 4, 3), ("SO", 5, 3), ("Sp", 4, 5)])
    def test_closure_under_product_and_inverse(self, kind, n, p):
        spec = GroupSpec(kind, n)
        st = stream(31, f"closure/{kind}/{n}/{p}")
        for _ in range(10):
            g = random_group_element(spec, p, 1, st)
            h = random_group_element(spec, p, 1, st)
            assert in_group(spec, g) and in_group(spec, h)
            assert in_group(spec, g @ h)
            assert in_group(spec, linalg.inv(g))

    @pytest.mark.parametrize("kind,n,p", [("SL", 4, 3), ("SO", 5, 3), ("Sp", 6, 3)])
    def test_conjugation_preserves_lie_membership(self, kind, n, p):
        spec = GroupSpec(kind, n)
        st = stream(32, f"conj/{kind}/{n}/{p}")
        for k in range(10):
            x = random_nilpotent(spec, "any", 100 + k, p)
            assert in_lie_algebra(spec, x)
            g = random_group_element(spec, p, 1, st)
            assert in_lie_algebra(spec, g @ x @ linalg.inv(g))

    def test_custom_form_validation(self):
        good = FpMatrix.from_rows(3, 1, [[0, 1], [-1, 0]])
        spec = GroupSpec("Sp", 2, form=good)
        assert spec.form_for(3, 1) == good
        with pytest.raises(ValueError):
            GroupSpec("Sp", 2, form=FpMatrix.identity(3, 1, 2))  # not skew
        with pytest.raises(ValueError):
            GroupSpec("SO", 2, form=FpMatrix.zeros(3, 1, 2))  # singular
        with pytest.raises(ValueError):
            GroupSpec("GL", 2, form=good)  # GL carries no form


class TestCentralizer:
    def test_zero_matrix_full_space(self):
        c = centralizer_space(FpMatrix.zeros(3, 1, 3))
        assert c.dimension == 9

    def test_regular_nilpotent_dimension(self):
        for n in (2, 3, 4):
            c = centralizer_space(jordan_nilpotent(JordanType((n,)), 5))
            assert c.dimension == n

    def test_two_one_partition(self):
        c = centralizer_space(jordan_nilpotent(JordanType((2, 1)), 3))
        assert c.dimension == 5

    def test_dimension_formula_oracle(self):
        # commutant dimension of a nilpotent = sum min(part_i, part_j)
        for p, partition in ((2, (2, 1)), (3, (3, 1)), (5, (2, 2))):
            x = jordan_nilpotent(JordanType(partition), p)
            expected = sum(min(a, b) for a in partition for b in partition)
            assert centralizer_space(x).dimension == expected

    def test_basis_commutes_and_rank_complement(self):
        x = jordan_nilpotent(JordanType((3, 2)), 3)
        c = centralizer_space(x)
        assert isinstance(c, CentralizerSpace)
        for z in c.basis:
            assert z @ x == x @ z
        commutator_rank = len(linalg.rref_planes(commutator_map_planes(x), 3, 1)[1])
        assert c.dimension == 25 - commutator_rank

    def test_extension_field(self):
        x = jordan_nilpotent(JordanType((2,)), 3, e=2)
        assert centralizer_space(x).dimension == 2


class TestSampling:
    def test_gl_jordan_type_request(self):
        x = random_nilpotent(GroupSpec("GL", 3), JordanType((3,)), 7, 2)
        assert jordan_type_of(x).partition == (3,)
        assert nilpotent_order(x) == 2

    def test_sp2_any_postconditions(self):
        spec = GroupSpec("Sp", 2)
        x = random_nilpotent(spec, "any", 9, 3)
        assert in_lie_algebra(spec, x)
        assert (x @ x).is_zero()

    def test_determinism(self):
        spec = GroupSpec("Sp", 6)
        assert random_nilpotent(spec, "any", 5, 3) == random_nilpotent(spec, "any", 5, 3)
        assert random_nilpotent(spec, "any", 5, 3) != random_nilpotent(spec, "any", 6, 3)

    def test_unsatisfiable_types_raise(self):
        with pytest.raises(DomainError):
            random_nilpotent(GroupSpec("Sp", 4), JordanType((3, 1)), 1, 3)
        with pytest.raises(DomainError):
            random_nilpotent(GroupSpec("SO", 5), JordanType((4, 1)), 1, 3)
        with pytest.raises(DomainError):
            random_nilpotent(GroupSpec("GL", 4), JordanType((3,)), 1, 3)  # wrong n

    def test_sp_regular_type_reachable(self):
        x = random_nilpotent(GroupSpec("Sp", 4), JordanType((4,)), 3, 3)
        assert jordan_type_of(x).partition == (4,)
        assert in_lie_algebra(GroupSpec("Sp", 4), x)

    def test_custom_form_rejected(self):
        form = FpMatrix.from_rows(3, 1, [[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]])
        # a symmetric form differing from the default (it IS the default here,
        # so build a genuinely different one)
        other = FpMatrix.from_rows(3, 1, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
        spec = GroupSpec("SO", 4, form=other)
        with pytest.raises(ValueError):
            random_nilpotent(spec, "any", 1, 3)
        assert default_form("SO", 4, 3, 1) == form

    def test_nilradical_bases_satisfy_lie_condition(self):
        for kind, n in (("Sp", 4), ("Sp", 6), ("SO", 5), ("SO", 7)):
            spec = GroupSpec(kind, n)
            for b in upper_nilradical_basis(kind, n, 3, 1):
                assert in_lie_algebra(spec, b)
            lower = upper_nilradical_basis(kind, n, 3, 1, lower=True)
            for b in lower:
                assert in_lie_algebra(spec, b)


def test_enumerate_nilpotents_counts():
    # the number of nilpotent n x n matrices over F_p is p^(n^2 - n)
    assert len(list(enumerate_nilpotents(3, 2))) == 3 ** 2
    assert len(list(enumerate_nilpotents(2, 3))) == 2 ** 6
