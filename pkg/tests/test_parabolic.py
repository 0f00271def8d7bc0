"""Parabolic subgroup tests: nilradicals, classes, the block exponential."""

import pytest

from ahspringer import linalg
from ahspringer.errors import DomainError
from ahspringer.expmaps import ah_exp, bch, truncated_log
from ahspringer.groups import JordanType, jordan_nilpotent
from ahspringer.matrices import FpMatrix
from ahspringer.parabolic import (
    Composition,
    ParabolicGL,
    eps_p,
    in_nilradical,
    is_restricted,
    nilpotence_class,
    nilradical_basis,
    random_p_element,
    random_radical_element,
    restricted_compositions,
)


class TestComposition:
    def test_validation(self):
        with pytest.raises(ValueError):
            Composition(())
        with pytest.raises(ValueError):
            Composition((2, 0))
        assert Composition((2, 1)).n == 3

    def test_parse(self):
        assert Composition.parse("2,1").blocks == (2, 1)
        with pytest.raises(ValueError):
            Composition.parse("2,x")


class TestNilradical:
    def test_full_group_is_empty(self):
        par = ParabolicGL(Composition((4,)), 3)
        assert nilradical_basis(par) == []

    def test_two_one_blocks(self):
        par = ParabolicGL(Composition((2, 1)), 3)
        basis = nilradical_basis(par)
        positions = {tuple(int(v) for v in divmod(int(b.planes[0].argmax()), 3)) for b in basis}
        assert positions == {(0, 2), (1, 2)}

    def test_borel(self):
        par = ParabolicGL(Composition((1, 1, 1)), 3)
        assert len(nilradical_basis(par)) == 3

    def test_membership(self):
        par = ParabolicGL(Composition((2, 1)), 3)
        x = FpMatrix.from_rows(3, 1, [[0, 0, 1], [0, 0, 2], [0, 0, 0]])
        assert in_nilradical(par, x)
        y = FpMatrix.from_rows(3, 1, [[0, 1, 0], [0, 0, 0], [0, 0, 0]])
        assert not in_nilradical(par, y)  # inside the (2) block


class TestNilpotenceClass:
    def test_examples(self):
        assert nilpotence_class(ParabolicGL(Composition((4,)), 3)) == 0
        assert nilpotence_class(ParabolicGL(Composition((1, 1, 1)), 3)) == 2
        assert nilpotence_class(ParabolicGL(Composition((2, 1)), 2)) == 1

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_closed_form_r_minus_one(self, p):
        def comps(total):
            if total == 0:
                yield ()
                return
            for first in range(1, total + 1):
                for rest in comps(total - first):
                    yield (first,) + rest

        for n in (2, 3, 4, 5):
            for blocks in comps(n):
                par = ParabolicGL(Composition(blocks), p)
                assert nilpotence_class(par) == len(blocks) - 1

    def test_restricted(self):
        assert not is_restricted(ParabolicGL(Composition((1, 1, 1)), 2))
        assert is_restricted(ParabolicGL(Composition((1, 1, 1)), 3))
        assert is_restricted(ParabolicGL(Composition((2, 1)), 2))

    def test_restricted_composition_listing(self):
        comps = restricted_compositions(4, 2)
        assert all(len(c.blocks) <= 2 for c in comps)
        assert Composition((4,)) in comps and Composition((3, 1)) in comps
        assert Composition((1, 1, 2)) not in comps
        assert len(restricted_compositions(4, 5)) == 8  # every composition of 4


class TestEpsP:
    def test_zero(self):
        par = ParabolicGL(Composition((2, 1)), 2)
        assert eps_p(par, FpMatrix.zeros(2, 1, 3)) == FpMatrix.identity(2, 1, 3)

    def test_abelian_radical(self):
        par = ParabolicGL(Composition((2, 1)), 2)
        x = FpMatrix.from_rows(2, 1, [[0, 0, 1], [0, 0, 1], [0, 0, 0]])
        assert eps_p(par, x) == FpMatrix.identity(2, 1, 3) + x

    def test_borel_p3(self):
        par = ParabolicGL(Composition((1, 1, 1)), 3)
        j3 = jordan_nilpotent(JordanType((3,)), 3)
        assert eps_p(par, j3) == FpMatrix.from_rows(3, 1, [[1, 1, 2], [0, 1, 1], [0, 0, 1]])

    def test_rejects_non_restricted(self):
        par = ParabolicGL(Composition((1, 1, 1)), 2)
        with pytest.raises(DomainError):
            eps_p(par, FpMatrix.zeros(2, 1, 3))

    def test_rejects_outside_radical(self):
        par = ParabolicGL(Composition((2, 1)), 3)
        with pytest.raises(DomainError):
            eps_p(par, FpMatrix.from_rows(3, 1, [[0, 1, 0], [0, 0, 0], [0, 0, 0]]))

    @pytest.mark.parametrize("p,blocks", [(2, (2, 1)), (3, (1, 1, 1)), (5, (2, 2, 1)), (3, (2, 2))])
    def test_bijective_on_samples(self, p, blocks):
        par = ParabolicGL(Composition(blocks), p)
        for k in range(200):
            x = random_radical_element(par, 9000 + k, 0)
            u = eps_p(par, x)
            assert truncated_log(u) == x
            assert in_nilradical(par, truncated_log(u))

    @pytest.mark.parametrize("p,blocks", [(2, (3, 2)), (3, (1, 2, 1)), (5, (1, 1, 1, 1))])
    def test_equivariance_on_samples(self, p, blocks):
        par = ParabolicGL(Composition(blocks), p)
        for k in range(100):
            g = random_p_element(par, 500 + k)
            x = random_radical_element(par, 600 + k, 0)
            ginv = linalg.inv(g)
            assert eps_p(par, g @ x @ ginv) == g @ eps_p(par, x) @ ginv

    @pytest.mark.parametrize("p,blocks", [(3, (1, 1, 1)), (5, (2, 1, 1)), (2, (3, 3))])
    def test_bch_homomorphism_on_samples(self, p, blocks):
        par = ParabolicGL(Composition(blocks), p)
        for k in range(100):
            x = random_radical_element(par, 700 + k, 0)
            y = random_radical_element(par, 700 + k, 1)
            assert eps_p(par, bch(x, y)) == eps_p(par, x) @ eps_p(par, y)

    @pytest.mark.parametrize("p,blocks", [(2, (4, 2)), (3, (2, 2, 2)), (5, (3, 2, 1))])
    def test_ah_exp_restricts_to_eps(self, p, blocks):
        par = ParabolicGL(Composition(blocks), p)
        for k in range(100):
            x = random_radical_element(par, 800 + k, 0)
            assert ah_exp(x) == eps_p(par, x)

    @pytest.mark.parametrize("p,blocks", [(3, (2, 1)), (5, (1, 2, 2))])
    def test_image_lies_in_unipotent_radical(self, p, blocks):
        # eps_P output is unipotent block-upper-triangular: identity diagonal
        # blocks, support only above them
        par = ParabolicGL(Composition(blocks), p)
        ident = FpMatrix.identity(p, 1, par.n)
        for k in range(50):
            x = random_radical_element(par, 850 + k, 0)
            u = eps_p(par, x)
            assert in_nilradical(par, u - ident)

    def test_extension_field_parabolic(self):
        par = ParabolicGL(Composition((2, 1)), 3, e=2)
        for k in range(30):
            x = random_radical_element(par, 860 + k, 0)
            u = eps_p(par, x)
            assert truncated_log(u) == x
            assert ah_exp(x) == u
        g = random_p_element(par, 5)
        assert not linalg.det(g).is_zero()
        x = random_radical_element(par, 861, 0)
        ginv = linalg.inv(g)
        assert eps_p(par, g @ x @ ginv) == g @ eps_p(par, x) @ ginv


class TestRandomPElement:
    def test_postconditions(self):
        par = ParabolicGL(Composition((2, 1, 2)), 3)
        g = random_p_element(par, 4)
        assert not linalg.det(g).is_zero()
        mask = par.radical_support()
        for i in range(5):
            for j in range(5):
                below_blocks = mask[j, i]
                if below_blocks:
                    assert g.entry(i, j).is_zero()

    def test_determinism(self):
        par = ParabolicGL(Composition((2, 2)), 2)
        assert random_p_element(par, 11) == random_p_element(par, 11)
        assert random_p_element(par, 11) != random_p_element(par, 12)
