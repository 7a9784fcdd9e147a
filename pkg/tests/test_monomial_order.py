"""
Monomial order tests
اختبارات الترتيب الجزئي
"""

from itertools import combinations

import pytest

from algebra.boolean_ring import Monomial, all_monomials
from algebra.monomial_order import (
    check_decreasing, decreasing_closure, divides_order, is_decreasing, preceq, shift_order
)
from utils.validation_helpers import NotDecreasing


def mono(*variables):
    return Monomial.from_vars(variables)


def preceq_by_search(f, g):
    """Existential definition: some divisor g* of g with deg f variables shift-dominates f"""
    return any(
        shift_order(f, Monomial.from_vars(sub))
        for sub in combinations(g.vars, f.degree)
    )


class TestOrders:
    """Test the three orders"""

    def test_divides_order(self):
        assert divides_order(mono(0, 1), mono(0, 1, 3))
        assert not divides_order(mono(2), mono(0, 1))
        assert divides_order(mono(1, 4), mono(1, 4))

    def test_shift_order(self):
        assert shift_order(mono(2, 3), mono(2, 6))
        assert not shift_order(mono(3, 4), mono(1, 5))
        assert not shift_order(mono(1, 5), mono(3, 4))
        assert shift_order(mono(0, 2), mono(0, 2))

    def test_shift_order_unequal_degrees(self):
        assert not shift_order(mono(0), mono(0, 1))

    def test_variable_chain(self):
        for i in range(6):
            for j in range(i, 6):
                assert preceq(mono(i), mono(j))

    def test_preceq_examples(self):
        assert preceq(mono(1, 2), mono(0, 1, 5))
        assert not preceq(mono(3, 4), mono(1, 5))
        assert preceq(Monomial.one(), mono(3))

    def test_greedy_matches_definition(self):
        monomials = all_monomials(6)
        for f in monomials:
            for g in monomials:
                assert preceq(f, g) == preceq_by_search(f, g), (f, g)

    def test_partial_order_axioms(self):
        monomials = all_monomials(5)
        for f in monomials:
            assert preceq(f, f)
            for g in monomials:
                if f != g and preceq(f, g):
                    assert not preceq(g, f)
                for h in monomials:
                    if preceq(f, g) and preceq(g, h):
                        assert preceq(f, h)

    def test_refines_divisibility_and_shift(self):
        monomials = all_monomials(5)
        for f in monomials:
            for g in monomials:
                if divides_order(f, g):
                    assert preceq(f, g)
                if f.degree == g.degree:
                    assert preceq(f, g) == shift_order(f, g)


class TestDecreasingSets:
    """Test decreasing predicates and closure"""

    def test_full_space_is_decreasing(self):
        assert is_decreasing({Monomial.one(), mono(0), mono(1), mono(0, 1)}, 2)

    def test_missing_predecessor(self):
        assert not is_decreasing({mono(1)}, 2)

    def test_reed_muller_sets(self):
        for r in range(5):
            assert is_decreasing(all_monomials(5, r), 5)

    def test_check_reports_witness(self):
        with pytest.raises(NotDecreasing) as info:
            check_decreasing({mono(1), Monomial.one()}, 2)
        assert info.value.details == {'missing': [0], 'member': [1]}
        assert info.value.exit_code == 2

    def test_matches_definition(self):
        monomials = all_monomials(4)
        for I in ({mono(1), mono(0), Monomial.one()}, {mono(0, 2), mono(0, 1), mono(0), mono(1), Monomial.one()}):
            expected = all(g in I for f in I for g in monomials if preceq(g, f))
            assert is_decreasing(I, 4) == expected

    def test_closure(self):
        assert decreasing_closure({mono(1)}, 2) == {Monomial.one(), mono(0), mono(1)}
        assert decreasing_closure({mono(1, 2)}, 3) == {
            Monomial.one(), mono(0), mono(1), mono(2), mono(0, 1), mono(0, 2), mono(1, 2)
        }

    def test_closure_is_idempotent(self):
        closed = decreasing_closure({mono(0, 3), mono(2)}, 4)
        assert is_decreasing(closed, 4)
        assert decreasing_closure(closed, 4) == closed

    def test_closure_equals_down_set(self):
        monomials = all_monomials(5)
        seeds = {mono(1, 3), mono(4)}
        expected = {g for g in monomials if any(preceq(g, f) for f in seeds)}
        assert decreasing_closure(seeds, 5) == expected
