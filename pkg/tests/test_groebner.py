"""Groebner engine: reduced bases, membership, colon, intersection, colength.

Monomial-ideal results are cross-checked against the independent exponent-set
oracle from conftest.
"""

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fsplit import (Ideal, Polynomial, PreconditionError, RingContext,
                    frobenius_power, parse_ideal, parse_polynomial)

from conftest import (mono_ideal, oracle_colength, oracle_colon,
                      oracle_intersect, oracle_minimalize, variables)


def basis_strings(I):
    return [str(g) for g in I.groebner_basis()]


class TestGroebnerBasis:
    def test_two_linear_generators(self, F2xy):
        I = parse_ideal("(x, x+y)", F2xy)
        assert basis_strings(I) == ["x", "y"]

    def test_single_monomial(self, F5xy):
        assert basis_strings(parse_ideal("(x^2)", F5xy)) == ["x^2"]

    def test_lex_elimination_shape(self):
        ctx = RingContext(5, ("x", "y"), "lex")
        I = parse_ideal("(x^2-y, y^2-x)", ctx)
        strings = basis_strings(I)
        assert "x + 4*y^2" in strings  # x - y^2
        assert "y^4 + 4*y" in strings  # y^4 - y

    def test_idempotent(self, F5xy):
        I = parse_ideal("(x^2-y, x*y-1)", F5xy)
        basis = I.groebner_basis()
        again = Ideal(list(basis), F5xy).groebner_basis()
        assert list(basis) == list(again)

    def test_deterministic_across_fresh_ideals(self, F5xy):
        text = "(x^3 - 2*y, x*y^2 - x, y^3 - x^2)"
        a = basis_strings(parse_ideal(text, F5xy))
        b = basis_strings(parse_ideal(text, F5xy))
        assert a == b

    def test_zero_and_unit(self, F5xy):
        assert parse_ideal("(0)", F5xy).is_zero
        assert parse_ideal("(3)", F5xy).is_unit
        assert not parse_ideal("(x)", F5xy).is_unit

    def test_empty_generator_list_rejected(self, F5xy):
        with pytest.raises(PreconditionError):
            Ideal([], F5xy)


class TestNormalForm:
    def test_generator_reduces_to_zero(self, F5xy):
        I = parse_ideal("(x^2-y, y^2-x)", F5xy)
        for g in I.generators:
            assert I.normal_form(g).is_zero

    def test_unit_survives_proper_monomial_ideal(self, F5xy):
        I = parse_ideal("(x, y)", F5xy)
        assert str(I.normal_form(Polynomial.one(F5xy))) == "1"

    def test_single_division_step(self, F5xy):
        I = parse_ideal("(x^2 - y)", F5xy)
        f = parse_polynomial("x^2*y", F5xy)
        assert str(I.normal_form(f)) == "y^2"


class TestMembership:
    def test_product_in_maximal(self, F5xy):
        I = parse_ideal("(x, y)", F5xy)
        assert I.contains(parse_polynomial("x*y", F5xy))

    def test_unit_translate_not_member(self, F5xy):
        I = parse_ideal("(x, y)", F5xy)
        assert not I.contains(parse_polynomial("x + 1", F5xy))

    def test_squarefree_square_degree_bound(self, F7xyz):
        I = parse_ideal("(x*y, x*z, y*z)", F7xyz)
        xyz = parse_polynomial("x*y*z", F7xyz)
        assert not I.power(2).contains(xyz)

    def test_stable_under_generator_shuffle(self, F5xy):
        gens = ["x^2 - y", "y^3 - x*y", "x*y^2 - 2*x"]
        probes = ["x^3", "x^2*y - y^2", "y^4", "x^4 - x"]
        reference = None
        rng = random.Random(7)
        for _ in range(6):
            rng.shuffle(gens)
            I = parse_ideal("(" + ",".join(gens) + ")", F5xy)
            answers = tuple(I.contains(parse_polynomial(p, F5xy)) for p in probes)
            if reference is None:
                reference = answers
            assert answers == reference


class TestColon:
    def test_principal_power(self, F5xy):
        I = parse_ideal("(x^2)", F5xy)
        assert I.colon(parse_ideal("(x)", F5xy)) == parse_ideal("(x)", F5xy)

    def test_monomial_colon(self, F5xy):
        I = parse_ideal("(x^5, y^5)", F5xy)
        assert I.colon(parse_ideal("(x^4)", F5xy)) == parse_ideal("(x, y^5)", F5xy)

    def test_product_split(self, F5xy):
        I = parse_ideal("(x*y)", F5xy)
        assert I.colon(parse_ideal("(x)", F5xy)) == parse_ideal("(y)", F5xy)

    def test_contains_original(self, F5xy):
        I = parse_ideal("(x^2 - y, y^2)", F5xy)
        J = parse_ideal("(x + y)", F5xy)
        assert I.colon(J).contains_ideal(I)


class TestIntersect:
    def test_coordinate_axes(self, F5xy):
        I = parse_ideal("(x)", F5xy).intersect(parse_ideal("(y)", F5xy))
        assert I == parse_ideal("(x*y)", F5xy)

    def test_self_intersection(self, F5xy):
        I = parse_ideal("(x^2 - y, y^3)", F5xy)
        assert I.intersect(I) == I

    def test_three_coordinate_planes(self, F7xyz):
        planes = [parse_ideal(t, F7xyz) for t in ("(x,y)", "(x,z)", "(y,z)")]
        result = planes[0].intersect(planes[1]).intersect(planes[2])
        assert result == parse_ideal("(x*y, x*z, y*z)", F7xyz)


class TestEquality:
    def test_generator_presentation_invariance(self, F5xy):
        assert parse_ideal("(x, x+y)", F5xy) == parse_ideal("(x, y)", F5xy)

    def test_strict_power_differs(self, F5xy):
        assert parse_ideal("(x^2)", F5xy) != parse_ideal("(x)", F5xy)

    def test_char_two_reduction(self, F2xy):
        assert parse_ideal("(x+y, x*y)", F2xy) == parse_ideal("(x+y, x^2)", F2xy)

    def test_double_inclusion_implies_equality(self, F5xy):
        I = parse_ideal("(x^2, x*y)", F5xy)
        J = parse_ideal("(x^2, x*y, x^2 + 3*x*y)", F5xy)
        assert I.contains_ideal(J) and J.contains_ideal(I)
        assert I == J


class TestColength:
    def test_origin(self, F5xy):
        assert parse_ideal("(x, y)", F5xy).colength() == 1

    def test_box(self, F5xy):
        assert parse_ideal("(x^2, y^3)", F5xy).colength() == 6

    def test_positive_dimensional(self, F5xy):
        assert parse_ideal("(x)", F5xy).colength() == math.inf

    def test_unit_and_zero(self, F5xy):
        assert parse_ideal("(1)", F5xy).colength() == 0
        assert parse_ideal("(0)", F5xy).colength() == math.inf

    @pytest.mark.parametrize("p,e,d", [(2, 1, 2), (2, 2, 2), (3, 1, 3), (5, 1, 2), (3, 2, 2)])
    def test_frobenius_power_of_origin(self, p, e, d):
        ctx = RingContext(p, tuple("xyzw"[:d]))
        mq = frobenius_power(Ideal.maximal(ctx), e)
        assert mq.colength() == p ** (e * d)


class TestDimension:
    def test_values(self, F7xyz):
        assert parse_ideal("(x, y, z)", F7xyz).dimension() == 0
        assert parse_ideal("(x*y, x*z, y*z)", F7xyz).dimension() == 1
        assert parse_ideal("(x)", F7xyz).dimension() == 2
        assert parse_ideal("(0)", F7xyz).dimension() == 3
        assert parse_ideal("(1)", F7xyz).dimension() == -1


def random_monomial_ideal(rng, ctx, max_gens=4, max_exp=4):
    gens = [tuple(rng.randint(0, max_exp) for _ in range(ctx.nvars))
            for _ in range(rng.randint(1, max_gens))]
    gens = [g for g in gens if any(g)] or [(1,) * ctx.nvars]
    return gens


@pytest.mark.parametrize("d", [2, 3])
def test_monomial_operations_match_exponent_oracle(d):
    ctx = RingContext(3, tuple("xyz"[:d]))
    rng = random.Random(20240 + d)
    for _ in range(40):
        A = random_monomial_ideal(rng, ctx)
        B = random_monomial_ideal(rng, ctx)
        IA, IB = mono_ideal(ctx, A), mono_ideal(ctx, B)

        expected = oracle_intersect(A, B)
        assert IA.intersect(IB) == mono_ideal(ctx, expected)

        expected = oracle_colon(A, B)
        assert IA.colon(IB) == mono_ideal(ctx, expected)

        assert IA.colength() == oracle_colength(A)

        lead = sorted(g.leading_monomial() for g in IA.groebner_basis())
        assert lead == sorted(oracle_minimalize(A))


@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_membership_closed_under_combinations(data):
    ctx = RingContext(5, ("x", "y"))
    x, y = variables(ctx)
    pool = [x ** 2 - y, x * y - 1, y ** 3 - x, x + y, y ** 2]
    gens = data.draw(st.lists(st.sampled_from(pool), min_size=1, max_size=3))
    I = Ideal(gens, ctx)
    f = data.draw(st.sampled_from(pool))
    g = data.draw(st.sampled_from(pool))
    assert I.contains(gens[0] * f + gens[-1] * g)
