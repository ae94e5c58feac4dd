"""Polynomial arithmetic over Z/p: worked examples and algebraic laws."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fsplit import (ContextMismatchError, Polynomial, PreconditionError,
                    RingContext, is_prime, parse_polynomial)

from conftest import variables


def polys(ctx, max_terms=4, max_exp=3):
    mono = st.tuples(*([st.integers(0, max_exp)] * ctx.nvars))
    term = st.tuples(mono, st.integers(1, ctx.prime - 1))
    return st.lists(term, max_size=max_terms).map(lambda ts: Polynomial(ctx, ts))


class TestContext:
    def test_rejects_composite_prime(self):
        with pytest.raises(PreconditionError):
            RingContext(4, ("x",))

    def test_rejects_duplicate_variables(self):
        with pytest.raises(PreconditionError):
            RingContext(5, ("x", "x"))

    def test_rejects_empty_variable_list(self):
        with pytest.raises(PreconditionError):
            RingContext(5, ())

    def test_rejects_unknown_order(self):
        with pytest.raises(PreconditionError):
            RingContext(5, ("x",), "grevlex")

    def test_rejects_huge_prime(self):
        with pytest.raises(PreconditionError):
            RingContext((1 << 31) + 11, ("x",))

    def test_primality(self):
        assert [n for n in range(2, 40) if is_prime(n)] == \
            [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]
        assert is_prime(2147483647)  # largest prime below 2^31
        assert not is_prime(2147483647 * 3)


class TestAddition:
    def test_characteristic_two_cancellation(self, F2xy):
        x, y = variables(F2xy)
        assert ((x + y) + (x + y)).is_zero

    def test_zero_identity(self, F5xy):
        x, _ = variables(F5xy)
        assert x * x + Polynomial.zero(F5xy) == x * x

    def test_mod_five_sum(self, F5xy):
        x, y = variables(F5xy)
        assert (2 * x + 3 * y) + (3 * x + 3 * y) == y

    def test_context_mismatch(self, F2xy, F5xy):
        with pytest.raises(ContextMismatchError):
            Polynomial.variable(F2xy, "x") + Polynomial.variable(F5xy, "x")


class TestMultiplication:
    def test_freshmans_dream(self, F2xy):
        x, y = variables(F2xy)
        assert (x + y) * (x + y) == x * x + y * y

    def test_one_identity(self, F5xy):
        x, y = variables(F5xy)
        f = 2 * x + 3 * y * y
        assert f * Polynomial.one(F5xy) == f

    def test_difference_of_squares_mod_five(self, F5xy):
        x, y = variables(F5xy)
        assert (x + y) * (x - y) == x * x + 4 * (y * y)

    def test_context_mismatch(self, F2xy, F5xy):
        with pytest.raises(ContextMismatchError):
            Polynomial.variable(F2xy, "x") * Polynomial.variable(F5xy, "y")


class TestFrobeniusExpand:
    def test_freshmans_dream(self, F2xy):
        x, y = variables(F2xy)
        assert (x + y).frobenius_expand(1) == x * x + y * y

    def test_identity_at_zero(self, F5xy):
        x, y = variables(F5xy)
        f = x * y + 2 * y
        assert f.frobenius_expand(0) == f

    def test_matches_repeated_multiplication_mod_three(self):
        ctx = RingContext(3, ("x", "y"))
        x, y = variables(ctx)
        f = x + 2 * y
        assert f.frobenius_expand(1) == f * f * f
        assert f.frobenius_expand(1) == x ** 3 + 2 * y ** 3

    def test_large_level_exact_exponents(self, F5xy):
        # Python integers make exponent scaling exact at any level.
        x, _ = variables(F5xy)
        assert x.frobenius_expand(14).leading_monomial() == (5 ** 14, 0)

    def test_rejects_negative_level(self, F5xy):
        x, _ = variables(F5xy)
        with pytest.raises(PreconditionError):
            x.frobenius_expand(-1)


@settings(max_examples=60, deadline=None)
@given(data=st.data(), p=st.sampled_from([2, 3, 5]))
def test_frobenius_is_additive(data, p):
    ctx = RingContext(p, ("x", "y"))
    f = data.draw(polys(ctx))
    g = data.draw(polys(ctx))
    e = data.draw(st.integers(0, 2))
    assert (f + g).frobenius_expand(e) == f.frobenius_expand(e) + g.frobenius_expand(e)


@settings(max_examples=40, deadline=None)
@given(data=st.data(), p=st.sampled_from([2, 3]))
def test_frobenius_matches_power(data, p):
    ctx = RingContext(p, ("x", "y"))
    f = data.draw(polys(ctx, max_terms=3, max_exp=2))
    assert f.frobenius_expand(1) == f ** p


@settings(max_examples=60, deadline=None)
@given(data=st.data(), p=st.sampled_from([2, 3, 5]))
def test_ring_axioms(data, p):
    ctx = RingContext(p, ("x", "y"))
    f = data.draw(polys(ctx))
    g = data.draw(polys(ctx))
    h = data.draw(polys(ctx))
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f * g == g * f
    assert f + g == g + f


class TestDerivative:
    def test_power_rule(self, F5xy):
        x, y = variables(F5xy)
        f = x ** 3 * y + 2 * (y ** 2)
        assert f.partial_derivative("x") == 3 * (x ** 2) * y
        assert f.partial_derivative("y") == x ** 3 + 4 * y

    def test_pth_powers_vanish(self, F5xy):
        x, _ = variables(F5xy)
        assert (x ** 5).partial_derivative("x").is_zero


class TestDisplay:
    def test_canonical_string(self, F5xy):
        f = parse_polynomial("y + 3*x^2 + 2", F5xy)
        assert str(f) == "3*x^2 + y + 2"

    def test_zero(self, F5xy):
        assert str(Polynomial.zero(F5xy)) == "0"
