"""Shared fixtures and independent combinatorial oracles for monomial ideals.

The oracle functions below work purely on exponent sets and never touch the
Groebner engine; tests use them to cross-check colon, intersection, and
colength on monomial inputs.
"""

from __future__ import annotations

import itertools
import math

import pytest

from fsplit import Ideal, Polynomial, RingContext


@pytest.fixture
def F2xy():
    return RingContext(2, ("x", "y"))


@pytest.fixture
def F5xy():
    return RingContext(5, ("x", "y"))


@pytest.fixture
def F7xyz():
    return RingContext(7, ("x", "y", "z"))


def variables(ctx):
    return tuple(Polynomial.variable(ctx, v) for v in ctx.variables)


def mono_ideal(ctx, exps):
    return Ideal([Polynomial.monomial(ctx, e) for e in exps], ctx)


# -- combinatorial oracle ---------------------------------------------------

def oracle_minimalize(exps):
    exps = sorted(set(map(tuple, exps)), key=lambda m: (sum(m), m))
    kept = []
    for m in exps:
        if not any(all(a <= b for a, b in zip(r, m)) for r in kept):
            kept.append(m)
    return kept


def oracle_member(m, gens):
    return any(all(a <= b for a, b in zip(g, m)) for g in gens)


def oracle_intersect(gens_a, gens_b):
    lcms = [tuple(max(a, b) for a, b in zip(ga, gb))
            for ga in gens_a for gb in gens_b]
    return oracle_minimalize(lcms)


def oracle_colon(gens_i, gens_j):
    """(I : J) for monomial ideals: intersect single-monomial colons."""
    result = None
    for m in gens_j:
        single = oracle_minimalize(
            tuple(max(a - b, 0) for a, b in zip(g, m)) for g in gens_i)
        result = single if result is None else oracle_intersect(result, single)
    return result


def oracle_colength(gens):
    """Standard-monomial count by direct box enumeration."""
    gens = oracle_minimalize(gens)
    if not gens:
        return math.inf
    d = len(gens[0])
    bounds = []
    for i in range(d):
        pure = [g[i] for g in gens if sum(g) == g[i]]
        if not pure:
            return math.inf
        bounds.append(min(pure))
    count = 0
    for mono in itertools.product(*(range(b) for b in bounds)):
        if not oracle_member(mono, gens):
            count += 1
    return count
