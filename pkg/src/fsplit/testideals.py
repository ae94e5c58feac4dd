"""Test ideals tau(a^t) in the polynomial ring, test ideals of hypersurface
and complete-intersection quotients, F-threshold brackets, jumping-number
candidates, asymptotic test ideals, and the symbolic-power containment check.

Ascending chains are detected as stabilized only after a configurable number
of consecutive confirmations, and a hard cap turns silent truncation into a
BudgetExceededError.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import (BadTestElementError, BudgetExceededError,
                     PreconditionError)
from .frobenius import fedder_split_test, frobenius_power, frobenius_root
from .groebner import Ideal
from .ring import Polynomial, RingContext


@dataclass(frozen=True)
class ChainConfig:
    """Budgets for stabilization detection of ascending ideal chains."""

    max_e: int = 6
    confirmations: int = 2

    def __post_init__(self):
        if self.max_e < 1 or self.confirmations < 1:
            raise PreconditionError("budgets must be positive")


DEFAULT_CONFIG = ChainConfig()


@dataclass(frozen=True)
class StabilizationReport:
    """A stabilized chain value together with where and how it stabilized."""

    result: Ideal
    stabilized_at_e: int
    confirmations: int


@dataclass(frozen=True)
class FptInterval:
    """Bracket [nu/p^e, (nu+1)/p^e] around the F-pure threshold at level e."""

    low: Fraction
    high: Fraction
    level: int


def _as_exponent(t) -> Fraction:
    t = Fraction(t)
    if t < 0:
        raise PreconditionError("exponents must be >= 0")
    return t


def _stabilize(values, config: ChainConfig, what: str) -> tuple[Ideal, int]:
    """Walk an ascending chain until `confirmations`+1 consecutive values agree.

    `values` yields (index, Ideal).  Returns (value, first index of the run).
    """
    prev: Ideal | None = None
    run_start = 0
    equal_run = 0
    for index, current in values:
        if prev is not None and current.equals(prev):
            equal_run += 1
            if equal_run == config.confirmations:
                return current, run_start
        else:
            equal_run = 0
            run_start = index
        prev = current
    raise BudgetExceededError(
        f"{what} did not stabilize within max_e={config.max_e} "
        f"(confirmations={config.confirmations})")


def test_ideal_regular(a: Ideal, t, config: ChainConfig = DEFAULT_CONFIG) -> StabilizationReport:
    """tau(a^t) in the ambient polynomial ring.

    Computed as the stabilized value of the ascending chain
    e -> frobenius_root(a^ceil(t*p^e), e).
    """
    t = _as_exponent(t)
    if all(g.is_zero for g in a.generators):
        raise PreconditionError("test ideals need a nonzero ideal")
    ctx = a.ctx
    if t == 0:
        return StabilizationReport(Ideal.unit(ctx), 0, config.confirmations)

    def chain():
        for e in range(1, config.max_e + 1):
            n = math.ceil(t * ctx.prime ** e)
            yield e, frobenius_root(a.power(n), e)

    result, at = _stabilize(chain(), config, f"test ideal chain for t={t}")
    return StabilizationReport(result, at, config.confirmations)


def fpt_interval(a: Ideal, e: int, config: ChainConfig = DEFAULT_CONFIG) -> FptInterval:
    """Level-e bracket around the F-pure threshold of a at the origin."""
    from .frobenius import nu_value

    if e < 1:
        raise PreconditionError("fpt bracketing needs e >= 1")
    ctx = a.ctx
    for g in a.generators:
        if g.constant_term():
            raise PreconditionError(
                "F-pure threshold needs an ideal contained in the origin's ideal")
    nu = nu_value(a, Ideal.maximal(ctx), e)
    q = ctx.prime ** e
    return FptInterval(Fraction(nu, q), Fraction(nu + 1, q), e)


def f_jumping_candidates(a: Ideal, e: int, t_max,
                         config: ChainConfig = DEFAULT_CONFIG) -> list[Fraction]:
    """Grid points k/p^e up to t_max where tau(a^t) strictly drops.

    A p^{-e}-resolution approximation of the F-jumping set.
    """
    if e < 1:
        raise PreconditionError("jumping candidates need e >= 1")
    t_max = _as_exponent(t_max)
    ctx = a.ctx
    if a.is_unit:
        return []
    q = ctx.prime ** e
    jumps: list[Fraction] = []
    previous = Ideal.unit(ctx)
    for k in range(1, math.floor(t_max * q) + 1):
        current = test_ideal_regular(a, Fraction(k, q), config).result
        if not current.equals(previous):
            jumps.append(Fraction(k, q))
        previous = current
    return jumps


# ---------------------------------------------------------------------------
# quotient rings
# ---------------------------------------------------------------------------

def _jacobian_test_element(I: Ideal, primes: Sequence[Ideal]) -> Polynomial:
    """First partial derivative of a generator that is nonzero mod I and
    avoids every supplied minimal prime."""
    for g in I.generators:
        if g.is_zero:
            continue
        for i in range(I.ctx.nvars):
            h = g.partial_derivative(i)
            if h.is_zero or I.contains(h):
                continue
            if all(not P.contains(h) for P in primes):
                return h
    raise BadTestElementError(
        "no partial derivative of the generators works as a test element; "
        "supply one explicitly")


def test_ideal_quotient(I: Ideal, test_element: Polynomial | None = None,
                        minimal_primes: Sequence[Ideal] | None = None,
                        config: ChainConfig = DEFAULT_CONFIG) -> Ideal:
    """Lift to the ambient ring of the test ideal of the quotient by I.

    Starting from I + (c) for a test element c, the iteration repeatedly adds
    frobenius_root(u * J, 1) for u ranging over generators of (I^[p] : I);
    level one suffices because these maps compose.  I must be radical and c
    must localize the quotient to a regular ring (caller contract; by default
    c is picked from the Jacobian of the generators).
    """
    ctx = I.ctx
    if I.is_unit:
        raise PreconditionError("quotient test ideal needs a proper ideal")
    if I.is_zero:
        return Ideal.unit(ctx)
    primes = list(minimal_primes) if minimal_primes else [I]
    c = test_element if test_element is not None else _jacobian_test_element(I, primes)
    if c.is_zero:
        raise BadTestElementError("test element must be nonzero")
    for P in primes:
        if P.contains(c):
            raise BadTestElementError(
                f"test element {c} lies in the minimal prime {P}")

    carriers = [u for u in frobenius_power(I, 1).colon(I).groebner_basis()
                if not u.is_zero]

    def chain():
        J = Ideal(list(I.generators) + [c], ctx)
        yield 0, J
        for step in range(1, config.max_e + 1):
            gens = list(J.groebner_basis())
            extra: list[Polynomial] = []
            for u in carriers:
                scaled = Ideal([u * g for g in gens] or [Polynomial.zero(ctx)], ctx)
                extra.extend(frobenius_root(scaled, 1).generators)
            J = Ideal(gens + extra, ctx)
            yield step, J

    result, _ = _stabilize(chain(), config, "quotient test ideal iteration")
    if result.is_unit and not fedder_split_test(I):
        raise BadTestElementError(
            "iteration reached the unit ideal but the quotient is not "
            "Frobenius split; the test element is invalid")
    return result


def vassilev_chain(I: Ideal, test_element: Polynomial | None = None,
                   minimal_primes: Sequence[Ideal] | None = None,
                   config: ChainConfig = DEFAULT_CONFIG) -> list[Ideal]:
    """Ascending chain of lifted test ideals of successive quotients.

    Starts from the quotient by I (which must be Frobenius split) and stops
    when the next test ideal is the unit ideal.  The optional test element
    and minimal primes apply to the first stage only; later stages reselect
    via the Jacobian heuristic.
    """
    if not fedder_split_test(I):
        raise PreconditionError(
            "the chain construction needs a Frobenius split quotient")
    chain: list[Ideal] = []
    current = I
    stage = 0
    while True:
        try:
            tau = test_ideal_quotient(
                current,
                test_element=test_element if stage == 0 else None,
                minimal_primes=minimal_primes if stage == 0 else None,
                config=config)
        except (BadTestElementError, BudgetExceededError) as exc:
            raise type(exc)(f"stage {stage}: {exc}") from exc
        if tau.is_unit:
            return chain
        if tau.dimension() >= current.dimension():
            raise BadTestElementError(
                f"stage {stage}: test ideal did not increase height; "
                "the test element is invalid")
        chain.append(tau)
        current = tau
        stage += 1
        if stage > I.ctx.nvars + 1:
            raise BudgetExceededError("chain exceeded the ambient dimension")


# ---------------------------------------------------------------------------
# graded sequences, asymptotic test ideals, symbolic powers
# ---------------------------------------------------------------------------

def symbolic_power(primes: Sequence[Ideal], n: int,
                   ctx: RingContext | None = None) -> Ideal:
    """n-th symbolic power of a squarefree monomial ideal, given its minimal
    primes (each generated by a subset of the variables): the intersection of
    the n-th ordinary powers."""
    if n < 1:
        raise PreconditionError("symbolic powers need n >= 1")
    if not primes:
        if ctx is None:
            raise PreconditionError("an ambient context is required without primes")
        return Ideal.unit(ctx)
    ctx = primes[0].ctx
    normalized: list[Ideal] = []
    for P in primes:
        gens = []
        for g in P.generators:
            if not g.is_monomial or g.total_degree() != 1:
                raise PreconditionError(
                    f"generator {g} is not a variable; symbolic powers are "
                    "implemented for variable-generated primes only")
            gens.append(Polynomial.monomial(ctx, next(iter(g.terms))))
        normalized.append(Ideal(gens, ctx))
    result: Ideal | None = None
    for P in normalized:
        Pn = P.power(n)
        result = Pn if result is None else result.intersect(Pn)
    return result


def check_symbolic_containment(primes: Sequence[Ideal], n: int, d: int) -> bool:
    """Verify I^(d*n) ⊆ I^n for the squarefree monomial ideal with the given
    minimal primes; d must be the ambient variable count."""
    if n < 1:
        raise PreconditionError("containment check needs n >= 1")
    if not primes:
        raise PreconditionError("containment check needs at least one prime")
    ctx = primes[0].ctx
    if d != ctx.nvars:
        raise PreconditionError(
            f"d={d} must equal the number of variables ({ctx.nvars})")
    big = symbolic_power(primes, d * n)
    ordinary = symbolic_power(primes, 1).power(n)
    return ordinary.contains_ideal(big)


@dataclass(frozen=True)
class GradedSequence:
    """A graded sequence of ideals a_n (a_n * a_m ⊆ a_{n+m}).

    Two realizations: ordinary powers of a fixed proper ideal, or symbolic
    powers of a squarefree monomial ideal given by its minimal primes.
    """

    kind: str
    ctx: RingContext
    base: Ideal | None = None
    primes: tuple[Ideal, ...] = ()

    @classmethod
    def ordinary_powers(cls, a: Ideal) -> "GradedSequence":
        if a.is_unit:
            raise PreconditionError("ordinary-power sequences need a proper ideal")
        return cls("ordinary-powers", a.ctx, base=a)

    @classmethod
    def symbolic_squarefree(cls, primes: Sequence[Ideal],
                            ctx: RingContext | None = None) -> "GradedSequence":
        if primes:
            ctx = primes[0].ctx
        elif ctx is None:
            raise PreconditionError("an ambient context is required without primes")
        seq = cls("symbolic-squarefree", ctx, primes=tuple(primes))
        seq.term(1)  # validate the primes eagerly
        return seq

    def term(self, n: int) -> Ideal:
        if n < 1:
            raise PreconditionError("graded sequences are indexed from 1")
        if self.kind == "ordinary-powers":
            return self.base.power(n)
        return symbolic_power(list(self.primes), n, self.ctx)


def asymptotic_test_ideal(seq: GradedSequence, n: int,
                          config: ChainConfig = DEFAULT_CONFIG) -> StabilizationReport:
    """Stable value of tau(a_{m*n}^(1/m)) along the doubling sequence m = 2^k."""
    if n < 1:
        raise PreconditionError("asymptotic test ideals need n >= 1")

    def chain():
        m = 1
        for k in range(config.max_e + 1):
            inner = test_ideal_regular(seq.term(m * n), Fraction(1, m), config)
            yield k, inner.result
            m *= 2

    inner_config = ChainConfig(config.max_e, 1)
    result, at = _stabilize(chain(), inner_config,
                            f"asymptotic test ideal at n={n}")
    return StabilizationReport(result, at, 1)
