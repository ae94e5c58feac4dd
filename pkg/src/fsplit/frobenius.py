"""Characteristic-p primitives: Frobenius powers and roots, splitting tests,
the nu counter, and compatibility checks for Cartier-type maps.

A Frobenius root I^[1/p^e] is extracted generator-wise: every exponent vector
m is split as p^e * m' + r with r in [0, p^e)^d, which writes the generator
as a sum of p^e-th powers times the basis monomials x^r; the coefficient
polynomials over all r generate the root.  Correctness is pinned by the
adjunction I ⊆ (I^[1/p^e])^[p^e] and a brute-force minimality oracle in the
test suite.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .errors import PreconditionError
from .groebner import Ideal
from .ring import Polynomial, RingContext, _wrap


@dataclass(frozen=True)
class CartierMap:
    """A p^{-e}-linear map: the trace at level e precomposed with a multiplier."""

    multiplier: Polynomial
    level: int

    def __post_init__(self):
        if self.multiplier.is_zero:
            raise PreconditionError("Cartier map multiplier must be nonzero")
        if self.level < 1:
            raise PreconditionError("Cartier map level must be >= 1")


def frobenius_power(I: Ideal, e: int) -> Ideal:
    """The ideal generated by the p^e-th powers of the generators of I."""
    if e < 0:
        raise PreconditionError("Frobenius power needs e >= 0")
    if e == 0:
        return I
    gens = [g.frobenius_expand(e) for g in I.generators]
    if I._basis is not None:
        # A reduced basis stays a reduced basis under exponent scaling.
        basis = [g.frobenius_expand(e) for g in I._basis]
        return Ideal._with_basis(gens, basis, I.ctx)
    return Ideal(gens, I.ctx)


def frobenius_root(I: Ideal, e: int) -> Ideal:
    """The smallest ideal J with I ⊆ frobenius_power(J, e)."""
    if e < 0:
        raise PreconditionError("Frobenius root needs e >= 0")
    if e == 0:
        return I
    ctx = I.ctx
    q = ctx.prime ** e
    gens: list[Polynomial] = []
    seen = set()
    for g in I.generators:
        if g.is_zero:
            continue
        buckets: dict[tuple[int, ...], dict] = defaultdict(dict)
        for mono, coeff in g.terms.items():
            inner = tuple(a // q for a in mono)
            r = tuple(a % q for a in mono)
            buckets[r][inner] = (buckets[r].get(inner, 0) + coeff) % ctx.prime
        for terms in buckets.values():
            cleaned = {m: c for m, c in terms.items() if c}
            if not cleaned:
                continue
            poly = _wrap(ctx, cleaned)
            if poly not in seen:
                seen.add(poly)
                gens.append(poly)
    if not gens:
        return Ideal.zero(ctx)
    return Ideal(gens, ctx)


def splitting_coefficient(f: Polynomial) -> int:
    """Coefficient of (x_1*...*x_d)^(p-1) in f^(p-1).

    A nonzero value certifies that the hypersurface quotient by f is
    Frobenius split at the origin.
    """
    if f.is_zero:
        raise PreconditionError("splitting coefficient needs a nonzero polynomial")
    ctx = f.ctx
    p = ctx.prime
    target = (p - 1,) * ctx.nvars
    return (f ** (p - 1)).coefficient(target)


def fedder_split_test(I: Ideal) -> bool:
    """Whether the quotient by I is Frobenius split locally at the origin.

    Fedder's criterion: split iff (I^[p] : I) is not contained in m^[p],
    where m is the ideal of the origin.
    """
    if I.is_unit:
        raise PreconditionError("splitting test is undefined for the unit ideal")
    ctx = I.ctx
    colon = frobenius_power(I, 1).colon(I)
    mp = frobenius_power(Ideal.maximal(ctx), 1)
    return not mp.contains_ideal(colon)


def nu_value(a: Ideal, J: Ideal, e: int) -> int:
    """max{ n >= 0 : a^n not contained in J^[p^e] }, by binary search.

    The search window [0, d*(p^e - 1) + 1] is valid because every monomial of
    the top degree has some exponent >= p^e.  Callers must ensure a ⊆ √J;
    for J the ideal of the origin this is checked via constant terms.
    """
    if e < 1:
        raise PreconditionError("nu needs e >= 1")
    ctx = a.ctx
    if J.equals(Ideal.maximal(ctx)):
        for g in a.generators:
            if g.constant_term():
                raise PreconditionError(
                    "nu at the origin needs generators without constant term")
    Jq = frobenius_power(J, e)
    if Jq.is_unit:
        raise PreconditionError("nu is undefined against the unit ideal")
    q = ctx.prime ** e
    hi = ctx.nvars * (q - 1) + 1

    powers: dict[int, Ideal] = {}

    def contained(n: int) -> bool:
        if n not in powers:
            powers[n] = a.power(n)
        return Jq.contains_ideal(powers[n])

    if not contained(hi):
        raise PreconditionError(
            "nu search bound exceeded; input violates a ⊆ √J")
    lo = 0
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if contained(mid):
            hi = mid
        else:
            lo = mid
    return lo


def is_compatible(J: Ideal, phi: CartierMap) -> bool:
    """Whether phi maps (J mod p^e-th roots) back into J.

    In ideal terms: frobenius_root(g*J, e) ⊆ J for phi = (g, e).
    """
    ctx = J.ctx
    scaled = Ideal([phi.multiplier], ctx).product(J)
    root = frobenius_root(scaled, phi.level)
    return J.contains_ideal(root)


def is_uniformly_compatible(J: Ideal) -> bool:
    """Compatibility with every p^{-e}-linear map of the ambient polynomial
    ring; level one suffices because roots compose."""
    root = frobenius_root(J, 1)
    return J.contains_ideal(root)
