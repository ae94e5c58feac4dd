"""Exact sparse multivariate polynomial arithmetic over a prime field Z/p.

Monomials are plain tuples of non-negative integer exponents, one entry per
ring variable.  Polynomials map monomials to coefficients in {1, ..., p-1};
zero coefficients are never stored, so the zero polynomial has no terms.
All values are immutable after construction and safe to share.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Tuple

from .errors import ContextMismatchError, PreconditionError

Monomial = Tuple[int, ...]

MONOMIAL_ORDERS = ("degrevlex", "lex", "deglex")

_PRIME_LIMIT = 1 << 31
_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for every n below 2^31."""
    if n < 2:
        return False
    for small in (2, 3, 5, 7):
        if n % small == 0:
            return n == small
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # The witness set {2, 3, 5, 7} is known to be exact below 3215031751.
    for a in (2, 3, 5, 7):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class RingContext:
    """Ambient polynomial ring data: prime p, ordered variables, term order."""

    prime: int
    variables: tuple[str, ...]
    order: str = "degrevlex"

    def __post_init__(self):
        if not isinstance(self.variables, tuple):
            object.__setattr__(self, "variables", tuple(self.variables))
        if self.prime >= _PRIME_LIMIT:
            raise PreconditionError(f"prime {self.prime} exceeds the 2^31 limit")
        if not is_prime(self.prime):
            raise PreconditionError(f"{self.prime} is not prime")
        if len(self.variables) < 1:
            raise PreconditionError("at least one variable is required")
        if len(set(self.variables)) != len(self.variables):
            raise PreconditionError("variable names must be unique")
        for name in self.variables:
            if not _NAME_RE.match(name):
                raise PreconditionError(f"invalid variable name {name!r}")
        if self.order not in MONOMIAL_ORDERS:
            raise PreconditionError(f"unknown monomial order {self.order!r}")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def key_function(self) -> Callable[[Monomial], tuple[int, ...]]:
        """Return the sort key realizing this context's monomial order.

        Keys are flat integer tuples; larger key means larger monomial, and
        keys add componentwise under monomial multiplication.
        """
        return order_key_function(self.order)

    def monomial_key(self, m: Monomial) -> tuple[int, ...]:
        return self.key_function()(m)

    def variable_index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise PreconditionError(f"unknown variable {name!r}") from None


def order_key_function(order: str) -> Callable[[Monomial], tuple[int, ...]]:
    if order == "lex":
        return lambda m: m
    if order == "deglex":
        return lambda m: (sum(m),) + m
    if order == "degrevlex":
        def key(m: Monomial) -> tuple[int, ...]:
            return (sum(m),) + tuple(-e for e in reversed(m))
        return key
    raise PreconditionError(f"unknown monomial order {order!r}")


def _check_same_context(a: "Polynomial", b: "Polynomial") -> None:
    if a.ctx is not b.ctx and a.ctx != b.ctx:
        raise ContextMismatchError(
            f"operands live in different rings: {a.ctx} vs {b.ctx}"
        )


class Polynomial:
    """Immutable sparse polynomial over Z/p for a fixed :class:`RingContext`."""

    __slots__ = ("ctx", "terms", "_hash")

    def __init__(self, ctx: RingContext, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]]):
        p = ctx.prime
        d = ctx.nvars
        normalized: dict[Monomial, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, coeff in items:
            mono = tuple(mono)
            if len(mono) != d:
                raise PreconditionError(
                    f"exponent vector {mono} has length {len(mono)}, expected {d}"
                )
            if any(e < 0 for e in mono):
                raise PreconditionError(f"negative exponent in {mono}")
            c = (normalized.get(mono, 0) + coeff) % p
            if c:
                normalized[mono] = c
            else:
                normalized.pop(mono, None)
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "terms", normalized)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, ctx: RingContext) -> "Polynomial":
        return cls(ctx, {})

    @classmethod
    def one(cls, ctx: RingContext) -> "Polynomial":
        return cls.constant(ctx, 1)

    @classmethod
    def constant(cls, ctx: RingContext, c: int) -> "Polynomial":
        return cls(ctx, {(0,) * ctx.nvars: c})

    @classmethod
    def variable(cls, ctx: RingContext, name: str) -> "Polynomial":
        i = ctx.variable_index(name)
        mono = tuple(1 if j == i else 0 for j in range(ctx.nvars))
        return cls(ctx, {mono: 1})

    @classmethod
    def monomial(cls, ctx: RingContext, exponents: Iterable[int], coeff: int = 1) -> "Polynomial":
        return cls(ctx, {tuple(exponents): coeff})

    # -- queries ------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.ctx.nvars, 0)

    def total_degree(self) -> int:
        """Maximum term degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise PreconditionError("zero polynomial has no leading monomial")
        return max(self.terms, key=self.ctx.key_function())

    def coefficient(self, mono: Iterable[int]) -> int:
        return self.terms.get(tuple(mono), 0)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other) -> "Polynomial":
        if isinstance(other, int):
            other = Polynomial.constant(self.ctx, other)
        _check_same_context(self, other)
        p = self.ctx.prime
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = (out.get(m, 0) + c) % p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return _wrap(self.ctx, out)

    def __radd__(self, other) -> "Polynomial":
        return self.__add__(other)

    def __neg__(self) -> "Polynomial":
        p = self.ctx.prime
        return _wrap(self.ctx, {m: p - c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        if isinstance(other, int):
            other = Polynomial.constant(self.ctx, other)
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        _check_same_context(self, other)
        p = self.ctx.prime
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = (out.get(m, 0) + c1 * c2) % p
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return _wrap(self.ctx, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: int) -> "Polynomial":
        p = self.ctx.prime
        c %= p
        if c == 0:
            return Polynomial.zero(self.ctx)
        return _wrap(self.ctx, {m: (c * v) % p for m, v in self.terms.items()})

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise PreconditionError("negative polynomial powers are not defined")
        result = Polynomial.one(self.ctx)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def frobenius_expand(self, e: int) -> "Polynomial":
        """Return self**(p**e) by scaling every exponent vector by p**e.

        Coefficients are fixed because c**p == c in Z/p.
        """
        if e < 0:
            raise PreconditionError("Frobenius iteration count must be >= 0")
        if e == 0:
            return self
        q = self.ctx.prime ** e
        return _wrap(self.ctx, {tuple(a * q for a in m): c for m, c in self.terms.items()})

    def partial_derivative(self, var: int | str) -> "Polynomial":
        i = self.ctx.variable_index(var) if isinstance(var, str) else var
        p = self.ctx.prime
        out: dict[Monomial, int] = {}
        for m, c in self.terms.items():
            if m[i] == 0:
                continue
            v = (c * m[i]) % p
            if not v:
                continue
            mm = m[:i] + (m[i] - 1,) + m[i + 1:]
            w = (out.get(mm, 0) + v) % p
            if w:
                out[mm] = w
            else:
                out.pop(mm, None)
        return _wrap(self.ctx, out)

    # -- comparison / display -----------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.ctx, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        key = self.ctx.key_function()
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = self.ctx.variables
        parts = []
        for mono, coeff in self.sorted_terms():
            factors = []
            if coeff != 1 or not any(mono):
                factors.append(str(coeff))
            for name, e in zip(names, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def _wrap(ctx: RingContext, terms: dict[Monomial, int]) -> Polynomial:
    """Build a Polynomial from already-normalized term data without rechecking."""
    poly = Polynomial.__new__(Polynomial)
    object.__setattr__(poly, "ctx", ctx)
    object.__setattr__(poly, "terms", terms)
    object.__setattr__(poly, "_hash", None)
    return poly
