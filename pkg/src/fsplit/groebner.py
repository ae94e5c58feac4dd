"""Reduced Groebner bases and the ideal toolbox built on them.

The engine is a Buchberger loop with the sugar selection strategy and both
classical pair-discarding criteria.  Ideals cache their reduced basis
(write-once); every derived operation — membership, colon, intersection,
equality, colength — goes through that basis, so results are deterministic
for a fixed context and order.
"""

from __future__ import annotations

import heapq
import math
from typing import Iterable, Sequence

from .errors import ContextMismatchError, PreconditionError
from .ring import Monomial, Polynomial, RingContext, _wrap, order_key_function

Terms = dict  # dict[Monomial, int], the engine's raw polynomial representation


# ---------------------------------------------------------------------------
# monomial helpers
# ---------------------------------------------------------------------------

def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def _mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def _mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _mono_quot(b: Monomial, a: Monomial) -> Monomial | None:
    out = []
    for x, y in zip(a, b):
        if x > y:
            return None
        out.append(y - x)
    return tuple(out)


# ---------------------------------------------------------------------------
# raw polynomial engine (term dicts, no Polynomial wrappers)
# ---------------------------------------------------------------------------

def _monic(terms: Terms, p: int, keyf) -> Terms:
    lt = max(terms, key=keyf)
    c = terms[lt]
    if c == 1:
        return terms
    inv = pow(c, p - 2, p)
    return {m: (v * inv) % p for m, v in terms.items()}


def _neg_key(k: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(-x for x in k)


def _reduce(terms: Terms, divisors: Sequence[tuple[Monomial, Terms]], p: int, keyf) -> Terms:
    """Full normal form of `terms` modulo monic divisors (leading term, tail)."""
    if not terms or not divisors:
        return dict(terms)
    work = dict(terms)
    heap = [(_neg_key(keyf(m)), m) for m in work]
    heapq.heapify(heap)
    remainder: Terms = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = work.pop(m, 0)
        if not c:
            continue  # stale heap entry
        for lt, tail in divisors:
            q = _mono_quot(m, lt)
            if q is None:
                continue
            for tm, tc in tail.items():
                mm = _mono_mul(q, tm)
                old = work.get(mm)
                if old is None:
                    v = (-c * tc) % p
                    if v:
                        work[mm] = v
                        heapq.heappush(heap, (_neg_key(keyf(mm)), mm))
                else:
                    v = (old - c * tc) % p
                    if v:
                        work[mm] = v
                    else:
                        del work[mm]
            break
        else:
            remainder[m] = c
    return remainder


def _split(terms: Terms, keyf) -> tuple[Monomial, Terms]:
    """Split a monic polynomial into (leading monomial, tail terms)."""
    lt = max(terms, key=keyf)
    tail = {m: c for m, c in terms.items() if m != lt}
    return lt, tail


def _spoly(lt1: Monomial, t1: Terms, lt2: Monomial, t2: Terms, p: int) -> Terms:
    """S-polynomial of two monic polynomials given as (lt, full terms)."""
    lcm = _mono_lcm(lt1, lt2)
    u1 = tuple(a - b for a, b in zip(lcm, lt1))
    u2 = tuple(a - b for a, b in zip(lcm, lt2))
    out: Terms = {}
    for m, c in t1.items():
        mm = _mono_mul(u1, m)
        v = (out.get(mm, 0) + c) % p
        if v:
            out[mm] = v
        else:
            out.pop(mm, None)
    for m, c in t2.items():
        mm = _mono_mul(u2, m)
        v = (out.get(mm, 0) - c) % p
        if v:
            out[mm] = v
        else:
            out.pop(mm, None)
    return out


def _minimal_monomials(monos: Iterable[Monomial]) -> list[Monomial]:
    """Divisibility-minimal subset, deterministic order (degree, then value)."""
    unique = sorted(set(monos), key=lambda m: (sum(m), m))
    if unique and len(unique[0]) == 2:
        # staircase sweep: after sorting by (a, b), a point is minimal exactly
        # when its b undercuts everything seen so far
        pts = sorted(unique)
        kept2: list[Monomial] = []
        best = None
        for m in pts:
            if best is None or m[1] < best:
                kept2.append(m)
                best = m[1]
        kept2.sort(key=lambda m: (sum(m), m))
        return kept2
    kept: list[Monomial] = []
    degrees: list[int] = []
    for m in unique:
        dm = sum(m)
        redundant = False
        for r, dr in zip(kept, degrees):
            if dr >= dm:
                break  # same-degree distinct monomials never divide each other
            if _mono_divides(r, m):
                redundant = True
                break
        if not redundant:
            kept.append(m)
            degrees.append(dm)
    return kept


def _interreduce(basis: list[Terms], p: int, keyf) -> list[Terms]:
    """Turn a Groebner basis into the reduced one (minimal, monic, tails reduced)."""
    polys = [_monic(t, p, keyf) for t in basis if t]
    with_lt = sorted(((max(t, key=keyf), t) for t in polys), key=lambda x: keyf(x[0]))
    minimal: list[tuple[Monomial, Terms]] = []
    for lt, t in with_lt:
        if not any(_mono_divides(m, lt) for m, _ in minimal):
            minimal.append((lt, t))
    result = [t for _, t in minimal]
    for i in range(len(result)):
        others = [_split(t, keyf) for j, t in enumerate(result) if j != i]
        reduced = _reduce(result[i], others, p, keyf)
        result[i] = _monic(reduced, p, keyf)
    result.sort(key=lambda t: keyf(max(t, key=keyf)), reverse=True)
    return result


def _pair_sugar(lcm, lt_i, lt_j, sugar_i, sugar_j) -> int:
    return sum(lcm) + max(sugar_i - sum(lt_i), sugar_j - sum(lt_j))


def _buchberger(generators: Sequence[Terms], p: int, keyf,
                groups: Sequence[tuple[int, int]] = ()) -> list[Terms]:
    """Reduced Groebner basis of the given generators.

    `groups` marks index ranges whose mutual S-pairs are already known to
    reduce to zero (e.g. the image of a cached basis under a monomial-wise
    ring map); those pairs are seeded as processed.
    """
    polys = [t for t in generators if t]
    if not polys:
        return []
    if all(len(t) == 1 for t in polys):
        monos = _minimal_monomials(next(iter(t)) for t in polys)
        monos.sort(key=keyf, reverse=True)
        return [{m: 1} for m in monos]

    group_of = {}
    for gid, (start, end) in enumerate(groups):
        for i in range(start, end):
            group_of[i] = gid

    basis: list[Terms] = []
    lts: list[Monomial] = []
    sugars: list[int] = []
    done: set[tuple[int, int]] = set()
    pairs: list[tuple[int, tuple[int, ...], int, int]] = []

    def push_pairs(j: int) -> None:
        for i in range(j):
            if group_of.get(i, -1) == group_of.get(j, -2):
                done.add((i, j))
                continue
            lcm = _mono_lcm(lts[i], lts[j])
            s = _pair_sugar(lcm, lts[i], lts[j], sugars[i], sugars[j])
            heapq.heappush(pairs, (s, keyf(lcm), i, j))

    for idx, t in enumerate(polys):
        mt = _monic(t, p, keyf)
        basis.append(mt)
        lts.append(max(mt, key=keyf))
        sugars.append(max(sum(m) for m in mt))
        if idx > 0:
            # temporarily extend group map before pushing (group ids precomputed)
            push_pairs(idx)

    divisors_cache: list[tuple[Monomial, Terms]] | None = None

    while pairs:
        sugar, _, i, j = heapq.heappop(pairs)
        if (i, j) in done:
            continue
        done.add((i, j))
        lcm = _mono_lcm(lts[i], lts[j])
        if lcm == _mono_mul(lts[i], lts[j]):
            continue  # coprime leading terms
        skip = False
        for k in range(len(basis)):
            if k == i or k == j:
                continue
            if _mono_divides(lts[k], lcm):
                a = (i, k) if i < k else (k, i)
                b = (j, k) if j < k else (k, j)
                if a in done and b in done:
                    skip = True
                    break
        if skip:
            continue
        s = _spoly(lts[i], basis[i], lts[j], basis[j], p)
        if divisors_cache is None or len(divisors_cache) != len(basis):
            divisors_cache = [_split(t, keyf) for t in basis]
        r = _reduce(s, divisors_cache, p, keyf)
        if not r:
            continue
        r = _monic(r, p, keyf)
        basis.append(r)
        lts.append(max(r, key=keyf))
        sugars.append(max(sugar, max(sum(m) for m in r)))
        divisors_cache = None
        push_pairs(len(basis) - 1)

    return _interreduce(basis, p, keyf)


def _count_standard_monomials(lts: Sequence[Monomial], nvars: int) -> int | float:
    """Number of monomials outside the staircase of the given leading terms.

    Returns math.inf when some variable has no pure power among the leading
    terms (the quotient is then infinite-dimensional).
    """
    minimal = _minimal_monomials(lts)
    if any(sum(m) == 0 for m in minimal):
        return 0
    return _count_rec(tuple(minimal), nvars)


def _count_rec(gens: tuple[Monomial, ...], k: int) -> int | float:
    if k == 0:
        return 0 if gens else 1
    bound = None
    for g in gens:
        if sum(g) == g[k - 1]:  # pure power of the k-th variable
            e = g[k - 1]
            if bound is None or e < bound:
                bound = e
    if bound is None:
        if not gens:
            return math.inf
        # no pure power in variable k: infinite unless handled by projection
        return math.inf
    thresholds = sorted({g[k - 1] for g in gens if g[k - 1] < bound} | {0})
    total = 0
    for t_idx, t in enumerate(thresholds):
        upper = thresholds[t_idx + 1] if t_idx + 1 < len(thresholds) else bound
        projected = tuple(_minimal_monomials(
            g[:k - 1] for g in gens if g[k - 1] <= t))
        sub = _count_rec(projected, k - 1)
        if sub is math.inf:
            return math.inf
        total += (upper - t) * sub
    return total


# ---------------------------------------------------------------------------
# Ideal
# ---------------------------------------------------------------------------

class Ideal:
    """An ideal of the polynomial ring, given by a nonempty generator list.

    The reduced Groebner basis is computed at most once and cached; ideals
    are otherwise immutable.  Generators may include zero polynomials, so
    the zero ideal is ``Ideal([Polynomial.zero(ctx)])``.
    """

    __slots__ = ("ctx", "generators", "_basis")

    def __init__(self, generators: Sequence[Polynomial], ctx: RingContext | None = None):
        gens = tuple(generators)
        if not gens:
            raise PreconditionError("an ideal needs at least one generator")
        if ctx is None:
            ctx = gens[0].ctx
        for g in gens:
            if g.ctx != ctx:
                raise ContextMismatchError("generators live in different rings")
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "_basis", None)

    def __setattr__(self, name, value):
        raise AttributeError("Ideal is immutable")

    @classmethod
    def zero(cls, ctx: RingContext) -> "Ideal":
        return cls([Polynomial.zero(ctx)], ctx)

    @classmethod
    def unit(cls, ctx: RingContext) -> "Ideal":
        return cls([Polynomial.one(ctx)], ctx)

    @classmethod
    def maximal(cls, ctx: RingContext) -> "Ideal":
        """The ideal generated by all variables (the origin)."""
        return cls([Polynomial.variable(ctx, v) for v in ctx.variables], ctx)

    @classmethod
    def _with_basis(cls, generators: Sequence[Polynomial], basis: Sequence[Polynomial],
                    ctx: RingContext) -> "Ideal":
        ideal = cls(generators, ctx)
        object.__setattr__(ideal, "_basis", tuple(basis))
        return ideal

    # -- basis ---------------------------------------------------------

    def groebner_basis(self) -> tuple[Polynomial, ...]:
        """Reduced Groebner basis for the context's order (cached, write-once)."""
        cached = self._basis
        if cached is not None:
            return cached
        ctx = self.ctx
        keyf = ctx.key_function()
        raw = _buchberger([g.terms for g in self.generators], ctx.prime, keyf)
        basis = tuple(_wrap(ctx, t) for t in raw)
        object.__setattr__(self, "_basis", basis)
        return basis

    def _basis_terms(self) -> list[Terms]:
        return [g.terms for g in self.groebner_basis()]

    def _divisors(self) -> list[tuple[Monomial, Terms]]:
        keyf = self.ctx.key_function()
        return [_split(t, keyf) for t in self._basis_terms()]

    # -- predicates ------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.groebner_basis()

    @property
    def is_unit(self) -> bool:
        basis = self.groebner_basis()
        return len(basis) == 1 and basis[0] == Polynomial.one(self.ctx)

    @property
    def is_proper(self) -> bool:
        return not self.is_unit

    def is_monomial_ideal(self) -> bool:
        return all(g.is_monomial for g in self.groebner_basis())

    # -- core operations --------------------------------------------------

    def normal_form(self, f: Polynomial) -> Polynomial:
        """Remainder of f under division by the reduced basis; zero iff f is a member."""
        if f.ctx != self.ctx:
            raise ContextMismatchError("polynomial lives in a different ring")
        r = _reduce(f.terms, self._divisors(), self.ctx.prime, self.ctx.key_function())
        return _wrap(self.ctx, r)

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero

    def contains_ideal(self, other: "Ideal") -> bool:
        self._check_ctx(other)
        return all(self.contains(g) for g in other.groebner_basis())

    def equals(self, other: "Ideal") -> bool:
        self._check_ctx(other)
        return list(self.groebner_basis()) == list(other.groebner_basis())

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.equals(other)

    def __hash__(self):
        return hash((self.ctx, self.groebner_basis()))

    def _check_ctx(self, other: "Ideal") -> None:
        if other.ctx != self.ctx:
            raise ContextMismatchError("ideals live in different rings")

    def sum(self, other: "Ideal") -> "Ideal":
        self._check_ctx(other)
        return Ideal(self.generators + other.generators, self.ctx)

    def product(self, other: "Ideal") -> "Ideal":
        self._check_ctx(other)
        gens = _multiply_generator_lists(
            [g for g in self.generators if not g.is_zero],
            [g for g in other.generators if not g.is_zero],
            self.ctx)
        if not gens:
            return Ideal.zero(self.ctx)
        return Ideal(gens, self.ctx)

    def power(self, n: int) -> "Ideal":
        """n-th ordinary power, by binary powering with generator pruning."""
        if n < 0:
            raise PreconditionError("ideal powers need n >= 0")
        if n == 0:
            return Ideal.unit(self.ctx)
        gens = [g for g in self.generators if not g.is_zero]
        if gens and all(g.is_monomial for g in gens):
            exps = _minimal_monomials(next(iter(g.terms)) for g in gens)
            return Ideal([Polynomial.monomial(self.ctx, m)
                          for m in _monomial_power(exps, n)], self.ctx)
        result: Ideal | None = None
        base = self
        while True:
            if n & 1:
                result = base if result is None else result.product(base)
            n >>= 1
            if not n:
                break
            base = base.product(base)
        return result

    def intersect(self, other: "Ideal") -> "Ideal":
        """I ∩ J via elimination of one auxiliary variable."""
        self._check_ctx(other)
        if self.is_zero or other.is_zero:
            return Ideal.zero(self.ctx)
        return _intersect(self, other)

    def colon(self, other: "Ideal | Polynomial") -> "Ideal":
        """The colon ideal {f : f*J ⊆ I}.

        Multi-generator J is handled as the intersection of single-generator
        colons; a single-generator colon divides I ∩ (g) by g.
        """
        if isinstance(other, Polynomial):
            other = Ideal([other], self.ctx)
        self._check_ctx(other)
        gens = [g for g in other.groebner_basis() if not g.is_zero]
        if not gens:
            return Ideal.unit(self.ctx)
        result: Ideal | None = None
        for g in gens:
            partial = _colon_single(self, g)
            result = partial if result is None else result.intersect(partial)
        return result

    def colength(self) -> int | float:
        """Vector-space dimension of the quotient ring; math.inf if infinite."""
        keyf = self.ctx.key_function()
        lts = [max(t, key=keyf) for t in self._basis_terms()]
        return _count_standard_monomials(lts, self.ctx.nvars)

    def dimension(self) -> int:
        """Krull dimension of the quotient (combinatorial, from leading terms).

        Returns -1 for the unit ideal.
        """
        keyf = self.ctx.key_function()
        lts = _minimal_monomials(max(t, key=keyf) for t in self._basis_terms())
        if any(sum(m) == 0 for m in lts):
            return -1
        n = self.ctx.nvars
        if not lts:
            return n
        best = -1
        for mask in range(1 << n):
            size = mask.bit_count()
            if size <= best:
                continue
            inside = [i for i in range(n) if mask >> i & 1]
            if all(any(m[i] for i in range(n) if not (mask >> i & 1)) for m in lts):
                best = size
        return best

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.generators) + ")"

    def __repr__(self) -> str:
        return f"Ideal{self}"


def _monomial_power(exps: Sequence[Monomial], n: int) -> list[Monomial]:
    """Minimal generators of the n-th power of a monomial ideal."""
    if len(exps) == 1:
        return [tuple(n * a for a in exps[0])]
    if len(exps) == 2:
        g1, g2 = exps
        products = (tuple(k * a + (n - k) * b for a, b in zip(g1, g2))
                    for k in range(n + 1))
        return _minimal_monomials(products)
    result: list[Monomial] | None = None
    base = list(exps)
    while True:
        if n & 1:
            result = base if result is None else _minimal_monomials(
                _mono_mul(x, y) for x in result for y in base)
        n >>= 1
        if not n:
            break
        base = _minimal_monomials(_mono_mul(x, y) for x in base for y in base)
    return result


def _multiply_generator_lists(a: Sequence[Polynomial], b: Sequence[Polynomial],
                              ctx: RingContext) -> list[Polynomial]:
    if a and b and all(p.is_monomial for p in a) and all(p.is_monomial for p in b):
        exps_a = [next(iter(p.terms)) for p in a]
        exps_b = [next(iter(p.terms)) for p in b]
        monos = _minimal_monomials(_mono_mul(x, y) for x in exps_a for y in exps_b)
        return [Polynomial.monomial(ctx, m) for m in monos]
    products = {p1 * p2 for p1 in a for p2 in b}
    products.discard(Polynomial.zero(ctx))
    polys = list(products)
    if polys and all(p.is_monomial for p in polys):
        monos = _minimal_monomials(next(iter(p.terms)) for p in polys)
        return [Polynomial.monomial(ctx, m) for m in monos]
    keyf = ctx.key_function()
    polys.sort(key=lambda p: sorted((keyf(m), c) for m, c in p.terms.items()))
    return polys


def _extended_key(base_keyf):
    def key(m: Monomial) -> tuple[int, ...]:
        return (m[0],) + base_keyf(m[1:])
    return key


def _intersect(I: Ideal, J: Ideal) -> Ideal:
    """Elimination computation of I ∩ J with an auxiliary leading variable t:
    the t-free part of a Groebner basis of t*I + (1-t)*J."""
    ctx = I.ctx
    p = ctx.prime
    keyf = _extended_key(ctx.key_function())
    gens: list[Terms] = []
    bi = I._basis_terms()
    bj = J._basis_terms()
    for t in bi:
        gens.append({(1,) + m: c for m, c in t.items()})
    for t in bj:
        ext: Terms = {}
        for m, c in t.items():
            ext[(0,) + m] = c
            ext[(1,) + m] = (-c) % p
        gens.append(ext)
    groups = [(0, len(bi)), (len(bi), len(bi) + len(bj))]
    basis = _buchberger(gens, p, keyf, groups=groups)
    kept = [{m[1:]: c for m, c in t.items()} for t in basis
            if max(m[0] for m in t) == 0]
    polys = [_wrap(ctx, t) for t in kept]
    if not polys:
        return Ideal.zero(ctx)
    return Ideal._with_basis(polys, polys, ctx)


def _colon_single(I: Ideal, g: Polynomial) -> Ideal:
    ctx = I.ctx
    if g.is_zero:
        return Ideal.unit(ctx)
    H = I.intersect(Ideal([g], ctx))
    if H.is_zero:
        return Ideal.zero(ctx)
    quotients = [_exact_divide(h, g) for h in H.groebner_basis()]
    keyf = ctx.key_function()
    raw = _interreduce([q.terms for q in quotients], ctx.prime, keyf)
    polys = [_wrap(ctx, t) for t in raw]
    return Ideal._with_basis(polys, polys, ctx)


def extend_basis(I: Ideal, extras: Sequence[Polynomial]) -> Ideal:
    """The ideal I + (extras), with Buchberger seeded by I's reduced basis
    so that pairs internal to the known basis are skipped."""
    ctx = I.ctx
    keyf = ctx.key_function()
    known = I._basis_terms()
    gens = known + [g.terms for g in extras if not g.is_zero]
    raw = _buchberger(gens, ctx.prime, keyf, groups=[(0, len(known))])
    basis = [_wrap(ctx, t) for t in raw]
    return Ideal._with_basis(tuple(I.generators) + tuple(extras), basis, ctx)


def _exact_divide(h: Polynomial, g: Polynomial) -> Polynomial:
    """Quotient h/g when g divides h exactly."""
    ctx = h.ctx
    p = ctx.prime
    keyf = ctx.key_function()
    g_lt = max(g.terms, key=keyf)
    g_lc = g.terms[g_lt]
    inv = pow(g_lc, p - 2, p)
    work = dict(h.terms)
    quotient: Terms = {}
    while work:
        m = max(work, key=keyf)
        c = work[m]
        q = _mono_quot(m, g_lt)
        if q is None:
            raise PreconditionError("exact division failed; divisor does not divide")
        qc = (c * inv) % p
        quotient[q] = qc
        for gm, gc in g.terms.items():
            mm = _mono_mul(q, gm)
            v = (work.get(mm, 0) - qc * gc) % p
            if v:
                work[mm] = v
            else:
                work.pop(mm, None)
    return _wrap(ctx, quotient)
