"""Splitting numbers a_e and F-signature estimates for hypersurface quotients.

For R = S/(f) at the origin, a_e is the number of free direct summands of
R viewed over its subring of p^e-th powers.  It is realized as the colength
of the colon ideal (m^[p^e] : f^(p^e - 1)) in the ambient ring S: an element
r contributes a free summand exactly when f^(p^e - 1) * r stays outside
m^[p^e].  The sequence a_e / p^(e*d), with d = dim R, converges to the
F-signature s(R) in [0, 1].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError
from .frobenius import frobenius_power
from .groebner import Ideal, extend_basis
from .ring import Polynomial


@dataclass(frozen=True)
class FSignatureSample:
    e: int
    a_e: int
    ratio: Fraction


@dataclass(frozen=True)
class FSignatureReport:
    """Splitting-number samples and the resulting F-signature estimate."""

    prime: int
    dimension: int
    samples: tuple[FSignatureSample, ...]
    estimate: Fraction
    delta_exponent: int


def _validate_hypersurface(f: Polynomial) -> None:
    if f.is_zero:
        raise PreconditionError("the hypersurface polynomial must be nonzero")
    if f.constant_term():
        raise PreconditionError(
            "the hypersurface must pass through the origin (no constant term)")
    # Squarefreeness of f (reducedness of the quotient) is a caller contract;
    # degenerate inputs surface as an infinite colength below.


def _free_rank_sequence(f: Polynomial, e_max: int) -> list[int]:
    """a_1 .. a_{e_max} via the level-by-level colon recursion.

    With I_0 = m and I_e = (I_{e-1}^[p] : f^(p-1)), flatness of Frobenius
    gives I_e = (m^[p^e] : f^(p^e - 1)), so a_e = colength(I_e).  The final
    level avoids the colon: counting ranks of multiplication by f^(p-1) on
    the quotient by I_{e-1}^[p] gives
    a_e = p^n * a_{e-1} - colength(I_{e-1}^[p] + (f^(p-1))).
    """
    ctx = f.ctx
    p = ctx.prime
    fp = f ** (p - 1)
    fp_ideal = Ideal([fp], ctx)
    counts: list[int] = []
    current = Ideal.maximal(ctx)
    a_prev = 1
    for level in range(1, e_max + 1):
        expanded = frobenius_power(current, 1)
        if level < e_max:
            current = expanded.colon(fp_ideal)
            a = current.colength()
            if a is math.inf:
                raise PreconditionError(
                    "the splitting colon ideal is not zero-dimensional; "
                    "the input does not define a reduced hypersurface")
            a_prev = int(a)
        else:
            expanded.groebner_basis()
            cut = extend_basis(expanded, [fp]).colength()
            if cut is math.inf:
                raise PreconditionError(
                    "the splitting colon ideal is not zero-dimensional; "
                    "the input does not define a reduced hypersurface")
            a_prev = p ** ctx.nvars * a_prev - int(cut)
        counts.append(a_prev)
    return counts


def splitting_number_hypersurface(f: Polynomial, e: int) -> int:
    """The number a_e of free rank-one summands at level e for the quotient
    by f, at the origin."""
    _validate_hypersurface(f)
    if e < 1:
        raise PreconditionError("splitting numbers need e >= 1")
    return _free_rank_sequence(f, e)[-1]


def fsignature_estimate(f: Polynomial, e_max: int) -> FSignatureReport:
    """Samples a_e for e = 1..e_max and the normalized ratios a_e / p^(e*d).

    The estimate is the last ratio; no extrapolation is applied.
    """
    _validate_hypersurface(f)
    if not 1 <= e_max <= 4:
        raise PreconditionError("e_max must lie in 1..4")
    ctx = f.ctx
    p = ctx.prime
    d = ctx.nvars - 1
    counts = _free_rank_sequence(f, e_max)
    samples = tuple(
        FSignatureSample(e, a, Fraction(a, p ** (e * d)))
        for e, a in enumerate(counts, start=1))
    return FSignatureReport(
        prime=p,
        dimension=d,
        samples=samples,
        estimate=samples[-1].ratio,
        delta_exponent=d,
    )
