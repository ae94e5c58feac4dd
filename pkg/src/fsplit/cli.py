"""Command-line interface: one verb per kernel operation, text or JSON output.

Exit codes: 0 success, 1 mathematical-domain error, 2 parse/config error,
3 budget exceeded (chain did not stabilize).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from pathlib import Path

from .errors import (BudgetExceededError, ConfigError, FsplitError,
                     ParseError, PreconditionError)
from .frobenius import (CartierMap, fedder_split_test, frobenius_power,
                        frobenius_root, is_compatible,
                        is_uniformly_compatible, nu_value,
                        splitting_coefficient)
from .fsignature import FSignatureReport, fsignature_estimate
from .groebner import Ideal
from .parsing import parse_ideal, parse_polynomial
from .ring import RingContext, is_prime
from .testideals import (ChainConfig, GradedSequence, StabilizationReport,
                         asymptotic_test_ideal, check_symbolic_containment,
                         f_jumping_candidates, fpt_interval, symbolic_power,
                         test_ideal_quotient, test_ideal_regular,
                         vassilev_chain)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_CONFIG = 2
EXIT_BUDGET = 3

VERBS = ("gb", "member", "colon", "intersect", "fpower", "froot", "split",
         "split-coeff", "nu", "compatible", "ucompatible", "test-ideal",
         "fpt", "jumps", "tau-quotient", "vassilev", "asymptotic", "symbolic",
         "symbolic-check", "fsig")


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def _ser_ideal(I: Ideal) -> list[str]:
    basis = I.groebner_basis()
    if not basis:
        return ["0"]
    return sorted(str(g) for g in basis)


def _ser_fraction(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _ser(value):
    if isinstance(value, Ideal):
        return _ser_ideal(value)
    if isinstance(value, Fraction):
        return _ser_fraction(value)
    if isinstance(value, StabilizationReport):
        return _ser_ideal(value.result)
    if isinstance(value, FSignatureReport):
        return {
            "prime": value.prime,
            "dimension": value.dimension,
            "delta_exponent": value.delta_exponent,
            "samples": [
                {"e": s.e, "a_e": s.a_e, "ratio": _ser_fraction(s.ratio)}
                for s in value.samples
            ],
            "estimate": _ser_fraction(value.estimate),
        }
    if isinstance(value, list):
        return [_ser(v) for v in value]
    return value


def _render_text(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        if not value:
            return "[]"
        return "[" + "; ".join(_render_text(v) for v in value) + "]"
    if isinstance(value, dict):
        return ", ".join(f"{k}={_render_text(v)}" for k, v in value.items())
    return str(value)


# ---------------------------------------------------------------------------
# argument plumbing
# ---------------------------------------------------------------------------

def _parse_rational(text: str) -> Fraction:
    try:
        if "/" in text:
            num, den = text.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"invalid rational {text!r}: {exc}") from exc


def _shared_flags() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    g = shared.add_argument_group("ring and output options")
    g.add_argument("--prime", type=int, default=argparse.SUPPRESS,
                   help="characteristic p (a prime)")
    g.add_argument("--vars", default=argparse.SUPPRESS,
                   help="comma-separated variable names; order fixes the monomial order")
    g.add_argument("--order", choices=("degrevlex", "lex", "deglex"),
                   default=argparse.SUPPRESS, help="monomial order (default degrevlex)")
    g.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                   help="emit a single JSON object")
    g.add_argument("--max-e", type=int, default=argparse.SUPPRESS,
                   help="chain budget (default 6)")
    g.add_argument("--confirm", type=int, default=argparse.SUPPRESS,
                   help="stabilization confirmations (default 2)")
    g.add_argument("--config", default=argparse.SUPPRESS,
                   help="key=value file overriding max_e / confirmations")
    g.add_argument("--sweep-prime", default=argparse.SUPPRESS,
                   help="comma-separated primes; runs the command per prime")
    return shared


_DEFAULTS = {
    "prime": None, "vars": None, "order": "degrevlex", "json": False,
    "max_e": None, "confirm": None, "config": None, "sweep_prime": None,
}


def build_parser() -> argparse.ArgumentParser:
    shared = _shared_flags()
    parser = argparse.ArgumentParser(
        prog="fsplit",
        description="Frobenius-splitting invariants of polynomial rings over F_p",
        parents=[shared])
    sub = parser.add_subparsers(dest="verb", metavar="VERB")

    def verb(name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, help=help_text, parents=[shared])

    v = verb("gb", "reduced Groebner basis of an ideal")
    v.add_argument("ideal")

    v = verb("member", "ideal membership of a polynomial")
    v.add_argument("poly")
    v.add_argument("ideal")

    v = verb("colon", "colon ideal (I : J)")
    v.add_argument("ideal")
    v.add_argument("by")

    v = verb("intersect", "intersection of two ideals")
    v.add_argument("ideal")
    v.add_argument("other")

    v = verb("fpower", "Frobenius power I^[p^e]")
    v.add_argument("ideal")
    v.add_argument("--e", type=int, required=True)

    v = verb("froot", "Frobenius root I^[1/p^e]")
    v.add_argument("ideal")
    v.add_argument("--e", type=int, required=True)

    v = verb("split", "Frobenius splitting test for the quotient at the origin")
    v.add_argument("ideal")

    v = verb("split-coeff", "splitting coefficient of a hypersurface")
    v.add_argument("poly")

    v = verb("nu", "nu counter: max n with a^n not inside J^[p^e]")
    v.add_argument("ideal")
    v.add_argument("against")
    v.add_argument("--e", type=int, required=True)

    v = verb("compatible", "compatibility of an ideal with a Cartier-type map")
    v.add_argument("ideal")
    v.add_argument("multiplier")
    v.add_argument("--e", type=int, default=1)

    v = verb("ucompatible", "uniform compatibility of an ideal")
    v.add_argument("ideal")

    v = verb("test-ideal", "test ideal tau(a^t) in the polynomial ring")
    v.add_argument("ideal")
    v.add_argument("--t", required=True, help="rational exponent, e.g. 2 or 7/5")

    v = verb("fpt", "F-pure threshold bracket at level e")
    v.add_argument("ideal")
    v.add_argument("--e", type=int, required=True)

    v = verb("jumps", "F-jumping candidates on the p^-e grid")
    v.add_argument("ideal")
    v.add_argument("--e", type=int, required=True)
    v.add_argument("--t-max", required=True, help="grid upper bound (rational)")

    v = verb("tau-quotient", "test ideal of the quotient ring, lifted")
    v.add_argument("ideal")
    v.add_argument("--test-element", default=None)
    v.add_argument("--minimal-prime", action="append", default=[],
                   help="minimal prime of the input (repeatable)")

    v = verb("vassilev", "ascending chain of lifted test ideals")
    v.add_argument("ideal")
    v.add_argument("--test-element", default=None)
    v.add_argument("--minimal-prime", action="append", default=[])

    v = verb("asymptotic", "asymptotic test ideal of a graded sequence")
    v.add_argument("kind", choices=("powers", "symbolic"))
    v.add_argument("spec", help="ideal, or ';'-separated variable-generated primes")
    v.add_argument("--n", type=int, required=True)

    v = verb("symbolic", "symbolic power of a squarefree monomial ideal")
    v.add_argument("primes", help="';'-separated variable-generated primes")
    v.add_argument("--n", type=int, required=True)

    v = verb("symbolic-check", "verify I^(d*n) inside I^n")
    v.add_argument("primes")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--d", type=int, required=True)

    v = verb("fsig", "splitting numbers and F-signature estimate")
    v.add_argument("poly")
    v.add_argument("--e-max", type=int, required=True)

    return parser


def _load_config(ns: argparse.Namespace) -> ChainConfig:
    max_e, confirmations = 6, 2
    if ns.config:
        path = Path(ns.config)
        if not path.is_file():
            raise ConfigError(f"config file {ns.config!r} not found")
        for lineno, line in enumerate(path.read_text().splitlines(), start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ConfigError(f"{ns.config}:{lineno}: expected key=value")
            key, _, value = line.partition("=")
            key = key.strip()
            try:
                number = int(value.strip())
            except ValueError as exc:
                raise ConfigError(f"{ns.config}:{lineno}: {exc}") from exc
            if key == "max_e":
                max_e = number
            elif key == "confirmations":
                confirmations = number
            else:
                raise ConfigError(f"{ns.config}:{lineno}: unknown key {key!r}")
    if ns.max_e is not None:
        max_e = ns.max_e
    if ns.confirm is not None:
        confirmations = ns.confirm
    try:
        return ChainConfig(max_e=max_e, confirmations=confirmations)
    except PreconditionError as exc:
        raise ConfigError(str(exc)) from exc


def _make_context(ns: argparse.Namespace, prime: int) -> RingContext:
    if ns.vars is None:
        raise ConfigError("--vars is required")
    names = tuple(v.strip() for v in ns.vars.split(",") if v.strip())
    if not is_prime(prime):
        raise ConfigError(f"{prime} is not prime")
    try:
        return RingContext(prime, names, ns.order)
    except PreconditionError as exc:
        raise ConfigError(str(exc)) from exc


def _parse_prime_list(text: str) -> list[int]:
    try:
        primes = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise ConfigError(f"invalid prime list {text!r}") from exc
    if not primes:
        raise ConfigError("empty prime list")
    return primes


def _parse_prime_ideals(text: str, ctx: RingContext) -> list[Ideal]:
    chunks = [c.strip() for c in text.split(";") if c.strip()]
    if not chunks:
        raise ParseError("no prime ideals given", 0)
    return [parse_ideal(c, ctx) for c in chunks]


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

def _execute(ns: argparse.Namespace, ctx: RingContext, config: ChainConfig) -> dict:
    verb = ns.verb
    out: dict = {}

    if verb == "gb":
        out["result"] = _ser(parse_ideal(ns.ideal, ctx))
    elif verb == "member":
        f = parse_polynomial(ns.poly, ctx)
        out["result"] = parse_ideal(ns.ideal, ctx).contains(f)
    elif verb == "colon":
        I = parse_ideal(ns.ideal, ctx)
        out["result"] = _ser(I.colon(parse_ideal(ns.by, ctx)))
    elif verb == "intersect":
        I = parse_ideal(ns.ideal, ctx)
        out["result"] = _ser(I.intersect(parse_ideal(ns.other, ctx)))
    elif verb == "fpower":
        out["result"] = _ser(frobenius_power(parse_ideal(ns.ideal, ctx), ns.e))
    elif verb == "froot":
        out["result"] = _ser(frobenius_root(parse_ideal(ns.ideal, ctx), ns.e))
    elif verb == "split":
        out["result"] = fedder_split_test(parse_ideal(ns.ideal, ctx))
    elif verb == "split-coeff":
        out["result"] = splitting_coefficient(parse_polynomial(ns.poly, ctx))
    elif verb == "nu":
        a = parse_ideal(ns.ideal, ctx)
        J = parse_ideal(ns.against, ctx)
        out["result"] = nu_value(a, J, ns.e)
    elif verb == "compatible":
        J = parse_ideal(ns.ideal, ctx)
        phi = CartierMap(parse_polynomial(ns.multiplier, ctx), ns.e)
        out["result"] = is_compatible(J, phi)
    elif verb == "ucompatible":
        out["result"] = is_uniformly_compatible(parse_ideal(ns.ideal, ctx))
    elif verb == "test-ideal":
        report = test_ideal_regular(parse_ideal(ns.ideal, ctx),
                                    _parse_rational(ns.t), config)
        out["result"] = _ser(report)
        out["stabilized_at_e"] = report.stabilized_at_e
    elif verb == "fpt":
        interval = fpt_interval(parse_ideal(ns.ideal, ctx), ns.e, config)
        out["result"] = {"low": _ser_fraction(interval.low),
                         "high": _ser_fraction(interval.high),
                         "e": interval.level}
    elif verb == "jumps":
        jumps = f_jumping_candidates(parse_ideal(ns.ideal, ctx), ns.e,
                                     _parse_rational(ns.t_max), config)
        out["result"] = [_ser_fraction(j) for j in jumps]
    elif verb == "tau-quotient":
        I = parse_ideal(ns.ideal, ctx)
        c = parse_polynomial(ns.test_element, ctx) if ns.test_element else None
        primes = [parse_ideal(t, ctx) for t in ns.minimal_prime] or None
        out["result"] = _ser(test_ideal_quotient(I, c, primes, config))
    elif verb == "vassilev":
        I = parse_ideal(ns.ideal, ctx)
        c = parse_polynomial(ns.test_element, ctx) if ns.test_element else None
        primes = [parse_ideal(t, ctx) for t in ns.minimal_prime] or None
        out["result"] = _ser(vassilev_chain(I, c, primes, config))
    elif verb == "asymptotic":
        if ns.kind == "powers":
            seq = GradedSequence.ordinary_powers(parse_ideal(ns.spec, ctx))
        else:
            seq = GradedSequence.symbolic_squarefree(
                _parse_prime_ideals(ns.spec, ctx), ctx)
        report = asymptotic_test_ideal(seq, ns.n, config)
        out["result"] = _ser(report)
        out["stabilized_at_e"] = report.stabilized_at_e
    elif verb == "symbolic":
        primes = _parse_prime_ideals(ns.primes, ctx)
        out["result"] = _ser(symbolic_power(primes, ns.n, ctx))
    elif verb == "symbolic-check":
        primes = _parse_prime_ideals(ns.primes, ctx)
        out["result"] = check_symbolic_containment(primes, ns.n, ns.d)
    elif verb == "fsig":
        out["result"] = _ser(fsignature_estimate(parse_polynomial(ns.poly, ctx),
                                                 ns.e_max))
    else:
        raise ConfigError(f"unknown verb {verb!r}")
    return out


def _inputs_of(ns: argparse.Namespace) -> dict:
    skip = {"verb", "prime", "vars", "order", "json", "max_e", "confirm",
            "config", "sweep_prime"}
    return {k: v for k, v in sorted(vars(ns).items())
            if k not in skip and v is not None and v != []}


def _run_single(ns: argparse.Namespace, prime: int, config: ChainConfig) -> dict:
    ctx = _make_context(ns, prime)
    start = time.perf_counter()
    payload = _execute(ns, ctx, config)
    elapsed_ms = int((time.perf_counter() - start) * 1000)
    doc = {
        "verb": ns.verb,
        "inputs": {**_inputs_of(ns), "prime": prime, "vars": list(ctx.variables),
                   "order": ctx.order},
        "budget": {"max_e": config.max_e, "confirmations": config.confirmations},
        "timing_ms": elapsed_ms,
    }
    doc.update(payload)
    return doc


def _exit_code_for(exc: Exception) -> int:
    if isinstance(exc, BudgetExceededError):
        return EXIT_BUDGET
    if isinstance(exc, (ParseError, ConfigError)):
        return EXIT_CONFIG
    return EXIT_DOMAIN


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    for key, default in _DEFAULTS.items():
        if not hasattr(ns, key):
            setattr(ns, key, default)
    if ns.verb is None:
        parser.print_usage(sys.stderr)
        return EXIT_CONFIG

    try:
        config = _load_config(ns)
        if ns.sweep_prime:
            primes = _parse_prime_list(ns.sweep_prime)
        else:
            if ns.prime is None:
                raise ConfigError("--prime (or --sweep-prime) is required")
            primes = [ns.prime]
    except FsplitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _exit_code_for(exc)

    def worker(p: int):
        try:
            return _run_single(ns, p, config), None
        except FsplitError as exc:
            return None, exc
        except Exception as exc:  # no traceback escapes to the shell
            return None, PreconditionError(f"internal error: {exc}")

    if len(primes) == 1:
        results = [worker(primes[0])]
    else:
        with ThreadPoolExecutor(max_workers=min(8, len(primes))) as pool:
            results = list(pool.map(worker, primes))

    status = EXIT_OK
    json_docs = []
    for prime, (doc, err) in zip(primes, results):
        if err is not None:
            print(f"error (p={prime}): {err}", file=sys.stderr)
            if status == EXIT_OK:
                status = _exit_code_for(err)
            continue
        if ns.json:
            json_docs.append(doc)
        elif len(primes) > 1:
            print(f"p={prime}  {_render_text(doc['result'])}")
        else:
            print(_render_text(doc["result"]))
            if "stabilized_at_e" in doc:
                print(f"stabilized at e={doc['stabilized_at_e']}")
    if ns.json and json_docs:
        payload = json_docs[0] if len(primes) == 1 else json_docs
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    return status


if __name__ == "__main__":
    sys.exit(main())
