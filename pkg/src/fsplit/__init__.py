"""Frobenius-splitting invariants of polynomial rings over prime fields.

Exact computation of Frobenius powers and roots, splitting criteria,
compatible ideals, test ideals and their thresholds, asymptotic test ideals,
symbolic-power containments, and F-signature estimates.
"""

from .errors import (BadTestElementError, BudgetExceededError, ConfigError,
                     ContextMismatchError, FsplitError, ParseError,
                     PreconditionError)
from .frobenius import (CartierMap, fedder_split_test, frobenius_power,
                        frobenius_root, is_compatible,
                        is_uniformly_compatible, nu_value,
                        splitting_coefficient)
from .fsignature import (FSignatureReport, FSignatureSample,
                         fsignature_estimate, splitting_number_hypersurface)
from .groebner import Ideal
from .parsing import parse_ideal, parse_polynomial
from .ring import Polynomial, RingContext, is_prime
from .testideals import (ChainConfig, FptInterval, GradedSequence,
                         StabilizationReport, asymptotic_test_ideal,
                         check_symbolic_containment, f_jumping_candidates,
                         fpt_interval, symbolic_power, test_ideal_quotient,
                         test_ideal_regular, vassilev_chain)

__version__ = "0.1.0"

__all__ = [
    "BadTestElementError", "BudgetExceededError", "CartierMap", "ChainConfig",
    "ConfigError", "ContextMismatchError", "FptInterval", "FSignatureReport",
    "FSignatureSample", "FsplitError", "GradedSequence", "Ideal", "ParseError",
    "Polynomial", "PreconditionError", "RingContext", "StabilizationReport",
    "asymptotic_test_ideal", "check_symbolic_containment",
    "f_jumping_candidates", "fedder_split_test", "fpt_interval",
    "frobenius_power", "frobenius_root", "fsignature_estimate", "is_compatible",
    "is_prime", "is_uniformly_compatible", "nu_value", "parse_ideal",
    "parse_polynomial", "splitting_coefficient",
    "splitting_number_hypersurface", "symbolic_power", "test_ideal_quotient",
    "test_ideal_regular", "vassilev_chain",
]
