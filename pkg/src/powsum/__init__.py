"""Exact-arithmetic power sums, generalized harmonic numbers, Bernoulli and
poly-Bernoulli numbers, and Stirling numbers, cross-verified against each
other and against a truncated-power-series oracle.

Everything is computed with arbitrary-precision integers and reduced
fractions; there is no floating point anywhere, and every identity check in
the package is an exact equality.
"""

from .bench import BenchRecord, ChecksumMismatch, run_bench
from .bernoulli import (
    BernoulliCache,
    bernoulli,
    poly_bernoulli,
    poly_bernoulli_negative,
    poly_bernoulli_sequence,
)
from .exact import (
    DomainError,
    Rational,
    binomial,
    factorial,
    format_rational,
    int_pow,
    parse_rational,
)
from .harmonic import (
    harmonic_classical,
    harmonic_direct,
    harmonic_theorem1,
    polybernoulli_from_harmonic,
    reciprocal_power,
)
from .powersum import (
    FormulaId,
    evaluate,
    in_domain,
    polylog_neg_coeff_check,
    polylog_neg_eval,
    powersum_corollary,
    powersum_direct,
    powersum_faulhaber,
    powersum_gould_a,
    powersum_gould_b,
    powersum_theorem2,
)
from .report import Failure, VerificationReport
from .series import (
    PowerSeries,
    exp_series,
    geometric,
    geometric_pow,
    harmonic_ogf_check,
    one_minus_exp_neg,
    one_minus_t,
    poly_bernoulli_egf,
    polylog_series,
)
from .stirling import (
    StirlingKind,
    StirlingTable,
    inverse_stirling_transform,
    stirling1u,
    stirling2,
    stirling2_egf_check,
    stirling_mixed_sum,
    stirling_transform,
)
from .verify import SUITE_NAMES, run_suite

__version__ = "0.1.0"

__all__ = [
    "BenchRecord",
    "BernoulliCache",
    "ChecksumMismatch",
    "DomainError",
    "Failure",
    "FormulaId",
    "PowerSeries",
    "Rational",
    "SUITE_NAMES",
    "StirlingKind",
    "StirlingTable",
    "VerificationReport",
    "bernoulli",
    "binomial",
    "evaluate",
    "exp_series",
    "factorial",
    "format_rational",
    "geometric",
    "geometric_pow",
    "harmonic_classical",
    "harmonic_direct",
    "harmonic_ogf_check",
    "harmonic_theorem1",
    "in_domain",
    "int_pow",
    "inverse_stirling_transform",
    "one_minus_exp_neg",
    "one_minus_t",
    "parse_rational",
    "poly_bernoulli",
    "poly_bernoulli_egf",
    "poly_bernoulli_negative",
    "poly_bernoulli_sequence",
    "polybernoulli_from_harmonic",
    "polylog_neg_coeff_check",
    "polylog_neg_eval",
    "polylog_series",
    "powersum_corollary",
    "powersum_direct",
    "powersum_faulhaber",
    "powersum_gould_a",
    "powersum_gould_b",
    "powersum_theorem2",
    "reciprocal_power",
    "run_bench",
    "run_suite",
    "stirling1u",
    "stirling2",
    "stirling2_egf_check",
    "stirling_mixed_sum",
    "stirling_transform",
]
