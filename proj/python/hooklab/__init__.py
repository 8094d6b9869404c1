"""Exact partition sums over hook lengths, contents and shifted parts.

Rational results are returned as fractions.Fraction, polynomials as lists of
coefficients (lowest degree first), partitions as lists of parts.
"""

from ._core import (
    a_poly,
    central_factorial_T,
    cno_check,
    conid,
    contents,
    fit,
    functional_value,
    hook_power_check,
    hooks,
    lagrange,
    mn_character,
    multiset_lemma_check,
    no_check,
    no_lhs,
    okada_check,
    okada_power_check,
    panova_check,
    partitions,
    phi_p,
    phi_p_character_sum,
    run_cli,
    signless_stirling,
    syt_count,
    tables,
    two_param_check,
    z_mu,
)

__all__ = [
    "a_poly",
    "central_factorial_T",
    "cno_check",
    "conid",
    "contents",
    "fit",
    "functional_value",
    "hook_power_check",
    "hooks",
    "lagrange",
    "mn_character",
    "multiset_lemma_check",
    "no_check",
    "no_lhs",
    "okada_check",
    "okada_power_check",
    "panova_check",
    "partitions",
    "phi_p",
    "phi_p_character_sum",
    "run_cli",
    "signless_stirling",
    "syt_count",
    "tables",
    "two_param_check",
    "z_mu",
]
