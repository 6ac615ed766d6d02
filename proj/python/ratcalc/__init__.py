"""Rational series calculus over semirings.

Thin Python surface over the C++ core: rational expressions, linear
representations and their interconversion, dual-law products, and the
ladder-operator transfer series with their brute-force verifier.
Representations and series travel as JSON strings; scalars as exact
strings like "3/2".
"""

from ._ratcalc import (
    RatcalcError,
    compile_expr,
    const_term,
    decompile_rep,
    equivalent,
    eval_coeff,
    eval_series,
    fock_brute_omega,
    fock_dyck,
    fock_transfer,
    fock_verify,
    fock_words,
    hankel_rank,
    is_rational,
    product,
    reduce,
    rep_eval,
    shift,
)

__all__ = [
    "RatcalcError",
    "compile_expr",
    "const_term",
    "decompile_rep",
    "equivalent",
    "eval_coeff",
    "eval_series",
    "fock_brute_omega",
    "fock_dyck",
    "fock_transfer",
    "fock_verify",
    "fock_words",
    "hankel_rank",
    "is_rational",
    "product",
    "reduce",
    "rep_eval",
    "shift",
]
