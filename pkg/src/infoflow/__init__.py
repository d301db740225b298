"""Exact-arithmetic toolkit for measuring information flow through computation.

Submodules:
    core        log information measure, binomials, log base configuration
    pairing     Cantor pairing, k-ary folds, graph encoding
    combinadic  k-subset rank/unrank and the coding of finite sets
    density     compression functions, densities, randomness deficiency
    expr        expression trees and integer polynomials
    efficiency  delta of expressions and polynomials, Monte Carlo classification
    aleph       symbolic calculus of the information limit
    grids       cardinality, sum and product grids; subset-sum search
"""
from .core import BudgetExceeded, binomial, get_log_base, info, log_base, set_log_base, tuple_info
from .pairing import cantor_pair, cantor_pair_k, cantor_unpair, cantor_unpair_k
from .combinadic import code_to_set, enumerate_sets, rank_kset, set_info, set_to_code, unrank_kset

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "binomial",
    "cantor_pair",
    "cantor_pair_k",
    "cantor_unpair",
    "cantor_unpair_k",
    "code_to_set",
    "enumerate_sets",
    "get_log_base",
    "info",
    "log_base",
    "rank_kset",
    "set_info",
    "set_log_base",
    "set_to_code",
    "tuple_info",
    "unrank_kset",
]
