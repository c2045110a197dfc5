"""Longest gapped repeats and palindromes under three gap regimes.

A gapped repeat is a factor u v u, a gapped palindrome a factor u~ v u
with u~ the reversal of u; u are the arms, v the gap.  For every position
the library computes the longest arm over structures whose right arm
starts there, with the gap length constrained to a window [g, G), to a
per-position lower bound g(i), or by |uv| <= alpha |u|, plus the single
longest structure per regime, maximal-structure enumeration, and the
index machinery (suffix arrays, basic factor dictionaries, runs) behind
them.  gapped.oracles holds independent brute-force references,
gapped.cli the command-line front end.
"""

from .alphagap import (MaximalStructure, alpha_arrays, alpha_ratio,
                       enumerate_maximal_alpha, longest_alpha)
from .basicfactors import (BasicFactorDict, CompactOccurrences,
                           SmallWordBitsets, bf_occurrences, bf_sa_range,
                           build_dbf, small_occurrences)
from .boundedgap import (BoundedGapResult, longest_bounded, lpf_bounded,
                         lprf_bounded)
from .dsu import (BatchUFPlan, MinMaxUnionFind, NeighborSet,
                  WeightedInterval, WeightedTree, batch_interval_uf,
                  offline_wla, stab, static_uf_create)
from .errors import (GappedError, InputError, ParamError, PlanError,
                     PreconditionError, RangeError)
from .periodicity import (Run, boundary_squares, centered_squares,
                          compute_runs, local_periods)
from .positionalgap import (GapFunction, lpf_positional, lprf_positional,
                            prev_factor_links)
from .textcore import (GappedStructure, Text, TextIndex, build_index,
                       build_text, lcp_rev, lcp_suffixes, lcs_prefixes,
                       text_from_symbols)

__version__ = "0.1.0"

__all__ = [
    "MaximalStructure", "alpha_arrays", "alpha_ratio",
    "enumerate_maximal_alpha", "longest_alpha",
    "BasicFactorDict", "CompactOccurrences", "SmallWordBitsets",
    "bf_occurrences", "bf_sa_range", "build_dbf", "small_occurrences",
    "BoundedGapResult", "longest_bounded", "lpf_bounded", "lprf_bounded",
    "BatchUFPlan", "MinMaxUnionFind", "NeighborSet", "WeightedInterval",
    "WeightedTree",
    "batch_interval_uf", "offline_wla", "stab", "static_uf_create",
    "GappedError", "InputError", "ParamError", "PlanError",
    "PreconditionError", "RangeError",
    "Run", "boundary_squares", "centered_squares", "compute_runs",
    "local_periods",
    "GapFunction", "lpf_positional", "lprf_positional", "prev_factor_links",
    "GappedStructure", "Text", "TextIndex", "build_index", "build_text",
    "lcp_rev", "lcp_suffixes", "lcs_prefixes", "text_from_symbols",
    "__version__",
]
