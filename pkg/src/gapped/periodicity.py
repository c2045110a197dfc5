"""Maximal runs and the square arrays derived from them.

A run is a maximal periodic factor (i, j, p) with (j - i + 1) / p >= 2 and p
the smallest period.  Every square inside the word is a sub-factor of exactly
one run, so the centered / starting / ending square arrays reduce to weighted
interval stabbing over intervals generated per run.
"""

from dataclasses import dataclass

import numpy as np

from .dsu import WeightedInterval, stab
from .errors import ParamError
from .textcore import (TextIndex, _sa_doubling, _sa_naive, _NAIVE_SA_CUTOFF,
                       as_index, build_index, lcp_suffixes, lcs_prefixes)


@dataclass(frozen=True, order=True)
class Run:
    start: int
    end: int
    period: int

    @property
    def length(self):
        return self.end - self.start + 1

    @property
    def exponent(self):
        return self.length / self.period


def _suffix_rank_list(a):
    """0-based rank of each suffix of the 0-based symbol list a."""
    n = len(a)
    if n <= _NAIVE_SA_CUTOFF:
        sa = _sa_naive(a)
        rank = np.empty(n, dtype=np.int64)
        rank[sa] = np.arange(n)
    else:
        rank = _sa_doubling(np.asarray(a, dtype=np.int64))[1]
    return rank.tolist()


def _nss(rank):
    """nss[i] = smallest j > i with rank[j] < rank[i], else n (0-based)."""
    n = len(rank)
    out = [n] * n
    stack = []
    for i in range(n - 1, -1, -1):
        while stack and rank[stack[-1]] > rank[i]:
            stack.pop()
        if stack:
            out[i] = stack[-1]
        stack.append(i)
    return out


def compute_runs(t):
    """All maximal runs of the word, sorted, each reported once.

    Candidate periods come from longest Lyndon prefixes under the natural
    symbol order and under the reversed order; each candidate root is
    extended by plain factor equality, which is order-free, and kept when
    the periodic stretch reaches exponent 2.
    """
    idx = as_index(t)
    n = idx.n
    a = idx.text.pylist
    hi = max(a) + 1
    found = set()
    for ranks in (idx.rank, _suffix_rank_list([hi - c for c in a])):
        nss = _nss(ranks)
        for i0 in range(n):
            j0 = nss[i0]
            p = j0 - i0
            i1, j1 = i0 + 1, j0 + 1
            r = lcp_suffixes(idx, i1, j1) if j1 <= n else 0
            left = lcs_prefixes(idx, i1 - 1, j1 - 1) if i1 >= 2 else 0
            if left + r >= p:
                found.add(Run(i1 - left, j0 + r, p))
    return sorted(found)


def _run_intervals(runs, n, make):
    out = []
    for run in runs:
        cap = run.length // (2 * run.period)
        for ell in range(1, cap + 1):
            out.append(make(run, run.period * ell))
    return out


def centered_squares(t, runs=None):
    """SC[i]: longest m with w[i-m..i-1] = w[i..i+m-1]; 0 when no such square."""
    idx = as_index(t)
    if runs is None:
        runs = compute_runs(idx)
    ivs = _run_intervals(
        runs, idx.n,
        lambda r, m: WeightedInterval(r.start + m, r.end - m + 2, m))
    return stab(ivs, idx.n, "max")


def local_periods(t, runs=None):
    """LP[i]: shortest arm of a fully contained square centered at i, else 0.

    The shortest square at a center is primitively rooted, hence it is the
    exponent-2 prefix of the run whose period equals its arm; only the
    single-copy interval of each run can therefore win a minimum.
    """
    idx = as_index(t)
    if runs is None:
        runs = compute_runs(idx)
    ivs = [WeightedInterval(r.start + r.period, r.end - r.period + 2, r.period)
           for r in runs]
    return stab(ivs, idx.n, "min")


_BOUNDARY_MODES = ("shortest-end", "longest-end", "shortest-start", "longest-start")


def boundary_squares(t, runs=None, mode="shortest-end"):
    """Arm of the extremal square ending (or starting) at each position.

    Positions with no square end (start) hold 0.  Shortest variants only
    need each run's primitive square; longest variants rake every power.
    """
    if mode not in _BOUNDARY_MODES:
        raise ParamError(f"mode must be one of {_BOUNDARY_MODES}, got {mode!r}")
    idx = as_index(t)
    if runs is None:
        runs = compute_runs(idx)
    want_min = mode.startswith("shortest")
    at_end = mode.endswith("end")
    if at_end:
        make = lambda r, m: WeightedInterval(r.start + 2 * m - 1, r.end + 1, m)
    else:
        make = lambda r, m: WeightedInterval(r.start, r.end - 2 * m + 2, m)
    if want_min:
        ivs = [make(r, r.period) for r in runs]
    else:
        ivs = _run_intervals(runs, idx.n, make)
    return stab(ivs, idx.n, "min" if want_min else "max")
