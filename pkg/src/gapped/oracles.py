"""Slow reference answers recomputed from character comparisons.

Everything in this module works off two quadratic match tables built
with nothing but symbol equality tests. No suffix arrays, no range
structures, no code shared with the fast paths: the point is to have
answers too simple to share a bug with the implementations they check.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import InputError, ParamError

Word = Union[str, Sequence[int]]

PROBLEMS = (
    "1a", "1b", "2a", "2b", "3a", "3b",
    "runs", "sc", "lp", "boundary-squares", "L",
)

BOUNDARY_MODES = ("shortest-end", "longest-end", "shortest-start", "longest-start")


def _sym(word: Word) -> List[int]:
    if isinstance(word, str):
        out = [ord(c) for c in word]
    else:
        out = [int(c) for c in word]
    if not out:
        raise InputError("empty word")
    return out


def _suffix_table(a: List[int]) -> np.ndarray:
    """T[j, x] = longest common prefix of w[j..] and w[x..], 1-based."""
    n = len(a)
    arr = np.asarray(a, dtype=np.int64)
    T = np.zeros((n + 2, n + 2), dtype=np.int32)
    for j in range(n, 0, -1):
        eq = arr[j - 1] == arr[j - 1:]
        T[j, j:n + 1] = np.where(eq, T[j + 1, j + 1:n + 2] + 1, 0)
    # rows were filled for x >= j only; the table is symmetric
    return np.maximum(T, T.T)


def _reverse_table(a: List[int]) -> np.ndarray:
    """R[j, x] = largest m with w[x..x+m-1] = reverse of w[j-m+1..j]."""
    n = len(a)
    arr = np.asarray(a, dtype=np.int64)
    R = np.zeros((n + 2, n + 2), dtype=np.int32)
    for j in range(1, n + 1):
        eq = arr[j - 1] == arr
        R[j, 1:n + 1] = np.where(eq, R[j - 1, 2:n + 2] + 1, 0)
    return R


def _check_gap_pair(g: int, G: int, n: int) -> None:
    if not (0 <= g < G <= n):
        raise ParamError(f"need 0 <= g < G <= n, got g={g} G={G} n={n}")


def _check_gap_fn(gap: Sequence[int], n: int) -> List[int]:
    gp = [int(x) for x in gap]
    if len(gp) != n:
        raise ParamError(f"gap function has {len(gp)} values for a word of length {n}")
    for x in gp:
        if not 1 <= x <= n:
            raise ParamError(f"gap function value {x} outside [1, {n}]")
    return gp


def _alpha_pq(alpha) -> Tuple[int, int]:
    if isinstance(alpha, tuple):
        frac = Fraction(alpha[0], alpha[1])
    else:
        frac = Fraction(alpha)
    if frac < 1:
        raise ParamError(f"alpha must be at least 1, got {alpha}")
    return frac.numerator, frac.denominator


def _rightmost_max(col: np.ndarray, lo: int) -> Tuple[int, int]:
    # (best value, rightmost 1-based witness), (0, -1) when empty or all zero
    if col.size == 0:
        return 0, -1
    best = int(col.max())
    if best <= 0:
        return 0, -1
    return best, lo + int(np.flatnonzero(col == best)[-1])


def oracle_lprf_bounded(word: Word, g: int, G: int) -> Tuple[List[int], List[int]]:
    """Reversed-factor arms with the mirror copy ending a gap in [g, G) back.

    values[i-1] = longest m with w[i..i+m-1] equal to the reversal of
    w[j-m+1..j] for some j with g <= i-1-j < G; B holds the rightmost
    such end j, -1 where the value is 0.
    """
    a = _sym(word)
    n = len(a)
    _check_gap_pair(g, G, n)
    R = _reverse_table(a)
    values, B = [0] * n, [-1] * n
    for i in range(1, n + 1):
        lo, hi = max(1, i - G), i - g - 1
        if hi >= lo:
            values[i - 1], B[i - 1] = _rightmost_max(R[lo:hi + 1, i], lo)
    return values, B


def oracle_lpf_bounded(word: Word, g: int, G: int) -> Tuple[List[int], List[int]]:
    """Plain-factor arms with an earlier copy separated by a gap in [g, G).

    values[i-1] = longest m with w[j..j+m-1] = w[i..i+m-1] and
    g <= i - j - m < G; B holds the rightmost left-copy start j.
    """
    a = _sym(word)
    n = len(a)
    _check_gap_pair(g, G, n)
    T = _suffix_table(a)
    values, B = [0] * n, [-1] * n
    for i in range(2, n + 1):
        js = np.arange(1, i, dtype=np.int64)
        ell = np.minimum(T[1:i, i].astype(np.int64), i - js - g)
        ok = ell >= np.maximum(1, i - js - G + 1)
        if ok.any():
            best = int(ell[ok].max())
            pos = np.flatnonzero(ok & (ell == best))[-1]
            values[i - 1], B[i - 1] = best, int(js[pos])
    return values, B


def oracle_lprf_positional(word: Word, gap: Sequence[int]) -> Tuple[List[int], List[int]]:
    """Reversed-factor arms with gap at least gap[i-1], no upper bound."""
    a = _sym(word)
    n = len(a)
    gp = _check_gap_fn(gap, n)
    R = _reverse_table(a)
    values, B = [0] * n, [-1] * n
    for i in range(1, n + 1):
        hi = i - 1 - gp[i - 1]
        if hi >= 1:
            values[i - 1], B[i - 1] = _rightmost_max(R[1:hi + 1, i], 1)
    return values, B


def oracle_lpf_positional(word: Word, gap: Sequence[int]) -> Tuple[List[int], List[int]]:
    """Plain-factor arms with gap at least gap[i-1]; B holds the smallest witness."""
    a = _sym(word)
    n = len(a)
    gp = _check_gap_fn(gap, n)
    T = _suffix_table(a)
    values, B = [0] * n, [-1] * n
    for i in range(2, n + 1):
        js = np.arange(1, i, dtype=np.int64)
        ell = np.minimum(T[1:i, i].astype(np.int64), i - gp[i - 1] - js)
        ok = ell >= 1
        if ok.any():
            best = int(ell[ok].max())
            pos = np.flatnonzero(ok & (ell == best))[0]
            values[i - 1], B[i - 1] = best, int(js[pos])
    return values, B


def oracle_lpal_alpha(word: Word, alpha) -> Tuple[List[int], List[int]]:
    """Longest alpha-gapped palindrome arms per right-arm start.

    The gap may be empty. B holds a left-arm start witness (the one with
    the smallest gap among maxima), -1 where the value is 0.
    """
    a = _sym(word)
    n = len(a)
    p, q = _alpha_pq(alpha)
    R = _reverse_table(a)
    values, B = [0] * n, [-1] * n
    for x in range(2, n + 1):
        js = np.arange(1, x, dtype=np.int64)      # left arm end positions
        m = R[1:x, x].astype(np.int64)
        delta = x - 1 - js
        ok = (m >= 1) & (q * delta <= (p - q) * m)
        if ok.any():
            best = int(m[ok].max())
            pos = np.flatnonzero(ok & (m == best))[-1]
            values[x - 1] = best
            B[x - 1] = int(js[pos]) - best + 1
    return values, B


def oracle_lrep_alpha(word: Word, alpha) -> Tuple[List[int], List[int]]:
    """Longest alpha-gapped repeat arms per right-arm start.

    The gap may be empty. B holds a left-arm start witness (smallest
    distance among maxima), -1 where the value is 0.
    """
    a = _sym(word)
    n = len(a)
    p, q = _alpha_pq(alpha)
    T = _suffix_table(a)
    values, B = [0] * n, [-1] * n
    for x in range(2, n + 1):
        js = np.arange(1, x, dtype=np.int64)
        d = x - js
        ell = np.minimum(T[1:x, x].astype(np.int64), d)
        ok = (ell >= 1) & (q * d <= p * ell)
        if ok.any():
            best = int(ell[ok].max())
            pos = np.flatnonzero(ok & (ell == best))[-1]
            values[x - 1], B[x - 1] = best, int(js[pos])
    return values, B


def _factor_period(y: List[int]) -> int:
    m = len(y)
    border = [0] * (m + 1)
    k = 0
    for i in range(1, m):
        while k and y[i] != y[k]:
            k = border[k]
        if y[i] == y[k]:
            k += 1
        border[i + 1] = k
    return m - border[m]


def oracle_runs(word: Word) -> List[Tuple[int, int, int]]:
    """All maximal periodic factors with exponent >= 2, as (start, end, period)."""
    a = _sym(word)
    n = len(a)
    out = []
    for p in range(1, n // 2 + 1):
        t = 1
        while t <= n - p:
            if a[t - 1] != a[t + p - 1]:
                t += 1
                continue
            s = t
            while t <= n - p and a[t - 1] == a[t + p - 1]:
                t += 1
            e = t - 1 + p
            if e - s + 1 >= 2 * p and _factor_period(a[s - 1:e]) == p:
                out.append((s, e, p))
    return sorted(out)


def oracle_centered_squares(word: Word) -> List[int]:
    """SC[x] = largest m with w[x-m..x-1] = w[x..x+m-1], 0 when none."""
    a = _sym(word)
    n = len(a)
    T = _suffix_table(a)
    out = [0] * n
    for x in range(2, n + 1):
        mmax = min(x - 1, n - x + 1)
        if mmax < 1:
            continue
        ms = np.arange(1, mmax + 1)
        ok = T[x - ms, x] >= ms
        if ok.any():
            out[x - 1] = int(ms[ok].max())
    return out


def oracle_local_periods(word: Word) -> List[int]:
    """LP[x] = smallest m with w[x-m..x-1] = w[x..x+m-1], 0 when none."""
    a = _sym(word)
    n = len(a)
    T = _suffix_table(a)
    out = [0] * n
    for x in range(2, n + 1):
        mmax = min(x - 1, n - x + 1)
        if mmax < 1:
            continue
        ms = np.arange(1, mmax + 1)
        ok = T[x - ms, x] >= ms
        if ok.any():
            out[x - 1] = int(ms[ok].min())
    return out


def oracle_boundary_squares(word: Word, mode: str) -> List[int]:
    """Arm of the shortest/longest square ending (or starting) at each position."""
    if mode not in BOUNDARY_MODES:
        raise ParamError(f"unknown boundary mode {mode!r}")
    a = _sym(word)
    n = len(a)
    T = _suffix_table(a)
    out = [0] * n
    for x in range(1, n + 1):
        if mode.endswith("end"):
            ms = np.arange(1, x // 2 + 1)
            ok = T[x - 2 * ms + 1, x - ms + 1] >= ms if ms.size else ms
        else:
            ms = np.arange(1, (n - x + 1) // 2 + 1)
            ok = T[x, x + ms] >= ms if ms.size else ms
        if ms.size and ok.any():
            sel = ms[ok]
            out[x - 1] = int(sel.min() if mode.startswith("shortest") else sel.max())
    return out


def oracle_prev_factor(word: Word) -> List[int]:
    """L[i] = smallest j < i maximizing the common prefix of w[j..] and w[i..]."""
    a = _sym(word)
    n = len(a)
    T = _suffix_table(a)
    out = [-1] * n
    for i in range(2, n + 1):
        out[i - 1] = int(np.argmax(T[1:i, i])) + 1
    return out


def oracle_maximal_alpha(word: Word, alpha, kind: str) -> set:
    """All maximal alpha-gapped structures with a non-empty gap.

    Returns (left, arm, gap) triples. Maximal means the arms extend in
    neither direction: for repeats neither both-left nor both-right, for
    palindromes neither outward nor inward (inner extension through a
    length-1 gap is geometrically impossible and counts as blocked).
    """
    if kind not in ("repeat", "palindrome"):
        raise ParamError(f"unknown kind {kind!r}")
    a = _sym(word)
    n = len(a)
    p, q = _alpha_pq(alpha)
    T = _suffix_table(a)
    R = _reverse_table(a)
    out = set()
    for i in range(1, n + 1):
        for ell in range(1, (n - i) // 2 + 1):
            for delta in range(1, n - i - 2 * ell + 2):
                j = i + ell + delta
                if j + ell - 1 > n:
                    break
                if q * (ell + delta) > p * ell:
                    continue
                if kind == "repeat":
                    if T[i, j] < ell:
                        continue
                    left_ok = i == 1 or a[i - 2] != a[j - 2]
                    right_ok = j + ell - 1 == n or a[i + ell - 1] != a[j + ell - 1]
                else:
                    if R[i + ell - 1, j] < ell:
                        continue
                    left_ok = i == 1 or j + ell - 1 == n or a[i - 2] != a[j + ell - 1]
                    right_ok = delta == 1 or a[i + ell - 1] != a[j - 2]
                if left_ok and right_ok:
                    out.add((i, ell, delta))
    return out


def oracle_compute(problem: str, t: Word, params: Optional[dict] = None):
    """Brute-force answer for one problem id; see PROBLEMS for the names."""
    opts = dict(params or {})
    try:
        if problem == "1a":
            return oracle_lprf_bounded(t, opts["g"], opts["G"])
        if problem == "1b":
            return oracle_lpf_bounded(t, opts["g"], opts["G"])
        if problem == "2a":
            return oracle_lprf_positional(t, opts["gap"])
        if problem == "2b":
            return oracle_lpf_positional(t, opts["gap"])
        if problem == "3a":
            return oracle_lpal_alpha(t, opts["alpha"])
        if problem == "3b":
            return oracle_lrep_alpha(t, opts["alpha"])
        if problem == "runs":
            return oracle_runs(t)
        if problem == "sc":
            return oracle_centered_squares(t)
        if problem == "lp":
            return oracle_local_periods(t)
        if problem == "boundary-squares":
            return oracle_boundary_squares(t, opts["mode"])
        if problem == "L":
            return oracle_prev_factor(t)
    except KeyError as exc:
        raise ParamError(f"problem {problem} needs parameter {exc.args[0]!r}") from None
    raise ParamError(f"unknown problem id {problem!r}")
