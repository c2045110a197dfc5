"""Longest alpha-gapped repeats and palindromes.

A structure u v u (repeat) or u~ v u (palindrome, u~ the reversal of u) is
alpha-gapped when |uv| <= alpha*|u|.  The module computes the per-position
arrays LRep/LPal (longest arm of a structure whose right arm starts at each
position, empty gap allowed), the single longest structure of a kind, and
the set of maximal structures with non-empty gap that feeds the arrays.

alpha is an exact rational throughout; every comparison is done by
cross-multiplication, never through floats.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .basicfactors import SmallWordBitsets, _labels_from_sa, bf_occurrences, build_dbf
from .errors import ParamError
from .oracles import oracle_lpal_alpha, oracle_lrep_alpha
from .periodicity import centered_squares, compute_runs
from .textcore import (GappedStructure, as_index, build_index, build_text,
                       lcp_rev, lcp_suffixes, lcs_prefixes, text_from_symbols)

KINDS = ("repeat", "palindrome")

# windows above this many symbols skip the bitset path and use the global
# factor dictionary instead; both paths return the same occurrence sets
_BITSET_WINDOW_CAP = 2048


def alpha_ratio(alpha):
    """Exact (numerator, denominator) of alpha; requires alpha >= 1.

    Accepts int, Fraction, a (p, q) tuple, or a string such as "3/2".
    Floats are rejected: window boundaries must not depend on rounding.
    """
    if isinstance(alpha, float):
        raise ParamError("alpha must be exact: int, Fraction, (p, q) or 'p/q'")
    if isinstance(alpha, tuple):
        frac = Fraction(alpha[0], alpha[1])
    else:
        frac = Fraction(alpha)
    if frac < 1:
        raise ParamError(f"alpha must be at least 1, got {alpha}")
    return frac.numerator, frac.denominator


@dataclass(frozen=True)
class MaximalStructure:
    """A gapped structure whose arms admit no simultaneous extension.

    For repeats the two directions are shifting both arms left and shifting
    both arms right; for palindromes, growing the arms outward and growing
    them inward (inward growth also eats the gap and stops once the gap
    cannot shrink further).  Word boundaries count as blocked.
    """

    structure: GappedStructure
    blocked_left: bool
    blocked_right: bool


def _check_kind(kind):
    if kind not in KINDS:
        raise ParamError(f"kind must be one of {KINDS}, got {kind!r}")


def _check_alpha_fits(n, p, q):
    if p > q * n:
        raise ParamError(f"alpha {p}/{q} exceeds the word length {n}")


def _bind(idx, t):
    """Resolve the (index, word) pair; they must describe the same word."""
    idx = as_index(idx if idx is not None else t)
    if t is None:
        return idx, idx.text
    t = build_text(t)
    if t is not idx.text and t.pylist != idx.text.pylist:
        raise ParamError("word and index disagree")
    return idx, t


def _true_intervals(eq):
    """Maximal intervals of True in a boolean vector, as 0-based (lo, hi)."""
    hits = np.flatnonzero(eq)
    if not len(hits):
        return
    brk = np.flatnonzero(np.diff(hits) > 1)
    starts = np.concatenate(([0], brk + 1))
    ends = np.concatenate((brk, [len(hits) - 1]))
    for s0, e0 in zip(starts, ends):
        yield int(hits[s0]), int(hits[e0])


def enumerate_maximal_alpha(idx, t, alpha, kind) -> list:
    """All maximal alpha-gapped structures of the kind with non-empty gap.

    Repeats come from maximal match intervals per arm distance, palindromes
    from maximal matched pair intervals per antidiagonal; candidates whose
    arms could still grow (for palindromes: also inward, shrinking the gap
    to zero) are not maximal and are dropped, then the alpha filter
    q*|uv| <= p*|u| is applied.  Sorted by (left, arm, gap).
    """
    idx, t = _bind(idx, t)
    _check_kind(kind)
    p, q = alpha_ratio(alpha)
    n = idx.n
    _check_alpha_fits(n, p, q)
    A = np.asarray(t.pylist, dtype=np.int64)
    out = []
    if kind == "repeat":
        for d in range(1, n):
            eq = A[: n - d] == A[d:]
            top = n - d - 1
            for a0, b0 in _true_intervals(eq):
                m = b0 - a0 + 1
                if m > d - 1 or q * d > p * m:
                    continue
                bl = a0 == 0 or A[a0 - 1] != A[a0 - 1 + d]
                br = b0 == top or A[b0 + 1] != A[b0 + 1 + d]
                out.append(MaximalStructure(
                    GappedStructure("repeat", a0 + 1, m, d - m), bool(bl), bool(br)))
    else:
        for s in range(3, 2 * n):
            lo = max(1, s - n)
            hi = (s - 1) // 2
            if lo > hi:
                continue
            ps = np.arange(lo, hi + 1)
            eq = A[ps - 1] == A[s - ps - 1]
            for a0, b0 in _true_intervals(eq):
                pa, pb = lo + a0, lo + b0
                m = pb - pa + 1
                gam = s - 2 * pb - 1
                if gam < 1 or q * (m + gam) > p * m:
                    continue
                bl = pa == lo or A[pa - 2] != A[s - pa]
                br = pb == hi or A[pb] != A[s - pb - 2]
                out.append(MaximalStructure(
                    GappedStructure("palindrome", pa, m, gam), bool(bl), bool(br)))
    out.sort(key=lambda ms: (ms.structure.left, ms.structure.arm, ms.structure.gap))
    return out


def _stab_max_tagged(intervals, n):
    """Max-weight interval stabbing that also records the winning source.

    intervals hold (a, b_excl, weight, tag); positions are written at most
    once, in decreasing weight order, skipping decided slots through merged
    jump pointers.  Returns 0-based (H, tags) with 0 / None where uncovered.
    """
    H = [0] * (n + 2)
    tags = [None] * (n + 2)
    jump = list(range(n + 2))

    def find(x):
        path = []
        while jump[x] != x:
            path.append(x)
            x = jump[x]
        for s in path:
            jump[s] = x
        return x

    for a, b, wgt, tag in sorted(intervals, key=lambda iv: (-iv[2], iv[0], iv[1], iv[3])):
        x = find(a)
        while x < b:
            H[x] = wgt
            tags[x] = tag
            jump[x] = x + 1
            x = find(x + 1)
    return H[1:n + 1], tags[1:n + 1]


def _unwrap(entry) -> GappedStructure:
    return entry.structure if isinstance(entry, MaximalStructure) else entry


def alpha_arrays(idx, t, alpha, kind, S=None, SC=None):
    """Per-position longest alpha-gapped arm and a witness start.

    values[x-1] is the longest |u| over structures of the kind whose right
    arm starts at x (gap may be empty), B[x-1] the left-arm start of one
    such maximal structure, -1 when values[x-1] = 0.

    Every maximal structure (i, arm, gap) contributes the interval of right
    arm starts whose truncation stays alpha-gapped, weighted by its fixed
    right-arm end; a max stab turns intervals into answers.  Palindromes
    add one interval per maximal even palindrome (the empty-gap axes),
    repeats add the rightmost-square tails of each run plus the centered
    square array SC, which cover the truncations whose maximal extension
    has an empty gap.
    """
    idx, t = _bind(idx, t)
    _check_kind(kind)
    p, q = alpha_ratio(alpha)
    n = idx.n
    _check_alpha_fits(n, p, q)
    if S is None:
        S = enumerate_maximal_alpha(idx, t, alpha, kind)
    ivs = []
    if kind == "palindrome":
        for entry in S:
            st = _unwrap(entry)
            r = ((p - q) * st.arm - q * st.gap) // (p + q)
            if r >= 0:
                j = st.right
                ivs.append((j, j + r + 1, j + st.arm - 1, st.left))
        for x in range(2, n + 1):
            a = lcp_rev(idx, x, x - 1)
            if a >= 1:
                r = (p - q) * a // (p + q)
                ivs.append((x, x + r + 1, x + a - 1, x - a))
        H, tags = _stab_max_tagged(ivs, n)
        values, B = [0] * n, [-1] * n
        for x0 in range(n):
            if H[x0]:
                values[x0] = H[x0] - x0
                B[x0] = tags[x0]
        return values, B
    for entry in S:
        st = _unwrap(entry)
        r = ((p - q) * st.arm - q * st.gap) // p
        if r >= 0:
            j = st.right
            ivs.append((j, j + r + 1, j + st.arm - 1, st.arm + st.gap))
    for run in compute_runs(idx):
        length = run.end - run.start + 1
        for mult in range(1, length // (2 * run.period) + 1):
            d = run.period * mult
            r = (p - q) * d // p
            lo = max(run.start + d, run.end - d + 2)
            hi = min(run.end, run.end - d + 1 + r)
            if lo <= hi:
                ivs.append((lo, hi + 1, run.end, d))
    if SC is None:
        SC = centered_squares(idx)
    H, tags = _stab_max_tagged(ivs, n)
    values, B = [0] * n, [-1] * n
    for x0 in range(n):
        hv = H[x0] - x0 if H[x0] else 0
        if hv >= SC[x0] and hv > 0:
            values[x0] = hv
            B[x0] = x0 + 1 - tags[x0]
        elif SC[x0] > 0:
            values[x0] = SC[x0]
            B[x0] = x0 + 1 - SC[x0]
    return values, B


def _longest_naive(t, p, q, kind):
    """Scan fallback for words too short for meaningful blocks."""
    alpha = Fraction(p, q)
    if kind == "palindrome":
        values, B = oracle_lpal_alpha(t.pylist, alpha)
    else:
        values, B = oracle_lrep_alpha(t.pylist, alpha)
    best = max(values, default=0)
    if best == 0:
        return None
    x = values.index(best) + 1
    left = B[x - 1]
    if kind == "repeat":
        return GappedStructure("repeat", left, best, x - left - best)
    return GappedStructure("palindrome", left, best, x - left - best)


def _row_band(sastruct, home, m):
    """Maximal 0-based sa row interval around home sharing a prefix >= m."""
    lo, hi = 0, home
    while lo < hi:
        mid = (lo + hi) // 2
        if sastruct.rmq.query(mid + 1, home) >= m:
            hi = mid
        else:
            lo = mid + 1
    left = lo
    lo, hi = home, sastruct.n - 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if sastruct.rmq.query(home + 1, mid) >= m:
            lo = mid
        else:
            hi = mid - 1
    return left, lo


def _first_in(rows, lo, hi):
    i0 = int(np.searchsorted(rows, lo))
    if i0 < len(rows) and rows[i0] <= hi:
        return int(rows[i0])
    return -1


class _BlockScheme:
    """Block view of the word: length-b chunks relabeled into a short word.

    Blocks are labeled so that equal labels mean equal length-b factors; a
    ragged final chunk gets a fresh smallest label.  Carries the factor
    dictionary of the block word plus row tables used to locate one
    block-aligned occurrence of a plain factor or of a reversed factor.
    """

    def __init__(self, idx, b):
        n = idx.n
        self.b = b
        labels = _labels_from_sa(idx._w, b)[0]
        syms = [int(labels[j * b]) + 1 for j in range(n // b)]
        if n % b:
            syms.append(1)
        self.wp = build_index(text_from_symbols(syms))
        self.dbf = build_dbf(self.wp)
        self.wsa = idx._w
        self.usa = idx._combined()
        self.rows_w_aligned = np.flatnonzero(self.wsa.sa % b == 0)
        upos = self.usa.sa
        self.rows_u = np.flatnonzero(upos <= n - 1)
        self.rows_u_aligned = np.flatnonzero((upos <= n - 1) & (upos % b == 0))
        self.n = n

    def occurrence(self, y0, m, reverse, aligned):
        """One start of w[y0..y0+m-1] (or of its reversal), 0 when absent.

        aligned restricts the answer to block starts; the reversed search
        runs over the combined word, keeping only rows of the plain half.
        """
        if reverse:
            sa = self.usa
            home = sa.rank_list[2 * self.n + 2 - y0 - m]
            rows = self.rows_u_aligned if aligned else self.rows_u
        else:
            sa = self.wsa
            home = sa.rank_list[y0 - 1]
            rows = self.rows_w_aligned
        lo, hi = _row_band(sa, home, m)
        r = _first_in(rows, lo, hi)
        if r < 0:
            return 0
        return int(sa.sa[r]) + 1


def longest_alpha(idx, dbf, t, alpha, kind):
    """One alpha-gapped structure of the kind with the longest arm, or None.

    Arms of at least four blocks are caught per doubling level: every arm
    long enough contains an aligned level block z, some factor y starting
    in z's first b positions reappears (reversed, for palindromes) as a
    whole number of blocks inside the left arm, and all block-aligned
    occurrences of y in a bounded window left of z are extended around the
    match.  Shorter arms repeat the scheme on the plain word with seeds of
    length 2^k on a 2^k grid, and arm length 1 reduces to a nearest
    previous occurrence scan.  Levels run top down; a level whose whole
    arm band is already beaten is skipped.
    """
    idx, t = _bind(idx, t)
    _check_kind(kind)
    p, q = alpha_ratio(alpha)
    n = idx.n
    _check_alpha_fits(n, p, q)
    b = max(1, n.bit_length() - 1)
    if b <= 2 or n < 4 * b:
        return _longest_naive(t, p, q, kind)
    if dbf is None:
        dbf = build_dbf(idx)
    w = t.pylist
    pal = kind == "palindrome"
    best_arm = 0
    best = None

    def take(left, arm, gap):
        nonlocal best_arm, best
        if arm > best_arm:
            best_arm = arm
            best = GappedStructure(kind, left, arm, gap)

    def eval_rep(o, y0, m):
        # copies of length m at o < y0 on distance d; arm capped at d
        d = y0 - o
        lam = lcs_prefixes(idx, o - 1, y0 - 1) if o >= 2 else 0
        rho = lcp_suffixes(idx, o + m, y0 + m) if y0 + m <= n and o + m <= n else 0
        arm = min(lam + m + rho, d)
        if q * d <= p * arm:
            take(o - lam, arm, d - arm)

    def eval_pal(o, y0, m):
        # reversed copy at o, plain copy at y0; inward growth halves the room
        room = y0 - o - m
        if room < 0:
            return
        e_out = lcp_rev(idx, y0 + m, o - 1) if y0 + m <= n and o >= 2 else 0
        e_in = min(lcp_rev(idx, o + m, y0 - 1), room // 2) if o + m <= n else 0
        arm = e_out + m + e_in
        gap = room - 2 * e_in
        if q * (arm + gap) <= p * arm:
            take(o - e_out, arm, gap)

    scheme = _BlockScheme(idx, b)
    nb = scheme.wp.n
    levels = []
    k = 1
    while (1 << (k + 1)) * b <= n:
        levels.append(k)
        k += 1
    for k in reversed(levels):
        if best_arm >= (1 << (k + 2)) * b:
            continue
        zlen = (1 << k) * b
        m = (1 << (k - 1)) * b
        mb = 1 << (k - 1)
        wblocks = ((4 * p + q) * (1 << k) + q - 1) // q
        for zi in range(n // zlen):
            z0 = zi * zlen + 1
            zb = (z0 - 1) // b + 1
            if zb < 2:
                continue
            lo_blk = max(1, zb - wblocks)
            rng_hi = min(nb, zb - 1 + mb - 1)
            if lo_blk > rng_hi:
                continue
            for delta in range(b):
                y0 = z0 + delta
                o_c = scheme.occurrence(y0, m, pal, aligned=True)
                if not o_c:
                    continue
                j_c = (o_c - 1) // b + 1
                occ = bf_occurrences(scheme.dbf, j_c, k - 1, (lo_blk, rng_hi))
                for jp in occ.positions():
                    o = (jp - 1) * b + 1
                    if pal:
                        eval_pal(o, y0, m)
                    else:
                        eval_rep(o, y0, m)

    levels = []
    k = 0
    while (1 << (k + 1)) <= 4 * b:
        levels.append(k)
        k += 1
    for k in reversed(levels):
        if best_arm >= 1 << (k + 2):
            continue
        m = 1 << k
        if pal:
            # the seed may sit anywhere in the right arm, so its mirror can
            # lag one extra arm behind the plain repeat window
            win = ((4 * p + 3 * q) * m + q - 1) // q
        else:
            win = ((4 * p + q) * m + q - 1) // q
        for y0 in range(1, n - m + 2, m):
            lo = max(1, y0 - win)
            if pal:
                hi = y0 - m
                if hi < lo:
                    continue
                o_c = scheme.occurrence(y0, m, True, aligned=False)
                if not o_c:
                    continue
                occ = bf_occurrences(dbf, o_c, k, (lo, min(n, hi + m - 1)))
                for o in occ.positions():
                    eval_pal(o, y0, m)
                continue
            hi = y0 - 1
            if hi < lo:
                continue
            if m <= b and y0 + m - lo <= _BITSET_WINDOW_CAP:
                window = w[lo - 1:y0 + m - 1]
                occ = SmallWordBitsets(window, m).occurrences(
                    y0 - lo + 1, m, (1, len(window) - 1))
                for rel in occ.positions():
                    eval_rep(rel + lo - 1, y0, m)
            else:
                occ = bf_occurrences(dbf, y0, k, (lo, min(n, hi + m - 1)))
                for o in occ.positions():
                    eval_rep(o, y0, m)

    if best_arm == 0:
        reach = p // q
        last = {}
        for x0 in range(n):
            o = last.get(w[x0], 0)
            if o and x0 + 1 - o <= reach:
                take(o, 1, x0 - o)
                break
            last[w[x0]] = x0 + 1
    return best
