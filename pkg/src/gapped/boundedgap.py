"""Longest gapped repeats and palindromes with a two-sided gap window.

For every position i of the word the module reports the longest arm u such
that the factor ending just before i can be completed to u~ v u (palindrome,
u~ the reversal of u) or u v u (repeat) with the right arm starting at i and
the gap length |v| inside [g, G).

Palindrome witnesses anchor the end of the left arm, repeat witnesses its
start; in both cases value 0 pairs with witness -1.
"""

from dataclasses import dataclass

from .basicfactors import BasicFactorDict, bf_occurrences, build_dbf
from .dsu import NeighborSet
from .errors import ParamError
from .textcore import GappedStructure, as_index, lcp_suffixes


@dataclass(frozen=True)
class BoundedGapResult:
    """Per-position arm lengths and witness anchors for one gap window."""

    values: list
    B: list
    g: int
    G: int


def _check_window(n, g, G):
    if not 0 <= g < G <= n:
        raise ParamError(f"gap window needs 0 <= g < G <= n, got g={g}, G={G}, n={n}")


def _window_rank_sweep(n, g, G, keys, qkeys, emit):
    """Report rank-neighbor candidates inside sliding windows.

    The window of position i is {j : i-G <= j <= i-g-1} clipped to [1, n];
    emit(i, j) fires for the members whose key is adjacent to qkeys[i].
    Positions are cut into blocks of the window width so that every window
    meets a block in a part that only ever shrinks, which makes a
    deletion-only neighbor structure sufficient.  The left-driven pass
    walks parts [i-G, block end]; the right-driven pass walks parts
    [block start, i-g-1] and also covers windows clipped at position 1.
    """
    delta = G - g
    pos_of = {}
    for j in range(1, n + 1):
        pos_of[keys[j]] = j

    def query(ns, i):
        q = qkeys[i]
        a = ns.pred(q)
        if a is not None:
            emit(i, pos_of[a])
        b = ns.succ(q)
        if b is not None:
            emit(i, pos_of[b])

    p0 = 1
    while p0 <= n:
        p1 = min(p0 + delta - 1, n)
        ihi = min(p1 + G, n)
        if p0 + G <= ihi:
            ns = NeighborSet(sorted(keys[j] for j in range(p0, p1 + 1)))
            for i in range(p0 + G, ihi + 1):
                query(ns, i)
                ns.delete(keys[i - G])
        p0 = p1 + 1

    p0 = 1
    while p0 <= n:
        p1 = min(p0 + delta - 1, n)
        ilo = p0 + g + 1
        ihi = min(p1 + g + 1, n)
        if ilo <= ihi:
            ns = NeighborSet(sorted(keys[j] for j in range(p0, p1 + 1)))
            r = p1
            for i in range(ihi, ilo - 1, -1):
                while r > i - g - 1:
                    ns.delete(keys[r])
                    r -= 1
                query(ns, i)
        p0 = p1 + 1


def lprf_bounded(idx, g: int, G: int) -> BoundedGapResult:
    """Longest reversed factor before each position, gap in [g, G).

    values[i-1] is the largest m with w[i..i+m-1] equal to the reversal of
    a factor ending at some j with g <= i-1-j < G; B[i-1] is that end j.
    Inside each window the best end maximizes a reversed-prefix comparison,
    which is attained at a rank neighbor in the merged ordering of suffixes
    and reversed prefixes.
    """
    idx = as_index(idx)
    n = idx.n
    _check_window(n, g, G)
    rank_suf, rank_pre = idx._merged_ranks()
    val = [0] * (n + 1)
    wit = [-1] * (n + 1)
    ulcp = idx._combined().lcp_pair0
    mirror = 2 * n + 1

    def emit(i, j):
        v = ulcp(i - 1, mirror - j)
        if v > 0 and (v > val[i] or (v == val[i] and j > wit[i])):
            val[i] = v
            wit[i] = j

    _window_rank_sweep(n, g, G, rank_pre, rank_suf, emit)
    return BoundedGapResult(values=val[1:], B=wit[1:], g=g, G=G)


def _run_best(idx, i, q, p, cnt, g, G, update):
    """Best admissible cut arm among run occurrences q, q+p, ..., q+(cnt-1)p.

    Occurrence starts q_t share a periodic stretch ending with the run, so
    the uncut match length against i is min(A0 - t*p, Bv) with one exact
    correction where the two stretches end together.  Arms are cut to keep
    the gap at least g and stay admissible while still reaching gap < G.
    The value profile in t is non-increasing apart from the correction
    point, so checking a constant set of breakpoints finds the optimum.
    """
    n = idx.n
    A0 = p + lcp_suffixes(idx, q, q + p)
    Bv = p + lcp_suffixes(idx, i, i + p) if i + p <= n else n - i + 1
    C0 = i - q - g
    L0 = i - q - G + 1
    T = min(cnt - 1, (i - g - 1 - q) // p)
    if T < 0:
        return
    ts = {0, T}
    for num in (A0 - Bv, C0 - Bv, A0 - 1, C0 - 1, L0 - Bv, L0 - 1):
        t = num // p
        ts.update((t - 1, t, t + 1))
    extra = None
    best_v = 0
    best_j = -1
    for t in ts:
        if not 0 <= t <= T:
            continue
        At = A0 - t * p
        if At == Bv:
            if extra is None:
                a, b = q + A0, i + Bv
                extra = lcp_suffixes(idx, a, b) if a <= n and b <= n else 0
            m = At + extra
        else:
            m = min(At, Bv)
        ell = min(m, C0 - t * p)
        if ell < 1 or ell < L0 - t * p:
            continue
        jt = q + t * p
        if ell > best_v or (ell == best_v and jt > best_j):
            best_v = ell
            best_j = jt
    if best_v:
        update(i, best_v, best_j)


def lpf_bounded(idx, dbf: "BasicFactorDict | None", g: int, G: int) -> BoundedGapResult:
    """Longest earlier factor copy before each position, gap in [g, G).

    values[i-1] is the largest m with w[j..j+m-1] = w[i..i+m-1] for some
    j <= i-g-m such that the gap i-j-m lies in [g, G); B[i-1] is that j,
    preferring the rightmost one seen.  Candidate starts are grouped by the
    power-of-two prefix they share with position i: long prefixes make the
    occurrence window narrow enough to scan run-compressed occurrence lists,
    short ones leave a middle zone where no arm ever needs cutting below the
    window bound, handled by the same rank-neighbor sweep as the palindromic
    case but over plain suffix ranks.
    """
    idx = as_index(idx)
    n = idx.n
    _check_window(n, g, G)
    if dbf is None:
        dbf = build_dbf(idx)
    val = [0] * (n + 1)
    wit = [-1] * (n + 1)
    lcp0 = idx._w.lcp_pair0
    # positions whose length-2^k prefix is globally unique can never gain a
    # candidate at level k, so levels above each cap are skipped outright
    caps, kstar = dbf.recurrence_caps()

    def update(i, ell, j):
        if ell > val[i] or (ell == val[i] and j > wit[i]):
            val[i] = ell
            wit[i] = j

    def eval_at(i, j):
        ell = min(lcp0(j - 1, i - 1), i - j - g)
        if ell >= 1 and ell >= i - j - G + 1:
            update(i, ell, j)

    def scan(i, k, lo, hi):
        m = 1 << k
        occ = bf_occurrences(dbf, i, k, (lo, min(n, hi + m - 1)))
        for j in occ.isolated:
            eval_at(i, j)
        for (q, p, c) in occ.runs:
            _run_best(idx, i, q, p, c, g, G, update)

    delta = G - g
    k0 = delta.bit_length() - 1
    kmax = n.bit_length() - 1

    for k in range(k0, min(kmax, kstar) + 1):
        m = 1 << k
        for i in range(2, n - m + 2):
            if caps[i - 1] < k:
                continue
            hi = i - g - 1
            if hi < 1:
                continue
            scan(i, k, max(1, i - G - 2 * m), hi)

    wrank = None
    for k in range(0, min(k0, kstar + 1)):
        m = 1 << k
        for i in range(2, n - m + 2):
            if caps[i - 1] < k:
                continue
            hi_all = i - g - 1
            if hi_all < 1:
                continue
            lo1 = max(1, i - G - 2 * m)
            hi1 = min(hi_all, i - G + m)
            lo2 = max(1, i - g - 2 * m)
            if hi1 >= lo1 and lo2 <= hi1 + 1:
                scan(i, k, lo1, hi_all)
            elif hi1 >= lo1:
                scan(i, k, lo1, hi1)
                scan(i, k, lo2, hi_all)
            else:
                scan(i, k, lo2, hi_all)
        gk = g + 2 * m
        Gk = G - m - 1
        if Gk > gk:
            if wrank is None:
                rows = idx.rank
                wrank = [0] + rows
            def emit(i, j):
                ell = min(lcp0(j - 1, i - 1), i - j - g)
                if ell >= 1:
                    update(i, ell, j)
            _window_rank_sweep(n, gk, Gk, wrank, wrank, emit)

    return BoundedGapResult(values=val[1:], B=wit[1:], g=g, G=G)


def longest_bounded(idx, g: int, G: int, kind: str, dbf=None) -> "GappedStructure | None":
    """Longest structure of the given kind over all positions, or None."""
    idx = as_index(idx)
    if kind == "palindrome":
        res = lprf_bounded(idx, g, G)
    elif kind == "repeat":
        res = lpf_bounded(idx, dbf, g, G)
    else:
        raise ParamError(f"kind must be 'repeat' or 'palindrome', got {kind!r}")
    best_i = -1
    best_v = 0
    for t, v in enumerate(res.values):
        if v > best_v:
            best_v = v
            best_i = t + 1
    if best_i < 0:
        return None
    j = res.B[best_i - 1]
    if kind == "palindrome":
        return GappedStructure("palindrome", j - best_v + 1, best_v, best_i - 1 - j)
    return GappedStructure("repeat", j, best_v, best_i - j - best_v)
