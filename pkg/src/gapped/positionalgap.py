"""Longest previous reversed factor and factor under per-position gap bounds.

For each position i the arrays report the longest u such that reverse(u) v
(palindromic side) or u v (repeat side) ends just before i, u is a prefix of
w[i..n], and the gap v is at least g(i) long, where g is an arbitrary
function with values in [1, n].
"""

from dataclasses import dataclass

from .dsu import NeighborSet, WeightedTree, offline_wla, static_uf_create
from .errors import ParamError
from .textcore import _RMQ, as_index, lcp_rev, lcp_suffixes


@dataclass(frozen=True)
class GapFunction:
    """Per-position gap lower bounds g(1..n), each in [1, n]."""

    g: tuple

    @staticmethod
    def constant(n, value):
        return GapFunction(g=(value,) * n)


def _gap_list(n, g):
    vals = list(g.g) if isinstance(g, GapFunction) else [int(v) for v in g]
    if len(vals) != n:
        raise ParamError(f"gap function has {len(vals)} entries, text has {n}")
    for v in vals:
        if not 1 <= v <= n:
            raise ParamError(f"gap bound {v} outside [1, {n}]")
    return [0] + vals


def prev_factor_links(idx) -> list:
    """L[i-1] = smallest j < i maximizing lcp_suffixes(j, i); -1 at i = 1.

    The suffixes matching suffix i at the maximal length form one contiguous
    band of suffix-array rows around the row of i, so the smallest start is
    a row-range minimum over the suffix array inside that band.
    """
    idx = as_index(idx)
    n = idx.n
    out = [-1] * n
    if n == 1:
        return out
    w = idx._w
    rank = w.rank_list
    lrmq = w.rmq
    smin = _RMQ(w.sa)
    ns = NeighborSet(list(range(n)))
    for i in range(n, 1, -1):
        r0 = rank[i - 1]
        ns.delete(r0)
        best = 0
        a = ns.pred(r0)
        if a is not None:
            best = lrmq.query(a + 1, r0)
        b = ns.succ(r0)
        if b is not None:
            best = max(best, lrmq.query(r0 + 1, b))
        if best == 0:
            out[i - 1] = 1
            continue
        lo, hi = 0, r0
        while lo < hi:
            mid = (lo + hi) // 2
            if lrmq.query(mid + 1, r0) >= best:
                hi = mid
            else:
                lo = mid + 1
        band_lo = lo
        lo, hi = r0, n - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if lrmq.query(r0 + 1, mid) >= best:
                lo = mid
            else:
                hi = mid - 1
        out[i - 1] = smin.query(band_lo, lo) + 1
    return out


def lprf_positional(idx, g):
    """Longest reversed factor ending before i with gap >= g(i).

    Candidates are ends j <= i-1-g(i); the best one on each rank side of
    suffix i is the admissible candidate rank-closest to it.  Reversed
    prefixes are inserted in merged-rank order onto a monotone stack whose
    popped elements stay reachable as a tree, so each query becomes one
    ancestor search by position, answered offline.
    """
    idx = as_index(idx)
    n = idx.n
    gp = _gap_list(n, g)
    rank_suf, rank_pre = idx._merged_ranks()
    owner_pos = [0] * (2 * n + 1)
    owner_pre = [False] * (2 * n + 1)
    for j in range(1, n + 1):
        owner_pos[rank_pre[j]] = j
        owner_pre[rank_pre[j]] = True
        owner_pos[rank_suf[j]] = j
    val = [0] * (n + 1)
    wit = [-1] * (n + 1)

    def accept(i, j):
        m = lcp_rev(idx, i, j)
        if m > 0 and (m > val[i] or (m == val[i] and j > wit[i])):
            val[i] = m
            wit[i] = j

    def run_pass(rows):
        parent = [-1] * (n + 1)
        weight = [0] * (n + 1)
        stack = [0]
        pending = []
        pending_i = []
        for r in rows:
            j = owner_pos[r]
            if owner_pre[r]:
                while stack[-1] > j:
                    stack.pop()
                parent[j] = stack[-1]
                weight[j] = j - stack[-1]
                stack.append(j)
            else:
                q = j - 1 - gp[j]
                if q < 1:
                    continue
                v = stack[-1]
                if v <= q:
                    if v:
                        accept(j, v)
                else:
                    pending.append((v, v - q - 1))
                    pending_i.append(j)
        if pending:
            tree = WeightedTree(parent=tuple(parent), weight=tuple(weight))
            for i, u in zip(pending_i, offline_wla(tree, pending)):
                if u:
                    accept(i, u)

    run_pass(range(1, 2 * n + 1))
    run_pass(range(2 * n, 0, -1))
    return (val[1:], wit[1:])


def lpf_positional(idx, g):
    """Longest earlier factor copy ending before i with gap >= g(i).

    Only the chain i, L[i], L[L[i]], ... can host an optimum.  A node j is
    dominated by L[j] for every cutoff p <= j + lcp_suffixes(L[j], j), so a
    sweep with p descending merges j into its parent at that threshold; at
    p = i - g(i) the minimum of the set containing i is the deepest
    non-dominated chain element, which is optimal for i.
    """
    idx = as_index(idx)
    n = idx.n
    gp = _gap_list(n, g)
    val = [0] * (n + 1)
    wit = [-1] * (n + 1)
    if n >= 2:
        L = prev_factor_links(idx)
        merge_at = [[] for _ in range(n + 1)]
        for j in range(2, n + 1):
            e = min(j + lcp_suffixes(idx, L[j - 1], j), n)
            merge_at[e].append(j)
        query_at = [[] for _ in range(n + 1)]
        for i in range(2, n + 1):
            p = i - gp[i]
            if p >= 1:
                query_at[p].append(i)
        uf = static_uf_create(n, [(j, L[j - 1]) for j in range(2, n + 1)])
        for p in range(n, 0, -1):
            for j in merge_at[p]:
                uf.union(j, L[j - 1])
            for i in query_at[p]:
                js = uf.find_min(i)
                if js < i:
                    m = min(lcp_suffixes(idx, js, i), p - js)
                    if m >= 1:
                        val[i] = m
                        wit[i] = js
    return (val[1:], wit[1:])
