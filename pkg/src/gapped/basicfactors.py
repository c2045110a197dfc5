"""Dictionary of basic factors: power-of-two factor labels, run-compressed
occurrence queries in ranges, suffix-array ranges per factor, and bit-set
occurrence queries inside small windows."""

from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field

import numpy as np

from .errors import ParamError, PreconditionError, RangeError
from .periodicity import compute_runs
from .textcore import TextIndex, _SA, build_text


@dataclass(frozen=True)
class CompactOccurrences:
    """Occurrence starts in a range: isolated positions plus arithmetic runs.

    Each run (first, period, count) stands for first, first+period, ...,
    count >= 2 terms, where period is the smallest period of the queried
    factor.  Expanding runs and isolated together yields every occurrence
    in the range exactly once.
    """

    isolated: tuple
    runs: tuple

    def positions(self):
        """All occurrence starts, ascending."""
        out = list(self.isolated)
        for first, period, count in self.runs:
            out.extend(first + period * t for t in range(count))
        return sorted(out)


def _labels_from_sa(wsa: _SA, m: int):
    """Dense 1-based labels of all length-m factors, from one suffix array.

    Returns (labels, order, bnd): labels[p0] for 0-based start p0; order
    holds starts grouped by label, ascending inside a group; group ℓ is
    order[bnd[ℓ-1]:bnd[ℓ]].  Labels increase lexicographically.
    """
    n = wsa.n
    sa = wsa.sa
    kept = sa <= n - m
    K = sa[kept]
    rows = np.nonzero(kept)[0]
    nk = len(K)
    if nk > 1:
        lo = rows[:-1] + 1
        hi = rows[1:]
        seg = (hi - lo + 1).astype(np.float64)
        j = np.frexp(seg)[1] - 1
        gmin = np.empty(nk - 1, dtype=np.int64)
        levels = wsa.rmq.levels
        for jj in np.unique(j):
            msk = j == jj
            half = 1 << int(jj)
            lev = np.frombuffer(levels[int(jj)], dtype=np.int32)
            gmin[msk] = np.minimum(lev[lo[msk]], lev[hi[msk] - half + 1])
        bump = np.empty(nk, dtype=np.int64)
        bump[0] = 1
        bump[1:] = gmin < m
        grp = np.cumsum(bump)
    else:
        grp = np.ones(nk, dtype=np.int64)
    labels = np.zeros(n - m + 1, dtype=np.int32)
    labels[K] = grp
    perm = np.lexsort((K, grp))
    order = K[perm].astype(np.int32)
    counts = np.bincount(grp)[1:]
    bnd = np.concatenate(([0], np.cumsum(counts)))
    return labels, order, bnd


class BasicFactorDict:
    """Labels of factors w[i..i+2^k-1] for every level, with per-label
    occurrence arrays and, per level, the run period of each factor when
    that period is at most half the factor length (0 otherwise).

    Levels are materialized on first use.
    """

    def __init__(self, idx: TextIndex):
        self.idx = idx
        self.kmax = idx.n.bit_length() - 1
        self._levels = {}
        self._lists = {}
        self._perk = {}
        self._runs = None
        self._cap = None

    def _check_level(self, k):
        if not 0 <= k <= self.kmax:
            raise RangeError(f"level {k} outside [0, {self.kmax}]")

    def level(self, k):
        """(labels, order, bnd) arrays for factor length 2^k."""
        self._check_level(k)
        got = self._levels.get(k)
        if got is None:
            got = _labels_from_sa(self.idx._w, 1 << k)
            self._levels[k] = got
        return got

    def label(self, k, i):
        """Label of w[i..i+2^k-1]; equal labels iff equal factors."""
        self._check_level(k)
        m = 1 << k
        if not 1 <= i <= self.idx.n - m + 1:
            raise RangeError(f"factor start {i} with length {m} exceeds the word")
        return int(self.level(k)[0][i - 1])

    def level_lists(self, k):
        """level(k) plus per_k(k) as plain lists, for bisect-heavy callers."""
        got = self._lists.get(k)
        if got is None:
            labels, order, bnd = self.level(k)
            got = (labels.tolist(), order.tolist(), bnd.tolist(),
                   self.per_k(k).tolist())
            self._lists[k] = got
        return got

    def recurrence_caps(self):
        """(caps, kstar): caps[i0] is the largest level whose factor at
        i0+1 occurs somewhere else in the word (-1 if none), kstar their
        maximum.  A repeated factor has repeated prefixes, so one pass of
        ascending levels suffices and stops at the first repeat-free one."""
        if self._cap is None:
            n = self.idx.n
            cap = np.full(n, -1, dtype=np.int32)
            kstar = -1
            for k in range(self.kmax + 1):
                labels, _, bnd = self.level(k)
                sizes = bnd[1:] - bnd[:-1]
                mask = sizes[labels - 1] >= 2
                if not mask.any():
                    break
                cap[:len(labels)][mask] = k
                kstar = k
            self._cap = (cap.tolist(), kstar)
        return self._cap

    def runs(self):
        if self._runs is None:
            self._runs = compute_runs(self.idx)
        return self._runs

    def per_k(self, k):
        """per_k[p0] = period of the run covering w[p0+1..p0+2^k], when that
        period is <= 2^(k-1); 0 otherwise.  Distinct runs cannot both cover
        one factor at such periods, so plain slice writes are disjoint."""
        self._check_level(k)
        got = self._perk.get(k)
        if got is None:
            m = 1 << k
            got = np.zeros(self.idx.n - m + 1, dtype=np.int32)
            for run in self.runs():
                if 2 * run.period <= m and run.length >= m:
                    got[run.start - 1:run.end - m + 1] = run.period
            self._perk[k] = got
        return got

    def factor_period(self, k, i):
        """Smallest period of w[i..i+2^k-1] if <= max(1, 2^(k-1)), else 0."""
        if k == 0:
            return 1
        return int(self.per_k(k)[i - 1])


def build_dbf(idx: TextIndex) -> BasicFactorDict:
    """Label dictionary over the index; levels fill in lazily."""
    return BasicFactorDict(idx)


def _check_range(n, rng):
    a, b = rng
    if not 1 <= a <= b <= n:
        raise RangeError(f"range [{a}, {b}] not inside [1, {n}]")
    return a, b


def bf_occurrences(d: BasicFactorDict, i: int, k: int, rng) -> CompactOccurrences:
    """All starts of w[i..i+2^k-1] inside [a, b-2^k+1], run-compressed.

    Consecutive occurrences merge into a run iff their distance equals the
    factor's period and that period is at most max(1, 2^(k-1)); runs are
    extended maximally inside the range, so emitted pieces are O(1) per
    window block rather than per occurrence.
    """
    idx = d.idx
    n = idx.n
    d._check_level(k)
    m = 1 << k
    if not 1 <= i <= n - m + 1:
        raise RangeError(f"factor start {i} with length {m} exceeds the word")
    a, b = _check_range(n, rng)
    last = b - m + 1
    iso, runs = [], []
    if last >= a:
        labels, order, bnd, perk = d.level_lists(k)
        lab = labels[i - 1]
        base = bnd[lab - 1]
        t = bisect_left(order, a - 1, base, bnd[lab])
        hi = bisect_right(order, last - 1, base, bnd[lab])
        p = 1 if k == 0 else perk[i - 1]
        lcp0 = idx._w.lcp_pair0
        while t < hi:
            pos = order[t] + 1
            cnt = 1
            if p:
                ext = lcp0(pos - 1, pos + p - 1) if pos + p <= n else 0
                full = (p + ext - m) // p + 1 if p + ext >= m else 1
                cnt = min(full, (last - pos) // p + 1)
            if cnt >= 2:
                runs.append((pos, p, cnt))
                t = bisect_right(order, pos - 1 + (cnt - 1) * p, t, hi)
            else:
                iso.append(pos)
                t += 1
    return CompactOccurrences(isolated=tuple(iso), runs=tuple(runs))


def bf_sa_range(idx: TextIndex, d: BasicFactorDict, i: int, k: int):
    """1-based inclusive row range of sa(w) of suffixes starting with
    w[i..i+2^k-1], located by binary search with O(1) row comparisons."""
    n = idx.n
    d._check_level(k)
    m = 1 << k
    if not 1 <= i <= n - m + 1:
        raise RangeError(f"factor start {i} with length {m} exceeds the word")
    w = idx._w
    home = w.rank_list[i - 1]

    def share(row):
        # suffix at this sa row shares a prefix of length >= m with suffix i
        if row == home:
            return True
        lo, hi = (row, home) if row < home else (home, row)
        return w.rmq.query(lo + 1, hi) >= m

    lo, hi = 0, home
    while lo < hi:
        mid = (lo + hi) // 2
        if share(mid):
            hi = mid
        else:
            lo = mid + 1
    left = lo
    lo, hi = home, n - 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if share(mid):
            lo = mid
        else:
            hi = mid - 1
    return left + 1, lo + 1


def _border_period(y):
    """Smallest period of the symbol list y, via the classic border table."""
    m = len(y)
    border = [0] * (m + 1)
    t = 0
    for x in range(2, m + 1):
        while t and y[x - 1] != y[t]:
            t = border[t]
        if y[x - 1] == y[t]:
            t += 1
        border[x] = t
    return m - border[m]


class SmallWordBitsets:
    """Per-level label bit masks over a small window word.

    Occurrences of any factor of length up to the block size reduce to two
    mask lookups at the nearest power of two plus one AND, so queries cost
    O(1) big-int operations after linear preprocessing.
    """

    def __init__(self, v, block=None):
        self.text = build_text(v)
        self.n = n = self.text.n
        self.block = block if block is not None else max(1, n.bit_length() - 1)
        if self.block < 1:
            raise ParamError(f"block size {self.block} < 1")
        self._sa = _SA(self.text.pylist)
        self.kmax = min(self.block, n).bit_length() - 1
        self._levels = []
        self._masks = []
        for k in range(self.kmax + 1):
            labels, order, bnd = _labels_from_sa(self._sa, 1 << k)
            self._levels.append(labels)
            masks = {}
            for lab in range(1, len(bnd)):
                acc = 0
                for p0 in order[bnd[lab - 1]:bnd[lab]]:
                    acc |= 1 << int(p0)
                masks[lab] = acc
            self._masks.append(masks)

    def occurrences(self, j, length, rng) -> CompactOccurrences:
        """Starts of v[j..j+length-1] in the range; the factor must begin in
        the window's final block."""
        n = self.n
        if not 1 <= length <= self.block:
            raise RangeError(f"length {length} outside [1, {self.block}]")
        if not 1 <= j <= n - length + 1:
            raise RangeError(f"factor start {j} with length {length} exceeds the window")
        a, b = _check_range(n, rng)
        if j <= n - self.block:
            raise PreconditionError(
                f"factor start {j} not inside the final block ({n - self.block + 1}..{n})")
        last = b - length + 1
        if last < a:
            return CompactOccurrences(isolated=(), runs=())
        k = length.bit_length() - 1
        delta = length - (1 << k)
        labels = self._levels[k]
        masks = self._masks[k]
        m1 = masks[int(labels[j - 1])]
        m2 = masks[int(labels[j - 1 + delta])]
        hits = m1 & (m2 >> delta)
        hits &= ((1 << last) - 1) & ~((1 << (a - 1)) - 1)
        ps = []
        while hits:
            low = hits & -hits
            ps.append(low.bit_length())
            hits ^= low
        y = self.text.pylist[j - 1:j - 1 + length]
        per = _border_period(y)
        p = per if per <= max(1, length // 2) else 0
        iso, runs = [], []
        t = 0
        while t < len(ps):
            u = t
            if p:
                while u + 1 < len(ps) and ps[u + 1] - ps[u] == p:
                    u += 1
            if u > t:
                runs.append((ps[t], p, u - t + 1))
            else:
                iso.append(ps[t])
            t = u + 1
        return CompactOccurrences(isolated=tuple(iso), runs=tuple(runs))


def small_occurrences(v, j, length, rng, block=None) -> CompactOccurrences:
    """One-shot window query; build a SmallWordBitsets to reuse the masks."""
    return SmallWordBitsets(v, block).occurrences(j, length, rng)
