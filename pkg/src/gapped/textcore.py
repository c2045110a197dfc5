"""Text representation, suffix array indexes and constant-time factor comparisons.

All public positions are 1-indexed.  Arrays returned by higher-level
functions are plain lists whose slot t holds the answer for position t+1;
positions stored inside results (witnesses, arm starts) stay 1-indexed,
with -1 meaning "absent".
"""

from array import array
from dataclasses import dataclass, field

import numpy as np

from .errors import InputError, RangeError

_NAIVE_SA_CUTOFF = 96


@dataclass(frozen=True)
class Text:
    """A word over an integer alphabet; sym[0] is a padding slot."""

    sym: np.ndarray          # int32, length n+1, sym[1..n] >= 1
    n: int
    alphabet: tuple = ()     # original symbols, index v-1 <-> internal value v

    def __len__(self):
        return self.n

    def symbol(self, i):
        """Internal symbol value at 1-indexed position i."""
        if not 1 <= i <= self.n:
            raise RangeError(f"position {i} outside [1, {self.n}]")
        return int(self.sym[i])

    @property
    def pylist(self):
        """Symbols 1..n as a plain list (0-based), cached for scan loops."""
        cached = getattr(self, "_pylist", None)
        if cached is None:
            cached = self.sym[1:].tolist()
            object.__setattr__(self, "_pylist", cached)
        return cached

    def decode(self):
        """Original-symbol sequence as a list."""
        return [self.alphabet[v - 1] for v in self.pylist]


def build_text(data) -> Text:
    """Map a string / bytes / int sequence onto a dense 1-based alphabet."""
    if isinstance(data, Text):
        return data
    seq = list(data)
    if not seq:
        raise InputError("empty input word")
    alphabet = tuple(sorted(set(seq)))
    remap = {c: v for v, c in enumerate(alphabet, start=1)}
    sym = np.zeros(len(seq) + 1, dtype=np.int32)
    sym[1:] = [remap[c] for c in seq]
    return Text(sym=sym, n=len(seq), alphabet=alphabet)


def text_from_symbols(values) -> Text:
    """Wrap pre-mapped symbol values (all >= 1) without renaming them."""
    vals = list(values)
    if not vals:
        raise InputError("empty input word")
    sym = np.zeros(len(vals) + 1, dtype=np.int32)
    sym[1:] = vals
    return Text(sym=sym, n=len(vals), alphabet=tuple(range(1, max(vals) + 1)))


def _sa_naive(a):
    order = sorted(range(len(a)), key=lambda i: a[i:])
    return np.asarray(order, dtype=np.int64)


def _sa_doubling(a):
    n = len(a)
    rank = np.unique(a, return_inverse=True)[1].astype(np.int64)
    k = 1
    while True:
        key2 = np.full(n, -1, dtype=np.int64)
        key2[: n - k] = rank[k:]
        sa = np.lexsort((key2, rank))
        r1, r2 = rank[sa], key2[sa]
        fresh = np.ones(n, dtype=bool)
        fresh[1:] = (r1[1:] != r1[:-1]) | (r2[1:] != r2[:-1])
        rank = np.empty(n, dtype=np.int64)
        rank[sa] = np.cumsum(fresh) - 1
        if int(rank[sa[-1]]) == n - 1:
            return sa, rank
        k *= 2


def _kasai(a, sa, rank):
    n = len(a)
    lcp = [0] * n
    k = 0
    sa_l = sa.tolist()
    rank_l = rank.tolist()
    for i in range(n):
        r = rank_l[i]
        if r == 0:
            k = 0
            continue
        j = sa_l[r - 1]
        while i + k < n and j + k < n and a[i + k] == a[j + k]:
            k += 1
        lcp[r] = k
        if k:
            k -= 1
    return np.asarray(lcp, dtype=np.int32)


class _RMQ:
    """Sparse-table range minimum over a fixed array, O(1) queries.

    Levels live in typed arrays so scalar reads return plain ints; callers
    needing vector access wrap a level with np.frombuffer at no copy cost.
    """

    __slots__ = ("levels",)

    def __init__(self, arr):
        cur = np.ascontiguousarray(arr, dtype=np.int32)
        levels = [cur]
        m = len(cur)
        j = 1
        while (1 << j) <= m:
            half = 1 << (j - 1)
            width = m - (1 << j) + 1
            cur = np.minimum(levels[-1][:width], levels[-1][half:half + width])
            levels.append(cur)
            j += 1
        self.levels = [array("i", lev.tobytes()) for lev in levels]

    def query(self, lo, hi):
        """min(arr[lo..hi]) inclusive, 0-based, lo <= hi."""
        j = (hi - lo + 1).bit_length() - 1
        lev = self.levels[j]
        a = lev[lo]
        b = lev[hi - (1 << j) + 1]
        return a if a <= b else b


class _SA:
    """Suffix array + inverse + lcp table + RMQ over a 0-based symbol array."""

    __slots__ = ("a", "n", "sa", "rank", "lcp", "rmq", "rank_list", "sa_list")

    def __init__(self, a):
        a = list(a)
        self.a = a
        self.n = n = len(a)
        if n <= _NAIVE_SA_CUTOFF:
            sa = _sa_naive(a)
            rank = np.empty(n, dtype=np.int64)
            rank[sa] = np.arange(n)
        else:
            sa, rank = _sa_doubling(np.asarray(a, dtype=np.int64))
        self.sa = sa
        self.rank = rank
        self.lcp = _kasai(a, sa, rank)
        self.rmq = _RMQ(self.lcp)
        self.rank_list = rank.tolist()
        self.sa_list = sa.tolist()

    def lcp_pair0(self, i, j):
        """Longest common prefix of suffixes starting at 0-based i, j."""
        if i == j:
            return self.n - i
        rl = self.rank_list
        ra = rl[i]
        rb = rl[j]
        if ra > rb:
            ra, rb = rb, ra
        k = (rb - ra).bit_length() - 1
        lev = self.rmq.levels[k]
        a = lev[ra + 1]
        b = lev[rb - (1 << k) + 1]
        return a if a <= b else b


@dataclass
class TextIndex:
    """Indexes over a word and over word+separator+reversed word.

    The combined structure answers reversed-factor comparisons and supplies
    the merged ranking of suffixes and reversed prefixes used by the
    sliding-window algorithms.
    """

    text: Text
    _w: _SA = field(repr=False)
    _u: "_SA | None" = field(default=None, repr=False)
    _pal_ranks: "tuple | None" = field(default=None, repr=False)

    @property
    def n(self):
        return self.text.n

    @property
    def sa(self):
        """Suffix array of the word, 1-indexed start positions."""
        return [p + 1 for p in self._w.sa_list]

    @property
    def rank(self):
        """rank[i-1] = 0-based row of suffix i in sa order."""
        return list(self._w.rank_list)

    def _combined(self):
        if self._u is None:
            a = self.text.sym[1:].tolist()
            self._u = _SA(a + [0] + a[::-1])
        return self._u

    def _merged_ranks(self):
        """1-based merged ranks of suffixes and reversed prefixes."""
        if self._pal_ranks is None:
            n = self.n
            u = self._combined()
            rank_suf = [0] * (n + 1)
            rank_pre = [0] * (n + 1)
            t = 0
            for p0 in u.sa_list:
                if p0 == n:
                    continue
                t += 1
                if p0 < n:
                    rank_suf[p0 + 1] = t
                else:
                    rank_pre[2 * n + 1 - p0] = t
            self._pal_ranks = (rank_suf, rank_pre)
        return self._pal_ranks

    def _check(self, name, i):
        if not 1 <= i <= self.n:
            raise RangeError(f"{name}={i} outside [1, {self.n}]")


def build_index(t) -> TextIndex:
    """Build the suffix-array index set for a Text (or raw input)."""
    t = build_text(t)
    return TextIndex(text=t, _w=_SA(t.sym[1:].tolist()))


def as_index(obj) -> TextIndex:
    """Accept a TextIndex, Text, or raw word and return a TextIndex."""
    if isinstance(obj, TextIndex):
        return obj
    return build_index(obj)


def lcp_suffixes(idx: TextIndex, i: int, j: int) -> int:
    """Length of the longest common prefix of w[i..n] and w[j..n]."""
    idx._check("i", i)
    idx._check("j", j)
    return idx._w.lcp_pair0(i - 1, j - 1)


def lcs_prefixes(idx: TextIndex, i: int, j: int) -> int:
    """Length of the longest common suffix of w[1..i] and w[1..j]."""
    idx._check("i", i)
    idx._check("j", j)
    n = idx.n
    u = idx._combined()
    return u.lcp_pair0(2 * n + 1 - i, 2 * n + 1 - j)


def lcp_rev(idx: TextIndex, i: int, j: int) -> int:
    """Longest m with w[i..i+m-1] equal to the reverse of w[j-m+1..j]."""
    idx._check("i", i)
    idx._check("j", j)
    n = idx.n
    u = idx._combined()
    return u.lcp_pair0(i - 1, 2 * n + 1 - j)


@dataclass(frozen=True)
class GappedStructure:
    """A factor u v u (repeat) or reverse(u) v u (palindrome).

    left is the 1-indexed start of the left arm, arm the arm length,
    gap the length of v (0 allowed where the caller permits it).
    """

    kind: str
    left: int
    arm: int
    gap: int

    @property
    def right(self):
        """Start of the right arm."""
        return self.left + self.arm + self.gap

    @property
    def end(self):
        return self.right + self.arm - 1

    def check(self, t: Text) -> bool:
        """Arms equal (mirrored for palindromes) and inside the word."""
        if self.kind not in ("repeat", "palindrome"):
            return False
        if self.arm < 1 or self.gap < 0 or self.left < 1 or self.end > t.n:
            return False
        w = t.pylist
        lo = self.left - 1
        ro = self.right - 1
        if self.kind == "repeat":
            return w[lo:lo + self.arm] == w[ro:ro + self.arm]
        return w[lo:lo + self.arm] == w[ro:ro + self.arm][::-1]
