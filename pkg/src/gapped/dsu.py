"""Union-find toolkit: planned unions with extrema, interval partitions,
weighted interval stabbing, and offline weighted level ancestors."""

from bisect import bisect_left, bisect_right
from dataclasses import dataclass

from .errors import ParamError, PlanError, RangeError


@dataclass(frozen=True)
class WeightedInterval:
    """Half-open positional interval [a, b) carrying a positive weight."""

    a: int
    b: int
    weight: int


def _check_intervals(intervals, n):
    for iv in intervals:
        if not (1 <= iv.a < iv.b <= n + 1):
            raise RangeError(f"interval [{iv.a}, {iv.b}) outside [1, {n + 1})")
        if iv.weight < 1:
            raise ParamError(f"interval weight {iv.weight} < 1")


def stab(intervals, n, mode="max"):
    """H[i] = max (or min) weight over intervals containing i, 0 if uncovered.

    Returned as a 0-based list for positions 1..n.  Each position is written
    at most once: intervals are swept in decreasing (max) or increasing (min)
    weight order and already-decided positions are skipped via merged jump
    pointers, so the total work is near linear in n plus the interval count.
    """
    if mode not in ("max", "min"):
        raise ParamError(f"mode must be 'max' or 'min', got {mode!r}")
    if n < 0:
        raise ParamError(f"n must be nonnegative, got {n}")
    intervals = list(intervals)
    _check_intervals(intervals, n)
    intervals.sort(key=lambda iv: iv.weight, reverse=(mode == "max"))
    H = [0] * (n + 2)
    jump = list(range(n + 2))  # chased: first undecided position >= x

    def find(x):
        path = []
        while jump[x] != x:
            path.append(x)
            x = jump[x]
        for s in path:
            jump[s] = x
        return x

    for iv in intervals:
        x = find(iv.a)
        while x < iv.b:
            H[x] = iv.weight
            jump[x] = x + 1
            x = find(x + 1)
    return H[1:n + 1]


class NeighborSet:
    """Predecessor/successor queries over a static sorted key set with
    deletions only.  Dead slots point at their live flanks, path-compressed.
    """

    __slots__ = ("keys", "slot", "live", "leftp", "rightp")

    def __init__(self, keys):
        self.keys = list(keys)
        if any(y <= x for x, y in zip(self.keys, self.keys[1:])):
            raise ParamError("keys must be strictly increasing")
        m = len(self.keys)
        self.slot = {k: t for t, k in enumerate(self.keys)}
        self.live = [True] * m
        self.leftp = list(range(m))
        self.rightp = list(range(m))

    def _left(self, t):
        path = []
        while t >= 0 and not self.live[t]:
            path.append(t)
            t = self.leftp[t]
        for s in path:
            self.leftp[s] = t
        return t

    def _right(self, t):
        m = len(self.keys)
        path = []
        while t < m and not self.live[t]:
            path.append(t)
            t = self.rightp[t]
        for s in path:
            self.rightp[s] = t
        return t

    def delete(self, key):
        t = self.slot[key]
        if not self.live[t]:
            raise PlanError(f"key {key} already deleted")
        self.live[t] = False
        self.leftp[t] = t - 1
        self.rightp[t] = t + 1

    def contains(self, key):
        t = self.slot.get(key)
        return t is not None and self.live[t]

    def pred(self, x):
        """Largest live key <= x, or None."""
        t = self._left(bisect_right(self.keys, x) - 1)
        return self.keys[t] if t >= 0 else None

    def succ(self, x):
        """Smallest live key >= x, or None."""
        t = self._right(bisect_left(self.keys, x))
        return self.keys[t] if t < len(self.keys) else None


@dataclass(frozen=True)
class PartitionScript:
    """One partition of [1, n+1) into intervals cut at `boundaries`, plus an
    alternating op sequence: find(finds[t]) then union-at-boundary unions[t].
    """

    boundaries: tuple
    finds: tuple
    unions: tuple


@dataclass(frozen=True)
class BatchUFPlan:
    n: int
    partitions: tuple


def batch_interval_uf(plan: BatchUFPlan):
    """Run every partition's alternating find/union script.

    Returns, per partition, the list of find answers as half-open (lo, hi)
    pairs.  Unions must name a boundary that is still present; anything else
    is a malformed plan.
    """
    n = plan.n
    if n < 1:
        raise PlanError(f"universe [1, {n + 1}) is empty")
    out = []
    for part in plan.partitions:
        bnd = list(part.boundaries)
        if any(y <= x for x, y in zip(bnd, bnd[1:])):
            raise PlanError("partition boundaries must be strictly increasing")
        if bnd and not (1 < bnd[0] and bnd[-1] < n + 1):
            raise PlanError("inner boundaries must lie strictly inside [1, n+1)")
        if len(part.finds) != len(part.unions):
            raise PlanError("script needs one union slot per find (None to skip)")
        ns = NeighborSet([1] + bnd + [n + 1])
        answers = []
        for x, cut in zip(part.finds, part.unions):
            if not 1 <= x <= n:
                raise PlanError(f"find target {x} outside [1, {n}]")
            lo = ns.pred(x)
            hi = ns.succ(x + 1)
            answers.append((lo, hi))
            if cut is None:
                continue
            if cut == 1 or cut == n + 1 or not ns.contains(cut):
                raise PlanError(f"union boundary {cut} is not a live inner boundary")
            ns.delete(cut)
        out.append(answers)
    return out


class MinMaxUnionFind:
    """Union-find over 1..n restricted to a pre-declared forest of unions.

    Tracks the minimum and maximum element of every set.  Unions outside the
    declared plan, or repeated, are rejected.
    """

    __slots__ = ("n", "parent", "rank", "mn", "mx", "_allowed")

    def __init__(self, n, allowed_unions):
        if n < 1:
            raise ParamError(f"universe [1, {n + 1}) is empty")
        self.n = n
        self.parent = list(range(n + 1))
        self.rank = [0] * (n + 1)
        self.mn = list(range(n + 1))
        self.mx = list(range(n + 1))
        allowed = set()
        probe = list(range(n + 1))

        def proot(x):
            while probe[x] != x:
                probe[x] = probe[probe[x]]
                x = probe[x]
            return x

        for a, b in allowed_unions:
            if not (1 <= a <= n and 1 <= b <= n) or a == b:
                raise PlanError(f"union pair ({a}, {b}) is not valid")
            ra, rb = proot(a), proot(b)
            if ra == rb:
                raise PlanError("allowed unions must form a forest")
            probe[ra] = rb
            allowed.add((a, b) if a < b else (b, a))
        self._allowed = allowed

    def find(self, x):
        if not 1 <= x <= self.n:
            raise RangeError(f"element {x} outside [1, {self.n}]")
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def same(self, a, b):
        return self.find(a) == self.find(b)

    def union(self, a, b):
        key = (a, b) if a < b else (b, a)
        if key not in self._allowed:
            raise PlanError(f"union ({a}, {b}) is not in the declared plan")
        self._allowed.remove(key)
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            raise PlanError(f"union ({a}, {b}) repeats an existing merge")
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        self.mn[ra] = min(self.mn[ra], self.mn[rb])
        self.mx[ra] = max(self.mx[ra], self.mx[rb])

    def find_min(self, x):
        return self.mn[self.find(x)]

    def find_max(self, x):
        return self.mx[self.find(x)]


def static_uf_create(n, allowed_unions):
    """Build a MinMaxUnionFind whose unions are restricted to the given forest."""
    return MinMaxUnionFind(n, allowed_unions)


@dataclass(frozen=True)
class WeightedTree:
    """Rooted forest: parent[v] (-1 at roots) and weight[v] of the edge to it."""

    parent: tuple
    weight: tuple


def offline_wla(tree: WeightedTree, queries):
    """Per query (v, bound): the first ancestor u of v, walking upward, with
    pathweight(v, u) > bound; None when even the root is not far enough.

    All queries are answered in one depth-first sweep carrying the ancestor
    stack and its prefix weights; each lookup is a binary search.
    """
    parent = list(tree.parent)
    weight = list(tree.weight)
    m = len(parent)
    if len(weight) != m:
        raise ParamError("parent and weight lengths differ")
    children = [[] for _ in range(m)]
    roots = []
    for v, p in enumerate(parent):
        if p < 0:
            roots.append(v)
        else:
            if not 0 <= p < m:
                raise RangeError(f"parent of {v} out of range")
            if weight[v] < 0:
                raise ParamError(f"negative edge weight at node {v}")
            children[p].append(v)
    by_node = [[] for _ in range(m)]
    for qi, (v, bound) in enumerate(queries):
        if not 0 <= v < m:
            raise RangeError(f"query node {v} out of range")
        by_node[v].append((qi, bound))
    answers = [None] * len(queries)
    nodes = []    # ancestor stack, root first
    depthw = []   # prefix weights, non-decreasing
    for root in roots:
        todo = [(root, False)]
        while todo:
            v, leaving = todo.pop()
            if leaving:
                nodes.pop()
                depthw.pop()
                continue
            depthw.append((depthw[-1] if nodes else 0) + (weight[v] if parent[v] >= 0 else 0))
            nodes.append(v)
            for qi, bound in by_node[v]:
                t = bisect_left(depthw, depthw[-1] - bound) - 1
                t = min(t, len(nodes) - 2)
                if t >= 0:
                    answers[qi] = nodes[t]
            todo.append((v, True))
            todo.extend((c, False) for c in children[v])
    return answers
