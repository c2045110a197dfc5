"""End-to-end acceptance gate.

Six numbered criteria, one terminal line each (`criterion N: PASS/FAIL`).
Criteria 1-5 are hard gates with zero numeric tolerance; criterion 6 is a
scaling report that prints measurements without failing the suite.
"""

import itertools
import random
import time
from fractions import Fraction

import numpy as np
import pytest

from gapped.alphagap import alpha_arrays, alpha_ratio, enumerate_maximal_alpha
from gapped.basicfactors import build_dbf
from gapped.boundedgap import lpf_bounded, lprf_bounded
from gapped.dsu import (BatchUFPlan, PartitionScript, WeightedInterval,
                        WeightedTree, batch_interval_uf, offline_wla, stab)
from gapped.oracles import (oracle_boundary_squares, oracle_centered_squares,
                            oracle_local_periods, oracle_lpal_alpha,
                            oracle_lpf_bounded, oracle_lpf_positional,
                            oracle_lprf_bounded, oracle_lprf_positional,
                            oracle_lrep_alpha, oracle_runs)
from gapped.periodicity import (boundary_squares, centered_squares,
                                compute_runs, local_periods)
from gapped.positionalgap import lpf_positional, lprf_positional
from gapped.textcore import build_index, lcp_rev, lcp_suffixes, lcs_prefixes

ALPHABETS = {2: "ab", 4: "abcd", 26: "abcdefghijklmnopqrstuvwxyz"}


def _gate(capsys, num, body):
    try:
        detail = body()
    except Exception as exc:
        with capsys.disabled():
            print(f"\ncriterion {num}: FAIL [{exc}]", flush=True)
        raise
    with capsys.disabled():
        print(f"\ncriterion {num}: PASS [{detail}]", flush=True)


def _rand_word(rng, sigma, n):
    return "".join(rng.choice(ALPHABETS[sigma]) for _ in range(n))


def _binary_words(nmax):
    for n in range(1, nmax + 1):
        for bits in itertools.product("ab", repeat=n):
            yield "".join(bits)


# witness validators; each returns the number of nonzero entries it checked


def _check_bounded(w, kind, g, G, values, B):
    seen = 0
    for x0, (v, j) in enumerate(zip(values, B)):
        i = x0 + 1
        if v == 0:
            assert j == -1
            continue
        if kind == "palindrome":
            gap = i - 1 - j
            assert g <= gap < G and w[i - 1:i - 1 + v] == w[j - v:j][::-1]
        else:
            gap = i - j - v
            assert g <= gap < G and w[i - 1:i - 1 + v] == w[j - 1:j - 1 + v]
        seen += 1
    return seen


def _check_positional(w, kind, gapfn, values, B):
    seen = 0
    for x0, (v, j) in enumerate(zip(values, B)):
        i = x0 + 1
        if v == 0:
            assert j == -1
            continue
        if kind == "palindrome":
            assert i - 1 - j >= gapfn[i - 1]
            assert w[i - 1:i - 1 + v] == w[j - v:j][::-1]
        else:
            assert i - j - v >= gapfn[i - 1]
            assert w[i - 1:i - 1 + v] == w[j - 1:j - 1 + v]
        seen += 1
    return seen


def _check_alpha(w, kind, alpha, values, B):
    p, q = alpha_ratio(alpha)
    seen = 0
    for x0, (v, left) in enumerate(zip(values, B)):
        x = x0 + 1
        if v == 0:
            assert left == -1
            continue
        gap = x - left - v
        assert left >= 1 and gap >= 0
        if kind == "repeat":
            assert w[left - 1:left - 1 + v] == w[x - 1:x - 1 + v]
            assert q * (x - left) <= p * v
        else:
            assert w[left - 1:left - 1 + v] == w[x - 1:x - 1 + v][::-1]
            assert q * (v + gap) <= p * v
        seen += 1
    return seen


def test_criterion_1_exhaustive_equivalence(capsys):
    def body():
        rng = random.Random(0xACC1)
        pairs = {"1": 0, "2": 0, "3": 0}
        for w in _binary_words(12):
            n = len(w)
            idx = build_index(w)
            dbf = build_dbf(idx)
            for g in range(n):
                for G in range(g + 1, n + 1):
                    got = lprf_bounded(idx, g, G)
                    assert got.values == oracle_lprf_bounded(w, g, G)[0], (w, g, G)
                    got = lpf_bounded(idx, dbf, g, G)
                    assert got.values == oracle_lpf_bounded(w, g, G)[0], (w, g, G)
                    pairs["1"] += 1
            for _ in range(20):
                gapfn = [rng.randint(1, n) for _ in range(n)]
                assert lprf_positional(idx, gapfn)[0] == \
                    oracle_lprf_positional(w, gapfn)[0], (w, gapfn)
                assert lpf_positional(idx, gapfn)[0] == \
                    oracle_lpf_positional(w, gapfn)[0], (w, gapfn)
                pairs["2"] += 1
            for alpha in (1, Fraction(3, 2), 2, 3, n):
                if alpha > n:
                    continue  # parameter precondition: alpha <= n
                assert alpha_arrays(idx, idx.text, alpha, "repeat")[0] == \
                    oracle_lrep_alpha(w, alpha)[0], (w, alpha)
                assert alpha_arrays(idx, idx.text, alpha, "palindrome")[0] == \
                    oracle_lpal_alpha(w, alpha)[0], (w, alpha)
                pairs["3"] += 1
        return ("binary words to n=12 exact: "
                f"{pairs['1']} gap windows, {pairs['2']} gap functions, "
                f"{pairs['3']} alpha values")

    _gate(capsys, 1, body)


def test_criterion_2_randomized_equivalence(capsys):
    def body():
        rng = random.Random(0xACC2)
        words = []
        for sigma in (2, 4, 26):
            for _ in range(34):
                words.append((_rand_word(rng, sigma, rng.randint(60, 400)), sigma))
        p3_words = [w for w, _ in words if len(w) <= 250]
        while len(p3_words) < 102:
            sigma = rng.choice((2, 4, 26))
            p3_words.append(_rand_word(rng, sigma, rng.randint(60, 250)))
        checked = 0
        for w, _ in words:
            n = len(w)
            idx = build_index(w)
            dbf = build_dbf(idx)
            g = rng.randint(0, n - 1)
            G = rng.randint(g + 1, n)
            got = lprf_bounded(idx, g, G)
            assert got.values == oracle_lprf_bounded(w, g, G)[0]
            _check_bounded(w, "palindrome", g, G, got.values, got.B)
            got = lpf_bounded(idx, dbf, g, G)
            assert got.values == oracle_lpf_bounded(w, g, G)[0]
            _check_bounded(w, "repeat", g, G, got.values, got.B)
            gapfn = [rng.randint(1, n) for _ in range(n)]
            va, ba = lprf_positional(idx, gapfn)
            assert va == oracle_lprf_positional(w, gapfn)[0]
            _check_positional(w, "palindrome", gapfn, va, ba)
            va, ba = lpf_positional(idx, gapfn)
            assert va == oracle_lpf_positional(w, gapfn)[0]
            _check_positional(w, "repeat", gapfn, va, ba)
            checked += 1
        for w in p3_words:
            n = len(w)
            idx = build_index(w)
            alpha = rng.choice((1, Fraction(3, 2), 2, Fraction(5, 2), 3, 4))
            va, ba = alpha_arrays(idx, idx.text, alpha, "repeat")
            assert va == oracle_lrep_alpha(w, alpha)[0]
            _check_alpha(w, "repeat", alpha, va, ba)
            va, ba = alpha_arrays(idx, idx.text, alpha, "palindrome")
            assert va == oracle_lpal_alpha(w, alpha)[0]
            _check_alpha(w, "palindrome", alpha, va, ba)
        return (f"{checked} words (n to 400) for gap windows/functions, "
                f"{len(p3_words)} words (n to 250) for alpha, exact")

    _gate(capsys, 2, body)


def _scan_lcp(w, i, j):
    m = 0
    while i + m <= len(w) and j + m <= len(w) and w[i + m - 1] == w[j + m - 1]:
        m += 1
    return m


def _scan_lcs(w, i, j):
    m = 0
    while i - m >= 1 and j - m >= 1 and w[i - m - 1] == w[j - m - 1]:
        m += 1
    return m


def _scan_lcp_rev(w, i, j):
    m = 0
    while i + m <= len(w) and j - m >= 1 and w[i + m - 1] == w[j - m - 1]:
        m += 1
    return m


def _stab_naive(ivs, n, mode):
    if mode == "max":
        acc = np.zeros(n, dtype=np.int64)
        for iv in ivs:
            seg = acc[iv.a - 1:iv.b - 1]
            np.maximum(seg, iv.weight, out=seg)
        return acc.tolist()
    acc = np.full(n, np.iinfo(np.int64).max, dtype=np.int64)
    for iv in ivs:
        seg = acc[iv.a - 1:iv.b - 1]
        np.minimum(seg, iv.weight, out=seg)
    acc[acc == np.iinfo(np.int64).max] = 0
    return acc.tolist()


def _wla_walk(parent, weight, v, bound):
    cum = 0
    while parent[v] != -1:
        cum += weight[v]
        v = parent[v]
        if cum > bound:
            return v
    return None


def test_criterion_3_infrastructure(capsys):
    def body():
        rng = random.Random(0xACC3)
        # lcp / lcs / lcp_rev against character scans
        queries = 0
        for _ in range(12):
            sigma = rng.choice((2, 4, 26))
            w = _rand_word(rng, sigma, rng.randint(50, 300))
            n = len(w)
            idx = build_index(w)
            for _ in range(300):
                i, j = rng.randint(1, n), rng.randint(1, n)
                assert lcp_suffixes(idx, i, j) == _scan_lcp(w, i, j)
                assert lcs_prefixes(idx, i, j) == _scan_lcs(w, i, j)
                assert lcp_rev(idx, i, j) == _scan_lcp_rev(w, i, j)
                queries += 3
        assert queries >= 10 ** 4
        # runs: random words and exhaustive binary
        runs_words = 0
        for _ in range(120):
            sigma = rng.choice((2, 3, 4, 26))
            alpha_chars = "abcdefghijklmnopqrstuvwxyz"[:sigma]
            w = "".join(rng.choice(alpha_chars) for _ in range(rng.randint(1, 120)))
            got = {(r.start, r.end, r.period) for r in compute_runs(build_index(w))}
            assert got == set(oracle_runs(w)), w
            runs_words += 1
        for w in _binary_words(14):
            got = {(r.start, r.end, r.period) for r in compute_runs(build_index(w))}
            assert got == set(oracle_runs(w)), w
            runs_words += 1
        # square/period arrays against quadratic scans
        for _ in range(40):
            sigma = rng.choice((2, 4, 26))
            w = _rand_word(rng, sigma, rng.randint(1, 300))
            idx = build_index(w)
            runs = compute_runs(idx)
            assert centered_squares(idx, runs) == oracle_centered_squares(w)
            assert local_periods(idx, runs) == oracle_local_periods(w)
            for mode in ("shortest-end", "longest-end",
                         "shortest-start", "longest-start"):
                assert boundary_squares(idx, runs, mode) == \
                    oracle_boundary_squares(w, mode), (w, mode)
        # interval stabbing against O(nk) evaluation
        for _ in range(500):
            n = rng.randint(1, 200)
            k = rng.randint(0, 400)
            ivs = []
            for _ in range(k):
                a = rng.randint(1, n)
                b = rng.randint(a + 1, n + 1)
                ivs.append(WeightedInterval(a, b, rng.randint(1, 10 ** 6)))
            mode = rng.choice(("max", "min"))
            assert stab(ivs, n, mode) == _stab_naive(ivs, n, mode)
        # weighted level ancestors against per-query root walks
        for _ in range(200):
            n = rng.randint(1, 100)
            parent = [-1] + [rng.randrange(i) for i in range(1, n)]
            weight = [0] + [rng.randint(0, 5) for _ in range(n - 1)]
            tree = WeightedTree(parent=tuple(parent), weight=tuple(weight))
            qs = [(v, rng.randint(0, 5 * n)) for v in range(n) for _ in range(2)]
            got = offline_wla(tree, qs)
            assert got == [_wla_walk(parent, weight, v, b) for v, b in qs]
        # batched interval union-find against direct simulation
        for _ in range(300):
            n = rng.randint(1, 60)
            bnd = sorted(rng.sample(range(2, n + 1), min(rng.randint(0, 6), n - 1))) \
                if n >= 2 else []
            live = list(bnd)
            finds, unions = [], []
            for _ in range(rng.randint(0, 12)):
                finds.append(rng.randint(1, n))
                if live and rng.random() < 0.6:
                    cut = rng.choice(live)
                    live.remove(cut)
                    unions.append(cut)
                else:
                    unions.append(None)
            plan = BatchUFPlan(n=n, partitions=(
                PartitionScript(tuple(bnd), tuple(finds), tuple(unions)),))
            got = batch_interval_uf(plan)[0]
            cuts = list(bnd)
            for x, ans, cut in zip(finds, got, unions):
                lo = max([1] + [c for c in cuts if c <= x])
                hi = min([n + 1] + [c for c in cuts if c > x])
                assert ans == (lo, hi)
                if cut is not None:
                    cuts.remove(cut)
        return (f"{queries} lcp-family queries, {runs_words} runs words, "
                "40 square-array words, 500 stabbings, 200 trees, "
                "300 union-find plans, all exact")

    _gate(capsys, 3, body)


def test_criterion_4_structural_bounds(capsys):
    def body():
        rng = random.Random(0xACC4)
        # runs-count bound on random, fibonacci, and periodic-block words
        tested = 0
        corpus = []
        for _ in range(200):
            sigma = rng.choice((2, 4, 26))
            corpus.append(_rand_word(rng, sigma, rng.randint(1, 2000)))
        fib = ["a", "ab"]
        while len(fib[-1]) < 4000:
            fib.append(fib[-1] + fib[-2])
        corpus.extend(f[:n] for f in fib[-2:] for n in (1000, 2500, len(f)))
        corpus.extend("aab" * (n // 3) for n in (300, 1500, 3000))
        for w in corpus:
            assert len(compute_runs(build_index(w))) < len(w), len(w)
            tested += 1
        # maximal alpha-gapped set stays within C * alpha * n on (aab)^k
        worst = 0.0
        for n in (300, 1500, 3000):
            w = "aab" * (n // 3)
            idx = build_index(w)
            for alpha in (1, 2, 4):
                for kind in ("repeat", "palindrome"):
                    count = len(enumerate_maximal_alpha(idx, idx.text, alpha, kind))
                    c = count / (alpha * n)
                    worst = max(worst, c)
                    assert count <= 10 * alpha * n, (n, alpha, kind, count)
        return (f"runs < n on {tested} words; "
                f"max |maximal alpha set| / (alpha*n) = {worst:.3f} "
                "on (aab)^k up to n=3000")

    _gate(capsys, 4, body)


def test_criterion_5_witness_validity(capsys):
    def body():
        rng = random.Random(0xACC5)
        validated = 0
        while validated < 10 ** 5:
            sigma = rng.choice((2, 2, 4))
            w = _rand_word(rng, sigma, 400)
            n = len(w)
            idx = build_index(w)
            dbf = build_dbf(idx)
            g = rng.choice((0, 1, rng.randint(0, n // 2)))
            G = rng.randint(max(g + 1, n // 2), n)
            got = lprf_bounded(idx, g, G)
            validated += _check_bounded(w, "palindrome", g, G, got.values, got.B)
            got = lpf_bounded(idx, dbf, g, G)
            validated += _check_bounded(w, "repeat", g, G, got.values, got.B)
            gapfn = [rng.randint(1, 3) for _ in range(n)]
            va, ba = lprf_positional(idx, gapfn)
            validated += _check_positional(w, "palindrome", gapfn, va, ba)
            va, ba = lpf_positional(idx, gapfn)
            validated += _check_positional(w, "repeat", gapfn, va, ba)
            alpha = rng.choice((Fraction(3, 2), 2, 3))
            for kind in ("repeat", "palindrome"):
                va, ba = alpha_arrays(idx, idx.text, alpha, kind)
                validated += _check_alpha(w, kind, alpha, va, ba)
        return f"{validated} nonzero entries reconstructed and re-verified"

    _gate(capsys, 5, body)


@pytest.mark.scaling
def test_criterion_6_scaling_report(capsys):
    rng = random.Random(0xACC6)
    sizes = [2 ** 18, 2 ** 19, 2 ** 20, 2 ** 21]
    ops = ("lprf_bounded", "lpf_bounded", "lprf_positional", "lpf_positional")
    limits = {"lprf_bounded": 2.5, "lpf_bounded": 2.8,
              "lprf_positional": 2.5, "lpf_positional": 2.5}
    times = {op: [] for op in ops}
    build_times = []
    for n in sizes:
        w = "".join(rng.choice("ab") for _ in range(n))
        t0 = time.perf_counter()
        idx = build_index(w)
        idx._combined()
        dbf = build_dbf(idx)
        build_times.append(time.perf_counter() - t0)
        gapfn = [1] * n
        for op, call in (
            ("lprf_bounded", lambda: lprf_bounded(idx, 0, n // 4)),
            ("lpf_bounded", lambda: lpf_bounded(idx, dbf, 0, n // 4)),
            ("lprf_positional", lambda: lprf_positional(idx, gapfn)),
            ("lpf_positional", lambda: lpf_positional(idx, gapfn)),
        ):
            t0 = time.perf_counter()
            call()
            times[op].append(time.perf_counter() - t0)
        del idx, dbf
    lines = ["criterion 6 (scaling, non-gating):"]
    lines.append("  n: " + "  ".join(f"{n:>9}" for n in sizes) +
                 "   per-doubling ratios (limit)")
    lines.append("  build+dbf: " +
                 "  ".join(f"{t:9.2f}s" for t in build_times))
    verdict = True
    for op in ops:
        ts = times[op]
        ratios = [ts[k + 1] / ts[k] for k in range(len(ts) - 1)]
        ok = all(r <= limits[op] for r in ratios)
        verdict = verdict and ok
        lines.append(
            f"  {op:16s} " + "  ".join(f"{t:8.2f}s" for t in ts) +
            "   " + ", ".join(f"{r:.2f}" for r in ratios) +
            f" (<= {limits[op]}) {'ok' if ok else 'EXCEEDED'}")
    near_million = times["lprf_bounded"][2] + times["lpf_bounded"][2] + \
        times["lprf_positional"][2] + times["lpf_positional"][2]
    within_minute = all(times[op][2] <= 60 for op in ops)
    verdict = verdict and within_minute
    lines.append(f"  n=2^20~10^6: per-op max "
                 f"{max(times[op][2] for op in ops):.2f}s, sum {near_million:.2f}s, "
                 f"each within 60s: {'yes' if within_minute else 'NO'}")
    lines.append(f"criterion 6: {'PASS' if verdict else 'FAIL'} "
                 "(reported, not gating)")
    with capsys.disabled():
        print("\n" + "\n".join(lines), flush=True)
