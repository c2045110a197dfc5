"""Alpha-gapped structures: arrays, enumeration, longest witness."""

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gapped.alphagap import (MaximalStructure, alpha_arrays, alpha_ratio,
                             enumerate_maximal_alpha, longest_alpha)
from gapped.basicfactors import build_dbf
from gapped.errors import ParamError
from gapped.oracles import (oracle_lpal_alpha, oracle_lrep_alpha,
                            oracle_maximal_alpha)
from gapped.textcore import GappedStructure, build_index

words = st.text(alphabet="ab", min_size=1, max_size=40)
alphas = st.sampled_from((1, Fraction(3, 2), 2, 3, Fraction(7, 3)))


def fit_alpha(alpha, n):
    return min(alpha, n) if alpha > 1 else alpha


def check_witnesses(w, alpha, kind, values, B):
    p, q = alpha_ratio(alpha)
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


def test_alpha_ratio():
    assert alpha_ratio(2) == (2, 1)
    assert alpha_ratio(Fraction(3, 2)) == (3, 2)
    assert alpha_ratio("7/3") == (7, 3)
    assert alpha_ratio((9, 4)) == (9, 4)
    for bad in (Fraction(1, 2), 0, "2/3"):
        with pytest.raises(ParamError):
            alpha_ratio(bad)
    with pytest.raises(ParamError):
        alpha_ratio(1.5)  # floats are ambiguous near boundaries


def test_arrays_frozen():
    idx = build_index("ababab")
    values, _ = alpha_arrays(idx, idx.text, 2, "repeat")
    assert values == [0, 0, 2, 2, 2, 1]
    idx = build_index("abcba")
    values, _ = alpha_arrays(idx, idx.text, 4, "palindrome")
    assert values[3] == 2 and values[4] == 1
    idx = build_index("abababab")
    values, B = alpha_arrays(idx, idx.text, Fraction(3, 2), "repeat")
    assert values == [0, 0, 2, 2, 4, 3, 2, 0]
    assert B == [-1, -1, 1, 2, 1, 2, 5, -1]


def test_arrays_validate_params():
    idx = build_index("abc")
    with pytest.raises(ParamError):
        alpha_arrays(idx, idx.text, 4, "repeat")  # alpha > n
    with pytest.raises(ParamError):
        alpha_arrays(idx, idx.text, 2, "helix")
    with pytest.raises(ParamError):
        enumerate_maximal_alpha(idx, build_index("aab").text, 2, "repeat")


def test_enumerate_frozen():
    idx = build_index("aabaa")
    got = enumerate_maximal_alpha(idx, idx.text, 3, "repeat")
    trips = {(m.structure.left, m.structure.arm, m.structure.gap) for m in got}
    assert trips == {(1, 2, 1), (2, 1, 1)}
    for m in got:
        assert isinstance(m, MaximalStructure)
        assert m.blocked_left and m.blocked_right
        assert m.structure.gap >= 1
    idx = build_index("abc")
    assert enumerate_maximal_alpha(idx, idx.text, 3, "repeat") == []


def test_longest_frozen():
    idx = build_index("ababab")
    st_ = longest_alpha(idx, None, idx.text, 2, "repeat")
    assert st_ is not None and st_.arm == 2
    idx = build_index("abcba")
    st_ = longest_alpha(idx, None, idx.text, 4, "palindrome")
    assert st_ is not None and st_.arm == 2 and st_.kind == "palindrome"
    idx = build_index("abc")
    assert longest_alpha(idx, None, idx.text, 3, "repeat") is None


def test_exhaustive_tiny():
    for n in range(1, 9):
        for bits in itertools.product("ab", repeat=n):
            w = "".join(bits)
            idx = build_index(w)
            for alpha in (1, Fraction(3, 2), 2, n):
                a = fit_alpha(alpha, n)
                for kind, oracle in (("repeat", oracle_lrep_alpha),
                                     ("palindrome", oracle_lpal_alpha)):
                    values, B = alpha_arrays(idx, idx.text, a, kind)
                    assert values == oracle(w, a)[0], (w, a, kind)
                    check_witnesses(w, a, kind, values, B)


@given(words, alphas, st.data())
@settings(max_examples=200, deadline=None)
def test_arrays_match_oracle(w, alpha, data):
    a = fit_alpha(alpha, len(w))
    idx = build_index(w)
    for kind, oracle in (("repeat", oracle_lrep_alpha),
                         ("palindrome", oracle_lpal_alpha)):
        values, B = alpha_arrays(idx, idx.text, a, kind)
        assert values == oracle(w, a)[0]
        check_witnesses(w, a, kind, values, B)


@given(words, alphas)
@settings(max_examples=150, deadline=None)
def test_enumerate_matches_oracle(w, alpha):
    a = fit_alpha(alpha, len(w))
    idx = build_index(w)
    for kind in ("repeat", "palindrome"):
        got = enumerate_maximal_alpha(idx, idx.text, a, kind)
        trips = {(m.structure.left, m.structure.arm, m.structure.gap) for m in got}
        assert len(trips) == len(got)
        assert trips == oracle_maximal_alpha(w, a, kind)


@given(words, alphas)
@settings(max_examples=80, deadline=None)
def test_longest_equals_array_max(w, alpha):
    a = fit_alpha(alpha, len(w))
    idx = build_index(w)
    dbf = build_dbf(idx)
    for kind in ("repeat", "palindrome"):
        best = max(alpha_arrays(idx, idx.text, a, kind)[0], default=0)
        st_ = longest_alpha(idx, dbf, idx.text, a, kind)
        if best == 0:
            assert st_ is None
        else:
            assert st_ is not None and st_.arm == best
            st_.check(idx.text)
            p, q = alpha_ratio(a)
            assert q * (st_.arm + st_.gap) <= p * st_.arm


def test_longest_block_path_random():
    # sizes well past the short-word fallback
    rng = random.Random(99)
    for _ in range(40):
        n = rng.randint(12, 220)
        sigma = rng.choice((2, 2, 4))
        w = "".join(rng.choice("abcd"[:sigma]) for _ in range(n))
        alpha = rng.choice((1, Fraction(3, 2), 2, 3, n))
        idx = build_index(w)
        dbf = build_dbf(idx)
        for kind, oracle in (("repeat", oracle_lrep_alpha),
                             ("palindrome", oracle_lpal_alpha)):
            best = max(oracle(w, alpha)[0], default=0)
            st_ = longest_alpha(idx, dbf, idx.text, alpha, kind)
            got = st_.arm if st_ is not None else 0
            assert got == best, (w, alpha, kind)


def test_cardinality_stays_linear():
    # adversarial family: counts must stay within a small constant of alpha*n
    for reps in (60, 200):
        w = "aab" * reps
        n = len(w)
        idx = build_index(w)
        for alpha in (1, 2, 4):
            for kind in ("repeat", "palindrome"):
                S = enumerate_maximal_alpha(idx, idx.text, alpha, kind)
                assert len(S) <= 8 * alpha * n
