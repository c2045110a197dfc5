"""Reference implementations: frozen values and dispatch plumbing.

The oracles are the ground truth the fast paths are gated on, so their own
tests pin hand-checked values on tiny words.
"""

import pytest
from fractions import Fraction

from gapped.errors import ParamError
from gapped.oracles import (oracle_compute, oracle_lpal_alpha,
                            oracle_lpf_bounded, oracle_lpf_positional,
                            oracle_lprf_bounded, oracle_lprf_positional,
                            oracle_lrep_alpha, oracle_maximal_alpha,
                            oracle_prev_factor, oracle_runs)


def test_bounded_palindrome_frozen():
    values, B = oracle_lprf_bounded("abcba", 0, 2)
    assert values == [0, 0, 0, 2, 0]
    assert B == [-1, -1, -1, 2, -1]
    values, B = oracle_lprf_bounded("aaaa", 1, 2)
    assert values == [0, 0, 1, 1]
    assert B == [-1, -1, 1, 2]


def test_bounded_repeat_frozen():
    values, B = oracle_lpf_bounded("abaab", 1, 3)
    assert values == [0, 0, 1, 2, 1]
    assert B == [-1, -1, 1, 1, 2]
    values, _ = oracle_lpf_bounded("ababab", 0, 1)
    assert values[3] == 2


def test_positional_frozen():
    values, _ = oracle_lprf_positional("abcba", [1] * 5)
    assert values[3] == 2
    values, _ = oracle_lprf_positional("aabaa", [1] * 5)
    assert values[4] == 1
    values, _ = oracle_lpf_positional("ababa", [1] * 5)
    assert values == [0, 0, 1, 1, 1]
    values, _ = oracle_lpf_positional("aaaa", [1] * 4)
    assert values == [0, 0, 1, 1]
    n = 6
    values, _ = oracle_lpf_positional("ababab", [n] * n)
    assert values == [0] * n


def test_alpha_frozen():
    values, _ = oracle_lrep_alpha("ababab", 2)
    assert values == [0, 0, 2, 2, 2, 1]
    values, _ = oracle_lpal_alpha("abcba", 4)
    assert values[3] == 2 and values[4] == 1
    values, _ = oracle_lpal_alpha("aa", 2)
    assert values == [0, 1]
    values, B = oracle_lrep_alpha("abababab", Fraction(3, 2))
    assert values == [0, 0, 2, 2, 4, 3, 2, 0]
    assert B == [-1, -1, 1, 2, 1, 2, 5, -1]


def test_maximal_alpha_frozen():
    got = oracle_maximal_alpha("aabaa", 3, "repeat")
    assert got == {(1, 2, 1), (2, 1, 1)}
    assert oracle_maximal_alpha("abc", 3, "palindrome") == set()
    with pytest.raises(ParamError):
        oracle_maximal_alpha("ab", 1, "spiral")


def test_prev_factor_frozen():
    assert oracle_prev_factor("ababa") == [-1, 1, 1, 2, 1]
    assert oracle_prev_factor("abc") == [-1, 1, 1]
    assert oracle_prev_factor("aaa") == [-1, 1, 1]
    assert oracle_prev_factor("a") == [-1]


def test_runs_frozen():
    assert set(oracle_runs("aabaabaa")) == {(1, 2, 1), (4, 5, 1), (7, 8, 1), (1, 8, 3)}


def test_compute_dispatch():
    values, _ = oracle_compute("1a", "abcba", {"g": 0, "G": 2})
    assert values == [0, 0, 0, 2, 0]
    assert oracle_compute("L", "abc") == [-1, 1, 1]
    with pytest.raises(ParamError):
        oracle_compute("1a", "ab")  # missing params
    with pytest.raises(ParamError):
        oracle_compute("9z", "ab")


def test_alpha_param_validation():
    with pytest.raises(ParamError):
        oracle_lrep_alpha("ab", Fraction(1, 2))
