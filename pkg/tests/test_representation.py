from math import gcd

import pytest

from divconv.arith import divisors
from divconv.representation import (
    brute_force_W_provider,
    count_N,
    count_R,
    omega3,
    omega4,
    r4,
    r4_by_enumeration,
    rep_oracle,
    s4,
    s4_by_enumeration,
)


def test_r4_examples():
    assert r4(0) == 1
    assert r4(1) == 8
    assert r4(2) == 24


def test_s4_examples():
    assert s4(0) == 1
    assert s4(1) == 12
    assert s4(3) == 12


def test_quaternary_closed_forms_vs_enumeration():
    for n in range(0, 101):
        assert r4(n) == r4_by_enumeration(n)
        assert s4(n) == s4_by_enumeration(n)


def test_omega4_examples():
    assert list(omega4(120).pairs) == [(1, 30), (2, 15), (3, 10), (5, 6)]
    assert list(omega4(40).pairs) == [(1, 10), (2, 5)]
    assert list(omega4(4).pairs) == [(1, 1)]
    assert list(omega4(56).pairs) == [(1, 14), (2, 7)]


def test_omega3_examples():
    assert list(omega3(120).pairs) == [(1, 40), (5, 8)]
    assert list(omega3(33).pairs) == [(1, 11)]
    assert list(omega3(3).pairs) == [(1, 1)]


def test_omega_preconditions():
    with pytest.raises(ValueError):
        omega4(33)  # not divisible by 4
    with pytest.raises(ValueError):
        omega4(64)  # nu > 3
    with pytest.raises(ValueError):
        omega3(8)  # not divisible by 3


def _all_coprime_pairs(product):
    return sorted(
        {(min(a, product // a), max(a, product // a)) for a in divisors(product) if gcd(a, product // a) == 1}
    )


@pytest.mark.parametrize("level", [12, 24, 40, 56, 120])
def test_omega4_is_all_coprime_factorizations(level):
    assert list(omega4(level).pairs) == _all_coprime_pairs(level // 4)


@pytest.mark.parametrize("level", [12, 15, 24, 33, 120])
def test_omega3_is_all_coprime_factorizations(level):
    assert list(omega3(level).pairs) == _all_coprime_pairs(level // 3)


def test_rep_oracle_examples():
    assert rep_oracle("quad", 1, 1, 0) == 1
    assert rep_oracle("hex", 1, 1, 1) == 24
    with pytest.raises(ValueError):
        rep_oracle("quad", 1, 1, 300)
    with pytest.raises(ValueError):
        rep_oracle("cubic", 1, 1, 5)


def test_count_examples():
    w = brute_force_W_provider
    assert count_N(1, 1, 1, w) == 16
    assert count_R(1, 1, 1, w) == 24


@pytest.mark.parametrize("level", [12, 24, 40, 56])
def test_count_N_vs_oracle_brute_provider(level):
    w = brute_force_W_provider
    for a, b in omega4(level).pairs:
        for n in range(1, 101):
            assert count_N(a, b, n, w) == rep_oracle("quad", a, b, n), (a, b, n)


@pytest.mark.parametrize("level", [12, 15, 24, 33])
def test_count_R_vs_oracle_brute_provider(level):
    w = brute_force_W_provider
    for c, d in omega3(level).pairs:
        for n in range(1, 101):
            assert count_R(c, d, n, w) == rep_oracle("hex", c, d, n), (c, d, n)


def test_count_uses_injected_provider():
    calls = []

    def spy(a, b, n):
        calls.append((a, b, n))
        return brute_force_W_provider(a, b, n)

    count_N(1, 10, 40, spy)
    assert (1, 10, 40) in calls
    assert (4, 10, 40) in calls
    assert (1, 40, 40) in calls
    assert (1, 10, 10) in calls  # the n/4 term


def test_count_guards():
    w = brute_force_W_provider
    with pytest.raises(ValueError):
        count_N(2, 4, 5, w)
    with pytest.raises(ValueError):
        count_R(3, 9, 5, w)
