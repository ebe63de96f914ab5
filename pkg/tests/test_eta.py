import random
from fractions import Fraction

import pytest

from divconv import fixtures
from divconv.arith import divisors
from divconv.eta import (
    EtaQuotient,
    dual_congruence,
    is_square_product_by_value,
    ligozat_check,
    order_at_infinity,
    search_cusp_forms,
)


def test_ligozat_table4_row1():
    rep = ligozat_check(EtaQuotient.make(33, {3: 8}))
    assert rep.cond_i and rep.cond_ii and rep.cond_iii
    assert rep.is_cusp and rep.weight == 4
    assert rep.order_at_infinity == 1


def test_ligozat_zero_map():
    rep = ligozat_check(EtaQuotient.make(33, {}))
    assert not rep.cond_iii and not rep.is_modular


def test_ligozat_weight2_level11():
    rep = ligozat_check(EtaQuotient.make(11, {1: 2, 11: 2}))
    assert rep.weight == 2 and rep.is_cusp
    assert rep.order_at_infinity == 1


def test_order_at_infinity_examples():
    assert order_at_infinity(EtaQuotient.make(1, {1: 24})) == 1
    # published level-40 ladder: row i has order i
    for i, row in enumerate(fixtures.BASIS_TABLES[40], start=1):
        assert order_at_infinity(EtaQuotient.make(40, row)) == i
    assert order_at_infinity(EtaQuotient.make(56, fixtures.BASIS_TABLES[56][13])) == 14


def test_table4_orders():
    orders = [
        order_at_infinity(EtaQuotient.make(33, row)) for row in fixtures.BASIS_TABLES[33]
    ]
    assert orders == [1, 2, 3, 4, 5, 6, 7, 8, 3, 10]


def test_orders_match_leading_series_term():
    for q in search_cusp_forms(12, 8, 6, max_order=3):
        s = q.series(30)
        o = order_at_infinity(q)
        assert all(s.coefficient(n) == 0 for n in range(o))
        assert s.coefficient(o) != 0


def test_square_condition_two_implementations_agree():
    rng = random.Random(7)
    divs = divisors(120)
    for _ in range(500):
        exps = {d: rng.randint(-6, 6) for d in rng.sample(divs, rng.randint(1, 6))}
        e = EtaQuotient.make(120, exps)
        assert ligozat_check(e).cond_ii == is_square_product_by_value(e.exponent_map)


def test_noncuspidal_published_rows_have_zero_order_sum():
    for N, rows in fixtures.NONCUSPIDAL_ROWS.items():
        for i in rows:
            e = EtaQuotient.make(N, fixtures.BASIS_TABLES[N][i - 1])
            rep = ligozat_check(e)
            assert not rep.is_cusp
            assert rep.is_modular  # orders all >= 0; at least one exactly 0
            assert any(v == 0 for v in rep.orders.values())


def test_cuspidal_published_rows_pass():
    for N, rows in fixtures.BASIS_TABLES.items():
        skip = set(fixtures.NONCUSPIDAL_ROWS.get(N, ())) | set(
            fixtures.DECLARED_WEIGHT2.get(N, ())
        )
        for i, row in enumerate(rows, start=1):
            if i in skip:
                continue
            rep = ligozat_check(EtaQuotient.make(N, row))
            assert rep.is_cusp and rep.weight == 4, (N, i)


def test_search_level_1_empty():
    assert search_cusp_forms(1, 8, 10, max_order=10) == []


def test_search_level_6():
    found = search_cusp_forms(6, 8, 10, max_order=1)
    assert {1: 2, 2: 2, 3: 2, 6: 2} in [q.exponent_map for q in found]
    strict = search_cusp_forms(6, 8, 10, max_order=1, strict=True)
    assert [q.exponent_map for q in strict] == [{1: 2, 2: 2, 3: 2, 6: 2}]


def test_search_level_33_bound_8():
    found = {q.exponents for q in search_cusp_forms(33, 8, 8, max_order=10)}
    for i, row in enumerate(fixtures.BASIS_TABLES[33], start=1):
        key = EtaQuotient.make(33, row).exponents
        if i in fixtures.NONCUSPIDAL_ROWS[33]:
            assert key not in found  # zero cusp-order sum: correctly rejected
        else:
            assert key in found, f"row {i} missing"


def test_search_deterministic_order():
    a = search_cusp_forms(12, 8, 8, max_order=3)
    b = search_cusp_forms(12, 8, 8, max_order=3)
    assert a == b
    vecs = [q.vector() for q in a]
    assert vecs == sorted(vecs)


def test_search_jobs_parallel_matches_serial():
    serial = search_cusp_forms(12, 8, 8, max_order=3)
    parallel = search_cusp_forms(12, 8, 8, max_order=3, jobs=2)
    assert serial == parallel


def test_strict_search_subset():
    loose = {q.exponents for q in search_cusp_forms(14, 8, 10, max_order=4)}
    strict = {q.exponents for q in search_cusp_forms(14, 8, 10, max_order=4, strict=True)}
    assert strict <= loose
    for exps in strict:
        assert dual_congruence(EtaQuotient(14, exps))


def test_dual_congruence_examples():
    assert not dual_congruence(EtaQuotient.make(33, {3: 8}))  # 11*8 = 88
    assert dual_congruence(EtaQuotient.make(33, {1: 4, 11: 4}))


def test_order_additivity():
    pool = search_cusp_forms(12, 8, 6, max_order=3)
    for a in pool:
        for b in pool:
            merged = dict(a.exponent_map)
            for d, r in b.exponent_map.items():
                merged[d] = merged.get(d, 0) + r
            e = EtaQuotient.make(12, merged)
            assert order_at_infinity(e) == order_at_infinity(a) + order_at_infinity(b)


def test_ligozat_orders_are_exact_rationals():
    rep = ligozat_check(EtaQuotient.make(33, {1: 3, 3: 1, 11: 3, 33: 1}))
    assert rep.orders[1] == Fraction(40, 11)  # 3 + 1/3 + 3/11 + 1/33
    assert rep.orders[33] == 72


def test_eta_quotient_level_guard():
    with pytest.raises(ValueError):
        EtaQuotient.make(10, {3: 4})


def test_substitute_and_at_level():
    q = EtaQuotient.make(6, {1: 2, 2: 2, 3: 2, 6: 2})
    up = q.substitute(2, level=24)
    assert up.exponent_map == {2: 2, 4: 2, 6: 2, 12: 2}
    same = q.at_level(24)
    assert same.level == 24 and same.exponent_map == q.exponent_map
