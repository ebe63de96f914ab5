import pytest

from divconv import fixtures
from divconv.arith import classify_level, num_divisors
from divconv.eta import EtaQuotient
from divconv.linalg import rank
from divconv.spaces import (
    BasisIncompleteError,
    CuspGenerator,
    eisenstein_basis,
    eta_generator,
    fixture_substitution_report,
    load_fixture_basis,
    profile,
    repair_basis,
    search_basis,
    select_cusp_basis,
)


def test_profile_published_dimensions():
    assert (profile(33).dim_E4, profile(33).dim_S4) == (4, 10)
    assert (profile(40).dim_E4, profile(40).dim_S4) == (8, 14)
    assert (profile(56).dim_E4, profile(56).dim_S4) == (8, 20)
    assert profile(24).dim_S4 == 8
    assert profile(12).dim_S4 == 3
    assert profile(10).dim_S4 == 3
    assert profile(11).dim_S4 == 2
    assert profile(15).dim_S4 == 4
    assert profile(1).dim_S4 == 0
    assert profile(4).dim_S4 == 0


def test_profile_consistency():
    for N in range(1, 201):
        p = profile(N)
        assert p.dim_M4 == p.dim_E4 + p.dim_S4
        assert p.genus >= 0
        if classify_level(N).in_class:
            assert p.dim_E4 == num_divisors(N)


def test_genus_integral_to_10000():
    for N in range(1, 10001):
        assert profile(N).genus >= 0


def test_eisenstein_basis():
    basis = eisenstein_basis(33, 40)
    assert len(basis) == 4
    for t, s in zip([1, 3, 11, 33], basis):
        assert s.coefficient(0) == 1
        assert next(n for n in range(1, 40) if s.coefficient(n) != 0) == t
    m = [[basis[j].coefficient(n) for j in range(4)] for n in [1, 3, 11, 33]]
    assert rank(m) == 4
    assert len(eisenstein_basis(1, 10)) == 1


def test_load_fixture_all_levels():
    for N in fixtures.FIXTURE_LEVELS:
        b = load_fixture_basis(N, 48)
        assert b.dim_cusp == profile(N).dim_S4
        k = b.dim_cusp
        m = [[b.coefficient(j, n) for j in range(k)] for n in range(1, k + 1)]
        assert rank(m) == k, f"level {N} sample matrix singular"
    with pytest.raises(ValueError):
        load_fixture_basis(7, 48)


def test_fixture_defects_recorded():
    assert load_fixture_basis(10, 40).defects == []
    assert any("not cuspidal" in d for d in load_fixture_basis(24, 40).defects)
    assert any("not cuspidal" in d for d in load_fixture_basis(15, 40).defects)
    d33 = load_fixture_basis(33, 40).defects
    assert sum("not cuspidal" in x for x in d33) == 2
    d11 = load_fixture_basis(11, 40).defects
    assert any("weight-2" in x for x in d11)


def test_fixture_level11_declared_generator():
    b = load_fixture_basis(11, 40)
    assert b.cusp[0].kind == "declared-fixture"
    assert b.cusp[0].eta.exponent_map == {1: 2, 11: 2}
    assert b.cusp[1].eta.exponent_map == {1: 4, 11: 4}


def test_substitution_reports():
    assert fixture_substitution_report(24) == [
        (2, 1, 2, 2),
        (4, 1, 4, 4),
        (6, 3, 2, 2),
    ]
    assert fixture_substitution_report(10) == [(2, 1, 2, 2)]
    # published as q^2 substitutions; actually q^3
    assert fixture_substitution_report(33) == [(6, 2, 2, 3)]
    assert fixture_substitution_report(15) == [(3, 1, 2, 3)]


def test_select_case1_level_12():
    basis = search_basis(12, 40, bound=8)
    assert basis.dim_cusp == 3
    assert [g.order() for g in basis.cusp] == [1, 2, 3]


def test_select_case2_level_10():
    basis = search_basis(10, 40, bound=8)
    assert basis.dim_cusp == 3
    k = basis.dim_cusp
    m = [[basis.coefficient(j, n) for j in range(k)] for n in range(1, k + 1)]
    assert rank(m) == k


def test_select_insufficient_candidates_reports_missing_orders():
    # level 11 has a single weight-4 eta quotient (order 2); order 1 is missing
    cands = [eta_generator(11, {1: 4, 11: 4})]
    with pytest.raises(BasisIncompleteError) as err:
        select_cusp_basis(11, cands, 40)
    assert "1" in str(err.value)


def test_repair_basis_level_11():
    b = repair_basis(11, 40)
    assert b.dim_cusp == 2
    kinds = sorted(g.kind for g in b.cusp)
    assert kinds == ["eta-eisenstein-product", "eta-quotient"]
    assert [g.order() for g in b.cusp] == [1, 2]
    assert b.defects == []


def test_repair_basis_level_33():
    b = repair_basis(33, 48)
    assert b.dim_cusp == 10
    k = b.dim_cusp
    m = [[b.coefficient(j, n) for j in range(k)] for n in range(1, 2 * k + 1)]
    assert rank(m) == k


def test_basis_at_precision_extends():
    b = load_fixture_basis(10, 30)
    b2 = b.at_precision(50)
    assert b2.precision == 50 and b.precision == 30
    assert b2.checksum == b.checksum
    for j in range(b.dim_cusp):
        for n in range(31):
            assert b.coefficient(j, n) == b2.coefficient(j, n)


def test_generator_series_product_kind():
    g = CuspGenerator(
        kind="eta-eisenstein-product",
        eta=EtaQuotient.make(11, {1: 2, 11: 2}),
        e2_scale=11,
    )
    s = g.series(20)
    assert s.coefficient(0) == 0
    assert s.coefficient(1) == -10  # q * (1 - 11)
    assert g.order() == 1


def test_checksum_distinguishes_bases():
    a = load_fixture_basis(10, 30)
    c = repair_basis(12, 30)
    assert a.checksum != c.checksum
