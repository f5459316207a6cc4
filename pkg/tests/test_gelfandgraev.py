from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from qschurweyl.coeff import q, spectral
from qschurweyl.gelfandgraev import (STEINBERG, THETA, ComparisonFailed, CoverParams, NotTypeC1,
                                     StateSpaceTooLarge, compare_sw_gg, cover_nalpha, f_gg, gg_decomposition,
                                     special_modules, stability_check, whittaker_dim)
from qschurweyl.hecke import HeckeAlgebra, principal_series, zero_module
from qschurweyl.schurweyl import SWContext


def test_cover_examples():
    assert cover_nalpha(CoverParams(-1, 0, 3)) == 3
    assert cover_nalpha(CoverParams(1, 4, 4)) == 2
    with pytest.raises(NotTypeC1):
        CoverParams(1, 3, 2)


@settings(max_examples=50)
@given(st.integers(-6, 6), st.integers(-4, 4), st.integers(1, 12))
def test_nalpha_agrees_with_q(p, k, n):
    assert cover_nalpha(CoverParams(p, k * n, n)) == n // __import__("math").gcd(2 * p, n)


def test_decomposition_examples():
    gg = gg_decomposition(2, 2)
    assert [(o.rep, o.J) for o in gg.orbits] == [((0, 0), (1,)), ((0, 1), ()), ((1, 1), (1,))]
    assert gg_decomposition(1, 4).total == 1 and gg_decomposition(1, 4).orbits[0].J == (1, 2, 3)
    assert gg_decomposition(3, 2).total == 6
    with pytest.raises(StateSpaceTooLarge):
        gg_decomposition(10, 7, bound=1000)


@pytest.mark.parametrize("n,r", [(n, r) for n in range(1, 7) for r in range(1, 5)])
def test_stability(n, r):
    gg = gg_decomposition(n, r)
    assert stability_check(gg) == (n >= r)
    assert gg.total == comb(n + r - 1, r)
    assert gg.free_count == comb(n, r)
    assert sum(o.size for o in gg.orbits) == n**r


@pytest.mark.parametrize("n,r", [(n, r) for n in range(1, 5) for r in range(1, 4)])
def test_special_whittaker_dims(n, r):
    gg = gg_decomposition(n, r)
    assert whittaker_dim(special_modules(THETA, r), gg).total == comb(n, r)
    assert whittaker_dim(special_modules(STEINBERG, r), gg).total == comb(n + r - 1, r)


def test_special_twist_is_irrelevant():
    gg = gg_decomposition(3, 2)
    assert whittaker_dim(special_modules(THETA, 2, twist=q**5), gg).total == 3


def test_principal_series_dims():
    for n, r in [(2, 2), (3, 2), (2, 3)]:
        res = f_gg(principal_series(spectral(r)), gg_decomposition(n, r))
        assert res.total == n**r


@pytest.mark.parametrize("n,r", [(2, 2), (3, 2)])
def test_compare_principal_series(n, r):
    rep = compare_sw_gg(principal_series(spectral(r)), SWContext(n, r), gg_decomposition(n, r))
    assert rep.ok and rep.dim_gg == n**r and rep.equivariance_checks > 0


@pytest.mark.parametrize("kind,dim", [(THETA, 1), (STEINBERG, 3)])
def test_compare_special(kind, dim):
    rep = compare_sw_gg(special_modules(kind, 2), SWContext(2, 2), gg_decomposition(2, 2))
    assert rep.ok and rep.dim_sw == dim


def test_compare_zero():
    rep = compare_sw_gg(zero_module(HeckeAlgebra(2)), SWContext(2, 2), gg_decomposition(2, 2))
    assert rep.dim_gg == rep.dim_sw == 0


def test_compare_mismatched_context():
    with pytest.raises(ValueError):
        compare_sw_gg(special_modules(THETA, 2), SWContext(3, 2), gg_decomposition(2, 2))


def test_comparison_failed_carries_witness():
    err = ComparisonFailed("x", (1, 2))
    assert err.witness == (1, 2)
