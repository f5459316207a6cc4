from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from qschurweyl.arrangement import (BadModulus, IntPoly, ParabolicClass, RankTooLarge, StateSpaceTooLarge,
                                    build_lattice, burnside_count, char_poly, closed_form_counts, ep_poly,
                                    is_stable, orbit_table, orlik_solomon_transform, sommers_multiplicities,
                                    whittaker_dims)
from qschurweyl.rootsys import build_root_system, exponents

SMALL = ["A1", "A2", "A3", "B2", "B3", "G2", "D4"]


@pytest.mark.parametrize("name,size,mu_origin", [("A1", 2, -1), ("A2", 5, 2), ("B2", 6, 3)])
def test_lattice_sizes(name, size, mu_origin):
    lat = build_lattice(build_root_system(name))
    assert len(lat.elements) == size
    bottom = lat.elements[-1]
    assert bottom.dim == 0
    assert lat.mobius[bottom] == mu_origin
    assert lat.mobius_between(lat.top, bottom) == mu_origin


@pytest.mark.parametrize("name,coeffs", [("A1", (-1, 1)), ("A2", (2, -3, 1)), ("G2", (5, -6, 1))])
def test_char_poly_examples(name, coeffs):
    assert char_poly(build_lattice(build_root_system(name))).coeffs == coeffs


@pytest.mark.parametrize("name,coeffs", [("A1", (1, 1)), ("A2", (1, 3, 2)), ("B2", (1, 4, 3))])
def test_ep_examples(name, coeffs):
    assert ep_poly(build_root_system(name)).coeffs == coeffs


@pytest.mark.parametrize("name", SMALL)
def test_char_poly_factors(name):
    rs = build_root_system(name)
    cp = char_poly(build_lattice(rs))
    assert cp == IntPoly.from_roots(exponents(rs))
    assert orlik_solomon_transform(ep_poly(rs), rs.rank) == cp


def test_rank_guard():
    with pytest.raises(RankTooLarge):
        build_lattice(build_root_system("E6"))


def test_intpoly_json():
    assert IntPoly((2, -3, 1)).to_json() == {"coeffs": ["2", "-3", "1"]}


def test_orbit_examples():
    t = orbit_table(build_root_system("A1"), 3)
    assert [(o.representative, o.size) for o in t.orbits] == [((0,), 1), ((1,), 2)]
    assert t.free == 1
    t = orbit_table(build_root_system("A1"), 1)
    assert (t.total, t.free) == (1, 0)
    t = orbit_table(build_root_system("GL", 2), 2)
    assert [o.representative for o in t.orbits] == [(0, 0), (0, 1), (1, 1)]
    assert t.free == 1


def test_orbit_guards():
    with pytest.raises(StateSpaceTooLarge):
        orbit_table(build_root_system("D4"), 13, bound=1000)
    with pytest.raises(BadModulus):
        orbit_table(build_root_system("A1"), 0)
    with pytest.raises(BadModulus):
        whittaker_dims(build_root_system("A2"), 3)


def test_counts_examples():
    assert burnside_count(build_root_system("G2"), 7) == (8, (8, 1))
    assert closed_form_counts(build_root_system("A2"), 5) == (7, 2)
    assert whittaker_dims(build_root_system("A1"), 3) == (1, 2)
    assert whittaker_dims(build_root_system("G2"), 7) == (1, 8)


def test_e8_theta_dim():
    theta, steinberg = whittaker_dims(build_root_system("E8"), 31)
    assert theta == 1
    assert steinberg > theta


def test_stability_examples():
    e8 = build_root_system("E8")
    assert is_stable(e8, 31)
    assert not any(is_stable(e8, n) for n in range(1, 30) if gcd(n, e8.order) == 1)
    assert is_stable(build_root_system("A1"), 3)


def test_a2_mod_2():
    # n = 2 is not coprime to |W(A2)|: the exhaustive count still shows no free orbit
    rs = build_root_system("A2")
    assert orbit_table(rs, 2).free == 0
    with pytest.raises(BadModulus):
        is_stable(rs, 2)


def test_sommers_examples():
    assert sommers_multiplicities(build_root_system("A1"), 3) == {ParabolicClass((), 1): 1, ParabolicClass((1,), 2): 1}
    assert sommers_multiplicities(build_root_system("A1"), 1) == {ParabolicClass((), 1): 0, ParabolicClass((1,), 2): 1}
    mult = sommers_multiplicities(build_root_system("A2"), 5)
    assert mult[ParabolicClass((), 1)] == 2


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(SMALL), st.integers(1, 13))
def test_orbits_match_closed_forms(name, n):
    rs = build_root_system(name)
    if gcd(n, rs.order) != 1:
        return
    t = orbit_table(rs, n)
    assert (t.total, t.free) == closed_form_counts(rs, n)
    assert burnside_count(rs, n)[0] == t.total
