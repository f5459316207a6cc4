import pytest

from qschurweyl.coeff import ONE, q, spectral
from qschurweyl.hecke import C, HeckeAlgebra, one_dim_module, principal_series, zero_module
from qschurweyl.linalg import Mat
from qschurweyl.qaff import QGenerator, eval_module, tensor
from qschurweyl.schurweyl import (SWContext, check_commuting, check_right_module, f_sw, fast_right_T,
                                  from_normal_form, gamma_action, gamma_matrix, hecke_right_action,
                                  intertwines, match_evaluation_tensor, normal_form, uq_left_action)

qi = q.inverse()


def test_gamma_cases():
    assert gamma_action((0, 1), 1) == {(1, 0): ONE}
    assert gamma_action((1, 1), 1) == {(1, 1): qi}
    assert gamma_action((1, 0), 1) == {(0, 1): ONE, (1, 0): qi - q}


@pytest.mark.parametrize("m,r", [(2, 2), (2, 3), (3, 3)])
def test_gamma_matrices_hecke_relations(m, r):
    ctx = SWContext(m, r)
    Ts = [gamma_matrix(ctx, k) for k in range(1, r)]
    I = Mat.identity(m**r)
    for T in Ts:
        assert T @ T == I + T.scale(C)
    for a, b in zip(Ts, Ts[1:]):
        assert a @ b @ a == b @ a @ b


def test_normal_form_roundtrip():
    for i in [(0, 1), (-3, 5), (4, -1)]:
        res, lam = normal_form(i, 3)
        assert all(0 <= x < 3 for x in res)
        assert from_normal_form(res, lam, 3) == i


def test_lattice_shift():
    ctx = SWContext(2, 2)
    assert hecke_right_action({(0, 1): ONE}, ctx.alg.Xe(1), ctx) == {(-2, 1): ONE}
    assert hecke_right_action({(0, 1): ONE}, ctx.alg.T(1), ctx) == {(1, 0): ONE}


@pytest.mark.parametrize("m,r", [(2, 2), (3, 2), (2, 3)])
def test_right_module(m, r):
    assert check_right_module(SWContext(m, r), samples=30, bound=2) == []


def test_fast_path_matches_normal_form():
    ctx = SWContext(3, 2)
    for i in [(0, 1), (2, 0), (-1, 4), (5, -3), (1, 1)]:
        v = {i: ONE}
        assert fast_right_T(v, 1, ctx) == hecke_right_action(v, ctx.alg.T(1), ctx)


def test_uq_examples():
    ctx = SWContext(2, 2)
    assert uq_left_action(QGenerator("F", 0, 2), {(0, 0): ONE}, ctx) == {(1, 0): ONE, (0, 1): q}
    assert uq_left_action(QGenerator("E", 0, 2), {}, ctx) == {}


@pytest.mark.parametrize("m,r", [(2, 2), (3, 2)])
def test_commuting(m, r):
    rep = check_commuting(SWContext(m, r), bound=1)
    assert rep.ok and rep.checked > 0 and not rep.failures


@pytest.mark.parametrize("m,r", [(2, 1), (2, 2), (3, 2), (2, 3)])
def test_f_sw_principal_series(m, r):
    z = spectral(r)
    T = f_sw(principal_series(z), SWContext(m, r))
    assert T.dim == m**r
    P = match_evaluation_tensor(T)
    target = tensor([eval_module(m, zj) for zj in z])
    assert P.rank() == m**r and intertwines(P, target, T.uq)


def test_f_sw_small_modules():
    alg = HeckeAlgebra(2)
    sign = one_dim_module(alg, -q, [q**-2, 1])
    assert f_sw(sign, SWContext(2, 2)).dim == 1
    triv = one_dim_module(alg, qi, [q**2, 1])
    assert f_sw(triv, SWContext(2, 2)).dim == 3
    assert f_sw(zero_module(alg), SWContext(2, 2)).dim == 0


def test_f_sw_rank_mismatch():
    with pytest.raises(ValueError):
        f_sw(principal_series(spectral(2)), SWContext(2, 3))
