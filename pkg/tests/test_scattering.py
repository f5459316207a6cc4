import pytest

from qschurweyl.coeff import ONE, q, spectral
from qschurweyl.linalg import Mat
from qschurweyl.scattering import (FORMULA, GG, SW, degeneracy_locus, quantum_intertwiner, r_matrix,
                                   scattering_matrix, unitarity_scalar, verify_equivariance, verify_ybe)
from qschurweyl.schurweyl import SWContext

z1, z2, z3 = spectral(3)
q2 = q**2


@pytest.mark.parametrize("m", [1, 2, 3])
def test_routes_agree(m):
    ctx = SWContext(m, 2)
    sw = scattering_matrix(None, 1, ctx, route=SW)
    assert scattering_matrix(None, 1, ctx, route=FORMULA).raw == sw.raw
    assert scattering_matrix(None, 1, ctx, route=GG).raw == sw.raw
    assert sw.size == m**2


def test_m1_is_trivial():
    S = scattering_matrix(None, 1, SWContext(1, 2))
    assert S.entries == Mat.identity(1)
    assert degeneracy_locus(SWContext(1, 2)).determinant == ONE


def test_r_matrix_shape():
    R = r_matrix(scattering_matrix(None, 1, SWContext(2, 2)))
    assert R.entries.shape == (4, 4) and R.factorization_ok
    assert R.flip @ R.flip == Mat.identity(4)


@pytest.mark.parametrize("m", [2, 3])
def test_equivariance_and_proportionality(m):
    S = scattering_matrix(None, 1, SWContext(m, 2))
    rep = verify_equivariance(S, m)
    assert rep.ok and rep.hom_dim == 1
    assert rep.proportionality == (q2 - z2 / z1) / (q2 - 1)


def test_quantum_intertwiner_dimension():
    assert len(quantum_intertwiner(2, (z1, z2), 1)) == 1


@pytest.mark.parametrize("m", [2, 3])
def test_unitarity(m):
    c = unitarity_scalar(SWContext(m, 2))
    assert c == (q**4 - q2 * (z1 / z2 + z2 / z1) + 1) / (q2 - 1) ** 2


@pytest.mark.parametrize("m", [2, 3])
def test_degeneracy(m):
    loc = degeneracy_locus(SWContext(m, 2))
    assert loc.determinant == ((q2 * z2 - z1) / (q2 * z1 - z2)) ** (m * (m - 1) // 2)
    assert loc.zero_exponents == [2] and loc.pole_exponents == [-2]
    assert loc.locus == [-2, 2] and loc.a == 2 and loc.symmetric
    assert loc.unitarity_exponents == [-2, 2]


def test_ybe_m2_symbolic():
    rep = verify_ybe(SWContext(2, 3))
    assert rep.raw_equal and rep.normalized_equal


def test_ybe_m3_point():
    rep = verify_ybe(SWContext(3, 3), z=(q**4, q2, 1), route=FORMULA)
    assert rep.ok


def test_needs_context():
    with pytest.raises(ValueError):
        scattering_matrix(None, 1, None)
    with pytest.raises(ValueError):
        verify_ybe(SWContext(2, 2))
