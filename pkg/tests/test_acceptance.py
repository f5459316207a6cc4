"""The eleven acceptance criteria, each timed against its runtime target.

Every test prints one PASS/FAIL line (visible without -s) and fails on a wrong result or a
blown time budget.
"""

import random
import time
from math import comb, gcd, prod

import pytest

from qschurweyl.arrangement import IntPoly, build_lattice, char_poly, ep_poly, orbit_table, orlik_solomon_transform
from qschurweyl.coeff import q, spectral
from qschurweyl.gelfandgraev import (STEINBERG, THETA, compare_sw_gg, gg_decomposition, special_modules,
                                     stability_check, whittaker_dim)
from qschurweyl.hecke import C, HeckeAlgebra, principal_series, random_element, relation_suite
from qschurweyl.linalg import Mat
from qschurweyl.qaff import eval_module, tensor, verify_relations
from qschurweyl.rootsys import build_root_system, exponents
from qschurweyl.scattering import (SW, degeneracy_locus, scattering_matrix, verify_equivariance, verify_ybe)
from qschurweyl.schurweyl import (SWContext, check_commuting, check_right_module, f_sw, gamma_matrix,
                                  intertwines, match_evaluation_tensor)

TYPES = ["A1", "A2", "A3", "B2", "B3", "G2", "D4"]
SW_CASES = [(2, 2), (2, 3), (3, 2)]


@pytest.fixture
def criterion(capsys):
    def check(number: int, title: str, target: float, body):
        start = time.perf_counter()
        err = None
        try:
            detail = body()
        except AssertionError as exc:
            err, detail = exc, "assertion failed"
        elapsed = time.perf_counter() - start
        ok = err is None and elapsed < target
        with capsys.disabled():
            print(f"\n[criterion {number:2d}] {'PASS' if ok else 'FAIL'} {title}: {detail} "
                  f"({elapsed:.2f}s, target < {target:g}s)")
        if err is not None:
            raise err
        assert elapsed < target, f"runtime {elapsed:.1f}s exceeds {target}s"

    return check


def _coprime_grid():
    for name in TYPES:
        rs = build_root_system(name)
        for n in range(1, 14):
            if gcd(n, rs.order) == 1:
                yield rs, n


def test_criterion_01_whittaker_formulas(criterion):
    def body():
        cases = 0
        for rs, n in _coprime_grid():
            ms = exponents(rs)
            t = orbit_table(rs, n)
            assert t.free * rs.order == prod(n - m for m in ms), (rs.name, n)
            assert t.total * rs.order == prod(n + m for m in ms), (rs.name, n)
            cases += 1
        return f"{cases} (type, n) cases by exhaustive enumeration"

    criterion(1, "free/total orbit counts", 30, body)


def test_criterion_02_characteristic_polynomial(criterion):
    def body():
        for name in TYPES:
            rs = build_root_system(name)
            cp = char_poly(build_lattice(rs))
            assert cp.coeffs == IntPoly.from_roots(exponents(rs)).coeffs, name
            assert orlik_solomon_transform(ep_poly(rs), rs.rank) == cp, name
        return f"{len(TYPES)} types"

    criterion(2, "Mobius characteristic polynomial", 10, body)


def test_criterion_03_stability(criterion):
    def body():
        cases = 0
        for rs, n in _coprime_grid():
            assert (orbit_table(rs, n).free > 0) == (n > max(exponents(rs))), (rs.name, n)
            cases += 1
        for r in range(1, 5):
            gl = build_root_system("GL", r)
            for n in range(1, 7):
                exhaustive = orbit_table(gl, n).free > 0
                assert exhaustive == stability_check(gg_decomposition(n, r)) == (n >= r), (r, n)
                cases += 1
        return f"{cases} cases"

    criterion(3, "stability criteria", 5, body)


def test_criterion_04_hecke_well_formed(criterion):
    def body():
        checked = 0
        for r in (1, 2, 3):
            report = relation_suite(HeckeAlgebra(r), lam_bound=2)
            assert all(report.values()), [k for k, v in report.items() if not v]
            checked += len(report)
        rng = random.Random(2024)
        for i in range(100):
            alg = HeckeAlgebra(2 + i % 2)
            a, b, c = (random_element(alg, rng) for _ in range(3))
            assert (a * b) * c == a * (b * c)
        for m, r in [(2, 2), (2, 3), (3, 3)]:
            ctx = SWContext(m, r)
            Ts = [gamma_matrix(ctx, k) for k in range(1, r)]
            I = Mat.identity(m**r)
            assert all(T @ T == I + T.scale(C) for T in Ts)
            assert all(a @ b @ a == b @ a @ b for a, b in zip(Ts, Ts[1:]))
            assert check_right_module(ctx, samples=40, seed=m * 10 + r, bound=2) == []
        return f"{checked} relations, 100 associativity triples, gamma matrices and V_SW action"

    criterion(4, "Hecke algebra well-formedness", 60, body)


def test_criterion_05_commuting_actions(criterion):
    def body():
        total = 0
        for m, r in SW_CASES:
            rep = check_commuting(SWContext(m, r), bound=2)
            assert rep.ok and not rep.failures, (m, r, rep.failures[:3])
            total += rep.checked
        return f"{total} generator pairs commute"

    criterion(5, "commuting bimodule actions", 60, body)


def test_criterion_06_quantum_relations(criterion):
    def body():
        z1, z2 = spectral(2)
        n = 0
        for m in (2, 3):
            for mod in (eval_module(m, z1), tensor([eval_module(m, z1), eval_module(m, z2)])):
                rep = verify_relations(mod)
                assert rep.ok, rep.failures
                assert all(rep.extra.values())
                n += len(rep.checks)
        return f"{n} matrix identities"

    criterion(6, "quantum relations", 30, body)


def test_criterion_07_fsw_principal_series(criterion):
    def body():
        for m, r in SW_CASES:
            z = spectral(r)
            T = f_sw(principal_series(z), SWContext(m, r))
            P = match_evaluation_tensor(T, z)
            target = tensor([eval_module(m, zj) for zj in z])
            assert T.dim == m**r and P.rank() == m**r
            assert intertwines(P, target, T.uq)
        return "equivariant isomorphisms for (2,2), (2,3), (3,2)"

    criterion(7, "F_SW(principal series) = tensor of evaluation modules", 120, body)


def test_criterion_08_functor_comparison(criterion):
    def body():
        for n in (2, 3):
            rep = compare_sw_gg(principal_series(spectral(2)), SWContext(n, 2), gg_decomposition(n, 2))
            assert rep.ok and rep.dim_gg == rep.dim_sw == n**2 and rep.equivariance_checks > 0
        cases = 0
        for r in (1, 2, 3):
            for n in range(1, 5):
                gg = gg_decomposition(n, r)
                for kind, expected in ((THETA, comb(n, r)), (STEINBERG, comb(n + r - 1, r))):
                    M = special_modules(kind, r)
                    assert whittaker_dim(M, gg).total == expected, (kind, n, r)
                    rep = compare_sw_gg(M, SWContext(n, r), gg)
                    assert rep.ok and rep.dim_sw == expected, (kind, n, r)
                    cases += 1
        return f"principal series n_alpha = 2, 3 and {cases} special-module cases"

    criterion(8, "Gelfand-Graev vs Schur-Weyl", 60, body)


def test_criterion_09_yang_baxter(criterion):
    def body():
        sym = verify_ybe(SWContext(2, 3))
        assert sym.raw_equal and sym.normalized_equal
        start = time.perf_counter()
        pt = verify_ybe(SWContext(3, 3), z=(q**4, q**2, 1), route=SW)
        assert pt.ok
        spec_time = time.perf_counter() - start
        assert spec_time < 60, f"specialized check took {spec_time:.1f}s"
        return f"m = 2 symbolic, m = 3 at (q^4, q^2, 1) in {spec_time:.1f}s"

    criterion(9, "Yang-Baxter equation", 600, body)


def test_criterion_10_scattering_equivariance(criterion):
    def body():
        for m, r in [(2, 2), (3, 2)]:
            S = scattering_matrix(None, 1, SWContext(m, r), route=SW)
            rep = verify_equivariance(S, m)
            assert all(rep.passed.values()), rep.passed
            assert rep.hom_dim == 1 and rep.proportionality is not None
        return f"proportionality factor {rep.proportionality}"

    criterion(10, "scattering matrix vs quantum intertwiner", 120, body)


def test_criterion_11_degeneracy(criterion):
    def body():
        exps = set()
        for m in (2, 3):
            loc = degeneracy_locus(SWContext(m, 2))
            assert loc.locus == [-loc.a, loc.a], loc.locus
            assert sorted(loc.unitarity_exponents) == loc.locus
            exps.add(loc.a)
        assert len(exps) == 1
        a = exps.pop()
        # q^2 is the residue-field parameter here, so z = q_F^{n_alpha s} turns z1/z2 = q^{+-a}
        # into n_alpha (s1 - s2) = +-a/2, which must be +-1 for the reducibility condition
        assert a % 2 == 0 and a // 2 == 1
        return f"locus z1/z2 = q^(+-{a}), one exponent for m = 2, 3"

    criterion(11, "degeneracy locus", 60, body)
