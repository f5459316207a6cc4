"""Local scattering matrices: Hecke intertwiners PS(z) -> PS(s_k z) pushed through the
Schur-Weyl functor and written in the basis u_y of V(z_1) (x) ... (x) V(z_r).

S[y'][y] is the coefficient of u_{y'} in F*(u_y). The R-matrix reindexes rows by s_k,
so that F* = flip . R with flip: u_y -> u_{s_k y}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .coeff import ONE, ZERO, RatFunc, factor, q, spectral, z as zvar
from .gelfandgraev import GGModule, compare_sw_gg, gg_decomposition
from .hecke import (UNIT, intertwiner, intertwiner_vector,
                    principal_series, swap_spectral, twist_by_im)
from .linalg import Mat, solve_commutant
from .qaff import QModule, eval_module, generators, tensor
from .schurweyl import SWContext, TensorQuotient, f_sw, gamma_matrix, match_evaluation_tensor

SW, GG, FORMULA = "sw", "gg", "formula"


@dataclass
class ScatteringMatrix:
    k: int
    z: tuple
    labels: list  # representatives y in [0, m)^r, lexicographic
    raw: Mat  # F* with the unit-normalized intertwiner
    route: str = SW

    @property
    def scalar(self) -> RatFunc:
        return self.raw[0, 0]

    @property
    def entries(self) -> Mat:
        """F* divided by its (0..0, 0..0) entry."""
        return self.raw.scale(self.scalar.inverse())

    @property
    def size(self) -> int:
        return self.raw.nrows

    def to_json(self, normalized: bool = True) -> dict:
        return {"k": self.k, "z": [str(x) for x in self.z], "labels": [list(y) for y in self.labels],
                "route": self.route, "entries": (self.entries if normalized else self.raw).to_json()}


@dataclass
class RMatrix:
    k: int
    labels: list
    entries: Mat
    flip: Mat
    factorization_ok: bool

    def to_json(self) -> dict:
        return {"k": self.k, "flip": f"u_y -> u_(s_{self.k} y)", "factorization_ok": self.factorization_ok,
                "entries": self.entries.to_json()}


def _default_z(z, r: int) -> tuple:
    return tuple(RatFunc.coerce(x) for x in z) if z is not None else spectral(r)


def f_sw_map(A: Mat, src: TensorQuotient, tgt: TensorQuotient) -> Mat:
    """Matrix of F_SW(A) between quotients, in their free-label bases."""
    cols = []
    for f in src.free:
        y, b = src.all_labels[f]
        cols.append(tgt.class_of(y, A.column(b)))
    return Mat.from_columns(cols, tgt.dim)


def _solve_in_span(B: Mat, v: list[RatFunc]) -> list[RatFunc]:
    aug = Mat([list(row) + [x] for row, x in zip(B.rows, v)])
    red, piv = aug.rref()
    if B.ncols in piv:
        raise ArithmeticError("vector not in span")
    out = [ZERO] * B.ncols
    for row, p in zip(red.rows, piv):
        out[p] = row[B.ncols]
    return out


def f_gg_map(A: Mat, src, tgt) -> Mat:
    """F_GG(A): block diagonal over orbits, A restricted to e_y M -> e_y M'."""
    blocks_cols = []
    offsets, off = [], 0
    for comp in tgt.components:
        offsets.append(off)
        off += comp.dim
    for cs, ct, o in zip(src.components, tgt.components, offsets):
        for c in range(cs.dim):
            img = A.apply(cs.basis.column(c))
            coords = _solve_in_span(ct.basis, img)
            col = [ZERO] * off
            col[o:o + ct.dim] = coords
            blocks_cols.append(col)
    return Mat.from_columns(blocks_cols, off)


def scattering_matrix(z=None, k: int = 1, ctx: SWContext | None = None, gg: GGModule | None = None,
                      route: str = SW, normalization: str = UNIT) -> ScatteringMatrix:
    """F* for the intertwiner PS(z) -> PS(s_k z).

    sw: quotient map F_SW(A) between the two evaluation tensor identifications.
    gg: F_GG applied to the IM-twisted intertwiner, transported by the orbitwise comparison.
    formula: c_e I + c_s Gamma_k where A(T_e (x) 1) = c_e + c_s T_k and Gamma_k is the gamma matrix.
    """
    if ctx is None:
        raise ValueError("a Schur-Weyl context is required")
    z = _default_z(z, ctx.r)
    if len(z) != ctx.r:
        raise ValueError("spectral vector length must equal r")
    z2 = swap_spectral(z, k)
    labels = ctx.residues()
    alg = ctx.alg
    if route == FORMULA:
        v = intertwiner_vector(z, k, normalization, alg)
        perms = alg.perms()
        support = {w for w, x in zip(perms, v) if x}
        from .rootsys import simple_transposition
        s = simple_transposition(ctx.r, k)
        if not support <= {perms[0], s}:
            raise ArithmeticError("intertwiner vector outside span{T_e, T_k}")
        c_e, c_s = v[0], v[perms.index(s)]
        raw = Mat.identity(len(labels)).scale(c_e) + gamma_matrix(ctx, k).scale(c_s)
        return ScatteringMatrix(k, z, labels, raw, FORMULA)
    M, M2 = principal_series(z, alg), principal_series(z2, alg)
    A = intertwiner(z, k, normalization, alg)
    T, T2 = f_sw(M, ctx), f_sw(M2, ctx)
    P, P2 = match_evaluation_tensor(T, z), match_evaluation_tensor(T2, z2)
    if route == SW:
        core = f_sw_map(A, T, T2)
    elif route == GG:
        gg = gg or gg_decomposition(ctx.m, ctx.r)
        N, N2 = twist_by_im(M), twist_by_im(M2)
        cmp1, cmp2 = compare_sw_gg(N, ctx, gg, check_equivariance=False), compare_sw_gg(N2, ctx, gg, check_equivariance=False)
        # F_SW(IM^* IM^* M) has the same matrices as F_SW(M), so the comparison lands in T, T2
        if cmp1.sw.pivots != T.pivots or cmp2.sw.pivots != T2.pivots:
            raise ArithmeticError("comparison quotient layout differs from the direct quotient")
        gmap = f_gg_map(A, cmp1.gg, cmp2.gg)
        core = cmp2.matrix @ gmap @ cmp1.matrix.inverse()
    else:
        raise ValueError(f"unknown route {route!r}")
    raw = P2.inverse() @ core @ P
    return ScatteringMatrix(k, z, labels, raw, route)


def _flip(labels: list, k: int) -> Mat:
    index = {y: i for i, y in enumerate(labels)}
    F = Mat.zeros(len(labels))
    for y in labels:
        sy = y[:k - 1] + (y[k], y[k - 1]) + y[k + 1:]
        F.rows[index[sy]][index[y]] = ONE
    return F


def r_matrix(S: ScatteringMatrix, normalized: bool = True) -> RMatrix:
    F = _flip(S.labels, S.k)
    mat = S.entries if normalized else S.raw
    R = F @ mat  # the flip is an involution, so R[y'][y] = S[s_k y'][y]
    return RMatrix(S.k, S.labels, R, F, F @ R == mat)


@dataclass
class YBEReport:
    m: int
    point: tuple | None
    raw_equal: bool
    normalized_equal: bool
    ratio: RatFunc | None = None

    @property
    def ok(self) -> bool:
        return self.raw_equal and self.normalized_equal

    def to_json(self) -> dict:
        return {"m": self.m, "point": [str(x) for x in self.point] if self.point else None,
                "raw_equal": self.raw_equal, "normalized_equal": self.normalized_equal,
                "ratio": str(self.ratio) if self.ratio is not None else None, "ok": self.ok}


def _proportional(a: Mat, b: Mat) -> RatFunc | None:
    """lambda with a = lambda b, or None."""
    for i in range(b.nrows):
        for j in range(b.ncols):
            if b.rows[i][j]:
                lam = a.rows[i][j] / b.rows[i][j]
                return lam if a == b.scale(lam) else None
    return ONE if a.is_zero() else None


def verify_ybe(ctx: SWContext, z=None, route: str = SW) -> YBEReport:
    """F1(s2 s1 z) F2(s1 z) F1(z) == F2(s1 s2 z) F1(s2 z) F2(z)."""
    if ctx.r != 3:
        raise ValueError("the braid check runs at r = 3")
    point = tuple(RatFunc.coerce(x) for x in z) if z is not None else None
    z = _default_z(z, 3)

    def F(zz, k):
        return scattering_matrix(zz, k, ctx, route=route)

    s1, s2 = (lambda v: swap_spectral(v, 1)), (lambda v: swap_spectral(v, 2))
    L = [F(s2(s1(z)), 1), F(s1(z), 2), F(z, 1)]
    R = [F(s1(s2(z)), 2), F(s2(z), 1), F(z, 2)]
    lraw = L[0].raw @ L[1].raw @ L[2].raw
    rraw = R[0].raw @ R[1].raw @ R[2].raw
    lnorm = L[0].entries @ L[1].entries @ L[2].entries
    rnorm = R[0].entries @ R[1].entries @ R[2].entries
    ratio = None if lraw == rraw else _proportional(lraw, rraw)
    return YBEReport(ctx.m, point, lraw == rraw, lnorm == rnorm, ratio)


@dataclass
class EquivarianceReport:
    passed: dict[str, bool]
    proportionality: RatFunc | None
    hom_dim: int | None

    @property
    def ok(self) -> bool:
        solved_ok = self.hom_dim is None or (self.hom_dim == 1 and self.proportionality is not None)
        return all(self.passed.values()) and solved_ok

    def to_json(self) -> dict:
        return {"ok": self.ok, "passed": self.passed, "hom_dim": self.hom_dim,
                "proportionality": str(self.proportionality) if self.proportionality is not None else None}


def eval_tensor(m: int, z: Sequence) -> QModule:
    return tensor([eval_module(m, x) for x in z])


def quantum_intertwiner(m: int, z: Sequence, k: int) -> list[Mat]:
    """Basis of Hom_{U_q}(V(z), V(s_k z)) solved directly, restricted to weight-preserving maps."""
    src, tgt = eval_tensor(m, z), eval_tensor(m, swap_spectral(z, k))
    wsrc = [src.weight(b) for b in range(src.dim)]
    wtgt = [tgt.weight(b) for b in range(tgt.dim)]
    pairs = [(src.matrix(g), tgt.matrix(g)) for g in generators(m)]
    return solve_commutant(pairs, src.dim, tgt.dim, allowed=lambda i, j: wtgt[i] == wsrc[j])


def verify_equivariance(S: ScatteringMatrix, m: int, solve: bool = True) -> EquivarianceReport:
    src, tgt = eval_tensor(m, S.z), eval_tensor(m, swap_spectral(S.z, S.k))
    F = S.raw
    passed = {str(g): tgt.matrix(g) @ F == F @ src.matrix(g) for g in generators(m)}
    lam, dim = None, None
    if solve:
        sols = quantum_intertwiner(m, S.z, S.k)
        dim = len(sols)
        if dim == 1:
            lam = _proportional(F, sols[0])
    return EquivarianceReport(passed, lam, dim)


def unitarity_scalar(ctx: SWContext, z=None, k: int = 1, route: str = SW) -> RatFunc | None:
    """c with F*(s_k z) F*(z) = c I (unit-normalized intertwiners); None if not scalar."""
    z = _default_z(z, ctx.r)
    a = scattering_matrix(z, k, ctx, route=route)
    b = scattering_matrix(swap_spectral(z, k), k, ctx, route=route)
    prod = b.raw @ a.raw
    c = prod[0, 0]
    return c if prod == Mat.identity(prod.nrows).scale(c) else None


@dataclass
class DegeneracyLocus:
    m: int
    determinant: RatFunc
    constant: Fraction
    factors: list[tuple[RatFunc, int]]
    zero_exponents: list[int]  # e with det = 0 on z_k / z_{k+1} = q^e
    pole_exponents: list[int]
    unitarity_exponents: list[int]  # zeros of the scalar F*(s_k z) F*(z)

    @property
    def locus(self) -> list[int]:
        return sorted(set(self.zero_exponents) | set(self.pole_exponents))

    @property
    def a(self) -> int | None:
        return max((abs(e) for e in self.locus), default=None)

    @property
    def symmetric(self) -> bool:
        return all(-e in self.locus for e in self.locus)

    def to_json(self) -> dict:
        return {"m": self.m, "determinant": str(self.determinant), "constant": str(self.constant),
                "factors": [{"factor": str(f), "multiplicity": e} for f, e in self.factors],
                "zero_exponents": self.zero_exponents, "pole_exponents": self.pole_exponents,
                "unitarity_exponents": self.unitarity_exponents, "locus": self.locus, "a": self.a}


def vanishing_exponents(poly: RatFunc, k: int, search: int = 8) -> list[int]:
    """Exponents e for which the polynomial vanishes identically on z_k = q^e z_{k+1}."""
    zk1 = zvar(k + 1)
    return [e for e in range(-search, search + 1) if not poly.subs({f"z{k}": q**e * zk1})]


def degeneracy_locus(ctx: SWContext, k: int = 1, route: str = SW) -> DegeneracyLocus:
    S = scattering_matrix(None, k, ctx, route=route)
    d = S.entries.det()
    const, facs = factor(d)
    u = unitarity_scalar(ctx, None, k, route)
    return DegeneracyLocus(ctx.m, d, const, facs, vanishing_exponents(RatFunc(d.num), k),
                           vanishing_exponents(RatFunc(d.den), k),
                           vanishing_exponents(RatFunc(u.num), k) if u is not None else [])
