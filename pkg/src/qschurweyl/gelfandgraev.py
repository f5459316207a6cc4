"""Gelfand-Graev side: cover parameters, orbit decomposition of (Z/n_alpha)^r, the functor
M -> sum over orbits y of e_{sign, J_y} M, Whittaker dimensions, and the comparison with
the Schur-Weyl functor applied to the Iwahori-Matsumoto twist.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from math import factorial, gcd, prod
from collections import Counter
from typing import Sequence

from .coeff import ONE, ZERO, RatFunc, q
from .hecke import (SIGN, FinModule, HeckeAlgebra, blocks_to_J, im_involution,
                    one_dim_module, one_dim_ratio, parabolic_idempotent, twist_by_im)
from .linalg import Mat
from .schurweyl import SWContext, TensorQuotient, f_sw, hecke_right_action


class NotTypeC1(ValueError):
    pass


class StateSpaceTooLarge(RuntimeError):
    pass


class ComparisonFailed(ArithmeticError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class CoverParams:
    p: int
    qpar: int
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.qpar % self.n:
            raise NotTypeC1(f"{self.n} does not divide {self.qpar}")

    @property
    def Q(self) -> int:
        """Value of the quadratic form on a coroot."""
        return 2 * self.p - self.qpar

    @property
    def n_alpha(self) -> int:
        return self.n // gcd(2 * self.p, self.n)


def cover_nalpha(cp: CoverParams) -> int:
    via_q = cp.n // gcd(cp.n, cp.Q)
    assert via_q == cp.n_alpha, "n/gcd(n, Q) must agree with n/gcd(n, 2p) under n | qpar"
    return cp.n_alpha


@dataclass(frozen=True)
class OrbitDatum:
    rep: tuple[int, ...]
    J: tuple[int, ...]
    size: int

    @property
    def free(self) -> bool:
        return not self.J

    def to_json(self) -> dict:
        return {"rep": list(self.rep), "J": list(self.J), "size": self.size, "free": self.free}


@dataclass
class GGModule:
    n_alpha: int
    r: int
    orbits: list[OrbitDatum]

    @property
    def total(self) -> int:
        return len(self.orbits)

    @property
    def free_count(self) -> int:
        return sum(o.free for o in self.orbits)

    def to_json(self) -> dict:
        return {"n_alpha": self.n_alpha, "r": self.r, "orbits": [o.to_json() for o in self.orbits],
                "total": self.total, "free": self.free_count}


def gg_decomposition(n_alpha: int, r: int, bound: int = 10**6) -> GGModule:
    if n_alpha < 1 or r < 1:
        raise ValueError("n_alpha and r must be positive")
    if n_alpha**r > bound:
        raise StateSpaceTooLarge(f"{n_alpha}^{r} points exceed bound {bound}")
    orbits = []
    for y in combinations_with_replacement(range(n_alpha), r):
        size = factorial(r) // prod(factorial(c) for c in Counter(y).values())
        orbits.append(OrbitDatum(y, blocks_to_J(y), size))
    return GGModule(n_alpha, r, orbits)


def stability_check(gg: GGModule) -> bool:
    return any(o.free for o in gg.orbits)


# --- the functor on finite modules ------------------------------------------


@dataclass
class GGComponent:
    orbit: OrbitDatum
    idempotent: Mat  # e_{sign, J_y} acting on M
    basis: Mat  # columns span the image

    @property
    def dim(self) -> int:
        return self.basis.ncols


@dataclass
class GGResult:
    module: FinModule
    gg: GGModule
    components: list[GGComponent]

    @property
    def dims(self) -> list[int]:
        return [c.dim for c in self.components]

    @property
    def total(self) -> int:
        return sum(self.dims)

    def to_json(self) -> dict:
        return {"module": self.module.name, "n_alpha": self.gg.n_alpha, "r": self.gg.r,
                "components": [{"rep": list(c.orbit.rep), "dim": c.dim} for c in self.components],
                "total": self.total}


def _image_basis(E: Mat) -> Mat:
    if E.nrows == 0:
        return Mat.zeros(0)
    _, pivots = E.rref()
    return Mat.from_columns([E.column(p) for p in pivots], E.nrows)


def f_gg(M: FinModule, gg: GGModule) -> GGResult:
    if M.r != gg.r:
        raise ValueError("module rank differs from decomposition rank")
    comps = []
    for o in gg.orbits:
        E = M.act(parabolic_idempotent(M.alg, o.J, SIGN))
        comps.append(GGComponent(o, E, _image_basis(E)))
    return GGResult(M, gg, comps)


@dataclass
class WhittakerReport:
    per_orbit: list[tuple[tuple[int, ...], int]]

    @property
    def total(self) -> int:
        return sum(d for _, d in self.per_orbit)

    def to_json(self) -> dict:
        return {"per_orbit": [{"rep": list(y), "dim": d} for y, d in self.per_orbit], "total": self.total}


def whittaker_dim(M: FinModule, gg: GGModule) -> WhittakerReport:
    res = f_gg(M, gg)
    return WhittakerReport([(c.orbit.rep, c.dim) for c in res.components])


THETA, STEINBERG = "theta", "steinberg"


def special_modules(kind: str, r: int, twist=1, alg: HeckeAlgebra | None = None) -> FinModule:
    """One-dimensional modules: T_k -> q^-1 (theta) or -q (steinberg), X-scalars forced by the
    cross relation up to the global factor `twist`."""
    alg = alg or HeckeAlgebra(r)
    if kind == THETA:
        t = q.inverse()
    elif kind == STEINBERG:
        t = -q
    else:
        raise ValueError(f"unknown special module {kind!r}")
    twist = RatFunc.coerce(twist)
    ratio = one_dim_ratio(alg, t) if r > 1 else ONE
    xs = [twist * ratio ** (r - j) for j in range(1, r + 1)]
    return one_dim_module(alg, t, xs, name=kind)


# --- comparison with the Schur-Weyl side --------------------------------------


@dataclass
class ComparisonReport:
    dim_gg: int
    dim_sw: int
    invertible: bool
    equivariance_checks: int
    matrix: Mat | None = None
    sw: TensorQuotient | None = None
    gg: GGResult | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.dim_gg == self.dim_sw and self.invertible

    def to_json(self) -> dict:
        return {"ok": self.ok, "dim_gg": self.dim_gg, "dim_sw": self.dim_sw, "invertible": self.invertible,
                "equivariance_checks": self.equivariance_checks, "notes": self.notes}


def _sw_class_of_fock(T: TensorQuotient, N: FinModule, vec: dict, x: Sequence[RatFunc]) -> list[RatFunc]:
    """Class of sum_i c_i v_i (x) x with v_i = v~_res (x) X^lam acting on x through N."""
    total = [ZERO] * len(T.all_labels)
    m = T.ctx.m
    for i, c in vec.items():
        res = tuple(a % m for a in i)
        lam = tuple((a - b) // m for a, b in zip(res, i))
        xx = N.X_matrix(lam).apply(list(x))
        for n, val in enumerate(T.vector(res, xx)):
            if val:
                total[n] = total[n] + c * val
    return T.coords(total)


def compare_sw_gg(M: FinModule, ctx: SWContext, gg: GGModule, check_equivariance: bool = True) -> ComparisonReport:
    """x in e_{sign,J_y} M  ->  class of v~_y (x) x in F_SW(IM^* M), assembled over orbits.

    Equivariance is tested for a = e_{y'} h e_y with h in {T_k, X^{+-e_j}}: the class of
    v~_{y'}.IM(a) (x) x must equal the image of a x.
    """
    if ctx.m != gg.n_alpha or ctx.r != gg.r:
        raise ValueError("context must have m = n_alpha and the same r")
    N = twist_by_im(M)
    sw = f_sw(N, ctx)
    gres = f_gg(M, gg)
    cols = []
    for comp in gres.components:
        for c in range(comp.dim):
            cols.append(sw.class_of(comp.orbit.rep, comp.basis.column(c)))
    dim_gg, dim_sw = gres.total, sw.dim
    if dim_gg != dim_sw:
        raise ComparisonFailed(f"dimensions differ: {dim_gg} vs {dim_sw}", (dim_gg, dim_sw))
    P = Mat.from_columns(cols, dim_sw) if cols else Mat.zeros(0)
    invertible = dim_sw == 0 or P.rank() == dim_sw
    if not invertible:
        raise ComparisonFailed("orbitwise map is not invertible", P)
    checks = 0
    if check_equivariance and dim_sw:
        alg = M.alg
        hs = [alg.T(k) for k in range(1, alg.r)] + [alg.Xe(j, s) for j in range(1, alg.r + 1) for s in (1, -1)]
        idem = {o.rep: parabolic_idempotent(alg, o.J, SIGN) for o in gg.orbits}
        # IM is multiplicative, so IM(e' h e) is assembled from cached factor images
        im_idem = {y: im_involution(e) for y, e in idem.items()}
        im_h = [im_involution(h) for h in hs]
        for src in gres.components:
            if not src.dim:
                continue
            for tgt in gres.components:
                for h, ih in zip(hs, im_h):
                    a = idem[tgt.orbit.rep] * h * idem[src.orbit.rep]
                    if a.is_zero():
                        continue
                    im_a = im_idem[tgt.orbit.rep] * ih * im_idem[src.orbit.rep]
                    fock = hecke_right_action({tgt.orbit.rep: ONE}, im_a, ctx)
                    A = M.act(a)
                    for c in range(src.dim):
                        x = src.basis.column(c)
                        lhs = _sw_class_of_fock(sw, N, fock, x)
                        rhs = sw.class_of(tgt.orbit.rep, A.apply(x))
                        checks += 1
                        if lhs != rhs:
                            raise ComparisonFailed("transported endomorphism disagrees",
                                                   (src.orbit.rep, tgt.orbit.rep, str(h), c))
    return ComparisonReport(dim_gg, dim_sw, invertible, checks, P, sw, gres)
