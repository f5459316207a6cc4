"""The Schur-Weyl bimodule (C[Z])^{(x) r} with commuting U_q(affine sl_m) and Hecke actions.

An index vector i in Z^r is written i = res - m*lam with res in [0, m)^r; v_i then corresponds
to  v~_res (x) X^lam  in (C^m)^{(x) r} (x)_{H_W} H. The finite Hecke algebra acts on the residue
part by the three-case formula gamma_m, and a general element acts by first putting
X^lam * h in normal form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Mapping, Sequence

from .coeff import ONE, ZERO, RatFunc, q
from .hecke import C, FinModule, HeckeAlgebra, HeckeElem
from .linalg import Mat, solve_commutant
from .qaff import KINDS, QGenerator, QModule, eval_module, fock_action, generators, tensor
from .rootsys import reduced_word


class IllDefinedAction(ArithmeticError):
    pass


class NoIsomorphism(ArithmeticError):
    pass


@dataclass(frozen=True)
class SWContext:
    m: int
    r: int
    orientation: int = 1

    def __post_init__(self):
        if self.m < 1 or self.r < 1:
            raise ValueError("m and r must be positive")

    @property
    def alg(self) -> HeckeAlgebra:
        return _alg(self.r, self.orientation)

    def residues(self) -> list[tuple[int, ...]]:
        """(C^m)^{(x) r} basis labels in lexicographic order."""
        return list(product(range(self.m), repeat=self.r))


@lru_cache(maxsize=None)
def _alg(r: int, orientation: int = 1) -> HeckeAlgebra:
    return HeckeAlgebra(r, orientation)


def normal_form(i: Sequence[int], m: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    res = tuple(x % m for x in i)
    lam = tuple((a - x) // m for a, x in zip(res, i))
    return res, lam


def from_normal_form(res: Sequence[int], lam: Sequence[int], m: int) -> tuple[int, ...]:
    return tuple(a - m * x for a, x in zip(res, lam))


def gamma_action(i: Sequence[int], k: int, ctx: SWContext | None = None) -> dict[tuple[int, ...], RatFunc]:
    """v~_i . T_k on residue vectors (1 <= k <= r-1)."""
    i = tuple(i)
    a, b = i[k - 1], i[k]
    swapped = i[:k - 1] + (b, a) + i[k + 1:]
    if a < b:
        return {swapped: ONE}
    if a == b:
        return {i: q.inverse()}
    return {swapped: ONE, i: C}


def gamma_vector(v: Mapping, h: HeckeElem) -> dict:
    """Right action of a finite Hecke element on a vector of (C^m)^{(x) r}."""
    out: dict = {}
    for (w, lam), c in h.terms.items():
        if any(lam):
            raise ValueError("gamma_vector takes finite Hecke elements only")
        cur = dict(v)
        for k in reduced_word(w):
            nxt: dict = {}
            for idx, coef in cur.items():
                for j, g in gamma_action(idx, k).items():
                    nxt[j] = nxt.get(j, ZERO) + coef * g
            cur = nxt
        for idx, coef in cur.items():
            out[idx] = out.get(idx, ZERO) + coef * c
    return {k: v for k, v in out.items() if v}


def gamma_matrix(ctx: SWContext, h: HeckeElem | int) -> Mat:
    """Matrix of v -> v.h on (C^m)^{(x) r}; column y holds the image of v~_y."""
    if isinstance(h, int):
        h = ctx.alg.T(h)
    labels = ctx.residues()
    index = {y: n for n, y in enumerate(labels)}
    mat = Mat.zeros(len(labels))
    for y in labels:
        for y2, c in gamma_vector({y: ONE}, h).items():
            mat.rows[index[y2]][index[y]] = c
    return mat


@lru_cache(maxsize=None)
def _x_times(r: int, orientation: int, lam: tuple[int, ...], key) -> tuple:
    alg = _alg(r, orientation)
    h = _HCACHE[key]
    return tuple((alg.X(lam) * h).terms.items())


_HCACHE: dict = {}


def _hkey(h: HeckeElem):
    key = (h.alg.r, h.alg.orientation, tuple(sorted((k, str(v)) for k, v in h.terms.items())))
    _HCACHE.setdefault(key, h)
    return key


def hecke_right_action(v: Mapping, h: HeckeElem, ctx: SWContext) -> dict:
    """v.h on V_SW through the normal form X^lam h = sum c T_w X^mu."""
    m = ctx.m
    key = _hkey(h)
    out: dict = {}
    for i, coef in v.items():
        res, lam = normal_form(i, m)
        for (w, mu), c in _x_times(ctx.r, ctx.orientation, lam, key):
            for res2, g in gamma_vector({res: ONE}, ctx.alg.T(w)).items():
                j = from_normal_form(res2, mu, m)
                out[j] = out.get(j, ZERO) + coef * c * g
    return {k: v for k, v in out.items() if v}


def shortcut_T(v: Mapping, k: int) -> dict:
    """The three-case formula applied literally to integer indices (agrees with the induced
    action only when i_k and i_{k+1} lie in the same block of m consecutive integers)."""
    out: dict = {}
    for i, coef in v.items():
        for j, g in gamma_action(i, k).items():
            out[j] = out.get(j, ZERO) + coef * g
    return {k_: v_ for k_, v_ in out.items() if v_}


def fast_right_T(v: Mapping, k: int, ctx: SWContext) -> dict:
    """v.T_k: integer formula when lam_k == lam_{k+1} (X^lam then commutes with T_k), normal form otherwise."""
    out: dict = {}
    T = None
    for i, coef in v.items():
        if i[k - 1] // ctx.m == i[k] // ctx.m:
            part = shortcut_T({i: ONE}, k)
        else:
            T = T or ctx.alg.T(k)
            part = hecke_right_action({i: ONE}, T, ctx)
        for j, g in part.items():
            out[j] = out.get(j, ZERO) + coef * g
    return {k_: v_ for k_, v_ in out.items() if v_}


def uq_left_action(g: QGenerator, v: Mapping, ctx: SWContext) -> dict:
    return fock_action(g, v)


@dataclass
class CommutingReport:
    checked: int = 0
    failures: list = field(default_factory=list)
    shortcut_checked: int = 0
    shortcut_mismatches: list = field(default_factory=list)
    literal_disagreements: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures and not self.shortcut_mismatches

    def to_json(self) -> dict:
        return {"ok": self.ok, "checked": self.checked, "failures": [str(f) for f in self.failures[:20]],
                "shortcut_checked": self.shortcut_checked,
                "shortcut_mismatches": [str(f) for f in self.shortcut_mismatches[:20]],
                "literal_integer_formula_disagreements": self.literal_disagreements}


def check_commuting(ctx: SWContext, bound: int = 2, kinds: Sequence[str] = KINDS) -> CommutingReport:
    """(g.v).h == g.(v.h) for g in {E_i, F_i, K_i^{+-1}}, h in {T_k, X^{e_j}}, |indices| within bound*m."""
    m, r, alg = ctx.m, ctx.r, ctx.alg
    lo, hi = -bound * m, bound * m
    hs = [("T%d" % k, alg.T(k)) for k in range(1, r)] + [("X%d" % j, alg.Xe(j)) for j in range(1, r + 1)]
    gens = generators(m, kinds)
    report = CommutingReport()
    right_cache: dict = {}

    def right(vec, name, h):
        out: dict = {}
        for i, c in vec.items():
            key = (i, name)
            if key not in right_cache:
                right_cache[key] = hecke_right_action({i: ONE}, h, ctx)
            for j, v in right_cache[key].items():
                out[j] = out.get(j, ZERO) + c * v
        return {k: v for k, v in out.items() if v}

    for i in product(range(lo, hi), repeat=r):
        vec = {i: ONE}
        for k in range(1, r):
            report.shortcut_checked += 1
            canon = right(vec, f"T{k}", alg.T(k))
            if fast_right_T(vec, k, ctx) != canon:
                report.shortcut_mismatches.append((i, k))
            if shortcut_T(vec, k) != canon:
                report.literal_disagreements += 1
        for g in gens:
            gv = fock_action(g, vec)
            for name, h in hs:
                report.checked += 1
                if right(gv, name, h) != fock_action(g, right(vec, name, h)):
                    report.failures.append((str(g), name, i))
    return report


# --- the functor F_SW on finite modules -------------------------------------


@dataclass
class TensorQuotient:
    """(C^m)^{(x) r} (x)_{H_W} M with the induced U_q action."""

    ctx: SWContext
    module: FinModule
    all_labels: list  # (residue, b) in storage order
    pivots: list[int]
    rows: list[list[RatFunc]]  # reduced relation rows, one per pivot
    free: list[int]
    uq: QModule | None = None

    @property
    def dim(self) -> int:
        return len(self.free)

    @property
    def labels(self) -> list:
        return [self.all_labels[f] for f in self.free]

    def reduce(self, vec: list[RatFunc]) -> list[RatFunc]:
        v = list(vec)
        for p, row in zip(self.pivots, self.rows):
            if v[p]:
                f = v[p]
                for j, x in enumerate(row):
                    if x:
                        v[j] = v[j] - f * x
        return v

    def coords(self, vec: list[RatFunc]) -> list[RatFunc]:
        v = self.reduce(vec)
        return [v[f] for f in self.free]

    def vector(self, res: Sequence[int], x: Sequence[RatFunc]) -> list[RatFunc]:
        """Storage vector of v~_res (x) x."""
        d = self.module.dim
        out = [ZERO] * len(self.all_labels)
        base = _res_index(res, self.ctx.m) * d
        for b, c in enumerate(x):
            out[base + b] = RatFunc.coerce(c)
        return out

    def class_of(self, res: Sequence[int], x: Sequence[RatFunc]) -> list[RatFunc]:
        return self.coords(self.vector(res, x))


def _res_index(res: Sequence[int], m: int) -> int:
    n = 0
    for a in res:
        n = n * m + a
    return n


def _big_uq_columns(ctx: SWContext, M: FinModule, g: QGenerator) -> list[list[tuple[int, RatFunc]]]:
    """g on (C^m)^{(x) r} (x) M as sparse columns, reading v_i = v~_res (x) X^lam."""
    d = M.dim
    labels = ctx.residues()
    cols: list[dict[int, RatFunc]] = [dict() for _ in range(len(labels) * d)]
    for y in labels:
        col0 = _res_index(y, ctx.m) * d
        for i2, c in fock_action(g, {y: ONE}).items():
            res, lam = normal_form(i2, ctx.m)
            X = M.X_matrix(lam)
            row0 = _res_index(res, ctx.m) * d
            for a in range(d):
                for b in range(d):
                    x = X.rows[a][b]
                    if x:
                        col = cols[col0 + b]
                        col[row0 + a] = col.get(row0 + a, ZERO) + c * x
    return [[(i, v) for i, v in col.items() if v] for col in cols]


def _sparse_apply(cols: list[list[tuple[int, RatFunc]]], vec: Sequence[RatFunc]) -> list[RatFunc]:
    out = [ZERO] * len(cols)
    for j, x in enumerate(vec):
        if x:
            for i, c in cols[j]:
                out[i] = out[i] + c * x
    return out


def f_sw(M: FinModule, ctx: SWContext, check: bool = True) -> TensorQuotient:
    if M.r != ctx.r:
        raise ValueError("module rank differs from context r")
    d = M.dim
    labels = ctx.residues()
    all_labels = [(y, b) for y in labels for b in range(d)]
    N = len(all_labels)
    relations = []
    for k in range(1, ctx.r):
        G = gamma_matrix(ctx, k)
        Tm = M.T[k - 1]
        for yi, y in enumerate(labels):
            for b in range(d):
                vec = [ZERO] * N
                for y2i in range(len(labels)):
                    c = G.rows[y2i][yi]
                    if c:
                        vec[y2i * d + b] = vec[y2i * d + b] + c
                for a in range(d):
                    c = Tm.rows[a][b]
                    if c:
                        vec[yi * d + a] = vec[yi * d + a] - c
                if any(vec):
                    relations.append(vec)
    # pivot late labels first so that the quotient basis prefers small b, then small residues
    order = sorted(range(N), key=lambda n: (all_labels[n][1], all_labels[n][0]), reverse=True)
    if relations:
        red, pivots = Mat(relations).rref(column_order=order)
        rows = [red.rows[n] for n in range(len(pivots))]
    else:
        pivots, rows = [], []
    free = sorted((n for n in range(N) if n not in set(pivots)),
                  key=lambda n: (all_labels[n][1], all_labels[n][0]))
    tq = TensorQuotient(ctx, M, all_labels, list(pivots), rows, free)
    mats = {kind: [] for kind in KINDS}
    for g in generators(ctx.m):
        big = _big_uq_columns(ctx, M, g)
        if check:
            for row in rows:
                if any(tq.reduce(_sparse_apply(big, row))):
                    raise IllDefinedAction(f"{g} does not preserve the relation subspace")
        cols = []
        for f in free:
            image = [ZERO] * N
            for i, c in big[f]:
                image[i] = c
            cols.append(tq.coords(image))
        mats[g.kind].append(Mat.from_columns(cols, len(free)) if cols else Mat.zeros(0))
    tq.uq = QModule(ctx.m, tq.labels, mats["E"], mats["F"], mats["K"], mats["Kinv"], name=f"F_SW({M.name})")
    return tq


def intertwines(P: Mat, src: QModule, tgt: QModule) -> bool:
    """P: src -> tgt commutes with every generator."""
    return all(P @ src.matrix(g) == tgt.matrix(g) @ P for g in generators(src.m))


def match_evaluation_tensor(T: TensorQuotient, z: Sequence | None = None) -> Mat:
    """Isomorphism V(z_1) (x) ... (x) V(z_r) -> F_SW(PS(z)), column y = class of v~_y (x) (T_e (x) 1)."""
    ctx = T.ctx
    z = tuple(z) if z is not None else getattr(T.module, "spectral")
    target = tensor([eval_module(ctx.m, zj) for zj in z])
    e0 = [ONE] + [ZERO] * (T.module.dim - 1)
    P = Mat.from_columns([T.class_of(y, e0) for y in ctx.residues()], T.dim)
    if P.nrows == P.ncols and P.rank() == P.nrows and intertwines(P, target, T.uq):
        return P
    pairs = [(target.matrix(g), T.uq.matrix(g)) for g in generators(ctx.m)]
    sols = solve_commutant(pairs, target.dim, T.dim)
    for S in sols:
        if S.nrows == S.ncols and S.rank() == S.nrows:
            return S
    raise NoIsomorphism(f"no equivariant isomorphism (Hom dimension {len(sols)})")


def check_right_module(ctx: SWContext, samples: int = 20, seed: int = 0, bound: int = 1) -> list:
    """(v.a).b == v.(ab) for a, b among T_k, X^{+-e_j} on random basis vectors; returns failures."""
    import random

    rng = random.Random(seed)
    alg, m, r = ctx.alg, ctx.m, ctx.r
    gens = [alg.T(k) for k in range(1, r)] + [alg.Xe(j, s) for j in range(1, r + 1) for s in (1, -1)]
    bad = []
    for _ in range(samples):
        i = tuple(rng.randrange(-bound * m, bound * m) for _ in range(r))
        a, b = rng.choice(gens), rng.choice(gens)
        lhs = hecke_right_action(hecke_right_action({i: ONE}, a, ctx), b, ctx)
        if lhs != hecke_right_action({i: ONE}, a * b, ctx):
            bad.append((i, str(a), str(b)))
    return bad
