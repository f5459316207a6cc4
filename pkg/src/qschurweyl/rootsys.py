"""Root systems, finite Weyl groups, exponents, and the extended affine Weyl group of GL_r.

Finite root data are stored in simple-coroot coordinates: the lattice Y is Z^rank
with basis the simple coroots, and a root is the integer covector y -> <alpha, y>.
For the ``GL`` family the lattice is Z^r with the symmetric group permuting
coordinates, which is the setting of the metaplectic GL_r computations.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import permutations

import flint
import numpy as np

DEFAULT_GROUP_BOUND = 2000


class UnsupportedType(ValueError):
    pass


class GroupTooLarge(RuntimeError):
    pass


def _e(n: int, *pairs: tuple[int, Fraction | int]) -> tuple[Fraction, ...]:
    v = [Fraction(0)] * n
    for i, c in pairs:
        v[i] += Fraction(c)
    return tuple(v)


def _euclidean_simple_roots(kind: str, rank: int) -> list[tuple[Fraction, ...]]:
    """Bourbaki simple roots in a Euclidean model."""
    h = Fraction(1, 2)
    if kind == "A":
        return [_e(rank + 1, (i, 1), (i + 1, -1)) for i in range(rank)]
    if kind == "B":
        return [_e(rank, (i, 1), (i + 1, -1)) for i in range(rank - 1)] + [_e(rank, (rank - 1, 1))]
    if kind == "C":
        return [_e(rank, (i, 1), (i + 1, -1)) for i in range(rank - 1)] + [_e(rank, (rank - 1, 2))]
    if kind == "D":
        return [_e(rank, (i, 1), (i + 1, -1)) for i in range(rank - 1)] + [_e(rank, (rank - 2, 1), (rank - 1, 1))]
    if kind == "G":
        return [_e(3, (0, 1), (1, -1)), _e(3, (0, -2), (1, 1), (2, 1))]
    if kind == "F":
        return [_e(4, (1, 1), (2, -1)), _e(4, (2, 1), (3, -1)), _e(4, (3, 1)),
                (h, -h, -h, -h)]
    if kind == "E":
        e8 = [(h, -h, -h, -h, -h, -h, -h, h), _e(8, (0, 1), (1, 1))]
        e8 += [_e(8, (i, 1), (i - 1, -1)) for i in range(1, 7)]
        return e8[:rank]
    raise UnsupportedType(kind)


_SUPPORTED = {
    "A": range(1, 9), "B": range(2, 9), "C": range(2, 9), "D": range(4, 9),
    "G": (2,), "F": (4,), "E": (6, 7, 8),
}


def parse_type(cartan_type: str, rank: int | None = None) -> tuple[str, int]:
    """Accept 'A', 3 or 'A3' or 'G2' or 'GL', 3."""
    t = cartan_type.strip().upper()
    if t.startswith("GL"):
        digits = t[2:]
        r = int(digits) if digits else rank
        if r is None or r < 1:
            raise UnsupportedType(f"GL needs a positive rank, got {rank}")
        return "GL", r
    kind, digits = t[0], t[1:]
    r = int(digits) if digits else rank
    if r is None:
        raise UnsupportedType(f"missing rank for type {kind}")
    if rank is not None and digits and int(digits) != rank:
        raise UnsupportedType(f"type {cartan_type} conflicts with rank {rank}")
    if kind not in _SUPPORTED or r not in _SUPPORTED[kind]:
        raise UnsupportedType(f"{kind}{r} is not supported")
    return kind, r


def _dot(a, b) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


@dataclass(frozen=True)
class WeylElement:
    """Integer matrix on Y (column vectors); ``perm`` is set for GL_r elements."""

    matrix: tuple[tuple[int, ...], ...]
    perm: tuple[int, ...] | None = None

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def array(self) -> np.ndarray:
        return np.array(self.matrix, dtype=np.int64)

    def act(self, y) -> tuple[int, ...]:
        return tuple(int(sum(a * b for a, b in zip(row, y))) for row in self.matrix)

    def __matmul__(self, other: "WeylElement") -> "WeylElement":
        if self.perm is not None and other.perm is not None:
            return perm_element(compose(self.perm, other.perm))
        prod = self.array() @ other.array()
        return WeylElement(tuple(tuple(int(x) for x in row) for row in prod))

    def is_identity(self) -> bool:
        return all(self.matrix[i][j] == (i == j) for i in range(self.dim) for j in range(self.dim))


def perm_element(w: tuple[int, ...]) -> WeylElement:
    n = len(w)
    mat = [[0] * n for _ in range(n)]
    for i, wi in enumerate(w):
        mat[wi][i] = 1  # w e_i = e_{w(i)}
    return WeylElement(tuple(tuple(r) for r in mat), tuple(w))


def fixed_dim(w: WeylElement) -> int:
    """Dimension of the fixed subspace of w on Y (x) R."""
    n = w.dim
    m = flint.fmpq_mat([[w.matrix[i][j] - (i == j) for j in range(n)] for i in range(n)])
    return n - m.rank()


@dataclass(frozen=True, eq=False)
class RootSystem:
    cartan_type: str
    rank: int
    cartan: tuple[tuple[int, ...], ...] = field(repr=False)
    positive_roots: tuple[tuple[int, ...], ...] = field(repr=False)  # covectors on Y
    positive_coroots: tuple[tuple[int, ...], ...] = field(repr=False)  # vectors in Y

    @property
    def name(self) -> str:
        return f"{self.cartan_type}{self.rank}"

    @property
    def is_gl(self) -> bool:
        return self.cartan_type == "GL"

    @property
    def lattice_rank(self) -> int:
        return self.rank

    @property
    def num_simple(self) -> int:
        return self.rank - 1 if self.is_gl else self.rank

    @cached_property
    def simple_reflections(self) -> tuple[WeylElement, ...]:
        if self.is_gl:
            out = []
            for k in range(self.rank - 1):
                w = list(range(self.rank))
                w[k], w[k + 1] = w[k + 1], w[k]
                out.append(perm_element(tuple(w)))
            return tuple(out)
        n = self.rank
        out = []
        for i in range(n):
            # s_i(y) = y - <alpha_i, y> alpha_i^vee ; <alpha_i, alpha_j^vee> = cartan[j][i]
            mat = [[int(r == c) for c in range(n)] for r in range(n)]
            for c in range(n):
                mat[i][c] -= self.cartan[c][i]
            out.append(WeylElement(tuple(tuple(r) for r in mat)))
        return tuple(out)

    @cached_property
    def order(self) -> int:
        """|W| from the product formula over exponents (no enumeration)."""
        return math.prod(1 + m for m in exponents(self))

    def reflection(self, idx: int) -> WeylElement:
        """Reflection in the idx-th positive root."""
        alpha, coroot = self.positive_roots[idx], self.positive_coroots[idx]
        n = self.rank
        mat = [[int(r == c) - coroot[r] * alpha[c] for c in range(n)] for r in range(n)]
        perm = None
        if self.is_gl:
            i, j = [k for k in range(n) if alpha[k]]
            p = list(range(n))
            p[i], p[j] = j, i
            perm = tuple(p)
        return WeylElement(tuple(tuple(r) for r in mat), perm)

    def coxeter_element(self) -> WeylElement:
        c = WeylElement(tuple(tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank)),
                        tuple(range(self.rank)) if self.is_gl else None)
        for s in self.simple_reflections:
            c = c @ s
        return c


def build_root_system(cartan_type: str, rank: int | None = None) -> RootSystem:
    kind, r = parse_type(cartan_type, rank)
    return _build(kind, r)


@lru_cache(maxsize=None)
def _build(kind: str, r: int) -> RootSystem:
    if kind == "GL":
        roots, coroots = [], []
        for i in range(r):
            for j in range(i + 1, r):
                v = [0] * r
                v[i], v[j] = 1, -1
                roots.append(tuple(v))
                coroots.append(tuple(v))
        cartan = tuple(tuple(2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(r - 1)) for i in range(r - 1))
        return RootSystem("GL", r, cartan, tuple(roots), tuple(coroots))

    simple = _euclidean_simple_roots(kind, r)
    cartan = tuple(tuple(int(2 * _dot(a, b) / _dot(a, a)) for b in simple) for a in simple)
    # roots in simple-root coordinates, closed under simple reflections
    seeds = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    seen = set(seeds)
    queue = deque(seeds)
    while queue:
        beta = queue.popleft()
        for i in range(r):
            pair = sum(beta[j] * cartan[i][j] for j in range(r))  # <beta, alpha_i^vee>
            img = tuple(beta[j] - (pair if j == i else 0) for j in range(r))
            if img not in seen:
                seen.add(img)
                queue.append(img)
    positive = sorted((b for b in seen if all(c >= 0 for c in b)), key=lambda b: (sum(b), tuple(-c for c in b)))
    roots, coroots = [], []
    for b in positive:
        # covector on coroot basis: <beta, alpha_j^vee> = sum_i b_i cartan[j][i]
        roots.append(tuple(sum(b[i] * cartan[j][i] for i in range(r)) for j in range(r)))
        euclid = [sum((b[i] * simple[i][k] for i in range(r)), Fraction(0)) for k in range(len(simple[0]))]
        norm = _dot(euclid, euclid)
        # beta^vee in coroot coordinates: sum_i b_i |alpha_i|^2/|beta|^2 alpha_i^vee
        coroots.append(tuple(int(b[i] * _dot(simple[i], simple[i]) / norm) for i in range(r)))
    return RootSystem(kind, r, cartan, tuple(roots), tuple(coroots))


def weyl_group(rs: RootSystem, bound: int = DEFAULT_GROUP_BOUND) -> list[WeylElement]:
    """All elements, by breadth-first closure under right multiplication by simple reflections."""
    if rs.order > bound:
        raise GroupTooLarge(f"|W({rs.name})| = {rs.order} exceeds bound {bound}")
    return list(_weyl_group(rs))


@lru_cache(maxsize=32)
def _weyl_group(rs: RootSystem) -> tuple[WeylElement, ...]:
    if rs.is_gl:
        return tuple(perm_element(p) for p in sorted(permutations(range(rs.rank)), key=perm_length))
    ident = WeylElement(tuple(tuple(int(i == j) for j in range(rs.rank)) for i in range(rs.rank)))
    seen = {ident.matrix: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for w in frontier:
            for s in rs.simple_reflections:
                ws = w @ s
                if ws.matrix not in seen:
                    seen[ws.matrix] = ws
                    nxt.append(ws)
        frontier = nxt
    return tuple(seen.values())


def weyl_matrices(rs: RootSystem, bound: int = DEFAULT_GROUP_BOUND) -> np.ndarray:
    """Stacked integer matrices of all of W, shape (|W|, r, r)."""
    return np.array([w.matrix for w in weyl_group(rs, bound)], dtype=np.int64).reshape(-1, rs.rank, rs.rank)


def _cyclotomic_exponents(charpoly: flint.fmpz_poly, h: int) -> list[int]:
    rest = charpoly
    out: list[int] = []
    for d in sorted(d for d in range(1, h + 1) if h % d == 0):
        phi = flint.fmpz_poly.cyclotomic(d)
        while rest.degree() >= phi.degree():
            quo, rem = divmod(rest, phi)
            if rem != 0:
                break
            rest = quo
            out.extend(0 if d == 1 else k * h // d for k in range(1, d + 1) if math.gcd(k, d) == 1)
    if rest.degree() != 0:
        raise ArithmeticError("Coxeter characteristic polynomial is not a product of cyclotomics")
    return sorted(out)


@lru_cache(maxsize=None)
def _exponents(rs: RootSystem) -> tuple[int, ...]:
    if rs.is_gl:
        return tuple(range(rs.rank))
    c = rs.coxeter_element()
    charpoly = flint.fmpz_mat([list(row) for row in c.matrix]).charpoly()
    h = 2 * len(rs.positive_roots) // rs.rank
    return tuple(_cyclotomic_exponents(charpoly, h))


def exponents(rs: RootSystem) -> list[int]:
    """Exponents from the eigenvalues of a Coxeter element, read off its characteristic polynomial.

    For GL_r the Coxeter element is an r-cycle acting on Z^r, whose eigenvalues are all
    r-th roots of unity, giving the exponents 0, 1, ..., r-1.
    """
    return list(_exponents(rs))


def coxeter_number(rs: RootSystem) -> int:
    if rs.is_gl:
        return rs.rank
    return 2 * len(rs.positive_roots) // rs.rank


# --- permutations ---------------------------------------------------------


def compose(u: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
    """(u v)(i) = u(v(i))."""
    return tuple(u[i] for i in v)


def inverse_perm(w: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(w)
    for i, wi in enumerate(w):
        out[wi] = i
    return tuple(out)


def perm_length(w: tuple[int, ...]) -> int:
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def act_perm(w: tuple[int, ...], x) -> tuple:
    """w e_i = e_{w(i)}, so (w x)_{w(i)} = x_i."""
    out = [None] * len(w)
    for i, wi in enumerate(w):
        out[wi] = x[i]
    return tuple(out)


def simple_transposition(r: int, k: int) -> tuple[int, ...]:
    """s_k for 1 <= k <= r-1 swapping positions k-1, k (0-based)."""
    w = list(range(r))
    w[k - 1], w[k] = w[k], w[k - 1]
    return tuple(w)


def reduced_word(w: tuple[int, ...]) -> list[int]:
    """Indices k (1-based) with w = s_{k1} s_{k2} ... s_{kl}, reduced."""
    w = list(w)
    word: list[int] = []
    # peel right descents: w(k) > w(k+1) means l(w s_k) < l(w)
    while True:
        for k in range(len(w) - 1):
            if w[k] > w[k + 1]:
                w[k], w[k + 1] = w[k + 1], w[k]
                word.append(k + 1)
                break
        else:
            break
    return word[::-1]


# --- extended affine Weyl group of GL_r -------------------------------------


@dataclass(frozen=True, order=True)
class ExtAffineElement:
    """x -> w x + translation on Z^r; equals t_translation * w."""

    translation: tuple[int, ...]
    finite_part: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.finite_part)

    def __mul__(self, other: "ExtAffineElement") -> "ExtAffineElement":
        moved = act_perm(self.finite_part, other.translation)
        return ExtAffineElement(tuple(a + b for a, b in zip(self.translation, moved)),
                                compose(self.finite_part, other.finite_part))

    def inverse(self) -> "ExtAffineElement":
        winv = inverse_perm(self.finite_part)
        return ExtAffineElement(tuple(-x for x in act_perm(winv, self.translation)), winv)

    def act(self, x) -> tuple[int, ...]:
        return tuple(a + b for a, b in zip(act_perm(self.finite_part, x), self.translation))

    @classmethod
    def identity(cls, r: int) -> "ExtAffineElement":
        return cls((0,) * r, tuple(range(r)))

    @classmethod
    def translation_by(cls, lam) -> "ExtAffineElement":
        return cls(tuple(lam), tuple(range(len(lam))))

    @classmethod
    def finite(cls, w) -> "ExtAffineElement":
        return cls((0,) * len(w), tuple(w))


def affine_generator(r: int, k: int) -> ExtAffineElement:
    """s_k for 1 <= k <= r-1, and s_0 = t_{e_1 - e_r} (1 r)."""
    if k == 0:
        w = list(range(r))
        w[0], w[r - 1] = w[r - 1], w[0]
        lam = [0] * r
        lam[0], lam[r - 1] = 1, -1
        return ExtAffineElement(tuple(lam), tuple(w))
    return ExtAffineElement.finite(simple_transposition(r, k))


def rotation(r: int) -> ExtAffineElement:
    """The length-zero element pi = t_{e_1} c with c e_i = e_{i+1}; pi^r = t_{(1,...,1)}."""
    lam = [0] * r
    lam[0] = 1
    return ExtAffineElement(tuple(lam), tuple((i + 1) % r for i in range(r)))


def ext_length(e: ExtAffineElement) -> int:
    lam, w = e.translation, e.finite_part
    winv = inverse_perm(w)
    total = 0
    r = len(w)
    for i in range(r):
        for j in range(i + 1, r):
            pair = lam[i] - lam[j]
            if winv[i] < winv[j]:
                total += abs(pair)
            else:
                total += abs(pair - 1)
    return total


def pi_power(e: ExtAffineElement) -> int:
    """The component of e in Z = (extended group)/(affine Coxeter group): sum of translation."""
    return sum(e.translation)


def affine_reduced_word(e: ExtAffineElement) -> tuple[list[int], int]:
    """(word, j) with e = s_{k1} ... s_{kl} pi^j and l = ext_length(e)."""
    r = e.r
    j = pi_power(e)
    pi = rotation(r)
    core = e * _pi_pow(pi, -j, r)
    word: list[int] = []
    cur = core
    length = ext_length(cur)
    gens = [affine_generator(r, k) for k in range(r)] if r > 1 else []
    while length > 0:
        for k, s in enumerate(gens):
            nxt = cur * s
            nl = ext_length(nxt)
            if nl < length:
                word.append(k)
                cur, length = nxt, nl
                break
        else:  # pragma: no cover - would contradict the length formula
            raise ArithmeticError(f"no descent found for {cur}")
    if cur != ExtAffineElement.identity(r):
        raise ArithmeticError(f"length-zero remainder {cur} is not the identity")
    return word[::-1], j


def _pi_pow(pi: ExtAffineElement, j: int, r: int) -> ExtAffineElement:
    out = ExtAffineElement.identity(r)
    step = pi if j >= 0 else pi.inverse()
    for _ in range(abs(j)):
        out = out * step
    return out


def bfs_lengths(r: int, max_length: int, translation_bound: int | None = None) -> dict[ExtAffineElement, int]:
    """Word lengths by 0-1 BFS: simple affine reflections cost 1, pi^{+-1} cost 0.

    Every element reached with length <= max_length is returned. Since pi-moves are free the
    search runs over pi-cosets; translation_bound caps the coordinates explored.
    """
    bound = translation_bound if translation_bound is not None else max_length + 2
    gens = [affine_generator(r, k) for k in range(r)] if r > 1 else []
    pi = rotation(r)
    free = [pi, pi.inverse()]
    start = ExtAffineElement.identity(r)
    dist = {start: 0}
    dq = deque([start])
    while dq:
        cur = dq.popleft()
        d = dist[cur]
        for g, cost in [(g, 0) for g in free] + [(g, 1) for g in gens]:
            nxt = cur * g
            nd = d + cost
            if nd > max_length or max(abs(x) for x in nxt.translation) > bound:
                continue
            if nxt not in dist or nd < dist[nxt]:
                dist[nxt] = nd
                if cost == 0:
                    dq.appendleft(nxt)
                else:
                    dq.append(nxt)
    return dist
