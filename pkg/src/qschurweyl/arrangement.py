"""Coxeter arrangements: intersection lattice, Moebius function, orbit counting on Y/nY."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

import flint
import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .rootsys import (DEFAULT_GROUP_BOUND, RootSystem, WeylElement, exponents, fixed_dim,
                      weyl_group, weyl_matrices)

DEFAULT_STATE_BOUND = 10**7
MAX_LATTICE_RANK = 4


class RankTooLarge(ValueError):
    pass


class StateSpaceTooLarge(RuntimeError):
    pass


class BadModulus(ValueError):
    pass


class NoNonnegativeSolution(ArithmeticError):
    pass


@dataclass(frozen=True)
class IntPoly:
    """Univariate integer polynomial, coefficients lowest degree first."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c) or (0,))

    @classmethod
    def from_flint(cls, p: flint.fmpz_poly) -> "IntPoly":
        return cls(tuple(int(c) for c in p.coeffs()) or (0,))

    def to_flint(self) -> flint.fmpz_poly:
        return flint.fmpz_poly(list(self.coeffs))

    @classmethod
    def from_roots(cls, roots) -> "IntPoly":
        p = flint.fmpz_poly([1])
        for a in roots:
            p *= flint.fmpz_poly([-a, 1])
        return cls.from_flint(p)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        return sum(c * x**i for i, c in enumerate(self.coeffs))

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}

    def __str__(self):
        return str(self.to_flint())


# --- intersection lattice ---------------------------------------------------


@dataclass(frozen=True)
class Subspace:
    """Intersection of root hyperplanes, keyed by the reduced echelon form of its defining functionals."""

    equations: tuple[tuple[Fraction, ...], ...]
    ambient_dim: int

    @property
    def dim(self) -> int:
        return self.ambient_dim - len(self.equations)

    def contains(self, other: "Subspace") -> bool:
        """self >= other as subspaces, i.e. other lies inside self."""
        return _rowspace_key(self.equations + other.equations, self.ambient_dim) == other.equations


def _rowspace_key(rows, n: int) -> tuple[tuple[Fraction, ...], ...]:
    if not rows:
        return ()
    mat, rank = flint.fmpq_mat([[flint.fmpq(x.numerator, x.denominator) for x in r] for r in rows]).rref()
    return tuple(tuple(Fraction(int(mat[i, j].p), int(mat[i, j].q)) for j in range(n)) for i in range(rank))


@dataclass
class IntersectionLattice:
    rank: int
    elements: list[Subspace]  # ambient first, ordered by codimension
    mobius: dict[Subspace, int]  # mu(ambient, x)
    _full: dict = field(default_factory=dict, repr=False)

    @property
    def top(self) -> Subspace:
        return self.elements[0]

    def leq(self, x: Subspace, y: Subspace) -> bool:
        """x <= y in reverse inclusion: y is contained in x."""
        return x.contains(y)

    def mobius_between(self, x: Subspace, y: Subspace) -> int:
        key = (x, y)
        if key not in self._full:
            if x == y:
                val = 1
            elif not self.leq(x, y):
                val = 0
            else:
                val = -sum(self.mobius_between(x, z) for z in self.elements
                           if z != y and self.leq(x, z) and self.leq(z, y))
            self._full[key] = val
        return self._full[key]


def build_lattice(rs: RootSystem) -> IntersectionLattice:
    if rs.rank > MAX_LATTICE_RANK:
        raise RankTooLarge(f"lattice of {rs.name} (rank {rs.rank}) exceeds the rank guard {MAX_LATTICE_RANK}")
    n = rs.rank
    hyperplanes = [_rowspace_key([tuple(Fraction(x) for x in a)], n) for a in rs.positive_roots]
    ambient = Subspace((), n)
    found = {(): ambient}
    layer = [ambient]
    while layer:
        nxt = []
        for x in layer:
            for h in hyperplanes:
                key = _rowspace_key(x.equations + h, n)
                if key not in found:
                    found[key] = Subspace(key, n)
                    nxt.append(found[key])
        layer = nxt
    elements = sorted(found.values(), key=lambda s: (len(s.equations), s.equations))
    mobius: dict[Subspace, int] = {}
    for x in elements:
        if x is ambient:
            mobius[x] = 1
        else:
            mobius[x] = -sum(mobius[z] for z in elements if z.dim > x.dim and z.contains(x))
    return IntersectionLattice(n, elements, mobius)


def char_poly(lat: IntersectionLattice) -> IntPoly:
    coeffs = [0] * (lat.rank + 1)
    for x, mu in lat.mobius.items():
        coeffs[x.dim] += mu
    return IntPoly(tuple(coeffs))


def ep_poly(rs: RootSystem) -> IntPoly:
    p = flint.fmpz_poly([1])
    for m in exponents(rs):
        p *= flint.fmpz_poly([1, m])
    return IntPoly.from_flint(p)


def orlik_solomon_transform(ep: IntPoly, r: int) -> IntPoly:
    """X^r * EP(-1/X) as a polynomial in X."""
    coeffs = [0] * (r + 1)
    for i, c in enumerate(ep.coeffs):
        coeffs[r - i] += c * (-1) ** i
    return IntPoly(tuple(coeffs))


# --- orbits on Y/nY ---------------------------------------------------------


@dataclass(frozen=True)
class Orbit:
    representative: tuple[int, ...]
    size: int
    stabilizer_order: int
    reflections: tuple[int, ...] = ()  # indices of positive roots whose reflection fixes the rep
    reflection_generated: bool | None = None


@dataclass
class OrbitTable:
    modulus: int
    group_order: int
    orbits: list[Orbit]

    @property
    def total(self) -> int:
        return len(self.orbits)

    @property
    def free(self) -> int:
        return sum(1 for o in self.orbits if o.size == self.group_order)

    def to_json(self) -> dict:
        return {
            "n": self.modulus,
            "total": self.total,
            "free": self.free,
            "orbits": [{"rep": list(o.representative), "size": o.size, "stabilizer_order": o.stabilizer_order,
                        "reflections": list(o.reflections), "reflection_generated": o.reflection_generated}
                       for o in self.orbits],
        }


def _points(n: int, r: int) -> np.ndarray:
    grids = np.indices((n,) * r).reshape(r, -1).T
    return grids.astype(np.int64)


def _encode(pts: np.ndarray, n: int) -> np.ndarray:
    r = pts.shape[1]
    weights = n ** np.arange(r - 1, -1, -1, dtype=np.int64)
    return (np.mod(pts, n) * weights).sum(axis=1)


def orbit_table(rs: RootSystem, n: int, *, bound: int = DEFAULT_STATE_BOUND,
                stabilizers: bool = False, group_bound: int = DEFAULT_GROUP_BOUND) -> OrbitTable:
    """Partition (Z/n)^r into W-orbits by connected components of the simple-reflection graph."""
    if n < 1:
        raise BadModulus("n must be positive")
    r = rs.rank
    size = n**r
    if size > bound:
        raise StateSpaceTooLarge(f"{n}^{r} = {size} points exceed bound {bound}")
    pts = _points(n, r)
    src = np.arange(size, dtype=np.int64)
    rows, cols = [], []
    for s in rs.simple_reflections:
        img = _encode(pts @ s.array().T, n)
        rows.append(src)
        cols.append(img)
    if rows:
        graph = coo_matrix((np.ones(len(rows) * size, dtype=np.int8),
                            (np.concatenate(rows), np.concatenate(cols))), shape=(size, size))
        _, labels = connected_components(graph, directed=True, connection="weak")
    else:
        labels = np.arange(size, dtype=np.int64)  # trivial group: every point is an orbit
    order = rs.order
    # lexicographic minimum = smallest encoded index in each component
    counts = np.bincount(labels)
    _, first_idx = np.unique(labels, return_index=True)
    first = {int(labels[i]): int(i) for i in first_idx}
    mats = weyl_matrices(rs, group_bound) if stabilizers else None
    orbits = []
    for lab, idx in sorted(first.items(), key=lambda kv: kv[1]):
        rep = tuple(int(x) for x in pts[idx])
        osize = int(counts[lab])
        if order % osize:
            raise ArithmeticError(f"orbit size {osize} does not divide |W| = {order}")
        if stabilizers:
            refl, generated = _stabilizer_data(rs, mats, rep, n)
            orbits.append(Orbit(rep, osize, order // osize, refl, generated))
        else:
            orbits.append(Orbit(rep, osize, order // osize))
    if sum(o.size for o in orbits) != size:
        raise ArithmeticError("orbit sizes do not sum to n^r")
    return OrbitTable(n, order, orbits)


def _stabilizer_data(rs: RootSystem, mats: np.ndarray, rep, n: int) -> tuple[tuple[int, ...], bool]:
    y = np.array(rep, dtype=np.int64)
    fixed = np.all(np.mod(mats @ y - y, n) == 0, axis=1)
    stab_order = int(fixed.sum())
    refl = tuple(i for i, a in enumerate(rs.positive_roots) if sum(x * v for x, v in zip(a, rep)) % n == 0)
    generated = _subgroup_order(rs, [rs.reflection(i) for i in refl]) == stab_order
    return refl, generated


def _subgroup_order(rs: RootSystem, gens: list[WeylElement]) -> int:
    ident = tuple(tuple(int(i == j) for j in range(rs.rank)) for i in range(rs.rank))
    seen = {ident}
    frontier = [np.array(ident, dtype=np.int64)]
    g_arr = [g.array() for g in gens]
    while frontier:
        nxt = []
        for w in frontier:
            for g in g_arr:
                p = w @ g
                key = tuple(map(tuple, p.tolist()))
                if key not in seen:
                    seen.add(key)
                    nxt.append(p)
        frontier = nxt
    return len(seen)


# --- closed forms -----------------------------------------------------------


def _check_modulus(rs: RootSystem, n: int) -> None:
    if n < 1 or math.gcd(n, rs.order) != 1:
        raise BadModulus(f"n = {n} is not coprime to |W({rs.name})| = {rs.order}")


def closed_form_counts(rs: RootSystem, n: int) -> tuple[int, int]:
    """(total, free) = (prod(n + m_j), prod(n - m_j)) / |W|, asserted integral."""
    ms = exponents(rs)
    tot, rem1 = divmod(math.prod(n + m for m in ms), rs.order)
    free, rem2 = divmod(math.prod(n - m for m in ms), rs.order)
    if rem1 or rem2:
        raise ArithmeticError(f"non-integral orbit count for {rs.name}, n = {n}")
    return tot, free


def burnside_count(rs: RootSystem, n: int, group_bound: int = DEFAULT_GROUP_BOUND) -> tuple[int, tuple[int, int]]:
    """(|W|^{-1} sum_w n^{d(w)}, (total, free) closed forms)."""
    _check_modulus(rs, n)
    tally: dict[int, int] = {}
    for w in weyl_group(rs, group_bound):
        d = fixed_dim(w)
        tally[d] = tally.get(d, 0) + 1
    total, rem = divmod(sum(c * n**d for d, c in tally.items()), rs.order)
    if rem:
        raise ArithmeticError("Burnside average is not an integer")
    return total, closed_form_counts(rs, n)


def whittaker_dims(rs: RootSystem, n: int) -> tuple[int, int]:
    """(theta, steinberg) = (free orbits, all orbits) via the exponent products."""
    _check_modulus(rs, n)
    total, free = closed_form_counts(rs, n)
    return free, total


def is_stable(rs: RootSystem, n: int) -> bool:
    _check_modulus(rs, n)
    _, free = closed_form_counts(rs, n)
    stable = free > 0
    if stable != (n > max(exponents(rs))):
        raise ArithmeticError(f"stability disagrees with n > m_r for {rs.name}, n = {n}")
    return stable


# --- Sommers multiplicities -------------------------------------------------


@dataclass(frozen=True)
class ParabolicClass:
    J: tuple[int, ...]  # 1-based simple indices of a representative subset
    order: int


def _key(mat) -> tuple:
    return tuple(map(tuple, np.asarray(mat).tolist()))


@lru_cache(maxsize=16)
def parabolic_classes(rs: RootSystem) -> tuple[tuple[ParabolicClass, frozenset], ...]:
    """Conjugacy classes of standard parabolic subgroups, each with its element set."""
    group = weyl_group(rs)
    mats = [w.array() for w in group]
    invs = [np.rint(np.linalg.inv(m)).astype(np.int64) for m in mats]
    classes: list[tuple[ParabolicClass, frozenset, set]] = []
    for size in range(rs.num_simple + 1):
        for J in combinations(range(rs.num_simple), size):
            sub = _generated(rs, [rs.simple_reflections[j] for j in J])
            if any(sub in conj for _, _, conj in classes):
                continue
            conj = {frozenset(_key(w @ np.array(h) @ wi) for h in sub) for w, wi in zip(mats, invs)}
            classes.append((ParabolicClass(tuple(j + 1 for j in J), len(sub)), sub, conj))
    return tuple((pc, sub) for pc, sub, _ in classes)


def _generated(rs: RootSystem, gens: list[WeylElement]) -> frozenset:
    ident = np.eye(rs.rank, dtype=np.int64)
    seen = {_key(ident)}
    frontier = [ident]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                p = w @ g.array()
                k = _key(p)
                if k not in seen:
                    seen.add(k)
                    nxt.append(p)
        frontier = nxt
    return frozenset(seen)


def sommers_multiplicities(rs: RootSystem, n: int) -> dict[ParabolicClass, int]:
    """Multiplicity of Ind_{W_J}^W(1) in the permutation representation on Y/nY.

    Stabilizers are read off the orbit table and matched against parabolic classes; the
    result is then checked against the character identity chi(w) = n^{d(w)} on all of W.
    """
    _check_modulus(rs, n)
    group = weyl_group(rs)
    mats = np.array([w.matrix for w in group], dtype=np.int64)
    classes = parabolic_classes(rs)
    table = orbit_table(rs, n)
    mult = {pc: 0 for pc, _ in classes}
    for orb in table.orbits:
        y = np.array(orb.representative, dtype=np.int64)
        fixed = np.all(np.mod(mats @ y - y, n) == 0, axis=1)
        stab = frozenset(_key(m) for m in mats[fixed])
        for pc, sub in classes:
            if len(sub) == len(stab) and _conjugate(stab, sub, mats):
                mult[pc] += 1
                break
        else:
            raise NoNonnegativeSolution(f"stabilizer of {orb.representative} is not parabolic")
    _verify_character(rs, n, mult, classes, mats)
    return mult


def _conjugate(a: frozenset, b: frozenset, mats: np.ndarray) -> bool:
    for m in mats:
        mi = np.rint(np.linalg.inv(m)).astype(np.int64)
        if frozenset(_key(m @ np.array(h) @ mi) for h in b) == a:
            return True
    return False


def _verify_character(rs, n, mult, classes, mats) -> None:
    invs = np.rint(np.linalg.inv(mats)).astype(np.int64)
    for w in weyl_group(rs):
        wm = w.array()
        conj = [_key(g) for g in invs @ wm @ mats]  # g^{-1} w g over all g
        value = 0
        for pc, sub in classes:
            if mult[pc]:
                # Ind_{W_J}^W(1)(w) = #{g : g^{-1} w g in W_J} / |W_J|
                value += mult[pc] * sum(1 for k in conj if k in sub) // pc.order
        expected = n ** fixed_dim(w)
        if value != expected:
            raise NoNonnegativeSolution(f"character mismatch at {w.matrix}: {value} != {expected}")
