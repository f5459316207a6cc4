"""Finite and extended affine Hecke algebras of GL_r in Bernstein normal form.

Elements are finite sums  sum c_{w,lam} T_w X^lam  with w in S_r (one-line tuples,
0-based) and lam in Z^r. The quadratic relation is T^2 = 1 + (q^-1 - q) T, so T has
eigenvalues q^-1 and -q. The cross relation is

    T_k X^lam = X^{s_k lam} T_k + c (X^lam - X^{s_k lam}) / (1 - X^beta),   c = q^-1 - q,

with beta = +alpha_k = e_k - e_{k+1} (``orientation=+1``) or beta = -alpha_k
(``orientation=-1``). Only +1 makes the Schur-Weyl right action a module action;
the other orientation is kept so that this can be tested.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Mapping, Sequence

from .coeff import ONE, ZERO, RatFunc, q
from .linalg import Mat, solve_commutant
from .rootsys import (ExtAffineElement, affine_generator, affine_reduced_word, compose,
                      ext_length, inverse_perm, perm_length, reduced_word, rotation,
                      simple_transposition)

C = q.inverse() - q  # the quadratic-relation coefficient

Perm = tuple[int, ...]
Lam = tuple[int, ...]


class HomDimensionNotOne(ArithmeticError):
    pass


class ModuleRelationError(ArithmeticError):
    pass


def _swap(lam: Sequence[int], k: int) -> tuple[int, ...]:
    out = list(lam)
    out[k - 1], out[k] = out[k], out[k - 1]
    return tuple(out)


def _add(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


class HeckeAlgebra:
    """The extended affine Hecke algebra of GL_r (contains the finite one as lam = 0)."""

    def __init__(self, r: int, orientation: int = 1):
        if r < 1:
            raise ValueError("r must be positive")
        if orientation not in (1, -1):
            raise ValueError("orientation must be +1 or -1")
        self.r = r
        self.orientation = orientation
        self.identity_perm: Perm = tuple(range(r))
        self.zero_lam: Lam = (0,) * r
        self._right_T = lru_cache(maxsize=None)(self._right_T_uncached)

    def __repr__(self):
        return f"HeckeAlgebra(r={self.r}, orientation={self.orientation:+d})"

    def __eq__(self, other):
        return isinstance(other, HeckeAlgebra) and (self.r, self.orientation) == (other.r, other.orientation)

    def __hash__(self):
        return hash((self.r, self.orientation))

    # constructors ---------------------------------------------------------

    def elem(self, terms: Mapping[tuple[Perm, Lam], RatFunc] | None = None) -> "HeckeElem":
        return HeckeElem(self, {k: RatFunc.coerce(v) for k, v in (terms or {}).items() if v})

    def zero(self) -> "HeckeElem":
        return HeckeElem(self, {})

    def one(self) -> "HeckeElem":
        return self.scalar(ONE)

    def scalar(self, c) -> "HeckeElem":
        return self.elem({(self.identity_perm, self.zero_lam): c})

    def T(self, w: Perm | int) -> "HeckeElem":
        """T_w for a permutation, or T_{s_k} for an integer 1 <= k <= r-1."""
        if isinstance(w, int):
            w = simple_transposition(self.r, w)
        return self.elem({(tuple(w), self.zero_lam): ONE})

    def T_inv(self, k: int) -> "HeckeElem":
        return self.T(k) - self.scalar(C)

    def T_perm_inverse(self, w: Perm) -> "HeckeElem":
        """(T_w)^{-1} as a product of inverted simple generators."""
        out = self.one()
        for k in reversed(reduced_word(w)):
            out = out * self.T_inv(k)
        return out

    def X(self, lam: Sequence[int]) -> "HeckeElem":
        return self.elem({(self.identity_perm, tuple(lam)): ONE})

    def Xe(self, j: int, power: int = 1) -> "HeckeElem":
        """X^{power * e_j}, 1 <= j <= r."""
        lam = [0] * self.r
        lam[j - 1] = power
        return self.X(lam)

    def perms(self) -> list[Perm]:
        return sorted(permutations(range(self.r)), key=lambda w: (perm_length(w), w))

    # Bernstein data -------------------------------------------------------

    def bernstein_correction(self, lam: Lam, k: int) -> dict[Lam, int]:
        """G(lam) = (X^lam - X^{s_k lam}) / (1 - X^beta) as a Laurent polynomial."""
        a = lam[k - 1] - lam[k]
        alpha = [0] * self.r
        alpha[k - 1], alpha[k] = 1, -1
        out: dict[Lam, int] = {}
        if a > 0:
            base = _swap(lam, k)  # lam - a alpha
            for j in range(a):
                mu = tuple(b + j * x for b, x in zip(base, alpha))
                out[mu] = out.get(mu, 0) - 1
        elif a < 0:
            for j in range(-a):
                mu = tuple(b + j * x for b, x in zip(lam, alpha))
                out[mu] = out.get(mu, 0) + 1
        if self.orientation == -1 and out:
            out = {_add(mu, alpha): -v for mu, v in out.items()}
        return out

    def _right_T_uncached(self, w: Perm, lam: Lam, k: int) -> tuple[tuple[tuple[Perm, Lam], RatFunc], ...]:
        """(T_w X^lam) T_k in normal form.

        X^lam T_k = T_k X^{s_k lam} + c G(lam), from the cross relation applied to s_k lam.
        """
        out: dict[tuple[Perm, Lam], RatFunc] = {}
        ws = compose(w, simple_transposition(self.r, k))
        slam = _swap(lam, k)
        out[(ws, slam)] = ONE
        if w[k - 1] > w[k]:  # l(w s_k) < l(w): T_w T_k = T_{w s_k} + c T_w
            out[(w, slam)] = out.get((w, slam), ZERO) + C
        for mu, v in self.bernstein_correction(lam, k).items():
            key = (w, mu)
            out[key] = out.get(key, ZERO) + C * v
        return tuple((key, v) for key, v in out.items() if v)

    def right_mul_T(self, a: "HeckeElem", k: int) -> "HeckeElem":
        acc: dict = {}
        for (w, lam), coef in a.terms.items():
            for key, v in self._right_T(w, lam, k):
                acc[key] = acc[key] + coef * v if key in acc else coef * v
        return HeckeElem(self, {k_: v for k_, v in acc.items() if v})

    def right_mul_X(self, a: "HeckeElem", mu: Lam) -> "HeckeElem":
        if not any(mu):
            return a
        return HeckeElem(self, {(w, _add(lam, mu)): v for (w, lam), v in a.terms.items()})

    def mul(self, a: "HeckeElem", b: "HeckeElem") -> "HeckeElem":
        result: dict = {}
        word_cache: dict[Perm, HeckeElem] = {}
        for (v, mu), coef in b.terms.items():
            if v not in word_cache:
                part = a
                for k in reduced_word(v):
                    part = self.right_mul_T(part, k)
                word_cache[v] = part
            part = self.right_mul_X(word_cache[v], mu)
            for key, val in part.terms.items():
                result[key] = result[key] + coef * val if key in result else coef * val
        return HeckeElem(self, {k: v for k, v in result.items() if v})


@dataclass(frozen=True, eq=False)
class HeckeElem:
    alg: HeckeAlgebra
    terms: dict = field(default_factory=dict)

    def _lift(self, other) -> "HeckeElem":
        if isinstance(other, HeckeElem):
            if other.alg != self.alg:
                raise ValueError("elements of different Hecke algebras")
            return other
        return self.alg.scalar(other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return HeckeElem(self.alg, {k: v for k, v in out.items() if v})

    __radd__ = __add__

    def __neg__(self):
        return HeckeElem(self.alg, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c) -> "HeckeElem":
        c = RatFunc.coerce(c)
        if not c:
            return self.alg.zero()
        return HeckeElem(self.alg, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElem):
            return self.alg.mul(self, self._lift(other))
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e: int):
        out = self.alg.one()
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, HeckeElem):
            other = self.alg.scalar(other)
        return self.alg == other.alg and self.terms == other.terms

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def finite_support(self) -> bool:
        return all(not any(lam) for _, lam in self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (perm_length(kv[0][0]), kv[0][0], kv[0][1]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (w, lam), c in self.sorted_terms():
            mono = []
            if w != self.alg.identity_perm:
                mono.append("T" + ".".join(str(k) for k in reduced_word(w)))
            if any(lam):
                mono.append("X^(" + ",".join(str(x) for x in lam) + ")")
            parts.append(f"({c})" + ("*" + "*".join(mono) if mono else ""))
        return " + ".join(parts)

    __repr__ = __str__

    def to_json(self, nvars: int | None = None) -> list[dict]:
        return [{"w": list(w), "lambda": list(lam), "coef": c.to_json(nvars)} for (w, lam), c in self.sorted_terms()]


def mul(a: HeckeElem, b: HeckeElem) -> HeckeElem:
    return a.alg.mul(a, b)


# --- relation suite -------------------------------------------------------


def _lams(r: int, bound: int) -> list[Lam]:
    from itertools import product
    return [lam for lam in product(range(-bound, bound + 1), repeat=r) if sum(abs(x) for x in lam) <= bound]


def relation_suite(alg: HeckeAlgebra, lam_bound: int = 2) -> dict[str, bool]:
    """Quadratic, braid, far-commutation, lattice commutativity and cross relations."""
    r = alg.r
    one = alg.one()
    report: dict[str, bool] = {}
    for k in range(1, r):
        T = alg.T(k)
        report[f"quadratic T{k}"] = T * T == one + T.scale(C)
        report[f"inverse T{k}"] = T * alg.T_inv(k) == one
    for k in range(1, r - 1):
        a, b = alg.T(k), alg.T(k + 1)
        report[f"braid T{k}T{k+1}"] = a * b * a == b * a * b
    for i in range(1, r):
        for j in range(i + 2, r):
            report[f"commute T{i}T{j}"] = alg.T(i) * alg.T(j) == alg.T(j) * alg.T(i)
    lams = _lams(r, lam_bound)
    for lam in lams:
        for mu in lams:
            if lam < mu:
                report[f"lattice {lam}{mu}"] = alg.X(lam) * alg.X(mu) == alg.X(mu) * alg.X(lam) == alg.X(_add(lam, mu))
    for k in range(1, r):
        for lam in lams:
            lhs = alg.T(k) * alg.X(lam)
            corr = alg.elem({(alg.identity_perm, mu): C * v for mu, v in alg.bernstein_correction(lam, k).items()})
            rhs = alg.X(_swap(lam, k)) * alg.T(k) + corr
            report[f"cross T{k} X^{lam}"] = lhs == rhs
    return report


def random_element(alg: HeckeAlgebra, rng, n_terms: int = 3, lam_bound: int = 2) -> HeckeElem:
    from .coeff import laurent
    perms = alg.perms()
    lams = _lams(alg.r, lam_bound)
    terms = {}
    for _ in range(n_terms):
        w = perms[rng.randrange(len(perms))]
        lam = lams[rng.randrange(len(lams))]
        coef = laurent({(rng.randint(-1, 1),): rng.randint(-3, 3) or 1})
        terms[(w, lam)] = terms.get((w, lam), ZERO) + coef
    return alg.elem(terms)


# --- Iwahori-Matsumoto presentation -----------------------------------------


@dataclass(frozen=True, eq=False)
class IMElem:
    """sum c_e T_e over the extended affine Weyl group."""

    r: int
    terms: dict = field(default_factory=dict)

    def __eq__(self, other):
        return isinstance(other, IMElem) and self.r == other.r and self.terms == other.terms

    __hash__ = None

    def __add__(self, other: "IMElem") -> "IMElem":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return IMElem(self.r, {k: v for k, v in out.items() if v})

    def scale(self, c) -> "IMElem":
        c = RatFunc.coerce(c)
        return IMElem(self.r, {k: v * c for k, v in self.terms.items() if v * c})

    def right_generator(self, token: str) -> "IMElem":
        """Right multiplication by 'T<k>', 'T<k>^-1', 'pi' or 'pi^-1'."""
        if token in ("pi", "pi^-1"):
            p = rotation(self.r)
            p = p if token == "pi" else p.inverse()
            return IMElem(self.r, {e * p: v for e, v in self.terms.items()})
        inverse = token.endswith("^-1")
        k = int(token[1:].removesuffix("^-1"))
        s = affine_generator(self.r, k)
        out: dict = {}
        for e, v in self.terms.items():
            es = e * s
            out[es] = out.get(es, ZERO) + v
            if ext_length(es) < ext_length(e):
                out[e] = out.get(e, ZERO) + C * v
            if inverse:
                out[e] = out.get(e, ZERO) - C * v
        return IMElem(self.r, {k_: v for k_, v in out.items() if v})

    def right_word(self, tokens: Iterable[str]) -> "IMElem":
        out = self
        for t in tokens:
            out = out.right_generator(t)
        return out

    def to_words(self) -> list[tuple[RatFunc, list[str]]]:
        """Each basis element as a reduced word in T_0..T_{r-1} followed by a power of pi."""
        return [(v, im_word(e)) for e, v in sorted(self.terms.items())]


def im_word(e: ExtAffineElement) -> list[str]:
    word, j = affine_reduced_word(e)
    return [f"T{k}" for k in word] + (["pi"] * j if j > 0 else ["pi^-1"] * (-j))


def _invert_word(tokens: list[str]) -> list[str]:
    out = []
    for t in reversed(tokens):
        out.append(t.removesuffix("^-1") if t.endswith("^-1") else t + "^-1")
    return out


class IMPresentation:
    """Conversion between the Bernstein and Iwahori-Matsumoto presentations of one algebra.

    pi = t_{e_1} c with c the cyclic shift e_i -> e_{i+1}. T_pi is the first of
    X^{e_1} T_u^{+-1} (u = c or c^{-1}) that satisfies T_pi^r = X^{(1,...,1)} and
    T_pi T_{s} T_pi^{-1} = T_{pi s pi^{-1}} (the choice depends on the cross-relation
    orientation). T_0 is the conjugate of the T_k with pi s_k pi^{-1} = s_0.
    With this choice T_{t_lam} = X^lam for every weakly increasing lam (lam_1 <= ... <= lam_r),
    which is the dominant cone for the positive system that orients the cross relation.
    """

    def __init__(self, alg: HeckeAlgebra):
        self.alg = alg
        r = alg.r
        self.r = r
        self.T_pi, self.T_pi_inv = self._solve_pi()
        self._gen: dict[str, HeckeElem] = {"pi": self.T_pi, "pi^-1": self.T_pi_inv}
        for k in range(1, r):
            self._gen[f"T{k}"] = alg.T(k)
            self._gen[f"T{k}^-1"] = alg.T_inv(k)
        if r > 1:
            pi = rotation(r)
            s0 = affine_generator(r, 0)
            k = next(k for k in range(1, r) if pi * affine_generator(r, k) * pi.inverse() == s0)
            self._gen["T0"] = self.T_pi * alg.T(k) * self.T_pi_inv
            self._gen["T0^-1"] = self.T_pi * alg.T_inv(k) * self.T_pi_inv

    def _solve_pi(self) -> tuple[HeckeElem, HeckeElem]:
        alg, r = self.alg, self.r
        if r == 1:
            return alg.Xe(1), alg.Xe(1, -1)
        cyc = tuple((i + 1) % r for i in range(r))
        candidates = []
        for w in (cyc, inverse_perm(cyc)):
            candidates.append((alg.Xe(1) * alg.T(w), alg.T_perm_inverse(w) * alg.Xe(1, -1)))
            candidates.append((alg.Xe(1) * alg.T_perm_inverse(w), alg.T(w) * alg.Xe(1, -1)))
        center = alg.X((1,) * r)
        for tp, tpi in candidates:
            if tp ** r != center:
                continue
            if all(tp * alg.T(k) * tpi == alg.T(k + 1) for k in range(1, r - 1)):
                return tp, tpi
        raise ArithmeticError("no normalization of T_pi satisfies the presentation")

    def generator(self, token: str) -> HeckeElem:
        return self._gen[token]

    def word(self, tokens: Iterable[str]) -> HeckeElem:
        out = self.alg.one()
        for t in tokens:
            out = out * self._gen[t]
        return out

    def basis_element(self, e: ExtAffineElement) -> HeckeElem:
        return self.word(im_word(e))

    def from_im(self, x: IMElem | Sequence[tuple[RatFunc, Sequence[str]]]) -> HeckeElem:
        if isinstance(x, IMElem):
            items = [(v, im_word(e)) for e, v in x.terms.items()]
        else:
            items = x
        out = self.alg.zero()
        for coef, tokens in items:
            out = out + self.word(tokens).scale(coef)
        return out

    def to_im(self, h: HeckeElem) -> IMElem:
        r = self.r
        out = IMElem(r, {})
        for (w, lam), coef in h.terms.items():
            shift = max([lam[i] - lam[i + 1] for i in range(r - 1)] + [0])
            nu = tuple(shift * i for i in range(r))
            mu = _add(lam, nu)  # both mu and nu are weakly increasing
            base = IMElem(r, {ExtAffineElement.finite(w): ONE})
            part = base.right_word(im_word(ExtAffineElement.translation_by(mu)))
            part = part.right_word(_invert_word(im_word(ExtAffineElement.translation_by(nu))))
            out = out + part.scale(coef)
        return out

    # involution ------------------------------------------------------------

    @property
    def _x_images(self) -> dict[tuple[int, int], HeckeElem]:
        if not hasattr(self, "_xi"):
            imgs = {}
            for j in range(1, self.r + 1):
                for sgn in (1, -1):
                    x = self.to_im(self.alg.Xe(j, sgn))
                    imgs[(j, sgn)] = self._involute_im(x)
            self._xi = imgs
        return self._xi

    def _involute_token(self, t: str) -> HeckeElem:
        if t.startswith("pi"):
            return self._gen[t]
        inv = t.endswith("^-1")
        base = t.removesuffix("^-1")
        # IM(T_s) = -T_s^{-1}, IM(T_s^{-1}) = -T_s
        return -(self._gen[base] if inv else self._gen[base + "^-1"])

    def _involute_im(self, x: IMElem) -> HeckeElem:
        out = self.alg.zero()
        for e, coef in x.terms.items():
            img = self.alg.one()
            for t in im_word(e):
                img = img * self._involute_token(t)
            out = out + img.scale(coef)
        return out

    def involution(self, h: HeckeElem) -> HeckeElem:
        """IM(T_e) = (-1)^{l(e)} (T_{e^{-1}})^{-1}, applied through the generators."""
        alg = self.alg
        out = alg.zero()
        xi = self._x_images
        for (w, lam), coef in h.terms.items():
            img = alg.one()
            for k in reduced_word(w):
                img = img * (-alg.T_inv(k))
            for j, a in enumerate(lam, start=1):
                for _ in range(abs(a)):
                    img = img * xi[(j, 1 if a > 0 else -1)]
            out = out + img.scale(coef)
        return out


@lru_cache(maxsize=None)
def im_presentation(r: int, orientation: int = 1) -> IMPresentation:
    return IMPresentation(HeckeAlgebra(r, orientation))


def to_im_presentation(a: HeckeElem) -> IMElem:
    return im_presentation(a.alg.r, a.alg.orientation).to_im(a)


def from_im_presentation(x, r: int, orientation: int = 1) -> HeckeElem:
    return im_presentation(r, orientation).from_im(x)


def im_involution(a: HeckeElem) -> HeckeElem:
    return im_presentation(a.alg.r, a.alg.orientation).involution(a)


# --- parabolic data ---------------------------------------------------------


TRIVIAL, SIGN = "trivial", "sign"


def character_value(kind: str) -> RatFunc:
    if kind == TRIVIAL:
        return q.inverse()
    if kind == SIGN:
        return -q
    raise ValueError(f"unknown character {kind!r}")


def parabolic_subgroup(r: int, J: Iterable[int]) -> list[Perm]:
    J = sorted(set(J))
    ident = tuple(range(r))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for w in frontier:
            for k in J:
                ws = compose(w, simple_transposition(r, k))
                if ws not in seen:
                    seen.add(ws)
                    nxt.append(ws)
        frontier = nxt
    return sorted(seen, key=lambda w: (perm_length(w), w))


def blocks_to_J(y: Sequence[int]) -> tuple[int, ...]:
    """Simple indices k with y_k = y_{k+1}: the stabilizer of a weakly sorted vector."""
    return tuple(k for k in range(1, len(y)) if y[k - 1] == y[k])


def parabolic_idempotent(alg: HeckeAlgebra, J: Iterable[int], kind: str) -> HeckeElem:
    """e = sum_{w in W_J} a^{l(w)} T_w / sum_{w in W_J} a^{2 l(w)}, a the character value."""
    a = character_value(kind)
    group = parabolic_subgroup(alg.r, J)
    num = alg.zero()
    den = ZERO
    for w in group:
        l = perm_length(w)
        num = num + alg.T(w).scale(a**l)
        den = den + a ** (2 * l)
    return num.scale(den.inverse())


def min_coset_reps(r: int, J: Iterable[int]) -> list[Perm]:
    """Minimal-length representatives d of W_J \\ W (no left descent in J)."""
    J = set(J)
    out = []
    for w in sorted(permutations(range(r)), key=lambda w: (perm_length(w), w)):
        winv = inverse_perm(w)
        if all(winv[k - 1] < winv[k] for k in J):
            out.append(w)
    return out


def coset_factor(w: Perm, J: Iterable[int]) -> tuple[list[int], Perm]:
    """w = x d with x in W_J (given as a word) and d a minimal representative."""
    J = set(J)
    r = len(w)
    word: list[int] = []
    cur = tuple(w)
    while True:
        inv = inverse_perm(cur)
        for k in sorted(J):
            if inv[k - 1] > inv[k]:
                cur = compose(simple_transposition(r, k), cur)
                word.append(k)
                break
        else:
            return word, cur


@dataclass
class InducedCharacter:
    """Right module e_chi H: basis e_chi T_d X^lam over minimal coset representatives d."""

    alg: HeckeAlgebra
    J: tuple[int, ...]
    kind: str

    @property
    def coset_reps(self) -> list[Perm]:
        return min_coset_reps(self.alg.r, self.J)

    @property
    def rank(self) -> int:
        return len(self.coset_reps)

    def project(self, h: HeckeElem) -> dict[tuple[Perm, Lam], RatFunc]:
        """Coordinates of e_chi * h."""
        chi = character_value(self.kind)
        out: dict = {}
        for (w, lam), c in h.terms.items():
            word, d = coset_factor(w, self.J)
            key = (d, lam)
            out[key] = out.get(key, ZERO) + c * chi ** len(word)
        return {k: v for k, v in out.items() if v}

    def act(self, vec: Mapping[tuple[Perm, Lam], RatFunc], h: HeckeElem) -> dict:
        out: dict = {}
        for (d, lam), c in vec.items():
            prod = self.alg.elem({(d, lam): c}) * h
            for k, v in self.project(prod).items():
                out[k] = out.get(k, ZERO) + v
        return {k: v for k, v in out.items() if v}


def induce_character(alg: HeckeAlgebra, J: Iterable[int], kind: str) -> InducedCharacter:
    return InducedCharacter(alg, tuple(sorted(set(J))), kind)


# --- finite-dimensional modules ---------------------------------------------


@dataclass
class FinModule:
    """Left module given by matrices of T_1..T_{r-1} and X^{+-e_1}..X^{+-e_r}."""

    alg: HeckeAlgebra
    labels: list
    T: list[Mat]
    X: list[Mat]
    X_inv: list[Mat]
    name: str = ""
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def r(self) -> int:
        return self.alg.r

    def T_matrix(self, w: Perm) -> Mat:
        key = ("T", w)
        if key not in self._cache:
            m = Mat.identity(self.dim)
            for k in reduced_word(w):
                m = m @ self.T[k - 1]
            self._cache[key] = m
        return self._cache[key]

    def X_matrix(self, lam: Lam) -> Mat:
        key = ("X", tuple(lam))
        if key not in self._cache:
            m = Mat.identity(self.dim)
            for j, a in enumerate(lam):
                step = self.X[j] if a > 0 else self.X_inv[j]
                for _ in range(abs(a)):
                    m = m @ step
            self._cache[key] = m
        return self._cache[key]

    def act(self, h: HeckeElem) -> Mat:
        out = Mat.zeros(self.dim)
        for (w, lam), c in h.terms.items():
            out = out + (self.T_matrix(w) @ self.X_matrix(lam)).scale(c)
        return out

    def relation_report(self) -> dict[str, bool]:
        alg, n = self.alg, self.dim
        I = Mat.identity(n)
        rep: dict[str, bool] = {}
        for k in range(1, self.r):
            T = self.T[k - 1]
            rep[f"quadratic T{k}"] = T @ T == I + T.scale(C)
        for k in range(1, self.r - 1):
            a, b = self.T[k - 1], self.T[k]
            rep[f"braid T{k}"] = a @ b @ a == b @ a @ b
        for i in range(1, self.r):
            for j in range(i + 2, self.r):
                rep[f"commute T{i}T{j}"] = self.T[i - 1] @ self.T[j - 1] == self.T[j - 1] @ self.T[i - 1]
        for j in range(self.r):
            rep[f"invertible X{j+1}"] = self.X[j] @ self.X_inv[j] == I
            for i in range(j + 1, self.r):
                rep[f"commute X{i+1}X{j+1}"] = self.X[i] @ self.X[j] == self.X[j] @ self.X[i]
        for k in range(1, self.r):
            for j in range(1, self.r + 1):
                for sgn in (1, -1):
                    x = alg.Xe(j, sgn)
                    # elements are stored as T_w X^lam, so X T must be rewritten
                    lhs = self.act(x) @ self.T[k - 1]
                    rhs = self.act(x * alg.T(k))
                    rep[f"cross T{k} X{j}^{sgn:+d}"] = lhs == rhs
        return rep

    def validate(self) -> "FinModule":
        bad = [k for k, ok in self.relation_report().items() if not ok]
        if bad:
            raise ModuleRelationError(f"{self.name or 'module'} fails relations: {bad}")
        return self

    def subs(self, mapping) -> "FinModule":
        return FinModule(self.alg, list(self.labels), [m.subs(mapping) for m in self.T],
                         [m.subs(mapping) for m in self.X], [m.subs(mapping) for m in self.X_inv], self.name)

    def direct_sum(self, other: "FinModule") -> "FinModule":
        from .linalg import block_diag
        return FinModule(self.alg, [("L", l) for l in self.labels] + [("R", l) for l in other.labels],
                         [block_diag([a, b]) for a, b in zip(self.T, other.T)],
                         [block_diag([a, b]) for a, b in zip(self.X, other.X)],
                         [block_diag([a, b]) for a, b in zip(self.X_inv, other.X_inv)],
                         f"{self.name}+{other.name}")

    def to_json(self, nvars: int | None = None) -> dict:
        return {
            "name": self.name,
            "dim": self.dim,
            "labels": [list(l) if isinstance(l, tuple) else l for l in self.labels],
            "T": [m.to_json(nvars) for m in self.T],
            "X": [m.to_json(nvars) for m in self.X],
        }


def zero_module(alg: HeckeAlgebra) -> FinModule:
    return FinModule(alg, [], [Mat.zeros(0) for _ in range(alg.r - 1)],
                     [Mat.zeros(0) for _ in range(alg.r)], [Mat.zeros(0) for _ in range(alg.r)], "zero")


def _z_power(z: Sequence[RatFunc], lam: Lam) -> RatFunc:
    out = ONE
    for zj, a in zip(z, lam):
        if a:
            out = out * zj**a
    return out


def principal_series(z: Sequence, alg: HeckeAlgebra | None = None, validate: bool = True) -> FinModule:
    """H (x)_{C[X]} chi_z with basis T_w (x) 1, X^lam acting on 1 by z^lam."""
    z = tuple(RatFunc.coerce(x) for x in z)
    alg = alg or HeckeAlgebra(len(z))
    if alg.r != len(z):
        raise ValueError("spectral vector length must equal r")
    basis = alg.perms()
    index = {w: i for i, w in enumerate(basis)}
    n = len(basis)

    def matrix_of(g: HeckeElem) -> Mat:
        m = Mat.zeros(n)
        for w in basis:
            for (u, lam), c in (g * alg.T(w)).terms.items():
                m.rows[index[u]][index[w]] = m.rows[index[u]][index[w]] + c * _z_power(z, lam)
        return m

    T = [matrix_of(alg.T(k)) for k in range(1, alg.r)]
    X = [matrix_of(alg.Xe(j)) for j in range(1, alg.r + 1)]
    X_inv = [matrix_of(alg.Xe(j, -1)) for j in range(1, alg.r + 1)]
    mod = FinModule(alg, basis, T, X, X_inv, "principal_series")
    mod.spectral = z  # type: ignore[attr-defined]
    return mod.validate() if validate else mod


def one_dim_module(alg: HeckeAlgebra, t_value, x_values: Sequence, name: str = "", validate: bool = True) -> FinModule:
    t = RatFunc.coerce(t_value)
    xs = [RatFunc.coerce(x) for x in x_values]
    mod = FinModule(alg, [0], [Mat([[t]]) for _ in range(alg.r - 1)], [Mat([[x]]) for x in xs],
                    [Mat([[x.inverse()]]) for x in xs], name)
    return mod.validate() if validate else mod


def one_dim_ratio(alg: HeckeAlgebra, t_value) -> RatFunc:
    """x_k / x_{k+1} forced on a 1-dim module with T_k -> t by the cross relation for X^{e_k}.

    Substituting T -> t, X^mu -> x^mu into T_k X^{e_k} = X^{e_{k+1}} T_k + c G(e_k) gives an
    equation linear in x_k once x_{k+1} is set to 1; it is solved here.
    """
    if alg.r < 2:
        raise ValueError("needs r >= 2")
    t = RatFunc.coerce(t_value)
    lam = (1, 0) + (0,) * (alg.r - 2)
    # t x1 = x2 t + c G(e1)(x);   G(e1) is a combination of X^{e1}, X^{e2}
    coeff_x1 = t
    const = ZERO
    for mu, v in alg.bernstein_correction(lam, 1).items():
        if mu[0] == 1:
            coeff_x1 = coeff_x1 - C * v
        else:
            const = const + C * v
    const = const + t
    return const / coeff_x1


def twist_by_im(M: FinModule) -> FinModule:
    pres = im_presentation(M.r, M.alg.orientation)
    alg = M.alg
    T = [M.act(pres.involution(alg.T(k))) for k in range(1, M.r)]
    X = [M.act(pres.involution(alg.Xe(j))) for j in range(1, M.r + 1)]
    X_inv = [M.act(pres.involution(alg.Xe(j, -1))) for j in range(1, M.r + 1)]
    out = FinModule(alg, list(M.labels), T, X, X_inv, f"IM*({M.name})")
    if hasattr(M, "spectral"):
        out.twisted_spectral = M.spectral  # type: ignore[attr-defined]
    return out.validate()


# --- intertwiners -----------------------------------------------------------


# UNIT: the T_e coordinate of the image of T_e (x) 1 is 1.  BRAID: its T_{s_k} coordinate is 1.
# Both satisfy the braid relation exactly; UNIT is the default.
BRAID, UNIT = "braid", "unit"


def swap_spectral(z: Sequence, k: int) -> tuple:
    z = list(z)
    z[k - 1], z[k] = z[k], z[k - 1]
    return tuple(z)


def intertwiner_vector(z: Sequence, k: int, normalization: str = UNIT,
                       alg: HeckeAlgebra | None = None) -> list[RatFunc]:
    """The image of T_e (x) 1 in PS(s_k z): the X-eigenvector there with eigenvalues z."""
    z = tuple(RatFunc.coerce(x) for x in z)
    alg = alg or HeckeAlgebra(len(z))
    target = principal_series(swap_spectral(z, k), alg, validate=False)
    n = target.dim
    stacked = Mat([row for j in range(alg.r) for row in (target.X[j] - Mat.identity(n).scale(z[j])).rows])
    null = stacked.nullspace() if n else []
    if len(null) != 1:
        raise HomDimensionNotOne(f"Hom space has dimension {len(null)}")
    v = null[0]
    if normalization == BRAID:
        pivot = target.labels.index(simple_transposition(alg.r, k)) if alg.r > 1 else 0
    elif normalization == UNIT:
        pivot = 0
    else:
        raise ValueError(f"unknown normalization {normalization!r}")
    if not v[pivot]:
        raise HomDimensionNotOne("normalizing coordinate vanishes")
    inv = v[pivot].inverse()
    return [x * inv for x in v]


def intertwiner(z: Sequence, k: int, normalization: str = UNIT, alg: HeckeAlgebra | None = None) -> Mat:
    """Matrix of the H-map PS(z) -> PS(s_k z) sending T_e (x) 1 to the normalized eigenvector."""
    z = tuple(RatFunc.coerce(x) for x in z)
    if len(z) == 1:
        return Mat.identity(1)  # no simple reflections: the empty composite
    alg = alg or HeckeAlgebra(len(z))
    v = intertwiner_vector(z, k, normalization, alg)
    target = principal_series(swap_spectral(z, k), alg, validate=False)
    cols = [target.T_matrix(w).apply(v) for w in target.labels]
    return Mat.from_columns(cols)


def hom_space(M: FinModule, N: FinModule) -> list[Mat]:
    """Basis of Hom_H(M, N) by solving the full commutation system."""
    pairs = [(M.T[k], N.T[k]) for k in range(M.r - 1)] + [(M.X[j], N.X[j]) for j in range(M.r)]
    return solve_commutant(pairs, M.dim, N.dim)
