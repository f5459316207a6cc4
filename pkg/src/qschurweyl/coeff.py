"""
Exact scalars: the field Q(q, z1, ..., z8) of rational functions in the
Hecke parameter q and spectral parameters z_j.

Every value lives in one fixed polynomial context, so matrices never need
coercion.  A `RatFunc` is stored as a pair of coprime integer polynomials
(num, den) with den having positive leading coefficient in lex order; that
pair is unique, so equality is structural.  Laurent monomials such as q^-1
are ordinary fractions 1/q internally and are shifted back into Laurent form
only for display and JSON.

Polynomial gcd and factorisation are delegated to FLINT (python-flint).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Mapping

import flint

MAX_SPECTRAL = 8
VARIABLES: tuple[str, ...] = ("q",) + tuple(f"z{j}" for j in range(1, MAX_SPECTRAL + 1))
NVARS = len(VARIABLES)

_CTX = flint.fmpz_mpoly_ctx.get(VARIABLES, "lex")
_ZERO = _CTX.constant(0)
_ONE = _CTX.constant(1)


class DivisionByZero(ZeroDivisionError):
    pass


class PoleAtPoint(ZeroDivisionError):
    pass


def _normalize(num, den):
    if den.is_zero():
        raise DivisionByZero("zero denominator")
    if num.is_zero():
        return _ZERO, _ONE
    if not den.is_one():
        g = num.gcd(den)
        if not g.is_one():
            num = num / g
            den = den / g
        if den.leading_coefficient() < 0:
            num, den = -num, -den
    return num, den


class RatFunc:
    """An element of Q(q, z1..z8) in canonical form.  Immutable."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1, *, _canonical=False):
        if not isinstance(num, flint.fmpz_mpoly):
            num = _CTX.constant(int(num))
        if not isinstance(den, flint.fmpz_mpoly):
            den = _CTX.constant(int(den))
        if not _canonical:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den
        self._hash = None

    # construction -----------------------------------------------------

    @classmethod
    def coerce(cls, x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, int):
            return cls(_CTX.constant(x), _ONE, _canonical=True)
        if isinstance(x, Fraction):
            return cls(_CTX.constant(x.numerator), _CTX.constant(x.denominator), _canonical=True)
        if isinstance(x, flint.fmpz_mpoly):
            return cls(x, _ONE, _canonical=True)
        raise TypeError(f"cannot coerce {type(x).__name__} to RatFunc")

    @classmethod
    def monomial(cls, exps: Mapping[str, int] | Iterable[int], coef=1) -> "RatFunc":
        """coef * prod var**e, negative exponents allowed."""
        if isinstance(exps, Mapping):
            vec = [0] * NVARS
            for name, e in exps.items():
                vec[VARIABLES.index(name)] = e
        else:
            vec = list(exps) + [0] * (NVARS - len(list(exps)))
        coef = Fraction(coef)
        pos = tuple(max(e, 0) for e in vec)
        neg = tuple(max(-e, 0) for e in vec)
        num = _CTX.term(coef.numerator, pos) if coef.numerator else _ZERO
        den = _CTX.term(coef.denominator, neg)
        return cls(num, den, _canonical=True) if coef.numerator else ZERO

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if o.num.is_zero():
            return self
        if self.num.is_zero():
            return o
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        if self.den.is_one():
            return RatFunc(self.num * o.den + o.num, o.den, _canonical=True)
        if o.den.is_one():
            return RatFunc(self.num + o.num * self.den, self.den, _canonical=True)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return RatFunc.coerce(other) - self

    def __mul__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if self.num.is_zero() or o.num.is_zero():
            return ZERO
        if self.den.is_one() and o.den.is_one():
            return RatFunc(self.num * o.num, _ONE, _canonical=True)
        # cross-cancel keeps intermediate sizes down
        g1 = self.num.gcd(o.den)
        g2 = o.num.gcd(self.den)
        n1, d2 = self.num / g1, o.den / g1
        n2, d1 = o.num / g2, self.den / g2
        num, den = n1 * n2, d1 * d2
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return RatFunc(num, den, _canonical=True)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise DivisionByZero("inverse of zero")
        num, den = self.den, self.num
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return RatFunc(num, den, _canonical=True)

    def __truediv__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return RatFunc(self.num**e, self.den**e, _canonical=True)

    # comparison ---------------------------------------------------------

    def __eq__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((str(self.num), str(self.den)))
        return self._hash

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def to_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return Fraction(int(self.num.leading_coefficient()) if not self.num.is_zero() else 0,
                        int(self.den.leading_coefficient()))

    def variables(self) -> set[str]:
        used = set()
        for poly in (self.num, self.den):
            for mon in poly.monoms():
                used.update(VARIABLES[i] for i, e in enumerate(mon) if e)
        return used

    # substitution -------------------------------------------------------

    def evaluate(self, assignment: Mapping[str, Fraction | int]) -> Fraction:
        """Exact value at a rational point.  Raises PoleAtPoint on a pole."""
        missing = self.variables() - set(assignment)
        if missing:
            raise KeyError(f"unassigned variables: {sorted(missing)}")
        point = [Fraction(assignment.get(v, 0)) for v in VARIABLES]
        den = _eval_poly(self.den, point)
        if den == 0:
            raise PoleAtPoint(f"denominator vanishes at {dict(assignment)}")
        return _eval_poly(self.num, point) / den

    def subs(self, mapping: Mapping[str, "RatFunc"]) -> "RatFunc":
        """Substitute rational functions for variables (simultaneously)."""
        if not mapping:
            return self
        images = []
        for name in VARIABLES:
            images.append(RatFunc.coerce(mapping[name]) if name in mapping else _GENS[name])
        return _subs_poly(self.num, images) / _subs_poly(self.den, images)

    # display ------------------------------------------------------------

    def laurent_parts(self) -> tuple[dict, dict]:
        """(num, den) as exponent->Fraction dicts with den's minimal exponents zero."""
        shift = [min((int(m[i]) for m in self.den.monoms()), default=0) for i in range(NVARS)]
        num = {tuple(int(e) - s for e, s in zip(m, shift)): Fraction(int(c))
               for m, c in zip(self.num.monoms(), self.num.coeffs())}
        den = {tuple(int(e) - s for e, s in zip(m, shift)): Fraction(int(c))
               for m, c in zip(self.den.monoms(), self.den.coeffs())}
        return num, den

    def __str__(self):
        num, den = self.laurent_parts()
        ns = _fmt_laurent(num)
        if den == {(0,) * NVARS: Fraction(1)}:
            return ns
        return f"({ns})/({_fmt_laurent(den)})"

    def __repr__(self):
        return f"RatFunc({self})"

    def nvars_used(self) -> int:
        """Length of the shortest variable prefix (q, z1, ...) covering every exponent."""
        num, den = self.laurent_parts()
        return max([1] + [i + 1 for part in (num, den) for m in part for i, e in enumerate(m) if e])

    def to_json(self, nvars: int | None = None) -> dict:
        num, den = self.laurent_parts()
        if nvars is None:
            nvars = self.nvars_used()
        def enc(part):
            return [list(m[:nvars]) + [str(c)] for m, c in sorted(part.items(), reverse=True)]
        return {"num": enc(num), "den": enc(den)}

    @classmethod
    def from_json(cls, data: Mapping) -> "RatFunc":
        def dec(rows):
            return sum((cls.monomial([int(e) for e in row[:-1]], Fraction(row[-1])) for row in rows), ZERO)
        return dec(data["num"]) / dec(data["den"])


def _eval_poly(poly, point: list[Fraction]) -> Fraction:
    total = Fraction(0)
    for mon, c in zip(poly.monoms(), poly.coeffs()):
        term = Fraction(int(c))
        for x, e in zip(point, mon):
            if e:
                term *= x**int(e)
        total += term
    return total


def _subs_poly(poly, images: list[RatFunc]) -> RatFunc:
    total = ZERO
    for mon, c in zip(poly.monoms(), poly.coeffs()):
        term = RatFunc.coerce(int(c))
        for im, e in zip(images, mon):
            if e:
                term = term * im**int(e)
        total = total + term
    return total


def _fmt_laurent(part: dict) -> str:
    if not part:
        return "0"
    out = []
    for mon, c in sorted(part.items(), reverse=True):
        factors = [f"{VARIABLES[i]}" + (f"^{e}" if e != 1 else "") for i, e in enumerate(mon) if e]
        body = "*".join(factors)
        if not body:
            out.append(str(c))
        elif c == 1:
            out.append(body)
        elif c == -1:
            out.append("-" + body)
        else:
            out.append(f"{c}*{body}")
    return " + ".join(out).replace("+ -", "- ")


ZERO = RatFunc(_ZERO, _ONE, _canonical=True)
ONE = RatFunc(_ONE, _ONE, _canonical=True)
_GENS = {name: RatFunc(g, _ONE, _canonical=True) for name, g in zip(VARIABLES, _CTX.gens())}
q = _GENS["q"]


def var(name: str) -> RatFunc:
    return _GENS[name]


def z(j: int) -> RatFunc:
    """The j-th spectral variable (1-based)."""
    if not 1 <= j <= MAX_SPECTRAL:
        raise ValueError(f"spectral index {j} outside 1..{MAX_SPECTRAL}")
    return _GENS[f"z{j}"]


def spectral(r: int) -> tuple[RatFunc, ...]:
    return tuple(z(j) for j in range(1, r + 1))


def field_arith(a: RatFunc, b: RatFunc, op: str) -> RatFunc:
    ops = {"add": RatFunc.__add__, "sub": RatFunc.__sub__,
           "mul": RatFunc.__mul__, "div": RatFunc.__truediv__}
    return ops[op](RatFunc.coerce(a), RatFunc.coerce(b))


def canonical_equal(a, b) -> bool:
    return RatFunc.coerce(a) == RatFunc.coerce(b)


def evaluate(f: RatFunc, assignment: Mapping[str, Fraction | int]) -> Fraction:
    return RatFunc.coerce(f).evaluate(assignment)


def factor(f: RatFunc) -> tuple[Fraction, list[tuple[RatFunc, int]]]:
    """Factor num and den into irreducible integer polynomials.

    Returns (constant, [(factor, multiplicity)]) with negative multiplicities
    for denominator factors.
    """
    cn, fn = f.num.factor()
    cd, fd = f.den.factor()
    out = [(RatFunc(p, _ONE, _canonical=True), e) for p, e in fn]
    out += [(RatFunc(p, _ONE, _canonical=True), -e) for p, e in fd]
    return Fraction(int(cn), int(cd)), out


@dataclass(frozen=True)
class LaurentPoly:
    """Finitely many terms {exponent vector over VARIABLES: Fraction}, no zero coefficients."""

    terms: Mapping[tuple[int, ...], Fraction]

    def __post_init__(self):
        clean = {}
        for mon, c in self.terms.items():
            mon = tuple(mon) + (0,) * (NVARS - len(mon))
            if len(mon) != NVARS:
                raise ValueError(f"exponent vector {mon} longer than {NVARS}")
            c = Fraction(c)
            if c:
                clean[mon] = clean.get(mon, Fraction(0)) + c
        object.__setattr__(self, "terms", {m: c for m, c in clean.items() if c})

    def to_ratfunc(self) -> RatFunc:
        return reduce(lambda acc, kv: acc + RatFunc.monomial(kv[0], kv[1]), self.terms.items(), ZERO)


def laurent(terms: Mapping[tuple[int, ...], Fraction | int]) -> RatFunc:
    """Build a RatFunc from a Laurent polynomial {exponent vector: coefficient}."""
    return LaurentPoly(terms).to_ratfunc()
