"""Dense matrices over RatFunc with exact elimination."""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from .coeff import ONE, ZERO, RatFunc


class Mat:
    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Sequence[Sequence], ncols: int | None = None):
        self.rows = [[RatFunc.coerce(x) for x in row] for row in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else (ncols or 0)

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> "Mat":
        m = n if m is None else m
        out = cls.__new__(cls)
        out.rows = [[ZERO] * m for _ in range(n)]
        out.nrows, out.ncols = n, m
        return out

    @classmethod
    def identity(cls, n: int) -> "Mat":
        out = cls.zeros(n)
        for i in range(n):
            out.rows[i][i] = ONE
        return out

    @classmethod
    def diag(cls, entries: Iterable) -> "Mat":
        entries = list(entries)
        out = cls.zeros(len(entries))
        for i, x in enumerate(entries):
            out.rows[i][i] = RatFunc.coerce(x)
        return out

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int | None = None) -> "Mat":
        if not cols:
            return cls.zeros(nrows or 0, 0)
        return cls([list(r) for r in zip(*cols)])

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __setitem__(self, ij, value):
        i, j = ij
        self.rows[i][j] = RatFunc.coerce(value)

    def copy(self) -> "Mat":
        out = Mat.zeros(self.nrows, self.ncols)
        out.rows = [list(r) for r in self.rows]
        return out

    def column(self, j: int) -> list[RatFunc]:
        return [row[j] for row in self.rows]

    def columns(self) -> list[list[RatFunc]]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "Mat":
        out = Mat.zeros(self.ncols, self.nrows)
        out.rows = [list(c) for c in zip(*self.rows)] if self.nrows else [[] for _ in range(self.ncols)]
        return out

    T = property(transpose)

    # arithmetic -----------------------------------------------------------

    def __add__(self, other: "Mat") -> "Mat":
        _check_same(self, other)
        out = Mat.zeros(self.nrows, self.ncols)
        out.rows = [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        return out

    def __sub__(self, other: "Mat") -> "Mat":
        _check_same(self, other)
        out = Mat.zeros(self.nrows, self.ncols)
        out.rows = [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        return out

    def __neg__(self) -> "Mat":
        return self.scale(-ONE)

    def scale(self, c) -> "Mat":
        c = RatFunc.coerce(c)
        out = Mat.zeros(self.nrows, self.ncols)
        out.rows = [[c * a if a else ZERO for a in r] for r in self.rows]
        return out

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = Mat.zeros(self.nrows, other.ncols)
        sparse_other = [[(j, b) for j, b in enumerate(row) if b] for row in other.rows]
        for i, row in enumerate(self.rows):
            acc: dict[int, RatFunc] = {}
            for k, a in enumerate(row):
                if not a:
                    continue
                for j, b in sparse_other[k]:
                    acc[j] = acc[j] + a * b if j in acc else a * b
            target = out.rows[i]
            for j, v in acc.items():
                target[j] = v
        return out

    def apply(self, vec: Sequence[RatFunc]) -> list[RatFunc]:
        support = [(j, b) for j, b in enumerate(vec) if b]
        out = []
        for row in self.rows:
            acc = ZERO
            for j, b in support:
                a = row[j]
                if a:
                    acc = acc + a * b
            out.append(acc)
        return out

    def __pow__(self, e: int) -> "Mat":
        if e < 0:
            return self.inverse() ** (-e)
        out = Mat.identity(self.nrows)
        for _ in range(e):
            out = out @ self
        return out

    def kron(self, other: "Mat") -> "Mat":
        out = Mat.zeros(self.nrows * other.nrows, self.ncols * other.ncols)
        for i, row in enumerate(self.rows):
            for j, a in enumerate(row):
                if not a:
                    continue
                for k, orow in enumerate(other.rows):
                    target = out.rows[i * other.nrows + k]
                    for l, b in enumerate(orow):
                        if b:
                            target[j * other.ncols + l] = a * b
        return out

    def map(self, fn: Callable[[RatFunc], RatFunc]) -> "Mat":
        out = Mat.zeros(self.nrows, self.ncols)
        out.rows = [[fn(a) if a else ZERO for a in r] for r in self.rows]
        return out

    def subs(self, mapping) -> "Mat":
        return self.map(lambda a: a.subs(mapping))

    # predicates -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and all(a == b for r, s in zip(self.rows, other.rows) for a, b in zip(r, s))

    __hash__ = None

    def is_zero(self) -> bool:
        return all(not a for r in self.rows for a in r)

    def is_diagonal(self) -> bool:
        return all(not a for i, r in enumerate(self.rows) for j, a in enumerate(r) if i != j)

    def nonzero_entries(self):
        for i, r in enumerate(self.rows):
            for j, a in enumerate(r):
                if a:
                    yield i, j, a

    # elimination ----------------------------------------------------------

    def rref(self, column_order: Sequence[int] | None = None) -> tuple["Mat", list[int]]:
        """Reduced row echelon form; pivots are searched in `column_order`."""
        a = [list(r) for r in self.rows]
        order = list(range(self.ncols)) if column_order is None else list(column_order)
        pivots: list[int] = []
        row = 0
        for col in order:
            if row >= len(a):
                break
            candidates = [i for i in range(row, len(a)) if a[i][col]]
            if not candidates:
                continue
            piv = min(candidates, key=lambda i: _size(a[i][col]))
            a[row], a[piv] = a[piv], a[row]
            inv = a[row][col].inverse()
            a[row] = [x * inv if x else ZERO for x in a[row]]
            nz = [(j, x) for j, x in enumerate(a[row]) if x]
            for i in range(len(a)):
                if i != row and a[i][col]:
                    f = a[i][col]
                    r_i = a[i]
                    for j, x in nz:
                        r_i[j] = r_i[j] - f * x
            pivots.append(col)
            row += 1
        out = Mat.zeros(len(a), self.ncols)
        out.rows = a
        return out, pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> list[list[RatFunc]]:
        """Basis of {x : self @ x = 0}, one vector per free column."""
        red, pivots = self.rref()
        free = [j for j in range(self.ncols) if j not in set(pivots)]
        basis = []
        for f in free:
            vec = [ZERO] * self.ncols
            vec[f] = ONE
            for i, p in enumerate(pivots):
                vec[p] = -red.rows[i][f]
            basis.append(vec)
        return basis

    def det(self) -> RatFunc:
        if self.nrows != self.ncols:
            raise ValueError("det of non-square matrix")
        a = [list(r) for r in self.rows]
        n = self.nrows
        d = ONE
        for col in range(n):
            candidates = [i for i in range(col, n) if a[i][col]]
            if not candidates:
                return ZERO
            piv = min(candidates, key=lambda i: _size(a[i][col]))
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                d = -d
            p = a[col][col]
            d = d * p
            inv = p.inverse()
            for i in range(col + 1, n):
                if a[i][col]:
                    f = a[i][col] * inv
                    for j in range(col, n):
                        if a[col][j]:
                            a[i][j] = a[i][j] - f * a[col][j]
        return d

    def inverse(self) -> "Mat":
        n = self.nrows
        if n != self.ncols:
            raise ValueError("inverse of non-square matrix")
        aug = Mat([list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(self.rows)]) if n else Mat.zeros(0)
        red, pivots = aug.rref(column_order=range(n))
        if pivots != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        out = Mat.zeros(n)
        out.rows = [r[n:] for r in red.rows]
        return out

    def __repr__(self):
        return "Mat([" + ",\n     ".join("[" + ", ".join(str(a) for a in r) + "]" for r in self.rows) + "])"

    def nvars_used(self) -> int:
        return max([1] + [a.nvars_used() for r in self.rows for a in r])

    def to_json(self, nvars: int | None = None) -> list[list[dict]]:
        """Entries share one exponent-vector width so the document is uniform."""
        nvars = self.nvars_used() if nvars is None else nvars
        return [[a.to_json(nvars) for a in r] for r in self.rows]


def _size(x: RatFunc) -> int:
    return len(x.num.monoms()) + len(x.den.monoms())


def _check_same(a: Mat, b: Mat) -> None:
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch {a.shape} vs {b.shape}")


def block_diag(blocks: Sequence[Mat]) -> Mat:
    n = sum(b.nrows for b in blocks)
    m = sum(b.ncols for b in blocks)
    out = Mat.zeros(n, m)
    i0 = j0 = 0
    for b in blocks:
        for i, j, a in b.nonzero_entries():
            out.rows[i0 + i][j0 + j] = a
        i0 += b.nrows
        j0 += b.ncols
    return out


def solve_commutant(pairs: Sequence[tuple[Mat, Mat]], n_src: int, n_tgt: int,
                    allowed: Callable[[int, int], bool] | None = None) -> list[Mat]:
    """Basis of {A (n_tgt x n_src) : A @ S = T @ A for every (S, T) in pairs}.

    `allowed(i, j)` may declare entries known to vanish (e.g. weight mismatch),
    which shrinks the unknown set before elimination.
    """
    unknowns = [(i, j) for i in range(n_tgt) for j in range(n_src) if allowed is None or allowed(i, j)]
    index = {ij: k for k, ij in enumerate(unknowns)}
    equations = []
    for src, tgt in pairs:
        # (A S)[i][l] = sum_j A[i][j] S[j][l];  (T A)[i][l] = sum_k T[i][k] A[k][l]
        src_cols = [[(j, s) for j, s in enumerate(src.column(l)) if s] for l in range(src.ncols)]
        tgt_rows = [[(k, t) for k, t in enumerate(row) if t] for row in tgt.rows]
        for i in range(n_tgt):
            for l in range(n_src):
                eq: dict[int, RatFunc] = {}
                for j, s in src_cols[l]:
                    k = index.get((i, j))
                    if k is not None:
                        eq[k] = eq.get(k, ZERO) + s
                for kk, t in tgt_rows[i]:
                    k = index.get((kk, l))
                    if k is not None:
                        eq[k] = eq.get(k, ZERO) - t
                eq = {k: v for k, v in eq.items() if v}
                if eq:
                    equations.append(eq)
    if not unknowns:
        return []
    system = Mat.zeros(len(equations), len(unknowns))
    for r, eq in enumerate(equations):
        for k, v in eq.items():
            system.rows[r][k] = v
    out = []
    for vec in system.nullspace():
        a = Mat.zeros(n_tgt, n_src)
        for (i, j), x in zip(unknowns, vec):
            a.rows[i][j] = x
        out.append(a)
    return out
