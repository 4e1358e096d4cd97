"""Exact integer and rational linear algebra.

Everything here runs on arbitrary-precision Python ints and Fractions: row
Hermite and Smith normal forms with their transformation matrices, saturated
integer kernels (Gale duals), unimodular completions, and a small two-phase
rational simplex for cone membership and exact linear programs.  No floats
anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence


class ExactLAError(ValueError):
    """Domain error raised by the linear-algebra layer."""


class LpInfeasibleError(ExactLAError):
    """The LP has an empty feasible region."""


class LpUnboundedError(ExactLAError):
    """The LP objective is unbounded below on the feasible region."""


@dataclass(frozen=True)
class IntMat:
    """Dense integer matrix with immutable row-major entries."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows:
            raise ExactLAError("row count mismatch")
        for row in self.entries:
            if len(row) != self.cols:
                raise ExactLAError("column count mismatch")

    @staticmethod
    def from_rows(rows: Iterable[Iterable[int]]) -> "IntMat":
        data = tuple(tuple(int(x) for x in row) for row in rows)
        if not data:
            raise ExactLAError("empty matrix needs explicit shape; use zero()")
        return IntMat(len(data), len(data[0]), data)

    @staticmethod
    def identity(n: int) -> "IntMat":
        return IntMat(n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @staticmethod
    def zero(rows: int, cols: int) -> "IntMat":
        return IntMat(rows, cols, tuple((0,) * cols for _ in range(rows)))

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "IntMat":
        return IntMat(self.cols, self.rows, tuple(zip(*self.entries)) if self.entries else ())

    def mul(self, other: "IntMat") -> "IntMat":
        if self.cols != other.rows:
            raise ExactLAError("dimension mismatch in matrix product")
        bt = other.transpose().entries
        data = tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in bt) for row in self.entries
        )
        return IntMat(self.rows, other.cols, data)

    def mul_vec(self, vec: Sequence[int]) -> tuple[int, ...]:
        if len(vec) != self.cols:
            raise ExactLAError("dimension mismatch in matrix-vector product")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.entries)

    def hstack(self, other: "IntMat") -> "IntMat":
        if self.rows != other.rows:
            raise ExactLAError("row mismatch in hstack")
        return IntMat(self.rows, self.cols + other.cols,
                      tuple(r1 + r2 for r1, r2 in zip(self.entries, other.entries)))

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "IntMat":
        data = tuple(tuple(self.entries[i][j] for j in col_idx) for i in row_idx)
        return IntMat(len(row_idx), len(col_idx), data)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


@dataclass(frozen=True)
class RatVec:
    """Fixed-dimension vector of exact rationals."""

    entries: tuple[Fraction, ...]

    @staticmethod
    def of(values: Iterable) -> "RatVec":
        return RatVec(tuple(Fraction(v) for v in values))

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> Fraction:
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with x*a + y*b == g == gcd(a, b) >= 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def hnf(m: IntMat) -> tuple[IntMat, IntMat]:
    """Row Hermite normal form.

    Returns (H, T) with H == T*M, T unimodular, pivots positive, entries
    above each pivot reduced into [0, pivot), and zero rows at the bottom.
    """
    h = [list(row) for row in m.entries]
    t = [[1 if i == j else 0 for j in range(m.rows)] for i in range(m.rows)]
    pivot_row = 0
    pivot_cols = []
    for col in range(m.cols):
        # find a nonzero entry at or below pivot_row
        pivot = None
        for i in range(pivot_row, m.rows):
            if h[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != pivot_row:
            h[pivot_row], h[pivot] = h[pivot], h[pivot_row]
            t[pivot_row], t[pivot] = t[pivot], t[pivot_row]
        for i in range(pivot_row + 1, m.rows):
            while h[i][col] != 0:
                a, b = h[pivot_row][col], h[i][col]
                if a != 0 and b % a == 0:
                    q = b // a
                    for k in range(m.cols):
                        h[i][k] -= q * h[pivot_row][k]
                    for k in range(m.rows):
                        t[i][k] -= q * t[pivot_row][k]
                else:
                    g, x, y = _xgcd(a, b)
                    # unimodular 2x2 transform sending (a, b) -> (g, 0)
                    u, v = -(b // g), a // g
                    r1 = [x * h[pivot_row][k] + y * h[i][k] for k in range(m.cols)]
                    r2 = [u * h[pivot_row][k] + v * h[i][k] for k in range(m.cols)]
                    h[pivot_row], h[i] = r1, r2
                    s1 = [x * t[pivot_row][k] + y * t[i][k] for k in range(m.rows)]
                    s2 = [u * t[pivot_row][k] + v * t[i][k] for k in range(m.rows)]
                    t[pivot_row], t[i] = s1, s2
        if h[pivot_row][col] < 0:
            h[pivot_row] = [-x for x in h[pivot_row]]
            t[pivot_row] = [-x for x in t[pivot_row]]
        pivot_cols.append((pivot_row, col))
        pivot_row += 1
        if pivot_row == m.rows:
            break
    # reduce entries above pivots
    for prow, pcol in pivot_cols:
        p = h[prow][pcol]
        for i in range(prow):
            q = h[i][pcol] // p  # floor division puts entry into [0, p)
            if q:
                for k in range(m.cols):
                    h[i][k] -= q * h[prow][k]
                for k in range(m.rows):
                    t[i][k] -= q * t[prow][k]
    H = IntMat(m.rows, m.cols, tuple(tuple(row) for row in h))
    T = IntMat(m.rows, m.rows, tuple(tuple(row) for row in t))
    return H, T


def rank(m: IntMat) -> int:
    h, _ = hnf(m)
    return sum(1 for row in h.entries if any(x != 0 for x in row))


def det(m: IntMat) -> int:
    """Determinant via fraction-free Bareiss elimination."""
    if m.rows != m.cols:
        raise ExactLAError("determinant of non-square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = [list(row) for row in m.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def inverse_unimodular(m: IntMat) -> IntMat:
    """Exact inverse of an integer matrix with determinant +-1."""
    if m.rows != m.cols:
        raise ExactLAError("inverse of non-square matrix")
    n = m.rows
    a = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
         for i, row in enumerate(m.entries)]
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col] != 0), None)
        if piv is None:
            raise ExactLAError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for i in range(n):
            if i != col and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    out = []
    for i in range(n):
        row = []
        for j in range(n, 2 * n):
            v = a[i][j]
            if v.denominator != 1:
                raise ExactLAError("matrix is not unimodular")
            row.append(int(v))
        out.append(tuple(row))
    return IntMat(n, n, tuple(out))


def snf(m: IntMat) -> tuple[IntMat, IntMat, IntMat]:
    """Smith normal form.

    Returns (S, P, Q) with S == P*M*Q diagonal, nonnegative, and each
    diagonal entry dividing the next; P and Q unimodular.
    """
    a = [list(row) for row in m.entries]
    nr, nc = m.rows, m.cols
    p = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)]
    q = [[1 if i == j else 0 for j in range(nc)] for i in range(nc)]

    def row_op(i1, i2, x, y, u, v):
        for k in range(nc):
            a[i1][k], a[i2][k] = x * a[i1][k] + y * a[i2][k], u * a[i1][k] + v * a[i2][k]
        for k in range(nr):
            p[i1][k], p[i2][k] = x * p[i1][k] + y * p[i2][k], u * p[i1][k] + v * p[i2][k]

    def col_op(j1, j2, x, y, u, v):
        for row in a:
            row[j1], row[j2] = x * row[j1] + y * row[j2], u * row[j1] + v * row[j2]
        for row in q:
            row[j1], row[j2] = x * row[j1] + y * row[j2], u * row[j1] + v * row[j2]

    t = 0
    while t < min(nr, nc):
        # find a nonzero pivot in the remaining block
        piv = next(((i, j) for i in range(t, nr) for j in range(t, nc) if a[i][j] != 0), None)
        if piv is None:
            break
        i0, j0 = piv
        if i0 != t:
            row_op(t, i0, 0, 1, 1, 0)
        if j0 != t:
            col_op(t, j0, 0, 1, 1, 0)
        while True:
            # clear column t
            for i in range(t + 1, nr):
                if a[i][t]:
                    g, x, y = _xgcd(a[t][t], a[i][t])
                    row_op(t, i, x, y, -(a[i][t] // g), a[t][t] // g)
            # clear row t
            for j in range(t + 1, nc):
                if a[t][j]:
                    g, x, y = _xgcd(a[t][t], a[t][j])
                    col_op(t, j, x, y, -(a[t][j] // g), a[t][t] // g)
            if all(a[i][t] == 0 for i in range(t + 1, nr)):
                break
        # enforce divisibility of the remaining block by the pivot
        d = a[t][t]
        bad = next(((i, j) for i in range(t + 1, nr) for j in range(t + 1, nc)
                    if a[i][j] % d != 0), None)
        if bad is not None:
            row_op(t, bad[0], 1, 1, 0, 1)  # add offending row to pivot row
            continue  # redo the same t
        t += 1

    # signs: make all diagonal entries nonnegative
    for i in range(min(nr, nc)):
        if a[i][i] < 0:
            for k in range(nc):
                a[i][k] = -a[i][k]
            for k in range(nr):
                p[i][k] = -p[i][k]
    S = IntMat(nr, nc, tuple(tuple(row) for row in a))
    P = IntMat(nr, nr, tuple(tuple(row) for row in p))
    Q = IntMat(nc, nc, tuple(tuple(row) for row in q))
    return S, P, Q


def elementary_divisors(m: IntMat) -> tuple[int, ...]:
    s, _, _ = snf(m)
    return tuple(s.entries[i][i] for i in range(min(m.rows, m.cols)) if s.entries[i][i] != 0)


def gale_dual(a: IntMat) -> IntMat:
    """Basis of the saturated integer kernel of a full-row-rank matrix.

    Returns the (m-d) x m matrix D with A*D^T == 0 whose rows generate
    {x in Z^m : A x^T ... } exactly, i.e. Z^m / im(D^T) is torsion-free.
    """
    d, m = a.rows, a.cols
    h, t = hnf(a.transpose())
    r = sum(1 for row in h.entries if any(x != 0 for x in row))
    if r != d:
        raise ExactLAError("action not faithful")
    dual = IntMat(m - d, m, t.entries[r:])
    check = a.mul(dual.transpose())
    assert check.is_zero()
    return dual


def unimodular_completion(d: IntMat) -> IntMat:
    """Square unimodular matrix whose first rows(d) rows equal d.

    Requires the rows of d to generate a saturated sublattice; otherwise no
    completion exists and an error is raised.
    """
    k, m = d.rows, d.cols
    if k > m:
        raise ExactLAError("more rows than columns")
    h, t = hnf(d.transpose())
    top = IntMat(k, k, tuple(h.entries[i][:k] for i in range(k))) if h.rows >= k else None
    idlike = top is not None and top.entries == IntMat.identity(k).entries
    if not idlike or any(x != 0 for row in h.entries[k:] for x in row):
        raise ExactLAError("cokernel has torsion")
    u = inverse_unimodular(t).transpose()
    assert u.entries[:k] == d.entries
    return u


def solve_integer(a: IntMat, b: Sequence[int]) -> tuple[int, ...]:
    """One integer solution x of A x == b, or an error if none exists."""
    h, t = hnf(a.transpose())  # A^T = ...; columns of A relate via h = t * a^T
    # h = t * a^T  =>  a * t^T = h^T; solve h^T y = b by forward substitution
    r = sum(1 for row in h.entries if any(x != 0 for x in row))
    ht = h.transpose()  # a.cols x a.rows? h is (cols x rows) of a
    y = [Fraction(0)] * h.rows
    rows_done = 0
    # ht has shape (a.rows) x (a.cols); its nonzero columns are the first r
    resid = [Fraction(x) for x in b]
    for j in range(r):
        col = [ht.entries[i][j] for i in range(a.rows)]
        lead = next((i for i, v in enumerate(col) if v != 0), None)
        if lead is None:
            continue
        coef = Fraction(resid[lead], col[lead])
        y[j] = coef
        for i in range(a.rows):
            resid[i] -= coef * col[i]
        rows_done += 1
    if any(v != 0 for v in resid) or any(v.denominator != 1 for v in y):
        raise ExactLAError("no integer solution")
    tt = t.transpose()
    x = [sum(int(y[j]) * tt.entries[i][j] for j in range(len(y))) for i in range(a.cols)]
    assert a.mul_vec(x) == tuple(int(v) for v in b)
    return tuple(x)


# ---------------------------------------------------------------------------
# exact rational simplex
# ---------------------------------------------------------------------------

def _simplex_pivot(tab, basis, n_total):
    """Bland-rule pivoting on a tableau whose last row is the objective.

    tab rows: [a_1 ... a_n | b]; objective row: [c_1 ... c_n | -z].
    Minimizes; returns normally at optimum, raises LpUnboundedError.
    """
    m = len(tab) - 1
    while True:
        obj = tab[m]
        enter = next((j for j in range(n_total) if obj[j] < 0), None)
        if enter is None:
            return
        best = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][n_total] / tab[i][enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            raise LpUnboundedError("objective unbounded")
        _, leave = best
        piv = tab[leave][enter]
        tab[leave] = [x / piv for x in tab[leave]]
        for i in range(m + 1):
            if i != leave and tab[i][enter]:
                f = tab[i][enter]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[leave])]
        basis[leave] = enter


def _lp_solve(c: Sequence[Fraction], a_rows: list[list[Fraction]], b: list[Fraction]):
    """min c.x subject to rows(a).x == b, x >= 0.  Returns (value, x)."""
    m = len(a_rows)
    n = len(c)
    rows = [list(r) for r in a_rows]
    rhs = list(b)
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-x for x in rows[i]]
            rhs[i] = -rhs[i]
    # phase 1 tableau with artificial variables n..n+m-1
    tab = [rows[i] + [Fraction(1 if k == i else 0) for k in range(m)] + [rhs[i]]
           for i in range(m)]
    basis = [n + i for i in range(m)]
    obj = [Fraction(0)] * (n + m) + [Fraction(0)]
    for i in range(m):
        obj = [o - t for o, t in zip(obj, tab[i])]
    for j in range(n, n + m):
        obj[j] = Fraction(0)
    tab.append(obj)
    _simplex_pivot(tab, basis, n + m)
    if -tab[m][n + m] != 0:
        raise LpInfeasibleError("no feasible point")
    # drive artificials out of the basis, dropping redundant rows
    keep = []
    for i in range(m):
        if basis[i] >= n:
            piv = next((j for j in range(n) if tab[i][j] != 0), None)
            if piv is None:
                continue  # redundant constraint
            f = tab[i][piv]
            tab[i] = [x / f for x in tab[i]]
            for k in range(len(tab)):
                if k != i and tab[k][piv]:
                    g = tab[k][piv]
                    tab[k] = [x - g * y for x, y in zip(tab[k], tab[i])]
            basis[i] = piv
        keep.append(i)
    rows2 = [[tab[i][j] for j in range(n)] + [tab[i][n + m]] for i in keep]
    basis2 = [basis[i] for i in keep]
    obj2 = [Fraction(x) for x in c] + [Fraction(0)]
    for i, bi in enumerate(basis2):
        if obj2[bi]:
            f = obj2[bi]
            obj2 = [x - f * y for x, y in zip(obj2, rows2[i])]
    tab2 = rows2 + [obj2]
    _simplex_pivot(tab2, basis2, n)
    value = -tab2[len(basis2)][n]
    x = [Fraction(0)] * n
    for i, bi in enumerate(basis2):
        x[bi] = tab2[i][n]
    return value, x


def lp_minimize(objective: RatVec, a: IntMat, b: RatVec) -> Fraction:
    """Exact minimum of objective.u over {u >= 0 : A u == b}.

    Raises LpInfeasibleError / LpUnboundedError accordingly.
    """
    if len(objective) != a.cols or len(b) != a.rows:
        raise ExactLAError("dimension mismatch in LP")
    c = list(objective.entries)
    rows = [[Fraction(x) for x in row] for row in a.entries]
    value, _ = _lp_solve(c, rows, list(b.entries))
    return value


def lp_feasible(cone_generators: IntMat, target: RatVec) -> bool:
    """Exact membership of target in the cone spanned by the columns."""
    if len(target) != cone_generators.rows:
        raise ExactLAError("dimension mismatch in cone membership")
    c = [Fraction(0)] * cone_generators.cols
    rows = [[Fraction(x) for x in row] for row in cone_generators.entries]
    try:
        _lp_solve(c, rows, list(target.entries))
        return True
    except LpInfeasibleError:
        return False


def lp_maximize(objective: RatVec, a: IntMat, b: RatVec) -> Fraction:
    neg = RatVec(tuple(-x for x in objective.entries))
    return -lp_minimize(neg, a, b)


# ----- text / JSON formats -------------------------------------------------

def matrix_to_text(m: IntMat) -> str:
    lines = [f"{m.rows} {m.cols}"]
    lines += [" ".join(str(x) for x in row) for row in m.entries]
    return "\n".join(lines) + "\n"


def matrix_from_text(text: str) -> IntMat:
    toks = text.split()
    if len(toks) < 2:
        raise ExactLAError("matrix text too short")
    r, c = int(toks[0]), int(toks[1])
    vals = [int(x) for x in toks[2:]]
    if len(vals) != r * c:
        raise ExactLAError("matrix text entry count mismatch")
    return IntMat(r, c, tuple(tuple(vals[i * c:(i + 1) * c]) for i in range(r)))


def matrix_to_json(m: IntMat) -> list[list[str]]:
    return [[str(x) for x in row] for row in m.entries]


def matrix_from_json(data: Sequence[Sequence]) -> IntMat:
    return IntMat.from_rows([[int(x) for x in row] for row in data])
