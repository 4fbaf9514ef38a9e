"""Small exact linear algebra toolbox.

Matrices over an exact field are dense lists of lists; module action
matrices, which are very sparse, are lists of row dicts.  Scalars only
need +, -, *, / and truthiness (zero test), so the same routines serve
Q(i)(s), its radical extensions and Python complex (the latter via the
numeric variants at the bottom).
"""

from __future__ import annotations


def zeros(n, m, zero):
    return [[zero] * m for _ in range(n)]


def identity(n, one, zero):
    out = [[zero] * n for _ in range(n)]
    for i in range(n):
        out[i][i] = one
    return out


def mat_mul(a, b, zero):
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    out = [[zero] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            x = ai[t]
            if not x:
                continue
            bt = b[t]
            for j in range(m):
                y = bt[j]
                if y:
                    oi[j] = oi[j] + x * y
    return out

def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    return [[c * x for x in row] for row in a]


def mat_vec(a, v, zero):
    out = []
    for row in a:
        acc = zero
        for x, y in zip(row, v):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return out


def is_zero_matrix(a):
    return all(not x for row in a for x in row)


def mat_eq(a, b):
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def transpose(a):
    return [list(col) for col in zip(*a)]


def kron(a, b, zero):
    """Kronecker product; index (i1*n2+i2, j1*m2+j2)."""
    n2 = len(b)
    m2 = len(b[0]) if b else 0
    out = []
    for ra in a:
        for rb in b:
            row = []
            for x in ra:
                if x:
                    row.extend(x * y if y else zero for y in rb)
                else:
                    row.extend([zero] * m2)
            out.append(row)
    return out


def _entry_size(x):
    num = getattr(x, "num", None)
    if num is not None:
        return len(num.c) + len(x.den.c)
    return 1


def rref(mat, one):
    """Reduced row echelon form (in place on a copy); returns (rref, pivots).

    Pivots favour structurally small entries, which matters a great deal
    for matrices over the rational function field.
    """
    a = [row[:] for row in mat]
    n = len(a)
    m = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(m):
        pivot = None
        best = None
        for i in range(r, n):
            if a[i][c]:
                size = _entry_size(a[i][c])
                if best is None or size < best:
                    pivot = i
                    best = size
                    if size <= 2:
                        break
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = one / a[r][c]
        a[r] = [inv * x for x in a[r]]
        for i in range(n):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    return a, pivots


def rank(mat, one):
    if not mat or not mat[0]:
        return 0
    _, pivots = rref(mat, one)
    return len(pivots)


def nullspace(mat, one, zero):
    """Basis of the right kernel, one vector per free column."""
    if not mat:
        return []
    m = len(mat[0])
    a, pivots = rref(mat, one)
    pivset = set(pivots)
    basis = []
    for c in range(m):
        if c in pivset:
            continue
        v = [zero] * m
        v[c] = one
        for r, pc in enumerate(pivots):
            v[pc] = zero - a[r][c]
        basis.append(v)
    return basis


def solve(mat, rhs, one, zero):
    """One solution of mat @ x = rhs, or None if inconsistent."""
    n = len(mat)
    m = len(mat[0]) if mat else 0
    aug = [mat[i][:] + [rhs[i]] for i in range(n)]
    a, pivots = rref(aug, one)
    x = [zero] * m
    for r, pc in enumerate(pivots):
        if pc == m:
            return None
        x[pc] = a[r][m]
    return x


def invert(mat, one, zero):
    n = len(mat)
    aug = [mat[i][:] + identity(n, one, zero)[i] for i in range(n)]
    a, pivots = rref(aug, one)
    if pivots != list(range(n)):
        raise ZeroDivisionError("matrix not invertible")
    return [row[n:] for row in a]


def solve_square_many(mat, rhs_list, one, zero):
    """Solutions of mat @ x = rhs for an invertible square mat and many rhs."""
    n = len(mat)
    aug = [mat[i][:] + [rhs[i] for rhs in rhs_list] for i in range(n)]
    a, pivots = rref(aug, one)
    if pivots != list(range(n)):
        raise ZeroDivisionError("matrix not invertible")
    return [[a[r][n + j] for r in range(n)] for j in range(len(rhs_list))]


def det_bareiss(mat, one, exact_div):
    """Fraction-free determinant over an integral domain.

    exact_div(a, b) must return the exact quotient a/b (b divides a).
    """
    a = [row[:] for row in mat]
    n = len(a)
    if n == 0:
        return one
    sign = 1
    prev = one
    for k in range(n - 1):
        if not a[k][k]:
            swap = None
            for i in range(k + 1, n):
                if a[i][k]:
                    swap = i
                    break
            if swap is None:
                return one - one  # zero determinant
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = exact_div(num, prev)
            a[i][k] = None
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return d if sign == 1 else -d


# -- sparse rows ------------------------------------------------------------

def srows_mul(a, b):
    """Product of sparse matrices given as lists of {col: scalar} rows."""
    out = []
    for row in a:
        acc = {}
        for k, x in row.items():
            if not x:
                continue
            for j, y in b[k].items():
                if not y:
                    continue
                v = acc.get(j)
                acc[j] = x * y if v is None else v + x * y
        out.append({j: v for j, v in acc.items() if v})
    return out


def srows_to_dense(rows, m, zero):
    out = []
    for row in rows:
        r = [zero] * m
        for j, v in row.items():
            r[j] = v
        out.append(r)
    return out


def dense_to_srows(mat):
    return [{j: v for j, v in enumerate(row) if v} for row in mat]


# -- sparse operators in column form ----------------------------------------

class ColMat:
    """Sparse linear operator as a list of column dicts {row: scalar}.

    Shape is (nrows, ncols); columns give the action on basis vectors,
    which is the natural form for module generators.
    """

    __slots__ = ("nrows", "cols")

    def __init__(self, nrows, cols):
        self.nrows = nrows
        self.cols = [dict(c) for c in cols]

    @property
    def ncols(self):
        return len(self.cols)

    @staticmethod
    def zero(nrows, ncols):
        return ColMat(nrows, [{} for _ in range(ncols)])

    @staticmethod
    def identity(n, one):
        return ColMat(n, [{i: one} for i in range(n)])

    @staticmethod
    def diagonal(entries):
        return ColMat(len(entries), [{i: v} if v else {} for i, v in enumerate(entries)])

    @staticmethod
    def from_dense(mat):
        nrows = len(mat)
        ncols = len(mat[0]) if mat else 0
        cols = [{r: mat[r][c] for r in range(nrows) if mat[r][c]} for c in range(ncols)]
        return ColMat(nrows, cols)

    def to_dense(self, zero):
        out = [[zero] * self.ncols for _ in range(self.nrows)]
        for c, col in enumerate(self.cols):
            for r, v in col.items():
                out[r][c] = v
        return out

    def apply(self, vec):
        """vec: {index: scalar} -> {index: scalar}."""
        out = {}
        for c, x in vec.items():
            if not x:
                continue
            for r, v in self.cols[c].items():
                w = out.get(r)
                w = v * x if w is None else w + v * x
                if w:
                    out[r] = w
                elif r in out:
                    del out[r]
        return out

    def __mul__(self, other):
        if not isinstance(other, ColMat):
            return NotImplemented
        return ColMat(self.nrows, [self.apply(col) for col in other.cols])

    def __add__(self, other):
        cols = []
        for c1, c2 in zip(self.cols, other.cols):
            d = dict(c1)
            for r, v in c2.items():
                w = d.get(r)
                w = v if w is None else w + v
                if w:
                    d[r] = w
                elif r in d:
                    del d[r]
            cols.append(d)
        return ColMat(self.nrows, cols)

    def __sub__(self, other):
        return self + other.scale_all(-1)

    def scale_all(self, c):
        return ColMat(self.nrows, [{r: c * v for r, v in col.items()} for col in self.cols])

    def scale_columns(self, scalars):
        return ColMat(self.nrows, [{r: v * s for r, v in col.items()} if s else {}
                                   for col, s in zip(self.cols, scalars)])

    def scale_rows(self, scalars):
        return ColMat(self.nrows, [{r: scalars[r] * v for r, v in col.items() if scalars[r]}
                                   for col in self.cols])

    def is_zero(self):
        return all(not col for col in self.cols)

    def __eq__(self, other):
        if not isinstance(other, ColMat):
            return NotImplemented
        if self.nrows != other.nrows or self.ncols != other.ncols:
            return False
        return (self - other).is_zero()

    def __hash__(self):
        raise TypeError("ColMat is unhashable")

    def kron(self, other):
        """Kronecker product; index (i, j) -> i * other.nrows + j."""
        n2 = other.nrows
        cols = []
        for c1 in self.cols:
            for c2 in other.cols:
                col = {}
                for r1, v1 in c1.items():
                    for r2, v2 in c2.items():
                        col[r1 * n2 + r2] = v1 * v2
                cols.append(col)
        return ColMat(self.nrows * n2, cols)

    def transpose(self):
        cols = [{} for _ in range(self.nrows)]
        for c, col in enumerate(self.cols):
            for r, v in col.items():
                cols[r][c] = v
        return ColMat(self.ncols, cols)

    def trace(self, zero):
        acc = zero
        for i, col in enumerate(self.cols):
            v = col.get(i)
            if v:
                acc = acc + v
        return acc

    def power(self, k, one):
        out = ColMat.identity(self.ncols, one)
        base = self
        while k:
            if k & 1:
                out = base * out
            base = base * base if k > 1 else base
            k >>= 1
        return out


# -- numeric (complex) variants --------------------------------------------

def numeric_rank(mat, tol_factor=1e-8):
    import numpy as np

    a = np.array(mat, dtype=complex)
    if a.size == 0:
        return 0
    sv = np.linalg.svd(a, compute_uv=False)
    if len(sv) == 0 or sv[0] == 0:
        return 0
    return int((sv > tol_factor * sv[0]).sum())
