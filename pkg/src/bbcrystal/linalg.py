"""Exact linear algebra over a field of Python objects.

Works with any scalar type supporting +, -, *, /, == and truthiness as the zero
test (RatFunc and Fraction both qualify).  Matrices are lists of row lists;
vectors are lists.  Everything is small and dense: desk-scale weight spaces stay
well under a hundred dimensions, so plain Gaussian elimination with exact
division is the right tool.
"""

from __future__ import annotations


class RankDeficient(ArithmeticError):
    """A spanning-set or full-rank precondition failed."""


def zeros(n, m, zero):
    return [[zero] * m for _ in range(n)]


def identity(n, zero, one):
    out = zeros(n, n, zero)
    for i in range(n):
        out[i][i] = one
    return out


def mat_mul(a, b):
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = []
        ai = a[i]
        for j in range(m):
            acc = None
            for t in range(k):
                if ai[t]:
                    term = ai[t] * b[t][j]
                    acc = term if acc is None else acc + term
            row.append(acc if acc is not None else ai[0] * 0)
        out.append(row)
    return out


def mat_vec(a, v):
    out = []
    for row in a:
        acc = None
        for c, x in zip(row, v):
            if c and x:
                term = c * x
                acc = term if acc is None else acc + term
        out.append(acc if acc is not None else row[0] * 0)
    return out


def transpose(a):
    return [list(col) for col in zip(*a)] if a else []


def mat_mul_dims(a, b, n, k, m, zero):
    """a (n x k) times b (k x m) with explicit dimensions, safe when k = 0."""
    out = [[zero] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            x = ai[t]
            if x:
                bt = b[t]
                for j in range(m):
                    if bt[j]:
                        oi[j] = oi[j] + x * bt[j]
    return out


def mat_vec_dims(a, v, n, k, zero):
    """a (n x k) times v (length k) with explicit dimensions, safe when k = 0."""
    out = [zero] * n
    for i in range(n):
        ai = a[i]
        acc = zero
        for t in range(k):
            if ai[t] and v[t]:
                acc = acc + ai[t] * v[t]
        out[i] = acc
    return out


def vec_add(u, v):
    return [x + y for x, y in zip(u, v)]


def vec_sub(u, v):
    return [x - y for x, y in zip(u, v)]


def vec_scale(c, v):
    return [c * x for x in v]


def is_zero_vec(v):
    return all(not x for x in v)


def rref(mat):
    """Reduced row echelon form; returns (rows, pivot_columns) without mutation."""
    rows = [list(r) for r in mat]
    n = len(rows)
    m = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(m):
        pr = None
        for i in range(r, n):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    return rows[:r], pivots


def rank(mat):
    if not mat:
        return 0
    return len(rref(mat)[0])


def solve(mat, rhs):
    """Solve mat @ x = rhs; returns x or None if inconsistent.

    Requires full column rank (raises RankDeficient otherwise), so the solution
    is unique when it exists.
    """
    n = len(mat)
    m = len(mat[0]) if mat else 0
    aug = [list(mat[i]) + [rhs[i]] for i in range(n)]
    rows, pivots = rref(aug)
    if m in pivots:
        return None
    if len([p for p in pivots if p < m]) < m:
        raise RankDeficient("coefficient matrix does not have full column rank")
    zero = rhs[0] * 0 if rhs else None
    x = [zero] * m
    for row, p in zip(rows, pivots):
        x[p] = row[m]
    return x


def kernel(mat):
    """Basis of the null space of mat as a list of vectors."""
    if not mat:
        return []
    m = len(mat[0])
    zero = mat[0][0] * 0
    one = zero + 1
    rows, pivots = rref(mat)
    pivset = set(pivots)
    free = [c for c in range(m) if c not in pivset]
    basis = []
    for f in free:
        v = [zero] * m
        v[f] = one
        for row, p in zip(rows, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


class Subspace:
    """A subspace of k^n stored as an rref basis of row vectors."""

    def __init__(self, n, vectors=(), zero=None):
        self.n = n
        self.zero = zero
        self.rows = []
        self.pivots = []
        for v in vectors:
            self.add(v)

    @property
    def dim(self):
        return len(self.rows)

    def _reduce(self, v):
        v = list(v)
        for row, p in zip(self.rows, self.pivots):
            if v[p]:
                f = v[p]
                v = [x - f * y for x, y in zip(v, row)]
        return v

    def add(self, v):
        """Insert a vector; returns True if it enlarged the subspace."""
        v = self._reduce(v)
        p = next((i for i, x in enumerate(v) if x), None)
        if p is None:
            return False
        pv = v[p]
        v = [x / pv for x in v]
        # back-substitute into existing rows to keep rref form
        for i, row in enumerate(self.rows):
            if row[p]:
                f = row[p]
                self.rows[i] = [x - f * y for x, y in zip(row, v)]
        at = next((k for k, q in enumerate(self.pivots) if q > p), len(self.pivots))
        self.rows.insert(at, v)
        self.pivots.insert(at, p)
        return True

    def contains(self, v):
        return is_zero_vec(self._reduce(v))

    def contains_all(self, vectors):
        return all(self.contains(v) for v in vectors)

    def copy(self):
        out = Subspace(self.n, (), self.zero)
        out.rows = [list(r) for r in self.rows]
        out.pivots = list(self.pivots)
        return out

    def sum(self, other):
        out = self.copy()
        for r in other.rows:
            out.add(r)
        return out

    def intersect(self, other):
        """Intersection via the kernel of the stacked basis matrix."""
        if not self.rows or not other.rows:
            return Subspace(self.n, (), self.zero)
        cols = [list(r) for r in self.rows] + [list(r) for r in other.rows]
        mat = transpose(cols)  # n x (d1 + d2), columns are basis vectors
        ker = kernel(mat)
        d1 = len(self.rows)
        out = Subspace(self.n, (), self.zero)
        for k in ker:
            acc = None
            for j in range(d1):
                if k[j]:
                    term = vec_scale(k[j], self.rows[j])
                    acc = term if acc is None else vec_add(acc, term)
            if acc is not None and not is_zero_vec(acc):
                out.add(acc)
        return out

    def basis_vectors(self):
        return [list(r) for r in self.rows]

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.n == other.n
            and self.dim == other.dim
            and all(other.contains(r) for r in self.rows)
        )


class QuotientMap:
    """Coordinates on k^n / W using the non-pivot coordinates of W's rref basis."""

    def __init__(self, sub: Subspace):
        self.sub = sub
        self.coords = [i for i in range(sub.n) if i not in set(sub.pivots)]

    @property
    def dim(self):
        return len(self.coords)

    def project(self, v):
        red = self.sub._reduce(v)
        return [red[i] for i in self.coords]


def invert(mat):
    """Inverse of a square matrix; raises RankDeficient if singular."""
    n = len(mat)
    if n == 0:
        return []
    zero = mat[0][0] * 0
    one = zero + 1
    aug = [list(mat[i]) for i in range(n)]
    for i in range(n):
        aug[i] = aug[i] + [one if j == i else zero for j in range(n)]
    rows, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(rows) != n:
        raise RankDeficient("matrix is singular")
    return [row[n:] for row in rows]


def det(mat):
    """Determinant by fraction-free-ish elimination with exact division."""
    n = len(mat)
    if n == 0:
        return None
    a = [list(r) for r in mat]
    zero = a[0][0] * 0
    sign = 1
    acc = None
    for c in range(n):
        pr = next((i for i in range(c, n) if a[i][c]), None)
        if pr is None:
            return zero
        if pr != c:
            a[c], a[pr] = a[pr], a[c]
            sign = -sign
        pv = a[c][c]
        acc = pv if acc is None else acc * pv
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] / pv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return acc if sign > 0 else -acc
