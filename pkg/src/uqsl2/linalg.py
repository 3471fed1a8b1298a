"""Exact dense and sparse linear algebra over Q(q) (or any exact field type
supporting +, -, *, /, bool and ==).

Matrices are lists of row lists; vectors are lists or tuples.  Everything is
fraction-free in spirit but uses honest field division, since division in
Q(q) is cheap at the sizes handled here (dimension <= a few hundred).
"""

from __future__ import annotations

from fractions import Fraction


class _RationalField:
    """Adapter so the generic routines work over plain Fractions too."""

    @staticmethod
    def zero():
        return Fraction(0)

    @staticmethod
    def one():
        return Fraction(1)


QQ = _RationalField()


def zeros(fld, m, n):
    z = fld.zero()
    return [[z for _ in range(n)] for _ in range(m)]


def identity(fld, n):
    A = zeros(fld, n, n)
    one = fld.one()
    for i in range(n):
        A[i][i] = one
    return A


def mat_mul(A, B):
    n, k, m = len(A), len(B), len(B[0])
    assert len(A[0]) == k
    out = []
    for i in range(n):
        Ai = A[i]
        row = []
        for j in range(m):
            acc = None
            for t in range(k):
                a = Ai[t]
                if a:
                    term = a * B[t][j]
                    acc = term if acc is None else acc + term
            if acc is None:
                acc = Ai[0] * 0 if Ai else 0
            row.append(acc)
        out.append(row)
    return out


def mat_vec(A, v):
    return [row_dot(row, v) for row in A]


def row_dot(row, v):
    acc = None
    for a, b in zip(row, v):
        if a and b:
            term = a * b
            acc = term if acc is None else acc + term
    if acc is None:
        return row[0] * 0
    return acc


def mat_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(c, A):
    return [[c * a for a in row] for row in A]


def transpose(A):
    return [list(col) for col in zip(*A)]


def dagger(A):
    """Conjugate transpose (entries must provide .conj())."""
    return [[a.conj() for a in col] for col in zip(*A)]


def mat_eq(A, B):
    return all(a == b for ra, rb in zip(A, B) for a, b in zip(ra, rb))


def is_zero_matrix(A):
    return all(not a for row in A for a in row)


def kron(A, B):
    """Kronecker product, row-major over (index_A, index_B)."""
    out = []
    for ra in A:
        for rb in B:
            row = []
            for a in ra:
                for b in rb:
                    row.append(a * b)
            out.append(row)
    return out


def mat_pow(A, n):
    assert n >= 0
    size = len(A)
    result = None
    base = [row[:] for row in A]
    while n:
        if n & 1:
            result = base if result is None else mat_mul(result, base)
        n >>= 1
        if n:
            base = mat_mul(base, base)
    if result is None:
        raise ValueError("mat_pow with n=0 needs a field; use identity()")
    return result


def rref(rows):
    """Reduced row echelon form.  Returns (echelon_rows, pivot_cols); zero
    rows are dropped.  Input rows are not modified."""
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = rows[r][c]
        rows[r] = [x / inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(A):
    return len(rref(A)[0])


def nullspace(A, fld):
    """Basis of the right kernel {v : A v = 0}, echelonized over free columns."""
    if not A:
        return []
    ech, pivots = rref(A)
    ncols = len(A[0])
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    zero, one = fld.zero(), fld.one()
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for r, c in enumerate(pivots):
            v[c] = -ech[r][f]
        basis.append(v)
    return basis


def solve_coords(ech, pivots, v):
    """Coordinates of v in the row span of an rref basis, or None if outside."""
    v = list(v)
    coords = []
    for r, c in enumerate(pivots):
        f = v[c]
        coords.append(f)
        if f:
            v = [x - f * y for x, y in zip(v, ech[r])]
    if any(x for x in v):
        return None
    return coords


def span_echelon(vectors):
    """Echelonized basis of the span of the given vectors (as rows)."""
    return rref(list(vectors))[0]


def subspace_equal(vs1, vs2):
    e1, p1 = rref(list(vs1))
    e2, p2 = rref(list(vs2))
    return p1 == p2 and all(tuple(a) == tuple(b) for a, b in zip(e1, e2))


def subspace_contains(vs, v):
    ech, piv = rref(list(vs))
    return solve_coords(ech, piv, v) is not None


def mat_inverse(A, fld):
    n = len(A)
    aug = [list(A[i]) + identity(fld, n)[i] for i in range(n)]
    ech, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in ech]


def eigenspace(A, mu, fld):
    n = len(A)
    M = [[A[i][j] - mu if i == j else A[i][j] for j in range(n)] for i in range(n)]
    return nullspace(M, fld)


# -- sparse elimination ------------------------------------------------------
#
# Rows are dicts {column: coefficient}; used for the large homogeneous
# systems coming from invariance conditions, where each row has only a
# handful of entries.


def sparse_nullspace(rows, ncols, fld):
    """Right-kernel basis of a sparse homogeneous system.

    Forward-eliminates with min-column pivoting, then back-substitutes once
    per free column; avoids the fill-in of a full RREF pass.
    """
    pivrows = {}  # pivot column -> normalized row dict
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        while row:
            c = min(row)
            if c in pivrows:
                f = row.pop(c)
                for c2, v2 in pivrows[c].items():
                    if c2 == c:
                        continue
                    nv = row.get(c2)
                    nv = -f * v2 if nv is None else nv - f * v2
                    if nv:
                        row[c2] = nv
                    elif c2 in row:
                        del row[c2]
            else:
                inv = row[c]
                pivrows[c] = {c2: v2 / inv for c2, v2 in row.items()}
                break
    pivcols = sorted(pivrows)
    pivset = set(pivcols)
    free = [c for c in range(ncols) if c not in pivset]
    zero, one = fld.zero(), fld.one()
    basis = []
    for f in free:
        val = {f: one}
        for c in reversed(pivcols):
            acc = None
            for c2, v2 in pivrows[c].items():
                if c2 == c:
                    continue
                x = val.get(c2)
                if x is not None and x:
                    term = v2 * x
                    acc = term if acc is None else acc + term
            if acc is not None and acc:
                val[c] = -acc
        vec = [zero] * ncols
        for c, v in val.items():
            if v:
                vec[c] = v
        basis.append(vec)
    return basis
