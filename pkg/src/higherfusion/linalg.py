"""Exact linear algebra over Q on small dense and sparse matrices.

Matrices are lists of rows; entries are ints or Fractions.
"""

from fractions import Fraction

from .poly import rational


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(r, c):
    return [[0] * c for _ in range(r)]


def matmul(a, b):
    if not a:
        return []
    cols = len(b[0]) if b else 0
    bt = list(zip(*b)) if b else [() for _ in range(cols)]
    out = []
    for row in a:
        nz = [(k, x) for k, x in enumerate(row) if x]
        out.append([rational(sum(x * col[k] for k, x in nz)) for col in bt])
    return out


def matvec(a, v):
    out = []
    for row in a:
        s = 0
        for x, y in zip(row, v):
            if x and y:
                s += x * y
        out.append(rational(s))
    return out


def matadd(a, b, scale=1):
    return [[rational(x + scale * y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def transpose(a):
    return [list(r) for r in zip(*a)]


def is_zero_matrix(a):
    return all(not x for row in a for x in row)


def rref(rows, ncols=None):
    """Reduced row echelon form of a list of rows; returns ``(rows, pivots)``."""
    m = [list(map(Fraction, r)) for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    out = [[rational(x) for x in row] for row in m[:r]]
    return out, pivots


def rank(matrix):
    """Rank of a dense matrix (via sparse elimination)."""
    return sparse_rank([{j: x for j, x in enumerate(row) if x} for row in matrix])


def sparse_rank(rows):
    """Rank of a matrix given as a list of ``{column: value}`` dicts.

    Pivots are chosen on the sparsest available row to limit fill-in.
    """
    pending = [dict(r) for r in rows if r]
    pivot_rows = {}
    rank_ = 0
    while pending:
        pending.sort(key=len)
        row = pending.pop(0)
        # eliminate known pivots from this row
        changed = True
        while row and changed:
            changed = False
            for col in [c for c in row if c in pivot_rows]:
                if col not in row:
                    continue
                prow = pivot_rows[col]
                f = row[col]
                for k, v in prow.items():
                    nv = row.get(k, 0) - f * v
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
                changed = True
        if not row:
            continue
        col = min(row)
        inv = Fraction(1) / Fraction(row[col])
        prow = {k: rational(v * inv) for k, v in row.items()}
        pivot_rows[col] = prow
        rank_ += 1
    return rank_


def nullspace(matrix, ncols=None):
    """Basis (list of vectors) of ``{x : matrix x = 0}``."""
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    red, pivots = rref(matrix, ncols) if matrix else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, p in zip(red, pivots):
            v[p] = rational(-row[f])
        basis.append(v)
    return basis


def inverse(matrix):
    n = len(matrix)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(matrix)]
    red, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red[:n]]


def solve(matrix, rhs):
    """One solution ``x`` of ``matrix x = rhs``; raises ValueError if inconsistent."""
    ncols = len(matrix[0])
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    red, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        raise ValueError("inconsistent linear system")
    x = [0] * ncols
    for row, p in zip(red, pivots):
        x[p] = row[ncols]
    return x


def determinant(matrix):
    n = len(matrix)
    m = [list(map(Fraction, r)) for r in matrix]
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c]), None)
        if p is None:
            return 0
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return rational(det)


def trace(matrix):
    return rational(sum(matrix[i][i] for i in range(len(matrix))))


def format_matrix(matrix):
    from .poly import format_rational
    return [[format_rational(x) for x in row] for row in matrix]
