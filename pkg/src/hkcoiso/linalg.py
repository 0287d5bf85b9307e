"""
Exact linear algebra over Q.

Matrices are lists of rows; entries are ints or Fractions. Elimination is
fraction-free: every row is scaled to a primitive integer vector, pivots are
cleared by integer cross-multiplication and the row content is divided out
after each step, so no rational arithmetic happens inside the inner loop.
Results are returned as reduced row echelon forms over Fraction, which are
canonical: two spans are equal iff their RREFs are equal.
"""

from fractions import Fraction
from math import gcd
from functools import reduce


def frac(x):
    """Parse an int, Fraction or "p/q" string into a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def frac_str(x):
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _lcm(a, b):
    return a * b // gcd(a, b)


def _primitive(row):
    """Scale a rational row to a primitive integer row (same span)."""
    den = 1
    for x in row:
        if isinstance(x, Fraction) and x.denominator != 1:
            den = _lcm(den, x.denominator)
    ints = [int(x * den) for x in row]
    g = reduce(gcd, ints, 0)
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def _echelon_int(rows, ncols):
    """Fraction-free Gauss-Jordan on integer rows.

    Returns (rows, pivots) with rows in reduced form up to positive scaling of
    each row: every pivot column is zero outside its own row.
    """
    m = [r for r in (_primitive(r) for r in rows) if any(r)]
    pivots = []
    r = 0
    for col in range(ncols):
        if r == len(m):
            break
        piv = None
        best = None
        for i in range(r, len(m)):
            v = m[i][col]
            if v and (best is None or abs(v) < best):
                piv, best = i, abs(v)
                if best == 1:
                    break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        prow = m[r]
        p = prow[col]
        if p < 0:
            prow = m[r] = [-x for x in prow]
            p = -p
        for i in range(len(m)):
            if i == r:
                continue
            row = m[i]
            a = row[col]
            if not a:
                continue
            g = gcd(a, p)
            s, t = p // g, a // g
            new = [s * x - t * y for x, y in zip(row, prow)]
            c = reduce(gcd, new, 0)
            if c > 1:
                new = [x // c for x in new]
            m[i] = new
        pivots.append(col)
        r += 1
    return m[:r], pivots


def rref(rows, ncols=None):
    """Reduced row echelon form over Q. Returns (nonzero rows, pivot columns)."""
    rows = [list(r) for r in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    for row in rows:
        if len(row) != ncols:
            raise ValueError("ragged matrix")
    m, pivots = _echelon_int(rows, ncols)
    out = []
    for row, col in zip(m, pivots):
        p = row[col]
        out.append([Fraction(x, p) for x in row])
    return out, pivots


def rank(rows, ncols=None):
    rows = list(rows)
    if not rows:
        return 0
    if ncols is None:
        ncols = len(rows[0])
    return len(_echelon_int(rows, ncols)[1])


def nullspace(rows, ncols):
    """Basis of {x : A x = 0}, in reduced row echelon form.

    Eliminating A with its columns reversed makes the free-variable basis of
    the kernel come out already in (standard-order) RREF.
    """
    rows = [list(r)[::-1] for r in rows]
    red, rpiv = rref(rows, ncols) if rows else ([], [])
    pivots = [ncols - 1 - p for p in rpiv]
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        rf = ncols - 1 - f
        for row, p in zip(red, pivots):
            if row[rf]:
                v[p] = -row[rf]
        basis.append(v)
    return basis


def left_nullspace(rows, nrows, ncols):
    """Basis of {y : y^T A = 0}."""
    return nullspace(transpose(rows, nrows, ncols), nrows)


def row_basis(vectors, ncols):
    """Canonical basis (RREF) of the span of `vectors`."""
    vectors = list(vectors)
    if not vectors:
        return []
    return rref(vectors, ncols)[0]


def transpose(rows, nrows=None, ncols=None):
    if nrows is None:
        nrows = len(rows)
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    return [[rows[i][j] for i in range(nrows)] for j in range(ncols)]


def _demote(x):
    # integral Fractions multiply much faster as ints
    x = frac(x)
    return x.numerator if x.denominator == 1 else x


def matmul(a, b):
    ncols = len(b[0]) if b else 0
    bs = [[(j, _demote(x)) for j, x in enumerate(row) if x] for row in b]
    out = []
    for row in a:
        acc = [0] * ncols
        for k, x in enumerate(row):
            if not x:
                continue
            x = _demote(x)
            for j, y in bs[k]:
                acc[j] += x * y
        out.append([Fraction(v) for v in acc])
    return out


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def inverse(a):
    """Exact inverse of a square matrix; raises ZeroDivisionError if singular."""
    n = len(a)
    aug = [list(map(frac, row)) + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(a)]
    red, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red[:n]]


def det(a):
    """Bareiss determinant of a square rational matrix."""
    n = len(a)
    if n == 0:
        return Fraction(1)
    den = 1
    for row in a:
        for x in row:
            x = frac(x)
            den = _lcm(den, x.denominator)
    m = [[int(frac(x) * den) for x in row] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return Fraction(sign * m[n - 1][n - 1], den ** n)


def solve(columns, target, ncols=None):
    """Coefficients x with sum_j x_j * columns[j] == target, or None.

    `columns` is a list of vectors; when they are dependent the solution with
    zero free coordinates is returned.
    """
    k = len(columns)
    dim = len(target)
    aug = [[columns[j][i] for j in range(k)] + [target[i]] for i in range(dim)]
    red, pivots = rref(aug, k + 1)
    if pivots and pivots[-1] == k:
        return None
    x = [Fraction(0)] * k
    for row, p in zip(red, pivots):
        x[p] = row[k]
    return x


def span_contains(basis, v, ncols):
    return rank(list(basis) + [v], ncols) == len(row_basis(basis, ncols))


def same_span(a, b, ncols):
    return row_basis(a, ncols) == row_basis(b, ncols)


def sum_dim(spaces, ncols):
    """Dimension of the sum of several spans."""
    vecs = [v for s in spaces for v in s]
    return rank(vecs, ncols) if vecs else 0
