"""Exact linear algebra over the integers and rationals.

Everything here works on plain lists of ``int`` or ``Fraction`` so results
are exact; nothing ever touches floating point.
"""

from fractions import Fraction
from math import gcd


def as_fraction(value):
    """Parse an int, Fraction or ``"p/q"`` string into a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_fraction(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def sparse_integer_rank(rows):
    """Rank of an integer matrix given as sparse rows ``{column: value}``.

    Fraction-free elimination: a row is cleared against a pivot row by
    integer cross-multiplication and then divided by its content, so
    entries stay small on boundary-type matrices.
    """
    pivots = {}
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        while row:
            c = min(row)
            prow = pivots.get(c)
            if prow is None:
                pivots[c] = row
                break
            a, p = row[c], prow[c]
            g = gcd(a, p)
            a, p = a // g, p // g
            new = {k: p * v for k, v in row.items()}
            for k, v in prow.items():
                new[k] = new.get(k, 0) - a * v
            row = {k: v for k, v in new.items() if v}
            if row:
                content = 0
                for v in row.values():
                    content = gcd(content, v)
                    if content == 1:
                        break
                if content > 1:
                    row = {k: v // content for k, v in row.items()}
    return len(pivots)


def integer_rank(rows):
    """Rank of a dense integer matrix (see :func:`sparse_integer_rank`)."""
    return sparse_integer_rank({c: v for c, v in enumerate(r) if v} for r in rows)


def row_reduce(rows):
    """Reduced row echelon form over Q.

    Returns ``(rref, pivot_columns)``; the input is left untouched.
    """
    m = [[as_fraction(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows):
    return len(row_reduce(rows)[1])


def nullspace(rows, ncols=None):
    """Basis of the right kernel ``{v : rows @ v = 0}`` over Q."""
    if ncols is None:
        ncols = len(rows[0])
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    rref, pivots = row_reduce(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -rref[i][f]
        basis.append(v)
    return basis


def determinant(rows):
    """Exact determinant of a square rational matrix."""
    m = [[as_fraction(x) for x in r] for r in rows]
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("determinant needs a square matrix")
    det = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        p = m[c][c]
        det *= p
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / p
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det
