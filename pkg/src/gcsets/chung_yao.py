"""Chung-Yao data: skeleton ideals, seeded generic forms, determinantal check."""

import random
from itertools import combinations, permutations
from fractions import Fraction
from math import comb

from .complex import skeleton, to_mask
from .errors import NonGenericError, PreconditionError
from .geometry import LinearForm
from .ideal import sr_ideal
from .linalg import as_fraction, determinant, nullspace, rank

COEFF_RANGE = 9
MAX_RETRIES = 1000


def chung_yao_ideal(d, n):
    """All squarefree degree-(n+1) monomials in n+d variables."""
    if d < 1 or n < 1 or d + n > 64:
        raise PreconditionError(f"need d >= 1, n >= 1, d+n <= 64; got d={d}, n={n}")
    return sr_ideal(skeleton(d + n, n))


def _is_generic(rows, d):
    """Every d+1 rows independent, every d rows cut a distinct point with
    all coordinates nonzero."""
    for sub in combinations(rows, d + 1):
        if determinant(sub) == 0:
            return False
    points = set()
    for sub in combinations(rows, d):
        kernel = nullspace(list(sub), d + 1)
        if len(kernel) != 1:
            return False
        p = LinearForm(kernel[0]).coefficients
        if any(c == 0 for c in p) or p in points:
            return False
        points.add(p)
    return True


def generic_forms(d, m, seed=1):
    """``m`` small-integer linear forms on P^d in verified general position.

    Candidates are drawn from ``random.Random(seed)`` until they pass the
    genericity checks, so the result depends on the seed alone.
    """
    if m < d + 1:
        raise PreconditionError(f"{m} forms cannot span linear forms on P^{d}")
    rng = random.Random(seed)
    for _ in range(MAX_RETRIES):
        rows = [
            [Fraction(rng.randint(-COEFF_RANGE, COEFF_RANGE)) for _ in range(d + 1)]
            for _ in range(m)
        ]
        if rank(rows) == d + 1 and _is_generic(rows, d):
            forms = [LinearForm(r) for r in rows]
            if len(set(forms)) == m:
                return forms
    raise NonGenericError(f"no generic forms after {MAX_RETRIES} draws (seed {seed})")


def generic_matrix(rows, cols, seed=1):
    """Integer matrix with every maximal minor nonzero."""
    rng = random.Random(seed)
    for _ in range(MAX_RETRIES):
        M = [[rng.randint(-COEFF_RANGE, COEFF_RANGE) for _ in range(cols)] for _ in range(rows)]
        if all(determinant([M[i] for i in S]) != 0 for S in combinations(range(rows), cols)):
            return M
    raise NonGenericError(f"no generic {rows}x{cols} matrix after {MAX_RETRIES} draws")


def _poly_mul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            # each row carries its own variable, so supports never overlap
            e = ea | eb
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c != 0}


def _poly_det(matrix):
    """Leibniz expansion of a square matrix of polynomials (dict mask -> coeff)."""
    size = len(matrix)
    total = {}
    for perm in permutations(range(size)):
        sign = 1
        seen = list(perm)
        for i in range(size):
            for j in range(i + 1, size):
                if seen[i] > seen[j]:
                    sign = -sign
        term = {0: Fraction(sign)}
        for r, c in enumerate(perm):
            term = _poly_mul(term, matrix[r][c])
            if not term:
                break
        for e, coeff in term.items():
            total[e] = total.get(e, 0) + coeff
    return {e: c for e, c in total.items() if c != 0}


def determinantal_check(d, n, M):
    """Check the maximal minors of M with row i scaled by y_i give the skeleton ideal.

    Each (n+1)-row minor is expanded symbolically and must be the single
    term det(M_S) * prod_{i in S} y_i.
    """
    M = [[as_fraction(x) for x in row] for row in M]
    if len(M) != n + d or any(len(row) != n + 1 for row in M):
        raise PreconditionError(f"M must be {n + d} x {n + 1}")
    scaled = [[{1 << i: a} if a != 0 else {} for a in row] for i, row in enumerate(M)]
    supports = set()
    for S in combinations(range(n + d), n + 1):
        const = determinant([M[i] for i in S])
        if const == 0:
            raise PreconditionError(f"minor on rows {list(S)} vanishes")
        minor = _poly_det([scaled[i] for i in S])
        if minor != {to_mask(S): const}:
            return False
        supports.add(to_mask(S))
    target = set(chung_yao_ideal(d, n).generators)
    return supports == target and len(supports) == comb(n + d, n + 1)
