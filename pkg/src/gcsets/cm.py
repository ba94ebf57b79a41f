"""Reduced homology over Q, Reisner's criterion and Bi-Cohen-Macaulay tests."""

from dataclasses import dataclass
from math import comb

from .complex import (
    alexander_dual,
    f_vector,
    from_mask,
    link,
    popcount,
)
from .errors import PreconditionError
from .ideal import complex_of
from .linalg import sparse_integer_rank


@dataclass(frozen=True)
class HomologyProfile:
    """``ranks[k]`` is the rank of reduced homology in dimension ``k - 1``."""

    ranks: tuple

    def rank(self, dim):
        k = dim + 1
        return self.ranks[k] if 0 <= k < len(self.ranks) else 0

    def euler_characteristic(self):
        """Reduced Euler characteristic, sum of (-1)^dim * rank."""
        return sum((-1) ** (k - 1) * r for k, r in enumerate(self.ranks))


def _faces_by_size(cx):
    by_size = [[] for _ in range(cx.dimension + 2)]
    for m in cx.faces():
        by_size[popcount(m)].append(m)
    for faces in by_size:
        faces.sort()
    return by_size


def _boundary_rank(faces, lower):
    """Rank of the boundary map from ``faces`` (size k) to ``lower`` (size k-1)."""
    if not faces or not lower:
        return 0
    index = {m: i for i, m in enumerate(lower)}
    rows = []
    for f in faces:
        row = {}
        sign = 1
        rest = f
        while rest:
            bit = rest & -rest
            row[index[f ^ bit]] = sign
            sign = -sign
            rest ^= bit
        rows.append(row)
    return sparse_integer_rank(rows)


def reduced_homology(cx):
    if cx.is_void:
        raise PreconditionError("reduced homology of the void complex is undefined")
    by_size = _faces_by_size(cx)
    # bd[k] = rank of the map from size-k faces to size-(k-1) faces
    bd = [0] * (len(by_size) + 1)
    for k in range(1, len(by_size)):
        bd[k] = _boundary_rank(by_size[k], by_size[k - 1])
    ranks = tuple(len(by_size[k]) - bd[k] - bd[k + 1] for k in range(len(by_size)))
    return HomologyProfile(ranks)


@dataclass(frozen=True)
class CMResult:
    is_cm: bool
    failing_face: tuple = None
    failing_dimension: int = None

    def __bool__(self):
        return self.is_cm


def is_cohen_macaulay(cx):
    """Reisner's criterion.

    Faces are visited in increasing mask order and the first link with
    homology below its top dimension is reported.
    """
    if cx.is_void:
        raise PreconditionError("Cohen-Macaulayness of the void complex is undefined")
    for sigma in sorted(cx.faces()):
        lk = link(cx, sigma)
        top = lk.dimension
        h = reduced_homology(lk)
        for dim in range(-1, top):
            if h.rank(dim):
                return CMResult(False, from_mask(sigma), dim)
    return CMResult(True)


@dataclass(frozen=True)
class BiCMReport:
    cm: CMResult
    dual_cm: CMResult
    fvect_factorization: tuple = None

    @property
    def bicm(self):
        return self.cm.is_cm and self.dual_cm.is_cm

    @property
    def failing_face(self):
        if not self.cm.is_cm:
            return self.cm.failing_face
        if not self.dual_cm.is_cm:
            return self.dual_cm.failing_face
        return None

    def to_dict(self):
        fact = self.fvect_factorization
        return {
            "cm": self.cm.is_cm,
            "dual_cm": self.dual_cm.is_cm,
            "bicm": self.bicm,
            "failing_face": None if self.failing_face is None else list(self.failing_face),
            "fvect_factorization": None if fact is None else dict(zip("imk", fact)),
        }


def bicm_report(cx):
    dual = alexander_dual(cx)
    cm = is_cohen_macaulay(cx)
    dual_cm = is_cohen_macaulay(dual)
    return BiCMReport(cm, dual_cm, bicm_fvector_factorization(f_vector(cx)))


def is_bicm(ideal):
    if ideal.is_zero:
        raise PreconditionError("is_bicm needs a nonzero ideal")
    return bicm_report(complex_of(ideal)).bicm


def fv_duality_check(cx):
    """Check f_i(dual) + f_{m-i-2}(cx) = C(m, i+1) for i = 0..m-2."""
    m = cx.vertex_count
    f = f_vector(cx)
    g = f_vector(alexander_dual(cx))

    def entry(vec, i):
        k = i + 1
        return vec[k] if 0 <= k < len(vec) else 0

    return all(entry(g, i) + entry(f, m - i - 2) == comb(m, i + 1) for i in range(m - 1))


def _divide_by_one_plus_t(coeffs):
    """Exact quotient of a polynomial by (1 + t), or None if not divisible."""
    q = []
    carry = 0
    for c in coeffs[:-1]:
        carry = c - carry
        q.append(carry)
    if coeffs[-1] - carry != 0:
        return None
    return q


def bicm_fvector_factorization(f):
    """Find ``(i, m, k)`` with sum f_{j-1} t^j = (1+t)^i * sum_{j<=k} C(m, j) t^j.

    Several tuples can fit when the truncation is trivial (k = m); the one
    with the smallest ``i`` is returned. None means no factorization.
    """
    poly = list(f)
    if not poly or poly[0] != 1:
        return None
    i = 0
    while poly is not None and poly:
        k = len(poly) - 1
        m = poly[1] if k >= 1 else 0
        if all(poly[j] == comb(m, j) for j in range(k + 1)):
            return (i, m, k)
        if len(poly) < 2:
            return None
        poly = _divide_by_one_plus_t(poly)
        i += 1
    return None
