"""Simplicial complexes stored as bitmasks.

A face is an ``int`` whose set bits are its vertices, so vertex ``i`` is
bit ``1 << i``. Public functions accept faces either as masks or as
iterables of vertex indices (see :func:`to_mask`).
"""

from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidInputError, PreconditionError

MAX_VERTICES = 64


def to_mask(face):
    """Convert an iterable of vertex indices (or a mask) to a mask."""
    if isinstance(face, int) and not isinstance(face, bool):
        if face < 0:
            raise InvalidInputError(f"negative face mask {face}")
        return face
    vertices = list(face)
    mask = 0
    for v in vertices:
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise InvalidInputError(f"vertex {v!r} is not a nonnegative integer")
        if mask >> v & 1:
            raise InvalidInputError(f"repeated vertex {v} in face {vertices}")
        mask |= 1 << v
    return mask


def from_mask(mask):
    """Sorted tuple of the vertices in ``mask``."""
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def popcount(mask):
    return bin(mask).count("1")


def submasks(mask):
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def maximal_sets(masks):
    """Inclusion-maximal members of ``masks``, sorted by mask value."""
    uniq = sorted(set(masks), key=lambda m: (-popcount(m), m))
    kept = []
    for m in uniq:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return tuple(sorted(kept))


def minimal_sets(masks):
    """Inclusion-minimal members of ``masks``, sorted by mask value."""
    uniq = sorted(set(masks), key=lambda m: (popcount(m), m))
    kept = []
    for m in uniq:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return tuple(sorted(kept))


def minimal_transversals(edges):
    """Minimal vertex sets meeting every edge (Berge's incremental method).

    With no edges the only minimal transversal is the empty set. An empty
    edge cannot be met, in which case there are none.
    """
    current = [0]
    for edge in edges:
        if edge == 0:
            return ()
        nxt = []
        for t in current:
            if t & edge:
                nxt.append(t)
            else:
                e = edge
                while e:
                    bit = e & -e
                    nxt.append(t | bit)
                    e ^= bit
        current = list(minimal_sets(nxt))
    return tuple(sorted(current))


def lex_key(mask):
    """Sort key giving lexicographic order on sorted vertex tuples."""
    return from_mask(mask)


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex given by its facets.

    ``facets`` holds inclusion-maximal face masks sorted by value. An empty
    facet tuple is the void complex; ``(0,)`` is the irrelevant complex
    ``{∅}``.
    """

    vertex_count: int
    facets: tuple

    def __post_init__(self):
        if self.vertex_count < 0 or self.vertex_count > MAX_VERTICES:
            raise InvalidInputError(
                f"vertex_count must lie in 0..{MAX_VERTICES}, got {self.vertex_count}"
            )
        full = (1 << self.vertex_count) - 1
        for f in self.facets:
            if f & ~full:
                raise InvalidInputError(
                    f"face {list(from_mask(f))} uses a vertex >= {self.vertex_count}"
                )

    @property
    def ground(self):
        return (1 << self.vertex_count) - 1

    @property
    def is_void(self):
        return not self.facets

    @property
    def dimension(self):
        """Dimension of the complex; -1 for ``{∅}`` and None when void."""
        if not self.facets:
            return None
        return max(popcount(f) for f in self.facets) - 1

    def contains(self, face):
        m = to_mask(face)
        return any(m & f == m for f in self.facets)

    __contains__ = contains

    def faces(self):
        """Set of every face mask (downward closure of the facets)."""
        out = set()
        for f in self.facets:
            if f in out:
                continue
            out.update(submasks(f))
        return out

    def faces_of_size(self, size):
        return sorted(m for m in self.faces() if popcount(m) == size)

    def facet_lists(self):
        return [list(from_mask(f)) for f in sorted(self.facets, key=lex_key)]

    def __repr__(self):
        return f"SimplicialComplex({self.vertex_count}, {self.facet_lists()})"


def from_facets(vertex_count, faces, empty=None):
    """Build a complex from any generating list of faces.

    Dominated and duplicate faces are dropped. An empty ``faces`` list is
    rejected unless ``empty`` is ``"void"`` (no faces at all) or
    ``"irrelevant"`` (only the empty face).
    """
    if isinstance(vertex_count, bool) or not isinstance(vertex_count, int):
        raise InvalidInputError("vertex_count must be an integer")
    if vertex_count < 0:
        raise InvalidInputError(f"negative vertex_count {vertex_count}")
    masks = [to_mask(f) for f in faces]
    if not masks:
        if empty == "void":
            return SimplicialComplex(vertex_count, ())
        if empty == "irrelevant":
            return SimplicialComplex(vertex_count, (0,))
        raise InvalidInputError(
            "empty facet list: pass empty='void' or empty='irrelevant' explicitly"
        )
    return SimplicialComplex(vertex_count, maximal_sets(masks))


def simplex(vertex_count):
    """The full simplex on ``vertex_count`` vertices."""
    return SimplicialComplex(vertex_count, ((1 << vertex_count) - 1,))


def skeleton(i, j):
    """All subsets of size at most ``j`` of ``i`` vertices."""
    if j < 1 or j > i:
        raise PreconditionError(f"skeleton needs 1 <= j <= i, got i={i}, j={j}")
    facets = [to_mask(c) for c in combinations(range(i), j)]
    return SimplicialComplex(i, tuple(sorted(facets)))


def f_vector(cx):
    """Face counts ``(f_-1, f_0, ..., f_dim)``; the void complex gives ()."""
    if cx.is_void:
        return ()
    counts = [0] * (cx.dimension + 2)
    for m in cx.faces():
        counts[popcount(m)] += 1
    return tuple(counts)


def minimal_nonfaces(cx):
    """Inclusion-minimal non-faces, in lexicographic order.

    A set is a non-face exactly when it meets the complement of every
    facet, so these are the minimal transversals of the facet complements.
    """
    ground = cx.ground
    found = minimal_transversals([ground & ~f for f in cx.facets])
    return sorted(found, key=lex_key)


def alexander_dual(cx):
    """Complex of complements of the non-faces of ``cx``."""
    ground = cx.ground
    comps = [ground & ~m for m in minimal_nonfaces(cx)]
    return SimplicialComplex(cx.vertex_count, maximal_sets(comps) if comps else ())


def link(cx, face):
    sigma = to_mask(face)
    if sigma not in cx:
        raise PreconditionError(f"{list(from_mask(sigma))} is not a face")
    return SimplicialComplex(
        cx.vertex_count,
        maximal_sets(f & ~sigma for f in cx.facets if f & sigma == sigma),
    )


def is_pure(cx):
    return len({popcount(f) for f in cx.facets}) <= 1
