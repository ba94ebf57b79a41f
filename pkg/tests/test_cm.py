import random

import pytest

from gcsets import (
    PreconditionError,
    SquarefreeMonomialIdeal,
    bicm_fvector_factorization,
    bicm_report,
    complex_of,
    f_vector,
    from_facets,
    fv_duality_check,
    infer_parameters,
    is_bicm,
    is_cohen_macaulay,
    is_pure,
    reduced_homology,
    skeleton,
    sr_ideal,
)
from gcsets.complex import simplex
from gcsets.fixtures import fixture_ideal
from gcsets.linalg import integer_rank

from oracles import (
    all_faces,
    brute_is_cohen_macaulay,
    brute_reduced_homology,
    random_facets,
    rational_rank,
)

TWO_EDGES = from_facets(4, [[0, 1], [2, 3]])


def test_homology_examples():
    assert reduced_homology(simplex(3)).ranks == (0, 0, 0, 0)
    h = reduced_homology(skeleton(4, 2))
    assert h.rank(1) == 3 and h.rank(0) == 0 and h.rank(-1) == 0
    assert reduced_homology(from_facets(2, [[0], [1]])).rank(0) == 1
    assert reduced_homology(from_facets(2, [], empty="irrelevant")).rank(-1) == 1
    with pytest.raises(PreconditionError):
        reduced_homology(from_facets(2, [], empty="void"))


def test_homology_matches_oracle(complexes):
    for cx in complexes[:50]:
        h = reduced_homology(cx)
        expected = brute_reduced_homology(all_faces(cx.vertex_count, cx.facet_lists()))
        for dim, r in expected.items():
            assert h.rank(dim) == r


def test_euler_characteristic(complexes):
    for cx in complexes:
        f = f_vector(cx)
        chi = sum((-1) ** j * f[j + 1] for j in range(-1, len(f) - 1))
        assert reduced_homology(cx).euler_characteristic() == chi


def test_integer_rank_matches_naive():
    rng = random.Random(5)
    for _ in range(200):
        rows = [[rng.randint(-3, 3) for _ in range(rng.randint(1, 7))]]
        width = len(rows[0])
        rows += [[rng.choice([0, 0, rng.randint(-4, 4)]) for _ in range(width)] for _ in range(rng.randint(0, 7))]
        assert integer_rank(rows) == rational_rank(rows)


def test_cm_examples():
    assert is_cohen_macaulay(skeleton(4, 2))
    res = is_cohen_macaulay(TWO_EDGES)
    assert not res and res.failing_face == () and res.failing_dimension == 0
    assert is_cohen_macaulay(skeleton(4, 1))


def test_bicm_examples():
    assert is_bicm(sr_ideal(skeleton(4, 2)))
    assert is_bicm(fixture_ideal("one-lattice-8"))
    assert is_bicm(fixture_ideal("berzolari-radon-10"))
    assert not is_bicm(sr_ideal(TWO_EDGES))


def test_bicm_report_shape():
    doc = bicm_report(TWO_EDGES).to_dict()
    assert doc["bicm"] is False and doc["failing_face"] == []
    doc = bicm_report(skeleton(4, 2)).to_dict()
    assert doc == {
        "cm": True,
        "dual_cm": True,
        "bicm": True,
        "failing_face": None,
        "fvect_factorization": {"i": 0, "m": 4, "k": 2},
    }


def test_reisner_matches_brute_force():
    rng = random.Random(99)
    for _ in range(100):
        m = rng.randint(1, 8)
        cx = from_facets(m, random_facets(rng, m, max_facets=5))
        assert bool(is_cohen_macaulay(cx)) == brute_is_cohen_macaulay(m, cx.facet_lists())


def test_cm_implies_pure(complexes):
    for cx in complexes:
        if is_cohen_macaulay(cx):
            assert is_pure(cx)


@pytest.mark.parametrize("i", range(3, 9))
def test_skeletons_are_bicm(i):
    for j in range(2, i):
        assert is_bicm(sr_ideal(skeleton(i, j)))


def test_fv_duality_check(complexes):
    assert fv_duality_check(skeleton(4, 2))
    assert fv_duality_check(complex_of(fixture_ideal("one-lattice-8")))
    assert all(fv_duality_check(cx) for cx in complexes)


def expand(i, m, k):
    """Coefficients of (1+t)^i * sum_{j<=k} C(m,j) t^j."""
    from math import comb

    poly = [comb(m, j) for j in range(k + 1)]
    for _ in range(i):
        poly = [a + b for a, b in zip(poly + [0], [0] + poly)]
    return tuple(poly)


def exhaustive_factorizations(f):
    found = []
    for i in range(len(f)):
        k = len(f) - 1 - i
        for m in range(0, 3 * len(f) + 10):
            if expand(i, m, k) == tuple(f):
                found.append((i, m, k))
    return found


@pytest.mark.parametrize(
    "f,expected",
    [
        ((1, 4, 6), (0, 4, 2)),
        ((1, 8, 28, 46, 35, 10), (3, 5, 2)),
        ((1, 10, 45, 110, 155, 126, 55, 10), (5, 5, 2)),
        ((1, 2, 1), (0, 2, 2)),
        ((1, 4, 7), None),
    ],
)
def test_fvector_factorization(f, expected):
    assert bicm_fvector_factorization(f) == expected
    brute = exhaustive_factorizations(f)
    assert (brute[0] if brute else None) == expected


def test_bicm_implies_fvect(gc_ideals):
    for ideal in gc_ideals:
        if is_bicm(ideal):
            infer_parameters(ideal)
            assert bicm_fvector_factorization(f_vector(complex_of(ideal))) is not None


def test_is_bicm_rejects_zero_ideal():
    with pytest.raises(PreconditionError):
        is_bicm(SquarefreeMonomialIdeal(3, ()))
