from itertools import combinations

import pytest

from gcsets import (
    InvalidInputError,
    NonPureError,
    PreconditionError,
    PrimeComponent,
    SquarefreeMonomialIdeal,
    alexander_dual,
    codim_degree,
    complex_of,
    contains_monomial,
    dual_ideal,
    f_vector,
    primary_decomposition,
    skeleton,
    sr_ideal,
)
from gcsets.complex import from_mask, simplex
from gcsets.fixtures import BR_GENERATORS, fixture_ideal
from gcsets.ideal import dual_ideal_via_complex

from oracles import brute_components, powerset

D42_GENS = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]


def comps(ideal):
    return [c.variable_list() for c in primary_decomposition(ideal)]


def test_sr_ideal_examples():
    assert sr_ideal(skeleton(4, 2)).generator_lists() == D42_GENS
    assert sr_ideal(simplex(4)).is_zero
    br = sr_ideal(complex_of(fixture_ideal("berzolari-radon-10")))
    assert sorted(br.generator_lists()) == sorted(BR_GENERATORS)
    assert [2, 6, 7] in br.generator_lists()


def test_complex_of_examples():
    assert complex_of(SquarefreeMonomialIdeal.from_supports(4, D42_GENS)) == skeleton(4, 2)
    assert complex_of(SquarefreeMonomialIdeal(5, ())) == simplex(5)
    assert f_vector(complex_of(fixture_ideal("one-lattice-8"))) == (1, 8, 28, 46, 35, 10)


def test_complex_of_linear_generator_removes_vertex():
    cx = complex_of(SquarefreeMonomialIdeal.from_supports(3, [[1]]))
    assert cx.facet_lists() == [[0, 2]]


def test_non_minimal_generators_rejected():
    with pytest.raises(InvalidInputError):
        SquarefreeMonomialIdeal.from_supports(3, [[0], [0, 1]])
    ideal = SquarefreeMonomialIdeal.from_supports(3, [[0], [0, 1]], minimalize=True)
    assert ideal.generator_lists() == [[0]]


def test_decomposition_examples():
    assert comps(sr_ideal(skeleton(4, 2))) == [list(p) for p in combinations(range(4), 2)]
    assert comps(sr_ideal(skeleton(5, 2))) == [list(p) for p in combinations(range(5), 3)]
    br = fixture_ideal("berzolari-radon-10")
    expected = [list(c) for c in brute_components(10, br.generator_lists())]
    assert comps(br) == expected
    assert len(expected) == 10 and [0, 1, 2] in expected
    with pytest.raises(PreconditionError):
        primary_decomposition(SquarefreeMonomialIdeal(3, ()))


def test_dual_ideal_examples():
    d42 = sr_ideal(skeleton(4, 2))
    assert dual_ideal(d42).generator_lists() == [list(p) for p in combinations(range(4), 2)]
    ol = fixture_ideal("one-lattice-8")
    dual = dual_ideal(ol)
    assert len(dual.generators) == 10 and dual.degrees() == [3]
    assert f_vector(complex_of(dual)) == (1, 8, 28, 46, 35, 10)


def test_codim_degree_examples():
    assert codim_degree(sr_ideal(skeleton(4, 2))) == (2, 6)
    assert codim_degree(fixture_ideal("one-lattice-8")) == (3, 10)
    assert codim_degree(fixture_ideal("berzolari-radon-10")) == (3, 10)


def test_codim_degree_rejects_mixed():
    ideal = SquarefreeMonomialIdeal.from_supports(4, D42_GENS[:3])
    with pytest.raises(NonPureError, match="mixed decomposition"):
        codim_degree(ideal)


def test_contains_monomial():
    d42 = sr_ideal(skeleton(4, 2))
    assert contains_monomial(d42, [0, 1, 2])
    assert not contains_monomial(d42, [0, 1])
    assert contains_monomial(d42, [0, 1, 2, 3])


def test_prime_component_needs_variables():
    with pytest.raises(InvalidInputError):
        PrimeComponent(0)


def test_round_trips(complexes):
    for cx in complexes:
        ideal = sr_ideal(cx)
        assert complex_of(ideal) == cx
        assert sr_ideal(complex_of(ideal)) == ideal


def test_two_routes_to_dual_ideal(complexes):
    for cx in complexes:
        ideal = sr_ideal(cx)
        if ideal.is_zero:
            continue
        assert dual_ideal(ideal) == dual_ideal_via_complex(ideal)
        assert dual_ideal(ideal) == sr_ideal(alexander_dual(cx))
        assert dual_ideal(dual_ideal(ideal)) == ideal


def test_membership_matches_decomposition(complexes):
    for cx in complexes:
        ideal = sr_ideal(cx)
        if ideal.is_zero:
            continue
        primes = primary_decomposition(ideal)
        for s in powerset(range(cx.vertex_count)):
            mask = sum(1 << v for v in s)
            in_all = all(mask & p.variables for p in primes)
            assert contains_monomial(ideal, s) == in_all


def test_equigenerated_components_have_d_variables(gc_ideals):
    from gcsets import infer_parameters

    for ideal in gc_ideals:
        params = infer_parameters(ideal)
        assert all(len(from_mask(p.variables)) == params.d for p in primary_decomposition(ideal))
