import random
from itertools import combinations

import pytest

from gcsets import (
    ParameterError,
    SquarefreeMonomialIdeal,
    chung_yao_ideal,
    from_facets,
    infer_parameters,
)
from gcsets.fixtures import fixture, fixture_ideal

from oracles import complex_corpus


def inferable_ideal_corpus(count=60, seed=7):
    """Fixtures, Chung-Yao ideals and random equigenerated ideals with (d, n)."""
    ideals = [fixture_ideal(name) for name in ("cy-4-lines", "berzolari-radon-10", "one-lattice-8")]
    ideals += [chung_yao_ideal(d, n) for d in range(1, 5) for n in range(1, 5) if d + n <= 7]
    rng = random.Random(seed)
    seen = set(ideals)
    while len(ideals) < count:
        m = rng.randint(3, 8)
        n = rng.randint(1, 3)
        subsets = list(combinations(range(m), n + 1))
        if not subsets:
            continue
        gens = rng.sample(subsets, rng.randint(1, len(subsets)))
        ideal = SquarefreeMonomialIdeal.from_supports(m, gens)
        if ideal in seen:
            continue
        try:
            infer_parameters(ideal)
        except ParameterError:
            continue
        seen.add(ideal)
        ideals.append(ideal)
    return ideals


@pytest.fixture(scope="session")
def complexes():
    """200+ pseudorandom complexes on at most 10 vertices."""
    return [from_facets(m, facets) for m, facets in complex_corpus(220, 10, seed=2024)]


@pytest.fixture(scope="session")
def gc_ideals():
    return inferable_ideal_corpus()


@pytest.fixture
def cy_doc():
    return fixture("cy-4-lines")


@pytest.fixture
def br_doc():
    return fixture("berzolari-radon-10")


@pytest.fixture
def one_lattice_doc():
    return fixture("one-lattice-8")


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
