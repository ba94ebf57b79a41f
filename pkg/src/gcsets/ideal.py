"""Squarefree monomial ideals and the Stanley-Reisner correspondence.

A squarefree monomial is identified with its support, so generators are
face masks just like in :mod:`gcsets.complex`.
"""

from dataclasses import dataclass

from .complex import (
    SimplicialComplex,
    alexander_dual,
    from_mask,
    is_pure,
    lex_key,
    maximal_sets,
    minimal_nonfaces,
    minimal_sets,
    minimal_transversals,
    popcount,
    to_mask,
)
from .errors import InvalidInputError, NonPureError, PreconditionError


@dataclass(frozen=True)
class SquarefreeMonomialIdeal:
    variable_count: int
    generators: tuple

    def __post_init__(self):
        full = (1 << self.variable_count) - 1
        for g in self.generators:
            if g == 0:
                raise InvalidInputError("the unit monomial cannot be a generator")
            if g & ~full:
                raise InvalidInputError(
                    f"generator {list(from_mask(g))} uses a variable >= {self.variable_count}"
                )

    @classmethod
    def from_supports(cls, variable_count, supports, minimalize=False):
        """Build from supports; non-minimal input is an error unless
        ``minimalize`` is set."""
        if variable_count < 0:
            raise InvalidInputError(f"negative variable_count {variable_count}")
        masks = [to_mask(s) for s in supports]
        reduced = minimal_sets(masks)
        if not minimalize and len(reduced) != len(masks):
            raise InvalidInputError("generators are not a minimal generating set")
        return cls(variable_count, tuple(sorted(reduced, key=lex_key)))

    @property
    def is_zero(self):
        return not self.generators

    def degrees(self):
        return sorted({popcount(g) for g in self.generators})

    def generator_lists(self):
        return [list(from_mask(g)) for g in self.generators]

    def __repr__(self):
        return f"SquarefreeMonomialIdeal({self.variable_count}, {self.generator_lists()})"


@dataclass(frozen=True, order=True)
class PrimeComponent:
    """The prime generated by the variables in ``variables`` (a mask)."""

    variables: int

    def __post_init__(self):
        if self.variables <= 0:
            raise InvalidInputError("a prime component needs at least one variable")

    def variable_list(self):
        return list(from_mask(self.variables))

    def __len__(self):
        return popcount(self.variables)

    def __repr__(self):
        return f"PrimeComponent({self.variable_list()})"


def sr_ideal(cx):
    if cx.is_void:
        raise PreconditionError("the void complex has the unit ideal")
    return SquarefreeMonomialIdeal(cx.vertex_count, tuple(minimal_nonfaces(cx)))


def complex_of(ideal):
    """The complex whose faces are the supports containing no generator."""
    ground = (1 << ideal.variable_count) - 1
    covers = minimal_transversals(ideal.generators)
    return SimplicialComplex(ideal.variable_count, maximal_sets(ground & ~t for t in covers))


def primary_decomposition(ideal):
    """Prime components, one per facet, as the facet complements."""
    if ideal.is_zero:
        raise PreconditionError("the zero ideal has no primary decomposition here")
    comps = minimal_transversals(ideal.generators)
    return [PrimeComponent(c) for c in sorted(comps, key=lex_key)]


def dual_ideal(ideal):
    comps = primary_decomposition(ideal)
    return SquarefreeMonomialIdeal(
        ideal.variable_count, tuple(sorted((c.variables for c in comps), key=lex_key))
    )


def dual_ideal_via_complex(ideal):
    """Same as :func:`dual_ideal`, computed through the dual complex."""
    return sr_ideal(alexander_dual(complex_of(ideal)))


def codim_degree(ideal):
    """``(codimension, degree)`` of a nonzero ideal with pure complex."""
    if ideal.is_zero:
        raise PreconditionError("the zero ideal has no codimension/degree here")
    cx = complex_of(ideal)
    if not is_pure(cx):
        raise NonPureError("mixed decomposition; degree undefined here")
    return ideal.variable_count - (cx.dimension + 1), len(cx.facets)


def contains_monomial(ideal, support):
    s = to_mask(support)
    return any(g & s == g for g in ideal.generators)
