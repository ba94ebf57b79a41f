"""Monomial GC components and maximal monomial hyperplanes."""

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .complex import from_mask, is_pure, to_mask
from .errors import DegreeMismatchError, MixedDegreeError, NonPureError, PreconditionError
from .ideal import PrimeComponent, complex_of, primary_decomposition


RADICAL_EQUALITY_WARNING = (
    "assumed, not checked: the specialized ideal equals the ideal of the points"
)


@dataclass(frozen=True)
class GCParameters:
    d: int
    n: int

    @property
    def degree(self):
        return comb(self.n + self.d, self.d)

    @property
    def hyperplane_count(self):
        """Components a maximal monomial hyperplane must contain."""
        return comb(self.n + self.d - 1, self.d - 1)


def infer_parameters(ideal):
    if ideal.is_zero:
        raise PreconditionError("cannot infer parameters of the zero ideal")
    degrees = ideal.degrees()
    if len(degrees) != 1:
        raise MixedDegreeError(f"generators have mixed degrees {degrees}")
    n = degrees[0] - 1
    if n < 1:
        raise PreconditionError("linear generators give n = 0")
    cx = complex_of(ideal)
    if not is_pure(cx):
        raise NonPureError("mixed decomposition; degree undefined here")
    d = ideal.variable_count - (cx.dimension + 1)
    degree = len(cx.facets)
    if degree != comb(n + d, d):
        raise DegreeMismatchError(
            f"degree {degree} does not equal C(n+d, d) = {comb(n + d, d)} for d={d}, n={n}"
        )
    return GCParameters(d, n)


@dataclass(frozen=True)
class GCWitness:
    component: PrimeComponent
    tau: tuple


def _n_subsets_by_mask(m, n):
    return sorted(to_mask(c) for c in combinations(range(m), n))


def monomial_gc_witness(ideal, component, params=None, _cx=None):
    """First face tau of size n (by mask) certifying ``component`` is monomial GC.

    tau must avoid the component's variables and every join of tau with a
    component variable must be a non-face. Returns None when no tau exists.
    """
    if params is None:
        params = infer_parameters(ideal)
    cx = complex_of(ideal) if _cx is None else _cx
    comp = component.variables
    if PrimeComponent(comp) not in primary_decomposition(ideal):
        raise PreconditionError(f"{component} is not a component of the ideal")
    verts = [1 << v for v in from_mask(comp)]
    for tau in _n_subsets_by_mask(ideal.variable_count, params.n):
        if tau & comp or tau not in cx:
            continue
        if all((tau | v) not in cx for v in verts):
            return GCWitness(component, from_mask(tau))
    return None


@dataclass
class MonomialGCReport:
    params: GCParameters
    components: list
    witnesses: list
    vertex_counts: dict = field(default_factory=dict)
    generator_count: int = None

    @property
    def gc_component_count(self):
        return sum(w is not None for w in self.witnesses)

    @property
    def is_monomial_gc(self):
        return all(w is not None for w in self.witnesses)

    @property
    def maximal_hyperplanes(self):
        target = self.params.hyperplane_count
        return [(v, c) for v, c in sorted(self.vertex_counts.items()) if c == target]

    @property
    def exceeding_hyperplanes(self):
        """Vertices in more components than a maximal hyperplane needs."""
        target = self.params.hyperplane_count
        return [(v, c) for v, c in sorted(self.vertex_counts.items()) if c > target]

    def to_dict(self):
        return {
            "d": self.params.d,
            "n": self.params.n,
            "components": [
                {"vars": c.variable_list(), "witness": None if w is None else list(w.tau)}
                for c, w in zip(self.components, self.witnesses)
            ],
            "gc_count": self.gc_component_count,
            "monomial_gc": self.is_monomial_gc,
            "maximal_hyperplanes": [
                {"vertex": v, "count": c} for v, c in self.maximal_hyperplanes
            ],
            "exceeding_hyperplanes": [
                {"vertex": v, "count": c} for v, c in self.exceeding_hyperplanes
            ],
            "vertex_counts": [[v, c] for v, c in sorted(self.vertex_counts.items())],
            "generator_count": self.generator_count,
            "expected_generator_count": comb(self.params.n + self.params.d, self.params.n + 1),
            "warnings": [RADICAL_EQUALITY_WARNING],
        }

    @classmethod
    def from_dict(cls, doc):
        params = GCParameters(doc["d"], doc["n"])
        comps = [PrimeComponent(to_mask(c["vars"])) for c in doc["components"]]
        witnesses = [
            None if c["witness"] is None else GCWitness(comp, tuple(c["witness"]))
            for comp, c in zip(comps, doc["components"])
        ]
        counts = {v: c for v, c in doc["vertex_counts"]}
        return cls(params, comps, witnesses, counts, doc.get("generator_count"))


def monomial_gc_report(ideal):
    params = infer_parameters(ideal)
    cx = complex_of(ideal)
    comps = primary_decomposition(ideal)
    witnesses = [monomial_gc_witness(ideal, c, params, cx) for c in comps]
    counts = Counter(v for c in comps for v in from_mask(c.variables))
    vertex_counts = {v: counts.get(v, 0) for v in range(ideal.variable_count)}
    return MonomialGCReport(params, comps, witnesses, vertex_counts, len(ideal.generators))
