"""Exact projective geometry: specialization, n-correctness and GC certificates.

Forms and points live in homogeneous coordinates ``x_0..x_d`` over Q and
are kept in canonical scaling (first nonzero entry equal to 1). Affine
values are taken in a chart, the coordinate set to 1 (the last one unless
told otherwise).
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import comb, prod

from .complex import from_mask, to_mask
from .errors import InvalidInputError, NonGenericError, PreconditionError
from .gc import RADICAL_EQUALITY_WARNING, infer_parameters
from .ideal import primary_decomposition
from .linalg import as_fraction, determinant, format_fraction, nullspace, rank

REGULAR_SEQUENCE_NOTE = (
    "regular sequence not computed; checked instead: forms span, "
    "each component cuts one point, points distinct, count equals degree"
)


def _canonical(values):
    vec = tuple(as_fraction(v) for v in values)
    lead = next((v for v in vec if v != 0), None)
    if lead is None:
        raise InvalidInputError("the zero vector has no projective meaning")
    return tuple(v / lead for v in vec)


@dataclass(frozen=True)
class LinearForm:
    coefficients: tuple

    def __post_init__(self):
        object.__setattr__(self, "coefficients", _canonical(self.coefficients))

    @property
    def ambient_dim(self):
        return len(self.coefficients) - 1

    def __call__(self, coords):
        return sum((c * x for c, x in zip(self.coefficients, coords)), Fraction(0))

    def to_json(self):
        return [format_fraction(c) for c in self.coefficients]


@dataclass(frozen=True)
class ProjectivePoint:
    coordinates: tuple

    def __post_init__(self):
        object.__setattr__(self, "coordinates", _canonical(self.coordinates))

    def affine(self, chart):
        w = self.coordinates[chart]
        if w == 0:
            raise PreconditionError(f"point {self.to_json()} lies at infinity for chart x_{chart}")
        return tuple(c / w for c in self.coordinates)

    def to_json(self):
        return [format_fraction(c) for c in self.coordinates]


def _resolve_chart(chart, ambient_dim):
    if chart is None:
        return ambient_dim
    if chart < 0:
        chart += ambient_dim + 1
    if not 0 <= chart <= ambient_dim:
        raise InvalidInputError(f"chart {chart} outside 0..{ambient_dim}")
    return chart


@dataclass(frozen=True)
class SpecializationMap:
    """Images ``y_i -> forms[i]`` of the variables."""

    forms: tuple
    ambient_dim: int

    def __post_init__(self):
        forms = tuple(f if isinstance(f, LinearForm) else LinearForm(f) for f in self.forms)
        object.__setattr__(self, "forms", forms)
        for f in forms:
            if f.ambient_dim != self.ambient_dim:
                raise InvalidInputError(
                    f"form {f.to_json()} does not live in P^{self.ambient_dim}"
                )
        if len(set(forms)) != len(forms):
            raise NonGenericError("forms are not pairwise distinct up to scaling")
        if rank([f.coefficients for f in forms]) != self.ambient_dim + 1:
            raise NonGenericError("forms do not span the space of linear forms")


@dataclass(frozen=True)
class PointConfiguration:
    points: tuple
    chart: int
    provenance: tuple = ()

    def __post_init__(self):
        if len(set(self.points)) != len(self.points):
            raise NonGenericError("points collide")

    @property
    def ambient_dim(self):
        return len(self.points[0].coordinates) - 1

    def affine_points(self):
        return [p.affine(self.chart) for p in self.points]

    def to_dict(self):
        return {
            "ambient_dim": self.ambient_dim,
            "chart": self.chart,
            "points": [p.to_json() for p in self.points],
            "affine": [
                [format_fraction(c) for i, c in enumerate(a) if i != self.chart]
                for a in self.affine_points()
            ],
            "provenance": [list(from_mask(c)) for c in self.provenance],
        }

    @classmethod
    def from_dict(cls, doc):
        points = tuple(ProjectivePoint(p) for p in doc["points"])
        prov = tuple(to_mask(c) for c in doc.get("provenance", []))
        return cls(points, doc.get("chart", len(points[0].coordinates) - 1), prov)


def specialize(ideal, smap, chart=None):
    """Send each prime component to the point cut out by its forms."""
    params = infer_parameters(ideal)
    if params.d != smap.ambient_dim:
        raise PreconditionError(
            f"ideal has codimension {params.d} but forms live in P^{smap.ambient_dim}"
        )
    if len(smap.forms) != ideal.variable_count:
        raise PreconditionError(
            f"{ideal.variable_count} variables but {len(smap.forms)} forms"
        )
    chart = _resolve_chart(chart, smap.ambient_dim)
    points = []
    prov = []
    for comp in primary_decomposition(ideal):
        rows = [smap.forms[v].coefficients for v in from_mask(comp.variables)]
        kernel = nullspace(rows, smap.ambient_dim + 1)
        if len(kernel) != 1:
            raise NonGenericError(
                f"non-generic: component {comp.variable_list()} does not cut a point"
            )
        p = ProjectivePoint(kernel[0])
        if p.coordinates[chart] == 0:
            raise PreconditionError(
                f"component {comp.variable_list()} gives a point at infinity for chart x_{chart}"
            )
        points.append(p)
        prov.append(comp.variables)
    if len(set(points)) != len(points):
        raise NonGenericError("non-generic: points collide")
    return PointConfiguration(tuple(points), chart, tuple(prov))


def monomial_exponents(nvars, degree):
    """Exponent vectors of all monomials of ``degree`` in ``nvars`` variables."""
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def _eval_monomial(exps, coords):
    return prod((c ** e for c, e in zip(coords, exps)), start=Fraction(1))


def evaluation_matrix(X, n):
    exps = monomial_exponents(X.ambient_dim + 1, n)
    return [[_eval_monomial(e, p.coordinates) for e in exps] for p in X.points]


def is_n_correct(X, n):
    """Whether degree-n forms restricted to X are an isomorphism."""
    d = X.ambient_dim
    if len(X.points) != comb(d + n, d):
        raise PreconditionError(
            f"{len(X.points)} points, but n-correctness needs C(d+n, d) = {comb(d + n, d)}"
        )
    return determinant(evaluation_matrix(X, n)) != 0


@dataclass(frozen=True)
class GCCertificate:
    point: int
    factor_indices: tuple
    scale: Fraction

    def to_dict(self):
        return {
            "point": self.point,
            "factors": list(self.factor_indices),
            "scale": format_fraction(self.scale),
        }

    @classmethod
    def from_dict(cls, doc):
        return cls(doc["point"], tuple(doc["factors"]), as_fraction(doc["scale"]))


def dedupe_pool(pool):
    """Index of the first occurrence of each distinct form, in pool order."""
    seen = {}
    for i, f in enumerate(pool):
        seen.setdefault(f, i)
    return sorted(seen.values())


def _zero_masks(X, pool, indices):
    return {
        i: sum(1 << k for k, p in enumerate(X.points) if pool[i](p.coordinates) == 0)
        for i in indices
    }


def certify_points(X, pool, n, allow_repeats=False):
    """Per point, the first certificate found in the pool, or None."""
    pool = [f if isinstance(f, LinearForm) else LinearForm(f) for f in pool]
    indices = dedupe_pool(pool)
    zeros = _zero_masks(X, pool, indices)
    everything = (1 << len(X.points)) - 1
    found = []
    for k, p in enumerate(X.points):
        bit = 1 << k
        usable = [i for i in indices if not zeros[i] & bit]
        others = everything & ~bit
        cert = None
        searches = [combinations]
        if allow_repeats:
            searches.append(combinations_with_replacement)
        for search in searches:
            for choice in search(usable, n):
                covered = 0
                for i in choice:
                    covered |= zeros[i]
                if covered == others:
                    aff = p.affine(X.chart)
                    value = prod((pool[i](aff) for i in choice), start=Fraction(1))
                    cert = GCCertificate(k, tuple(choice), 1 / value)
                    break
            if cert is not None:
                break
        found.append(cert)
    return found


def gc_certificates(X, pool, n, allow_repeats=False):
    """Certificates for every point, or None if some point has none in the pool."""
    found = certify_points(X, pool, n, allow_repeats)
    if any(c is None for c in found):
        return None
    return {c.point: c for c in found}


def certificate_value(cert, pool, coords):
    """The scaled product of the certificate at the affine point ``coords``."""
    return cert.scale * prod((pool[i](coords) for i in cert.factor_indices), start=Fraction(1))


@dataclass(frozen=True)
class HyperplaneCount:
    form: int
    count: int
    maximal: bool

    def to_dict(self):
        return {"form": self.form, "count": self.count, "maximal": self.maximal}


def maximal_hyperplanes(X, pool, n):
    d = X.ambient_dim
    target = comb(d - 1 + n, n)
    out = []
    for i, f in enumerate(pool):
        f = f if isinstance(f, LinearForm) else LinearForm(f)
        count = sum(1 for p in X.points if f(p.coordinates) == 0)
        out.append(HyperplaneCount(i, count, count == target))
    return out


def spanned_hyperplanes(X):
    """Every hyperplane spanned by d points of X, deduplicated, in discovery order."""
    d = X.ambient_dim
    seen = {}
    for pts in combinations(X.points, d):
        kernel = nullspace([p.coordinates for p in pts], d + 1)
        if len(kernel) == 1:
            seen.setdefault(LinearForm(kernel[0]), None)
    return list(seen)


# polynomials are dicts from exponent tuples to Fractions

def poly_product_of_forms(forms):
    nvars = len(forms[0].coefficients)
    poly = {(0,) * nvars: Fraction(1)}
    for f in forms:
        nxt = {}
        for exps, c in poly.items():
            for v, a in enumerate(f.coefficients):
                if a == 0:
                    continue
                e = list(exps)
                e[v] += 1
                e = tuple(e)
                nxt[e] = nxt.get(e, 0) + c * a
        poly = {e: c for e, c in nxt.items() if c != 0}
    return poly


def span_dimension(polys, nvars, degree):
    exps = monomial_exponents(nvars, degree)
    return rank([[p.get(e, Fraction(0)) for e in exps] for p in polys])


@dataclass
class GeneratorReport:
    products: list
    span: int
    expected: int
    q_span: int

    def to_dict(self):
        return {
            "products": [list(p) for p in self.products],
            "span": self.span,
            "expected": self.expected,
            "q_span": self.q_span,
        }


def generators_from_certificates(X, certs, pool):
    """Products Q_p * l_{p,j} for d independent pool forms l_{p,j} through p.

    Forms dividing another point's certificate are preferred, then any
    pool form through p. Raises if some point has fewer than d
    independent candidates.
    """
    pool = [f if isinstance(f, LinearForm) else LinearForm(f) for f in pool]
    d = X.ambient_dim
    n = len(next(iter(certs.values())).factor_indices)
    products = []
    for k, p in enumerate(X.points):
        through = [i for i, f in enumerate(pool) if f(p.coordinates) == 0]
        from_certs = sorted(
            {i for q, c in certs.items() if q != k for i in c.factor_indices} & set(through)
        )
        chosen = []
        for i in from_certs + [i for i in through if i not in from_certs]:
            trial = [pool[j].coefficients for j in chosen + [i]]
            if rank(trial) == len(chosen) + 1:
                chosen.append(i)
            if len(chosen) == d:
                break
        if len(chosen) < d:
            raise PreconditionError(
                f"point {k} has only {len(chosen)} independent pool forms through it"
            )
        for i in chosen:
            products.append(tuple(certs[k].factor_indices) + (i,))
    for factors in products:
        for q in X.points:
            if prod((pool[i](q.coordinates) for i in factors), start=Fraction(1)) != 0:
                raise AssertionError(f"product {factors} does not vanish on X")
    polys = [poly_product_of_forms([pool[i] for i in f]) for f in products]
    span = span_dimension(polys, d + 1, n + 1)
    expected = comb(n + d, n + 1)
    if span != expected:
        raise AssertionError(f"products span {span} dimensions, expected {expected}")
    q_polys = [poly_product_of_forms([pool[i] for i in c.factor_indices]) for c in certs.values()]
    q_span = span_dimension(q_polys, d + 1, n)
    return GeneratorReport(products, span, expected, q_span)


@dataclass(frozen=True)
class ResolutionProfile:
    d: int
    n: int
    terms: tuple
    numerator: tuple
    hilbert_constant: int

    def to_dict(self):
        return {
            "d": self.d,
            "n": self.n,
            "terms": [list(t) for t in self.terms],
            "numerator": list(self.numerator),
            "hilbert_polynomial": self.hilbert_constant,
        }


def resolution_profile(d, n):
    """Graded ranks of the Eagon-Northcott resolution of points of a GC_{d,n} set.

    ``terms`` lists ``(shift, rank)`` per homological degree 1..d and
    ``numerator`` the Hilbert series numerator over (1-t)^(d+1), by power.
    """
    if d < 1 or n < 1:
        raise PreconditionError("resolution_profile needs d >= 1 and n >= 1")
    terms = tuple((n + i, comb(n + i - 1, i - 1) * comb(n + d, n + i)) for i in range(1, d + 1))
    numerator = [0] * (n + d + 1)
    numerator[0] = 1
    for i, (shift, b) in enumerate(terms, start=1):
        numerator[shift] += (-1) ** i * b
    return ResolutionProfile(d, n, terms, tuple(numerator), comb(n + d, d))


def hilbert_polynomial_from_numerator(numerator, d):
    """Constant value of the Hilbert polynomial, evaluated at a large t.

    Sum of numerator[j] * C(t + d - j, d); for a zero-dimensional scheme
    this is constant once t exceeds the numerator's degree.
    """
    t = len(numerator) + d
    return sum(c * comb(t + d - j, d) for j, c in enumerate(numerator))


@dataclass
class VerificationReport:
    n: int
    n_correct: bool
    certificates: list
    hyperplanes: list
    generator_span: int = None
    q_span: int = None

    @property
    def gc_certified(self):
        return all(c is not None for c in self.certificates)

    @property
    def ok(self):
        return self.n_correct and self.gc_certified

    def to_dict(self):
        return {
            "n": self.n,
            "n_correct": self.n_correct,
            "gc_certified": self.gc_certified,
            "certificates": [None if c is None else c.to_dict() for c in self.certificates],
            "uncertified_points": [k for k, c in enumerate(self.certificates) if c is None],
            "maximal_hyperplanes": [h.to_dict() for h in self.hyperplanes],
            "generator_span": self.generator_span,
            "q_span": self.q_span,
            "regular_sequence": REGULAR_SEQUENCE_NOTE,
            "warnings": [RADICAL_EQUALITY_WARNING],
        }


def verify(X, pool, n, allow_repeats=False):
    """n-correctness, pool certificates and hyperplane counts in one report."""
    pool = [f if isinstance(f, LinearForm) else LinearForm(f) for f in pool]
    certs = certify_points(X, pool, n, allow_repeats)
    report = VerificationReport(n, is_n_correct(X, n), certs, maximal_hyperplanes(X, pool, n))
    if report.gc_certified:
        try:
            gens = generators_from_certificates(X, {c.point: c for c in certs}, pool)
        except PreconditionError:
            pass
        else:
            report.generator_span = gens.span
            report.q_span = gens.q_span
    return report
