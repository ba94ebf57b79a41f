"""JSON documents for complexes, ideals, forms and point configurations.

Commands pass around one JSON object. It may be a bare complex
(``vertices``/``facets``), a bare ideal (``variables``/``generators``), a
bare form list (``ambient_dim``/``forms``), or a bundle holding any of
them under ``complex``, ``ideal``, ``forms`` and ``configuration``.
"""

import json

from .complex import from_facets
from .errors import InvalidInputError
from .geometry import LinearForm, PointConfiguration, SpecializationMap
from .ideal import SquarefreeMonomialIdeal, complex_of


def _int(value, what):
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidInputError(f"{what} must be an integer, got {value!r}")
    return value


def _face_list(raw, what):
    if not isinstance(raw, list):
        raise InvalidInputError(f"{what} must be a list of faces")
    out = []
    for face in raw:
        if not isinstance(face, list):
            raise InvalidInputError(f"each entry of {what} must be a list of integers")
        vals = [_int(v, "vertex") for v in face]
        if any(a >= b for a, b in zip(vals, vals[1:])):
            raise InvalidInputError(f"face {vals} is not strictly increasing")
        out.append(vals)
    return out


def complex_to_dict(cx):
    doc = {"vertices": cx.vertex_count, "facets": cx.facet_lists()}
    if cx.is_void:
        doc["empty"] = "void"
    return doc


def complex_from_dict(doc):
    try:
        m = _int(doc["vertices"], "vertices")
        facets = _face_list(doc["facets"], "facets")
    except KeyError as exc:
        raise InvalidInputError(f"complex document lacks {exc}") from None
    return from_facets(m, facets, empty=doc.get("empty"))


def ideal_to_dict(ideal):
    return {"variables": ideal.variable_count, "generators": ideal.generator_lists()}


def ideal_from_dict(doc):
    try:
        m = _int(doc["variables"], "variables")
        gens = _face_list(doc["generators"], "generators")
    except KeyError as exc:
        raise InvalidInputError(f"ideal document lacks {exc}") from None
    if any(not g for g in gens):
        raise InvalidInputError("generators must be nonempty")
    return SquarefreeMonomialIdeal.from_supports(m, gens)


def forms_to_dict(forms, ambient_dim=None):
    if ambient_dim is None:
        ambient_dim = forms[0].ambient_dim
    return {"ambient_dim": ambient_dim, "forms": [f.to_json() for f in forms]}


def forms_from_dict(doc):
    try:
        d = _int(doc["ambient_dim"], "ambient_dim")
        raw = doc["forms"]
    except KeyError as exc:
        raise InvalidInputError(f"forms document lacks {exc}") from None
    forms = []
    for row in raw:
        if not isinstance(row, list) or len(row) != d + 1:
            raise InvalidInputError(f"form {row!r} needs {d + 1} coefficients")
        try:
            forms.append(LinearForm(row))
        except (ValueError, ZeroDivisionError, TypeError) as exc:
            raise InvalidInputError(f"bad coefficient in {row!r}: {exc}") from None
    return d, forms


def specialization_map_from_dict(doc):
    d, forms = forms_from_dict(doc)
    return SpecializationMap(tuple(forms), d)


def configuration_from_dict(doc):
    try:
        return PointConfiguration.from_dict(doc)
    except (KeyError, IndexError) as exc:
        raise InvalidInputError(f"bad configuration document: {exc}") from None


def load_document(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"input is not JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise InvalidInputError("input must be a JSON object")
    return doc


def extract_ideal(doc):
    if "ideal" in doc:
        return ideal_from_dict(doc["ideal"])
    if "generators" in doc:
        return ideal_from_dict(doc)
    raise InvalidInputError("no ideal in input")


def extract_complex(doc):
    """A complex from a complex document, or the complex of an ideal."""
    if "complex" in doc:
        return complex_from_dict(doc["complex"])
    if "facets" in doc:
        return complex_from_dict(doc)
    return complex_of(extract_ideal(doc))


def extract_forms(doc):
    if "forms" in doc and isinstance(doc["forms"], dict):
        return forms_from_dict(doc["forms"])
    if "forms" in doc and "ambient_dim" in doc:
        return forms_from_dict(doc)
    raise InvalidInputError("no forms in input")


def dumps(doc):
    return json.dumps(doc, indent=2, sort_keys=False)
