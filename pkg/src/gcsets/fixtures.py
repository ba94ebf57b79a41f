"""Built-in example data.

Vertex indices are 0-based everywhere. ``label_offset`` records how the
source labels its variables: label = index + label_offset.
"""

from .ideal import SquarefreeMonomialIdeal

# four lines in P^2, no three concurrent; the six points avoid x_2 = 0
CY_LINES = [
    ["1", "0", "0"],
    ["0", "1", "0"],
    ["1", "1", "-3"],
    ["1", "-1", "1"],
]

BR_GENERATORS = [
    [2, 6, 7], [1, 2, 6],
    [0, 2, 6], [1, 2, 5],
    [0, 4, 9], [0, 2, 4],
    [1, 5, 8], [0, 1, 5],
    [0, 1, 4], [0, 1, 2],
]

# y_i -> x_i for i < 4, then the six shifted coordinate planes
BR_FORMS = [
    ["1", "0", "0", "0"],
    ["0", "1", "0", "0"],
    ["0", "0", "1", "0"],
    ["0", "0", "0", "1"],
    ["1", "0", "0", "-1"],
    ["0", "1", "0", "-1"],
    ["0", "0", "1", "-1"],
    ["0", "0", "1", "-2"],
    ["0", "1", "0", "-2"],
    ["1", "0", "0", "-2"],
]

# labels y_1..y_8 in the source
ONE_LATTICE_LABELED = [
    [1, 5, 6], [2, 6, 7], [3, 7, 8], [4, 5, 8], [1, 5, 7],
    [2, 6, 8], [5, 6, 7], [5, 6, 8], [5, 7, 8], [6, 7, 8],
]
ONE_LATTICE_GENERATORS = [[v - 1 for v in g] for g in ONE_LATTICE_LABELED]

FIXTURES = {
    "cy-4-lines": {
        "ideal": {"variables": 4, "generators": [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]},
        "forms": {"ambient_dim": 2, "forms": CY_LINES},
        "n": 2,
        "label_offset": 1,
    },
    "berzolari-radon-10": {
        "ideal": {"variables": 10, "generators": BR_GENERATORS},
        "forms": {"ambient_dim": 3, "forms": BR_FORMS},
        "n": 2,
        "label_offset": 0,
    },
    "one-lattice-8": {
        "ideal": {"variables": 8, "generators": ONE_LATTICE_GENERATORS},
        "n": 2,
        "label_offset": 1,
    },
}


def fixture(name):
    """A fresh copy of the named fixture document."""
    import copy

    try:
        doc = FIXTURES[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; choose from {sorted(FIXTURES)}") from None
    return {"name": name, **copy.deepcopy(doc)}


def fixture_ideal(name):
    doc = FIXTURES[name]["ideal"]
    return SquarefreeMonomialIdeal.from_supports(doc["variables"], doc["generators"])
