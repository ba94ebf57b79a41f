"""Command-line interface.

Exit codes: 0 when the checked property holds (or the command just
produces data), 1 when it fails, 2 on invalid input.
"""

import argparse
import sys

from . import io
from .chung_yao import chung_yao_ideal, generic_forms
from .cm import bicm_report, is_cohen_macaulay
from .complex import alexander_dual, f_vector
from .errors import GCSetsError
from .fixtures import FIXTURES, fixture
from .gc import infer_parameters, monomial_gc_report
from .geometry import (
    PointConfiguration,
    SpecializationMap,
    resolution_profile,
    spanned_hyperplanes,
    specialize,
    verify,
)
from .ideal import codim_degree, dual_ideal, primary_decomposition

EXIT_OK, EXIT_FAIL, EXIT_INVALID = 0, 1, 2


class Outcome:
    def __init__(self, doc, text=None, code=EXIT_OK, data=False):
        self.doc = doc
        self.text = text
        self.code = code
        self.data = data


def _read_input(path):
    if path is None or path == "-":
        text = sys.stdin.read()
    else:
        with open(path) as fh:
            text = fh.read()
    return io.load_document(text)


def cmd_complex(args):
    cx = io.extract_complex(_read_input(args.input))
    if args.action == "fvector":
        f = list(f_vector(cx))
        return Outcome({"f_vector": f}, "f = (" + ",".join(map(str, f)) + ")")
    if args.action == "dual":
        return Outcome(io.complex_to_dict(alexander_dual(cx)), data=True)
    if args.action == "check-cm":
        res = is_cohen_macaulay(cx)
        doc = {
            "cm": res.is_cm,
            "failing_face": None if res.failing_face is None else list(res.failing_face),
            "failing_dimension": res.failing_dimension,
        }
        text = "Cohen-Macaulay" if res else (
            f"not Cohen-Macaulay: link of {list(res.failing_face)} has homology "
            f"in dimension {res.failing_dimension}"
        )
        return Outcome(doc, text, EXIT_OK if res else EXIT_FAIL)
    report = bicm_report(cx)
    doc = report.to_dict()
    text = "\n".join(f"{k}: {v}" for k, v in doc.items())
    return Outcome(doc, text, EXIT_OK if report.bicm else EXIT_FAIL)


def cmd_ideal(args):
    ideal = io.extract_ideal(_read_input(args.input))
    if args.action == "decompose":
        comps = [c.variable_list() for c in primary_decomposition(ideal)]
        return Outcome({"components": comps}, "\n".join(map(str, comps)))
    if args.action == "dual":
        return Outcome(io.ideal_to_dict(dual_ideal(ideal)), data=True)
    params = infer_parameters(ideal)
    codim, degree = codim_degree(ideal)
    doc = {"codimension": codim, "degree": degree, "d": params.d, "n": params.n}
    return Outcome(doc, f"d = {params.d}, n = {params.n}, degree = {degree}")


def cmd_gc(args):
    doc = _read_input(args.input)
    report = monomial_gc_report(io.extract_ideal(doc))
    out = report.to_dict()
    offset = doc.get("label_offset", 0)
    out["label_offset"] = offset
    lines = [
        f"d = {report.params.d}, n = {report.params.n}",
        f"monomial GC components: {report.gc_component_count} of {len(report.components)}",
    ]
    for comp, w in zip(report.components, report.witnesses):
        lines.append(f"  {comp.variable_list()}: " + ("no witness" if w is None else f"tau = {list(w.tau)}"))
    hyper = ", ".join(f"{v} (label {v + offset}, {c} components)" for v, c in report.maximal_hyperplanes)
    lines.append(f"maximal monomial hyperplanes: {hyper or 'none'}")
    return Outcome(out, "\n".join(lines), EXIT_OK if report.is_monomial_gc else EXIT_FAIL)


def _passthrough(doc):
    return {k: doc[k] for k in ("name", "n", "label_offset") if k in doc}


def cmd_specialize(args):
    doc = _read_input(args.input)
    ideal = io.extract_ideal(doc)
    try:
        d, forms = io.extract_forms(doc)
    except GCSetsError:
        d = infer_parameters(ideal).d
        forms = generic_forms(d, ideal.variable_count, args.seed)
    X = specialize(ideal, SpecializationMap(tuple(forms), d), args.chart)
    out = _passthrough(doc)
    out.update(
        ideal=io.ideal_to_dict(ideal),
        forms=io.forms_to_dict(forms, d),
        configuration=X.to_dict(),
    )
    return Outcome(out, data=True)


def cmd_verify(args):
    doc = _read_input(args.input)
    conf = doc.get("configuration", doc)
    X = io.configuration_from_dict(conf)
    if args.chart is not None:
        X = PointConfiguration(X.points, args.chart % (X.ambient_dim + 1), X.provenance)
    _, pool = io.extract_forms(doc)
    n = args.n if args.n is not None else doc.get("n")
    if n is None:
        raise GCSetsError("verify needs --n or an 'n' entry in the input")
    if args.extend_pool:
        pool = pool + [h for h in spanned_hyperplanes(X) if h not in pool]
    report = verify(X, pool, n, args.allow_repeats)
    out = report.to_dict()
    out["pool"] = io.forms_to_dict(pool, X.ambient_dim)["forms"]
    maximal = [h.form for h in report.hyperplanes if h.maximal]
    text = "\n".join([
        f"{n}-correct: {report.n_correct}",
        "GC-certified from pool: " + (
            "yes" if report.gc_certified
            else f"no (points {out['uncertified_points']} not certified from pool)"
        ),
        f"maximal hyperplanes (pool indices): {maximal}",
    ])
    return Outcome(out, text, EXIT_OK if report.ok else EXIT_FAIL)


def cmd_generate(args):
    ideal = chung_yao_ideal(args.d, args.n)
    forms = generic_forms(args.d, args.d + args.n, args.seed)
    out = {
        "name": f"chung-yao-{args.d}-{args.n}",
        "n": args.n,
        "ideal": io.ideal_to_dict(ideal),
        "forms": io.forms_to_dict(forms, args.d),
    }
    return Outcome(out, data=True)


def cmd_profile(args):
    prof = resolution_profile(args.d, args.n)
    terms = " -> ".join(f"R(-{s})^{r}" for s, r in reversed(prof.terms))
    text = f"{terms} -> R -> R/I -> 0\nnumerator: {list(prof.numerator)}\nHilbert polynomial: {prof.hilbert_constant}"
    return Outcome(prof.to_dict(), text)


def cmd_fixture(args):
    return Outcome(fixture(args.name), data=True)


def build_parser():
    parser = argparse.ArgumentParser(prog="gcsets", description=__doc__)
    parser.add_argument("--json", action="store_true", help="emit reports as JSON")
    # SUPPRESS keeps a subcommand from resetting a --json given before it
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("complex", parents=[common])
    p.add_argument("action", choices=["fvector", "dual", "check-cm", "check-bicm"])
    p.add_argument("input", nargs="?")
    p.set_defaults(func=cmd_complex)

    p = sub.add_parser("ideal", parents=[common])
    p.add_argument("action", choices=["decompose", "dual", "params"])
    p.add_argument("input", nargs="?")
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("gc", parents=[common])
    p.add_argument("action", choices=["monomial-report"])
    p.add_argument("input", nargs="?")
    p.set_defaults(func=cmd_gc)

    p = sub.add_parser("specialize", parents=[common])
    p.add_argument("input", nargs="?")
    p.add_argument("--seed", type=int, default=1, help="seed for generic forms when none are given")
    p.add_argument("--chart", type=int, default=None)
    p.set_defaults(func=cmd_specialize)

    p = sub.add_parser("verify", parents=[common])
    p.add_argument("input", nargs="?")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--chart", type=int, default=None)
    p.add_argument("--allow-repeats", action="store_true")
    p.add_argument(
        "--extend-pool",
        action="store_true",
        help="add every hyperplane spanned by d points to the certificate pool",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", parents=[common])
    p.add_argument("kind", choices=["chung-yao"])
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=1)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("profile", parents=[common])
    p.add_argument("kind", choices=["resolution"])
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("fixture", parents=[common])
    p.add_argument("name", choices=sorted(FIXTURES))
    p.set_defaults(func=cmd_fixture)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        outcome = args.func(args)
    except (GCSetsError, OSError) as exc:
        kind = getattr(exc, "kind", "io")
        if args.json:
            print(io.dumps({"error": {"type": kind, "message": str(exc)}}))
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.json or outcome.data or outcome.text is None:
        print(io.dumps(outcome.doc))
    else:
        print(outcome.text)
    return outcome.code


def run():
    sys.exit(main())

