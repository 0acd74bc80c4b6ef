"""Command-line front end.

Every subcommand prints one JSON document (``--format json``, the
default) or a readable rendering of it (``--format human``). Exit codes:
0 success, 1 no certificate / nothing found, 2 usage error, 3 resource
bound exhausted.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import documents
from .certificate import dumps
from .errors import HypothesisError, NotFoundError, ResourceLimitError, UnsupportedError
from .global_constructions import DEFAULT_ELL_MAX, DEFAULT_P_MAX
from .local_certificates import DEFAULT_BUDGET, DiagonalForm, build_cy_form, build_theorem1_form
from .polytext import parse_poly

EXIT_OK, EXIT_NONE, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3
NO_CERT = "no certificate by this method"


class _UsageError(Exception):
    pass


def _poly_arg(text):
    try:
        return parse_poly(text)
    except (ValueError, json.JSONDecodeError) as e:
        raise argparse.ArgumentTypeError(f"cannot parse polynomial {text!r}: {e}")


def _form_arg(text):
    try:
        return DiagonalForm.parse(text)
    except (ValueError, TypeError) as e:
        raise argparse.ArgumentTypeError(f"cannot parse diagonal form {text!r}: {e}")


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "human"), default="json")
    common.add_argument("--out", help="also write the document to this path")

    ap = argparse.ArgumentParser(prog="abelian-points", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, help_):
        return sub.add_parser(name, help=help_, parents=[common])

    p = add("certify-cubic", "no-abelian-points certificate for a X^3 + b Y^3 + c Z^3 at p")
    for k in "abc":
        p.add_argument(f"--{k}", type=int, required=True)
    p.add_argument("--p", type=_positive, required=True)
    p.add_argument("--family", action="store_true", help="use a X^3 + b p Y^3 + c p^2 Z^3 instead")

    p = add("certify-cy", "certificate for sum p^i X_i^ell")
    p.add_argument("--ell", type=_positive, required=True)
    p.add_argument("--p", type=_positive, required=True)

    p = add("scan", "primes p <= p-max at which a diagonal form is certified")
    p.add_argument("--form", type=_form_arg, required=True)
    p.add_argument("--p-max", type=_positive, default=100)

    p = add("solve-local", "Hensel-liftable zero of a diagonal form at p")
    p.add_argument("--form", type=_form_arg, required=True)
    p.add_argument("--p", type=_positive, required=True)
    p.add_argument("--precision", type=_positive, default=None)
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)

    p = add("find-ell", "curve order N and prime ell for F_q")
    p.add_argument("--q", type=_positive, required=True)

    p = add("thm-ell", "Selmer-Jacobian witness prime for index ell")
    p.add_argument("--ell", type=_positive, required=True)

    p = add("thm3", "torsion witness (ell, p) for a number field")
    p.add_argument("--f", type=_poly_arg, required=True)
    p.add_argument("--p-max", type=_positive, default=DEFAULT_P_MAX)
    p.add_argument("--ell-max", type=_positive, default=DEFAULT_ELL_MAX)

    p = add("cor2", "split prime p = 2 mod 3 for a number field")
    p.add_argument("--f", type=_poly_arg, required=True)
    p.add_argument("--p-max", type=_positive, default=DEFAULT_P_MAX)

    p = add("genus-plan", "double-cover plan for genus g")
    p.add_argument("--g", type=int, required=True)

    p = add("norm-cert", "N(X) = t Z^d over Q^ab((t^(1/2)))")
    p.add_argument("--f", type=_poly_arg, required=True)
    p.add_argument("--m", type=int, default=2, help="v(t); 2 when t^(1/2) is the uniformizer")
    p.add_argument("--scan-bound", type=_positive, default=documents.DEFAULT_SCAN_BOUND)

    p = add("tame-symbol", "tame symbol of two Laurent series")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--field", default=None, help="number field polynomial for parenthesized coefficients")
    p.add_argument("--residue-field", choices=("Q", "Q^ab"), default="Q^ab")

    p = add("sn-cert", "symmetric Galois group certificate from cycle types")
    p.add_argument("--f", type=_poly_arg, required=True)
    p.add_argument("--bound", type=_positive, default=documents.DEFAULT_SCAN_BOUND)

    add("k4", "S4 on K4 stabilizer report")

    p = add("catalan", "|2^s - 3^t| = 1 in a box")
    p.add_argument("--s-max", type=int, default=60)
    p.add_argument("--t-max", type=int, default=40)

    p = add("verify", "recompute a JSON document from its recorded inputs")
    p.add_argument("file", help="path, or - for stdin")
    return ap


def _dispatch(args) -> tuple[int, dict | None, str | None]:
    c = args.command
    if c == "certify-cubic":
        if args.family:
            form = build_theorem1_form(args.a, args.b, args.c, args.p)
        else:
            try:
                form = DiagonalForm(3, (args.a, args.b, args.c))
            except ValueError as e:
                raise _UsageError(f"--a/--b/--c: {e}")
        return _maybe(documents.no_abelian_points(form, args.p), form, args.p)
    if c == "certify-cy":
        form = build_cy_form(args.ell, args.p)
        return _maybe(documents.no_abelian_points(form, args.p), form, args.p)
    if c == "scan":
        doc = documents.prime_scan(args.form, args.p_max)
        return (EXIT_OK if doc["parameters"]["primes"] else EXIT_NONE), doc, None
    if c == "solve-local":
        doc = documents.local_witness(args.form, args.p, args.precision, args.budget)
        if doc is None:
            return EXIT_NONE, None, "no Hensel-liftable zero found at the tried precisions"
        return EXIT_OK, doc, None
    if c == "find-ell":
        return EXIT_OK, documents.ell_choice(args.q), None
    if c == "thm-ell":
        return EXIT_OK, documents.thm_ell(args.ell), None
    if c == "thm3":
        return EXIT_OK, documents.thm3(args.f, args.p_max, args.ell_max), None
    if c == "cor2":
        return EXIT_OK, documents.split_prime(args.f, args.p_max), None
    if c == "genus-plan":
        return EXIT_OK, documents.genus_plan(args.g), None
    if c == "norm-cert":
        doc = documents.norm_equation(args.f, args.m, args.scan_bound)
        return (EXIT_OK, doc, None) if doc else (EXIT_NONE, None, NO_CERT)
    if c == "tame-symbol":
        return EXIT_OK, documents.tame(args.a, args.b, args.field, args.residue_field), None
    if c == "sn-cert":
        doc = documents.galois(args.f, args.bound)
        certified = doc["parameters"]["verdict"] == "CertifiedSymmetric"
        return (EXIT_OK if certified else EXIT_NONE), doc, None
    if c == "k4":
        return EXIT_OK, documents.k4(), None
    if c == "catalan":
        return EXIT_OK, documents.catalan(args.s_max, args.t_max), None
    if c == "verify":
        try:
            text = sys.stdin.read() if args.file == "-" else open(args.file, encoding="utf-8").read()
            doc = json.loads(text)
        except (OSError, json.JSONDecodeError) as e:
            raise _UsageError(f"file: {e}")
        report = documents.verify_document(doc)
        return (EXIT_OK if report.ok else EXIT_NONE), report.to_dict(), None
    raise _UsageError(f"unknown command {c}")


def _maybe(doc, form, p):
    if doc is None:
        return EXIT_NONE, None, f"{NO_CERT}: {form} at p = {p}"
    return EXIT_OK, doc, None


def render_human(doc: dict) -> str:
    lines = [f"{doc.get('kind', 'document')}"]
    if "form" in doc:
        lines.append(f"  form: {doc['form']['text']}")
    if "prime" in doc:
        lines.append(f"  prime: {doc['prime']}")
    for k in ("q", "N", "ell", "ok"):
        if k in doc:
            lines.append(f"  {k}: {doc[k]}")
    for c in doc.get("conditions", []):
        mark = "ok " if c["verified"] else "FAIL"
        lines.append(f"  [{mark}] {c['name']}: {c['statement']}")
    for i, step in enumerate(doc.get("lemma_chain", []), 1):
        lines.append(f"  {i}. {step}")
    for p in doc.get("problems", []):
        lines.append(f"  problem: {p}")
    return "\n".join(lines) + "\n"


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        code, doc, message = _dispatch(args)
    except (_UsageError, HypothesisError, UnsupportedError) as e:
        print(f"error: {e}", file=stderr)
        return EXIT_USAGE
    except NotFoundError as e:
        print(f"not found: {e}", file=stderr)
        return EXIT_NONE
    except ResourceLimitError as e:
        print(f"resource limit: {e}", file=stderr)
        return EXIT_RESOURCE
    except ValueError as e:
        print(f"error: {e}", file=stderr)
        return EXIT_USAGE
    if doc is None:
        if args.format == "json":
            stdout.write(dumps({"kind": "NoCertificate", "message": message}))
        else:
            stdout.write(message + "\n")
        return code
    text = dumps(doc) if args.format == "json" else render_human(doc)
    stdout.write(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(dumps(doc))
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
