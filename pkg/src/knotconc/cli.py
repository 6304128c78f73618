"""Command-line front end.

Commands: alexander, covers, classify, signature, torus, witness.
Input is a matrix document: either JSON with fields "name" and "matrix",
or a bare whitespace-separated matrix (one row per line; blank lines and
lines starting with '#' are ignored).  Machine mode (--json) emits a single
JSON document with the same numeric content as the human output and no
timestamps, so identical invocations are byte-identical.

Exit statuses: 0 success, 2 invalid input, 3 obstruction hypothesis not
satisfied, 4 internal assertion failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import covers, obstruction, signatures
from .errors import (
    BadTorusParameter,
    FactorizationLimit,
    HypothesisNotSatisfied,
    IdentityViolation,
    InvalidSeifertMatrix,
    KnotConcError,
    LemmaViolation,
    NotAKnotPolynomial,
    SeparationFailure,
    SignatureUncertified,
    WitnessSearchExhausted,
)
from .exactpoly import (
    distinct_prime_factors,
    factorize,
    parse_coefficients,
    prime_power_decomposition,
)
from .seifert import SeifertMatrix, alexander, torus_2q
from .signatures import JUMP, UnitRootArg

EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_HYPOTHESIS = 3
EXIT_INTERNAL = 4


class InputError(Exception):
    pass


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError("cannot read %s: %s" % (path, exc))


def parse_matrix_document(text, default_name="matrix"):
    """Parse a JSON or bare-text matrix document into (name, SeifertMatrix)."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError("invalid JSON document: %s" % exc)
        if not isinstance(doc, dict) or "matrix" not in doc:
            raise InputError('JSON document must have a "matrix" field')
        name = doc.get("name", default_name)
        rows = doc["matrix"]
    else:
        rows = []
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                rows.append([int(tok) for tok in line.replace(",", " ").split()])
            except ValueError:
                raise InputError("cannot parse matrix row: %r" % line)
        name = default_name
    try:
        matrix = SeifertMatrix(rows)
    except (TypeError, ValueError) as exc:
        raise InputError("bad matrix entries: %s" % exc)
    return name, matrix


def _load_matrix(args):
    name, V = parse_matrix_document(_read_text(args.input))
    report = V.validate()
    if not report.valid:
        raise InputError("invalid Seifert matrix: %s" % "; ".join(report.failures))
    return name, V


def _poly_doc(p):
    return {"coefficients": list(p.coeffs), "degree": p.degree(), "text": str(p)}


def _emit(args, doc, human_lines):
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        for line in human_lines:
            print(line)


# -- commands -------------------------------------------------------------


def cmd_alexander(args):
    name, V = _load_matrix(args)
    delta = alexander(V)
    d1 = delta(1)
    dm1 = delta(-1)
    doc = {
        "command": "alexander",
        "name": name,
        "dimension": V.dim,
        "alexander": _poly_doc(delta),
        "delta_at_1": d1,
        "delta_at_minus_1": dm1,
        "determinant": abs(dm1),
    }
    lines = [
        "name: %s" % name,
        "Delta(t) = %s" % delta,
        "coefficients (ascending): %s" % " ".join(str(c) for c in delta.coeffs),
        "degree: %d" % delta.degree(),
        "Delta(1) = %d" % d1,
        "Delta(-1) = %d  (determinant %d)" % (dm1, abs(dm1)),
    ]
    _emit(args, doc, lines)
    return EXIT_OK


def _delta_from_args(args):
    if args.delta is not None:
        delta = parse_coefficients(args.delta)
        if delta(1) not in (1, -1):
            raise InputError("Delta(1) must be +-1, got %d" % delta(1))
        return "delta", delta
    name, V = _load_matrix(args)
    return name, alexander(V)


def cmd_covers(args):
    if args.max_r < 2:
        raise InputError("--max-r must be >= 2")
    name, delta = _delta_from_args(args)
    rows = []
    for r in range(2, args.max_r + 1):
        order = covers.cover_order(delta, r)
        try:
            prime_power_decomposition(r)
            is_pp = True
        except KnotConcError:
            is_pp = False
        rows.append((r, order, is_pp))
    doc = {
        "command": "covers",
        "name": name,
        "alexander": _poly_doc(delta),
        "covers": [
            {"r": r, "order": order.value, "prime_power": is_pp}
            for r, order, is_pp in rows
        ],
    }
    lines = ["name: %s" % name, "Delta(t) = %s" % delta, "r  |H1|"]
    for r, order, is_pp in rows:
        lines.append("%-3d%s%s" % (r, order, "  (prime power)" if is_pp else ""))
    _emit(args, doc, lines)
    return EXIT_OK


def cmd_classify(args):
    name, delta = _delta_from_args(args)
    report = covers.classify_prime_power_covers(delta)
    factor_docs = []
    for n, mult in report.cyclotomic_factors:
        primes = []
        try:
            primes = distinct_prime_factors(n)
        except FactorizationLimit:
            pass
        factor_docs.append(
            {"n": n, "multiplicity": mult, "distinct_primes": primes}
        )
    witness = None
    if report.witness_cover is not None:
        r, order = report.witness_cover
        witness = {"r": r, "order": order.value}
    doc = {
        "command": "classify",
        "name": name,
        "alexander": _poly_doc(delta),
        "cyclotomic_factors": factor_docs,
        "non_cyclotomic_remainder": _poly_doc(report.non_cyclotomic_remainder),
        "all_prime_power_covers_trivial": report.all_prime_power_covers_trivial,
        "all_covers_trivial": report.all_covers_trivial,
        "witness_cover": witness,
    }
    lines = ["name: %s" % name, "Delta(t) = %s" % delta]
    if factor_docs:
        for f in factor_docs:
            lines.append(
                "factor phi_%d^%d  (n = %d has distinct primes %s)"
                % (f["n"], f["multiplicity"], f["n"], f["distinct_primes"])
            )
    else:
        lines.append("no cyclotomic factors")
    lines.append("non-cyclotomic remainder: %s" % report.non_cyclotomic_remainder)
    lines.append(
        "all prime power covers are homology spheres: %s"
        % report.all_prime_power_covers_trivial
    )
    lines.append("all covers are homology spheres: %s" % report.all_covers_trivial)
    if witness is not None:
        lines.append(
            "witness cover: r = %d with |H1| = %s"
            % (witness["r"], "infinite" if witness["order"] is None else witness["order"])
        )
    _emit(args, doc, lines)
    return EXIT_OK


def cmd_signature(args):
    if args.q < 2:
        raise InputError("--q must be >= 2")
    name, V = _load_matrix(args)
    profile = signatures.signature_profile(V, args.q)
    entries = {
        a: ("jump" if v is JUMP else v) for a, v in sorted(profile.values.items())
    }
    doc = {
        "command": "signature",
        "name": name,
        "q": args.q,
        "profile": {str(a): v for a, v in entries.items()},
    }
    lines = ["name: %s" % name, "q = %d" % args.q]
    for a, v in entries.items():
        lines.append("sigma(%d/%d) = %s" % (a, args.q, v))
    if args.q % 2 == 0:
        lines.append("sigma at omega = -1: %s" % entries[args.q // 2])
    _emit(args, doc, lines)
    return EXIT_OK


def cmd_torus(args):
    try:
        V = torus_2q(args.q)
    except BadTorusParameter as exc:
        raise InputError(str(exc))
    name = "T(2,%d)" % args.q
    doc = {"name": name, "matrix": [list(r) for r in V.rows]}
    lines = ["# %s" % name]
    lines += [" ".join(str(c) for c in row) for row in V.rows]
    if args.verify:
        lemma = signatures.verify_torus_lemma(args.q)
        steps = signatures.jump_step_check(V, args.q)
        doc["verify"] = {
            "min_signature": lemma.min_value,
            "sigma_at_minus_one": lemma.sigma_at_minus_one,
            "lemma_holds": True,
            "jumps": [
                {
                    "angle": "%d/%d" % (j.numerator, j.denominator),
                    "ccw_step": j.ccw_step,
                    "away_step": j.away_step,
                    "simple": j.simple,
                }
                for j in steps.jumps
            ],
        }
        lines.append("# min signature over a != 0: %d" % lemma.min_value)
        lines.append("# sigma at omega = -1: %d" % lemma.sigma_at_minus_one)
        lines.append("# lemma holds: true")
        for j in steps.jumps:
            lines.append(
                "# jump at %d/%d: step %+d away from 1 (simple: %s)"
                % (j.numerator, j.denominator, j.away_step, j.simple)
            )
    _emit(args, doc, lines)
    return EXIT_OK


def cmd_witness(args):
    if args.n0 < 0:
        raise InputError("--n0 must be >= 0")
    if args.count < 0:
        raise InputError("--count must be >= 0")
    name, V = _load_matrix(args)
    delta = alexander(V)
    classification = covers.classify_prime_power_covers(delta)
    if classification.all_prime_power_covers_trivial:
        raise HypothesisNotSatisfied(
            "all prime power branched covers are homology spheres; "
            "Delta(t) = %s gives no obstruction" % delta,
            classification=classification,
        )
    witness_r, witness_order = classification.witness_cover
    q = args.q
    if q is None and args.p is not None:
        q = args.p ** (args.k or 1)
    if q is None:
        q = _select_character_modulus(witness_order)
    if q < 3 or q % 2 == 0:
        raise InputError("character modulus q must be odd and >= 3, got %d" % q)
    if args.p is not None:
        p, k = args.p, args.k or 1
    else:
        p, k = prime_power_decomposition(q)
    params = obstruction.FamilyParameters(
        genus=V.genus, p=p, k=k, q=q, n0=args.n0
    )
    schedule = obstruction.witness_schedule(params, args.count)
    report = obstruction.family_report(V, schedule, classification=classification)
    doc = {
        "command": "witness",
        "name": name,
        "alexander": _poly_doc(delta),
        "witness_cover": {"r": report.witness_r, "order": report.witness_order.value},
        "q": q,
        "parameters": {
            "genus": params.genus,
            "p": params.p,
            "k": params.k,
            "q": params.q,
            "n0": params.n0,
            "term_count": params.term_count,
        },
        "profile_extremes": {"s_min": schedule.s_min, "s_max": schedule.s_max},
        "schedule": [
            {"n": e.n, "lo": e.lo, "hi": e.hi} for e in schedule.entries
        ],
        "separation": {
            "pairs_checked": report.separation.pair_count,
            "brute_forced": report.separation.brute_forced,
            "note": report.separation.note,
        },
        "note": report.note,
    }
    lines = [
        "name: %s" % name,
        "Delta(t) = %s" % delta,
        "witness cover: r = %d with |H1| = %s" % (report.witness_r, report.witness_order),
        "character modulus q = %d  (companion torus knot T(2,%d))" % (q, q),
        "term count L = 2*g*p^k = %d" % params.term_count,
        "profile extremes: S_min = %d, S_max = %d" % (schedule.s_min, schedule.s_max),
    ]
    for i, e in enumerate(schedule.entries):
        lines.append(
            "member %d: n = %d, achievable sums in [%d, %d]" % (i + 1, e.n, e.lo, e.hi)
        )
    lines.append(
        "separation verified for %d pair(s)%s"
        % (
            report.separation.pair_count,
            " (brute-force enumeration confirmed)"
            if report.separation.brute_forced
            else "",
        )
    )
    lines.append("note: %s" % report.separation.note)
    _emit(args, doc, lines)
    return EXIT_OK


def _select_character_modulus(order):
    """Largest odd prime power divisor of the witness cover's |H1|."""
    if not order.is_finite or order.value < 2:
        raise InputError("witness cover order unusable for character selection")
    candidates = [
        p**e for p, e in factorize(order.value).items() if p % 2 == 1
    ]
    if not candidates:
        raise InputError(
            "|H1| = %d has no odd prime power divisor; pass --q explicitly"
            % order.value
        )
    return max(candidates)


# -- entry point ----------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="knotconc",
        description="Concordance invariants of Seifert matrices: Alexander "
        "polynomials, branched cover homology, Tristram-Levine signatures, "
        "and non-concordant family witness schedules.",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS so a subcommand-level flag does not clobber the global one.
    common.add_argument(
        "--json",
        action="store_true",
        default=argparse.SUPPRESS,
        help="machine-readable output",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, **kwargs):
        return sub.add_parser(name, parents=[common], **kwargs)

    def add_input(p):
        p.add_argument(
            "input",
            nargs="?",
            default="-",
            help="matrix document path, or - for stdin (default)",
        )

    p = add_parser("alexander", help="Alexander polynomial of a Seifert matrix")
    add_input(p)
    p.set_defaults(func=cmd_alexander)

    p = add_parser("covers", help="branched cover homology orders")
    add_input(p)
    p.add_argument("--max-r", type=int, default=12, help="largest cover degree")
    p.add_argument("--delta", help="ascending Alexander coefficients, e.g. '1,-1,1'")
    p.set_defaults(func=cmd_covers)

    p = add_parser("classify", help="which covers are homology spheres")
    add_input(p)
    p.add_argument("--delta", help="ascending Alexander coefficients, e.g. '1,-1,1'")
    p.set_defaults(func=cmd_classify)

    p = add_parser("signature", help="Tristram-Levine signature profile")
    add_input(p)
    p.add_argument("--q", type=int, required=True, help="denominator of the angles")
    p.set_defaults(func=cmd_signature)

    p = add_parser("torus", help="Seifert matrix of the (2,q) torus knot")
    p.add_argument("q", type=int, help="odd q >= 3")
    p.add_argument("--verify", action="store_true", help="check the signature lemma")
    p.set_defaults(func=cmd_torus)

    p = add_parser("witness", help="non-concordant family witness schedule")
    add_input(p)
    p.add_argument("--n0", type=int, default=0, help="Casson-Gordon bound N0")
    p.add_argument("--count", type=int, default=3, help="number of family members")
    p.add_argument("--q", type=int, help="override character modulus")
    p.add_argument("--p", type=int, help="override prime p")
    p.add_argument("--k", type=int, help="override exponent k")
    p.set_defaults(func=cmd_witness)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, InvalidSeifertMatrix, BadTorusParameter, NotAKnotPolynomial) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INVALID_INPUT
    except HypothesisNotSatisfied as exc:
        print("hypothesis not satisfied: %s" % exc, file=sys.stderr)
        cls = exc.classification
        if cls is not None:
            print(
                "classification: all_prime_power_covers_trivial=%s "
                "all_covers_trivial=%s"
                % (cls.all_prime_power_covers_trivial, cls.all_covers_trivial),
                file=sys.stderr,
            )
        return EXIT_HYPOTHESIS
    except (
        LemmaViolation,
        IdentityViolation,
        SeparationFailure,
        SignatureUncertified,
        WitnessSearchExhausted,
    ) as exc:
        print("internal assertion failed: %s" % exc, file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
