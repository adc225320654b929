# Copyright 2026 The frobkit Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


import argparse
import logging
import sys

import frobkit
from frobkit.acceptance import CRITERIA, run_suite
from frobkit.cone import hilbert_basis
from frobkit.constants import DEFAULT_EMAX, DEFAULT_WINDOW, DEFAULT_WORKERS
from frobkit.depth import depth_scan, verify_hom_mcm
from frobkit.errors import FrobkitError, ParseError
from frobkit.frobenius import (
    FrobeniusLevel,
    abundance_test,
    decompose_pushforward,
    ft_category,
    ft_test,
    module_sdim,
    splitting_numbers,
)
from frobkit.monomial import (
    count_copies,
    decompose_pushforward_ideal,
    decompose_pushforward_quotient,
    frobenius_power,
    parse_ideal,
    syzygy_pushforward,
)
from frobkit.report import (
    NEGATIVE_INFINITY,
    ReportEnvelope,
    encode,
    encode_class,
    encode_estimate,
    encode_fraction,
    render_json,
    render_pretty,
)
from frobkit.ringspec import load_ring
from frobkit.toric import (
    all_classes,
    canonical_class,
    describe_group,
    is_gorenstein,
    order_of,
)

logger = logging.getLogger(__name__)

WINDOW_CAVEAT = (
    "depth claims only cover the scanned window of degrees; "
    "nonvanishing outside it is not excluded"
)
RANGE_CAVEAT = "growth verdicts only read the computed range of e"


class UsageError(ParseError):
    pass


class ArgumentParser(argparse.ArgumentParser):
    """Raise on bad usage so main() can report it with exit code 1."""

    def error(self, message):
        raise UsageError("%s: %s" % (self.prog, message))


def _int_list(text):
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise argparse.ArgumentTypeError(
            "expected comma separated integers, got %r" % text
        ) from None


def _class_arg(R, coordinates=None, coefficients=None):
    """Resolve a class given as SNF coordinates or as coefficients."""
    if coefficients is not None:
        return R.class_of(coefficients)
    if coordinates is None:
        return R.trivial
    free = R.free_rank
    return R.make_class(coordinates[:free], coordinates[free:])


def _echo_class(R, cls):
    return {"class": encode_class(cls), "coefficients": list(R.representative(cls))}


def _envelope(options, ring=None):
    parameters = {
        key: value
        for key, value in vars(options).items()
        if key not in ("func", "command", "verbose", "pretty") and value is not None
    }
    name = ring.name if ring is not None else None
    return ReportEnvelope(options.command, name, parameters)


def _encode_order(value):
    return NEGATIVE_INFINITY if value is None else value


def ring_show(options):
    """Describe a ring: facet normals, rays, generators and class group."""
    R = load_ring(options.ring, options.p)
    envelope = _envelope(options, R)
    envelope.result = {
        "n": R.n,
        "p": R.p,
        "alpha": R.alpha,
        "facet_normals": encode(R.cone.V.to_rows()),
        "rays": encode(R.cone.rays),
        "hilbert_basis": encode(hilbert_basis(R.cone)),
        "class_group": describe_group(R.invariants_of_Cl),
        "gorenstein": is_gorenstein(R),
        "canonical_class": encode_class(canonical_class(R)),
    }
    return envelope


def classgroup(options):
    """Compute the divisor class group from the Smith normal form."""
    R = load_ring(options.ring, options.p)
    envelope = _envelope(options, R)
    invariants = R.invariants_of_Cl
    result = {
        "free_rank": invariants.free_rank,
        "torsion": list(invariants.torsion),
        "group": describe_group(invariants),
        "smith_diagonal": list(R.smith.D.diagonal()),
    }
    if not invariants.free_rank:
        result["classes"] = [
            dict(_echo_class(R, cls), order=order_of(R, cls))
            for cls in all_classes(R)
        ]
    envelope.result = result
    return envelope


def ft(options):
    """Decide finite F-type of a divisor class by its Frobenius orbit."""
    R = load_ring(options.ring, options.p)
    envelope = _envelope(options, R)
    cls = _class_arg(R, options.class_coordinates, options.coeffs)
    report = ft_test(R, cls)
    envelope.result = dict(
        _echo_class(R, cls),
        is_ft=report.is_ft,
        order=encode(report.order),
        pre_period=report.pre_period,
        period=report.period,
        orbit=[encode_class(c) for c in report.orbit],
    )
    return envelope


def ft_category_command(options):
    """List the classes of a finite class group and where F^e_* R shows them."""
    R = load_ring(options.ring, options.p)
    envelope = _envelope(options, R)
    category = ft_category(R, options.emax, workers=options.workers)
    envelope.result = {
        "classes": [
            dict(_echo_class(R, cls), first_level=category.first_level[cls])
            for cls in category.classes
        ],
        "complete": category.complete,
    }
    if not category.complete:
        envelope.caveat("some classes did not occur up to e = %d" % options.emax)
    return envelope


def decompose(options):
    """Decompose F^e_* M_a into divisorial summands."""
    R = load_ring(options.ring, options.p)
    envelope = _envelope(options, R)
    D = decompose_pushforward(R, options.coeffs, options.e, workers=options.workers)
    envelope.result = {
        "q": D.level.q,
        "source": _echo_class(R, D.source),
        "total": D.total(),
        "summands": [
            {
                "class": encode_class(cls),
                "multiplicity": k,
                "coefficients": list(D.representatives[cls]),
            }
            for cls, k in D.items()
        ],
        "free_multiplicity": D.multiplicity(R.trivial),
    }
    return envelope


def signature(options):
    """Splitting numbers a_e, F-signature estimates and the sdim verdict."""
    R = load_ring(options.ring, options.p)
    envelope = _envelope(options, R)
    data = splitting_numbers(R, options.emax, workers=options.workers)
    verdict = data.sdim_verdict
    envelope.result = {
        "levels": data.levels,
        "a_e": data.a_e,
        "signature_estimates": [
            encode_fraction(x) for x in data.signature_estimates
        ],
        "sdim": None,
        "sdim_confident": None,
    }
    if verdict is not None:
        envelope.result["sdim"] = _encode_order(verdict.value)
        envelope.result["sdim_confident"] = verdict.confident
    else:
        envelope.caveat("sdim needs at least three levels")
    envelope.caveat(RANGE_CAVEAT)
    return envelope


def sdim(options):
    """Estimate the s-dimension of the divisorial module M_a."""
    R = load_ring(options.ring, options.p)
    envelope = _envelope(options, R)
    verdict = module_sdim(R, options.coeffs, options.emax, workers=options.workers)
    envelope.result = {
        "sdim": _encode_order(verdict.value),
        "confident": verdict.confident,
    }
    envelope.caveat(RANGE_CAVEAT)
    return envelope


def abundance(options):
    """Track the multiplicity b_e of a target class in F^e_* M_a."""
    R = load_ring(options.ring, options.p)
    envelope = _envelope(options, R)
    target = _class_arg(R, options.target, options.target_coeffs)
    data = abundance_test(
        R, options.source, target, options.emax, workers=options.workers
    )
    envelope.result = {
        "source": _echo_class(R, data.source),
        "target": _echo_class(R, target),
        "levels": data.levels,
        "b_e": data.b_e,
        "verdict": data.verdict,
        "growth_exponent_fit": encode_estimate(data.growth_exponent_fit),
    }
    envelope.caveat(RANGE_CAVEAT)
    return envelope


def _encode_verdict(verdict):
    return {
        "depth_upper": verdict.depth_upper,
        "depth_claim": verdict.depth_claim,
        "mcm": verdict.is_mcm,
        "window": encode(verdict.window),
        "certificate": None
        if verdict.certificate is None
        else {
            "i": verdict.certificate[0],
            "degree": list(verdict.certificate[1]),
            "rank": verdict.certificate[2],
        },
    }


def depth(options):
    """Scan local cohomology of M_a over a window of degrees."""
    R = load_ring(options.ring, options.p)
    envelope = _envelope(options, R)
    verdict, report = depth_scan(R, options.coeffs, options.window)
    envelope.result = dict(
        _encode_verdict(verdict),
        source=_echo_class(R, R.class_of(options.coeffs)),
        nonvanishing={
            str(i): [{"degree": list(u), "rank": h} for u, h in entries]
            for i, entries in report.nonvanishing.items()
            if entries
        },
    )
    if verdict.caveat:
        envelope.caveat(WINDOW_CAVEAT)
    return envelope


def hom_mcm(options):
    """Check that Hom(M(e), L) is MCM for an FT class M and e = 0..emax."""
    R = load_ring(options.ring, options.p)
    envelope = _envelope(options, R)
    ft_class = _class_arg(R, options.ft, options.ft_coeffs)
    target = _class_arg(R, options.target, options.target_coeffs)
    report = verify_hom_mcm(
        R, ft_class, target, range(options.emax + 1), options.window
    )
    envelope.result = {
        "ft_class": _echo_class(R, ft_class),
        "target": _echo_class(R, target),
        "abundance_verdict": report.abundance_verdict,
        "levels": [
            dict(_encode_verdict(verdict), e=e, hom_class=encode_class(cls))
            for e, cls, verdict in report.levels
        ],
        "passed": report.passed,
    }
    envelope.caveat(WINDOW_CAVEAT)
    return envelope


def _encode_ideal(I):
    return {"text": str(I), "generators": encode(I.sorted_gens())}


def monomial_decompose(options):
    """Decompose F^e_* I (or F^e_* R/I with --quotient) for a monomial ideal."""
    I = parse_ideal(options.ideal, options.n)
    envelope = _envelope(options)
    level = FrobeniusLevel(options.p, options.e)
    if options.quotient:
        D = decompose_pushforward_quotient(I, level)
    else:
        D = decompose_pushforward_ideal(I, level)
    result = {
        "ideal": _encode_ideal(I),
        "q": level.q,
        "kind": D.kind,
        "pieces": [
            dict(_encode_ideal(J), multiplicity=k) for J, k in D.items()
        ],
        "total": D.total(),
    }
    if options.quotient:
        result["zero"] = D.zero
    else:
        result["copies"] = count_copies(D, I)
        result["free"] = count_copies(D, I.unit(I.n))
    envelope.result = result
    return envelope


def monomial_frobpower(options):
    """Compute the Frobenius power I^[q]."""
    I = parse_ideal(options.ideal, options.n)
    envelope = _envelope(options)
    envelope.result = {
        "ideal": _encode_ideal(I),
        "power": _encode_ideal(frobenius_power(I, options.q)),
    }
    return envelope


def monomial_syzygy_example(options):
    """Count copies of the second syzygy of R/(u, v, w) in its pushforward."""
    envelope = _envelope(options)
    example = syzygy_pushforward(options.d, FrobeniusLevel(options.p, options.e))
    envelope.result = {
        "d": example.d,
        "q": example.level.q,
        "b_e": example.b_e,
        "quotient_copies": example.quotient_copies,
        "zero_pieces": example.zero_pieces,
        "first_rank": example.first_rank,
        "second_rank": example.second_rank,
        "syzygy_rank": example.syzygy_rank,
        "free_rank": example.free_rank,
    }
    return envelope


def verify(options):
    """Run the acceptance criteria built from the worked examples."""
    envelope = _envelope(options)
    results = run_suite(options.criterion)
    envelope.result = {
        "suite": options.suite,
        "criteria": [
            {"id": r.identifier, "passed": r.passed, "detail": r.detail}
            for r in results
        ],
        "passed": all(r.passed for r in results),
    }
    if not envelope.result["passed"]:
        envelope.exit_code = 3
    return envelope


def _add_ring_options(parser):
    parser.add_argument(
        "--ring",
        required=True,
        help="Registry name (A1, quadric3, ...) or path of a [ring] spec file.",
    )
    parser.add_argument(
        "-p",
        "--p",
        dest="p",
        type=int,
        default=None,
        help="Characteristic; overrides the p of a spec file.",
    )


def _add_workers(parser):
    parser.add_argument(
        "--workers",
        type=int,
        default=DEFAULT_WORKERS,
        help="Processes for residue scans. (default: %(default)s)",
    )


def _add_window(parser):
    parser.add_argument(
        "--window",
        type=int,
        default=DEFAULT_WINDOW,
        help="Scan degrees in [-B, B]^n. (default: %(default)s)",
    )


def _command(subparsers, name, func):
    parser = subparsers.add_parser(name, help=func.__doc__)
    parser.set_defaults(func=func, command=name)
    return parser


def build_parser():
    parser = ArgumentParser(prog="frobkit", description=frobkit.__doc__)
    parser.add_argument(
        "--version", action="version", version="frobkit %s" % frobkit.__version__
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Log progress to stderr; repeat for debug output.",
    )
    parser.add_argument(
        "--pretty", action="store_true", help="Print a table instead of JSON."
    )
    subparsers = parser.add_subparsers(parser_class=ArgumentParser)

    ring_parser = subparsers.add_parser("ring", help="Inspect a ring.")
    ring_commands = ring_parser.add_subparsers(parser_class=ArgumentParser)
    show = ring_commands.add_parser("show", help=ring_show.__doc__)
    show.set_defaults(func=ring_show, command="ring show")
    _add_ring_options(show)

    parser_classgroup = _command(subparsers, "classgroup", classgroup)
    _add_ring_options(parser_classgroup)

    parser_ft = _command(subparsers, "ft", ft)
    _add_ring_options(parser_ft)
    group = parser_ft.add_mutually_exclusive_group(required=True)
    group.add_argument(
        "--class",
        dest="class_coordinates",
        type=_int_list,
        help="Class in SNF coordinates: free coordinates, then torsion residues.",
    )
    group.add_argument(
        "--coeffs",
        type=_int_list,
        help="Coefficient vector a of M_a (write --coeffs=-1,0 for negatives).",
    )

    parser_category = _command(subparsers, "ft-category", ft_category_command)
    _add_ring_options(parser_category)
    parser_category.add_argument("--emax", type=int, default=DEFAULT_EMAX)
    _add_workers(parser_category)

    parser_decompose = _command(subparsers, "decompose", decompose)
    _add_ring_options(parser_decompose)
    parser_decompose.add_argument("--coeffs", type=_int_list, required=True)
    parser_decompose.add_argument("--e", type=int, required=True)
    _add_workers(parser_decompose)

    parser_signature = _command(subparsers, "signature", signature)
    _add_ring_options(parser_signature)
    parser_signature.add_argument("--emax", type=int, default=DEFAULT_EMAX)
    _add_workers(parser_signature)

    parser_sdim = _command(subparsers, "sdim", sdim)
    _add_ring_options(parser_sdim)
    parser_sdim.add_argument("--coeffs", type=_int_list, required=True)
    parser_sdim.add_argument("--emax", type=int, default=DEFAULT_EMAX)
    _add_workers(parser_sdim)

    parser_abundance = _command(subparsers, "abundance", abundance)
    _add_ring_options(parser_abundance)
    parser_abundance.add_argument("--source", type=_int_list, required=True)
    group = parser_abundance.add_mutually_exclusive_group(required=True)
    group.add_argument(
        "--target", type=_int_list, help="Target class, SNF coordinates."
    )
    group.add_argument("--target-coeffs", type=_int_list)
    parser_abundance.add_argument("--emax", type=int, default=DEFAULT_EMAX)
    _add_workers(parser_abundance)

    parser_depth = _command(subparsers, "depth", depth)
    _add_ring_options(parser_depth)
    parser_depth.add_argument("--coeffs", type=_int_list, required=True)
    _add_window(parser_depth)

    parser_hom = _command(subparsers, "hom-mcm", hom_mcm)
    _add_ring_options(parser_hom)
    group = parser_hom.add_mutually_exclusive_group(required=True)
    group.add_argument("--ft", type=_int_list, help="FT class, SNF coordinates.")
    group.add_argument("--ft-coeffs", type=_int_list)
    group = parser_hom.add_mutually_exclusive_group(required=True)
    group.add_argument(
        "--target", type=_int_list, help="Target class, SNF coordinates."
    )
    group.add_argument("--target-coeffs", type=_int_list)
    parser_hom.add_argument("--emax", type=int, default=DEFAULT_EMAX)
    _add_window(parser_hom)

    monomial_parser = subparsers.add_parser("monomial", help="Monomial ideals.")
    monomial_commands = monomial_parser.add_subparsers(parser_class=ArgumentParser)
    for name, func in (
        ("decompose", monomial_decompose),
        ("frobpower", monomial_frobpower),
        ("syzygy-example", monomial_syzygy_example),
    ):
        sub = monomial_commands.add_parser(name, help=func.__doc__)
        sub.set_defaults(func=func, command="monomial " + name)
        if name == "syzygy-example":
            sub.add_argument("--d", type=int, required=True)
        else:
            sub.add_argument("--n", type=int, required=True)
            sub.add_argument(
                "--ideal", required=True, help='Generators, e.g. "x^2*y, z^3".'
            )
        if name == "frobpower":
            sub.add_argument("--q", type=int, required=True)
        else:
            sub.add_argument("-p", "--p", dest="p", type=int, required=True)
            sub.add_argument("--e", type=int, required=True)
        if name == "decompose":
            sub.add_argument("--quotient", action="store_true")

    parser_verify = _command(subparsers, "verify", verify)
    parser_verify.add_argument("--suite", choices=("paper",), default="paper")
    parser_verify.add_argument(
        "--criterion",
        type=int,
        action="append",
        choices=sorted(CRITERIA),
        help="Run only this criterion; may be repeated.",
    )
    return parser


def _configure_logging(verbosity):
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s:%(name)s: %(message)s"
    )


def _error_report(command, error):
    return {
        "command": command,
        "error": type(error).__name__,
        "message": str(error),
        "exit_code": error.exit_code,
    }


def _emit(data, pretty):
    print(render_pretty(data) if pretty else render_json(data))


def main(args=None):
    if args is None:
        args = sys.argv[1:]

    parser = build_parser()
    try:
        options = parser.parse_args(args)
    except UsageError as e:
        print(e, file=sys.stderr)
        _emit(_error_report(None, e), pretty=False)
        return e.exit_code

    _configure_logging(options.verbose)
    if "func" not in vars(options):
        parser.print_help()
        return 1

    try:
        envelope = options.func(options)
    except FrobkitError as e:
        logger.error("%s failed: %s", options.command, e)
        _emit(_error_report(options.command, e), options.pretty)
        return e.exit_code
    _emit(envelope.as_dict(), options.pretty)
    return envelope.exit_code
