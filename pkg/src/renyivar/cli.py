"""Command-line front end.

Exit codes: 0 success/pass, 2 usage or validation error, 3 numeric
failure, 4 verification/certification failure.  All randomness flows
through --seed; output documents are canonical key-sorted JSON.
"""

from __future__ import annotations

import argparse
import json
import sys

from renyivar import entropy, errors, matrixio, spectral, verify
from renyivar import variational as var
from renyivar.gauge import GaugeSpec, check_gauge_axioms
from renyivar.variational import HolderExponents, PsiParams

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERIC = 3
EXIT_FAIL = 4

USAGE_ERRORS = (errors.MatrixParseError, errors.MatrixValidationError,
                errors.SpecParseError, errors.RegimeMismatchError,
                errors.BadExponentsError, errors.TypeClassMismatchError,
                errors.UnsupportedAntiNormError, errors.LambdaOutOfRangeError)


def _emit(doc: dict, fmt: str):
    if fmt == "json":
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        for key in sorted(doc):
            print(f"{key}: {doc[key]}")


def _load_pd(path: str):
    return matrixio.load_matrix(path, expect="pd")


def cmd_entropy(args) -> int:
    a = _load_pd(args.a)
    b = _load_pd(args.b)
    kind = args.kind
    if kind == "petz":
        value = entropy.petz_renyi(a, b, args.alpha)
    elif kind == "sandwiched":
        value = entropy.sandwiched_renyi(a, b, args.alpha)
    elif kind == "quasi":
        value = entropy.sandwiched_quasi(a, b, args.alpha)
    elif kind == "alpha-z":
        value = entropy.alpha_z(a, b, args.alpha, args.z)
    elif kind == "fidelity":
        value = entropy.fidelity(a, b)
    elif kind == "umegaki":
        value = entropy.umegaki(a, b)
    elif kind == "max":
        value = entropy.max_relative(a, b)
    else:  # thompson
        value = entropy.thompson_metric(a, b)
    params = {}
    if kind in ("petz", "sandwiched", "quasi", "alpha-z"):
        params["alpha"] = args.alpha
    if kind == "alpha-z":
        params["z"] = args.z
    _emit({"kind": kind, "params": params, "value": value}, args.format)
    return EXIT_OK


def cmd_psi(args) -> int:
    params = PsiParams(args.p, args.q, args.s)
    a = _load_pd(args.a)
    b = _load_pd(args.b)
    k = matrixio.load_matrix(args.k, expect="general") if args.k else None
    spec = GaugeSpec.parse(args.norm)
    if spec.kind == "trace":
        value = var.psi(params, a, b, k)
    else:
        value = var.psi_norm(params, spec, a, b, k)
    tag = var.classify(params)
    _emit({"p": args.p, "q": args.q, "s": args.s, "norm": spec.to_string(),
           "value": value, "tags": tag.to_string()}, args.format)
    return EXIT_OK


def cmd_variational(args) -> int:
    params = PsiParams(args.p, args.q, args.s)
    if (args.a is None) != (args.b is None):
        raise errors.SpecParseError("--a and --b must be given together")
    if args.a is None:
        a = spectral.random_pd(args.dim, [args.seed, 0, 1])
        b = spectral.random_pd(args.dim, [args.seed, 0, 2])
    else:
        a = _load_pd(args.a)
        b = _load_pd(args.b)
    k = matrixio.load_matrix(args.k, expect="general") if args.k else None
    spec = GaugeSpec.parse(args.norm)
    theorem = args.theorem.replace(".", "")
    psi_val = var.psi_norm(params, spec, a, b, k)
    z_star = var._optimizer(params, theorem, a, b, k)
    obj = var._objective(params, theorem, args.form, spec, a, b, k, z_star)
    gap = abs(obj - psi_val) / max(abs(psi_val), 1e-300)
    result = var.numeric_search(params, theorem, args.form, spec, a, b, k,
                                budget=args.budget, seed=args.seed)
    _emit({"psi": psi_val, "objective_at_zstar": obj, "relative_gap": gap,
           "search_best": result.objective_at_optimizer,
           "search_gap": result.relative_gap,
           "bound_direction": result.bound_direction}, args.format)
    return EXIT_OK if gap <= args.tol else EXIT_FAIL


def _run_suite(args) -> verify.VerificationReport:
    suite = args.suite
    spec = GaugeSpec.parse(args.norm)
    if suite == "gauge-axioms":
        return check_gauge_axioms(spec, args.dim, args.trials, args.seed)
    if suite == "holder":
        return verify.check_holder(spec, HolderExponents(args.r0, args.r1, args.r2),
                                   args.dim, args.trials, args.seed, tol=args.tol)
    if suite == "reverse-holder":
        return verify.check_reverse_holder(spec, args.r0, args.r1, args.r2,
                                           args.dim, args.trials, args.seed,
                                           tol=args.tol)
    if suite == "scalar-young":
        return verify.check_scalar_reverse_young(args.trials, args.seed, tol=args.tol)
    if suite == "gelfand-naimark":
        return verify.check_gelfand_naimark(args.dim, args.trials, args.seed,
                                            tol=args.tol)
    if suite == "variational":
        params = PsiParams(args.p, args.q, args.s)
        return verify.check_variational(params, args.theorem.replace(".", ""), spec,
                                        args.dim, args.trials, args.seed)
    if suite == "convexity":
        if args.q is None:
            return verify.check_upsilon_convexity(args.p, args.s, args.dim,
                                                  args.trials, args.seed, tol=args.tol)
        params = PsiParams(args.p, args.q, args.s)
        return verify.check_joint_convexity(params, args.dim, args.trials,
                                            args.seed, tol=args.tol)
    if suite == "antinorm":
        params = PsiParams(args.p, args.q, args.s)
        return verify.check_antinorm_concavity(spec, params, args.dim,
                                               args.trials, args.seed, tol=args.tol)
    if suite == "dpi":
        return verify.check_dpi(args.kind, args.alpha, args.dim, args.trials,
                                args.seed, z=args.z)
    if suite == "limits":
        return verify.check_entropy_limits(args.trials, args.seed)
    raise errors.SpecParseError(f"unknown suite {suite!r}")


def cmd_verify(args) -> int:
    report = _run_suite(args)
    text = report.to_json()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
            fh.write("\n")
    else:
        print(text)
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="renyivar",
        description="Quantum Renyi relative entropies, sandwiched trace "
                    "functionals, and property-based inequality verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_ent = sub.add_parser("entropy", help="evaluate a relative entropy")
    p_ent.add_argument("--kind", required=True,
                       choices=["petz", "sandwiched", "quasi", "alpha-z",
                                "fidelity", "umegaki", "max", "thompson"])
    p_ent.add_argument("--alpha", type=float, default=None)
    p_ent.add_argument("--z", type=float, default=None)
    p_ent.add_argument("--a", required=True, help="matrix file for the first state")
    p_ent.add_argument("--b", required=True, help="matrix file for the second state")
    p_ent.add_argument("--format", choices=["json", "text"], default="json")
    p_ent.set_defaults(func=cmd_entropy)

    p_psi = sub.add_parser("psi", help="evaluate the trace/norm functional")
    p_psi.add_argument("--p", type=float, required=True)
    p_psi.add_argument("--q", type=float, required=True)
    p_psi.add_argument("--s", type=float, required=True)
    p_psi.add_argument("--a", required=True)
    p_psi.add_argument("--b", required=True)
    p_psi.add_argument("--k", default=None)
    p_psi.add_argument("--norm", default="trace")
    p_psi.add_argument("--format", choices=["json", "text"], default="json")
    p_psi.set_defaults(func=cmd_psi)

    p_var = sub.add_parser("variational", help="certify a variational representation")
    p_var.add_argument("--p", type=float, required=True)
    p_var.add_argument("--q", type=float, required=True)
    p_var.add_argument("--s", type=float, required=True)
    p_var.add_argument("--theorem", required=True, choices=["3.1", "3.2", "31", "32"])
    p_var.add_argument("--form", choices=["product", "sum"], default="product")
    p_var.add_argument("--a", default=None,
                       help="PD matrix file; omit to draw a random instance")
    p_var.add_argument("--b", default=None)
    p_var.add_argument("--k", default=None)
    p_var.add_argument("--dim", type=int, default=3,
                       help="dimension for random instances when --a/--b absent")
    p_var.add_argument("--norm", default="trace")
    p_var.add_argument("--seed", type=int, required=True)
    p_var.add_argument("--budget", type=int, default=200)
    p_var.add_argument("--tol", type=float, default=1e-7)
    p_var.add_argument("--format", choices=["json", "text"], default="json")
    p_var.set_defaults(func=cmd_variational)

    p_ver = sub.add_parser("verify", help="run a property-verification suite")
    p_ver.add_argument("--suite", required=True,
                       choices=["gauge-axioms", "holder", "reverse-holder",
                                "scalar-young", "gelfand-naimark", "variational",
                                "convexity", "antinorm", "dpi", "limits"])
    p_ver.add_argument("--dim", type=int, default=3)
    p_ver.add_argument("--trials", type=int, default=200)
    p_ver.add_argument("--seed", type=int, required=True)
    p_ver.add_argument("--tol", type=float, default=1e-9)
    p_ver.add_argument("--out", default=None)
    p_ver.add_argument("--norm", default="trace",
                       help="gauge spec for norm-based suites")
    p_ver.add_argument("--p", type=float, default=None)
    p_ver.add_argument("--q", type=float, default=None)
    p_ver.add_argument("--s", type=float, default=None)
    p_ver.add_argument("--theorem", default="3.1")
    p_ver.add_argument("--kind", default="sandwiched",
                       choices=["petz", "sandwiched", "alpha_z"])
    p_ver.add_argument("--alpha", type=float, default=2.0)
    p_ver.add_argument("--z", type=float, default=1.0)
    p_ver.add_argument("--r0", type=float, default=1.0,
                       help="Hoelder exponents (r0 r1 r2 forward, r p q reverse)")
    p_ver.add_argument("--r1", type=float, default=2.0)
    p_ver.add_argument("--r2", type=float, default=2.0)
    p_ver.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "entropy":
        if args.kind in ("petz", "sandwiched", "quasi", "alpha-z") and args.alpha is None:
            parser.error(f"--kind {args.kind} requires --alpha")
        if args.kind == "alpha-z" and args.z is None:
            parser.error("--kind alpha-z requires --z")
    if args.command == "verify":
        needs_pqs = {"variational": ("p", "q", "s"), "antinorm": ("p", "q", "s"),
                     "convexity": ("p", "s")}
        for name in needs_pqs.get(args.suite, ()):
            if getattr(args, name) is None:
                parser.error(f"--suite {args.suite} requires --{name}")
    try:
        return args.func(args)
    except USAGE_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except errors.RenyivarError as e:
        print(f"numeric failure: {e}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
