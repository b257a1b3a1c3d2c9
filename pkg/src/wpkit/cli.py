"""Command-line front end: ``wpkit {theta,report,verify,sample,scan,ellipse}``."""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from . import _kernels
from . import observables as obs
from . import rotation as rot
from .params import DEFAULT_TOL, ParameterError, validate
from .verify import run_all
from .wavepacket import evaluate, packet

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _fmt(v: float) -> str:
    return format(float(v), ".17g")


def _params(args):
    return validate(complex(args.A_re, args.A_im), complex(args.B_re, args.B_im),
                    args.hbar, args.a, args.eta, tol=args.tol)


def _emit_json(payload, args, out):
    out.write(json.dumps(payload, indent=2 if args.json_pretty else None) + "\n")


def cmd_theta(args, out):
    p = _params(args)
    _emit_json({"theta": rot.optimal_theta(p), "im_ba": p.im_ba,
                "mod_a": abs(p.A), "mod_b": abs(p.B)}, args, out)
    return EXIT_OK


def cmd_report(args, out):
    p = _params(args)
    if args.k < 0:
        raise InputError("--k must be nonnegative")
    theta = rot.optimal_theta(p) if args.theta is None else args.theta
    report = obs.uncertainty_report(p, args.k, theta)
    payload = report.to_dict()
    wp = packet(p, args.k)
    dq = {o.label: obs.quadrature_uncertainty(wp, o)
          for o in (obs.X, obs.P, obs.alpha(theta), obs.beta(theta))}
    payload["quadrature"] = {"product_xp": dq["x"] * dq["p"],
                             "product_alphabeta": dq["alpha"] * dq["beta"]}
    _emit_json(payload, args, out)
    return EXIT_OK


def cmd_verify(args, out):
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("WPKIT_SEED", "0"))
    results = run_all(seed=seed, trials=args.trials, tamper=args.tamper)
    width = max(len(r.name) for r in results)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        out.write(f"{status}  {r.name:<{width}}  max_residual={r.max_residual:.3e}  tol={r.tol:.1e}\n")
    failed = [r.name for r in results if not r.passed]
    if failed:
        out.write("failed invariants: " + ", ".join(failed) + "\n")
        return EXIT_FAIL
    out.write(f"all {len(results)} invariants passed (seed={seed}, trials={args.trials})\n")
    return EXIT_OK


def cmd_sample(args, out):
    p = _params(args)
    if args.points < 2:
        raise InputError("--points must be at least 2")
    wp = packet(p, args.k)
    if args.xmin is None or args.xmax is None:
        hw = obs.default_grid(wp).half_width
        xmin = p.a - hw if args.xmin is None else args.xmin
        xmax = p.a + hw if args.xmax is None else args.xmax
    else:
        xmin, xmax = args.xmin, args.xmax
    xs = np.linspace(xmin, xmax, args.points)
    vals = evaluate(wp, xs)
    out.write("x,re,im,abs2\n")
    for x, v in zip(xs, vals):
        out.write(",".join(_fmt(u) for u in (x, v.real, v.imag, abs(v) ** 2)) + "\n")
    return EXIT_OK


def cmd_scan(args, out):
    p = _params(args)
    if args.points < 2:
        raise InputError("--points must be at least 2")
    ts = np.linspace(0.0, math.pi, args.points, endpoint=False)
    mod_a, mod_b, im = _kernels.flow_scan(p.A, p.B, ts)
    prod = mod_a * mod_b
    out.write("t,mod_a,mod_b,product,im_ba\n")
    for row in zip(ts, mod_a, mod_b, prod, im):
        out.write(",".join(_fmt(u) for u in row) + "\n")
    i = int(np.argmin(prod))
    out.write(f"# argmin={_fmt(ts[i])} min_product={_fmt(prod[i])} "
              f"optimal_theta={_fmt(rot.optimal_theta(p))}\n")
    return EXIT_OK


def cmd_ellipse(args, out):
    _emit_json(rot.phase_space_ellipse(_params(args), args.n_boundary), args, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("packet parameters")
    g.add_argument("--A-re", type=float, default=1.0)
    g.add_argument("--A-im", type=float, default=0.0)
    g.add_argument("--B-re", type=float, default=1.0)
    g.add_argument("--B-im", type=float, default=0.0)
    g.add_argument("--hbar", type=float, default=1.0)
    g.add_argument("--a", type=float, default=0.0)
    g.add_argument("--eta", type=float, default=0.0)
    g.add_argument("--tol", type=float, default=DEFAULT_TOL)
    g.add_argument("--json-pretty", action="store_true")

    parser = argparse.ArgumentParser(prog="wpkit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("theta", parents=[common], help="optimal rotation angle")
    sp.set_defaults(func=cmd_theta)

    sp = sub.add_parser("report", parents=[common], help="uncertainty report for phi_k")
    sp.add_argument("--k", type=int, default=0)
    sp.add_argument("--theta", type=float, default=None)
    sp.set_defaults(func=cmd_report)

    sp = sub.add_parser("verify", parents=[common], help="run the invariant suites")
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--tamper", action="store_true", help=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("sample", parents=[common], help="phi_k on a grid (CSV)")
    sp.add_argument("--k", type=int, default=0)
    sp.add_argument("--xmin", type=float, default=None)
    sp.add_argument("--xmax", type=float, default=None)
    sp.add_argument("--points", type=int, default=4001)
    sp.set_defaults(func=cmd_sample)

    sp = sub.add_parser("scan", parents=[common], help="|A(t)||B(t)| along the rotation flow (CSV)")
    sp.add_argument("--points", type=int, default=1024)
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("ellipse", parents=[common], help="phase-space ellipse data")
    sp.add_argument("--n-boundary", type=int, default=64)
    sp.set_defaults(func=cmd_ellipse)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (ParameterError, InputError) as exc:
        print(f"wpkit: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
