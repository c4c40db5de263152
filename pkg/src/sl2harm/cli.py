"""Command-line front end.

Subcommands: phi, cfun, hc, transform, invert, roundtrip, abel, lorentz,
psido-apply, kernel, verify.  Every CSV output carries a header row and a
JSON sidecar with the resolved configuration and its hash.  Exit codes:
0 success, 1 usage, 2 domain error, 3 precision loss.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import os
import sys
from pathlib import Path

import numpy as np

from .errors import DomainError, PrecisionLossError
from .ktypes import gamma_set

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_PRECISION = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        sys.exit(EXIT_USAGE)


def parse_grid(spec: str) -> np.ndarray:
    """start:step:stop inclusive grid; a bare number is a one-point grid."""
    parts = spec.split(":")
    if len(parts) == 1:
        return np.array([float(parts[0])])
    if len(parts) != 3:
        raise DomainError(f"grid must be start:step:stop, got {spec!r}")
    start, step, stop = (float(p) for p in parts)
    if step <= 0 or stop < start:
        raise DomainError(f"empty grid {spec!r}")
    num = int(math.floor((stop - start) / step + 1e-9)) + 1
    return start + step * np.arange(num)


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _outdir() -> Path:
    return Path(os.environ.get("SL2HARM_OUTDIR", "."))


def _config_hash(cfg: dict) -> str:
    blob = json.dumps(cfg, sort_keys=True, default=str).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


def _write_csv(path: Path, header: list[str], columns: list[np.ndarray]) -> None:
    with open(path, "w") as fh:
        fh.write(",".join(header) + "\n")
        for row in zip(*columns):
            fh.write(",".join(_fmt(float(v)) for v in row) + "\n")


def _write_sidecar(path: Path, cfg: dict, extra: dict | None = None) -> None:
    payload = {"config": cfg, "config_hash": _config_hash(cfg)}
    if extra:
        payload.update(extra)
    with open(str(path) + ".json", "w") as fh:
        json.dump(payload, fh, indent=1, sort_keys=True, default=str)


def _resolve_out(args, default_name: str) -> Path:
    out = Path(args.output) if args.output else _outdir() / default_name
    out.parent.mkdir(parents=True, exist_ok=True)
    return out


def _load_symbol(args, n: int):
    from .symbols import make_symbol

    params = json.loads(args.symbol_params) if args.symbol_params else {}
    return make_symbol(args.symbol, n=n, epsilon=args.epsilon, **params)


def _bump(width: float):
    return lambda t: np.exp(-(np.asarray(t, dtype=float) / width) ** 2)


def cmd_phi(args) -> int:
    from .spherical import phi_nn

    ts = parse_grid(args.t)
    lam = complex(args.lam)
    vals = np.array([phi_nn(args.n, lam, t, route=args.route) for t in ts])
    out = _resolve_out(args, "phi.csv")
    _write_csv(out, ["t", "re", "im"], [ts, vals.real, vals.imag])
    _write_sidecar(out, vars(args) | {"command": "phi"})
    print(out)
    return EXIT_OK


def cmd_cfun(args) -> int:
    from .plancherel import c_nn_vec, c_inv_minus_vec, plancherel_density_vec

    lam = parse_grid(args.lam)
    if args.what == "density":
        vals = plancherel_density_vec(args.n, lam).astype(complex)
    elif args.what == "cinv":
        vals = c_inv_minus_vec(args.n, lam.astype(complex))
    else:
        vals = c_nn_vec(args.n, lam.astype(complex))
    out = _resolve_out(args, "cfun.csv")
    _write_csv(out, ["lambda", "re", "im"], [lam, vals.real, vals.imag])
    _write_sidecar(out, vars(args) | {"command": "cfun"})
    print(out)
    return EXIT_OK


def cmd_hc(args) -> int:
    from .hc_series import hc_coefficients

    exp_ = hc_coefficients(args.n, complex(args.lam), args.K)
    ks = np.arange(args.K + 1, dtype=float)
    out = _resolve_out(args, "hc.csv")
    _write_csv(out, ["k", "re", "im"], [ks, exp_.coeffs.real, exp_.coeffs.imag])
    _write_sidecar(out, vars(args) | {"command": "hc"},
                   {"growth_constant": exp_.growth_constant,
                    "growth_exponent": exp_.growth_exponent})
    print(out)
    return EXIT_OK


def cmd_transform(args) -> int:
    from .transforms import (RadialProfile, forward_transform, profile_from_csv,
                             spectral_envelope, spectral_to_csv)

    if args.profile == "bump":
        f = RadialProfile.from_callable(args.n, _bump(args.width), args.T)
    else:
        f = profile_from_csv(args.profile, args.n)
    S = forward_transform(f, args.Lambda, args.num_lambda)
    out = _resolve_out(args, "spectrum.csv")
    spectral_to_csv(S, out)
    _write_sidecar(out, vars(args) | {"command": "transform"},
                   {"envelope": spectral_envelope(S)})
    print(out)
    return EXIT_OK


def cmd_invert(args) -> int:
    from .transforms import inverse_transform, profile_to_csv, spectral_from_csv

    S = spectral_from_csv(args.spectrum, args.envelope)
    rec = inverse_transform(S, args.n, parse_grid(args.t))
    out = _resolve_out(args, "profile.csv")
    profile_to_csv(rec, out)
    _write_sidecar(out, vars(args) | {"command": "invert"}, {"metadata": rec.metadata})
    print(out)
    return EXIT_OK


def cmd_roundtrip(args) -> int:
    from .transforms import (RadialProfile, forward_transform, inverse_transform,
                             relative_l2_error)

    f = RadialProfile.from_callable(args.n, _bump(args.width), args.T)
    S = forward_transform(f, args.Lambda, args.num_lambda)
    grid = np.linspace(0.0, args.T - 1.0, 61)
    rec = inverse_transform(S, args.n, grid)
    ref = RadialProfile.from_callable(args.n, f.source, args.T - 1.0)
    err = relative_l2_error(ref, rec)
    print(f"relative L2(Delta dt) error: {_fmt(err)}")
    out = _resolve_out(args, "roundtrip.csv")
    _write_csv(out, ["t", "re", "im"], [grid, rec.values.real, rec.values.imag])
    _write_sidecar(out, vars(args) | {"command": "roundtrip"}, {"error": err})
    return EXIT_OK


def cmd_abel(args) -> int:
    from .transforms import RadialProfile, abel_transform

    f = RadialProfile.from_callable(0, _bump(args.width), args.T)
    rs = parse_grid(args.r)
    vals = abel_transform(f, rs)
    out = _resolve_out(args, "abel.csv")
    _write_csv(out, ["r", "value"], [rs, vals])
    _write_sidecar(out, vars(args) | {"command": "abel"})
    print(out)
    return EXIT_OK


def cmd_lorentz(args) -> int:
    from .lorentz import lorentz_weak_norm
    from .spherical import psi_discrete_vec
    from .transforms import RadialProfile

    t = np.linspace(0.0, args.T, 500)
    n = args.n if args.n is not None else abs(args.k) + 1
    f = RadialProfile(n, t, psi_discrete_vec(args.k, n, t))
    ps_grid = parse_grid(args.p_scan)
    finite = []
    values = []
    for p in ps_grid:
        v = lorentz_weak_norm(f, p)
        finite.append(0.0 if math.isinf(v) else 1.0)
        values.append(0.0 if math.isinf(v) else v)
    out = _resolve_out(args, "lorentz.csv")
    _write_csv(out, ["p", "finite", "weak_norm"],
               [ps_grid, np.array(finite), np.array(values)])
    _write_sidecar(out, vars(args) | {"command": "lorentz"})
    print(out)
    return EXIT_OK


def cmd_psido_apply(args) -> int:
    from .psido import apply_psido
    from .transforms import RadialProfile, profile_to_csv

    job = json.loads(Path(args.job).read_text())
    n = int(job.get("n", 0))
    f = RadialProfile.from_callable(n, _bump(job.get("width", 1.0)),
                                    job.get("T", 4.0))
    from .symbols import make_symbol

    sym = make_symbol(job.get("symbol", "one"), n=n,
                      epsilon=job.get("epsilon", 0.0),
                      **job.get("symbol_params", {}))
    x = np.asarray(job.get("x_grid") or parse_grid(job.get("x", "0.05:0.05:2.5")))
    g = apply_psido(sym, f, x, job.get("Lambda", 40.0),
                    job.get("num_lambda", 2001))
    out = _resolve_out(args, "psido.csv")
    profile_to_csv(g, out)
    _write_sidecar(out, {"command": "psido-apply", "job": job})
    print(out)
    return EXIT_OK


def cmd_kernel(args) -> int:
    from .psido import (cw_symbol_extract, kernel_continuous, kernel_discrete,
                        kernel_global)

    job = json.loads(Path(args.job).read_text())
    n = int(job.get("n", 0))
    sym = _load_symbol_from_job(job, n)
    kind = job.get("kind", args.kind)
    out = _resolve_out(args, f"kernel_{kind}.csv")
    extra = {}
    if kind == "con":
        s = np.asarray(job.get("s_grid") or parse_grid(job.get("s", "0:0.05:3")))
        vals = np.array([kernel_continuous(sym, job.get("r_x", 0.0), sv,
                                           job.get("Lambda"), n) for sv in s])
        _write_csv(out, ["s", "re", "im"], [s, vals.real, vals.imag])
    elif kind == "dis":
        s = np.asarray(job.get("s_grid") or parse_grid(job.get("s", "0:0.05:3")))
        vals = np.array([kernel_discrete(sym, n, sv) for sv in s])
        _write_csv(out, ["s", "re", "im"], [s, vals.real, vals.imag])
    elif kind == "glo":
        rs = np.asarray(job.get("r_grid") or parse_grid(job.get("r", "0.6:0.2:6")))
        res = [kernel_global(sym, job.get("p", 1.5), job.get("r_x", 0.0), rv,
                             job.get("Lambda"), n) for rv in rs]
        _write_csv(out, ["r", "direct_re", "direct_im", "contour_re",
                         "contour_im", "bound_ratio"],
                   [rs,
                    np.array([x.direct.real for x in res]),
                    np.array([x.direct.imag for x in res]),
                    np.array([x.contour.real for x in res]),
                    np.array([x.contour.imag for x in res]),
                    np.array([x.bound_ratio for x in res])])
        extra["indented"] = [bool(x.indented) for x in res]
        extra["shift_heights"] = [x.shift_height for x in res]
    elif kind == "cw":
        xi = np.asarray(job.get("xi_grid") or parse_grid(job.get("xi", "0:0.1:8")))
        res = cw_symbol_extract(sym, job.get("r_x", 0.0), job.get("s", 0.0),
                                xi, job.get("Lambda"), n)
        _write_csv(out, ["xi", "value"], [xi, res.values])
        extra["bands"] = res.bands
    else:
        raise DomainError(f"unknown kernel kind {kind!r}")
    _write_sidecar(out, {"command": "kernel", "job": job}, extra)
    print(out)
    return EXIT_OK


def _load_symbol_from_job(job: dict, n: int):
    from .symbols import make_symbol

    return make_symbol(job.get("symbol", "gauss"), n=n,
                       epsilon=job.get("epsilon", 1e-3),
                       **job.get("symbol_params", {}))


def cmd_verify(args) -> int:
    from .verify import format_table, run_suite

    results = run_suite(args.suite)
    if not results:
        print(f"no checks in suite {args.suite!r}", file=sys.stderr)
        return EXIT_USAGE
    print(format_table(results))
    return EXIT_OK if all(r.ok for r in results) else EXIT_DOMAIN


def build_parser() -> _Parser:
    p = _Parser(prog="sl2harm", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("phi", help="evaluate the spherical function on a t grid")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--t", required=True, help="grid start:step:stop")
    sp.add_argument("--route", default="auto",
                    choices=["auto", "hyp", "series", "integral"])
    sp.set_defaults(func=cmd_phi)

    sp = sub.add_parser("cfun", help="c-function, reciprocal, or density")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--what", default="density", choices=["c", "cinv", "density"])
    sp.set_defaults(func=cmd_cfun)

    sp = sub.add_parser("hc", help="expansion coefficients a_k(lambda)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--K", type=int, default=30)
    sp.set_defaults(func=cmd_hc)

    sp = sub.add_parser("transform", help="forward spectral transforms of a profile")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--profile", default="bump", help="'bump' or a profile CSV path")
    sp.add_argument("--width", type=float, default=1.0)
    sp.add_argument("--T", type=float, default=4.0)
    sp.add_argument("--Lambda", type=float, default=40.0)
    sp.add_argument("--num-lambda", dest="num_lambda", type=int, default=2001)
    sp.set_defaults(func=cmd_transform)

    sp = sub.add_parser("invert", help="inverse transform from spectrum CSV + envelope")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--spectrum", required=True)
    sp.add_argument("--envelope", required=True, help="JSON sidecar path")
    sp.add_argument("--t", required=True, help="output grid start:step:stop")
    sp.set_defaults(func=cmd_invert)

    sp = sub.add_parser("roundtrip", help="forward-inverse self test")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--Lambda", type=float, default=40.0)
    sp.add_argument("--T", type=float, default=4.0)
    sp.add_argument("--width", type=float, default=1.0)
    sp.add_argument("--num-lambda", dest="num_lambda", type=int, default=2001)
    sp.set_defaults(func=cmd_roundtrip)

    sp = sub.add_parser("abel", help="shear-average transform of a bump profile")
    sp.add_argument("--r", required=True, help="grid start:step:stop")
    sp.add_argument("--T", type=float, default=4.0)
    sp.add_argument("--width", type=float, default=1.0)
    sp.set_defaults(func=cmd_abel)

    sp = sub.add_parser("lorentz", help="weak-norm finiteness scan for psi")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--p-scan", dest="p_scan", default="0.3:0.05:2.0")
    sp.add_argument("--T", type=float, default=14.0)
    sp.set_defaults(func=cmd_lorentz)

    sp = sub.add_parser("psido-apply", help="apply a symbol from a JSON job spec")
    sp.add_argument("--job", required=True)
    sp.set_defaults(func=cmd_psido_apply)

    sp = sub.add_parser("kernel", help="kernel evaluations from a JSON job spec")
    sp.add_argument("--job", required=True)
    sp.add_argument("--kind", default="con", choices=["con", "dis", "glo", "cw"])
    sp.set_defaults(func=cmd_kernel)

    sp = sub.add_parser("verify", help="run the invariant suite")
    sp.add_argument("--suite", default="all")
    sp.set_defaults(func=cmd_verify)

    for name, spp in sub.choices.items():
        if name != "verify":
            spp.add_argument("-o", "--output", default=None)
        spp.add_argument("--symbol", default="one")
        spp.add_argument("--symbol-params", dest="symbol_params", default=None)
        spp.add_argument("--epsilon", type=float, default=0.0)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PrecisionLossError as exc:
        print(f"precision loss: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
