"""Command-line front end: qjacobi {gen, fit, derive, solve, residue, verify}."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .suites import SUITES, Config, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--qorder", type=int, default=12)
    common.add_argument("--zorder", type=int, default=8)
    common.add_argument("--xorder", type=int, default=5)
    common.add_argument("--margin", type=int, default=10)
    common.add_argument("--json", action="store_true", help="emit JSON")

    p = argparse.ArgumentParser(prog="qjacobi", description="Exact quasi-Jacobi form computations.")
    sub = p.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("gen", parents=[common], help="expand a named series")
    g.add_argument("--name", required=True, help="Theta, A, G2, P, Pp, G4, G<k> or Delta")

    f = sub.add_parser("fit", parents=[common], help="recognize a series as a polynomial")
    f.add_argument("--input", required=True, type=Path,
                   help="JSON with series, weight, index and optional theta_pow, delta_pow")

    d = sub.add_parser("derive", parents=[common], help="apply D_p, D_tau, dA or dG2")
    d.add_argument("--name", required=True, choices=["D_p", "D_tau", "dA", "dG2"])
    src = d.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", type=Path, help="file holding a polynomial (text or JSON)")
    src.add_argument("expr", nargs="?", help="polynomial text, e.g. 'G2^2 + A*Theta'")

    s = sub.add_parser("solve", parents=[common], help="solve the A/B/C anomaly system")
    s.add_argument("--family", required=True, choices=["A", "B", "C"])
    s.add_argument("--max-k", type=int, default=None)
    s.add_argument("--k", type=int, default=None)
    s.add_argument("--l", type=int, default=None)

    r = sub.add_parser("residue", parents=[common], help="evaluate a residue formula")
    r.add_argument("--family", required=True, choices=["A", "B", "C"])
    r.add_argument("--k", type=int, required=True)
    r.add_argument("--l", type=int, default=None)

    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("--suite", default="all", choices=sorted(SUITES) + ["all"])
    return p


def _config(args):
    try:
        return Config(args.qorder, args.zorder, args.xorder, args.margin,
                      "json" if args.json else "text")
    except ValueError as err:
        raise UsageError(str(err)) from err


def _emit(obj, text, cfg, out):
    if cfg.fmt == "json":
        out.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")
    else:
        out.write(text + ("\n" if text and not text.endswith("\n") else ""))


def cmd_gen(args, cfg, out):
    from .ring import generator_expansion

    try:
        series = generator_expansion(args.name, cfg.qorder)
    except (KeyError, ValueError) as err:
        raise UsageError(str(err)) from err
    lines = [f"q^{series.qshift + i}: {c}" for i, c in enumerate(series.coeffs)]
    _emit(series.to_json(), "\n".join(lines), cfg, out)
    return EXIT_OK


def _read_json(path):
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as err:
        raise UsageError(f"cannot read {path}: {err}") from err


def cmd_fit(args, cfg, out):
    from .ring import FitError, fit
    from .series import FourierSeries

    obj = _read_json(args.input)
    try:
        series = FourierSeries.from_json(obj["series"])
        weight, index = int(obj["weight"]), obj["index"]
    except (KeyError, TypeError, ValueError) as err:
        raise UsageError(f"malformed fit input: {err}") from err
    try:
        res = fit(series, weight, index, int(obj.get("theta_pow", 0)), int(obj.get("delta_pow", 0)),
                  margin=cfg.margin)
    except FitError as err:
        _emit({"ok": False, "error": str(err)}, f"fit failed: {err}", cfg, out)
        return EXIT_FAIL
    _emit({"ok": True, "result": res.to_json()}, str(res), cfg, out)
    return EXIT_OK


def _read_poly(args):
    from .ring import MeroQJac, parse_poly

    text = args.expr
    if args.input is not None:
        try:
            text = Path(args.input).read_text().strip()
        except OSError as err:
            raise UsageError(f"cannot read {args.input}: {err}") from err
        if text.startswith("{"):
            try:
                return MeroQJac.from_json(json.loads(text))
            except (KeyError, ValueError, json.JSONDecodeError) as err:
                raise UsageError(f"malformed polynomial JSON: {err}") from err
    try:
        return MeroQJac.of(parse_poly(text))
    except (SyntaxError, ValueError) as err:
        raise UsageError(f"cannot parse polynomial: {err}") from err


def cmd_derive(args, cfg, out):
    from .ring import derived_derivative

    f = _read_poly(args)
    if args.name in ("dA", "dG2"):
        res = f.partial(args.name)
    else:
        res = derived_derivative(f, args.name)
    _emit(res.to_json(), str(res), cfg, out)
    return EXIT_OK


def cmd_solve(args, cfg, out):
    from .k3 import build_table

    fam = args.family
    if fam == "C":
        if args.k is not None and args.l is not None:
            pairs = ((args.k, args.l),)
        elif args.max_k is not None:
            pairs = tuple((k, l) for k in range(1, args.max_k + 1) for l in range(1, k + 1)
                          if k + l <= args.max_k)
        else:
            pairs = ((1, 1), (2, 1), (3, 1), (4, 1), (2, 2), (3, 2))
        table = build_table(max_a=0, max_b=0, c_pairs=pairs)
        entries = {f"C{k},{l}": table.get("C", k, l) for k, l in sorted(pairs)}
    else:
        top = args.max_k if args.max_k is not None else (args.k if args.k is not None else 5)
        if top < 0:
            raise UsageError("--max-k must be nonnegative")
        table = build_table(max_a=top if fam == "A" else 0, max_b=top if fam == "B" else 0, c_pairs=())
        keys = [args.k] if args.k is not None and args.max_k is None else range(top + 1)
        entries = {f"{fam}{k}": table.get(fam, k) for k in keys}
    text = "\n".join(f"{k} = {v}" for k, v in entries.items())
    _emit({k: v.to_json() for k, v in entries.items()}, text, cfg, out)
    return EXIT_OK


def cmd_residue(args, cfg, out):
    from .k3 import residue_eval

    if args.family == "C" and args.l is None:
        raise UsageError("family C needs --l")
    jet = residue_eval(args.family, args.k, args.l, cfg.zorder, cfg.qorder)
    rows = {}
    for z in range(jet.lowpow[0], jet.trunc[0] + 1):
        c = jet.coeff((z,))
        if any(c):
            rows[z] = [str(x) for x in c]
    text = "\n".join(f"z^{z}: " + ", ".join(v) for z, v in rows.items())
    _emit({"family": args.family, "k": args.k, "l": args.l, "zorder": cfg.zorder,
           "qorder": cfg.qorder, "coefficients": {str(z): v for z, v in rows.items()}}, text, cfg, out)
    return EXIT_OK


def cmd_verify(args, cfg, out):
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    checks = []
    for name in names:
        checks += [(name, c) for c in run_suite(name, cfg)]
    checks.sort(key=lambda nc: (nc[0], nc[1].name))
    ok = all(c.ok for _, c in checks)
    lines = [f"{'PASS' if c.ok else 'FAIL'} [{s}] {c.name}" + (f": {c.detail}" if c.detail and not c.ok else "")
             for s, c in checks]
    lines.append(f"{sum(c.ok for _, c in checks)}/{len(checks)} checks passed")
    obj = {"ok": ok, "checks": [dict(c.to_json(), suite=s) for s, c in checks]}
    _emit(obj, "\n".join(lines), cfg, out)
    return EXIT_OK if ok else EXIT_FAIL


COMMANDS = {"gen": cmd_gen, "fit": cmd_fit, "derive": cmd_derive, "solve": cmd_solve,
            "residue": cmd_residue, "verify": cmd_verify}


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = _config(args)
        return COMMANDS[args.cmd](args, cfg, out)
    except UsageError as err:
        sys.stderr.write(f"qjacobi: {err}\n")
        return EXIT_USAGE


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
