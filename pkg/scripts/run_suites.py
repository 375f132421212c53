"""Run every verification suite and write a timing/result summary as JSON.

    python3 scripts/run_suites.py [--qorder N] [--out results.json]
"""
import argparse
import json
import sys
import time

from qjacobi.suites import SUITES, Config, run_suite


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--qorder", type=int, default=12)
    ap.add_argument("--zorder", type=int, default=8)
    ap.add_argument("--xorder", type=int, default=5)
    ap.add_argument("--out", default="-")
    args = ap.parse_args(argv)
    cfg = Config(args.qorder, args.zorder, args.xorder)

    report = {"config": vars(args), "suites": {}}
    failed = 0
    for name in sorted(SUITES):
        t0 = time.perf_counter()
        checks = run_suite(name, cfg)
        dt = time.perf_counter() - t0
        bad = [c.name for c in checks if not c.ok]
        failed += len(bad)
        report["suites"][name] = {"checks": len(checks), "failed": bad, "seconds": round(dt, 3)}
        print(f"{name:14s} {len(checks) - len(bad):4d}/{len(checks):<4d} {dt:7.2f}s", file=sys.stderr)

    text = json.dumps(report, indent=2, sort_keys=True)
    if args.out == "-":
        print(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
