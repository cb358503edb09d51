"""Command-line entry points.

    halfwave-lab <subcommand> --config scenario.cfg [--out DIR]
    soliton-check --v 0.5 --zeros 1j,1+2j

Subcommands mirror the scenario kinds; `evolve` accepts both
evolve-sphere and evolve-hyperbolic configs. HWL_THREADS caps the BLAS/
FFT thread pools (must be set before numpy is first imported, which this
module guarantees for console-script invocations).
"""

import argparse
import json
import os
import sys

_threads = os.environ.get("HWL_THREADS")
if _threads:
    for _var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS"):
        os.environ.setdefault(_var, _threads)

from .config import ConfigError, parse_config  # noqa: E402
from .runner import dispatch, soliton_report  # noqa: E402

_SUBCOMMAND_KINDS = {
    "evolve": ("evolve-sphere", "evolve-hyperbolic"),
    "chain": ("chain",),
    "lax-spectrum": ("lax-spectrum",),
    "hs-compare": ("hs-compare",),
    "soliton-check": ("soliton-check",),
}


def _error_record(out_dir, message):
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, "error.json")
    with open(path, "w") as fh:
        json.dump({"status": "error", "message": message}, fh, indent=2)
    print(f"error: {message}", file=sys.stderr)


def main(argv=None):
    parser = argparse.ArgumentParser(prog="halfwave-lab",
                                     description="half-wave maps numerical lab")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _SUBCOMMAND_KINDS:
        p = sub.add_parser(name)
        p.add_argument("--config", required=True, help="scenario config file")
        p.add_argument("--out", default=None, help="output directory")
    args = parser.parse_args(argv)

    out_dir = args.out or "."
    try:
        with open(args.config) as fh:
            cfg = parse_config(fh.read())
    except (OSError, ConfigError) as exc:
        _error_record(out_dir, str(exc))
        return 2

    if cfg.kind not in _SUBCOMMAND_KINDS[args.command]:
        _error_record(out_dir,
                      f"config kind {cfg.kind!r} does not match subcommand "
                      f"{args.command!r}")
        return 2

    try:
        paths = dispatch(cfg, args.out)
    except Exception as exc:
        _error_record(args.out or cfg.out_dir, f"{type(exc).__name__}: {exc}")
        return 1
    for p in paths:
        print(p)
    return 0


def soliton_check_main(argv=None):
    parser = argparse.ArgumentParser(
        prog="soliton-check",
        description="evaluate a Blaschke traveling-wave profile")
    parser.add_argument("--v", type=float, required=True, help="velocity, |v| < 1")
    parser.add_argument("--zeros", default="",
                        help="comma-separated upper-half-plane zeros, e.g. 1j,1+2j")
    args = parser.parse_args(argv)
    try:
        zeros = tuple(complex(t.strip().replace(" ", ""))
                      for t in args.zeros.split(",") if t.strip())
        report = soliton_report(args.v, zeros)
    except ValueError as exc:
        print(json.dumps({"status": "error", "message": str(exc)}))
        return 2
    print(json.dumps(report, indent=2))
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
