"""Command-line front end.

Subcommands:
    solve        solve the grid problem and write profile.csv / report.csv
                 (and compare.svg unless plotting is disabled)
    convergence  solve on nested grid refinements and write convergence.csv
    verify       run the self-check suite; one PASS/FAIL/SKIP line per check

Options may also come from a plain key=value file via --config; explicit
flags override file entries.  Exit codes: 0 success, 1 invalid configuration,
2 infeasible instance, 3 verification failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import NoFeasiblePathError
from .report import RunConfig, run_convergence, run_solve, run_verification

_CONFIG_KEYS = ("a", "b", "g", "nx", "ny", "ymin", "out", "plot", "quad-steps")


def load_config_file(path: Path) -> dict[str, str]:
    """Parse `key = value` lines; '#' starts a comment."""
    entries: dict[str, str] = {}
    for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in _CONFIG_KEYS:
            raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
        entries[key] = value
    return entries


def _parse_bool(text: str) -> bool:
    lowered = text.strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"expected a boolean, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="key=value options file")
    common.add_argument("--a", type=float, help="horizontal endpoint (m), > 0")
    common.add_argument("--b", type=float, help="vertical endpoint (m), < 0")
    common.add_argument("--g", type=float, help="gravitational acceleration (m/s^2)")
    common.add_argument("--nx", type=int, help="number of x samples (>= 2)")
    common.add_argument("--ny", type=int, help="number of height samples (odd, >= 3)")
    common.add_argument("--ymin", type=float, help="height grid floor (default 2*b)")
    common.add_argument("--out", type=Path, help="output directory (default ./out)")
    common.add_argument(
        "--plot", action=argparse.BooleanOptionalAction, help="write compare.svg (default on)"
    )
    common.add_argument("--quad-steps", type=int, dest="quad_steps",
                        help="midpoint-rule steps used by verification")

    parser = argparse.ArgumentParser(
        prog="brachistochrone",
        description="Fastest-descent paths on a grid, cross-checked against the analytic cycloid.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("solve", parents=[common], help="solve and write comparison artifacts")
    conv = sub.add_parser("convergence", parents=[common], help="nested grid refinement study")
    conv.add_argument("--levels", type=int, default=3, help="number of refinement levels (>= 2)")
    sub.add_parser("verify", parents=[common], help="run the self-check suite")
    return parser


def _merge_config(args: argparse.Namespace) -> RunConfig:
    entries = load_config_file(args.config) if args.config is not None else {}

    def pick(flag, key, convert, default):
        if flag is not None:
            return flag
        if key in entries:
            return convert(entries[key])
        return default

    d = RunConfig()
    return RunConfig(
        a=pick(args.a, "a", float, d.a),
        b=pick(args.b, "b", float, d.b),
        g=pick(args.g, "g", float, d.g),
        n_x=pick(args.nx, "nx", int, d.n_x),
        n_y=pick(args.ny, "ny", int, d.n_y),
        y_min=pick(args.ymin, "ymin", float, None),
        out_dir=pick(args.out, "out", Path, d.out_dir),
        plot=pick(args.plot, "plot", _parse_bool, d.plot),
        quad_steps=pick(args.quad_steps, "quad-steps", int, d.quad_steps),
    )


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = _merge_config(args)
        if args.command == "convergence" and args.levels < 2:
            raise ValueError(f"levels must be >= 2, got {args.levels}")
        # construct early so invalid instances fail before any computation
        config.problem()
        config.grid()
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    try:
        if args.command == "solve":
            rep = run_solve(config)
            print(f"t_dp={rep.t_dp:.9g} t_star={rep.t_star:.9g} "
                  f"t_chord={rep.t_chord:.9g} max_dev={rep.max_dev:.9g}")
            print(f"artifacts written to {config.out_dir}")
            return 0
        if args.command == "convergence":
            rows = run_convergence(config, args.levels)
            for n_x, n_y, t_dp, gap in rows:
                print(f"n_x={n_x} n_y={n_y} t_dp={t_dp:.9g} gap={gap:.9g}")
            print(f"artifacts written to {config.out_dir}")
            return 0
        checks = run_verification(config)
        for check in checks:
            print(f"{check.status} {check.name}: {check.detail}")
        failures = sum(check.failed for check in checks)
        print(f"{len(checks)} checks, {failures} failures")
        return 3 if failures else 0
    except NoFeasiblePathError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
