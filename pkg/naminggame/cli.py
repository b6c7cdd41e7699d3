#!/usr/bin/env python3
"""
Command line interface of the naming-game simulator.
"""
import argparse

from .api import preset_baldwin, run_single, run_snapshots, run_sweep
from .io_utils import InputOutput, OutputError
from .modules.config import DEFAULT_OUT_DIR, Config, ConfigError, load_config
from .modules.formats import format_real

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_CONFIG = 2


def build_parser() -> argparse.ArgumentParser:
    """Command line parser with the run, sweep, baldwin and snapshot subcommands."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--config", help="Path to a key=value configuration file"
    )
    common.add_argument(
        "--seed", type=int, help="Master random seed (0 <= seed < 2**64)"
    )
    common.add_argument(
        "--out", help=f"Output directory (default: {DEFAULT_OUT_DIR})"
    )
    common.add_argument(
        "--fixed-learning", type=float,
        help="Keep every agent's learning ability at this value (control variant)"
    )
    common.add_argument(
        "--snapshot-every", type=int, help="Write a PGM snapshot every N sweeps"
    )
    common.add_argument(
        "--p", type=float, help="Communication probability (ignored when a schedule is set)"
    )
    common.add_argument(
        "--verbose", "-v", action="store_true", help="Enable verbose output and progress bars"
    )

    parser = argparse.ArgumentParser(
        prog="naminggame",
        description="Evolutionary naming game on a periodic square lattice.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    commands.add_parser("run", parents=[common], help="Single run with time series output")

    sweep = commands.add_parser("sweep", parents=[common], help="Scan communication probabilities")
    sweep.add_argument("--p-grid", help="Comma-separated communication probabilities")
    sweep.add_argument("--replicas", type=int, help="Independent runs per grid point")
    sweep.add_argument("--workers", type=int, help="Worker processes for the replicas")

    baldwin = commands.add_parser(
        "baldwin", parents=[common], help="p = 0.1 until sweep 8000, then p = 0.98"
    )
    baldwin.add_argument(
        "--ramp", type=int, help="Change p linearly over this many sweeps instead of jumping"
    )

    commands.add_parser("snapshot", parents=[common], help="Run and write PGM lattice snapshots")
    return parser


def build_config(args: argparse.Namespace, io: InputOutput) -> Config:
    """Load the config file (if any) and apply command line overrides."""
    text = ""
    if args.config:
        text = io.read_text(args.config)
        if text is None:
            raise OutputError(args.config, "configuration file could not be read")
    config = load_config(text)

    overrides = {
        "seed": args.seed,
        "out_dir": args.out,
        "fixed_learning": args.fixed_learning,
        "snapshot_every": args.snapshot_every,
        "p": args.p,
        "p_grid": getattr(args, "p_grid", None),
        "replicas": getattr(args, "replicas", None),
        "workers": getattr(args, "workers", None),
    }
    overrides = {key: value for key, value in overrides.items() if value is not None}
    if not config.out_dir and "out_dir" not in overrides:
        overrides["out_dir"] = DEFAULT_OUT_DIR
    return config.with_overrides(**overrides)


def _shown(value) -> str:
    return format_real(value) or "n/a"


def main(argv=None) -> int:
    """Main function for the command line interface."""
    parser = build_parser()
    args = parser.parse_args(argv)

    io = InputOutput(quiet=not args.verbose)

    try:
        config = build_config(args, io)
        if args.command == "run":
            artifacts = run_single(config, io)
        elif args.command == "baldwin":
            artifacts = preset_baldwin(config, io, ramp_sweeps=args.ramp)
        elif args.command == "snapshot":
            artifacts = run_snapshots(config, io)
        else:
            rows = run_sweep(config, io)
            io.tool_output(f"Sweep finished: {len(rows)} runs")
            return EXIT_OK
    except ConfigError as e:
        io.tool_error(f"Invalid configuration: {e}")
        return EXIT_CONFIG
    except OutputError:
        # Already reported with its path.
        return EXIT_FAILURE
    except Exception as e:
        io.tool_error(f"{type(e).__name__}: {e}")
        return EXIT_FAILURE

    summary = artifacts.summary
    if artifacts.extinct_at is not None:
        io.tool_output(f"Run ended: population extinct at sweep {artifacts.extinct_at}")
    io.tool_output(
        f"Steady state: success rate {_shown(summary.success_rate)}, "
        f"mean learning ability {_shown(summary.mean_learning)}"
    )
    return EXIT_OK

