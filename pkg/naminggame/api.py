"""
Naming-game simulator API for programmatic usage.

This module provides the experiment entry points behind the command line:
single runs, p-grid sweeps, the Baldwin schedule preset and lattice snapshots.
"""

import os
from typing import List, NamedTuple, Optional, Tuple

from .io_utils import InputOutput, default_io
from .modules.config import BALDWIN_SCHEDULE, DEFAULT_OUT_DIR, Config
from .modules.formats import SnapshotWriter, write_csv, write_summary
from .modules.harness import SweepRow, run_grid, simulate
from .modules.lattice import RunStatus
from .modules.observables import TimeSeriesRow

TIMESERIES_FILE = "timeseries.csv"
SUMMARY_FILE = "summary.csv"
SWEEP_FILE = "sweep.csv"
BALDWIN_FILE = "baldwin.csv"


class RunArtifacts(NamedTuple):
    """What a run produced: its series, summary, written files and status."""

    series: List[TimeSeriesRow]
    summary: SweepRow
    status: RunStatus
    extinct_at: Optional[int]
    snapshots: Tuple[str, ...] = ()
    files: Tuple[str, ...] = ()


def _run(config: Config, io: InputOutput, series_file: str) -> RunArtifacts:
    observers = []
    snapshots = None
    if config.snapshot_every and config.out_dir:
        snapshots = SnapshotWriter(config.out_dir, config.snapshot_every, io)
        observers.append(snapshots)

    result = simulate(config, observers=observers, io_handler=io)

    files = []
    if config.out_dir:
        series_path = os.path.join(config.out_dir, series_file)
        summary_path = os.path.join(config.out_dir, SUMMARY_FILE)
        write_csv(result.series, series_path, io)
        write_summary([result.summary], summary_path, io)
        files = [series_path, summary_path]

    io.tool_output(
        f"Births {result.births}, deaths {result.deaths}, "
        f"final population {result.summary.population}"
    )
    return RunArtifacts(
        series=result.series,
        summary=result.summary,
        status=result.report.status,
        extinct_at=result.report.extinct_at,
        snapshots=tuple(snapshots.paths) if snapshots else (),
        files=tuple(files),
    )


def run_single(config: Config, io: Optional[InputOutput] = None) -> RunArtifacts:
    """
    Run one simulation and, when ``config.out_dir`` is set, write its tables.

    Args:
        config: Validated run configuration
        io: Optional InputOutput instance for messages and progress

    Returns:
        RunArtifacts; an extinct run is a valid result, not an error
    """
    return _run(config, io or default_io, TIMESERIES_FILE)


def preset_baldwin(config: Config, io: Optional[InputOutput] = None,
                   ramp_sweeps: Optional[int] = None) -> RunArtifacts:
    """
    Run with p = 0.1 until sweep 8000 and p = 0.98 afterwards.

    Args:
        config: Base configuration; its schedule and p are replaced
        io: Optional InputOutput instance
        ramp_sweeps: Spread the switch over this many sweeps instead of jumping

    Returns:
        RunArtifacts whose series plots s and l against sweeps
    """
    overrides = {"schedule": {"entries": BALDWIN_SCHEDULE}, "p": BALDWIN_SCHEDULE[0][1]}
    if ramp_sweeps is not None:
        overrides["ramp_sweeps"] = ramp_sweeps
    return _run(config.with_overrides(**overrides), io or default_io, BALDWIN_FILE)


def run_snapshots(config: Config, io: Optional[InputOutput] = None) -> RunArtifacts:
    """Run once, writing a PGM snapshot every ``snapshot_every`` sweeps (default: window)."""
    if not config.snapshot_every:
        config = config.with_overrides(snapshot_every=config.window)
    if not config.out_dir:
        config = config.with_overrides(out_dir=DEFAULT_OUT_DIR)
    return _run(config, io or default_io, TIMESERIES_FILE)


def run_sweep(config: Config, io: Optional[InputOutput] = None,
              workers: Optional[int] = None) -> List[SweepRow]:
    """
    Scan ``config.p_grid`` with ``config.replicas`` independent runs per point.

    Args:
        config: Configuration with a non-empty p_grid
        io: Optional InputOutput instance
        workers: Worker processes (defaults to ``config.workers``)

    Returns:
        Summary rows sorted by (p, replica)
    """
    io = io or default_io
    rows = run_grid(config, io, workers)
    if config.out_dir:
        write_summary(rows, os.path.join(config.out_dir, SWEEP_FILE), io)
    return rows
