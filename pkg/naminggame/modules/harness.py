#!/usr/bin/env python3
"""
Run drivers: a single simulation with observers attached, and the p-grid /
replica harness that fans independent runs out over worker processes.
"""
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import List, NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np

from ..io_utils import InputOutput, default_io
from .config import Config, ConfigError
from .lattice import Observer, RunReport, RunStatus, init_state, run
from .observables import Recorder, SteadyState, TimeSeriesRow


class SweepRow(NamedTuple):
    """Steady-state summary of one run."""

    p: float
    replica: int
    status: RunStatus
    extinct_sweep: Optional[int]
    success_rate: Optional[float]
    mean_learning: Optional[float]
    cumulative_success_rate: Optional[float]
    population: int


class SimulationResult(NamedTuple):
    report: RunReport
    series: List[TimeSeriesRow]
    summary: SweepRow
    births: int
    deaths: int


class SweepTask(NamedTuple):
    config: Config
    p_index: int
    replica: int


def derive_seed(master_seed: int, p_index: int, replica: int) -> np.random.SeedSequence:
    """Independent stream for one (p, replica) cell of a sweep."""
    return np.random.SeedSequence(master_seed, spawn_key=(p_index, replica))


def simulate(
    config: Config,
    seed: Union[int, np.random.SeedSequence, None] = None,
    observers: Sequence[Observer] = (),
    io_handler: Optional[InputOutput] = None,
    replica: int = 0,
) -> SimulationResult:
    """
    Run one simulation with a Recorder attached.

    Args:
        config: Run configuration
        seed: Seed or SeedSequence; defaults to ``config.seed``
        observers: Extra observer hooks run after the recorder
        io_handler: Where progress goes (quiet default)
        replica: Replica number reported in the summary

    Returns:
        SimulationResult with the run report, time series and summary
    """
    io = io_handler or default_io
    schedule = config.effective_schedule()
    state = init_state(config.model_params(), config.seed if seed is None else seed)
    recorder = Recorder(config.window, config.relax_sweeps)

    with io.progress(total=config.n_sweeps, desc=f"p={config.p:g} #{replica}") as bar:
        report = run(
            state, config.n_sweeps, schedule,
            [recorder, *observers, lambda _state: bar.update()],
        )

    if report.status is RunStatus.EXTINCT:
        recorder.flush(state)
        io.tool_output(f"Population extinct at sweep {report.extinct_at}")

    try:
        steady = recorder.steady_state()
    except ConfigError:
        # Died out before relaxation ended.
        steady = SteadyState(None, None)

    summary = SweepRow(
        p=schedule.p_at(max(state.sweep - 1, 0)),
        replica=replica,
        status=report.status,
        extinct_sweep=report.extinct_at,
        success_rate=steady.success_rate,
        mean_learning=steady.mean_learning,
        cumulative_success_rate=recorder.cumulative_success_rate(),
        population=state.population,
    )
    return SimulationResult(
        report, recorder.rows, summary, recorder.turnover.births, recorder.turnover.deaths
    )


def run_point(task: SweepTask) -> Tuple[int, int, SweepRow]:
    """Worker entry point: one (p, replica) cell."""
    seed = derive_seed(task.config.seed, task.p_index, task.replica)
    result = simulate(task.config, seed, replica=task.replica)
    return task.p_index, task.replica, result.summary


def sweep_tasks(config: Config) -> List[SweepTask]:
    if not config.p_grid:
        raise ConfigError("p_grid", "a sweep needs at least one communication probability")
    tasks = []
    for p_index, p in enumerate(config.p_grid):
        point = config.with_overrides(p=p, schedule=None, p_grid=())
        tasks.extend(SweepTask(point, p_index, replica) for replica in range(config.replicas))
    return tasks


def run_grid(config: Config, io_handler: Optional[InputOutput] = None,
             workers: Optional[int] = None) -> List[SweepRow]:
    """
    Run every (p, replica) pair of ``config.p_grid``.

    Each pair gets its own stream derived from the master seed, so results do
    not depend on how the pairs are spread over workers. Rows come back sorted
    by p, then replica.
    """
    io = io_handler or default_io
    tasks = sweep_tasks(config)
    workers = workers or config.workers
    results = {}

    if workers <= 1:
        for task in io.progress(tasks, desc="sweep"):
            p_index, replica, row = run_point(task)
            results[p_index, replica] = row
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(run_point, task) for task in tasks]
            for future in io.progress(as_completed(futures), total=len(futures), desc="sweep"):
                p_index, replica, row = future.result()
                results[p_index, replica] = row

    order = sorted(results, key=lambda key: (config.p_grid[key[0]], key[1]))
    rows = [results[key] for key in order]
    for row in rows:
        if row.status is RunStatus.EXTINCT:
            io.tool_warning(f"p={row.p:g} replica {row.replica} went extinct at sweep "
                            f"{row.extinct_sweep}")
    return rows
