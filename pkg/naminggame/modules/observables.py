#!/usr/bin/env python3
"""
Measurements on a simulation state: success rate, learning ability, language
maps, language clusters and steady-state averages.
"""
from typing import List, NamedTuple, Optional, Sequence, Tuple

import numpy as np
from networkx.utils import UnionFind

from .config import ConfigError
from .kernel import dominant_word
from .lattice import SimState
from .models import WindowCounters

NO_CLUSTER = -1


class TimeSeriesRow(NamedTuple):
    """Observables at the end of one observation window."""

    sweep: int
    p: float
    success_rate: Optional[float]
    mean_learning: Optional[float]
    population: int
    n_languages: int
    largest_cluster_fraction: float


class ClusterLabeling(NamedTuple):
    """Connected same-language clusters.

    ``labels`` holds a cluster id per site (NO_CLUSTER for sites without a
    language); ids are ranked by descending size, then by smallest member site in
    row-major order. ``sizes[k]`` is the size of cluster ``k``.
    """

    labels: np.ndarray
    sizes: Tuple[int, ...]

    @property
    def n_clusters(self) -> int:
        return len(self.sizes)

    @property
    def largest(self) -> int:
        return self.sizes[0] if self.sizes else 0


class SteadyState(NamedTuple):
    success_rate: Optional[float]
    mean_learning: Optional[float]


def success_rate(counters: WindowCounters) -> Optional[float]:
    """Successes over successes plus failures; skipped attempts do not count."""
    attempts = counters.successes + counters.failures
    if attempts == 0:
        return None
    return counters.successes / attempts


def mean_learning(state: SimState) -> Optional[float]:
    """Average learning ability of the living agents."""
    abilities = [agent.learning_ability for agent in state.agents()]
    if not abilities:
        return None
    return sum(abilities) / len(abilities)


def language_map(state: SimState) -> np.ndarray:
    """L x L object array of each occupant's dominant word (None where absent)."""
    languages = np.full((state.L, state.L), None, dtype=object)
    for site, agent in enumerate(state.grid):
        if agent is not None:
            languages[divmod(site, state.L)] = dominant_word(agent.inventory)
    return languages


def n_languages(languages: np.ndarray) -> int:
    """Number of distinct languages on a map."""
    return len({word for word in languages.flat if word is not None})


def clusters(languages: np.ndarray) -> ClusterLabeling:
    """
    Label 4-connected clusters of equal languages, with periodic wrap.

    A single row-major scan unions every site with its right and lower neighbour
    when both carry the same language.
    """
    rows, cols = languages.shape
    components = UnionFind()
    members = []
    for row in range(rows):
        for col in range(cols):
            word = languages[row, col]
            if word is None:
                continue
            here = (row, col)
            members.append(here)
            components[here]
            for other in ((row, (col + 1) % cols), ((row + 1) % rows, col)):
                if languages[other] == word:
                    components.union(here, other)

    groups = {}
    for site in members:
        groups.setdefault(components[site], []).append(site)
    ordered = sorted(groups.values(), key=lambda group: (-len(group), group[0]))

    labels = np.full((rows, cols), NO_CLUSTER, dtype=np.int64)
    for label, group in enumerate(ordered):
        for site in group:
            labels[site] = label
    return ClusterLabeling(labels, tuple(len(group) for group in ordered))


def largest_cluster_fraction(labeling: ClusterLabeling, population: int) -> float:
    """Share of the living agents in the largest language cluster."""
    if population == 0:
        return 0.0
    return labeling.largest / population


def steady_state_average(series: Sequence[TimeSeriesRow], relax_sweeps: int) -> SteadyState:
    """
    Mean windowed success rate and learning ability after relaxation.

    Windows ending at or before ``relax_sweeps`` are discarded; absent values are
    skipped.
    """
    if not series or series[-1].sweep <= relax_sweeps:
        covered = series[-1].sweep if series else 0
        raise ConfigError(
            "relax_sweeps",
            f"relaxation of {relax_sweeps} sweeps leaves no data in a series "
            f"covering {covered} sweeps",
        )
    kept = [row for row in series if row.sweep > relax_sweeps]
    rates = [row.success_rate for row in kept if row.success_rate is not None]
    abilities = [row.mean_learning for row in kept if row.mean_learning is not None]
    return SteadyState(
        sum(rates) / len(rates) if rates else None,
        sum(abilities) / len(abilities) if abilities else None,
    )


class Recorder:
    """
    Observer hook that turns a run into a time series.

    Every ``window`` sweeps it records a TimeSeriesRow and resets the state's
    window counters. Counters of windows ending after ``relax_sweeps`` are also
    accumulated into ``cumulative``; birth and death counts of every window go
    into ``turnover``.
    """

    def __init__(self, window: int, relax_sweeps: int = 0):
        if window < 1:
            raise ValueError(f"window must be positive, got {window}")
        self.window = window
        self.relax_sweeps = relax_sweeps
        self.rows: List[TimeSeriesRow] = []
        self.cumulative = WindowCounters()
        self.turnover = WindowCounters()
        self._last_sweep: Optional[int] = None

    def __call__(self, state: SimState):
        if state.sweep % self.window == 0:
            self.record(state)

    def flush(self, state: SimState):
        """Record the trailing partial window, if any."""
        if self._last_sweep != state.sweep:
            self.record(state)

    def record(self, state: SimState) -> TimeSeriesRow:
        counters = state.counters
        languages = language_map(state)
        labeling = clusters(languages)
        row = TimeSeriesRow(
            sweep=state.sweep,
            p=state.p,
            success_rate=success_rate(counters),
            mean_learning=mean_learning(state),
            population=state.population,
            n_languages=n_languages(languages),
            largest_cluster_fraction=largest_cluster_fraction(labeling, state.population),
        )
        if state.sweep > self.relax_sweeps:
            self.cumulative.add(counters)
        self.turnover.add(counters)
        counters.reset()
        self.rows.append(row)
        self._last_sweep = state.sweep
        return row

    def cumulative_success_rate(self) -> Optional[float]:
        return success_rate(self.cumulative)

    def steady_state(self) -> SteadyState:
        return steady_state_average(self.rows, self.relax_sweeps)
