#!/usr/bin/env python3
"""
Lattice state and event loop for the naming-game simulator.

Agents live on an L x L square lattice with periodic boundaries. Sites are
addressed by their flat index ``row * L + col``. An elementary event picks a
random agent; with probability p it speaks to a neighbour, otherwise it faces a
population update (death or breeding). A sweep is L*L elementary events.
"""
from enum import Enum
from typing import Callable, Iterable, Iterator, List, NamedTuple, Optional, Tuple, Union

import numpy as np

from .kernel import (
    adopt,
    draw_learning_ability,
    draw_new_word,
    make_offspring,
    punish,
    reinforce,
    select_word,
    survival_probability,
)
from .models import (
    UNIT_WEIGHT,
    Agent,
    Fate,
    ModelParams,
    Outcome,
    Schedule,
    WindowCounters,
)

Seed = Union[int, np.random.SeedSequence, None]
Observer = Callable[["SimState"], None]


class Extinction(Exception):
    """Raised when an event or sweep finds no living agent."""

    def __init__(self, sweep: int):
        super().__init__(f"population extinct at sweep {sweep}")
        self.sweep = sweep


class RunStatus(str, Enum):
    COMPLETED = "completed"
    EXTINCT = "extinct"


class RunReport(NamedTuple):
    status: RunStatus
    state: "SimState"
    extinct_at: Optional[int] = None


def neighbor_table(L: int) -> List[Tuple[int, int, int, int]]:
    """Von Neumann neighbours (up, down, left, right) of every site, with wrap."""
    table = []
    for row in range(L):
        for col in range(L):
            table.append((
                ((row - 1) % L) * L + col,
                ((row + 1) % L) * L + col,
                row * L + (col - 1) % L,
                row * L + (col + 1) % L,
            ))
    return table


class SimState:
    """
    Mutable simulation state: grid, sweep clock, generator and caches.

    ``_occupied`` lists the occupied sites and ``_slot`` maps a site to its
    position in that list, so a uniformly random agent is one draw away.
    ``total_weight`` caches the sum of all agents' weight sums.
    """

    def __init__(self, params: ModelParams, rng: np.random.Generator):
        self.params = params
        self.L = params.L
        self.n_sites = params.L * params.L
        self.grid: List[Optional[Agent]] = [None] * self.n_sites
        self.neighbors = neighbor_table(params.L)
        self.sweep = 0
        self.rng = rng
        self.p = params.p
        self.counters = WindowCounters()
        self.total_weight = 0.0
        self._occupied: List[int] = []
        self._slot = {}

    @property
    def population(self) -> int:
        return len(self._occupied)

    @property
    def occupied_index(self) -> frozenset:
        return frozenset(self._occupied)

    def site(self, row: int, col: int) -> int:
        return (row % self.L) * self.L + col % self.L

    def coords(self, site: int) -> Tuple[int, int]:
        return divmod(site, self.L)

    def agent_at(self, site: int) -> Optional[Agent]:
        return self.grid[site]

    def agents(self) -> Iterator[Agent]:
        """Living agents in row-major site order."""
        return (agent for agent in self.grid if agent is not None)

    def place(self, site: int, agent: Agent):
        """Put an agent on an empty site."""
        if self.grid[site] is not None:
            raise ValueError(f"site {self.coords(site)} is already occupied")
        self.grid[site] = agent
        self._slot[site] = len(self._occupied)
        self._occupied.append(site)
        self.total_weight += agent.weight_sum

    def remove(self, site: int) -> Agent:
        """Clear an occupied site and return its former occupant."""
        agent = self.grid[site]
        if agent is None:
            raise ValueError(f"site {self.coords(site)} is empty")
        self.grid[site] = None
        slot = self._slot.pop(site)
        last = self._occupied.pop()
        if last != site:
            self._occupied[slot] = last
            self._slot[last] = slot
        if self._occupied:
            self.total_weight -= agent.weight_sum
        else:
            self.total_weight = 0.0
        return agent

    def random_agent_site(self) -> int:
        occupied = self._occupied
        return occupied[int(self.rng.random() * len(occupied))]

    def mean_weight(self) -> float:
        """Average over living agents of their weight sums, from the caches."""
        if not self._occupied:
            return 0.0
        return max(self.total_weight, 0.0) / len(self._occupied)

    def recompute_weight_totals(self) -> Tuple[List[float], float]:
        """Per-agent weight sums (row-major) and their total, from the inventories."""
        sums = [sum(agent.inventory.values()) for agent in self.agents()]
        return sums, sum(sums)

    def check_invariants(self, tolerance: float = 1e-6):
        """Assert occupancy, cache, weight and ability invariants."""
        grid_sites = {site for site, agent in enumerate(self.grid) if agent is not None}
        assert grid_sites == set(self._occupied), "occupied index out of sync with grid"
        assert len(self._occupied) == len(grid_sites), "duplicate entries in occupied index"
        assert all(self._occupied[slot] == site for site, slot in self._slot.items())
        assert self.population <= self.n_sites
        assert len({id(agent) for agent in self.agents()}) == self.population, (
            "an agent occupies two sites"
        )

        fixed = self.params.fixed_learning
        sums, total = self.recompute_weight_totals()
        for agent, recomputed in zip(self.agents(), sums):
            assert all(weight > 0.0 for weight in agent.inventory.values()), (
                "non-positive weight in inventory"
            )
            assert 0.0 < agent.learning_ability < 1.0, "learning ability outside (0, 1)"
            if fixed is not None:
                assert agent.learning_ability == fixed, "learning ability drifted from fixed"
            assert abs(agent.weight_sum - recomputed) <= tolerance * max(1.0, recomputed), (
                "per-agent weight cache out of sync"
            )
            assert agent.birth_sweep <= self.sweep
        assert abs(self.total_weight - total) <= tolerance * max(1.0, total), (
            "global weight cache out of sync"
        )


def init_state(params: ModelParams, seed: Seed) -> SimState:
    """
    Fill every site with an agent holding one random word at unit weight.

    Learning abilities are uniform on (0, 1) unless ``params.fixed_learning`` is
    set. The result depends only on ``params`` and ``seed``.
    """
    state = SimState(params, np.random.default_rng(seed))
    rng = state.rng
    for site in range(state.n_sites):
        word = draw_new_word(rng)
        if params.fixed_learning is not None:
            ability = params.fixed_learning
        else:
            ability = draw_learning_ability(rng)
        state.place(site, Agent({word: UNIT_WEIGHT}, ability, 0))
    return state


def pick_hearer(state: SimState, speaker_site: int, rng: np.random.Generator) -> Optional[int]:
    """Uniform choice among the occupied neighbours of the speaker, or None."""
    grid = state.grid
    if grid[speaker_site] is None:
        raise ValueError(f"speaker site {state.coords(speaker_site)} is empty")
    candidates = [site for site in state.neighbors[speaker_site] if grid[site] is not None]
    if not candidates:
        return None
    if len(candidates) == 1:
        return candidates[0]
    return candidates[int(rng.random() * len(candidates))]


def communication_step(state: SimState, speaker_site: int) -> Outcome:
    """
    One naming-game exchange initiated by the agent at ``speaker_site``.

    An isolated speaker is skipped before it could invent a word. A speaker with
    an empty inventory invents a word at unit weight and says it.
    """
    grid = state.grid
    speaker = grid[speaker_site]
    if speaker is None:
        raise ValueError(f"speaker site {state.coords(speaker_site)} is empty")
    rng = state.rng

    hearer_site = pick_hearer(state, speaker_site, rng)
    if hearer_site is None:
        return Outcome.SKIPPED
    hearer = grid[hearer_site]

    said = speaker.inventory
    if said:
        word = select_word(said, rng)
    else:
        word = draw_new_word(rng)
        adopt(said, word)
        speaker.weight_sum = UNIT_WEIGHT
        state.total_weight += UNIT_WEIGHT

    if word in hearer.inventory:
        reinforce(said, word, speaker.learning_ability)
        reinforce(hearer.inventory, word, hearer.learning_ability)
        speaker.weight_sum += speaker.learning_ability
        hearer.weight_sum += hearer.learning_ability
        state.total_weight += speaker.learning_ability + hearer.learning_ability
        return Outcome.SUCCESS

    before = said[word]
    punish(said, word, speaker.learning_ability)
    if said:
        delta = said.get(word, 0.0) - before
    else:
        delta = -speaker.weight_sum
    speaker.weight_sum += delta
    adopt(hearer.inventory, word)
    hearer.weight_sum += UNIT_WEIGHT
    state.total_weight += delta + UNIT_WEIGHT
    return Outcome.FAILURE


def population_step(state: SimState, site: int) -> Fate:
    """
    Death-or-breeding update of the agent at ``site``.

    The agent dies with probability 1 - p_surv, where the mean weight includes the
    agent itself. A survivor breeds into a uniformly chosen empty neighbour site,
    if there is one.
    """
    grid = state.grid
    agent = grid[site]
    if agent is None:
        raise ValueError(f"site {state.coords(site)} is empty")
    rng = state.rng
    params = state.params

    p_surv = survival_probability(
        agent.age(state.sweep),
        max(agent.weight_sum, 0.0),
        state.mean_weight(),
        params.survival,
    )
    if rng.random() >= p_surv:
        state.remove(site)
        return Fate.DIED

    empty = [neighbor for neighbor in state.neighbors[site] if grid[neighbor] is None]
    if not empty:
        return Fate.SURVIVED
    target = empty[0] if len(empty) == 1 else empty[int(rng.random() * len(empty))]
    child = make_offspring(agent, params.p_mut, state.sweep, rng, params.fixed_learning)
    state.place(target, child)
    return Fate.BRED


def elementary_event(state: SimState) -> Union[Outcome, Fate]:
    """Pick a random agent and let it communicate (prob. p) or face a population update."""
    if not state._occupied:
        raise Extinction(state.sweep)
    site = state.random_agent_site()
    counters = state.counters
    if state.rng.random() < state.p:
        outcome = communication_step(state, site)
        if outcome is Outcome.SUCCESS:
            counters.successes += 1
        elif outcome is Outcome.FAILURE:
            counters.failures += 1
        else:
            counters.skipped += 1
        return outcome

    fate = population_step(state, site)
    counters.population_updates += 1
    if fate is Fate.DIED:
        counters.deaths += 1
    elif fate is Fate.BRED:
        counters.births += 1
    return fate


def sweep(state: SimState):
    """
    Run L*L elementary events and advance the sweep clock.

    Extinction part-way through aborts the sweep; the partial sweep still counts,
    so the signal carries the number of the sweep in which the last agent died.
    """
    if not state._occupied:
        raise Extinction(state.sweep)
    try:
        for _ in range(state.n_sites):
            elementary_event(state)
    except Extinction:
        state.sweep += 1
        raise Extinction(state.sweep) from None
    state.sweep += 1


def run(
    state: SimState,
    n_sweeps: int,
    schedule: Optional[Schedule] = None,
    observer_hooks: Iterable[Observer] = (),
) -> RunReport:
    """
    Advance ``state`` by up to ``n_sweeps`` sweeps.

    Args:
        state: State to evolve in place
        n_sweeps: Number of sweeps to run
        schedule: Communication probability schedule (constant params.p if None)
        observer_hooks: Callables invoked with the state after every sweep

    Returns:
        RunReport with status COMPLETED, or EXTINCT and the extinction sweep
    """
    if schedule is None:
        schedule = Schedule.constant(state.params.p)
    hooks = list(observer_hooks)
    for _ in range(n_sweeps):
        state.p = schedule.p_at(state.sweep)
        try:
            sweep(state)
        except Extinction as exc:
            return RunReport(RunStatus.EXTINCT, state, exc.sweep)
        for hook in hooks:
            hook(state)
    return RunReport(RunStatus.COMPLETED, state)
