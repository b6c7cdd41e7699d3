#!/usr/bin/env python3
"""
Data models and structures used by the naming-game simulator.
"""
import bisect
from enum import Enum
from typing import Dict, NewType, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

# Opaque 64-bit token.
WordId = NewType("WordId", int)

# Word -> positive weight, in the order the words were acquired.
Inventory = Dict[WordId, float]

UNIT_WEIGHT = 1.0


class Agent:
    """An agent: weighted word inventory, heritable learning ability and birth sweep.

    ``weight_sum`` caches the sum of the inventory weights; the lattice keeps it in
    step with every inventory update.
    """

    __slots__ = ("inventory", "learning_ability", "birth_sweep", "weight_sum")

    def __init__(self, inventory: Inventory, learning_ability: float, birth_sweep: int = 0):
        if not 0.0 < learning_ability < 1.0:
            raise ValueError(f"learning ability must lie in (0, 1), got {learning_ability}")
        if birth_sweep < 0:
            raise ValueError(f"birth sweep must be non-negative, got {birth_sweep}")
        self.inventory = inventory
        self.learning_ability = learning_ability
        self.birth_sweep = birth_sweep
        self.weight_sum = sum(inventory.values())

    def age(self, sweep: int) -> int:
        """Age in sweeps at the given simulation sweep."""
        return sweep - self.birth_sweep

    def __repr__(self):
        return (
            f"Agent(l={self.learning_ability:.4f}, born={self.birth_sweep}, "
            f"words={len(self.inventory)}, weight={self.weight_sum:.4f})"
        )


class SurvivalParams(BaseModel):
    """Parameters of the age- and performance-dependent survival probability."""

    model_config = ConfigDict(frozen=True)

    a: float = Field(default=0.05, gt=0.0)
    b: float = Field(default=5.0, gt=0.0)


class ModelParams(BaseModel):
    """Control parameters of the model.

    When ``fixed_learning`` is set every agent carries that learning ability and
    the ability never mutates.
    """

    model_config = ConfigDict(frozen=True)

    L: int = Field(default=40, ge=2)
    p: float = Field(default=0.3, ge=0.0, le=1.0)
    p_mut: float = Field(default=0.001, ge=0.0, le=1.0)
    survival: SurvivalParams = SurvivalParams()
    fixed_learning: Optional[float] = Field(default=None, gt=0.0, lt=1.0)


class Schedule(BaseModel):
    """Piecewise-constant communication probability, switched at sweep granularity.

    With ``ramp_sweeps`` = R > 0 each switch becomes a linear change spread over
    the R sweeps starting at the activation sweep.
    """

    model_config = ConfigDict(frozen=True)

    entries: Tuple[Tuple[int, float], ...]
    ramp_sweeps: int = Field(default=0, ge=0)

    @field_validator("entries")
    @classmethod
    def _check_entries(cls, entries):
        if not entries:
            raise ValueError("a schedule needs at least one entry")
        if entries[0][0] != 0:
            raise ValueError("the first schedule entry must activate at sweep 0")
        for (prev, _), (nxt, _) in zip(entries, entries[1:]):
            if nxt <= prev:
                raise ValueError("activation sweeps must be strictly increasing")
        for _, p in entries:
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"communication probability {p} outside [0, 1]")
        return entries

    @model_validator(mode="after")
    def _check_ramp(self):
        gaps = [nxt - prev for (prev, _), (nxt, _) in zip(self.entries, self.entries[1:])]
        if self.ramp_sweeps and gaps and self.ramp_sweeps >= min(gaps):
            raise ValueError("ramp_sweeps must be shorter than the gap between activations")
        return self

    @classmethod
    def constant(cls, p: float) -> "Schedule":
        return cls(entries=((0, p),))

    def p_at(self, sweep: int) -> float:
        """Communication probability for the sweep about to execute."""
        starts = [start for start, _ in self.entries]
        k = bisect.bisect_right(starts, sweep) - 1
        start, target = self.entries[k]
        if k == 0 or not self.ramp_sweeps:
            return target
        previous = self.entries[k - 1][1]
        progress = min(1.0, (sweep - start + 1) / self.ramp_sweeps)
        return previous + (target - previous) * progress

    def format(self) -> str:
        """Render in the ``sweep:p,sweep:p`` form accepted by the config loader."""
        return ",".join(f"{start}:{p!r}" for start, p in self.entries)


class Outcome(Enum):
    """Result of a communication attempt."""

    SUCCESS = "success"
    FAILURE = "failure"
    SKIPPED = "skipped"


class Fate(Enum):
    """Result of a population update."""

    DIED = "died"
    BRED = "bred"
    SURVIVED = "survived"


class WindowCounters:
    """Event counts for one observation window."""

    __slots__ = ("successes", "failures", "skipped", "births", "deaths", "population_updates")

    def __init__(self, successes=0, failures=0, skipped=0, births=0, deaths=0,
                 population_updates=0):
        self.successes = successes
        self.failures = failures
        self.skipped = skipped
        self.births = births
        self.deaths = deaths
        self.population_updates = population_updates

    @property
    def communications(self) -> int:
        return self.successes + self.failures + self.skipped

    def reset(self):
        for name in self.__slots__:
            setattr(self, name, 0)

    def add(self, other: "WindowCounters"):
        for name in self.__slots__:
            setattr(self, name, getattr(self, name) + getattr(other, name))

    def __repr__(self):
        fields = ", ".join(f"{name}={getattr(self, name)}" for name in self.__slots__)
        return f"WindowCounters({fields})"
