#!/usr/bin/env python3
"""
Configuration constants and settings for the naming-game simulator.
"""
from typing import Any, Dict, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from .models import ModelParams, Schedule, SurvivalParams

# Model defaults
DEFAULT_L = 40
DEFAULT_P = 0.3
DEFAULT_P_MUT = 0.001
DEFAULT_A = 0.05
DEFAULT_B = 5.0

# Run defaults
DEFAULT_SEED = 0
DEFAULT_N_SWEEPS = 100000
DEFAULT_RELAX_SWEEPS = 30000
DEFAULT_WINDOW = 100
DEFAULT_OUT_DIR = "output"

# Communication probability jumps from 0.1 to 0.98 at sweep 8000
BALDWIN_SCHEDULE = ((0, 0.1), (8000, 0.98))

SEED_LIMIT = 2**64

# Values that clear an optional key
NONE_LITERALS = {"", "none", "null"}


class ConfigError(ValueError):
    """A configuration problem, tied to the offending key."""

    def __init__(self, key: str, message: str):
        super().__init__(f"{key}: {message}")
        self.key = key
        self.message = message


def parse_float_list(text: str) -> Tuple[float, ...]:
    """Parse ``0.1,0.2,0.3`` into a tuple of floats."""
    items = [item.strip() for item in text.split(",") if item.strip()]
    return tuple(float(item) for item in items)


def parse_schedule_entries(text: str) -> Tuple[Tuple[int, float], ...]:
    """Parse ``0:0.1,8000:0.98`` into (activation sweep, p) pairs."""
    entries = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        start, sep, p = item.partition(":")
        if not sep:
            raise ValueError(f"schedule entry {item!r} is not of the form sweep:p")
        entries.append((int(start), float(p)))
    return tuple(entries)


def parse_schedule(text: str, ramp_sweeps: int = 0) -> Schedule:
    """Parse ``0:0.1,8000:0.98`` into a Schedule."""
    return Schedule(entries=parse_schedule_entries(text), ramp_sweeps=ramp_sweeps)


class Config(BaseModel):
    """Everything a run needs: model parameters, run lengths, schedule and outputs."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    L: int = Field(default=DEFAULT_L, ge=2)
    p: float = Field(default=DEFAULT_P, ge=0.0, le=1.0)
    p_mut: float = Field(default=DEFAULT_P_MUT, ge=0.0, le=1.0)
    a: float = Field(default=DEFAULT_A, gt=0.0)
    b: float = Field(default=DEFAULT_B, gt=0.0)
    fixed_learning: Optional[float] = Field(default=None, gt=0.0, lt=1.0)
    seed: int = Field(default=DEFAULT_SEED, ge=0, lt=SEED_LIMIT)
    n_sweeps: int = Field(default=DEFAULT_N_SWEEPS, ge=0)
    relax_sweeps: int = Field(default=DEFAULT_RELAX_SWEEPS, ge=0)
    window: int = Field(default=DEFAULT_WINDOW, ge=1)
    schedule: Optional[Schedule] = None
    ramp_sweeps: int = Field(default=0, ge=0)
    replicas: int = Field(default=1, ge=1)
    p_grid: Tuple[float, ...] = ()
    workers: int = Field(default=1, ge=1)
    snapshot_every: Optional[int] = Field(default=None, ge=1)
    out_dir: Optional[str] = None

    @field_validator("p_grid", mode="before")
    @classmethod
    def _parse_p_grid(cls, value):
        if isinstance(value, str):
            return parse_float_list(value)
        return value

    @field_validator("p_grid")
    @classmethod
    def _check_p_grid(cls, value):
        for p in value:
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"communication probability {p} outside [0, 1]")
        return value

    @field_validator("schedule", mode="before")
    @classmethod
    def _parse_schedule(cls, value):
        if isinstance(value, str):
            return {"entries": parse_schedule_entries(value)}
        return value

    @model_validator(mode="after")
    def _check_run_lengths(self):
        if self.relax_sweeps >= self.n_sweeps:
            raise ConfigError(
                "relax_sweeps",
                f"relaxation ({self.relax_sweeps}) must be shorter than the run "
                f"({self.n_sweeps} sweeps)",
            )
        self.effective_schedule()
        return self

    def model_params(self) -> ModelParams:
        return ModelParams(
            L=self.L,
            p=self.p,
            p_mut=self.p_mut,
            survival=SurvivalParams(a=self.a, b=self.b),
            fixed_learning=self.fixed_learning,
        )

    def effective_schedule(self) -> Schedule:
        """The configured schedule (constant p if none), with ``ramp_sweeps`` applied."""
        entries = self.schedule.entries if self.schedule else ((0, self.p),)
        try:
            return Schedule(entries=entries, ramp_sweeps=self.ramp_sweeps)
        except ValidationError as exc:
            raise config_error_from(exc, default_key="ramp_sweeps") from None

    def with_overrides(self, **overrides: Any) -> "Config":
        """A validated copy with some keys replaced."""
        return build_config({**self.model_dump(), **overrides})


def config_error_from(exc: ValidationError, default_key: str = "config") -> ConfigError:
    """Turn the first pydantic error into a ConfigError naming its key."""
    error = exc.errors()[0]
    original = (error.get("ctx") or {}).get("error")
    if isinstance(original, ConfigError):
        return original
    key = str(error["loc"][0]) if error["loc"] else default_key
    if error["type"] == "extra_forbidden":
        return ConfigError(key, "unknown configuration key")
    return ConfigError(key, error["msg"])


def build_config(values: Dict[str, Any]) -> Config:
    """Validate a mapping of settings into a Config."""
    try:
        return Config.model_validate(values)
    except ValidationError as exc:
        raise config_error_from(exc) from None


def load_config(text: str) -> Config:
    """
    Parse a flat ``key=value`` document into a Config.

    One pair per line; ``#`` starts a comment; blank lines are ignored. Missing
    keys take their defaults.

    Args:
        text: The configuration document

    Returns:
        The validated Config

    Raises:
        ConfigError: naming the offending key
    """
    values: Dict[str, Any] = {}
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key:
            raise ConfigError(key or f"line {number}", f"expected key=value, got {raw.strip()!r}")
        if key in values:
            raise ConfigError(key, "key given more than once")
        if key not in Config.model_fields:
            raise ConfigError(key, "unknown configuration key")
        values[key] = None if value.lower() in NONE_LITERALS else value
    return build_config(values)
