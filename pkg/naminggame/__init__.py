"""
naminggame: evolutionary naming game on a square lattice

Agents on a periodic L x L lattice negotiate a shared word through weighted
inventories while they are born, die and pass on a mutable learning ability.
The package reproduces the model's bio-linguistic transition (success rate and
learning ability jump together as the communication probability grows) and the
Baldwin-effect ordering (culture first, genes later).

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""

__version__ = "0.1.0"

from .api import RunArtifacts, preset_baldwin, run_single, run_snapshots, run_sweep
from .io_utils import InputOutput, OutputError, default_io
from .modules.config import Config, ConfigError, load_config
from .modules.lattice import RunStatus, SimState, init_state, run
from .modules.models import Agent, ModelParams, Schedule, SurvivalParams
from .cli import main

__all__ = [
    # Experiments
    "run_single", "run_sweep", "preset_baldwin", "run_snapshots", "RunArtifacts",
    "main",

    # Configuration
    "Config", "ConfigError", "load_config",

    # Simulation
    "Agent", "ModelParams", "Schedule", "SurvivalParams",
    "SimState", "RunStatus", "init_state", "run",

    # I/O
    "InputOutput", "OutputError", "default_io",
]
