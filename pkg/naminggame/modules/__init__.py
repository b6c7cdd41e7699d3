"""
naminggame modules package.

The simulator's components: rule kernels, the lattice event loop, measurements,
file formats and the run harness.
"""
from .config import Config, ConfigError, load_config, parse_schedule
from .formats import SnapshotWriter, read_csv, write_csv, write_snapshot, write_summary
from .harness import SweepRow, derive_seed, run_grid, simulate
from .kernel import (
    adopt, dominant_word, draw_new_word, make_offspring,
    punish, reinforce, select_word, survival_probability,
)
from .lattice import (
    Extinction, RunReport, RunStatus, SimState,
    communication_step, elementary_event, init_state,
    pick_hearer, population_step, run, sweep,
)
from .models import (
    Agent, Fate, Inventory, ModelParams, Outcome,
    Schedule, SurvivalParams, WindowCounters, WordId,
)
from .observables import (
    ClusterLabeling, Recorder, TimeSeriesRow, clusters, language_map,
    mean_learning, steady_state_average, success_rate,
)

__all__ = [
    # Models
    'Agent', 'Fate', 'Inventory', 'ModelParams', 'Outcome',
    'Schedule', 'SurvivalParams', 'WindowCounters', 'WordId',

    # Rule kernels
    'draw_new_word', 'select_word', 'reinforce', 'punish', 'adopt',
    'survival_probability', 'dominant_word', 'make_offspring',

    # Lattice
    'SimState', 'Extinction', 'RunReport', 'RunStatus',
    'init_state', 'pick_hearer', 'communication_step', 'population_step',
    'elementary_event', 'sweep', 'run',

    # Observables
    'TimeSeriesRow', 'ClusterLabeling', 'Recorder',
    'success_rate', 'mean_learning', 'language_map', 'clusters', 'steady_state_average',

    # Configuration and output
    'Config', 'ConfigError', 'load_config', 'parse_schedule',
    'write_csv', 'read_csv', 'write_summary', 'write_snapshot', 'SnapshotWriter',

    # Harness
    'SweepRow', 'derive_seed', 'simulate', 'run_grid',
]
