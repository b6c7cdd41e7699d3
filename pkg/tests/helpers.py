"""
Shared builders for tests that need hand-made lattice states.
"""
import numpy as np

from naminggame.modules.lattice import SimState
from naminggame.modules.models import Agent, ModelParams, SurvivalParams

# Critical chi-square values at the 99% level, indexed by degrees of freedom.
CHI2_99 = {1: 6.635, 2: 9.210, 3: 11.345, 4: 13.277, 5: 15.086,
           6: 16.812, 7: 18.475, 8: 20.090, 9: 21.666}


def empty_state(L=5, seed=0, p=0.5, p_mut=0.0, fixed_learning=None, a=0.05, b=5.0):
    """A state with no agents on it."""
    params = ModelParams(L=L, p=p, p_mut=p_mut, fixed_learning=fixed_learning,
                         survival=SurvivalParams(a=a, b=b))
    return SimState(params, np.random.default_rng(seed))


def put(state, row, col, inventory, learning_ability=0.5, birth_sweep=0):
    """Place an agent with the given inventory; returns its site index."""
    site = state.site(row, col)
    state.place(site, Agent(dict(inventory), learning_ability, birth_sweep))
    return site


def fill(state, inventory, learning_ability=0.5):
    """Occupy every site with agents sharing a copy of ``inventory``."""
    for site in range(state.n_sites):
        state.place(site, Agent(dict(inventory), learning_ability, 0))
    return state


def chi_square(observed, expected):
    return sum((o - e) ** 2 / e for o, e in zip(observed, expected))
