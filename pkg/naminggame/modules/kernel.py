#!/usr/bin/env python3
"""
Rule kernels of the evolutionary naming game.

Inventory manipulation, word selection, survival probability and offspring
construction. Nothing here knows about the lattice or the event schedule; every
function either is pure or mutates only the arguments it is given.
"""
import math
from typing import Optional

import numpy as np

from .models import UNIT_WEIGHT, Agent, Inventory, SurvivalParams, WordId

WORD_MAX = 2**64 - 1


def draw_new_word(rng: np.random.Generator) -> WordId:
    """Create a word: a token drawn uniformly from the 64-bit space."""
    return WordId(int(rng.integers(0, WORD_MAX, dtype=np.uint64, endpoint=True)))


def draw_learning_ability(rng: np.random.Generator) -> float:
    """Uniform draw on the open interval (0, 1)."""
    value = rng.random()
    while value == 0.0:
        value = rng.random()
    return value


def select_word(inventory: Inventory, rng: np.random.Generator) -> WordId:
    """
    Pick a word with probability proportional to its weight.

    Args:
        inventory: Non-empty word inventory
        rng: Generator to draw from

    Returns:
        The selected word
    """
    if not inventory:
        raise ValueError("cannot select a word from an empty inventory")
    threshold = rng.random() * sum(inventory.values())
    cumulative = 0.0
    for word, weight in inventory.items():
        cumulative += weight
        if threshold < cumulative:
            return word
    # Rounding can leave threshold a hair above the running sum.
    return word


def reinforce(inventory: Inventory, word: WordId, amount: float) -> Inventory:
    """Increase the weight of ``word`` by ``amount``."""
    if word not in inventory:
        raise KeyError(f"word {word} is not in the inventory")
    inventory[word] += amount
    return inventory


def punish(inventory: Inventory, word: WordId, amount: float) -> Inventory:
    """Decrease the weight of ``word`` by ``amount``; drop it once the weight is <= 0."""
    if word not in inventory:
        raise KeyError(f"word {word} is not in the inventory")
    weight = inventory[word] - amount
    if weight <= 0.0:
        del inventory[word]
    else:
        inventory[word] = weight
    return inventory


def adopt(inventory: Inventory, word: WordId) -> Inventory:
    """Add a word the hearer did not know, with unit weight."""
    if word in inventory:
        raise ValueError(f"word {word} is already in the inventory")
    inventory[word] = UNIT_WEIGHT
    return inventory


def survival_probability(
    age: float, weight_sum: float, mean_weight: float, params: SurvivalParams
) -> float:
    """
    Probability that an agent survives a population update.

    exp(-a*age) * (1 - exp(-b*weight_sum/mean_weight)); zero when the mean weight
    is zero, which is the weight_sum -> 0 limit of the same expression.

    Args:
        age: Agent age in sweeps
        weight_sum: Sum of the agent's inventory weights
        mean_weight: Average over living agents of their weight sums
        params: Survival parameters a and b

    Returns:
        Probability in [0, 1]
    """
    if age < 0 or weight_sum < 0 or mean_weight < 0:
        raise ValueError(
            f"survival inputs must be non-negative (age={age}, "
            f"weight_sum={weight_sum}, mean_weight={mean_weight})"
        )
    if mean_weight == 0.0:
        return 0.0
    return math.exp(-params.a * age) * -math.expm1(-params.b * weight_sum / mean_weight)


def dominant_word(inventory: Inventory) -> Optional[WordId]:
    """
    The language of an inventory: its largest-weight word.

    On equal weights the word held longest wins, so a heard word only takes over
    once it outweighs the current one.
    """
    if not inventory:
        return None
    return max(inventory, key=inventory.__getitem__)


def make_offspring(
    parent: Agent,
    p_mut: float,
    birth_sweep: int,
    rng: np.random.Generator,
    fixed_learning: Optional[float] = None,
) -> Agent:
    """
    Build the child of ``parent``.

    The child inherits the parent's learning ability and its dominant word at unit
    weight. With probability ``p_mut`` the ability is redrawn, and with an
    independent probability ``p_mut`` the word is replaced by a new one. A parent
    with an empty inventory has a child with an empty inventory.

    Args:
        parent: The breeding agent
        p_mut: Mutation probability for ability and word
        birth_sweep: Sweep at which the child is born
        rng: Generator to draw from
        fixed_learning: When set, the child's ability and no ability mutation

    Returns:
        The new Agent
    """
    if not 0.0 <= p_mut <= 1.0:
        raise ValueError(f"mutation probability {p_mut} outside [0, 1]")

    if fixed_learning is not None:
        ability = fixed_learning
    elif rng.random() < p_mut:
        ability = draw_learning_ability(rng)
    else:
        ability = parent.learning_ability

    inventory: Inventory = {}
    word = dominant_word(parent.inventory)
    if word is not None:
        if rng.random() < p_mut:
            word = draw_new_word(rng)
        inventory[word] = UNIT_WEIGHT

    return Agent(inventory, ability, birth_sweep)
