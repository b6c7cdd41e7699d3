#!/usr/bin/env python3
"""
Tests for the measurements: success rate, learning ability, language maps,
cluster labeling, steady-state averages and the time-series recorder.
"""
import sys
import unittest
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).parent.parent))

from naminggame.modules.config import ConfigError
from naminggame.modules.lattice import init_state, run
from naminggame.modules.models import ModelParams, WindowCounters
from naminggame.modules.observables import (
    NO_CLUSTER,
    Recorder,
    TimeSeriesRow,
    clusters,
    language_map,
    largest_cluster_fraction,
    mean_learning,
    n_languages,
    steady_state_average,
    success_rate,
)
from tests.helpers import empty_state, put

A, B, C = 5, 6, 7


def flood_fill_sizes(languages):
    """Reference cluster sizes by recursive flood fill with periodic wrap."""
    rows, cols = languages.shape
    seen = set()

    def visit(row, col, word):
        if (row, col) in seen or languages[row, col] != word:
            return 0
        seen.add((row, col))
        return 1 + sum(visit((row + dr) % rows, (col + dc) % cols, word)
                       for dr, dc in ((-1, 0), (1, 0), (0, -1), (0, 1)))

    sizes = []
    for row in range(rows):
        for col in range(cols):
            word = languages[row, col]
            if word is not None and (row, col) not in seen:
                sizes.append(visit(row, col, word))
    return sorted(sizes, reverse=True)


def row(sweep, rate, ability):
    return TimeSeriesRow(sweep, 0.3, rate, ability, 10, 1, 1.0)


class TestSuccessRate(unittest.TestCase):
    """Test cases for the windowed success rate."""

    def test_examples(self):
        """Skipped attempts do not count; no attempts means no value."""
        self.assertEqual(success_rate(WindowCounters(successes=3, failures=1)), 0.75)
        self.assertEqual(success_rate(WindowCounters(successes=3, failures=1, skipped=5)), 0.75)
        self.assertIsNone(success_rate(WindowCounters()))
        self.assertIsNone(success_rate(WindowCounters(skipped=4)))

    def test_scale_invariance(self):
        """Scaling both counts leaves the rate unchanged."""
        for k in (1, 3, 10):
            self.assertEqual(success_rate(WindowCounters(successes=2 * k, failures=3 * k)), 0.4)


class TestMeanLearning(unittest.TestCase):
    """Test cases for the average learning ability."""

    def test_average(self):
        """Average over living agents only."""
        state = empty_state(L=3)
        put(state, 0, 0, {A: 1.0}, 0.2)
        put(state, 2, 2, {A: 1.0}, 0.8)
        self.assertAlmostEqual(mean_learning(state), 0.5)

    def test_extinct(self):
        """An empty lattice has no average."""
        self.assertIsNone(mean_learning(empty_state(L=3)))


class TestLanguageMap(unittest.TestCase):
    """Test cases for language maps."""

    def test_dominant_words(self):
        """Each site shows its occupant's heaviest word; empty or wordless sites show None."""
        state = empty_state(L=2)
        put(state, 0, 0, {A: 2.0, B: 3.0})
        put(state, 0, 1, {C: 1.0})
        put(state, 1, 0, {})
        languages = language_map(state)
        self.assertEqual(languages.shape, (2, 2))
        self.assertEqual(languages[0, 0], B)
        self.assertEqual(languages[0, 1], C)
        self.assertIsNone(languages[1, 0])
        self.assertIsNone(languages[1, 1])
        self.assertEqual(n_languages(languages), 2)


class TestClusters(unittest.TestCase):
    """Test cases for connected language clusters."""

    def test_uniform_map(self):
        """A single language is one cluster covering the lattice."""
        languages = np.full((5, 5), A, dtype=object)
        labeling = clusters(languages)
        self.assertEqual(labeling.sizes, (25,))
        self.assertTrue((labeling.labels == 0).all())
        self.assertEqual(largest_cluster_fraction(labeling, 25), 1.0)

    def test_checkerboard(self):
        """Alternating languages on a 4 x 4 torus are sixteen singletons."""
        languages = np.empty((4, 4), dtype=object)
        for r in range(4):
            for c in range(4):
                languages[r, c] = A if (r + c) % 2 == 0 else B
        labeling = clusters(languages)
        self.assertEqual(labeling.sizes, (1,) * 16)
        self.assertEqual(sorted(labeling.labels.flat), list(range(16)))

    def test_empty_map(self):
        """No languages means no clusters."""
        labeling = clusters(np.full((3, 3), None, dtype=object))
        self.assertEqual(labeling.n_clusters, 0)
        self.assertEqual(labeling.largest, 0)
        self.assertTrue((labeling.labels == NO_CLUSTER).all())
        self.assertEqual(largest_cluster_fraction(labeling, 0), 0.0)

    def test_wraps_across_edges(self):
        """Sites on opposite edges join through the periodic boundary."""
        languages = np.full((4, 4), B, dtype=object)
        languages[:, 0] = A
        languages[:, 3] = A
        labeling = clusters(languages)
        self.assertEqual(labeling.sizes, (8, 8))
        self.assertEqual(labeling.labels[0, 0], labeling.labels[0, 3])

    def test_rank_order(self):
        """Labels rank clusters by size, ties by first site in row-major order."""
        languages = np.full((3, 3), None, dtype=object)
        languages[0, 0] = A
        languages[1, 1] = B
        languages[1, 2] = B
        languages[2, 1] = C
        labeling = clusters(languages)
        self.assertEqual(labeling.sizes, (2, 1, 1))
        self.assertEqual(labeling.labels[1, 1], 0)
        self.assertEqual(labeling.labels[0, 0], 1)
        self.assertEqual(labeling.labels[2, 1], 2)

    def test_matches_flood_fill(self):
        """A thousand random 8 x 8 maps agree with a flood-fill reference."""
        rng = np.random.default_rng(21)
        choices = [A, B, C, None]
        for _ in range(1000):
            picks = rng.integers(0, len(choices), size=(8, 8))
            languages = np.empty((8, 8), dtype=object)
            for index, pick in np.ndenumerate(picks):
                languages[index] = choices[pick]
            labeling = clusters(languages)
            self.assertEqual(list(labeling.sizes), flood_fill_sizes(languages))
            occupied = sum(word is not None for word in languages.flat)
            self.assertEqual(sum(labeling.sizes), occupied)

    def test_relabel_invariance(self):
        """Renaming the languages leaves the labeling unchanged."""
        rng = np.random.default_rng(22)
        rename = {A: 900, B: 17, C: 4242, None: None}
        for _ in range(50):
            picks = rng.integers(0, 4, size=(6, 6))
            original = np.empty((6, 6), dtype=object)
            renamed = np.empty((6, 6), dtype=object)
            for index, pick in np.ndenumerate(picks):
                word = [A, B, C, None][pick]
                original[index] = word
                renamed[index] = rename[word]
            first, second = clusters(original), clusters(renamed)
            self.assertEqual(first.sizes, second.sizes)
            np.testing.assert_array_equal(first.labels, second.labels)


class TestSteadyStateAverage(unittest.TestCase):
    """Test cases for post-relaxation averages."""

    def test_constant_series(self):
        """A constant tail averages to itself."""
        series = [row(100 * k, 0.1 if k <= 3 else 0.9, 0.5) for k in range(1, 11)]
        steady = steady_state_average(series, 300)
        self.assertAlmostEqual(steady.success_rate, 0.9)
        self.assertAlmostEqual(steady.mean_learning, 0.5)

    def test_alternating_series(self):
        """Alternating values average to their midpoint."""
        series = [row(10 * k, 0.4 if k % 2 else 0.6, 0.2) for k in range(1, 21)]
        self.assertAlmostEqual(steady_state_average(series, 0).success_rate, 0.5)

    def test_absent_values_skipped(self):
        """Windows without attempts do not pull the average down."""
        series = [row(1, None, 0.5), row(2, 0.8, 0.5), row(3, None, None)]
        steady = steady_state_average(series, 0)
        self.assertAlmostEqual(steady.success_rate, 0.8)
        self.assertAlmostEqual(steady.mean_learning, 0.5)

    def test_relaxation_covers_series(self):
        """Relaxation reaching the end of the series is a configuration error."""
        series = [row(100 * k, 0.5, 0.5) for k in range(1, 4)]
        with self.assertRaises(ConfigError) as ctx:
            steady_state_average(series, 300)
        self.assertEqual(ctx.exception.key, "relax_sweeps")


class TestRecorder(unittest.TestCase):
    """Test cases for the time-series recorder."""

    def test_rows_every_window(self):
        """One row per window, counters reset after each row."""
        state = init_state(ModelParams(L=5, p=0.6), seed=3)
        recorder = Recorder(window=5, relax_sweeps=10)
        run(state, 20, observer_hooks=[recorder])
        self.assertEqual([r.sweep for r in recorder.rows], [5, 10, 15, 20])
        self.assertEqual(state.counters.communications, 0)
        for r in recorder.rows:
            self.assertEqual(r.p, 0.6)
            if r.success_rate is not None:
                self.assertTrue(0.0 <= r.success_rate <= 1.0)
            self.assertTrue(0.0 <= r.largest_cluster_fraction <= 1.0)
        self.assertIsNotNone(recorder.cumulative_success_rate())
        steady = recorder.steady_state()
        self.assertIsNotNone(steady.mean_learning)

    def test_flush_records_partial_window(self):
        """Flushing adds a row only when the last sweep was not recorded."""
        state = init_state(ModelParams(L=4, p=0.5), seed=4)
        recorder = Recorder(window=4)
        run(state, 6, observer_hooks=[recorder])
        recorder.flush(state)
        recorder.flush(state)
        self.assertEqual([r.sweep for r in recorder.rows], [4, 6])

    def test_cumulative_counts_only_after_relaxation(self):
        """Windows ending at or before relaxation stay out of the cumulative rate."""
        state = init_state(ModelParams(L=4, p=0.9), seed=5)
        recorder = Recorder(window=2, relax_sweeps=4)
        run(state, 4, observer_hooks=[recorder])
        self.assertEqual(recorder.cumulative.successes + recorder.cumulative.failures, 0)
        self.assertIsNone(recorder.cumulative_success_rate())
        self.assertGreater(recorder.turnover.population_updates, 0)

    def test_invalid_window(self):
        """A window must be positive."""
        with self.assertRaises(ValueError):
            Recorder(window=0)


if __name__ == "__main__":
    unittest.main()
