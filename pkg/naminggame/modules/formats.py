#!/usr/bin/env python3
"""
Result file formats: time-series and summary CSV tables, PGM lattice snapshots.

CSV reals carry 6 decimals, absent values are empty fields, and rows end with a
single line feed. Snapshots are plain (P2) grayscale images.
"""
import csv
import io
import os
from typing import Iterable, List, Optional, Sequence

import numpy as np

from ..io_utils import InputOutput, PathLike, default_io
from .lattice import SimState
from .observables import NO_CLUSTER, ClusterLabeling, TimeSeriesRow, clusters, language_map

CSV_HEADER = (
    "sweep", "p", "success_rate", "mean_learning",
    "population", "n_languages", "largest_cluster_fraction",
)
SUMMARY_HEADER = (
    "p", "replica", "status", "extinct_sweep", "success_rate",
    "mean_learning", "cumulative_success_rate", "population",
)

PGM_MAXVAL = 255
EMPTY_SHADE = 255
SHADE_RANGE = 220


def format_real(value: Optional[float]) -> str:
    return "" if value is None else f"{value:.6f}"


def format_int(value: Optional[int]) -> str:
    return "" if value is None else str(value)


def _parse_real(field: str) -> Optional[float]:
    return float(field) if field else None


def _table(header: Sequence[str], records: Iterable[Sequence[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(records)
    return buffer.getvalue()


def render_csv(rows: Iterable[TimeSeriesRow]) -> str:
    """Render time-series rows as CSV text."""
    return _table(CSV_HEADER, (
        (
            str(row.sweep),
            format_real(row.p),
            format_real(row.success_rate),
            format_real(row.mean_learning),
            str(row.population),
            str(row.n_languages),
            format_real(row.largest_cluster_fraction),
        )
        for row in rows
    ))


def write_csv(rows: Iterable[TimeSeriesRow], destination: PathLike,
              io_handler: Optional[InputOutput] = None):
    """Write a time-series table; OutputError carries the path on failure."""
    (io_handler or default_io).write_text(destination, render_csv(rows))


def parse_csv(text: str) -> List[TimeSeriesRow]:
    """Parse time-series CSV text back into rows."""
    reader = csv.reader(io.StringIO(text, newline=""))
    header = next(reader, None)
    if header is None or tuple(header) != CSV_HEADER:
        raise ValueError(f"unexpected time-series header: {header}")
    rows = []
    for fields in reader:
        sweep, p, rate, ability, population, languages, fraction = fields
        rows.append(TimeSeriesRow(
            sweep=int(sweep),
            p=float(p),
            success_rate=_parse_real(rate),
            mean_learning=_parse_real(ability),
            population=int(population),
            n_languages=int(languages),
            largest_cluster_fraction=float(fraction),
        ))
    return rows


def read_csv(source: PathLike) -> List[TimeSeriesRow]:
    """Read a time-series table written by write_csv."""
    with open(source, "r", encoding="utf-8", newline="") as f:
        return parse_csv(f.read())


def render_summary(rows: Iterable) -> str:
    """Render steady-state summary rows (one per run) as CSV text."""
    return _table(SUMMARY_HEADER, (
        (
            format_real(row.p),
            str(row.replica),
            row.status.value,
            format_int(row.extinct_sweep),
            format_real(row.success_rate),
            format_real(row.mean_learning),
            format_real(row.cumulative_success_rate),
            str(row.population),
        )
        for row in rows
    ))


def write_summary(rows: Iterable, destination: PathLike,
                  io_handler: Optional[InputOutput] = None):
    (io_handler or default_io).write_text(destination, render_summary(rows))


def shade_image(labeling: ClusterLabeling) -> np.ndarray:
    """
    Grey level per site: cluster of rank r among R gets floor(220*r/R), so the
    largest cluster is black; sites without a language are white.
    """
    shades = (SHADE_RANGE * np.arange(labeling.n_clusters, dtype=np.int64)) // max(
        labeling.n_clusters, 1
    )
    labels = labeling.labels
    image = np.full(labels.shape, EMPTY_SHADE, dtype=np.int64)
    mask = labels != NO_CLUSTER
    image[mask] = shades[labels[mask]]
    return image


def render_pgm(image: np.ndarray) -> str:
    height, width = image.shape
    lines = [f"P2\n{width} {height}\n{PGM_MAXVAL}"]
    lines.extend(" ".join(str(value) for value in row) for row in image.tolist())
    return "\n".join(lines) + "\n"


def write_snapshot(languages: np.ndarray, labeling: ClusterLabeling, destination: PathLike,
                   io_handler: Optional[InputOutput] = None):
    """Write a grayscale PGM of the language clusters of a language map."""
    if languages.shape != labeling.labels.shape:
        raise ValueError(
            f"labeling shape {labeling.labels.shape} does not match map {languages.shape}"
        )
    present = np.array([word is not None for word in languages.flat]).reshape(languages.shape)
    if not np.array_equal(present, labeling.labels != NO_CLUSTER):
        raise ValueError("labeling is not consistent with the language map")
    (io_handler or default_io).write_text(destination, render_pgm(shade_image(labeling)))


class SnapshotWriter:
    """Observer hook writing ``snapshot_<sweep>.pgm`` every ``every`` sweeps."""

    def __init__(self, out_dir: PathLike, every: int, io_handler: Optional[InputOutput] = None):
        if every < 1:
            raise ValueError(f"snapshot interval must be positive, got {every}")
        self.out_dir = out_dir
        self.every = every
        self.io = io_handler or default_io
        self.paths: List[str] = []

    def __call__(self, state: SimState):
        if state.sweep % self.every == 0:
            self.write(state)

    def write(self, state: SimState) -> str:
        languages = language_map(state)
        path = os.path.join(self.out_dir, f"snapshot_{state.sweep:07d}.pgm")
        write_snapshot(languages, clusters(languages), path, self.io)
        self.paths.append(path)
        return path
