"""Reading and writing distributions, g tables and iteration traces.

Distributions are stored as a one-column CSV with header ``p`` (a JSON
array of numbers is accepted on input); g tables use header ``g``.
Values are written with ``repr`` so they round-trip exactly.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np

from .distribution import FiniteDistribution
from .summation import GTable, IterationTrace


def _read_column(path, header: str) -> np.ndarray:
    path = Path(path)
    text = path.read_text()
    if path.suffix.lower() == ".json" or text.lstrip().startswith("["):
        data = json.loads(text)
        if not isinstance(data, list) or not all(isinstance(x, (int, float)) for x in data):
            raise ValueError(f"{path}: expected a JSON array of numbers")
        return np.array(data, dtype=np.float64)
    rows = [r for r in csv.reader(text.splitlines()) if r]
    if not rows or [c.strip() for c in rows[0]] != [header]:
        raise ValueError(f"{path}: expected a single-column CSV with header {header!r}")
    try:
        return np.array([float(r[0]) for r in rows[1:]], dtype=np.float64)
    except (ValueError, IndexError) as exc:
        raise ValueError(f"{path}: malformed value ({exc})") from None


def _write_column(path, header: str, values) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow([header])
        for x in values:
            w.writerow([repr(float(x))])


def read_distribution(path) -> FiniteDistribution:
    return FiniteDistribution(_read_column(path, "p"))


def write_distribution(dist: FiniteDistribution, path) -> None:
    _write_column(path, "p", dist.probs)


def read_gtable(path) -> GTable:
    return GTable(_read_column(path, "g"))


def write_gtable(g: GTable, path) -> None:
    _write_column(path, "g", g.values)


def write_trace(trace: IterationTrace, path) -> None:
    """One row per step: ``step,step_distance,rayleigh``."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["step", "step_distance", "rayleigh"])
        for n, (d, r) in enumerate(zip(trace.step_distance, trace.rayleigh), start=1):
            w.writerow([n, f"{d:.15g}", f"{r:.15g}"])
