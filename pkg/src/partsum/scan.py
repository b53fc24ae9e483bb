"""Grid scans of the Katz parameter plane for a fixed support size.

Each grid point is classified and written as one CSV row::

    alpha,beta,S,class,k,p,note

``k`` and ``p`` are empty unless the class is ``binomial``; ``note`` is
``sec5-special-case`` on the diagonal alpha == beta. Points are visited
row-major in alpha, then beta. Numbers use 15 significant digits so the
output is byte-stable.
"""

from __future__ import annotations

import csv
import logging
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidParams
from .katz import Classification, KatzParams, Kind, classify

log = logging.getLogger(__name__)

HEADER = ["alpha", "beta", "S", "class", "k", "p", "note"]


def fmt(x) -> str:
    """15-significant-digit, locale-free number formatting."""
    s = f"{float(x):.15g}"
    return "0" if s == "-0" else s


def parse_range(text: str) -> tuple[Fraction, Fraction, Fraction]:
    """Parse ``START:STOP:STEP`` into exact rationals."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"expected START:STOP:STEP, got {text!r}")
    try:
        start, stop, step = (Fraction(p.strip()) for p in parts)
    except ValueError:
        raise ValueError(f"expected three decimal numbers START:STOP:STEP, got {text!r}") from None
    if step <= 0:
        raise ValueError(f"STEP must be positive in {text!r}")
    return start, stop, step


def grid(start, stop, step) -> list:
    """Points ``start + i*step`` up to ``stop``; exact for rationals."""
    if step <= 0:
        raise ValueError("step must be positive")
    if start > stop:
        return []
    exact = all(isinstance(x, (int, Fraction)) for x in (start, stop, step))
    slack = 0 if exact else 1e-9 * step
    out = []
    i = 0
    while True:
        x = start + i * step
        if x > stop + slack:
            return out
        out.append(x)
        i += 1


@dataclass(frozen=True)
class ScanConfig:
    alpha_range: tuple
    beta_range: tuple
    S: int
    output_path: str = ""

    def __post_init__(self):
        if self.S < 2:
            raise ValueError(f"S must be at least 2, got {self.S}")
        for name, rng in (("alpha", self.alpha_range), ("beta", self.beta_range)):
            if len(rng) != 3 or rng[2] <= 0:
                raise ValueError(f"{name} range must be (start, stop, step) with step > 0")

    def points(self):
        """Valid (alpha, beta) grid points; alpha is clipped to >= 0, beta to < 1."""
        alphas = [a for a in grid(*self.alpha_range) if a >= 0]
        betas = grid(*self.beta_range)
        for a in alphas:
            for b in betas:
                yield a, b


def classify_rows(config: ScanConfig):
    """Yield ``(alpha, beta, Classification)`` in grid order, skipping invalid points."""
    for a, b in config.points():
        try:
            params = KatzParams(a, b)
        except InvalidParams as exc:
            log.warning("skipping alpha=%s beta=%s: %s", fmt(a), fmt(b), exc)
            continue
        yield a, b, classify(params, config.S)


def format_row(alpha, beta, cls: Classification) -> list[str]:
    binom = cls.kind is Kind.BINOMIAL
    return [
        fmt(alpha),
        fmt(beta),
        str(cls.S),
        cls.kind.value,
        str(cls.k) if binom else "",
        fmt(cls.p) if binom else "",
        cls.note,
    ]


def scan(config: ScanConfig, path=None) -> int:
    """Write the scan CSV to ``path`` (default ``config.output_path``); return the row count."""
    path = path or config.output_path
    n = 0
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(HEADER)
        for a, b, cls in classify_rows(config):
            w.writerow(format_row(a, b, cls))
            n += 1
    return n


def read_scan(path) -> list[tuple[float, float, Classification]]:
    """Parse a scan CSV back into ``(alpha, beta, Classification)`` triples.

    Only ``kind``, ``S``, ``k``, ``p`` and ``note`` survive the round trip.
    """
    out = []
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != HEADER:
            raise ValueError(f"{path}: unexpected header {reader.fieldnames}")
        for row in reader:
            cls = Classification(
                Kind(row["class"]),
                int(row["S"]),
                k=int(row["k"]) if row["k"] else None,
                p=float(row["p"]) if row["p"] else None,
                note=row["note"],
            )
            out.append((float(row["alpha"]), float(row["beta"]), cls))
    return out
