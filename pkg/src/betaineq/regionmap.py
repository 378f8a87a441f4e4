"""Sign field F(a, b, y) = sign(A - B) of two upper bounds for B(b,y)/B(a,y).

A is the M6_U bound and B the FROM317_U bound; both are compared as logs.
Grids are square lattices over a shared (a, b) axis with ``signs[i, j]``
belonging to a = axis[j], b = axis[i].  Only cells with b > a + 1e-9 carry a
sign; the rest are :data:`INVALID`.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import numpy as np

from .catalog import TIE_BAND, ClaimId, lookup
from .errors import ConfigurationError, DomainError
from .oracle import MIN_GAP, RatioParams

__all__ = [
    "INVALID",
    "PAPER_Y_VALUES",
    "Axis",
    "RegionGrid",
    "region_F",
    "compute_grid",
    "write_pgm",
    "write_csv",
    "read_csv",
    "format_number",
]

INVALID = 2
PIXEL = {1: 255, -1: 0, 0: 64, INVALID: 128}

PAPER_Y_VALUES = (1e-16, 0.2, 0.4, 0.6, 0.8, 1.0, 1.000001, 1.000005, 1.000008,
                  1.00001, 1.00003, 1.00007, 1.0002, 1.2)


@dataclass(frozen=True)
class Axis:
    """``points`` evenly spaced values from ``min`` to ``max``.

    ``floor`` (when set) replaces values below it, which lets an axis start
    at 0 the way the published figure does.
    """

    min: float
    max: float
    points: int
    floor: Optional[float] = None

    def __post_init__(self):
        if self.points < 2:
            raise ConfigurationError("an axis needs at least 2 points")
        if not self.max > self.min:
            raise ConfigurationError("axis max must exceed axis min")
        lowest = self.min if self.floor is None else max(self.min, self.floor)
        if not lowest > 0:
            raise ConfigurationError("axis values must be positive (set a floor for min <= 0)")

    @classmethod
    def paper(cls) -> "Axis":
        return cls(0.0, 500.0, 2001, floor=1e-16)

    def values(self) -> np.ndarray:
        v = np.linspace(self.min, self.max, self.points)
        if self.floor is not None:
            v = np.maximum(v, self.floor)
        return v


@dataclass
class RegionGrid:
    axis: Axis
    y: float
    signs: np.ndarray  # int8, shape (points, points)

    @property
    def values(self) -> np.ndarray:
        return self.axis.values()

    def valid_mask(self) -> np.ndarray:
        return self.signs != INVALID

    def fraction(self, sign: int) -> float:
        valid = self.valid_mask()
        n = int(valid.sum())
        return float((self.signs[valid] == sign).sum()) / n if n else float("nan")

    def cells(self, sign: Optional[int] = None):
        """(a, b, F) for valid cells in i-then-j order, optionally one sign only."""
        v = self.values
        for i, j in zip(*np.nonzero(self.valid_mask())):
            f = int(self.signs[i, j])
            if sign is None or f == sign:
                yield float(v[j]), float(v[i]), f


def _sign(diff):
    return np.where(np.abs(diff) <= TIE_BAND, 0, np.sign(diff)).astype(np.int8)


def region_F(p: RatioParams) -> int:
    """+1 where M6_U exceeds FROM317_U, -1 where it is below, 0 on a tie."""
    if not isinstance(p, RatioParams):
        raise DomainError("region_F needs RatioParams")
    upper6, upper317 = lookup(ClaimId.M6_U), lookup(ClaimId.FROM317_U)
    with np.errstate(invalid="ignore", divide="ignore"):
        diff = upper6.evaluate(p.a, p.b, p.y) - upper317.evaluate(p.a, p.b, p.y)
    return int(_sign(np.asarray(diff)))


def compute_grid(axis: Axis, y: float) -> RegionGrid:
    if not y > 0:
        raise ConfigurationError("y must be positive")
    v = axis.values()
    b, a = np.meshgrid(v, v, indexing="ij")
    valid = b > a + MIN_GAP
    signs = np.full(b.shape, INVALID, dtype=np.int8)
    av, bv = a[valid], b[valid]
    upper6, upper317 = lookup(ClaimId.M6_U), lookup(ClaimId.FROM317_U)
    with np.errstate(invalid="ignore", divide="ignore"):
        diff = upper6.evaluate(av, bv, y) - upper317.evaluate(av, bv, y)
    signs[valid] = _sign(diff)
    return RegionGrid(axis, float(y), signs)


def write_pgm(grid: RegionGrid, path) -> None:
    """Binary graymap; the first row written is the largest b."""
    h, w = grid.signs.shape
    lut = np.zeros(256, dtype=np.uint8)
    for k, px in PIXEL.items():
        lut[k & 0xFF] = px
    pixels = lut[grid.signs[::-1].astype(np.uint8)]
    with open(path, "wb") as fh:
        fh.write(f"P5\n{w} {h}\n255\n".encode("ascii"))
        fh.write(pixels.tobytes())


def format_number(v: float) -> str:
    """Shortest round-trip decimal, with integral values printed without '.0'."""
    r = repr(float(v))
    return r[:-2] if r.endswith(".0") else r


def write_csv(grid: RegionGrid, path) -> None:
    y = format_number(grid.y)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["a", "b", "y", "F"])
        for a, b, f in grid.cells():
            w.writerow([format_number(a), format_number(b), y, f])


def read_csv(path) -> list[tuple[float, float, float, int]]:
    with open(Path(path), encoding="utf-8", newline="") as fh:
        rows = list(csv.DictReader(fh))
    return [(float(r["a"]), float(r["b"]), float(r["y"]), int(r["F"])) for r in rows]
