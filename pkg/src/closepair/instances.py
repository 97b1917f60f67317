"""Deterministic instance generation and point-set file I/O.

Random draws come from MT19937 (the Mersenne Twister behind CPython's
``random.Random``), seeded with the GenSpec's 64-bit seed. Uniform
coordinates are ``Random.random()`` doubles mapped affinely into the
target box; normal offsets use an explicit Box-Muller transform over two
``random()`` draws, so the full stream is pinned by generator name plus
the formulas below and never depends on library distribution internals.

File format: plain text, one ``x y`` pair per line separated by a single
space, ``#`` comment lines and blank lines ignored, point id = data line
order. Coordinates serialize via ``repr``, the shortest decimal that
round-trips the exact binary64 value.
"""

from __future__ import annotations

import math
import random
import sys
from dataclasses import dataclass
from typing import IO, Union

from .solver import PointSet

__all__ = [
    "UniformUnitSquare",
    "UniformBox",
    "Clustered",
    "GenSpec",
    "generate",
    "parse_distribution",
    "read_points",
    "write_points",
    "PointFileError",
]

_MAX_SEED = 2**64


@dataclass(frozen=True)
class UniformUnitSquare:
    """Independent uniform coordinates in [0, 1) x [0, 1)."""


@dataclass(frozen=True)
class UniformBox:
    """Independent uniform coordinates in [xmin, xmax) x [ymin, ymax)."""

    xmin: float
    xmax: float
    ymin: float
    ymax: float

    def __post_init__(self) -> None:
        for v in (self.xmin, self.xmax, self.ymin, self.ymax):
            if not math.isfinite(v):
                raise ValueError("box bounds must be finite")
        if not (self.xmin < self.xmax and self.ymin < self.ymax):
            raise ValueError("box bounds must satisfy xmin < xmax and ymin < ymax")


@dataclass(frozen=True)
class Clustered:
    """k cluster centers uniform in the unit square, points assigned
    round-robin, isotropic normal offsets with standard deviation sigma.

    Stresses the slab with many near-ties, a case uniform data underweights.
    """

    k: int
    sigma: float

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"cluster count must be >= 1, got {self.k}")
        if not (self.sigma > 0 and math.isfinite(self.sigma)):
            raise ValueError(f"cluster sigma must be positive, got {self.sigma}")


Distribution = Union[UniformUnitSquare, UniformBox, Clustered]


@dataclass(frozen=True)
class GenSpec:
    """A reproducible instance: size, 64-bit seed, and distribution."""

    n: int
    seed: int
    distribution: Distribution = UniformUnitSquare()

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"instance size must be >= 2, got {self.n}")
        if not (0 <= self.seed < _MAX_SEED):
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed}")


def _gauss_pair(rng: random.Random) -> tuple[float, float]:
    # Box-Muller: z0 = sqrt(-2 ln u1) cos(2 pi u2), z1 = ... sin(2 pi u2).
    u1 = rng.random()
    while u1 <= 0.0:
        u1 = rng.random()
    u2 = rng.random()
    r = math.sqrt(-2.0 * math.log(u1))
    return r * math.cos(2.0 * math.pi * u2), r * math.sin(2.0 * math.pi * u2)


def generate(spec: GenSpec) -> PointSet:
    """Generate a point set; the same spec always yields the same set."""
    rng = random.Random(spec.seed)
    dist = spec.distribution
    coords: list[tuple[float, float]] = []
    if isinstance(dist, UniformUnitSquare):
        for _ in range(spec.n):
            coords.append((rng.random(), rng.random()))
    elif isinstance(dist, UniformBox):
        wx = dist.xmax - dist.xmin
        wy = dist.ymax - dist.ymin
        for _ in range(spec.n):
            coords.append((dist.xmin + wx * rng.random(), dist.ymin + wy * rng.random()))
    elif isinstance(dist, Clustered):
        centers = [(rng.random(), rng.random()) for _ in range(dist.k)]
        for i in range(spec.n):
            cx, cy = centers[i % dist.k]
            gx, gy = _gauss_pair(rng)
            coords.append((cx + dist.sigma * gx, cy + dist.sigma * gy))
    else:
        raise ValueError(f"unknown distribution: {dist!r}")
    return PointSet(coords)


def parse_distribution(text: str) -> Distribution:
    """Parse a distribution flag: ``unit``, ``box:XMIN,XMAX,YMIN,YMAX``
    or ``clustered:K,SIGMA``."""
    s = text.strip()
    if s == "unit":
        return UniformUnitSquare()
    if s.startswith("box:"):
        parts = s[len("box:") :].split(",")
        if len(parts) != 4:
            raise ValueError(f"box distribution needs 4 bounds, got {text!r}")
        xmin, xmax, ymin, ymax = (float(v) for v in parts)
        return UniformBox(xmin, xmax, ymin, ymax)
    if s.startswith("clustered:"):
        parts = s[len("clustered:") :].split(",")
        if len(parts) != 2:
            raise ValueError(f"clustered distribution needs k,sigma, got {text!r}")
        return Clustered(int(parts[0]), float(parts[1]))
    raise ValueError(f"unknown distribution: {text!r}")


class PointFileError(ValueError):
    """A point file could not be parsed; the message names the line."""


def _parse_stream(stream: IO[str], name: str) -> PointSet:
    coords: list[tuple[float, float]] = []
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise PointFileError(
                f"{name}:{lineno}: expected 'x y', got {raw.rstrip()!r}"
            )
        try:
            x = float(parts[0])
            y = float(parts[1])
        except ValueError:
            raise PointFileError(
                f"{name}:{lineno}: not a number in {raw.rstrip()!r}"
            ) from None
        if not (math.isfinite(x) and math.isfinite(y)):
            raise PointFileError(f"{name}:{lineno}: non-finite coordinate")
        coords.append((x, y))
    if len(coords) < 2:
        raise PointFileError(
            f"{name}: point set too small (need at least 2 points, got {len(coords)})"
        )
    return PointSet(coords)


def read_points(path: str) -> PointSet:
    """Read a point set from a file, or from standard input when path is '-'."""
    if path == "-":
        return _parse_stream(sys.stdin, "<stdin>")
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return _parse_stream(fh, path)
    except OSError as exc:
        raise PointFileError(f"{path}: {exc.strerror or exc}") from exc


def write_points(ps: PointSet, path: str) -> None:
    """Write a point set, one 'x y' line per point, or to stdout when path is '-'."""
    if path == "-":
        _write_stream(ps, sys.stdout)
        return
    with open(path, "w", encoding="utf-8") as fh:
        _write_stream(ps, fh)


def _write_stream(ps: PointSet, fh: IO[str]) -> None:
    xs = ps.xs
    ys = ps.ys
    for i in range(len(xs)):
        fh.write(f"{xs[i]!r} {ys[i]!r}\n")
