"""Quantitative-value-to-color mappings and min-max normalization.

Three maps are offered: a white-to-blue sequential ramp, a diverging
blue-white-red map for spotting values near either extreme, and a jet-style
rainbow that gives nearby values visibly different hues.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Sequence

RGB = tuple[int, int, int]


class UnknownColormap(ValueError):
    pass


class EmptyInput(ValueError):
    pass


class OutOfRange(ValueError):
    pass


@dataclass(frozen=True)
class Colormap:
    """Piecewise-linear RGB map over [0, 1] defined by control points."""

    name: str
    control_points: tuple[tuple[float, RGB], ...]

    def __post_init__(self) -> None:
        ts = [t for t, _ in self.control_points]
        if len(ts) < 2 or ts[0] != 0.0 or ts[-1] != 1.0 or any(
            a >= b for a, b in zip(ts, ts[1:])
        ):
            raise ValueError(f"invalid control points for colormap {self.name!r}")


SEQUENTIAL_BLUE = Colormap(
    "sequential_blue",
    ((0.0, (255, 255, 255)), (1.0, (8, 48, 107))),
)

COOLWARM = Colormap(
    "coolwarm",
    ((0.0, (59, 76, 192)), (0.5, (241, 241, 241)), (1.0, (180, 4, 38))),
)

JET = Colormap(
    "jet",
    (
        (0.0, (0, 0, 128)),
        (0.125, (0, 0, 255)),
        (0.375, (0, 255, 255)),
        (0.625, (255, 255, 0)),
        (0.875, (255, 0, 0)),
        (1.0, (128, 0, 0)),
    ),
)

_REGISTRY = {cmap.name: cmap for cmap in (SEQUENTIAL_BLUE, COOLWARM, JET)}


def list_colormaps() -> list[str]:
    return list(_REGISTRY)


def get_colormap(name: str | Colormap) -> Colormap:
    if isinstance(name, Colormap):
        return name
    try:
        return _REGISTRY[name]
    except KeyError:
        raise UnknownColormap(
            f"unknown colormap {name!r}; available: {', '.join(_REGISTRY)}"
        ) from None


def normalize(values: Sequence[float]) -> list[float]:
    """Min-max rescale to [0, 1]; a constant sequence maps to all 0.5."""
    if len(values) == 0:
        raise EmptyInput("cannot normalize an empty sequence")
    lo = min(values)
    hi = max(values)
    if hi == lo:
        return [0.5] * len(values)
    span = hi - lo
    return [(v - lo) / span for v in values]


def sample(cmap: Colormap, t: float) -> RGB:
    """Sample the map at t in [0, 1], rounding each channel half-up."""
    if not 0.0 <= t <= 1.0:
        raise OutOfRange(f"t={t} outside [0, 1]")
    points = cmap.control_points
    ts = [p[0] for p in points]
    i = bisect_right(ts, t) - 1
    t0, c0 = points[i]
    if t == t0:
        return c0
    t1, c1 = points[i + 1]
    u = (t - t0) / (t1 - t0)
    return tuple(int(a + (b - a) * u + 0.5) for a, b in zip(c0, c1))  # type: ignore[return-value]


def to_hex(rgb: RGB) -> str:
    """Serialize as lowercase #rrggbb."""
    r, g, b = rgb
    return f"#{r:02x}{g:02x}{b:02x}"
