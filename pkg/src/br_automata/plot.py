"""Space-time plots: one row per time step, one cell per vertex, time downward."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .simulator import Trajectory

LIGHT_GRAY, DARK_GRAY, WHITE = 192, 96, 255


@dataclass(frozen=True)
class Palette:
    """Gray level (0-255) for each strategy."""

    levels: Mapping[int, int]

    def __post_init__(self):
        if len(set(self.levels.values())) != len(self.levels):
            raise ValueError("palette must give distinct strategies distinct grays")
        if any(not 0 <= g <= 255 for g in self.levels.values()):
            raise ValueError("gray levels must lie in 0..255")

    @classmethod
    def default(cls, k: int) -> "Palette":
        if k == 1:
            return cls({1: LIGHT_GRAY})
        if k == 2:
            return cls({1: LIGHT_GRAY, 2: DARK_GRAY})
        if k == 3:
            return cls({1: DARK_GRAY, 2: WHITE, 3: LIGHT_GRAY})
        return cls({s: round(255 * (s - 1) / (k - 1)) for s in range(1, k + 1)})

    def __getitem__(self, s: int) -> int:
        return self.levels[s]


def _rows(T) -> Sequence[Sequence[int]]:
    configs = T.configs if isinstance(T, Trajectory) else T
    if not configs or not configs[0]:
        raise ValueError("cannot render an empty trajectory")
    return configs


def render_pgm(T, palette: Palette, scale: int = 1) -> bytes:
    """Binary P5 image with a ``scale x scale`` block per cell."""
    rows = _rows(T)
    width, height = len(rows[0]) * scale, len(rows) * scale
    out = bytearray(f"P5 {width} {height} 255\n".encode("ascii"))
    for row in rows:
        line = bytes(palette[s] for s in row for _ in range(scale))
        out += line * scale
    return bytes(out)


def render_svg(T, palette: Palette, scale: int = 10) -> bytes:
    rows = _rows(T)
    width, height = len(rows[0]) * scale, len(rows) * scale
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>\n',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" shape-rendering="crispEdges">\n',
    ]
    for t, row in enumerate(rows):
        for x, s in enumerate(row):
            g = palette[s]
            parts.append(
                f'<rect x="{x * scale}" y="{t * scale}" width="{scale}" height="{scale}" '
                f'fill="#{g:02x}{g:02x}{g:02x}"/>\n'
            )
    parts.append("</svg>\n")
    return "".join(parts).encode("utf-8")


def render_spacetime(T, palette: Palette, format: str = "pgm", scale: int | None = None) -> bytes:
    if format == "pgm":
        return render_pgm(T, palette, scale or 1)
    if format == "svg":
        return render_svg(T, palette, scale or 10)
    raise ValueError(f"unknown plot format {format!r}")
