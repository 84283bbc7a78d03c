"""Built-in stroke font for the ten digits.

Each glyph is a set of strokes in a unit box (x right, y down).  Strokes
are polylines; curved parts are dense polyline samples of ellipse arcs.
Rendering rasterizes at 4x and downsamples, which both antialiases and
keeps the output deterministic (no font files, no platform text stack).
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np
from PIL import Image, ImageDraw

_SUPERSAMPLE = 4


def _arc(cx, cy, rx, ry, a0_deg, a1_deg, n=40):
    """Polyline along an ellipse arc; 90 degrees points to the top of the box."""
    pts = []
    for i in range(n + 1):
        a = math.radians(a0_deg + (a1_deg - a0_deg) * i / n)
        pts.append((cx + rx * math.cos(a), cy - ry * math.sin(a)))
    return pts


# fmt: off
_STROKES: dict[int, list[list[tuple[float, float]]]] = {
    0: [_arc(0.50, 0.50, 0.285, 0.400, 90, 450)],
    1: [[(0.30, 0.27), (0.54, 0.10), (0.54, 0.90)]],
    2: [_arc(0.50, 0.305, 0.275, 0.215, 160, 10)
        + [(0.25, 0.90), (0.78, 0.90)]],
    3: [_arc(0.47, 0.295, 0.265, 0.210, 150, -65),
        _arc(0.47, 0.690, 0.290, 0.225, 65, -150)],
    4: [[(0.64, 0.10), (0.64, 0.90)],
        [(0.64, 0.10), (0.20, 0.625), (0.86, 0.625)]],
    5: [[(0.75, 0.10), (0.29, 0.10), (0.265, 0.435)]
        + _arc(0.47, 0.655, 0.285, 0.250, 112, -112),
        ],
    6: [[(0.69, 0.10), (0.52, 0.23), (0.385, 0.41), (0.300, 0.585), (0.278, 0.675)],
        _arc(0.50, 0.670, 0.225, 0.230, 90, 450)],
    7: [[(0.23, 0.10), (0.79, 0.10), (0.44, 0.90)]],
    8: [_arc(0.50, 0.300, 0.235, 0.205, 90, 450),
        _arc(0.50, 0.705, 0.270, 0.210, 90, 450)],
    9: [_arc(0.50, 0.330, 0.225, 0.230, 90, 450),
        [(0.722, 0.325), (0.700, 0.500), (0.615, 0.700), (0.480, 0.845), (0.310, 0.90)]],
}
# fmt: on

DIGITS = tuple(range(10))


@lru_cache(maxsize=256)
def glyph_tile(digit: int, width: int, height: int, stroke_px: float,
               fg_level: int, bg_level: int) -> np.ndarray:
    """Rasterize one digit into a (height, width) uint8 tile.

    stroke_px is the stroke width in output pixels; fg/bg are 0..255 ink
    and background levels.  Cached: tiles are reused across buttons.
    """
    if digit not in _STROKES:
        raise KeyError(f"no glyph for digit {digit}")
    ss = _SUPERSAMPLE
    w, h = width * ss, height * ss
    img = Image.new("L", (w, h), color=bg_level)
    draw = ImageDraw.Draw(img)
    lw = max(1, round(stroke_px * ss))
    for stroke in _STROKES[digit]:
        pts = [(x * (w - 1), y * (h - 1)) for x, y in stroke]
        draw.line(pts, fill=fg_level, width=lw, joint="curve")
        for end in (pts[0], pts[-1]):  # round caps
            draw.ellipse([end[0] - lw / 2, end[1] - lw / 2,
                          end[0] + lw / 2, end[1] + lw / 2], fill=fg_level)
    img = img.resize((width, height), Image.LANCZOS)
    out = np.asarray(img, dtype=np.uint8)
    out.setflags(write=False)
    return out
