"""Grayscale raster type with 8-bit PNG import/export.

Pixels are stored as float64 in row-major (height, width) order.  Values
are nominally in [0, 1] but intermediate results (e.g. high-pass residues,
hybrid sums) may leave that range; clamping happens only on export so that
image arithmetic stays linear.
"""

from __future__ import annotations

import os
import tempfile
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from PIL import Image

from .errors import DomainError


@dataclass(frozen=True)
class GrayImage:
    """A grayscale image; ``pixels`` has shape (height, width), float64."""

    pixels: np.ndarray

    def __post_init__(self):
        px = np.asarray(self.pixels, dtype=np.float64)
        if px.ndim != 2 or px.size == 0:
            raise DomainError(f"expected a non-empty 2D pixel grid, got shape {px.shape}")
        if not np.all(np.isfinite(px)):
            raise DomainError("pixel values must be finite")
        object.__setattr__(self, "pixels", px)

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def shape(self) -> tuple[int, int]:
        return self.pixels.shape

    def clamped(self) -> "GrayImage":
        return GrayImage(np.clip(self.pixels, 0.0, 1.0))

    def to_uint8(self) -> np.ndarray:
        """Export samples: clamp to [0,1] and quantize linearly to 0..255."""
        return np.round(np.clip(self.pixels, 0.0, 1.0) * 255.0).astype(np.uint8)

    @classmethod
    def constant(cls, width: int, height: int, value: float = 0.0) -> "GrayImage":
        return cls(np.full((height, width), float(value)))

    @classmethod
    def from_uint8(cls, raw: np.ndarray) -> "GrayImage":
        return cls(np.asarray(raw, dtype=np.float64) / 255.0)

    @classmethod
    def load_png(cls, path) -> "GrayImage":
        with Image.open(path) as im:
            return cls.from_uint8(np.asarray(im.convert("L")))

    def save_png(self, path) -> None:
        """Write an 8-bit grayscale PNG atomically (temp file + rename)."""
        path = Path(path)
        im = Image.fromarray(self.to_uint8(), mode="L")
        fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".png.tmp")
        try:
            with os.fdopen(fd, "wb") as fh:
                im.save(fh, format="PNG")
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise


def require_same_shape(a: GrayImage, b: GrayImage) -> None:
    if a.shape != b.shape:
        raise DomainError(f"image dimensions differ: {a.shape} vs {b.shape}")
