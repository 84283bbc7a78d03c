"""Frequency-domain Gaussian filtering and hybrid-image composition.

Filtering multiplies the full-size DFT of the image with a gain grid, so
the result keeps the original pixel dimensions and no new stop-band
content is introduced by windowing or padding.

Spatial-frequency units are cycles per image (c/im): the DFT bin with
index k along an axis of N samples carries exactly k cycles across that
axis.  Filter specs carry a single vertical sigma; the horizontal sigma is
derived from the grid aspect ratio (sigma_x = sigma_y * n_x / n_y) so the
filter's spatial-domain footprint is the same number of pixels in both
dimensions.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .images import GrayImage, require_same_shape

LOWPASS = "lowpass"
HIGHPASS = "highpass"


@dataclass(frozen=True)
class GaussianFilterSpec:
    """Gaussian gain surface over the frequency plane.

    kind: "lowpass" for exp(-fx^2/(2 sx^2) - fy^2/(2 sy^2)); "highpass"
    for its complement 1 - lowpass.  sigma_y is in cycles per image.
    """

    kind: str
    sigma_y: float

    def __post_init__(self):
        if self.kind not in (LOWPASS, HIGHPASS):
            raise DomainError(f"unknown filter kind: {self.kind!r}")
        if not self.sigma_y > 0:
            raise DomainError(f"sigma_y must be positive, got {self.sigma_y}")

    def sigma_x(self, grid_width: int, grid_height: int) -> float:
        """Horizontal sigma for a (grid_width x grid_height) pixel grid."""
        if grid_width <= 0 or grid_height <= 0:
            raise DomainError("grid dimensions must be positive")
        return self.sigma_y * grid_width / grid_height


def cycle_coordinates(n: int) -> np.ndarray:
    """Signed cycle counts of the DFT bins along an axis of n samples."""
    return np.fft.fftfreq(n, d=1.0 / n)


def gaussian_gain(spec: GaussianFilterSpec, f_x, f_y,
                  grid_width: int, grid_height: int):
    """Filter gain at cycle coordinates (f_x, f_y); accepts arrays."""
    sx = spec.sigma_x(grid_width, grid_height)
    sy = spec.sigma_y
    f_x = np.asarray(f_x, dtype=np.float64)
    f_y = np.asarray(f_y, dtype=np.float64)
    low = np.exp(-(f_x ** 2) / (2 * sx ** 2) - (f_y ** 2) / (2 * sy ** 2))
    return low if spec.kind == LOWPASS else 1.0 - low


def filter_gain_grid(spec: GaussianFilterSpec, width: int, height: int) -> np.ndarray:
    """Gain of every DFT bin for a width x height image, fft layout."""
    fx = cycle_coordinates(width)[np.newaxis, :]
    fy = cycle_coordinates(height)[:, np.newaxis]
    return np.asarray(gaussian_gain(spec, fx, fy, width, height))


def apply_filter(image: GrayImage, spec: GaussianFilterSpec) -> GrayImage:
    """Filter an image in the frequency domain; output is real, same size.

    The gain grid is even in both frequency axes, so Hermitian symmetry of
    the spectrum is preserved and the inverse transform is real up to
    rounding noise (which is discarded).
    """
    gains = filter_gain_grid(spec, image.width, image.height)
    spectrum = np.fft.fft2(image.pixels)
    return GrayImage(np.fft.ifft2(spectrum * gains).real)


@dataclass(frozen=True)
class HybridImage:
    """A composed hybrid and the two components it is the sum of."""

    composed: GrayImage
    user_high: GrayImage
    surfer_low: GrayImage
    sigma_lf: float
    sigma_hf: float

    def __post_init__(self):
        require_same_shape(self.composed, self.user_high)
        require_same_shape(self.composed, self.surfer_low)
        residue = np.max(np.abs(
            self.composed.pixels - (self.user_high.pixels + self.surfer_low.pixels)))
        if residue > 1e-6:
            raise DomainError(f"composed != user_high + surfer_low (residue {residue:g})")


def compose_hybrid(user_img: GrayImage, surfer_img: GrayImage,
                   sigma_lf: float, sigma_hf: float) -> HybridImage:
    """High-pass the user image, low-pass the surfer image, and add them.

    The sum is kept unclamped; clamping to [0, 1] happens at PNG export.
    """
    require_same_shape(user_img, surfer_img)
    user_high = apply_filter(user_img, GaussianFilterSpec(HIGHPASS, sigma_hf))
    surfer_low = apply_filter(surfer_img, GaussianFilterSpec(LOWPASS, sigma_lf))
    composed = GrayImage(user_high.pixels + surfer_low.pixels)
    return HybridImage(composed=composed, user_high=user_high,
                       surfer_low=surfer_low,
                       sigma_lf=float(sigma_lf), sigma_hf=float(sigma_hf))


def spectrum_profile(image: GrayImage) -> tuple[np.ndarray, np.ndarray]:
    """1D spectrum: summed log-magnitude per discrete frequency magnitude.

    Each DFT bin contributes ln(1 + |X(f)|) to the bucket of its rounded
    cycle-magnitude |f| = hypot(f_x, f_y).  Returns (magnitudes, totals)
    covering DC through the largest magnitude on the grid.
    """
    spectrum = np.fft.fft2(image.pixels)
    fx = cycle_coordinates(image.width)[np.newaxis, :]
    fy = cycle_coordinates(image.height)[:, np.newaxis]
    mag = np.hypot(*np.broadcast_arrays(fx, fy))
    buckets = np.round(mag).astype(np.int64).ravel()
    contrib = np.log1p(np.abs(spectrum)).ravel()
    totals = np.bincount(buckets, weights=contrib)
    return np.arange(totals.size, dtype=np.float64), totals


def write_spectrum_csv(image: GrayImage, path) -> None:
    magnitudes, totals = spectrum_profile(image)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["magnitude_c_per_im", "log_power"])
        for m, t in zip(magnitudes, totals):
            writer.writerow([f"{m:.0f}", repr(float(t))])
