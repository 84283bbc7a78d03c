"""Visual-angle geometry for an observer in front of a flat display.

The eye (or camera) is modeled as an ideal pinhole at position
``N = (x0, y0, z0)`` in inches, with the coordinate origin at the display
center and the display lying in the z=0 plane (observer side is z > 0).

Spherical convention
--------------------
The polar angle ``theta`` is measured from the +y axis (so a head-on
observer has theta = pi/2) and the azimuth ``phi`` is measured inside the
zx plane from the +z axis toward +x:

    x0 = r * sin(theta) * sin(phi)
    y0 = r * cos(theta)
    z0 = r * sin(theta) * cos(phi)

This is the unique assignment under which the horizontal angle depends on
the azimuth through ``sin(theta) sin(phi)`` (the x offset) and the vertical
angle on the polar angle through ``cos(theta)`` (the y offset), which is
how the two closed spherical forms below factor.  With z0 > 0 the angles
are confined to theta in (0, pi) and phi in (-pi/2, +pi/2).

All lengths are inches; all angles are radians unless a function says
otherwise.  Perceived spatial frequency is returned in cycles per degree
so that psychophysical cutoff values quoted in c/d apply directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

# Pixel/physical display sizes may disagree by up to this much (inches)
# before the profile is considered inconsistent.
DISPLAY_CONSISTENCY_TOL_IN = 0.05


@dataclass(frozen=True)
class ViewingPosition:
    """Observer location in inches, Cartesian storage with spherical accessors."""

    x0: float
    y0: float
    z0: float

    def __post_init__(self):
        if not all(map(math.isfinite, (self.x0, self.y0, self.z0))):
            raise DomainError("viewing position must be finite")
        if self.z0 <= 0:
            raise DomainError(f"observer must be in front of the screen (z0 > 0), got z0={self.z0}")

    @property
    def r0(self) -> float:
        return math.sqrt(self.x0 ** 2 + self.y0 ** 2 + self.z0 ** 2)

    @property
    def theta0(self) -> float:
        """Polar angle from the +y axis, in (0, pi)."""
        return math.acos(min(1.0, max(-1.0, self.y0 / self.r0)))

    @property
    def phi0(self) -> float:
        """Azimuth in the zx plane from +z toward +x, in (-pi/2, +pi/2)."""
        return math.atan2(self.x0, self.z0)

    def to_spherical(self) -> tuple[float, float, float]:
        return (self.r0, self.theta0, self.phi0)


def spherical_to_cartesian(r0: float, theta0: float, phi0: float) -> ViewingPosition:
    """Build a ViewingPosition from spherical coordinates (r, theta, phi).

    Raises DomainError when r0 <= 0, theta0 is outside (0, pi) or phi0 is
    outside (-pi/2, pi/2); those positions are behind or beside the screen.
    """
    if not r0 > 0:
        raise DomainError(f"radius must be positive, got {r0}")
    if not 0 < theta0 < math.pi:
        raise DomainError(f"polar angle must lie in (0, pi), got {theta0}")
    if not -math.pi / 2 < phi0 < math.pi / 2:
        raise DomainError(f"azimuth must lie in (-pi/2, pi/2), got {phi0}")
    st = math.sin(theta0)
    return ViewingPosition(
        x0=r0 * st * math.sin(phi0),
        y0=r0 * math.cos(theta0),
        z0=r0 * st * math.cos(phi0),
    )


@dataclass(frozen=True)
class DisplayGeometry:
    """Physical and pixel geometry of a display.

    d_x, d_y are the physical width/height in inches; n_x, n_y the pixel
    counts; ppi the pixel density.  Physical and pixel dimensions must be
    mutually consistent through ppi.
    """

    d_x: float
    d_y: float
    n_x: int
    n_y: int
    ppi: float

    def __post_init__(self):
        if min(self.d_x, self.d_y, self.n_x, self.n_y, self.ppi) <= 0:
            raise DomainError("display dimensions must all be positive")
        if abs(self.d_x - self.n_x / self.ppi) > DISPLAY_CONSISTENCY_TOL_IN:
            raise DomainError(
                f"d_x={self.d_x} in disagrees with n_x/ppi={self.n_x / self.ppi:.4f} in")
        if abs(self.d_y - self.n_y / self.ppi) > DISPLAY_CONSISTENCY_TOL_IN:
            raise DomainError(
                f"d_y={self.d_y} in disagrees with n_y/ppi={self.n_y / self.ppi:.4f} in")

    @property
    def diagonal(self) -> float:
        return math.hypot(self.d_x, self.d_y)

    def scaled(self, n_x: int, n_y: int) -> "DisplayGeometry":
        """Same physical panel rendered at a different pixel grid.

        Useful for running the (resolution-invariant) pipeline at a cheaper
        working resolution.  The requested grid must keep the aspect ratio.
        """
        if abs(n_x / n_y - self.n_x / self.n_y) > 1e-6:
            raise DomainError("scaled grid must preserve the display aspect ratio")
        return DisplayGeometry(self.d_x, self.d_y, n_x, n_y, ppi=n_x / self.d_x)


@dataclass(frozen=True)
class VisualAngle:
    """Horizontal/vertical angles (radians) a display subtends at the eye."""

    theta_x: float
    theta_y: float

    def __post_init__(self):
        if not (0 < self.theta_x <= math.pi and 0 < self.theta_y <= math.pi):
            raise DomainError("visual angles must lie in (0, pi]")


def _subtended(offset: float, half_extent: float, lateral_sq: float) -> float:
    # Angle between the rays from the eye to the two edge midpoints
    # (+/- half_extent along the measured axis).  `offset` is the eye's
    # coordinate along that axis and `lateral_sq` the squared distance in
    # the two remaining axes.
    num = offset ** 2 - half_extent ** 2 + lateral_sq
    den = math.sqrt((offset + half_extent) ** 2 + lateral_sq) * \
        math.sqrt((offset - half_extent) ** 2 + lateral_sq)
    return math.acos(min(1.0, max(-1.0, num / den)))


def visual_angle(pos: ViewingPosition, display: DisplayGeometry) -> VisualAngle:
    """Visual angle subtended by the display at the observer (Cartesian form)."""
    return VisualAngle(
        theta_x=_subtended(pos.x0, display.d_x / 2,
                           pos.y0 ** 2 + pos.z0 ** 2),
        theta_y=_subtended(pos.y0, display.d_y / 2,
                           pos.x0 ** 2 + pos.z0 ** 2),
    )


def _subtended_spherical(r0: float, d: float, axis_component: float) -> float:
    # Closed form of _subtended after substituting the spherical mapping:
    # the product of the two edge distances collapses to
    # sqrt((r0^2 + d^2/4)^2 - (r0 * axis_component * d)^2), where
    # axis_component is the direction cosine of the eye along the measured
    # axis (sin(theta)sin(phi) horizontally, cos(theta) vertically).
    num = r0 ** 2 - d ** 2 / 4
    den = math.sqrt((r0 ** 2 + d ** 2 / 4) ** 2 - (r0 * axis_component * d) ** 2)
    return math.acos(min(1.0, max(-1.0, num / den)))


def visual_angle_spherical(r0: float, theta0: float, phi0: float,
                           display: DisplayGeometry) -> VisualAngle:
    """Visual angle straight from spherical coordinates.

    Mathematically identical to ``visual_angle`` composed with
    ``spherical_to_cartesian``; kept as an independent evaluation route so
    the two forms can be cross-checked.
    """
    if not r0 > 0:
        raise DomainError(f"radius must be positive, got {r0}")
    return VisualAngle(
        theta_x=_subtended_spherical(r0, display.d_x,
                                     math.sin(theta0) * math.sin(phi0)),
        theta_y=_subtended_spherical(r0, display.d_y, math.cos(theta0)),
    )


def perceived_frequency(n_x: float, n_y: float,
                        angle: VisualAngle) -> tuple[float, float]:
    """Map a cycle count per image to perceived cycles per degree.

    A grating with n cycles across an extent that subtends ``theta``
    degrees is perceived at n/theta c/d.
    """
    if angle.theta_x <= 0 or angle.theta_y <= 0:
        raise DomainError("visual angle components must be positive")
    return (
        n_x / math.degrees(angle.theta_x),
        n_y / math.degrees(angle.theta_y),
    )
