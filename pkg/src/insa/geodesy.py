"""Geodetic/geopotential altitude conversion on a spherical Earth.

The conversion uses the nominal Earth radius and ignores the (very small)
influence of latitude, so both directions are closed-form and exact
algebraic inverses of each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import RE
from .errors import OutOfValidityRange

TWO_PI = 2.0 * math.pi


def normalize_longitude(lon: float) -> float:
    """Wrap a finite longitude into [0, 2*pi) radians."""
    if not math.isfinite(lon):
        raise OutOfValidityRange(f"longitude must be finite, got {lon!r}")
    return lon % TWO_PI


def check_latitude(lat: float) -> float:
    if not -math.pi / 2.0 <= lat <= math.pi / 2.0:
        raise OutOfValidityRange(f"latitude {lat!r} rad outside [-pi/2, pi/2]")
    return lat


@dataclass(frozen=True)
class GeodeticPosition:
    """Position in longitude/latitude (rad) and geodetic altitude (m)."""

    lon: float  # longitude [rad], normalized to [0, 2*pi) on construction
    lat: float  # latitude [rad], in [-pi/2, pi/2]
    h: float    # geodetic altitude [m]

    def __post_init__(self):
        object.__setattr__(self, "lon", normalize_longitude(self.lon))
        check_latitude(self.lat)
        if not (math.isfinite(self.h) and self.h > -RE):
            raise OutOfValidityRange(f"geodetic altitude {self.h!r} m is not usable")


def geodetic_to_geopotential(h: float) -> float:
    """Geopotential altitude H for geodetic altitude h, both in metres."""
    if not h > -RE / 2.0:
        raise OutOfValidityRange(f"geodetic altitude {h!r} m below -RE/2")
    return RE * h / (RE + h)


def geopotential_to_geodetic(H: float) -> float:
    """Geodetic altitude h for geopotential altitude H, both in metres."""
    if not H < RE / 2.0:
        raise OutOfValidityRange(f"geopotential altitude {H!r} m above RE/2")
    return RE * H / (RE - H)


def d_geopotential_d_geodetic(h: float) -> float:
    """Slope dH/dh of the conversion at geodetic altitude h."""
    if not h > -RE / 2.0:
        raise OutOfValidityRange(f"geodetic altitude {h!r} m below -RE/2")
    ratio = RE / (RE + h)
    return ratio * ratio
