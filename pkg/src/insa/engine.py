"""Quasi-static composition: weather field plus static column model.

A query evaluates the field at the aircraft time and horizontal position,
converts the geodetic altitude to geopotential, and hands both to the
static column.  Time derivatives along a trajectory keep the offsets
frozen, since their variation with time and horizontal position is much
smaller than the variation of the properties with altitude; only the
vertical term `gradient * dH/dt` is retained.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field

from .constants import (
    DEFAULT_OFFSET_BOUNDS,
    IsaConstants,
    Offsets,
    OffsetBounds,
    AtmosphericState,
    constants,
    validate_offsets,
)
from .geodesy import GeodeticPosition, d_geopotential_d_geodetic, geodetic_to_geopotential
from .offset_field import OffsetField
from .static_atmosphere import state_at_geopotential, vertical_gradients


@dataclass(frozen=True)
class PropertyRates:
    """Time derivatives of the atmospheric properties along a trajectory."""

    dp_dt: float    # [Pa/s]
    dT_dt: float    # [K/s]
    drho_dt: float  # [kg/(m^3 s)]


@dataclass(frozen=True)
class QuasiStaticModel:
    """A weather field bound to the static column model.

    Immutable and safe to share between any number of concurrent
    trajectory integrators.
    """

    field: OffsetField
    constants: IsaConstants = dataclass_field(default_factory=constants)
    bounds: OffsetBounds = DEFAULT_OFFSET_BOUNDS

    def offsets_at(self, t: float, lon: float, lat: float) -> Offsets:
        """Field evaluation followed by validation against the model bounds."""
        return validate_offsets(self.field.evaluate(t, lon, lat), self.bounds)

    def query(self, t: float, position: GeodeticPosition) -> AtmosphericState:
        """Atmospheric state at one time and geodetic position.

        Equivalent to the manual pipeline: evaluate the field, convert
        h to H, query the static column.
        """
        offsets = self.offsets_at(t, position.lon, position.lat)
        H = geodetic_to_geopotential(position.h)
        return state_at_geopotential(H, offsets)

    def property_rates(
        self, t: float, position: GeodeticPosition, h_dot: float
    ) -> PropertyRates:
        """Quasi-static property rates for a geodetic climb rate h_dot.

        dH/dt follows from the exact slope of the geodetic-to-geopotential
        conversion; the offsets are held frozen at (t, lon, lat), so a
        time-varying field contributes nothing at h_dot = 0 by design.
        """
        offsets = self.offsets_at(t, position.lon, position.lat)
        H = geodetic_to_geopotential(position.h)
        gradients = vertical_gradients(H, offsets)
        H_dot = d_geopotential_d_geodetic(position.h) * h_dot
        return PropertyRates(
            dp_dt=gradients.dp_dH * H_dot,
            dT_dt=gradients.dT_dH * H_dot,
            drho_dt=gradients.drho_dH * H_dot,
        )
