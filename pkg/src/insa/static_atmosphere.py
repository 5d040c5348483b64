"""Static column model for one fixed temperature/pressure offset pair.

Everything here describes a single column of air in hydrostatic
equilibrium: the relationships among pressure altitude Hp, geopotential
altitude H, pressure p, temperature T, standard temperature T_isa, and
density rho.  The column has two layers separated by the tropopause at a
fixed pressure altitude: a troposphere with a constant temperature
gradient and an isothermal stratosphere above it.

Pressure and standard temperature depend on Hp only and are therefore
shared by every offset pair.  Temperature adds the offset delta_T on top
of the standard profile, and the Hp <-> H mapping shifts and tilts with
both offsets through the mean sea level anchor values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Union

from .constants import (
    BETA_T_ABOVE,
    BETA_T_BELOW,
    G0,
    GBR,
    HP_MAX,
    HP_MIN,
    HP_TROP,
    P0,
    R_AIR,
    T0,
    AtmosphericState,
    Offsets,
    check_pressure_altitude,
    validate_offsets,
)
from .errors import OutOfValidityRange
from .solvers import newton

# Step tolerances of the two Newton solvers below.
HP_INVERSION_TOL = 1e-9   # [m]
TISA_MSL_TOL = 1e-9       # [K]


def _pressure_below(Hp: float) -> float:
    return P0 * (1.0 + BETA_T_BELOW / T0 * Hp) ** GBR


# Tropopause values in standard conditions; independent of the offsets.
T_ISA_TROP = T0 + BETA_T_BELOW * HP_TROP  # [K]
P_TROP = _pressure_below(HP_TROP)         # [Pa]


def _pressure_above(Hp: float) -> float:
    return P_TROP * math.exp(-G0 * (Hp - HP_TROP) / (R_AIR * T_ISA_TROP))


# Pressure image of the validity band, used to gate the inverse map.
_P_CEILING = _pressure_below(HP_MIN)  # highest valid pressure [Pa]
_P_FLOOR = _pressure_above(HP_MAX)    # lowest valid pressure [Pa]


@dataclass(frozen=True)
class AtmosphereAnchors:
    """Boundary values of one column, computed once per offset pair.

    Carries the generating offsets so that any operation accepting either
    an ``Offsets`` or a prebuilt anchor set can recover them bit-exactly.
    """

    offsets: Offsets
    Hp_msl: float       # pressure altitude of mean sea level [m]
    T_isa_msl: float    # standard temperature at mean sea level [K]
    T_msl: float        # temperature at mean sea level [K]
    p_msl: float        # mean sea level pressure [Pa]
    H_hp0: float        # geopotential altitude where Hp = 0 [m]
    T_hp0: float        # temperature where Hp = 0 [K]
    Hp_trop: float      # tropopause pressure altitude [m]
    H_trop: float       # tropopause geopotential altitude [m]
    p_trop: float       # tropopause pressure [Pa]
    T_isa_trop: float   # tropopause standard temperature [K]
    T_trop: float       # tropopause temperature [K]


ColumnSpec = Union[Offsets, AtmosphereAnchors]


def _geopotential_below(Hp: float, Hp_msl: float, T_isa_msl: float, delta_T: float) -> float:
    if delta_T == 0.0:
        return Hp - Hp_msl
    return Hp - Hp_msl + delta_T / BETA_T_BELOW * math.log(
        (T0 + BETA_T_BELOW * Hp) / T_isa_msl
    )


@lru_cache(maxsize=4096)
def anchors(offsets: Offsets) -> AtmosphereAnchors:
    """Compute (and cache) the boundary values of one column.

    Trajectory integrators call the point operations millions of times per
    flight, so the power/log evaluations hiding in the anchor values are
    done once per offset pair.
    """
    validate_offsets(offsets)
    delta_T = offsets.delta_T
    p_msl = P0 + offsets.delta_p
    Hp_msl = T0 / BETA_T_BELOW * ((p_msl / P0) ** (1.0 / GBR) - 1.0)
    T_isa_msl = T0 + BETA_T_BELOW * Hp_msl
    return AtmosphereAnchors(
        offsets=offsets,
        Hp_msl=Hp_msl,
        T_isa_msl=T_isa_msl,
        T_msl=T_isa_msl + delta_T,
        p_msl=p_msl,
        H_hp0=_geopotential_below(0.0, Hp_msl, T_isa_msl, delta_T),
        T_hp0=T0 + delta_T,
        Hp_trop=HP_TROP,
        H_trop=_geopotential_below(HP_TROP, Hp_msl, T_isa_msl, delta_T),
        p_trop=P_TROP,
        T_isa_trop=T_ISA_TROP,
        T_trop=T_ISA_TROP + delta_T,
    )


def _as_anchors(column: ColumnSpec) -> AtmosphereAnchors:
    if isinstance(column, AtmosphereAnchors):
        return column
    return anchors(column)


def standard_temperature_from_hp(Hp: float) -> float:
    """Standard temperature T_isa at pressure altitude Hp.

    Linear below the tropopause, constant above; the same for every
    offset pair.
    """
    check_pressure_altitude(Hp)
    if Hp <= HP_TROP:
        return T0 + BETA_T_BELOW * Hp
    return T_ISA_TROP


def temperature_from_hp(Hp: float, column: ColumnSpec) -> float:
    """Temperature at pressure altitude Hp; the offset delta_p plays no role."""
    a = _as_anchors(column)
    return standard_temperature_from_hp(Hp) + a.offsets.delta_T


def pressure_from_hp(Hp: float) -> float:
    """Pressure at pressure altitude Hp; the same for every offset pair."""
    check_pressure_altitude(Hp)
    if Hp <= HP_TROP:
        return _pressure_below(Hp)
    return _pressure_above(Hp)


def hp_from_pressure(p: float) -> float:
    """Pressure altitude at which pressure p occurs (exact inverse)."""
    if not _P_FLOOR <= p <= _P_CEILING:
        raise OutOfValidityRange(
            f"pressure {p!r} Pa outside [{_P_FLOOR}, {_P_CEILING}] Pa"
        )
    if p >= P_TROP:
        return T0 / BETA_T_BELOW * ((p / P0) ** (1.0 / GBR) - 1.0)
    return HP_TROP - R_AIR * T_ISA_TROP / G0 * math.log(p / P_TROP)


def geopotential_from_hp(Hp: float, column: ColumnSpec) -> float:
    """Geopotential altitude H at pressure altitude Hp for one column.

    H is zero at mean sea level (Hp = Hp_msl) and grows with slope
    T/T_isa, so warm columns stretch and cold ones compress relative to
    the Hp scale.
    """
    check_pressure_altitude(Hp)
    a = _as_anchors(column)
    if Hp <= HP_TROP:
        return _geopotential_below(Hp, a.Hp_msl, a.T_isa_msl, a.offsets.delta_T)
    return a.H_trop + a.T_trop / a.T_isa_trop * (Hp - HP_TROP)


def _geopotential_span(a: AtmosphereAnchors) -> tuple[float, float]:
    low = _geopotential_below(HP_MIN, a.Hp_msl, a.T_isa_msl, a.offsets.delta_T)
    high = a.H_trop + a.T_trop / a.T_isa_trop * (HP_MAX - HP_TROP)
    return low, high


def hp_from_geopotential(H: float, column: ColumnSpec, *, max_iter: int = 50) -> float:
    """Pressure altitude Hp at geopotential altitude H for one column.

    The stratosphere branch inverts in closed form.  The troposphere
    branch has no closed form and is solved with Newton iteration using
    the exact slope dH/dHp = T/T_isa; the starting guess H + Hp_msl is
    already exact when delta_T is zero.

    Raises:
        OutOfValidityRange: H outside the image of the validity band.
        NoConvergence: iteration budget exhausted (never expected in range).
    """
    a = _as_anchors(column)
    low, high = _geopotential_span(a)
    if not low <= H <= high:
        raise OutOfValidityRange(
            f"geopotential altitude {H!r} m outside [{low}, {high}] m"
            f" for offsets {a.offsets}"
        )
    if H > a.H_trop:
        return HP_TROP + a.T_isa_trop / a.T_trop * (H - a.H_trop)

    delta_T = a.offsets.delta_T

    def f(Hp: float) -> float:
        if T0 + BETA_T_BELOW * Hp <= 0.0:
            return math.inf  # far outside the column; forces NoConvergence
        return _geopotential_below(Hp, a.Hp_msl, a.T_isa_msl, delta_T) - H

    def fprime(Hp: float) -> float:
        t_isa = T0 + BETA_T_BELOW * Hp
        return (t_isa + delta_T) / t_isa

    root, _ = newton(f, fprime, H + a.Hp_msl, tol=HP_INVERSION_TOL, max_iter=max_iter)
    # The troposphere branch owns Hp <= Hp_trop; the iteration can land a
    # tolerance-width above it when H sits exactly at the tropopause.
    return min(root, HP_TROP)


def state_at_geopotential(H: float, column: ColumnSpec) -> AtmosphericState:
    """Full atmospheric state at geopotential altitude H for one column.

    Hp is recovered first, pressure and the two temperatures follow from
    it, and density closes the bundle through the perfect-gas law, so the
    returned state satisfies p = rho*R*T by construction.
    """
    a = _as_anchors(column)
    Hp = hp_from_geopotential(H, a)
    # The inversion can land a tolerance-width outside the closed band.
    Hp = min(max(Hp, HP_MIN), HP_MAX)
    p = pressure_from_hp(Hp)
    T_isa = standard_temperature_from_hp(Hp)
    T = T_isa + a.offsets.delta_T
    return AtmosphericState(Hp=Hp, H=H, p=p, T=T, T_isa=T_isa, rho=p / (R_AIR * T))


def state_at_pressure_altitude(Hp: float, column: ColumnSpec) -> AtmosphericState:
    """Full atmospheric state at pressure altitude Hp for one column."""
    a = _as_anchors(column)
    H = geopotential_from_hp(Hp, a)
    p = pressure_from_hp(Hp)
    T_isa = standard_temperature_from_hp(Hp)
    T = T_isa + a.offsets.delta_T
    return AtmosphericState(Hp=Hp, H=H, p=p, T=T, T_isa=T_isa, rho=p / (R_AIR * T))


def d_geopotential_d_hp(Hp: float, column: ColumnSpec) -> float:
    """Slope dH/dHp = T/T_isa; above one in warm columns, below in cold."""
    a = _as_anchors(column)
    return temperature_from_hp(Hp, a) / standard_temperature_from_hp(Hp)


class VerticalGradients(NamedTuple):
    dp_dH: float    # [Pa/m]
    dT_dH: float    # [K/m]
    drho_dH: float  # [kg/m^4]


def vertical_gradients(H: float, column: ColumnSpec) -> VerticalGradients:
    """Vertical gradients of p, T and rho with geopotential altitude.

    dp/dH is the hydrostatic balance -rho*g0; dT/dH combines the layer
    gradient (taken per pressure altitude) with the slope dHp/dH; the
    density gradient differentiates the perfect-gas law.  Exactly at the
    tropopause the troposphere-side values are returned.
    """
    st = state_at_geopotential(H, column)
    beta = BETA_T_BELOW if st.Hp <= HP_TROP else BETA_T_ABOVE
    dp_dH = -st.rho * G0
    dT_dH = beta * st.T_isa / st.T
    drho_dH = dp_dH / (R_AIR * st.T) - st.p * dT_dH / (R_AIR * st.T * st.T)
    return VerticalGradients(dp_dH=dp_dH, dT_dH=dT_dH, drho_dH=drho_dH)


def solve_tisa_msl(T_isa: float, H: float, delta_T: float, *, max_iter: int = 50) -> float:
    """Mean sea level standard temperature of the column through one point.

    Given the standard temperature ``T_isa`` observed at geopotential
    altitude ``H`` in a column with temperature offset ``delta_T``,
    returns the standard temperature that same column has at mean sea
    level.  With delta_T = 0 the relationship is linear and solved
    directly; otherwise Newton iteration starts from that linear solution.
    """
    x0 = T_isa - BETA_T_BELOW * H
    if delta_T == 0.0:
        return x0

    def g(x: float) -> float:
        if x <= 0.0:
            return math.inf
        return (T_isa - x + delta_T * math.log(T_isa / x)) / BETA_T_BELOW - H

    def gprime(x: float) -> float:
        return (-1.0 - delta_T / x) / BETA_T_BELOW

    root, _ = newton(g, gprime, x0, tol=TISA_MSL_TOL, max_iter=max_iter)
    return root
