import pytest

from insa import (
    ConstantField,
    GeodeticPosition,
    Offsets,
    OffsetBounds,
    OutOfValidityRange,
    PropertyRates,
    QuasiStaticModel,
    RouteLinearField,
    Waypoint,
    geodetic_to_geopotential,
    state_at_geopotential,
)

MSL = GeodeticPosition(lon=0.0, lat=0.0, h=0.0)


def constant_model(delta_T=0.0, delta_p=0.0):
    return QuasiStaticModel(field=ConstantField(Offsets(delta_T, delta_p)))


class TestQuery:
    def test_standard_msl(self):
        state = constant_model().query(0.0, MSL)
        assert state.p == 101325.0
        assert state.T == 288.15
        assert abs(state.rho - 1.225) < 1e-4

    def test_matches_manual_pipeline(self):
        offsets = Offsets(-12.0, 3000.0)
        model = constant_model(-12.0, 3000.0)
        for h in (0.0, 2500.0, 10000.0, 15000.0):
            pos = GeodeticPosition(lon=1.0, lat=0.5, h=h)
            expected = state_at_geopotential(geodetic_to_geopotential(h), offsets)
            assert model.query(123.0, pos) == expected

    def test_route_field_warms_up_with_time(self):
        field = RouteLinearField(
            departure=Waypoint(t=0.0, lon=0.0, lat=0.0, offsets=Offsets(-20.0, 0.0)),
            arrival=Waypoint(t=3600.0, lon=1.0, lat=0.5, offsets=Offsets(20.0, 0.0)),
        )
        model = QuasiStaticModel(field=field)
        pos = GeodeticPosition(lon=0.5, lat=0.25, h=5000.0)
        temps = [model.query(t, pos).T for t in range(0, 3601, 300)]
        assert all(a < b for a, b in zip(temps, temps[1:]))
        # Pointwise oracle: offset interpolation feeds straight into T.
        state = model.query(1800.0, pos)
        assert state.T == pytest.approx(state.T_isa, abs=1e-12)

    def test_model_bounds_enforced(self):
        tight = OffsetBounds(-1.0, 1.0, -10.0, 10.0)
        model = QuasiStaticModel(field=ConstantField(Offsets(5.0, 0.0)), bounds=tight)
        with pytest.raises(OutOfValidityRange):
            model.query(0.0, MSL)


class TestPropertyRates:
    def test_zero_climb_rate_means_zero_rates(self):
        rates = constant_model(7.0, -2000.0).property_rates(0.0, MSL, 0.0)
        assert rates.dp_dt == 0.0
        assert rates.dT_dt == 0.0
        assert rates.drho_dt == 0.0

    def test_time_varying_field_contributes_nothing_at_zero_climb(self):
        # The field's own time variation is neglected by contract.
        field = RouteLinearField(
            departure=Waypoint(t=0.0, lon=0.0, lat=0.0, offsets=Offsets(-20.0, -4000.0)),
            arrival=Waypoint(t=3600.0, lon=1.0, lat=0.5, offsets=Offsets(20.0, 4000.0)),
        )
        model = QuasiStaticModel(field=field)
        rates = model.property_rates(1800.0, GeodeticPosition(0.5, 0.2, 6000.0), 0.0)
        assert rates == PropertyRates(0.0, 0.0, 0.0)

    def test_standard_msl_climb(self):
        rates = constant_model().property_rates(0.0, MSL, 1.0)
        # -g0*p0/(R*T0), mpmath 50-digit: -12.013146427738547
        assert rates.dp_dt == pytest.approx(-12.013146427738547, abs=1e-9)
        assert rates.dp_dt == pytest.approx(-1.225 * 9.80665, abs=1e-3)

    def test_finite_difference_along_climb(self):
        model = constant_model(10.0, -2500.0)
        h_dot, dt_step = 5.0, 1.0
        for h0 in (0.0, 3000.0, 12000.0):
            pos = GeodeticPosition(lon=0.0, lat=0.0, h=h0)
            rates = model.property_rates(100.0, pos, h_dot)
            before = model.query(
                100.0 - dt_step, GeodeticPosition(0.0, 0.0, h0 - h_dot * dt_step)
            )
            after = model.query(
                100.0 + dt_step, GeodeticPosition(0.0, 0.0, h0 + h_dot * dt_step)
            )
            assert rates.dp_dt == pytest.approx(
                (after.p - before.p) / (2 * dt_step), rel=1e-5
            )
            fd_T = (after.T - before.T) / (2 * dt_step)
            if rates.dT_dt == 0.0:
                assert fd_T == pytest.approx(0.0, abs=1e-12)
            else:
                assert rates.dT_dt == pytest.approx(fd_T, rel=1e-5)
            assert rates.drho_dt == pytest.approx(
                (after.rho - before.rho) / (2 * dt_step), rel=1e-5
            )

    def test_conversion_slope_applied(self):
        model = constant_model()
        h = 10000.0
        pos = GeodeticPosition(lon=0.0, lat=0.0, h=h)
        rates = model.property_rates(0.0, pos, 2.0)
        from insa import d_geopotential_d_geodetic, vertical_gradients

        grads = vertical_gradients(geodetic_to_geopotential(h), Offsets(0.0, 0.0))
        assert rates.dp_dt == grads.dp_dH * d_geopotential_d_geodetic(h) * 2.0
