import math

import numpy as np
import pytest

from tachyon.epr import (
    FLAG_S0_SIMULTANEITY,
    FLAG_SUBLUMINAL,
    FLAG_UNBOUNDED,
    Correlation,
    EprConfig,
    SweepConfig,
    correlation_predicted,
    rotate_about,
    sidereal_sweep,
    sweep_csv_text,
    vt_lower_bound,
    write_sweep_csv,
)
from tachyon.errors import DegeneratePairError, DomainError
from tachyon.ether import EtherFrame, required_beta_t, to_ether
from tachyon.minkowski import Beta3, Event, boost_array, boost_event
from tachyon.units import seconds_to_ct

REST = EtherFrame.at_rest()
A = Event.at(0.0)


def brute_force_bound(cfg: EprConfig, n: int = 200_001) -> float:
    """Dense scan of the timing window, every shifted pair boosted into S0."""
    half = seconds_to_ct(cfg.timing_uncertainty)
    shifts = np.linspace(-half, half, n)
    d = np.tile((cfg.event_b - cfg.event_a).as_array(), (n, 1))
    d[:, 0] += shifts
    d0 = boost_array(d, -cfg.ether.beta_lab.as_array())
    dct = np.abs(d0[:, 0])
    dist = np.linalg.norm(d0[:, 1:], axis=1)
    ok = dct > 0
    return float(np.min(dist[ok] / dct[ok])) if ok.any() else math.inf


class TestEprConfig:
    def test_coincident(self):
        with pytest.raises(DegeneratePairError):
            EprConfig(A, Event.at(0.0))

    def test_negative_uncertainty(self):
        with pytest.raises(DomainError):
            EprConfig(A, Event.at(0.0, 1.0), -1e-9)

    def test_subluminal_beta_t(self):
        with pytest.raises(DomainError):
            EprConfig(A, Event.at(0.0, 1.0), beta_t=0.5)


class TestCorrelationPredicted:
    def test_lab_simultaneous_with_ether_at_rest(self):
        for bt in (1.5, 1e3, 1e12):
            assert correlation_predicted(EprConfig(A, Event.at(0.0, 10.0), beta_t=bt)) is Correlation.CORRELATION_LOSS

    def test_short_baseline_is_subluminally_connected(self):
        b = Event.at(seconds_to_ct(1e-9), 0.1)
        assert required_beta_t(A, b, REST) == pytest.approx(0.1 / 0.299792458, rel=1e-14)
        assert required_beta_t(A, b, REST) == pytest.approx(0.3336, abs=1e-4)
        assert correlation_predicted(EprConfig(A, b, beta_t=1.0001)) is Correlation.CORRELATED

    def test_long_baseline_needs_faster_signal(self):
        b = Event.at(seconds_to_ct(1e-9), 10.0)
        assert required_beta_t(A, b, REST) == pytest.approx(33.356, abs=1e-3)
        assert correlation_predicted(EprConfig(A, b, beta_t=10.0)) is Correlation.CORRELATION_LOSS
        assert correlation_predicted(EprConfig(A, b, beta_t=34.0)) is Correlation.CORRELATED

    def test_source_is_s0_earlier_event(self):
        b = Event.at(seconds_to_ct(1e-9), 10.0)
        assert correlation_predicted(EprConfig(b, A, beta_t=34.0)) is Correlation.CORRELATED

    def test_needs_beta_t(self):
        with pytest.raises(DomainError):
            correlation_predicted(EprConfig(A, Event.at(1.0, 2.0)))

    def test_frame_consistency(self):
        rng = np.random.default_rng(0)
        for _ in range(300):
            d = rng.normal(size=3)
            ether = EtherFrame(Beta3(d / np.linalg.norm(d) * rng.uniform(0, 0.9)))
            a = Event(rng.uniform(-3, 3), rng.uniform(-5, 5, 3))
            b = Event(rng.uniform(-3, 3), rng.uniform(-5, 5, 3))
            bt = float(np.exp(rng.uniform(0, 3)))
            need = min(required_beta_t(a, b, ether), required_beta_t(b, a, ether))
            if abs(need - bt) < 1e-9 * bt:
                continue
            k = rng.normal(size=3)
            kick = Beta3(k / np.linalg.norm(k) * rng.uniform(0, 0.9))
            moved = EprConfig(boost_event(a, kick, "lab"), boost_event(b, kick, "lab"),
                              ether=ether.seen_from(kick), beta_t=bt)
            assert correlation_predicted(EprConfig(a, b, ether=ether, beta_t=bt)) is correlation_predicted(moved)


class TestVtLowerBound:
    def test_window_edge(self):
        res = vt_lower_bound(EprConfig(A, Event.at(0.0, 29.9792458), 10e-9))
        assert res.bound == pytest.approx(10.0, abs=1e-12)
        assert abs(res.offset) == pytest.approx(seconds_to_ct(10e-9))
        assert FLAG_S0_SIMULTANEITY in res.flags

    def test_zero_window_simultaneity_is_unbounded(self):
        res = vt_lower_bound(EprConfig(A, Event.at(0.0, 29.9792458), 0.0))
        assert res.unbounded
        assert {FLAG_UNBOUNDED, FLAG_S0_SIMULTANEITY} <= res.flags

    @pytest.mark.parametrize("beta", [0.1, 0.5, 0.9, 0.99, 0.999])
    def test_aligned_closed_form(self, beta):
        for ether in (EtherFrame(Beta3.of(beta)), EtherFrame.from_ether_velocity(Beta3.of(beta))):
            res = vt_lower_bound(EprConfig(A, Event.at(0.0, 123.0), 0.0, ether))
            assert res.bound == pytest.approx(1.0 / beta, rel=1e-12)

    def test_point_one_gives_ten(self):
        for d in (1.0, 17.3, 1e4):
            res = vt_lower_bound(EprConfig(A, Event.at(0.0, d), 0.0, EtherFrame(Beta3.of(0.1))))
            assert res.bound == pytest.approx(10.0, rel=1e-12)

    def test_timelike_pair_is_subluminal(self):
        res = vt_lower_bound(EprConfig(A, Event.at(5.0, 1.0), 1e-9))
        assert res.bound < 1 and FLAG_SUBLUMINAL in res.flags

    def test_matches_brute_force_oracle(self):
        rng = np.random.default_rng(1)
        for _ in range(60):
            d = rng.normal(size=3)
            ether = EtherFrame(Beta3(d / np.linalg.norm(d) * rng.uniform(0, 0.9)))
            b = Event(rng.uniform(-20, 20), rng.uniform(-30, 30, 3))
            cfg = EprConfig(A, b, rng.uniform(0, 1e-7), ether)
            res = vt_lower_bound(cfg)
            grid = brute_force_bound(cfg)
            assert res.bound <= grid * (1 + 1e-12)
            assert res.bound == pytest.approx(grid, rel=1e-6)

    def test_monotone_in_timing_uncertainty(self):
        rng = np.random.default_rng(2)
        for _ in range(40):
            d = rng.normal(size=3)
            ether = EtherFrame(Beta3(d / np.linalg.norm(d) * rng.uniform(0, 0.5)))
            b = Event(rng.uniform(-5, 5), rng.uniform(-30, 30, 3))
            bounds = [vt_lower_bound(EprConfig(A, b, dt, ether)).bound for dt in np.linspace(0, 2e-7, 15)]
            assert all(x >= y for x, y in zip(bounds, bounds[1:]))

    def test_bound_plus_epsilon_is_correlated(self):
        rng = np.random.default_rng(3)
        for _ in range(100):
            d = rng.normal(size=3)
            ether = EtherFrame(Beta3(d / np.linalg.norm(d) * rng.uniform(0.01, 0.9)))
            b = Event(0.0, rng.uniform(-30, 30, 3))
            res = vt_lower_bound(EprConfig(A, b, rng.uniform(0, 5e-9), ether))
            if res.unbounded or res.bound <= 1:
                continue
            edge = b.delayed(res.offset)
            for eps in (1e-9, 1e-3, 1.0):
                cfg = EprConfig(A, edge, 0.0, ether, beta_t=res.bound * (1 + eps))
                assert correlation_predicted(cfg) is Correlation.CORRELATED


class TestSweep:
    def cfg(self, ether_velocity, n=24, axis=(0, 0, 1), start=(1, 0, 0.3), dt=0.0):
        return SweepConfig(1000.0, axis, start, Beta3(ether_velocity), n, dt)

    def test_rotation_helper(self):
        out = rotate_about(np.array([1.0, 0, 0]), np.array([0, 0, 1.0]), math.pi / 2)
        np.testing.assert_allclose(out, [0, 1, 0], atol=1e-15)

    def test_axial_symmetry(self):
        table = sidereal_sweep(self.cfg((0, 0, 0.3), dt=1e-9))
        bounds = np.array([r.result.bound for r in table.rows])
        assert np.all(np.abs(bounds - bounds[0]) <= 1e-12 * bounds[0])

    def test_no_ether_motion(self):
        table = sidereal_sweep(self.cfg((0, 0, 0), dt=1e-8))
        bounds = np.array([r.result.bound for r in table.rows])
        np.testing.assert_allclose(bounds, 1000.0 / seconds_to_ct(1e-8), rtol=1e-12)

    def test_in_plane_ether_period_and_extrema(self):
        cfg = self.cfg((0.2, 0, 0), n=24, start=(1, 0, 0), dt=1e-8)
        coarse = [r.result.bound for r in sidereal_sweep(cfg).rows]
        dense_cfg = self.cfg((0.2, 0, 0), n=240, start=(1, 0, 0), dt=1e-8)
        dense = np.array([r.result.bound for r in sidereal_sweep(dense_cfg).rows])
        np.testing.assert_allclose(dense[::10], coarse, rtol=1e-12)
        assert np.ptp(dense) > 0
        # half-day symmetry: the baseline reversed gives the same bound
        np.testing.assert_allclose(dense[:120], dense[120:], rtol=1e-9)
        minima = [i for i in range(240) if dense[i] < dense[i - 1] and dense[i] <= dense[(i + 1) % 240]]
        assert len(minima) == 2 and (minima[1] - minima[0]) == 120

    def test_minimum_row(self):
        table = sidereal_sweep(self.cfg((0.2, 0, 0), n=24, start=(1, 0, 0)))
        best = table.minimum
        assert best.result.bound == min(r.result.bound for r in table.rows)
        assert best.phase == 0.0
        assert best.result.bound == pytest.approx(5.0, rel=1e-12)

    def test_phases(self):
        table = sidereal_sweep(self.cfg((0.1, 0, 0), n=8))
        assert [r.phase for r in table.rows] == [i / 8 for i in range(8)]

    def test_invalid(self):
        with pytest.raises(DomainError):
            self.cfg((0.1, 0, 0), n=0)
        with pytest.raises(DomainError):
            SweepConfig(0.0, (0, 0, 1), (1, 0, 0), Beta3.of(0.1))
        with pytest.raises(DomainError):
            SweepConfig(1.0, (0, 0, 0), (1, 0, 0), Beta3.of(0.1))


class TestSweepCsv:
    def test_format(self, tmp_path):
        table = sidereal_sweep(SweepConfig(1000.0, (0, 0, 1), (1, 0, 0), Beta3.of(0.2), 24, 1e-9))
        path = tmp_path / "sweep.csv"
        write_sweep_csv(table, path)
        raw = path.read_bytes()
        assert b"\r" not in raw
        lines = raw.decode("utf-8").splitlines()
        assert lines[0] == "phase,bound,flags"
        assert len(lines) == 25
        assert lines[1] == f"0,{table.rows[0].result.bound:.9g},"
        assert 4.99 < table.rows[0].result.bound < 5.0
        assert sweep_csv_text(table).encode() == raw

    def test_unbounded_rows(self):
        # baseline turns in the y-z plane, always perpendicular to the ether velocity
        table = sidereal_sweep(SweepConfig(1.0, (1, 0, 0), (0, 1, 0), Beta3.of(0.2), 4))
        lines = sweep_csv_text(table).splitlines()[1:]
        assert [ln.split(",")[1] for ln in lines] == ["inf"] * 4
        assert all(FLAG_UNBOUNDED in ln for ln in lines)
