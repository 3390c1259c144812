import math

import numpy as np
import pytest

import bfamily


def test_transform_round_trip():
    x = -np.pi + 2 * np.pi * np.arange(64) / 64
    u = np.sin(x) + 0.25 * np.cos(3 * x)
    half = bfamily.forward_transform(u)
    assert half.shape == (33,)
    assert np.allclose(bfamily.inverse_transform(half), u, atol=1e-14)


def test_fit_recovers_oracle():
    half = bfamily.forward_transform(bfamily.oracle_field(0.6, 0.2, 1.0, modes=2048))
    fit = bfamily.fit_spectrum(half)
    assert abs(fit["delta"] - 0.2) < 1e-4
    assert abs(fit["alpha"] - 0.6) < 0.02
    assert abs(fit["x_star"] - 1.0) < 1e-4


def test_simulate_and_track_degasperis_procesi():
    run = bfamily.simulate(3.0, modes=256, dt=1e-3, t_end=1.0, sample_every=10)
    assert run["spectra"].shape == (len(run["times"]), 129)
    trace = bfamily.track(run["times"], run["spectra"], b=3.0)
    assert trace["fits"]
    deltas = [f["delta"] for f in trace["fits"]]
    assert deltas[-1] < deltas[0]


def test_errors_are_raised():
    with pytest.raises(bfamily.BFamilyError):
        bfamily.simulate(3.0, modes=63)
    with pytest.raises(bfamily.BFamilyError):
        bfamily.oracle_field(0.5, -0.1)


def test_cli_validate():
    code, out, _ = bfamily.run_cli(["validate", "--modes", "2048"])
    assert code == 0
    assert "0 failed" in out
