"""Smoke tests for the _subdamp extension module.

These exercise the python surface end to end: exact damping flows, the
crossing oracle, config round-trips, presets, and one tiny solver run.
"""

import math
import os
import subprocess

import pytest

import _subdamp as sd

CANONICAL = """\
model = conservation
grid.n = 100
grid.origin = 0
grid.length = 1
flux = burgers
damping.delta = 1
damping.alpha = 1
damping.omega = 0,0.25
dt = 1e-3
t_final = 0.1
u0 = constant
u0.value = 1.25
"""


def test_damping_flow_scalar():
    assert sd.damping_flow_scalar(1.25, 1.0, 1.0, 0.5) == pytest.approx(0.75, abs=1e-15)
    # At and past extinction the flow is exactly zero.
    assert sd.damping_flow_scalar(1.25, 1.0, 1.0, 1.25) == 0.0
    assert sd.damping_flow_scalar(-1.0, 2.0, 0.5, 10.0) == 0.0
    # Sublinear exponent: (1 - 0.5)^2.
    assert sd.damping_flow_scalar(1.0, 1.0, 0.5, 1.0) == pytest.approx(0.25, abs=1e-15)


def test_pointwise_extinction_time():
    assert sd.pointwise_extinction_time(1.25, 1.0, 1.0) == pytest.approx(1.25)
    assert sd.pointwise_extinction_time(0.0, 1.0, 1.0) == 0.0
    t = sd.pointwise_extinction_time(0.8, 1.3, 0.75)
    assert sd.damping_flow_scalar(0.8, 1.3, 0.75, t) == 0.0


def test_oracle_threshold_and_transit_map():
    eps = sd.oracle_epsilon(CANONICAL)
    assert eps == pytest.approx(math.sqrt(0.5), abs=1e-10)
    # g(v) = v^2/2 for the quadratic flux at unit strength.
    assert sd.oracle_g(CANONICAL, 1.0) == pytest.approx(0.5, abs=1e-10)
    assert sd.oracle_g(CANONICAL, 1.25) == pytest.approx(0.78125, abs=1e-10)
    # A window too wide to cross reports no threshold.
    blocked = CANONICAL.replace("damping.omega = 0,0.25", "damping.omega = 0,0.9")
    assert sd.oracle_epsilon(blocked) is None


def test_oracle_sequences():
    seq = sd.oracle_sequences(CANONICAL)
    assert seq["n0"] == 3
    assert seq["u"] == pytest.approx(
        [1.25, 1.0307764064044151, 0.75, 0.25], abs=1e-9
    )
    assert seq["t"] == pytest.approx(
        [0.0, 0.9468304687045838, 2.2276068751089989, 5.7276068751089989], abs=1e-9
    )
    assert seq["c0"] == pytest.approx(0.8246211251235321, abs=1e-9)
    assert seq["t_star_seq"] == pytest.approx(
        seq["T_star_seq"] + math.sqrt(0.5), abs=1e-9
    )
    assert sd.oracle_T_star_trace(CANONICAL) == pytest.approx(
        2.9659258262886752, abs=1e-9
    )


def test_config_round_trip_and_hash():
    text = sd.parse_and_serialize(CANONICAL)
    assert "model = conservation" in text
    assert sd.parse_and_serialize(text) == text
    h = sd.config_hash_of(CANONICAL)
    assert h == sd.config_hash_of(text)
    assert len(h) == 16
    int(h, 16)  # hex digits only
    with pytest.raises(RuntimeError):
        sd.parse_and_serialize("model = conservation\nbogus = 1\n")


def test_presets():
    names = sd.preset_names()
    assert "burgers-window" in names
    assert len(names) == 8
    text = sd.preset_text("burgers-window")
    assert "flux = burgers" in text
    # The preset text is itself a valid config.
    sd.parse_and_serialize(text)
    with pytest.raises(ValueError):
        sd.preset_text("no-such-preset")


def test_tiny_run_decays():
    config = CANONICAL + "snapshot.every = 0.05\n"
    out = sd.run(config)
    assert out["config_hash"] == sd.config_hash_of(config)
    sup = out["series"]["sup_norm"]
    assert sup["t"][0] == 0.0
    assert sup["v"][0] == pytest.approx(1.25)
    # The damping window bites immediately; the sup norm cannot grow.
    assert max(sup["v"]) <= 1.25 + 1e-12
    assert sup["v"][-1] < 1.25
    assert out["final_time"] == pytest.approx(0.1)
    assert len(out["final_values"]) == 100
    # Values inside the window have been damped well below the datum.
    assert min(out["final_values"]) < 1.25 - 0.05


def test_cli_binary_round_trip(tmp_path):
    """The installed CLI and the python module agree on the oracle numbers."""
    cli = os.environ.get("SUBDAMP_CLI")
    if not cli:
        pytest.skip("SUBDAMP_CLI not set")
    cfg = tmp_path / "canonical.cfg"
    cfg.write_text(CANONICAL)
    res = subprocess.run(
        [cli, "oracle", "--config", str(cfg)],
        capture_output=True,
        text=True,
        check=True,
    )
    report = dict(
        line.split(" = ", 1) for line in res.stdout.splitlines() if " = " in line
    )
    assert float(report["epsilon"]) == pytest.approx(sd.oracle_epsilon(CANONICAL))
    assert int(report["n0"]) == 3
