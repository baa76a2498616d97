"""Config parsing diagnostics and the CLI subcommands end to end."""

import math
import subprocess
import sys

import numpy as np
import pytest

from fluctforce.cli import main
from fluctforce.config import ConfigError, parse_config
from fluctforce.curves import ScalarCurve, body_of_file, read_curve
from fluctforce.geometry import JanusBall
from fluctforce.materials import GOLD, Dielectric

JANUS_CFG = """\
[material.A]
preset = dielectric:1.0

[material.B]
preset = gold

[geometry]
preset = janus:100nm

[thermal]
environment = 300 K
body = 600 K

[quadrature]
rel_tol = 1e-6
mc_samples = 20000

[sweep]
variable = body
start = 150 K
stop = 900 K
count = 6
"""

WRENCH_CFG = """\
[material.A]
preset = gold

[material.B]
preset = dielectric:1.0

[geometry]
kind = wrench
half_length = 1 um
tag_length = 1 um
cross_section_radius = 50 nm

[thermal]
environment = 300 K
body = 600 K

[scenario]
drive = wrench_closed
u0 = 2.0
tag_mass_density = 2200 kg/m^3

[sweep]
variable = body
start = 150 K
stop = 900 K
count = 6
"""


class TestConfigParsing:
    def test_minimal_janus_round_trips(self):
        cfg = parse_config(JANUS_CFG)
        again = parse_config(cfg.to_text())
        assert again.entries == cfg.entries
        assert again.config_hash() == cfg.config_hash()

    def test_typed_builders(self):
        cfg = parse_config(JANUS_CFG)
        assert cfg.material("A") == Dielectric(1.0)
        assert cfg.material("B") == GOLD
        geom = cfg.geometry()
        assert isinstance(geom, JanusBall)
        assert geom.radius == pytest.approx(100e-9)
        th = cfg.thermal()
        assert (th.T, th.T_prime) == (300.0, 600.0)
        q = cfg.quadrature()
        assert q.mc_samples == 20000

    def test_misspelled_key_names_nearest(self):
        bad = JANUS_CFG.replace("preset = janus:100nm", "presett = janus:100nm")
        with pytest.raises(ConfigError, match="did you mean 'preset'"):
            parse_config(bad)

    def test_misspelled_radius_suggestion(self):
        text = "[geometry]\nkind = janus\nradiuss = 100 nm\n"
        with pytest.raises(ConfigError, match="did you mean 'radius'"):
            parse_config(text)

    def test_temperature_without_unit_rejected(self):
        bad = JANUS_CFG.replace("environment = 300 K", "environment = 300")
        with pytest.raises(ConfigError, match="requires a unit"):
            parse_config(bad)

    def test_unknown_section(self):
        with pytest.raises(ConfigError, match=r"unknown section \[materials\]"):
            parse_config("[materials]\nkind = gold\n")

    def test_error_carries_line_and_column(self):
        try:
            parse_config("[thermal]\nenvironment = 300\n")
        except ConfigError as exc:
            assert exc.line == 2 and exc.col > 0
        else:
            pytest.fail("expected ConfigError")

    def test_duplicate_key_rejected(self):
        with pytest.raises(ConfigError, match="duplicate"):
            parse_config("[thermal]\nenvironment = 300 K\nenvironment = 400 K\n")

    def test_unit_conversion(self):
        cfg = parse_config("[geometry]\nkind = janus\nradius = 0.1 um\n")
        assert cfg.get("geometry", "radius") == pytest.approx(1e-7)


class TestScalarCurve:
    def test_round_trip(self, tmp_path):
        c = ScalarCurve("x", "1", "y", "N", np.array([1.0, 2.0, 3.0]),
                        np.array([4.0, 5.0, 6.0]), np.array([0.1, 0.1, 0.2]),
                        metadata={"seed": 7})
        path = tmp_path / "c.csv"
        c.write(path)
        back = read_curve(path)
        assert np.array_equal(back.abscissa, c.abscissa)
        assert np.array_equal(back.values, c.values)
        assert np.array_equal(back.errors, c.errors)
        assert back.metadata["seed"] == "7"

    def test_invariants(self):
        with pytest.raises(ValueError, match="strictly increasing"):
            ScalarCurve("x", "1", "y", "1", np.array([1.0, 1.0]),
                        np.array([0.0, 0.0]))
        with pytest.raises(ValueError, match="finite"):
            ScalarCurve("x", "1", "y", "1", np.array([1.0, 2.0]),
                        np.array([0.0, math.inf]))


def _write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return p


class TestCliRunners:
    def test_propel_and_determinism(self, tmp_path):
        cfgp = _write(tmp_path, "janus.cfg", JANUS_CFG)
        outs = []
        for i, threads in enumerate((1, 4)):
            out = tmp_path / f"out{i}"
            rc = main(["propel", "--config", str(cfgp), "--out", str(out),
                       "--threads", str(threads)])
            assert rc == 0
            outs.append(body_of_file(out / "janus_force.csv"))
        assert outs[0] == outs[1]
        curve = read_curve(tmp_path / "out0" / "janus_force.csv")
        # hotter than environment -> toward the metal (negative)
        assert curve.values[-1] < 0 < curve.values[0]

    def test_ness_anchors_through_cli(self, tmp_path):
        cfg = "[scenario]\nexponents = -6 -3\n[sweep]\ncount = 5\n"
        cfgp = _write(tmp_path, "ness.cfg", cfg)
        rc = main(["ness", "--config", str(cfgp), "--out", str(tmp_path)])
        assert rc == 0
        flat = read_curve(tmp_path / "ness_n-3.csv")
        assert np.allclose(flat.values, 1.0, atol=1e-6)
        gam = read_curve(tmp_path / "ness_n-6.csv")
        assert np.allclose(gam.values, np.sqrt(1 - gam.abscissa**2), atol=1e-6)

    def test_torque_tauhat_zero_crossing(self, tmp_path):
        cfgp = _write(tmp_path, "wrench.cfg", WRENCH_CFG)
        rc = main(["torque", "--config", str(cfgp), "--out", str(tmp_path)])
        assert rc == 0
        tau = read_curve(tmp_path / "wrench_tauhat.csv")
        below = tau.values[tau.abscissa < 300.0]
        above = tau.values[tau.abscissa > 300.0]
        assert np.all(below > 0) and np.all(above < 0)

    def test_relax_outputs(self, tmp_path):
        cfgp = _write(tmp_path, "wrench.cfg", WRENCH_CFG)
        rc = main(["relax", "--config", str(cfgp), "--out", str(tmp_path)])
        assert rc == 0
        term = read_curve(tmp_path / "relax_terminal.csv")
        assert term.value_name == "terminal_angular_velocity"
        assert abs(term.values[0]) > 0
        traj = read_curve(tmp_path / "relax_trajectory.csv")
        assert np.all(np.diff(traj.abscissa) > 0)

    def test_friction_runner(self, tmp_path):
        cfg = """\
[scenario]
mechanism = image_lag
alpha0 = 5.3e-30 m^3
sigma_plate = 2314 eV
separation = 10 nm

[sweep]
variable = velocity
start = 1e-4 c
stop = 1e-2 c
count = 5
scale = log
"""
        cfgp = _write(tmp_path, "fric.cfg", cfg)
        rc = main(["friction", "--config", str(cfgp), "--out", str(tmp_path)])
        assert rc == 0
        curve = read_curve(tmp_path / "friction.csv")
        assert np.all(curve.values < 0)

    def test_eh_runner(self, tmp_path):
        cfg = """\
[scenario]
alpha0 = 5.3e-30 m^3
velocity = 1e-4 c
mass = 3.27e-25 kg

[sweep]
variable = environment
start = 100 K
stop = 1000 K
count = 4
"""
        cfgp = _write(tmp_path, "eh.cfg", cfg)
        rc = main(["eh", "--config", str(cfgp), "--out", str(tmp_path)])
        assert rc == 0
        assert (tmp_path / "eh_force.csv").exists()
        assert (tmp_path / "eh_slowdown.csv").exists()

    def test_sweep_runner(self, tmp_path):
        cfg = JANUS_CFG + """\
[scenario]
exponents = -3
"""
        cfg += "\n"
        cfg = cfg.replace("[sweep]\nvariable = body\nstart = 150 K\nstop = 900 K\ncount = 6\n",
                          "[sweep]\nkey = thermal.body\nvalues = 400 500\ntarget = ness\ncount = 3\n")
        cfgp = _write(tmp_path, "sweep.cfg", cfg)
        rc = main(["sweep", "--config", str(cfgp), "--out", str(tmp_path),
                   "--threads", "2"])
        assert rc == 0
        assert (tmp_path / "point_000" / "ness_n-3.csv").exists()
        assert (tmp_path / "point_001" / "ness_n-3.csv").exists()

    def test_config_error_exit_code_2(self, tmp_path):
        cfgp = _write(tmp_path, "bad.cfg", "[thermal]\nenvironment = 300\n")
        assert main(["propel", "--config", str(cfgp),
                     "--out", str(tmp_path)]) == 2
        assert main(["propel", "--config", str(tmp_path / "missing.cfg"),
                     "--out", str(tmp_path)]) == 2

    def test_numerical_failure_exit_code_3(self, tmp_path):
        # an impossible tolerance with a tiny subdivision budget
        cfg = JANUS_CFG.replace("rel_tol = 1e-6",
                                "rel_tol = 1e-9\nmax_subdivisions = 2")
        cfgp = _write(tmp_path, "tight.cfg", cfg)
        rc = main(["propel", "--config", str(cfgp), "--out", str(tmp_path)])
        assert rc == 3

    def test_seed_and_tol_overrides_land_in_header(self, tmp_path):
        cfgp = _write(tmp_path, "janus.cfg", JANUS_CFG)
        rc = main(["propel", "--config", str(cfgp), "--out", str(tmp_path),
                   "--seed", "42", "--tol", "1e-5"])
        assert rc == 0
        meta = read_curve(tmp_path / "janus_fhat.csv").metadata
        assert meta["seed"] == "42"

    def test_installed_entry_point(self, tmp_path):
        cfgp = _write(tmp_path, "ness.cfg",
                      "[scenario]\nexponents = -3\n[sweep]\ncount = 3\n")
        proc = subprocess.run(
            [sys.executable, "-m", "fluctforce.cli", "ness", "--config",
             str(cfgp), "--out", str(tmp_path)],
            capture_output=True, text=True)
        assert proc.returncode == 0, proc.stderr

    def test_wrong_sweep_variable_rejected(self, tmp_path):
        cfgp = _write(tmp_path, "janus.cfg", JANUS_CFG)
        assert main(["ness", "--config", str(cfgp),
                     "--out", str(tmp_path)]) == 2
