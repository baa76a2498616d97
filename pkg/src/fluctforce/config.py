"""Scenario configuration: plain-text sections of ``key = value unit`` lines.

Every physical quantity carries an explicit unit in the file; unknown keys
are hard errors with a nearest-key suggestion (no silent defaults for
misspellings).  Parsed values are stored canonically (SI/natural units), so
serialization round-trips exactly.
"""

from __future__ import annotations

import difflib
import hashlib
import math
from dataclasses import dataclass, field

from .geometry import DualFlag, DualWrench, JanusBall, geometry_from_preset
from .materials import (Dielectric, DrudeMetal, GyrotropicSphere,
                        MonomialAbsorber, material_from_preset)
from .quadrature import PhiEvalPolicy, QuadratureSpec
from .units import C_M_PER_S, ThermalPair

__all__ = ["ConfigError", "ScenarioConfig", "parse_config"]


class ConfigError(ValueError):
    def __init__(self, msg: str, line: int = 0, col: int = 0):
        self.line = line
        self.col = col
        where = f"line {line}, col {col}: " if line else ""
        super().__init__(where + msg)


# unit kind -> {unit token: factor to canonical}
_UNIT_TABLE = {
    "length": {"nm": 1e-9, "um": 1e-6, "mm": 1e-3, "m": 1.0},          # -> m
    "temperature": {"K": 1.0},                                          # -> K
    "energy": {"eV": 1.0, "meV": 1e-3},                                 # -> eV
    "density": {"m^-3": 1.0},                                           # -> m^-3
    "mass_density": {"kg/m^3": 1.0},                                    # -> kg/m^3
    "mass": {"kg": 1.0, "u": 1.66053906892e-27},                        # -> kg
    "volume": {"m^3": 1.0, "nm^3": 1e-27, "A^3": 1e-30},                # -> m^3
    "velocity": {"c": 1.0, "m/s": 1.0 / C_M_PER_S},                     # -> c
}
_CANONICAL_UNIT = {
    "length": "m", "temperature": "K", "energy": "eV", "density": "m^-3",
    "mass_density": "kg/m^3", "mass": "kg", "volume": "m^3", "velocity": "c",
}

# (section-family, key) -> kind; kinds "float", "int", "str", "int_list",
# "float_list" take no unit, the rest require one.
_SCHEMA = {
    "material": {
        "preset": "str", "kind": "str", "chi0": "float",
        "plasma_freq": "energy", "damping": "energy",
        "atom_density": "density", "mass_density": "mass_density",
        "exponent": "int", "amplitude": "float",
        "cyclotron_freq": "energy", "radius": "length",
    },
    "geometry": {
        "preset": "str", "kind": "str", "radius": "length",
        "half_length": "length", "tag_length": "length",
        "cross_section_radius": "length", "flag_width": "length",
        "flag_height": "length", "thickness": "length",
    },
    "thermal": {"environment": "temperature", "body": "temperature"},
    "quadrature": {
        "rel_tol": "float", "abs_tol": "float", "max_subdivisions": "int",
        "mc_samples": "int", "rng_seed": "int", "phi_switch": "float",
        "phi_terms": "int",
    },
    "scenario": {
        "mechanism": "str", "alpha0": "volume", "sigma_plate": "energy",
        "sigma_particle": "energy", "separation": "length",
        "velocity": "velocity", "exponents": "int_list", "mass": "mass",
        "tag_mass_density": "mass_density", "u0": "float", "drive": "str",
    },
    "sweep": {
        # start/stop keep their unit text and are parsed against the swept
        # variable's kind when the sweep grid is built
        "variable": "str", "start": "raw", "stop": "raw", "count": "int",
        "scale": "str", "b_over_a": "float_list", "key": "str",
        "values": "float_list", "target": "str",
    },
}
_KNOWN_SECTIONS = ("material.A", "material.B", "material.particle",
                   "geometry", "thermal", "quadrature", "scenario", "sweep")


def _section_family(section: str) -> str:
    return "material" if section.startswith("material.") else section


def _suggest(word: str, options) -> str:
    close = difflib.get_close_matches(word, options, n=1)
    return f"; did you mean {close[0]!r}?" if close else ""


@dataclass
class ScenarioConfig:
    """Fully validated configuration, canonical units throughout."""

    entries: dict = field(default_factory=dict)  # (section, key) -> value

    def get(self, section: str, key: str, default=None):
        return self.entries.get((section, key), default)

    def require(self, section: str, key: str):
        val = self.get(section, key)
        if val is None:
            raise ConfigError(f"[{section}] is missing required key {key!r}")
        return val

    def sections(self):
        return sorted({sec for sec, _ in self.entries})

    # --- canonical serialization (round-trips through parse_config) ---

    def to_text(self) -> str:
        lines = []
        for section in self.sections():
            lines.append(f"[{section}]")
            fam = _section_family(section)
            for (sec, key), val in sorted(self.entries.items()):
                if sec != section:
                    continue
                kind = _SCHEMA[fam][key]
                if kind in ("str", "raw"):
                    lines.append(f"{key} = {val}")
                elif kind == "int":
                    lines.append(f"{key} = {val}")
                elif kind == "float":
                    lines.append(f"{key} = {val!r}")
                elif kind == "int_list":
                    lines.append(f"{key} = {' '.join(str(v) for v in val)}")
                elif kind == "float_list":
                    lines.append(f"{key} = {' '.join(repr(v) for v in val)}")
                else:
                    lines.append(f"{key} = {val!r} {_CANONICAL_UNIT[kind]}")
            lines.append("")
        return "\n".join(lines)

    def config_hash(self) -> str:
        return "sha256:" + hashlib.sha256(self.to_text().encode()).hexdigest()

    def echo_lines(self):
        return [line for line in self.to_text().splitlines() if line]

    # --- typed builders -------------------------------------------------

    def material(self, slot: str):
        """Build the material in [material.<slot>]; presets win over kinds."""
        section = f"material.{slot}"
        preset = self.get(section, "preset")
        if preset is not None:
            return material_from_preset(preset)
        kind = self.require(section, "kind")
        if kind == "drude":
            return DrudeMetal(
                plasma_freq=self.require(section, "plasma_freq"),
                damping=self.require(section, "damping"),
                atom_density=self.get(section, "atom_density", 0.0),
                mass_density=self.get(section, "mass_density", 0.0))
        if kind == "dielectric":
            return Dielectric(chi0=self.require(section, "chi0"))
        if kind == "monomial":
            return MonomialAbsorber(exponent=self.require(section, "exponent"),
                                    amplitude=self.get(section, "amplitude", 1.0))
        if kind == "gyrotropic":
            return GyrotropicSphere(
                plasma_freq=self.require(section, "plasma_freq"),
                damping=self.require(section, "damping"),
                cyclotron_freq=self.require(section, "cyclotron_freq"),
                radius=self.require(section, "radius"))
        raise ConfigError(f"unknown material kind {kind!r}"
                          + _suggest(kind, ["drude", "dielectric", "monomial",
                                            "gyrotropic"]))

    def geometry(self):
        preset = self.get("geometry", "preset")
        if preset is not None:
            return geometry_from_preset(preset)
        kind = self.require("geometry", "kind")
        if kind == "janus":
            return JanusBall(radius=self.require("geometry", "radius"))
        if kind == "wrench":
            rc = self.require("geometry", "cross_section_radius")
            s = math.pi * rc**2
            return DualWrench(half_length=self.require("geometry", "half_length"),
                              tag_length=self.require("geometry", "tag_length"),
                              cross_section_a=s, cross_section_b=s)
        if kind == "flags":
            return DualFlag(half_length=self.require("geometry", "half_length"),
                            flag_width=self.require("geometry", "flag_width"),
                            flag_height=self.require("geometry", "flag_height"),
                            thickness=self.require("geometry", "thickness"))
        raise ConfigError(f"unknown geometry kind {kind!r}"
                          + _suggest(kind, ["janus", "wrench", "flags"]))

    def thermal(self) -> ThermalPair:
        return ThermalPair(self.require("thermal", "environment"),
                           self.require("thermal", "body"))

    def sweep_bound(self, key: str, kind: str, default: float) -> float:
        """Parse [sweep] start/stop against the swept variable's unit kind."""
        raw = self.get("sweep", key)
        if raw is None:
            return default
        toks = str(raw).split()
        if len(toks) == 1:
            return _parse_scalar(kind, toks[0], None, 0, 0)
        if len(toks) == 2:
            return _parse_scalar(kind, toks[0], toks[1], 0, 0)
        raise ConfigError(f"[sweep] {key} must be 'value [unit]'")

    def quadrature(self) -> QuadratureSpec:
        pol = PhiEvalPolicy(
            switch_threshold=self.get("quadrature", "phi_switch", 0.5),
            series_terms=self.get("quadrature", "phi_terms", 12))
        return QuadratureSpec(
            rel_tol=self.get("quadrature", "rel_tol", 1e-6),
            abs_tol=self.get("quadrature", "abs_tol", 1e-30),
            max_subdivisions=self.get("quadrature", "max_subdivisions", 4000),
            phi_policy=pol,
            mc_samples=self.get("quadrature", "mc_samples", 200_000),
            rng_seed=self.get("quadrature", "rng_seed", 20260809))


def _parse_scalar(kind: str, value_tok: str, unit_tok: str | None,
                  line: int, col: int):
    if kind == "str":
        if unit_tok is not None:
            raise ConfigError(f"string value takes no unit", line, col)
        return value_tok
    if kind in ("float", "int"):
        if unit_tok is not None:
            raise ConfigError("dimensionless value takes no unit", line, col)
        try:
            return int(value_tok) if kind == "int" else float(value_tok)
        except ValueError:
            raise ConfigError(f"bad {kind} literal {value_tok!r}", line, col)
    units = _UNIT_TABLE[kind]
    if unit_tok is None:
        raise ConfigError(
            f"{kind} value requires a unit suffix "
            f"({'/'.join(units)})", line, col)
    if unit_tok not in units:
        raise ConfigError(f"unknown {kind} unit {unit_tok!r}"
                          + _suggest(unit_tok, units), line, col)
    try:
        return float(value_tok) * units[unit_tok]
    except ValueError:
        raise ConfigError(f"bad numeric literal {value_tok!r}", line, col)


def parse_config(text: str) -> ScenarioConfig:
    """Parse and validate a configuration document.

    Raises :class:`ConfigError` naming section, key, line and column for
    unknown keys, missing units, and type mismatches.
    """
    cfg = ScenarioConfig()
    section = None
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        stripped = line.strip()
        col = raw.index(stripped[0]) + 1
        if stripped.startswith("["):
            if not stripped.endswith("]"):
                raise ConfigError("unterminated section header", ln, col)
            name = stripped[1:-1].strip()
            if name not in _KNOWN_SECTIONS:
                raise ConfigError(f"unknown section [{name}]"
                                  + _suggest(name, _KNOWN_SECTIONS), ln, col)
            section = name
            continue
        if section is None:
            raise ConfigError("key outside of any [section]", ln, col)
        if "=" not in stripped:
            raise ConfigError("expected 'key = value [unit]'", ln, col)
        key, _, rhs = stripped.partition("=")
        key = key.strip()
        rhs = rhs.strip()
        schema = _SCHEMA[_section_family(section)]
        if key not in schema:
            raise ConfigError(
                f"unknown key {key!r} in [{section}]"
                + _suggest(key, schema.keys()), ln, col)
        if not rhs:
            raise ConfigError(f"{key!r} has no value", ln, col)
        kind = schema[key]
        val_col = raw.index(rhs[0], raw.index("=")) + 1
        toks = rhs.split()
        if kind == "raw":
            value = rhs
        elif kind == "int_list":
            try:
                value = tuple(int(t) for t in toks)
            except ValueError:
                raise ConfigError("expected a list of integers", ln, val_col)
        elif kind == "float_list":
            try:
                value = tuple(float(t) for t in toks)
            except ValueError:
                raise ConfigError("expected a list of numbers", ln, val_col)
        elif kind == "str":
            value = rhs
        else:
            if len(toks) == 1:
                value = _parse_scalar(kind, toks[0], None, ln, val_col)
            elif len(toks) == 2:
                value = _parse_scalar(kind, toks[0], toks[1], ln, val_col)
            else:
                raise ConfigError("expected 'value [unit]'", ln, val_col)
        if (section, key) in cfg.entries:
            raise ConfigError(f"duplicate key {key!r} in [{section}]", ln, col)
        cfg.entries[(section, key)] = value
    return cfg
