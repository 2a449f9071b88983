"""Scenario files: the JSON schema shared by the CLI and the HTTP service.

A scenario bundles a scatterer set, a mode spectrum, a sampling grid, an
observation time, and an optional analysis window.
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from typing import Optional

import jsonschema

from .errors import InvariantError, SchemaError
from .retardation_types import AnalysisWindow
from .scattering import DeltaScatterer, ScattererSet
from .wavefield import Grid, SpectrumSpec

_number = {"type": "number"}

SCENARIO_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["scatterers", "coupling_scale", "spectrum", "grid"],
    "properties": {
        "scatterers": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["x", "alpha"],
                "properties": {"x": _number, "alpha": _number},
            },
        },
        "coupling_scale": {"type": "number", "minimum": 0},
        "spectrum": {
            "type": "object",
            "additionalProperties": False,
            "required": ["k0", "dk", "n_waves"],
            "properties": {
                "k0": _number,
                "dk": {"type": "number", "exclusiveMinimum": 0},
                "n_waves": {"type": "integer", "minimum": 1},
                "amplitudes": {"type": "array", "items": _number},
                "phases": {"type": "array", "items": _number},
            },
        },
        "grid": {
            "type": "object",
            "additionalProperties": False,
            "required": ["x_min", "x_max", "n_points"],
            "properties": {
                "x_min": _number,
                "x_max": _number,
                "n_points": {"type": "integer", "minimum": 2},
            },
        },
        "t": _number,
        "window": {
            "type": "object",
            "additionalProperties": False,
            "required": ["x_lo", "x_hi", "max_lag"],
            "properties": {
                "x_lo": _number,
                "x_hi": _number,
                "max_lag": {"type": "number", "exclusiveMinimum": 0},
            },
        },
    },
}


@dataclass(frozen=True)
class Scenario:
    set: ScattererSet
    spectrum: SpectrumSpec
    grid: Grid
    t: float = 0.0
    window: Optional[AnalysisWindow] = None

    def __post_init__(self):
        if self.window is not None:
            if (
                self.window.x_lo < self.grid.x_min
                or self.window.x_hi > self.grid.x_max
            ):
                raise InvariantError("grid does not cover the analysis window")


def parse_scenario(data: dict) -> Scenario:
    """Validate a scenario dict against the schema and build the Scenario."""
    try:
        jsonschema.validate(data, SCENARIO_SCHEMA)
    except jsonschema.ValidationError as e:
        pointer = "/" + "/".join(str(p) for p in e.absolute_path)
        raise SchemaError("%s at %s" % (e.message, pointer)) from None
    sset = ScattererSet(
        scatterers=tuple(
            DeltaScatterer(position=s["x"], strength=s["alpha"])
            for s in data["scatterers"]
        ),
        coupling_scale=data["coupling_scale"],
    )
    sp = data["spectrum"]
    spectrum = SpectrumSpec(
        k0=sp["k0"],
        dk=sp["dk"],
        n_waves=sp["n_waves"],
        amplitudes=tuple(sp["amplitudes"]) if "amplitudes" in sp else None,
        phases=tuple(sp["phases"]) if "phases" in sp else None,
    )
    g = data["grid"]
    grid = Grid(x_min=g["x_min"], x_max=g["x_max"], n_points=g["n_points"])
    window = None
    if "window" in data:
        w = data["window"]
        window = AnalysisWindow(x_lo=w["x_lo"], x_hi=w["x_hi"], max_lag=w["max_lag"])
    return Scenario(
        set=sset, spectrum=spectrum, grid=grid, t=data.get("t", 0.0), window=window
    )


def scenario_to_dict(s: Scenario) -> dict:
    out = {
        "scatterers": [
            {"x": sc.position, "alpha": sc.strength} for sc in s.set.scatterers
        ],
        "coupling_scale": s.set.coupling_scale,
        "spectrum": {
            "k0": s.spectrum.k0,
            "dk": s.spectrum.dk,
            "n_waves": s.spectrum.n_waves,
        },
        "grid": {
            "x_min": s.grid.x_min,
            "x_max": s.grid.x_max,
            "n_points": s.grid.n_points,
        },
        "t": s.t,
    }
    if s.spectrum.amplitudes is not None:
        out["spectrum"]["amplitudes"] = list(s.spectrum.amplitudes)
    if s.spectrum.phases is not None:
        out["spectrum"]["phases"] = list(s.spectrum.phases)
    if s.window is not None:
        out["window"] = {
            "x_lo": s.window.x_lo,
            "x_hi": s.window.x_hi,
            "max_lag": s.window.max_lag,
        }
    return out


def load_scenario(path: str) -> Scenario:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as e:
            raise SchemaError("invalid JSON: %s" % e) from None
    return parse_scenario(data)


def save_scenario(s: Scenario, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(scenario_to_dict(s), fh, indent=2)
        fh.write("\n")


def default_scenario() -> Scenario:
    """Five unit-strength deltas spanning 4 length units, 8 modes around k = 1."""
    return Scenario(
        set=ScattererSet(
            scatterers=tuple(
                DeltaScatterer(position=float(x), strength=1.0)
                for x in (-2, -1, 0, 1, 2)
            ),
            coupling_scale=1.0,
        ),
        spectrum=SpectrumSpec(k0=1.0, dk=0.25, n_waves=8),
        grid=Grid(x_min=-60.0, x_max=60.0, n_points=4001),
        t=0.0,
    )


@dataclass(frozen=True)
class ExportTable:
    """Rectangular table of real/complex cells for CSV or JSON export."""

    columns: tuple
    rows: tuple

    def __post_init__(self):
        for row in self.rows:
            if len(row) != len(self.columns):
                raise InvariantError("export table rows must match column count")

    def _expanded(self):
        """Complex columns become two real columns: name_re, name_im."""
        is_complex = [
            any(isinstance(row[j], complex) for row in self.rows)
            for j in range(len(self.columns))
        ]
        header = []
        for name, cplx in zip(self.columns, is_complex):
            header.extend([name + "_re", name + "_im"] if cplx else [name])
        rows = []
        for row in self.rows:
            out = []
            for cell, cplx in zip(row, is_complex):
                if cplx:
                    c = complex(cell)
                    out.extend([c.real, c.imag])
                else:
                    out.append(float(cell))
            rows.append(out)
        return header, rows

    def to_csv(self) -> str:
        header, rows = self._expanded()
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow(["%.15g" % v for v in row])
        return buf.getvalue()

    def to_json(self) -> str:
        def cell(v):
            if isinstance(v, complex):
                return {"re": v.real, "im": v.imag}
            v = float(v)
            if not math.isfinite(v):
                return None
            return v

        return json.dumps(
            {
                "columns": list(self.columns),
                "rows": [[cell(v) for v in row] for row in self.rows],
            }
        )
