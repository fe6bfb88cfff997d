"""Run configuration: JSON documents validated against a strict schema.

Validation is exhaustive: every violation in the document is reported in
one error, with its JSON path, rather than stopping at the first.
Unknown keys are rejected everywhere.
"""

from __future__ import annotations

import copy
import json
from dataclasses import dataclass
from pathlib import Path

import jsonschema

EXPERIMENTS = ("sweep", "intersection", "highway_cluster", "perturbation", "ppp")

_EMIT_SCHEMA = {
    "type": "object",
    "properties": {
        "csv": {"type": "boolean"},
        "plot_data": {"type": "boolean"},
    },
    "additionalProperties": False,
}

_TOP_SCHEMA = {
    "type": "object",
    "properties": {
        "name": {"type": "string", "pattern": r"^[A-Za-z0-9_.-]+$"},
        "experiment": {"enum": list(EXPERIMENTS)},
        "params": {"type": "object"},
        "seed": {"type": "integer", "minimum": 0},
        "out_dir": {"type": ["string", "null"]},
        "emit": _EMIT_SCHEMA,
    },
    "required": ["experiment"],
    "additionalProperties": False,
}

# Scenario fields a sweep base (or series override) may set.  Values are
# SI / linear except the *_db fields, which are converted on load.
_SCENARIO_FIELDS = {
    "highway": {
        "r": {"type": "number", "exclusiveMinimum": 0},
        "v": {"type": "number", "minimum": 0},
        "tau": {"type": "number", "minimum": 0},
        "theta": {"type": "number"},
        "alpha": {"type": "number", "exclusiveMinimum": 0},
        "p_over_n0_db": {"type": "number"},
    },
    "urban_fixed": {
        "lane_width_w": {"type": "number", "exclusiveMinimum": 0},
        "v_limit": {"type": "number", "minimum": 0},
        "t": {"type": "number", "minimum": 0},
        "r0": {"type": "number", "exclusiveMinimum": 0},
        "alpha": {"type": "number", "exclusiveMinimum": 0},
        "p_over_n0_db": {"type": "number"},
    },
    "relay": {
        "p_a": {"type": "number", "exclusiveMinimum": 0},
        "p_r": {"type": "number", "minimum": 0},
        "h_ab_sq": {"type": "number", "minimum": 0},
        "h_rb_sq": {"type": "number", "minimum": 0},
        "h_ae_sq": {"type": "number", "minimum": 0},
        "h_re_sq": {"type": "number", "minimum": 0},
        "sigma_b_sq": {"type": "number", "exclusiveMinimum": 0},
        "sigma_e_sq": {"type": "number", "exclusiveMinimum": 0},
        "bandwidth_hz": {"type": "number", "exclusiveMinimum": 0},
    },
}
_SCENARIO_FIELDS["urban_moving"] = _SCENARIO_FIELDS["urban_fixed"]

# Fields that must be pinned (by base or series overrides) for a sweep to
# be evaluable; the swept parameter itself is exempt.
_SWEEP_REQUIRED = {
    "highway": ("r", "v", "tau", "alpha", "p_over_n0_db"),
    "urban_fixed": ("lane_width_w", "v_limit", "t", "r0", "alpha", "p_over_n0_db"),
    "urban_moving": ("lane_width_w", "v_limit", "t", "r0", "alpha", "p_over_n0_db"),
    "relay": ("p_a", "p_r", "h_ab_sq", "h_rb_sq", "h_ae_sq", "h_re_sq"),
}

_PARAMS_SCHEMAS = {
    "sweep": {
        "type": "object",
        "properties": {
            "kind": {"enum": list(_SWEEP_REQUIRED)},
            "base": {"type": "object"},
            "param": {"type": "string", "minLength": 1},
            "grid": {"type": "array", "minItems": 1, "items": {"type": "number"}},
            "unit": {"enum": ["si", "kmh", "db", "ms"]},
            "param_label": {"type": "string", "minLength": 1},
            "series": {
                "type": "array",
                "minItems": 1,
                "items": {
                    "type": "object",
                    "properties": {
                        "label": {"type": "string", "minLength": 1},
                        "overrides": {"type": "object"},
                    },
                    "required": ["label"],
                    "additionalProperties": False,
                },
            },
        },
        "required": ["kind", "base", "param", "grid"],
        "additionalProperties": False,
    },
    "intersection": {
        "type": "object",
        "properties": {
            "case": {"type": "integer", "minimum": 1, "maximum": 6},
            "dt_s": {"type": "number", "exclusiveMinimum": 0},
            "speed_kmh": {"type": "number", "exclusiveMinimum": 0},
            "alpha": {"type": "number", "exclusiveMinimum": 0},
            "p_over_n0_db": {"type": "number"},
            "lane_offset_m": {"type": "number", "exclusiveMinimum": 0},
            "host_span": {
                "type": "array",
                "items": {"type": "number"},
                "minItems": 2,
                "maxItems": 2,
            },
            "target_span": {
                "type": "array",
                "items": {"type": "number"},
                "minItems": 2,
                "maxItems": 2,
            },
        },
        "required": ["case"],
        "additionalProperties": False,
    },
    "highway_cluster": {
        "type": "object",
        "properties": {
            "n_nodes": {"type": "integer", "minimum": 2},
            "n_sources": {"type": "integer", "minimum": 1},
            "lanes": {"type": "integer", "minimum": 1},
            "lane_width_m": {"type": "number", "exclusiveMinimum": 0},
            "length_m": {"type": "number", "exclusiveMinimum": 0},
            "duration_s": {"type": "number", "exclusiveMinimum": 0},
            "dt_s": {"type": "number", "exclusiveMinimum": 0},
            "speed_redraw_period_s": {"type": "number", "exclusiveMinimum": 0},
            "max_speed_kmh": {"type": "number", "exclusiveMinimum": 0},
            "alpha": {"type": "number", "exclusiveMinimum": 0},
            "p_over_n0_db": {"type": "number"},
            "eavesdropper_range_m": {"type": "number", "exclusiveMinimum": 0},
            "obu_range_m": {"type": "number", "exclusiveMinimum": 0},
        },
        "additionalProperties": False,
    },
    "ppp": {
        "type": "object",
        "properties": {
            "lam": {"type": "number", "minimum": 0},
            "region_area_m2": {"type": "number", "exclusiveMinimum": 0},
            "ref_area_m2": {"type": "number", "exclusiveMinimum": 0},
            "alpha": {"type": "number", "exclusiveMinimum": 0},
            "p_over_n0_db": {"type": "number"},
            "mode": {"enum": ["distance_curve", "field_dump"]},
            "d_fracs": {
                "type": "array",
                "minItems": 1,
                "items": {"type": "number", "exclusiveMinimum": 0},
            },
            "target_distance_m": {"type": "number", "exclusiveMinimum": 0},
        },
        "additionalProperties": False,
    },
}
# The perturbation experiment takes every highway_cluster knob plus the
# shift magnitude.
_PARAMS_SCHEMAS["perturbation"] = copy.deepcopy(_PARAMS_SCHEMAS["highway_cluster"])
_PARAMS_SCHEMAS["perturbation"]["properties"].update(
    {
        "delta_m": {"type": "number"},
        "allow_custom_delta": {"type": "boolean"},
    }
)

_HIGHWAY_CLUSTER_DEFAULTS = {
    "n_nodes": 25,
    "n_sources": 2,
    "lanes": 6,
    "lane_width_m": 10.0,
    "length_m": 2500.0,
    "duration_s": 100.0,
    "dt_s": 0.1,
    "speed_redraw_period_s": 1.0,
    "max_speed_kmh": 120.0,
    "alpha": 1.4,
    "p_over_n0_db": 70.0,
    "eavesdropper_range_m": 1000.0,
    "obu_range_m": 2500.0,
}

PARAM_DEFAULTS: dict[str, dict] = {
    "sweep": {"unit": "si", "series": [{"label": "cs", "overrides": {}}]},
    "intersection": {
        "dt_s": 0.1,
        "speed_kmh": 35.0,
        "alpha": 1.4,
        "p_over_n0_db": 70.0,
        "lane_offset_m": 3.0,
        "host_span": [-60.0, 40.0],
        "target_span": [-20.0, 20.0],
    },
    "highway_cluster": dict(_HIGHWAY_CLUSTER_DEFAULTS),
    "perturbation": {
        **_HIGHWAY_CLUSTER_DEFAULTS,
        "delta_m": 5.0,
        "allow_custom_delta": False,
    },
    "ppp": {
        "lam": 6.0,
        "region_area_m2": 1000.0,
        "ref_area_m2": 1000.0,
        "alpha": 1.4,
        "p_over_n0_db": 70.0,
        "mode": "distance_curve",
        "d_fracs": [0.1, 0.3, 0.5],
        "target_distance_m": 10.0,
    },
}

TOP_DEFAULTS = {
    "seed": 0,
    "out_dir": None,
    "emit": {"csv": True, "plot_data": False},
}


class ConfigError(ValueError):
    """Carries the full list of config violations."""

    def __init__(self, errors: list[str]):
        self.errors = list(errors)
        super().__init__(
            "invalid config:\n" + "\n".join(f"  - {e}" for e in self.errors)
        )


@dataclass(frozen=True)
class RunConfig:
    """A validated run: experiment, defaulted params, seed, output routing.

    `canonical` is the scientific identity of the run (name, experiment,
    params, seed) and is what the provenance hash covers; output routing
    deliberately stays outside it.
    """

    name: str
    experiment: str
    params: dict
    seed: int
    out_dir: str | None
    emit_csv: bool
    emit_plot_data: bool

    @property
    def canonical(self) -> dict:
        return {
            "name": self.name,
            "experiment": self.experiment,
            "params": self.params,
            "seed": self.seed,
        }


def _schema_errors(instance, schema, prefix: str) -> list[str]:
    validator = jsonschema.Draft202012Validator(schema)
    out = []
    for err in sorted(validator.iter_errors(instance), key=lambda e: list(e.absolute_path)):
        path = prefix + "".join(
            f"[{p}]" if isinstance(p, int) else f".{p}" for p in err.absolute_path
        )
        out.append(f"{path}: {err.message}")
    return out


def _scenario_field_errors(doc: dict, kind: str, prefix: str) -> list[str]:
    schema = {
        "type": "object",
        "properties": _SCENARIO_FIELDS[kind],
        "additionalProperties": False,
    }
    return _schema_errors(doc, schema, prefix)


def validate_config(doc) -> list[str]:
    """Return every violation in the document; an empty list means valid."""
    if not isinstance(doc, dict):
        return ["$: config must be a JSON object"]
    errors = _schema_errors(doc, _TOP_SCHEMA, "$")
    experiment = doc.get("experiment")
    params = doc.get("params", {})
    if experiment in EXPERIMENTS and isinstance(params, dict):
        errors += _schema_errors(params, _PARAMS_SCHEMAS[experiment], "$.params")
        if experiment == "sweep":
            errors += _sweep_extra_errors(params)
        if experiment in ("highway_cluster", "perturbation"):
            merged = {**PARAM_DEFAULTS[experiment], **params}
            if merged["n_sources"] >= merged["n_nodes"]:
                errors.append("$.params.n_sources: must leave at least one non-source node")
        if experiment == "perturbation":
            delta = {**PARAM_DEFAULTS["perturbation"], **params}["delta_m"]
            if delta == 0:
                errors.append("$.params.delta_m: must be non-zero")
        if experiment == "intersection":
            for span_key in ("host_span", "target_span"):
                span = params.get(span_key)
                if isinstance(span, list) and len(span) == 2 and span[1] <= span[0]:
                    errors.append(f"$.params.{span_key}: must be strictly increasing")
    return errors


def _sweep_extra_errors(params: dict) -> list[str]:
    errors: list[str] = []
    kind = params.get("kind")
    if kind not in _SWEEP_REQUIRED:
        return errors
    base = params.get("base")
    param = params.get("param")
    if isinstance(base, dict):
        errors += _scenario_field_errors(base, kind, "$.params.base")
        for name in _SWEEP_REQUIRED[kind]:
            if name != param and name not in base:
                errors.append(
                    f"$.params.base.{name}: required for kind {kind!r} unless swept"
                )
    if isinstance(param, str) and param not in _SCENARIO_FIELDS[kind]:
        errors.append(
            f"$.params.param: {param!r} is not a field of kind {kind!r}"
        )
    grid = params.get("grid")
    if isinstance(grid, list) and len(grid) > 1 and all(
        isinstance(g, (int, float)) and not isinstance(g, bool) for g in grid
    ):
        diffs = [b - a for a, b in zip(grid, grid[1:])]
        if not (all(d > 0 for d in diffs) or all(d < 0 for d in diffs)):
            errors.append("$.params.grid: must be strictly monotone")
    for i, entry in enumerate(params.get("series") or []):
        overrides = entry.get("overrides") if isinstance(entry, dict) else None
        if isinstance(overrides, dict):
            errors += _scenario_field_errors(
                overrides, kind, f"$.params.series[{i}].overrides"
            )
    return errors


def build_config(doc: dict) -> RunConfig:
    """Validate a config document and fill documented defaults."""
    errors = validate_config(doc)
    if errors:
        raise ConfigError(errors)
    experiment = doc["experiment"]
    params = {**PARAM_DEFAULTS[experiment], **copy.deepcopy(doc.get("params", {}))}
    emit = {**TOP_DEFAULTS["emit"], **doc.get("emit", {})}
    return RunConfig(
        name=doc.get("name", experiment),
        experiment=experiment,
        params=params,
        seed=doc.get("seed", TOP_DEFAULTS["seed"]),
        out_dir=doc.get("out_dir", TOP_DEFAULTS["out_dir"]),
        emit_csv=emit["csv"],
        emit_plot_data=emit["plot_data"],
    )


def load_config(path: str | Path) -> RunConfig:
    """Read, validate, and default-fill a JSON config file."""
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ConfigError([f"$: cannot read {path}: {exc}"]) from exc
    except json.JSONDecodeError as exc:
        raise ConfigError([f"$: not valid JSON: {exc}"]) from exc
    return build_config(doc)
