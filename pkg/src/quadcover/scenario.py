"""Scenario JSON files.

Example::

    {
      "quad": [[-100, -100], [200, -300], [1500, 250], [50, 400]],
      "m": 4,
      "frequency_hz": 2e9,
      "environment": "suburban",
      "packing_file": "optional/path.txt",
      "offset_policy": "toward-centroid",
      "homography_decimals": 4
    }

``environment`` is a preset name or an object with xi_los, xi_nlos, eta and
kappa. ``packing_file`` is resolved relative to the scenario file.
"""
from __future__ import annotations

import json
from pathlib import Path

import jsonschema

from .channel import PRESETS, Environment
from .errors import QuadCoverError
from .geometry import convexity_check
from .packing import load_packing_file
from .planner import OFFSET_POLICIES, Scenario


class ScenarioError(QuadCoverError, ValueError):
    pass


_NUMBER = {"type": "number"}

SCHEMA = {
    "type": "object",
    "required": ["quad", "m", "frequency_hz", "environment"],
    "additionalProperties": False,
    "properties": {
        "quad": {
            "type": "array",
            "minItems": 4,
            "maxItems": 4,
            "items": {"type": "array", "minItems": 2, "maxItems": 2, "items": _NUMBER},
        },
        "m": {"type": "integer", "minimum": 1},
        "frequency_hz": {"type": "number", "exclusiveMinimum": 0},
        "environment": {
            "oneOf": [
                {"type": "string", "enum": sorted(PRESETS)},
                {
                    "type": "object",
                    "required": ["xi_los", "xi_nlos", "eta", "kappa"],
                    "additionalProperties": False,
                    "properties": {
                        "xi_los": _NUMBER,
                        "xi_nlos": _NUMBER,
                        "eta": _NUMBER,
                        "kappa": _NUMBER,
                        "name": {"type": "string"},
                    },
                },
            ]
        },
        "packing_file": {"type": "string"},
        "offset_policy": {"type": "string", "enum": list(OFFSET_POLICIES)},
        "homography_decimals": {"type": ["integer", "null"], "minimum": 1, "maximum": 15},
    },
}


def environment_from(spec) -> Environment:
    if isinstance(spec, str):
        return PRESETS[spec]
    return Environment(
        float(spec["xi_los"]), float(spec["xi_nlos"]), float(spec["eta"]), float(spec["kappa"]),
        spec.get("name", "custom"),
    )


def scenario_from_dict(doc: dict, base_dir=".", offset_policy=None,
                       validate_packing: bool = True) -> Scenario:
    try:
        jsonschema.validate(doc, SCHEMA)
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise ScenarioError(f"{where}: {exc.message}") from None
    try:
        env = environment_from(doc["environment"])
        quad = convexity_check(doc["quad"])
        packing = None
        if "packing_file" in doc:
            packing = load_packing_file(Path(base_dir) / doc["packing_file"], validate=validate_packing)
        return Scenario(
            quad=quad,
            m=doc["m"],
            f=float(doc["frequency_hz"]),
            env=env,
            packing=packing,
            offset_policy=offset_policy or doc.get("offset_policy", "toward-centroid"),
            homography_decimals=doc.get("homography_decimals"),
        )
    except QuadCoverError:
        raise
    except ValueError as exc:
        raise ScenarioError(str(exc)) from None


def load_scenario(path, offset_policy=None, validate_packing: bool = True) -> Scenario:
    """Parse and validate a scenario file. I/O errors propagate as OSError."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"{path}: invalid JSON: {exc}") from None
    return scenario_from_dict(doc, path.parent, offset_policy, validate_packing)


def case_study_scenario(m: int = 4, environment: str = "suburban", decimals=4) -> Scenario:
    """The case-study quadrilateral at 2 GHz."""
    return scenario_from_dict(
        {
            "quad": [[-100, -100], [200, -300], [1500, 250], [50, 400]],
            "m": m,
            "frequency_hz": 2e9,
            "environment": environment,
            "homography_decimals": decimals,
        }
    )
