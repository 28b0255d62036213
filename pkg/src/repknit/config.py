"""Declarative job configuration.

A job file is JSON with a quiver block and optional parameter blocks:

    {
      "quiver": {
        "type": "A4",
        "vertices": ["1", "2", "3", "4"],
        "arrows": [["1", "2"], ["2", "3"], ["1", "4"]],
        "height": {"1": 2, "2": 1, "3": 0, "4": 1}
      },
      "window": {"levels": [-40, 40], "margin": 10},
      "dimension_vector": {"4[0]": 1, "1[1]": 1, "4[1]": 1},
      "sigma": [["1", 2], ["2", -1]],
      "monomial": {"Y[1,2]": 1},
      "display_level_shift": 0
    }

Arrows may carry an optional third entry naming the arrow; single letters
are assigned in input order otherwise.  Parse errors name the offending
field.
"""

import json

from .dimvec import DimVector, parse_rep_vertex
from .errors import ConfigError
from .quiver import DynkinQuiver, Slot, validate_height_function


class JobConfig:
    def __init__(self, quiver, xi, levels, margin, dimension_vector=None,
                 sigma=None, monomial=None, display_level_shift=0):
        self.quiver = quiver
        self.xi = xi
        self.levels = levels
        self.margin = margin
        self.dimension_vector = dimension_vector
        self.sigma = sigma
        self.monomial = monomial
        self.display_level_shift = display_level_shift


def _need(mapping, field, context):
    if field not in mapping:
        raise ConfigError(f"missing field {context}.{field}")
    return mapping[field]


def load_config(path):
    try:
        with open(path) as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}")
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}")
    return parse_config(raw)


def parse_config(raw):
    if not isinstance(raw, dict):
        raise ConfigError("top level must be an object")
    qraw = _need(raw, "quiver", "$")
    for field in ("type", "vertices", "arrows", "height"):
        _need(qraw, field, "quiver")
    if not isinstance(qraw["vertices"], list) or not all(
            isinstance(v, str) for v in qraw["vertices"]):
        raise ConfigError("quiver.vertices must be a list of strings")
    arrows = []
    for k, a in enumerate(qraw["arrows"]):
        if not isinstance(a, list) or len(a) not in (2, 3):
            raise ConfigError(f"quiver.arrows[{k}] must be [source, target] "
                              "with an optional label")
        arrows.append(tuple(a))
    try:
        quiver = DynkinQuiver(qraw["type"], qraw["vertices"], arrows)
    except ValueError as exc:
        raise ConfigError(f"quiver: {exc}")
    height = qraw["height"]
    if not isinstance(height, dict):
        raise ConfigError("quiver.height must be an object")
    try:
        xi = {v: int(height[v]) for v in quiver.vertices}
    except KeyError as exc:
        raise ConfigError(f"quiver.height is missing vertex {exc.args[0]!r}")
    validate_height_function(quiver, xi)

    window = raw.get("window", {})
    levels = window.get("levels")
    if levels is not None:
        if (not isinstance(levels, list) or len(levels) != 2
                or not all(isinstance(x, int) for x in levels)):
            raise ConfigError("window.levels must be [lo, hi]")
        levels = tuple(levels)
    margin = window.get("margin")
    if margin is not None and (not isinstance(margin, int) or margin < 2):
        raise ConfigError("window.margin must be an integer >= 2")

    d = None
    if "dimension_vector" in raw:
        entries = {}
        for key, value in raw["dimension_vector"].items():
            try:
                v = parse_rep_vertex(key)
            except ValueError as exc:
                raise ConfigError(f"dimension_vector key {key!r}: {exc}")
            if v.base not in quiver._index:
                raise ConfigError(f"dimension_vector key {key!r} uses unknown vertex")
            if not isinstance(value, int) or value < 0:
                raise ConfigError(f"dimension_vector[{key!r}] must be a nonnegative int")
            entries[v] = value
        d = DimVector(entries)

    sigma = None
    if "sigma" in raw:
        sigma = []
        for k, pair in enumerate(raw["sigma"]):
            if not isinstance(pair, list) or len(pair) != 2:
                raise ConfigError(f"sigma[{k}] must be [column, level]")
            col, level = pair
            if col not in quiver._index:
                raise ConfigError(f"sigma[{k}] uses unknown vertex {col!r}")
            if not isinstance(level, int):
                raise ConfigError(f"sigma[{k}] level must be an integer")
            sigma.append(Slot(col, level))

    monomial = None
    if "monomial" in raw:
        monomial = {}
        for key, value in raw["monomial"].items():
            slot = _parse_variable(key, quiver)
            if not isinstance(value, int):
                raise ConfigError(f"monomial[{key!r}] must be an integer exponent")
            monomial[slot] = value

    shift = raw.get("display_level_shift", 0)
    if not isinstance(shift, int):
        raise ConfigError("display_level_shift must be an integer")

    return JobConfig(quiver, xi, levels, margin, d, sigma, monomial, shift)


def _parse_variable(text, quiver):
    text = text.strip()
    if not (text.startswith("Y[") and text.endswith("]")):
        raise ConfigError(f"monomial key {text!r} must look like Y[column,level]")
    body = text[2:-1]
    parts = body.rsplit(",", 1)
    if len(parts) != 2:
        raise ConfigError(f"monomial key {text!r} must look like Y[column,level]")
    col = parts[0].strip()
    if col not in quiver._index:
        raise ConfigError(f"monomial key {text!r} uses unknown vertex {col!r}")
    try:
        level = int(parts[1])
    except ValueError:
        raise ConfigError(f"monomial key {text!r} has a non-integer level")
    return Slot(col, level)
