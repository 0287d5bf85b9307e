"""Shipped lattices and the JSON document format for user-supplied ones.

A document looks like::

    {"gram": [[0, 1], [1, 0]], "ns_basis": [[1, 1]], "isotropic_hint": [1, 0]}

Entries are integers or "p/q" strings; ns_basis and isotropic_hint are optional.
"""

from dataclasses import dataclass
from importlib import resources
import json

import jsonschema

from .errors import ConfigError
from .linalg import frac
from .quadratic_space import QuadraticSpace, split_ns

PRESET_NAMES = ("u", "u-m2", "u2-m2", "u2-m2-e", "k3n2")


@dataclass(frozen=True, eq=False)
class LatticeConfig:
    name: str
    space: QuadraticSpace
    ns_basis: tuple
    isotropic_hint: tuple = None
    large: bool = False
    description: str = ""

    def split(self):
        return split_ns(self.space, self.ns_basis)


def _rationals(rows, what):
    try:
        return [[frac(x) for x in row] for row in rows]
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"{what}: entries must be integers or 'p/q' strings ({exc})") from exc


def from_document(doc, name="custom"):
    if not isinstance(doc, dict) or "gram" not in doc:
        raise ConfigError("lattice document needs a 'gram' field")
    gram = _rationals(doc["gram"], "gram")
    space = QuadraticSpace(gram, name=name)
    ns = tuple(tuple(r) for r in _rationals(doc.get("ns_basis") or [], "ns_basis"))
    for v in ns:
        if len(v) != space.dim:
            raise ConfigError("ns_basis vectors must have length dim")
    hint = doc.get("isotropic_hint")
    if hint is not None:
        hint = tuple(_rationals([hint], "isotropic_hint")[0])
        if len(hint) != space.dim:
            raise ConfigError("isotropic_hint must have length dim")
    return LatticeConfig(name, space, ns, hint, bool(doc.get("large", False)),
                         doc.get("description", ""))


def load_preset(name):
    if name not in PRESET_NAMES:
        raise ConfigError(f"unknown preset {name!r}; choose from {', '.join(PRESET_NAMES)}")
    text = resources.files("hkcoiso").joinpath("presets").joinpath(f"{name}.json").read_text()
    return from_document(json.loads(text), name=name)


def load_file(path):
    try:
        with open(path) as f:
            doc = json.load(f)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read lattice file {path}: {exc}") from exc
    schema = json.loads(resources.files("hkcoiso").joinpath("schemas").joinpath("lattice.json").read_text())
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as exc:
        raise ConfigError(f"{path}: {exc.message}") from exc
    return from_document(doc, name=str(path))
