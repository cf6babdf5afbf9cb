"""Enumeration bounds, loadable from a key=value file and overridable on the command line."""

import configparser
from dataclasses import dataclass, fields, replace


@dataclass(frozen=True)
class Bounds:
    rooted_trees: int = 7
    whole_poset: int = 6
    uniformity: int = 5
    el_whole: int = 4
    el_interval: int = 5
    colors: int = 3
    cohomology: int = 5
    full_cohomology: int = 4
    trees: int = 7
    stirling: int = 6
    symfunc_degree: int = 7
    plethysm_degree: int = 6

    def override(self, **changes):
        known = {f.name for f in fields(self)}
        unknown = set(changes) - known
        if unknown:
            raise KeyError(f"unknown bound(s): {', '.join(sorted(unknown))}")
        return replace(self, **{k: int(v) for k, v in changes.items()})

    def check(self, key, value):
        limit = getattr(self, key)
        if value > limit:
            raise ValueError(f"{key} = {value} exceeds the configured limit {limit}")


def parse_assignments(items):
    out = {}
    for item in items:
        if "=" not in item:
            raise ValueError(f"expected KEY=VALUE, got {item!r}")
        key, value = item.split("=", 1)
        out[key.strip().replace("-", "_")] = value.strip()
    return out


def load_bounds(path=None, overrides=()):
    """Defaults, then a key=value file (no section header needed), then overrides."""
    bounds = Bounds()
    if path:
        parser = configparser.ConfigParser()
        with open(path) as fh:
            parser.read_string("[bounds]\n" + fh.read())
        bounds = bounds.override(**dict(parser["bounds"]))
    if overrides:
        bounds = bounds.override(**parse_assignments(overrides))
    return bounds
