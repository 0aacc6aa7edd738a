"""Left Kan injectivity in finite posets.

Posets and monotone maps are objects from the C++ core; reports come back
as plain dictionaries.
"""

import json as _json

from . import _core
from ._core import (
    KaninjError,
    MonotoneMap,
    Poset,
    compose,
    enumerate_posets,
    h_bottom,
    h_join,
    is_dense,
    isomorphic,
    mapping_cone,
    set_size_cap,
    size_cap,
    suite_names,
)

__all__ = [
    "KaninjError",
    "MonotoneMap",
    "Poset",
    "compose",
    "enumerate_posets",
    "extend_along_unit",
    "h_bottom",
    "h_join",
    "injectivity",
    "is_dense",
    "isomorphic",
    "left_kan",
    "map_injectivity",
    "mapping_cone",
    "poset",
    "reflect",
    "run_suite",
    "set_size_cap",
    "size_cap",
    "suite_names",
]


def poset(name):
    """A builtin poset: empty, one, vee, diamond, chainN, antichainN."""
    return Poset.builtin(name)


def left_kan(f, h):
    return _json.loads(_core.left_kan(f, h))


def injectivity(x, maps, weak=False, name="class"):
    return _json.loads(_core.injectivity(x, list(maps), weak, name))


def map_injectivity(p, maps, name="class"):
    return _json.loads(_core.map_injectivity(p, list(maps), name))


def reflect(x, maps, max_steps=16, trace=False):
    return _json.loads(_core.reflect(x, list(maps), max_steps, trace))


def extend_along_unit(p, maps):
    return _core.extend_along_unit(p, list(maps))


def run_suite(name, size_cap=4, mutate=False):
    return _json.loads(_core.run_suite(name, size_cap, mutate))
