"""Bundled example dimers and weight files."""

import importlib.resources as _res

from ..dimer import parse_dimer, parse_weights, parse_representation

NAMES = ("torus1", "spp", "gallery1", "gallery2", "gallery3", "gallery4", "sec9")
TORUS_NAMES = ("torus1", "spp", "gallery1", "gallery2", "sec9")
CONSISTENT_TORUS_NAMES = ("torus1", "spp", "gallery1", "sec9")


def read_text(filename):
    return (_res.files(__package__) / filename).read_text()


def load(name):
    """Load a bundled dimer by name."""
    return parse_dimer(read_text(name + ".dtf"))


def load_weights(name):
    return parse_weights(read_text(name + ".w"))


def all_dimers():
    return [load(n) for n in NAMES]
