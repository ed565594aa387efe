"""Shared fixtures: the bundled dataset, its solution, and mutation helpers."""

import copy
import json
import os

import pytest

from microloc.data import load_bundled_dataset, load_dataset
from microloc.euler import euler_matrix
from microloc.solver import build_constraints, solve


@pytest.fixture(scope="session")
def dataset():
    return load_bundled_dataset()


@pytest.fixture(scope="session")
def solved(dataset):
    return solve(build_constraints(dataset, euler_matrix(dataset)))


@pytest.fixture(scope="session")
def bundled_doc():
    import microloc.data as data_mod
    path = os.path.join(os.path.dirname(data_mod.__file__), "data", "f4a3.json")
    with open(path) as f:
        return json.load(f)


@pytest.fixture
def load_doc(tmp_path):
    """Write a dataset document to disk and load it back."""
    def _load(doc):
        p = tmp_path / "ds.json"
        p.write_text(json.dumps(doc))
        return load_dataset(str(p))
    return _load


@pytest.fixture
def mutate(bundled_doc, load_doc):
    """Apply fn to a deep copy of the bundled document, then load it."""
    def _mutate(fn):
        doc = copy.deepcopy(bundled_doc)
        fn(doc)
        return load_doc(doc)
    return _mutate


# two orbits, one cover, every map the identity; deliberately no special piece
CHAIN_DOC = {
    "schema_version": 1, "name": "chain2", "ambient_dim": 1,
    "orbits": [
        {"id": "A", "dim": 0, "group": {"name": "trivial", "irreps": [["(1)", 1]]}},
        {"id": "B", "dim": 1, "group": {"name": "trivial", "irreps": [["(1)", 1]]}},
    ],
    "covers": [["A", "B"]],
    "duality": {
        "hat": [["A", "A"], ["B", "B"]],
        "fourier": [[["A", "(1)"], ["A", "(1)"]], [["B", "(1)"], ["B", "(1)"]]],
    },
    "kl": [],
    "catalog": [
        {"id": "Y1", "param": ["B", "(1)"], "az": "Y2",
         "iwahori_spherical": True, "unitary": True},
        {"id": "Y2", "param": ["A", "(1)"], "az": "Y1",
         "iwahori_spherical": True, "unitary": True},
    ],
    "special_piece": [], "arthur_type": [], "b_function": ["-1"],
}


@pytest.fixture
def chain(load_doc):
    return load_doc(copy.deepcopy(CHAIN_DOC))
