import json

import pytest

from fintopo import FiniteSpace

LABELS = ("i", "j", "k", "l")

# Opens written as masks with point p contributing 2**p.
SHARED_CORE = FiniteSpace(4, (0, 10, 11, 14, 15))
LAYERED = FiniteSpace(4, (0, 1, 2, 3, 7, 15))
PARTITION = FiniteSpace(4, (0, 1, 2, 3, 12, 13, 14, 15))


@pytest.fixture
def shared_core_space():
    """Four points; opens {}, {j,l}, {i,j,l}, {j,k,l}, X."""
    return SHARED_CORE


@pytest.fixture
def layered_space():
    """Four points; opens {}, {i}, {j}, {i,j}, {i,j,k}, X."""
    return LAYERED


@pytest.fixture
def partition_space():
    """Four points; opens generated by the partition {i},{j},{k,l}."""
    return PARTITION


def space_json(space, labels=None):
    doc = {"points": space.size, "opens": [
        sorted(p for p in range(space.size) if m >> p & 1)
        for m in space.opens]}
    if labels:
        doc["labels"] = list(labels)
        doc["opens"] = [[labels[p] for p in o] for o in doc["opens"]]
    return json.dumps(doc)


@pytest.fixture
def write_space(tmp_path):
    def _write(space, labels=None, name="space.json"):
        path = tmp_path / name
        path.write_text(space_json(space, labels))
        return str(path)
    return _write


@pytest.fixture
def write_map(tmp_path):
    def _write(f, name="map.json"):
        doc = {
            "domain": json.loads(space_json(f.domain)),
            "codomain": json.loads(space_json(f.codomain)),
            "assignment": list(f.assignment),
        }
        path = tmp_path / name
        path.write_text(json.dumps(doc))
        return str(path)
    return _write
