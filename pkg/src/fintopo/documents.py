"""Reading and writing spaces, maps, and subset specs.

The on-disk format is a single JSON object.  Point names (an optional label
table) exist only here; the rest of the package works with integer indices.

Space document::

    {"points": 4, "labels": ["i","j","k","l"],
     "opens": [[], ["j","l"], ["i","j","l"], ["j","k","l"], ["i","j","k","l"]]}

Map document::

    {"domain": <space document>, "codomain": <space document>,
     "assignment": ["i", "i", "k", "l"]}

Opens and assignments accept names or zero-based indices interchangeably.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .core import FiniteSpace, PointSet, TopologyError, mask_of, validate_topology
from .maps import SpaceMap


class ParseError(TopologyError):
    """Malformed document; the message names the offending path."""


@dataclass(frozen=True)
class SpaceDocument:
    """A validated space plus its optional display labels."""

    space: FiniteSpace
    labels: tuple[str, ...] | None = None

    def render_set(self, ps: PointSet) -> str:
        return ps.render(self.labels)


def _load_json(text: str) -> object:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(
            f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}"
        ) from None


def _point_index(entry: object, labels: tuple[str, ...] | None,
                 size: int, path: str) -> int:
    if isinstance(entry, bool):
        raise ParseError(f"{path}: expected a point name or index, got a boolean")
    if isinstance(entry, int):
        if not 0 <= entry < size:
            raise ParseError(f"{path}: point index {entry} outside 0..{size - 1}")
        return entry
    if isinstance(entry, str):
        if labels is None:
            raise ParseError(
                f"{path}: point name {entry!r} used but no labels are declared"
            )
        try:
            return labels.index(entry)
        except ValueError:
            raise ParseError(f"{path}: unknown point name {entry!r}") from None
    raise ParseError(f"{path}: expected a point name or index")


def _space_from_object(obj: object, path: str) -> SpaceDocument:
    if not isinstance(obj, dict):
        raise ParseError(f"{path}: expected an object")
    unknown = set(obj) - {"points", "labels", "opens"}
    if unknown:
        raise ParseError(f"{path}: unknown keys {sorted(unknown)}")
    points = obj.get("points")
    if isinstance(points, bool) or not isinstance(points, int) or points < 1:
        raise ParseError(f"{path}.points: expected a positive integer")
    labels = None
    if "labels" in obj:
        raw = obj["labels"]
        if (not isinstance(raw, list)
                or not all(isinstance(x, str) and x for x in raw)):
            raise ParseError(f"{path}.labels: expected a list of nonempty names")
        if len(raw) != points:
            raise ParseError(
                f"{path}.labels: {len(raw)} names for {points} points"
            )
        if len(set(raw)) != len(raw):
            raise ParseError(f"{path}.labels: names must be distinct")
        labels = tuple(raw)
    opens_raw = obj.get("opens")
    if not isinstance(opens_raw, list):
        raise ParseError(f"{path}.opens: expected a list of subsets")
    masks = []
    for i, entry in enumerate(opens_raw):
        if not isinstance(entry, list):
            raise ParseError(f"{path}.opens[{i}]: expected a list of points")
        idxs = [
            _point_index(p, labels, points, f"{path}.opens[{i}][{k}]")
            for k, p in enumerate(entry)
        ]
        masks.append(mask_of(idxs, points))
    space = validate_topology(points, masks)
    return SpaceDocument(space, labels)


def parse_space(text: str) -> SpaceDocument:
    """Parse and validate a space document; topology errors pass through."""
    return _space_from_object(_load_json(text), "space")


def serialize_space(doc: SpaceDocument) -> str:
    """Canonical document text: opens ordered canonically, points as indices."""
    obj: dict[str, object] = {"points": doc.space.size}
    if doc.labels is not None:
        obj["labels"] = list(doc.labels)
    obj["opens"] = [list(ps.members) for ps in doc.space.open_sets()]
    return json.dumps(obj, separators=(", ", ": "))


def parse_map(text: str) -> tuple[SpaceMap, SpaceDocument, SpaceDocument]:
    """Parse a map document into the map plus both annotated spaces."""
    obj = _load_json(text)
    if not isinstance(obj, dict):
        raise ParseError("map: expected an object")
    unknown = set(obj) - {"domain", "codomain", "assignment"}
    if unknown:
        raise ParseError(f"map: unknown keys {sorted(unknown)}")
    if "domain" not in obj or "codomain" not in obj:
        raise ParseError("map: both domain and codomain are required")
    dom = _space_from_object(obj["domain"], "domain")
    cod = _space_from_object(obj["codomain"], "codomain")
    raw = obj.get("assignment")
    if not isinstance(raw, list):
        raise ParseError("assignment: expected a list of codomain points")
    if len(raw) != dom.space.size:
        raise ParseError(
            f"assignment: {len(raw)} entries for a {dom.space.size}-point domain"
        )
    assignment = tuple(
        _point_index(q, cod.labels, cod.space.size, f"assignment[{p}]")
        for p, q in enumerate(raw)
    )
    return SpaceMap(dom.space, cod.space, assignment), dom, cod


def subset_from_spec(doc: SpaceDocument, spec: str) -> PointSet:
    """Parse a comma list of point names or indices; blank means empty set."""
    spec = spec.strip()
    if not spec:
        return PointSet.empty(doc.space.size)
    idxs = []
    for token in spec.split(","):
        token = token.strip()
        if not token:
            raise ParseError(f"subset spec {spec!r}: empty entry")
        if doc.labels is not None and token in doc.labels:
            idxs.append(doc.labels.index(token))
        elif token.isdigit():
            idx = int(token)
            if idx >= doc.space.size:
                raise ParseError(
                    f"subset spec: index {idx} outside 0..{doc.space.size - 1}"
                )
            idxs.append(idx)
        else:
            raise ParseError(f"subset spec: unknown point {token!r}")
    return PointSet.from_points(idxs, doc.space.size)
