"""JSON file formats for graphs, maps, walks and synthesis scripts.

Shape problems (bad JSON, missing or mistyped fields) raise
:class:`FormatError`; content that parses but is not a valid graph or map
raises the domain error of the constructor that rejects it.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Sequence

from .errors import FormatError
from .graph import Dart, Graph, Sense, Walk, make_walk
from .maps import RotationSystem, build_map
from .synthesis import AdditionStep

FORMAT_VERSION = 1
SENSES = {"out": Sense.OUT, "in": Sense.IN}
BASES = ("cycle", "u_cycle")


def _dumps(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _loads(text: str, what: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{what}: not valid JSON ({exc})") from None
    if not isinstance(doc, dict):
        raise FormatError(f"{what}: expected a JSON object")
    version = doc.get("format", FORMAT_VERSION)
    if version != FORMAT_VERSION:
        raise FormatError(f"{what}: unsupported format version {version!r}")
    return doc


def _field(doc: dict, name: str, kind, what: str):
    if name not in doc:
        raise FormatError(f"{what}: missing field {name!r}")
    value = doc[name]
    if kind is int and (isinstance(value, bool) or not isinstance(value, int)):
        raise FormatError(f"{what}: field {name!r} must be an integer")
    if kind is not int and not isinstance(value, kind):
        raise FormatError(f"{what}: field {name!r} has the wrong type")
    return value


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


# -- graphs ------------------------------------------------------------------


def dumps_graph(g: Graph) -> str:
    return _dumps({"nodes": g.node_count, "edges": [list(e) for e in g.edges]})


def loads_graph(text: str) -> Graph:
    doc = _loads(text, "graph")
    nodes = _field(doc, "nodes", int, "graph")
    edges = _field(doc, "edges", list, "graph")
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2 and all(_is_int(x) for x in e)):
            raise FormatError(f"graph: edge {e!r} is not a pair of integers")
    return Graph(nodes, tuple(tuple(e) for e in edges))


# -- darts, maps, walks --------------------------------------------------------


def _dart_doc(d: Dart) -> list:
    return [d.sense.name.lower(), d.edge]


def _dart(obj, what: str) -> Dart:
    if not (isinstance(obj, list) and len(obj) == 2 and obj[0] in SENSES and _is_int(obj[1])):
        raise FormatError(f"{what}: dart {obj!r} is not [\"out\"|\"in\", edge]")
    return Dart(obj[1], SENSES[obj[0]])


def dumps_map(m: RotationSystem) -> str:
    return _dumps({"format": FORMAT_VERSION, "rotations": [[_dart_doc(d) for d in r.order] for r in m.rotations]})


def parse_rotations(text: str) -> list[list[Dart]]:
    doc = _loads(text, "map")
    rows = _field(doc, "rotations", list, "map")
    out = []
    for row in rows:
        if not isinstance(row, list):
            raise FormatError("map: each rotation must be a list of darts")
        out.append([_dart(d, "map") for d in row])
    return out


def loads_map(text: str, g: Graph) -> RotationSystem:
    return build_map(g, parse_rotations(text))


def dumps_walk(w: Walk) -> str:
    return _dumps({"format": FORMAT_VERSION, "start": w.start, "darts": [_dart_doc(d) for d in w.darts]})


def loads_walk(text: str, g: Graph) -> Walk:
    doc = _loads(text, "walk")
    start = _field(doc, "start", int, "walk")
    darts = [_dart(d, "walk") for d in _field(doc, "darts", list, "walk")]
    return make_walk(g, start, darts)


# -- synthesis scripts ---------------------------------------------------------


def _step_doc(step: AdditionStep) -> dict:
    doc = {"op": step.kind, "face": step.face, "u": step.u}
    if step.v is not None:
        doc["v"] = step.v
    doc["length"] = step.length
    doc["simple"] = step.simple
    return doc


def dumps_script(base: tuple[str, int], steps: Sequence[AdditionStep]) -> str:
    return _dumps({"format": FORMAT_VERSION, "base": base[0], "n": base[1], "steps": [_step_doc(s) for s in steps]})


def _step(doc, i: int) -> AdditionStep:
    what = f"script step {i}"
    if not isinstance(doc, dict):
        raise FormatError(f"{what}: expected an object")
    op = _field(doc, "op", str, what)
    if op not in ("path", "spike"):
        raise FormatError(f"{what}: unknown op {op!r}")
    v = doc.get("v")
    if v is not None and not _is_int(v):
        raise FormatError(f"{what}: field 'v' must be an integer")
    simple = doc.get("simple", True)
    if not isinstance(simple, bool):
        raise FormatError(f"{what}: field 'simple' must be a boolean")
    return AdditionStep(
        op,
        _field(doc, "face", int, what),
        _field(doc, "u", int, what),
        v if op == "path" else None,
        _field(doc, "length", int, what),
        simple,
    )


def loads_script(text: str) -> tuple[tuple[str, int], list[AdditionStep]]:
    doc = _loads(text, "script")
    base = _field(doc, "base", str, "script")
    if base not in BASES:
        raise FormatError(f"script: unknown base {base!r}")
    n = _field(doc, "n", int, "script")
    steps = _field(doc, "steps", list, "script")
    return (base, n), [_step(s, i) for i, s in enumerate(steps)]


# -- files ---------------------------------------------------------------------


def read_text(path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None


def write_text(path, text: str) -> None:
    Path(path).write_text(text + "\n", encoding="utf-8")


def load_graph(path) -> Graph:
    return loads_graph(read_text(path))


def load_map(path, g: Graph) -> RotationSystem:
    return loads_map(read_text(path), g)


def load_walk(path, g: Graph) -> Walk:
    return loads_walk(read_text(path), g)


def load_script(path):
    return loads_script(read_text(path))


def save_graph(path, g: Graph) -> None:
    write_text(path, dumps_graph(g))


def save_map(path, m: RotationSystem) -> None:
    write_text(path, dumps_map(m))


def save_script(path, base, steps) -> None:
    write_text(path, dumps_script(base, steps))
