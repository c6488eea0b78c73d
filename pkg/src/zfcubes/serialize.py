"""Graph documents: a JSON interchange format and a DOT rendering.

The JSON document carries the graph, an optional arc set, an optional
initial set, and free-form annotations::

    {
      "dimension": 4,
      "vertices": ["0000", "0001", ...],
      "edges": [["0000", "0001"], ...],
      "arcs": [["0000", "1000"], ...],
      "twisted_edges": [["0100", "1011"], ...],
      "set": ["0000", ...]
    }

Bit strings are text with the leftmost character most significant;
``twisted_edges`` is derived on export and ignored on import. The DOT form
writes plain edges as ``--`` and arcs as ``->`` (a mixed dialect: arc lines
mark direction inside an otherwise undirected graph) and flags twisted edges
with ``color=red``. Both formats round-trip exactly through
:func:`from_json_document` / :func:`from_dot`.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .arcsets import ArcSet
from .errors import DocumentError
from .graphs import Graph, hamming_distance, vertex_id

_RESERVED_KEYS = ("dimension", "vertices", "edges", "arcs", "twisted_edges", "set")


@dataclass(frozen=True)
class GraphDocument:
    """A parsed graph document."""

    graph: Graph
    arcs: ArcSet | None = None
    initial_set: tuple | None = None
    extras: dict = field(default_factory=dict)


def _is_bit_vertex(v) -> bool:
    return isinstance(v, str) and all(c in "01" for c in v)


def _twisted_pairs(graph: Graph) -> list[list[str]]:
    pairs = []
    for u, v in graph.edges():
        if (_is_bit_vertex(u) and _is_bit_vertex(v) and len(u) == len(v)
                and hamming_distance(u, v) > 1):
            pairs.append([u, v])
    return pairs


def to_json_document(graph: Graph, arcs: ArcSet | None = None,
                     initial_set=None, extras: dict | None = None) -> dict:
    """Assemble the document dict; key order is fixed for byte-stable dumps."""
    for v in graph.vertices:
        if not isinstance(v, str):
            raise ValueError(
                f"only string-labelled graphs can be exported, found {v!r}; relabel first")
    doc: dict = {
        "dimension": graph.dimension,
        "vertices": list(graph.vertices),
        "edges": [[u, v] for u, v in graph.edges()],
        "arcs": [[u, v] for u, v in arcs.sorted_arcs()] if arcs is not None else None,
        "twisted_edges": _twisted_pairs(graph),
    }
    if initial_set is not None:
        doc["set"] = sorted(initial_set, key=graph.index.__getitem__)
    for key in sorted(extras or {}):
        if key in _RESERVED_KEYS:
            raise ValueError(f"extra key {key!r} clashes with a document key")
        doc[key] = extras[key]
    return doc


def dumps_json_document(graph: Graph, arcs: ArcSet | None = None,
                        initial_set=None, extras: dict | None = None) -> str:
    return json.dumps(to_json_document(graph, arcs, initial_set, extras), indent=2) + "\n"


def _fail(message: str, location: str) -> None:
    raise DocumentError(message, location=location)


def from_json_document(data) -> GraphDocument:
    """Parse and validate a JSON document (str, bytes, or an already-loaded dict).

    Raises :class:`DocumentError` pointing at the offending location; nothing
    partial is ever returned.
    """
    if isinstance(data, (bytes, bytearray)):
        data = data.decode("utf-8", errors="replace")
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"invalid JSON: {exc.msg}",
                                location=f"line {exc.lineno} column {exc.colno}") from exc
    if not isinstance(data, dict):
        _fail("document must be a JSON object", "$")

    dimension = data.get("dimension")
    if dimension is not None and (not isinstance(dimension, int) or dimension < 0):
        _fail("dimension must be a non-negative integer or null", "dimension")

    vertices = data.get("vertices")
    if not isinstance(vertices, list) or not vertices:
        _fail("vertices must be a non-empty list", "vertices")
    for i, v in enumerate(vertices):
        if not isinstance(v, str):
            _fail("vertex labels must be strings", f"vertices[{i}]")
        if dimension is not None and (len(v) != dimension or not _is_bit_vertex(v)):
            _fail(f"vertex {v!r} is not a {dimension}-bit string", f"vertices[{i}]")
    if len(set(vertices)) != len(vertices):
        _fail("duplicate vertex labels", "vertices")
    if dimension is not None:
        vertices = sorted(vertices, key=vertex_id)
    known = set(vertices)

    def pair_list(key: str, required: bool):
        raw = data.get(key)
        if raw is None:
            if required:
                _fail(f"missing {key}", key)
            return None
        if not isinstance(raw, list):
            _fail(f"{key} must be a list of pairs", key)
        pairs = []
        for i, item in enumerate(raw):
            if (not isinstance(item, list) or len(item) != 2
                    or not all(isinstance(x, str) for x in item)):
                _fail("expected a pair of vertex labels", f"{key}[{i}]")
            u, v = item
            if u not in known or v not in known:
                _fail(f"unknown vertex in pair [{u!r}, {v!r}]", f"{key}[{i}]")
            pairs.append((u, v))
        return pairs

    edges = pair_list("edges", required=True)
    try:
        graph = Graph(vertices, edges, dimension=dimension)
    except ValueError as exc:
        raise DocumentError(str(exc), location="edges") from exc

    arc_pairs = pair_list("arcs", required=False)
    arcs = ArcSet(graph, arc_pairs) if arc_pairs is not None else None

    initial = data.get("set")
    if initial is not None:
        if not isinstance(initial, list) or not all(isinstance(v, str) for v in initial):
            _fail("set must be a list of vertex labels", "set")
        for i, v in enumerate(initial):
            if v not in known:
                _fail(f"unknown vertex {v!r}", f"set[{i}]")
        initial = tuple(initial)

    extras = {k: v for k, v in data.items() if k not in _RESERVED_KEYS}
    return GraphDocument(graph=graph, arcs=arcs, initial_set=initial, extras=extras)


def to_dot(graph: Graph, arcs: ArcSet | None = None, name: str = "zfcubes") -> str:
    """Render the graph in DOT, arcs as ``->`` and twisted edges in red."""
    for v in graph.vertices:
        if not isinstance(v, str):
            raise ValueError(f"only string-labelled graphs can be exported, found {v!r}")
    arc_pairs = arcs.arcs if arcs is not None else frozenset()
    twisted = {frozenset((u, v)) for u, v in _twisted_pairs(graph)}
    lines = [f"graph {name} {{"]
    if graph.dimension is not None:
        lines.append(f'  dimension="{graph.dimension}";')
    for v in graph.vertices:
        lines.append(f'  "{v}";')
    for u, v in graph.edges():
        if (u, v) in arc_pairs:
            stmt = f'"{u}" -> "{v}"'
        elif (v, u) in arc_pairs:
            stmt = f'"{v}" -> "{u}"'
        else:
            stmt = f'"{u}" -- "{v}"'
        if frozenset((u, v)) in twisted:
            stmt += " [color=red]"
        lines.append(f"  {stmt};")
    lines.append("}")
    return "\n".join(lines) + "\n"


_DOT_HEADER = re.compile(r'^graph\s+(\w+)\s*\{$')
_DOT_DIMENSION = re.compile(r'^dimension="(\d+)";$')
_DOT_VERTEX = re.compile(r'^"([^"]*)";$')
_DOT_EDGE = re.compile(r'^"([^"]*)"\s*(--|->)\s*"([^"]*)"(?:\s*\[color=red\])?;$')


def from_dot(text: str) -> GraphDocument:
    """Parse the DOT dialect written by :func:`to_dot`."""
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8", errors="replace")
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines or not _DOT_HEADER.match(lines[0]):
        raise DocumentError("expected a 'graph <name> {' header", location="line 1")
    if lines[-1] != "}":
        raise DocumentError("expected a closing '}'", location=f"line {len(lines)}")
    dimension = None
    vertices: list[str] = []
    edges: list[tuple[str, str]] = []
    arcs: list[tuple[str, str]] = []
    for lineno, line in enumerate(lines[1:-1], start=2):
        m = _DOT_DIMENSION.match(line)
        if m:
            dimension = int(m.group(1))
            continue
        m = _DOT_VERTEX.match(line)
        if m:
            vertices.append(m.group(1))
            continue
        m = _DOT_EDGE.match(line)
        if m:
            u, op, v = m.groups()
            edges.append((u, v))
            if op == "->":
                arcs.append((u, v))
            continue
        raise DocumentError(f"unrecognised statement {line!r}", location=f"line {lineno}")
    if not vertices:
        raise DocumentError("no vertex statements found", location="body")
    try:
        graph = Graph(vertices, edges, dimension=dimension)
    except ValueError as exc:
        raise DocumentError(str(exc), location="body") from exc
    return GraphDocument(graph=graph,
                         arcs=ArcSet(graph, arcs) if arcs else None,
                         extras={})
