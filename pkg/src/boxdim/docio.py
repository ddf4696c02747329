"""Self-describing JSON documents for graphs, orders, representations, reports.

Every document is ``{"kind": ..., "version": "1", "payload": ...}`` rendered
as UTF-8 JSON with sorted keys, so serialize(parse(text)) reproduces the text.
Interval endpoints are written as integers; representations carrying other
rationals are relabeled order-isomorphically first.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .boxes import BoxRepresentation
from .graphs import Graph
from .intervals import Interval, IntervalRepresentation, normalize_integer_endpoints
from .posets import Poset, Realizer

FORMAT_VERSION = "1"
KINDS = ("graph", "poset", "interval-rep", "box-rep", "realizer", "report")


class DocumentError(ValueError):
    """Malformed or invariant-violating document; the message carries a path."""


def _fail(path: str, msg: str) -> None:
    raise DocumentError(f"{path}: {msg}")


# ---------------------------------------------------------------------------
# Object -> payload
# ---------------------------------------------------------------------------

def _graph_payload(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in sorted(g.edges)]}

def _poset_payload(p: Poset) -> dict:
    return {"n": p.n, "relation": [list(r) for r in sorted(p.relation)]}

def _rep_payload(rep: IntervalRepresentation) -> dict:
    if any(not isinstance(end, int)
           for iv in rep.intervals for end in (iv.left, iv.right)):
        rep = normalize_integer_endpoints(rep)
    return {"n": rep.n,
            "intervals": {str(v): [rep.left(v), rep.right(v)]
                          for v in range(1, rep.n + 1)}}

def _box_payload(b: BoxRepresentation) -> dict:
    return {"target": _graph_payload(b.target),
            "members": [_rep_payload(rep) for rep in b.reps]}

def _realizer_payload(r: Realizer) -> dict:
    return {"n": r.n, "extensions": [list(ext) for ext in r.extensions]}


def to_document(obj: Any) -> dict:
    """Wrap a library object (or a ready report payload) as a document dict."""
    if isinstance(obj, Graph):
        kind, payload = "graph", _graph_payload(obj)
    elif isinstance(obj, Poset):
        kind, payload = "poset", _poset_payload(obj)
    elif isinstance(obj, IntervalRepresentation):
        kind, payload = "interval-rep", _rep_payload(obj)
    elif isinstance(obj, BoxRepresentation):
        kind, payload = "box-rep", _box_payload(obj)
    elif isinstance(obj, Realizer):
        kind, payload = "realizer", _realizer_payload(obj)
    elif isinstance(obj, dict) and obj.get("kind") == "report":
        return obj
    elif isinstance(obj, dict):
        kind, payload = "report", obj
    else:
        raise DocumentError(f"cannot serialize object of type {type(obj).__name__}")
    return {"kind": kind, "version": FORMAT_VERSION, "payload": payload}


def serialize(obj: Any) -> str:
    """Canonical text form: sorted keys, two-space indent, trailing newline."""
    return json.dumps(to_document(obj), sort_keys=True, indent=2) + "\n"


# ---------------------------------------------------------------------------
# Payload validation helpers
# ---------------------------------------------------------------------------

def _expect_int(value: Any, path: str, minimum: int | None = None) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        _fail(path, f"expected an integer, got {value!r}")
    if minimum is not None and value < minimum:
        _fail(path, f"expected an integer >= {minimum}, got {value}")
    return value

def _expect_list(value: Any, path: str) -> list:
    if not isinstance(value, list):
        _fail(path, f"expected a list, got {type(value).__name__}")
    return value

def _expect_dict(value: Any, path: str) -> dict:
    if not isinstance(value, dict):
        _fail(path, f"expected an object, got {type(value).__name__}")
    return value

def _expect_pair(value: Any, path: str) -> tuple[int, int]:
    pair = _expect_list(value, path)
    if len(pair) != 2:
        _fail(path, f"expected a pair, got {value!r}")
    return _expect_int(pair[0], path + "[0]"), _expect_int(pair[1], path + "[1]")


def _parse_graph(payload: dict, path: str) -> Graph:
    n = _expect_int(payload.get("n"), path + ".n", minimum=0)
    edges = []
    seen = set()
    for i, raw in enumerate(_expect_list(payload.get("edges"), path + ".edges")):
        here = f"{path}.edges[{i}]"
        u, v = _expect_pair(raw, here)
        if u == v:
            _fail(here, f"self-loop at {u}")
        if not (1 <= u <= n and 1 <= v <= n):
            _fail(here, f"endpoint out of range 1..{n}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            _fail(here, f"duplicate edge {key}")
        seen.add(key)
        edges.append(key)
    return Graph.from_edges(n, edges)


def _parse_poset(payload: dict, path: str) -> Poset:
    n = _expect_int(payload.get("n"), path + ".n", minimum=1)
    rel = []
    seen = set()
    for i, raw in enumerate(_expect_list(payload.get("relation"), path + ".relation")):
        here = f"{path}.relation[{i}]"
        u, v = _expect_pair(raw, here)
        if not (1 <= u <= n and 1 <= v <= n):
            _fail(here, f"element out of range 1..{n}")
        if u == v:
            _fail(here, f"reflexive pair ({u},{v}) must not be stored")
        if (v, u) in seen:
            _fail(here, f"antisymmetry violated by ({u},{v}) and ({v},{u})")
        seen.add((u, v))
        rel.append((u, v))
    relset = set(rel)
    for u, v in sorted(relset):
        for x, y in sorted(relset):
            if v == x and (u, y) not in relset:
                _fail(path + ".relation",
                      f"not transitively closed: ({u},{v}) and ({x},{y}) "
                      f"without ({u},{y})")
    return Poset(n, frozenset(relset))


def _parse_rep(payload: dict, path: str) -> IntervalRepresentation:
    n = _expect_int(payload.get("n"), path + ".n", minimum=1)
    mapping = _expect_dict(payload.get("intervals"), path + ".intervals")
    intervals: dict[int, Interval] = {}
    for key, raw in mapping.items():
        here = f"{path}.intervals[{key!r}]"
        try:
            v = int(key)
        except ValueError:
            _fail(here, "vertex keys must be integers")
        if not 1 <= v <= n:
            _fail(here, f"vertex out of range 1..{n}")
        left, right = _expect_pair(raw, here)
        if left > right:
            _fail(here, f"empty interval [{left}, {right}]")
        intervals[v] = Interval(left, right)
    if set(intervals) != set(range(1, n + 1)):
        missing = sorted(set(range(1, n + 1)) - set(intervals))[0]
        _fail(path + ".intervals", f"vertex {missing} has no interval")
    return IntervalRepresentation.from_dict(n, intervals)


def _parse_box(payload: dict, path: str) -> BoxRepresentation:
    target = _parse_graph(_expect_dict(payload.get("target"), path + ".target"),
                          path + ".target")
    members = _expect_list(payload.get("members"), path + ".members")
    reps = tuple(_parse_rep(_expect_dict(raw, f"{path}.members[{i}]"),
                            f"{path}.members[{i}]")
                 for i, raw in enumerate(members))
    try:
        return BoxRepresentation(target, reps)
    except ValueError as exc:
        _fail(path, str(exc))


def _parse_realizer(payload: dict, path: str) -> Realizer:
    n = _expect_int(payload.get("n"), path + ".n", minimum=1)
    exts = _expect_list(payload.get("extensions"), path + ".extensions")
    if not exts:
        _fail(path + ".extensions", "realizer must contain at least one extension")
    orders = []
    for i, raw in enumerate(exts):
        here = f"{path}.extensions[{i}]"
        seq = tuple(_expect_int(x, f"{here}[{j}]")
                    for j, x in enumerate(_expect_list(raw, here)))
        if sorted(seq) != list(range(1, n + 1)):
            _fail(here, f"not a permutation of 1..{n}")
        orders.append(seq)
    return Realizer(tuple(orders))


_PARSERS = {
    "graph": _parse_graph,
    "poset": _parse_poset,
    "interval-rep": _parse_rep,
    "box-rep": _parse_box,
    "realizer": _parse_realizer,
}


def parse(text: str) -> Any:
    """Parse a document, validating every type invariant.

    Returns the library object for data kinds; report documents come back as
    the document dict itself.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"document: invalid JSON ({exc})") from exc
    if not isinstance(doc, dict):
        _fail("document", "top level must be an object")
    kind = doc.get("kind")
    if kind not in KINDS:
        _fail("document.kind", f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    if doc.get("version") != FORMAT_VERSION:
        _fail("document.version", f"unsupported version {doc.get('version')!r}")
    if kind == "report":
        return doc
    payload = _expect_dict(doc.get("payload"), "document.payload")
    return _PARSERS[kind](payload, "payload")
