"""JSON game files.

A game document has ``n``, ``edges`` (1-indexed pairs), ``costs``, ``g`` (one
table per player, the i-th of length ``deg_i + 2``), an optional
``homogeneity`` tag and an optional free-form ``provenance`` object. The
writer puts one edge and one table per line so loader errors can point at
the offending line.
"""
from __future__ import annotations

import json
import re

from .errors import InvalidInstance
from .game import HETEROGENEOUS, BnpgInstance, Graph, validate


def dumps(instance: BnpgInstance, provenance: dict | None = None) -> str:
    def row(v):
        return json.dumps([float(a) for a in v])

    lines = ["{", f'  "n": {instance.n},', f'  "homogeneity": {json.dumps(instance.homogeneity)},']
    if provenance is not None:
        lines.append(f'  "provenance": {json.dumps(provenance, sort_keys=True)},')
    edges = [f"    [{i + 1}, {j + 1}]" for i, j in instance.graph.edges()]
    lines.append('  "edges": [' + ("\n" + ",\n".join(edges) + "\n  ]," if edges else "],"))
    lines.append(f'  "costs": {row(instance.costs)},')
    tables = [f"    {row(t)}" for t in instance.tables]
    lines.append('  "g": [\n' + ",\n".join(tables) + "\n  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dump(instance: BnpgInstance, path, provenance: dict | None = None) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(instance, provenance))


def _key_line(text, key):
    m = re.search(r'"%s"\s*:' % re.escape(key), text)
    return text.count("\n", 0, m.start()) + 1 if m else 1


def _element_lines(text, key):
    """Line number of each top-level element of the array stored under ``key``."""
    m = re.search(r'"%s"\s*:\s*\[' % re.escape(key), text)
    if not m:
        return []
    out = []
    depth = 1
    pos = m.end()
    expecting = True
    while pos < len(text) and depth > 0:
        ch = text[pos]
        if ch in " \t\r\n":
            pass
        elif ch == "[":
            if depth == 1 and expecting:
                out.append(text.count("\n", 0, pos) + 1)
                expecting = False
            depth += 1
        elif ch == "]":
            depth -= 1
        elif ch == ",":
            if depth == 1:
                expecting = True
        elif depth == 1 and expecting:
            out.append(text.count("\n", 0, pos) + 1)
            expecting = False
        pos += 1
    return out


def _anchor(text, msg, table_lines):
    p = re.match(r"player (\d+):", msg)
    if p and ("table" in msg or "monotonicity" in msg):
        i = int(p.group(1)) - 1
        line = table_lines[i] if i < len(table_lines) else _key_line(text, "g")
    elif "cost" in msg:
        line = _key_line(text, "costs")
    elif "tagged" in msg or "homogeneity" in msg:
        line = _key_line(text, "homogeneity")
    elif "externality tables" in msg:
        line = _key_line(text, "g")
    else:
        line = _key_line(text, "edges")
    return f"line {line}: {msg}"


def loads(text: str) -> BnpgInstance:
    """Parse and validate a game document; raise :class:`InvalidInstance` on any problem."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInstance([f"line {e.lineno}: {e.msg}"]) from None
    if not isinstance(doc, dict):
        raise InvalidInstance(["line 1: game document must be an object"])
    for key in ("n", "edges", "costs", "g"):
        if key not in doc:
            raise InvalidInstance([f"line 1: missing field {key!r}"])
    n = doc["n"]
    if not isinstance(n, int) or n < 1:
        raise InvalidInstance([f"line {_key_line(text, 'n')}: n must be a positive integer"])
    edge_lines = _element_lines(text, "edges")
    seen = set()
    edges = []
    for idx, e in enumerate(doc["edges"]):
        line = edge_lines[idx] if idx < len(edge_lines) else _key_line(text, "edges")
        if (not isinstance(e, list) or len(e) != 2
                or not all(isinstance(v, int) for v in e)):
            raise InvalidInstance([f"line {line}: edge must be a pair of integers"])
        i, j = e[0] - 1, e[1] - 1
        if not (0 <= i < n and 0 <= j < n):
            raise InvalidInstance([f"line {line}: edge {e} out of range 1..{n}"])
        if i == j:
            raise InvalidInstance([f"line {line}: self-loop at player {e[0]}"])
        key = (min(i, j), max(i, j))
        if key in seen:
            raise InvalidInstance([f"line {line}: duplicate edge {e}"])
        seen.add(key)
        edges.append(key)
    try:
        inst = BnpgInstance(Graph.from_edges(n, edges), doc["costs"], tuple(doc["g"]),
                            doc.get("homogeneity", HETEROGENEOUS))
    except (TypeError, ValueError) as e:
        raise InvalidInstance([f"line {_key_line(text, 'g')}: {e}"]) from None
    problems = validate(inst)
    if problems:
        table_lines = _element_lines(text, "g")
        raise InvalidInstance([_anchor(text, p, table_lines) for p in problems])
    return inst


def load(path) -> BnpgInstance:
    with open(path) as fh:
        return loads(fh.read())


def load_provenance(path) -> dict | None:
    with open(path) as fh:
        return json.load(fh).get("provenance")
