"""Graph JSON / edge-list parsing and certificate serialization."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

from .core import Graph, GraphError, build_graph


class FormatError(GraphError):
    """Malformed input file; message carries the offending line when known."""

    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        where = ""
        if source:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)
        self.line = line


@dataclass
class GraphDocument:
    """A graph plus the optional side data the JSON schema allows."""

    graph: Graph
    partition: list[list[int]] | None = None
    lists: dict[int, list[Fraction]] | None = None
    labels: dict[int, int] | None = None
    extra: dict[str, Any] = field(default_factory=dict)


def _line_of(text: str, needle: str, start: int = 0) -> int | None:
    pos = text.find(needle, start)
    if pos < 0:
        return None
    return text.count("\n", 0, pos) + 1


def _edge_lines(text: str) -> list[int | None]:
    """Best-effort line number of every ``[u, v]`` pair inside ``"edges"``."""
    lines: list[int | None] = []
    key = text.find('"edges"')
    if key < 0:
        return lines
    pos = text.find("[", key)
    depth = 0
    i = pos
    while i < len(text):
        ch = text[i]
        if ch == "[":
            depth += 1
            if depth == 2:
                lines.append(text.count("\n", 0, i) + 1)
        elif ch == "]":
            depth -= 1
            if depth == 0:
                break
        i += 1
    return lines


def _int_keyed(obj: Any, name: str, text: str, source: str | None) -> dict[int, Any]:
    if not isinstance(obj, dict):
        raise FormatError(f'"{name}" must be an object keyed by vertex', _line_of(text, f'"{name}"'), source)
    out = {}
    for k, v in obj.items():
        try:
            out[int(k)] = v
        except (TypeError, ValueError):
            raise FormatError(f'"{name}": key {k!r} is not a vertex id', _line_of(text, f'"{k}"'), source) from None
    return out


def parse_graph_json(text: str, source: str | None = None) -> GraphDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(exc.msg, exc.lineno, source) from None
    if not isinstance(data, dict):
        raise FormatError("top level must be an object", 1, source)
    if "n" not in data or not isinstance(data["n"], int) or isinstance(data["n"], bool):
        raise FormatError('"n" must be an integer', _line_of(text, '"n"') or 1, source)
    n = data["n"]
    edges = data.get("edges", [])
    if not isinstance(edges, list):
        raise FormatError('"edges" must be a list', _line_of(text, '"edges"'), source)
    if n < 0:
        raise FormatError('"n" must be non-negative', _line_of(text, '"n"'), source)
    lines = _edge_lines(text)
    seen: set[tuple[int, int]] = set()
    for idx, e in enumerate(edges):
        line = lines[idx] if idx < len(lines) else None
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise FormatError(f"edge {idx}: expected [u, v] integers, got {e!r}", line, source)
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"edge {idx}: vertex out of range 0..{n - 1} in {e}", line, source)
        if u == v:
            raise FormatError(f"edge {idx}: self-loop at vertex {u}", line, source)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(f"edge {idx}: duplicate edge {key}", line, source)
        seen.add(key)
    graph = build_graph(n, edges)

    doc = GraphDocument(graph)
    if "partition" in data and data["partition"] is not None:
        parts = data["partition"]
        if not isinstance(parts, list) or not all(isinstance(p, list) for p in parts):
            raise FormatError('"partition" must be a list of vertex lists', _line_of(text, '"partition"'), source)
        doc.partition = [[int(v) for v in p] for p in parts]
    if "lists" in data and data["lists"] is not None:
        raw = _int_keyed(data["lists"], "lists", text, source)
        doc.lists = {v: [Fraction(x) for x in vals] for v, vals in raw.items()}
    if "labels" in data and data["labels"] is not None:
        labels = data["labels"]
        if isinstance(labels, list):
            doc.labels = dict(enumerate(labels))
        else:
            doc.labels = _int_keyed(labels, "labels", text, source)
    doc.extra = {k: v for k, v in data.items() if k not in {"n", "edges", "partition", "lists", "labels"}}
    return doc


def parse_edge_list(text: str, source: str | None = None) -> Graph:
    """Parse ``n m`` header then ``u v`` per line; ``#`` starts a comment."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise FormatError("empty edge list; expected header 'n m'", 1, source)
    lineno, head = rows[0]
    if len(head) != 2 or not all(t.lstrip("-").isdigit() for t in head):
        raise FormatError(f"header must be 'n m', got {' '.join(head)!r}", lineno, source)
    n, m = int(head[0]), int(head[1])
    if n < 0 or m < 0:
        raise FormatError("header values must be non-negative", lineno, source)
    pairs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, tok in rows[1:]:
        if len(tok) != 2 or not all(t.lstrip("-").isdigit() for t in tok):
            raise FormatError(f"expected 'u v', got {' '.join(tok)!r}", lineno, source)
        u, v = int(tok[0]), int(tok[1])
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"vertex out of range 0..{n - 1} in edge ({u}, {v})", lineno, source)
        if u == v:
            raise FormatError(f"self-loop at vertex {u}", lineno, source)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(f"duplicate edge {key}", lineno, source)
        seen.add(key)
        pairs.append((u, v))
    if len(pairs) != m:
        raise FormatError(f"header declares {m} edges but {len(pairs)} were given", rows[0][0], source)
    return build_graph(n, pairs)


def load_graph(path: str | Path) -> GraphDocument:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot read {p}: {exc.strerror}") from None
    if p.suffix.lower() == ".json" or text.lstrip().startswith("{"):
        return parse_graph_json(text, str(p))
    return GraphDocument(parse_edge_list(text, str(p)))


def load_json(path: str | Path) -> Any:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot read {p}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(exc.msg, exc.lineno, str(p)) from None


def graph_to_json(graph: Graph, **extra: Any) -> dict[str, Any]:
    doc: dict[str, Any] = {"n": graph.n, "edges": [list(e) for e in graph.edges]}
    for k, v in extra.items():
        if v is not None:
            doc[k] = v
    return doc


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2)


def vertex_map(obj: Any, n: int, name: str) -> list:
    """Accept ``{v: x}`` (string keys allowed) or a length-n list; return a list."""
    if isinstance(obj, dict):
        if "labels" in obj and isinstance(obj["labels"], (dict, list)):
            obj = obj["labels"]
    if isinstance(obj, list):
        if len(obj) != n:
            raise FormatError(f"{name}: expected {n} entries, got {len(obj)}")
        return list(obj)
    if not isinstance(obj, dict):
        raise FormatError(f"{name}: expected an object keyed by vertex or a list")
    out: list = [None] * n
    for k, v in obj.items():
        try:
            idx = int(k)
        except (TypeError, ValueError):
            raise FormatError(f"{name}: key {k!r} is not a vertex id") from None
        if not 0 <= idx < n:
            raise FormatError(f"{name}: vertex {idx} out of range")
        out[idx] = v
    missing = [i for i, v in enumerate(out) if v is None]
    if missing:
        raise FormatError(f"{name}: missing vertices {missing[:10]}")
    return out
