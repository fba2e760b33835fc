"""Edge-list (v1) and DOT serialisation.

Edge-list format::

    # comment
    vertices: a b c
    a b
    b c

UTF-8, ``#`` starts a comment, the first significant line names the
vertices, then one edge per line. Duplicate edges and self-loops are
errors. The canonical form sorts vertex names and edges.
"""

from __future__ import annotations

import hashlib
from pathlib import Path

from .graph import Graph, GraphError


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


def parse_edgelist(text: str) -> Graph:
    names = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if names is None:
            head, sep, rest = line.partition(":")
            if not sep or head.strip() != "vertices":
                raise FormatError("expected 'vertices: <names...>' header", lineno)
            names = rest.split()
            continue
        toks = line.split()
        if len(toks) != 2:
            raise FormatError(f"expected 'u v', got {line!r}", lineno)
        u, v = toks
        if u == v:
            raise FormatError(f"self-loop at {u}", lineno)
        key = frozenset(toks)
        if key in seen:
            raise FormatError(f"duplicate edge {u} {v}", lineno)
        seen.add(key)
        edges.append((u, v))
    if names is None:
        raise FormatError("missing 'vertices:' header")
    try:
        return Graph(names, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def read_edgelist(path) -> Graph:
    return parse_edgelist(Path(path).read_text(encoding="utf-8"))


def format_edgelist(g: Graph, comments=()) -> str:
    """Canonical edge list: sorted names, each edge as (smaller, larger) name, sorted."""
    lines = [f"# {c}" for c in comments]
    lines.append("vertices: " + " ".join(sorted(g.names)))
    edges = sorted(tuple(sorted(e)) for e in g.edge_names())
    lines += [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def write_edgelist(g: Graph, path, comments=()) -> None:
    Path(path).write_text(format_edgelist(g, comments), encoding="utf-8")


def format_dot(g: Graph, heavy=(), name: str = "G") -> str:
    heavy = {frozenset(e) for e in heavy}
    out = [f'graph "{name}" {{']
    out += [f'  "{v}";' for v in g.names]
    for u, v in g.edge_names():
        style = " [style=bold, penwidth=3]" if frozenset((u, v)) in heavy else ""
        out.append(f'  "{u}" -- "{v}"{style};')
    out.append("}")
    return "\n".join(out) + "\n"


def file_sha256(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()
