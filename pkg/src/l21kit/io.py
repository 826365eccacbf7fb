"""Text formats.  Vertices are 1-based on disk and 0-based in memory.

Graph::

    c optional comment
    p edge <n> <m>
    e <u> <v>            (m lines)

Instance (weight 2 marks an edge of H)::

    p ghedge <n> <m>
    e <u> <v> <w>        (w in {1, 2})

Labeling::

    l <v> <label>        (one per vertex)
    s <span>             (optional; checked by ``verify``)
"""

from __future__ import annotations

from .errors import ParseError
from .graph import Graph
from .labeling import Instance


def _records(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        yield lineno, line.split()


def _int(tok: str, lineno: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"{what} {tok!r} is not an integer", lineno) from None


def _parse_edges(text: str, kind: str, arity: int):
    n = m = None
    edges: list[tuple] = []
    seen: set[tuple[int, int]] = set()
    header_line = None
    for lineno, tok in _records(text):
        if tok[0] == "p":
            if n is not None:
                raise ParseError("second header", lineno)
            if len(tok) != 4 or tok[1] != kind:
                raise ParseError(f"expected header 'p {kind} <n> <m>'", lineno)
            n = _int(tok[2], lineno, "vertex count")
            m = _int(tok[3], lineno, "edge count")
            if n < 0 or m < 0:
                raise ParseError("negative count in header", lineno)
            header_line = lineno
        elif tok[0] == "e":
            if n is None:
                raise ParseError("edge record before header", lineno)
            if len(tok) != 1 + arity:
                raise ParseError(f"edge record needs {arity} fields", lineno)
            u = _int(tok[1], lineno, "endpoint")
            v = _int(tok[2], lineno, "endpoint")
            for x in (u, v):
                if not 1 <= x <= n:
                    raise ParseError(f"endpoint {x} outside 1..{n}", lineno)
            if u == v:
                raise ParseError(f"loop at vertex {u}", lineno)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ParseError(f"duplicate edge {u} {v}", lineno)
            seen.add(key)
            rec = (u - 1, v - 1)
            if arity == 3:
                w = _int(tok[3], lineno, "weight")
                if w not in (1, 2):
                    raise ParseError(f"weight {w} is not 1 or 2", lineno)
                rec += (w,)
            edges.append(rec)
        else:
            raise ParseError(f"unknown record type {tok[0]!r}", lineno)
    if n is None:
        raise ParseError("missing 'p' header")
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges but {len(edges)} were given", header_line)
    return n, edges


def parse_graph(text: str) -> Graph:
    n, edges = _parse_edges(text, "edge", 2)
    return Graph(n, edges)


def parse_instance(text: str) -> Instance:
    n, edges = _parse_edges(text, "ghedge", 3)
    G = Graph(n, [(u, v) for u, v, _ in edges])
    H = Graph(n, [(u, v) for u, v, w in edges if w == 2])
    return Instance(G, H)


def emit_graph(G: Graph) -> str:
    lines = [f"p edge {G.n} {G.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in G.sorted_edges()]
    return "\n".join(lines) + "\n"


def emit_instance(inst: Instance) -> str:
    lines = [f"p ghedge {inst.n} {inst.G.m}"]
    lines += [f"e {u + 1} {v + 1} {w}" for u, v, w in inst.weighted_edges()]
    return "\n".join(lines) + "\n"


def emit_labeling(labels, span: int | None = None) -> str:
    lines = [f"l {v + 1} {x}" for v, x in enumerate(labels)]
    if span is not None:
        lines.append(f"s {span}")
    return "\n".join(lines) + "\n"


def parse_labeling(text: str, n: int) -> tuple[tuple[int, ...], int | None]:
    """Return the labels and the declared span (``None`` when absent)."""
    labels: dict[int, int] = {}
    span = None
    for lineno, tok in _records(text):
        if tok[0] == "l":
            if len(tok) != 3:
                raise ParseError("label record needs a vertex and a label", lineno)
            v = _int(tok[1], lineno, "vertex")
            x = _int(tok[2], lineno, "label")
            if not 1 <= v <= n:
                raise ParseError(f"vertex {v} outside 1..{n}", lineno)
            if x < 0:
                raise ParseError(f"label {x} is negative", lineno)
            if v - 1 in labels:
                raise ParseError(f"vertex {v} labeled twice", lineno)
            labels[v - 1] = x
        elif tok[0] == "s":
            if len(tok) != 2 or span is not None:
                raise ParseError("malformed or repeated span record", lineno)
            span = _int(tok[1], lineno, "span")
        else:
            raise ParseError(f"unknown record type {tok[0]!r}", lineno)
    missing = [v + 1 for v in range(n) if v not in labels]
    if missing:
        raise ParseError(f"unlabeled vertices {missing[:10]}")
    return tuple(labels[v] for v in range(n)), span
