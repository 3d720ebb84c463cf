"""Plain-text graph format and JSON helpers.

Format::

    # comments may appear on any line
    n m
    u v          (m lines, 0 <= u < v < n)
    label v text (optional, after the edges)

``format_graph`` writes the canonical form (edges sorted, labels in vertex
order) so that ``format_graph(parse_graph(text)) == text`` for canonical text.
"""

import json

from .graph import Graph


class GraphFormatError(ValueError):
    pass


def parse_graph(text):
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append((lineno, line))
    if not lines:
        raise GraphFormatError("missing header line 'n m'")
    lineno, header = lines[0]
    try:
        n, m = (int(tok) for tok in header.split())
    except ValueError:
        raise GraphFormatError(f"line {lineno}: bad header {header!r}") from None
    if n < 1 or m < 0:
        raise GraphFormatError(f"line {lineno}: need n >= 1 and m >= 0")

    edges = set()
    labels = [None] * n
    body = lines[1:]
    if len(body) < m:
        raise GraphFormatError(f"expected {m} edge lines, found {len(body)}")
    for lineno, line in body[:m]:
        toks = line.split()
        try:
            u, v = int(toks[0]), int(toks[1])
        except (ValueError, IndexError):
            raise GraphFormatError(f"line {lineno}: bad edge {line!r}") from None
        if len(toks) != 2 or not 0 <= u < v < n:
            raise GraphFormatError(f"line {lineno}: edge must be 'u v' with 0 <= u < v < {n}")
        if (u, v) in edges:
            raise GraphFormatError(f"line {lineno}: duplicate edge {u} {v}")
        edges.add((u, v))
    for lineno, line in body[m:]:
        parts = line.split(maxsplit=2)
        if len(parts) != 3 or parts[0] != "label":
            raise GraphFormatError(f"line {lineno}: expected 'label v text', got {line!r}")
        try:
            v = int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: bad vertex {parts[1]!r}") from None
        if not 0 <= v < n:
            raise GraphFormatError(f"line {lineno}: label vertex {v} out of range")
        labels[v] = parts[2]
    return Graph(n, sorted(edges), labels)


def format_graph(g):
    edges = g.edges()
    out = [f"{g.order} {len(edges)}"]
    out.extend(f"{u} {v}" for u, v in edges)
    if g.labels is not None:
        out.extend(f"label {v} {lab}" for v, lab in enumerate(g.labels) if lab is not None)
    return "\n".join(out) + "\n"


def read_graph(path):
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def write_graph(g, path):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_graph(g))


def parse_id_list(text):
    """Parse ``"0,3,5"`` into ``[0, 3, 5]``; the empty string gives ``[]``."""
    text = text.strip()
    if not text:
        return []
    return [int(tok) for tok in text.split(",") if tok.strip()]


def read_parts(path):
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, list) or not all(isinstance(p, list) for p in data):
        raise ValueError("PARTS file must be a JSON array of arrays of vertex ids")
    return [[int(v) for v in part] for part in data]


def dumps(obj):
    """Deterministic JSON used for every CLI output."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
