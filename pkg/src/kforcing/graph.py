"""Immutable simple undirected graphs and the surgery operations on them.

Vertex ids are always ``0..n-1``. Every operation that produces a new graph
re-indexes densely and hands back an explicit ``id_map`` from surviving old
ids to new ids.
"""

from dataclasses import dataclass

from .exceptions import EmptyGraphError, InvalidVertexError
from .validation import check_vertex, check_vertex_set


class Graph:
    """Simple undirected graph on vertices ``0..order-1``.

    Parameters
    ----------
    order : int
        Number of vertices, at least 1.
    edges : iterable of (int, int)
        Unordered pairs; duplicates are merged, loops are rejected.
    labels : sequence of str or None, optional
        Per-vertex display labels (``None`` entries allowed).
    """

    __slots__ = ("_order", "_adj", "_masks", "_labels", "_hash")

    def __init__(self, order, edges=(), labels=None):
        order = int(order)
        if order < 1:
            raise EmptyGraphError("a graph needs at least one vertex")
        nbrs = [set() for _ in range(order)]
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < order and 0 <= v < order):
                raise InvalidVertexError(f"edge ({u}, {v}) out of range for order {order}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self._order = order
        self._adj = tuple(frozenset(s) for s in nbrs)
        self._masks = tuple(sum(1 << w for w in s) for s in nbrs)
        if labels is not None:
            labels = tuple(None if lab is None else str(lab) for lab in labels)
            if len(labels) != order:
                raise ValueError("labels must have one entry per vertex")
            if all(lab is None for lab in labels):
                labels = None
        self._labels = labels
        self._hash = None

    @classmethod
    def from_adjacency(cls, adjacency, labels=None):
        edges = [(u, v) for u, row in enumerate(adjacency) for v in row if u < v]
        g = cls(len(adjacency), edges, labels)
        for u, row in enumerate(adjacency):
            if set(row) != g._adj[u]:
                raise ValueError(f"adjacency is not symmetric at vertex {u}")
        return g

    @property
    def order(self):
        return self._order

    def __len__(self):
        return self._order

    @property
    def adjacency(self):
        return self._adj

    @property
    def masks(self):
        """Neighborhoods as integer bitsets (bit ``w`` set iff ``w`` is a neighbor)."""
        return self._masks

    @property
    def labels(self):
        return self._labels

    def label(self, v):
        if self._labels is None:
            return None
        return self._labels[v]

    def vertices(self):
        return range(self._order)

    def edges(self):
        """Edges as sorted ``(u, v)`` pairs with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self._order) for v in sorted(self._adj[u]) if u < v]

    @property
    def size(self):
        return sum(len(s) for s in self._adj) // 2

    def degree(self, v):
        return len(self._adj[v])

    def has_edge(self, u, v):
        return v in self._adj[u]

    def is_connected(self):
        return len(components(self)) == 1

    def is_regular(self):
        degs = {len(s) for s in self._adj}
        return len(degs) == 1

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self._order, self._adj, self._labels) == (other._order, other._adj, other._labels)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._order, self._adj, self._labels))
        return self._hash

    def __repr__(self):
        return f"Graph(order={self._order}, size={self.size})"

    def __getstate__(self):
        return (self._order, self.edges(), self._labels)

    def __setstate__(self, state):
        order, edges, labels = state
        Graph.__init__(self, order, edges, labels)


@dataclass(frozen=True)
class ContractionResult:
    graph: Graph
    contracted_vertex: int
    id_map: dict


def neighbors(g, v):
    """Open neighborhood of ``v``."""
    return g.adjacency[check_vertex(g, v)]


def closed_neighborhood(g, s):
    """``N[S]``: the members of ``s`` together with all their neighbors."""
    s = check_vertex_set(g, s)
    out = set(s)
    for v in s:
        out |= g.adjacency[v]
    return frozenset(out)


def open_neighborhood(g, s):
    """Union of ``N(v)`` over ``v`` in ``s``; members of ``s`` may appear."""
    s = check_vertex_set(g, s)
    out = set()
    for v in s:
        out |= g.adjacency[v]
    return frozenset(out)


def degree_stats(g):
    """Return ``(max_degree, min_degree, degrees)``."""
    if g.order < 1:
        raise EmptyGraphError("degree statistics of an empty graph")
    degs = tuple(len(s) for s in g.adjacency)
    return max(degs), min(degs), degs


def components(g):
    """Connected components as frozensets, ordered by their smallest vertex."""
    seen = [False] * g.order
    out = []
    for root in range(g.order):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        stack = [root]
        while stack:
            u = stack.pop()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        out.append(frozenset(comp))
    return out


def induced_subgraph(g, x):
    """``G[X]`` re-indexed to ``0..|X|-1`` in ascending old-id order.

    Returns ``(graph, id_map)`` with ``id_map`` sending old ids to new ones.
    """
    x = check_vertex_set(g, x, nonempty=True, name="X")
    keep = sorted(x)
    id_map = {old: new for new, old in enumerate(keep)}
    edges = [(id_map[u], id_map[v]) for u, v in g.edges() if u in x and v in x]
    labels = None
    if g.labels is not None:
        labels = [g.labels[v] for v in keep]
    return Graph(len(keep), edges, labels), id_map


def delete_vertices(g, x):
    """``G - X``; refuses to delete every vertex."""
    x = check_vertex_set(g, x)
    if len(x) == g.order:
        raise EmptyGraphError("deleting every vertex would leave an empty graph")
    return induced_subgraph(g, set(range(g.order)) - x)


def contract(g, x):
    """``G/X``: replace ``X`` by one new vertex adjacent to ``N[X] \\ X``.

    ``G[X]`` need not be connected. The new vertex takes the largest id;
    survivors keep their relative order.
    """
    x = check_vertex_set(g, x, nonempty=True, name="X")
    if len(x) == g.order:
        return ContractionResult(Graph(1), 0, {})
    keep = [v for v in range(g.order) if v not in x]
    id_map = {old: new for new, old in enumerate(keep)}
    vx = len(keep)
    edges = [(id_map[u], id_map[v]) for u, v in g.edges() if u not in x and v not in x]
    boundary = closed_neighborhood(g, x) - x
    edges.extend((id_map[w], vx) for w in sorted(boundary))
    labels = None
    if g.labels is not None:
        labels = [g.labels[v] for v in keep] + [None]
    return ContractionResult(Graph(vx + 1, edges, labels), vx, id_map)


def disjoint_union(*graphs):
    edges, labels, offset = [], [], 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges())
        labels.extend(h.labels if h.labels is not None else [None] * h.order)
        offset += h.order
    return Graph(offset, edges, labels)


def validate_graph(g):
    """Assert the structural invariants; used by the test-suite."""
    for v in range(g.order):
        if v in g.adjacency[v]:
            raise AssertionError(f"self-loop at {v}")
        for w in g.adjacency[v]:
            if not 0 <= w < g.order:
                raise AssertionError(f"neighbor {w} of {v} out of range")
            if v not in g.adjacency[w]:
                raise AssertionError(f"asymmetric edge {v}-{w}")
        if g.masks[v] != sum(1 << w for w in g.adjacency[v]):
            raise AssertionError(f"bitmask of {v} disagrees with adjacency")
    return True
