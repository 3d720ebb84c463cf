"""Graph families: Sierpinski graphs, the tightness gadgets, standard families
and seeded random connected graphs.

Id conventions (fixed, relied on by the tests):

* ``sierpinski(p, n)``: the label ``s_n ... s_1`` read as a base-``p`` number,
  so blocks sharing a prefix are contiguous id ranges.
* ``gadget_uq``: first clique ``0..q+1`` with ``x = 0``, second clique
  ``q+2..2q+3`` with ``y = q+2``.
* ``gadget_lq``: the hub (the vertex carrying the extra leaves) is ``0`` in
  both variants. (k >= 2): hub ``0`` is the pendant of ``v_1``; cycle
  ``v_i = i`` for ``i = 1..2q``; pendant on ``v_i`` (``i >= 2``) is
  ``2q + i - 1``; the ``q+1`` leaves on the hub follow. (k = 1): path
  ``v_i = i`` for ``i = 0..6``, then the ``q`` leaves on ``v_0``.
* ``gadget_tkc``: center ``0``, star leaves ``1..c``, then ``k+2`` leaves per
  star leaf in order.
* ``gadget_gpr``: path ``0..r-1``, then ``p`` pendants per path vertex.
"""

import random
from dataclasses import dataclass, field
from itertools import product

from .exceptions import KForcingError
from .graph import Graph, components
from .validation import check_positive_int

DEFAULT_SIERPINSKI_CAP = 1 << 16


@dataclass(frozen=True)
class Family:
    """A generated graph plus the metadata written to the sidecar file."""

    name: str
    params: dict
    graph: Graph
    x: frozenset = None
    extra: dict = field(default_factory=dict)

    def metadata(self):
        out = {"name": self.name, "params": dict(self.params), "order": self.graph.order}
        if self.x is not None:
            out["x"] = sorted(self.x)
        out.update(self.extra)
        return out


def _label_of(v, p, n):
    digits = []
    for _ in range(n):
        v, d = divmod(v, p)
        digits.append(d)
    return tuple(reversed(digits))


def sierpinski_label_to_id(digits, p):
    v = 0
    for d in digits:
        v = v * p + d
    return v


def sierpinski(p, n, *, cap=DEFAULT_SIERPINSKI_CAP):
    """The Sierpinski graph ``S_p^n`` with string labels ``s_n...s_1``.

    For each level ``r``, prefix of length ``n - r`` and digits ``a != b``, the
    vertex ``prefix a b^(r-1)`` is joined to ``prefix b a^(r-1)``.
    """
    p = check_positive_int(p, "p")
    n = check_positive_int(n, "n")
    if p < 2:
        raise ValueError("p must be at least 2")
    if p**n > cap:
        raise ValueError(f"S_{p}^{n} has {p**n} vertices, above the cap of {cap}")
    edges = []
    for r in range(1, n + 1):
        for prefix in product(range(p), repeat=n - r):
            for a in range(p):
                for b in range(a + 1, p):
                    u = prefix + (a,) + (b,) * (r - 1)
                    v = prefix + (b,) + (a,) * (r - 1)
                    edges.append((sierpinski_label_to_id(u, p), sierpinski_label_to_id(v, p)))
    sep = "" if p <= 10 else "."
    labels = [sep.join(map(str, _label_of(v, p, n))) for v in range(p**n)]
    return Graph(p**n, edges, labels)


def prefix_block(p, n, prefix):
    """Ids of ``sS_p^i``: vertices of ``S_p^n`` whose leftmost digits equal ``prefix``."""
    prefix = tuple(int(d) for d in prefix)
    if len(prefix) >= n:
        raise ValueError(f"prefix length {len(prefix)} must be below n = {n}")
    if any(not 0 <= d < p for d in prefix):
        raise ValueError(f"prefix digits must lie in 0..{p - 1}")
    rest = n - len(prefix)
    base = sierpinski_label_to_id(prefix, p) * p**rest
    return frozenset(range(base, base + p**rest))


def prefix_partition(p, n, length):
    """All prefix blocks of a given length, in increasing prefix order."""
    return [prefix_block(p, n, s) for s in product(range(p), repeat=length)]


def gadget_uq(k, q):
    """Two copies of ``K_{q+2}`` joined by one edge ``{x, y}``; ``X`` is the
    second copy minus ``y``."""
    k = check_positive_int(k, "k")
    if q < k:
        raise ValueError(f"q must be at least k (q={q}, k={k})")
    size = q + 2
    edges = [(u, v) for u in range(size) for v in range(u + 1, size)]
    edges += [(u + size, v + size) for u in range(size) for v in range(u + 1, size)]
    x, y = 0, size
    edges.append((x, y))
    g = Graph(2 * size, edges)
    return g, frozenset(range(size + 1, 2 * size))


def gadget_lq(k, q):
    """Lower-bound tightness gadget ``L_q`` and its set ``X``.

    ``k >= 2``: a ``2q``-cycle with one pendant per cycle vertex and ``q + 1``
    leaves hung on the pendant of ``v_1``; ``X`` is the cycle.
    ``k = 1``: the path ``v_0..v_6`` with ``q`` leaves on ``v_0``;
    ``X = {v_1, v_3, v_5}``.
    """
    k = check_positive_int(k, "k")
    if q < k:
        raise ValueError(f"q must be at least k (q={q}, k={k})")
    if k == 1:
        edges = [(i, i + 1) for i in range(6)]
        edges += [(0, 7 + j) for j in range(q)]
        return Graph(7 + q, edges), frozenset({1, 3, 5})
    c = 2 * q
    cyc = list(range(1, c + 1))
    edges = [(cyc[i], cyc[(i + 1) % c]) for i in range(c)]
    edges.append((0, 1))
    edges += [(v, c + v - 1) for v in cyc[1:]]
    edges += [(0, 2 * c + j) for j in range(q + 1)]
    return Graph(2 * c + q + 1, edges), frozenset(cyc)


def gadget_tkc(k, c):
    """Star ``K_{1,c}`` with ``k + 2`` leaves added at each of its leaves; ``X``
    is the set of vertices of degree above one."""
    k = check_positive_int(k, "k")
    c = check_positive_int(c, "c")
    edges = [(0, i) for i in range(1, c + 1)]
    nxt = c + 1
    for i in range(1, c + 1):
        for _ in range(k + 2):
            edges.append((i, nxt))
            nxt += 1
    g = Graph(nxt, edges)
    return g, frozenset(v for v in g.vertices() if g.degree(v) > 1)


def gadget_gpr(k, p, r):
    """Path of order ``r`` with ``p`` pendants on every path vertex.

    Requires ``p > 3r + k - 3``, the range where the private-neighbor bound is
    tight.
    """
    k = check_positive_int(k, "k")
    p = check_positive_int(p, "p")
    if r < 2:
        raise ValueError("r must be at least 2")
    if p <= 3 * r + k - 3:
        raise ValueError(f"need p > 3r + k - 3 = {3 * r + k - 3}, got p = {p}")
    edges = [(i, i + 1) for i in range(r - 1)]
    nxt = r
    for i in range(r):
        for _ in range(p):
            edges.append((i, nxt))
            nxt += 1
    return Graph(nxt, edges)


def path(n):
    n = check_positive_int(n, "n")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    n = check_positive_int(n, "n")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star(n):
    """``K_{1,n}`` with center ``0``."""
    n = check_positive_int(n, "n")
    return Graph(n + 1, [(0, i) for i in range(1, n + 1)])


def complete_bipartite(a, b):
    a = check_positive_int(a, "a")
    b = check_positive_int(b, "b")
    return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


_STANDARD = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "star": star,
    "complete_bipartite": complete_bipartite,
}


def standard_family(name, *params):
    try:
        return _STANDARD[name](*params)
    except KeyError:
        raise ValueError(f"unknown family {name!r}; expected one of {sorted(_STANDARD)}") from None


def random_connected(n, edge_prob, seed, *, max_tries=10**4):
    """Erdos-Renyi ``G(n, p)`` sample, redrawn until connected.

    The whole stream comes from ``random.Random(seed)``, so the result depends
    only on ``(n, edge_prob, seed)``.
    """
    n = check_positive_int(n, "n")
    if not 0.0 <= edge_prob <= 1.0:
        raise ValueError("edge_prob must lie in [0, 1]")
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for _ in range(max_tries):
        g = Graph(n, [e for e in pairs if rng.random() < edge_prob])
        if len(components(g)) == 1:
            return g
    raise KForcingError(f"no connected G({n}, {edge_prob}) sample in {max_tries} tries")


def build_family(name, *, k=1, p=None, n=None, q=None, c=None, r=None, prob=None, seed=0):
    """Dispatch used by the ``gen`` CLI subcommand."""
    if name == "sierpinski":
        return Family(name, {"p": p, "n": n}, sierpinski(p, n))
    if name == "uq":
        g, x = gadget_uq(k, q)
        return Family(name, {"k": k, "q": q}, g, x, {"x_vertex": 0, "y_vertex": q + 2})
    if name == "lq":
        g, x = gadget_lq(k, q)
        return Family(name, {"k": k, "q": q}, g, x)
    if name == "tkc":
        g, x = gadget_tkc(k, c)
        return Family(name, {"k": k, "c": c}, g, x)
    if name == "gpr":
        return Family(name, {"k": k, "p": p, "r": r}, gadget_gpr(k, p, r))
    if name in ("path", "cycle", "complete", "star"):
        return Family(name, {"n": n}, standard_family(name, n))
    if name == "complete_bipartite":
        return Family(name, {"p": p, "q": q}, complete_bipartite(p, q))
    if name == "random":
        return Family(name, {"n": n, "prob": prob, "seed": seed}, random_connected(n, prob, seed))
    raise ValueError(f"unknown family {name!r}")


FAMILY_NAMES = (
    "sierpinski", "uq", "lq", "tkc", "gpr", "path", "cycle", "complete", "star",
    "complete_bipartite", "random",
)
