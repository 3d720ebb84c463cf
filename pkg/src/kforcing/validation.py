"""Input validation helpers, in the spirit of ``sklearn.utils.validation``.

Every public entry point funnels its arguments through these so that error
types and messages stay uniform.
"""

from numbers import Integral

from .exceptions import EmptySetError, InvalidVertexError, PreconditionError


def check_graph(g):
    from .graph import Graph

    if not isinstance(g, Graph):
        raise TypeError(f"expected a Graph, got {type(g).__name__}")
    return g


def check_vertex(g, v):
    if isinstance(v, bool) or not isinstance(v, Integral):
        raise InvalidVertexError(f"vertex id must be an integer, got {v!r}")
    v = int(v)
    if not 0 <= v < g.order:
        raise InvalidVertexError(f"vertex {v} out of range for graph of order {g.order}")
    return v


def check_vertex_set(g, vertices, *, nonempty=False, name="vertex set"):
    """Return ``vertices`` as a frozenset after range-checking every member."""
    if isinstance(vertices, Integral):
        vertices = (vertices,)
    out = frozenset(check_vertex(g, v) for v in vertices)
    if nonempty and not out:
        raise EmptySetError(f"{name} must be nonempty")
    return out


def check_k(k):
    if isinstance(k, bool) or not isinstance(k, Integral) or k < 0:
        raise ValueError(f"k must be a nonnegative integer, got {k!r}")
    return int(k)


def check_positive_int(value, name):
    if isinstance(value, bool) or not isinstance(value, Integral) or value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value!r}")
    return int(value)


def check_connected(g, what="graph"):
    if not g.is_connected():
        raise PreconditionError(f"{what} must be connected")
