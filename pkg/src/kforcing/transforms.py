"""Subgraph contraction bounds and partition bounds.

``build_xhat`` turns ``G[X]`` into a graph where every vertex of ``X`` keeps
its degree from ``G`` by growing pendant leaves. The bound functions solve
the contracted graph and ``X-hat`` exactly and return an interval around the
parameter of ``G``; the partition bounds solve one ``X-hat`` per part
(concurrently if asked) and glue the per-part witnesses together.
"""

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from sklearn.base import BaseEstimator, TransformerMixin

from ._enumerate import DEFAULT_BUDGET, FORCE, POWER
from .exceptions import PreconditionError
from .graph import Graph, closed_neighborhood, components, contract, induced_subgraph
from .propagation import is_k_forcing_set, is_k_power_dominating_set
from .solvers import first_minimum_within, min_k_forcing, min_k_power_dominating
from .validation import check_connected, check_graph, check_k, check_positive_int, check_vertex_set


@dataclass(frozen=True)
class XHatResult:
    """``graph`` is X-hat; ``core_ids[i]`` is the X-hat id of the i-th smallest
    member of X; ``pendant_map`` maps each core id to its pendant ids."""

    graph: Graph
    core_ids: tuple
    pendant_map: dict
    id_map: dict

    @property
    def core_set(self):
        return frozenset(self.core_ids)

    def lift(self, vertices):
        """Map core ids of X-hat back to ids of the original graph."""
        back = {new: old for old, new in self.id_map.items()}
        return frozenset(back[v] for v in vertices)


@dataclass(frozen=True)
class BoundInterval:
    lower: int
    upper: int
    lower_ref: str
    upper_ref: str
    witness_upper: frozenset = None
    details: dict = field(default_factory=dict)

    def contains(self, value):
        return self.lower <= value <= self.upper

    def to_dict(self):
        return {
            "lower": self.lower,
            "upper": self.upper,
            "lower_ref": self.lower_ref,
            "upper_ref": self.upper_ref,
            "witness_upper": None if self.witness_upper is None else sorted(self.witness_upper),
            "details": self.details,
        }


@dataclass(frozen=True)
class HypothesisReport:
    met: bool
    description: str
    failing_parts: tuple = ()

    def to_dict(self):
        return {"met": self.met, "description": self.description, "failing_parts": list(self.failing_parts)}


@dataclass(frozen=True)
class ContractionBoundResult:
    interval: BoundInterval
    hypothesis: HypothesisReport

    def to_dict(self):
        return {
            "interval": None if self.interval is None else self.interval.to_dict(),
            "hypothesis": self.hypothesis.to_dict(),
        }


@dataclass(frozen=True)
class PartResult:
    index: int
    value: int
    witness: frozenset
    hypothesis_met: bool
    seconds: float


@dataclass(frozen=True)
class PartitionBoundResult:
    parameter: str
    k: int
    bound: int
    witness: frozenset
    parts: tuple
    hypothesis: HypothesisReport

    def to_dict(self, timings=False):
        parts = []
        for pr in self.parts:
            entry = {
                "index": pr.index,
                "value": pr.value,
                "witness": None if pr.witness is None else sorted(pr.witness),
                "hypothesis_met": pr.hypothesis_met,
            }
            if timings:
                entry["seconds"] = round(pr.seconds, 6)
            parts.append(entry)
        return {
            "parameter": self.parameter,
            "k": self.k,
            "bound": self.bound,
            "witness": None if self.witness is None else sorted(self.witness),
            "parts": parts,
            "hypothesis": self.hypothesis.to_dict(),
        }


def build_xhat(g, x):
    check_graph(g)
    x = check_vertex_set(g, x, nonempty=True, name="X")
    core, id_map = induced_subgraph(g, x)
    edges = core.edges()
    nxt = core.order
    pendant_map = {}
    for old in sorted(x):
        cid = id_map[old]
        outside = len(g.adjacency[old] - x)
        pendant_map[cid] = tuple(range(nxt, nxt + outside))
        edges.extend((cid, leaf) for leaf in pendant_map[cid])
        nxt += outside
    labels = None
    if g.labels is not None:
        labels = list(core.labels) + [None] * (nxt - core.order)
    return XHatResult(Graph(nxt, edges, labels), tuple(range(core.order)), pendant_map, id_map)


def xhat_power_witness(xh, k, *, budget=DEFAULT_BUDGET):
    """``(value, witness)``: gamma_{P,k}(X-hat) and the lexicographically first
    minimum k-PDS of X-hat lying inside the core, as X-hat ids."""
    res = min_k_power_dominating(xh.graph, k, budget=budget)
    hit = _first_core_set(xh, k, POWER, res.value, budget)
    if hit is None:
        raise RuntimeError("no minimum k-PDS of X-hat inside X; implementation bug")
    return res.value, frozenset(hit)


def _first_core_set(xh, k, kind, value, budget):
    # Per component of X-hat, since a disconnected core needs one piece per component.
    comps = components(xh.graph)
    if len(comps) == 1:
        return first_minimum_within(xh.graph, k, kind, value, xh.core_ids, budget=budget)
    picked = []
    for comp in comps:
        sub, idm = induced_subgraph(xh.graph, comp)
        solve = min_k_forcing if kind == FORCE else min_k_power_dominating
        sub_value = solve(sub, k, budget=budget).value
        core_here = [idm[v] for v in comp if v in xh.core_set]
        hit = first_minimum_within(sub, k, kind, sub_value, core_here, budget=budget)
        if hit is None:
            return None
        back = {new: old for old, new in idm.items()}
        picked.extend(back[v] for v in hit)
    return tuple(sorted(picked))


def xhat_forcing_witness(xh, k, *, budget=DEFAULT_BUDGET):
    """``(value, witness or None)`` for Z_k(X-hat); the witness is the first
    minimum k-forcing set inside the core, ``None`` when every one uses a pendant."""
    res = min_k_forcing(xh.graph, k, budget=budget)
    hit = _first_core_set(xh, k, FORCE, res.value, budget)
    return res.value, None if hit is None else frozenset(hit)


def _lift_contracted(cr, vertices):
    back = {new: old for old, new in cr.id_map.items()}
    return frozenset(back[v] for v in vertices if v != cr.contracted_vertex)


def pd_contraction_bounds(g, k, x, *, budget=DEFAULT_BUDGET):
    """``[gamma(G/X) - 1, gamma(G/X) + gamma(X-hat)]`` for ``gamma_{P,k}(G)``.

    The upper witness is a minimum set of ``G/X`` without the contracted
    vertex, plus a minimum set of X-hat chosen inside ``X``.
    """
    check_graph(g)
    k = check_k(k)
    x = check_vertex_set(g, x, nonempty=True, name="X")
    check_connected(g)
    cr = contract(g, x)
    contracted = min_k_power_dominating(cr.graph, k, budget=budget)
    xh = build_xhat(g, x)
    xhat_value, xhat_wit = xhat_power_witness(xh, k, budget=budget)
    witness = _lift_contracted(cr, contracted.witness) | xh.lift(xhat_wit)
    if not is_k_power_dominating_set(g, k, witness):
        raise RuntimeError("contraction upper-bound witness failed verification")
    return BoundInterval(
        lower=max(1, contracted.value - 1),
        upper=contracted.value + xhat_value,
        lower_ref="gamma(G/X) - 1",
        upper_ref="gamma(G/X) + gamma(X-hat)",
        witness_upper=witness,
        details={"contracted": contracted.value, "xhat": xhat_value},
    )


def _check_low_degree(g, x, limit):
    for v in sorted(x):
        if g.degree(v) > limit:
            raise PreconditionError(f"vertex {v} has degree {g.degree(v)} > {limit}", vertex=v)


def pd_low_degree_bounds(g, k, x, *, budget=DEFAULT_BUDGET):
    """``[gamma(G/X) - 1, gamma(G/X) + c(G[X])]`` when every vertex of ``X`` has
    degree at most ``k + 1``."""
    check_graph(g)
    k = check_k(k)
    x = check_vertex_set(g, x, nonempty=True, name="X")
    check_connected(g)
    _check_low_degree(g, x, k + 1)
    cr = contract(g, x)
    contracted = min_k_power_dominating(cr.graph, k, budget=budget)
    sub, id_map = induced_subgraph(g, x)
    back = {new: old for old, new in id_map.items()}
    comps = components(sub)
    # One vertex per component of G[X] observes all of N[X].
    reps = frozenset(back[min(c)] for c in comps)
    witness = _lift_contracted(cr, contracted.witness) | reps
    if not is_k_power_dominating_set(g, k, witness):
        raise RuntimeError("low-degree upper-bound witness failed verification")
    return BoundInterval(
        lower=max(1, contracted.value - 1),
        upper=contracted.value + len(comps),
        lower_ref="gamma(G/X) - 1",
        upper_ref="gamma(G/X) + c(G[X])",
        witness_upper=witness,
        details={"contracted": contracted.value, "components": len(comps)},
    )


def pd_contraction_monotone_k1(g, x, *, budget=DEFAULT_BUDGET):
    """``(gamma_{P,1}(G), gamma_{P,1}(G/X), holds)`` for connected ``G[X]``
    with all degrees in ``X`` at most 2; ``holds`` must come out true."""
    check_graph(g)
    x = check_vertex_set(g, x, nonempty=True, name="X")
    check_connected(g)
    _check_low_degree(g, x, 2)
    sub, _ = induced_subgraph(g, x)
    check_connected(sub, "G[X]")
    value_g = min_k_power_dominating(g, 1, budget=budget).value
    value_gx = min_k_power_dominating(contract(g, x).graph, 1, budget=budget).value
    return value_g, value_gx, value_gx <= value_g


def zf_contraction_bounds(g, k, x, *, budget=DEFAULT_BUDGET):
    """Contraction window for ``Z_k(G)``, gated on X-hat having a minimum
    k-forcing set inside ``X``.

    The lower end is ``Z(G/X) - 1`` when ``|N[X] \\ X| <= k`` and
    ``Z(G/X) - |N[X] \\ X| + k`` otherwise.
    """
    check_graph(g)
    k = check_k(k)
    x = check_vertex_set(g, x, nonempty=True, name="X")
    check_connected(g)
    xh = build_xhat(g, x)
    xhat_value, xhat_wit = xhat_forcing_witness(xh, k, budget=budget)
    if xhat_wit is None:
        return ContractionBoundResult(
            None,
            HypothesisReport(False, "every minimum k-forcing set of X-hat uses a pendant vertex"),
        )
    boundary = len(closed_neighborhood(g, x) - x)
    contracted = min_k_forcing(contract(g, x).graph, k, budget=budget).value
    if boundary <= k:
        lower, lower_ref = contracted - 1, "Z(G/X) - 1"
    else:
        lower, lower_ref = contracted - boundary + k, "Z(G/X) - |N[X]\\X| + k"
    interval = BoundInterval(
        lower=max(1, lower),
        upper=contracted + xhat_value,
        lower_ref=lower_ref,
        upper_ref="Z(G/X) + Z(X-hat)",
        details={"contracted": contracted, "xhat": xhat_value, "boundary": boundary},
    )
    return ContractionBoundResult(interval, HypothesisReport(True, "X-hat has a minimum k-forcing set inside X"))


def check_partition(g, parts):
    parts = [check_vertex_set(g, p, nonempty=True, name=f"part {i}") for i, p in enumerate(parts)]
    if not parts:
        raise ValueError("partition needs at least one part")
    seen = set()
    for i, p in enumerate(parts):
        clash = seen & p
        if clash:
            raise ValueError(f"part {i} overlaps an earlier part at vertex {min(clash)}")
        seen |= p
    if len(seen) != g.order:
        missing = min(set(range(g.order)) - seen)
        raise ValueError(f"parts do not cover vertex {missing}")
    return parts


def _solve_part(args):
    g, k, part, index, kind, budget = args
    start = time.perf_counter()
    xh = build_xhat(g, part)
    if kind == POWER:
        value, wit = xhat_power_witness(xh, k, budget=budget)
        met = True
    else:
        value, wit = xhat_forcing_witness(xh, k, budget=budget)
        met = wit is not None
    lifted = None if wit is None else xh.lift(wit)
    return PartResult(index, value, lifted, met, time.perf_counter() - start)


def _run_parts(g, k, parts, kind, workers, budget):
    jobs = [(g, k, part, i, kind, budget) for i, part in enumerate(parts)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_solve_part, jobs))
    else:
        results = [_solve_part(job) for job in jobs]
    return tuple(sorted(results, key=lambda r: r.index))


def pd_partition_bound(g, k, parts, *, workers=1, budget=DEFAULT_BUDGET):
    """Sum of ``gamma_{P,k}(X-hat_i)`` over the parts, with the union of the
    per-part witnesses checked to be a k-PDS of ``g``."""
    check_graph(g)
    k = check_k(k)
    workers = check_positive_int(workers, "workers")
    check_connected(g)
    parts = check_partition(g, parts)
    results = _run_parts(g, k, parts, POWER, workers, budget)
    witness = frozenset().union(*(r.witness for r in results))
    if not is_k_power_dominating_set(g, k, witness):
        raise RuntimeError("partition witness failed verification")
    return PartitionBoundResult(
        "gammaPk", k, sum(r.value for r in results), witness, results,
        HypothesisReport(True, "always holds for power domination"),
    )


def zf_partition_bound(g, k, parts, *, workers=1, budget=DEFAULT_BUDGET):
    """Sum of ``Z_k(X-hat_i)``, emitted only when every X-hat_i has a minimum
    k-forcing set inside its part; otherwise the failing parts are named."""
    check_graph(g)
    k = check_k(k)
    workers = check_positive_int(workers, "workers")
    check_connected(g)
    parts = check_partition(g, parts)
    results = _run_parts(g, k, parts, FORCE, workers, budget)
    failing = tuple(r.index for r in results if not r.hypothesis_met)
    if failing:
        report = HypothesisReport(
            False, "some X-hat_i has no minimum k-forcing set inside P_i", failing
        )
        return PartitionBoundResult("Zk", k, None, None, results, report)
    witness = frozenset().union(*(r.witness for r in results))
    if not is_k_forcing_set(g, k, witness):
        raise RuntimeError("partition witness failed verification")
    return PartitionBoundResult(
        "Zk", k, sum(r.value for r in results), witness, results,
        HypothesisReport(True, "every X-hat_i has a minimum k-forcing set inside P_i"),
    )


class Contraction(TransformerMixin, BaseEstimator):
    """Transformer form of :func:`contract`: ``transform(g)`` returns G/X."""

    def __init__(self, vertices=()):
        self.vertices = vertices

    def fit(self, graph, y=None):
        self.vertices_ = check_vertex_set(check_graph(graph), self.vertices, nonempty=True, name="X")
        return self

    def transform(self, graph):
        result = contract(graph, self.vertices_)
        self.contracted_vertex_ = result.contracted_vertex
        self.id_map_ = result.id_map
        return result.graph


class XHat(TransformerMixin, BaseEstimator):
    """Transformer form of :func:`build_xhat`."""

    def __init__(self, vertices=()):
        self.vertices = vertices

    def fit(self, graph, y=None):
        self.vertices_ = check_vertex_set(check_graph(graph), self.vertices, nonempty=True, name="X")
        return self

    def transform(self, graph):
        result = build_xhat(graph, self.vertices_)
        self.pendant_map_ = result.pendant_map
        self.core_ids_ = result.core_ids
        return result.graph


class PartitionBound(BaseEstimator):
    """Estimator form of the partition bounds; ``param`` is ``"pdk"`` or ``"zk"``."""

    def __init__(self, k=1, parts=None, param="pdk", workers=1, budget=DEFAULT_BUDGET):
        self.k = k
        self.parts = parts
        self.param = param
        self.workers = workers
        self.budget = budget

    def fit(self, graph, y=None):
        if self.param not in ("pdk", "zk"):
            raise ValueError(f"param must be 'pdk' or 'zk', got {self.param!r}")
        fn = pd_partition_bound if self.param == "pdk" else zf_partition_bound
        self.result_ = fn(graph, self.k, self.parts, workers=self.workers, budget=self.budget)
        self.bound_ = self.result_.bound
        self.witness_ = self.result_.witness
        return self
