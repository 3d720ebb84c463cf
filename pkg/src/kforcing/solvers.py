"""Exact minimum k-forcing, k-power-dominating and dominating sets.

All three solvers enumerate candidate sets in increasing cardinality, so a
reported value ``v`` comes with the certificate that every smaller candidate
over the searched pool was tested and rejected. Disconnected graphs are
solved one component at a time and the results summed.

For power domination on a connected component with maximum degree at least
``k + 2`` the pool is cut down to vertices of degree at least ``k + 2``; some
minimum set always lives there. No such cut is sound for forcing: a star
with more than ``k`` leaves needs a leaf in every minimum forcing set.
"""

from dataclasses import dataclass
from itertools import combinations
from math import comb

from sklearn.base import BaseEstimator

from . import _kernel
from ._enumerate import DEFAULT_BUDGET, DOMINATE, FORCE, POWER, Tester, first_at_size, minimum_subset
from .exceptions import BudgetExceededError, PreconditionError
from .graph import components, degree_stats
from .propagation import is_k_forcing_set, is_k_power_dominating_set
from .validation import check_connected, check_graph, check_k, check_positive_int, check_vertex, check_vertex_set

PARAM_NAMES = {FORCE: "Zk", POWER: "gammaPk", DOMINATE: "gamma"}


@dataclass(frozen=True)
class SolveResult:
    parameter: str
    k: int
    value: int
    witness: tuple
    nodes_explored: int
    pruned_pool: tuple = None
    pool_note: str = "full vertex pool"

    def to_dict(self):
        return {
            "parameter": self.parameter,
            "k": self.k,
            "value": self.value,
            "witness": list(self.witness),
            "nodes_explored": self.nodes_explored,
            "pruned_pool": None if self.pruned_pool is None else list(self.pruned_pool),
        }


def _solve(g, k, kind, *, budget, workers, prune):
    check_graph(g)
    k = check_k(k)
    budget = check_positive_int(budget, "budget")
    workers = check_positive_int(workers, "workers")
    tester_masks = g.masks
    witness, explored, pools, notes = [], 0, [], []
    for comp in components(g):
        target = _kernel.to_mask(comp)
        verts = sorted(comp)
        if kind == FORCE and k == 0:
            # The rule never fires, so only the whole component forces itself.
            witness.extend(verts)
            notes.append("k=0: only V forces")
            continue
        comp_max = max(g.degree(v) for v in verts)
        if kind == POWER and comp_max <= k + 1:
            # Any single vertex works once every degree is at most k+1.
            witness.append(verts[0])
            notes.append("max degree <= k+1: any single vertex")
            continue
        pool = verts
        if kind == POWER and prune:
            pool = [v for v in verts if g.degree(v) >= k + 2]
            pools.extend(pool)
            notes.append("pool restricted to degree >= k+2")
        tester = Tester(tester_masks, k, kind, target)
        hit, n = minimum_subset(tester, pool, budget=budget, spent=explored, workers=workers)
        explored += n
        if hit is None:
            # Unreachable: the whole component is always a valid set.
            raise RuntimeError(f"no {PARAM_NAMES[kind]} set found in component starting at {verts[0]}")
        witness.extend(hit)
    return SolveResult(
        parameter=PARAM_NAMES[kind],
        k=k if kind != DOMINATE else 0,
        value=len(witness),
        witness=tuple(sorted(witness)),
        nodes_explored=explored,
        pruned_pool=tuple(sorted(pools)) if pools else None,
        pool_note="; ".join(dict.fromkeys(notes)) or "full vertex pool",
    )


def min_k_forcing(g, k, *, budget=DEFAULT_BUDGET, workers=1):
    """Exact ``Z_k(G)`` over the full vertex pool."""
    return _solve(g, k, FORCE, budget=budget, workers=workers, prune=False)


def min_k_power_dominating(g, k, *, budget=DEFAULT_BUDGET, workers=1, prune=True):
    """Exact ``gamma_{P,k}(G)``; ``prune=False`` disables the degree cut."""
    return _solve(g, k, POWER, budget=budget, workers=workers, prune=prune)


def min_dominating(g, *, budget=DEFAULT_BUDGET, workers=1):
    """Exact domination number by plain enumeration of ``N[S] == V``."""
    return _solve(g, 0, DOMINATE, budget=budget, workers=workers, prune=False)


def first_minimum_within(g, k, kind, value, pool, *, budget=DEFAULT_BUDGET):
    """Lexicographically first set of size ``value`` inside ``pool`` that works on all of ``g``.

    ``kind`` is ``"force"`` or ``"power"``. Returns a tuple or ``None``.
    """
    pool = sorted(pool)
    if comb(len(pool), value) > budget:
        raise BudgetExceededError(
            f"scanning {comb(len(pool), value)} sets of size {value} exceeds budget {budget}",
            needed=comb(len(pool), value),
            budget=budget,
        )
    tester = Tester(g.masks, k, kind, (1 << g.order) - 1)
    hit, _ = first_at_size(tester, pool, value)
    return hit


def external_private_neighbors(g, s, v):
    """Neighbors of ``v`` outside ``s`` that no other member of ``s`` is adjacent to."""
    s = check_vertex_set(g, s)
    v = check_vertex(g, v)
    if v not in s:
        raise PreconditionError(f"vertex {v} is not in S", vertex=v)
    others = set()
    for u in s:
        if u != v:
            others |= g.adjacency[u]
    return frozenset(x for x in g.adjacency[v] if x not in s and x not in others)


def _has_enough_privates(g, s, k):
    return all(len(external_private_neighbors(g, s, u)) >= k + 1 for u in s)


def min_k_pds_with_external_privates(g, k, *, budget=DEFAULT_BUDGET):
    """A minimum k-PDS whose members each have at least ``k + 1`` external private neighbors.

    Scans all minimum-cardinality sets in lexicographic order. Such a set
    always exists on connected graphs with maximum degree at least ``k + 2``,
    so coming up empty is treated as an internal error.
    """
    check_graph(g)
    k = check_k(k)
    check_connected(g)
    dmax, _, _ = degree_stats(g)
    if dmax < k + 2:
        raise PreconditionError(f"needs maximum degree >= k+2 = {k + 2}, got {dmax}")
    base = min_k_power_dominating(g, k, budget=budget)
    value = base.value
    need = comb(g.order, value)
    if base.nodes_explored + need > budget:
        raise BudgetExceededError("private-neighbor filter exceeds budget", needed=need, budget=budget)
    tester = Tester(g.masks, k, POWER, (1 << g.order) - 1)
    tested = 0
    for cand in combinations(range(g.order), value):
        tested += 1
        if tester(cand) and _has_enough_privates(g, cand, k):
            return SolveResult(
                parameter="gammaPk",
                k=k,
                value=value,
                witness=cand,
                nodes_explored=base.nodes_explored + tested,
                pruned_pool=None,
                pool_note="minimum sets filtered by external private neighbors",
            )
    raise RuntimeError("no minimum k-PDS with k+1 external private neighbors per vertex; solver bug")


def forcing_set_from_pds(g, k, s):
    """Build a k-forcing set from a k-PDS whose members have enough private neighbors.

    For each ``u`` in ``s`` the ``k`` smallest external private neighbors are
    dropped from ``N[u]``; the union of what is left forces ``g``, and has at
    most ``sum(deg(u) + 1 - k)`` vertices.
    """
    check_graph(g)
    k = check_k(k)
    s = check_vertex_set(g, s, nonempty=True, name="S")
    if not is_k_power_dominating_set(g, k, s):
        raise PreconditionError("S is not a k-power dominating set")
    out = set()
    for u in sorted(s):
        privates = sorted(external_private_neighbors(g, s, u))
        if len(privates) < k + 1:
            raise PreconditionError(
                f"vertex {u} has {len(privates)} external private neighbors, needs {k + 1}",
                vertex=u,
            )
        out |= (g.adjacency[u] | {u}) - set(privates[:k])
    limit = sum(g.degree(u) + 1 - k for u in s)
    if len(out) > limit or not is_k_forcing_set(g, k, out):
        raise RuntimeError("constructed set failed verification; construction bug")
    return frozenset(out)


class _SolverBase(BaseEstimator):
    def fit(self, graph, y=None):
        self.result_ = self._run(graph)
        self.value_ = self.result_.value
        self.witness_ = frozenset(self.result_.witness)
        return self


class KForcingSolver(_SolverBase):
    """Estimator wrapper around :func:`min_k_forcing`.

    After ``fit(graph)`` the attributes ``value_``, ``witness_`` and
    ``result_`` hold the answer.
    """

    def __init__(self, k=1, budget=DEFAULT_BUDGET, workers=1):
        self.k = k
        self.budget = budget
        self.workers = workers

    def _run(self, graph):
        return min_k_forcing(graph, self.k, budget=self.budget, workers=self.workers)


class KPowerDominationSolver(_SolverBase):
    def __init__(self, k=1, budget=DEFAULT_BUDGET, workers=1, prune=True):
        self.k = k
        self.budget = budget
        self.workers = workers
        self.prune = prune

    def _run(self, graph):
        return min_k_power_dominating(
            graph, self.k, budget=self.budget, workers=self.workers, prune=self.prune
        )


class DominationSolver(_SolverBase):
    def __init__(self, budget=DEFAULT_BUDGET, workers=1):
        self.budget = budget
        self.workers = workers

    def _run(self, graph):
        return min_dominating(graph, budget=self.budget, workers=self.workers)
