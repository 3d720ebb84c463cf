"""Synchronous k-forcing and k-power-domination closures.

Round ``i + 1`` adds ``N(v)`` for every observed ``v`` that has between 1 and
``k`` unobserved neighbors in round ``i``; all eligible vertices fire at once.
Forcing starts from the seed itself, power domination from ``N[S]``.
"""

from dataclasses import dataclass, field

from . import _kernel
from .exceptions import PreconditionError
from .graph import closed_neighborhood
from .validation import check_graph, check_k, check_vertex_set

FORCING = "forcing"
POWER = "power"


@dataclass(frozen=True)
class PropagationTrace:
    """Round-by-round record of one closure.

    ``rounds[i]`` is the observed set after ``i`` applications of the rule;
    ``forcers[i]`` lists the ``(forcing vertex, newly observed vertex)`` pairs
    that turn ``rounds[i]`` into ``rounds[i + 1]``.
    """

    mode: str
    k: int
    rounds: tuple
    forcers: tuple
    order: int = field(repr=False)

    @property
    def terminal(self):
        return self.rounds[-1]

    @property
    def success(self):
        return len(self.terminal) == self.order

    def to_dict(self):
        return {
            "mode": self.mode,
            "k": self.k,
            "rounds": [sorted(r) for r in self.rounds],
            "forcers": [[list(p) for p in step] for step in self.forcers],
            "success": self.success,
        }


def _synchronous(g, k, start, mode):
    masks = g.masks
    observed = _kernel.to_mask(start)
    rounds = [frozenset(start)]
    forcers = []
    if k > 0:
        while True:
            added = 0
            pairs = []
            m = observed
            while m:
                low = m & -m
                m ^= low
                v = low.bit_length() - 1
                white = masks[v] & ~observed
                if white and white.bit_count() <= k:
                    added |= white
                    pairs.extend((v, w) for w in _kernel.from_mask(white))
            if not added:
                break
            observed |= added
            rounds.append(frozenset(_kernel.from_mask(observed)))
            pairs.sort(key=lambda p: (p[1], p[0]))
            forcers.append(tuple(pairs))
    return PropagationTrace(mode, k, tuple(rounds), tuple(forcers), g.order)


def forcing_closure(g, k, t):
    """Trace of the k-forcing process started from the blue set ``t``."""
    check_graph(g)
    k = check_k(k)
    t = check_vertex_set(g, t)
    return _synchronous(g, k, t, FORCING)


def power_closure(g, k, s):
    """Trace of the k-power-domination process started from ``s``."""
    check_graph(g)
    k = check_k(k)
    s = check_vertex_set(g, s)
    return _synchronous(g, k, closed_neighborhood(g, s), POWER)


def forcing_terminal(g, k, t):
    """Final observed set of the k-forcing process, as a frozenset."""
    k = check_k(k)
    t = check_vertex_set(g, t)
    return frozenset(_kernel.from_mask(_kernel.fixpoint(g.masks, k, _kernel.to_mask(t))))


def power_terminal(g, k, s):
    k = check_k(k)
    s = check_vertex_set(g, s)
    start = _kernel.closed_mask(g.masks, _kernel.to_mask(s))
    return frozenset(_kernel.from_mask(_kernel.fixpoint(g.masks, k, start)))


def is_k_forcing_set(g, k, t):
    k = check_k(k)
    t = check_vertex_set(g, t)
    full = (1 << g.order) - 1
    return _kernel.fixpoint(g.masks, k, _kernel.to_mask(t)) == full


def is_k_power_dominating_set(g, k, s):
    k = check_k(k)
    s = check_vertex_set(g, s)
    full = (1 << g.order) - 1
    start = _kernel.closed_mask(g.masks, _kernel.to_mask(s))
    return _kernel.fixpoint(g.masks, k, start) == full


def _subset_args(g, k, a, x):
    k = check_k(k)
    a = check_vertex_set(g, a, name="A")
    x = check_vertex_set(g, x, name="X")
    if not a <= x:
        extra = min(a - x)
        raise PreconditionError(f"A must be a subset of X; vertex {extra} is not in X", vertex=extra)
    return k, a, x


def is_k_forcing_set_of(g, k, a, x):
    """Whether ``a`` k-forces every vertex of ``x`` when propagating in ``g``.

    The closure runs in the whole graph, not in ``G[X]``.
    """
    k, a, x = _subset_args(g, k, a, x)
    reached = _kernel.fixpoint(g.masks, k, _kernel.to_mask(a))
    need = _kernel.to_mask(x)
    return reached & need == need


def is_k_power_dominating_set_of(g, k, a, x):
    k, a, x = _subset_args(g, k, a, x)
    start = _kernel.closed_mask(g.masks, _kernel.to_mask(a))
    reached = _kernel.fixpoint(g.masks, k, start)
    need = _kernel.to_mask(x)
    return reached & need == need
