"""Cardinality-increasing subset enumeration with a budget guard.

Candidates of one size are visited in lexicographic order of their sorted id
tuples, so the first hit is the lexicographically smallest witness. With
``workers > 1`` the candidates of each size are split by leading element
(round-robin over leading positions); every worker reports its own first hit
and the smallest one wins, which keeps the witness schedule-independent.
"""

from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from math import comb

from . import _kernel
from .exceptions import BudgetExceededError

DEFAULT_BUDGET = 10**9

FORCE = "force"
POWER = "power"
DOMINATE = "dominate"


class Tester:
    """Membership test for one candidate set, picklable for worker processes."""

    def __init__(self, masks, k, kind, target):
        self.masks = masks
        self.k = k
        self.kind = kind
        self.target = target
        self.closed = tuple(m | (1 << v) for v, m in enumerate(masks))

    def start(self, cand):
        if self.kind == FORCE:
            return _kernel.to_mask(cand)
        out = 0
        closed = self.closed
        for v in cand:
            out |= closed[v]
        return out

    def __call__(self, cand):
        observed = self.start(cand)
        target = self.target
        if observed & target == target:
            return True
        if self.kind == DOMINATE:
            return False
        return _kernel.fixpoint(self.masks, self.k, observed) & target == target


def _scan_leading(tester, pool, size, leading):
    tested = 0
    for i in leading:
        head = (pool[i],)
        for rest in combinations(pool[i + 1:], size - 1):
            cand = head + rest
            tested += 1
            if tester(cand):
                return cand, tested
    return None, tested


def first_at_size(tester, pool, size, executor=None, workers=1):
    """Lexicographically first accepted ``size``-subset of ``pool``.

    Returns ``(witness or None, number tested)``.
    """
    pool = tuple(pool)
    if size == 0:
        return ((), 1) if tester(()) else (None, 1)
    if size > len(pool):
        return None, 0
    last_lead = len(pool) - size + 1
    if executor is None or workers <= 1 or last_lead < 2:
        return _scan_leading(tester, pool, size, range(last_lead))
    shares = [range(w, last_lead, workers) for w in range(workers)]
    futures = [executor.submit(_scan_leading, tester, pool, size, share) for share in shares if len(share)]
    hits, tested = [], 0
    for fut in futures:
        hit, n = fut.result()
        tested += n
        if hit is not None:
            hits.append(hit)
    return (min(hits) if hits else None), tested


def minimum_subset(tester, pool, *, lo=1, hi=None, budget=DEFAULT_BUDGET, spent=0, workers=1):
    """Smallest accepted subset of ``pool`` with size in ``[lo, hi]``.

    Returns ``(witness or None, tested)``. Raises ``BudgetExceededError`` before
    starting a size whose full sweep could push the total past ``budget``.
    """
    pool = tuple(pool)
    hi = len(pool) if hi is None else min(hi, len(pool))
    tested = 0
    executor = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for size in range(lo, hi + 1):
            need = comb(len(pool), size)
            if spent + tested + need > budget:
                raise BudgetExceededError(
                    f"size-{size} sweep over a pool of {len(pool)} needs up to {need} candidate sets; "
                    f"budget {budget} with {spent + tested} already used",
                    needed=spent + tested + need,
                    budget=budget,
                )
            hit, n = first_at_size(tester, pool, size, executor, workers)
            tested += n
            if hit is not None:
                return hit, tested
        return None, tested
    finally:
        if executor is not None:
            executor.shutdown()
