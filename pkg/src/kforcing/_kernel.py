"""Bitset propagation kernels.

Sets of vertices are Python ints (bit ``v`` set iff ``v`` is a member). The
fixpoint of the propagation rule does not depend on the order in which
eligible vertices fire, so the solvers use the chaotic (worklist) version
here; traces use the synchronous engine in ``propagation``.
"""


def to_mask(vertices):
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def from_mask(mask):
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def closed_mask(masks, seed):
    """``N[S]`` for a bitset ``seed``."""
    out = seed
    m = seed
    while m:
        low = m & -m
        out |= masks[low.bit_length() - 1]
        m ^= low
    return out


def fixpoint(masks, k, observed):
    """Close ``observed`` under the k-forcing rule and return the final bitset."""
    if k == 0:
        return observed
    # Vertices whose whole neighborhood is observed can never fire again.
    done = 0
    changed = True
    while changed:
        changed = False
        pending = observed & ~done
        while pending:
            low = pending & -pending
            pending ^= low
            white = masks[low.bit_length() - 1] & ~observed
            if not white:
                done |= low
            elif white.bit_count() <= k:
                observed |= white
                done |= low
                changed = True
    return observed
