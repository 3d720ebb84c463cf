"""Definition-literal reference engine, kept deliberately naive.

It shares no code with the bitset engines and serves as their oracle.
"""


def reference_rounds(adjacency, k, start):
    """Return the list of observed sets ``F^0, F^1, ...`` until nothing changes."""
    current = set(start)
    rounds = [frozenset(current)]
    while True:
        nxt = set(current)
        for v in current:
            unobserved = set(adjacency[v]) - current
            if 1 <= len(unobserved) <= k:
                nxt |= set(adjacency[v])
        if nxt == current:
            return rounds
        current = nxt
        rounds.append(frozenset(current))


def reference_closed_neighborhood(adjacency, s):
    out = set(s)
    for v in s:
        out |= set(adjacency[v])
    return out


def reference_power_rounds(adjacency, k, s):
    return reference_rounds(adjacency, k, reference_closed_neighborhood(adjacency, s))
