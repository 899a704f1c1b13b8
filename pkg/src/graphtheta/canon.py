"""Brute-force canonical forms for small graphs.

The canonical key of a graph is its order followed by the minimal
upper-triangle adjacency bit string, minimized over all vertex
orderings that list vertices by ascending degree (isomorphisms map
degree classes onto degree classes, so restricting to degree-sorted
orderings keeps the key isomorphism-invariant while pruning most of
the permutation space).

The search extends orderings position by position, keeping every
partial ordering that attains the minimal bit prefix.  Ties (and thus
the number of live partials) only survive along automorphism-like
symmetry, so the search stays small for the orders handled here.
"""

from __future__ import annotations

from .graphs import Graph, GraphError

DEFAULT_MAX_ORDER = 10


def canonical_key(g: Graph, max_order: int = DEFAULT_MAX_ORDER) -> bytes:
    """Canonical byte string: equal keys iff isomorphic graphs.

    Only supported for small orders (default bound 10); raises
    :class:`GraphError` above the bound.
    """
    n = g.n
    if n > max_order:
        raise GraphError(f"canonical_key supports order <= {max_order}, got {n}")
    if n == 1:
        return bytes([1])

    masks = [0] * n
    for u in range(n):
        for v in g.adj[u]:
            masks[u] |= 1 << v

    # Position i must hold a vertex of the i-th smallest degree.
    order = sorted(range(n), key=lambda v: g.degrees[v])
    slot_degree = [g.degrees[v] for v in order]
    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(g.degrees[v], []).append(v)

    # partials: orderings sharing the identical minimal bit prefix
    partials: list[tuple[int, ...]] = [()]
    key_bits = 0
    for pos in range(n):
        candidates = by_degree[slot_degree[pos]]
        best = None
        extended: list[tuple[int, ...]] = []
        for perm in partials:
            used = set(perm)
            for v in candidates:
                if v in used:
                    continue
                bits = 0
                mv = masks[v]
                for u in perm:
                    bits = (bits << 1) | ((mv >> u) & 1)
                if best is None or bits < best:
                    best = bits
                    extended = [perm + (v,)]
                elif bits == best:
                    extended.append(perm + (v,))
        partials = extended
        key_bits = (key_bits << pos) | best  # row at position pos has pos bits
    total_bits = n * (n - 1) // 2
    return bytes([n]) + key_bits.to_bytes((total_bits + 7) // 8 or 1, "big")
