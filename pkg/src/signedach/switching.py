"""Switching, switching equivalence and the tree-positive canonical form."""

from __future__ import annotations

from collections import deque
from typing import Iterable

from .core import NEG, InvalidParameter, SignedGraph


def _switch_set(G: SignedGraph, S: Iterable[int]) -> frozenset[int]:
    members = frozenset(S)
    for v in members:
        if not 0 <= v < G.order:
            raise InvalidParameter(f"vertex {v} out of range for order {G.order}")
    return members


def switch(G: SignedGraph, S: Iterable[int]) -> SignedGraph:
    """Flip the sign of every edge with exactly one end in S."""
    members = _switch_set(G, S)
    if not members:
        return G
    return SignedGraph(
        G.order,
        {(u, v): (-s if (u in members) != (v in members) else s) for (u, v), s in G.edges.items()},
    )


def spanning_forest(G: SignedGraph) -> list[tuple[int, int]]:
    """BFS forest: each component rooted at its least vertex, neighbours in index order.

    Returns tree edges as (parent, child) in discovery order.
    """
    seen = [False] * G.order
    tree = []
    for root in range(G.order):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in sorted(G.neighbours(u)):
                if not seen[w]:
                    seen[w] = True
                    tree.append((u, w))
                    queue.append(w)
    return tree


def canonical_form(G: SignedGraph) -> tuple[SignedGraph, frozenset[int]]:
    """Switch G so that every spanning-forest edge is positive.

    Roots are never switched, which makes the returned switch set unique.
    """
    flipped = [False] * G.order
    for parent, child in spanning_forest(G):
        # child is switched iff the path sign from the root is negative
        flipped[child] = flipped[parent] ^ (G.sign(parent, child) is NEG)
    S = frozenset(v for v in range(G.order) if flipped[v])
    return switch(G, S), S


def _same_underlying(G1: SignedGraph, G2: SignedGraph) -> None:
    if G1.order != G2.order or G1.edges.keys() != G2.edges.keys():
        raise InvalidParameter("graphs have different underlying graphs")


def are_equivalent(G1: SignedGraph, G2: SignedGraph) -> bool:
    _same_underlying(G1, G2)
    return canonical_form(G1)[0] == canonical_form(G2)[0]


def equivalence_switch_set(G1: SignedGraph, G2: SignedGraph) -> frozenset[int] | None:
    """A set S with switch(G1, S) == G2, or None when the two are not equivalent."""
    _same_underlying(G1, G2)
    C1, S1 = canonical_form(G1)
    C2, S2 = canonical_form(G2)
    if C1 != C2:
        return None
    return S1 ^ S2


def signature_balance(G: SignedGraph) -> int:
    """Parity of the number of negative edges: 0 even, 1 odd."""
    return G.negative_count() % 2
