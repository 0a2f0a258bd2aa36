"""Exhaustive induced-subgraph search on small unsigned graphs."""

from __future__ import annotations

from itertools import combinations, permutations

from .core import Graph, SignedGraph


def _unsigned(G: Graph | SignedGraph) -> Graph:
    return G.underlying() if isinstance(G, SignedGraph) else G


def clique_number(G: Graph | SignedGraph) -> int:
    G = _unsigned(G)
    adj = G.adjacency()
    best = 0 if G.order == 0 else 1
    for r in range(2, G.order + 1):
        if any(all(b in adj[a] for a, b in combinations(S, 2)) for S in combinations(range(G.order), r)):
            best = r
        else:
            break
    return best


def find_induced(G: Graph | SignedGraph, pattern: Graph) -> tuple[int, ...] | None:
    """Vertices of G inducing a copy of `pattern`, listed in pattern order, or None."""
    G = _unsigned(G)
    adj = G.adjacency()
    p = pattern.order
    want = {tuple(e) for e in pattern.sorted_edges()}
    for S in combinations(range(G.order), p):
        for image in permutations(S):
            if all(
                (image[b] in adj[image[a]]) == ((a, b) in want)
                for a, b in combinations(range(p), 2)
            ):
                return image
    return None


def path_pattern(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def disjoint_union(*parts: Graph) -> Graph:
    edges, offset = [], 0
    for H in parts:
        edges += [(u + offset, v + offset) for u, v in H.sorted_edges()]
        offset += H.order
    return Graph(offset, edges)
