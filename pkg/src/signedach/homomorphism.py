"""Identifiable vertices, elementary homomorphic images and congruence classes."""

from __future__ import annotations

from itertools import combinations

from .core import InvalidParameter, Sign, SignedGraph
from .switching import switch


def signed_neighbourhood(G: SignedGraph, v: int) -> frozenset[tuple[int, Sign]]:
    if not 0 <= v < G.order:
        raise InvalidParameter(f"vertex {v} out of range")
    return frozenset(G.neighbours(v).items())


def _agreement(G: SignedGraph, u: int, v: int, common) -> str | None:
    """'same' or 'flipped' if the common-neighbour signs agree that way, else None.

    With no common neighbour both readings hold; 'same' is reported.
    """
    nu, nv = G.neighbours(u), G.neighbours(v)
    products = {nu[w] * nv[w] for w in common}
    if len(products) > 1:
        return None
    if products == {-1}:
        return "flipped"
    return "same"


def identifiable(G: SignedGraph, u: int, v: int) -> bool:
    if u == v:
        raise InvalidParameter("a vertex cannot be identified with itself")
    if G.has_edge(u, v):
        return False
    common = G.neighbours(u).keys() & G.neighbours(v).keys()
    return _agreement(G, u, v, common) is not None


def identify(G: SignedGraph, u: int, v: int) -> SignedGraph:
    """Merge v into u (switching v first when needed).

    The merged vertex keeps u's place in the index order; every vertex above
    v moves down by one.
    """
    if not identifiable(G, u, v):
        raise InvalidParameter(f"vertices {u} and {v} are not identifiable")
    common = G.neighbours(u).keys() & G.neighbours(v).keys()
    if _agreement(G, u, v, common) == "flipped":
        G = switch(G, {v})
    signs = dict(G.edges)
    for w, s in G.neighbours(v).items():
        del signs[(min(v, w), max(v, w))]
        signs[(min(u, w), max(u, w))] = s
    index = [x - (1 if x > v else 0) for x in range(G.order)]
    return SignedGraph(G.order - 1, {(index[a], index[b]): s for (a, b), s in signs.items()})


def identifiable_pairs(G: SignedGraph) -> list[tuple[int, int]]:
    return [(u, v) for u, v in combinations(range(G.order), 2) if identifiable(G, u, v)]


def _congruent(G: SignedGraph, u: int, v: int) -> bool:
    if G.has_edge(u, v):
        return False
    nu, nv = G.neighbours(u), G.neighbours(v)
    if nu.keys() != nv.keys():
        return False
    return _agreement(G, u, v, nu.keys()) is not None


def congruence_classes(G: SignedGraph) -> list[list[int]]:
    """Classes of the congruence relation, each sorted, listed by least member.

    Classes are the connected components of the pairwise relation. The
    relation is in fact transitive already, since sign vectors that agree up
    to a global factor of -1 compose, so the closure never merges more.
    """
    parent = list(range(G.order))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in combinations(range(G.order), 2):
        if _congruent(G, u, v):
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
    groups: dict[int, list[int]] = {}
    for x in range(G.order):
        groups.setdefault(find(x), []).append(x)
    return [groups[r] for r in sorted(groups)]


def reduced_signed_graph(G: SignedGraph) -> SignedGraph:
    """Contract every congruence class onto its least member.

    Vertex i of the result stands for the least member of the i-th class of
    congruence_classes(G). Members of a class share their neighbourhood, so
    keeping the representatives' edges loses nothing.
    """
    return G.induced(cls[0] for cls in congruence_classes(G))


def is_irreducible(G: SignedGraph) -> bool:
    return all(len(cls) == 1 for cls in congruence_classes(G))


def is_homomorphic_image(G: SignedGraph, H: SignedGraph, mapping, switched=()) -> bool:
    """Check that `mapping` (vertex of G -> vertex of H) is a signed homomorphism
    after switching `switched` in G: edges go to edges with the same sign.
    """
    G = switch(G, switched)
    for a, b, s in G.sorted_edges():
        x, y = mapping[a], mapping[b]
        if x == y or not H.has_edge(x, y) or H.sign(x, y) != s:
            return False
    return True


def identification_map(order: int, u: int, v: int) -> list[int]:
    """Vertex map from G to identify(G, u, v)."""
    target = [x - (1 if x > v else 0) for x in range(order)]
    target[v] = target[u]
    return target
