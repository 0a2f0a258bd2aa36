"""Proper and complete colourings, inferred colourings and colour-class transformations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import (
    NEG,
    POS,
    EdgeType,
    InvalidParameter,
    Sign,
    SignedGraph,
    SignedMultigraph,
    build_kstar,
    colour_set,
    kstar_edge_types,
    magnitudes,
)
from .switching import switch


@dataclass(frozen=True)
class Colouring:
    """A k-colouring: `assignment[v]` is the colour of vertex v, drawn from M_k."""

    k: int
    assignment: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "assignment", tuple(int(c) for c in self.assignment))
        allowed = set(colour_set(self.k))
        for v, c in enumerate(self.assignment):
            if c not in allowed:
                raise InvalidParameter(f"colour {c} of vertex {v} is not in M_{self.k}")

    def __getitem__(self, v: int) -> int:
        return self.assignment[v]

    def __len__(self) -> int:
        return len(self.assignment)

    def used_magnitudes(self) -> set[int]:
        return {abs(c) for c in self.assignment}


@dataclass(frozen=True)
class InferredColouring:
    """An inferred k-colouring: `assignment[v]` is (magnitude, flag).

    Flag NEG means: switch v, then give it colour +magnitude.
    """

    k: int
    assignment: tuple[tuple[int, Sign], ...]

    def __post_init__(self):
        allowed = set(magnitudes(self.k))
        cleaned = []
        for v, (m, f) in enumerate(self.assignment):
            if m not in allowed:
                raise InvalidParameter(f"magnitude {m} of vertex {v} not allowed for k={self.k}")
            cleaned.append((int(m), Sign(f)))
        object.__setattr__(self, "assignment", tuple(cleaned))

    def __getitem__(self, v: int) -> tuple[int, Sign]:
        return self.assignment[v]

    def __len__(self) -> int:
        return len(self.assignment)

    def magnitude(self, v: int) -> int:
        return self.assignment[v][0]

    def flag(self, v: int) -> Sign:
        return self.assignment[v][1]

    def switched(self) -> frozenset[int]:
        return frozenset(v for v, (_, f) in enumerate(self.assignment) if f is NEG)


def _total(G: SignedGraph, colouring) -> None:
    if len(colouring) != G.order:
        raise InvalidParameter(
            f"colouring covers {len(colouring)} vertices but the graph has {G.order}"
        )


def _sgn(c: int) -> int:
    return -1 if c < 0 else 1


def is_proper(G: SignedGraph, phi: Colouring) -> bool:
    _total(G, phi)
    return all(phi[u] != s * phi[v] for u, v, s in G.sorted_edges())


def classify_edge(G: SignedGraph, phi: Colouring, e: tuple[int, int]) -> EdgeType:
    u, v = e
    s = G.sign(u, v)
    return EdgeType.of(abs(phi[u]), abs(phi[v]), s * _sgn(phi[u]) * _sgn(phi[v]))


def reduce(G: SignedGraph, phi: Colouring) -> SignedMultigraph:
    """The reduced signed graph R(G, phi), already simplified."""
    if not is_proper(G, phi):
        raise InvalidParameter("reduction is only defined for proper colourings")
    types = {classify_edge(G, phi, (u, v)) for u, v, _ in G.sorted_edges()}
    return SignedMultigraph(phi.used_magnitudes(), types)


def is_complete(G: SignedGraph, phi: Colouring) -> bool:
    _total(G, phi)
    if not is_proper(G, phi):
        return False
    if phi.used_magnitudes() != set(magnitudes(phi.k)):
        return False
    return reduce(G, phi) == build_kstar(phi.k)


def realize(G: SignedGraph, gamma: InferredColouring) -> tuple[SignedGraph, Colouring]:
    _total(G, gamma)
    H = switch(G, gamma.switched())
    return H, Colouring(gamma.k, tuple(m for m, _ in gamma.assignment))


def effective_sign(G: SignedGraph, gamma: InferredColouring, u: int, v: int) -> Sign:
    return G.sign(u, v) * gamma.flag(u) * gamma.flag(v)


def inferred_edge_type(G: SignedGraph, gamma: InferredColouring, u: int, v: int) -> EdgeType:
    return EdgeType.of(gamma.magnitude(u), gamma.magnitude(v), effective_sign(G, gamma, u, v))


def is_inferred_proper(G: SignedGraph, gamma: InferredColouring) -> bool:
    _total(G, gamma)
    for u, v, s in G.sorted_edges():
        mu, mv = gamma.magnitude(u), gamma.magnitude(v)
        if mu != mv:
            continue
        if mu == 0 or s * gamma.flag(u) * gamma.flag(v) is POS:
            return False
    return True


def is_inferred_complete(G: SignedGraph, gamma: InferredColouring) -> bool:
    """Completeness checked directly on magnitudes and effective signs."""
    if not is_inferred_proper(G, gamma):
        return False
    seen = {inferred_edge_type(G, gamma, u, v) for u, v, _ in G.sorted_edges()}
    if {m for m, _ in gamma.assignment} != set(magnitudes(gamma.k)):
        return False
    return all(t in seen for t in kstar_edge_types(gamma.k))


def infer(phi: Colouring, switched: Iterable[int] = ()) -> InferredColouring:
    """Inferred colouring equivalent to colouring `phi` applied after switching `switched`.

    A vertex ends up flagged NEG when exactly one of "switched" and "negative
    colour" holds for it.
    """
    S = set(switched)
    return InferredColouring(
        phi.k,
        tuple((abs(c), NEG if (v in S) != (c < 0) else POS) for v, c in enumerate(phi.assignment)),
    )


def negate_colour_class(phi: Colouring, i: int) -> Colouring:
    if i <= 0:
        raise InvalidParameter("colour class magnitude must be positive")
    if i > phi.k // 2:
        raise InvalidParameter(f"magnitude {i} exceeds {phi.k // 2}")
    return Colouring(phi.k, tuple(-c if abs(c) == i else c for c in phi.assignment))


def swap_inferred_flags(gamma: InferredColouring, i: int) -> InferredColouring:
    if i < 0 or i > gamma.k // 2:
        raise InvalidParameter(f"magnitude {i} out of range for k={gamma.k}")
    return InferredColouring(
        gamma.k, tuple((m, -f if m == i else f) for m, f in gamma.assignment)
    )


def drop_colour_class(G: SignedGraph, phi: Colouring, i: int) -> tuple[SignedGraph, Colouring]:
    """Delete the vertices coloured ±i and relabel the largest magnitude into the gap."""
    if not is_complete(G, phi):
        raise InvalidParameter("colouring is not complete")
    if i not in magnitudes(phi.k):
        raise InvalidParameter(f"magnitude {i} not used by a {phi.k}-colouring")
    if phi.k - (1 if i == 0 else 2) < 1:
        raise InvalidParameter("dropping the only colour class leaves no colouring")
    keep = [v for v in range(G.order) if abs(phi[v]) != i]
    if i == 0:
        return G.induced(keep), Colouring(phi.k - 1, tuple(phi[v] for v in keep))
    top = phi.k // 2

    def relabel(c: int) -> int:
        if abs(c) == top:
            return i if c > 0 else -i
        return c

    return G.induced(keep), Colouring(phi.k - 2, tuple(relabel(phi[v]) for v in keep))
