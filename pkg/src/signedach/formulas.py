"""Closed forms for signed paths, cycles and complete graphs, with explicit colourings.

The path and cycle colourings walk a closed Euler trail of K*_k: consecutive
path vertices receive consecutive trail vertices as magnitudes, and each flag
is chosen so that the effective sign of the path edge equals the sign of the
trail edge it follows.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .colouring import Colouring, InferredColouring, is_inferred_complete, is_inferred_proper
from .core import (
    NEG,
    POS,
    EdgeType,
    InvalidParameter,
    Sign,
    SignedGraph,
    colour_set,
    kstar_balance,
    kstar_edge_types,
    kstar_size,
    largest_k_within_size,
    magnitudes,
)


class UnsupportedParameter(InvalidParameter):
    """The closed form is not established for these parameters; use the solver."""


# graph builders


def path_graph(signs: Sequence[int]) -> SignedGraph:
    """P_n on 0..n-1 where edge (i, i+1) has sign signs[i]."""
    return SignedGraph(len(signs) + 1, [(i, i + 1, s) for i, s in enumerate(signs)])


def cycle_graph(signs: Sequence[int]) -> SignedGraph:
    """C_n on 0..n-1 where edge (i, i+1 mod n) has sign signs[i]."""
    n = len(signs)
    if n < 3:
        raise InvalidParameter("a cycle needs at least 3 vertices")
    return SignedGraph(n, [(i, (i + 1) % n, s) for i, s in enumerate(signs)])


def complete_graph(n: int, sign: Sign = NEG, missing: Sequence[tuple[int, int]] = ()) -> SignedGraph:
    gone = {tuple(sorted(e)) for e in missing}
    return SignedGraph(n, [(u, v, sign) for u, v in combinations(range(n), 2) if (u, v) not in gone])


@dataclass(frozen=True)
class CompleteVariant:
    kind: str  # "all_positive", "all_negative" or "negative_minus_matching"
    matching: int = 0

    def __post_init__(self):
        if self.kind not in ("all_positive", "all_negative", "negative_minus_matching"):
            raise InvalidParameter(f"unknown complete-graph variant {self.kind!r}")
        if self.kind == "negative_minus_matching" and self.matching < 1:
            raise InvalidParameter("the removed matching must be non-empty")

    def graph(self, n: int) -> SignedGraph:
        if self.kind == "all_positive":
            return complete_graph(n, POS)
        if self.kind == "all_negative":
            return complete_graph(n, NEG)
        if self.matching > n // 2:
            raise InvalidParameter(f"K_{n} has no matching of size {self.matching}")
        return complete_graph(n, NEG, [(2 * i, 2 * i + 1) for i in range(self.matching)])


# closed forms


def psi_path(n: int) -> int:
    if n < 1:
        raise InvalidParameter("a path needs at least one vertex")
    return largest_k_within_size(n - 1)


def _cycle_cases(n: int, balance: int) -> tuple[int, int, str]:
    k0 = largest_k_within_size(n)
    m = kstar_size(k0)
    same = kstar_balance(k0) == balance % 2
    if n >= m + 2 or (n == m + 1 and not same) or (n == m and same):
        return k0, k0, "top"
    if (n == m + 1 and same) or (n == m and k0 % 2 == 1 and not same):
        return k0, k0 - 1, "minus_one"
    return k0, k0 - 2, "minus_two"


def psi_cycle(n: int, balance: int) -> int:
    if n < 3:
        raise InvalidParameter("a cycle needs at least 3 vertices")
    return _cycle_cases(n, balance)[1]


def psi_complete(n: int, variant: CompleteVariant) -> int:
    if n < 1:
        raise InvalidParameter("n must be positive")
    if variant.kind == "all_positive":
        return n
    if n < 5:
        raise UnsupportedParameter("negative complete graphs are only covered for n >= 5")
    if variant.matching > n // 2:
        raise InvalidParameter(f"K_{n} has no matching of size {variant.matching}")
    return 2 if variant.kind == "all_negative" else 3


# Euler trail of K*_k


def euler_trail_kstar(k: int) -> list[tuple[int, EdgeType]]:
    """Closed Euler trail of K*_k as (vertex, edge leaving it) steps.

    Starts at the least magnitude; the edge of the last step returns to it.
    """
    if k < 2:
        raise InvalidParameter("K*_k has no edges for k < 2")
    edges = kstar_edge_types(k)
    incident: dict[int, list[int]] = {a: [] for a in magnitudes(k)}
    for idx, e in enumerate(edges):
        incident[e.i].append(idx)
        if e.j != e.i:
            incident[e.j].append(idx)
    used = [False] * len(edges)
    cursor = {a: 0 for a in incident}
    start = min(incident)
    stack: list[tuple[int, int | None]] = [(start, None)]
    circuit: list[tuple[int, int | None]] = []
    while stack:
        v, _ = stack[-1]
        lst = incident[v]
        while cursor[v] < len(lst) and used[lst[cursor[v]]]:
            cursor[v] += 1
        if cursor[v] < len(lst):
            idx = lst[cursor[v]]
            used[idx] = True
            e = edges[idx]
            stack.append((e.j if e.i == v else e.i, idx))
        else:
            circuit.append(stack.pop())
    circuit.reverse()
    # circuit[t] = (vertex, index of the edge used to arrive there)
    return [(circuit[t][0], edges[circuit[t + 1][1]]) for t in range(len(circuit) - 1)]


def _walk_colouring(signs: Sequence[int], k: int, rotate: int = 0) -> list[tuple[int, Sign]]:
    """Colour a path with len(signs)+1 vertices by walking the closed trail cyclically."""
    if k == 1:
        if signs:
            raise InvalidParameter("a 1-colouring cannot colour an edge")
        return [(0, POS)]
    trail = euler_trail_kstar(k)
    m = len(trail)
    trail = trail[rotate % m:] + trail[:rotate % m]
    out = [(trail[0][0], POS)]
    for i, s in enumerate(signs):
        _, e = trail[i % m]
        nxt = trail[(i + 1) % m][0]
        out.append((nxt, Sign(s) * out[-1][1] * e.s))
    return out


def construct_path_colouring(n: int, signs: Sequence[int], k: int | None = None) -> InferredColouring:
    """Inferred complete colouring of the path with the given edge signs.

    By default k = psi_path(n); any smaller k >= 1 with kstar_size(k) <= n-1
    also works.
    """
    if len(signs) != n - 1:
        raise InvalidParameter("a path on n vertices has n-1 edges")
    if k is None:
        k = psi_path(n)
    if kstar_size(k) > n - 1:
        raise InvalidParameter(f"P_{n} is too short for a complete {k}-colouring")
    gamma = InferredColouring(k, tuple(_walk_colouring(signs, k)))
    if not is_inferred_complete(path_graph(signs), gamma):
        raise AssertionError("path construction produced an incomplete colouring")
    return gamma


def _extend_cycle(G: SignedGraph, head: list[tuple[int, Sign]], k: int) -> InferredColouring | None:
    for m in magnitudes(k):
        for f in (POS, NEG):
            gamma = InferredColouring(k, tuple(head) + ((m, f),))
            if is_inferred_proper(G, gamma):
                return gamma
    return None


def construct_cycle_colouring(n: int, signs: Sequence[int]) -> InferredColouring:
    """Inferred complete psi_cycle-colouring of the cycle with the given edge signs."""
    if len(signs) != n:
        raise InvalidParameter("a cycle on n vertices has n edges")
    G = cycle_graph(signs)
    balance = sum(1 for s in signs if s < 0) % 2
    k0, k, case = _cycle_cases(n, balance)
    m = kstar_size(k0)
    candidates = []
    if case == "top" and n == m:
        # the cycle follows the whole closed trail; the closing edge is the last trail edge
        candidates.append(InferredColouring(k, tuple(_walk_colouring(signs[:-1], k))))
    elif case == "top" and n == m + 1:
        # start the trail at a nonzero magnitude so both ends of the closing edge share it
        trail = euler_trail_kstar(k)
        for r, (v, _) in enumerate(trail):
            if v != 0:
                candidates.append(InferredColouring(k, tuple(_walk_colouring(signs[:-1], k, r))))
                break
    else:
        # colour the path 0..n-2 and fit the last vertex in
        trail_len = kstar_size(k) if k > 1 else 1
        for r in range(trail_len):
            head = _walk_colouring(signs[:-2], k, r)
            gamma = _extend_cycle(G, head, k)
            if gamma is not None and is_inferred_complete(G, gamma):
                candidates.append(gamma)
                break
    for gamma in candidates:
        if is_inferred_complete(G, gamma):
            return gamma
    raise AssertionError(f"cycle construction failed for n={n}")


def construct_positive_clique_colouring(n: int) -> Colouring:
    if n < 1:
        raise InvalidParameter("n must be positive")
    return Colouring(n, colour_set(n))
