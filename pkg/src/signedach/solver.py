"""Exact achromatic and chromatic numbers of signed graphs by backtracking search.

The complete-colouring search works on inferred colourings (magnitude plus a
switch flag), so switching is folded into the colour choice. Vertices are
visited by descending degree. Two symmetries are broken: nonzero magnitudes
first appear in increasing order, and the first vertex of each magnitude
class gets flag plus. Both are sound because permuting nonzero magnitudes and
toggling all flags of one magnitude map complete colourings to complete
colourings.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import networkx as nx

from .colouring import Colouring, InferredColouring, classify_edge, is_complete
from .core import (
    NEG,
    POS,
    Graph,
    InvalidParameter,
    SignedGraph,
    colour_set,
    kstar_edge_types,
    kstar_size,
    largest_k_within_size,
)


class BudgetExhausted(RuntimeError):
    """The search hit its node budget before reaching an answer."""

    def __init__(self, nodes: int):
        super().__init__(f"node budget exhausted after {nodes} nodes")
        self.nodes = nodes


@dataclass(frozen=True)
class PsiResult:
    value: int
    witness: InferredColouring
    nodes: int = 0
    upper_bound: int = 0


@dataclass(frozen=True)
class ChiResult:
    value: int
    witness: Colouring
    nodes: int = 0


class _Counter:
    __slots__ = ("nodes", "budget")

    def __init__(self, budget: int | None):
        self.nodes = 0
        self.budget = budget

    def tick(self) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExhausted(self.nodes)


def search_order(G: SignedGraph) -> list[int]:
    return sorted(range(G.order), key=lambda v: (-G.degree(v), v))


# bounds


def max_matching(G: SignedGraph | Graph) -> int:
    edges = G.edges.keys() if isinstance(G, SignedGraph) else G.edges
    H = nx.Graph()
    H.add_nodes_from(range(G.order))
    H.add_edges_from(edges)
    return len(nx.max_weight_matching(H, maxcardinality=True))


def psi_upper_bound(G: SignedGraph) -> int:
    return min(G.order, 2 * max_matching(G) + 1, largest_k_within_size(G.size))


# complete colourings


class _CompleteSearch:
    def __init__(self, G: SignedGraph, k: int, counter: _Counter):
        self.G = G
        self.k = k
        self.counter = counter
        n = G.order
        self.n = n
        self.order = search_order(G)
        pos = {v: i for i, v in enumerate(self.order)}
        self.earlier = []
        closed = 0
        self.remaining_after = []
        for i, v in enumerate(self.order):
            nb = [(pos[u], int(s)) for u, s in G.neighbours(v).items() if pos[u] < i]
            nb.sort()
            self.earlier.append(nb)
            closed += len(nb)
            self.remaining_after.append(G.size - closed)
        self.top = k // 2
        self.zero = k % 2 == 1
        width = self.top + 1
        self.width = width
        self.required = [False] * (width * width * 2)
        for t in kstar_edge_types(k):
            self.required[self._index(t.i, t.j, int(t.s))] = True
        self.count = [0] * len(self.required)
        self.missing = kstar_size(k)
        self.mag = [-1] * n
        self.flag = [0] * n
        self.cls = [0] * width
        # vertices still needed so every magnitude can appear: 2 per nonzero, 1 for zero
        self.deficit = 2 * self.top + (1 if self.zero else 0)

    def _index(self, a: int, b: int, s: int) -> int:
        if a > b:
            a, b = b, a
        return (a * self.width + b) * 2 + (1 if s < 0 else 0)

    def run(self) -> InferredColouring | None:
        if self.k == 1:
            if self.G.size:
                return None
            return InferredColouring(1, tuple((0, POS) for _ in range(self.n)))
        if self.deficit > self.n or self.missing > self.G.size:
            return None
        if self._extend(0, 1):
            assignment = [None] * self.n
            for i, v in enumerate(self.order):
                assignment[v] = (self.mag[i], POS if self.flag[i] > 0 else NEG)
            return InferredColouring(self.k, tuple(assignment))
        return None

    def _options(self, next_new: int):
        if next_new <= self.top:
            yield next_new, 1
        if self.zero:
            yield 0, 1
            if self.cls[0]:
                yield 0, -1
        for m in range(1, next_new):
            yield m, 1
            yield m, -1

    def _extend(self, i: int, next_new: int) -> bool:
        if i == self.n:
            return self.missing == 0
        earlier = self.earlier[i]
        mag, flag, count, required = self.mag, self.flag, self.count, self.required
        left_after = self.n - i - 1
        for m, f in self._options(next_new):
            # properness and the edge types this choice creates
            touched = []
            ok = True
            for j, s in earlier:
                mj = mag[j]
                eff = s * f * flag[j]
                if mj == m and (m == 0 or eff > 0):
                    ok = False
                    break
                touched.append(self._index(m, mj, eff))
            if not ok:
                continue
            self.counter.tick()
            gained = 0
            for t in touched:
                if count[t] == 0 and required[t]:
                    gained += 1
                count[t] += 1
            old_cls = self.cls[m]
            need = 1 if m == 0 else 2
            deficit_drop = 1 if old_cls < need else 0
            self.cls[m] = old_cls + 1
            self.missing -= gained
            self.deficit -= deficit_drop
            mag[i] = m
            flag[i] = f
            if self.missing <= self.remaining_after[i] and self.deficit <= left_after:
                if self._extend(i + 1, next_new + 1 if m == next_new else next_new):
                    return True
            mag[i] = -1
            flag[i] = 0
            self.deficit += deficit_drop
            self.missing += gained
            self.cls[m] = old_cls
            for t in touched:
                count[t] -= 1
        return False


def exists_complete_k(
    G: SignedGraph, k: int, node_budget: int | None = None, _counter: _Counter | None = None
) -> InferredColouring | None:
    """An inferred-complete k-colouring of G, or None if there is none."""
    if not isinstance(k, int) or k < 1:
        raise InvalidParameter("k must be a positive integer")
    counter = _counter if _counter is not None else _Counter(node_budget)
    return _CompleteSearch(G, k, counter).run()


def _decide(args):
    G, k, budget = args
    counter = _Counter(budget)
    try:
        return exists_complete_k(G, k, _counter=counter), counter.nodes, False
    except BudgetExhausted:
        return None, counter.nodes, True


def psi(G: SignedGraph, node_budget: int | None = None, workers: int = 1) -> PsiResult:
    """Signed achromatic number with a deterministic witness.

    `node_budget` bounds each decision search (one per candidate k); the
    answer and witness do not depend on `workers`.
    """
    ub = psi_upper_bound(G) if G.order else 0
    if G.size == 0:
        return PsiResult(1, InferredColouring(1, tuple((0, POS) for _ in range(G.order))), 0, max(ub, 1))
    candidates = list(range(ub, 0, -1))
    total = 0
    if workers <= 1:
        for k in candidates:
            witness, nodes, exhausted = _decide((G, k, node_budget))
            total += nodes
            if exhausted:
                raise BudgetExhausted(total)
            if witness is not None:
                return PsiResult(k, witness, total, ub)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for start in range(0, len(candidates), workers):
                batch = candidates[start:start + workers]
                results = list(pool.map(_decide, [(G, k, node_budget) for k in batch]))
                # scan in descending k, exactly as the sequential loop would
                for k, (witness, nodes, exhausted) in zip(batch, results):
                    total += nodes
                    if exhausted:
                        raise BudgetExhausted(total)
                    if witness is not None:
                        return PsiResult(k, witness, total, ub)
    raise AssertionError("no complete colouring found, which contradicts chi <= psi")


# proper colourings


def proper_colouring(
    G: SignedGraph, k: int, node_budget: int | None = None, _counter: _Counter | None = None
) -> Colouring | None:
    counter = _counter if _counter is not None else _Counter(node_budget)
    order = search_order(G)
    colours = colour_set(k)
    assignment: dict[int, int] = {}

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        banned = {s * assignment[u] for u, s in G.neighbours(v).items() if u in assignment}
        for c in colours:
            if c in banned:
                continue
            counter.tick()
            assignment[v] = c
            if extend(i + 1):
                return True
            del assignment[v]
        return False

    if extend(0):
        return Colouring(k, tuple(assignment[v] for v in range(G.order)))
    return None


def chi(G: SignedGraph, node_budget: int | None = None) -> ChiResult:
    counter = _Counter(node_budget)
    for k in range(1, max(G.order, 1) + 1):
        phi = proper_colouring(G, k, _counter=counter)
        if phi is not None:
            return ChiResult(k, phi, counter.nodes)
    raise AssertionError("every signed graph has a proper colouring with order-many colours")


# unsigned achromatic number


def complete_unsigned_colouring(
    G: Graph, k: int, counter: _Counter | None = None
) -> tuple[int, ...] | None:
    """A complete proper colouring of G with colours 0..k-1, or None."""
    counter = counter or _Counter(None)
    adj = G.adjacency()
    order = sorted(range(G.order), key=lambda v: (-len(adj[v]), v))
    pos = {v: i for i, v in enumerate(order)}
    earlier = [[pos[u] for u in adj[v] if pos[u] < i] for i, v in enumerate(order)]
    remaining_after = []
    closed = 0
    for nb in earlier:
        closed += len(nb)
        remaining_after.append(len(G.edges) - closed)
    n = G.order
    col = [-1] * n
    pair_count: dict[tuple[int, int], int] = {}
    state = {"missing": k * (k - 1) // 2}
    if k > n or state["missing"] > len(G.edges):
        return None

    def extend(i: int, used: int) -> bool:
        if i == n:
            return state["missing"] == 0 and used == k
        for c in range(min(used + 1, k)):
            nbc = [col[j] for j in earlier[i]]
            if c in nbc:
                continue
            counter.tick()
            pairs = [(min(c, d), max(c, d)) for d in nbc]
            gained = 0
            for p in pairs:
                if pair_count.get(p, 0) == 0:
                    gained += 1
                pair_count[p] = pair_count.get(p, 0) + 1
            state["missing"] -= gained
            col[i] = c
            new_used = max(used, c + 1)
            if state["missing"] <= remaining_after[i] and k - new_used <= n - i - 1:
                if extend(i + 1, new_used):
                    return True
            col[i] = -1
            state["missing"] += gained
            for p in pairs:
                pair_count[p] -= 1
        return False

    if extend(0, 0):
        result = [0] * n
        for i, v in enumerate(order):
            result[v] = col[i]
        return tuple(result)
    return None


def psi_unsigned(G: Graph, node_budget: int | None = None) -> int:
    """Classic achromatic number of an unsigned graph."""
    if not G.edges:
        return 1
    m = len(G.edges)
    ub = G.order
    while ub * (ub - 1) // 2 > m:
        ub -= 1
    counter = _Counter(node_budget)
    for k in range(ub, 0, -1):
        if complete_unsigned_colouring(G, k, counter) is not None:
            return k
    return 1


# witness extraction


def witness_subgraph(G: SignedGraph, phi: Colouring) -> list[int]:
    """Vertices of a small induced subgraph on which phi restricts to a complete colouring."""
    if not is_complete(G, phi):
        raise InvalidParameter("colouring is not complete")
    first = {}
    for u, v, _ in G.sorted_edges():
        t = classify_edge(G, phi, (u, v))
        first.setdefault(t, (u, v))
    chosen = set()
    for t in kstar_edge_types(phi.k):
        chosen.update(first[t])
    if phi.k == 1:
        chosen.add(0)
    return sorted(chosen)
