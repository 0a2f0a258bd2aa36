"""Generators for tightness constructions, counterexamples and the hardness gadget.

Every generator returns a FamilyInstance holding the graph, the vertex names
behind the integer indices, the claimed values, explicit witness colourings
and a list of bound steps that certify the claims. `certify` re-checks the
steps against the actual graphs.

A claim is a pair (value, relation): "=" means the exact achromatic number,
">=" and "<=" one-sided bounds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .colouring import Colouring, InferredColouring, infer, is_complete, is_inferred_complete, is_proper
from .core import (
    NEG,
    POS,
    Graph,
    InvalidParameter,
    SignedGraph,
    largest_k_within_size,
)
from .homomorphism import identify
from .solver import BudgetExhausted, max_matching, psi
from .switching import switch


@dataclass(frozen=True)
class Step:
    """One link of a certification chain.

    target is "before" (the generated graph) or "after" (the graph after the
    marked operation). rule names how the bound follows:

    witness        a complete colouring exists (lower bound)
    order          psi <= number of vertices
    matching       psi <= 2 * maximum matching + 1
    size           psi <= largest k whose K*_k has at most |E| edges
    clique_resign  after switching `switch`, the graph is a complete graph
                   minus the matching `missing`, negative except for t
                   positive edges; psi <= 2 + 2t (no missing edge) or
                   3 + 2t, valid from 5 vertices on
    operation      the other side's bound moved by at most 2 (vertex removal,
                   sign change or edge removal), or 4 for identification
    argument       established only by a case analysis, not by a bound
    """

    target: str
    relation: str
    value: int
    rule: str
    data: dict = field(default_factory=dict)


@dataclass(frozen=True)
class FamilyInstance:
    name: str
    params: tuple
    graph: SignedGraph
    labels: tuple[str, ...]
    marked: tuple | None = None
    operation: str | None = None  # delete_vertex, flip_edge, delete_edge, identify
    claimed_psi: int | None = None
    psi_relation: str = "="
    claimed_after: int | None = None
    after_relation: str = "="
    witness: InferredColouring | None = None
    after_witness: InferredColouring | None = None
    steps: tuple[Step, ...] = ()
    extras: dict = field(default_factory=dict)

    def after_graph(self) -> SignedGraph:
        if self.operation is None:
            raise InvalidParameter(f"{self.name} has no designated operation")
        if self.operation == "delete_vertex":
            return self.graph.without_vertex(self.marked[0])
        if self.operation == "flip_edge":
            return self.graph.flip_edge(*self.marked)
        if self.operation == "delete_edge":
            return self.graph.without_edge(*self.marked)
        if self.operation == "identify":
            return identify(self.graph, *self.marked)
        raise InvalidParameter(f"unknown operation {self.operation}")

    def vertex(self, label: str) -> int:
        return self.labels.index(label)


def _inferred(k: int, colours: Sequence[int], switched=()) -> InferredColouring:
    return infer(Colouring(k, tuple(colours)), switched)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InvalidParameter(message)


# vertex removal


def gen_remove_vertex(k: int) -> FamilyInstance:
    """Signed K_{p,p} (p = k // 2) with u_i v_j negative iff i <= j.

    Indices: u_1..u_p are 0..p-1, v_1..v_p are p..2p-1. For odd k two more
    vertices follow, w_p (positive to every u_i) and w_n (negative to every
    u_i). Removing u_1 costs two colours.
    """
    _require(isinstance(k, int) and k >= 3, "vertex-removal family needs k >= 3")
    p = k // 2
    labels = [f"u{i}" for i in range(1, p + 1)] + [f"v{i}" for i in range(1, p + 1)]
    edges = [(i, p + j, NEG if i <= j else POS) for i in range(p) for j in range(p)]
    colours = [i + 1 for i in range(p)] * 2
    if k % 2:
        labels += ["wp", "wn"]
        edges += [(i, 2 * p, POS) for i in range(p)] + [(i, 2 * p + 1, NEG) for i in range(p)]
        colours += [0, 0]
    steps = [
        Step("before", ">=", k, "witness"),
        Step("before", "<=", k, "order" if k % 2 == 0 else "matching"),
        Step("after", "<=", k - 2, "size" if k % 2 == 0 else "matching"),
        Step("after", ">=", k - 2, "operation", {"delta": 2}),
    ]
    return FamilyInstance(
        "remove-vertex", (k,), SignedGraph(len(labels), edges), tuple(labels),
        marked=(0,), operation="delete_vertex", claimed_psi=k, claimed_after=k - 2,
        witness=_inferred(k, colours), steps=tuple(steps),
    )


# sign change


def gen_resign_edge(k: int) -> FamilyInstance:
    """Negative complete graph with a positive partial matching; flipping u_1v_1 costs two colours.

    Even k = 2p: K_k on u_1..u_p (indices 0..p-1) and v_1..v_p (p..2p-1),
    with u_iv_i positive for i < p.
    Odd k = 2p+1: K_{k+1} on u_0..u_p (0..p) and v_0..v_p (p+1..2p+1)
    without the edge u_0v_0, with u_iv_i positive for 1 <= i < p.
    """
    _require(isinstance(k, int) and k >= 4, "sign-change family needs k >= 4")
    p = k // 2
    if k % 2 == 0:
        labels = [f"u{i}" for i in range(1, p + 1)] + [f"v{i}" for i in range(1, p + 1)]
        positive = {(i, p + i) for i in range(p - 1)}
        missing: set = set()
        n = 2 * p
        colours = [i + 1 for i in range(p - 1)] + [p] + [-(i + 1) for i in range(p - 1)] + [p]
        switched: tuple = ()
        u1, v1 = 0, p
    else:
        labels = [f"u{i}" for i in range(p + 1)] + [f"v{i}" for i in range(p + 1)]
        n = 2 * p + 2
        positive = {(i, p + 1 + i) for i in range(1, p)}
        missing = {(0, p + 1)}
        colours = [0] + list(range(1, p)) + [p] + [0] + [-i for i in range(1, p)] + [p]
        switched = (0,)
        u1, v1 = 1, p + 2
    edges = [
        (a, b, POS if (a, b) in positive else NEG)
        for a, b in combinations(range(n), 2)
        if (a, b) not in missing
    ]
    G = SignedGraph(n, edges)
    steps = [Step("before", ">=", k, "witness")]
    if k % 2 == 0:
        steps.append(Step("before", "<=", k, "order"))
    else:
        steps.append(Step("before", "<=", k, "clique_resign", {"switch": (), "missing": sorted(missing)}))
    if n >= 5:
        steps.append(Step("after", "<=", k - 2, "clique_resign", {"switch": (), "missing": sorted(missing)}))
    else:
        steps.append(Step("after", "<=", k - 2, "argument", {"note": "checked by exhaustive search"}))
    steps.append(Step("after", ">=", k - 2, "operation", {"delta": 2}))
    return FamilyInstance(
        "resign-edge", (k,), G, tuple(labels), marked=(u1, v1), operation="flip_edge",
        claimed_psi=k, claimed_after=k - 2, witness=_inferred(k, colours, switched), steps=tuple(steps),
    )


def gen_resign_edge_upper(k: int) -> FamilyInstance:
    """The sign-change family read backwards: flipping the marked edge gains two colours.

    This is gen_resign_edge(k) with u_1v_1 already flipped to negative.
    """
    base = gen_resign_edge(k)
    G = base.graph.flip_edge(*base.marked)
    n = G.order
    missing = sorted(e for e in combinations(range(n), 2) if not G.has_edge(*e))
    steps = [
        Step("after", ">=", k, "witness"),
        Step("after", "<=", k, "order" if k % 2 == 0 else "clique_resign", {"switch": (), "missing": missing}),
        Step("before", ">=", k - 2, "operation", {"delta": 2}),
    ]
    if n >= 5:
        steps.append(Step("before", "<=", k - 2, "clique_resign", {"switch": (), "missing": missing}))
    else:
        steps.append(Step("before", "<=", k - 2, "argument", {"note": "checked by exhaustive search"}))
    return FamilyInstance(
        "resign-edge-upper", (k,), G, base.labels, marked=base.marked, operation="flip_edge",
        claimed_psi=k - 2, claimed_after=k, after_witness=base.witness, steps=tuple(steps),
        extras={"note": "mirrored construction"},
    )


# edge removal


def gen_remove_edge_lower(k: int) -> FamilyInstance:
    """Removing the marked edge costs two colours.

    Even k = 2p >= 6: negative K_p on u_1..u_p (0..p-1), positive K_p on
    v_1..v_p (p..2p-1), negative edges u_iv_i; marked edge v_1v_p.
    Odd k = 2p+1 >= 5: K_{2p+2} on x_1, y_1, ..., x_{p+1}, y_{p+1}
    (x_i = 2i-2, y_i = 2i-1) without x_{p+1}y_{p+1}, all negative except the
    edges at x_{p+1} (it is switched) and x_iy_i for 2 <= i <= p; marked
    edge x_py_p.
    """
    _require(isinstance(k, int) and k >= 5, "edge-removal lower family needs k >= 5")
    p = k // 2
    if k % 2 == 0:
        labels = [f"u{i}" for i in range(1, p + 1)] + [f"v{i}" for i in range(1, p + 1)]
        edges = [(a, b, NEG) for a, b in combinations(range(p), 2)]
        edges += [(p + a, p + b, POS) for a, b in combinations(range(p), 2)]
        edges += [(i, p + i, NEG) for i in range(p)]
        G = SignedGraph(2 * p, edges)
        colours = [i + 1 for i in range(p)] * 2
        marked = (p, 2 * p - 1)
        steps = [
            Step("before", ">=", k, "witness"),
            Step("before", "<=", k, "order"),
            Step("after", "<=", k - 1, "size"),
            Step("after", "<=", k - 2, "argument", {"note": "a (k-1)-colouring needs two 0-coloured vertices of total degree p"}),
            Step("after", ">=", k - 2, "operation", {"delta": 2}),
        ]
    else:
        labels = [f"{c}{i}" for i in range(1, p + 2) for c in "xy"]
        n = 2 * p + 2
        x = lambda i: 2 * i - 2  # noqa: E731
        y = lambda i: 2 * i - 1  # noqa: E731
        u = x(p + 1)
        matching_pos = {(x(i), y(i)) for i in range(2, p + 1)}
        edges = []
        for a, b in combinations(range(n), 2):
            if (a, b) == (x(p + 1), y(p + 1)):
                continue
            s = POS if (a, b) in matching_pos else NEG
            if u in (a, b):
                s = -s
            edges.append((a, b, s))
        G = SignedGraph(n, edges)
        colours = [0] * n
        colours[x(1)] = colours[y(1)] = 1
        for i in range(2, p + 1):
            colours[x(i)], colours[y(i)] = i, -i
        marked = (x(p), y(p))
        missing = [(x(p + 1), y(p + 1))]
        steps = [
            Step("before", ">=", k, "witness"),
            Step("before", "<=", k, "clique_resign", {"switch": (u,), "missing": missing}),
            Step("after", "<=", k - 2, "clique_resign", {"switch": (u,), "missing": sorted(missing + [marked])}),
            Step("after", ">=", k - 2, "operation", {"delta": 2}),
        ]
    return FamilyInstance(
        "remove-edge-lower", (k,), G, tuple(labels), marked=marked, operation="delete_edge",
        claimed_psi=k, claimed_after=k - 2, witness=_inferred(k, colours), steps=tuple(steps),
    )


def gen_remove_edge_upper(k: int) -> FamilyInstance:
    """Removing the marked edge gains two colours.

    Even k = 2p >= 6: the recursive graph G_p. Indices: k_1, k_2, k_3 = 0, 1, 2;
    v_1..v_4 = 3..6; w_3 = 7; then for q = 3..p-1 the triple w'_q, k_{q+1},
    w_{q+1}. All edges are negative; marked edge k_1v_1.
    Odd k = 2p+1 >= 7: negative K_{p,2p+1} on u_1..u_p (0..p-1) and
    v_1..v_{2p+1} (p..3p) without the edges u_iv_i for 2 <= i <= p-1;
    marked edge u_pv_p.
    """
    _require(isinstance(k, int) and k >= 6, "edge-removal upper family needs k >= 6")
    p = k // 2
    if k % 2 == 0:
        labels = ["k1", "k2", "k3", "v1", "v2", "v3", "v4", "w3"]
        edges = [(0, 1, NEG), (0, 2, NEG), (1, 2, NEG)]
        edges += [(a, v, NEG) for a in (0, 1) for v in range(3, 7)]
        edges += [(a, 7, NEG) for a in (0, 1, 2)]
        kvert = [0, 1, 2]
        # complete 6-colouring of G'_3 found by exhaustive search (k1 k2 k3 v1 v2 v3 v4 w3,
        # after switching v1 and v4); each later step switches w'_q and gives +(q+1)
        # to the three new vertices
        colours = [2, 1, 3, 2, 1, 2, 3, 3]
        switched = [3, 6]
        for q in range(3, p):
            base = len(labels)
            labels += [f"w'{q}", f"k{q + 1}", f"w{q + 1}"]
            for new in range(base, base + 3):
                edges += [(a, new, NEG) for a in kvert]
            edges.append((base + 1, base + 2, NEG))
            kvert.append(base + 1)
            colours += [q + 1] * 3
            switched.append(base)
        G = SignedGraph(len(labels), edges)
        marked = (0, 3)
        after_witness = _inferred(k, colours, switched)
        steps = [
            Step("after", ">=", k, "witness"),
            Step("before", "<=", k - 2, "argument", {"note": "k_1, k_2 share a colour; the clique part cannot reach the top magnitude"}),
            Step("after", "<=", k, "operation", {"delta": 2}),
            Step("before", ">=", k - 2, "operation", {"delta": 2}),
        ]
    else:
        labels = [f"u{i}" for i in range(1, p + 1)] + [f"v{i}" for i in range(1, 2 * p + 2)]
        u = lambda i: i - 1  # noqa: E731
        v = lambda i: p + i - 1  # noqa: E731
        removed = {(u(i), v(i)) for i in range(2, p)}
        edges = [(u(i), v(j), NEG) for i in range(1, p + 1) for j in range(1, 2 * p + 2) if (u(i), v(j)) not in removed]
        G = SignedGraph(3 * p + 1, edges)
        colours = [0] * (3 * p + 1)
        for i in range(1, p + 1):
            colours[u(i)] = i
        colours[v(1)] = 1
        for i in range(2, p + 1):
            colours[v(i)] = -i
            colours[v(p + i - 1)] = i
        marked = (u(p), v(p))
        after_witness = _inferred(k, colours, (v(2 * p + 1),))
        steps = [
            Step("after", ">=", k, "witness"),
            Step("before", "<=", k, "matching"),
            Step("before", "<=", k - 2, "argument", {"note": "the n-edges of types (i,i) would form a matching covering all u_i"}),
            Step("after", "<=", k, "operation", {"delta": 2}),
            Step("before", ">=", k - 2, "operation", {"delta": 2}),
        ]
    return FamilyInstance(
        "remove-edge-upper", (k,), G, tuple(labels), marked=marked, operation="delete_edge",
        claimed_psi=k - 2, claimed_after=k, after_witness=after_witness, steps=tuple(steps),
    )


# identification


def gen_elementary_drop(k: int) -> FamilyInstance:
    """Identifying the non-adjacent marked pair (v, w) lowers psi from at least k to at most k-2.

    Even k = 2p+2: K_{2p+2} on x_1, y_1, ..., x_{p+1}, y_{p+1}
    (x_i = 2i-2, y_i = 2i-1), negative except x_iy_i for i < p; v = 2p+2 is
    joined negatively to every x_i and w = 2p+3 to every y_i.
    Odd k = 2p+3: the same on 2p+4 vertices plus two non-adjacent vertices
    (indices 2p+4, 2p+5) joined negatively to everything else.
    """
    _require(isinstance(k, int) and k >= 8, "elementary-drop family needs k >= 8")
    odd = k % 2 == 1
    p = (k - 3) // 2 if odd else (k - 2) // 2
    n = 2 * p + 4 + (2 if odd else 0)
    labels = [f"{c}{i}" for i in range(1, p + 2) for c in "xy"] + ["v", "w"]
    vv, ww = 2 * p + 2, 2 * p + 3
    xs = [2 * i for i in range(p + 1)]
    ys = [2 * i + 1 for i in range(p + 1)]
    positive = {(xs[i], ys[i]) for i in range(p - 1)}
    edges = [(a, b, POS if (a, b) in positive else NEG) for a, b in combinations(range(2 * p + 2), 2)]
    edges += [(x, vv, NEG) for x in xs] + [(y, ww, NEG) for y in ys]
    colours = [0] * n
    for i in range(p - 1):
        colours[xs[i]], colours[ys[i]] = i + 1, -(i + 1)
    colours[xs[p - 1]] = colours[xs[p]] = p
    colours[ys[p - 1]] = colours[ys[p]] = p + 1
    colours[vv], colours[ww] = -(p + 1), -p
    missing_after: list = []
    if odd:
        labels += ["a", "b"]
        for extra in (2 * p + 4, 2 * p + 5):
            edges += [(z, extra, NEG) for z in range(2 * p + 4)]
        missing_after = [(2 * p + 3, 2 * p + 4)]  # the two dominating vertices, after the merge
    G = SignedGraph(n, edges)
    steps = [
        Step("before", ">=", k, "witness"),
        Step("after", "<=", k - 2, "clique_resign", {"switch": (), "missing": missing_after}),
        Step("after", ">=", k - 4, "operation", {"delta": 4}),
    ]
    return FamilyInstance(
        "elementary-drop", (k,), G, tuple(labels), marked=(vv, ww), operation="identify",
        claimed_psi=k, psi_relation=">=", claimed_after=k - 2, after_relation="<=",
        witness=_inferred(k, colours), steps=tuple(steps),
        extras={"stated_drop": 4, "certified_drop": 2},
    )


# counterexamples


def gen_interpolation(k: int) -> FamilyInstance:
    """Positive K_{2k} whose perfect matching v_iw_i is negative (v_i = 2i-2, w_i = 2i-1).

    psi = 2k and chi <= k+1, yet no complete k-colouring exists.
    """
    _require(isinstance(k, int) and k >= 3 and k % 2 == 1, "interpolation family needs odd k >= 3")
    n = 2 * k
    labels = [f"{c}{i}" for i in range(1, k + 1) for c in "vw"]
    matching = {(2 * i, 2 * i + 1) for i in range(k)}
    G = SignedGraph(n, [(a, b, NEG if (a, b) in matching else POS) for a, b in combinations(range(n), 2)])
    colours = []
    for i in range(1, k):
        colours += [i, -(i + 1)]
    colours += [k, -1]
    proper = []
    for j in range(1, k + 1):
        c = j // 2 if j % 2 == 0 else -((j + 1) // 2)
        proper += [c, c]
    chi_colours = k + 1
    return FamilyInstance(
        "interpolation", (k,), G, tuple(labels), claimed_psi=2 * k,
        witness=_inferred(2 * k, colours),
        steps=(Step("before", ">=", 2 * k, "witness"), Step("before", "<=", 2 * k, "order")),
        extras={
            "proper_colouring": Colouring(chi_colours, tuple(proper)),
            "chi_at_most": chi_colours,
            "no_complete": k,
        },
    )


def gen_perfect_counterexample() -> FamilyInstance:
    """Six-vertex signed graph without induced P_4, P_3+P_2 or 3P_2 where psi > chi and psi > omega.

    Indices: u1, u2, v1, v2, w2, w3 = 0..5.
    """
    labels = ("u1", "u2", "v1", "v2", "w2", "w3")
    u1, u2, v1, v2, w2, w3 = range(6)
    edges = [
        (u1, v1, NEG), (u1, v2, NEG), (u2, v1, NEG), (u2, v2, NEG), (v2, w2, NEG), (v2, w3, NEG),
        (u1, u2, POS), (v1, w2, POS), (v1, w3, POS), (w2, w3, POS),
    ]
    G = SignedGraph(6, edges)
    three = Colouring(3, (1, -1, 0, 0, -1, 1))
    four = Colouring(4, (1, -1, -2, 2, 2, 1))
    return FamilyInstance(
        "perfect", (), G, labels, claimed_psi=4, psi_relation=">=", witness=infer(four),
        steps=(Step("before", ">=", 4, "witness"),),
        extras={"proper_colouring": three, "complete_colouring": four, "omega": 3, "chi_at_most": 3},
    )


def gen_irreducible_large(p: int, m: int) -> FamilyInstance:
    """Negative K_m with the matching (0,1), (2,3), ..., (2p-2,2p-1) positive.

    The achromatic number is 2p+2 once m >= 2p+2; for m = 2p or 2p+1 the
    order bound already rules that value out, so no psi claim is attached.
    """
    _require(isinstance(p, int) and p >= 1, "p must be at least 1")
    _require(isinstance(m, int) and m >= 2 * p, "order must be at least 2p")
    positive = {(2 * i, 2 * i + 1) for i in range(p)}
    G = SignedGraph(m, [(a, b, POS if (a, b) in positive else NEG) for a, b in combinations(range(m), 2)])
    labels = tuple(f"z{i}" for i in range(m))
    if m < 2 * p + 2:
        return FamilyInstance("irreducible", (p, m), G, labels, extras={"note": "order below 2p+2"})
    k = 2 * p + 2
    colours = []
    for i in range(1, p + 1):
        colours += [i, -i]
    colours += [p + 1] * (m - 2 * p)
    steps = [Step("before", ">=", k, "witness")]
    if m >= 5:
        steps.append(Step("before", "<=", k, "clique_resign", {"switch": (), "missing": []}))
    else:
        steps.append(Step("before", "<=", k, "order"))
    return FamilyInstance(
        "irreducible", (p, m), G, labels, claimed_psi=k, witness=_inferred(k, colours), steps=tuple(steps),
    )


# hardness gadget


def np_reduction_layout(n: int, k: int) -> dict[str, range]:
    N = (n + k) ** 2
    return {
        "copy": range(0, n),
        "clique": range(n, n + k),
        "minus": range(n + k, n + k + N),
        "plus": range(n + k + N, n + k + 2 * N),
    }


def gen_np_reduction(G: Graph, k: int) -> SignedGraph:
    """Signed graph whose psi reaches 2N+2k exactly when G's achromatic number reaches k.

    N = (n+k)^2. Indices: positive copy of G (0..n-1), negative K_k
    (c_1..c_k), negative K_N (v-_1..v-_N), positive K_N (v+_1..v+_N).
    """
    _require(isinstance(k, int) and k >= 1, "k must be at least 1")
    n = G.order
    lay = np_reduction_layout(n, k)
    copy, clique, minus, plus = lay["copy"], lay["clique"], lay["minus"], lay["plus"]
    edges = [(u, v, POS) for u, v in G.sorted_edges()]
    edges += [(a, b, NEG) for a, b in combinations(clique, 2)]
    edges += [(g, c, NEG) for g in copy for c in clique]
    edges += [(a, b, NEG) for a, b in combinations(minus, 2)]
    edges += [(a, b, POS) for a, b in combinations(plus, 2)]
    edges += [(a, b, NEG) for a, b in zip(minus, plus)]
    edges += [(a, c, NEG) for a in minus for c in clique]
    edges += [(a, c, POS) for a in plus for c in clique]
    return SignedGraph(n + k + 2 * len(minus), edges)


def np_reduction_size(n: int, m: int, k: int) -> int:
    """Edge count of the gadget built from a graph with n vertices and m edges."""
    N = (n + k) ** 2
    return m + k * (k - 1) // 2 + n * k + N * (N - 1) + N + 2 * N * k


def is_complete_unsigned(G: Graph, colours: Sequence[int]) -> bool:
    """Proper colouring with colours 1..k' in which every colour pair meets on an edge."""
    if len(colours) != G.order:
        return False
    used = set(colours)
    kk = len(used)
    if used != set(range(1, kk + 1)):
        return False
    if any(colours[u] == colours[v] for u, v in G.edges):
        return False
    pairs = {frozenset((colours[u], colours[v])) for u, v in G.edges}
    return len(pairs) == kk * (kk - 1) // 2


def np_forward_colouring(G: Graph, k: int, colours: Sequence[int]) -> Colouring:
    """The (2N+2k)-colouring of gen_np_reduction(G, k) built from a complete colouring of G.

    `colours` uses 1..k' with k' >= k; copy vertices keep their colour, c_i gets
    +i and both v-_i, v+_i get +(k+i).
    """
    _require(is_complete_unsigned(G, colours), "colouring of G is not complete")
    _require(len(set(colours)) >= k, "the colouring of G uses fewer than k colours")
    n = G.order
    lay = np_reduction_layout(n, k)
    N = len(lay["minus"])
    out = list(colours)
    out += [i + 1 for i in range(k)]
    out += [k + i + 1 for i in range(N)] * 2
    return Colouring(2 * N + 2 * k, tuple(out))


# certification


def _clique_resign_bound(G: SignedGraph, data: dict) -> int | None:
    """The resign-chain bound if G has the shape the step describes, else None."""
    H = switch(G, data.get("switch", ()))
    missing = {tuple(sorted(e)) for e in data.get("missing", ())}
    n = H.order
    if n < 5:
        return None
    ends = [x for e in missing for x in e]
    if len(ends) != len(set(ends)):
        return None
    positives = 0
    for a, b in combinations(range(n), 2):
        if (a, b) in missing:
            if H.has_edge(a, b):
                return None
            continue
        if not H.has_edge(a, b):
            return None
        if H.sign(a, b) is POS:
            positives += 1
    return (3 if missing else 2) + 2 * positives


def _direct_bound(step: Step, G: SignedGraph, witness) -> int | None:
    """Value established by a step that only looks at one graph, or None if it fails."""
    if step.rule == "witness":
        if witness is None:
            return None
        return witness.k if is_inferred_complete(G, witness) else None
    if step.rule == "order":
        return G.order
    if step.rule == "matching":
        return 2 * max_matching(G) + 1
    if step.rule == "size":
        return largest_k_within_size(G.size)
    if step.rule == "clique_resign":
        return _clique_resign_bound(G, step.data)
    return None


@dataclass
class Certification:
    before: tuple[int, int]
    after: tuple[int, int] | None
    failed_steps: list
    argument_steps: list
    solver: dict
    unverified_steps: list = field(default_factory=list)

    def holds(self, instance: FamilyInstance) -> dict[str, bool]:
        out = {}
        if instance.claimed_psi is not None:
            out["psi"] = _meets(self.before, instance.claimed_psi, instance.psi_relation)
        if instance.claimed_after is not None and self.after is not None:
            out["after"] = _meets(self.after, instance.claimed_after, instance.after_relation)
        return out


def _meets(bounds: tuple[int, int], value: int, relation: str) -> bool:
    lo, hi = bounds
    if relation == "=":
        return lo == hi == value
    if relation == ">=":
        return lo >= value
    return hi <= value


def certify(
    instance: FamilyInstance,
    solver_max_order: int = 0,
    node_budget: int | None = None,
    trust_arguments: bool = False,
) -> Certification:
    """Re-derive lower and upper bounds on psi before and after the operation.

    Each step's value is recomputed on the actual graph; a step whose
    recomputed value is weaker than recorded counts as failed. "argument"
    steps are only used when `trust_arguments` is set. Graphs with at most
    `solver_max_order` vertices are additionally solved exactly.
    """
    graphs = {"before": instance.graph}
    witnesses = {"before": instance.witness, "after": instance.after_witness}
    if instance.operation is not None:
        graphs["after"] = instance.after_graph()
    lo = {t: 1 for t in graphs}
    hi = {t: max(G.order, 1) for t, G in graphs.items()}
    failed, arguments = [], []
    for step in instance.steps:
        if step.rule in ("operation",):
            continue
        if step.rule == "argument":
            arguments.append(step)
            if not trust_arguments:
                continue
            value = step.value
        else:
            value = _direct_bound(step, graphs[step.target], witnesses.get(step.target))
        if value is None or (step.relation == "<=" and value > step.value) or (
            step.relation == ">=" and value < step.value
        ):
            failed.append(step)
            continue
        if step.relation == "<=":
            hi[step.target] = min(hi[step.target], value)
        else:
            lo[step.target] = max(lo[step.target], value)
    solved = {}
    for t, G in graphs.items():
        if G.order <= solver_max_order:
            try:
                value = psi(G, node_budget=node_budget).value
            except BudgetExhausted:
                solved[t] = None
                continue
            solved[t] = value
            lo[t], hi[t] = max(lo[t], value), min(hi[t], value)
    # operation steps: the theorems bound how far psi moves
    for _ in range(2):
        for step in instance.steps:
            if step.rule != "operation" or "after" not in graphs:
                continue
            d = step.data["delta"]
            other = "before" if step.target == "after" else "after"
            if step.relation == ">=":
                lo[step.target] = max(lo[step.target], lo[other] - d)
            else:
                hi[step.target] = min(hi[step.target], hi[other] + d)
    unverified = []
    skipped = bool(arguments) and not trust_arguments
    for step in instance.steps:
        if step.rule == "operation" and "after" in graphs:
            t = step.target
            ok = lo[t] >= step.value if step.relation == ">=" else hi[t] <= step.value
            if not ok:
                # with case-analysis steps left out, a short chain is not a contradiction
                (unverified if skipped else failed).append(step)
    return Certification(
        before=(lo["before"], hi["before"]),
        after=(lo["after"], hi["after"]) if "after" in graphs else None,
        failed_steps=failed,
        argument_steps=arguments,
        solver=solved,
        unverified_steps=unverified,
    )


def shipped_witnesses_complete(instance: FamilyInstance) -> bool:
    ok = True
    if instance.witness is not None:
        ok &= is_inferred_complete(instance.graph, instance.witness)
    if instance.after_witness is not None:
        ok &= is_inferred_complete(instance.after_graph(), instance.after_witness)
    for key in ("complete_colouring",):
        if key in instance.extras:
            ok &= is_complete(instance.graph, instance.extras[key])
    if "proper_colouring" in instance.extras:
        ok &= is_proper(instance.graph, instance.extras["proper_colouring"])
    return bool(ok)


FAMILIES = {
    "remove-vertex": gen_remove_vertex,
    "resign-edge": gen_resign_edge,
    "resign-edge-upper": gen_resign_edge_upper,
    "remove-edge-lower": gen_remove_edge_lower,
    "remove-edge-upper": gen_remove_edge_upper,
    "elementary-drop": gen_elementary_drop,
    "interpolation": gen_interpolation,
    "perfect": gen_perfect_counterexample,
    "irreducible": gen_irreducible_large,
}
