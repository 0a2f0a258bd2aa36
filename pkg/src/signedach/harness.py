"""Seeded fuzzing of the structural bounds on psi and chi.

Each trial draws a signed graph with n <= max_n vertices (edge probability
1/2, uniform signs) and runs every suite on it. Any randomness a suite needs
is seeded from the graph itself, so a violation can be re-checked on
sub-graphs while minimizing.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from .colouring import (
    InferredColouring,
    drop_colour_class,
    is_complete,
    is_inferred_complete,
    negate_colour_class,
    realize,
    swap_inferred_flags,
)
from .core import NEG, POS, SignedGraph, magnitudes
from .homomorphism import identifiable_pairs, identify
from .oracles import all_inferred_colourings, equivalent_by_enumeration
from .solver import BudgetExhausted, chi, exists_complete_k, psi
from .switching import are_equivalent, switch

SYMMETRY_MAX_N = 5
SYMMETRY_MAX_K = 5


def random_signed_graph(rng: random.Random, max_n: int) -> SignedGraph:
    n = rng.randint(1, max_n)
    edges = []
    for u, v in combinations(range(n), 2):
        if rng.random() < 0.5:
            edges.append((u, v, POS if rng.random() < 0.5 else NEG))
    return SignedGraph(n, edges)


class _Values:
    """psi/chi memo shared by all suites of one run."""

    def __init__(self, node_budget: int | None, workers: int):
        self.node_budget = node_budget
        self.workers = workers
        self._psi: dict[SignedGraph, object] = {}
        self._chi: dict[SignedGraph, int] = {}

    def psi_result(self, G: SignedGraph):
        if G not in self._psi:
            self._psi[G] = psi(G, node_budget=self.node_budget, workers=self.workers)
        return self._psi[G]

    def psi(self, G: SignedGraph) -> int:
        return self.psi_result(G).value

    def chi(self, G: SignedGraph) -> int:
        if G not in self._chi:
            self._chi[G] = chi(G, node_budget=self.node_budget).value
        return self._chi[G]


def _local_rng(G: SignedGraph) -> random.Random:
    return random.Random(repr(G))


# Each suite returns (number of checks, list of violation messages).


def _suite_switching(G, values, params):
    rng = _local_rng(G)
    S = [v for v in range(G.order) if rng.random() < 0.5]
    H = switch(G, S)
    bad = []
    if values.psi(H) != values.psi(G):
        bad.append(f"psi {values.psi(G)} -> {values.psi(H)} after switching {S}")
    if values.chi(H) != values.chi(G):
        bad.append(f"chi {values.chi(G)} -> {values.chi(H)} after switching {S}")
    return 2, bad


def _suite_chi_le_psi(G, values, params):
    if values.chi(G) > values.psi(G):
        return 1, [f"chi {values.chi(G)} > psi {values.psi(G)}"]
    return 1, []


def _suite_vertex_removal(G, values, params):
    if G.order < 2:
        return 0, []
    p = values.psi(G)
    slack = params["vertex_slack"]
    bad = []
    for v in range(G.order):
        q = values.psi(G.without_vertex(v))
        if not p - slack <= q <= p:
            bad.append(f"removing vertex {v}: psi {p} -> {q}")
    return G.order, bad


def _suite_sign_change(G, values, params):
    p = values.psi(G)
    bad = []
    for u, v, _ in G.sorted_edges():
        q = values.psi(G.flip_edge(u, v))
        if abs(q - p) > 2:
            bad.append(f"re-signing edge {u}-{v}: psi {p} -> {q}")
    return G.size, bad


def _suite_edge_removal(G, values, params):
    p = values.psi(G)
    bad = []
    for u, v, _ in G.sorted_edges():
        q = values.psi(G.without_edge(u, v))
        if abs(q - p) > 2:
            bad.append(f"removing edge {u}-{v}: psi {p} -> {q}")
    return G.size, bad


def _suite_identification(G, values, params):
    p, c = values.psi(G), values.chi(G)
    bad = []
    pairs = identifiable_pairs(G)
    for u, v in pairs:
        H = identify(G, u, v)
        ph, ch = values.psi(H), values.chi(H)
        if not c <= ch <= c + 1:
            bad.append(f"identifying {u},{v}: chi {c} -> {ch}")
        if not p - 4 <= ph <= p:
            bad.append(f"identifying {u},{v}: psi {p} -> {ph}")
    return 2 * len(pairs), bad


def _suite_colour_operations(G, values, params):
    gamma = values.psi_result(G).witness
    H, phi = realize(G, gamma)
    checks, bad = 1, []
    if not is_complete(H, phi):
        return 1, ["solver witness is not complete after realizing"]
    for i in magnitudes(phi.k):
        if i > 0:
            checks += 1
            if not is_complete(H, negate_colour_class(phi, i)):
                bad.append(f"negating class {i} breaks completeness")
        checks += 1
        if not is_inferred_complete(G, swap_inferred_flags(gamma, i)):
            bad.append(f"swapping flags of magnitude {i} breaks completeness")
        if phi.k - (1 if i == 0 else 2) >= 1:
            checks += 1
            H2, phi2 = drop_colour_class(H, phi, i)
            if not is_complete(H2, phi2):
                bad.append(f"dropping class {i} breaks completeness")
    return checks, bad


def _suite_inferred_vs_realized(G, values, params):
    rng = _local_rng(G)
    bad = []
    samples = 0
    for k in range(1, min(G.order, 5) + 1):
        mags = magnitudes(k)
        for _ in range(4):
            gamma = InferredColouring(
                k, tuple((rng.choice(mags), rng.choice((POS, NEG))) for _ in range(G.order))
            )
            samples += 1
            H, phi = realize(G, gamma)
            if is_inferred_complete(G, gamma) != is_complete(H, phi):
                bad.append(f"direct and realized completeness differ for {gamma.assignment}")
    # the solver witness is a positive instance worth checking too
    gamma = values.psi_result(G).witness
    H, phi = realize(G, gamma)
    samples += 1
    if is_inferred_complete(G, gamma) != is_complete(H, phi):
        bad.append("direct and realized completeness differ on the solver witness")
    return samples, bad


def _suite_equivalence(G, values, params):
    rng = _local_rng(G)
    if rng.random() < 0.5:
        H = switch(G, [v for v in range(G.order) if rng.random() < 0.5])
    else:
        H = SignedGraph(G.order, [(u, v, rng.choice((POS, NEG))) for u, v, _ in G.sorted_edges()])
    if are_equivalent(G, H) != equivalent_by_enumeration(G, H):
        return 1, ["are_equivalent disagrees with enumeration over all switch sets"]
    return 1, []


def _suite_symmetry(G, values, params):
    if G.order > SYMMETRY_MAX_N:
        return 0, []
    bad = []
    checks = 0
    for k in range(1, SYMMETRY_MAX_K + 1):
        fast = exists_complete_k(G, k, node_budget=values.node_budget) is not None
        slow = any(is_inferred_complete(G, g) for g in all_inferred_colourings(G.order, k))
        checks += 1
        if fast != slow:
            bad.append(f"k={k}: pruned search says {fast}, unrestricted search says {slow}")
    return checks, bad


SUITES: dict[str, Callable] = {
    "switching-invariance": _suite_switching,
    "chi-at-most-psi": _suite_chi_le_psi,
    "vertex-removal": _suite_vertex_removal,
    "sign-change": _suite_sign_change,
    "edge-removal": _suite_edge_removal,
    "elementary-image": _suite_identification,
    "colour-operations": _suite_colour_operations,
    "inferred-vs-realized": _suite_inferred_vs_realized,
    "equivalence": _suite_equivalence,
    "symmetry-breaking": _suite_symmetry,
}


@dataclass
class Counterexample:
    suite: str
    trial: int
    graph: SignedGraph
    minimized: SignedGraph
    messages: list[str]


@dataclass
class RunReport:
    seed: int
    max_n: int
    trials: int
    checks: dict[str, int] = field(default_factory=lambda: {name: 0 for name in SUITES})
    violations: dict[str, int] = field(default_factory=lambda: {name: 0 for name in SUITES})
    counterexamples: list[Counterexample] = field(default_factory=list)
    completed_trials: int = 0
    budget_exhausted: bool = False

    @property
    def passed(self) -> bool:
        return not self.counterexamples and not self.budget_exhausted

    def lines(self) -> list[str]:
        out = [f"check seed={self.seed} max_n={self.max_n} trials={self.trials}"]
        for name in SUITES:
            status = "ok" if self.violations[name] == 0 else "VIOLATED"
            out.append(f"  {name}: {self.checks[name]} checks, {self.violations[name]} violations, {status}")
        for cx in self.counterexamples:
            out.append(f"counterexample ({cx.suite}, trial {cx.trial}): order {cx.minimized.order}")
            out += [f"    {u} {v} {s.symbol}" for u, v, s in cx.minimized.sorted_edges()]
            out += [f"    {m}" for m in cx.messages]
        if self.budget_exhausted:
            out.append(f"budget exhausted after {self.completed_trials} of {self.trials} trials")
        out.append("all suites passed" if self.passed else "FAILED")
        return out

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "max_n": self.max_n,
            "trials": self.trials,
            "completed_trials": self.completed_trials,
            "budget_exhausted": self.budget_exhausted,
            "passed": self.passed,
            "suites": {
                name: {"checks": self.checks[name], "violations": self.violations[name]}
                for name in SUITES
            },
            "counterexamples": [
                {
                    "suite": cx.suite,
                    "trial": cx.trial,
                    "order": cx.minimized.order,
                    "edges": [[u, v, s.symbol] for u, v, s in cx.minimized.sorted_edges()],
                    "original_order": cx.graph.order,
                    "messages": cx.messages,
                }
                for cx in self.counterexamples
            ],
        }


def minimize(G: SignedGraph, still_fails: Callable[[SignedGraph], bool]) -> SignedGraph:
    """Greedy single-vertex deletion while the failure persists."""
    changed = True
    while changed and G.order > 1:
        changed = False
        for v in range(G.order):
            H = G.without_vertex(v)
            if still_fails(H):
                G, changed = H, True
                break
    return G


def check_harness(
    seed: int,
    max_n: int,
    trials: int,
    node_budget: int | None = None,
    workers: int = 1,
    vertex_slack: int = 2,
    extra_graphs: tuple[SignedGraph, ...] = (),
) -> RunReport:
    """Run every suite on `trials` random graphs (then on `extra_graphs`).

    vertex_slack is the allowed psi drop on vertex removal; it exists so tests
    can tighten the bound and watch the harness catch it.
    """
    rng = random.Random(seed)
    report = RunReport(seed, max_n, trials)
    values = _Values(node_budget, workers)
    params = {"vertex_slack": vertex_slack}
    graphs = [random_signed_graph(rng, max_n) for _ in range(trials)] + list(extra_graphs)
    try:
        for t, G in enumerate(graphs):
            for name, suite in SUITES.items():
                checks, bad = suite(G, values, params)
                report.checks[name] += checks
                if bad:
                    report.violations[name] += len(bad)

                    def fails(H, suite=suite):
                        return bool(suite(H, values, params)[1])

                    small = minimize(G, fails)
                    report.counterexamples.append(
                        Counterexample(name, t, G, small, suite(small, values, params)[1])
                    )
            report.completed_trials += 1
    except BudgetExhausted:
        report.budget_exhausted = True
    return report
