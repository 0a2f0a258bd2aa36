"""Signed graphs, signed multigraphs, colour sets and the target multigraph K*_k."""

from __future__ import annotations

from collections import Counter
from enum import IntEnum
from typing import Iterable, Iterator, NamedTuple


class InvalidParameter(ValueError):
    """Raised when an argument falls outside an operation's domain."""


class Sign(IntEnum):
    NEG = -1
    POS = 1

    def __mul__(self, other):
        # sign times sign is a sign; sign times a colour is a colour
        if isinstance(other, Sign):
            return Sign(int(self) * int(other))
        if isinstance(other, int):
            return int(self) * other
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return Sign(-int(self))

    @property
    def symbol(self) -> str:
        return "+" if self is Sign.POS else "-"

    @classmethod
    def parse(cls, text: str) -> "Sign":
        if text == "+":
            return cls.POS
        if text == "-":
            return cls.NEG
        raise InvalidParameter(f"not a sign: {text!r}")


POS = Sign.POS
NEG = Sign.NEG


class EdgeType(NamedTuple):
    i: int
    j: int
    s: Sign

    @classmethod
    def of(cls, a: int, b: int, s: int) -> "EdgeType":
        if a > b:
            a, b = b, a
        return cls(a, b, Sign(s))


def _key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class _Frozen:
    __slots__ = ()

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")


class Graph(_Frozen):
    """Unsigned simple graph on vertices 0..order-1."""

    __slots__ = ("order", "edges")

    def __init__(self, order: int, edges: Iterable[tuple[int, int]] = ()):
        keys = set()
        for u, v in edges:
            if u == v:
                raise InvalidParameter(f"loop at {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise InvalidParameter(f"edge {u}-{v} out of range for order {order}")
            k = _key(u, v)
            if k in keys:
                raise InvalidParameter(f"duplicate edge {u}-{v}")
            keys.add(k)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "edges", frozenset(keys))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.order)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def __reduce__(self):
        return (Graph, (self.order, sorted(self.edges)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.order == other.order and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.order, self.edges))

    def __repr__(self) -> str:
        return f"Graph({self.order}, {self.sorted_edges()})"

    def signed(self, sign: Sign = POS) -> "SignedGraph":
        return SignedGraph(self.order, {e: sign for e in self.edges})


class SignedGraph(_Frozen):
    """Simple graph on vertices 0..order-1 with a sign on every edge.

    `edges` may be a mapping {(u, v): sign} or an iterable of (u, v, sign)
    triples. Instances are immutable; every modifier returns a new graph.
    """

    __slots__ = ("order", "_signs", "_adj")

    def __init__(self, order: int, edges=()):
        if order < 0:
            raise InvalidParameter("order must be non-negative")
        if isinstance(edges, dict):
            triples = [(u, v, s) for (u, v), s in edges.items()]
        else:
            triples = list(edges)
        signs: dict[tuple[int, int], Sign] = {}
        for u, v, s in triples:
            if u == v:
                raise InvalidParameter(f"loop at {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise InvalidParameter(f"edge {u}-{v} out of range for order {order}")
            k = _key(u, v)
            if k in signs:
                raise InvalidParameter(f"duplicate edge {u}-{v}")
            signs[k] = Sign(s)
        adj: list[dict[int, Sign]] = [dict() for _ in range(order)]
        for (u, v), s in signs.items():
            adj[u][v] = s
            adj[v][u] = s
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "_signs", signs)
        object.__setattr__(self, "_adj", tuple(adj))

    # basic queries

    @property
    def size(self) -> int:
        return len(self._signs)

    @property
    def edges(self) -> dict[tuple[int, int], Sign]:
        return dict(self._signs)

    def sorted_edges(self) -> list[tuple[int, int, Sign]]:
        return [(u, v, self._signs[(u, v)]) for u, v in sorted(self._signs)]

    def vertices(self) -> range:
        return range(self.order)

    def has_edge(self, u: int, v: int) -> bool:
        return _key(u, v) in self._signs

    def sign(self, u: int, v: int) -> Sign:
        try:
            return self._signs[_key(u, v)]
        except KeyError:
            raise InvalidParameter(f"no edge {u}-{v}") from None

    def neighbours(self, v: int) -> dict[int, Sign]:
        return dict(self._adj[v])

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def underlying(self) -> Graph:
        return Graph(self.order, self._signs.keys())

    def negative_count(self) -> int:
        return sum(1 for s in self._signs.values() if s is NEG)

    def __iter__(self) -> Iterator[tuple[int, int, Sign]]:
        return iter(self.sorted_edges())

    def __reduce__(self):
        return (SignedGraph, (self.order, [(u, v, int(s)) for u, v, s in self.sorted_edges()]))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignedGraph):
            return NotImplemented
        return self.order == other.order and self._signs == other._signs

    def __hash__(self) -> int:
        return hash((self.order, frozenset(self._signs.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"{u}{s.symbol}{v}" for u, v, s in self.sorted_edges())
        return f"SignedGraph({self.order}, [{body}])"

    # derived graphs

    def with_sign(self, u: int, v: int, s: Sign) -> "SignedGraph":
        k = _key(u, v)
        if k not in self._signs:
            raise InvalidParameter(f"no edge {u}-{v}")
        signs = dict(self._signs)
        signs[k] = Sign(s)
        return SignedGraph(self.order, signs)

    def flip_edge(self, u: int, v: int) -> "SignedGraph":
        return self.with_sign(u, v, -self.sign(u, v))

    def with_edge(self, u: int, v: int, s: Sign) -> "SignedGraph":
        if self.has_edge(u, v):
            raise InvalidParameter(f"edge {u}-{v} already present")
        signs = dict(self._signs)
        signs[_key(u, v)] = Sign(s)
        return SignedGraph(self.order, signs)

    def without_edge(self, u: int, v: int) -> "SignedGraph":
        k = _key(u, v)
        if k not in self._signs:
            raise InvalidParameter(f"no edge {u}-{v}")
        signs = dict(self._signs)
        del signs[k]
        return SignedGraph(self.order, signs)

    def induced(self, keep: Iterable[int]) -> "SignedGraph":
        """Induced subgraph on `keep`, relabelled 0.. in increasing vertex order."""
        kept = sorted(set(keep))
        for v in kept:
            if not 0 <= v < self.order:
                raise InvalidParameter(f"vertex {v} out of range")
        index = {v: i for i, v in enumerate(kept)}
        signs = {
            (index[u], index[v]): s
            for (u, v), s in self._signs.items()
            if u in index and v in index
        }
        return SignedGraph(len(kept), signs)

    def without_vertex(self, v: int) -> "SignedGraph":
        if not 0 <= v < self.order:
            raise InvalidParameter(f"vertex {v} out of range")
        return self.induced(w for w in range(self.order) if w != v)


class SignedMultigraph(_Frozen):
    """Signed multigraph whose vertices are labelled by colour magnitudes.

    `vertices` holds the labels; `edges` is a multiset of (a, b, sign) with
    a <= b, where a == b denotes a loop.
    """

    __slots__ = ("vertices", "edges")

    def __init__(self, vertices: Iterable[int], edges: Iterable[tuple[int, int, int]] = ()):
        verts = tuple(sorted(set(vertices)))
        labels = set(verts)
        multiset: Counter = Counter()
        for a, b, s in edges:
            if a not in labels or b not in labels:
                raise InvalidParameter(f"edge ({a},{b}) uses an unknown vertex")
            multiset[EdgeType.of(a, b, s)] += 1
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", multiset)

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def size(self) -> int:
        return sum(self.edges.values())

    def simplified(self) -> "SignedMultigraph":
        """Keep at most one edge per (pair, sign)."""
        return SignedMultigraph(self.vertices, set(self.edges))

    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    def negative_count(self) -> int:
        return sum(c for e, c in self.edges.items() if e.s is NEG)

    def degree(self, a: int) -> int:
        total = 0
        for e, c in self.edges.items():
            if e.i == a:
                total += c
            if e.j == a:
                total += c
        return total

    def __reduce__(self):
        return (SignedMultigraph, (self.vertices, list(self.edges.elements())))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignedMultigraph):
            return NotImplemented
        return self.vertices == other.vertices and +self.edges == +other.edges

    def __hash__(self) -> int:
        return hash((self.vertices, frozenset((+self.edges).items())))

    def __repr__(self) -> str:
        body = ", ".join(f"({e.i},{e.j},{e.s.symbol})x{c}" for e, c in sorted(self.edges.items()))
        return f"SignedMultigraph({list(self.vertices)}, [{body}])"


def _check_k(k: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise InvalidParameter(f"k must be a positive integer, got {k!r}")


def magnitudes(k: int) -> list[int]:
    """Colour magnitudes available to a k-colouring: 0..n for k=2n+1, 1..n for k=2n."""
    _check_k(k)
    n = k // 2
    return list(range(0 if k % 2 else 1, n + 1))


def kstar_edge_types(k: int) -> list[EdgeType]:
    """Edges of K*_k in a fixed order: loops first by magnitude, then pairs (+, -)."""
    mags = magnitudes(k)
    types = [EdgeType(a, a, NEG) for a in mags if a > 0]
    for x, a in enumerate(mags):
        for b in mags[x + 1:]:
            types.append(EdgeType(a, b, POS))
            types.append(EdgeType(a, b, NEG))
    return types


def build_kstar(k: int) -> SignedMultigraph:
    return SignedMultigraph(magnitudes(k), kstar_edge_types(k))


def kstar_size(k: int) -> int:
    _check_k(k)
    if k % 2 == 0:
        return (k // 2) ** 2
    return ((k + 1) // 2) ** 2 - 1


def kstar_balance(k: int) -> int:
    """Parity (0 even, 1 odd) of the number of negative edges of K*_k."""
    _check_k(k)
    mags = magnitudes(k)
    loops = sum(1 for a in mags if a > 0)
    pairs = len(mags) * (len(mags) - 1) // 2
    return (loops + pairs) % 2


def colour_set(k: int) -> tuple[int, ...]:
    _check_k(k)
    n = k // 2
    neg = tuple(range(-n, 0))
    mid = (0,) if k % 2 else ()
    return neg + mid + tuple(range(1, n + 1))


def largest_k_within_size(size: int) -> int:
    """Largest k with kstar_size(k) <= size."""
    if size < 0:
        raise InvalidParameter("size must be non-negative")
    k = 1
    while kstar_size(k + 1) <= size:
        k += 1
    return k
