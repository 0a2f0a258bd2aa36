"""Text formats for signed graphs and colourings.

Graph files::

    sg <order>
    <u> <v> <+|->
    ...

Colouring files::

    col <k>
    <vertex> <colour>      # colour like -2, 0, +1 (or 1)
    <vertex> <mag><+|->    # inferred colour, e.g. 3- or 0+

Lines starting with '#' and blank lines are ignored.
"""

from __future__ import annotations

import re

from .colouring import Colouring, InferredColouring
from .core import InvalidParameter, Sign, SignedGraph


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _content_lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield number, line


def _header(lines, keyword: str) -> tuple[int, int]:
    try:
        number, line = next(lines)
    except StopIteration:
        raise ParseError(1, f"missing '{keyword} <n>' header") from None
    parts = line.split()
    if len(parts) != 2 or parts[0] != keyword or not parts[1].isdigit():
        raise ParseError(number, f"expected '{keyword} <n>' header, got {line!r}")
    return number, int(parts[1])


def parse_graph(text: str) -> SignedGraph:
    lines = _content_lines(text)
    _, order = _header(lines, "sg")
    seen: dict[tuple[int, int], int] = {}
    edges = []
    for number, line in lines:
        parts = line.split()
        if len(parts) != 3 or parts[2] not in ("+", "-"):
            raise ParseError(number, f"expected '<u> <v> <+|->', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(number, f"vertex indices must be integers, got {line!r}") from None
        if u == v:
            raise ParseError(number, f"loop at vertex {u}")
        for x in (u, v):
            if not 0 <= x < order:
                raise ParseError(number, f"vertex {x} out of range for order {order}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(number, f"duplicate edge {u}-{v} (first on line {seen[key]})")
        seen[key] = number
        edges.append((u, v, Sign.parse(parts[2])))
    return SignedGraph(order, edges)


def serialize_graph(G: SignedGraph, comments: list[str] | None = None) -> str:
    out = [f"# {c}" for c in comments or []]
    out.append(f"sg {G.order}")
    out += [f"{u} {v} {s.symbol}" for u, v, s in G.sorted_edges()]
    return "\n".join(out) + "\n"


_PLAIN = re.compile(r"^[+-]?\d+$")
_INFERRED = re.compile(r"^(\d+)([+-])$")


def parse_colouring(text: str, order: int | None = None) -> Colouring | InferredColouring:
    """Parse a colouring file; inferred tokens make the whole file an InferredColouring."""
    lines = _content_lines(text)
    _, k = _header(lines, "col")
    if k < 1:
        raise ParseError(1, "k must be positive")
    values: dict[int, object] = {}
    kinds = set()
    for number, line in lines:
        parts = line.split()
        if len(parts) != 2 or not parts[0].isdigit():
            raise ParseError(number, f"expected '<vertex> <colour>', got {line!r}")
        v, token = int(parts[0]), parts[1]
        if v in values:
            raise ParseError(number, f"vertex {v} coloured twice")
        m = _INFERRED.match(token)
        if m:
            values[v] = (int(m.group(1)), Sign.parse(m.group(2)))
            kinds.add("inferred")
        elif _PLAIN.match(token):
            values[v] = int(token)
            kinds.add("plain")
        else:
            raise ParseError(number, f"bad colour token {token!r}")
    if len(kinds) > 1:
        raise ParseError(1, "mixes plain and inferred colours")
    n = order if order is not None else (max(values) + 1 if values else 0)
    missing = [v for v in range(n) if v not in values]
    if missing:
        raise ParseError(1, f"vertices without a colour: {missing[:10]}")
    extra = [v for v in values if v >= n]
    if extra:
        raise ParseError(1, f"vertex {extra[0]} out of range for order {n}")
    try:
        if kinds == {"inferred"}:
            return InferredColouring(k, tuple(values[v] for v in range(n)))
        return Colouring(k, tuple(values[v] for v in range(n)))
    except InvalidParameter as exc:
        raise ParseError(1, str(exc)) from None


def colour_token(c: int) -> str:
    return f"+{c}" if c > 0 else str(c)


def inferred_token(m: int, f: Sign) -> str:
    return f"{m}{f.symbol}"


def serialize_colouring(phi: Colouring | InferredColouring) -> str:
    out = [f"col {phi.k}"]
    if isinstance(phi, InferredColouring):
        out += [f"{v} {inferred_token(m, f)}" for v, (m, f) in enumerate(phi.assignment)]
    else:
        out += [f"{v} {colour_token(c)}" for v, c in enumerate(phi.assignment)]
    return "\n".join(out) + "\n"


def witness_list(phi: Colouring | InferredColouring) -> list[str]:
    """Compact "<vertex>:<colour>" strings used in reports."""
    if isinstance(phi, InferredColouring):
        return [f"{v}:{inferred_token(m, f)}" for v, (m, f) in enumerate(phi.assignment)]
    return [f"{v}:{colour_token(c)}" for v, c in enumerate(phi.assignment)]
