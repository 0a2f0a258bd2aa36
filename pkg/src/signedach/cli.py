"""Command-line interface: ``signedach <command> ...`` (or ``python3 -m signedach``).

Every command builds one result dictionary. ``--json`` prints it as is; the
plain output prints the same fields as text, minus timing. Exit codes:
0 computed / holds, 1 answer is no or a property failed, 2 usage or parse
error, 3 node budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .colouring import (
    Colouring,
    InferredColouring,
    is_complete,
    is_inferred_complete,
    is_inferred_proper,
    is_proper,
    realize,
    reduce,
)
from .core import InvalidParameter, build_kstar, kstar_edge_types, largest_k_within_size
from .families import (
    FAMILIES,
    gen_np_reduction,
    np_reduction_layout,
)
from .formulas import (
    CompleteVariant,
    construct_cycle_colouring,
    construct_path_colouring,
    construct_positive_clique_colouring,
    psi_complete,
    psi_cycle,
    psi_path,
)
from .harness import check_harness
from .io import ParseError, parse_colouring, parse_graph, serialize_graph, witness_list
from .solver import BudgetExhausted, chi, max_matching, psi, witness_subgraph
from .switching import equivalence_switch_set

OK, NO, USAGE, BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _type_str(t) -> str:
    return f"({t.i},{t.j},{'+' if t.s > 0 else '-'})"


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path: str):
    try:
        return parse_graph(_read(path))
    except ParseError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _load_colouring(path: str, order: int):
    try:
        return parse_colouring(_read(path), order)
    except ParseError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _int(text: str, name: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {text!r}") from None


# commands; each returns (exit code, result dict)


def cmd_psi(args):
    G = _load_graph(args.file)
    res = psi(G, node_budget=args.node_budget, workers=args.workers)
    size_bound = largest_k_within_size(G.size)
    cert = [
        f"lower bound {res.value}: witness is inferred-complete",
        f"upper bound {res.upper_bound} = min(order {G.order}, "
        f"2*matching+1 = {2 * max_matching(G) + 1}, size bound {size_bound})",
    ]
    if res.upper_bound > res.value:
        cert.append(f"exhaustive search: no complete k-colouring for k = {res.value + 1}..{res.upper_bound}")
    return OK, {
        "result": {"psi": res.value, "upper_bound": res.upper_bound, "order": G.order, "size": G.size},
        "witness": witness_list(res.witness),
        "certificate": cert,
        "nodes": res.nodes,
    }


def cmd_chi(args):
    G = _load_graph(args.file)
    res = chi(G, node_budget=args.node_budget)
    cert = [f"upper bound {res.value}: witness is proper"]
    if res.value > 1:
        cert.append(f"exhaustive search: no proper {res.value - 1}-colouring")
    return OK, {
        "result": {"chi": res.value, "order": G.order, "size": G.size},
        "witness": witness_list(res.witness),
        "certificate": cert,
        "nodes": res.nodes,
    }


def _missing_types(G, phi: Colouring) -> list[str]:
    have = reduce(G, phi).edge_set()
    return [_type_str(t) for t in kstar_edge_types(phi.k) if t not in have]


def cmd_verify(args):
    G = _load_graph(args.file)
    col = _load_colouring(args.colouring, G.order)
    if args.inferred != isinstance(col, InferredColouring):
        kind = "inferred" if isinstance(col, InferredColouring) else "plain"
        want = "pass --inferred" if kind == "inferred" else "drop --inferred"
        raise UsageError(f"{args.colouring} holds a {kind} colouring; {want}")
    if args.inferred:
        proper, complete = is_inferred_proper(G, col), is_inferred_complete(G, col)
        H, phi = realize(G, col)
    else:
        proper, complete = is_proper(G, col), is_complete(G, col)
        H, phi = G, col
    cert = []
    if proper and not complete:
        used = phi.used_magnitudes()
        unused = [m for m in range(0 if phi.k % 2 else 1, phi.k // 2 + 1) if m not in used]
        if unused:
            cert.append(f"unused magnitudes: {unused}")
        cert.append("missing edge types: " + " ".join(_missing_types(H, phi)))
    elif not proper:
        cert.append("colouring is not proper")
    return (OK if complete else NO), {
        "result": {"k": col.k, "proper": proper, "complete": complete, "inferred": args.inferred},
        "witness": witness_list(col),
        "certificate": cert,
    }


def cmd_reduce(args):
    G = _load_graph(args.file)
    col = _load_colouring(args.colouring, G.order)
    H, phi = realize(G, col) if isinstance(col, InferredColouring) else (G, col)
    if not is_proper(H, phi):
        return NO, {"result": {"proper": False}, "certificate": ["colouring is not proper"]}
    R = reduce(H, phi)
    edges = sorted(R.edge_set())
    return OK, {
        "result": {
            "proper": True,
            "vertices": sorted(R.vertices),
            "edges": [_type_str(t) for t in edges],
            "equals_kstar": R == build_kstar(phi.k),
        },
    }


def cmd_equiv(args):
    G1, G2 = _load_graph(args.file1), _load_graph(args.file2)
    try:
        S = equivalence_switch_set(G1, G2)
    except InvalidParameter as exc:
        raise UsageError(str(exc)) from None
    if S is None:
        return NO, {"result": {"equivalent": False}}
    return OK, {"result": {"equivalent": True, "switch_set": sorted(S)}}


def cmd_witness(args):
    G = _load_graph(args.file)
    col = _load_colouring(args.colouring, G.order)
    H, phi = realize(G, col) if isinstance(col, InferredColouring) else (G, col)
    if not is_complete(H, phi):
        return NO, {"result": {"complete": False}, "certificate": ["colouring is not complete"]}
    keep = witness_subgraph(H, phi)
    sub = H.induced(keep)
    restricted = Colouring(phi.k, tuple(phi[v] for v in keep))
    return OK, {
        "result": {"vertices": keep, "count": len(keep), "k": phi.k},
        "certificate": [f"restriction to the {len(keep)} vertices is complete: {is_complete(sub, restricted)}"],
    }


def _family_comments(inst) -> list[str]:
    out = [" ".join(["family", inst.name, *map(str, inst.params)])]
    out.append("labels " + " ".join(f"{i}={lab}" for i, lab in enumerate(inst.labels)))
    if inst.operation:
        out.append(f"operation {inst.operation} on {' '.join(map(str, inst.marked))}")
    if inst.claimed_psi is not None:
        out.append(f"claimed psi {inst.psi_relation} {inst.claimed_psi}")
    if inst.claimed_after is not None:
        out.append(f"claimed psi after operation {inst.after_relation} {inst.claimed_after}")
    if inst.witness is not None:
        out.append("witness " + " ".join(witness_list(inst.witness)))
    return out


def cmd_gen(args):
    name, params = args.family, args.params
    if name == "np-reduction":
        if len(params) != 2:
            raise UsageError("usage: gen np-reduction <graph-file> <k>")
        base = _load_graph(params[0]).underlying()
        k = _int(params[1], "k")
        G = gen_np_reduction(base, k)
        lay = np_reduction_layout(base.order, k)
        comments = [f"family np-reduction k {k}"] + [
            f"{part} {r.start}..{r.stop - 1}" for part, r in lay.items() if len(r)
        ]
        text = serialize_graph(G, comments)
        return OK, {"result": {"order": G.order, "size": G.size, "target_psi": 2 * len(lay["minus"]) + 2 * k},
                    "graph": text}
    if name not in FAMILIES:
        raise UsageError(f"unknown family {name!r}; choose from {', '.join([*FAMILIES, 'np-reduction'])}")
    inst = FAMILIES[name](*(_int(p, "parameter") for p in params))
    text = serialize_graph(inst.graph, _family_comments(inst))
    result = {"order": inst.graph.order, "size": inst.graph.size, "labels": list(inst.labels)}
    if inst.claimed_psi is not None:
        result["claimed_psi"] = [inst.psi_relation, inst.claimed_psi]
    if inst.claimed_after is not None:
        result["operation"] = [inst.operation, list(inst.marked)]
        result["claimed_after"] = [inst.after_relation, inst.claimed_after]
    payload = {"result": result, "graph": text}
    if inst.witness is not None:
        payload["witness"] = witness_list(inst.witness)
    return OK, payload


def cmd_formula(args):
    kind, params = args.kind, args.params
    if kind == "path":
        if len(params) not in (1, 2):
            raise UsageError("usage: formula path <n> [<signs like +-+>]")
        n = _int(params[0], "n")
        signs = _signs(params[1] if len(params) == 2 else "+" * (n - 1), n - 1)
        gamma = construct_path_colouring(n, signs)
        return OK, {"result": {"psi": psi_path(n)}, "witness": witness_list(gamma)}
    if kind == "cycle":
        if len(params) != 2:
            raise UsageError("usage: formula cycle <n> <balance: 0|1|even|odd>")
        n = _int(params[0], "n")
        b = {"0": 0, "1": 1, "even": 0, "odd": 1}.get(params[1])
        if b is None:
            raise UsageError("balance must be 0, 1, even or odd")
        value = psi_cycle(n, b)
        signs = [-1 if i == 0 and b else 1 for i in range(n)]
        return OK, {
            "result": {"psi": value, "balance": b},
            "witness": witness_list(construct_cycle_colouring(n, signs)),
        }
    if kind == "clique":
        if len(params) not in (2, 3):
            raise UsageError("usage: formula clique <n> <positive|negative|minus-matching> [<matching size>]")
        n = _int(params[0], "n")
        variants = {"positive": "all_positive", "negative": "all_negative", "minus-matching": "negative_minus_matching"}
        if params[1] not in variants:
            raise UsageError(f"unknown clique variant {params[1]!r}")
        m = _int(params[2], "matching size") if len(params) == 3 else (1 if params[1] == "minus-matching" else 0)
        value = psi_complete(n, CompleteVariant(variants[params[1]], m))
        payload = {"result": {"psi": value}}
        if params[1] == "positive":
            payload["witness"] = witness_list(construct_positive_clique_colouring(n))
        return OK, payload
    raise UsageError(f"unknown formula {kind!r}; choose path, cycle or clique")


def _signs(text: str, length: int) -> list[int]:
    if len(text) != length or set(text) - {"+", "-"}:
        raise UsageError(f"expected {length} signs made of '+' and '-', got {text!r}")
    return [1 if c == "+" else -1 for c in text]


def cmd_check(args):
    report = check_harness(
        args.seed, args.max_n, args.trials, node_budget=args.node_budget, workers=args.workers
    )
    code = BUDGET if report.budget_exhausted else (OK if report.passed else NO)
    return code, {"result": report.to_dict(), "report": report.lines()}


COMMANDS = {
    "psi": cmd_psi,
    "chi": cmd_chi,
    "verify": cmd_verify,
    "reduce": cmd_reduce,
    "equiv": cmd_equiv,
    "gen": cmd_gen,
    "witness": cmd_witness,
    "check": cmd_check,
    "formula": cmd_formula,
}


def build_parser() -> argparse.ArgumentParser:
    def add_globals(p, defaults: bool):
        d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
        p.add_argument("--json", action="store_true", default=d(False), help="print the result as JSON")
        p.add_argument("--node-budget", type=int, default=d(None), metavar="B",
                       help="search nodes allowed per decision search")
        p.add_argument("--workers", type=int, default=d(1), metavar="W", help="processes for psi")
        p.add_argument("--seed", type=int, default=d(42), metavar="S", help="random seed (check)")

    parser = argparse.ArgumentParser(prog="signedach", description="Complete colourings of signed graphs.")
    add_globals(parser, True)
    common = argparse.ArgumentParser(add_help=False)
    add_globals(common, False)
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    p = sub.add_parser("psi", parents=[common], help="signed achromatic number")
    p.add_argument("file")
    p = sub.add_parser("chi", parents=[common], help="signed chromatic number")
    p.add_argument("file")
    p = sub.add_parser("verify", parents=[common], help="check a colouring for completeness")
    p.add_argument("file")
    p.add_argument("colouring")
    p.add_argument("--inferred", action="store_true", help="the colouring uses magnitude+flag tokens")
    p = sub.add_parser("reduce", parents=[common], help="reduced signed multigraph of a colouring")
    p.add_argument("file")
    p.add_argument("colouring")
    p = sub.add_parser("equiv", parents=[common], help="switching equivalence of two signatures")
    p.add_argument("file1")
    p.add_argument("file2")
    p = sub.add_parser("gen", parents=[common], help="generate a family instance")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p = sub.add_parser("witness", parents=[common], help="small subgraph keeping a complete colouring complete")
    p.add_argument("file")
    p.add_argument("colouring")
    p = sub.add_parser("check", parents=[common], help="fuzz the structural bounds")
    p.add_argument("--max-n", type=int, default=6, metavar="N")
    p.add_argument("--trials", type=int, default=200, metavar="T")
    p = sub.add_parser("formula", parents=[common], help="closed-form values with explicit colourings")
    p.add_argument("kind")
    p.add_argument("params", nargs="*")
    return parser


def _text(command: str, payload: dict) -> list[str]:
    if "report" in payload:
        return payload["report"]
    if "graph" in payload:
        return [payload["graph"].rstrip("\n")]
    out = []
    for key, value in payload.get("result", {}).items():
        if isinstance(value, bool):
            value = "yes" if value else "no"
        elif isinstance(value, list):
            value = " ".join(map(str, value))
        out.append(f"{key}: {value}")
    if payload.get("witness"):
        out.append("witness: " + " ".join(payload["witness"]))
    for line in payload.get("certificate", []):
        out.append(f"  {line}")
    if "nodes" in payload:
        out.append(f"nodes: {payload['nodes']}")
    return out


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    start = time.perf_counter()
    try:
        code, payload = COMMANDS[args.command](args)
    except UsageError as exc:
        code, payload = USAGE, {"error": str(exc)}
    except InvalidParameter as exc:
        code, payload = USAGE, {"error": str(exc)}
    except BudgetExhausted as exc:
        code, payload = BUDGET, {"error": str(exc), "nodes": exc.nodes}
    payload = {"command": [args.command, *argv[argv.index(args.command) + 1:]], "exit_code": code, **payload}
    if args.command != "check":
        payload["elapsed_seconds"] = round(time.perf_counter() - start, 6)
    if args.json:
        print(json.dumps(payload, indent=2))
    elif "error" in payload:
        print(f"signedach {args.command}: {payload['error']}", file=sys.stderr)
        if code == USAGE:
            parser.print_usage(sys.stderr)
    else:
        print("\n".join(_text(args.command, payload)))
    return code
