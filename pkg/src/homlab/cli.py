"""Command-line front door: build oracles, run checks and constructions, and
emit reproducible JSON/DOT reports.

Exit codes: 0 success/consistent, 1 usage, 2 bad input, 3 refuted property,
4 inconclusive (no witness within bounds), 5 resource guard tripped.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import __version__
from .constructions import (
    anti_amalgam,
    back_and_forth_bimorphism,
    extend_to_bimorphism_prefix,
    fraisse_stages,
    mono_amalgam,
)
from .homogeneity import (
    DEFAULT_SEARCH_BOUND,
    ExtensionTask,
    check_cone,
    check_dep,
    check_ep,
    check_one_point_extension,
    survey_extension_properties,
)
from .monoid_orbits import (
    SelfMap,
    canonical_structure,
    close_monoid,
    orbit,
    orbit_partition,
)
from .oracles import (
    DEFAULT_TRUNCATE_GUARD,
    BinarySequence,
    DigraphOracle,
    IncreasingSequence,
    catalog_oracle,
    complement_oracle,
    cycle_overlay,
    frucht_overlay,
    oracle_from_json,
    phi_definable_set,
    sequence_graph,
    truncate,
)
from .relstruct import (
    DEFAULT_AUTOMORPHISM_GUARD,
    FiniteStructure,
    InputError,
    MorphismKind,
    PartialMap,
    ResourceGuardError,
    automorphism_group,
    graph,
    graph_to_json,
    induced_cycle_lengths,
    induced_substructure,
    is_core,
    to_dot,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_REFUTED = 3
EXIT_INCONCLUSIVE = 4
EXIT_GUARD = 5

PRISM = graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
K33 = graph(6, [(u, v) for u in (0, 1, 2) for v in (3, 4, 5)])


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _guard(default: int) -> int:
    raw = os.environ.get("HOMLAB_GUARD")
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"HOMLAB_GUARD must be an integer, got {raw!r}")


def _load_json_arg(text: str):
    if text.lstrip().startswith(("{", "[")):
        return json.loads(text)
    with open(text) as fh:
        return json.load(fh)


def _graph_arg(text: str) -> FiniteStructure:
    return FiniteStructure.from_json(_load_json_arg(text))


def _ints(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    return [int(t) for t in text.split(",")]


def _pairs(text: str) -> PartialMap:
    """Map syntax a:b,c:d — e.g. 0:0,1:2."""
    text = text.strip()
    if not text:
        return PartialMap(())
    out = []
    for chunk in text.split(","):
        a, _, b = chunk.partition(":")
        if not b:
            raise InputError(f"bad map entry {chunk!r}; expected source:target")
        out.append((int(a), int(b)))
    return PartialMap.of(dict(out))


def _sequence(text: str) -> BinarySequence:
    """Sequence syntax preamble/period (e.g. 0,1/0,1), pn:N, or pa:4,5,6."""
    if text.startswith("pn:"):
        return BinarySequence.pn(int(text[3:]))
    if text.startswith("pa:"):
        return BinarySequence.pa(_increasing(text[3:]))
    pre, sep, per = text.partition("/")
    if not sep:
        raise InputError(f"bad sequence {text!r}; expected preamble/period")
    return BinarySequence.periodic(_ints(pre), _ints(per))


def _increasing(text: str) -> IncreasingSequence:
    """Increasing-sequence syntax prefix[:+d], e.g. 4,5,6 or 4,5,6:+2."""
    body, _, rule = text.partition(":")
    return IncreasingSequence(tuple(_ints(body)), rule or "+1")


def _delta_arg(text: str) -> FiniteStructure:
    if text == "prism":
        return PRISM
    if text == "k33":
        return K33
    return _graph_arg(text)


def _add_oracle_flags(p: argparse.ArgumentParser):
    p.add_argument("--family", required=True, help="oracle family name")
    p.add_argument("--m", help="clique_union: part count, or 'omega'")
    p.add_argument("--P", help="sequence_graph: sequence (preamble/period, pn:N, pa:...)")
    p.add_argument("--A", help="cycle_overlay: increasing sequence prefix[:+d]")
    p.add_argument("--delta", help="frucht_overlay: prism, k33, or graph JSON/path")
    p.add_argument("--params", help="extra family parameters as JSON (e.g. henson)")
    p.add_argument("--complement", action="store_true", help="complement the oracle")


def _oracle_from_args(args):
    family = args.family
    if family == "sequence_graph":
        if not args.P:
            raise InputError("sequence_graph needs --P")
        G = sequence_graph(_sequence(args.P))
    elif family == "cycle_overlay":
        if not args.A:
            raise InputError("cycle_overlay needs --A")
        G = cycle_overlay(_increasing(args.A))
    elif family == "frucht_overlay":
        if not args.delta:
            raise InputError("frucht_overlay needs --delta")
        G = frucht_overlay(_delta_arg(args.delta))
    else:
        params = dict(_load_json_arg(args.params)) if args.params else {}
        if args.m is not None:
            params["m"] = args.m if args.m == "omega" else int(args.m)
        G = catalog_oracle(family, **params)
    if args.complement:
        G = complement_oracle(G)
    return G


def _report(command: str, parameters: dict, payload: dict) -> dict:
    return {
        "tool": "homlab",
        "version": __version__,
        "command": command,
        "parameters": parameters,
        **payload,
    }


def _emit(report: dict, json_path: Optional[str] = None):
    text = json.dumps(report, sort_keys=True, indent=2)
    if json_path:
        with open(json_path, "w") as fh:
            fh.write(text + "\n")
    print(text)


def _verdict_exit(outcome: str) -> int:
    if outcome == "witness":
        return EXIT_OK
    if outcome == "impossible":
        return EXIT_REFUTED
    return EXIT_INCONCLUSIVE


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_oracle_truncate(args) -> int:
    G = _oracle_from_args(args)
    W = truncate(G, args.n, guard=_guard(DEFAULT_TRUNCATE_GUARD))
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(to_dot(W))
    payload = {"oracle": G.to_json(), "graph": graph_to_json(W) if W.is_graph() else W.to_json()}
    _emit(_report("oracle truncate", {"n": args.n}, payload), args.json)
    return EXIT_OK


def _cmd_check_cone(args) -> int:
    G = _oracle_from_args(args)
    v = check_cone(G, set(_ints(args.s)), args.polarity, args.bound, avoid=set(_ints(args.avoid)))
    _emit(
        _report(
            "check cone",
            {"s": _ints(args.s), "polarity": args.polarity, "bound": args.bound, "avoid": _ints(args.avoid)},
            {"oracle": G.to_json(), "verdict": v.to_json()},
        ),
        args.json,
    )
    return _verdict_exit(v.outcome)


def _cmd_check_ep(args) -> int:
    G = _oracle_from_args(args)
    v = check_ep(G, set(_ints(args.u)), set(_ints(args.v)), bound=args.bound)
    _emit(
        _report(
            "check ep",
            {"u": _ints(args.u), "v": _ints(args.v), "bound": args.bound},
            {"oracle": G.to_json(), "verdict": v.to_json()},
        ),
        args.json,
    )
    return _verdict_exit(v.outcome)


def _cmd_check_dep(args) -> int:
    D = _oracle_from_args(args)
    if not isinstance(D, DigraphOracle):
        raise InputError("check dep needs a digraph oracle family")
    v = check_dep(D, set(_ints(args.u)), set(_ints(args.v)), set(_ints(args.w)), bound=args.bound)
    _emit(
        _report(
            "check dep",
            {"u": _ints(args.u), "v": _ints(args.v), "w": _ints(args.w), "bound": args.bound},
            {"oracle": D.to_json(), "verdict": v.to_json()},
        ),
        args.json,
    )
    return _verdict_exit(v.outcome)


def _cmd_check_one_point(args) -> int:
    G = _oracle_from_args(args)
    S = sorted(set(_ints(args.s)))
    pattern = sorted(set(_ints(args.pattern)))
    if not set(pattern) <= set(S):
        raise InputError("pattern vertices must lie in the anchor set")
    window = truncate(G, max(S) + 1 if S else 1, guard=_guard(DEFAULT_TRUNCATE_GUARD))
    A = induced_substructure(window, S)
    index = {x: i for i, x in enumerate(S)}
    edges = [(u, v) for u, v in A.rel("E") if u < v]
    edges += [(index[p], len(S)) for p in pattern]
    B = graph(len(S) + 1, sorted(set(edges)))
    f = PartialMap(tuple((i, x) for x, i in index.items()))
    kind = MorphismKind.MONOMORPHISM if args.kind == "mono" else MorphismKind.ANTIMONOMORPHISM
    v = check_one_point_extension(ExtensionTask(G, A, B, f, kind), bound=args.bound)
    _emit(
        _report(
            "check one-point",
            {"s": S, "pattern": pattern, "kind": args.kind, "bound": args.bound},
            {"oracle": G.to_json(), "verdict": v.to_json()},
        ),
        args.json,
    )
    return _verdict_exit(v.outcome)


def _cmd_survey(args) -> int:
    G = _oracle_from_args(args)
    report = survey_extension_properties(
        G,
        max_A=args.max_a,
        trunc=args.trunc,
        bound=args.bound,
        trunc_guard=_guard(DEFAULT_TRUNCATE_GUARD),
    )
    status = report["summary"]["status"]
    _emit(
        _report(
            "survey",
            {"max_a": args.max_a, "trunc": args.trunc, "bound": args.bound},
            report,
        ),
        args.json,
    )
    if status == "refuted":
        return EXIT_REFUTED
    if status == "inconclusive":
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _monoid_from_args(args):
    tables = [SelfMap(tuple(_ints(t))) for t in args.generators.split(";")]
    return close_monoid(tables, n=args.n)


def _cmd_orbits(args) -> int:
    T = _monoid_from_args(args)
    if args.xs:
        xs = tuple(_ints(args.xs))
        cls = sorted(orbit(T, xs, args.kind))
        payload = {"orbit": [list(t) for t in cls], "kind": args.kind, "xs": list(xs)}
    else:
        if args.kind == "forward":
            raise InputError("forward orbits need an explicit --xs tuple")
        payload = {"partition": orbit_partition(T, args.arity, args.kind).to_json()}
    payload["monoid"] = T.to_json()
    payload["size"] = len(T.elements)
    _emit(
        _report("orbits", {"arity": args.arity, "kind": args.kind}, payload),
        args.json,
    )
    return EXIT_OK


def _cmd_canonical_structure(args) -> int:
    T = _monoid_from_args(args)
    C = canonical_structure(T, args.max_arity)
    payload = {
        "monoid": T.to_json(),
        "size": len(T.elements),
        "certified": C.certified,
        "relations": len(C.relation_tuples),
        "failures": len(C.failures),
    }
    _emit(_report("canonical-structure", {"max_arity": args.max_arity}, payload), args.json)
    return EXIT_OK if C.certified else EXIT_REFUTED


def _cmd_amalgam(args) -> int:
    A = _graph_arg(args.a)
    B1 = _graph_arg(args.b1)
    B2 = _graph_arg(args.b2)
    f1 = _pairs(args.f1)
    f2 = _pairs(args.f2)
    fn = mono_amalgam if args.flavour == "mono" else anti_amalgam
    res = fn(A, B1, B2, f1, f2)
    payload = {
        "C": graph_to_json(res.C),
        "g1": [list(p) for p in res.g1.pairs],
        "g2": [list(p) for p in res.g2.pairs],
        "certified": res.certified,
    }
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(to_dot(res.C))
    _emit(
        _report(
            f"amalgam {args.flavour}",
            {"f1": [list(p) for p in f1.pairs], "f2": [list(p) for p in f2.pairs]},
            payload,
        ),
        args.json,
    )
    return EXIT_OK if res.certified else EXIT_REFUTED


def _prefix_payload(prefix) -> dict:
    return {
        "pairs": [list(p) for p in prefix.pairs],
        "log": list(prefix.log),
        "failed": prefix.failed,
        "certified": prefix.certified,
    }


def _cmd_back_and_forth(args) -> int:
    G = _oracle_from_args(args)
    H = oracle_from_json(_load_json_arg(args.target))
    prefix = back_and_forth_bimorphism(G, H, args.steps, bound=args.bound)
    _emit(
        _report(
            "back-and-forth",
            {"steps": args.steps, "bound": args.bound, "target": H.to_json()},
            {"oracle": G.to_json(), **_prefix_payload(prefix)},
        ),
        args.json,
    )
    return EXIT_OK if prefix.certified and prefix.failed is None else EXIT_INCONCLUSIVE


def _cmd_extend_bimorphism(args) -> int:
    G = _oracle_from_args(args)
    prefix = extend_to_bimorphism_prefix(G, _pairs(args.map), args.steps, bound=args.bound)
    _emit(
        _report(
            "extend-bimorphism",
            {"steps": args.steps, "bound": args.bound, "map": args.map},
            {"oracle": G.to_json(), **_prefix_payload(prefix)},
        ),
        args.json,
    )
    return EXIT_OK if prefix.certified and prefix.failed is None else EXIT_INCONCLUSIVE


def _cmd_fraisse(args) -> int:
    seed = _graph_arg(args.seed) if args.seed else graph(1, [])
    chain, audit = fraisse_stages(seed, args.stages, max_size=args.max_size)
    payload = {
        "stage_sizes": [M.size for M in chain],
        "final": graph_to_json(chain[-1]),
        "chain_certified": audit.chain_certified,
        "all_realized": audit.all_realized,
        "audit": audit.entries,
    }
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(to_dot(chain[-1]))
    _emit(
        _report("fraisse", {"stages": args.stages, "max_size": args.max_size}, payload),
        args.json,
    )
    return EXIT_OK if audit.chain_certified and audit.all_realized else EXIT_INCONCLUSIVE


def _cmd_cycle_spectrum(args) -> int:
    G = _oracle_from_args(args)
    W = truncate(G, args.trunc, guard=_guard(DEFAULT_TRUNCATE_GUARD))
    lengths = induced_cycle_lengths(W, args.max_len)
    _emit(
        _report(
            "cycle-spectrum",
            {"trunc": args.trunc, "max_len": args.max_len},
            {"oracle": G.to_json(), "lengths": sorted(lengths)},
        ),
        args.json,
    )
    return EXIT_OK


def _cmd_frucht(args) -> int:
    delta = _delta_arg(args.delta)
    G = frucht_overlay(delta)
    W = truncate(G, args.n, guard=_guard(DEFAULT_TRUNCATE_GUARD))
    payload = {"oracle": G.to_json(), "graph": graph_to_json(W)}
    if args.auts:
        auts = automorphism_group(W, guard=_guard(DEFAULT_AUTOMORPHISM_GUARD))
        tail = range(delta.size, W.size)
        payload["automorphisms"] = {
            "order": len(auts),
            "tail_fixed": all(a(v) == v for a in auts for v in tail),
        }
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(to_dot(W))
    _emit(_report("frucht", {"n": args.n, "auts": args.auts}, payload), args.json)
    return EXIT_OK


def _cmd_phi_set(args) -> int:
    P = BinarySequence.pn(args.p)
    out = phi_definable_set(P, args.n)
    _emit(
        _report("phi-set", {"p": args.p, "n": args.n}, {"vertices": sorted(out), "size": len(out)}),
        args.json,
    )
    return EXIT_OK


def _cmd_is_core(args) -> int:
    G = _graph_arg(args.graph)
    _emit(_report("is-core", {}, {"graph": G.to_json(), "is_core": is_core(G)}), args.json)
    return EXIT_OK


def _cmd_automorphisms(args) -> int:
    G = _graph_arg(args.graph)
    auts = automorphism_group(G, guard=_guard(DEFAULT_AUTOMORPHISM_GUARD))
    payload = {
        "graph": G.to_json(),
        "order": len(auts),
        "maps": [[a(v) for v in G.domain] for a in auts],
    }
    _emit(_report("automorphisms", {}, payload), args.json)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser wiring


def _out_flags(p, dot=False):
    p.add_argument("--json", help="also write the report to this path")
    if dot:
        p.add_argument("--dot", help="write a DOT rendering to this path")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="homlab", description=__doc__)
    parser.add_argument("--version", action="version", version=f"homlab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    oracle = sub.add_parser("oracle", help="oracle utilities")
    osub = oracle.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)
    p = osub.add_parser("truncate", help="finite window of an infinite oracle")
    _add_oracle_flags(p)
    p.add_argument("--n", type=int, required=True, help="window size")
    _out_flags(p, dot=True)
    p.set_defaults(fn=_cmd_oracle_truncate)

    check = sub.add_parser("check", help="witness checks")
    csub = check.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)
    p = csub.add_parser("cone", help="common-neighbour / common-non-neighbour witness")
    _add_oracle_flags(p)
    p.add_argument("--s", required=True, help="anchor vertices, comma separated")
    p.add_argument("--polarity", choices=["adjacent", "nonadjacent"], default="adjacent")
    p.add_argument("--avoid", default="", help="vertices the witness must avoid")
    p.add_argument("--bound", type=int, default=DEFAULT_SEARCH_BOUND)
    _out_flags(p)
    p.set_defaults(fn=_cmd_check_cone)
    p = csub.add_parser("ep", help="vertex adjacent to all of U, none of V")
    _add_oracle_flags(p)
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--bound", type=int, default=DEFAULT_SEARCH_BOUND)
    _out_flags(p)
    p.set_defaults(fn=_cmd_check_ep)
    p = csub.add_parser("dep", help="digraph witness: out to U, in from V, independent of W")
    _add_oracle_flags(p)
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--w", required=True)
    p.add_argument("--bound", type=int, default=DEFAULT_SEARCH_BOUND)
    _out_flags(p)
    p.set_defaults(fn=_cmd_check_dep)
    p = csub.add_parser("one-point", help="one-point mono/antimono extension task")
    _add_oracle_flags(p)
    p.add_argument("--s", required=True, help="anchor vertices in the oracle")
    p.add_argument("--pattern", default="", help="anchors the new vertex must join")
    p.add_argument("--kind", choices=["mono", "anti"], required=True)
    p.add_argument("--bound", type=int, default=DEFAULT_SEARCH_BOUND)
    _out_flags(p)
    p.set_defaults(fn=_cmd_check_one_point)

    p = sub.add_parser("survey", help="extension-property survey over small patterns")
    _add_oracle_flags(p)
    p.add_argument("--max-a", type=int, default=3, dest="max_a")
    p.add_argument("--trunc", type=int, default=12)
    p.add_argument("--bound", type=int, default=DEFAULT_SEARCH_BOUND)
    _out_flags(p)
    p.set_defaults(fn=_cmd_survey)

    p = sub.add_parser("orbits", help="orbit or orbit partition of a transformation monoid")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--generators", required=True, help="tables like 1,0,2;0,0,1")
    p.add_argument("--arity", type=int, default=1)
    p.add_argument("--kind", choices=["forward", "strong", "group"], default="strong")
    p.add_argument("--xs", default="", help="single tuple instead of a full partition")
    _out_flags(p)
    p.set_defaults(fn=_cmd_orbits)

    p = sub.add_parser("canonical-structure", help="orbit-defined relational structure")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--generators", required=True)
    p.add_argument("--max-arity", type=int, default=2, dest="max_arity")
    _out_flags(p)
    p.set_defaults(fn=_cmd_canonical_structure)

    amalgam = sub.add_parser("amalgam", help="free amalgamation over a common part")
    asub = amalgam.add_subparsers(dest="flavour", required=True, parser_class=_Parser)
    for flavour in ("mono", "anti"):
        p = asub.add_parser(flavour)
        p.add_argument("--a", required=True, help="common part A (graph JSON/path)")
        p.add_argument("--b1", required=True)
        p.add_argument("--b2", required=True)
        p.add_argument("--f1", required=True, help="map A->B1 as 0:0,1:2")
        p.add_argument("--f2", required=True, help="embedding A->B2")
        _out_flags(p, dot=True)
        p.set_defaults(fn=_cmd_amalgam)

    p = sub.add_parser("back-and-forth", help="bijective-homomorphism prefix between oracles")
    _add_oracle_flags(p)
    p.add_argument("--target", required=True, help="target oracle JSON/path")
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--bound", type=int, default=DEFAULT_SEARCH_BOUND)
    _out_flags(p)
    p.set_defaults(fn=_cmd_back_and_forth)

    p = sub.add_parser("extend-bimorphism", help="grow a partial self-map towards a bimorphism")
    _add_oracle_flags(p)
    p.add_argument("--map", required=True, help="initial map as 0:1,2:4")
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--bound", type=int, default=DEFAULT_SEARCH_BOUND)
    _out_flags(p)
    p.set_defaults(fn=_cmd_extend_bimorphism)

    p = sub.add_parser("fraisse", help="staged chain construction with audit")
    p.add_argument("--seed", help="seed graph JSON/path (default: one vertex)")
    p.add_argument("--stages", type=int, required=True)
    p.add_argument("--max-size", type=int, default=3, dest="max_size")
    _out_flags(p, dot=True)
    p.set_defaults(fn=_cmd_fraisse)

    p = sub.add_parser("cycle-spectrum", help="induced cycle lengths of a truncation")
    _add_oracle_flags(p)
    p.add_argument("--trunc", type=int, required=True)
    p.add_argument("--max-len", type=int, default=8, dest="max_len")
    _out_flags(p)
    p.set_defaults(fn=_cmd_cycle_spectrum)

    p = sub.add_parser("frucht", help="3-regular overlay window, optionally with automorphisms")
    p.add_argument("--delta", required=True, help="prism, k33, or graph JSON/path")
    p.add_argument("--n", type=int, required=True, help="window size")
    p.add_argument("--auts", action="store_true", help="compute the automorphism group")
    _out_flags(p, dot=True)
    p.set_defaults(fn=_cmd_frucht)

    p = sub.add_parser("phi-set", help="twin-definable vertices of an alternating-tail window")
    p.add_argument("--p", type=int, required=True, help="length of the leading 1-run")
    p.add_argument("--n", type=int, required=True, help="window size")
    _out_flags(p)
    p.set_defaults(fn=_cmd_phi_set)

    p = sub.add_parser("is-core", help="every self-homomorphism is an embedding")
    p.add_argument("--graph", required=True)
    _out_flags(p)
    p.set_defaults(fn=_cmd_is_core)

    p = sub.add_parser("automorphisms", help="automorphism group of a finite graph")
    p.add_argument("--graph", required=True)
    _out_flags(p)
    p.set_defaults(fn=_cmd_automorphisms)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.fn(args)
    except InputError as exc:
        print(f"homlab: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceGuardError as exc:
        print(f"homlab: resource guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"homlab: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
