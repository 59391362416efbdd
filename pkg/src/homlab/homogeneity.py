"""Bounded-search checkers for extension properties over graph oracles.

The central discipline is the three-valued :class:`Verdict`: bounded search
can never refute anything, so ``impossible`` is only ever produced by a
structural rule registered with the oracle, while every found witness is
re-verified against the adjacency predicate before being reported.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .oracles import DigraphOracle, GraphOracle, Impossibility, truncate
from .relstruct import (
    FiniteStructure,
    InputError,
    MorphismKind,
    PartialMap,
    graph,
    induced_substructure,
)

DEFAULT_SEARCH_BOUND = 4096


@dataclass(frozen=True)
class Verdict:
    outcome: str  # "witness" | "no_witness" | "impossible"
    witness: Optional[int] = None
    bound: Optional[int] = None
    rule: Optional[str] = None
    description: Optional[str] = None
    cost: int = 0

    @staticmethod
    def found(witness: int, cost: int) -> "Verdict":
        return Verdict("witness", witness=witness, cost=cost)

    @staticmethod
    def exhausted(bound: int, cost: int) -> "Verdict":
        return Verdict("no_witness", bound=bound, cost=cost)

    @staticmethod
    def ruled_out(imp: Impossibility, cost: int = 0) -> "Verdict":
        return Verdict("impossible", rule=imp.rule, description=imp.description, cost=cost)

    def to_json(self) -> dict:
        out = {"outcome": self.outcome, "cost": self.cost}
        if self.outcome == "witness":
            out["witness"] = self.witness
        elif self.outcome == "no_witness":
            out["bound"] = self.bound
        else:
            out["rule"] = self.rule
            out["description"] = self.description
        return out


def _pattern_holds(G: GraphOracle, x: int, adj_to, nonadj_to) -> bool:
    return all(G.adjacent(x, u) for u in adj_to) and not any(G.adjacent(x, v) for v in nonadj_to)


def check_cone(
    G: GraphOracle,
    S,
    polarity: str,
    bound: int = DEFAULT_SEARCH_BOUND,
    avoid=frozenset(),
) -> Verdict:
    """A vertex (non-)adjacent to every member of S, outside S and ``avoid``."""
    if polarity not in ("adjacent", "nonadjacent"):
        raise InputError(f"unknown polarity {polarity!r}")
    S = frozenset(S)
    avoid = frozenset(avoid)
    adj_to, nonadj_to = (S, frozenset()) if polarity == "adjacent" else (frozenset(), S)
    cost = 0
    if G.cone is not None:
        result = G.cone(S, polarity, avoid)
        cost = 1
        if isinstance(result, Impossibility):
            return Verdict.ruled_out(result, cost)
        if result is not None:
            if result not in S and result not in avoid and _pattern_holds(G, result, adj_to, nonadj_to):
                return Verdict.found(result, cost)
            # rule misfire: stay sound, fall back to the scan
    for x in range(bound):
        if x in S or x in avoid:
            continue
        cost += 1
        if _pattern_holds(G, x, adj_to, nonadj_to):
            return Verdict.found(x, cost)
    return Verdict.exhausted(bound, cost)


def check_ep(G: GraphOracle, U, V, bound: int = DEFAULT_SEARCH_BOUND) -> Verdict:
    """A vertex outside U ∪ V adjacent to all of U and non-adjacent to all of V."""
    U, V = frozenset(U), frozenset(V)
    if U & V:
        raise InputError("U and V must be disjoint")
    witness_rule = getattr(G, "pattern_witness", None)
    if witness_rule is not None:
        x = witness_rule(U, V, frozenset())
        if x is not None and x not in U | V and _pattern_holds(G, x, U, V):
            return Verdict.found(x, 1)
    if not U:
        return check_cone(G, V, "nonadjacent", bound)
    if not V:
        return check_cone(G, U, "adjacent", bound)
    cost = 0
    for x in range(bound):
        if x in U or x in V:
            continue
        cost += 1
        if _pattern_holds(G, x, U, V):
            return Verdict.found(x, cost)
    return Verdict.exhausted(bound, cost)


def check_dep(D: DigraphOracle, U, V, W, bound: int = DEFAULT_SEARCH_BOUND) -> Verdict:
    """A vertex x with arcs x→U, arcs V→x, and no arcs to or from W."""
    U, V, W = frozenset(U), frozenset(V), frozenset(W)
    if U & V or U & W or V & W:
        raise InputError("U, V, W must be pairwise disjoint")

    def holds(x: int) -> bool:
        return (
            all(D.arc(x, u) for u in U)
            and all(D.arc(v, x) for v in V)
            and not any(D.arc(x, w) or D.arc(w, x) for w in W)
        )

    rule = getattr(D, "dep_witness", None)
    if rule is not None:
        x = rule(U, V, W, frozenset())
        if x is not None and x not in U | V | W and holds(x):
            return Verdict.found(x, 1)
    cost = 0
    for x in range(bound):
        if x in U or x in V or x in W:
            continue
        cost += 1
        if holds(x):
            return Verdict.found(x, cost)
    return Verdict.exhausted(bound, cost)


@dataclass(frozen=True)
class ExtensionTask:
    """A one-point extension task: A ⊆ B with B = A plus the single new point
    b = |B|-1, and a map f from A into the ambient oracle's vertices."""

    ambient: GraphOracle
    A: FiniteStructure
    B: FiniteStructure
    f: PartialMap
    kind: MorphismKind

    def __post_init__(self):
        if self.kind not in (MorphismKind.MONOMORPHISM, MorphismKind.ANTIMONOMORPHISM):
            raise InputError("extension tasks are for mono or antimono kinds")
        if self.B.size != self.A.size + 1:
            raise InputError("B must extend A by exactly one point")
        if induced_substructure(self.B, range(self.A.size)).tables != self.A.tables:
            raise InputError("A is not the substructure of B on its first |A| points")
        fmap = self.f.as_dict()
        if set(fmap) != set(self.A.domain):
            raise InputError("f must be total on A")
        if len(set(fmap.values())) != len(fmap):
            raise InputError("f must be injective")
        for u, v in itertools.combinations(sorted(fmap), 2):
            edge = (u, v) in self.A.rel("E")
            image_edge = self.ambient.adjacent(fmap[u], fmap[v])
            if self.kind is MorphismKind.MONOMORPHISM and edge and not image_edge:
                raise InputError("f is not a monomorphism into the ambient")
            if self.kind is MorphismKind.ANTIMONOMORPHISM and not edge and image_edge:
                raise InputError("f is not an antimonomorphism into the ambient")

    @property
    def new_point(self) -> int:
        return self.B.size - 1


def check_one_point_extension(task: ExtensionTask, bound: int = DEFAULT_SEARCH_BOUND) -> Verdict:
    """Find an ambient image for the new point making the extended map pass
    its kind check.  Monomorphisms constrain only b's B-neighbours (a cone of
    adjacency over their images); antimonomorphisms only its non-neighbours."""
    fmap = task.f.as_dict()
    b = task.new_point
    neighbours = {a for a in task.A.domain if (a, b) in task.B.rel("E")}
    if task.kind is MorphismKind.MONOMORPHISM:
        S = {fmap[a] for a in neighbours}
        polarity = "adjacent"
    else:
        S = {fmap[a] for a in task.A.domain if a not in neighbours}
        polarity = "nonadjacent"
    avoid = frozenset(fmap.values()) - S
    return check_cone(task.ambient, S, polarity, bound, avoid=avoid)


def _one_point_b(A: FiniteStructure, pattern) -> FiniteStructure:
    """A plus a new last vertex adjacent exactly to ``pattern`` ⊆ A's domain."""
    edges = [(min(u, v), max(u, v)) for u, v in A.rel("E") if u < v]
    edges += [(a, A.size) for a in pattern]
    return graph(A.size + 1, edges)


def _is_complete_or_null(B: FiniteStructure) -> bool:
    e = len(B.rel("E")) // 2
    return e == 0 or e == B.size * (B.size - 1) // 2


def survey_extension_properties(
    G: GraphOracle,
    max_A: int = 3,
    trunc: int = 12,
    bound: int = DEFAULT_SEARCH_BOUND,
    trunc_guard: int = 512,
) -> dict:
    """Enumerate all one-point tasks with A an induced subset of the
    truncation, both kinds, and tally verdicts.

    A task is *required* for MB-homogeneity when its extended graph B lies in
    the oracle's age (or age membership is unknown), or — even if B is outside
    the age — when B is complete or null and the ambient window has both an
    edge and a non-edge: a non-complete, non-null MB-homogeneous graph embeds
    every finite clique and every finite independent set.

    Status: "refuted" if any required task is impossible; "inconclusive" if
    any required task exhausts its bound; else "consistent".
    """
    window = truncate(G, trunc, guard=trunc_guard)
    has_edge = bool(window.rel("E"))
    has_nonedge = len(window.rel("E")) < window.size * (window.size - 1)
    tasks = []
    refuting_rules = set()
    status_flags = {"impossible": False, "no_witness": False}
    for size in range(0, max_A + 1):
        for S in itertools.combinations(range(trunc), size):
            A = induced_substructure(window, S)
            f = PartialMap(tuple(enumerate(S)))
            for pattern_bits in range(2 ** size):
                pattern = [i for i in range(size) if (pattern_bits >> i) & 1]
                B = _one_point_b(A, pattern)
                if G.in_age is not None:
                    in_age = G.in_age(B)
                else:
                    in_age = None
                required = in_age is not False or (
                    _is_complete_or_null(B) and has_edge and has_nonedge
                )
                for kind in (MorphismKind.MONOMORPHISM, MorphismKind.ANTIMONOMORPHISM):
                    task = ExtensionTask(G, A, B, f, kind)
                    verdict = check_one_point_extension(task, bound)
                    if required and verdict.outcome == "impossible":
                        status_flags["impossible"] = True
                        refuting_rules.add(verdict.rule)
                    if required and verdict.outcome == "no_witness":
                        status_flags["no_witness"] = True
                    tasks.append(
                        {
                            "A": list(S),
                            "pattern": [S[i] for i in pattern],
                            "kind": kind.value,
                            "in_age": in_age,
                            "required": required,
                            "verdict": verdict.to_json(),
                        }
                    )
    if status_flags["impossible"]:
        status = "refuted"
    elif status_flags["no_witness"]:
        status = "inconclusive"
    else:
        status = "consistent"
    return {
        "oracle": G.to_json(),
        "parameters": {"max_A": max_A, "trunc": trunc, "bound": bound},
        "tasks": tasks,
        "summary": {
            "status": status,
            "refuting_rules": sorted(refuting_rules),
            "task_count": len(tasks),
            "note": f"consistent with MB-homogeneity up to (max_A={max_A}, trunc={trunc}, bound={bound})"
            if status == "consistent"
            else None,
        },
    }


def diameter_triangle_report(G: FiniteStructure) -> dict:
    """Exact diameter by BFS plus an every-edge-in-a-triangle scan."""
    if not G.is_graph():
        raise InputError("expected a graph")
    adj = [set() for _ in G.domain]
    for u, v in G.rel("E"):
        adj[u].add(v)
    diameter = 0
    connected = True
    for s in G.domain:
        dist = {s: 0}
        frontier = [s]
        while frontier:
            nxt = []
            for v in frontier:
                for w in adj[v]:
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        nxt.append(w)
            frontier = nxt
        if len(dist) < G.size:
            connected = False
            break
        diameter = max(diameter, max(dist.values()))
    if not connected:
        return {"connected": False, "diameter": None, "every_edge_in_triangle": None}
    every_edge = all(
        any(w in adj[u] and w in adj[v] for w in G.domain) for u, v in G.rel("E") if u < v
    )
    return {"connected": True, "diameter": diameter, "every_edge_in_triangle": every_edge}
