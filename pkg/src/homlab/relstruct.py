"""Finite relational structures, the five-way morphism taxonomy, and the
combinatorial search primitives everything else is built from.

Elements of a structure are the dense integer indices 0..n-1.  Graphs are the
special case of a single binary relation "E" stored symmetrically and
irreflexively; digraphs use a single binary relation "A".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Mapping, Optional


class InputError(ValueError):
    """Raised for malformed or out-of-contract inputs."""


class ResourceGuardError(RuntimeError):
    """Raised when a search would exceed its configured resource guard."""


DEFAULT_AUTOMORPHISM_GUARD = 24


@dataclass(frozen=True)
class Signature:
    """An ordered list of (relation name, arity) pairs."""

    relations: tuple[tuple[str, int], ...]

    def __post_init__(self):
        names = [name for name, _ in self.relations]
        if len(set(names)) != len(names):
            raise InputError("duplicate relation names in signature")
        for name, arity in self.relations:
            if arity < 1:
                raise InputError(f"relation {name!r} has arity {arity} < 1")

    def arity(self, name: str) -> int:
        for rel, ar in self.relations:
            if rel == name:
                return ar
        raise InputError(f"unknown relation {name!r}")

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.relations)


GRAPH_SIGNATURE = Signature((("E", 2),))
DIGRAPH_SIGNATURE = Signature((("A", 2),))


@dataclass(frozen=True)
class FiniteStructure:
    """A finite relational structure over an explicit signature.

    ``origin`` optionally records the labels this structure carried inside a
    larger structure it was extracted from (see ``induced_substructure``); it
    does not take part in equality.
    """

    signature: Signature
    size: int
    tables: Mapping[str, frozenset[tuple[int, ...]]] = field(default_factory=dict)
    origin: Optional[tuple[int, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(
            self,
            "tables",
            {name: frozenset(map(tuple, self.tables.get(name, ()))) for name in self.signature.names},
        )
        for name, arity in self.signature.relations:
            for tup in self.tables[name]:
                if len(tup) != arity:
                    raise InputError(f"tuple {tup} has wrong arity for {name!r}")
                if any(not (0 <= x < self.size) for x in tup):
                    raise InputError(f"tuple {tup} outside domain of size {self.size}")

    def rel(self, name: str) -> frozenset[tuple[int, ...]]:
        return self.tables[name]

    @property
    def domain(self) -> range:
        return range(self.size)

    def is_graph(self) -> bool:
        return self.signature == GRAPH_SIGNATURE

    def to_json(self) -> dict:
        return {
            "signature": [{"name": n, "arity": a} for n, a in self.signature.relations],
            "n": self.size,
            "tables": {n: sorted(map(list, self.tables[n])) for n in self.signature.names},
        }

    @staticmethod
    def from_json(data: dict) -> "FiniteStructure":
        if "edges" in data and "signature" not in data:
            return graph(data["n"], [tuple(e) for e in data["edges"]])
        sig = Signature(tuple((r["name"], r["arity"]) for r in data["signature"]))
        tables = {n: frozenset(map(tuple, ts)) for n, ts in data.get("tables", {}).items()}
        return FiniteStructure(sig, data["n"], tables)


def graph(n: int, edges: Iterable[tuple[int, int]]) -> FiniteStructure:
    """Build a Graph: single symmetric irreflexive binary relation."""
    table = set()
    for u, v in edges:
        if u == v:
            raise InputError(f"loop at {u} not allowed in a graph")
        table.add((u, v))
        table.add((v, u))
    return FiniteStructure(GRAPH_SIGNATURE, n, {"E": frozenset(table)})


def digraph(n: int, arcs: Iterable[tuple[int, int]], forbid_2cycles: bool = True) -> FiniteStructure:
    table = set()
    for u, v in arcs:
        if u == v:
            raise InputError(f"loop at {u} not allowed in a digraph")
        table.add((u, v))
    if forbid_2cycles:
        for u, v in table:
            if (v, u) in table:
                raise InputError(f"2-cycle between {u} and {v}")
    return FiniteStructure(DIGRAPH_SIGNATURE, n, {"A": frozenset(table)})


def graph_edges(G: FiniteStructure) -> list[tuple[int, int]]:
    """Undirected edge list, each edge once as (i, j) with i < j, sorted."""
    return sorted({(min(u, v), max(u, v)) for u, v in G.rel("E")})


def adjacent(G: FiniteStructure, u: int, v: int) -> bool:
    return (u, v) in G.rel("E")


def neighbours(G: FiniteStructure, v: int) -> set[int]:
    return {b for a, b in G.rel("E") if a == v}


def graph_to_json(G: FiniteStructure) -> dict:
    return {"n": G.size, "edges": [list(e) for e in graph_edges(G)]}


def to_dot(G: FiniteStructure) -> str:
    if G.is_graph():
        lines = ["graph G {"]
        lines += [f"  {v};" for v in G.domain]
        lines += [f"  {u} -- {v};" for u, v in graph_edges(G)]
    else:
        lines = ["digraph G {"]
        lines += [f"  {v};" for v in G.domain]
        lines += [f"  {u} -> {v};" for u, v in sorted(G.rel("A"))]
    lines.append("}")
    return "\n".join(lines) + "\n"


class MorphismKind(Enum):
    HOMOMORPHISM = "homomorphism"
    MONOMORPHISM = "monomorphism"
    ANTIMONOMORPHISM = "antimonomorphism"
    EMBEDDING = "embedding"
    ISOMORPHISM = "isomorphism"

    @property
    def injective(self) -> bool:
        return self is not MorphismKind.HOMOMORPHISM

    @property
    def preserves_relations(self) -> bool:
        return self is not MorphismKind.ANTIMONOMORPHISM

    @property
    def preserves_nonrelations(self) -> bool:
        return self in (
            MorphismKind.ANTIMONOMORPHISM,
            MorphismKind.EMBEDDING,
            MorphismKind.ISOMORPHISM,
        )


@dataclass(frozen=True)
class PartialMap:
    """A finite partial function between element sets, stored as sorted pairs."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(sorted(self.pairs)))
        sources = [s for s, _ in self.pairs]
        if len(set(sources)) != len(sources):
            raise InputError("partial map is not functional")

    @staticmethod
    def of(mapping: Mapping[int, int]) -> "PartialMap":
        return PartialMap(tuple(mapping.items()))

    @staticmethod
    def identity(n: int) -> "PartialMap":
        return PartialMap(tuple((i, i) for i in range(n)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    @property
    def sources(self) -> tuple[int, ...]:
        return tuple(s for s, _ in self.pairs)

    @property
    def targets(self) -> tuple[int, ...]:
        return tuple(t for _, t in self.pairs)

    def __call__(self, x: int) -> int:
        for s, t in self.pairs:
            if s == x:
                return t
        raise InputError(f"{x} not in domain of partial map")

    def is_injective(self) -> bool:
        return len(set(self.targets)) == len(self.pairs)

    def is_total_on(self, A: FiniteStructure) -> bool:
        return set(self.sources) == set(A.domain)

    def compose(self, other: "PartialMap") -> "PartialMap":
        g = other.as_dict()
        return PartialMap(tuple((s, g[t]) for s, t in self.pairs if t in g))


def invert_partial_map(f: PartialMap) -> PartialMap:
    if not f.is_injective():
        raise InputError("cannot invert a non-injective partial map")
    return PartialMap(tuple((t, s) for s, t in f.pairs))


def check_morphism(f: PartialMap, kind: MorphismKind, A: FiniteStructure, B: FiniteStructure) -> bool:
    """Does f satisfy kind's preservation clause on tuples inside dom(f)?

    Partial-map semantics: only tuples all of whose coordinates are in dom(f)
    are inspected.  Isomorphism is a bijective embedding onto its image, which
    for an explicit finite map is the embedding clause plus injectivity.
    """
    fmap = f.as_dict()
    for s in fmap:
        if not 0 <= s < A.size:
            raise InputError(f"source element {s} outside domain of A")
    for t in fmap.values():
        if not 0 <= t < B.size:
            raise InputError(f"target element {t} outside domain of B")
    if kind.injective and not f.is_injective():
        return False
    dom = sorted(fmap)
    for name, arity in A.signature.relations:
        ra, rb = A.rel(name), B.rel(name)
        for tup in itertools.product(dom, repeat=arity):
            image = tuple(fmap[x] for x in tup)
            if tup in ra:
                if kind.preserves_relations and image not in rb:
                    return False
            else:
                if kind.preserves_nonrelations and image in rb:
                    return False
    return True


def _extension_ok(
    A: FiniteStructure,
    B: FiniteStructure,
    assigned: dict[int, int],
    v: int,
    kind: MorphismKind,
) -> bool:
    """Check the kind clauses for tuples that involve v and are now decided."""
    dom = list(assigned)
    for name, arity in A.signature.relations:
        ra, rb = A.rel(name), B.rel(name)
        for tup in itertools.product(dom, repeat=arity):
            if v not in tup:
                continue
            image = tuple(assigned[x] for x in tup)
            if tup in ra:
                if kind.preserves_relations and image not in rb:
                    return False
            else:
                if kind.preserves_nonrelations and image in rb:
                    return False
    return True


def _search_total_maps(
    A: FiniteStructure,
    B: FiniteStructure,
    kind: MorphismKind,
    candidates: Optional[list[list[int]]] = None,
    order: Optional[list[int]] = None,
) -> Iterator[dict[int, int]]:
    """Backtracking over total maps A -> B of the given kind.

    Yields maps in lexicographic order of the image tuple (f(0), ..., f(n-1))
    when ``order`` is the identity; pruning happens on partially decided
    tuples only, which is sound for every kind.
    """
    n = A.size
    order = order if order is not None else list(range(n))
    candidates = candidates if candidates is not None else [list(B.domain) for _ in range(n)]
    assigned: dict[int, int] = {}
    used: set[int] = set()

    def rec(k: int) -> Iterator[dict[int, int]]:
        if k == n:
            yield dict(assigned)
            return
        v = order[k]
        for w in candidates[v]:
            if kind.injective and w in used:
                continue
            assigned[v] = w
            if _extension_ok(A, B, assigned, v, kind):
                used.add(w)
                yield from rec(k + 1)
                used.discard(w)
            del assigned[v]

    yield from rec(0)


def enumerate_morphisms(
    A: FiniteStructure,
    B: FiniteStructure,
    kind: MorphismKind,
    limit: Optional[int] = None,
) -> list[PartialMap]:
    """All total maps A -> B of the given kind, lexicographic in the image tuple."""
    if A.signature != B.signature:
        raise InputError("structures have different signatures")
    out = []
    for assigned in _search_total_maps(A, B, kind):
        out.append(PartialMap.of(assigned))
        if limit is not None and len(out) >= limit:
            break
    return out


def complement_graph(G: FiniteStructure) -> FiniteStructure:
    if not G.is_graph():
        raise InputError("complement_graph expects a graph")
    edges = [
        (u, v)
        for u in G.domain
        for v in range(u + 1, G.size)
        if not adjacent(G, u, v)
    ]
    return graph(G.size, edges)


def induced_substructure(A: FiniteStructure, S: Iterable[int]) -> FiniteStructure:
    """The structure induced on S, re-indexed to 0..|S|-1 in sorted label order.

    The original labels are recorded in ``origin`` so results can be reported
    in the labels of the ambient structure.
    """
    labels = sorted(set(S))
    if any(not 0 <= x < A.size for x in labels):
        raise InputError("S is not a subset of the domain")
    index = {x: i for i, x in enumerate(labels)}
    keep = set(labels)
    tables = {
        name: frozenset(
            tuple(index[x] for x in tup)
            for tup in A.rel(name)
            if all(x in keep for x in tup)
        )
        for name in A.signature.names
    }
    return FiniteStructure(A.signature, len(labels), tables, origin=tuple(labels))


def _refined_colours(A: FiniteStructure) -> list[int]:
    """Iterated degree-refinement colouring, an automorphism invariant."""
    colours = [0] * A.size
    while True:
        profiles = []
        for v in A.domain:
            profile = [colours[v]]
            for name, arity in A.signature.relations:
                incidences = sorted(
                    (pos, tuple(colours[x] for x in tup))
                    for tup in A.rel(name)
                    for pos in range(arity)
                    if tup[pos] == v
                )
                profile.append(tuple(incidences))
            profiles.append(tuple(profile))
        ranks = {p: i for i, p in enumerate(sorted(set(profiles)))}
        new = [ranks[p] for p in profiles]
        if new == colours:
            return colours
        colours = new


def automorphism_group(A: FiniteStructure, guard: int = DEFAULT_AUTOMORPHISM_GUARD) -> list[PartialMap]:
    """All automorphisms, via colour-refinement pruned backtracking.

    Deterministic order (lexicographic in the image tuple).  Guarded because
    the search is still worst-case exponential.
    """
    if A.size > guard:
        raise ResourceGuardError(f"structure size {A.size} exceeds automorphism guard {guard}")
    colours = _refined_colours(A)
    candidates = [
        [w for w in A.domain if colours[w] == colours[v]] for v in A.domain
    ]
    maps = _search_total_maps(A, A, MorphismKind.EMBEDDING, candidates=candidates)
    return [PartialMap.of(m) for m in maps]


def is_core(A: FiniteStructure) -> bool:
    """True iff every total homomorphism A -> A is an embedding."""
    for assigned in _search_total_maps(A, A, MorphismKind.HOMOMORPHISM):
        if not check_morphism(PartialMap.of(assigned), MorphismKind.EMBEDDING, A, A):
            return False
    return True


def find_uniform_set(G: FiniteStructure, k: int, polarity: str) -> Optional[tuple[int, ...]]:
    """Lexicographically least k-clique or k-independent set, if any."""
    if polarity not in ("clique", "independent"):
        raise InputError(f"unknown polarity {polarity!r}")
    want = polarity == "clique"
    for combo in itertools.combinations(G.domain, k):
        if all(adjacent(G, u, v) == want for u, v in itertools.combinations(combo, 2)):
            return combo
    return None


def induced_cycle_lengths(G: FiniteStructure, max_len: int) -> set[int]:
    """Lengths l, 3 <= l <= max_len, such that G has an induced l-cycle."""
    if max_len < 3:
        raise InputError("max_len must be at least 3")
    adj = [neighbours(G, v) for v in G.domain]
    found: set[int] = set()

    def extend(start: int, path: list[int], on_path: set[int]):
        last = path[-1]
        for u in sorted(adj[last]):
            if u <= start or u in on_path:
                continue
            # induced path condition: u may touch only the path's last vertex,
            # except for the closing edge back to start.
            if any(p in adj[u] for p in path[1:-1]):
                continue
            closes = len(path) >= 2 and start in adj[u]
            if closes:
                found.add(len(path) + 1)
            elif len(path) + 1 < max_len:
                path.append(u)
                on_path.add(u)
                extend(start, path, on_path)
                on_path.discard(u)
                path.pop()

    for start in G.domain:
        extend(start, [start], {start})
    return {l for l in found if l <= max_len}
