"""Finite transformation monoids, their forward/strong/group orbit theory,
and the canonical relational structure whose endomorphisms contain the monoid.

Maps act on the right throughout: x(st) = (xs)t.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .relstruct import (
    FiniteStructure,
    InputError,
    MorphismKind,
    PartialMap,
    ResourceGuardError,
    Signature,
    check_morphism,
    enumerate_morphisms,
)

DEFAULT_CLOSURE_CAP = 10_000


@dataclass(frozen=True)
class SelfMap:
    """A total self-map of {0..n-1}, stored as its value table."""

    table: tuple[int, ...]

    def __post_init__(self):
        n = len(self.table)
        if any(not 0 <= v < n for v in self.table):
            raise InputError(f"self-map table {self.table} has out-of-range entries")

    @staticmethod
    def identity(n: int) -> "SelfMap":
        return SelfMap(tuple(range(n)))

    @staticmethod
    def constant(n: int, v: int) -> "SelfMap":
        return SelfMap((v,) * n)

    @property
    def n(self) -> int:
        return len(self.table)

    def __call__(self, x: int) -> int:
        return self.table[x]

    def apply(self, xs: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(self.table[x] for x in xs)

    def then(self, t: "SelfMap") -> "SelfMap":
        """Right action composition: (self.then(t))(x) = t(self(x)) = x(st)."""
        return SelfMap(tuple(t.table[v] for v in self.table))

    def is_permutation(self) -> bool:
        return len(set(self.table)) == self.n

    def inverse(self) -> "SelfMap":
        if not self.is_permutation():
            raise InputError("only permutations invert")
        inv = [0] * self.n
        for x, v in enumerate(self.table):
            inv[v] = x
        return SelfMap(tuple(inv))

    def as_partial_map(self) -> PartialMap:
        return PartialMap(tuple(enumerate(self.table)))


@dataclass(frozen=True)
class TransformationMonoid:
    """A composition-closed set of self-maps with designated generators."""

    n: int
    generators: tuple[SelfMap, ...]
    elements: tuple[SelfMap, ...]
    units: tuple[SelfMap, ...]

    def __contains__(self, s: SelfMap) -> bool:
        return s in set(self.elements)

    def to_json(self) -> dict:
        return {"n": self.n, "generators": [list(g.table) for g in self.generators]}

    @staticmethod
    def from_json(data: dict) -> "TransformationMonoid":
        gens = [SelfMap(tuple(t)) for t in data["generators"]]
        for g in gens:
            if g.n != data["n"]:
                raise InputError("generator table length disagrees with n")
        return close_monoid(gens, n=data["n"])


def close_monoid(
    generators: Iterable[SelfMap],
    cap: int = DEFAULT_CLOSURE_CAP,
    n: Optional[int] = None,
) -> TransformationMonoid:
    """Breadth-first closure by word length over the generators, with identity.

    Elements are ordered by discovery (word length, ties broken by the
    lexicographic order of the value table at each level).
    """
    gens = tuple(generators)
    if n is None:
        if not gens:
            raise InputError("need generators or an explicit domain size")
        n = gens[0].n
    if any(g.n != n for g in gens):
        raise InputError("generators act on different domains")
    ident = SelfMap.identity(n)
    elements = [ident]
    seen = {ident}
    frontier = [ident]
    while frontier:
        new = set()
        for s in frontier:
            for g in gens:
                t = s.then(g)
                if t not in seen and t not in new:
                    new.add(t)
        if len(elements) + len(new) > cap:
            raise ResourceGuardError(f"monoid closure exceeds cap {cap}")
        frontier = sorted(new, key=lambda m: m.table)
        elements.extend(frontier)
        seen.update(frontier)
    monoid = TransformationMonoid(n, gens, tuple(elements), ())
    object.__setattr__(monoid, "units", tuple(units_of(monoid)))
    return monoid


def units_of(T: TransformationMonoid) -> list[SelfMap]:
    """The permutations in T whose inverse also lies in T."""
    members = set(T.elements)
    return [s for s in T.elements if s.is_permutation() and s.inverse() in members]


def orbit(T: TransformationMonoid, xs: tuple[int, ...], kind: str) -> set[tuple[int, ...]]:
    """F(x̄) forward, S(x̄) strong (mutual reachability), U(x̄) via units."""
    xs = tuple(xs)
    if any(not 0 <= x < T.n for x in xs):
        raise InputError(f"tuple {xs} outside domain")
    if kind == "forward":
        return {s.apply(xs) for s in T.elements}
    if kind == "group":
        return {u.apply(xs) for u in T.units}
    if kind == "strong":
        forward = {s.apply(xs) for s in T.elements}
        return {ys for ys in forward if xs in {t.apply(ys) for t in T.elements}}
    raise InputError(f"unknown orbit kind {kind!r}")


@dataclass(frozen=True)
class OrbitPartition:
    arity: int
    kind: str
    classes: tuple[tuple[tuple[int, ...], ...], ...]

    def class_of(self, xs: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
        for cls in self.classes:
            if tuple(xs) in cls:
                return cls
        raise InputError(f"tuple {xs} not covered")

    def to_json(self) -> dict:
        return {
            "arity": self.arity,
            "kind": self.kind,
            "classes": [sorted(map(list, cls)) for cls in self.classes],
        }


def _tuple_scc_partition(T: TransformationMonoid, arity: int) -> list[list[tuple[int, ...]]]:
    """Strongly connected components of the tuple-action digraph.

    Edges x̄ → x̄g for each generator g plus identity; reachability in this
    graph equals reachability under the whole monoid, so the components with
    mutual reachability are exactly the strong orbits.  Iterative Tarjan.
    """
    nodes = list(itertools.product(range(T.n), repeat=arity))
    index_of = {v: i for i, v in enumerate(nodes)}
    succs = [
        sorted({index_of[g.apply(v)] for g in T.generators} - {index_of[v]})
        for v in nodes
    ]
    n = len(nodes)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    counter = 0
    comps: list[list[tuple[int, ...]]] = []
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work.pop()
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            recurse = False
            for i in range(pi, len(succs[v])):
                w = succs[v][i]
                if index[w] == -1:
                    work.append((v, i + 1))
                    work.append((w, 0))
                    recurse = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(nodes[w])
                    if w == v:
                        break
                comps.append(sorted(comp))
            if work:
                low[work[-1][0]] = min(low[work[-1][0]], low[v])
    return comps


def orbit_partition(T: TransformationMonoid, arity: int, kind: str) -> OrbitPartition:
    """Partition X^arity into strong or group orbit classes."""
    if arity < 1:
        raise InputError("arity must be at least 1")
    if kind == "strong":
        classes = _tuple_scc_partition(T, arity)
    elif kind == "group":
        seen: set[tuple[int, ...]] = set()
        classes = []
        for xs in itertools.product(range(T.n), repeat=arity):
            if xs in seen:
                continue
            cls = sorted(orbit(T, xs, "group"))
            seen.update(cls)
            classes.append(cls)
    else:
        raise InputError(f"orbit kind {kind!r} does not partition")
    classes.sort(key=lambda cls: cls[0])
    return OrbitPartition(arity, kind, tuple(tuple(cls) for cls in classes))


def oligomorphy_profile(T: TransformationMonoid, max_arity: int) -> list[int]:
    """Strong-orbit class counts on X^n for n = 1..max_arity."""
    if max_arity < 1:
        raise InputError("max_arity must be at least 1")
    return [len(orbit_partition(T, n, "strong").classes) for n in range(1, max_arity + 1)]


@dataclass(frozen=True)
class CanonicalStructure:
    """The relational structure with one relation per tuple, its table the
    tuple's forward orbit, together with the hom-certificate for T."""

    structure: FiniteStructure
    relation_tuples: tuple[tuple[int, ...], ...]
    certified: bool
    failures: tuple[tuple[SelfMap, str], ...] = field(default=())


def canonical_structure(T: TransformationMonoid, max_arity: int) -> CanonicalStructure:
    """One n-ary relation R_x̄ per tuple x̄ with n ≤ max_arity; table = forward
    orbit of x̄.  Certifies that every monoid element is a homomorphism."""
    if max_arity < 1:
        raise InputError("max_arity must be at least 1")
    rel_tuples = [
        xs
        for arity in range(1, max_arity + 1)
        for xs in itertools.product(range(T.n), repeat=arity)
    ]
    names = ["R_" + "_".join(map(str, xs)) for xs in rel_tuples]
    sig = Signature(tuple((name, len(xs)) for name, xs in zip(names, rel_tuples)))
    tables = {
        name: frozenset(orbit(T, xs, "forward")) for name, xs in zip(names, rel_tuples)
    }
    M = FiniteStructure(sig, T.n, tables)
    failures = []
    for s in T.elements:
        if not check_morphism(s.as_partial_map(), MorphismKind.HOMOMORPHISM, M, M):
            failures.append((s, "not a homomorphism of the canonical structure"))
    return CanonicalStructure(M, tuple(rel_tuples), not failures, tuple(failures))


def morphism_monoid_of(A: FiniteStructure, kind: MorphismKind, cap: int = DEFAULT_CLOSURE_CAP) -> TransformationMonoid:
    """All total self-maps of A of the given kind, as a closed monoid."""
    maps = enumerate_morphisms(A, A, kind)
    elements = tuple(SelfMap(tuple(m.as_dict()[v] for v in A.domain)) for m in maps)
    if len(elements) > cap:
        raise ResourceGuardError(f"morphism monoid exceeds cap {cap}")
    monoid = TransformationMonoid(A.size, elements, elements, ())
    object.__setattr__(monoid, "units", tuple(units_of(monoid)))
    return monoid


def generator_corpus() -> list[tuple[str, int, tuple[SelfMap, ...]]]:
    """A fixed, deterministic corpus of generator sets (≤ 3 generators each)
    on domains of size 2..4, used by the orbit and canonical-structure suites."""
    corpus: list[tuple[str, int, tuple[SelfMap, ...]]] = []

    def add(name: str, n: int, *tables: tuple[int, ...]):
        corpus.append((name, n, tuple(SelfMap(t) for t in tables)))

    add("trivial-2", 2, (0, 1))
    add("const0-2", 2, (0, 0))
    add("swap-2", 2, (1, 0))
    add("full-2", 2, (1, 0), (0, 0))
    add("cycle-3", 3, (1, 2, 0))
    add("sym-3", 3, (1, 2, 0), (1, 0, 2))
    add("const-and-cycle-3", 3, (1, 2, 0), (0, 0, 0))
    add("collapse-3", 3, (0, 0, 2), (2, 1, 1))
    add("mixed-3", 3, (1, 0, 2), (0, 0, 1))
    add("cycle-4", 4, (1, 2, 3, 0))
    add("sym-4", 4, (1, 2, 3, 0), (1, 0, 2, 3))
    add("collapse-4", 4, (0, 0, 2, 3), (1, 2, 3, 0))
    add("double-collapse-4", 4, (0, 0, 1, 1), (2, 3, 2, 3))
    add("mixed-4", 4, (1, 0, 3, 2), (0, 1, 1, 0), (2, 2, 2, 2))
    add("shift-cap-4", 4, (1, 2, 3, 3), (0, 0, 0, 0))
    return corpus
