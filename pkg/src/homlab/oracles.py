"""Countable graphs and digraphs presented as computable adjacency oracles,
with truncation to finite structures and structural witness rules.

Vertices are natural numbers.  An oracle is a pure adjacency predicate plus
optional structural procedures:

- ``cone(S, polarity, avoid)``: a vertex adjacent (or non-adjacent) to all of
  S, avoiding ``avoid``, or an :class:`Impossibility`, or ``None`` (no rule;
  callers fall back to bounded search).
- ``in_age(B)``: membership of a finite graph in the oracle's age, or ``None``
  when undecided.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Optional

from .relstruct import (
    FiniteStructure,
    InputError,
    ResourceGuardError,
    complement_graph,
    digraph,
    find_uniform_set,
    graph,
    graph_to_json,
)

DEFAULT_TRUNCATE_GUARD = 512


@dataclass(frozen=True)
class Impossibility:
    """A structural reason why no witness can exist, ever.

    ``rule`` identifiers in use:
      - no_independent_set_{k}: the age contains no independent k-set
      - no_clique_{k}: the age contains no complete k-set
      - no_induced_path_3: no vertex is adjacent to two non-adjacent vertices
      - no_induced_copath_3: complement form of the above
    """

    rule: str
    description: str

    def complemented(self) -> "Impossibility":
        return Impossibility(_complement_rule_id(self.rule), f"complement of: {self.description}")


def _complement_rule_id(rule: str) -> str:
    if "no_independent_set_" in rule:
        return rule.replace("no_independent_set_", "no_clique_")
    if "no_clique_" in rule:
        return rule.replace("no_clique_", "no_independent_set_")
    if rule == "no_induced_path_3":
        return "no_induced_copath_3"
    if rule == "no_induced_copath_3":
        return "no_induced_path_3"
    return rule + "_complement"


ConeRule = Callable[[frozenset, str, frozenset], "int | Impossibility | None"]
AgeRule = Callable[[FiniteStructure], Optional[bool]]


@dataclass(frozen=True)
class GraphOracle:
    name: str
    params: dict
    adjacency: Callable[[int, int], bool]
    cone: Optional[ConeRule] = None
    in_age: Optional[AgeRule] = None

    def adjacent(self, i: int, j: int) -> bool:
        if i == j:
            return False
        return self.adjacency(i, j)

    def to_json(self) -> dict:
        return {"family": self.name, **self.params}


@dataclass(frozen=True)
class DigraphOracle:
    name: str
    params: dict
    arc: Callable[[int, int], bool]

    def to_json(self) -> dict:
        return {"family": self.name, **self.params}


# ---------------------------------------------------------------------------
# binary sequences


@dataclass(frozen=True)
class IncreasingSequence:
    """A strictly increasing sequence: explicit prefix + arithmetic tail rule.

    ``rule`` is "+d": terms beyond the prefix continue with step d.
    Terms are 1-indexed via :meth:`term`.
    """

    prefix: tuple[int, ...]
    rule: str = "+1"

    def __post_init__(self):
        if not self.prefix:
            raise InputError("increasing sequence needs a nonempty prefix")
        if any(b <= a for a, b in zip(self.prefix, self.prefix[1:])):
            raise InputError("prefix is not strictly increasing")
        if not (self.rule.startswith("+") and self.rule[1:].isdigit() and int(self.rule[1:]) >= 1):
            raise InputError(f"bad continuation rule {self.rule!r}")

    @property
    def step(self) -> int:
        return int(self.rule[1:])

    def term(self, k: int) -> int:
        if k < 1:
            raise InputError("terms are 1-indexed")
        if k <= len(self.prefix):
            return self.prefix[k - 1]
        return self.prefix[-1] + self.step * (k - len(self.prefix))

    def to_json(self) -> dict:
        return {"prefix": list(self.prefix), "rule": self.rule}

    @staticmethod
    def from_json(data: dict) -> "IncreasingSequence":
        return IncreasingSequence(tuple(data["prefix"]), data.get("rule", "+1"))


@dataclass(frozen=True)
class BinarySequence:
    """An infinite 0/1 sequence in one of three finitely-presented forms.

    - kind "periodic": finite preamble then repeating period.  The convention
      p0 = p1 is enforced by normalization at construction (adjacency never
      reads p0, so this is invisible to graphs built from the sequence).
    - kind "pn": n ones, then alternating 0,1 starting with 0.
    - kind "pa": 0, then a1 ones, 0, then a2 ones, ... for an increasing A.
    """

    kind: str
    preamble: tuple[int, ...] = ()
    period: tuple[int, ...] = ()
    n: int = 0
    A: Optional[IncreasingSequence] = None

    @staticmethod
    def periodic(preamble, period) -> "BinarySequence":
        preamble = tuple(preamble)
        period = tuple(period)
        if not period:
            raise InputError("period must be nonempty")
        if any(b not in (0, 1) for b in preamble + period):
            raise InputError("sequence bits must be 0 or 1")
        # normalize p0 := p1
        combined = list(preamble) + list(period)
        p1 = combined[1] if len(combined) > 1 else combined[0]
        if preamble:
            preamble = (p1,) + preamble[1:]
        else:
            preamble = (p1,)
        return BinarySequence("periodic", preamble=preamble, period=period)

    @staticmethod
    def pn(n: int) -> "BinarySequence":
        if n < 1:
            raise InputError("P^n needs n >= 1")
        return BinarySequence("pn", n=n)

    @staticmethod
    def pa(A: IncreasingSequence) -> "BinarySequence":
        return BinarySequence("pa", A=A)

    def bit(self, i: int) -> int:
        if i < 0:
            raise InputError("bit index must be nonnegative")
        if self.kind == "periodic":
            if i < len(self.preamble):
                return self.preamble[i]
            return self.period[(i - len(self.preamble)) % len(self.period)]
        if self.kind == "pn":
            if i < self.n:
                return 1
            return (i - self.n) % 2
        if self.kind == "pa":
            # block k of 1s occupies [start_k, start_k + a_k - 1] with
            # start_k = k + sum_{t<k} a_t; everything else is 0.
            if i == 0:
                return 0
            start = 1
            k = 1
            while True:
                a_k = self.A.term(k)
                if i < start:
                    return 0
                if i < start + a_k:
                    return 1
                start = start + a_k + 1
                k += 1
        raise InputError(f"unknown sequence kind {self.kind!r}")

    def infinitely_many(self, b: int) -> bool:
        if self.kind == "periodic":
            return b in self.period
        return True  # both pn and pa tails contain infinitely many 0s and 1s

    def next_index_with_bit(self, b: int, above: int) -> Optional[int]:
        if not self.infinitely_many(b):
            # a finite supply may still have one left; scan the decidable range
            for i in range(above + 1, len(self.preamble) + len(self.period)):
                if self.bit(i) == b:
                    return i
            return None
        i = above + 1
        while self.bit(i) != b:
            i += 1
        return i

    def to_json(self) -> dict:
        if self.kind == "periodic":
            return {"kind": "periodic", "preamble": list(self.preamble), "period": list(self.period)}
        if self.kind == "pn":
            return {"kind": "pn", "n": self.n}
        return {"kind": "pa", "A": self.A.to_json()}

    @staticmethod
    def from_json(data: dict) -> "BinarySequence":
        if "n" in data and data.get("kind", "pn") == "pn":
            return BinarySequence.pn(data["n"])
        if "A" in data:
            return BinarySequence.pa(IncreasingSequence.from_json(data["A"]))
        return BinarySequence.periodic(data.get("preamble", []), data["period"])


# ---------------------------------------------------------------------------
# block decompositions


@dataclass(frozen=True)
class Block:
    kind: str  # "I" (run of 1s) or "O" (run of 0s)
    index: int  # 1-based per kind
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[Block, ...]

    def labelled(self) -> dict[str, list[int]]:
        return {f"V{b.kind}{b.index}": list(b.vertices) for b in self.blocks}


def io_blocks(P: BinarySequence, n: int) -> BlockDecomposition:
    """Maximal-run decomposition of p0..p_{n-1} with VI/VO vertex ranges."""
    if n < 1:
        raise InputError("n must be at least 1")
    bits = [P.bit(i) for i in range(n)]
    blocks = []
    counts = {"I": 0, "O": 0}
    start = 0
    for i in range(1, n + 1):
        if i == n or bits[i] != bits[start]:
            kind = "I" if bits[start] == 1 else "O"
            counts[kind] += 1
            blocks.append(Block(kind, counts[kind], tuple(range(start, i))))
            start = i
    return BlockDecomposition(tuple(blocks))


# ---------------------------------------------------------------------------
# oracle families


def sequence_graph(P: BinarySequence) -> GraphOracle:
    """v_i ~ v_j (i != j) iff the bit at max(i, j) is 0."""

    def adj(i: int, j: int) -> bool:
        return P.bit(max(i, j)) == 0

    def cone(S: frozenset, polarity: str, avoid: frozenset):
        above = max(S | avoid, default=-1)
        want = 0 if polarity == "adjacent" else 1
        return P.next_index_with_bit(want, above)

    return GraphOracle("sequence_graph", {"P": P.to_json()}, adj, cone=cone)


def cycle_overlay(A: IncreasingSequence) -> GraphOracle:
    """Γ(PA) with an a_k-cycle overlaid on each block VI_k of 1-vertices."""
    if A.term(1) < 4:
        raise InputError("cycle overlay needs a1 >= 4")
    P = BinarySequence.pa(A)

    def block_of(i: int) -> Optional[tuple[int, int]]:
        """(start, length) of the 1-block containing i, if bit(i) == 1."""
        if P.bit(i) != 1:
            return None
        start = 1
        k = 1
        while True:
            a_k = A.term(k)
            if i < start + a_k:
                return (start, a_k)
            start = start + a_k + 1
            k += 1

    def adj(i: int, j: int) -> bool:
        if P.bit(max(i, j)) == 0:
            return True
        blk = block_of(i)
        if blk is None or blk != block_of(j):
            return False
        start, length = blk
        d = abs(i - j)
        return d == 1 or d == length - 1

    def cone(S: frozenset, polarity: str, avoid: frozenset):
        above = max(S | avoid, default=-1)
        if polarity == "adjacent":
            return P.next_index_with_bit(0, above)
        # start of the next whole 1-block: its cycle neighbours all lie
        # beyond every member of S
        z = P.next_index_with_bit(0, above)
        return z + 1 if P.bit(z + 1) == 1 else P.next_index_with_bit(1, z)

    return GraphOracle("cycle_overlay", {"A": A.to_json()}, adj, cone=cone)


def frucht_overlay(delta: FiniteStructure) -> GraphOracle:
    """Γ(P^n) with the 3-regular graph Δ overlaid on VI1 = {0..n-1}."""
    if not delta.is_graph():
        raise InputError("overlay graph must be a graph")
    n = delta.size
    if n < 6:
        raise InputError("overlay graph needs at least 6 vertices")
    for v in delta.domain:
        if sum(1 for w in delta.domain if (v, w) in delta.rel("E")) != 3:
            raise InputError("overlay graph must be 3-regular")
    P = BinarySequence.pn(n)

    def adj(i: int, j: int) -> bool:
        if P.bit(max(i, j)) == 0:
            return True
        if i < n and j < n:
            return (i, j) in delta.rel("E")
        return False

    def cone(S: frozenset, polarity: str, avoid: frozenset):
        above = max(S | avoid, default=-1)
        if polarity == "adjacent":
            return P.next_index_with_bit(0, above)
        return P.next_index_with_bit(1, max(above, n - 1))

    return GraphOracle("frucht_overlay", {"delta": graph_to_json(delta)}, adj, cone=cone)


def _is_cluster_graph(B: FiniteStructure) -> Optional[int]:
    """Number of components if B is a disjoint union of cliques, else None."""
    comp = list(range(B.size))

    def find(x):
        while comp[x] != x:
            comp[x] = comp[comp[x]]
            x = comp[x]
        return x

    for u, v in B.rel("E"):
        comp[find(u)] = find(v)
    groups: dict[int, list[int]] = {}
    for v in range(B.size):
        groups.setdefault(find(v), []).append(v)
    for g in groups.values():
        for u, v in itertools.combinations(g, 2):
            if (u, v) not in B.rel("E"):
                return None
    return len(groups)


def _bit_random_graph() -> GraphOracle:
    def adj(i: int, j: int) -> bool:
        i, j = min(i, j), max(i, j)
        return (j >> i) & 1 == 1

    def pattern_witness(U: frozenset, V: frozenset, avoid: frozenset):
        """Constructive x adjacent to all of U, non-adjacent to all of V."""

        def ok(x: int) -> bool:
            return (
                x not in U
                and x not in V
                and x not in avoid
                and all(adj(x, u) for u in U)
                and not any(adj(x, v) for v in V)
            )

        if U and max(U) > 60:
            # an assembled witness would need bit max(U) set and be
            # astronomically large; the set-bit positions of the large
            # members usually give a small witness instead
            for x in range(1 << 16):
                if ok(x):
                    return x
            return None
        x0 = sum(1 << u for u in U)
        m = max(U, default=-1)
        # bits above m keep the U-pattern intact; extra candidates dodge the
        # avoid set and the set-bit positions of large members of V
        tries = 3 + len(U) + len(V) + len(avoid) + sum(v.bit_length() for v in V)
        candidates = [x0] + [x0 + (1 << k) for k in range(m + 1, m + 1 + tries)]
        for x in candidates:
            if ok(x):
                return x
        return None  # unreachable for valid inputs; search fallback stays sound

    def cone(S: frozenset, polarity: str, avoid: frozenset):
        if polarity == "adjacent":
            return pattern_witness(S, frozenset(), avoid | S)
        return pattern_witness(frozenset(), S, avoid | S)

    oracle = GraphOracle("bit_random_graph", {}, adj, cone=cone, in_age=lambda B: True)
    object.__setattr__(oracle, "pattern_witness", pattern_witness)
    return oracle


def _complete() -> GraphOracle:
    def cone(S: frozenset, polarity: str, avoid: frozenset):
        if polarity == "nonadjacent" and S:
            return Impossibility("no_independent_set_2", "a complete graph has no non-adjacent pair")
        return max(S | avoid, default=-1) + 1

    return GraphOracle(
        "complete",
        {},
        lambda i, j: True,
        cone=cone,
        in_age=lambda B: len(B.rel("E")) == B.size * (B.size - 1),
    )


def _null() -> GraphOracle:
    def cone(S: frozenset, polarity: str, avoid: frozenset):
        if polarity == "adjacent" and S:
            return Impossibility("no_clique_2", "a null graph has no adjacent pair")
        return max(S | avoid, default=-1) + 1

    return GraphOracle("null", {}, lambda i, j: False, cone=cone, in_age=lambda B: not B.rel("E"))


def _clique_union_finite(m: int) -> GraphOracle:
    def adj(i: int, j: int) -> bool:
        return i % m == j % m

    def cone(S: frozenset, polarity: str, avoid: frozenset):
        if polarity == "adjacent":
            residues = {v % m for v in S}
            if len(residues) > 1:
                return Impossibility(
                    "no_induced_path_3", "no vertex is adjacent to two vertices of distinct cliques"
                )
            r = residues.pop() if residues else 0
            x = r
            while x in S or x in avoid:
                x += m
            return x
        covered = {v % m for v in S}
        if len(covered) == m:
            return Impossibility(
                f"no_independent_set_{m + 1}",
                f"a union of {m} cliques has no independent {m + 1}-set",
            )
        r = min(set(range(m)) - covered)
        x = r
        while x in avoid:
            x += m
        return x

    def in_age(B: FiniteStructure) -> bool:
        k = _is_cluster_graph(B)
        return k is not None and k <= m

    return GraphOracle("clique_union", {"m": m}, adj, cone=cone, in_age=in_age)


def _cantor_unpair(z: int) -> tuple[int, int]:
    w = 0
    while (w + 1) * (w + 2) // 2 <= z:
        w += 1
    b = z - w * (w + 1) // 2
    return (w - b, b)


def _cantor_pair(a: int, b: int) -> int:
    return (a + b) * (a + b + 1) // 2 + b


def _clique_union_omega() -> GraphOracle:
    def clique_of(i: int) -> int:
        return _cantor_unpair(i)[0]

    def adj(i: int, j: int) -> bool:
        return clique_of(i) == clique_of(j)

    def cone(S: frozenset, polarity: str, avoid: frozenset):
        if polarity == "adjacent":
            cliques = {clique_of(v) for v in S}
            if len(cliques) > 1:
                return Impossibility(
                    "no_induced_path_3", "no vertex is adjacent to two vertices of distinct cliques"
                )
            c = cliques.pop() if cliques else 0
            b = 0
            while _cantor_pair(c, b) in S or _cantor_pair(c, b) in avoid:
                b += 1
            return _cantor_pair(c, b)
        fresh = max((clique_of(v) for v in S | avoid), default=-1) + 1
        return _cantor_pair(fresh, 0)

    def in_age(B: FiniteStructure) -> bool:
        return _is_cluster_graph(B) is not None

    return GraphOracle("clique_union", {"m": "omega"}, adj, cone=cone, in_age=in_age)


def _henson(n: int) -> GraphOracle:
    """Greedy K_n-free construction: vertex v is joined to the finite set coded
    by the first coordinate of its Cantor unpairing, provided that set fits
    below v and spans no K_{n-1}; otherwise v is isolated from below."""

    cones: dict[int, frozenset[int]] = {}

    def cone_of(v: int) -> frozenset[int]:
        if v not in cones:
            a, _ = _cantor_unpair(v)
            S = frozenset(i for i in range(a.bit_length()) if (a >> i) & 1)
            ok = all(x < v for x in S)
            if ok:
                # reject cones spanning a K_{n-1}; adjacency below v is final
                for combo in itertools.combinations(sorted(S), n - 1):
                    if all(adj(x, y) for x, y in itertools.combinations(combo, 2)):
                        ok = False
                        break
            cones[v] = S if ok else frozenset()
        return cones[v]

    def adj(i: int, j: int) -> bool:
        i, j = min(i, j), max(i, j)
        return i in cone_of(j)

    def cone(S: frozenset, polarity: str, avoid: frozenset):
        if polarity == "adjacent":
            for combo in itertools.combinations(sorted(S), n - 1):
                if all(adj(x, y) for x, y in itertools.combinations(combo, 2)):
                    return Impossibility(
                        f"no_clique_{n}",
                        f"a cone over a complete {n - 1}-set would create a K_{n}",
                    )
            return None  # fall back to bounded search
        z = max(S | avoid, default=-1) + 1
        while cone_of(z) & S or z in S:
            z += 1
        return z

    def in_age(B: FiniteStructure) -> bool:
        return find_uniform_set(B, n, "clique") is None

    return GraphOracle("henson", {"n": n}, adj, cone=cone, in_age=in_age)


def _generic_digraph() -> DigraphOracle:
    """Base-3 coding: digit i of j (for i < j) is 0 (no arc), 1 (arc j→i),
    or 2 (arc i→j)."""

    def digit(i: int, j: int) -> int:
        return (j // 3**i) % 3

    def arc(i: int, j: int) -> bool:
        if i == j:
            return False
        if i < j:
            return digit(i, j) == 2
        return digit(j, i) == 1

    oracle = DigraphOracle("generic_digraph", {}, arc)

    def dep_witness(U: frozenset, V: frozenset, W: frozenset, avoid: frozenset):
        """x with arcs x→u (u∈U), v→x (v∈V), no arcs to/from W."""
        x0 = sum(3**u for u in U) + 2 * sum(3**v for v in V)
        m = max(U | V | W, default=-1)
        for k in range(0, 4 + len(avoid)):
            x = x0 if k == 0 else x0 + 3 ** (m + k)
            if x in U | V | W | avoid:
                continue
            if (
                all(arc(x, u) for u in U)
                and all(arc(v, x) for v in V)
                and not any(arc(x, w) or arc(w, x) for w in W)
            ):
                return x
        return None

    object.__setattr__(oracle, "dep_witness", dep_witness)
    return oracle


def catalog_oracle(family: str, **params):
    """Families: bit_random_graph, clique_union(m or "omega"), complete, null,
    henson(n >= 3), generic_digraph."""
    if family == "bit_random_graph":
        return _bit_random_graph()
    if family == "complete":
        return _complete()
    if family == "null":
        return _null()
    if family == "clique_union":
        m = params.get("m")
        if m == "omega":
            return _clique_union_omega()
        if isinstance(m, int) and m >= 1:
            return _clique_union_finite(m)
        raise InputError("clique_union needs m >= 1 or m='omega'")
    if family == "henson":
        n = params.get("n")
        if not isinstance(n, int) or n < 3:
            raise InputError("henson needs n >= 3")
        return _henson(n)
    if family == "generic_digraph":
        return _generic_digraph()
    raise InputError(f"unknown oracle family {family!r}")


def complement_oracle(G: GraphOracle) -> GraphOracle:
    """Adjacency negated off-diagonal; cone polarities and rules swapped."""
    if isinstance(G, DigraphOracle):
        raise InputError("complement is defined for graph oracles")

    def adj(i: int, j: int) -> bool:
        return not G.adjacent(i, j)

    cone = None
    if G.cone is not None:

        def cone(S: frozenset, polarity: str, avoid: frozenset):
            flipped = "nonadjacent" if polarity == "adjacent" else "adjacent"
            result = G.cone(S, flipped, avoid)
            if isinstance(result, Impossibility):
                return result.complemented()
            return result

    in_age = None
    if G.in_age is not None:

        def in_age(B: FiniteStructure):
            return G.in_age(complement_graph(B))

    return GraphOracle("complement", {"of": G.to_json()}, adj, cone=cone, in_age=in_age)


def oracle_from_json(data: dict):
    family = data["family"]
    if family == "sequence_graph":
        return sequence_graph(BinarySequence.from_json(data["P"]))
    if family == "cycle_overlay":
        return cycle_overlay(IncreasingSequence.from_json(data["A"]))
    if family == "frucht_overlay":
        return frucht_overlay(FiniteStructure.from_json(data["delta"]))
    if family == "complement":
        return complement_oracle(oracle_from_json(data["of"]))
    params = {k: v for k, v in data.items() if k != "family"}
    return catalog_oracle(family, **params)


def truncate(G, n: int, guard: int = DEFAULT_TRUNCATE_GUARD) -> FiniteStructure:
    """Induced finite structure on vertices {0..n-1}."""
    if n < 1:
        raise InputError("truncation size must be at least 1")
    if n > guard:
        raise ResourceGuardError(f"truncation size {n} exceeds guard {guard}")
    if isinstance(G, DigraphOracle):
        return digraph(
            n,
            [(i, j) for i in range(n) for j in range(n) if i != j and G.arc(i, j)],
            forbid_2cycles=False,
        )
    return graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if G.adjacent(i, j)])


def phi_definable_set(P: BinarySequence, n: int) -> set[int]:
    """Vertices x of the n-truncation of Γ(P) satisfying
    φ(x) = ∃y (y ≠ x ∧ ∀z (x~z ⟺ y~z)), evaluated over the truncation.

    Only stable for windows ending immediately after a 0-bit (a trailing
    1-vertex would be a spurious twin candidate)."""
    if P.kind != "pn":
        raise InputError("phi_definable_set expects a P^n family sequence")
    if n < 3 or P.bit(n - 2) != 0:
        raise InputError("truncation window must end immediately after a 0-bit")
    G = truncate(sequence_graph(P), n)
    nbrs = [
        frozenset(w for w in range(n) if w != v and (v, w) in G.rel("E")) for v in range(n)
    ]
    out = set()
    for x in range(n):
        for y in range(n):
            if y != x and nbrs[x] == nbrs[y]:
                out.add(x)
                break
    return out
