"""Amalgamation and staged-construction engines: joint embedding, mono/anti
free amalgams, back-and-forth bimorphism prefixes, and the three-phase staged
chain builder (joint embed / mono amalgamate / anti amalgamate)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Optional

from .homogeneity import DEFAULT_SEARCH_BOUND, check_cone
from .oracles import GraphOracle
from .relstruct import (
    FiniteStructure,
    InputError,
    MorphismKind,
    PartialMap,
    check_morphism,
    enumerate_morphisms,
    graph,
    graph_edges,
    induced_substructure,
    invert_partial_map,
)


@dataclass(frozen=True)
class AmalgamResult:
    C: FiniteStructure
    g1: PartialMap
    g2: PartialMap
    g1_kind: MorphismKind
    g2_kind: MorphismKind
    commutes: bool
    g1_ok: bool
    g2_ok: bool

    @property
    def certified(self) -> bool:
        return self.commutes and self.g1_ok and self.g2_ok


def joint_embed(A: FiniteStructure, B: FiniteStructure) -> tuple[FiniteStructure, PartialMap, PartialMap]:
    """Disjoint union with the two canonical embeddings."""
    if A.signature != B.signature:
        raise InputError("structures have different signatures")
    edges = [(u, v) for u, v in A.rel("E") if u < v]
    edges += [(u + A.size, v + A.size) for u, v in B.rel("E") if u < v]
    C = graph(A.size + B.size, edges)
    e1 = PartialMap.identity(A.size)
    e2 = PartialMap(tuple((v, v + A.size) for v in B.domain))
    return C, e1, e2


def _free_amalgam(
    A: FiniteStructure,
    B1: FiniteStructure,
    B2: FiniteStructure,
    to_b1: PartialMap,
    f2: PartialMap,
    g2_kind: MorphismKind,
) -> AmalgamResult:
    """Free amalgam on B1 ⊔ (B2 ∖ Af2): B1's edges, B2's edges outside the
    image of A, and a cross edge (a·to_b1, b2) exactly when af2 ~ b2 in B2."""
    a_map = to_b1.as_dict()  # A -> B1 (f1 or f1bar)
    f2_map = f2.as_dict()  # A -> B2
    if set(a_map) != set(A.domain) or set(f2_map) != set(A.domain):
        raise InputError("amalgam maps must be total on A")
    if not check_morphism(f2, MorphismKind.EMBEDDING, A, B2):
        raise InputError("f2 must be an embedding of A into B2")
    image = set(f2_map.values())
    rest = sorted(set(B2.domain) - image)
    label = {x: B1.size + t for t, x in enumerate(rest)}
    back = {v: a for a, v in f2_map.items()}
    edges = [(u, v) for u, v in B1.rel("E") if u < v]
    for u, v in B2.rel("E"):
        if u >= v:
            continue
        if u in label and v in label:
            edges.append((label[u], label[v]))
        elif u in back and v in label:
            edges.append((a_map[back[u]], label[v]))
        elif u in label and v in back:
            edges.append((a_map[back[v]], label[u]))
    C = graph(B1.size + len(rest), sorted({(min(u, v), max(u, v)) for u, v in edges}))
    g1 = PartialMap.identity(B1.size)
    g2 = PartialMap(tuple((x, a_map[back[x]] if x in back else label[x]) for x in B2.domain))
    commutes = all(g1(to_b1(a)) == g2(f2(a)) for a in A.domain)
    g1_ok = check_morphism(g1, MorphismKind.EMBEDDING, B1, C)
    g2_ok = check_morphism(g2, g2_kind, B2, C)
    return AmalgamResult(C, g1, g2, MorphismKind.EMBEDDING, g2_kind, commutes, g1_ok, g2_ok)


def mono_amalgam(
    A: FiniteStructure,
    B1: FiniteStructure,
    B2: FiniteStructure,
    f1: PartialMap,
    f2: PartialMap,
) -> AmalgamResult:
    if not check_morphism(f1, MorphismKind.MONOMORPHISM, A, B1):
        raise InputError("f1 must be a monomorphism of A into B1")
    return _free_amalgam(A, B1, B2, f1, f2, MorphismKind.MONOMORPHISM)


def anti_amalgam(
    A: FiniteStructure,
    B1: FiniteStructure,
    B2: FiniteStructure,
    f1bar: PartialMap,
    f2: PartialMap,
) -> AmalgamResult:
    if not check_morphism(f1bar, MorphismKind.ANTIMONOMORPHISM, A, B1):
        raise InputError("f1bar must be an antimonomorphism of A into B1")
    return _free_amalgam(A, B1, B2, f1bar, f2, MorphismKind.ANTIMONOMORPHISM)


# ---------------------------------------------------------------------------
# back-and-forth engines


@dataclass(frozen=True)
class BimorphismPrefix:
    """A finite prefix of a bijective homomorphism between two oracles."""

    pairs: tuple[tuple[int, int], ...]
    log: tuple[dict, ...]
    failed: Optional[str] = None
    certified: bool = False


def _induced_on(G: GraphOracle, vertices) -> tuple[FiniteStructure, dict[int, int]]:
    labels = sorted(vertices)
    index = {x: i for i, x in enumerate(labels)}
    edges = [
        (index[u], index[v]) for u, v in itertools.combinations(labels, 2) if G.adjacent(u, v)
    ]
    return graph(len(labels), edges), index


def certify_prefix(G: GraphOracle, H: GraphOracle, pairs) -> bool:
    """Forward map passes Monomorphism and its inverse Antimonomorphism on the
    induced finite substructures."""
    if not pairs:
        return True
    SG, gi = _induced_on(G, [p[0] for p in pairs])
    SH, hi = _induced_on(H, [p[1] for p in pairs])
    f = PartialMap(tuple((gi[a], hi[b]) for a, b in pairs))
    return check_morphism(f, MorphismKind.MONOMORPHISM, SG, SH) and check_morphism(
        invert_partial_map(f), MorphismKind.ANTIMONOMORPHISM, SH, SG
    )


def _run_back_and_forth(
    G: GraphOracle,
    H: GraphOracle,
    initial: tuple[tuple[int, int], ...],
    steps: int,
    bound: int,
) -> BimorphismPrefix:
    pairs = list(initial)
    log = []
    for step in range(steps):
        dom = {a for a, _ in pairs}
        img = {b for _, b in pairs}
        fmap = dict(pairs)
        if step % 2 == 0:
            # forth: least unmapped source vertex, image = cone of adjacency
            # over the images of its already-mapped neighbours
            gamma = next(x for x in itertools.count() if x not in dom)
            S = {fmap[x] for x in dom if G.adjacent(x, gamma)}
            verdict = check_cone(H, S, "adjacent", bound, avoid=img - S)
            if verdict.outcome != "witness":
                return BimorphismPrefix(
                    tuple(pairs), tuple(log), failed=f"forth step {step}: {verdict.outcome}",
                    certified=certify_prefix(G, H, pairs),
                )
            pairs.append((gamma, verdict.witness))
            log.append({"step": step, "side": "forth", "source": gamma, "target": verdict.witness})
        else:
            # back: least uncovered target vertex, preimage = a source vertex
            # non-adjacent to everything that must not map onto a neighbour
            delta = next(y for y in itertools.count() if y not in img)
            T = {x for x in dom if not H.adjacent(fmap[x], delta)}
            verdict = check_cone(G, T, "nonadjacent", bound, avoid=dom - T)
            if verdict.outcome != "witness":
                return BimorphismPrefix(
                    tuple(pairs), tuple(log), failed=f"back step {step}: {verdict.outcome}",
                    certified=certify_prefix(G, H, pairs),
                )
            pairs.append((verdict.witness, delta))
            log.append({"step": step, "side": "back", "source": verdict.witness, "target": delta})
        if not certify_prefix(G, H, pairs):
            # should be unreachable: the cone constraints imply both checks
            return BimorphismPrefix(
                tuple(pairs[:-1]), tuple(log), failed=f"certification failed at step {step}",
                certified=False,
            )
    return BimorphismPrefix(tuple(pairs), tuple(log), certified=certify_prefix(G, H, pairs))


def extend_to_bimorphism_prefix(
    G: GraphOracle,
    f: PartialMap,
    steps: int,
    bound: int = DEFAULT_SEARCH_BOUND,
) -> BimorphismPrefix:
    """Grow a finite monomorphism on G towards a bimorphism prefix by
    alternating forth (mono) and back (antimono) one-point extensions."""
    if not certify_prefix(G, G, f.pairs):
        raise InputError("initial map is not a partial monomorphism with antimono inverse")
    return _run_back_and_forth(G, G, f.pairs, steps, bound)


def back_and_forth_bimorphism(
    G: GraphOracle,
    H: GraphOracle,
    steps: int,
    bound: int = DEFAULT_SEARCH_BOUND,
) -> BimorphismPrefix:
    """Prefix of a bijective homomorphism G → H, built from the empty map."""
    return _run_back_and_forth(G, H, (), steps, bound)


# ---------------------------------------------------------------------------
# staged chain construction


def cantor_pair(r: int, j: int) -> int:
    return (r + j) * (r + j + 1) // 2 + j


def cantor_unpair(z: int) -> tuple[int, int]:
    w = 0
    while (w + 1) * (w + 2) // 2 <= z:
        w += 1
    j = z - w * (w + 1) // 2
    return (w - j, j)


def beta(m: int, i: int, j: int) -> int:
    """Bijection [m] × ℕ → [m] with beta(m, i, j) >= i, where [m] is the
    residue class of m mod 3."""
    if i % 3 != m % 3:
        raise InputError("first argument must lie in the residue class")
    return m + 3 * cantor_pair((i - m) // 3, j)


def beta_inv(m: int, k: int) -> tuple[int, int]:
    if k % 3 != m % 3 or k < m:
        raise InputError("argument must lie in the residue class at or above m")
    r, j = cantor_unpair((k - m) // 3)
    return (m + 3 * r, j)


def default_age_pairs(max_size: int = 3) -> list[tuple[FiniteStructure, FiniteStructure]]:
    """All pairs (A, B) with B a graph on 1..max_size vertices enumerated by
    size then binary edge-code, and A = B minus its last vertex."""
    pairs = []
    for size in range(1, max_size + 1):
        slots = list(itertools.combinations(range(size), 2))
        for code in range(2 ** len(slots)):
            B = graph(size, [slots[t] for t in range(len(slots)) if (code >> t) & 1])
            A = induced_substructure(B, range(size - 1)) if size > 1 else graph(0, [])
            pairs.append((A, B))
    return pairs


def _catalog(max_size: int) -> list[FiniteStructure]:
    return [B for _, B in default_age_pairs(max_size)]


def _task_at(
    pairs: list[tuple[FiniteStructure, FiniteStructure]],
    M: FiniteStructure,
    kind: MorphismKind,
    j: int,
):
    """The j-th (pair, map) task in the concatenation of per-pair map lists."""
    seen = 0
    for A, B in pairs:
        maps = enumerate_morphisms(A, M, kind, limit=j - seen + 1)
        if j - seen < len(maps):
            return (A, B, maps[j - seen])
        seen += len(maps)
    return None


@dataclass
class StageAudit:
    entries: list[dict] = field(default_factory=list)
    chain_certified: bool = True
    all_realized: bool = True


def fraisse_stages(
    seed: FiniteStructure,
    stages: int,
    max_size: int = 3,
    age_pairs: Optional[list] = None,
) -> tuple[list[FiniteStructure], StageAudit]:
    """Build the chain M_0 ⊆ M_1 ⊆ ... with the three-phase schedule:
    stage k ≡ 0 mod 3 joint-embeds the next catalog graph; k ≡ 1 performs the
    mono amalgamation indexed through beta(1, ·, ·); k ≡ 2 the anti
    amalgamation indexed through beta(2, ·, ·).  Task lists are read off the
    stage the beta-inverse points back to, so every task scheduled at stage k
    was available at some earlier stage i <= k."""
    if stages < 0:
        raise InputError("stages must be nonnegative")
    pairs = age_pairs if age_pairs is not None else default_age_pairs(max_size)
    catalog = _catalog(max_size)
    chain = [seed]
    audit = StageAudit()
    jep_count = 0
    scheduled = []  # (stage, kind, A, B, f, new_label)
    for k in range(stages):
        M = chain[-1]
        if k % 3 == 0:
            T = catalog[jep_count % len(catalog)]
            jep_count += 1
            C, _, _ = joint_embed(M, T)
            audit.entries.append({"stage": k, "step": "jep", "added": T.size})
            chain.append(C)
            continue
        m = 1 if k % 3 == 1 else 2
        kind = MorphismKind.MONOMORPHISM if m == 1 else MorphismKind.ANTIMONOMORPHISM
        i, j = beta_inv(m, k)
        source = chain[min(i, len(chain) - 1)]
        task = _task_at(pairs, source, kind, j)
        if task is None:
            audit.entries.append({"stage": k, "step": "empty-slot", "kind": kind.value})
            chain.append(M)
            continue
        A, B, f = task
        f2 = PartialMap.identity(A.size)  # A = B minus its last vertex
        if m == 1:
            result = mono_amalgam(A, M, B, f, f2)
        else:
            result = anti_amalgam(A, M, B, f, f2)
        if not result.certified:
            audit.chain_certified = False
        new_label = M.size  # the single vertex of B outside A
        scheduled.append((k, kind, A, B, f, new_label))
        audit.entries.append(
            {
                "stage": k,
                "step": "map" if m == 1 else "amap",
                "A_size": A.size,
                "B_code": graph_edges(B),
                "f": list(f.pairs),
                "new_vertex": new_label,
            }
        )
        chain.append(result.C)
    final = chain[-1]
    for a, b in zip(chain, chain[1:]):
        if induced_substructure(b, range(a.size)).tables != a.tables:
            audit.chain_certified = False
    for k, kind, A, B, f, new_label in scheduled:
        g = PartialMap(tuple(f.pairs) + ((B.size - 1, new_label),))
        realized = check_morphism(g, kind, B, final)
        if not realized:
            audit.all_realized = False
        audit.entries.append(
            {"stage": k, "step": "audit", "kind": kind.value, "realized": realized}
        )
    return chain, audit
