"""The Petersen graph in its Kneser labeling, with automorphisms and cycles.

Vertices are the 2-element subsets of {1..5}, stored as sorted tuples and
indexed 0..9 in lexicographic order; two vertices are adjacent iff their
subsets are disjoint.  Automorphisms are permutations of these indices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Hashable, Iterable, Mapping, Sequence

from .groups import Perm, PermutationGroup, compose, generate, identity

Label = tuple[int, int]


class NotPetersen(ValueError):
    """The supplied graph is not isomorphic to the Petersen graph."""


@dataclass(frozen=True)
class PetersenGraph:
    vertices: tuple[Label, ...]
    edges: frozenset[frozenset[int]]

    @property
    def n(self) -> int:
        return len(self.vertices)

    def index(self, label: Iterable[int]) -> int:
        return self.vertices.index(tuple(sorted(label)))

    def adjacent(self, u: int, v: int) -> bool:
        return frozenset((u, v)) in self.edges

    def neighbors(self, u: int) -> list[int]:
        return [v for v in range(self.n) if self.adjacent(u, v)]

    def adjacency(self) -> dict[int, list[int]]:
        return {u: self.neighbors(u) for u in range(self.n)}

    def label(self, v: int) -> str:
        a, b = self.vertices[v]
        return f"{{{a},{b}}}"


@lru_cache(maxsize=None)
def build_petersen() -> PetersenGraph:
    verts = tuple(itertools.combinations(range(1, 6), 2))
    edges = frozenset(
        frozenset((i, j))
        for i, j in itertools.combinations(range(len(verts)), 2)
        if not set(verts[i]) & set(verts[j])
    )
    return PetersenGraph(verts, edges)


# -- automorphisms ---------------------------------------------------------------


@dataclass(frozen=True)
class GraphAutomorphism:
    mapping: Perm
    source_perm: tuple[int, ...] | None = None

    def __call__(self, v: int) -> int:
        return self.mapping[v]


def s5_action(perm: Sequence[int] | Mapping[int, int]) -> GraphAutomorphism:
    """Automorphism induced by a permutation of {1..5}.

    ``perm`` is either a mapping ``{i: perm(i)}`` or a sequence whose
    ``k``-th entry is the image of ``k + 1``.
    """
    if isinstance(perm, Mapping):
        images = tuple(perm.get(i, i) for i in range(1, 6))
    else:
        images = tuple(perm)
    if sorted(images) != [1, 2, 3, 4, 5]:
        raise ValueError(f"{perm!r} is not a permutation of 1..5")
    g = build_petersen()
    mapping = tuple(g.index((images[a - 1], images[b - 1])) for a, b in g.vertices)
    return GraphAutomorphism(mapping, images)


def parse_s5(cycles: str) -> tuple[int, ...]:
    """Images of 1..5 from cycle notation such as ``"(12345)"`` or ``"(1 2)(3 4)"``."""
    img = {i: i for i in range(1, 6)}
    for chunk in cycles.replace(")", "(").split("("):
        chunk = chunk.strip()
        if not chunk:
            continue
        tokens = chunk.replace(",", " ").split() if (" " in chunk or "," in chunk) else list(chunk)
        pts = [int(x) for x in tokens]
        for a, b in zip(pts, pts[1:] + pts[:1]):
            img[a] = b
    return tuple(img[i] for i in range(1, 6))


def is_automorphism(mapping: Perm, graph: PetersenGraph | None = None) -> bool:
    graph = graph or build_petersen()
    return all(frozenset(mapping[v] for v in e) in graph.edges for e in graph.edges)


@lru_cache(maxsize=None)
def automorphism_group() -> PermutationGroup:
    """Aut(P) as a permutation group on the ten vertex indices."""
    gens = [s5_action((2, 3, 4, 5, 1)).mapping, s5_action((2, 1, 3, 4, 5)).mapping]
    return generate(gens, 10)


@lru_cache(maxsize=None)
def s5_correspondence() -> dict[Perm, tuple[int, ...]]:
    """Vertex permutation -> permutation of {1..5} inducing it."""
    out = {}
    for images in itertools.permutations(range(1, 6)):
        out[s5_action(images).mapping] = images
    return out


def brute_force_automorphisms(adj: Mapping[Hashable, Iterable[Hashable]]) -> list[dict]:
    """All adjacency-preserving bijections of a small graph, by pruned backtracking."""
    adj = {u: set(vs) for u, vs in adj.items()}
    order = sorted(adj, key=repr)
    results = []

    def extend(mapping: dict, used: set):
        if len(mapping) == len(order):
            results.append(dict(mapping))
            return
        u = order[len(mapping)]
        for w in order:
            if w in used or len(adj[w]) != len(adj[u]):
                continue
            if all((mapping[x] in adj[w]) == (x in adj[u]) for x in mapping):
                mapping[u] = w
                used.add(w)
                extend(mapping, used)
                del mapping[u]
                used.discard(w)

    extend({}, set())
    return results


# -- isomorphism onto the Kneser model --------------------------------------------


def _candidates(u: Hashable, p: PetersenGraph) -> list[int]:
    """Kneser indices to try for ``u``; a vertex already named like a Kneser vertex goes first."""
    natural = None
    if isinstance(u, int) and 0 <= u < 10:
        natural = u
    elif isinstance(u, tuple) and tuple(sorted(u)) in p.vertices:
        natural = p.index(u)
    rest = [w for w in range(10) if w != natural]
    return rest if natural is None else [natural] + rest


def verify_petersen_isomorphic(
    vertices: Sequence[Hashable], edges: Iterable[tuple[Hashable, Hashable]]
) -> dict[Hashable, int]:
    """Isomorphism ``vertex -> Kneser index`` from an arbitrary labeled graph.

    The search tries candidate images in index order, so the answer is
    deterministic.  Raises :class:`NotPetersen` if no isomorphism exists.
    """
    vertices = list(vertices)
    adj: dict[Hashable, set] = {v: set() for v in vertices}
    n_edges = 0
    for u, v in edges:
        if u == v or u not in adj or v not in adj:
            raise NotPetersen(f"edge ({u}, {v}) is a loop or uses an unknown vertex")
        if v in adj[u]:
            raise NotPetersen(f"parallel edges between {u} and {v}")
        adj[u].add(v)
        adj[v].add(u)
        n_edges += 1
    if len(vertices) != 10 or n_edges != 15:
        raise NotPetersen(f"graph has {len(vertices)} vertices and {n_edges} edges, expected 10 and 15")
    if any(len(ns) != 3 for ns in adj.values()):
        raise NotPetersen("graph is not 3-regular")

    p = build_petersen()
    target = p.adjacency()
    # BFS order keeps every new vertex adjacent to an already-mapped one
    start = vertices[0]
    order = [start]
    for v in order:
        for w in sorted(adj[v], key=vertices.index):
            if w not in order:
                order.append(w)
    if len(order) != 10:
        raise NotPetersen("graph is disconnected")

    mapping: dict[Hashable, int] = {}
    used: set[int] = set()

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        u = order[k]
        for w in _candidates(u, p):
            if w in used:
                continue
            if all((mapping[x] in target[w]) == (x in adj[u]) for x in mapping):
                mapping[u] = w
                used.add(w)
                if extend(k + 1):
                    return True
                del mapping[u]
                used.discard(w)
        return False

    if not extend(0):
        raise NotPetersen("no adjacency-preserving bijection onto the Petersen graph")
    return mapping


# -- cycles ----------------------------------------------------------------------------


def canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically least rotation/reflection of a cyclic vertex sequence."""
    n = len(seq)
    seq = tuple(seq)
    best = None
    for s in (seq, seq[::-1]):
        for k in range(n):
            cand = s[k:] + s[:k]
            if best is None or cand < best:
                best = cand
    return best


@dataclass(frozen=True, order=True)
class Cycle:
    """A simple cycle stored in canonical form (vertex indices)."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        if len(self.vertices) < 3 or len(set(self.vertices)) != len(self.vertices):
            raise ValueError(f"invalid cycle {self.vertices!r}")
        object.__setattr__(self, "vertices", canonical_cycle(self.vertices))

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def edges(self) -> list[frozenset[int]]:
        vs = self.vertices
        return [frozenset((vs[i], vs[(i + 1) % len(vs)])) for i in range(len(vs))]

    def image(self, mapping: Sequence[int]) -> Cycle:
        return Cycle(tuple(mapping[v] for v in self.vertices))

    def is_cycle_of(self, graph: PetersenGraph) -> bool:
        return all(e in graph.edges for e in self.edges())


@dataclass(frozen=True, order=True)
class CyclePair:
    """Two vertex-disjoint 5-cycles, stored in sorted order."""

    first: Cycle
    second: Cycle

    def __post_init__(self):
        if self.first.vertex_set & self.second.vertex_set:
            raise ValueError("cycles of a pair must be vertex-disjoint")
        if self.second < self.first:
            a, b = self.second, self.first
            object.__setattr__(self, "first", a)
            object.__setattr__(self, "second", b)

    @property
    def cycles(self) -> tuple[Cycle, Cycle]:
        return (self.first, self.second)

    def image(self, mapping: Sequence[int]) -> CyclePair:
        return CyclePair(self.first.image(mapping), self.second.image(mapping))


def enumerate_cycles(graph: PetersenGraph | None = None) -> dict[int, list[Cycle]]:
    """Every simple cycle exactly once, grouped by length and sorted.

    Depth-first search from each vertex ``s`` through vertices larger than
    ``s``; a closed path is kept only in the direction whose second vertex is
    smaller than its last, so each cycle is produced once.
    """
    graph = graph or build_petersen()
    adj = graph.adjacency()
    found: dict[int, list[Cycle]] = {}

    def dfs(path: list[int], on_path: set[int]):
        s, last = path[0], path[-1]
        for w in adj[last]:
            if w == s and len(path) >= 3 and path[1] < path[-1]:
                cyc = Cycle(tuple(path))
                found.setdefault(cyc.length, []).append(cyc)
            elif w > s and w not in on_path:
                path.append(w)
                on_path.add(w)
                dfs(path, on_path)
                on_path.discard(w)
                path.pop()

    for s in range(graph.n):
        dfs([s], {s})
    return {k: sorted(v) for k, v in sorted(found.items())}


def all_cycles(graph: PetersenGraph | None = None) -> list[Cycle]:
    return [c for cycles in enumerate_cycles(graph).values() for c in cycles]


@lru_cache(maxsize=None)
def disjoint_five_cycle_pairs() -> tuple[CyclePair, ...]:
    fives = enumerate_cycles()[5]
    pairs = {
        CyclePair(a, b)
        for a, b in itertools.combinations(fives, 2)
        if not a.vertex_set & b.vertex_set
    }
    return tuple(sorted(pairs))


def stabilizer(target: Cycle | CyclePair, mode: str = "setwise") -> PermutationGroup:
    """Subgroup of Aut(P) fixing ``target`` pointwise or setwise."""
    if mode not in ("pointwise", "setwise"):
        raise ValueError("mode must be 'pointwise' or 'setwise'")
    group = automorphism_group()
    if isinstance(target, Cycle):
        points = target.vertex_set
    else:
        points = target.first.vertex_set | target.second.vertex_set
    if mode == "pointwise":
        keep = [g for g in group.elements if all(g[v] == v for v in points)]
    else:
        keep = [g for g in group.elements if target.image(g) == target]
    return PermutationGroup(10, frozenset(keep), tuple(sorted(keep)))


def pair_action(mapping: Perm) -> Perm:
    """Induced permutation of the six disjoint pairs (indices into the sorted list)."""
    pairs = disjoint_five_cycle_pairs()
    index = {p: i for i, p in enumerate(pairs)}
    return tuple(index[p.image(mapping)] for p in pairs)


def fixed_points(mapping: Perm, among: Iterable[int]) -> list[int]:
    return [v for v in among if mapping[v] == v]


def is_involution(mapping: Perm) -> bool:
    return mapping != identity(len(mapping)) and compose(mapping, mapping) == identity(len(mapping))
