"""Planar diagram codes for spatial graphs.

A diagram is a 4-valent/flat-vertex map on the sphere.  Each edge of the
abstract graph is cut into *darts* ``<edge-id>.<k>``: ``k = 0`` sits at the
edge's first stored endpoint, then two darts per crossing passed, and the last
dart sits at the second endpoint.  ``arc`` records join consecutive darts of an
edge.  A crossing lists its four darts counterclockwise, starting with the
dart where the under-strand comes in (direction of travel = from the edge's
first endpoint to its second).

Text format, one record per line, ``#`` starts a comment::

    graph    v <name> ...
    graph    e <edge-id> <u> <v>
    vertex   <name> : <dart> <dart> <dart>
    crossing <id> : <dart> <dart> <dart> <dart>
    arc      <dart> -- <dart> on <edge-id>
    decorate <edge-id> knot <name> dir <fwd|bwd> sign <+|->
"""

from __future__ import annotations

import re
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .groups import Perm


class DiagramSyntaxError(ValueError):
    """Malformed embedding text; carries 1-based ``line`` and ``column``."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class DiagramValidationError(ValueError):
    """Structurally invalid diagram; ``violations`` lists every broken invariant."""

    def __init__(self, violations: Sequence[str]):
        super().__init__("; ".join(violations))
        self.violations = list(violations)


class NotACycle(ValueError):
    pass


class NotDisjoint(ValueError):
    pass


_DART_RE = re.compile(r"^(?P<edge>[^\s.]+)\.(?P<k>\d+)$")
_NAME_RE = re.compile(r"^[^\s:#]+$")


def natural_key(s: str):
    return [(0, int(tok), "") if tok.isdigit() else (1, 0, tok) for tok in re.findall(r"\d+|\D+", s)]


def dart_edge(dart: str) -> str:
    return dart.rsplit(".", 1)[0]


def dart_index(dart: str) -> int:
    return int(dart.rsplit(".", 1)[1])


def crossing_sign(under_in: int, over_in: int) -> int:
    """Sign of a crossing from the positions (0..3, counterclockwise) where the
    under- and over-strands enter.  Right-handed crossings are +1."""
    return 1 if over_in == (under_in + 3) % 4 else -1


# -- domain types -------------------------------------------------------------------


@dataclass(frozen=True)
class Decoration:
    """A table knot tied into an edge; ``direction`` is relative to the edge's stored order."""

    knot: str
    direction: str = "fwd"
    sign: int = 1

    def __post_init__(self):
        if self.direction not in ("fwd", "bwd"):
            raise ValueError(f"direction must be fwd or bwd, not {self.direction!r}")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    def line(self, edge: str) -> str:
        return f"decorate {edge} knot {self.knot} dir {self.direction} sign {'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class Pass:
    """One passage of a strand through a crossing: entry and exit positions."""

    crossing: str
    entry: int
    exit: int

    @property
    def under(self) -> bool:
        return self.entry % 2 == 0

    def reversed(self) -> Pass:
        return Pass(self.crossing, self.exit, self.entry)


@dataclass(frozen=True, eq=False)
class KnotDiagram:
    """Single-component planar diagram code.

    ``pd`` holds one 4-tuple of segment labels per crossing, counterclockwise
    from the incoming under-strand.  The empty code is the round unknot.
    """

    pd: tuple[tuple[int, int, int, int], ...] = ()

    def __post_init__(self):
        pd = tuple(tuple(int(x) for x in X) for X in self.pd)
        object.__setattr__(self, "pd", pd)
        counts = Counter(lab for X in pd for lab in X)
        if any(len(X) != 4 for X in pd):
            raise ValueError("every crossing needs four labels")
        bad = [lab for lab, c in counts.items() if c != 2]
        if bad:
            raise ValueError(f"labels {sorted(bad)} do not occur exactly twice")
        if pd and len(self.passes) != 2 * len(pd):
            raise ValueError("diagram has more than one component")

    def __eq__(self, other):
        return isinstance(other, KnotDiagram) and self.pd == other.pd

    def __hash__(self):
        return hash(self.pd)

    @property
    def n_crossings(self) -> int:
        return len(self.pd)

    @cached_property
    def passes(self) -> tuple[tuple[int, int, int], ...]:
        """Traversal as ``(crossing index, entry position, exit position)``.

        Starts entering crossing 0 at position 0; raises if the code places an
        outgoing under-strand at position 0 anywhere.
        """
        if not self.pd:
            return ()
        where = defaultdict(list)
        for ci, X in enumerate(self.pd):
            for pos, lab in enumerate(X):
                where[lab].append((ci, pos))
        out = []
        ci, pos = 0, 0
        for _ in range(2 * len(self.pd)):
            ex = (pos + 2) % 4
            out.append((ci, pos, ex))
            lab = self.pd[ci][ex]
            a, b = where[lab]
            nxt = b if a == (ci, ex) else a
            ci, pos = nxt
            if (ci, pos) == (0, 0):
                break
        for c, entry, _ in out:
            if entry == 2:
                raise ValueError(f"crossing {c} does not start at the incoming under-strand")
        return tuple(out)

    @cached_property
    def signs(self) -> tuple[int, ...]:
        under_in = {}
        over_in = {}
        for ci, entry, _ in self.passes:
            (under_in if entry % 2 == 0 else over_in)[ci] = entry
        return tuple(crossing_sign(under_in[i], over_in[i]) for i in range(len(self.pd)))

    @property
    def writhe(self) -> int:
        return sum(self.signs)

    def mirror(self) -> KnotDiagram:
        """Same projection with every crossing switched."""
        out = []
        for X, s in zip(self.pd, self.signs):
            a, b, c, d = X
            out.append((d, a, b, c) if s > 0 else (b, c, d, a))
        return KnotDiagram(tuple(out))

    def relabeled(self) -> KnotDiagram:
        """Labels renumbered 1..2n along the traversal."""
        if not self.pd:
            return self
        new = {}
        for k, (ci, entry, ex) in enumerate(self.passes):
            new[self.pd[ci][ex]] = k + 1
        return KnotDiagram(tuple(tuple(new[x] for x in X) for X in self.pd))


@dataclass(frozen=True, eq=False)
class SpatialDiagram:
    vertices: tuple[str, ...]
    edges: dict[str, tuple[str, str]]
    flat_vertices: dict[str, tuple[str, ...]]
    crossings: dict[str, tuple[str, str, str, str]]
    arcs: tuple[tuple[str, str, str], ...]
    decorations: dict[str, tuple[Decoration, ...]] = field(default_factory=dict)

    def __eq__(self, other):
        if not isinstance(other, SpatialDiagram):
            return NotImplemented
        return serialize(self) == serialize(other)

    def __hash__(self):
        return hash(serialize(self))

    # -- derived structure -------------------------------------------------------
    @cached_property
    def location(self) -> dict[str, tuple[str, str, int]]:
        """dart -> (``"v"`` or ``"x"``, node name, position)."""
        loc = {}
        for name, darts in self.flat_vertices.items():
            for i, d in enumerate(darts):
                loc.setdefault(d, ("v", name, i))
        for cid, darts in self.crossings.items():
            for i, d in enumerate(darts):
                loc.setdefault(d, ("x", cid, i))
        return loc

    @cached_property
    def partner(self) -> dict[str, str]:
        out = {}
        for a, b, _ in self.arcs:
            out.setdefault(a, b)
            out.setdefault(b, a)
        return out

    @cached_property
    def chains(self) -> dict[str, tuple[Pass, ...]]:
        """Crossing passes of each edge in the direction of its stored endpoint order."""
        out = {}
        for eid, (u, v) in self.edges.items():
            out[eid] = tuple(self._walk_edge(eid, u, v))
        return out

    def _start_dart(self, eid: str, u: str) -> str:
        darts = [d for d in self.flat_vertices.get(u, ()) if dart_edge(d) == eid]
        if len(darts) != 1:
            raise DiagramValidationError([f"edge chain: edge {eid} has {len(darts)} darts at vertex {u}"])
        return darts[0]

    def _walk_edge(self, eid: str, u: str, v: str) -> list[Pass]:
        d = self._start_dart(eid, u)
        passes = []
        seen = {d}
        while True:
            nxt = self.partner.get(d)
            if nxt is None:
                raise DiagramValidationError([f"dangling dart {d}"])
            kind, node, pos = self.location[nxt]
            if kind == "v":
                if node != v:
                    raise DiagramValidationError([f"edge chain: edge {eid} ends at {node}, expected {v}"])
                return passes
            ex = (pos + 2) % 4
            passes.append(Pass(node, pos, ex))
            d = self.crossings[node][ex]
            if d in seen or nxt in seen:
                raise DiagramValidationError([f"edge chain: edge {eid} loops"])
            seen.update((d, nxt))

    def edge_between(self, x: str, y: str) -> tuple[str, bool]:
        """Edge joining ``x`` and ``y`` and whether ``x -> y`` is its stored direction."""
        for eid, (u, v) in self.edges.items():
            if (u, v) == (x, y):
                return eid, True
            if (u, v) == (y, x):
                return eid, False
        raise NotACycle(f"{x} and {y} are not adjacent")

    def traverse(self, vertices: Sequence[str]) -> list[tuple[str, Pass]]:
        """Crossing passes met while walking the closed vertex sequence."""
        out = []
        n = len(vertices)
        for i in range(n):
            eid, forward = self.edge_between(vertices[i], vertices[(i + 1) % n])
            chain = self.chains[eid]
            seq = chain if forward else [p.reversed() for p in reversed(chain)]
            out.extend((eid, p) for p in seq)
        return out

    def strand_edges(self, cid: str) -> tuple[str, str]:
        """(under edge, over edge) of a crossing."""
        darts = self.crossings[cid]
        return dart_edge(darts[0]), dart_edge(darts[1])

    def with_decorations(self, extra: dict[str, Iterable[Decoration]], replace: bool = False) -> SpatialDiagram:
        decos = {} if replace else {k: tuple(v) for k, v in self.decorations.items()}
        for eid, ds in extra.items():
            decos[eid] = decos.get(eid, ()) + tuple(ds)
        decos = {k: v for k, v in decos.items() if v}
        return SpatialDiagram(self.vertices, dict(self.edges), dict(self.flat_vertices),
                              dict(self.crossings), tuple(self.arcs), decos)

    def graph_edges(self) -> list[tuple[str, str]]:
        return [self.edges[e] for e in sorted(self.edges, key=natural_key)]


# -- parsing and serialization ----------------------------------------------------------


def _check_name(tok: str, lineno: int, col: int, what: str):
    if not _NAME_RE.match(tok):
        raise DiagramSyntaxError(f"invalid {what} {tok!r}", lineno, col)


def _check_dart(tok: str, lineno: int, col: int):
    if not _DART_RE.match(tok):
        raise DiagramSyntaxError(f"malformed dart {tok!r}, expected <edge-id>.<integer>", lineno, col)


def parse_records(text: str) -> SpatialDiagram:
    """Tokenize and assemble records without structural validation."""
    vertices: list[str] = []
    edges: dict[str, tuple[str, str]] = {}
    flat: dict[str, tuple[str, ...]] = {}
    crossings: dict[str, tuple[str, ...]] = {}
    arcs: list[tuple[str, str, str]] = []
    decorations: dict[str, list[Decoration]] = defaultdict(list)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        toks = []
        for m in re.finditer(r"\S+", line):
            toks.append((m.group(), m.start() + 1))
        kw, kcol = toks[0]
        words = [t for t, _ in toks]
        cols = [c for _, c in toks]

        def need(n, shape):
            if len(words) != n:
                raise DiagramSyntaxError(f"expected `{shape}`", lineno, kcol)

        if kw == "graph":
            if len(words) < 2 or words[1] not in ("v", "e"):
                raise DiagramSyntaxError("expected `graph v ...` or `graph e ...`", lineno, cols[1] if len(cols) > 1 else kcol)
            if words[1] == "v":
                if len(words) < 3:
                    raise DiagramSyntaxError("expected at least one vertex name", lineno, kcol)
                for w, c in zip(words[2:], cols[2:]):
                    _check_name(w, lineno, c, "vertex name")
                    if w in vertices:
                        raise DiagramSyntaxError(f"vertex {w} declared twice", lineno, c)
                    vertices.append(w)
            else:
                need(5, "graph e <edge-id> <u> <v>")
                eid, u, v = words[2:]
                _check_name(eid, lineno, cols[2], "edge id")
                if "." in eid:
                    raise DiagramSyntaxError("edge ids may not contain '.'", lineno, cols[2])
                if eid in edges:
                    raise DiagramSyntaxError(f"edge {eid} declared twice", lineno, cols[2])
                edges[eid] = (u, v)
        elif kw in ("vertex", "crossing"):
            if len(words) < 3 or words[2] != ":":
                raise DiagramSyntaxError(f"expected `{kw} <name> : <dart> ...`", lineno, kcol)
            name = words[1]
            _check_name(name, lineno, cols[1], f"{kw} name")
            darts = words[3:]
            for d, c in zip(darts, cols[3:]):
                _check_dart(d, lineno, c)
            if kw == "vertex":
                if not darts:
                    raise DiagramSyntaxError("vertex record needs darts", lineno, kcol)
                if name in flat:
                    raise DiagramSyntaxError(f"vertex {name} has two records", lineno, cols[1])
                flat[name] = tuple(darts)
            else:
                if len(darts) != 4:
                    raise DiagramSyntaxError("crossing record needs exactly four darts", lineno, kcol)
                if name in crossings:
                    raise DiagramSyntaxError(f"crossing {name} declared twice", lineno, cols[1])
                crossings[name] = tuple(darts)
        elif kw == "arc":
            need(6, "arc <dart> -- <dart> on <edge-id>")
            if words[2] != "--" or words[4] != "on":
                raise DiagramSyntaxError("expected `arc <dart> -- <dart> on <edge-id>`", lineno, kcol)
            _check_dart(words[1], lineno, cols[1])
            _check_dart(words[3], lineno, cols[3])
            arcs.append((words[1], words[3], words[5]))
        elif kw == "decorate":
            need(8, "decorate <edge-id> knot <name> dir <fwd|bwd> sign <+|->")
            if words[2] != "knot" or words[4] != "dir" or words[6] != "sign":
                raise DiagramSyntaxError("expected `decorate <edge-id> knot <name> dir <fwd|bwd> sign <+|->`", lineno, kcol)
            if words[5] not in ("fwd", "bwd"):
                raise DiagramSyntaxError("direction must be fwd or bwd", lineno, cols[5])
            if words[7] not in ("+", "-"):
                raise DiagramSyntaxError("sign must be + or -", lineno, cols[7])
            decorations[words[1]].append(Decoration(words[3], words[5], 1 if words[7] == "+" else -1))
        else:
            raise DiagramSyntaxError(f"unknown record type {kw!r}", lineno, kcol)

    return SpatialDiagram(
        tuple(vertices), edges, flat, crossings, tuple(arcs),
        {k: tuple(v) for k, v in decorations.items()},
    )


def parse_embedding(text: str) -> SpatialDiagram:
    """Parse and validate an embedding file.

    Raises :class:`DiagramSyntaxError` for lexical problems and
    :class:`DiagramValidationError` listing every violated invariant.
    """
    diagram = parse_records(text)
    problems = validate(diagram)
    if problems:
        raise DiagramValidationError(problems)
    return diagram


def load_embedding(path) -> SpatialDiagram:
    with open(path, encoding="utf-8") as fh:
        return parse_embedding(fh.read())


def serialize(d: SpatialDiagram) -> str:
    lines = [f"graph v {v}" for v in sorted(d.vertices, key=natural_key)]
    lines += [f"graph e {e} {u} {v}" for e, (u, v) in sorted(d.edges.items(), key=lambda kv: natural_key(kv[0]))]
    lines += [f"vertex {n} : {' '.join(ds)}" for n, ds in sorted(d.flat_vertices.items(), key=lambda kv: natural_key(kv[0]))]
    lines += [f"crossing {c} : {' '.join(ds)}" for c, ds in sorted(d.crossings.items(), key=lambda kv: natural_key(kv[0]))]

    def arc_key(arc):
        a, b, e = arc
        return natural_key(e), min(dart_index(a), dart_index(b))

    for a, b, e in sorted(d.arcs, key=arc_key):
        if dart_edge(a) == dart_edge(b) and dart_index(b) < dart_index(a):
            a, b = b, a
        lines.append(f"arc {a} -- {b} on {e}")
    for e in sorted(d.decorations, key=natural_key):
        lines += [dec.line(e) for dec in d.decorations[e]]
    return "\n".join(lines) + "\n"


# -- validation ------------------------------------------------------------------------------


def count_faces(d: SpatialDiagram) -> int:
    """Orbits of (rotate counterclockwise) o (cross the arc) on darts."""
    nxt_ccw = {}
    for darts in list(d.flat_vertices.values()) + list(d.crossings.values()):
        for i, x in enumerate(darts):
            nxt_ccw[x] = darts[(i + 1) % len(darts)]
    seen = set()
    faces = 0
    for start in nxt_ccw:
        if start in seen:
            continue
        faces += 1
        x = start
        while x not in seen:
            seen.add(x)
            x = nxt_ccw[d.partner[x]]
    return faces


def _components(d: SpatialDiagram) -> int:
    nodes = {}
    for name, darts in d.flat_vertices.items():
        for x in darts:
            nodes[x] = ("v", name)
    for name, darts in d.crossings.items():
        for x in darts:
            nodes[x] = ("x", name)
    parent = {n: n for n in set(nodes.values())}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b, _ in d.arcs:
        if a in nodes and b in nodes:
            parent[find(nodes[a])] = find(nodes[b])
    return len({find(n) for n in parent})


def validate(d: SpatialDiagram) -> list[str]:
    """Every violated diagram invariant, as human-readable strings (empty if valid)."""
    from .knots import table_names

    problems: list[str] = []
    vset = set(d.vertices)
    for eid, (u, v) in d.edges.items():
        for w in (u, v):
            if w not in vset:
                problems.append(f"undeclared vertex {w} on edge {eid}")

    # darts in nodes
    node_uses = Counter()
    for darts in list(d.flat_vertices.values()) + list(d.crossings.values()):
        node_uses.update(darts)
    arc_uses = Counter()
    for a, b, e in d.arcs:
        arc_uses.update((a, b))
        for x in (a, b):
            if dart_edge(x) != e:
                problems.append(f"arc edge mismatch: dart {x} listed on edge {e}")
    all_darts = set(node_uses) | set(arc_uses)
    for x in sorted(all_darts, key=natural_key):
        if dart_edge(x) not in d.edges:
            problems.append(f"undeclared dart {x}: edge {dart_edge(x)} is not declared")
    for x, c in sorted(node_uses.items(), key=lambda kv: natural_key(kv[0])):
        if c > 1:
            problems.append(f"dart reuse: {x} appears {c} times in vertex/crossing records")
    for x, c in sorted(arc_uses.items(), key=lambda kv: natural_key(kv[0])):
        if c > 1:
            problems.append(f"dart reuse: {x} appears in {c} arcs")
    for x in sorted(set(arc_uses) - set(node_uses), key=natural_key):
        problems.append(f"undeclared dart {x}: used by an arc but by no vertex or crossing")
    for x in sorted(set(node_uses) - set(arc_uses), key=natural_key):
        problems.append(f"dangling dart {x}: not on any arc")

    # flat vertices agree with the abstract graph
    incident = defaultdict(list)
    for eid, (u, v) in d.edges.items():
        incident[u].append(eid)
        incident[v].append(eid)
    for name in d.vertices:
        if name not in d.flat_vertices:
            problems.append(f"vertex {name} has no rotation record")
    for name, darts in d.flat_vertices.items():
        if name not in vset:
            problems.append(f"vertex record for undeclared vertex {name}")
            continue
        if sorted(map(dart_edge, darts)) != sorted(incident[name]):
            problems.append(f"vertex rotation mismatch at {name}: darts do not match incident edges")
    for cid, darts in d.crossings.items():
        if dart_edge(darts[0]) != dart_edge(darts[2]) or dart_edge(darts[1]) != dart_edge(darts[3]):
            problems.append(f"strand mismatch at crossing {cid}: opposite darts must share an edge")
    if problems:
        return problems

    # every edge realized by a connected chain, crossing orientation respected
    visited = defaultdict(int)
    for eid, (u, v) in d.edges.items():
        try:
            chain = d._walk_edge(eid, u, v)
        except DiagramValidationError as exc:
            problems.extend(exc.violations)
            continue
        visited[eid] = 2 + 2 * len(chain)
        for p in chain:
            if p.under and p.entry != 0:
                problems.append(f"crossing orientation: under-strand of {p.crossing} enters at position {p.entry}, not 0")
    edge_darts = Counter(dart_edge(x) for x in all_darts)
    for eid in d.edges:
        if eid in visited and visited[eid] != edge_darts[eid]:
            problems.append(f"edge chain: edge {eid} has darts off its chain")

    if not problems:
        V = len(d.flat_vertices) + len(d.crossings)
        E = len(d.arcs)
        F = count_faces(d)
        comps = _components(d)
        if V - E + F != 2 * comps:
            problems.append(f"non-planar map: V - E + F = {V} - {E} + {F} = {V - E + F}, expected {2 * comps}")

    known = table_names()
    for eid, decos in d.decorations.items():
        if eid not in d.edges:
            problems.append(f"decoration on undeclared edge {eid}")
        for dec in decos:
            if dec.knot not in known:
                problems.append(f"unknown knot {dec.knot} decorating edge {eid}")
    return problems


# -- cycle-level quantities -------------------------------------------------------------------


def _check_cycle(d: SpatialDiagram, cycle: Sequence[str]):
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        raise NotACycle(f"{list(cycle)} is not a simple closed vertex sequence")
    for i in range(len(cycle)):
        d.edge_between(cycle[i], cycle[(i + 1) % len(cycle)])


def cycle_edges(d: SpatialDiagram, cycle: Sequence[str]) -> list[str]:
    return [d.edge_between(cycle[i], cycle[(i + 1) % len(cycle)])[0] for i in range(len(cycle))]


def cycle_diagram(d: SpatialDiagram, cycle: Sequence[str]) -> KnotDiagram:
    """Knot diagram traced by ``cycle``; strands of other edges are deleted."""
    _check_cycle(d, cycle)
    on_cycle = set(cycle_edges(d, cycle))
    kept = [
        p for _, p in d.traverse(cycle)
        if set(d.strand_edges(p.crossing)) <= on_cycle
    ]
    m = len(kept)
    if m == 0:
        return KnotDiagram(())
    labels: dict[str, dict[int, int]] = defaultdict(dict)
    for k, p in enumerate(kept):
        incoming = k if k > 0 else m
        labels[p.crossing][p.entry] = incoming
        labels[p.crossing][p.exit] = k + 1
    pd = []
    for cid in sorted(labels, key=natural_key):
        lab = labels[cid]
        under_in = next(pos for pos in (0, 2) if any(q.crossing == cid and q.entry == pos for q in kept))
        pd.append(tuple(lab[(under_in + i) % 4] for i in range(4)))
    # the traversal may enter an under-strand at position 2 in the ambient code,
    # so each tuple was rotated to start at the actual incoming under position
    return KnotDiagram(tuple(pd))


def linking_number(d: SpatialDiagram, cycle_a: Sequence[str], cycle_b: Sequence[str]) -> int:
    """Linking number of two disjoint cycles oriented by their vertex sequences."""
    _check_cycle(d, cycle_a)
    _check_cycle(d, cycle_b)
    if set(cycle_a) & set(cycle_b):
        raise NotDisjoint("cycles share a vertex")
    ea = set(cycle_edges(d, cycle_a))
    eb = set(cycle_edges(d, cycle_b))
    entries: dict[str, dict[str, int]] = defaultdict(dict)
    for edges, walk in ((ea, d.traverse(cycle_a)), (eb, d.traverse(cycle_b))):
        for _, p in walk:
            entries[p.crossing]["under" if p.under else "over"] = p.entry
    total = 0
    for cid in d.crossings:
        under_e, over_e = d.strand_edges(cid)
        if (under_e in ea and over_e in eb) or (under_e in eb and over_e in ea):
            total += crossing_sign(entries[cid]["under"], entries[cid]["over"])
    if total % 2:
        raise AssertionError("odd count of inter-component crossing signs")
    return total // 2


# -- diagram symmetries -------------------------------------------------------------------------


@dataclass(frozen=True)
class DiagramSymmetry:
    """A combinatorial symmetry of the drawn map, with the graph automorphism it induces.

    ``vertex_map`` maps graph vertex names; ``sign`` is the orientation
    character of the corresponding homeomorphism of the 3-sphere:
    ``map_orientation * height_flip``.
    """

    vertex_map: dict
    sign: int
    map_orientation: int
    height_flip: int
    dart_map: dict = field(compare=False, repr=False)
    edge_flip: dict = field(compare=False, repr=False)

    def key(self):
        return tuple(sorted(self.vertex_map.items())), self.sign

    def __hash__(self):
        return hash(self.key())


def transported(dec: Decoration, flip: bool, sign: int) -> Decoration:
    direction = dec.direction
    if flip:
        direction = "bwd" if direction == "fwd" else "fwd"
    return Decoration(dec.knot, direction, dec.sign * sign)


def decorations_match(d: SpatialDiagram, edge_map: dict, edge_flip: dict, sign: int) -> bool:
    from .knots import decoration_class

    for eid in d.edges:
        src = Counter(decoration_class(transported(x, edge_flip[eid], sign)) for x in d.decorations.get(eid, ()))
        dst = Counter(decoration_class(x) for x in d.decorations.get(edge_map[eid], ()))
        if src != dst:
            return False
    return True


def diagram_symmetries(d: SpatialDiagram) -> list[DiagramSymmetry]:
    """All map automorphisms compatible with crossings and decorations.

    Each automorphism is fixed by the image of one seed dart and a choice of
    orientation; the rest follows by propagation along arcs and rotations.
    """
    nodes: dict[str, tuple[str, tuple[str, ...]]] = {}
    for name, darts in d.flat_vertices.items():
        nodes[name] = ("v", darts)
    for cid, darts in d.crossings.items():
        nodes[("x", cid)] = ("x", darts)
    where = {}
    for key, (kind, darts) in nodes.items():
        for i, x in enumerate(darts):
            where[x] = (key, i)
    all_darts = sorted(where, key=natural_key)
    if not all_darts:
        return []
    seed = all_darts[0]
    seed_node, _ = where[seed]

    results = {}
    for target in all_darts:
        t_node, _ = where[target]
        if nodes[t_node][0] != nodes[seed_node][0] or len(nodes[t_node][1]) != len(nodes[seed_node][1]):
            continue
        for orient in (1, -1):
            dmap = _propagate(seed, target, orient, nodes, where, d.partner)
            if dmap is None:
                continue
            for sym in _induced(d, dmap, orient, nodes, where):
                results.setdefault(sym.key(), sym)
    return [results[k] for k in sorted(results)]


def _propagate(seed, target, orient, nodes, where, partner):
    dmap = {seed: target}
    used = {target}
    stack = [seed]
    while stack:
        x = stack.pop()
        y = dmap[x]
        (nx, ix), (ny, iy) = where[x], where[y]
        kx, dx = nodes[nx]
        ky, dy = nodes[ny]
        if kx != ky or len(dx) != len(dy):
            return None
        k = len(dx)
        pairs = [(dx[(ix + s) % k], dy[(iy + orient * s) % k]) for s in range(k)]
        pairs.append((partner[x], partner[y]))
        for a, b in pairs:
            if a in dmap:
                if dmap[a] != b:
                    return None
            else:
                if b in used:
                    return None
                dmap[a] = b
                used.add(b)
                stack.append(a)
    if len(dmap) != len(where):
        return None
    return dmap


def _induced(d, dmap, orient, nodes, where):
    height = None
    for cid, darts in d.crossings.items():
        img_node, img_pos = where[dmap[darts[0]]]
        h = 1 if img_pos % 2 == 0 else -1
        if height is None:
            height = h
        elif h != height:
            return []
    heights = (height,) if height is not None else (1, -1)

    vmap = {}
    for name, darts in d.flat_vertices.items():
        img_node, _ = where[dmap[darts[0]]]
        vmap[name] = img_node
    edge_map = {}
    edge_flip = {}
    for eid, (u, v) in d.edges.items():
        start = d._start_dart(eid, u)
        img = dmap[start]
        edge_map[eid] = dart_edge(img)
        nu, nv = d.edges[edge_map[eid]]
        if vmap[u] == nu and vmap[v] == nv:
            edge_flip[eid] = False
        elif vmap[u] == nv and vmap[v] == nu:
            edge_flip[eid] = True
        else:
            return []
    # both heights only arise for crossing-free diagrams
    return [
        DiagramSymmetry(vmap, orient * h, orient, h, dmap, edge_flip)
        for h in heights
        if decorations_match(d, edge_map, edge_flip, orient * h)
    ]


def symmetry_permutation(sym: DiagramSymmetry, order: Sequence[str]) -> Perm:
    index = {v: i for i, v in enumerate(order)}
    return tuple(index[sym.vertex_map[v]] for v in order)
