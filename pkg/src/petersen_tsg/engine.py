"""Bounds on the topological symmetry group of a Petersen-graph embedding.

Upper bounds come from invariants every homeomorphism must respect (knot
types of cycles, linking numbers of the six disjoint 5-cycle pairs, knotted
edge decorations) together with two restrictions valid for all embeddings of
the Petersen graph.  Lower bounds come from certificates: automorphisms known
to be induced by explicit homeomorphisms.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .diagram import (
    Decoration,
    SpatialDiagram,
    cycle_diagram,
    diagram_symmetries,
    linking_number,
    natural_key,
)
from .groups import (
    GroupName,
    PermutationGroup,
    SignedAutomorphism,
    all_subgroups,
    contains_klein_four,
    generate,
    identity,
    identify,
    is_closed_signed,
    perm_order,
    project,
    signed_closure,
    subgroup_classes,
    symmetric_group,
)
from .knots import (
    MIRROR,
    REVERSE,
    Composite,
    KnotId,
    UnknownKnot,
    decoration_class,
    identify_diagram,
    mirror_any,
    symmetry_group,
    transform_factor,
    unoriented,
)
from .petersen import (
    Cycle,
    CyclePair,
    all_cycles,
    automorphism_group,
    canonical_cycle,
    disjoint_five_cycle_pairs,
    verify_petersen_isomorphic,
)


class NotClosed(RuntimeError):
    """The compatible set failed to be a group; this is always an engine bug."""


class InvalidCertificate(ValueError):
    pass


class CatalogMismatch(RuntimeError):
    pass


# -- profile -------------------------------------------------------------------------------------


@dataclass(frozen=True)
class EdgeRecord:
    """Decorations of one graph edge, with its stored direction in vertex indices."""

    name: str
    tail: int
    head: int
    decorations: tuple[Decoration, ...]

    def classes(self, flip: bool = False, mirror: bool = False) -> Counter:
        element = (REVERSE if flip else 0) | (MIRROR if mirror else 0)
        out = Counter()
        for dec in self.decorations:
            knot, sign = decoration_class(dec)
            out[(knot, transform_factor(knot, sign, element))] += 1
        return out


@dataclass(frozen=True, eq=False)
class EmbeddingProfile:
    labels: tuple[str, ...]
    cycle_knots: dict[Cycle, KnotId]
    pair_linking: dict[CyclePair, tuple[int, int]]
    edges: dict[frozenset[int], EdgeRecord]
    notes: tuple[str, ...] = ()

    @property
    def decorations(self) -> dict[str, tuple[Decoration, ...]]:
        return {r.name: r.decorations for r in self.edges.values() if r.decorations}

    @cached_property
    def mirrored_knots(self) -> dict[Cycle, KnotId]:
        return {c: unoriented(mirror_any(k)) for c, k in self.cycle_knots.items()}

    def index_of(self, label: str) -> int:
        return self.labels.index(label)

    def cycle_label(self, cycle: Cycle) -> str:
        sep = "" if all(len(x) == 1 for x in self.labels) else " "
        ordered = sorted(self.labels, key=natural_key)
        ranks = canonical_cycle([ordered.index(self.labels[v]) for v in cycle.vertices])
        return sep.join(ordered[r] for r in ranks)


def _decoration_factors(d: SpatialDiagram, names: Sequence[str]) -> list[tuple[str, int]]:
    factors = []
    for i in range(len(names)):
        eid, forward = d.edge_between(names[i], names[(i + 1) % len(names)])
        for dec in d.decorations.get(eid, ()):
            knot, sign = decoration_class(dec)
            if knot == "unknot":
                continue
            factors.append((knot, sign if forward else transform_factor(knot, sign, REVERSE)))
    return factors


def _with_factors(base: KnotId, factors: list[tuple[str, int]]) -> KnotId:
    extra = Composite.of(factors)
    if isinstance(base, Composite):
        return base + extra
    from .knots import knot_table

    jones, alex, det = base.jones, base.alexander, base.determinant
    table = knot_table()
    for name, sign in extra.factors:
        inv = table[name].invariants
        jones = jones * (inv.jones if sign > 0 else inv.jones.invert_variable())
        alex = alex * inv.alexander
        det *= inv.determinant
    return UnknownKnot(jones, alex, det)


def kneser_labels(d: SpatialDiagram) -> tuple[str, ...]:
    """Diagram vertex names in Kneser index order; raises NotPetersen."""
    iso = verify_petersen_isomorphic(d.vertices, d.graph_edges())
    labels = [None] * 10
    for name, k in iso.items():
        labels[k] = name
    return tuple(labels)


def invariant_profile(d: SpatialDiagram) -> EmbeddingProfile:
    labels = kneser_labels(d)
    iso = {name: k for k, name in enumerate(labels)}
    notes = []
    cycle_knots = {}
    for cyc in all_cycles():
        names = [labels[v] for v in cyc.vertices]
        base = identify_diagram(cycle_diagram(d, names))
        if isinstance(base, Composite) and any(REVERSE not in symmetry_group(n) for n, _ in base.factors):
            notes.append(f"cycle {''.join(names)} carries a non-invertible knot; compared unoriented")
        cycle_knots[cyc] = unoriented(_with_factors(base, _decoration_factors(d, names)))
    pair_linking = {}
    for pair in disjoint_five_cycle_pairs():
        lk = linking_number(
            d, [labels[v] for v in pair.first.vertices], [labels[v] for v in pair.second.vertices]
        )
        pair_linking[pair] = (abs(lk), lk % 2)
    edges = {}
    for eid, (u, v) in d.edges.items():
        edges[frozenset((iso[u], iso[v]))] = EdgeRecord(eid, iso[u], iso[v], tuple(d.decorations.get(eid, ())))
    return EmbeddingProfile(tuple(labels), cycle_knots, pair_linking, edges, tuple(notes))


def mod2_linking_check(profile: EmbeddingProfile) -> bool:
    return sum(parity for _, parity in profile.pair_linking.values()) % 2 == 1


# -- compatible group ------------------------------------------------------------------------


def compatibility_failure(profile: EmbeddingProfile, element: SignedAutomorphism) -> str | None:
    """Name of the first invariant ``element`` fails to respect, or None."""
    perm = element.perm
    if perm not in automorphism_group():
        return "not an automorphism of the Petersen graph"
    mirror = element.sign < 0
    source = profile.mirrored_knots if mirror else profile.cycle_knots
    for cyc in profile.cycle_knots:
        if source[cyc] != profile.cycle_knots[cyc.image(perm)]:
            return f"cycle knots: {profile.cycle_label(cyc)} does not match its image"
    for key, rec in profile.edges.items():
        img = profile.edges[frozenset(perm[v] for v in key)]
        flip = perm[rec.tail] != img.tail
        if rec.classes(flip=flip, mirror=mirror) != img.classes():
            return f"decorations: edge {rec.name} does not match its image {img.name}"
    for pair, (lk, _) in profile.pair_linking.items():
        if profile.pair_linking[pair.image(perm)][0] != lk:
            return "linking numbers: |lk| of a disjoint 5-cycle pair is not preserved"
    return None


def signed_compatible_group(profile: EmbeddingProfile) -> frozenset[SignedAutomorphism]:
    out = frozenset(
        SignedAutomorphism(perm, sign)
        for perm in automorphism_group()
        for sign in (1, -1)
        if compatibility_failure(profile, SignedAutomorphism(perm, sign)) is None
    )
    if SignedAutomorphism(identity(10), 1) not in out or not is_closed_signed(out):
        raise NotClosed("profile-compatible automorphisms do not form a group")
    return out


ORDER_SIX_NOTE = "removed automorphisms of order 6: no homeomorphism of an embedded Petersen graph induces one"
ORDER_FOUR_NOTE = "removed orientation-preserving automorphisms of order 4: they cannot be induced by such homeomorphisms"
KLEIN_NOTE = "contains a Klein four-group, which no embedding of the Petersen graph realizes"


def theorem_filter(
    candidates: Iterable[SignedAutomorphism],
) -> tuple[frozenset[SignedAutomorphism], list[str]]:
    """Drop elements excluded for every embedding; flag Klein four-subgroups."""
    candidates = frozenset(candidates)
    kept = set()
    removed6 = removed4 = 0
    for s in candidates:
        if s.order == 6:
            removed6 += 1
        elif s.order == 4 and s.sign > 0:
            removed4 += 1
        else:
            kept.add(s)
    notes = []
    if removed6:
        notes.append(f"{ORDER_SIX_NOTE} ({removed6} removed)")
    if removed4:
        notes.append(f"{ORDER_FOUR_NOTE} ({removed4} removed)")
    for label, perms in (("full", project(kept)), ("op", project(kept, 1))):
        grp = PermutationGroup(10, perms, tuple(sorted(perms)))
        if grp.is_closed() and contains_klein_four(grp):
            notes.append(f"{label} part {KLEIN_NOTE}; bound not attainable as stated")
    return frozenset(kept), notes


# -- certificates and reports ------------------------------------------------------------------


@dataclass(frozen=True)
class Certificate:
    signed: SignedAutomorphism
    provenance: str = "diagram-symmetry"
    text: str = ""

    @property
    def cited(self) -> bool:
        return self.provenance != "diagram-symmetry"


def parse_vertex_permutation(text: str, labels: Sequence[str]) -> tuple[int, ...]:
    """Cycle notation over diagram vertex names, e.g. ``(12345)(acebd)``.

    Names longer than one character must be separated by spaces or commas.
    """
    index = {name: i for i, name in enumerate(labels)}
    perm = list(range(len(labels)))
    text = text.strip()
    if text in ("()", "id", ""):
        return tuple(perm)
    if not re.fullmatch(r"(\([^()]+\))+", text):
        raise ValueError(f"malformed cycle notation {text!r}")
    seen = set()
    for body in re.findall(r"\(([^()]+)\)", text):
        toks = re.split(r"[\s,]+", body.strip()) if re.search(r"[\s,]", body) else list(body)
        for t in toks:
            if t not in index:
                raise ValueError(f"unknown vertex {t!r}")
            if t in seen:
                raise ValueError(f"vertex {t!r} repeated")
            seen.add(t)
        for a, b in zip(toks, toks[1:] + toks[:1]):
            perm[index[a]] = index[b]
    return tuple(perm)


def format_vertex_permutation(perm: Sequence[int], labels: Sequence[str]) -> str:
    sep = "" if all(len(x) == 1 for x in labels) else " "
    seen = set()
    cycles = []
    for start in sorted(range(len(perm)), key=lambda i: natural_key(labels[i])):
        if start in seen or perm[start] == start:
            continue
        cyc = []
        x = start
        while x not in seen:
            seen.add(x)
            cyc.append(labels[x])
            x = perm[x]
        cycles.append("(" + sep.join(cyc) + ")")
    return "".join(cycles) or "()"


def parse_certificates(text: str, labels: Sequence[str]) -> list[Certificate]:
    """Lines ``cert <cycles> sign <+|-> via <provenance text>``."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = re.fullmatch(r"cert\s+(\S+)\s+sign\s+([+-])\s+via\s+(.+)", line)
        if not m:
            raise ValueError(f"line {lineno}: expected `cert <cycles> sign <+|-> via <text>`")
        try:
            perm = parse_vertex_permutation(m.group(1), labels)
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from exc
        via = m.group(3).strip()
        provenance = "diagram-symmetry" if via == "diagram-symmetry" else f"cited({via})"
        out.append(Certificate(SignedAutomorphism(perm, 1 if m.group(2) == "+" else -1), provenance, line))
    return out


def symmetry_certificates(d: SpatialDiagram, profile: EmbeddingProfile) -> list[Certificate]:
    """Every symmetry of the drawing, as a certificate."""
    index = {name: i for i, name in enumerate(profile.labels)}
    out = []
    for sym in diagram_symmetries(d):
        perm = tuple(index[sym.vertex_map[profile.labels[i]]] for i in range(10))
        out.append(Certificate(SignedAutomorphism(perm, sym.sign)))
    return out


@dataclass(frozen=True)
class GroupBound:
    group: PermutationGroup
    name: GroupName


def _bound(perms: frozenset) -> GroupBound:
    grp = PermutationGroup(10, perms, tuple(sorted(perms)))
    return GroupBound(grp, identify(grp))


@dataclass(frozen=True)
class TSGReport:
    lower_full: GroupBound
    lower_op: GroupBound
    upper_full: GroupBound
    upper_op: GroupBound
    exact_full: bool
    exact_op: bool
    mod2_ok: bool
    filter_notes: tuple[str, ...] = ()
    certificates: tuple[Certificate, ...] = ()
    compatible: frozenset[SignedAutomorphism] = field(default=frozenset(), repr=False)

    @property
    def full_name(self) -> GroupName:
        return self.upper_full.name

    @property
    def op_name(self) -> GroupName:
        return self.upper_op.name

    def machine_line(self) -> str:
        return (
            f"tsg full={self.upper_full.name} op={self.upper_op.name} "
            f"exact_full={int(self.exact_full)} exact_op={int(self.exact_op)} mod2={int(self.mod2_ok)}"
        )

    def text(self) -> str:
        rows = [
            ("", "lower", "upper", "exact"),
            ("TSG", str(self.lower_full.name), str(self.upper_full.name), "yes" if self.exact_full else "no"),
            ("TSG+", str(self.lower_op.name), str(self.upper_op.name), "yes" if self.exact_op else "no"),
        ]
        widths = [max(len(r[i]) for r in rows) for i in range(4)]
        lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
        lines.append(f"mod-2 linking congruence: {'ok' if self.mod2_ok else 'FAILED'}")
        lines.append(f"orders: lower {self.lower_full.group.order}/{self.lower_op.group.order}, "
                     f"upper {self.upper_full.group.order}/{self.upper_op.group.order}")
        lines += [f"note: {n}" for n in self.filter_notes]
        return "\n".join(lines)


def classify(
    d: SpatialDiagram,
    certificates: Sequence[Certificate] = (),
    profile: EmbeddingProfile | None = None,
) -> TSGReport:
    profile = profile or invariant_profile(d)
    compatible = signed_compatible_group(profile)
    filtered, notes = theorem_filter(compatible)
    notes = list(profile.notes) + notes

    symmetric = None
    for cert in certificates:
        failure = compatibility_failure(profile, cert.signed)
        if failure is not None:
            raise InvalidCertificate(f"{cert.text or cert.signed}: {failure}")
        if cert.signed not in filtered:
            raise InvalidCertificate(f"{cert.text or cert.signed}: excluded by the order restrictions")
        if not cert.cited:
            if symmetric is None:
                symmetric = {c.signed for c in symmetry_certificates(d, profile)}
            if cert.signed not in symmetric:
                raise InvalidCertificate(f"{cert.text or cert.signed}: not a symmetry of the drawing")

    lower = signed_closure([c.signed for c in certificates], 10)
    lower_full = _bound(project(lower))
    lower_op = _bound(project(lower, 1))

    exact = {}
    uppers = {}
    for label, perms, fallback in (
        ("full", project(filtered), project(compatible)),
        ("op", project(filtered, 1), project(compatible, 1)),
    ):
        grp = PermutationGroup(10, perms, tuple(sorted(perms)))
        closed = grp.is_closed()
        if not closed:
            notes.append(f"{label} part: filtered set is not a group; reporting the unfiltered group")
            perms = fallback
            grp = PermutationGroup(10, perms, tuple(sorted(perms)))
        uppers[label] = GroupBound(grp, identify(grp))
        lower_bound = lower_full if label == "full" else lower_op
        exact[label] = closed and not contains_klein_four(grp) and lower_bound.group.elements == grp.elements

    return TSGReport(
        lower_full,
        lower_op,
        uppers["full"],
        uppers["op"],
        exact["full"],
        exact["op"],
        mod2_linking_check(profile),
        tuple(notes),
        tuple(certificates),
        compatible,
    )


# -- realizability catalog ----------------------------------------------------------------------

REALIZABLE = frozenset({
    GroupName.F20, GroupName.D5, GroupName.D3, GroupName.Z5,
    GroupName.Z4, GroupName.Z3, GroupName.Z2, GroupName.TRIVIAL,
})
POSITIVELY_REALIZABLE = frozenset({
    GroupName.D5, GroupName.D3, GroupName.Z5, GroupName.Z3, GroupName.Z2, GroupName.TRIVIAL,
})


def filter_classes() -> tuple[frozenset[GroupName], frozenset[GroupName]]:
    """Subgroup classes of S5 surviving the general obstructions (full, orientation preserving)."""
    full, op = set(), set()
    for h in all_subgroups(symmetric_group(5)):
        name = identify(h)
        orders = {perm_order(p) for p in h.elements}
        if contains_klein_four(h) or 6 in orders:
            continue
        full.add(name)
        if 4 not in orders:
            op.add(name)
    return frozenset(full), frozenset(op)


def asymmetric_variant(d: SpatialDiagram) -> SpatialDiagram:
    """Decorate edge number k (in id order) with k right-handed trefoils, killing all symmetry."""
    extra = {}
    for k, eid in enumerate(sorted(d.edges, key=natural_key), start=1):
        extra[eid] = [Decoration("3_1", "fwd", 1)] * k
    return d.with_decorations(extra)


def chiral_variant(d: SpatialDiagram) -> SpatialDiagram:
    """Add one right-handed trefoil to every edge; orientation-reversing maps no longer fit."""
    return d.with_decorations({eid: [Decoration("3_1", "fwd", 1)] for eid in d.edges})


def realizability_catalog(entries=None) -> tuple[frozenset[GroupName], frozenset[GroupName]]:
    """Stored realizability lists, after checking them against a recomputation.

    The recomputation filters the subgroup classes of S5 by the general
    obstructions and intersects with groups certified exactly by classifying
    the corpus (plus chiral and asymmetric variants).
    """
    from .corpus import load_corpus

    entries = load_corpus() if entries is None else entries
    certified_full, certified_op = set(), set()
    for entry in entries:
        report = entry.classify()
        if report.exact_full:
            certified_full.add(report.full_name)
        if report.exact_op:
            certified_op.add(report.op_name)
            chiral = chiral_variant(entry.diagram)
            certs = [c for c in entry.certificates if c.signed.sign > 0]
            rep = classify(chiral, certs)
            if rep.exact_full:
                certified_full.add(rep.full_name)
    if entries:
        blank = asymmetric_variant(entries[0].diagram)
        rep = classify(blank, [])
        if rep.exact_full:
            certified_full.add(rep.full_name)
        if rep.exact_op:
            certified_op.add(rep.op_name)

    full_ok, op_ok = filter_classes()
    assert full_ok <= subgroup_classes(symmetric_group(5))
    realizable = frozenset(full_ok & certified_full)
    positive = frozenset(op_ok & certified_op)
    if realizable != REALIZABLE or positive != POSITIVELY_REALIZABLE:
        raise CatalogMismatch(
            f"recomputed realizable {sorted(map(str, realizable))}, positive {sorted(map(str, positive))}"
        )
    return REALIZABLE, POSITIVELY_REALIZABLE


def certificate_group(certificates: Sequence[Certificate], sign: int | None = None) -> PermutationGroup:
    lower = signed_closure([c.signed for c in certificates], 10)
    return generate(sorted(project(lower, sign)), 10)
