"""Knot invariants and knot-table identification.

Crossing convention: a right-handed crossing is positive, so the closure of
the braid ``s1^3`` is the positive (right-handed) trefoil with Jones
polynomial ``t + t^3 - t^4``.  Brackets use ``<X> = A<A-smoothing> + A^-1<B-smoothing>``
and the Jones polynomial is ``(-A^3)^-w <K>`` with ``A = t^(-1/4)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Sequence, Union

import numba
import numpy as np

from .diagram import Decoration, KnotDiagram, SpatialDiagram, cycle_diagram, serialize
from .laurent import LaurentPolynomial, bareiss_determinant

MAX_CROSSINGS = 22
JIT_THRESHOLD = 10

T = LaurentPolynomial.monomial(1)
ONE = LaurentPolynomial.constant(1)


class TooManyCrossings(ValueError):
    pass


class DisconnectedDiagram(ValueError):
    pass


class UnknownId(ValueError):
    """Raised when a chirality transform is requested for an unidentified knot."""


# -- braids ----------------------------------------------------------------------------


def braid_closure(word: Sequence[int], strands: int | None = None) -> KnotDiagram:
    """Closure of a braid word; ``k`` is the generator s_k, ``-k`` its inverse.

    Strands run upward; in ``s_k`` the strand coming from the lower left passes over.
    """
    if strands is None:
        strands = max((abs(g) for g in word), default=0) + 1
    initial = list(range(1, strands + 1))
    current = list(initial)
    fresh = strands + 1
    pd = []
    for g in word:
        i = abs(g) - 1
        if not 0 <= i < strands - 1:
            raise ValueError(f"generator {g} out of range for {strands} strands")
        left_in, right_in = current[i], current[i + 1]
        left_out, right_out = fresh, fresh + 1
        fresh += 2
        if g > 0:
            pd.append([right_in, right_out, left_out, left_in])
        else:
            pd.append([left_in, right_in, right_out, left_out])
        current[i], current[i + 1] = left_out, right_out
    rename = {cur: ini for cur, ini in zip(current, initial)}
    pd = [tuple(rename.get(x, x) for x in X) for X in pd]
    if any(c == i for c, i in zip(current, initial)):
        raise DisconnectedDiagram("a strand never crosses; closure is split")
    try:
        return KnotDiagram(tuple(pd)).relabeled()
    except ValueError as exc:
        raise DisconnectedDiagram(str(exc)) from exc


# -- Kauffman bracket -------------------------------------------------------------------


def _state_histogram(pd: np.ndarray, n_labels: int) -> np.ndarray:
    """hist[a, loops] = number of states with ``a`` A-smoothings and ``loops`` circles."""
    n = pd.shape[0]
    hist = np.zeros((n + 1, n + 2), dtype=np.int64)
    parent = np.empty(n_labels, dtype=np.int64)
    for state in range(1 << n):
        for i in range(n_labels):
            parent[i] = i
        a_count = 0
        for c in range(n):
            if (state >> c) & 1:
                pairs = ((pd[c, 0], pd[c, 3]), (pd[c, 1], pd[c, 2]))
            else:
                a_count += 1
                pairs = ((pd[c, 0], pd[c, 1]), (pd[c, 2], pd[c, 3]))
            for x, y in pairs:
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                while parent[y] != y:
                    parent[y] = parent[parent[y]]
                    y = parent[y]
                if x != y:
                    parent[x] = y
        loops = 0
        for i in range(n_labels):
            if parent[i] == i:
                loops += 1
        hist[a_count, loops] += 1
    return hist


_state_histogram_jit = numba.njit(cache=True)(_state_histogram)


def kauffman_bracket(diagram: KnotDiagram) -> LaurentPolynomial:
    """Bracket in ``A`` by full state summation, normalized so the round circle is 1."""
    n = diagram.n_crossings
    if n > MAX_CROSSINGS:
        raise TooManyCrossings(f"{n} crossings exceeds the limit of {MAX_CROSSINGS}")
    if n == 0:
        return ONE
    labels = sorted({x for X in diagram.pd for x in X})
    index = {x: i for i, x in enumerate(labels)}
    pd = np.array([[index[x] for x in X] for X in diagram.pd], dtype=np.int64)
    kernel = _state_histogram_jit if n >= JIT_THRESHOLD else _state_histogram
    hist = kernel(pd, len(labels))
    A = LaurentPolynomial.monomial(1)
    loop = LaurentPolynomial({2: -1, -2: -1})
    total = LaurentPolynomial()
    for a_count, row in enumerate(hist):
        for loops, count in enumerate(row):
            if count:
                total += int(count) * A ** (2 * a_count - n) * loop ** (loops - 1)
    return total


def jones(diagram: KnotDiagram) -> LaurentPolynomial:
    f = LaurentPolynomial.monomial(-3 * diagram.writhe, (-1) ** (diagram.writhe % 2)) * kauffman_bracket(diagram)
    return f.divide_exponents(4).invert_variable()


# -- Alexander polynomial -------------------------------------------------------------------


def normalize_alexander(p: LaurentPolynomial) -> LaurentPolynomial:
    """Representative symmetric under t -> 1/t with positive leading coefficient."""
    if p.is_zero():
        return p
    span = p.max_degree + p.min_degree
    if span % 2:
        raise ValueError("not an Alexander polynomial of a knot")
    q = p.shift(-span // 2)
    return -q if q.leading_coefficient < 0 else q


def alexander(diagram: KnotDiagram) -> LaurentPolynomial:
    """Alexander polynomial from the Wirtinger/Fox matrix with one row and column struck."""
    n = diagram.n_crossings
    if n == 0:
        return ONE
    passes = diagram.passes
    if len(passes) != 2 * n:
        raise DisconnectedDiagram("Alexander polynomial needs a single component")
    # arcs change only after an under-pass
    first_under = next(k for k, (_, entry, _) in enumerate(passes) if entry % 2 == 0)
    arc_after = {}
    arc = 0
    m = len(passes)
    for step in range(m):
        k = (first_under + step) % m
        if passes[k][1] % 2 == 0:
            arc = (arc + 1) % n
        arc_after[k] = arc
    over_arc, under_in, under_out = {}, {}, {}
    for k, (ci, entry, _) in enumerate(passes):
        if entry % 2 == 0:
            under_in[ci] = arc_after[(k - 1) % m]
            under_out[ci] = arc_after[k]
        else:
            over_arc[ci] = arc_after[k]
    signs = diagram.signs
    zero = LaurentPolynomial()
    rows = []
    for ci in range(n):
        row = [zero] * n
        row[over_arc[ci]] += 1 - T
        if signs[ci] > 0:
            row[under_in[ci]] += T
            row[under_out[ci]] += -1
        else:
            row[under_in[ci]] += -1
            row[under_out[ci]] += T
        rows.append(row)
    minor = [row[:-1] for row in rows[:-1]]
    return normalize_alexander(bareiss_determinant(minor))


def determinant(diagram: KnotDiagram) -> int:
    return abs(alexander(diagram)(-1))


@dataclass(frozen=True)
class Invariants:
    jones: LaurentPolynomial
    alexander: LaurentPolynomial
    determinant: int


@lru_cache(maxsize=4096)
def invariants(diagram: KnotDiagram) -> Invariants:
    a = alexander(diagram)
    return Invariants(jones(diagram), a, abs(a(-1)))


# -- knot table ----------------------------------------------------------------------------

# Braid words of the bundled diagrams (KnotInfo conventions, closure as above).
BRAID_WORDS: dict[str, tuple[int, ...]] = {
    "3_1": (1, 1, 1),
    "4_1": (1, -2, 1, -2),
    "5_1": (1, 1, 1, 1, 1),
    "8_17": (1, 1, -2, 1, -2, 1, -2, -2),
}

# Klein-group elements as bit masks: 1 = mirror, 2 = reverse.
MIRROR, REVERSE = 1, 2
_SYMMETRY_WORDS = {"m": MIRROR, "r": REVERSE, "mr": MIRROR | REVERSE}


@dataclass(frozen=True)
class TableKnot:
    name: str
    diagram: KnotDiagram
    symmetries: frozenset[int]
    invertible: bool
    invariants: Invariants

    @property
    def chiral(self) -> bool:
        return MIRROR not in self.symmetries

    @property
    def crossing_number(self) -> int:
        return int(self.name.split("_")[0])


def knot_embedding(diagram: KnotDiagram) -> SpatialDiagram:
    """Embedding-format file for a knot: triangle p, q, r with all crossings on edge rp."""
    if not diagram.pd:
        raise ValueError("the unknot needs no diagram file")
    d = diagram.relabeled()
    m = 2 * d.n_crossings
    # segment k runs from pass k to pass k+1; segment m (= 0) contains the triangle
    # vertices, cut as: pass m-1 -> rp.* -> p -> pq -> q -> qr -> r -> rp.* -> pass 0
    dart_in, dart_out = {}, {}
    for k, (ci, entry, ex) in enumerate(d.passes):
        dart_in[(ci, entry)] = f"rp.{2 * k + 1}"
        dart_out[(ci, ex)] = f"rp.{2 * k + 2}"
    crossings = {}
    for ci in range(d.n_crossings):
        names = []
        for pos in range(4):
            names.append(dart_in.get((ci, pos)) or dart_out[(ci, pos)])
        crossings[f"x{ci + 1}"] = tuple(names)
    arcs = [("rp.0", "rp.1", "rp")]
    arcs += [(f"rp.{2 * k + 2}", f"rp.{2 * k + 3}", "rp") for k in range(m - 1)]
    arcs += [(f"rp.{2 * m}", f"rp.{2 * m + 1}", "rp"), ("pq.0", "pq.1", "pq"), ("qr.0", "qr.1", "qr")]
    return SpatialDiagram(
        vertices=("p", "q", "r"),
        edges={"pq": ("p", "q"), "qr": ("q", "r"), "rp": ("r", "p")},
        flat_vertices={"p": ("pq.0", f"rp.{2 * m + 1}"), "q": ("qr.0", "pq.1"), "r": ("rp.0", "qr.1")},
        crossings=crossings,
        arcs=tuple(arcs),
    )


def knot_from_embedding(diagram: SpatialDiagram) -> KnotDiagram:
    return cycle_diagram(diagram, ["p", "q", "r"])


def generate_table_files() -> dict[str, str]:
    """Embedding-format texts for every bundled table knot, keyed by file name."""
    return {f"{name}.emb": serialize(knot_embedding(braid_closure(w))) for name, w in BRAID_WORDS.items()}


def _read_symmetry_file() -> dict[str, tuple[frozenset[int], bool]]:
    text = resources.files("petersen_tsg").joinpath("data/knots/symmetry.txt").read_text()
    out = {}
    for line in text.splitlines():
        line = line.split("#", 1)[0].split()
        if not line:
            continue
        rec = dict(zip(line[::2], line[1::2]))
        syms = {0}
        if rec["symmetry"] != "-":
            syms |= {_SYMMETRY_WORDS[w] for w in rec["symmetry"].split(",")}
        out[rec["knot"]] = (frozenset(syms), rec["invertible"] == "yes")
    return out


@lru_cache(maxsize=None)
def knot_table() -> dict[str, TableKnot]:
    """Table knots with invariants recomputed from the bundled diagrams."""
    from .diagram import parse_embedding

    flags = _read_symmetry_file()
    table = {"unknot": TableKnot("unknot", KnotDiagram(()), frozenset({0, 1, 2, 3}), True, Invariants(ONE, ONE, 1))}
    base = resources.files("petersen_tsg").joinpath("data/knots")
    for name in BRAID_WORDS:
        emb = parse_embedding(base.joinpath(f"{name}.emb").read_text())
        kd = knot_from_embedding(emb)
        syms, inv = flags[name]
        table[name] = TableKnot(name, kd, syms, inv, invariants(kd))
    return table


def table_names() -> frozenset[str]:
    return frozenset({"unknot", *BRAID_WORDS})


def symmetry_group(name: str) -> frozenset[int]:
    return knot_table()[name].symmetries


# -- identifications -------------------------------------------------------------------


def _sign_of(name: str, element: int) -> int:
    return 1 if element in symmetry_group(name) else -1


def _representative(name: str, sign: int) -> int:
    if sign > 0:
        return 0
    return next(e for e in (MIRROR, REVERSE, MIRROR | REVERSE) if e not in symmetry_group(name))


def transform_factor(name: str, sign: int, element: int) -> int:
    """Chirality sign of a table knot after mirroring and/or reversing (``element`` bit mask)."""
    if name == "unknot" or MIRROR in symmetry_group(name) and REVERSE in symmetry_group(name):
        return 1
    return _sign_of(name, _representative(name, sign) ^ element)


def decoration_class(dec: Decoration) -> tuple[str, int]:
    """(knot, chirality sign) of a decoration read in its edge's stored direction."""
    element = (MIRROR if dec.sign < 0 else 0) | (REVERSE if dec.direction == "bwd" else 0)
    if dec.knot == "unknot":
        return ("unknot", 1)
    return dec.knot, _sign_of(dec.knot, element)


@dataclass(frozen=True, order=True)
class Composite:
    """Connected sum of signed table knots; the empty sum is the unknot."""

    factors: tuple[tuple[str, int], ...] = ()

    @classmethod
    def of(cls, factors) -> Composite:
        out = []
        for name, sign in factors:
            if name == "unknot":
                continue
            out.append((name, transform_factor(name, sign, 0)))
        return cls(tuple(sorted(out, key=_factor_key)))

    def __add__(self, other: Composite) -> Composite:
        return Composite.of(self.factors + other.factors)

    @property
    def is_unknot(self) -> bool:
        return not self.factors

    def __str__(self):
        if not self.factors:
            return "unknot"
        return " # ".join(name if MIRROR in symmetry_group(name) else f"{name}{'+' if s > 0 else '-'}"
                          for name, s in self.factors)


def _factor_key(f):
    name, sign = f
    cr, idx = (int(x) for x in name.split("_"))
    return cr, idx, -sign


@dataclass(frozen=True)
class UnknownKnot:
    """Invariants that do not factor over the table."""

    jones: LaurentPolynomial
    alexander: LaurentPolynomial
    determinant: int

    def mirrored(self) -> UnknownKnot:
        return UnknownKnot(self.jones.invert_variable(), self.alexander, self.determinant)

    def __str__(self):
        return f"unknown(V={self.jones.format()}; Delta={self.alexander.format()}; det={self.determinant})"


KnotId = Union[Composite, UnknownKnot]


def identify_knot(jones_poly: LaurentPolynomial, alexander_poly: LaurentPolynomial, det: int) -> KnotId:
    """Factor the invariants as a connected sum of signed table knots.

    Jones and Alexander polynomials are multiplicative under connected sum;
    a decomposition must divide both exactly and reproduce the determinant.
    Mirroring inverts the Jones variable and leaves the Alexander polynomial alone.
    """
    alexander_poly = normalize_alexander(alexander_poly)
    entries = []
    for name, tk in knot_table().items():
        if name == "unknot":
            continue
        inv = tk.invariants
        entries.append((name, 1, inv.jones, inv.alexander, inv.determinant))
        if tk.chiral:
            entries.append((name, -1, inv.jones.invert_variable(), inv.alexander, inv.determinant))

    def search(J, A, d, start):
        if J == ONE and A == ONE and d == 1:
            return []
        for i in range(start, len(entries)):
            name, sign, ej, ea, ed = entries[i]
            if d % ed:
                continue
            qj = J.exact_div(ej)
            if qj is None:
                continue
            qa = A.exact_div(ea)
            if qa is None:
                continue
            rest = search(qj, normalize_alexander(qa), d // ed, i)
            if rest is not None:
                return [(name, sign)] + rest
        return None

    found = search(jones_poly, alexander_poly, det, 0)
    if found is None:
        return UnknownKnot(jones_poly, alexander_poly, det)
    return Composite.of(found)


def identify_diagram(diagram: KnotDiagram) -> KnotId:
    inv = invariants(diagram)
    return identify_knot(inv.jones, inv.alexander, inv.determinant)


def transform_id(knot: KnotId, mirror: bool = False, reverse: bool = False) -> Composite:
    """Composite after mirroring and/or reversing orientation."""
    if not isinstance(knot, Composite):
        raise UnknownId(f"cannot transform unidentified knot {knot}")
    element = (MIRROR if mirror else 0) | (REVERSE if reverse else 0)
    return Composite.of((name, transform_factor(name, s, element)) for name, s in knot.factors)


def mirror_any(knot: KnotId) -> KnotId:
    if isinstance(knot, UnknownKnot):
        return knot.mirrored()
    return transform_id(knot, mirror=True)


def unoriented(knot: KnotId) -> KnotId:
    """Canonical form ignoring the orientation of the cycle."""
    if isinstance(knot, UnknownKnot):
        return knot
    return min(knot, transform_id(knot, reverse=True))


def parse_knot_id(text: str) -> Composite:
    """Inverse of ``str(Composite)``: ``"3_1+ # 4_1"``, ``"unknot"``."""
    text = text.strip()
    if text == "unknot":
        return Composite()
    factors = []
    for part in text.split("#"):
        part = part.strip()
        sign = 1
        if part[-1] in "+-":
            sign = 1 if part[-1] == "+" else -1
            part = part[:-1]
        if part not in table_names():
            raise ValueError(f"unknown knot {part!r}")
        factors.append((part, sign))
    return Composite.of(factors)
