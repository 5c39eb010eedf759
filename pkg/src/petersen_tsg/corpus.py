"""The seven reference embeddings, their certificates and expected groups.

Base drawings come from :mod:`petersen_tsg.reconstruct`; the decorated
entries are generated from their base by adding knotted edge decorations.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .diagram import Decoration, DiagramSyntaxError, DiagramValidationError, SpatialDiagram, parse_embedding, serialize
from .engine import Certificate, TSGReport, classify, kneser_labels, parse_certificates
from .groups import GroupName
from .petersen import NotPetersen

UNCLAIMED = "unclaimed"
ENTRY_NAMES = ("Gamma", "Gamma1", "Gamma2", "Lambda", "Lambda1", "Delta", "Delta1")


class CorpusCorrupt(RuntimeError):
    pass


@dataclass(frozen=True, eq=False)
class CorpusEntry:
    name: str
    diagram: SpatialDiagram
    certificates: tuple[Certificate, ...]
    expected: dict[str, str]
    anchor: str
    file: str

    def classify(self) -> TSGReport:
        return classify(self.diagram, self.certificates)

    def check(self, report: TSGReport) -> list[str]:
        """Expectations the report fails to reproduce."""
        failures = []
        for column, got, exact in (("full", report.full_name, report.exact_full), ("op", report.op_name, report.exact_op)):
            want = self.expected[column]
            if want == UNCLAIMED:
                continue
            if str(got) != want or not exact:
                failures.append(f"{self.name} {column}: expected exact {want}, got {got} (exact={exact})")
        return failures


# -- generation ---------------------------------------------------------------------------------

_8_17 = Decoration("8_17", "fwd", 1)


def _derived(bases: dict[str, SpatialDiagram]) -> dict[str, SpatialDiagram]:
    gamma, lam, delta = bases["Gamma"], bases["Lambda"], bases["Delta"]
    bwd_8_17 = Decoration("8_17", "bwd", 1)
    fig8 = Decoration("4_1", "fwd", 1)
    return {
        # coherent along 1 -> 2 -> 3 -> 4 -> 5 -> 1; edge 15 is stored 1 -> 5
        "Gamma1": gamma.with_decorations({"12": [_8_17], "23": [_8_17], "34": [_8_17], "45": [_8_17], "15": [bwd_8_17]}),
        "Gamma2": gamma.with_decorations({"15": [fig8], "12": [fig8]}),
        # directed a -> 1, c -> b, 5 -> d: permuted cyclically by the order-3 rotation
        "Lambda1": lam.with_decorations({"1a": [bwd_8_17], "bc": [bwd_8_17], "5d": [_8_17]}),
        "Delta1": delta.with_decorations({
            "1a": [fig8],
            **{e: [Decoration("3_1", "fwd", 1)] for e in ("ab", "bc", "cd", "de", "ae")},
            **{e: [Decoration("3_1", "fwd", -1)] for e in ("12", "23", "34", "45", "15")},
        }),
    }


GLIDE = "glide rotation of S^3 turning both Hopf-linked circles by 2pi/5"
ROTATION_REFLECTION = "rotation-reflection (z1, z2) -> (w conj z2, z1 / w) exchanging the two circles"

CERTIFICATES = {
    "Gamma": ["cert (12345)(acebd) sign + via diagram-symmetry", "cert (25)(34)(be)(cd) sign + via diagram-symmetry"],
    "Gamma1": ["cert (12345)(acebd) sign + via diagram-symmetry"],
    "Gamma2": ["cert (25)(34)(be)(cd) sign + via diagram-symmetry"],
    "Lambda": ["cert (24e)(c5a)(bd1) sign + via diagram-symmetry", "cert (1c)(ab)(e4)(d5) sign + via diagram-symmetry"],
    "Lambda1": ["cert (24e)(c5a)(bd1) sign + via diagram-symmetry"],
    "Delta": [f"cert (12345)(acebd) sign + via {GLIDE}", f"cert (1a)(2b5e)(3c4d) sign - via {ROTATION_REFLECTION}"],
    "Delta1": [f"cert (1a)(2b5e)(3c4d) sign - via {ROTATION_REFLECTION}"],
}

EXPECTED = {
    "Gamma": (UNCLAIMED, "D5", "pentagram drawing; the rotation and the turn-over give all of D5"),
    "Gamma1": (UNCLAIMED, "Z5", "Gamma with coherently directed 8_17 on the outer pentagon"),
    "Gamma2": (UNCLAIMED, "Z2", "Gamma with 4_1 on edges 15 and 12"),
    "Lambda": (UNCLAIMED, "D3", "trefoil 9-cycle around vertex 3"),
    "Lambda1": (UNCLAIMED, "Z3", "Lambda with coherently directed 8_17 on a1, cb, 5d"),
    "Delta": ("F20", UNCLAIMED, "Hopf-linked 5-cycles in S^3 with glide and rotation-reflection"),
    "Delta1": ("Z4", UNCLAIMED, "Delta with 4_1 on 1a and opposite trefoils on the two circles"),
}


def generate_corpus() -> dict[str, str]:
    """Every corpus file, keyed by file name, regenerated from the drawings."""
    from .reconstruct import build_delta, build_gamma, build_lambda

    bases = {"Gamma": build_gamma(), "Lambda": build_lambda(), "Delta": build_delta()}
    diagrams = {**bases, **_derived(bases)}
    files = {}
    index = ["# entry <name> full <group|unclaimed> op <group|unclaimed> anchor <text>"]
    for name in ENTRY_NAMES:
        stem = name.lower()
        files[f"{stem}.emb"] = serialize(diagrams[name])
        files[f"{stem}.cert"] = "\n".join(CERTIFICATES[name]) + "\n"
        full, op, anchor = EXPECTED[name]
        index.append(f"entry {name} full {full} op {op} anchor {anchor}")
    files["index.txt"] = "\n".join(index) + "\n"
    return files


def write_corpus(directory: Path) -> None:
    directory.mkdir(parents=True, exist_ok=True)
    for fname, text in generate_corpus().items():
        (directory / fname).write_text(text)


# -- loading ------------------------------------------------------------------------------------


def default_corpus_dir():
    return resources.files("petersen_tsg").joinpath("data/corpus")


def _read_index(text: str) -> list[tuple[str, str, str, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        if len(line) < 8 or line[0] != "entry" or line[2] != "full" or line[4] != "op" or line[6] != "anchor":
            raise CorpusCorrupt(f"index.txt line {lineno}: malformed entry")
        for value in (line[3], line[5]):
            if value != UNCLAIMED and value not in {g.value for g in GroupName}:
                raise CorpusCorrupt(f"index.txt line {lineno}: unknown group {value}")
        out.append((line[1], line[3], line[5], " ".join(line[7:])))
    return out


def load_corpus(directory=None) -> list[CorpusEntry]:
    base = Path(directory) if directory is not None else default_corpus_dir()
    try:
        index = _read_index(base.joinpath("index.txt").read_text())
    except OSError as exc:
        raise CorpusCorrupt(f"cannot read corpus index: {exc}") from exc
    entries = []
    for name, full, op, anchor in index:
        fname = f"{name.lower()}.emb"
        try:
            diagram = parse_embedding(base.joinpath(fname).read_text())
            labels = kneser_labels(diagram)
            certs = parse_certificates(base.joinpath(f"{name.lower()}.cert").read_text(), labels)
        except (OSError, DiagramSyntaxError, DiagramValidationError, NotPetersen, ValueError) as exc:
            raise CorpusCorrupt(f"{fname}: {exc}") from exc
        entries.append(CorpusEntry(name, diagram, tuple(certs), {"full": full, "op": op}, anchor, fname))
    return entries
