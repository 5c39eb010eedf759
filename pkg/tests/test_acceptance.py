"""Acceptance suite: one check per criterion, each printing a PASS/FAIL line.

Run under pytest, or directly with ``python tests/test_acceptance.py``.
"""

import sys
import time

import pytest

from petersen_tsg.corpus import load_corpus
from petersen_tsg.diagram import diagram_symmetries, linking_number, parse_embedding, serialize
from petersen_tsg.engine import (
    classify,
    filter_classes,
    invariant_profile,
    kneser_labels,
    mod2_linking_check,
    realizability_catalog,
    signed_compatible_group,
)
from petersen_tsg.groups import GroupName, SignedAutomorphism, identity, is_closed_signed, subgroup_classes, symmetric_group
from petersen_tsg.knots import BRAID_WORDS, braid_closure, generate_table_files, invariants, jones, knot_from_embedding
from petersen_tsg.petersen import (
    Cycle,
    automorphism_group,
    brute_force_automorphisms,
    build_petersen,
    disjoint_five_cycle_pairs,
    enumerate_cycles,
    is_involution,
    s5_correspondence,
    stabilizer,
)

# the six 5-cycles through the vertex {1,2}, each with its disjoint partner in the pair list
THROUGH_12 = (
    ("12", "34", "15", "24", "35"),
    ("12", "34", "15", "23", "45"),
    ("12", "34", "25", "13", "45"),
    ("12", "34", "25", "14", "35"),
    ("12", "35", "14", "23", "45"),
    ("12", "35", "24", "13", "45"),
)

NON_TRIVIAL_NAMES = {"Z2", "Z3", "Z4", "Z5", "Z6", "D2", "D3", "D4", "D5", "D6", "A4", "F20", "S4", "A5", "S5"}
EXCLUDED = {"S5", "S4", "A5", "A4", "D6", "D4", "D2", "Z6"}


def criterion_1():
    p = build_petersen()
    pairs = disjoint_five_cycle_pairs()
    assert len(pairs) == 6
    in_pairs = {c for pair in pairs for c in pair.cycles}
    listed = {Cycle(tuple(p.index(tuple(int(ch) for ch in lab)) for lab in row)) for row in THROUGH_12}
    assert len(listed) == 6 and listed <= in_pairs
    fives = enumerate_cycles()[5]
    assert len(fives) == 12
    assert all(stabilizer(c, "pointwise").order == 1 for c in fives)


def criterion_2():
    aut = automorphism_group()
    assert aut.order == 120
    assert len(set(s5_correspondence())) == 120
    brute = {tuple(m[v] for v in range(10)) for m in brute_force_automorphisms(build_petersen().adjacency())}
    assert brute == set(aut.elements)


def criterion_3():
    assert {str(g) for g in subgroup_classes(symmetric_group(5))} == NON_TRIVIAL_NAMES | {"Trivial"}


def criterion_4():
    table = {}
    for fname, text in generate_table_files().items():
        table[fname[:-4]] = knot_from_embedding(parse_embedding(text))
    inv = {name: invariants(kd) for name, kd in table.items()}
    assert {n: i.determinant for n, i in inv.items()} == {"3_1": 3, "4_1": 5, "5_1": 5, "8_17": 37}
    j31 = inv["3_1"].jones
    assert jones(table["3_1"].mirror()) == j31.invert_variable() != j31
    assert inv["4_1"].jones.is_palindromic()
    shift = lambda w, k: tuple(g + k if g > 0 else g - k for g in w)  # noqa: E731
    for a in BRAID_WORDS:
        for b in BRAID_WORDS:
            wa = BRAID_WORDS[a]
            word = wa + shift(BRAID_WORDS[b], max(abs(g) for g in wa))
            s = invariants(braid_closure(word))
            assert s.jones == inv[a].jones * inv[b].jones
            assert s.alexander == inv[a].alexander * inv[b].alexander


def criterion_5():
    entries = load_corpus()
    assert len(entries) == 7
    assert all(mod2_linking_check(invariant_profile(e.diagram)) for e in entries)


def criterion_6():
    every = {g for g in GroupName if g != GroupName.UNRECOGNIZED}
    assert len(every) == 16
    full, op = filter_classes()
    assert {str(g) for g in every - full} == EXCLUDED
    assert {str(g) for g in every - op} == EXCLUDED | {"F20", "Z4"}
    realizable, positive = realizability_catalog()
    assert {str(g) for g in every - realizable} == EXCLUDED
    assert {str(g) for g in every - positive} == EXCLUDED | {"F20", "Z4"}


def criterion_7():
    op_claims = {"Gamma": "D5", "Gamma1": "Z5", "Gamma2": "Z2", "Lambda": "D3", "Lambda1": "Z3"}
    full_claims = {"Delta": "F20", "Delta1": "Z4"}
    for entry in load_corpus():
        report = classify(entry.diagram, entry.certificates)
        if entry.name in op_claims:
            assert report.exact_op and str(report.op_name) == op_claims[entry.name], entry.name
        else:
            assert report.exact_full and str(report.full_name) == full_claims[entry.name], entry.name


def criterion_8():
    group = automorphism_group()
    involutions = [g for g in group if is_involution(g)]
    assert len(group.elements) == 120
    for pair in disjoint_five_cycle_pairs():
        x, y = pair.cycles
        fixing = [g for g in involutions if x.image(g) == x and y.image(g) == y]
        by_fixed = {}
        for g in fixing:
            fx = [v for v in x.vertices if g[v] == v]
            fy = [v for v in y.vertices if g[v] == v]
            assert len(fx) == 1 and len(fy) == 1
            assert by_fixed.setdefault((fx[0], fy[0]), g) == g


def criterion_9():
    for entry in load_corpus():
        d = entry.diagram
        g = signed_compatible_group(invariant_profile(d))
        assert SignedAutomorphism(identity(10), 1) in g and is_closed_signed(g)
        assert parse_embedding(serialize(d)) == d
        text = _corpus_file(entry.file).read_text()
        assert serialize(parse_embedding(text)) == text
        labels = kneser_labels(d)
        pairs = [([labels[v] for v in p.first.vertices], [labels[v] for v in p.second.vertices]) for p in disjoint_five_cycle_pairs()]
        for sym in diagram_symmetries(d):
            for x, y in pairs:
                img = linking_number(d, [sym.vertex_map[v] for v in x], [sym.vertex_map[v] for v in y])
                assert abs(img) == abs(linking_number(d, x, y))
    stress = braid_closure((1, -2) * 11)
    assert stress.n_crossings == 22
    start = time.perf_counter()
    jones(stress)
    assert time.perf_counter() - start < 10


def _corpus_file(fname):
    from petersen_tsg.corpus import default_corpus_dir

    return default_corpus_dir().joinpath(fname)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8, criterion_9]


def check(n):
    try:
        CRITERIA[n - 1]()
    except AssertionError as exc:
        return False, str(exc)
    return True, ""


@pytest.mark.parametrize("n", range(1, len(CRITERIA) + 1))
def test_criterion(n, capsys):
    ok, detail = check(n)
    with capsys.disabled():
        print(f"\ncriterion {n}: {'PASS' if ok else 'FAIL'}{' ' + detail if detail else ''}")
    assert ok, detail


def main():
    start = time.perf_counter()
    failed = 0
    for n in range(1, len(CRITERIA) + 1):
        ok, detail = check(n)
        failed += not ok
        print(f"criterion {n}: {'PASS' if ok else 'FAIL'}{' ' + detail if detail else ''}")
    print(f"total {time.perf_counter() - start:.1f}s")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
