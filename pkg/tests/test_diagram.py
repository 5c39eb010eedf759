from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from petersen_tsg.diagram import (
    Decoration,
    DiagramSyntaxError,
    DiagramValidationError,
    KnotDiagram,
    NotACycle,
    NotDisjoint,
    cycle_diagram,
    diagram_symmetries,
    linking_number,
    parse_embedding,
    parse_records,
    serialize,
    validate,
)
from petersen_tsg.knots import identify_diagram, jones, kauffman_bracket
from petersen_tsg.engine import kneser_labels
from petersen_tsg.petersen import all_cycles, disjoint_five_cycle_pairs

PENTAGON = """\
graph v 1 2 3 4 5
graph e 12 1 2
graph e 23 2 3
graph e 34 3 4
graph e 45 4 5
graph e 15 1 5
vertex 1 : 12.0 15.0
vertex 2 : 23.0 12.1
vertex 3 : 34.0 23.1
vertex 4 : 45.0 34.1
vertex 5 : 15.1 45.1
arc 12.0 -- 12.1 on 12
arc 23.0 -- 23.1 on 23
arc 34.0 -- 34.1 on 34
arc 45.0 -- 45.1 on 45
arc 15.0 -- 15.1 on 15
"""


def test_pentagon_has_no_crossings():
    d = parse_embedding(PENTAGON)
    assert not d.crossings
    assert validate(d) == []
    kd = cycle_diagram(d, ["1", "2", "3", "4", "5"])
    assert kd.n_crossings == 0 and jones(kd) == 1


@pytest.mark.parametrize("name", ["gamma", "gamma1", "lambda", "lambda1", "delta", "delta1"])
def test_serialize_round_trip(corpus_dir, name):
    text = (corpus_dir / f"{name}.emb").read_text()
    d = parse_embedding(text)
    assert serialize(d) == text
    assert parse_embedding(serialize(d)) == d


def test_serialize_is_independent_of_record_order():
    lines = PENTAGON.splitlines()
    shuffled = "\n".join(lines[:6] + lines[6:][::-1]) + "\n"
    assert serialize(parse_embedding(shuffled)) == serialize(parse_embedding(PENTAGON))


@pytest.mark.parametrize("text, line, column", [
    ("graph v 1 2\nbogus 1\n", 2, 1),
    ("graph v 1 2\ngraph e 12 1\n", 2, 1),
    ("graph v 1 1\n", 1, 11),
    ("graph v 1 2\ngraph e 12 1 2\nvertex 1 : 12.x\n", 3, 12),
    ("graph v 1 2\ngraph e 12 1 2\ndecorate 12 knot 3_1 dir up sign +\n", 3, 26),
])
def test_syntax_errors_carry_position(text, line, column):
    with pytest.raises(DiagramSyntaxError) as info:
        parse_records(text)
    assert (info.value.line, info.value.column) == (line, column)


def _with_line_replaced(text, old, new):
    assert old in text
    return text.replace(old, new, 1)


def test_undeclared_dart(corpus_dir):
    text = _with_line_replaced((corpus_dir / "gamma.emb").read_text(), "vertex 1 : 1a.0", "vertex 1 : zz.0")
    with pytest.raises(DiagramValidationError) as info:
        parse_embedding(text)
    assert any("undeclared dart" in v for v in info.value.violations)


def test_dart_reuse(corpus_dir):
    text = _with_line_replaced((corpus_dir / "gamma.emb").read_text(), "vertex 2 : 2c.0 23.0 12.1", "vertex 2 : 2c.0 23.0 12.0")
    with pytest.raises(DiagramValidationError) as info:
        parse_embedding(text)
    assert any("dart reuse" in v for v in info.value.violations)


def test_misordered_rotation_is_non_planar(corpus_dir):
    text = _with_line_replaced((corpus_dir / "gamma.emb").read_text(), "vertex 1 : 1a.0 12.0 15.0", "vertex 1 : 12.0 1a.0 15.0")
    with pytest.raises(DiagramValidationError) as info:
        parse_embedding(text)
    assert any("non-planar map" in v for v in info.value.violations)


def test_unknown_decoration_rejected():
    with pytest.raises(DiagramValidationError) as info:
        parse_embedding(PENTAGON + "decorate 12 knot 7_4 dir fwd sign +\n")
    assert any("7_4" in v for v in info.value.violations)


def test_knot_diagram_validation():
    with pytest.raises(ValueError):
        KnotDiagram(((1, 2, 3, 4),))
    assert KnotDiagram(((1, 1, 2, 2),)).writhe == 1


# -- cycle diagrams ----------------------------------------------------------------------------


def test_gamma_outer_cycle_is_unknot(corpus):
    kd = cycle_diagram(corpus["Gamma"].diagram, list("12345"))
    assert str(identify_diagram(kd)) == "unknot"


def test_gamma_inner_cycle_is_5_1(corpus):
    kd = cycle_diagram(corpus["Gamma"].diagram, list("abcde"))
    assert kd.n_crossings == 5
    assert str(identify_diagram(kd)).startswith("5_1")


def test_lambda_nine_cycle_is_trefoil(corpus):
    kd = cycle_diagram(corpus["Lambda"].diagram, ["1", "5", "4", "b", "a", "e", "d", "c", "2"])
    assert str(identify_diagram(kd)).startswith("3_1")


def test_cycle_diagram_rejects_non_cycles(corpus):
    d = corpus["Gamma"].diagram
    with pytest.raises(NotACycle):
        cycle_diagram(d, ["1", "2"])
    with pytest.raises(NotACycle):
        cycle_diagram(d, ["1", "3", "5"])


def test_reversing_a_cycle_keeps_its_jones(corpus):
    d = corpus["Gamma"].diagram
    for names in (list("abcde"), ["1", "a", "b", "4", "5"]):
        assert jones(cycle_diagram(d, names)) == jones(cycle_diagram(d, names[::-1]))


# -- linking numbers ---------------------------------------------------------------------------


def test_gamma_pentagons_unlinked(corpus):
    assert linking_number(corpus["Gamma"].diagram, list("12345"), list("abcde")) == 0


def test_delta_circles_hopf_linked(corpus):
    assert abs(linking_number(corpus["Delta"].diagram, list("12345"), list("abcde"))) == 1


def test_linking_symmetric_and_orientation_sensitive(corpus):
    d = corpus["Delta"].diagram
    x, y = list("12345"), list("abcde")
    lk = linking_number(d, x, y)
    assert linking_number(d, y, x) == lk
    assert linking_number(d, x[::-1], y) == -lk
    assert linking_number(d, x[::-1], y[::-1]) == lk


def test_linking_rejects_shared_vertices(corpus):
    with pytest.raises(NotDisjoint):
        linking_number(corpus["Gamma"].diagram, list("12345"), ["1", "a", "b", "4", "5"])


# -- symmetries --------------------------------------------------------------------------------


def _maps(d):
    return {(tuple(sorted(s.vertex_map.items())), s.sign) for s in diagram_symmetries(d)}


def _vertex_map(cycles):
    out = {}
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            out[a] = b
    return out


def _has(d, cycles, sign):
    vm = {v: v for v in d.vertices} | _vertex_map(cycles)
    return (tuple(sorted(vm.items())), sign) in _maps(d)


def test_gamma_symmetries_include_rotation_and_turnover(corpus):
    d = corpus["Gamma"].diagram
    assert _has(d, [], 1)
    assert _has(d, ["12345", "acebd"], 1)
    assert _has(d, ["25", "34", "be", "cd"], 1)
    assert len(diagram_symmetries(d)) == 10


def test_lambda_symmetries(corpus):
    d = corpus["Lambda"].diagram
    assert _has(d, ["24e", "c5a", "bd1"], 1)
    assert _has(d, ["1c", "ab", "e4", "d5"], 1)
    assert len(diagram_symmetries(d)) == 6


def test_decorations_cut_symmetries(corpus):
    assert len(diagram_symmetries(corpus["Gamma1"].diagram)) == 5
    assert len(diagram_symmetries(corpus["Gamma2"].diagram)) == 2
    assert len(diagram_symmetries(corpus["Lambda1"].diagram)) == 3


def test_symmetries_preserve_cycle_brackets_and_linking(corpus):
    for name in ("Gamma", "Lambda", "Delta"):
        d = corpus[name].diagram
        labels = kneser_labels(d)
        cycles = [[labels[v] for v in c.vertices] for c in all_cycles()]
        pairs = [
            ([labels[v] for v in p.first.vertices], [labels[v] for v in p.second.vertices])
            for p in disjoint_five_cycle_pairs()
        ]
        for sym in diagram_symmetries(d):
            for names in cycles:
                image = [sym.vertex_map[v] for v in names]
                b1 = kauffman_bracket(cycle_diagram(d, names))
                b2 = kauffman_bracket(cycle_diagram(d, image))
                assert b2 == (b1 if sym.sign > 0 else b1.invert_variable())
            for x, y in pairs:
                lk = linking_number(d, x, y)
                img = linking_number(d, [sym.vertex_map[v] for v in x], [sym.vertex_map[v] for v in y])
                assert abs(img) == abs(lk)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 4), st.integers(0, 4), st.booleans(), st.booleans())
def test_delta_linking_under_rotation_and_reversal(corpus, i, j, rx, ry):
    d = corpus["Delta"].diagram
    x, y = list("12345"), list("abcde")
    lk = linking_number(d, x, y)
    x = x[i:] + x[:i]
    y = y[j:] + y[:j]
    if rx:
        x = x[::-1]
    if ry:
        y = y[::-1]
    assert linking_number(d, x, y) == lk * (-1 if rx else 1) * (-1 if ry else 1)


def test_decoration_lines():
    assert Decoration("3_1", "fwd", 1).line("12") == "decorate 12 knot 3_1 dir fwd sign +"
    with pytest.raises(ValueError):
        Decoration("3_1", "up", 1)
    assert Counter(Decoration("3_1", "fwd", 1) for _ in range(2))[Decoration("3_1", "fwd", 1)] == 2
