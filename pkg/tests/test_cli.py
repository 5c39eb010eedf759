import shutil

import pytest

from petersen_tsg.cli import run


def out_of(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_lemma(capsys):
    code, out, _ = out_of(capsys, ["verify-lemma"])
    assert code == 0
    assert out.splitlines()[0] == "6 disjoint 5-cycle pairs; pointwise stabilizers trivial"


def test_verify_lemma_machine(capsys):
    assert out_of(capsys, ["verify-lemma", "--format", "machine"])[1] == "lemma pairs=6 listed=1 pointwise_trivial=1 aut=120\n"


def test_cycles(capsys):
    code, out, _ = out_of(capsys, ["cycles", "--format", "machine"])
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "cycles len5=12 len6=10 len8=15 len9=20 total=57"
    assert len([ln for ln in lines if ln.startswith("pair ")]) == 6


def test_analyze_gamma_names_d5(capsys, corpus_dir):
    code, out, _ = out_of(capsys, ["analyze", str(corpus_dir / "gamma.emb")])
    assert code == 0
    assert "D5" in out
    assert "abcde: 5_1" in out


def test_analyze_with_certificates(capsys, corpus_dir):
    code, out, _ = out_of(capsys, [
        "analyze", str(corpus_dir / "delta.emb"), "--certificates", str(corpus_dir / "delta.cert"), "--format", "machine",
    ])
    assert code == 0
    assert out == "tsg full=F20 op=D5 exact_full=1 exact_op=1 mod2=1\n"


def test_analyze_missing_file(capsys):
    code, _, err = out_of(capsys, ["analyze", "/nonexistent"])
    assert code == 2
    assert "/nonexistent" in err


def test_analyze_reports_line_and_column(capsys, tmp_path):
    bad = tmp_path / "bad.emb"
    bad.write_text("graph v 1 2\ngraph q\n")
    code, _, err = out_of(capsys, ["analyze", str(bad)])
    assert code == 2
    assert f"{bad}:2:7:" in err


def test_analyze_non_petersen(capsys, tmp_path):
    square = tmp_path / "square.emb"
    square.write_text(
        "graph v 1 2 3\ngraph e 12 1 2\ngraph e 23 2 3\ngraph e 13 1 3\n"
        "vertex 1 : 12.0 13.0\nvertex 2 : 23.0 12.1\nvertex 3 : 13.1 23.1\n"
        "arc 12.0 -- 12.1 on 12\narc 23.0 -- 23.1 on 23\narc 13.0 -- 13.1 on 13\n"
    )
    assert out_of(capsys, ["analyze", str(square)])[0] == 2
    code, out, _ = out_of(capsys, ["knot-id", str(square), "--format", "machine"])
    assert code == 0
    assert out == "knot id=unknot crossings=0 det=1\n"


def test_invalid_certificate_is_input_error(capsys, corpus_dir, tmp_path):
    cert = tmp_path / "bad.cert"
    cert.write_text("cert (12345)(acebd) sign + via diagram-symmetry\n")
    code, _, err = out_of(capsys, ["analyze", str(corpus_dir / "delta.emb"), "--certificates", str(cert)])
    assert code == 2
    assert "not a symmetry of the drawing" in err


def test_unknown_command_and_flag():
    assert run(["frobnicate"]) == 2
    assert run(["cycles", "--colour"]) == 2
    assert run(["cycles", "--format", "xml"]) == 2


def test_knot_id_table_files(capsys):
    from importlib import resources

    base = resources.files("petersen_tsg").joinpath("data/knots")
    code, out, _ = out_of(capsys, ["knot-id", str(base.joinpath("8_17.emb")), "--format", "machine"])
    assert code == 0
    assert out == "knot id=8_17+ crossings=8 det=37\n"


def test_catalog(capsys, corpus_dir):
    code, out, _ = out_of(capsys, ["catalog", "--format", "machine", "--data", str(corpus_dir)])
    assert code == 0
    assert out == "catalog realizable=Trivial,Z2,Z3,Z4,Z5,D3,D5,F20 positive=Trivial,Z2,Z3,Z5,D3,D5\n"


def test_catalog_bad_data_dir(capsys, tmp_path):
    assert out_of(capsys, ["catalog", "--data", str(tmp_path / "missing")])[0] == 2


def test_reproduce_machine_is_stable(capsys, corpus_dir):
    first = out_of(capsys, ["reproduce", "--format", "machine", "--data", str(corpus_dir)])
    second = out_of(capsys, ["reproduce", "--format", "machine", "--data", str(corpus_dir)])
    assert first == second
    assert first[0] == 0
    lines = first[1].splitlines()
    assert lines[lines.index("entry Gamma1") + 1].startswith("tsg full=Z5 op=Z5")


def test_reproduce_fails_on_wrong_expectation(capsys, corpus_dir, tmp_path):
    d = tmp_path / "corpus"
    shutil.copytree(corpus_dir, d)
    index = (d / "index.txt").read_text().replace("entry Lambda full unclaimed op D3", "entry Lambda full unclaimed op Z3")
    (d / "index.txt").write_text(index)
    code, _, err = out_of(capsys, ["reproduce", "--data", str(d)])
    assert code == 1
    assert "Lambda op" in err


@pytest.mark.parametrize("argv", [["cycles"], ["verify-lemma"], ["catalog"]])
def test_text_output_is_deterministic(capsys, argv):
    assert out_of(capsys, argv) == out_of(capsys, argv)
