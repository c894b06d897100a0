import json

import pytest

from ecclab.cli import main
from ecclab.families import path, star
from ecclab.serialize import GraphDocument, load_graph, save_graph

# E(P_8) is the double star with centers 0 and 7; E(P_9) is the triangle
# {0,4,8} with three pendants on each of 0 and 8. Golden DOT renderings.
GOLDEN_E_P8_DOT = (
    "graph {\n"
    + "".join(f'  {v} [label="{v}"];\n' for v in range(8))
    + "  0 -- 4;\n  0 -- 5;\n  0 -- 6;\n  0 -- 7;\n"
    + "  1 -- 7;\n  2 -- 7;\n  3 -- 7;\n}\n"
)
GOLDEN_E_P9_DOT = (
    "graph {\n"
    + "".join(f'  {v} [label="{v}"];\n' for v in range(9))
    + "  0 -- 4;\n  0 -- 5;\n  0 -- 6;\n  0 -- 7;\n  0 -- 8;\n"
    + "  1 -- 8;\n  2 -- 8;\n  3 -- 8;\n  4 -- 8;\n}\n"
)


def write_doc(tmp_path, name, graph):
    p = tmp_path / name
    save_graph(GraphDocument(graph=graph), str(p))
    return str(p)


def test_gen_writes_document(tmp_path):
    out = tmp_path / "p8.json"
    assert main(["gen", "path", "8", "-o", str(out)]) == 0
    doc = load_graph(str(out))
    assert doc.graph == path(8)
    assert doc.name == "path(8)"


def test_gen_to_stdout(capsys):
    assert main(["gen", "grid", "3", "5"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["num_vertices"] == 15


def test_gen_random_tree_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["gen", "random-tree", "12", "--seed", "7", "-o", str(a)]) == 0
    assert main(["gen", "random-tree", "12", "--seed", "7", "-o", str(b)]) == 0
    assert load_graph(str(a)).graph == load_graph(str(b)).graph


def test_gen_bad_params_exit_2(capsys):
    assert main(["gen", "cycle", "2"]) == 2
    assert "error" in capsys.readouterr().err
    assert main(["gen", "random-tree", "3", "4"]) == 2


def test_ecc_dot_golden_files(tmp_path, capsys):
    p8 = write_doc(tmp_path, "p8.json", path(8))
    assert main(["ecc", p8, "--graph", "--format", "dot"]) == 0
    assert capsys.readouterr().out == GOLDEN_E_P8_DOT
    p9 = write_doc(tmp_path, "p9.json", path(9))
    assert main(["ecc", p9, "--graph", "--format", "dot"]) == 0
    assert capsys.readouterr().out == GOLDEN_E_P9_DOT


def test_ecc_c6_matching(tmp_path, capsys):
    from ecclab.families import cycle

    c6 = write_doc(tmp_path, "c6.json", cycle(6))
    assert main(["ecc", c6]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["edges"] == [[0, 3], [1, 4], [2, 5]]


def test_ecc_matrix_decimal_strings(tmp_path, capsys):
    s3 = write_doc(tmp_path, "s3.json", star(3))
    assert main(["ecc", s3, "--matrix"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["rows"] == 4
    assert data["entries"][0] == ["0", "1", "1", "1"]
    assert data["entries"][1] == ["1", "0", "2", "2"]


def test_ecc_disconnected_exit_2(tmp_path, capsys):
    from ecclab.graphs import build_graph

    bad = tmp_path / "bad.json"
    save_graph(GraphDocument(graph=build_graph(4, [(0, 1), (2, 3)])), str(bad))
    assert main(["ecc", str(bad)]) == 2
    assert "error" in capsys.readouterr().err


def test_det_exact_output(tmp_path, capsys):
    s3 = write_doc(tmp_path, "s3.json", star(3))
    assert main(["det", s3]) == 0
    assert capsys.readouterr().out == "-12\n"
    p2 = write_doc(tmp_path, "p2.json", path(2))
    assert main(["det", p2]) == 0
    assert capsys.readouterr().out == "-1\n"


def test_det_p5_p2_singular(tmp_path, capsys):
    from ecclab.products import cartesian_product

    product, _ = cartesian_product([path(5), path(2)])
    doc = write_doc(tmp_path, "prod.json", product)
    assert main(["det", doc]) == 0
    assert capsys.readouterr().out == "0\n"


def test_product_cartesian(tmp_path, capsys):
    p3 = write_doc(tmp_path, "p3.json", path(3))
    p5 = write_doc(tmp_path, "p5.json", path(5))
    assert main(["product", p3, p5]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["num_vertices"] == 15
    assert "row-major" in data["name"]


def test_product_kronecker_arity(tmp_path, capsys):
    p3 = write_doc(tmp_path, "p3.json", path(3))
    assert main(["product", p3, p3, p3, "--kind", "kronecker"]) == 2
    capsys.readouterr()


def test_check_suite_pass(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert main(["check", "cncn-iso"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("PASS cncn-iso")
    report = json.loads((tmp_path / "cncn-iso-report.json").read_text())
    assert report["fail_count"] == 0
    assert report["first_failure_witness"] is None


def test_check_report_path_flag(tmp_path, capsys):
    report_path = tmp_path / "r.json"
    assert main(["check", "grid", "--report", str(report_path)]) == 0
    capsys.readouterr()
    assert json.loads(report_path.read_text())["check_name"] == "grid"


def test_check_unknown_suite_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["check", "no-such-suite"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_missing_input_exit_2(capsys):
    assert main(["ecc", "/nonexistent/file.json"]) == 2
    capsys.readouterr()
