import io
import os

import pytest

from noloopwb.cli import (
    export_structure_graph,
    parse_algebra_file,
    parse_chain_file,
    serialize_presentation,
    structure_graph,
)
from noloopwb.cli.main import run_command
from noloopwb.config import WorkbenchConfig
from noloopwb.exceptions import ParseError
from noloopwb.homology import projective


def corpus(name):
    return os.path.join(WorkbenchConfig.CORPUS_DIR, name)


def run(*argv):
    stream = io.StringIO()
    code = run_command(list(argv), stream=stream)
    return code, stream.getvalue()


LOOP_FILE = """noloopwb/1
# a comment
[meta]
name: loop
[field]
prime 3
[vertices]
x
[arrows]
alpha: x -> x
[relations]
zero: alpha.alpha.alpha
[bound]
3
"""


def test_parse_algebra_file():
    p = parse_algebra_file(LOOP_FILE)
    assert p.name == "loop"
    assert p.field.characteristic == 3
    assert p.bound == 3
    assert [m.path.label for m in p.monomials] == ["alpha.alpha.alpha"]


def test_serialized_presentation_parses_back():
    p = parse_algebra_file(LOOP_FILE)
    assert parse_algebra_file(serialize_presentation(p)) == p


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError) as e:
        parse_algebra_file("hello\n")
    assert e.value.line == 1
    broken = LOOP_FILE.replace("[field]", "[fields]")
    with pytest.raises(ParseError) as e:
        parse_algebra_file(broken)
    assert e.value.line == 5


def test_parse_chain_file():
    with open(corpus("example1.chn"), encoding="utf-8") as f:
        terms = parse_chain_file(f.read())
    assert terms == [["e_x"], ["alpha", "gamma1"], ["alpha.alpha"], ["0"]]


def test_structure_graph_of_uniserial_projective(loopnil3):
    g = structure_graph(projective(loopnil3, "x"))
    assert list(g.nodes) == ["e_x", "alpha", "alpha.alpha"]
    assert sorted((u, v) for u, v in g.edges()) == [("alpha", "alpha.alpha"), ("e_x", "alpha")]
    dot = export_structure_graph(projective(loopnil3, "x"))
    assert dot.startswith("digraph")
    assert "e_x -> alpha" in dot


def test_basis_command():
    code, out = run("basis", corpus("a2.alg"))
    assert code == 0
    assert "dimension: 3" in out


def test_pd_command_and_results_file(tmp_path):
    results = tmp_path / "results.txt"
    code, out = run("--results", str(results), "pd", corpus("loopnil2.alg"), "--simple", "x", "--depth", "4")
    assert code == 0
    assert "pd(S_x) = Exceeds(4)" in out
    record = results.read_text(encoding="utf-8")
    assert "command=pd" in record
    assert "outcome=exceeds" in record


def test_projective_command_writes_dot(tmp_path):
    target = tmp_path / "px.dot"
    code, _ = run("projective", corpus("loopnil3.alg"), "--vertex", "x", "--graph", str(target))
    assert code == 0
    assert target.read_text(encoding="utf-8").startswith("digraph")


def test_filtration_commands():
    code, out = run(
        "filtration", "verify", corpus("example1.alg"), "--vertex", "x",
        "--chain", corpus("example1.chn"), "--depth", "4",
    )
    assert code == 0
    assert "verdict: Inconclusive(4)" in out

    code, out = run("filtration", "search", corpus("loopnil2.alg"), "--vertex", "x", "--depth", "4")
    assert code == 0
    assert out.strip().endswith("none")


def test_cleave_command():
    code, out = run("cleave", corpus("l34-witness.alg"), "--diagram", corpus("l34.dgm"))
    assert code == 0
    assert "representation-infinite" in out

    code, _ = run("cleave", corpus("example1.alg"), "--diagram", corpus("example1.dgm"))
    assert code == 1


def test_certify_command():
    code, out = run("certify", corpus("loopnil2.alg"), "--vertex", "x", "--depth", "4", "--budget", "50")
    assert code == 0
    assert "status: pass" in out


def test_unknown_vertex_fails():
    code, out = run("projective", corpus("a2.alg"), "--vertex", "q")
    assert code == 1
    assert out.startswith("failed:")


def test_usage_errors():
    assert run("basis", corpus("missing.alg"))[0] == 2
    assert run()[0] == 2
    assert run("pd", corpus("a2.alg"))[0] == 2


def test_corpus_list():
    code, out = run("corpus", "list")
    assert code == 0
    assert "loopnil2: loopnil2.alg" in out
