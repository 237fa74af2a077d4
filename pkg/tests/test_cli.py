import json

import pytest
from typer.testing import CliRunner

from cli import app
from core.decomposition import decompose
from core.formats import format_edge_list, format_tree, parse_edge_list
from core.generators import binary_tree, complete, subdivided_complete
from core.minors import MinorWitness, verify_minor
from core.schemas import CheckSummary, DecompositionDoc, FamilyDoc, WitnessDoc

runner = CliRunner()


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ("TGRAPH_MAX_EXACT_CHROMATIC", "TGRAPH_MAX_EXACT_MINOR", "TGRAPH_MAX_MINOR_K", "TGRAPH_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def edge_file(tmp_path):
    def write(g, name="graph.txt"):
        path = tmp_path / name
        path.write_text(format_edge_list(g))
        return str(path)

    return write


def test_decompose_path_prints_chain():
    result = runner.invoke(app, ["decompose", "gen:path:3"])
    assert result.exit_code == 0
    data = json.loads(result.stdout)
    assert data["chain"] is True
    assert [node["vertex"] for node in data["nodes"]] == [0, 1, 2]


def test_decompose_writes_dot(tmp_path):
    dot = tmp_path / "tg.dot"
    result = runner.invoke(app, ["decompose", "gen:complete:3", "--dot", str(dot)])
    assert result.exit_code == 0
    assert dot.read_text().startswith("digraph TG {")


def test_minor_finds_subdivided_k4():
    result = runner.invoke(app, ["minor", "gen:subdivided-complete:4", "--k", "4"])
    assert result.exit_code == 0
    witness = WitnessDoc.from_json(result.stdout).to_witness()
    assert verify_minor(subdivided_complete(4), witness)


def test_minor_prints_none():
    result = runner.invoke(app, ["minor", "gen:subdivided-complete:4", "--k", "5"])
    assert result.exit_code == 0
    assert result.stdout.strip() == "none"


def test_gen_prints_edge_list():
    result = runner.invoke(app, ["gen", "apex-cliques:2,3"])
    assert result.exit_code == 0
    g = parse_edge_list(result.stdout)
    assert g.n == 6
    assert g.edge_count == 9


def test_bad_generator_spec_exits_2():
    result = runner.invoke(app, ["gen", "gen:nope:3"])
    assert result.exit_code == 2
    assert "unknown generator family" in result.output


def test_malformed_edge_list_exits_2(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("0 1\n1 x\n")
    result = runner.invoke(app, ["analyze", str(path)])
    assert result.exit_code == 2
    assert "line 2" in result.output


def test_resource_guard_exits_3():
    result = runner.invoke(app, ["--max-exact-chromatic", "3", "color", "gen:complete:5"])
    assert result.exit_code == 3
    assert "max_exact_chromatic" in result.output


def test_guard_from_environment(monkeypatch):
    monkeypatch.setenv("TGRAPH_MAX_EXACT_MINOR", "4")
    result = runner.invoke(app, ["minor", "gen:complete:5", "--k", "3"])
    assert result.exit_code == 3


def test_analyze_text_and_json():
    text = runner.invoke(app, ["analyze", "gen:cycle:5"])
    assert text.exit_code == 0
    assert "chi <= height: holds" in text.stdout
    assert "decomposition height: 5" in text.stdout
    result = runner.invoke(app, ["analyze", "gen:cycle:5", "--json"])
    data = json.loads(result.stdout)
    assert data["chromatic"]["value"] == 3
    assert data["hadwiger"]["value"] == 3


def test_analyze_reports_bounds_instead_of_guard_exit():
    result = runner.invoke(app, ["analyze", "gen:apex-cliques:7,8"])
    assert result.exit_code == 0
    assert "hadwiger number: 9..11 (bound: K_10 exceeds max_minor_k=8)" in result.stdout
    assert "h <= height: undetermined" in result.stdout


def test_color_and_subdivide():
    color = json.loads(runner.invoke(app, ["color", "gen:cycle:5"]).stdout)
    assert color["count"] == 3
    subdivision = json.loads(runner.invoke(app, ["subdivide", "gen:complete:4"]).stdout)
    assert subdivision["m"] == 4


def test_check_passes():
    result = runner.invoke(app, ["check", "exhaustive:4"])
    assert result.exit_code == 0
    assert result.stdout.rstrip().endswith("PASS")
    assert "graphs: 10" in result.stdout


def test_check_corrupt_verifier_fails_with_dump():
    result = runner.invoke(app, ["check", "exhaustive:3", "--corrupt-verifier"])
    assert result.exit_code == 1
    assert "FAIL" in result.stdout
    assert "--- graph 1 [decomposition]" in result.stdout
    assert "n 2\n0 1" in result.stdout


def test_check_bad_corpus_exits_2():
    result = runner.invoke(app, ["check", "exhaustive:9"])
    assert result.exit_code == 2


def test_check_passes_workers_through(mocker):
    summary = CheckSummary(corpus="exhaustive:2", graphs=2, checks={}, failures=[])
    run = mocker.patch("cli.run_check", return_value=summary)
    result = runner.invoke(app, ["check", "exhaustive:2", "--workers", "4", "--json"])
    assert result.exit_code == 0
    assert run.call_args.kwargs["workers"] == 4
    assert run.call_args.kwargs["corrupt"] is False
    assert CheckSummary.from_json(result.stdout) == summary


def test_verify_accepts_and_rejects(tmp_path, edge_file, p3):
    source = edge_file(p3)
    doc = DecompositionDoc.from_decomposition(decompose(p3))
    good = tmp_path / "good.json"
    good.write_text(doc.to_json())
    result = runner.invoke(app, ["verify", source, str(good)])
    assert result.exit_code == 0
    assert json.loads(result.stdout)["passed"] is True

    data = json.loads(doc.to_json())
    data["nodes"][1]["vertex"], data["nodes"][2]["vertex"] = 2, 1
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    result = runner.invoke(app, ["verify", source, str(bad)])
    assert result.exit_code == 1
    checks = {c["name"]: c["passed"] for c in json.loads(result.stdout)["checks"]}
    assert not checks["vertex-in-cone"]


def test_verify_disconnected_cone_exits_1(tmp_path, edge_file, k13):
    data = json.loads(DecompositionDoc.from_decomposition(decompose(k13)).to_json())
    data["nodes"][2]["cone"] = [1, 2]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    result = runner.invoke(app, ["verify", edge_file(k13), str(bad)])
    assert result.exit_code == 1
    checks = {c["name"]: c["passed"] for c in json.loads(result.stdout)["checks"]}
    assert not checks["successor-rule"]
    assert not checks["consumption"]


def test_verify_invalid_json_exits_2(tmp_path, edge_file, p3):
    bad = tmp_path / "bad.json"
    bad.write_text('{"schema": 1}')
    result = runner.invoke(app, ["verify", edge_file(p3), str(bad)])
    assert result.exit_code == 2


def test_kurepa_command(tmp_path, edge_file, two_triangles_apex):
    family = FamilyDoc.from_family(3, [MinorWitness.of([{1}, {2}, {3}]), MinorWitness.of([{4}, {5}, {6}])])
    family_file = tmp_path / "family.json"
    family_file.write_text(family.to_json())
    result = runner.invoke(app, ["kurepa", edge_file(two_triangles_apex), str(family_file), "--chains"])
    assert result.exit_code == 0
    data = json.loads(result.stdout)
    assert data["verdict"] is True
    assert data["chains_distinct"] is True

    rejected = runner.invoke(app, ["kurepa", edge_file(complete(7), "k7.txt"), str(family_file)])
    assert rejected.exit_code == 1


def test_partition_color(tmp_path, edge_file, p4):
    partition = tmp_path / "partition.txt"
    partition.write_text("0 -1 0 1\n1 0 2 3\n")
    result = runner.invoke(app, ["partition-color", edge_file(p4), str(partition)])
    assert result.exit_code == 0
    assert json.loads(result.stdout)["colors"] == [0, 1, 2, 3]


def test_tree_stats(tmp_path):
    tree = tmp_path / "tree.txt"
    tree.write_text(format_tree(binary_tree(3)))
    result = runner.invoke(app, ["tree-stats", str(tree)])
    assert result.exit_code == 0
    data = json.loads(result.stdout)
    assert (data["width"], data["height"], data["branches"]) == (4, 3, 4)
    assert data["level_sizes"] == [1, 2, 4]
