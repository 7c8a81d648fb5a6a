import json

import pytest

from dualtrees.cli import RunConfig, main, parse_config, run
from dualtrees.io import read_diagram, read_record, read_sidecar


def test_construct_writes_diagram_and_sidecar(tmp_path):

    out = tmp_path / "delta_1.json"

    assert main(["construct", "--n", "1", "--output", str(out)]) == 0

    d = read_diagram(out)
    meta = read_sidecar(tmp_path / "delta_1.meta.json")

    assert meta["p_n"] == 9
    assert d.boundary_length == meta["boundary_length"] == 4

    # construction is deterministic
    again = tmp_path / "again.json"

    assert main(["construct", "--n", "1", "--output", str(again)]) == 0
    assert out.read_bytes() == again.read_bytes()


def test_construct_json_on_stdout(tmp_path, capsys):

    assert main(["construct", "--n", "2", "--format", "json"]) == 0

    text = capsys.readouterr().out
    data = json.loads(text)

    assert data["metadata"]["p_n"] == 48
    assert data["metadata"]["lambda"] == 5
    assert data["metadata"]["boundary_length"] == 4

    # the stdout document is read back as the diagram it wraps
    piped = tmp_path / "delta_2.json"
    piped.write_text(text)

    assert main(["metrics", "--diagram", str(piped), "--format", "json"]) == 0
    assert read_diagram(piped).to_dict() == data["diagram"]


def test_construct_table(capsys):

    assert main(["construct", "--n", "1", "--format", "table"]) == 0
    assert "p_n" in capsys.readouterr().out


def test_metrics_from_file(tmp_path, capsys):

    out = tmp_path / "square.json"

    assert main(["export", "--corpus", "square", "--format", "json", "--output", str(out)]) == 0
    assert main(["metrics", "--diagram", str(out), "--format", "json"]) == 0

    data = json.loads(capsys.readouterr().out)

    assert data["diam_G"] == 2
    assert data["diam_Gdual"] == 1


def test_exact_shelling(tmp_path, capsys):

    out = tmp_path / "record.json"

    assert main(["shell", "--corpus", "square", "--strategy", "exact", "--output", str(out)]) == 0

    text = capsys.readouterr().out

    assert "max boundary 6" in text
    assert "trace: 4 6 4 2 0" in text
    assert read_record(out).max_boundary == 6


def test_tunnelling_shelling(capsys):

    assert main(["shell", "--corpus", "grid_1x2", "--strategy", "tunnel", "--seed", "4"]) == 0

    text = capsys.readouterr().out

    assert "bound" in text
    assert text.count("trace:") == 1


def test_tunnelling_alias(capsys):

    assert parse_config(["shell", "--corpus", "square", "--strategy", "tunnelling"]).strategy == "tunnel"
    assert RunConfig(command="shell", corpus="square", strategy="tunnelling").strategy == "tunnel"

    assert main(["shell", "--corpus", "square", "--strategy", "tunnelling", "--seed", "1"]) == 0
    assert "bound" in capsys.readouterr().out


def test_exact_search_too_large():

    assert main(["shell", "--n", "1", "--strategy", "exact"]) == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["shell", "--corpus", "square", "--cap", "0"],
        ["shell", "--n", "0"],
        ["shell", "--n", "1", "--corpus", "square"],
        ["shell", "--corpus", "square", "--strategy", "tunneling"],
        ["shell"],
        ["verify"],
        ["explode", "--n", "1"],
    ],
)
def test_usage_errors(argv):

    with pytest.raises(SystemExit) as e:

        parse_config(argv)

    assert e.value.code == 2


def test_verify(capsys):

    assert main(["verify", "--n", "1", "--samples", "5", "--seed", "2", "--format", "json"]) == 0
    first = capsys.readouterr().out

    assert main(["verify", "--n", "1", "--samples", "5", "--seed", "2", "--format", "json"]) == 0
    second = capsys.readouterr().out

    assert first == second
    assert json.loads(first)["reports"][0]["passed"]


def test_dot_export(tmp_path):

    out = tmp_path / "triangle.dot"

    assert main(["export", "--corpus", "triangle", "--format", "dot", "--seed", "1", "--output", str(out)]) == 0

    text = out.read_text()

    assert text.count(" -- ") == 3
    assert text.count("penwidth") == 2


def test_export_needs_an_output():

    assert main(["export", "--corpus", "triangle", "--format", "svg"]) == 1


def test_io_error(tmp_path):

    blocker = tmp_path / "file"
    blocker.write_text("")

    config = RunConfig(command="export", corpus="square", format="json", output=blocker / "square.json")

    assert run(config) == 3


@pytest.mark.parametrize(
    "config",
    [
        RunConfig(command="shell"),
        RunConfig(command="shell", corpus="square", strategy="greedy"),
        RunConfig(command="construct", n=[1, 2]),
        RunConfig(command="verify", samples=0, n=[1]),
    ],
)
def test_invalid_run_config(config):

    assert run(config) == 2
