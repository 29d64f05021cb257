"""Tests for the solve command."""

from pathlib import Path

from samples import Amt, Write


def test_running_example_has_two_models(amt: Amt, running_example: Path) -> None:
    """Test the transformation semantics on the running example."""
    result = amt("solve", running_example, "--bounds=-5..5")
    assert result.code == 0
    report = result.json()
    assert report["schema"] == 1
    assert report["command"] == "solve"
    assert report["theory"] == "lin-int"
    [run] = report["runs"]
    assert run["mode"] == "transform"
    first, second = run["models"]
    assert first["regular"] == []
    assert first["theory"] == ["&sum{x;y}!=4"]
    assert second["regular"] == ["a"]
    assert second["theory"] == ["&sum{x;y}=4", "&sum{y;z}=2"]
    witness = second["witness"]
    assert witness["x"] + witness["y"] == 4
    assert witness["y"] + witness["z"] == 2
    assert first["witness"]["x"] + first["witness"]["y"] != 4


def test_empty_program_has_the_empty_model(amt: Amt, write: Write) -> None:
    """Test that an empty file has exactly one, empty, model."""
    result = amt("solve", write("empty.lp", ""))
    assert result.code == 0
    [run] = result.json()["runs"]
    [model] = run["models"]
    assert model["regular"] == []
    assert model["theory"] == []
    assert model["solution"] == []


def test_contradiction_has_no_models(amt: Amt, write: Write) -> None:
    """Test that an unconditional constraint exits with 1."""
    result = amt("solve", write("false.lp", ":- ."))
    assert result.code == 1
    assert result.json()["runs"][0]["models"] == []


def test_htc_modes_agree_with_transform(amt: Amt, running_example: Path) -> None:
    """Test both translations on the running example over a small box."""
    atoms = {}
    for mode in ("transform", "htc-tau", "htc-tau2"):
        result = amt("solve", running_example, "--mode", mode, "--bounds=-2..2")
        assert result.code == 0
        models = result.json()["runs"][0]["models"]
        atoms[mode] = [(m["regular"], m["theory"]) for m in models]
    assert atoms["htc-tau"] == atoms["transform"]
    assert atoms["htc-tau2"] == atoms["transform"]


def test_htc_witness_is_a_model(amt: Amt, running_example: Path) -> None:
    """Test that the equilibrium witness satisfies the model's theory atoms."""
    result = amt("solve", running_example, "--mode", "htc-tau", "--bounds=-2..2")
    second = result.json()["runs"][0]["models"][1]
    assert second["witness"] == {"x": 2, "y": 2, "z": 0}
    assert second["solution"] == ["&sum{x;y}=4", "&sum{y;z}=2"]


def test_text_format(amt: Amt, running_example: Path) -> None:
    """Test the human-readable report."""
    result = amt("solve", running_example, "--format", "text", "--bounds=-5..5")
    assert result.code == 0
    lines = result.out.splitlines()
    assert lines[0] == "command: solve  theory: lin-int  bounds: -5..5"
    assert lines[1] == "mode transform: 2 model(s)"
    assert "  {&sum{x;y}!=4}" in lines
    assert "  {a, &sum{x;y}=4, &sum{y;z}=2}" in lines
    assert lines[-1].startswith("note: ")


def test_witness_enumeration(amt: Amt, running_example: Path) -> None:
    """Test listing several witnesses per model."""
    result = amt("solve", running_example, "--bounds=-5..5", "--witnesses", "3")
    models = result.json()["runs"][0]["models"]
    for model in models:
        assert len(model["witnesses"]) == 3
    assert all(w["x"] + w["y"] == 4 for w in models[1]["witnesses"])
    assert len({tuple(sorted(w.items())) for w in models[1]["witnesses"]}) == 3


def test_json_is_deterministic(amt: Amt, running_example: Path) -> None:
    """Test that two identical runs print identical bytes."""
    first = amt("solve", running_example, "--mode", "htc-tau", "--bounds=-2..2")
    second = amt("solve", running_example, "--mode", "htc-tau", "--bounds=-2..2")
    assert first.out == second.out


def test_difference_theory(amt: Amt, write: Write) -> None:
    """Test the exact difference-logic theory selected by its short name."""
    program = write("d.lp", "a :- &diff{x-y}<=-1.\n:- not a.\n")
    result = amt("solve", program, "--theory", "D")
    assert result.code == 0
    report = result.json()
    assert report["theory"] == "diff-int"
    [model] = report["runs"][0]["models"]
    assert model["regular"] == ["a"]
    assert model["witness"]["x"] - model["witness"]["y"] <= -1


def test_clingcon_partition_is_for_translations(amt: Amt, running_example: Path) -> None:
    """Test that the all-external partition is rejected by the transformation semantics."""
    result = amt("solve", running_example, "--partition", "clingcon")
    assert result.code == 2
    assert result.err.startswith("error: ")


def test_clingcon_partition_under_tau(amt: Amt, running_example: Path) -> None:
    """Test the all-external reading of the running example."""
    argv = ["--partition", "clingcon", "--mode", "htc-tau", "--bounds=-1..1"]
    result = amt("solve", running_example, *argv)
    assert result.code == 0
    assert result.json()["partition"] == "clingcon"


def test_parse_error_reports_position(amt: Amt, write: Write) -> None:
    """Test that syntax errors exit with 2 and a line:column location."""
    result = amt("solve", write("bad.lp", "a :- b.\nc :- &sum{x}==.\n"))
    assert result.code == 2
    assert result.out == ""
    assert result.err.startswith("error: 2:")


def test_invalid_bounds(amt: Amt, running_example: Path) -> None:
    """Test that an empty box is a usage error."""
    result = amt("solve", running_example, "--bounds", "3..1")
    assert result.code == 2
    assert "empty interval" in result.err


def test_missing_file(amt: Amt, tmp_path: Path) -> None:
    """Test that an unreadable file exits with 2."""
    result = amt("solve", tmp_path / "missing.lp")
    assert result.code == 2
    assert "missing.lp" in result.err
