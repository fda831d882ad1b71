import io

import pytest

from sumset_ramsey import GroupSpec, TableColoring, save_coloring
from sumset_ramsey.cli import RunConfig, run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out)
    return code, out.getvalue()


def values(text, key):
    return [v for k, v in (line.split("=", 1) for line in text.splitlines()) if k == key]


def test_search_finds_counterexample_pair():
    code, out = call("--machine", "search", "--group", "Z/4 Z/4 Z", "--bound", "1", "--coloring", "support", "--size", "2")
    assert code == 0
    assert values(out, "outcome") == ["found"]
    assert len(values(out, "element")) == 2
    assert values(out, "color") == ["[(1/2,0),(0,-2)]"]


def test_search_none_in_domain():
    code, out = call("--machine", "search", "--group", "Z/3^3", "--coloring", "support", "--size", "2")
    assert code == 1
    assert values(out, "outcome") == ["none-in-domain"]


def test_search_node_cap():
    code, out = call("--machine", "--node-limit", "5", "search", "--group", "Z/6^4", "--coloring", "support", "--size", "2")
    assert code == 2
    assert values(out, "outcome") == ["resource-limit"]


@pytest.mark.parametrize(
    "argv, token",
    [
        (["search", "--group", "Z/4 Q", "--coloring", "support", "--size", "2"], "Q"),
        (["search", "--group", "Z/4", "--coloring", "rainbow", "--size", "2"], "rainbow"),
        (["certify", "--group", "Z/6", "--powers", "1..x", "--coloring", "support"], "1..x"),
        (["minimal", "--family", "q7", "--colors", "2", "--size", "2", "--max", "3"], "q7"),
    ],
)
def test_input_errors_name_token(argv, token, capsys):
    code, _ = call(*argv)
    assert code == 3
    assert token in capsys.readouterr().err


def test_unknown_subcommand():
    assert call("frobnicate")[0] == 3
    assert call()[0] == 3


def test_flags_after_subcommand():
    code, out = call("search", "--group", "Z/4 Z/4 Z", "--bound", "1", "--coloring", "support", "--size", "2", "--machine")
    assert code == 0 and out.startswith("domain=")


def test_coloring_file(tmp_path):
    spec = GroupSpec.parse("Z/3")
    path = tmp_path / "c.txt"
    path.write_text(save_coloring(TableColoring({spec.element(k): 0 for k in range(3)}, spec)))
    code, out = call("--machine", "search", "--group", "Z/3", "--coloring", str(path), "--size", "3")
    assert code == 0
    assert values(out, "element") == ["0", "1", "2"]


def test_bad_coloring_file_reports_line(tmp_path, capsys):
    path = tmp_path / "c.txt"
    path.write_text("table group=Z/3\n0 -> 1\n1 => 2\n")
    assert call("search", "--group", "Z/3", "--coloring", str(path), "--size", "2")[0] == 3
    assert "line 3" in capsys.readouterr().err


def test_certify_powers():
    code, out = call("--machine", "certify", "--group", "Z/6", "--powers", "1..3", "--coloring", "support")
    assert code == 0
    assert values(out, "certified") == ["true"]
    assert len(values(out, "certificate")) == 3


def test_certify_reports_witness():
    code, out = call("--machine", "certify", "--group", "Z/4 Z/4 Z", "--bounds", "0..3", "--coloring", "support")
    assert code == 1
    assert values(out, "certified") == ["false"]


def test_certify_injective_per_fragment():
    code, out = call("--machine", "certify", "--group", "Z/4 Z", "--bounds", "0..3", "--coloring", "injective")
    assert code == 0
    assert values(out, "certified") == ["true"]


def test_minimal_nat():
    code, out = call("--machine", "minimal", "--family", "nat", "--colors", "2", "--size", "2", "--max", "20")
    assert code == 0
    assert values(out, "value") == ["12"]
    assert len(values(out, "avoid")) == 12


def test_minimal_divergent_family():
    code, out = call("--machine", "minimal", "--family", "z2sum", "--colors", "2", "--size", "2", "--max", "3")
    assert code == 1
    assert values(out, "diverges") == ["true"]


@pytest.mark.parametrize(
    "argv, size",
    [
        (["--method", "prop42", "--group", "Z/4^16", "--coloring", "random:3:1", "--n", "2"], 4),
        (["--method", "order2", "--group", "Z/4^24", "--coloring", "random:2:0", "--n", "2"], 4),
        (["--method", "leader-russell", "--group", "Z", "--coloring", "constant", "--n", "3", "--r", "1"], 3),
    ],
)
def test_construct_witnesses(argv, size):
    code, out = call("--machine", "construct", *argv)
    assert code == 0
    assert values(out, "size") == [str(size)]
    assert len(values(out, "element")) == size
    assert values(out, "log")


def test_construct_sequences():
    code, out = call("--machine", "construct", "--method", "lemma23", "--group", "Z", "--length", "5")
    assert code == 0
    assert values(out, "term") == ["1", "5", "25", "125", "625"]
    assert values(out, "independent_prefix") == ["5:true"]
    code, out = call("--machine", "construct", "--method", "lemma24", "--group", "Z/4^4", "--length", "4")
    assert code == 0
    assert values(out, "epsilon_delta") == ["2:true"]


def test_construct_failure_is_reported():
    code, out = call("--machine", "construct", "--method", "lemma24", "--group", "Z/3^3", "--length", "1")
    assert code == 1
    assert values(out, "stage") == ["lemma24"]


def test_analyze_examples():
    code, out = call("--machine", "analyze", "--group", "Z/8")
    assert code == 0
    assert values(out, "G2") == ["2"]
    assert values(out, "2G_elements") == ["0 2 4 6"]
    assert values(out, "2G_times_G2_equals_G") == ["true"]
    _, out = call("--machine", "analyze", "--group", "Z/2^3")
    assert values(out, "G2") == values(out, "order") == ["8"]
    assert values(out, "2G") == ["1"]
    assert values(out, "classification")[0].startswith("Boolean")
    assert "(2)_2" in values(out, "finite_colours")[0]
    _, out = call("--machine", "analyze", "--group", "Z/4")
    assert (values(out, "G2"), values(out, "G4"), values(out, "2G")) == (["2"], ["4"], ["2"])
    _, out = call("--machine", "analyze", "--group", "Z", "--bound", "3")
    assert "2G infinite" in values(out, "classification")[0]


def test_analyze_countable_power():
    _, out = call("--machine", "analyze", "--group", "Z/2", "--infinite-power")
    assert "negative" in values(out, "classification")[0]
    _, out = call("--machine", "analyze", "--group", "Z/4", "--infinite-power")
    assert "2G infinite" in values(out, "classification")[0]


def test_regression_suite():
    code, out = call("--machine", "verify-paper")
    assert code == 0
    checks = values(out, "check")
    assert len(checks) == 11
    assert all(" pass " in c for c in checks)
    assert values(out, "result") == ["pass"]


def test_regression_suite_subset():
    code, out = call("--machine", "verify-paper", "--only", "counterexample-pair")
    assert code == 0 and len(values(out, "check")) == 1


def test_replay_is_byte_identical(tmp_path):
    cfg = tmp_path / "run.cfg"
    argv = ["--machine", "--threads", "3", "--save-config", str(cfg), "minimal", "--family", "nat",
            "--colors", "2", "--size", "2", "--max", "14"]
    code, first = call(*argv)
    code2, second = call("--config", str(cfg))
    assert code == code2 == 0
    assert first == second
    loaded = RunConfig.from_text(cfg.read_text())
    assert loaded.subcommand == "minimal" and loaded.r == 2 and loaded.n == 2
    assert RunConfig.from_text(loaded.to_text()) == loaded


def test_replay_search(tmp_path):
    cfg = tmp_path / "run.cfg"
    argv = ["--machine", "--threads", "2", "--save-config", str(cfg), "search", "--group", "Z/4 Z/4 Z", "--bound", "2",
            "--coloring", "support", "--size", "2", "--no-prune"]
    code, first = call(*argv)
    assert "extra.no_prune=true" in cfg.read_text()
    assert call("--config", str(cfg)) == (code, first)


def test_bad_config(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("subcommand=search\nbogus\n")
    assert call("--config", str(cfg))[0] == 3
    assert "line 2" in capsys.readouterr().err


def test_human_output():
    code, out = call("search", "--group", "Z/4 Z/4 Z", "--bound", "1", "--coloring", "support", "--size", "2")
    assert code == 0
    assert "outcome: found" in out
