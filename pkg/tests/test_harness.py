"""Harness: determinism, caps, suite reports, CLI exit codes and replay."""

import json

import pytest

from arquiver.exactmat import FieldSpec
from arquiver.quiverpath import Quiver
from arquiver.repcat import PROJECTIVE, indecomposable
from arquiver import cli
from arquiver.harness import (
    FAIL,
    GenConfig,
    SUITES,
    gen_class,
    gen_instance,
    gen_morphism,
    gen_quiver,
    gen_rep,
    load_instance,
    run_suite,
    run_trial,
    trial_rng,
)

FP = FieldSpec.prime(10007)
QQ = FieldSpec.rational()


def test_generators_are_pure_functions_of_seed_and_trial():
    cfg = GenConfig(seed=7, trials=1)
    for trial in range(30):
        q1 = gen_quiver(cfg, trial)
        q2 = gen_quiver(cfg, trial)
        assert q1 == q2
        assert gen_rep(cfg, trial, "x", q1) == gen_rep(cfg, trial, "x", q2)
    assert trial_rng(1, 2, "a").random() == trial_rng(1, 2, "a").random()
    assert trial_rng(1, 2, "a").random() != trial_rng(1, 2, "b").random()
    assert gen_quiver(GenConfig(seed=0), 5) != gen_quiver(GenConfig(seed=99), 5) or \
        gen_quiver(GenConfig(seed=0), 6) != gen_quiver(GenConfig(seed=99), 6)


def test_generator_respects_caps():
    for seed, mv, ma, md in ((0, 6, 8, 5), (1, 1, 8, 5), (2, 6, 2, 3),
                             (3, 2, 1, 1), (4, 3, 8, 0)):
        cfg = GenConfig(seed=seed, max_vertices=mv, max_arrows=ma, max_dim=md)
        for trial in range(40):
            q = gen_quiver(cfg, trial)
            assert 1 <= q.vertex_count <= mv
            assert q.arrow_count <= ma
            x = gen_rep(cfg, trial, "x", q)
            assert all(d <= md for d in x.dims)


def test_single_vertex_cap_forces_trivial_quiver():
    cfg = GenConfig(max_vertices=1)
    for trial in range(10):
        assert gen_quiver(cfg, trial) == Quiver(1, ())


def test_generated_quivers_acyclic():
    cfg = GenConfig()
    for trial in range(300):
        gen_quiver(cfg, trial)  # Quiver.__post_init__ rejects cycles


def test_gen_morphism_intertwines():
    cfg = GenConfig()
    for trial in range(20):
        q = gen_quiver(cfg, trial)
        x = gen_rep(cfg, trial, "x", q)
        y = gen_rep(cfg, trial, "y", q)
        assert gen_morphism(cfg, trial, "f", x, y).is_intertwiner()


def test_gen_class_from_projective_is_zero():
    cfg = GenConfig()
    for trial in range(10):
        q = gen_quiver(cfg, trial)
        if q.vertex_count == 0:
            continue
        p = indecomposable(q, PROJECTIVE, trial % q.vertex_count, cfg.field)
        y = gen_rep(cfg, trial, "y", q)
        assert gen_class(cfg, trial, "z", p, y).is_zero()


def test_run_suite_report_invariants():
    cfg = GenConfig(trials=12)
    rep = run_suite("theorem", cfg)
    assert rep.passed + rep.failed + rep.skipped == rep.trials == 12
    assert rep.ok
    data = rep.to_json()
    assert "wall_time" not in data
    assert data["config"]["field"] == "fp:10007"
    with pytest.raises(KeyError):
        run_suite("nonsense", cfg)


def test_reports_byte_identical_across_jobs():
    cfg = GenConfig(trials=8)
    one = run_suite("ar-dim", cfg, jobs=1)
    two = run_suite("ar-dim", cfg, jobs=2)
    assert json.dumps(one.to_json(), sort_keys=True) == \
        json.dumps(two.to_json(), sort_keys=True)


def test_forced_failure_produces_replayable_counterexample(monkeypatch):
    def broken(cfg, trial):
        if trial == 3:
            return FAIL, {"quiver": {"vertices": 1, "arrows": []},
                          "field": cfg.field.spec_string()}
        return "pass", None
    monkeypatch.setitem(SUITES, "euler", ("statement", broken))
    cfg = GenConfig(trials=6)
    rep = run_suite("euler", cfg)
    assert not rep.ok and rep.failed == 1
    assert rep.counterexample["trial"] == 3
    status, detail = run_trial("euler", cfg, rep.counterexample["trial"])
    assert status == FAIL
    assert detail["trial"] == 3


def test_instance_round_trip():
    cfg = GenConfig(trials=1)
    inst = gen_instance(cfg, 2)
    assert inst is not None
    back = load_instance(json.loads(json.dumps(inst)))
    assert back["x"].to_json() == inst["x"]
    assert back["y"].to_json() == inst["y"]
    assert back["f"].to_json() == inst["f"]
    assert [m.to_flat_json() for m in back["z"].cocycle] == inst["cocycle"]


def test_cli_suite_and_selfcheck(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert cli.main(["suite", "theorem", "--trials", "4"]) == 0
    assert cli.main(["suite", "theorem", "--trials", "4", "--field", "q"]) == 0
    assert cli.main(["suite", "theorem", "--trials", "4", "--trial", "2"]) == 0
    assert cli.main(["suite", "doesnotexist"]) == 2
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    assert cli.main(["suite", "perfect", "--trials", "4",
                     "--json", str(out1)]) == 0
    assert cli.main(["suite", "perfect", "--trials", "4", "--jobs", "2",
                     "--json", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    capsys.readouterr()


def test_cli_instance_commands(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    inst_file = tmp_path / "inst.json"
    assert cli.main(["gen", "--trials", "3", "--json", str(inst_file)]) == 0
    instances = json.loads(inst_file.read_text())
    assert instances
    one = tmp_path / "one.json"
    one.write_text(json.dumps(instances[0]))
    assert cli.main(["theorem", str(one)]) == 0
    assert cli.main(["pairing", str(one)]) == 0
    assert cli.main(["tau", str(one)]) == 0
    assert cli.main(["ext", str(one)]) == 0
    capsys.readouterr()


def test_cli_bad_input_exit_codes(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    missing = tmp_path / "missing.json"
    assert cli.main(["theorem", str(missing)]) == 2
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    assert cli.main(["theorem", str(broken)]) == 2
    incomplete = tmp_path / "incomplete.json"
    incomplete.write_text(json.dumps({"quiver": {"vertices": 1, "arrows": []},
                                      "field": "fp:10007"}))
    assert cli.main(["theorem", str(incomplete)]) == 2
    assert cli.main(["ext", str(incomplete)]) == 2
    capsys.readouterr()


def test_cli_precondition_violation_is_input_error(tmp_path, capsys, monkeypatch):
    """An instance whose x has an injective summand fails the hypothesis."""
    monkeypatch.chdir(tmp_path)
    inst = {
        "quiver": {"vertices": 2, "arrows": [[0, 1]]},
        "field": "fp:10007",
        "x": {"dims": [1, 0], "mats": [[]], "field": "fp:10007"},
        "y": {"dims": [0, 1], "mats": [[]], "field": {"Fp": 10007}},
        "cocycle": [[1]],
        "f": {"mats": [[1], []]},
    }
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(inst))
    assert cli.main(["theorem", str(path)]) == 2
    capsys.readouterr()


def test_cli_forced_suite_failure_writes_replay_file(tmp_path, capsys,
                                                     monkeypatch):
    def broken(cfg, trial):
        if trial == 1:
            return FAIL, {"field": cfg.field.spec_string()}
        return "pass", None
    monkeypatch.setitem(SUITES, "kills", ("statement", broken))
    monkeypatch.chdir(tmp_path)
    assert cli.main(["suite", "kills", "--trials", "3"]) == 1
    replay = tmp_path / "arquiver-counterexample-kills.json"
    assert replay.exists()
    report = json.loads(replay.read_text())
    assert report["counterexample"]["trial"] == 1
    assert report["config"]["seed"] == 0
    capsys.readouterr()


def test_skip_semantics_reported():
    cfg = GenConfig(trials=40)
    rep = run_suite("theorem", cfg)
    assert rep.skipped < rep.trials // 4
    assert rep.passed + rep.skipped == rep.trials
