"""End-to-end CLI: recipes, exit codes, report determinism, mutations."""

from __future__ import annotations

import json

import pytest

from hopfrep import fileio
from hopfrep.cli import main
from hopfrep.gf import field_create
from hopfrep.groups import builtin_group, commutator_subgroup
from hopfrep.report import (
    EXIT_ASSERTION_FAILED,
    EXIT_ASSUMPTION_VIOLATED,
    EXIT_MALFORMED_INPUT,
    EXIT_OK,
)


def unit_vec(n, i):
    return [1 if t == i else 0 for t in range(n)]


@pytest.fixture()
def workdir(tmp_path):
    """Recipes, instance files, series and subspace files for kS3 over GF(7)."""
    gf7 = field_create(7, 1)
    s3 = builtin_group("S3")
    comm, _ = commutator_subgroup(s3)

    recipe = tmp_path / "recipe_ks3_gf7.json"
    recipe.write_text(json.dumps(
        {"construct": "group_algebra", "group": "S3", "field": {"p": 7, "k": 1}}))
    hopf_file = tmp_path / "ks3_gf7.json"
    assert main(["build", str(recipe), "--out", str(hopf_file), "--format", "json"]) == EXIT_OK

    chain = [[unit_vec(6, 0)],
             [unit_vec(6, g) for g in comm],
             [unit_vec(6, i) for i in range(6)]]
    series_file = tmp_path / "series.json"
    fileio.write_json(str(series_file), fileio.chain_to_dict(gf7, chain))

    sub_file = tmp_path / "sub_c3.json"
    fileio.write_json(str(sub_file), fileio.subspace_to_dict(gf7, chain[1]))
    return tmp_path, hopf_file, series_file, sub_file


def test_build_and_check_roundtrip(workdir, capsys):
    _, hopf_file, _, _ = workdir
    assert main(["check-hopf", str(hopf_file)]) == EXIT_OK
    out = capsys.readouterr().out
    assert "result: OK" in out


def test_build_bicrossproduct_records_convention(tmp_path):
    recipe = tmp_path / "recipe.json"
    recipe.write_text(json.dumps({
        "construct": "bicrossproduct", "group": "S3",
        "f_elements": [0, 3, 4], "q_elements": [0, 1],
        "field": {"p": 7, "k": 1},
    }))
    out_file = tmp_path / "bi.json"
    assert main(["build", str(recipe), "--out", str(out_file)]) == EXIT_OK
    data = json.loads(out_file.read_text())
    assert data["metadata"]["convention"]
    assert main(["check-hopf", str(out_file)]) == EXIT_OK


def test_build_smash_algebra_file(tmp_path):
    recipe = tmp_path / "recipe.json"
    recipe.write_text(json.dumps({
        "construct": "smash_algebra", "y_group": "S3",
        "x_elements": [0, 3, 4], "field": {"p": 2, "k": 1},
    }))
    out_file = tmp_path / "smash.json"
    assert main(["build", str(recipe), "--out", str(out_file)]) == EXIT_OK
    algebra = fileio.load_algebra(str(out_file))
    assert algebra.dim == 18 and algebra.validated


def test_build_rejects_bad_recipe(tmp_path):
    recipe = tmp_path / "recipe.json"
    recipe.write_text(json.dumps({"construct": "mystery", "field": {"p": 7}}))
    assert main(["build", str(recipe), "--out", str(tmp_path / "x.json")]) == EXIT_MALFORMED_INPUT
    recipe.write_text("not json at all {")
    assert main(["build", str(recipe), "--out", str(tmp_path / "x.json")]) == EXIT_MALFORMED_INPUT


def test_check_hopf_detects_mutation(workdir, tmp_path):
    _, hopf_file, _, _ = workdir
    data = json.loads(hopf_file.read_text())
    data["antipode"][1], data["antipode"][2] = data["antipode"][2], data["antipode"][1]
    bad_file = tmp_path / "mutated.json"
    bad_file.write_text(json.dumps(data))
    assert main(["check-hopf", str(bad_file)]) == EXIT_ASSERTION_FAILED


def test_series_check_valid_and_invalid(workdir, tmp_path):
    _, hopf_file, series_file, _ = workdir
    assert main(["series-check", str(hopf_file), str(series_file)]) == EXIT_OK
    gf7 = field_create(7, 1)
    bad = tmp_path / "bad_series.json"
    fileio.write_json(str(bad), fileio.chain_to_dict(
        gf7, [[unit_vec(6, 0)], [unit_vec(6, i) for i in range(6)]]))
    assert main(["series-check", str(hopf_file), str(bad)]) == EXIT_ASSERTION_FAILED
    assert main(["series-check", str(hopf_file), str(tmp_path / "nope.json")]) == EXIT_MALFORMED_INPUT


def test_frobenius_check_passes_and_reports(workdir, tmp_path, capsys):
    _, hopf_file, series_file, _ = workdir
    report_file = tmp_path / "report.json"
    code = main(["frobenius-check", str(hopf_file), str(series_file),
                 "--seed", "11", "--out", str(report_file), "--format", "json"])
    assert code == EXIT_OK
    report = json.loads(report_file.read_text())
    assert report["ok"] is True
    assert report["tool_version"]
    checks = {v["check"] for v in report["verdicts"]}
    assert "frobenius-divisibility" in checks
    assert "timing_s" not in report  # canonical bytes carry no wall-clock data


def test_clifford_report_and_lies_over(workdir):
    _, hopf_file, _, sub_file = workdir
    assert main(["clifford-report", str(hopf_file), "--sub", str(sub_file)]) == EXIT_OK
    assert main(["lies-over", str(hopf_file), "--sub", str(sub_file)]) == EXIT_OK


def test_lies_over_with_explicit_module_files(workdir, tmp_path):
    _, hopf_file, _, sub_file = workdir
    from hopfrep.algebra import regular_module
    from hopfrep.meataxe import chop

    hopf = fileio.load_hopf(str(hopf_file))
    series = chop(regular_module(hopf.algebra), seed=0)
    paths = []
    for i, (rep, _mult) in enumerate(series.factors):
        path = tmp_path / f"simple{i}.json"
        fileio.write_json(str(path), fileio.module_to_dict(rep))
        paths.append(str(path))
    assert main(["lies-over", str(hopf_file), "--sub", str(sub_file), "--modules", *paths]) == EXIT_OK
    # A non-simple module file is malformed input for this command.
    reg_path = tmp_path / "regular.json"
    fileio.write_json(str(reg_path), fileio.module_to_dict(regular_module(hopf.algebra)))
    assert main(["lies-over", str(hopf_file), "--sub", str(sub_file),
                 "--modules", str(reg_path)]) == EXIT_MALFORMED_INPUT


def test_lies_over_gate_on_modular_subalgebra(tmp_path):
    # K = kC3 over GF(3) is not semisimple: the standing assumption fails.
    recipe = tmp_path / "recipe.json"
    recipe.write_text(json.dumps(
        {"construct": "group_algebra", "group": "S3", "field": {"p": 3, "k": 1}}))
    hopf_file = tmp_path / "ks3_gf3.json"
    assert main(["build", str(recipe), "--out", str(hopf_file)]) == EXIT_OK
    gf3 = field_create(3, 1)
    s3 = builtin_group("S3")
    comm, _ = commutator_subgroup(s3)
    sub_file = tmp_path / "sub.json"
    fileio.write_json(str(sub_file), fileio.subspace_to_dict(
        gf3, [unit_vec(6, g) for g in comm]))
    assert main(["lies-over", str(hopf_file), "--sub", str(sub_file)]) == EXIT_ASSUMPTION_VIOLATED


def test_clifford_degrades_on_non_semisimple_ambient(tmp_path, capsys):
    recipe = tmp_path / "recipe.json"
    recipe.write_text(json.dumps(
        {"construct": "group_algebra", "group": "S3", "field": {"p": 2, "k": 1}}))
    hopf_file = tmp_path / "ks3_gf2.json"
    assert main(["build", str(recipe), "--out", str(hopf_file)]) == EXIT_OK
    gf2 = field_create(2, 1)
    s3 = builtin_group("S3")
    comm, _ = commutator_subgroup(s3)
    sub_file = tmp_path / "sub.json"
    fileio.write_json(str(sub_file), fileio.subspace_to_dict(
        gf2, [unit_vec(6, g) for g in comm]))
    code = main(["clifford-report", str(hopf_file), "--sub", str(sub_file)])
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert "not semisimple" in out


def test_report_bytes_are_deterministic(workdir, tmp_path):
    _, hopf_file, series_file, sub_file = workdir
    outs = []
    for name, jobs in (("a", "1"), ("b", "1"), ("c", "4")):
        path = tmp_path / f"rep_{name}.json"
        main(["frobenius-check", str(hopf_file), str(series_file),
              "--seed", "99", "--jobs", jobs, "--out", str(path)])
        outs.append(path.read_bytes())
    assert outs[0] == outs[1] == outs[2]


def test_field_override_on_build(tmp_path):
    recipe = tmp_path / "recipe.json"
    recipe.write_text(json.dumps(
        {"construct": "group_algebra", "group": "C2", "field": {"p": 2, "k": 1}}))
    out_file = tmp_path / "c2.json"
    assert main(["build", str(recipe), "--out", str(out_file), "--field", "5,1"]) == EXIT_OK
    hopf = fileio.load_hopf(str(out_file))
    assert hopf.field.q == 5
