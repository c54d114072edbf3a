"""Fallback and error paths: search-budget exhaustion, user-supplied smash
coproducts, corpus-wide bookkeeping invariants, and a 24-dimensional run."""

from __future__ import annotations

import json

import pytest

import hopfrep.meataxe as meataxe
from hopfrep import fileio
from hopfrep.cli import main
from hopfrep.errors import ChopBudgetError, HopfError
from hopfrep.gf import field_create
from hopfrep.algebra import annihilator, regular_module
from hopfrep.groups import builtin_group, commutator_subgroup
from hopfrep.constructors import (
    dual_group_algebra,
    group_algebra,
    smash_algebra,
    translation_action,
)
from hopfrep.hopf import as_hopf_subalgebra, extended_augmentation_ideal
from hopfrep.meataxe import chop, is_irreducible, replay_witness
from hopfrep.report import EXIT_ASSERTION_FAILED, EXIT_OK


@pytest.fixture()
def exhausted_budget(monkeypatch):
    monkeypatch.setattr(meataxe, "_RANDOM_BUDGET", 0)
    monkeypatch.setattr(meataxe, "_WORD_BUDGET", 0)


def test_chop_falls_back_to_exhaustive_lattice(exhausted_budget, gf3):
    hopf = group_algebra(builtin_group("S3"), gf3)
    reg = regular_module(hopf.algebra)
    series = chop(reg, seed=0)
    assert series.dimension_multiset() == [1, 1, 1, 1, 1, 1]
    assert all(w.kind in ("exhaustive", "dim1") for w in series.witnesses)


def test_is_irreducible_fallback_and_replay(exhausted_budget, ks3_gf7):
    reg = regular_module(ks3_gf7.algebra)
    verdict, witness = is_irreducible(reg, seed=0)
    assert not verdict and witness.kind == "submodule"
    assert replay_witness(reg, witness)
    series = chop(regular_module(ks3_gf7.algebra), seed=1)
    two = next(rep for rep, _ in series.factors if rep.dim == 2)
    verdict, witness = is_irreducible(two, seed=0)
    assert verdict and witness.kind == "exhaustive"
    assert replay_witness(two, witness)


def test_budget_error_beyond_brute_limit(exhausted_budget, monkeypatch):
    monkeypatch.setattr(meataxe, "_BRUTE_DIM_LIMIT", 2)
    gf7 = field_create(7, 1)
    hopf = group_algebra(builtin_group("S3"), gf7)
    with pytest.raises(ChopBudgetError):
        chop(regular_module(hopf.algebra), seed=0)


def test_smash_accepts_verified_hopf_candidate(gf7):
    # B = base field: the smash is A itself, so A's own Hopf data must pass.
    c2 = builtin_group("C2")
    action, actor, target = translation_action(builtin_group("C1"), [0], gf7)
    hopf = group_algebra(builtin_group("C1"), gf7)
    result = smash_algebra(target, actor, action, hopf_candidate={
        "coproduct": target.coproduct,
        "counit": target.counit,
        "antipode": target.antipode.data,
    })
    assert result.validated and result.dim == 1


def test_smash_rejects_plain_tensor_coproduct(gf2):
    # The group-like tensor coproduct fails multiplicativity on kC3 # k^{S3}.
    s3 = builtin_group("S3")
    comm, _ = commutator_subgroup(s3)
    action, actor, target = translation_action(s3, comm, gf2)
    n = 18
    coproduct = []
    for a in range(3):
        for b in range(6):
            row = [0] * (n * n)
            # Treat a # e_b as group-like in the first leg and dual-like in the
            # second: Delta(a # e_b) = sum_{uv=b} (a # e_u) (x) (a # e_v).
            for u in range(6):
                for v in range(6):
                    if s3.mul(u, v) == b:
                        row[(a * 6 + u) * n + (a * 6 + v)] = 1
            coproduct.append(row)
    counit = [1 if b == s3.identity else 0 for a in range(3) for b in range(6)]
    antipode = [[1 if j == i else 0 for j in range(n)] for i in range(n)]
    with pytest.raises(HopfError):
        smash_algebra(target, actor, action, hopf_candidate={
            "coproduct": coproduct, "counit": counit, "antipode": antipode,
        })


def test_build_exits_one_on_axiom_failure(tmp_path):
    # Parses fine but the matched-pair identities fail.
    recipe = tmp_path / "recipe.json"
    recipe.write_text(json.dumps({
        "construct": "bicrossproduct",
        "f_group": "C3", "q_group": "C2",
        "action_fq": [[0, 1, 2], [0, 1, 2]],
        "action_qf": [[0, 0, 0], [1, 0, 1]],
        "field": {"p": 7, "k": 1},
    }))
    assert main(["build", str(recipe), "--out", str(tmp_path / "x.json")]) == EXIT_ASSERTION_FAILED


def test_build_output_bytes_deterministic(tmp_path):
    recipe = tmp_path / "recipe.json"
    recipe.write_text(json.dumps({
        "construct": "dual_group_algebra", "group": "D4", "field": {"p": 3, "k": 1}}))
    out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["build", str(recipe), "--out", str(out1)]) == EXIT_OK
    assert main(["build", str(recipe), "--out", str(out2)]) == EXIT_OK
    assert out1.read_bytes() == out2.read_bytes()


def test_oracle_flag_cross_check(tmp_path):
    recipe = tmp_path / "recipe.json"
    recipe.write_text(json.dumps(
        {"construct": "group_algebra", "group": "S3", "field": {"p": 7, "k": 1}}))
    hopf_path = tmp_path / "h.json"
    assert main(["build", str(recipe), "--out", str(hopf_path)]) == EXIT_OK
    gf7 = field_create(7, 1)
    s3 = builtin_group("S3")
    comm, _ = commutator_subgroup(s3)
    chain = [[[1 if i == 0 else 0 for i in range(6)]],
             [[1 if i == g else 0 for i in range(6)] for g in comm],
             [[1 if i == j else 0 for i in range(6)] for j in range(6)]]
    series_path = tmp_path / "s.json"
    fileio.write_json(str(series_path), fileio.chain_to_dict(gf7, chain))
    report_path = tmp_path / "r.json"
    assert main(["frobenius-check", str(hopf_path), str(series_path),
                 "--oracle", "--out", str(report_path), "--format", "json"]) == EXIT_OK
    report = json.loads(report_path.read_text())
    assert any(v["check"] == "oracle-cross-check" and v["pass"] for v in report["verdicts"])


def test_freeness_bookkeeping_on_group_family(gf7):
    # dim(H / H.K+) * dim K = dim H for K = kG' inside kG.
    for name in ("S3", "D4", "A4", "Q8"):
        group = builtin_group(name)
        comm, _ = commutator_subgroup(group)
        hopf = group_algebra(group, gf7)
        rows = [[1 if i == g else 0 for i in range(group.order)] for g in comm]
        ok, sub, _ = as_hopf_subalgebra(hopf, rows)
        assert ok
        ideal = extended_augmentation_ideal(hopf, sub)
        quotient_dim = hopf.dim - ideal.dim
        assert quotient_dim * sub.dim == hopf.dim


def test_regular_module_faithful_across_corpus(twist_corpus):
    for hopf in twist_corpus[:12]:
        assert annihilator(regular_module(hopf.algebra)).dim == 0


def test_full_pipeline_on_ks4_gf7(tmp_path):
    # Three-step chain k < kV4 < kA4 < kS4 at dimension 24.
    gf7 = field_create(7, 1)
    s4 = builtin_group("S4")
    a4_elems, a4_sub = commutator_subgroup(s4)
    v4_rel, _ = commutator_subgroup(a4_sub)
    v4_elems = [a4_elems[i] for i in v4_rel]
    hopf = group_algebra(s4, gf7)

    def uv(i):
        return [1 if t == i else 0 for t in range(24)]

    chain = [[uv(s4.identity)], [uv(g) for g in v4_elems],
             [uv(g) for g in a4_elems], [uv(i) for i in range(24)]]
    hopf_path = tmp_path / "ks4.json"
    series_path = tmp_path / "series.json"
    fileio.save_hopf(str(hopf_path), hopf)
    fileio.write_json(str(series_path), fileio.chain_to_dict(gf7, chain))
    from hopfrep.verifier import run_frobenius_check

    report, code = run_frobenius_check(str(hopf_path), str(series_path), seed=4)
    assert code == EXIT_OK
    dims = next(v for v in report.verdicts if v.check == "frobenius-divisibility")
    assert dims.evidence["simple_dimensions"] == [1, 1, 2, 3, 3]
