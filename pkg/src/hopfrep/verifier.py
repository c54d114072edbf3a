"""Certification pipelines behind the CLI commands.

Each run_* function returns (Report, exit_code) with the contract:
0 = all checks pass, 1 = a mathematical assertion failed, 2 = malformed
input, 3 = a standing assumption (normal subalgebra with semisimple
restriction, one-dimensional quotient simples) failed at runtime.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor

from .errors import HopfRepError, RecipeError
from .gf import field_create, subfield_embedding
from .linalg import rref, in_span
from .rng import SeededRng
from .algebra import annihilator, intersect_ideal_with_subalgebra, quotient_module, regular_module
from .groups import builtin_group, group_from_dict
from .hopf import (
    HopfData,
    as_hopf_subalgebra,
    characters,
    check_hopf_axioms,
    commutative_mod_ideal,
    extended_augmentation_ideal,
    is_normal,
    quotient_hopf,
    twist_module,
)
from .meataxe import chop, is_irreducible, module_isomorphism, radical, simple_dimensions, splitting_tower
from .constructors import (
    bicrossproduct,
    dual_group_algebra,
    extend_scalars_hopf,
    group_algebra,
    induced_module,
    matched_pair_from_factorization,
    restrict_module,
    smash_algebra,
    translation_action,
    MatchedPair,
)
from . import fileio
from .algebra import check_algebra_axioms
from .report import (
    EXIT_ASSERTION_FAILED,
    EXIT_ASSUMPTION_VIOLATED,
    EXIT_MALFORMED_INPUT,
    EXIT_OK,
    Report,
    SeriesCertificate,
    SeriesStep,
)


def _pmap(fn, items, jobs: int):
    if jobs <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, items))


def _child_seed(seed: int, index: int) -> int:
    return SeededRng(seed).derive(index).state


def _serialize_rows(field, rows) -> list:
    return [fileio.vec_to_json(field, list(r)) for r in rows]


# -- series certification --------------------------------------------------------


def build_series_certificate(hopf: HopfData, chain, seed: int = 0,
                             check_semisimple: bool = False):
    """Verify a chain span(unit) = H_0 < ... < H_t = H step by step.

    Returns (certificate, subalgebras) where subalgebras[i] is the i-th
    chain member as a standalone Hopf subalgebra of H (None on failure).
    """
    F = hopf.field
    n = hopf.dim
    cert = SeriesCertificate(instance=hopf.name)
    if len(chain) < 2:
        cert.endpoints_ok = False
        cert.detail = "chain needs at least the trivial subalgebra and the whole algebra"
        return cert, []
    unit_ech, _ = rref(F, [list(hopf.algebra.unit)])
    first_ech, _ = rref(F, [list(r) for r in chain[0]])
    if [tuple(r) for r in first_ech] != [tuple(r) for r in unit_ech]:
        cert.endpoints_ok = False
        cert.detail = "chain does not start at span(unit)"
    last_ech, _ = rref(F, [list(r) for r in chain[-1]])
    if len(last_ech) != n:
        cert.endpoints_ok = False
        cert.detail = "chain does not end at the whole algebra"

    subalgebras = []
    for rows in chain:
        ok, sub, why = as_hopf_subalgebra(hopf, rows)
        subalgebras.append(sub if ok else None)

    for i in range(1, len(chain)):
        outer = subalgebras[i]
        inner_rows = chain[i - 1]
        step = SeriesStep(index=i, dim=len(chain[i]),
                          is_hopf_subalgebra=outer is not None,
                          is_normal=False, commutative_quotient=False, rank=None)
        if outer is None or subalgebras[i - 1] is None:
            step.detail = "chain member is not a Hopf subalgebra"
            cert.steps.append(step)
            continue
        # Express the inner member inside the outer one.
        inner_in_outer = []
        contained = True
        for r in inner_rows:
            c = outer.coords(list(r))
            if c is None:
                contained = False
                break
            inner_in_outer.append(c)
        if not contained:
            step.is_hopf_subalgebra = False
            step.detail = "chain members are not nested"
            cert.steps.append(step)
            continue
        ok, inner_sub, why = as_hopf_subalgebra(outer.hopf, inner_in_outer)
        if not ok:
            step.is_hopf_subalgebra = False
            step.detail = why
            cert.steps.append(step)
            continue
        step.is_normal = is_normal(outer.hopf, inner_sub)
        if step.is_normal:
            try:
                ideal = extended_augmentation_ideal(outer.hopf, inner_sub)
                step.commutative_quotient = commutative_mod_ideal(outer.hopf, ideal)
            except HopfRepError as exc:
                step.detail = str(exc)
        if outer.dim % inner_sub.dim == 0:
            step.rank = outer.dim // inner_sub.dim
        else:
            step.detail = "freeness rank is not an integer"
        if check_semisimple and step.is_hopf_subalgebra:
            rad = radical(outer.hopf.algebra, _child_seed(seed, i))
            step.semisimple = rad.dim == 0
            if rad.dim:
                step.detail = f"radical has dimension {rad.dim}"
        cert.steps.append(step)
    return cert, subalgebras


# -- command pipelines -------------------------------------------------------------


def _load_hopf_for_command(report: Report, path: str) -> tuple[HopfData | None, int]:
    try:
        hopf = fileio.load_hopf(path, validate=True)
    except RecipeError as exc:
        report.add("input-parse", False, error=str(exc))
        return None, EXIT_MALFORMED_INPUT
    except HopfRepError as exc:
        report.add("input-axioms", False, error=str(exc))
        return None, EXIT_ASSERTION_FAILED
    report.instance = hopf.name
    report.inputs["hopf_sha256"] = fileio.file_sha256(path)
    return hopf, EXIT_OK


def run_check_hopf(hopf_path: str, seed: int = 0) -> tuple[Report, int]:
    report = Report(command="check-hopf", instance=hopf_path, seed=seed)
    try:
        data = fileio.read_json(hopf_path)
        hopf = fileio.hopf_from_dict(data, validate=False)
    except RecipeError as exc:
        report.add("input-parse", False, error=str(exc))
        return report, EXIT_MALFORMED_INPUT
    report.instance = hopf.name
    report.inputs["hopf_sha256"] = fileio.file_sha256(hopf_path)
    alg_rep = check_algebra_axioms(hopf.algebra)
    report.add("algebra-axioms", alg_rep.ok, failure=alg_rep.first_failure())
    if not alg_rep.ok:
        return report, EXIT_ASSERTION_FAILED
    hopf_rep = check_hopf_axioms(hopf)
    report.add("hopf-axioms", hopf_rep.ok, failure=hopf_rep.first_failure())
    return report, EXIT_OK if hopf_rep.ok else EXIT_ASSERTION_FAILED


def run_series_check(hopf_path: str, series_path: str, seed: int = 0) -> tuple[Report, int]:
    report = Report(command="series-check", instance=hopf_path, seed=seed)
    hopf, code = _load_hopf_for_command(report, hopf_path)
    if hopf is None:
        return report, code
    try:
        chain = fileio.chain_from_dict(fileio.read_json(series_path), hopf.field)
    except RecipeError as exc:
        report.add("series-parse", False, error=str(exc))
        return report, EXIT_MALFORMED_INPUT
    report.inputs["series_sha256"] = fileio.file_sha256(series_path)
    cert, _subs = build_series_certificate(hopf, chain, seed=seed)
    report.add("series-endpoints", cert.endpoints_ok, detail=cert.detail)
    for step in cert.steps:
        report.add(f"series-step-{step.index}", step.ok, **step.to_dict())
    return report, EXIT_OK if cert.ok else EXIT_ASSERTION_FAILED


def _common_splitting_extension(hopf: HopfData, sub_rows, seed: int):
    """Extend H so that both H and the subalgebra split; rebuild the pair."""
    _alg, _series, deg_h = splitting_tower(hopf.algebra, seed)
    ok, sub, why = as_hopf_subalgebra(hopf, sub_rows)
    if not ok:
        raise HopfRepError(f"not a Hopf subalgebra: {why}")
    _alg2, _series2, deg_k = splitting_tower(sub.hopf.algebra, seed)
    deg = deg_h * deg_k // math.gcd(deg_h, deg_k)
    if deg == 1:
        return hopf, sub, 1
    big = field_create(hopf.field.p, hopf.field.k * deg)
    emb = subfield_embedding(hopf.field, big)
    hopf_big = extend_scalars_hopf(hopf, big)
    rows_big = [[emb[c] for c in row] for row in sub_rows]
    ok, sub_big, why = as_hopf_subalgebra(hopf_big, rows_big)
    if not ok:
        raise HopfRepError(f"subalgebra did not survive scalar extension: {why}")
    return hopf_big, sub_big, deg


def run_frobenius_check(hopf_path: str, series_path: str, seed: int = 0,
                        use_oracle: bool = False, jobs: int = 1) -> tuple[Report, int]:
    report = Report(command="frobenius-check", instance=hopf_path, seed=seed)
    hopf, code = _load_hopf_for_command(report, hopf_path)
    if hopf is None:
        return report, code
    try:
        chain = fileio.chain_from_dict(fileio.read_json(series_path), hopf.field)
    except RecipeError as exc:
        report.add("series-parse", False, error=str(exc))
        return report, EXIT_MALFORMED_INPUT
    report.inputs["series_sha256"] = fileio.file_sha256(series_path)

    cert, subalgebras = build_series_certificate(hopf, chain, seed=seed, check_semisimple=False)
    report.add("series-valid", cert.ok, detail=cert.detail,
               steps=[s.to_dict() for s in cert.steps])
    if not cert.ok:
        return report, EXIT_ASSERTION_FAILED

    # Semisimplicity gate for every chain member, with a nilpotent witness.
    for i, sub in enumerate(subalgebras):
        alg = sub.hopf.algebra
        rad = radical(alg, _child_seed(seed, 1000 + i))
        evidence = {"dim": alg.dim, "radical_dim": rad.dim}
        if rad.dim:
            power = [list(r) for r in rad.rows]
            steps = 1
            while power:
                nxt = [alg.product(u, list(v)) for u in power for v in rad.rows]
                power, _ = rref(alg.field, nxt)
                if power:
                    steps += 1
            evidence["nilpotent_ideal_basis"] = _serialize_rows(alg.field, rad.rows)
            evidence["nilpotency_index"] = steps + 1
        report.add(f"semisimple-{i}", rad.dim == 0, **evidence)
    if not report.ok:
        return report, EXIT_ASSERTION_FAILED

    if hopf.dim % hopf.field.p == 0:
        report.notes.append("characteristic divides dimension")

    # Frobenius-type divisibility over the splitting extension.
    split_alg, split_series, ext_deg = splitting_tower(hopf.algebra, seed)
    dims = sorted(rep.dim for rep, _ in split_series.factors)
    report.add("frobenius-divisibility", all(hopf.dim % d == 0 for d in dims),
               simple_dimensions=dims, splitting_degree=ext_deg, dim=hopf.dim)

    if use_oracle and hopf.dim <= 12:
        from .bruteforce import exhaustive_composition_factors

        oracle_dims = sorted(
            {m.dim for m in exhaustive_composition_factors(regular_module(split_alg))}
        )
        chop_dims = sorted(set(dims))
        report.add("oracle-cross-check", oracle_dims == chop_dims,
                   oracle_dims=oracle_dims, chop_dims=chop_dims)

    # Inductive refinement with the assumption gates.
    assumption_failed = []

    def refine(i: int):
        verdicts = []
        outer = subalgebras[i]
        inner_rows_ambient = chain[i - 1]
        inner_in_outer = [outer.coords(list(r)) for r in inner_rows_ambient]
        child = _child_seed(seed, 2000 + i)
        h_big, k_big, _deg = _common_splitting_extension(outer.hopf, inner_in_outer, child)
        m = h_big.dim // k_big.dim
        h_series = chop(regular_module(h_big.algebra), child)
        k_series = chop(regular_module(k_big.hopf.algebra), _child_seed(child, 1))
        rad_k = radical(k_big.hopf.algebra, _child_seed(child, 2))
        inductions = []
        for u_rep, _mult in k_series.factors:
            ind = induced_module(h_big, k_big, u_rep)
            ind_series = chop(ind, _child_seed(child, 3))
            inductions.append((u_rep, [f for f, _ in ind_series.factors]))
        for v_idx, (v_rep, _mult) in enumerate(h_series.factors):
            found = None
            for u_rep, factors in inductions:
                for f in factors:
                    if module_isomorphism(v_rep, f) is not None:
                        found = (u_rep, f)
                        break
                if found:
                    break
            if found is None:
                verdicts.append((f"step-{i}-induction-covers-v{v_idx}", False,
                                 {"dim": v_rep.dim}, False))
                continue
            u_rep = found[0]
            divides = (m * u_rep.dim) % v_rep.dim == 0
            verdicts.append((f"step-{i}-divisibility-v{v_idx}", divides,
                             {"dim_v": v_rep.dim, "rank": m, "dim_u": u_rep.dim}, False))
            # Assumption: the restriction of each simple is semisimple over K,
            # equivalently annihilated by rad(K).
            if rad_k.dim:
                restricted = restrict_module(v_rep, k_big)
                killed = all(
                    restricted.act_element(k_big.to_ambient(list(row))).is_zero()
                    for row in rad_k.rows
                )
                verdicts.append((f"step-{i}-restriction-semisimple-v{v_idx}",
                                 killed, {"radical_dim": rad_k.dim}, not killed))
        # Assumption: all simples of the quotient are one-dimensional.
        ideal = extended_augmentation_ideal(h_big, k_big)
        quo, _qm = quotient_hopf(h_big, ideal)
        q_dims = simple_dimensions(quo.algebra, _child_seed(child, 4))
        one_dim = all(d == 1 for d in q_dims)
        verdicts.append((f"step-{i}-quotient-simples-one-dimensional", one_dim,
                         {"dims": q_dims}, not one_dim))
        return verdicts

    all_step_verdicts = _pmap(refine, range(1, len(chain)), jobs)
    for verdict_list in all_step_verdicts:
        for name, passed, evidence, is_assumption in verdict_list:
            report.add(name, passed, **evidence)
            if not passed and is_assumption:
                assumption_failed.append(name)

    if not report.ok:
        if assumption_failed and all(
            v.passed or v.check in assumption_failed for v in report.verdicts
        ):
            return report, EXIT_ASSUMPTION_VIOLATED
        return report, EXIT_ASSERTION_FAILED
    return report, EXIT_OK


def run_clifford_report(hopf_path: str, sub_path: str, seed: int = 0,
                        jobs: int = 1) -> tuple[Report, int]:
    report = Report(command="clifford-report", instance=hopf_path, seed=seed)
    hopf, code = _load_hopf_for_command(report, hopf_path)
    if hopf is None:
        return report, code
    try:
        sub_rows = fileio.subspace_from_dict(fileio.read_json(sub_path), hopf.field)
    except RecipeError as exc:
        report.add("subspace-parse", False, error=str(exc))
        return report, EXIT_MALFORMED_INPUT
    report.inputs["subalgebra_sha256"] = fileio.file_sha256(sub_path)
    ok, sub, why = as_hopf_subalgebra(hopf, sub_rows)
    report.add("hopf-subalgebra", ok, detail=why)
    if not ok:
        return report, EXIT_ASSERTION_FAILED

    degraded = radical(hopf.algebra, _child_seed(seed, 1)).dim > 0
    if degraded:
        report.notes.append("ambient algebra is not semisimple; reporting factors only")

    h_big, k_big, ext_deg = _common_splitting_extension(hopf, sub_rows, seed)
    m = h_big.dim // k_big.dim
    chars = characters(h_big, _child_seed(seed, 2))
    k_series = chop(regular_module(k_big.hopf.algebra), _child_seed(seed, 3))

    def check_simple(item):
        index, (u_rep, _mult) = item
        child = _child_seed(seed, 100 + index)
        verdicts = []
        induced = induced_module(h_big, k_big, u_rep)
        series = chop(induced, child)
        factors = [f for f, _ in series.factors]
        dims = sorted(f.dim for f in factors)
        evidence = {"dim_u": u_rep.dim, "induced_dim": induced.dim, "factor_dims": dims}
        if degraded:
            verdicts.append((f"u{index}-factors", True, evidence))
            return verdicts
        verdicts.append((f"u{index}-equal-dimensions", len(set(dims)) == 1, evidence))
        v1 = factors[0]
        for j, vj in enumerate(factors[1:], start=2):
            link = None
            for chi in chars:
                if module_isomorphism(v1, twist_module(chi, vj)) is not None:
                    link = chi
                    break
            verdicts.append((
                f"u{index}-twist-link-{j}",
                link is not None,
                {"character": fileio.vec_to_json(h_big.field, link.row) if link else None},
            ))
        verdicts.append((
            f"u{index}-divisibility",
            (m * u_rep.dim) % v1.dim == 0,
            {"dim_v": v1.dim, "rank": m, "dim_u": u_rep.dim},
        ))
        return verdicts

    results = _pmap(check_simple, list(enumerate(k_series.factors)), jobs)
    for verdict_list in results:
        for name, passed, evidence in verdict_list:
            report.add(name, passed, **evidence)
    report.inputs["splitting_degree"] = ext_deg
    return report, EXIT_OK if report.ok else EXIT_ASSERTION_FAILED


def run_lies_over(hopf_path: str, sub_path: str, module_paths=(), seed: int = 0,
                  jobs: int = 1) -> tuple[Report, int]:
    report = Report(command="lies-over", instance=hopf_path, seed=seed)
    hopf, code = _load_hopf_for_command(report, hopf_path)
    if hopf is None:
        return report, code
    try:
        sub_rows = fileio.subspace_from_dict(fileio.read_json(sub_path), hopf.field)
    except RecipeError as exc:
        report.add("subspace-parse", False, error=str(exc))
        return report, EXIT_MALFORMED_INPUT
    report.inputs["subalgebra_sha256"] = fileio.file_sha256(sub_path)
    ok, sub, why = as_hopf_subalgebra(hopf, sub_rows)
    report.add("hopf-subalgebra", ok, detail=why)
    if not ok:
        return report, EXIT_ASSERTION_FAILED

    rad_k = radical(sub.hopf.algebra, _child_seed(seed, 1))
    report.add("subalgebra-semisimple", rad_k.dim == 0, radical_dim=rad_k.dim)
    if rad_k.dim:
        return report, EXIT_ASSUMPTION_VIOLATED

    # The simple modules to examine: user-provided files or all regular factors.
    simples = []
    if module_paths:
        for path in module_paths:
            try:
                mod = fileio.module_from_dict(fileio.read_json(path), hopf.algebra)
            except RecipeError as exc:
                report.add("module-parse", False, error=str(exc), path=path)
                return report, EXIT_MALFORMED_INPUT
            verdict, _w = is_irreducible(mod, _child_seed(seed, 5))
            if not verdict:
                report.add("module-simple", False, path=path)
                return report, EXIT_MALFORMED_INPUT
            simples.append(mod)
        report.inputs["module_sha256"] = [fileio.file_sha256(p) for p in module_paths]
    else:
        series = chop(regular_module(hopf.algebra), _child_seed(seed, 2))
        simples = [rep for rep, _ in series.factors]

    def check_module(item):
        index, v_rep = item
        child = _child_seed(seed, 100 + index)
        verdicts = []
        p_ideal = annihilator(v_rep)
        pk = intersect_ideal_with_subalgebra(p_ideal, sub.embedding)
        restr = restrict_module(v_rep, sub)
        r_series = chop(restr, child)
        for j, (u_rep, _mult) in enumerate(r_series.factors):
            q_ideal = annihilator(u_rep)
            contained = all(
                in_span(sub.hopf.field, list(row), [list(r) for r in q_ideal.rows], q_ideal.pivots)
                for row in pk.rows
            )
            verdicts.append((
                f"v{index}-lying-over-{j}",
                contained,
                {"dim_v": v_rep.dim, "dim_u": u_rep.dim,
                 "q_dim": q_ideal.dim, "p_cap_k_dim": pk.dim},
            ))
            # Nonzero bimodule factors: P + HQ and P + QH stay proper.
            q_ambient = [sub.to_ambient(list(r)) for r in q_ideal.rows]
            left_rows = [hopf.algebra.product(hopf.algebra.basis_vector(b), qv)
                         for b in range(hopf.dim) for qv in q_ambient]
            right_rows = [hopf.algebra.product(qv, hopf.algebra.basis_vector(b))
                          for b in range(hopf.dim) for qv in q_ambient]
            dim_left = len(rref(hopf.field, [list(r) for r in p_ideal.rows] + left_rows)[0])
            dim_right = len(rref(hopf.field, [list(r) for r in p_ideal.rows] + right_rows)[0])
            verdicts.append((
                f"v{index}-bimodule-nonzero-{j}",
                dim_left < hopf.dim and dim_right < hopf.dim,
                {"dim_p_plus_hq": dim_left, "dim_p_plus_qh": dim_right, "dim_h": hopf.dim},
            ))
        return verdicts

    results = _pmap(check_module, list(enumerate(simples)), jobs)
    for verdict_list in results:
        for name, passed, evidence in verdict_list:
            report.add(name, passed, **evidence)

    # Induced direction: factors of H (x)_K (K/Q) lie over Q.
    k_series = chop(regular_module(sub.hopf.algebra), _child_seed(seed, 3))
    for index, (u_rep, _mult) in enumerate(k_series.factors):
        q_ideal = annihilator(u_rep)
        k_over_q = quotient_module(regular_module(sub.hopf.algebra),
                                   [list(r) for r in q_ideal.rows], q_ideal.pivots)
        induced = induced_module(hopf, sub, k_over_q)
        i_series = chop(induced, _child_seed(seed, 200 + index))
        for j, (f_rep, _m) in enumerate(i_series.factors):
            p_ideal = annihilator(f_rep)
            pk = intersect_ideal_with_subalgebra(p_ideal, sub.embedding)
            contained = all(
                in_span(sub.hopf.field, list(row), [list(r) for r in q_ideal.rows], q_ideal.pivots)
                for row in pk.rows
            )
            report.add(f"induced-q{index}-factor{j}-lies-over", contained,
                       dim_factor=f_rep.dim, q_dim=q_ideal.dim)

    return report, EXIT_OK if report.ok else EXIT_ASSERTION_FAILED


# -- build ------------------------------------------------------------------------


def _resolve_group(value):
    if isinstance(value, str):
        return builtin_group(value)
    if isinstance(value, dict):
        return group_from_dict(value)
    raise RecipeError(f"cannot interpret group spec {value!r}")


def run_build(recipe_path: str, out_path: str, field_override: tuple[int, int] | None = None,
              seed: int = 0) -> tuple[Report, int]:
    report = Report(command="build", instance=recipe_path, seed=seed)
    try:
        recipe = fileio.read_json(recipe_path)
        construct = recipe["construct"]
        field_spec = recipe.get("field")
        if field_override is not None:
            field_spec = {"p": field_override[0], "k": field_override[1]}
        if field_spec is None:
            raise RecipeError("recipe needs a field")
        field = field_create(int(field_spec["p"]), int(field_spec.get("k", 1)))
    except (RecipeError, KeyError, TypeError, ValueError) as exc:
        report.add("recipe-parse", False, error=str(exc))
        return report, EXIT_MALFORMED_INPUT
    report.inputs["recipe_sha256"] = fileio.file_sha256(recipe_path)

    try:
        if construct == "group_algebra":
            result = group_algebra(_resolve_group(recipe["group"]), field)
        elif construct == "dual_group_algebra":
            result = dual_group_algebra(_resolve_group(recipe["group"]), field)
        elif construct == "bicrossproduct":
            if "group" in recipe:
                group = _resolve_group(recipe["group"])
                pair = matched_pair_from_factorization(
                    group, recipe["f_elements"], recipe["q_elements"]
                )
            else:
                pair = MatchedPair(
                    _resolve_group(recipe["f_group"]),
                    _resolve_group(recipe["q_group"]),
                    recipe["action_fq"],
                    recipe["action_qf"],
                )
            result = bicrossproduct(pair, field)
        elif construct == "smash_algebra":
            y_group = _resolve_group(recipe["y_group"])
            action, _actor, _target = translation_action(y_group, recipe["x_elements"], field)
            result = smash_algebra(action.target, action.actor, action)
        else:
            report.add("recipe-parse", False, error=f"unknown construct {construct!r}")
            return report, EXIT_MALFORMED_INPUT
    except (KeyError, TypeError, ValueError) as exc:
        report.add("recipe-parse", False, error=str(exc))
        return report, EXIT_MALFORMED_INPUT
    except HopfRepError as exc:
        report.add("construction-axioms", False, error=str(exc))
        return report, EXIT_ASSERTION_FAILED

    if isinstance(result, HopfData):
        fileio.save_hopf(out_path, result)
        kind = "hopf"
        meta = result.meta
    else:
        fileio.save_algebra(out_path, result)
        kind = "algebra"
        meta = {}
    report.instance = result.name
    report.add("constructed", True, kind=kind, dim=result.dim, out=out_path, **meta)
    return report, EXIT_OK
