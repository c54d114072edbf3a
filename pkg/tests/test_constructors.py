"""Groups, group algebras, duals, conjugation, bicrossproducts, smash
products, induction and restriction."""

from __future__ import annotations

import pytest

from hopfrep.errors import GroupError, HopfError
from hopfrep.gf import field_create
from hopfrep.linalg import DenseMatrix
from hopfrep.algebra import regular_module
from hopfrep.groups import (
    GroupTable,
    builtin_group,
    check_group_axioms,
    commutator_subgroup,
    coset_representatives,
    group_from_table,
    is_normal_subgroup,
    subgroup_table,
)
from hopfrep.constructors import (
    bicrossproduct,
    conjugate_module,
    derived_series_chain,
    dual_group_algebra,
    dual_hopf,
    group_algebra,
    induced_module,
    matched_pair_from_factorization,
    restrict_module,
    smash_algebra,
    translation_action,
)
from hopfrep.hopf import as_hopf_subalgebra, characters, is_normal, trivial_module
from hopfrep.meataxe import chop, is_irreducible, module_isomorphism, radical


def test_builtin_groups_validate():
    for name in ("C1", "C2", "C3", "C4", "C12", "D1", "D4", "D6", "S3", "S4", "A4", "Q8"):
        g = builtin_group(name)
        assert g.validated
    assert builtin_group("C1").order == 1
    s3 = builtin_group("S3")
    assert s3.order == 6 and not s3.is_abelian()
    assert builtin_group("Q8").order == 8
    assert builtin_group("S4").order == 24


def test_unknown_builtin_rejected():
    with pytest.raises(GroupError):
        builtin_group("E8")


def test_corrupted_table_reports_triple():
    c4 = builtin_group("C4")
    mult = [list(r) for r in c4.mult]
    mult[1][2] = 1  # break the Latin square / associativity
    bad = GroupTable(mult, labels=c4.labels)
    report = check_group_axioms(bad)
    assert not report.ok
    assert report.first_failure()["check"] in ("latin-row", "latin-column", "associativity")


def test_group_algebra_of_trivial_group_is_base_field(gf7):
    hopf = group_algebra(builtin_group("C1"), gf7)
    assert hopf.dim == 1
    assert hopf.algebra.mult[0][0] == [1]


def test_kc2_square_relation(gf7):
    hopf = group_algebra(builtin_group("C2"), gf7)
    assert hopf.algebra.mult[1][1] == [1, 0]


def test_dual_is_commutative_for_every_group(gf3):
    for name in ("C4", "S3", "D4", "Q8"):
        dual = dual_group_algebra(builtin_group(name), gf3)
        assert dual.algebra.is_commutative()


def test_dual_of_group_algebra_matches_dual_constructor(s3, gf2):
    lhs = dual_hopf(group_algebra(s3, gf2))
    rhs = dual_group_algebra(s3, gf2)
    assert lhs.algebra.structconst == rhs.algebra.structconst
    assert lhs.coproduct == rhs.coproduct
    assert lhs.counit == rhs.counit
    assert lhs.antipode == rhs.antipode


def test_dual_of_base_field_is_base_field(gf7):
    hopf = group_algebra(builtin_group("C1"), gf7)
    d = dual_hopf(hopf)
    assert d.algebra.structconst == hopf.algebra.structconst


def test_dual_is_involutive_on_corpus(gf2, gf7):
    for hopf in (group_algebra(builtin_group("S3"), gf7),
                 dual_group_algebra(builtin_group("D4"), gf2),
                 group_algebra(builtin_group("Q8"), gf7)):
        double = dual_hopf(dual_hopf(hopf))
        assert double.algebra.structconst == hopf.algebra.structconst
        assert double.coproduct == hopf.coproduct
        assert double.counit == hopf.counit
        assert double.antipode == hopf.antipode


def test_dual_of_dual_s3_gf2_is_not_semisimple(dual_s3_gf2):
    # k^{S3} over GF(2) is semisimple, its dual kS3 is not: the dual side
    # certifies that the original is not cosemisimple.
    assert radical(dual_s3_gf2.algebra, seed=0).dim == 0
    back = dual_hopf(dual_s3_gf2)
    assert radical(back.algebra, seed=0).dim > 0


def test_commutator_subgroups():
    for name, expected in (("C4", 1), ("S3", 3), ("Q8", 2), ("A4", 4), ("D4", 2)):
        elems, sub = commutator_subgroup(builtin_group(name))
        assert len(elems) == expected
        assert sub.order == expected
    q8_elems, _ = commutator_subgroup(builtin_group("Q8"))
    q8 = builtin_group("Q8")
    assert all(q8.element_order(g) <= 2 for g in q8_elems)


def test_conjugate_by_central_element_is_identity(gf7):
    d4 = builtin_group("D4")
    elems, _ = commutator_subgroup(d4)  # {1, r^2}, central
    sub, _ = subgroup_table(d4, elems)
    k = group_algebra(sub, gf7)
    reg = regular_module(k.algebra)
    central = elems[1]
    conj = conjugate_module(d4, elems, central, reg)
    assert all(a == b for a, b in zip(conj.action, reg.action))


def test_conjugation_swaps_nontrivial_c3_characters(s3, gf7):
    elems, sub = commutator_subgroup(s3)
    k = group_algebra(sub, gf7)
    chars = characters(k, seed=0)
    nontrivial = [c for c in chars if c.row != tuple(k.counit)]
    transposition = next(g for g in range(s3.order) if s3.element_order(g) == 2)
    for chi in nontrivial:
        conj = conjugate_module(s3, elems, transposition, trivial_module(k, chi))
        row = tuple(m.data[0][0] for m in conj.action)
        assert row != chi.row and row in {c.row for c in nontrivial}


def test_conjugation_by_subgroup_element_gives_isomorphic_module(s3, gf7):
    elems, sub = commutator_subgroup(s3)
    k = group_algebra(sub, gf7)
    reg = regular_module(k.algebra)
    series = chop(reg, seed=0)
    simple = series.factors[0][0]
    inner = elems[1]
    conj = conjugate_module(s3, elems, inner, simple)
    assert module_isomorphism(simple, conj) is not None


def test_conjugation_outside_normalizer_rejected(gf7):
    s4 = builtin_group("S4")
    # A non-normal C2 inside S4.
    trans = next(g for g in range(24) if s4.element_order(g) == 2
                 and not is_normal_subgroup(s4, [s4.identity, g]))
    elems = [s4.identity, trans]
    k = group_algebra(subgroup_table(s4, elems)[0], gf7)
    reg = regular_module(k.algebra)
    mover = next(g for g in range(24) if s4.conj(g, trans) not in elems)
    with pytest.raises(GroupError):
        conjugate_module(s4, elems, mover, reg)


# -- bicrossproducts ---------------------------------------------------------------


def test_bicrossproduct_with_trivial_q_is_group_algebra(gf7):
    c3 = builtin_group("C3")
    pair = matched_pair_from_factorization(c3, list(range(3)), [0])
    hopf = bicrossproduct(pair, gf7)
    plain = group_algebra(c3, gf7)
    assert hopf.dim == 3
    assert hopf.algebra.structconst == plain.algebra.structconst
    assert hopf.coproduct == plain.coproduct


def test_bicrossproduct_with_trivial_f_is_dual_group_algebra(gf7):
    c3 = builtin_group("C3")
    pair = matched_pair_from_factorization(c3, [0], list(range(3)))
    hopf = bicrossproduct(pair, gf7)
    dual = dual_group_algebra(c3, gf7)
    assert hopf.dim == 3
    assert hopf.algebra.structconst == dual.algebra.structconst
    assert hopf.coproduct == dual.coproduct


def test_bicrossproduct_s3_factorization(s3, gf7):
    elems, _ = commutator_subgroup(s3)
    transposition = next(g for g in range(s3.order) if s3.element_order(g) == 2)
    pair = matched_pair_from_factorization(s3, elems, [s3.identity, transposition])
    hopf = bicrossproduct(pair, gf7)
    assert hopf.validated and hopf.dim == 6
    assert "convention" in hopf.meta
    # Normal Hopf subalgebra of functions on Q.
    nf = pair.f_group.order
    rows = [[1 if t == q * nf else 0 for t in range(6)] for q in range(2)]
    ok, sub, _ = as_hopf_subalgebra(hopf, rows)
    assert ok and sub.dim == 2
    assert is_normal(hopf, sub)


def test_matched_pair_validation_rejects_bad_actions():
    c2 = builtin_group("C2")
    c3 = builtin_group("C3")
    from hopfrep.constructors import MatchedPair, check_matched_pair

    bad = MatchedPair(c3, c2, [[0, 1, 2], [0, 1, 2]], [[0, 0, 0], [1, 0, 1]])
    report = check_matched_pair(bad)
    assert not report.ok


# -- smash products ------------------------------------------------------------------


def test_translation_action_trivial_subgroup(s3, gf2):
    action, actor, target = translation_action(s3, [s3.identity], gf2)
    assert target.dim == 1
    for y in range(s3.order):
        vec = action.act(y, [1])
        assert vec == ([1] if y == s3.identity else [0])


def test_translation_action_c2_on_itself(gf7):
    c2 = builtin_group("C2")
    action, actor, target = translation_action(c2, [0, 1], gf7)
    # e_g acts on g as g; e_1 kills g.
    assert action.act(1, [0, 1]) == [0, 1]
    assert action.act(0, [0, 1]) == [0, 0]
    assert action.act(0, [1, 0]) == [1, 0]


def test_smash_with_trivial_action_is_tensor_algebra(gf7):
    c2 = builtin_group("C2")
    a = group_algebra(c2, gf7)
    b = group_algebra(builtin_group("C1"), gf7)
    action, actor, target = translation_action(builtin_group("C1"), [0], gf7)
    # B = base field: A # B recovers A.
    smash = smash_algebra(target, actor, action)
    assert smash.dim == 1


def test_smash_18_dim_is_associative(s3, gf2):
    elems, _ = commutator_subgroup(s3)
    action, actor, target = translation_action(s3, elems, gf2)
    smash = smash_algebra(target, actor, action)
    assert smash.dim == 18
    assert smash.validated


def test_smash_tensor_with_group_algebra_actor(gf7):
    # Trivial action through the counit: b acts as eps(b); smash = tensor product.
    c2 = builtin_group("C2")
    a = group_algebra(c2, gf7)
    b = group_algebra(c2, gf7)
    from hopfrep.constructors import ActionData, check_module_algebra_action

    # tensor[b][a] = eps(b) * e_a: the action factors through the counit.
    tensor = []
    for bi in range(2):
        row = []
        for ai in range(2):
            vec = [0, 0]
            vec[ai] = b.counit[bi]
            row.append(vec)
        tensor.append(row)
    action = ActionData(b, a, tensor)
    check_module_algebra_action(action).raise_if_failed()
    smash = smash_algebra(a, b, action)
    assert smash.dim == 4
    # Pure tensor products multiply componentwise.
    prod = smash.product([0, 1, 0, 0], [0, 0, 1, 0])  # (g # 1)(1 # g)
    assert prod == [0, 0, 0, 1]


# -- induction and restriction ---------------------------------------------------------


def test_induction_from_whole_algebra_is_identity(ks3_gf7):
    rows = [ks3_gf7.algebra.basis_vector(i) for i in range(6)]
    ok, whole, _ = as_hopf_subalgebra(ks3_gf7, rows)
    series = chop(regular_module(ks3_gf7.algebra), seed=42)
    two = next(rep for rep, _ in series.factors if rep.dim == 2)
    # Re-express the module over the standalone copy of H.
    action = [two.act_element(list(r)) for r in whole.inclusion]
    from hopfrep.algebra import ModuleRep, check_module_axioms

    u = ModuleRep(whole.hopf.algebra, 2, action)
    check_module_axioms(u).raise_if_failed()
    induced = induced_module(ks3_gf7, whole, u)
    assert induced.dim == 2
    assert module_isomorphism(induced, two) is not None


def test_induction_of_regular_submodule_is_regular(ks3_gf7, c3_rows):
    ok, kc3, _ = as_hopf_subalgebra(ks3_gf7, c3_rows)
    u = regular_module(kc3.hopf.algebra)
    induced = induced_module(ks3_gf7, kc3, u)
    assert induced.dim == 6
    assert module_isomorphism(induced, regular_module(ks3_gf7.algebra)) is not None


def test_induction_of_nontrivial_character_is_two_dim_simple(ks3_gf7, c3_rows):
    ok, kc3, _ = as_hopf_subalgebra(ks3_gf7, c3_rows)
    chars = characters(kc3.hopf, seed=0)
    nontrivial = next(c for c in chars if c.row != tuple(kc3.hopf.counit))
    induced = induced_module(ks3_gf7, kc3, trivial_module(kc3.hopf, nontrivial))
    assert induced.dim == 2
    verdict, _ = is_irreducible(induced, seed=0)
    assert verdict


def test_induced_dimension_law(ks3_gf7, c3_rows, gf7):
    ok, kc3, _ = as_hopf_subalgebra(ks3_gf7, c3_rows)
    for chi in characters(kc3.hopf, seed=0):
        m = induced_module(ks3_gf7, kc3, trivial_module(kc3.hopf, chi))
        assert m.dim * kc3.dim == ks3_gf7.dim * 1


def test_restriction_to_unit_span(ks3_gf7):
    ok, triv, _ = as_hopf_subalgebra(ks3_gf7, [list(ks3_gf7.algebra.unit)])
    series = chop(regular_module(ks3_gf7.algebra), seed=42)
    two = next(rep for rep, _ in series.factors if rep.dim == 2)
    restr = restrict_module(two, triv)
    assert restr.dim == 2 and len(restr.action) == 1
    assert restr.action[0] == DenseMatrix.identity(ks3_gf7.field, 2)


def test_restriction_of_two_dim_splits_into_conjugate_characters(ks3_gf7, c3_rows):
    ok, kc3, _ = as_hopf_subalgebra(ks3_gf7, c3_rows)
    series = chop(regular_module(ks3_gf7.algebra), seed=42)
    two = next(rep for rep, _ in series.factors if rep.dim == 2)
    restr = restrict_module(two, kc3)
    sub_series = chop(restr, seed=0)
    rows = sorted(tuple(m.data[0][0] for m in rep.action) for rep, _ in sub_series.factors)
    nontrivial = sorted(c.row for c in characters(kc3.hopf, seed=0)
                        if c.row != tuple(kc3.hopf.counit))
    assert rows == nontrivial


def test_derived_series_chain_shapes(s3, gf7):
    chain = derived_series_chain(s3, gf7)
    assert [len(step) for step in chain] == [1, 3, 6]
    a4 = builtin_group("A4")
    chain = derived_series_chain(a4, gf7)
    assert [len(step) for step in chain] == [1, 4, 12]


def test_coset_representatives(s3):
    elems, _ = commutator_subgroup(s3)
    reps = coset_representatives(s3, elems)
    assert len(reps) == 2 and reps[0] == 0
