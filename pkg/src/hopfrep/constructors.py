"""Concrete instance factories: group algebras, duals, bicrossproducts,
smash products, conjugation twists, and module induction/restriction.

Every Hopf-valued constructor runs the full axiom check before returning.
"""

from __future__ import annotations

from .errors import AlgebraError, GroupError, HopfError, ValidationReport, require_validated
from .gf import FiniteField, subfield_embedding
from .linalg import DenseMatrix, rref, solve_coords
from .algebra import AlgebraData, ModuleRep, check_algebra_axioms, check_module_axioms
from .groups import (
    GroupTable,
    commutator_subgroup,
    coset_representatives,
    is_normal_subgroup,
    is_subgroup,
    subgroup_table,
)
from .hopf import HopfData, HopfSubalgebra, check_hopf_axioms, find_antipode
from .meataxe import extend_scalars_algebra


def group_algebra(group: GroupTable, field: FiniteField) -> HopfData:
    """kG: basis = group elements, Delta g = g (x) g, S(g) = g^{-1}."""
    require_validated(group, "group")
    n = group.order
    structconst = [(i, j, group.mul(i, j), 1) for i in range(n) for j in range(n)]
    unit = [1 if i == group.identity else 0 for i in range(n)]
    algebra = AlgebraData(field, n, list(group.labels), structconst, unit,
                          name=f"k[{group.name}] over {field!r}")
    check_algebra_axioms(algebra).raise_if_failed(AlgebraError)
    coproduct = []
    for i in range(n):
        row = [0] * (n * n)
        row[i * n + i] = 1
        coproduct.append(row)
    counit = [1] * n
    antipode = [[1 if j == group.inv(i) else 0 for j in range(n)] for i in range(n)]
    hopf = HopfData(algebra, coproduct, counit, antipode, name=algebra.name)
    check_hopf_axioms(hopf).raise_if_failed(HopfError)
    return hopf


def dual_group_algebra(group: GroupTable, field: FiniteField) -> HopfData:
    """k^G: delta functions with pointwise product; always semisimple."""
    require_validated(group, "group")
    n = group.order
    structconst = [(i, i, i, 1) for i in range(n)]
    unit = [1] * n
    algebra = AlgebraData(field, n, [f"e[{lab}]" for lab in group.labels], structconst, unit,
                          name=f"k^[{group.name}] over {field!r}")
    check_algebra_axioms(algebra).raise_if_failed(AlgebraError)
    coproduct = []
    for g in range(n):
        row = [0] * (n * n)
        for u in range(n):
            for v in range(n):
                if group.mul(u, v) == g:
                    row[u * n + v] = 1
        coproduct.append(row)
    counit = [1 if g == group.identity else 0 for g in range(n)]
    antipode = [[1 if j == group.inv(i) else 0 for j in range(n)] for i in range(n)]
    hopf = HopfData(algebra, coproduct, counit, antipode, name=algebra.name)
    check_hopf_axioms(hopf).raise_if_failed(HopfError)
    return hopf


def dual_hopf(hopf: HopfData) -> HopfData:
    """Transpose all structure maps across the canonical pairing."""
    require_validated(hopf, "Hopf data")
    A = hopf.algebra
    n = hopf.dim
    # Dual product from the coproduct: f_a f_b on b_c reads Delta(b_c) at (a, b).
    structconst = []
    for a in range(n):
        for b in range(n):
            for c in range(n):
                coeff = hopf.coproduct[c][a * n + b]
                if coeff:
                    structconst.append((a, b, c, coeff))
    unit = list(hopf.counit)
    algebra = AlgebraData(hopf.field, n, [f"{lab}*" for lab in A.labels], structconst, unit,
                          name=f"dual of {hopf.name}")
    check_algebra_axioms(algebra).raise_if_failed(AlgebraError)
    # Dual coproduct from the product; dual counit from the unit.
    coproduct = []
    for c in range(n):
        row = [0] * (n * n)
        for a in range(n):
            for b in range(n):
                coeff = A.mult[a][b][c]
                if coeff:
                    row[a * n + b] = coeff
        coproduct.append(row)
    counit = list(A.unit)
    antipode = hopf.antipode.transpose()
    out = HopfData(algebra, coproduct, counit, antipode, name=algebra.name)
    check_hopf_axioms(out).raise_if_failed(HopfError)
    return out


def extend_scalars_hopf(hopf: HopfData, big_field: FiniteField) -> HopfData:
    """The same Hopf structure over an extension field."""
    require_validated(hopf, "Hopf data")
    emb = subfield_embedding(hopf.field, big_field)
    algebra = extend_scalars_algebra(hopf.algebra, big_field)
    coproduct = [[emb[c] for c in row] for row in hopf.coproduct]
    counit = [emb[c] for c in hopf.counit]
    antipode = [[emb[c] for c in row] for row in hopf.antipode.data]
    out = HopfData(algebra, coproduct, counit, antipode,
                   name=f"{hopf.name} over {big_field!r}", meta=dict(hopf.meta))
    out.validated = True  # Hopf identities are preserved by ring embeddings.
    return out


def conjugate_module(group: GroupTable, normal_elements, g: int, module: ModuleRep) -> ModuleRep:
    """Precompose a k[N]-module with conjugation by g: n acts as rho(g^{-1} n g)."""
    require_validated(module, "module")
    elements = list(normal_elements)
    index = {e: i for i, e in enumerate(elements)}
    action = []
    for n_elem in elements:
        conj = group.conj(g, n_elem)
        if conj not in index:
            raise GroupError("conjugation leaves the subgroup; it is not normal")
        action.append(module.action[index[conj]])
    out = ModuleRep(module.algebra, module.dim, action,
                    name=f"conjugate of {module.name} by {group.labels[g]}")
    out.validated = True
    return out


# -- matched pairs and bicrossproducts ------------------------------------------


class MatchedPair:
    """Two groups acting compatibly on each other (trivial cocycles)."""

    def __init__(self, f_group: GroupTable, q_group: GroupTable, action_fq, action_qf, name=""):
        self.f_group = f_group
        self.q_group = q_group
        # action_fq[q][f] = index in F of (q acting on f); action_qf[q][f] in Q.
        self.action_fq = [list(r) for r in action_fq]
        self.action_qf = [list(r) for r in action_qf]
        self.validated = False
        self.name = name or f"matched pair ({f_group.name}, {q_group.name})"


def check_matched_pair(pair: MatchedPair) -> ValidationReport:
    """Action axioms, compatibility identities, and trivial identity actions."""
    report = ValidationReport(subject=pair.name)
    F, Q = pair.f_group, pair.q_group
    act_f = pair.action_fq
    act_q = pair.action_qf
    for q in range(Q.order):
        if act_f[q][F.identity] != F.identity:
            report.fail("identity-target", q=q)
            return report
        if act_q[q][F.identity] != q:
            report.fail("identity-stabilizer", q=q)
            return report
    for f in range(F.order):
        if act_f[Q.identity][f] != f:
            report.fail("identity-actor", f=f)
            return report
        if act_q[Q.identity][f] != Q.identity:
            report.fail("identity-transport", f=f)
            return report
    for q in range(Q.order):
        for f in range(F.order):
            for f2 in range(F.order):
                # q > (f f2) = (q > f) ((q < f) > f2)
                lhs = act_f[q][F.mul(f, f2)]
                rhs = F.mul(act_f[q][f], act_f[act_q[q][f]][f2])
                if lhs != rhs:
                    report.fail("left-action-product", triple=(q, f, f2))
                    return report
                # q < (f f2) = (q < f) < f2
                if act_q[q][F.mul(f, f2)] != act_q[act_q[q][f]][f2]:
                    report.fail("right-action-product", triple=(q, f, f2))
                    return report
    for q in range(Q.order):
        for q2 in range(Q.order):
            for f in range(F.order):
                # (q q2) > f = q > (q2 > f)
                if act_f[Q.mul(q, q2)][f] != act_f[q][act_f[q2][f]]:
                    report.fail("left-action-compose", triple=(q, q2, f))
                    return report
                # (q q2) < f = (q < (q2 > f)) (q2 < f)
                lhs = act_q[Q.mul(q, q2)][f]
                rhs = Q.mul(act_q[q][act_f[q2][f]], act_q[q2][f])
                if lhs != rhs:
                    report.fail("compatibility", triple=(q, q2, f))
                    return report
    pair.validated = True
    return report


def matched_pair_from_factorization(group: GroupTable, f_elements, q_elements) -> MatchedPair:
    """Derive both actions from an exact factorization G = F . Q."""
    require_validated(group, "group")
    f_elements = list(f_elements)
    q_elements = list(q_elements)
    if not (is_subgroup(group, f_elements) and is_subgroup(group, q_elements)):
        raise GroupError("factorization components must be subgroups")
    if set(f_elements) & set(q_elements) != {group.identity}:
        raise GroupError("factorization components must intersect trivially")
    if len(f_elements) * len(q_elements) != group.order:
        raise GroupError("orders do not multiply to the group order")
    f_sub, _ = subgroup_table(group, f_elements)
    q_sub, _ = subgroup_table(group, q_elements)
    f_index = {g: i for i, g in enumerate(f_elements)}
    q_index = {g: i for i, g in enumerate(q_elements)}
    # Factor every product q f as f' q'.
    action_fq = [[0] * f_sub.order for _ in range(q_sub.order)]
    action_qf = [[0] * f_sub.order for _ in range(q_sub.order)]
    for qi, q in enumerate(q_elements):
        for fi, f in enumerate(f_elements):
            x = group.mul(q, f)
            hits = [
                (f_index[a], q_index[b])
                for a in f_elements
                for b in q_elements
                if group.mul(a, b) == x
            ]
            if len(hits) != 1:
                raise GroupError("factorization is not exact")
            action_fq[qi][fi], action_qf[qi][fi] = hits[0]
    pair = MatchedPair(f_sub, q_sub, action_fq, action_qf,
                       name=f"matched pair from {group.name} = {f_sub.name}.{q_sub.name}")
    check_matched_pair(pair).raise_if_failed(GroupError)
    return pair


def _bicross_variants(pair: MatchedPair):
    """Orientation variants tried in order; first one passing axioms wins."""
    F, Q = pair.f_group, pair.q_group
    act_f = pair.action_fq
    act_q = pair.action_qf

    def product_forward(q, f, q2, f2):
        # (e_q (x) f)(e_q2 (x) f2) = [q < f == q2] e_q (x) f f2
        return (q, F.mul(f, f2)) if act_q[q][f] == q2 else None

    def product_mirror(q, f, q2, f2):
        return (q2, F.mul(f, f2)) if act_q[q2][f2] == q else None

    def coproduct_forward(q, f):
        # sum over a b = q of (e_a (x) b > f) (x) (e_b (x) f)
        out = []
        for a in range(Q.order):
            for b in range(Q.order):
                if Q.mul(a, b) == q:
                    out.append(((a, act_f[b][f]), (b, f)))
        return out

    def coproduct_mirror(q, f):
        out = []
        for a in range(Q.order):
            for b in range(Q.order):
                if Q.mul(a, b) == q:
                    out.append(((a, f), (b, act_f[a][f])))
        return out

    yield "forward/forward", product_forward, coproduct_forward
    yield "forward/mirror", product_forward, coproduct_mirror
    yield "mirror/forward", product_mirror, coproduct_forward
    yield "mirror/mirror", product_mirror, coproduct_mirror


def bicrossproduct(pair: MatchedPair, field: FiniteField) -> HopfData:
    """Functions on Q tensor the group algebra of F, with trivial cocycles.

    Tries the fixed list of orientation variants; the antipode is solved
    from the bialgebra by linear algebra.  The passing convention is
    recorded in the result metadata.
    """
    if not pair.validated:
        check_matched_pair(pair).raise_if_failed(GroupError)
    F, Q = pair.f_group, pair.q_group
    nf, nq = F.order, Q.order
    n = nf * nq
    idx = lambda q, f: q * nf + f
    labels = [f"e[{Q.labels[q]}]|{F.labels[f]}" for q in range(nq) for f in range(nf)]
    failures = []
    for variant, product, coproduct in _bicross_variants(pair):
        structconst = []
        for q in range(nq):
            for f in range(nf):
                for q2 in range(nq):
                    for f2 in range(nf):
                        hit = product(q, f, q2, f2)
                        if hit is not None:
                            structconst.append((idx(q, f), idx(q2, f2), idx(*hit), 1))
        unit = [0] * n
        for q in range(nq):
            unit[idx(q, F.identity)] = 1
        algebra = AlgebraData(field, n, labels, structconst, unit,
                              name=f"bicrossproduct({F.name}, {Q.name}) over {field!r}")
        rep = check_algebra_axioms(algebra)
        if not rep.ok:
            failures.append((variant, rep.first_failure()))
            continue
        grid = []
        for q in range(nq):
            for f in range(nf):
                row = [0] * (n * n)
                for (left, right) in coproduct(q, f):
                    row[idx(*left) * n + idx(*right)] = 1
                grid.append(row)
        counit = [0] * n
        for f in range(nf):
            counit[idx(Q.identity, f)] = 1
        antipode = find_antipode(algebra, grid, counit)
        if antipode is None:
            failures.append((variant, {"check": "antipode-unsolvable"}))
            continue
        hopf = HopfData(algebra, grid, counit, antipode, name=algebra.name,
                        meta={"convention": variant})
        rep = check_hopf_axioms(hopf)
        if rep.ok:
            return hopf
        failures.append((variant, rep.first_failure()))
    raise HopfError(f"no bicrossproduct convention passes the axioms: {failures}")


# -- module-algebra actions and smash products ----------------------------------


class ActionData:
    """A module-algebra action of one Hopf algebra on another: b acts on a."""

    def __init__(self, actor: HopfData, target: HopfData, tensor, name=""):
        self.actor = actor
        self.target = target
        # tensor[b][a] = coefficient row (over the target basis) of b acting on a.
        self.tensor = [[list(v) for v in row] for row in tensor]
        self.validated = False
        self.name = name or f"action of {actor.name} on {target.name}"

    def act(self, b_index: int, avec) -> list[int]:
        F = self.target.field
        out = [0] * self.target.dim
        addmul = F.row_addmul
        for a_idx, c in enumerate(avec):
            if c:
                out = addmul(out, self.tensor[b_index][a_idx], c)
        return out

    def act_element(self, bvec, avec) -> list[int]:
        F = self.target.field
        out = [0] * self.target.dim
        addmul = F.row_addmul
        for b_idx, cb in enumerate(bvec):
            if cb:
                out = addmul(out, self.act(b_idx, avec), cb)
        return out


def check_module_algebra_action(action: ActionData) -> ValidationReport:
    """Measuring conditions: products, units, and counit compatibility."""
    report = ValidationReport(subject=action.name)
    B, A = action.actor, action.target
    F = A.field
    addmul = F.row_addmul
    for b in range(B.dim):
        # b acts on 1 as counit(b) . 1
        lhs = action.act(b, list(A.algebra.unit))
        rhs = F.row_scale(list(A.algebra.unit), B.counit[b])
        if lhs != rhs:
            report.fail("unit-measuring", b=b)
            return report
    for a in range(A.dim):
        e = A.algebra.basis_vector(a)
        if action.act_element(list(B.algebra.unit), e) != e:
            report.fail("actor-unit", a=a)
            return report
    for b in range(B.dim):
        for a1 in range(A.dim):
            for a2 in range(A.dim):
                lhs = action.act(b, A.algebra.mult[a1][a2])
                rhs = [0] * A.dim
                for b1, b2, c in B.delta_sparse(b):
                    part = A.algebra.product(
                        action.act(b1, A.algebra.basis_vector(a1)),
                        action.act(b2, A.algebra.basis_vector(a2)),
                    )
                    rhs = addmul(rhs, part, c)
                if lhs != rhs:
                    report.fail("product-measuring", triple=(b, a1, a2))
                    return report
    action.validated = True
    return report


def translation_action(y_group: GroupTable, x_elements, field: FiniteField) -> tuple[ActionData, HopfData, HopfData]:
    """Functions on Y acting on the group algebra of a subgroup X <= Y.

    On group-likes: e_y acts on x as the pairing <e_y, x> x, so only the
    delta at x survives.  Returns (action, actor k^Y, target kX).
    """
    require_validated(y_group, "group")
    x_elements = list(x_elements)
    if not is_subgroup(y_group, x_elements):
        raise GroupError("X is not a subgroup of Y")
    x_sub, _ = subgroup_table(y_group, x_elements)
    target = group_algebra(x_sub, field)
    actor = dual_group_algebra(y_group, field)
    tensor = []
    for y in range(y_group.order):
        row = []
        for xi, x in enumerate(x_elements):
            vec = [0] * x_sub.order
            if y == x:
                vec[xi] = 1
            row.append(vec)
        tensor.append(row)
    action = ActionData(actor, target, tensor,
                        name=f"translation action of k^[{y_group.name}] on k[{x_sub.name}]")
    check_module_algebra_action(action).raise_if_failed(HopfError)
    return action, actor, target


def smash_algebra(target: HopfData, actor: HopfData, action: ActionData,
                  hopf_candidate: dict | None = None):
    """Smash product A # B: (a # b)(a' # b') = sum a (b1 acting on a') # b2 b'.

    Returns the validated algebra only; a full Hopf structure requires
    coaction data, which may be supplied via `hopf_candidate` (grids for
    coproduct/counit/antipode) and is then axiom-checked.
    """
    if action.target is not target or action.actor is not actor:
        raise HopfError("action does not connect the given factors")
    if not action.validated:
        check_module_algebra_action(action).raise_if_failed(HopfError)
    A, B = target, actor
    F = A.field
    na, nb = A.dim, B.dim
    n = na * nb
    idx = lambda a, b: a * nb + b
    labels = [f"{A.algebra.labels[a]}#{B.algebra.labels[b]}" for a in range(na) for b in range(nb)]
    structconst = []
    for a in range(na):
        for b in range(nb):
            for a2 in range(na):
                for b2 in range(nb):
                    out = {}
                    for b1, brest, c in B.delta_sparse(b):
                        acted = action.act(b1, A.algebra.basis_vector(a2))
                        left = A.algebra.product(A.algebra.basis_vector(a), acted)
                        right = B.algebra.mult[brest][b2]
                        for s, cs in enumerate(left):
                            if not cs:
                                continue
                            for t, ct in enumerate(right):
                                if ct:
                                    key = idx(s, t)
                                    out[key] = F.add(out.get(key, 0), F.mul(c, F.mul(cs, ct)))
                    for key, coeff in out.items():
                        if coeff:
                            structconst.append((idx(a, b), idx(a2, b2), key, coeff))
    unit = [0] * n
    for a, ca in enumerate(A.algebra.unit):
        for b, cb in enumerate(B.algebra.unit):
            coeff = F.mul(ca, cb)
            if coeff:
                unit[idx(a, b)] = coeff
    algebra = AlgebraData(F, n, labels, structconst, unit,
                          name=f"{A.name} # {B.name}")
    check_algebra_axioms(algebra).raise_if_failed(AlgebraError)
    if hopf_candidate is None:
        return algebra
    hopf = HopfData(algebra, hopf_candidate["coproduct"], hopf_candidate["counit"],
                    hopf_candidate["antipode"], name=algebra.name)
    check_hopf_axioms(hopf).raise_if_failed(HopfError)
    return hopf


# -- induction and restriction ---------------------------------------------------


def induced_module(hopf: HopfData, sub: HopfSubalgebra, module: ModuleRep) -> ModuleRep:
    """H (x)_K U: quotient of H (x) U by the bilinearity relations.

    The dimension must equal (dim H / dim K) . dim U by freeness, and this
    is asserted.
    """
    require_validated(hopf, "Hopf data")
    require_validated(module, "module")
    if module.algebra is not sub.hopf.algebra:
        raise HopfError("module is not over the subalgebra")
    F = hopf.field
    n = hopf.dim
    du = module.dim
    dk = sub.dim
    tensor_dim = n * du
    relations = []
    for h in range(n):
        e_h = hopf.algebra.basis_vector(h)
        for kappa in range(dk):
            hk = hopf.algebra.product(e_h, list(sub.inclusion[kappa]))
            for u in range(du):
                ku = module.action[kappa].mul_vec([1 if t == u else 0 for t in range(du)])
                rel = [0] * tensor_dim
                for i, c in enumerate(hk):
                    if c:
                        rel[i * du + u] = F.add(rel[i * du + u], c)
                for j, c in enumerate(ku):
                    if c:
                        rel[h * du + j] = F.sub(rel[h * du + j], c)
                relations.append(rel)
    ech, pivots = rref(F, relations)
    from .algebra import QuotientMap

    qm = QuotientMap(F, tensor_dim, ech, pivots)
    d = qm.dim
    expected = (n // dk) * du if n % dk == 0 else None
    if expected is None or d != expected:
        raise HopfError(
            f"induced dimension {d} violates freeness bookkeeping (expected {expected})"
        )
    action = []
    for b in range(n):
        cols = []
        for c_idx in range(d):
            lift = qm.lift([1 if t == c_idx else 0 for t in range(d)])
            out = [0] * tensor_dim
            for i in range(n):
                for u in range(du):
                    c = lift[i * du + u]
                    if not c:
                        continue
                    prod = hopf.algebra.mult[b][i]
                    for s, cs in enumerate(prod):
                        if cs:
                            out[s * du + u] = F.add(out[s * du + u], F.mul(c, cs))
            cols.append(qm.project(out))
        action.append(DenseMatrix(F, [[cols[j][i] for j in range(d)] for i in range(d)], cols=d))
    induced = ModuleRep(hopf.algebra, d, action,
                        name=f"induction of {module.name} to {hopf.name}")
    check_module_axioms(induced).raise_if_failed(HopfError)
    return induced


def restrict_module(module: ModuleRep, sub: HopfSubalgebra) -> ModuleRep:
    """Action matrices of the subalgebra basis, as a module over it."""
    require_validated(module, "module")
    if module.algebra is not sub.ambient.algebra:
        raise HopfError("module is not over the ambient algebra")
    action = [module.act_element(list(row)) for row in sub.inclusion]
    out = ModuleRep(sub.hopf.algebra, module.dim, action,
                    name=f"restriction of {module.name} to {sub.hopf.name}")
    check_module_axioms(out).raise_if_failed(HopfError)
    return out


def derived_series_chain(group: GroupTable, field: FiniteField) -> list[list[list[int]]]:
    """Subspace chain span(unit) < kG' < ... < kG from the derived series."""
    require_validated(group, "group")
    subgroups = [list(range(group.order))]
    current = group
    elements = list(range(group.order))
    while True:
        derived, sub = commutator_subgroup(current)
        mapped = [elements[i] for i in derived]
        if set(mapped) == set(elements):
            raise GroupError("group is not solvable; derived series stalls")
        subgroups.append(mapped)
        if len(mapped) == 1:
            break
        current = sub
        elements = mapped
    chain = []
    for elems in reversed(subgroups):
        chain.append([[1 if i == g else 0 for i in range(group.order)] for g in sorted(elems)])
    return chain
