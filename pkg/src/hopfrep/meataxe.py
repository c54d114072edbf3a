"""Composition factors by the MeatAxe: spinning, Norton-certified
irreducibility, module isomorphism, splitting-field extension, and the
Jacobson radical.

The search is seeded and deterministic: up to 200 random coefficient
combinations of the action matrices, then deterministic words of length up
to 4, then (for dimension at most 12) the exhaustive submodule-lattice
fallback.  Inconclusive runs raise rather than guess.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field

from .errors import ChopBudgetError, HopfRepError
from .gf import field_create, subfield_embedding
from .linalg import DenseMatrix, charpoly, eval_poly_at_matrix, rref, solve_coords
from .poly import Poly, factor as poly_factor
from .rng import SeededRng
from .algebra import (
    AlgebraData,
    IdealBasis,
    ModuleRep,
    check_ideal_closure,
    quotient_module,
    regular_module,
    submodule_rep,
)

_RANDOM_BUDGET = 200
_WORD_BUDGET = 800
_BRUTE_DIM_LIMIT = 12


def spin(module: ModuleRep, v) -> tuple[list[list[int]], list[int]]:
    """Echelon basis of the smallest action-closed subspace containing v.

    Since the whole basis of the algebra is available, the span of
    {rho(b_i) v} is already action-closed, so no worklist is needed.
    """
    rows = [module.action[i].mul_vec(list(v)) for i in range(len(module.action))]
    return rref(module.algebra.field, rows)


def dual_spin(module: ModuleRep, w) -> tuple[list[list[int]], list[int]]:
    """Spin in the dual module, whose actions are the transposed matrices."""
    rows = [module.action[i].transpose().mul_vec(list(w)) for i in range(len(module.action))]
    return rref(module.algebra.field, rows)


@dataclass
class IrreducibilityWitness:
    """Replayable evidence for an irreducibility verdict."""

    kind: str  # "dim1" | "norton" | "submodule" | "exhaustive"
    verdict: bool
    element_spec: tuple | None = None
    factor_coeffs: tuple | None = None
    null_vector: tuple | None = None
    dual_vector: tuple | None = None
    submodule_rows: tuple | None = None

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "verdict": self.verdict,
            "element_spec": list(self.element_spec) if self.element_spec else None,
            "factor_coeffs": list(self.factor_coeffs) if self.factor_coeffs else None,
            "null_vector": list(self.null_vector) if self.null_vector else None,
            "dual_vector": list(self.dual_vector) if self.dual_vector else None,
            "submodule_rows": [list(r) for r in self.submodule_rows] if self.submodule_rows else None,
        }


def _element_from_spec(module: ModuleRep, spec) -> DenseMatrix:
    if spec[0] == "rand":
        return module.act_element(list(spec[2]))
    if spec[0] == "word":
        mat = module.action[spec[1][0]]
        for idx in spec[1][1:]:
            mat = mat.mul(module.action[idx])
        return mat
    raise HopfRepError(f"unknown element spec {spec[0]}")


def _element_stream(module: ModuleRep, rng: SeededRng):
    n = len(module.action)
    q = module.algebra.field.q
    for t in range(_RANDOM_BUDGET):
        coeffs = [rng.randrange(q) for _ in range(n)]
        if any(coeffs):
            yield ("rand", t, tuple(coeffs)), module.act_element(coeffs)
    count = 0
    for length in range(1, 5):
        for tup in itertools.product(range(n), repeat=length):
            count += 1
            if count > _WORD_BUDGET:
                return
            yield ("word", tup), _element_from_spec(module, ("word", tup))


def _perp_subspace(field, rows, dim) -> list[list[int]]:
    """{x : r . x = 0 for all rows r}; invariant when the rows dual-span is."""
    if not rows:
        return DenseMatrix.identity(field, dim).data
    return DenseMatrix(field, [list(r) for r in rows], cols=dim).kernel()


def _find_split_or_proof(module: ModuleRep, rng: SeededRng):
    """Return ("split", ech, piv) or ("simple", witness); raises on budget end."""
    d = module.dim
    F = module.algebra.field
    for spec, mat in _element_stream(module, rng):
        cp = charpoly(mat)
        for fac, _mult in poly_factor(cp, seed=0):
            fm = eval_poly_at_matrix(fac, mat)
            null = fm.kernel()
            if not null:
                continue
            split_found = None
            all_full = True
            for v in null:
                ech, piv = spin(module, v)
                if 0 < len(ech) < d:
                    split_found = (ech, piv)
                    break
                if len(ech) == 0:
                    all_full = False
            if split_found:
                return ("split",) + split_found
            if all_full and len(null) == fac.degree:
                dt = fm.transpose()
                dual_null = dt.kernel()
                w = dual_null[0]
                dech, _dpiv = dual_spin(module, w)
                if len(dech) < d:
                    perp = _perp_subspace(F, dech, d)
                    ech, piv = rref(F, perp)
                    if 0 < len(ech) < d:
                        return ("split", ech, piv)
                witness = IrreducibilityWitness(
                    kind="norton",
                    verdict=True,
                    element_spec=spec,
                    factor_coeffs=tuple(fac.coeffs),
                    null_vector=tuple(null[0]),
                    dual_vector=tuple(w),
                )
                return ("simple", witness)
    raise ChopBudgetError(f"element budget exhausted on {module.name} (dim {d})")


@dataclass
class CompositionSeries:
    """Multiset of composition factors with canonical labels and witnesses."""

    module: ModuleRep
    factors: list[tuple[ModuleRep, int]]
    labels: list[str]
    witnesses: list[IrreducibilityWitness]
    seed: int

    def dimension_multiset(self) -> list[int]:
        out = []
        for factor, mult in self.factors:
            out.extend([factor.dim] * mult)
        return sorted(out)

    def distinct_dimensions(self) -> list[int]:
        return sorted(factor.dim for factor, _ in self.factors)


def canonical_form(module: ModuleRep) -> tuple[tuple, ModuleRep]:
    """Deterministic rebasing by spinning from the least cyclic vector.

    For a simple module every nonzero vector is cyclic; the least one is the
    unit vector in the last coordinate.  Returns (sort key, rebased module).
    """
    d = module.dim
    F = module.algebra.field
    if d == 0:
        return (0, ()), module
    v0 = [0] * d
    v0[d - 1] = 1
    chosen: list[list[int]] = []
    ech: list[list[int]] = []
    piv: list[int] = []
    for mat in module.action:
        w = mat.mul_vec(v0)
        new_ech, new_piv = rref(F, ech + [w])
        if len(new_ech) > len(ech):
            chosen.append(w)
            ech, piv = new_ech, new_piv
            if len(chosen) == d:
                break
    if len(chosen) < d:
        # Not cyclic from v0 (non-simple input); fall back to the identity basis.
        return (d, tuple(x for m in module.action for x in m.flatten())), module
    basis_cols = DenseMatrix(F, [[chosen[j][i] for j in range(d)] for i in range(d)])
    inv = basis_cols.inverse()
    rebased = [inv.mul(m).mul(basis_cols) for m in module.action]
    out = ModuleRep(module.algebra, d, rebased, name=module.name + " (canonical)")
    out.validated = True
    key = (d, tuple(x for m in rebased for x in m.flatten()))
    return key, out


def chop(module: ModuleRep, seed: int) -> CompositionSeries:
    """Full composition-factor multiset, deterministic given the seed."""
    if not module.validated:
        from .algebra import check_module_axioms

        check_module_axioms(module).raise_if_failed(HopfRepError)
    rng = SeededRng(seed)
    leaves: list[tuple[ModuleRep, IrreducibilityWitness]] = []
    _chop_rec(module, rng, leaves)
    # Deduplicate by isomorphism; canonicalize representatives.
    groups: list[list] = []  # [canonical key, rebased rep, mult, witness]
    for leaf, witness in leaves:
        placed = False
        for group in groups:
            if group[1].dim == leaf.dim and module_isomorphism(group[1], leaf) is not None:
                group[2] += 1
                placed = True
                break
        if not placed:
            key, rebased = canonical_form(leaf)
            groups.append([key, rebased, 1, witness])
    groups.sort(key=lambda g: g[0])
    factors = [(g[1], g[2]) for g in groups]
    witnesses = [g[3] for g in groups]
    labels = []
    by_dim: dict[int, int] = {}
    for rep, _mult in factors:
        idx = by_dim.get(rep.dim, 0)
        by_dim[rep.dim] = idx + 1
        labels.append(f"d{rep.dim}-{idx}")
    total = sum(rep.dim * mult for rep, mult in factors)
    if total != module.dim:
        raise HopfRepError("factor dimensions do not add up; chop is inconsistent")
    return CompositionSeries(module, factors, labels, witnesses, seed)


def _chop_rec(module: ModuleRep, rng: SeededRng, leaves) -> None:
    d = module.dim
    if d == 0:
        return
    if d == 1:
        leaves.append((module, IrreducibilityWitness(kind="dim1", verdict=True)))
        return
    try:
        result = _find_split_or_proof(module, rng)
    except ChopBudgetError:
        if d > _BRUTE_DIM_LIMIT:
            raise
        from .bruteforce import exhaustive_composition_factors

        for factor in exhaustive_composition_factors(module):
            leaves.append((factor, IrreducibilityWitness(kind="exhaustive", verdict=True)))
        return
    if result[0] == "split":
        _, ech, piv = result
        _chop_rec(submodule_rep(module, ech, piv), rng, leaves)
        _chop_rec(quotient_module(module, ech, piv), rng, leaves)
    else:
        leaves.append((module, result[1]))


def is_irreducible(module: ModuleRep, seed: int) -> tuple[bool, IrreducibilityWitness]:
    """Verdict plus a replayable witness."""
    if module.dim < 1:
        raise HopfRepError("irreducibility of the zero module is undefined")
    if module.dim == 1:
        return True, IrreducibilityWitness(kind="dim1", verdict=True)
    rng = SeededRng(seed)
    try:
        result = _find_split_or_proof(module, rng)
    except ChopBudgetError:
        if module.dim > _BRUTE_DIM_LIMIT:
            raise
        from .bruteforce import proper_submodule_exists

        rows = proper_submodule_exists(module)
        if rows is None:
            return True, IrreducibilityWitness(kind="exhaustive", verdict=True)
        return False, IrreducibilityWitness(
            kind="submodule", verdict=False, submodule_rows=tuple(tuple(r) for r in rows)
        )
    if result[0] == "split":
        return False, IrreducibilityWitness(
            kind="submodule", verdict=False, submodule_rows=tuple(tuple(r) for r in result[1])
        )
    return True, result[1]


def replay_witness(module: ModuleRep, witness: IrreducibilityWitness) -> bool:
    """Re-run the certificate steps; True iff the recorded verdict reproduces."""
    if witness.kind == "dim1":
        return (module.dim == 1) == witness.verdict
    if witness.kind == "submodule":
        rows = [list(r) for r in witness.submodule_rows]
        ech, piv = rref(module.algebra.field, rows)
        if not (0 < len(ech) < module.dim):
            return False
        try:
            submodule_rep(module, ech, piv)
        except Exception:
            return False
        return witness.verdict is False
    if witness.kind == "norton":
        mat = _element_from_spec(module, witness.element_spec)
        fac = Poly(module.algebra.field, list(witness.factor_coeffs))
        fm = eval_poly_at_matrix(fac, mat)
        null = fm.kernel()
        if len(null) != fac.degree:
            return False
        for v in null:
            ech, _ = spin(module, v)
            if len(ech) != module.dim:
                return False
        dech, _ = dual_spin(module, list(witness.dual_vector))
        if len(dech) != module.dim:
            return False
        return witness.verdict is True
    if witness.kind == "exhaustive":
        from .bruteforce import proper_submodule_exists

        return (proper_submodule_exists(module) is None) == witness.verdict
    return False


# -- homomorphisms -------------------------------------------------------------


def hom_space(src: ModuleRep, dst: ModuleRep) -> list[DenseMatrix]:
    """Basis of {T : T rho_src(b) = rho_dst(b) T for all basis b}."""
    if src.algebra is not dst.algebra:
        raise HopfRepError("modules over different algebras")
    F = src.algebra.field
    ds, dd = src.dim, dst.dim
    nun = dd * ds
    rows = []
    for mat_s, mat_d in zip(src.action, dst.action):
        a = mat_s.data
        b = mat_d.data
        for r in range(dd):
            for c in range(ds):
                row = [0] * nun
                for s in range(ds):
                    coeff = a[s][c]
                    if coeff:
                        row[r * ds + s] = F.add(row[r * ds + s], coeff)
                for s in range(dd):
                    coeff = b[r][s]
                    if coeff:
                        row[s * ds + c] = F.sub(row[s * ds + c], coeff)
                rows.append(row)
    if not rows:
        return [DenseMatrix.identity(F, 0)]
    big = DenseMatrix(F, rows, cols=nun)
    out = []
    for sol in big.kernel():
        out.append(DenseMatrix(F, [[sol[r * ds + c] for c in range(ds)] for r in range(dd)], cols=ds))
    return out


def module_isomorphism(a: ModuleRep, b: ModuleRep, seed: int = 0) -> DenseMatrix | None:
    """Invertible intertwiner, or None (certified for simple modules)."""
    if a.dim != b.dim:
        return None
    homs = hom_space(a, b)
    for T in homs:
        if T.is_invertible():
            return T
    if not homs:
        return None
    # Bounded seeded search over combinations (only relevant off the simple case).
    F = a.algebra.field
    rng = SeededRng(seed)
    for _ in range(64):
        acc = DenseMatrix.zero(F, a.dim, a.dim)
        for T in homs:
            c = rng.randrange(F.q)
            if c:
                acc = acc.add(T.scale(c))
        if acc.is_invertible():
            return acc
    return None


def endomorphism_dim(module: ModuleRep) -> int:
    """Dimension of the self-intertwiner space; 1 means absolutely irreducible."""
    return len(hom_space(module, module))


# -- scalar extension and splitting ---------------------------------------------


def extend_scalars_algebra(algebra: AlgebraData, big_field) -> AlgebraData:
    """The same structure constants over an extension field."""
    emb = subfield_embedding(algebra.field, big_field)
    structconst = [(i, j, k, emb[c]) for i, j, k, c in algebra.structconst]
    unit = [emb[c] for c in algebra.unit]
    out = AlgebraData(big_field, algebra.dim, algebra.labels, structconst, unit,
                      name=f"{algebra.name} over {big_field!r}")
    # Algebra identities are preserved by any ring embedding.
    out.validated = algebra.validated
    return out


def extend_scalars_module(module: ModuleRep, big_algebra: AlgebraData) -> ModuleRep:
    emb = subfield_embedding(module.algebra.field, big_algebra.field)
    action = [
        DenseMatrix(big_algebra.field, [[emb[x] for x in row] for row in m.data], cols=module.dim)
        for m in module.action
    ]
    out = ModuleRep(big_algebra, module.dim, action, name=f"{module.name} extended")
    out.validated = module.validated
    return out


def splitting_tower(algebra: AlgebraData, seed: int) -> tuple[AlgebraData, CompositionSeries, int]:
    """Extend scalars until every regular composition factor has trivial
    endomorphism ring; returns (split algebra, its chop, total degree)."""
    current = algebra
    total = 1
    while True:
        series = chop(regular_module(current), seed)
        endos = [endomorphism_dim(rep) for rep, _ in series.factors]
        e = 1
        for x in endos:
            e = e * x // math.gcd(e, x)
        if e == 1:
            return current, series, total
        total *= e
        if total > algebra.dim:
            raise HopfRepError(
                f"splitting extension degree exceeded dim {algebra.dim}; aborting"
            )
        big = field_create(current.field.p, current.field.k * e)
        current = extend_scalars_algebra(current, big)


def radical(algebra: AlgebraData, seed: int) -> IdealBasis:
    """Jacobson radical: intersect annihilators of all regular composition
    factors; nilpotency is verified by powering the span."""
    from .algebra import annihilator

    series = chop(regular_module(algebra), seed)
    F = algebra.field
    ech, piv = rref(F, DenseMatrix.identity(F, algebra.dim).data)
    from .linalg import span_intersection

    for rep, _mult in series.factors:
        ann = annihilator(rep)
        ech, piv = span_intersection(F, ech, [list(r) for r in ann.rows])
        if not ech:
            break
    rad = IdealBasis(algebra, ech)
    check_ideal_closure(rad).raise_if_failed(HopfRepError)
    # Nilpotency check: successive products must reach zero.
    power = [list(r) for r in rad.rows]
    steps = 0
    while power:
        steps += 1
        if steps > algebra.dim + 1:
            raise HopfRepError("radical candidate is not nilpotent")
        nxt = []
        for u in power:
            for v in rad.rows:
                nxt.append(algebra.product(u, list(v)))
        power, _ = rref(F, nxt)
    return rad


def simple_dimensions(algebra: AlgebraData, seed: int) -> list[int]:
    """Dimensions of the pairwise-nonisomorphic simples over the splitting
    extension, sorted ascending."""
    split_alg, series, _deg = splitting_tower(algebra, seed)
    dims = sorted(rep.dim for rep, _ in series.factors)
    rad = radical(split_alg, seed)
    if rad.dim == 0:
        if sum(d * d for d in dims) != algebra.dim:
            raise HopfRepError("split semisimple dimension law failed")
        for rep, mult in series.factors:
            if mult != rep.dim:
                raise HopfRepError("regular multiplicity differs from factor dimension")
    return dims
