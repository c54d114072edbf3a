"""Hopf-algebra structure: axioms, subalgebras, normality, quotients,
characters, and the winding-automorphism twist machinery.

Linear structure maps act on coefficient rows from the right: a map matrix
has row i equal to the image of basis element i.  The coproduct is stored as
an n x n^2 grid whose row i is the image of b_i in the tensor-square basis
with index (j, k) -> j*n + k.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import HopfError, ValidationReport, require_validated
from .linalg import DenseMatrix, in_span, rref, solve_coords
from .algebra import (
    AlgebraData,
    IdealBasis,
    ModuleRep,
    QuotientMap,
    SubalgebraEmbedding,
    check_ideal_closure,
    quotient_algebra,
    regular_module,
    subalgebra_from_basis,
)
from .meataxe import chop


class HopfData:
    """An algebra plus coproduct, counit, and antipode grids."""

    def __init__(self, algebra: AlgebraData, coproduct, counit, antipode, name="", meta=None):
        self.algebra = algebra
        n = algebra.dim
        self.coproduct = [list(row) for row in coproduct]
        if len(self.coproduct) != n or any(len(r) != n * n for r in self.coproduct):
            raise HopfError("coproduct grid must be n x n^2")
        self.counit = tuple(counit)
        if len(self.counit) != n:
            raise HopfError("counit row length mismatch")
        self.antipode = antipode if isinstance(antipode, DenseMatrix) else DenseMatrix(algebra.field, antipode)
        if self.antipode.rows != n or self.antipode.cols != n:
            raise HopfError("antipode matrix must be n x n")
        self.validated = False
        self.name = name or algebra.name
        self.meta = dict(meta or {})
        self._delta_sparse = [
            tuple((idx // n, idx % n, c) for idx, c in enumerate(row) if c)
            for row in self.coproduct
        ]

    @property
    def field(self):
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def __repr__(self):
        return f"HopfData({self.name})"

    def delta_sparse(self, i: int):
        """Nonzero coproduct terms of basis element i, as (j, k, coeff)."""
        return self._delta_sparse[i]

    def delta_of_vector(self, vec) -> dict[tuple[int, int], int]:
        F = self.field
        out: dict[tuple[int, int], int] = {}
        for i, ci in enumerate(vec):
            if not ci:
                continue
            for j, k, c in self._delta_sparse[i]:
                key = (j, k)
                acc = F.add(out.get(key, 0), F.mul(ci, c))
                if acc:
                    out[key] = acc
                else:
                    out.pop(key, None)
        return out

    def counit_of_vector(self, vec) -> int:
        F = self.field
        acc = 0
        for c, e in zip(vec, self.counit):
            if c and e:
                acc = F.add(acc, F.mul(c, e))
        return acc

    def antipode_of_vector(self, vec) -> list[int]:
        F = self.field
        out = [0] * self.dim
        addmul = F.row_addmul
        for c, row in zip(vec, self.antipode.data):
            if c:
                out = addmul(out, row, c)
        return out


def _tensor_product_sparse(algebra, terms_a, terms_b) -> dict[tuple[int, int], int]:
    """Product of two sparse tensor-square vectors inside H (x) H."""
    F = algebra.field
    out: dict[tuple[int, int], int] = {}
    add, mul = F.add, F.mul
    for (a1, a2), ca in terms_a.items():
        for (b1, b2), cb in terms_b.items():
            c = mul(ca, cb)
            left = algebra.mult[a1][b1]
            right = algebra.mult[a2][b2]
            for s, cs in enumerate(left):
                if not cs:
                    continue
                c2 = mul(c, cs)
                for t, ct in enumerate(right):
                    if ct:
                        key = (s, t)
                        acc = add(out.get(key, 0), mul(c2, ct))
                        if acc:
                            out[key] = acc
                        else:
                            out.pop(key, None)
    return out


def check_hopf_axioms(hopf: HopfData) -> ValidationReport:
    """Coassociativity, counit law, hom properties, and both antipode laws."""
    report = ValidationReport(subject=hopf.name)
    require_validated(hopf.algebra, "underlying algebra")
    A = hopf.algebra
    F = hopf.field
    n = hopf.dim

    # Coassociativity on each basis element, accumulated sparsely.
    for i in range(n):
        lhs: dict[tuple[int, int, int], int] = {}
        rhs: dict[tuple[int, int, int], int] = {}
        for j, k, c in hopf.delta_sparse(i):
            for a, b, c2 in hopf.delta_sparse(j):
                key = (a, b, k)
                acc = F.add(lhs.get(key, 0), F.mul(c, c2))
                lhs[key] = acc
            for a, b, c2 in hopf.delta_sparse(k):
                key = (j, a, b)
                acc = F.add(rhs.get(key, 0), F.mul(c, c2))
                rhs[key] = acc
        lhs = {k: v for k, v in lhs.items() if v}
        rhs = {k: v for k, v in rhs.items() if v}
        if lhs != rhs:
            report.fail("coassociativity", basis=i)
            return report

    # Counit law on each basis element.
    for i in range(n):
        left = [0] * n
        right = [0] * n
        for j, k, c in hopf.delta_sparse(i):
            left[k] = F.add(left[k], F.mul(hopf.counit[j], c))
            right[j] = F.add(right[j], F.mul(c, hopf.counit[k]))
        e = A.basis_vector(i)
        if left != e or right != e:
            report.fail("counit-law", basis=i)
            return report

    # Coproduct and counit are algebra maps.
    unit_delta = hopf.delta_of_vector(list(A.unit))
    expected = {}
    for j, cj in enumerate(A.unit):
        if cj:
            for k, ck in enumerate(A.unit):
                if ck:
                    expected[(j, k)] = F.mul(cj, ck)
    if unit_delta != expected:
        report.fail("coproduct-unital")
        return report
    if hopf.counit_of_vector(list(A.unit)) != 1:
        report.fail("counit-unital")
        return report
    for i in range(n):
        di = {(j, k): c for j, k, c in hopf.delta_sparse(i)}
        for j in range(n):
            dj = {(a, b): c for a, b, c in hopf.delta_sparse(j)}
            prod = _tensor_product_sparse(A, di, dj)
            direct = hopf.delta_of_vector(A.mult[i][j])
            if prod != direct:
                report.fail("coproduct-multiplicative", pair=(i, j))
                return report
            eps_prod = F.mul(hopf.counit[i], hopf.counit[j])
            if hopf.counit_of_vector(A.mult[i][j]) != eps_prod:
                report.fail("counit-multiplicative", pair=(i, j))
                return report

    # Antipode laws m(S (x) id)Delta = unit . counit = m(id (x) S)Delta.
    for i in range(n):
        left = [0] * n
        right = [0] * n
        addmul = F.row_addmul
        for j, k, c in hopf.delta_sparse(i):
            sj = hopf.antipode.data[j]
            sk = hopf.antipode.data[k]
            left = addmul(left, A.product(sj, A.basis_vector(k)), c)
            right = addmul(right, A.product(A.basis_vector(j), sk), c)
        target = F.row_scale(list(A.unit), hopf.counit[i])
        if left != target:
            report.fail("antipode-left", basis=i)
            return report
        if right != target:
            report.fail("antipode-right", basis=i)
            return report

    hopf.validated = True
    return report


# -- Hopf subalgebras ----------------------------------------------------------


@dataclass
class HopfSubalgebra:
    """A Hopf subalgebra in its own coordinates plus the inclusion."""

    ambient: HopfData
    hopf: HopfData
    embedding: SubalgebraEmbedding

    @property
    def dim(self) -> int:
        return self.hopf.dim

    @property
    def inclusion(self):
        return self.embedding.inclusion

    def to_ambient(self, vec) -> list[int]:
        return self.embedding.to_ambient(vec)

    def coords(self, ambient_vec):
        return self.embedding.coords(ambient_vec)


def as_hopf_subalgebra(hopf: HopfData, rows, name="") -> tuple[bool, HopfSubalgebra | None, str]:
    """Decide whether the span is a Hopf subalgebra; build it if so."""
    require_validated(hopf, "Hopf data")
    F = hopf.field
    n = hopf.dim
    try:
        emb = subalgebra_from_basis(hopf.algebra, rows, name=name or f"sub of {hopf.name}")
    except Exception as exc:
        return False, None, f"not a unital subalgebra: {exc}"
    inc = [list(r) for r in emb.inclusion]
    d = len(inc)

    # Delta(K) inside K (x) K, checked against the Kronecker span.
    kron_rows = []
    for ra in inc:
        for rb in inc:
            kron_rows.append([F.mul(a, b) for a in ra for b in rb])
    kron_ech, kron_piv = rref(F, kron_rows)
    for v in inc:
        dense = [0] * (n * n)
        for (j, k), c in hopf.delta_of_vector(v).items():
            dense[j * n + k] = c
        if not in_span(F, dense, kron_ech, kron_piv):
            return False, None, "coproduct leaves the tensor square of the span"
    for v in inc:
        if not emb.contains(hopf.antipode_of_vector(v)):
            return False, None, "antipode leaves the span"

    # Standalone Hopf structure in the subalgebra's coordinates.
    coproduct = []
    for i in range(d):
        dense = [0] * (n * n)
        for (j, k), c in hopf.delta_of_vector(inc[i]).items():
            dense[j * n + k] = c
        coords = solve_coords(F, kron_rows, dense)
        if coords is None:
            return False, None, "coproduct solve failed in the tensor square"
        coproduct.append(coords)
    counit = [hopf.counit_of_vector(v) for v in inc]
    antipode = []
    for v in inc:
        c = emb.coords(hopf.antipode_of_vector(v))
        if c is None:
            return False, None, "antipode solve failed"
        antipode.append(c)
    sub = HopfData(emb.sub, coproduct, counit, antipode, name=name or f"Hopf sub of {hopf.name}")
    rep = check_hopf_axioms(sub)
    if not rep.ok:
        return False, None, f"restricted structure fails axioms: {rep.first_failure()}"
    return True, HopfSubalgebra(hopf, sub, emb), "ok"


def is_normal(hopf: HopfData, sub: HopfSubalgebra) -> bool:
    """Stability of the span under both adjoint actions of every basis element."""
    require_validated(hopf, "Hopf data")
    F = hopf.field
    A = hopf.algebra
    addmul = F.row_addmul
    for i in range(hopf.dim):
        for kvec in sub.inclusion:
            kvec = list(kvec)
            left = [0] * hopf.dim
            right = [0] * hopf.dim
            for j, k, c in hopf.delta_sparse(i):
                sj = hopf.antipode.data[j]
                sk = hopf.antipode.data[k]
                # sum h1 k S(h2)
                left = addmul(left, A.product(A.product(A.basis_vector(j), kvec), sk), c)
                # sum S(h1) k h2
                right = addmul(right, A.product(A.product(sj, kvec), A.basis_vector(k)), c)
            if not (sub.embedding.contains(left) and sub.embedding.contains(right)):
                return False
    return True


def extended_augmentation_ideal(hopf: HopfData, sub: HopfSubalgebra) -> IdealBasis:
    """The Hopf ideal H.K+ of a normal Hopf subalgebra K; equals K+.H."""
    require_validated(hopf, "Hopf data")
    F = hopf.field
    A = hopf.algebra
    # K+ = kernel of the counit restricted to K, in ambient coordinates.
    eps_row = [sub.hopf.counit_of_vector(sub.hopf.algebra.basis_vector(i)) for i in range(sub.dim)]
    kplus_local = DenseMatrix(F, [eps_row]).kernel()
    kplus = [sub.to_ambient(v) for v in kplus_local]
    left_rows = []
    right_rows = []
    for i in range(hopf.dim):
        e = A.basis_vector(i)
        for w in kplus:
            left_rows.append(A.product(e, w))
            right_rows.append(A.product(w, e))
    left_ech, _ = rref(F, left_rows)
    right_ech, _ = rref(F, right_rows)
    if [tuple(r) for r in left_ech] != [tuple(r) for r in right_ech]:
        raise HopfError("H.K+ differs from K+.H; the subalgebra is not normal")
    ideal = IdealBasis(A, left_ech)
    check_ideal_closure(ideal).raise_if_failed(HopfError)
    if hopf.dim % sub.dim == 0:
        expected = hopf.dim - hopf.dim // sub.dim
        if ideal.dim != expected:
            raise HopfError(
                f"H.K+ has dimension {ideal.dim}, freeness bookkeeping expects {expected}"
            )
    return ideal


def quotient_hopf(hopf: HopfData, ideal: IdealBasis, name="") -> tuple[HopfData, QuotientMap]:
    """Quotient Hopf structure on the complement basis of a Hopf ideal."""
    require_validated(hopf, "Hopf data")
    require_validated(ideal, "ideal")
    F = hopf.field
    n = hopf.dim
    # Coideal: Delta(I) inside I (x) H + H (x) I.
    side_rows = []
    for v in ideal.rows:
        v = list(v)
        for j in range(n):
            e = hopf.algebra.basis_vector(j)
            side_rows.append([F.mul(a, b) for a in v for b in e])
            side_rows.append([F.mul(a, b) for a in e for b in v])
    side_ech, side_piv = rref(F, side_rows)
    for v in ideal.rows:
        dense = [0] * (n * n)
        for (j, k), c in hopf.delta_of_vector(list(v)).items():
            dense[j * n + k] = c
        if not in_span(F, dense, side_ech, side_piv):
            raise HopfError("ideal is not a coideal")
    for v in ideal.rows:
        if hopf.counit_of_vector(list(v)) != 0:
            raise HopfError("counit does not vanish on the ideal")
        if not ideal.contains(hopf.antipode_of_vector(list(v))):
            raise HopfError("ideal is not antipode-stable")

    quo_alg, qm = quotient_algebra(hopf.algebra, ideal, name=name or f"{hopf.name} quotient")
    d = qm.dim
    proj_basis = [qm.project(hopf.algebra.basis_vector(j)) for j in range(n)]
    coproduct = []
    for c_idx in range(d):
        lift = qm.lift([1 if t == c_idx else 0 for t in range(d)])
        grid = [0] * (d * d)
        for (j, k), c in hopf.delta_of_vector(lift).items():
            pj, pk = proj_basis[j], proj_basis[k]
            for a, ca in enumerate(pj):
                if not ca:
                    continue
                cc = F.mul(c, ca)
                for b, cb in enumerate(pk):
                    if cb:
                        idx = a * d + b
                        grid[idx] = F.add(grid[idx], F.mul(cc, cb))
        coproduct.append(grid)
    counit = []
    antipode = []
    for c_idx in range(d):
        lift = qm.lift([1 if t == c_idx else 0 for t in range(d)])
        counit.append(hopf.counit_of_vector(lift))
        antipode.append(qm.project(hopf.antipode_of_vector(lift)))
    quo = HopfData(quo_alg, coproduct, counit, antipode, name=name or f"{hopf.name} quotient")
    check_hopf_axioms(quo).raise_if_failed(HopfError)
    return quo, qm


def commutative_mod_ideal(hopf_or_algebra, ideal: IdealBasis) -> bool:
    """True iff all basis commutators land in the ideal."""
    algebra = hopf_or_algebra.algebra if isinstance(hopf_or_algebra, HopfData) else hopf_or_algebra
    F = algebra.field
    for i in range(algebra.dim):
        for j in range(i):
            comm = F.row_add(algebra.mult[i][j], F.row_neg(algebra.mult[j][i]))
            if not ideal.contains(comm):
                return False
    return True


# -- characters and twists -----------------------------------------------------


class Character:
    """Algebra homomorphism into the base field, as a coefficient row."""

    __slots__ = ("hopf", "row")

    def __init__(self, hopf: HopfData, row):
        self.hopf = hopf
        self.row = tuple(row)
        if len(self.row) != hopf.dim:
            raise HopfError("character row length mismatch")

    def apply(self, vec) -> int:
        F = self.hopf.field
        acc = 0
        for c, x in zip(self.row, vec):
            if c and x:
                acc = F.add(acc, F.mul(c, x))
        return acc

    def __eq__(self, other):
        return isinstance(other, Character) and self.hopf is other.hopf and self.row == other.row

    def __hash__(self):
        return hash(self.row)

    def __repr__(self):
        return f"Character({self.row})"


def _verify_character(hopf: HopfData, row) -> bool:
    F = hopf.field
    chi = Character(hopf, row)
    if chi.apply(list(hopf.algebra.unit)) != 1:
        return False
    for i in range(hopf.dim):
        for j in range(hopf.dim):
            if chi.apply(hopf.algebra.mult[i][j]) != F.mul(row[i], row[j]):
                return False
    return True


def characters(hopf: HopfData, seed: int = 0) -> list[Character]:
    """All algebra homomorphisms into the base field.

    Obtained as the one-dimensional composition factors of the regular
    module, which contains every simple, so the list is complete.
    """
    require_validated(hopf, "Hopf data")
    series = chop(regular_module(hopf.algebra), seed)
    rows = set()
    for factor, _mult in series.factors:
        if factor.dim == 1:
            rows.add(tuple(mat.data[0][0] for mat in factor.action))
    out = []
    for row in sorted(rows):
        if not _verify_character(hopf, row):
            raise HopfError(f"one-dimensional factor failed the character check: {row}")
        out.append(Character(hopf, row))
    return out


def character_convolution(a: Character, b: Character) -> Character:
    """Convolution product (a * b)(h) = sum a(h1) b(h2)."""
    hopf = a.hopf
    if hopf is not b.hopf:
        raise HopfError("characters live on different Hopf algebras")
    F = hopf.field
    row = []
    for i in range(hopf.dim):
        acc = 0
        for j, k, c in hopf.delta_sparse(i):
            acc = F.add(acc, F.mul(c, F.mul(a.row[j], b.row[k])))
        row.append(acc)
    if not _verify_character(hopf, row):
        raise HopfError("convolution product is not a character; corrupted Hopf data")
    return Character(hopf, row)


def convolution_inverse(chi: Character) -> Character:
    """chi composed with the antipode; verified two-sided convolution inverse."""
    hopf = chi.hopf
    F = hopf.field
    row = [chi.apply(hopf.antipode.data[i]) for i in range(hopf.dim)]
    inv = Character(hopf, row)
    for pair in ((chi, inv), (inv, chi)):
        prod = character_convolution(*pair)
        if prod.row != tuple(hopf.counit):
            raise HopfError("convolution inverse verification failed; corrupted Hopf data")
    return inv


@dataclass
class AlgebraMorphism:
    """Linear map between algebras, rows = images of basis elements."""

    source: AlgebraData
    target: AlgebraData
    matrix: DenseMatrix
    is_automorphism: bool = False

    def apply(self, vec) -> list[int]:
        F = self.source.field
        out = [0] * self.target.dim
        addmul = F.row_addmul
        for c, row in zip(vec, self.matrix.data):
            if c:
                out = addmul(out, row, c)
        return out


def _check_algebra_morphism(morphism: AlgebraMorphism) -> bool:
    src, tgt = morphism.source, morphism.target
    if morphism.apply(list(src.unit)) != list(tgt.unit):
        return False
    for i in range(src.dim):
        for j in range(src.dim):
            lhs = morphism.apply(src.mult[i][j])
            rhs = tgt.product(morphism.matrix.data[i], morphism.matrix.data[j])
            if lhs != rhs:
                return False
    return True


def winding_automorphism(chi: Character) -> AlgebraMorphism:
    """h -> sum chi(h1) h2; an algebra automorphism with inverse from chi o S."""
    hopf = chi.hopf
    F = hopf.field
    n = hopf.dim
    rows = []
    for i in range(n):
        row = [0] * n
        for j, k, c in hopf.delta_sparse(i):
            row[k] = F.add(row[k], F.mul(c, chi.row[j]))
        rows.append(row)
    morphism = AlgebraMorphism(hopf.algebra, hopf.algebra, DenseMatrix(F, rows), is_automorphism=True)
    if not _check_algebra_morphism(morphism):
        raise HopfError("winding map is not an algebra morphism; corrupted Hopf data")
    inv_rows = []
    inv_chi = convolution_inverse(chi)
    for i in range(n):
        row = [0] * n
        for j, k, c in hopf.delta_sparse(i):
            row[k] = F.add(row[k], F.mul(c, inv_chi.row[j]))
        inv_rows.append(row)
    prod = morphism.matrix.mul(DenseMatrix(F, inv_rows))
    if prod != DenseMatrix.identity(F, n):
        raise HopfError("winding map failed the automorphism inverse check")
    return morphism


def twist_module(chi: Character, module: ModuleRep) -> ModuleRep:
    """Tensor with the one-dimensional module of chi: action h -> sum chi(h1) rho(h2).

    Equal, as matrices, to rho composed with the winding automorphism of chi;
    both are computed and the equality is asserted.
    """
    hopf = chi.hopf
    if module.algebra is not hopf.algebra:
        raise HopfError("module is not over the character's Hopf algebra")
    require_validated(module, "module")
    F = hopf.field
    theta = winding_automorphism(chi)
    action = []
    for i in range(hopf.dim):
        acc = DenseMatrix.zero(F, module.dim, module.dim)
        for j, k, c in hopf.delta_sparse(i):
            coeff = F.mul(c, chi.row[j])
            if coeff:
                acc = acc.add(module.action[k].scale(coeff))
        via_theta = module.act_element(theta.matrix.data[i])
        if acc != via_theta:
            raise HopfError("twist action disagrees with the winding composite")
        action.append(acc)
    twisted = ModuleRep(hopf.algebra, module.dim, action, name=f"twist of {module.name}")
    twisted.validated = True
    return twisted


def trivial_module(hopf: HopfData, chi: Character | None = None) -> ModuleRep:
    """The one-dimensional module of a character (counit if omitted)."""
    row = chi.row if chi is not None else tuple(hopf.counit)
    F = hopf.field
    action = [DenseMatrix(F, [[c]]) for c in row]
    mod = ModuleRep(hopf.algebra, 1, action, name="one-dimensional module")
    from .algebra import check_module_axioms

    check_module_axioms(mod).raise_if_failed(HopfError)
    return mod


@dataclass
class SolvableSeries:
    """Chain of subspace bases from span(unit) up to the whole algebra."""

    hopf: HopfData
    chain: list[list[list[int]]]


def find_antipode(algebra: AlgebraData, coproduct_rows, counit) -> DenseMatrix | None:
    """Solve both antipode laws for a bialgebra; None when no solution exists."""
    F = algebra.field
    n = algebra.dim
    sparse = [
        tuple(((idx // n), (idx % n), c) for idx, c in enumerate(row) if c)
        for row in coproduct_rows
    ]
    # Unknowns S[j][m] indexed j*n + m; equations from the left law.
    rows = []
    rhs = []
    for i in range(n):
        for t in range(n):
            row = [0] * (n * n)
            for j, k, c in sparse[i]:
                for m in range(n):
                    coeff = F.mul(c, algebra.mult[m][k][t])
                    if coeff:
                        idx = j * n + m
                        row[idx] = F.add(row[idx], coeff)
            rows.append(row)
            rhs.append(F.mul(counit[i], algebra.unit[t]))
    aug = [r + [b] for r, b in zip(rows, rhs)]
    ech, pivots = rref(F, aug)
    ncols = n * n
    if any(p == ncols for p in pivots):
        return None
    sol = [0] * ncols
    for row, p in zip(ech, pivots):
        sol[p] = row[ncols]
    candidate = DenseMatrix(F, [[sol[j * n + m] for m in range(n)] for j in range(n)])
    # Verify the right law as well (a left inverse of id need not be two-sided a priori).
    for i in range(n):
        acc = [0] * n
        addmul = F.row_addmul
        for j, k, c in sparse[i]:
            acc = addmul(acc, algebra.product(algebra.basis_vector(j), candidate.data[k]), c)
        if acc != F.row_scale(list(algebra.unit), counit[i]):
            return None
    return candidate


def group_like_elements(hopf: HopfData, limit: int = 100000) -> list[list[int]]:
    """All g with Delta(g) = g (x) g and counit 1, by enumeration (small spaces)."""
    F = hopf.field
    n = hopf.dim
    total = F.q**n
    if total > limit:
        raise HopfError(f"group-like enumeration over {total} vectors refused")
    out = []
    for code in range(1, total):
        vec = []
        m = code
        for _ in range(n):
            vec.append(m % F.q)
            m //= F.q
        if hopf.counit_of_vector(vec) != 1:
            continue
        delta = hopf.delta_of_vector(vec)
        expected = {}
        for j, cj in enumerate(vec):
            if cj:
                for k, ck in enumerate(vec):
                    if ck:
                        expected[(j, k)] = F.mul(cj, ck)
        if delta == expected:
            out.append(vec)
    return out
