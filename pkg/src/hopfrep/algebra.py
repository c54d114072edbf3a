"""Structure-constant algebras, their modules, ideals, and annihilators.

Values are immutable after validation and operations refuse unvalidated
inputs.  Vectors of algebra elements are coefficient rows against the basis;
module vectors are acted on as columns by the action matrices, so that
rho(a b) = rho(a) rho(b).
"""

from __future__ import annotations

from .errors import AlgebraError, ValidationReport, require_validated
from .linalg import (
    DenseMatrix,
    coords_in_echelon,
    in_span,
    reduce_vector,
    rref,
    solve_coords,
    span_intersection,
    span_union,
    subspace_key,
)


class AlgebraData:
    """Finite-dimensional associative unital algebra via structure constants."""

    def __init__(self, field, dim, labels, structconst, unit, name=""):
        self.field = field
        self.dim = dim
        self.labels = list(labels) if labels else [f"b{i}" for i in range(dim)]
        if len(self.labels) != dim:
            raise AlgebraError("label count differs from dimension")
        self.structconst = sorted((int(i), int(j), int(k), c) for i, j, k, c in structconst)
        self.unit = tuple(unit)
        if len(self.unit) != dim:
            raise AlgebraError("unit vector length differs from dimension")
        # Dense multiplication table: mult[i][j] = coefficient row of b_i b_j.
        mult = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
        for i, j, k, c in self.structconst:
            if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                raise AlgebraError(f"structure constant index out of range: {(i, j, k)}")
            if mult[i][j][k] != 0:
                raise AlgebraError(f"duplicate structure constant at {(i, j, k)}")
            if not 0 <= c < field.q:
                raise AlgebraError(f"coefficient {c} is not a valid element encoding")
            mult[i][j][k] = c
        self.mult = mult
        self.validated = False
        self.name = name or f"algebra dim {dim} over {field!r}"

    def __repr__(self):
        return f"AlgebraData({self.name})"

    def basis_vector(self, i: int) -> list[int]:
        v = [0] * self.dim
        v[i] = 1
        return v

    def product(self, u, v) -> list[int]:
        """Coefficient row of the product of two coefficient rows."""
        F = self.field
        out = [0] * self.dim
        addmul = F.row_addmul
        mul = F.mul
        for i, cu in enumerate(u):
            if not cu:
                continue
            row = self.mult[i]
            for j, cv in enumerate(v):
                if cv:
                    out = addmul(out, row[j], mul(cu, cv))
        return out

    def left_mult_matrix(self, vec) -> DenseMatrix:
        """Matrix of x -> vec * x; column j is vec * b_j."""
        cols = [self.product(vec, self.basis_vector(j)) for j in range(self.dim)]
        return DenseMatrix(self.field, [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)])

    def right_mult_matrix(self, vec) -> DenseMatrix:
        """Matrix of x -> x * vec; column j is b_j * vec."""
        cols = [self.product(self.basis_vector(j), vec) for j in range(self.dim)]
        return DenseMatrix(self.field, [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)])

    def is_commutative(self) -> bool:
        for i in range(self.dim):
            for j in range(i):
                if self.mult[i][j] != self.mult[j][i]:
                    return False
        return True


def check_algebra_axioms(algebra: AlgebraData) -> ValidationReport:
    """Associativity on all basis triples plus the two-sided unit law."""
    report = ValidationReport(subject=algebra.name)
    n = algebra.dim
    for i in range(n):
        e = algebra.basis_vector(i)
        if algebra.product(algebra.unit, e) != e:
            report.fail("unit-left", index=i)
        if algebra.product(e, algebra.unit) != e:
            report.fail("unit-right", index=i)
    if not report.ok:
        return report
    for i in range(n):
        for j in range(n):
            ij = algebra.mult[i][j]
            for k in range(n):
                left = algebra.product(ij, algebra.basis_vector(k))
                right = algebra.product(algebra.basis_vector(i), algebra.mult[j][k])
                if left != right:
                    report.fail("associativity", triple=(i, j, k))
                    return report
    algebra.validated = True
    return report


class ModuleRep:
    """Left module: one action matrix per algebra basis element."""

    def __init__(self, algebra: AlgebraData, dim: int, action: list[DenseMatrix], name=""):
        self.algebra = algebra
        self.dim = dim
        self.action = list(action)
        if len(self.action) != algebra.dim:
            raise AlgebraError("need one action matrix per basis element")
        for m in self.action:
            if m.rows != dim or m.cols != dim:
                raise AlgebraError("action matrix shape mismatch")
        self.validated = False
        self.name = name or f"module dim {dim} over {algebra.name}"

    def __repr__(self):
        return f"ModuleRep({self.name})"

    def act_element(self, vec) -> DenseMatrix:
        """Action matrix of the algebra element with coefficient row vec."""
        F = self.algebra.field
        acc = DenseMatrix.zero(F, self.dim, self.dim)
        for c, mat in zip(vec, self.action):
            if c:
                acc = acc.add(mat.scale(c))
        return acc

    def apply(self, basis_index: int, v: list[int]) -> list[int]:
        return self.action[basis_index].mul_vec(v)


def check_module_axioms(module: ModuleRep) -> ValidationReport:
    """rho respects products through structure constants and sends 1 to id."""
    report = ValidationReport(subject=module.name)
    require_validated(module.algebra, "algebra of the module")
    A = module.algebra
    F = A.field
    if module.act_element(A.unit) != DenseMatrix.identity(F, module.dim):
        report.fail("unit-action")
        return report
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = module.action[i].mul(module.action[j])
            rhs = module.act_element(A.mult[i][j])
            if lhs != rhs:
                report.fail("product-action", pair=(i, j))
                return report
    module.validated = True
    return report


def regular_module(algebra: AlgebraData) -> ModuleRep:
    """Left multiplication on the algebra itself; contains every simple."""
    require_validated(algebra, "algebra")
    action = [algebra.left_mult_matrix(algebra.basis_vector(i)) for i in range(algebra.dim)]
    mod = ModuleRep(algebra, algebra.dim, action, name=f"regular module of {algebra.name}")
    # Valid by construction: associativity makes left multiplication a representation.
    mod.validated = True
    return mod


class IdealBasis:
    """Two-sided ideal carried as a reduced-row-echelon basis."""

    def __init__(self, ambient: AlgebraData, rows):
        self.ambient = ambient
        ech, pivots = rref(ambient.field, [list(r) for r in rows])
        self.rows = [tuple(r) for r in ech]
        self.pivots = list(pivots)
        self.validated = False

    @property
    def dim(self) -> int:
        return len(self.rows)

    def key(self) -> tuple:
        return subspace_key(self.rows)

    def contains(self, vec) -> bool:
        return in_span(self.ambient.field, vec, self.rows, self.pivots)

    def __repr__(self):
        return f"IdealBasis(dim {self.dim} in {self.ambient.name})"


def check_ideal_closure(ideal: IdealBasis) -> ValidationReport:
    """Left and right multiples of every spanning vector stay in the span."""
    report = ValidationReport(subject=f"ideal in {ideal.ambient.name}")
    A = ideal.ambient
    for r, row in enumerate(ideal.rows):
        for i in range(A.dim):
            e = A.basis_vector(i)
            if not ideal.contains(A.product(e, list(row))):
                report.fail("left-closure", row=r, basis=i)
                return report
            if not ideal.contains(A.product(list(row), e)):
                report.fail("right-closure", row=r, basis=i)
                return report
    ideal.validated = True
    return report


def annihilator(module: ModuleRep) -> IdealBasis:
    """{a : a . M = 0}; the kernel of a representation, hence two-sided."""
    require_validated(module, "module")
    A = module.algebra
    rows = [m.flatten() for m in module.action]
    big = DenseMatrix(A.field, rows, cols=module.dim * module.dim)
    ideal = IdealBasis(A, big.left_kernel())
    check_ideal_closure(ideal).raise_if_failed(AlgebraError)
    return ideal


def ideal_from_generators(algebra: AlgebraData, vectors) -> IdealBasis:
    """Smallest two-sided ideal containing the given coefficient rows."""
    require_validated(algebra, "algebra")
    F = algebra.field
    ech, pivots = rref(F, [list(v) for v in vectors])
    work = [list(r) for r in ech]
    while work:
        v = work.pop()
        for i in range(algebra.dim):
            e = algebra.basis_vector(i)
            for prod in (algebra.product(e, v), algebra.product(v, e)):
                if not in_span(F, prod, ech, pivots):
                    ech, pivots = rref(F, ech + [prod])
                    work.append(prod)
    ideal = IdealBasis(algebra, ech)
    ideal.validated = True
    return ideal


def ideal_sum(a: IdealBasis, b: IdealBasis) -> IdealBasis:
    if a.ambient is not b.ambient:
        raise AlgebraError("ideal sum requires a common ambient algebra")
    out = IdealBasis(a.ambient, list(a.rows) + list(b.rows))
    check_ideal_closure(out).raise_if_failed(AlgebraError)
    return out


def ideal_product(a: IdealBasis, b: IdealBasis) -> IdealBasis:
    """Span of pairwise products, closed up to a two-sided ideal."""
    if a.ambient is not b.ambient:
        raise AlgebraError("ideal product requires a common ambient algebra")
    A = a.ambient
    prods = [A.product(list(u), list(v)) for u in a.rows for v in b.rows]
    return ideal_from_generators(A, prods) if prods else IdealBasis(A, [])


def ideal_sum_and_product(a: IdealBasis, b: IdealBasis) -> tuple[IdealBasis, IdealBasis]:
    return ideal_sum(a, b), ideal_product(a, b)


class SubalgebraEmbedding:
    """A subalgebra in its own coordinates plus the inclusion rows."""

    def __init__(self, ambient: AlgebraData, sub: AlgebraData, inclusion_rows):
        self.ambient = ambient
        self.sub = sub
        self.inclusion = [tuple(r) for r in inclusion_rows]
        self._ech, self._pivots = rref(ambient.field, [list(r) for r in inclusion_rows])

    @property
    def dim(self) -> int:
        return self.sub.dim

    def to_ambient(self, vec) -> list[int]:
        F = self.ambient.field
        out = [0] * self.ambient.dim
        addmul = F.row_addmul
        for c, row in zip(vec, self.inclusion):
            if c:
                out = addmul(out, list(row), c)
        return out

    def coords(self, ambient_vec) -> list[int] | None:
        return solve_coords(self.ambient.field, [list(r) for r in self.inclusion], list(ambient_vec))

    def contains(self, ambient_vec) -> bool:
        return in_span(self.ambient.field, list(ambient_vec), self._ech, self._pivots)


def subalgebra_from_basis(algebra: AlgebraData, rows, labels=None, name="") -> SubalgebraEmbedding:
    """Standalone algebra on the given independent spanning rows.

    The given rows become the basis (so group-element bases keep their
    meaning); requires the span to contain the unit and be product-closed.
    """
    require_validated(algebra, "algebra")
    F = algebra.field
    rows = [list(r) for r in rows]
    ech, pivots = rref(F, rows)
    if len(ech) != len(rows):
        raise AlgebraError("subalgebra basis rows are dependent")
    if not in_span(F, list(algebra.unit), ech, pivots):
        raise AlgebraError("subalgebra span does not contain the unit")
    d = len(rows)
    structconst = []
    for i in range(d):
        for j in range(d):
            prod = algebra.product(rows[i], rows[j])
            coords = solve_coords(F, rows, prod)
            if coords is None:
                raise AlgebraError(f"span not closed under products at pair {(i, j)}")
            for k, c in enumerate(coords):
                if c:
                    structconst.append((i, j, k, c))
    unit_coords = solve_coords(F, rows, list(algebra.unit))
    sub = AlgebraData(F, d, labels, structconst, unit_coords, name=name or f"subalgebra of {algebra.name}")
    check_algebra_axioms(sub).raise_if_failed(AlgebraError)
    return SubalgebraEmbedding(algebra, sub, rows)


def intersect_ideal_with_subalgebra(ideal: IdealBasis, sub: SubalgebraEmbedding) -> IdealBasis:
    """Basis of ideal intersect span(sub), in the subalgebra's coordinates."""
    if ideal.ambient is not sub.ambient:
        raise AlgebraError("ambient mismatch")
    F = ideal.ambient.field
    ech, _ = span_intersection(F, [list(r) for r in ideal.rows], [list(r) for r in sub.inclusion])
    coords = []
    for v in ech:
        c = sub.coords(v)
        if c is None:
            raise AlgebraError("intersection vector escaped the subalgebra span")
        coords.append(c)
    out = IdealBasis(sub.sub, coords)
    check_ideal_closure(out).raise_if_failed(AlgebraError)
    return out


class QuotientMap:
    """Projection onto the complement coordinates of an echelon subspace."""

    def __init__(self, field, total_dim: int, ech, pivots):
        self.field = field
        self.ech = [list(r) for r in ech]
        self.pivots = list(pivots)
        pivot_set = set(pivots)
        self.complement = [j for j in range(total_dim) if j not in pivot_set]
        self.total_dim = total_dim

    @property
    def dim(self) -> int:
        return len(self.complement)

    def project(self, vec) -> list[int]:
        red = reduce_vector(self.field, list(vec), self.ech, self.pivots)
        return [red[j] for j in self.complement]

    def lift(self, qvec) -> list[int]:
        out = [0] * self.total_dim
        for c, j in zip(qvec, self.complement):
            out[j] = c
        return out


def quotient_algebra(algebra: AlgebraData, ideal: IdealBasis, name="") -> tuple[AlgebraData, QuotientMap]:
    """A / I on the greedy complement basis of the ideal's echelon form."""
    require_validated(algebra, "algebra")
    require_validated(ideal, "ideal")
    qm = QuotientMap(algebra.field, algebra.dim, ideal.rows, ideal.pivots)
    d = qm.dim
    structconst = []
    for i in range(d):
        for j in range(d):
            prod = algebra.product(qm.lift([1 if t == i else 0 for t in range(d)]),
                                   qm.lift([1 if t == j else 0 for t in range(d)]))
            for k, c in enumerate(qm.project(prod)):
                if c:
                    structconst.append((i, j, k, c))
    labels = [algebra.labels[j] + "~" for j in qm.complement]
    unit = qm.project(list(algebra.unit))
    quo = AlgebraData(algebra.field, d, labels, structconst, unit,
                      name=name or f"{algebra.name} mod ideal of dim {ideal.dim}")
    check_algebra_axioms(quo).raise_if_failed(AlgebraError)
    return quo, qm


# -- module subquotients -------------------------------------------------------


def submodule_rep(module: ModuleRep, ech, pivots, name="") -> ModuleRep:
    """Restriction of the action to an invariant echelon subspace."""
    require_validated(module, "module")
    F = module.algebra.field
    rows = [list(r) for r in ech]
    d = len(rows)
    action = []
    for mat in module.action:
        cols = []
        for r in rows:
            img = mat.mul_vec(r)
            coords = coords_in_echelon(F, img, rows, list(pivots))
            if coords is None:
                raise AlgebraError("subspace is not action-invariant")
            cols.append(coords)
        action.append(DenseMatrix(F, [[cols[j][i] for j in range(d)] for i in range(d)], cols=d))
    sub = ModuleRep(module.algebra, d, action, name=name or f"submodule dim {d} of {module.name}")
    sub.validated = True
    return sub


def quotient_module(module: ModuleRep, ech, pivots, name="") -> ModuleRep:
    """Quotient action on the complement coordinates of an invariant subspace."""
    require_validated(module, "module")
    F = module.algebra.field
    qm = QuotientMap(F, module.dim, ech, pivots)
    d = qm.dim
    action = []
    for mat in module.action:
        cols = [qm.project(mat.mul_vec(qm.lift([1 if t == c else 0 for t in range(d)])))
                for c in range(d)]
        action.append(DenseMatrix(F, [[cols[j][i] for j in range(d)] for i in range(d)], cols=d))
    quo = ModuleRep(module.algebra, d, action, name=name or f"quotient dim {d} of {module.name}")
    quo.validated = True
    return quo
