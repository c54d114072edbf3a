"""Dense matrices and subspace arithmetic over a finite field.

Subspaces are carried as reduced-row-echelon bases (rows of unit-pivot
vectors), which makes equality a tuple compare and membership a single
reduction pass.  Module vectors act as columns: a matrix M applied to a
vector v gives the column M @ v, returned as a plain list.
"""

from __future__ import annotations

from .errors import LinAlgError
from .poly import Poly


class DenseMatrix:
    """Row-major matrix of integer-encoded field elements."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field, data: list[list[int]], cols: int | None = None):
        self.field = field
        self.data = [list(row) for row in data]
        self.rows = len(self.data)
        if self.rows:
            self.cols = len(self.data[0])
            if any(len(row) != self.cols for row in self.data):
                raise LinAlgError("ragged rows")
        else:
            if cols is None:
                raise LinAlgError("empty matrix needs an explicit column count")
            self.cols = cols
        if cols is not None and self.rows and cols != self.cols:
            raise LinAlgError("column count mismatch")

    @classmethod
    def identity(cls, field, n: int) -> "DenseMatrix":
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zero(cls, field, rows: int, cols: int) -> "DenseMatrix":
        return cls(field, [[0] * cols for _ in range(rows)], cols=cols)

    def copy(self) -> "DenseMatrix":
        return DenseMatrix(self.field, self.data, cols=self.cols)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DenseMatrix)
            and self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.key()))

    def key(self) -> tuple:
        return tuple(tuple(row) for row in self.data)

    def __repr__(self):
        return f"DenseMatrix({self.rows}x{self.cols} over {self.field})"

    def is_zero(self) -> bool:
        return all(all(x == 0 for x in row) for row in self.data)

    def add(self, other: "DenseMatrix") -> "DenseMatrix":
        self._check_shape(other, same=True)
        add_row = self.field.row_add
        return DenseMatrix(
            self.field, [add_row(r1, r2) for r1, r2 in zip(self.data, other.data)], cols=self.cols
        )

    def sub(self, other: "DenseMatrix") -> "DenseMatrix":
        return self.add(other.neg())

    def neg(self) -> "DenseMatrix":
        neg_row = self.field.row_neg
        return DenseMatrix(self.field, [neg_row(r) for r in self.data], cols=self.cols)

    def scale(self, c: int) -> "DenseMatrix":
        scale_row = self.field.row_scale
        return DenseMatrix(self.field, [scale_row(r, c) for r in self.data], cols=self.cols)

    def mul(self, other: "DenseMatrix") -> "DenseMatrix":
        if self.cols != other.rows:
            raise LinAlgError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        F = self.field
        addmul = F.row_addmul
        bdata = other.data
        out = []
        for row in self.data:
            acc = [0] * other.cols
            for c, brow in zip(row, bdata):
                if c:
                    acc = addmul(acc, brow, c)
            out.append(acc)
        return DenseMatrix(F, out, cols=other.cols)

    def mul_vec(self, v: list[int]) -> list[int]:
        """Column action: returns M @ v."""
        if len(v) != self.cols:
            raise LinAlgError("vector length mismatch")
        F = self.field
        add, mul = F.add, F.mul
        out = []
        for row in self.data:
            acc = 0
            for c, x in zip(row, v):
                if c and x:
                    acc = add(acc, mul(c, x))
            out.append(acc)
        return out

    def transpose(self) -> "DenseMatrix":
        return DenseMatrix(
            self.field,
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def kron(self, other: "DenseMatrix") -> "DenseMatrix":
        F = self.field
        mul = F.mul
        out = []
        for arow in self.data:
            for brow in other.data:
                out.append([mul(a, b) for a in arow for b in brow])
        return DenseMatrix(F, out, cols=self.cols * other.cols)

    def rank(self) -> int:
        return len(rref(self.field, self.data)[0])

    def kernel(self) -> list[list[int]]:
        """Basis of {v : M @ v = 0}; size = cols - rank."""
        ech, pivots = rref(self.field, self.data)
        F = self.field
        pivot_set = set(pivots)
        free_cols = [j for j in range(self.cols) if j not in pivot_set]
        basis = []
        for f in free_cols:
            v = [0] * self.cols
            v[f] = 1
            for row, pcol in zip(ech, pivots):
                v[pcol] = F.neg(row[f])
            basis.append(v)
        return basis

    def left_kernel(self) -> list[list[int]]:
        return self.transpose().kernel()

    def inverse(self) -> "DenseMatrix":
        if self.rows != self.cols:
            raise LinAlgError("inverse of a non-square matrix")
        n = self.rows
        aug = [row + ident_row for row, ident_row in zip(self.data, DenseMatrix.identity(self.field, n).data)]
        ech, pivots = rref(self.field, aug)
        if pivots[:n] != list(range(n)) or len(pivots) != n:
            raise LinAlgError("matrix is singular")
        return DenseMatrix(self.field, [row[n:] for row in ech], cols=n)

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def flatten(self) -> list[int]:
        out = []
        for row in self.data:
            out.extend(row)
        return out

    def _check_shape(self, other: "DenseMatrix", same: bool = False) -> None:
        if same and (self.rows != other.rows or self.cols != other.cols):
            raise LinAlgError("shape mismatch")


# -- echelon-form subspace machinery ------------------------------------------


def rref(field, rows) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    work = [list(r) for r in rows]
    if not work:
        return [], []
    ncols = len(work[0])
    addmul = field.row_addmul
    scale = field.row_scale
    inv = field.inv
    neg = field.neg
    ech: list[list[int]] = []
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(r, len(work)):
            if work[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        piv = work[r][col]
        if piv != 1:
            work[r] = scale(work[r], inv(piv))
        for i in range(len(work)):
            if i != r and work[i][col]:
                work[i] = addmul(work[i], work[r], neg(work[i][col]))
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    ech = work[:r]
    return ech, pivots


def reduce_vector(field, vec, ech, pivots) -> list[int]:
    """Reduce vec against an echelon basis; zero result means membership."""
    v = list(vec)
    addmul = field.row_addmul
    neg = field.neg
    for row, pcol in zip(ech, pivots):
        c = v[pcol]
        if c:
            v = addmul(v, row, neg(c))
    return v


def in_span(field, vec, ech, pivots) -> bool:
    return all(x == 0 for x in reduce_vector(field, vec, ech, pivots))


def coords_in_echelon(field, vec, ech, pivots) -> list[int] | None:
    """Coordinates of vec against unit-pivot echelon rows, or None."""
    coords = [vec[p] for p in pivots]
    if not in_span(field, vec, ech, pivots):
        return None
    return coords


def span_union(field, rows_a, rows_b) -> tuple[list[list[int]], list[int]]:
    return rref(field, list(rows_a) + list(rows_b))


def span_intersection(field, rows_a, rows_b) -> tuple[list[list[int]], list[int]]:
    """Intersection of two row spans via the doubled-matrix kernel."""
    rows_a = [list(r) for r in rows_a]
    rows_b = [list(r) for r in rows_b]
    if not rows_a or not rows_b:
        ncols = len(rows_a[0]) if rows_a else (len(rows_b[0]) if rows_b else 0)
        return [], []
    stacked = DenseMatrix(field, rows_a + rows_b).transpose()
    vecs = []
    na = len(rows_a)
    for sol in stacked.kernel():
        # sol = (x, y) with x . A + y . B = 0, so x . A lies in both spans.
        v = [0] * len(rows_a[0])
        addmul = field.row_addmul
        for c, row in zip(sol[:na], rows_a):
            if c:
                v = addmul(v, row, c)
        vecs.append(v)
    return rref(field, vecs)


def solve_coords(field, spanning_rows, target) -> list[int] | None:
    """Coefficients x with x . spanning_rows = target, or None."""
    if not spanning_rows:
        return [] if all(t == 0 for t in target) else None
    mat = DenseMatrix(field, [list(r) for r in spanning_rows]).transpose()
    aug = [row + [t] for row, t in zip(mat.data, target)]
    ech, pivots = rref(field, aug)
    ncols = mat.cols
    if any(p == ncols for p in pivots):
        return None
    coords = [0] * ncols
    for row, pcol in zip(ech, pivots):
        coords[pcol] = row[ncols]
    return coords


def subspace_key(ech) -> tuple:
    return tuple(tuple(row) for row in ech)


# -- characteristic and minimal polynomials -----------------------------------


def charpoly(M: DenseMatrix) -> Poly:
    """Characteristic polynomial det(xI - M), by the Berkowitz recursion."""
    if M.rows != M.cols:
        raise LinAlgError("characteristic polynomial of a non-square matrix")
    F = M.field
    n = M.rows
    add, mul, neg = F.add, F.mul, F.neg
    # coeffs of charpoly of the leading i x i minor, leading term first
    pol = [1]
    for i in range(n):
        a = M.data[i][i]
        row_i = [M.data[i][j] for j in range(i)]
        col_i = [M.data[j][i] for j in range(i)]
        toep = [1, neg(a)]
        v = col_i
        for _ in range(i):
            acc = 0
            for x, y in zip(row_i, v):
                if x and y:
                    acc = add(acc, mul(x, y))
            toep.append(neg(acc))
            # v <- A v for the leading i x i block
            v = [
                _dot(F, [M.data[r][c] for c in range(i)], v) for r in range(i)
            ]
        new = [0] * (i + 2)
        for s in range(i + 2):
            acc = 0
            for t in range(max(0, s - (i + 1)), min(s, i) + 1):
                c1 = toep[s - t]
                c2 = pol[t]
                if c1 and c2:
                    acc = add(acc, mul(c1, c2))
            new[s] = acc
        pol = new
    return Poly(F, list(reversed(pol)))


def _dot(field, r1, r2) -> int:
    acc = 0
    add, mul = field.add, field.mul
    for x, y in zip(r1, r2):
        if x and y:
            acc = add(acc, mul(x, y))
    return acc


def eval_poly_at_matrix(f: Poly, M: DenseMatrix) -> DenseMatrix:
    n = M.rows
    F = M.field
    acc = DenseMatrix.zero(F, n, n)
    for c in reversed(f.coeffs):
        acc = acc.mul(M)
        if c:
            for i in range(n):
                acc.data[i][i] = F.add(acc.data[i][i], c)
    return acc


def minpoly(M: DenseMatrix) -> Poly:
    """Minimal polynomial as the lcm of cyclic-vector minimal polynomials."""
    if M.rows != M.cols:
        raise LinAlgError("minimal polynomial of a non-square matrix")
    F = M.field
    n = M.rows
    result = Poly.one(F)
    for start in range(n):
        v = [1 if j == start else 0 for j in range(n)]
        # Krylov chain until first linear dependence.
        chain = [v]
        while True:
            w = M.mul_vec(chain[-1])
            coeffs = solve_coords(F, chain, w)
            if coeffs is not None:
                local = Poly(F, [F.neg(c) for c in coeffs] + [1])
                break
            chain.append(w)
        g = result.gcd(local)
        result = (result * local) // g
        if result.degree == n:
            break
    return result.monic()


def char_min_poly(M: DenseMatrix) -> tuple[Poly, Poly]:
    """(characteristic, minimal) polynomials; verifies the divisibility pair."""
    c = charpoly(M)
    m = minpoly(M)
    if not (c % m).is_zero():
        raise LinAlgError("minimal polynomial does not divide the characteristic polynomial")
    if not eval_poly_at_matrix(m, M).is_zero():
        raise LinAlgError("matrix does not satisfy its minimal polynomial")
    return c, m
