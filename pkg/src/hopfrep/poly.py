"""Dense univariate polynomials over a finite field, with seeded factorization.

Coefficients are integer-encoded field elements, constant term first.
Factorization is squarefree split, then distinct-degree split, then seeded
equal-degree (Cantor-Zassenhaus; trace splitting in characteristic 2).
"""

from __future__ import annotations

from .errors import FieldError
from .rng import SeededRng


def _trim(coeffs):
    i = len(coeffs)
    while i > 0 and coeffs[i - 1] == 0:
        i -= 1
    return tuple(coeffs[:i])


class Poly:
    """Immutable polynomial over a FiniteField."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = _trim(list(coeffs))

    @classmethod
    def zero(cls, field) -> "Poly":
        return cls(field, ())

    @classmethod
    def one(cls, field) -> "Poly":
        return cls(field, (1,))

    @classmethod
    def x(cls, field) -> "Poly":
        return cls(field, (0, 1))

    @classmethod
    def constant(cls, field, c: int) -> "Poly":
        return cls(field, (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.field is other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((id(self.field), self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*x^{i}" if i else f"{c}")
        return "Poly(" + " + ".join(reversed(terms)) + ")"

    def __add__(self, other: "Poly") -> "Poly":
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return Poly(F, out)

    def __neg__(self) -> "Poly":
        F = self.field
        return Poly(F, [F.neg(c) for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(F)
        out = [0] * (len(a) + len(b) - 1)
        add, mul = F.add, F.mul
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] = add(out[i + j], mul(ca, cb))
        return Poly(F, out)

    def scale(self, c: int) -> "Poly":
        F = self.field
        return Poly(F, [F.mul(c, a) for a in self.coeffs])

    def __divmod__(self, other: "Poly"):
        F = self.field
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db, lb = other.degree, other.leading()
        inv_lb = F.inv(lb)
        if len(rem) - 1 < db:
            return Poly.zero(F), Poly(F, rem)
        quot = [0] * (len(rem) - db)
        sub, mul = F.sub, F.mul
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c:
                q = mul(c, inv_lb)
                quot[i - db] = q
                for j, bc in enumerate(other.coeffs):
                    rem[i - db + j] = sub(rem[i - db + j], mul(q, bc))
        return Poly(F, quot), Poly(F, rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero() or self.leading() == 1:
            return self
        return self.scale(self.field.inv(self.leading()))

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def mul_mod(self, other: "Poly", modulus: "Poly") -> "Poly":
        return (self * other) % modulus

    def pow_mod(self, e: int, modulus: "Poly") -> "Poly":
        if e < 0:
            raise ValueError("negative exponent")
        result = Poly.one(self.field)
        base = self % modulus
        while e:
            if e & 1:
                result = result.mul_mod(base, modulus)
            base = base.mul_mod(base, modulus)
            e >>= 1
        return result

    def evaluate(self, a: int) -> int:
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, a), c)
        return acc

    def derivative(self) -> "Poly":
        F = self.field
        out = []
        for i in range(1, len(self.coeffs)):
            m = i % F.p
            c = self.coeffs[i]
            acc = 0
            for _ in range(m):
                acc = F.add(acc, c)
            out.append(acc)
        return Poly(F, out)


def _pth_root(f: Poly) -> Poly:
    """Inverse of x -> x^p on a polynomial of the form g(x^p)."""
    F = f.field
    p = F.p
    root_exp = F.q // p  # c^(q/p) is the p-th root of c in GF(q)
    out = []
    for i in range(0, len(f.coeffs), p):
        out.append(F.pow(f.coeffs[i], root_exp))
    return Poly(F, out)


def squarefree_parts(f: Poly) -> list[tuple[Poly, int]]:
    """Pairwise-coprime squarefree g_i with product g_i^{m_i} = monic(f)."""
    if f.is_zero():
        raise FieldError("zero polynomial has no squarefree split")
    f = f.monic()
    out: list[tuple[Poly, int]] = []
    if f.degree == 0:
        return out
    fp = f.derivative()
    c = f.gcd(fp)
    w = f // c
    i = 1
    while w.degree > 0:
        y = w.gcd(c)
        fac = w // y
        if fac.degree > 0:
            out.append((fac, i))
        w = y
        c = c // y
        i += 1
    if c.degree > 0:
        for g, m in squarefree_parts(_pth_root(c)):
            out.append((g, f.field.p * m))
    return out


def distinct_degree_parts(f: Poly) -> list[tuple[Poly, int]]:
    """Split squarefree monic f into (product of irreducibles of degree d, d)."""
    F = f.field
    out = []
    h = Poly.x(F)
    x = Poly.x(F)
    d = 0
    rem = f
    while rem.degree >= 2 * (d + 1):
        d += 1
        h = h.pow_mod(F.q, rem)
        g = rem.gcd(h - x)
        if g.degree > 0:
            out.append((g, d))
            rem = rem // g
            h = h % rem
    if rem.degree > 0:
        out.append((rem, rem.degree))
    return out


def _random_poly(F, degree_lt: int, rng: SeededRng) -> Poly:
    return Poly(F, [rng.randrange(F.q) for _ in range(degree_lt)])


def equal_degree_split(f: Poly, d: int, rng: SeededRng) -> list[Poly]:
    """Factor a product of distinct irreducibles, all of degree d."""
    F = f.field
    if f.degree == d:
        return [f.monic()]
    while True:
        a = _random_poly(F, f.degree, rng)
        if a.degree < 1:
            continue
        if F.p == 2:
            # Trace of a over GF(2) inside GF(q^d) splits in characteristic 2.
            t = a
            acc = a
            for _ in range(F.k * d - 1):
                t = t.mul_mod(t, f)
                acc = acc + t
            g = f.gcd(acc)
        else:
            b = a.pow_mod((F.q**d - 1) // 2, f)
            g = f.gcd(b - Poly.one(F))
        if 0 < g.degree < f.degree:
            return equal_degree_split(g, d, rng) + equal_degree_split(f // g, d, rng)


def factor(f: Poly, seed: int = 0) -> list[tuple[Poly, int]]:
    """Monic irreducible factors with multiplicities, sorted canonically."""
    if f.is_zero():
        raise FieldError("cannot factor the zero polynomial")
    rng = SeededRng(seed)
    out: list[tuple[Poly, int]] = []
    for g, m in squarefree_parts(f):
        for h, d in distinct_degree_parts(g):
            for irr in equal_degree_split(h, d, rng):
                out.append((irr, m))
    out.sort(key=lambda t: (t[0].degree, t[0].coeffs, t[1]))
    return out


def roots(f: Poly, seed: int = 0) -> list[int]:
    """Distinct roots of f in its coefficient field, ascending by encoding."""
    F = f.field
    x = Poly.x(F)
    # Restrict to the product of linear factors before splitting.
    xq = x.pow_mod(F.q, f)
    lin = f.gcd(xq - x)
    found = []
    if lin.degree > 0:
        rng = SeededRng(seed)
        for g in equal_degree_split(lin, 1, rng):
            found.append(F.neg(g.coeffs[0]))
    return sorted(found)


def is_irreducible(f: Poly) -> bool:
    """Deterministic irreducibility test via distinct-degree sieving."""
    n = f.degree
    if n < 1:
        return False
    if n == 1:
        return True
    F = f.field
    x = Poly.x(F)
    h = x
    for _ in range(n // 2):
        h = h.pow_mod(F.q, f)
        if f.gcd(h - x).degree > 0:
            return False
    return True
