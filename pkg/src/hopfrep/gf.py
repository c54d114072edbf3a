"""Exact arithmetic in GF(p^k) with deterministic moduli.

Elements are encoded as integers in [0, p^k): the element with coefficient
vector (c0, ..., c_{k-1}) on the power basis of the modulus quotient is
encoded as c0 + c1*p + ... + c_{k-1}*p^{k-1}.  Encoding 0 is zero and
encoding 1 is the unit, so both are canonical.

The modulus for degree k is the first monic irreducible in the enumeration
where the constant term varies fastest (coefficient vectors read as base-p
counters), so equal (p, k) always yields identical arithmetic without a
Conway-polynomial table.

Small extension fields carry full multiplication/addition tables; larger
ones use exp/log plus Zech logarithms.  Prime fields use plain modular
arithmetic.  Fields are cached by (p, k) and safe to share: all state is
immutable after construction.
"""

from __future__ import annotations

import functools

from .errors import FieldError
from . import poly as _poly

# Full q x q tables up to this order; exp/log/Zech tables beyond.
_DIRECT_TABLE_LIMIT = 128
_LOG_TABLE_LIMIT = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class FiniteField:
    """GF(p^k) on integer-encoded elements; immutable and shareable."""

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = tuple(modulus)  # monic, length k+1, constant first
        self.zero = 0
        self.one = 1
        self._bind_ops()

    # -- bootstrap arithmetic on digit vectors -------------------------------

    def _digits(self, a: int) -> list[int]:
        p, k = self.p, self.k
        out = []
        for _ in range(k):
            out.append(a % p)
            a //= p
        return out

    def _encode(self, digits) -> int:
        p = self.p
        acc = 0
        for d in reversed(digits):
            acc = acc * p + d
        return acc

    def _raw_add(self, a: int, b: int) -> int:
        p = self.p
        da, db = self._digits(a), self._digits(b)
        return self._encode([(x + y) % p for x, y in zip(da, db)])

    def _raw_neg(self, a: int) -> int:
        p = self.p
        return self._encode([(-x) % p for x in self._digits(a)])

    def _raw_mul(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    if y:
                        prod[i + j] = (prod[i + j] + x * y) % p
        mod = self.modulus
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(k):
                    prod[i - k + j] = (prod[i - k + j] - c * mod[j]) % p
        return self._encode(prod[:k])

    def _raw_pow(self, a: int, e: int) -> int:
        result = 1
        base = a
        while e:
            if e & 1:
                result = self._raw_mul(result, base)
            base = self._raw_mul(base, base)
            e >>= 1
        return result

    # -- mode selection -------------------------------------------------------

    def _bind_ops(self) -> None:
        if self.k == 1:
            self._bind_prime()
        elif self.q <= _DIRECT_TABLE_LIMIT:
            self._bind_tables()
        elif self.q <= _LOG_TABLE_LIMIT:
            self._bind_zech()
        else:
            self._bind_raw()

    def _bind_prime(self) -> None:
        p = self.p

        self.add = lambda a, b: (a + b) % p
        self.sub = lambda a, b: (a - b) % p
        self.neg = lambda a: (-a) % p
        self.mul = lambda a, b: (a * b) % p

        def inv(a: int) -> int:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return pow(a, p - 2, p)

        self.inv = inv
        self.row_addmul = lambda dst, src, c: [(x + c * y) % p for x, y in zip(dst, src)]
        self.row_scale = lambda row, c: [(c * x) % p for x in row]
        self.row_add = lambda r1, r2: [(x + y) % p for x, y in zip(r1, r2)]
        self.row_neg = lambda row: [(-x) % p for x in row]

    def _bind_tables(self) -> None:
        q = self.q
        tadd = [0] * (q * q)
        tmul = [0] * (q * q)
        for a in range(q):
            base = a * q
            for b in range(q):
                tadd[base + b] = self._raw_add(a, b)
                tmul[base + b] = self._raw_mul(a, b)
        tneg = [self._raw_neg(a) for a in range(q)]
        tinv = [0] * q
        for a in range(1, q):
            tinv[a] = self._raw_pow(a, q - 2)
        self._tadd, self._tmul, self._tneg, self._tinv = tadd, tmul, tneg, tinv

        self.add = lambda a, b: tadd[a * q + b]
        self.sub = lambda a, b: tadd[a * q + tneg[b]]
        self.neg = lambda a: tneg[a]
        self.mul = lambda a, b: tmul[a * q + b]

        def inv(a: int) -> int:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return tinv[a]

        self.inv = inv
        self.row_addmul = lambda dst, src, c: [
            tadd[x * q + tmul[c * q + y]] for x, y in zip(dst, src)
        ]
        self.row_scale = lambda row, c: [tmul[c * q + x] for x in row]
        self.row_add = lambda r1, r2: [tadd[x * q + y] for x, y in zip(r1, r2)]
        self.row_neg = lambda row: [tneg[x] for x in row]

    def _bind_zech(self) -> None:
        q = self.q
        qm1 = q - 1
        g = self._find_generator()
        exp = [1] * qm1
        for i in range(1, qm1):
            exp[i] = self._raw_mul(exp[i - 1], g)
        log = [0] * q
        for i, v in enumerate(exp):
            log[v] = i
        # zech[i] = log(1 + g^i); -1 marks 1 + g^i == 0.
        zech = [0] * qm1
        for i in range(qm1):
            s = self._raw_add(1, exp[i])
            zech[i] = log[s] if s else -1
        self.generator = g
        self._exp, self._log, self._zech = exp, log, zech

        def add(a: int, b: int) -> int:
            if a == 0:
                return b
            if b == 0:
                return a
            la, lb = log[a], log[b]
            d = lb - la
            if d < 0:
                d += qm1
            z = zech[d]
            if z < 0:
                return 0
            s = la + z
            if s >= qm1:
                s -= qm1
            return exp[s]

        if self.p == 2:
            neg = lambda a: a
        else:
            half = qm1 // 2

            def neg(a: int) -> int:
                if a == 0:
                    return 0
                return exp[(log[a] + half) % qm1]

        def mul(a: int, b: int) -> int:
            if a == 0 or b == 0:
                return 0
            s = log[a] + log[b]
            if s >= qm1:
                s -= qm1
            return exp[s]

        def inv(a: int) -> int:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return exp[(qm1 - log[a]) % qm1]

        self.add = add
        self.neg = neg
        self.sub = lambda a, b: add(a, neg(b))
        self.mul = mul
        self.inv = inv
        self.row_addmul = lambda dst, src, c: [add(x, mul(c, y)) for x, y in zip(dst, src)]
        self.row_scale = lambda row, c: [mul(c, x) for x in row]
        self.row_add = lambda r1, r2: [add(x, y) for x, y in zip(r1, r2)]
        self.row_neg = lambda row: [neg(x) for x in row]

    def _bind_raw(self) -> None:
        self.add = self._raw_add
        self.sub = lambda a, b: self._raw_add(a, self._raw_neg(b))
        self.neg = self._raw_neg
        self.mul = self._raw_mul

        def inv(a: int) -> int:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return self._raw_pow(a, self.q - 2)

        self.inv = inv
        self.row_addmul = lambda dst, src, c: [
            self.add(x, self.mul(c, y)) for x, y in zip(dst, src)
        ]
        self.row_scale = lambda row, c: [self.mul(c, x) for x in row]
        self.row_add = lambda r1, r2: [self.add(x, y) for x, y in zip(r1, r2)]
        self.row_neg = lambda row: [self.neg(x) for x in row]

    def _find_generator(self) -> int:
        qm1 = self.q - 1
        prime_parts = []
        m = qm1
        d = 2
        while d * d <= m:
            if m % d == 0:
                prime_parts.append(d)
                while m % d == 0:
                    m //= d
            d += 1
        if m > 1:
            prime_parts.append(m)
        for g in range(2, self.q):
            if all(self._raw_pow(g, qm1 // r) != 1 for r in prime_parts):
                return g
        raise FieldError("no multiplicative generator found")  # pragma: no cover

    # -- public helpers -------------------------------------------------------

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if a == 0:
            return 1 if e == 0 else 0
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def elements(self):
        return range(self.q)

    def random_element(self, rng) -> int:
        return rng.randrange(self.q)

    def element_coeffs(self, a: int) -> list[int]:
        if not 0 <= a < self.q:
            raise FieldError(f"encoding {a} outside GF({self.q})")
        return self._digits(a)

    def element_from_coeffs(self, coeffs) -> int:
        if len(coeffs) != self.k:
            raise FieldError(f"expected {self.k} coefficients, got {len(coeffs)}")
        return self._encode([c % self.p for c in coeffs])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteField)
            and self.p == other.p
            and self.k == other.k
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        return f"GF({self.q})"


# FieldSpec is the serialization-facing name for the same object.
FieldSpec = FiniteField

_FIELD_CACHE: dict[tuple[int, int], FiniteField] = {}


def _canonical_modulus(p: int, k: int) -> tuple[int, ...]:
    """First monic irreducible of degree k, constant term varying fastest."""
    if k == 1:
        return (0, 1)
    prime = field_create(p, 1)
    for m in range(p**k):
        digits = []
        mm = m
        for _ in range(k):
            digits.append(mm % p)
            mm //= p
        f = _poly.Poly(prime, digits + [1])
        if _poly.is_irreducible(f):
            return tuple(digits + [1])
    raise FieldError(f"no irreducible of degree {k} over GF({p})")  # pragma: no cover


def field_create(p: int, k: int) -> FiniteField:
    """The canonical GF(p^k); instances are cached per (p, k)."""
    if not is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if k < 1:
        raise FieldError(f"extension degree {k} must be at least 1")
    key = (p, k)
    field = _FIELD_CACHE.get(key)
    if field is None:
        field = FiniteField(p, k, _canonical_modulus(p, k))
        _FIELD_CACHE[key] = field
    return field


@functools.lru_cache(maxsize=None)
def subfield_embedding(src: FiniteField, dst: FiniteField) -> tuple[int, ...]:
    """Lookup table for the canonical ring embedding GF(p^k) -> GF(p^{km}).

    The generator of src is sent to the smallest root (by integer encoding)
    of src's modulus inside dst, which fixes the embedding deterministically.
    """
    if src.p != dst.p:
        raise FieldError("embedding requires equal characteristic")
    if dst.k % src.k != 0:
        raise FieldError(f"GF({src.q}) does not embed in GF({dst.q})")
    if src is dst or src == dst:
        return tuple(range(src.q))
    if src.k == 1:
        # Prime subfield: constant digits coincide with integer encodings.
        return tuple(range(src.p))
    lifted = _poly.Poly(dst, [c % dst.p for c in src.modulus])
    root_list = _poly.roots(lifted, seed=0)
    if not root_list:
        raise FieldError("modulus has no root in the target field")  # pragma: no cover
    r = root_list[0]
    powers = [1]
    for _ in range(src.k - 1):
        powers.append(dst.mul(powers[-1], r))
    table = []
    for a in range(src.q):
        digits = src.element_coeffs(a)
        acc = 0
        for c, pw in zip(digits, powers):
            if c:
                acc = dst.add(acc, dst.mul(c, pw))
        table.append(acc)
    return tuple(table)


def field_to_dict(field: FiniteField) -> dict:
    return {"p": field.p, "k": field.k, "modulus": list(field.modulus)}


def field_from_dict(data: dict) -> FiniteField:
    try:
        p, k = int(data["p"]), int(data["k"])
        modulus = [int(c) for c in data["modulus"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise FieldError(f"malformed field spec: {exc}") from exc
    field = field_create(p, k)
    if tuple(modulus) != field.modulus:
        raise FieldError(
            f"non-canonical modulus {modulus} for GF({p}^{k}); expected {list(field.modulus)}"
        )
    return field
