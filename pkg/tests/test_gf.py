"""Field axioms, deterministic moduli, embeddings, and serialization."""

from __future__ import annotations

import pytest

from hopfrep.errors import FieldError
from hopfrep.gf import field_create, field_from_dict, field_to_dict, subfield_embedding
from hopfrep.poly import Poly, is_irreducible
from hopfrep.rng import SeededRng

SMALL_FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (2, 4), (5, 2), (7, 2), (2, 6)]


@pytest.mark.parametrize("p,k", SMALL_FIELDS)
def test_field_axioms_exhaustive(p, k):
    F = field_create(p, k)
    assert F.q <= 64
    elems = list(F.elements())
    for a in elems:
        assert F.add(a, 0) == a
        assert F.mul(a, 1) == a
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
    for a in elems:
        for b in elems:
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
            for c in elems:
                assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
                assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


@pytest.mark.parametrize("p,k", SMALL_FIELDS)
def test_frobenius_additive_exhaustive(p, k):
    F = field_create(p, k)
    for a in F.elements():
        for b in F.elements():
            assert F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b))


@pytest.mark.parametrize("p,k", [(13, 2), (2, 7), (3, 5)])
def test_frobenius_additive_sampled(p, k):
    F = field_create(p, k)
    rng = SeededRng(99)
    for _ in range(1000):
        a, b = rng.randrange(F.q), rng.randrange(F.q)
        assert F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b))


def test_prime_field_of_order_two():
    F = field_create(2, 1)
    assert list(F.elements()) == [0, 1]
    assert F.add(1, 1) == 0


def test_gf9_multiplicative_group_order():
    F = field_create(3, 2)
    assert F.q == 9
    for a in range(1, 9):
        assert F.pow(a, 8) == 1
    # Some element has full order 8.
    assert any(all(F.pow(a, d) != 1 for d in (1, 2, 4)) for a in range(2, 9))


def test_gf16_contains_unique_order4_subfield():
    F = field_create(2, 4)
    sub = [a for a in F.elements() if F.pow(a, 4) == a]
    assert len(sub) == 4
    # The subset is a field: closed under addition and multiplication.
    for a in sub:
        for b in sub:
            assert F.add(a, b) in sub
            assert F.mul(a, b) in sub


def test_field_create_errors():
    with pytest.raises(FieldError):
        field_create(6, 1)
    with pytest.raises(FieldError):
        field_create(4, 2)
    with pytest.raises(FieldError):
        field_create(3, 0)


def test_modulus_is_canonical_and_irreducible():
    for p, k in [(2, 2), (2, 3), (3, 2), (5, 2), (7, 2), (2, 6)]:
        F = field_create(p, k)
        prime = field_create(p, 1)
        f = Poly(prime, list(F.modulus))
        assert f.degree == k and f.leading() == 1
        assert is_irreducible(f)
        # Nothing earlier in the enumeration is irreducible.
        code = 0
        for i, c in enumerate(F.modulus[:-1]):
            code += c * p**i
        for m in range(code):
            digits = []
            mm = m
            for _ in range(k):
                digits.append(mm % p)
                mm //= p
            assert not is_irreducible(Poly(prime, digits + [1]))


def test_field_instances_cached():
    assert field_create(3, 2) is field_create(3, 2)


@pytest.mark.parametrize("src,dst", [((2, 1), (2, 2)), ((2, 2), (2, 4)), ((3, 1), (3, 2)),
                                     ((3, 2), (3, 4)), ((2, 2), (2, 6)), ((7, 1), (7, 2))])
def test_subfield_embedding_is_ring_hom(src, dst):
    Fs = field_create(*src)
    Fd = field_create(*dst)
    emb = subfield_embedding(Fs, Fd)
    assert emb[0] == 0 and emb[1] == 1
    assert len(set(emb)) == Fs.q
    for a in Fs.elements():
        # Image lies in the subfield of the right order.
        assert Fd.pow(emb[a], Fs.q) == emb[a]
        for b in Fs.elements():
            assert emb[Fs.add(a, b)] == Fd.add(emb[a], emb[b])
            assert emb[Fs.mul(a, b)] == Fd.mul(emb[a], emb[b])


def test_embedding_requires_divisible_degree():
    with pytest.raises(FieldError):
        subfield_embedding(field_create(2, 3), field_create(2, 4))


def test_element_serialization_roundtrip():
    F = field_create(3, 2)
    for a in F.elements():
        coeffs = F.element_coeffs(a)
        assert len(coeffs) == 2
        assert F.element_from_coeffs(coeffs) == a


def test_field_dict_roundtrip_and_canonical_gate():
    F = field_create(2, 3)
    assert field_from_dict(field_to_dict(F)) is F
    with pytest.raises(FieldError):
        field_from_dict({"p": 2, "k": 3, "modulus": [1, 1, 1, 1]})


def test_rng_stream_and_derivation():
    a = SeededRng(42)
    b = SeededRng(42)
    assert [a.next_u64() for _ in range(5)] == [b.next_u64() for _ in range(5)]
    assert SeededRng(0).next_u64() != 0
    child = SeededRng(7).derive(3)
    assert child.next_u64() == SeededRng(7).derive(3).next_u64()
