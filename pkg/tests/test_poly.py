"""Factorization: spec'd examples plus the 5000-polynomial re-multiply sweep."""

from __future__ import annotations

import pytest

from hopfrep.errors import FieldError
from hopfrep.gf import field_create
from hopfrep.poly import Poly, factor, is_irreducible, roots, squarefree_parts
from hopfrep.rng import SeededRng


def test_factor_x2_plus_x_over_gf2(gf2):
    f = Poly(gf2, [0, 1, 1])
    facs = factor(f)
    assert [(g.coeffs, m) for g, m in facs] == [(((0, 1)), 1), (((1, 1)), 1)]


def test_x2_plus_1_irreducible_over_gf3(gf3):
    f = Poly(gf3, [1, 0, 1])
    assert is_irreducible(f)
    facs = factor(f)
    assert len(facs) == 1 and facs[0][0] == f and facs[0][1] == 1


def test_roots_of_x3_minus_1_over_gf7(gf7):
    f = Poly(gf7, [gf7.neg(1), 0, 0, 1])
    # Oracle: enumerate the 7 candidates directly.
    expected = sorted(a for a in gf7.elements() if gf7.pow(a, 3) == 1)
    assert roots(f) == expected == [1, 2, 4]
    facs = factor(f)
    assert all(g.degree == 1 for g, _ in facs) and len(facs) == 3


def test_zero_polynomial_rejected(gf2):
    with pytest.raises(FieldError):
        factor(Poly.zero(gf2))


def test_repeated_and_pth_power_factors(gf2, gf3):
    # (x^2 + x + 1)^2 over GF(2): derivative vanishes, p-th root path.
    g = Poly(gf2, [1, 1, 1])
    f = g * g
    assert factor(f) == [(g, 2)]
    # x^3 over GF(3).
    assert factor(Poly(gf3, [0, 0, 0, 1])) == [(Poly(gf3, [0, 1]), 3)]


def test_squarefree_parts_multiply_back(gf3):
    f = Poly(gf3, [0, 1]) * Poly(gf3, [1, 1]) * Poly(gf3, [1, 1]) * Poly(gf3, [2, 1])
    parts = squarefree_parts(f)
    prod = Poly.one(gf3)
    for g, m in parts:
        for _ in range(m):
            prod = prod * g
    assert prod == f.monic()


@pytest.mark.parametrize("p,k", [(2, 1), (3, 1), (2, 2), (7, 1), (3, 2)])
def test_factor_remultiplies_1000_random_polys(p, k):
    F = field_create(p, k)
    rng = SeededRng(12345 + F.q)
    for _ in range(1000):
        deg = 1 + rng.randrange(12)
        coeffs = [rng.randrange(F.q) for _ in range(deg)] + [1 + rng.randrange(F.q - 1)]
        f = Poly(F, coeffs)
        facs = factor(f, seed=7)
        prod = Poly.constant(F, f.leading())
        for g, m in facs:
            assert g.leading() == 1
            assert is_irreducible(g)
            for _ in range(m):
                prod = prod * g
        assert prod == f
