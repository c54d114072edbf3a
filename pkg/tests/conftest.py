"""Shared fixtures: fields, groups, and the standing Hopf corpus."""

from __future__ import annotations

import pytest

from hopfrep.gf import field_create
from hopfrep.groups import builtin_group, commutator_subgroup
from hopfrep.constructors import dual_group_algebra, group_algebra


@pytest.fixture(scope="session")
def gf2():
    return field_create(2, 1)


@pytest.fixture(scope="session")
def gf3():
    return field_create(3, 1)


@pytest.fixture(scope="session")
def gf7():
    return field_create(7, 1)


@pytest.fixture(scope="session")
def s3():
    return builtin_group("S3")


@pytest.fixture(scope="session")
def ks3_gf7(s3, gf7):
    return group_algebra(s3, gf7)


@pytest.fixture(scope="session")
def dual_s3_gf2(s3, gf2):
    return dual_group_algebra(s3, gf2)


@pytest.fixture(scope="session")
def c3_rows(s3):
    elems, _ = commutator_subgroup(s3)
    return [[1 if i == g else 0 for i in range(s3.order)] for g in elems]


def unit_vector(n: int, i: int) -> list[int]:
    v = [0] * n
    v[i] = 1
    return v


@pytest.fixture(scope="session")
def twist_corpus(gf2, gf3, gf7):
    """Hopf algebras whose character sets exercise the twist laws."""
    gf5 = field_create(5, 1)
    out = []
    for name in ("C2", "C3", "C4", "S3", "D4", "A4"):
        group = builtin_group(name)
        for field in (gf2, gf3, gf5, gf7):
            out.append(group_algebra(group, field))
            out.append(dual_group_algebra(group, field))
    return out
