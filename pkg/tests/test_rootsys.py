import math

import pytest
from hypothesis import given, strategies as st

from qschurweyl.rootsys import (ExtAffineElement, GroupTooLarge, UnsupportedType, affine_generator,
                                affine_reduced_word, build_root_system, coxeter_number, exponents,
                                ext_length, fixed_dim, perm_length, reduced_word, rotation,
                                simple_transposition, weyl_group)

TYPES = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("G", 2), ("D", 4)]


@pytest.mark.parametrize("kind,rank,npos,order", [("A", 2, 3, 6), ("G", 2, 6, 12), ("B", 2, 4, 8)])
def test_basic_data(kind, rank, npos, order):
    rs = build_root_system(kind, rank)
    assert len(rs.positive_roots) == npos
    assert rs.order == order


@pytest.mark.parametrize("name,size", [("A1", 2), ("A2", 6), ("D4", 192)])
def test_group_sizes(name, size):
    assert len(weyl_group(build_root_system(name))) == size


def test_group_bound():
    with pytest.raises(GroupTooLarge):
        weyl_group(build_root_system("E8"))


@pytest.mark.parametrize("name,exps", [("E8", [1, 7, 11, 13, 17, 19, 23, 29]), ("A2", [1, 2]), ("G2", [1, 5]),
                                       ("D4", [1, 3, 3, 5]), ("B3", [1, 3, 5]), ("F4", [1, 5, 7, 11])])
def test_exponents(name, exps):
    rs = build_root_system(name)
    assert exponents(rs) == exps
    assert math.prod(1 + m for m in exps) == rs.order
    assert coxeter_number(rs) == exps[-1] + 1


def test_fixed_dims_a2():
    rs = build_root_system("A2")
    ident = next(w for w in weyl_group(rs) if w.is_identity())
    assert fixed_dim(ident) == 2
    assert fixed_dim(rs.simple_reflections[0]) == 1
    assert fixed_dim(rs.coxeter_element()) == 0


@pytest.mark.parametrize("kind,rank", TYPES)
def test_fixed_dim_generating_function(kind, rank):
    # sum_w t^{d(w)} = prod (t + m_j)
    rs = build_root_system(kind, rank)
    tally = [0] * (rank + 1)
    for w in weyl_group(rs):
        tally[fixed_dim(w)] += 1
    poly = [1]
    for m in exponents(rs):
        poly = [(poly[i - 1] if i else 0) + m * (poly[i] if i < len(poly) else 0) for i in range(len(poly) + 1)]
    assert tally == poly


def test_unsupported():
    with pytest.raises(UnsupportedType):
        build_root_system("H", 3)
    with pytest.raises(UnsupportedType):
        build_root_system("D", 3)


def test_extended_lengths():
    assert ext_length(ExtAffineElement.identity(2)) == 0
    assert ext_length(ExtAffineElement.finite(simple_transposition(2, 1))) == 1
    assert ext_length(ExtAffineElement.translation_by((1, 0))) == 1
    assert ext_length(rotation(3)) == 0
    assert ext_length(affine_generator(3, 0)) == 1


@given(st.permutations(range(4)))
def test_reduced_word_length(w):
    w = tuple(w)
    assert len(reduced_word(w)) == perm_length(w)


@given(st.lists(st.integers(-2, 2), min_size=3, max_size=3), st.permutations(range(3)))
def test_affine_reduced_word(lam, w):
    e = ExtAffineElement(tuple(lam), tuple(w))
    word, j = affine_reduced_word(e)
    assert len(word) == ext_length(e)
    out = ExtAffineElement.identity(3)
    for k in word:
        out = out * affine_generator(3, k)
    pi = rotation(3)
    step = pi if j >= 0 else pi.inverse()
    for _ in range(abs(j)):
        out = out * step
    assert out == e
