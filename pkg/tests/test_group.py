import pytest
from hypothesis import given, settings, strategies as st

from helpers import D8_GENS, F8, d8, generator_pool, small_groups
from qhecke.group import (GroupTooLarge, NotDiagonal, SingularGenerator, character, diagonal_characters,
                          generate, is_diagonal_matrix, is_monomial, is_monomial_matrix, trivial_group)
from qhecke.linalg import mat_mul, to_matrix
from qhecke.scalar import QQ, cyclotomic_field


def test_d8_order_and_enumeration():
    G = d8()
    assert len(G) == 8
    M, N = (to_matrix(g, QQ) for g in D8_GENS)
    e = G.matrix(0)
    MN, NM = mat_mul(M, N), mat_mul(N, M)
    expected = [e, M, N, MN, NM, mat_mul(MN, M), mat_mul(NM, N), mat_mul(MN, MN)]
    assert G.elements == expected


def test_trivial_and_cyclic():
    assert len(trivial_group(3, QQ)) == 1
    assert len(generate([], QQ, n=2)) == 1
    F = cyclotomic_field(3)
    q = F.zeta()
    G = generate([[[q ** 2, 0, 0], [0, 1, 0], [0, 0, q ** -2]]], F)
    assert len(G) == 3


def test_errors():
    with pytest.raises(SingularGenerator):
        generate([[[1, 1], [1, 1]]], QQ)
    with pytest.raises(GroupTooLarge):
        generate([[[2]]], QQ, cap=50)
    with pytest.raises(ValueError):
        generate([[[1, 0], [0, 1]], [[1]]], QQ)


def test_conjugate_examples():
    G = d8()
    assert all(G.conjugate(0, h) == 0 for h in range(8))
    assert G.conjugate(1, 2) == 6
    C = generate([[[0, -1], [1, -1]]], QQ)
    assert all(C.conjugate(g, h) == g for g in range(3) for h in range(3))


def test_centralizer_examples():
    G = d8()
    assert G.centralizer(0) == list(range(8))
    assert G.centralizer(1) == [0, 1, 6, 7]
    C = small_groups()["C3"]
    assert all(C.centralizer(g) == [0, 1, 2] for g in range(3))


def test_conjugacy_classes_d8():
    classes = d8().conjugacy_classes()
    assert sorted(len(c) for c in classes) == [1, 1, 2, 2, 2]
    assert [0] in classes and [7] in classes and [3, 4] in classes


def test_monomial_examples():
    assert is_monomial(d8())
    F = cyclotomic_field(8)
    z = F.zeta()
    assert is_monomial(generate([[[z, 0], [0, z ** 3]]], F))
    assert not is_monomial(small_groups()["C3"])
    assert is_monomial_matrix(to_matrix([[0, 2], [3, 0]], QQ))
    assert not is_monomial_matrix(to_matrix([[1, 1], [0, 1]], QQ))


def test_diagonal_characters_examples():
    F = cyclotomic_field(5)
    q = F.zeta()
    G = generate([[[q ** 2, 0, 0], [0, 1, 0], [0, 0, q ** -2]]], F)
    chi = diagonal_characters(G)
    assert (chi[(1, 0)], chi[(1, 1)], chi[(1, 2)]) == (q ** 2, 1, q ** -2)
    assert all(chi[(0, i)] == 1 for i in range(3))
    assert character(G, chi, 0) == [q ** (2 * k) for k in range(5)]
    assert diagonal_characters(d8()) is NotDiagonal
    assert not NotDiagonal


def test_enumeration_is_stable():
    for G in small_groups().values():
        H = generate([[list(r) for r in m] for m in G.generators], QQ)
        assert H.elements == G.elements and H.mult_table == G.mult_table


GROUPS = list(small_groups().values()) + [
    generate(g, F8) for g in ([generator_pool(2)[5], generator_pool(2)[1]], [generator_pool(3)[7]],
                              [generator_pool(3)[3], generator_pool(3)[0]])
]


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(GROUPS), st.data())
def test_table_axioms(G, data):
    idx = st.integers(0, len(G) - 1)
    a, b, c = data.draw(idx), data.draw(idx), data.draw(idx)
    assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))
    assert G.mul(a, G.inverse(a)) == 0 == G.mul(G.inverse(a), a)
    assert G.matrix(G.mul(a, b)) == mat_mul(G.matrix(a), G.matrix(b))
    assert G.conjugate(a, b) == G.mul(G.inverse(b), G.mul(a, b))
    assert (b in G.centralizer(a)) == (G.mul(a, b) == G.mul(b, a))


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([G for G in GROUPS if all(is_diagonal_matrix(m) for m in G.elements)]), st.data())
def test_characters_multiplicative(G, data):
    chi = diagonal_characters(G)
    a = data.draw(st.integers(0, len(G) - 1))
    b = data.draw(st.integers(0, len(G) - 1))
    for i in range(G.n):
        assert chi[(G.mul(a, b), i)] == chi[(a, i)] * chi[(b, i)]
