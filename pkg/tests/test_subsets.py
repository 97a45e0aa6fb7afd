import pytest
from hypothesis import given, settings

import oracle
from strategies import members, structure_and_subsets
from pogamma import InputError, Subset, down_closure, fixture, gamma_product, gamma_product_via, up_closure


def S_(S, *xs):
    return S.subset(xs)


def test_product_examples():
    LZ2, RZ2 = fixture("LZ2"), fixture("RZ2")
    assert gamma_product(LZ2, S_(LZ2, 0, 1), S_(LZ2, 1)) == S_(LZ2, 0, 1)
    assert gamma_product(RZ2, S_(RZ2, 0, 1), S_(RZ2, 1)) == S_(RZ2, 1)
    assert gamma_product_via(LZ2, S_(LZ2, 1), 0, S_(LZ2, 0)) == S_(LZ2, 1)
    for S in (LZ2, RZ2):
        assert gamma_product(S, S.empty, S.whole) == S.empty
        assert gamma_product(S, S.whole, S.empty) == S.empty
        assert gamma_product_via(S, S.empty, 0, S.whole) == S.empty


def test_closure_examples(any_fixture):
    S = any_fixture
    assert down_closure(S, S.whole) == S.whole
    assert up_closure(S, S.whole) == S.whole
    assert down_closure(S, S.empty) == S.empty
    assert up_closure(S, S.empty) == S.empty


def test_null_structure_closures():
    N2 = fixture("N2")
    assert down_closure(N2, S_(N2, 1)) == S_(N2, 0, 1)
    assert up_closure(N2, S_(N2, 0)) == S_(N2, 0, 1)
    assert down_closure(N2, S_(N2, 0)) == S_(N2, 0)


def test_single_gamma_product_equals_full_product(small_structures):
    for S in small_structures:
        if S.g != 1:
            continue
        for A in range(S.full + 1):
            for B in range(S.full + 1):
                a, b = S.subset(members(A)), S.subset(members(B))
                assert gamma_product_via(S, a, 0, b) == gamma_product(S, a, b)


def test_ground_set_mismatch():
    LZ2, S1 = fixture("LZ2"), fixture("S1")
    with pytest.raises(InputError):
        gamma_product(LZ2, S1.whole, LZ2.whole)
    with pytest.raises(InputError):
        down_closure(LZ2, S1.whole)
    with pytest.raises(InputError):
        LZ2.whole | S1.whole
    with pytest.raises(InputError):
        gamma_product_via(LZ2, LZ2.whole, 1, LZ2.whole)


def test_subset_rendering_and_basics():
    A = Subset.of(4, [2, 0])
    assert str(A) == "{0, 2}"
    assert str(Subset(3, 0)) == "{}"
    assert list(A) == [0, 2] and len(A) == 2 and 2 in A and 1 not in A
    assert A.issubset(Subset.of(4, [0, 1, 2]))
    with pytest.raises(InputError):
        Subset.of(2, [2])
    with pytest.raises(InputError):
        Subset(2, 4)


@settings(max_examples=300, deadline=None)
@given(structure_and_subsets())
def test_operators_match_set_oracle(data):
    S, A, B, c = data
    sa, sb = frozenset(A), frozenset(B)
    assert frozenset(gamma_product(S, A, B)) == oracle.prod(S, sa, sb)
    assert frozenset(gamma_product_via(S, A, c, B)) == oracle.prod_via(S, sa, c, sb)
    assert frozenset(down_closure(S, A)) == oracle.down(S, sa)
    assert frozenset(up_closure(S, A)) == oracle.up(S, sa)


@settings(max_examples=300, deadline=None)
@given(structure_and_subsets())
def test_closure_identities(data):
    S, A, B, _ = data
    d = lambda X: down_closure(S, X)
    p = lambda X, Y: gamma_product(S, X, Y)
    assert A.issubset(d(A)) and d(d(A)) == d(A)
    if A.issubset(B):
        assert d(A).issubset(d(B))
    assert p(d(A), d(B)).issubset(d(p(A, B)))
    target = d(p(A, B))
    assert d(p(d(A), d(B))) == target
    assert d(p(d(A), B)) == target
    assert d(p(A, d(B))) == target


@settings(max_examples=200, deadline=None)
@given(structure_and_subsets())
def test_product_is_union_over_gammas(data):
    S, A, B, _ = data
    union = S.empty
    for c in range(S.g):
        union = union | gamma_product_via(S, A, c, B)
    assert union == gamma_product(S, A, B)
