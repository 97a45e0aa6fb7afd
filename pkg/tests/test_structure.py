from itertools import permutations, product

import numpy as np
import pytest

import oracle
from pogamma import Candidate, InputError, InvalidStructure, build, fixture, from_tables, validate
from pogamma.structure import AXIOMS


def test_trivial_fixture_is_valid():
    S = fixture("S1")
    assert (S.n, S.g) == (1, 1)
    assert validate(Candidate.from_pairs([[[0]]])).valid


def test_left_zero_validates_and_oracle_agrees():
    table = np.array([[[0, 0], [1, 1]]])
    assert oracle.associative(table)
    report = validate(Candidate.from_pairs(table))
    assert report.valid and report.failures == ()


def test_non_transitive_order_reports_first_triple():
    table = np.zeros((1, 3, 3), dtype=int)
    report = validate(Candidate.from_pairs(table, [(0, 1), (1, 2)]))
    assert not report.valid
    assert report.witness("transitivity") == (0, 1, 2)


def test_all_failures_reported_not_fail_fast():
    # non-associative table (2-element "a c b = 1 - a") and a 2-cycle order
    table = np.array([[[1, 1], [0, 0]]])
    report = validate(Candidate.from_pairs(table, [(0, 1), (1, 0)]))
    tags = [t for t, _ in report.failures]
    assert "associativity" in tags and "antisymmetry" in tags
    assert tags == [t for t in AXIOMS if t in tags]
    assert report.witness("antisymmetry") == (0, 1)


def test_associativity_witness_is_lexicographically_first():
    table = np.array([[[1, 1], [0, 0]]])
    report = validate(Candidate.from_pairs(table))
    a, c, b, d, e = report.witness("associativity")
    T = table
    assert T[d, T[c, a, b], e] != T[c, a, T[d, b, e]]
    first = next(
        w
        for w in product(range(2), range(1), range(2), range(1), range(2))
        if T[w[3], T[w[1], w[0], w[2]], w[4]] != T[w[1], w[0], T[w[3], w[2], w[4]]]
    )
    assert (a, c, b, d, e) == first


def test_compatibility_violation_detected():
    # left-zero with 0 <= 1: a c x = a, fine on the right; x c a = x, fine on the left.
    assert validate(Candidate.from_pairs([[[0, 0], [1, 1]]], [(0, 1)])).valid
    # 2-element group Z2 with 0 <= 1 is not compatible: 0+1 = 1 but 1+1 = 0.
    report = validate(Candidate.from_pairs([[[0, 1], [1, 0]]], [(0, 1)]))
    assert report.failed("compatibility-right") and report.failed("compatibility-left")
    a, b, c, x = report.witness("compatibility-right")
    assert (a, b) == (0, 1)
    T = np.array([[[0, 1], [1, 0]]])
    leq = {(0, 0), (1, 1), (0, 1)}
    assert (T[c, a, x], T[c, b, x]) not in leq


@pytest.mark.parametrize(
    "table",
    [
        [[[0, 2], [0, 0]]],  # entry out of range
        [[[0, -1], [0, 0]]],
        [[0, 0, 0]],  # not square
    ],
)
def test_out_of_range_is_input_error(table):
    with pytest.raises(InputError):
        Candidate.from_pairs(table)


def test_order_pair_out_of_range():
    with pytest.raises(InputError):
        Candidate.from_pairs([[[0, 0], [0, 0]]], [(0, 2)])


def test_build_rejects_invalid():
    with pytest.raises(InvalidStructure) as info:
        build(Candidate.from_pairs([[[1, 1], [0, 0]]]))
    assert not info.value.report.valid


def test_fixtures():
    assert fixture("RZ2").op(0, 0, 1) == 1
    assert fixture("LZ2").op(1, 0, 0) == 1
    N2 = fixture("N2")
    assert N2.leq[0, 1] and not N2.leq[1, 0]
    assert validate(Candidate(N2.table, N2.leq)).valid
    with pytest.raises(InputError):
        fixture("Z3")


def test_validate_is_pure(any_fixture):
    c = Candidate(any_fixture.table, any_fixture.leq)
    assert validate(c) == validate(c)


def test_enumerated_structures_satisfy_axioms(small_structures):
    for S in small_structures:
        assert oracle.associative(S.table)
        assert oracle.is_partial_order(S.leq.tolist())
        for a, b, c, x in product(range(S.n), range(S.n), range(S.g), range(S.n)):
            if S.leq[a, b]:
                assert S.leq[S.op(a, c, x), S.op(b, c, x)]
                assert S.leq[S.op(x, c, a), S.op(x, c, b)]


def test_opposite_and_relabel_stay_valid(small_structures):
    for S in small_structures[::7]:
        assert validate(Candidate(S.opposite().table, S.leq)).valid
        assert S.opposite().opposite() == S
        for sigma in permutations(range(S.n)):
            T = S.relabel(sigma)
            assert validate(Candidate(T.table, T.leq)).valid
            for a, c, b in product(range(S.n), range(S.g), range(S.n)):
                assert T.op(sigma[a], c, sigma[b]) == sigma[S.op(a, c, b)]


def test_structures_are_immutable():
    S = fixture("LZ2")
    with pytest.raises(ValueError):
        S.table[0, 0, 0] = 1


def test_equality_and_hash():
    assert fixture("RZ2") == from_tables([[[0, 1], [0, 1]]])
    assert fixture("RZ2") != fixture("LZ2")
    assert len({fixture("N2"), fixture("N2")}) == 1
