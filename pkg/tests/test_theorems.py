from itertools import product

import pytest
from hypothesis import given, settings

import oracle
from strategies import sandwiches
from pogamma import (
    check_all,
    check_proposition5,
    check_theorem2,
    check_theorem3,
    check_theorem6,
    check_theorem7,
    check_theorem8,
    fixture,
    is_intra_regular,
    is_left_duo,
    is_left_regular,
    principal_filter,
)
from pogamma import regularity
from pogamma.theorems import TAGS


def sides(report):
    return report.lhs, report.rhs, report.holds


@pytest.mark.parametrize(
    "check, name, expected",
    [
        (check_theorem2, "LZ2", (True, True, True)),
        (check_theorem2, "N2", (False, False, True)),
        (check_theorem2, "S1", (True, True, True)),
        (check_theorem3, "N2", (False, False, True)),
        (check_theorem3, "LZ2", (True, True, True)),
        (check_theorem3, "S1", (True, True, True)),
        (check_proposition5, "RZ2", (True, True, True)),
        (check_proposition5, "N2", (False, False, True)),
        (check_proposition5, "S1", (True, True, True)),
        (check_theorem6, "LZ2", (True, True, True)),
        (check_theorem6, "RZ2", (False, False, True)),
        (check_theorem6, "S1", (True, True, True)),
        (check_theorem7, "RZ2", (True, True, True)),
        (check_theorem7, "LZ2", (False, False, True)),
        (check_theorem7, "S1", (True, True, True)),
        (lambda S: check_theorem8(S, "left"), "RZ2", (True, True, True)),
        (lambda S: check_theorem8(S, "left"), "N2", (False, False, True)),
        (lambda S: check_theorem8(S, "right"), "S1", (True, True, True)),
    ],
)
def test_examples(check, name, expected):
    assert sides(check(fixture(name))) == expected


def test_witness_contents():
    N2 = fixture("N2")
    t2 = check_theorem2(N2)
    rhs = dict(next(w for w in t2.witnesses if dict(w)["side"] == "rhs"))
    # x = 0 agrees (both sides are M); x = 1 has N(1) = M against an empty formula set
    assert rhs["x"] == 1
    assert rhs["N(x)"] == principal_filter(N2, 1) == N2.whole
    assert rhs["formula"] == N2.empty
    t6 = check_theorem6(fixture("RZ2"))
    rhs6 = dict(next(w for w in t6.witnesses if dict(w)["side"] == "rhs"))
    assert (rhs6["x"], set(rhs6["N(x)"]), set(rhs6["formula"])) == (0, {0, 1}, {0})
    duo = dict(next(w for w in t6.witnesses if dict(w).get("fails") == "leftDuo"))
    assert set(duo["ideal"]) == {0}
    t3 = check_theorem3(N2)
    assert dict(next(w for w in t3.witnesses if dict(w)["side"] == "rhs"))["x"] == 1


def test_null_formula_set_for_top_is_empty():
    N2 = fixture("N2")
    formula = {y for y in range(2) if 1 in oracle.down(N2, oracle.prod(N2, oracle.prod(N2, oracle.M(N2), {y}), oracle.M(N2)))}
    assert formula == set()


def test_check_all_order_and_fixtures(any_fixture):
    reports = check_all(any_fixture)
    assert [r.tag for r in reports] == list(TAGS)
    assert all(r.holds for r in reports)


def test_reports_hold_on_small_structures(small_structures):
    for S in small_structures:
        for r in check_all(S):
            assert r.holds, (S, r)
            if r.tag in ("T2", "T3", "T6", "T7", "T8-left", "T8-right"):
                assert r.holds == (r.lhs == r.rhs)
            if not (r.lhs and r.rhs):
                assert r.witnesses


def test_fast_path_agrees_with_oracle(small_structures):
    for S in small_structures:
        for r in (check_theorem3(S), check_theorem8(S, "left"), check_theorem8(S, "right")):
            assert r.rhs_oracle is not None
            assert r.rhs == r.rhs_oracle


def test_theorem2_inner_inclusion(small_structures):
    # for intra-regular S: b Gamma M c M Gamma a is contained in (M Gamma (a c b) Gamma M]
    for S in small_structures:
        if not is_intra_regular(S):
            continue
        M = oracle.M(S)
        for a, b, c in product(range(S.n), range(S.n), range(S.g)):
            left = oracle.prod(S, oracle.prod_via(S, oracle.prod(S, {b}, M), c, M), {a})
            right = oracle.down(S, oracle.prod(S, oracle.prod(S, M, {S.op(a, c, b)}), M))
            assert left <= right


def test_theorem6_inner_inclusion(small_structures):
    # for left regular, left duo S: b c M Gamma a is contained in (M Gamma (a c b)]
    for S in small_structures:
        if not (is_left_regular(S) and is_left_duo(S)):
            continue
        M = oracle.M(S)
        for a, b, c in product(range(S.n), range(S.n), range(S.g)):
            left = oracle.prod(S, oracle.prod_via(S, {b}, c, M), {a})
            right = oracle.down(S, oracle.prod(S, M, {S.op(a, c, b)}))
            assert left <= right


def test_mirror_theorems_under_opposite(small_structures):
    for S in small_structures:
        T = S.opposite()
        assert sides(check_theorem6(S)) == sides(check_theorem7(T))
        assert sides(check_theorem8(S, "left")) == sides(check_theorem8(T, "right"))


def test_bad_side():
    from pogamma import InputError

    with pytest.raises(InputError):
        check_theorem8(fixture("S1"), "up")


def test_corrupted_predicate_is_caught(monkeypatch):
    monkeypatch.setattr(regularity, "is_intra_regular", lambda S: True)
    reports = {r.tag: r for r in check_all(fixture("N2"))}
    assert not reports["T2"].holds
    assert not reports["T3"].holds


@settings(max_examples=60, deadline=None)
@given(sandwiches())
def test_theorems_hold_beyond_enumerated_envelope(S):
    for r in check_all(S):
        assert r.holds, r
