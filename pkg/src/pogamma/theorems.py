"""Executable checks of the characterization theorems on a single structure.

Every check returns a :class:`TheoremReport`.  The theorems are proved results,
so on a valid structure ``holds`` is always true; a false ``holds`` means one of
the predicates or closures computing the two sides is wrong.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import filters, ideals, regularity
from .errors import InputError
from .subsets import Subset, down_mask, product_mask

TAGS = ("T2", "T3", "P5", "T6", "T7", "T8-left", "T8-right")

# Structures up to this size also get the enumerate-every-ideal cross-check.
ORACLE_MAX_N = 3


@dataclass(frozen=True)
class TheoremReport:
    tag: str
    lhs: bool
    rhs: bool
    holds: bool
    witnesses: tuple = ()
    rhs_oracle: bool | None = None


def _w(*items):
    return tuple(items)


def _formula_check(S, formula):
    """Compare every principal filter with ``{y : x in formula[y]}``.

    Returns the rhs flag and, on failure, the first ``(x, N(x), formula set)``.
    """
    for x in range(S.n):
        expected = sum(1 << y for y in range(S.n) if formula[y] >> x & 1)
        got = filters.principal_filter_mask(S, x)
        if got != expected:
            return False, _w(("side", "rhs"), ("x", x), ("N(x)", Subset(S.n, got)), ("formula", Subset(S.n, expected)))
    return True, None


def _regularity_witness(name, violation):
    if violation is None:
        return None
    labels = ("x", "gamma")
    return _w(("side", "lhs"), ("fails", name), *zip(labels, violation))


def _finish(tag, lhs, rhs, holds, witnesses, rhs_oracle=None):
    return TheoremReport(tag, lhs, rhs, holds, tuple(w for w in witnesses if w is not None), rhs_oracle)


def check_theorem2(S):
    M = S.full
    lhs = regularity.is_intra_regular(S)
    formula = [down_mask(S, product_mask(S, product_mask(S, M, 1 << y), M)) for y in range(S.n)]
    rhs, rhs_w = _formula_check(S, formula)
    lhs_w = None if lhs else _regularity_witness("intraRegular", regularity.intra_regular_violation(S))
    return _finish("T2", lhs, rhs, lhs == rhs, [lhs_w, rhs_w])


def _semiprime_fast(S, generate):
    """All ideals of one kind are semiprime iff each ``x`` lies in the ideal generated by each ``x c x``."""
    for x in range(S.n):
        for c in range(S.g):
            I = generate(S, S.mul[c][x][x])
            if not I >> x & 1:
                return False, _w(("side", "rhs"), ("x", x), ("gamma", c), ("ideal", Subset(S.n, I)))
    return True, None


def _semiprime_oracle(S, kind):
    return all(ideals.semiprime_violation(S, A) is None for A in ideals.ideal_masks(S, kind))


def _semiprime_theorem(tag, S, lhs, lhs_w, generate, kind):
    rhs, rhs_w = _semiprime_fast(S, generate)
    oracle = _semiprime_oracle(S, kind) if S.n <= ORACLE_MAX_N else None
    holds = lhs == rhs
    extra = None
    if oracle is not None and oracle != rhs:
        holds = False
        extra = _w(("side", "rhs"), ("oracle-disagreement", oracle))
    return _finish(tag, lhs, rhs, holds, [lhs_w, rhs_w, extra], oracle)


def check_theorem3(S):
    lhs = regularity.is_intra_regular(S)
    lhs_w = None if lhs else _regularity_witness("intraRegular", regularity.intra_regular_violation(S))
    return _semiprime_theorem("T3", S, lhs, lhs_w, ideals.generated_ideal_mask, "two-sided")


def check_proposition5(S):
    left = regularity.is_left_regular(S)
    right = regularity.is_right_regular(S)
    lhs = left or right
    rhs = regularity.is_intra_regular(S)
    witnesses = []
    if not left:
        witnesses.append(_regularity_witness("leftRegular", regularity.left_regular_violation(S)))
    if not right:
        witnesses.append(_regularity_witness("rightRegular", regularity.right_regular_violation(S)))
    if not rhs:
        v = regularity.intra_regular_violation(S)
        if v is not None:
            witnesses.append(_w(("side", "rhs"), ("fails", "intraRegular"), ("x", v[0]), ("gamma", v[1])))
    holds = (not left or rhs) and (not right or rhs)
    return _finish("P5", lhs, rhs, holds, witnesses)


def _one_sided_filter_theorem(tag, S, side):
    if side == "left":
        regular, duo = regularity.is_left_regular(S), ideals.is_left_duo(S)
        reg_name, duo_name = "leftRegular", "leftDuo"
        reg_v, duo_v = regularity.left_regular_violation, ideals.left_duo_violation
        formula = [down_mask(S, product_mask(S, S.full, 1 << y)) for y in range(S.n)]
    else:
        regular, duo = regularity.is_right_regular(S), ideals.is_right_duo(S)
        reg_name, duo_name = "rightRegular", "rightDuo"
        reg_v, duo_v = regularity.right_regular_violation, ideals.right_duo_violation
        formula = [down_mask(S, product_mask(S, 1 << y, S.full)) for y in range(S.n)]
    lhs = regular and duo
    witnesses = []
    if not regular:
        witnesses.append(_regularity_witness(reg_name, reg_v(S)))
    if not duo:
        A = duo_v(S)
        if A is not None:
            witnesses.append(_w(("side", "lhs"), ("fails", duo_name), ("ideal", Subset(S.n, A))))
    rhs, rhs_w = _formula_check(S, formula)
    witnesses.append(rhs_w)
    return _finish(tag, lhs, rhs, lhs == rhs, witnesses)


def check_theorem6(S):
    return _one_sided_filter_theorem("T6", S, "left")


def check_theorem7(S):
    return _one_sided_filter_theorem("T7", S, "right")


def check_theorem8(S, side="left"):
    if side == "left":
        lhs = regularity.is_left_regular(S)
        lhs_w = None if lhs else _regularity_witness("leftRegular", regularity.left_regular_violation(S))
        return _semiprime_theorem("T8-left", S, lhs, lhs_w, ideals.generated_left_ideal_mask, "left")
    if side == "right":
        lhs = regularity.is_right_regular(S)
        lhs_w = None if lhs else _regularity_witness("rightRegular", regularity.right_regular_violation(S))
        return _semiprime_theorem("T8-right", S, lhs, lhs_w, ideals.generated_right_ideal_mask, "right")
    raise InputError(f"side must be 'left' or 'right', got {side!r}")


def check_all(S):
    """Every check, in :data:`TAGS` order."""
    return [
        check_theorem2(S),
        check_theorem3(S),
        check_proposition5(S),
        check_theorem6(S),
        check_theorem7(S),
        check_theorem8(S, "left"),
        check_theorem8(S, "right"),
    ]
