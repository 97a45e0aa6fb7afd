"""Subsemigroups, filters and principal filters."""
from __future__ import annotations

from .errors import CapacityError, InputError
from .ideals import EXHAUSTIVE_MAX_N
from .subsets import Subset, _mask_of, product_mask, up_mask


def subsemigroup_mask(S, A):
    return A != 0 and product_mask(S, A, A) & ~A == 0


def _divisors_mask(S, F):
    """Every ``a`` and ``b`` (over all of M) with some ``a c b`` in ``F``."""
    out = 0
    for t in S.mul:
        for a, row in enumerate(t):
            for b, v in enumerate(row):
                if F >> v & 1:
                    out |= (1 << a) | (1 << b)
    return out


def filter_mask(S, F):
    return (
        subsemigroup_mask(S, F)
        and _divisors_mask(S, F) & ~F == 0
        and up_mask(S, F) == F
    )


def is_subsemigroup(S, A):
    return subsemigroup_mask(S, _mask_of(S, A))


def is_filter(S, F):
    return filter_mask(S, _mask_of(S, F))


def principal_filter_mask(S, x):
    F = 1 << x
    while True:
        grown = F | product_mask(S, F, F)
        grown |= _divisors_mask(S, grown)
        grown = up_mask(S, grown)
        if grown == F:
            return F
        F = grown


def principal_filter(S, x):
    """Least filter containing ``x``, computed as a closure fixpoint."""
    if not 0 <= x < S.n:
        raise InputError(f"element {x} out of range [0, {S.n})")
    return Subset(S.n, principal_filter_mask(S, x))


def filter_masks(S):
    if S.n > EXHAUSTIVE_MAX_N:
        raise CapacityError(f"cannot enumerate all subsets of a {S.n}-element carrier (limit {EXHAUSTIVE_MAX_N})")
    return [F for F in range(1, S.full + 1) if filter_mask(S, F)]


def enumerate_filters(S):
    return [Subset(S.n, F) for F in filter_masks(S)]


def principal_filter_oracle_mask(S, x):
    out = S.full
    for F in filter_masks(S):
        if F >> x & 1:
            out &= F
    return out


def principal_filter_oracle(S, x):
    """Intersection of every filter containing ``x``, by exhaustive enumeration."""
    if not 0 <= x < S.n:
        raise InputError(f"element {x} out of range [0, {S.n})")
    return Subset(S.n, principal_filter_oracle_mask(S, x))
