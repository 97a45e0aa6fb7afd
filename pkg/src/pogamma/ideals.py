"""Left, right and two-sided ideals; semiprime subsets; duo predicates."""
from __future__ import annotations

from .errors import CapacityError, InputError
from .subsets import Subset, _mask_of, down_mask, product_mask

KINDS = ("left", "right", "two-sided")

# Largest carrier for which every subset is enumerated.
EXHAUSTIVE_MAX_N = 16


def _left_absorbs(S, A):
    return product_mask(S, S.full, A) & ~A == 0


def _right_absorbs(S, A):
    return product_mask(S, A, S.full) & ~A == 0


def _down_closed(S, A):
    return down_mask(S, A) == A


def left_ideal_mask(S, A):
    return A != 0 and _left_absorbs(S, A) and _down_closed(S, A)


def right_ideal_mask(S, A):
    return A != 0 and _right_absorbs(S, A) and _down_closed(S, A)


def ideal_mask(S, A):
    return A != 0 and _left_absorbs(S, A) and _right_absorbs(S, A) and _down_closed(S, A)


_PREDICATES = {"left": left_ideal_mask, "right": right_ideal_mask, "two-sided": ideal_mask}


def is_left_ideal(S, A):
    return left_ideal_mask(S, _mask_of(S, A))


def is_right_ideal(S, A):
    return right_ideal_mask(S, _mask_of(S, A))


def is_ideal(S, A):
    return ideal_mask(S, _mask_of(S, A))


def semiprime_violation(S, T):
    """First ``(x, c)`` with ``x c x`` in ``T`` but ``x`` outside, else None."""
    for x in range(S.n):
        if T >> x & 1:
            continue
        for c in range(S.g):
            if T >> S.mul[c][x][x] & 1:
                return x, c
    return None


def is_semiprime(S, T):
    return semiprime_violation(S, _mask_of(S, T)) is None


def _closure(S, seed, left, right):
    X = seed
    while True:
        grown = X
        if left:
            grown |= product_mask(S, S.full, grown)
        if right:
            grown |= product_mask(S, grown, S.full)
        grown = down_mask(S, grown)
        if grown == X:
            return X
        X = grown


def _check_element(S, a):
    if not 0 <= a < S.n:
        raise InputError(f"element {a} out of range [0, {S.n})")


def generated_left_ideal_mask(S, a):
    return _closure(S, 1 << a, True, False)


def generated_right_ideal_mask(S, a):
    return _closure(S, 1 << a, False, True)


def generated_ideal_mask(S, a):
    return _closure(S, 1 << a, True, True)


def generated_left_ideal(S, a):
    """Least left ideal containing ``a``."""
    _check_element(S, a)
    return Subset(S.n, generated_left_ideal_mask(S, a))


def generated_right_ideal(S, a):
    _check_element(S, a)
    return Subset(S.n, generated_right_ideal_mask(S, a))


def generated_ideal(S, a):
    """Least two-sided ideal containing ``a``."""
    _check_element(S, a)
    return Subset(S.n, generated_ideal_mask(S, a))


def _require_exhaustive(S):
    if S.n > EXHAUSTIVE_MAX_N:
        raise CapacityError(f"cannot enumerate all subsets of a {S.n}-element carrier (limit {EXHAUSTIVE_MAX_N})")


def ideal_masks(S, kind):
    if kind not in _PREDICATES:
        raise InputError(f"unknown ideal kind {kind!r}; expected one of {', '.join(KINDS)}")
    _require_exhaustive(S)
    pred = _PREDICATES[kind]
    return [A for A in range(1, S.full + 1) if pred(S, A)]


def enumerate_ideals(S, kind):
    """All ideals of the given kind, by ascending mask."""
    return [Subset(S.n, A) for A in ideal_masks(S, kind)]


def left_duo_violation(S):
    """First left ideal that is not right-absorbing, or None."""
    for A in ideal_masks(S, "left"):
        if not _right_absorbs(S, A):
            return A
    return None


def right_duo_violation(S):
    for A in ideal_masks(S, "right"):
        if not _left_absorbs(S, A):
            return A
    return None


def is_left_duo(S):
    return left_duo_violation(S) is None


def is_right_duo(S):
    return right_duo_violation(S) is None
