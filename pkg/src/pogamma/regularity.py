"""Regularity predicates.

The strict forms fix the gamma used to square ``x`` and range over every such
gamma: ``x in (M Gamma (x c x) Gamma M]`` for all ``c``.  The weak forms use the
aggregate product ``(M Gamma x Gamma x Gamma M]``, which lets the squaring gamma
vary.  Each ``*_violation`` returns the first failing ``(x, c)`` (or ``(x,)`` for
weak forms) and the ``is_*`` predicates are thin wrappers over them.
"""
from __future__ import annotations

from .subsets import down_mask, product_mask


def _square(S, x, c):
    return 1 << S.mul[c][x][x]


def intra_regular_violation(S):
    M = S.full
    for x in range(S.n):
        for c in range(S.g):
            inner = product_mask(S, product_mask(S, M, _square(S, x, c)), M)
            if not down_mask(S, inner) >> x & 1:
                return x, c
    return None


def left_regular_violation(S):
    for x in range(S.n):
        for c in range(S.g):
            if not down_mask(S, product_mask(S, S.full, _square(S, x, c))) >> x & 1:
                return x, c
    return None


def right_regular_violation(S):
    for x in range(S.n):
        for c in range(S.g):
            if not down_mask(S, product_mask(S, _square(S, x, c), S.full)) >> x & 1:
                return x, c
    return None


def intra_regular_weak_violation(S):
    M = S.full
    for x in range(S.n):
        xs = 1 << x
        inner = product_mask(S, product_mask(S, product_mask(S, M, xs), xs), M)
        if not down_mask(S, inner) >> x & 1:
            return (x,)
    return None


def left_regular_weak_violation(S):
    for x in range(S.n):
        xs = 1 << x
        if not down_mask(S, product_mask(S, product_mask(S, S.full, xs), xs)) >> x & 1:
            return (x,)
    return None


def right_regular_weak_violation(S):
    for x in range(S.n):
        xs = 1 << x
        if not down_mask(S, product_mask(S, product_mask(S, xs, xs), S.full)) >> x & 1:
            return (x,)
    return None


def is_intra_regular(S):
    return intra_regular_violation(S) is None


def is_left_regular(S):
    return left_regular_violation(S) is None


def is_right_regular(S):
    return right_regular_violation(S) is None


def is_intra_regular_weak(S):
    return intra_regular_weak_violation(S) is None


def is_left_regular_weak(S):
    return left_regular_weak_violation(S) is None


def is_right_regular_weak(S):
    return right_regular_weak_violation(S) is None
