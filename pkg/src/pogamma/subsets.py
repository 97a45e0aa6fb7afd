"""Subsets of the carrier and the two primitive operators on them.

Subsets are bitmasks over ``range(n)`` wrapped in :class:`Subset`.  The
``*_mask`` kernels work on raw ints and are what the rest of the package uses
internally; the public functions take and return :class:`Subset` values.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError


def bits(mask):
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


@dataclass(frozen=True, order=True)
class Subset:
    n: int
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.n:
            raise InputError(f"mask {self.mask:#b} does not fit a ground set of size {self.n}")

    @classmethod
    def of(cls, n, elements=()):
        mask = 0
        for e in elements:
            if not 0 <= e < n:
                raise InputError(f"element {e} out of range [0, {n})")
            mask |= 1 << e
        return cls(n, mask)

    def _check(self, other):
        if not isinstance(other, Subset):
            raise InputError(f"expected a Subset, got {type(other).__name__}")
        if other.n != self.n:
            raise InputError(f"ground-set mismatch: {self.n} vs {other.n}")

    def __iter__(self):
        return iter(bits(self.mask))

    def __len__(self):
        return bin(self.mask).count("1")

    def __bool__(self):
        return self.mask != 0

    def __contains__(self, x):
        return 0 <= x < self.n and bool(self.mask >> x & 1)

    def issubset(self, other):
        self._check(other)
        return self.mask & ~other.mask == 0

    def __or__(self, other):
        self._check(other)
        return Subset(self.n, self.mask | other.mask)

    def __and__(self, other):
        self._check(other)
        return Subset(self.n, self.mask & other.mask)

    def __str__(self):
        return "{" + ", ".join(map(str, self)) + "}"


def product_mask(S, A, B):
    out = 0
    if not A or not B:
        return out
    bs = bits(B)
    for a in bits(A):
        for t in S.mul:
            row = t[a]
            for b in bs:
                out |= 1 << row[b]
    return out


def product_via_mask(S, A, c, B):
    out = 0
    t = S.mul[c]
    bs = bits(B)
    for a in bits(A):
        row = t[a]
        for b in bs:
            out |= 1 << row[b]
    return out


def down_mask(S, H):
    out = 0
    for a in bits(H):
        out |= S.down[a]
    return out


def up_mask(S, H):
    out = 0
    for a in bits(H):
        out |= S.up[a]
    return out


def _mask_of(S, A):
    if not isinstance(A, Subset):
        raise InputError(f"expected a Subset, got {type(A).__name__}")
    if A.n != S.n:
        raise InputError(f"ground-set mismatch: structure has {S.n} elements, subset {A.n}")
    return A.mask


def gamma_product(S, A, B):
    """``{a c b : a in A, c in Gamma, b in B}``."""
    return Subset(S.n, product_mask(S, _mask_of(S, A), _mask_of(S, B)))


def gamma_product_via(S, A, c, B):
    """Product restricted to the single gamma ``c``."""
    if not 0 <= c < S.g:
        raise InputError(f"gamma {c} out of range [0, {S.g})")
    return Subset(S.n, product_via_mask(S, _mask_of(S, A), c, _mask_of(S, B)))


def down_closure(S, H):
    """Every element lying below some member of ``H``."""
    return Subset(S.n, down_mask(S, _mask_of(S, H)))


def up_closure(S, H):
    return Subset(S.n, up_mask(S, _mask_of(S, H)))
