"""Finite ordered Gamma-semigroups: representation, validation and fixtures.

A structure on ``M = {0, ..., n-1}`` with ``Gamma = {0, ..., g-1}`` is stored as
an integer array ``table`` of shape ``(g, n, n)`` with ``table[c, a, b]`` the
product ``a c b`` and a boolean ``(n, n)`` matrix ``leq``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InputError, InvalidStructure
from .subsets import Subset

AXIOMS = (
    "associativity",
    "reflexivity",
    "antisymmetry",
    "transitivity",
    "compatibility-right",
    "compatibility-left",
)


@dataclass(frozen=True)
class ValidationReport:
    """Axiom-by-axiom verdict.

    ``failures`` holds ``(axiom, witness)`` pairs in :data:`AXIOMS` order, one per
    violated axiom, each witness being the lexicographically first violation.
    Witness layouts: associativity ``(a, c, b, d, e)`` meaning
    ``(a c b) d e != a c (b d e)``; reflexivity ``(i,)``; antisymmetry ``(i, j)``;
    transitivity ``(i, j, k)``; compatibility ``(a, b, c, x)`` meaning ``a <= b``
    but ``a c x`` (right) or ``x c a`` (left) is not below the matching product.
    """

    valid: bool
    failures: tuple = ()

    def failed(self, axiom):
        return any(tag == axiom for tag, _ in self.failures)

    def witness(self, axiom):
        for tag, w in self.failures:
            if tag == axiom:
                return w
        return None


@dataclass(frozen=True)
class Candidate:
    """Raw tables plus an order matrix, not yet known to satisfy the axioms."""

    table: np.ndarray
    leq: np.ndarray
    n: int = field(init=False)
    g: int = field(init=False)

    def __post_init__(self):
        table = np.asarray(self.table)
        leq = np.asarray(self.leq)
        if table.ndim != 3 or table.shape[1] != table.shape[2]:
            raise InputError(f"table must have shape (g, n, n), got {table.shape}")
        g, n, _ = table.shape
        if n < 1 or g < 1:
            raise InputError("need at least one element and one gamma")
        if not np.issubdtype(table.dtype, np.integer):
            raise InputError("table entries must be integers")
        if table.min() < 0 or table.max() >= n:
            bad = tuple(int(i) for i in np.argwhere((table < 0) | (table >= n))[0])
            raise InputError(f"table entry at {bad} out of range [0, {n})")
        if leq.shape != (n, n):
            raise InputError(f"order matrix must have shape ({n}, {n}), got {leq.shape}")
        object.__setattr__(self, "table", table.astype(np.int64))
        object.__setattr__(self, "leq", leq.astype(bool))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "g", g)

    @classmethod
    def from_pairs(cls, table, pairs=()):
        """Build from tables and ``i <= j`` pairs; reflexive pairs are implicit."""
        table = np.asarray(table)
        if table.ndim == 2:
            table = table[None]
        if table.ndim != 3:
            raise InputError(f"table must have shape (g, n, n), got {table.shape}")
        n = table.shape[-1]
        leq = np.eye(n, dtype=bool)
        for pair in pairs:
            i, j = pair
            if not (0 <= i < n and 0 <= j < n):
                raise InputError(f"order pair {(i, j)} out of range [0, {n})")
            leq[i, j] = True
        return cls(table, leq)


def _first(mask):
    hits = np.argwhere(mask)
    if len(hits) == 0:
        return None
    return tuple(int(i) for i in hits[0])


def associativity_violation(table):
    """First ``(a, c, b, d, e)`` with ``(a c b) d e != a c (b d e)``, or None."""
    g, n, _ = table.shape
    by_elem = table.transpose(1, 0, 2)  # [a, c, b] -> a c b
    gam = np.arange(g)
    elem = np.arange(n)
    lhs = table[gam[None, None, None, :, None], by_elem[:, :, :, None, None], elem[None, None, None, None, :]]
    rhs = table[gam[None, :, None, None, None], elem[:, None, None, None, None], by_elem[None, None, :, :, :]]
    return _first(lhs != rhs)


def compatibility_violations(table, leq):
    """First right- and left-compatibility violations as ``(a, b, c, x)`` or None."""
    g, n, _ = table.shape
    # right[a, b, c, x]: a <= b but not (a c x <= b c x)
    ax = table.transpose(1, 0, 2)  # [a, c, x]
    right = leq[:, :, None, None] & ~leq[ax[:, None, :, :], ax[None, :, :, :]]
    xa = table.transpose(2, 0, 1)  # [a, c, x] -> x c a
    left = leq[:, :, None, None] & ~leq[xa[:, None, :, :], xa[None, :, :, :]]
    return _first(right), _first(left)


def order_violations(leq):
    n = leq.shape[0]
    refl = _first(~np.diag(leq))
    upper = np.triu(np.ones((n, n), dtype=bool), 1)
    anti = _first(upper & leq & leq.T)
    trans = _first(leq[:, :, None] & leq[None, :, :] & ~leq[:, None, :])
    return refl, anti, trans


def validate(candidate):
    """Check every axiom of an ordered Gamma-semigroup and report all failures."""
    if not isinstance(candidate, Candidate):
        raise InputError("validate expects a Candidate")
    found = {}
    found["associativity"] = associativity_violation(candidate.table)
    found["reflexivity"], found["antisymmetry"], found["transitivity"] = order_violations(candidate.leq)
    found["compatibility-right"], found["compatibility-left"] = compatibility_violations(
        candidate.table, candidate.leq
    )
    failures = tuple((tag, found[tag]) for tag in AXIOMS if found[tag] is not None)
    return ValidationReport(valid=not failures, failures=failures)


class GammaSemigroup:
    """An immutable, validated finite ordered Gamma-semigroup.

    Build instances with :func:`build` (or :func:`from_tables`); the constructor
    itself does not validate.
    """

    __slots__ = ("n", "g", "table", "leq", "mul", "down", "up", "full", "_key")

    def __init__(self, table, leq):
        table = np.array(table, dtype=np.int64)
        leq = np.array(leq, dtype=bool)
        table.flags.writeable = False
        leq.flags.writeable = False
        self.g, self.n, _ = table.shape
        self.table = table
        self.leq = leq
        self.mul = tuple(tuple(tuple(int(v) for v in row) for row in t) for t in table)
        n = self.n
        self.down = tuple(sum(1 << t for t in range(n) if leq[t, a]) for a in range(n))
        self.up = tuple(sum(1 << t for t in range(n) if leq[a, t]) for a in range(n))
        self.full = (1 << n) - 1
        self._key = (self.mul, tuple(map(tuple, leq.tolist())))

    def __eq__(self, other):
        if not isinstance(other, GammaSemigroup):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"GammaSemigroup(n={self.n}, g={self.g}, code={self.table_code()}, order={self.order_mask()})"

    def op(self, a, c, b):
        return self.mul[c][a][b]

    def subset(self, elements=()):
        return Subset.of(self.n, elements)

    @property
    def whole(self):
        return Subset(self.n, self.full)

    @property
    def empty(self):
        return Subset(self.n, 0)

    def order_pairs(self):
        """Non-reflexive ``(i, j)`` pairs with ``i <= j``, sorted."""
        return [(i, j) for i in range(self.n) for j in range(self.n) if i != j and self.leq[i, j]]

    def is_discrete(self):
        return not self.order_pairs()

    def table_code(self):
        """Base-n integer of the cells in ``(gamma, row, column)`` order, first cell most significant."""
        code = 0
        for v in self.table.ravel():
            code = code * self.n + int(v)
        return code

    def order_mask(self):
        """Bit ``i*n + j`` is set iff ``i <= j``."""
        return sum(1 << (i * self.n + j) for i, j in zip(*np.nonzero(self.leq)))

    def encoding(self):
        """Sort key of the canonical enumeration order."""
        return (self.n, self.g, self.table_code(), self.order_mask())

    def opposite(self):
        """The structure with reversed products ``a c b := b c a`` and the same order."""
        return GammaSemigroup(self.table.transpose(0, 2, 1), self.leq)

    def relabel(self, elem_perm, gamma_perm=None):
        """Image under renaming element ``a`` to ``elem_perm[a]`` and gamma ``c`` to ``gamma_perm[c]``."""
        sigma = np.asarray(elem_perm)
        tau = np.arange(self.g) if gamma_perm is None else np.asarray(gamma_perm)
        table = np.empty_like(self.table)
        table[np.ix_(tau, sigma, sigma)] = sigma[self.table]
        leq = np.empty_like(self.leq)
        leq[np.ix_(sigma, sigma)] = self.leq
        return GammaSemigroup(table, leq)


def build(candidate):
    """Validate and construct; raises :class:`InvalidStructure` on any axiom failure."""
    report = validate(candidate)
    if not report.valid:
        raise InvalidStructure(report)
    return GammaSemigroup(candidate.table, candidate.leq)


def from_tables(table, pairs=()):
    return build(Candidate.from_pairs(table, pairs))


def _const_table(n, f):
    return [[[f(a, b) for b in range(n)] for a in range(n)]]


_FIXTURES = {
    "S1": lambda: from_tables(_const_table(1, lambda a, b: 0)),
    "LZ2": lambda: from_tables(_const_table(2, lambda a, b: a)),
    "RZ2": lambda: from_tables(_const_table(2, lambda a, b: b)),
    "N2": lambda: from_tables(_const_table(2, lambda a, b: 0), [(0, 1)]),
}

FIXTURE_NAMES = tuple(_FIXTURES)


def fixture(name):
    """Bundled structures: S1 trivial, LZ2 left-zero, RZ2 right-zero, N2 ordered null (0 <= 1)."""
    try:
        return _FIXTURES[name]()
    except KeyError:
        raise InputError(f"unknown fixture {name!r}; expected one of {', '.join(FIXTURE_NAMES)}") from None
