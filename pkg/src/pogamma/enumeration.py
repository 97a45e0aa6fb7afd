"""Exhaustive enumeration of small ordered Gamma-semigroups.

Structures are visited in canonical order: carrier size, then number of gammas,
then the table code (cells in ``(gamma, row, column)`` order read as a base-n
number), then the order mask.  Table cells are filled by backtracking in that
same order and a prefix is dropped as soon as a fully determined associativity
triple fails.

Work is split into contiguous ranges of table prefixes.  Each range is
processed on its own and results are merged in range order, so the output is
the same for any number of workers.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations

import numpy as np

from .errors import CapacityError, InputError
from .predicates import Expr
from .structure import GammaSemigroup, compatibility_violations
from .theorems import check_all

CAPACITY = 10**8
ORDER_MODES = ("discrete", "all")


@dataclass(frozen=True)
class EnumerationSpec:
    max_m: int
    max_gamma: int
    order: str = "all"
    where: str | None = None
    dedup: bool = False

    def __post_init__(self):
        if self.max_m < 1 or self.max_gamma < 1:
            raise InputError("max_m and max_gamma must be at least 1")
        if self.order not in ORDER_MODES:
            raise InputError(f"order must be one of {ORDER_MODES}, got {self.order!r}")
        if self.where is not None:
            Expr(self.where)


@dataclass
class Stats:
    """``candidates``: associative tables paired with an allowed order.
    ``valid``: candidates that are order-compatible.  ``hits``: valid
    structures kept after dedup that satisfy the predicate."""

    candidates: int = 0
    valid: int = 0
    hits: int = 0

    def __add__(self, other):
        return Stats(self.candidates + other.candidates, self.valid + other.valid, self.hits + other.hits)


@dataclass
class WitnessReport:
    outcome: str
    structure: GammaSemigroup | None
    stats: Stats = field(default_factory=Stats)


@dataclass
class SweepSummary:
    structures: int
    reports: int
    failures: int
    first_failure: tuple | None
    stats: Stats

    @property
    def clean(self):
        return self.failures == 0


def _off_diagonal(n):
    return [(i, j) for i in range(n) for j in range(n) if i != j]


@lru_cache(maxsize=None)
def poset_masks(n):
    """Order masks of every partial order on ``range(n)``, ascending.

    Filters all reflexive relations for antisymmetry and transitivity.
    """
    diag = sum(1 << (i * n + i) for i in range(n))
    off = _off_diagonal(n)
    found = []
    for choice in range(1 << len(off)):
        mask = diag
        for k, (i, j) in enumerate(off):
            if choice >> k & 1:
                mask |= 1 << (i * n + j)
        if _is_poset(mask, n):
            found.append(mask)
    return tuple(sorted(found))


def _is_poset(mask, n):
    def le(i, j):
        return mask >> (i * n + j) & 1

    for i in range(n):
        for j in range(n):
            if i != j and le(i, j) and le(j, i):
                return False
            if not le(i, j):
                continue
            for k in range(n):
                if le(j, k) and not le(i, k):
                    return False
    return True


def _orders(n, mode):
    if mode == "discrete":
        return (sum(1 << (i * n + i) for i in range(n)),)
    return poset_masks(n)


def raw_candidate_count(spec):
    """Size of the unpruned search space; raises CapacityError above :data:`CAPACITY`."""
    total = 0
    for n in range(1, spec.max_m + 1):
        for g in range(1, spec.max_gamma + 1):
            tables = n ** (g * n * n)
            if tables > CAPACITY:
                raise CapacityError(f"{tables} tables at |M|={n}, |Gamma|={g} exceed the ceiling of {CAPACITY}")
            total += tables * len(_orders(n, spec.order))
            if total > CAPACITY:
                raise CapacityError(f"{total} raw candidates exceed the ceiling of {CAPACITY}")
    return total


def _consistent(cells, n, g):
    """False if some fully determined associativity triple fails."""
    nn = n * n
    for c in range(g):
        for a in range(n):
            for b in range(n):
                ab = cells[c * nn + a * n + b]
                if ab < 0:
                    continue
                for d in range(g):
                    for e in range(n):
                        lhs = cells[d * nn + ab * n + e]
                        if lhs < 0:
                            continue
                        be = cells[d * nn + b * n + e]
                        if be < 0:
                            continue
                        rhs = cells[c * nn + a * n + be]
                        if rhs >= 0 and lhs != rhs:
                            return False
    return True


def _tables(n, g, prefix_len, lo, hi):
    """Associative tables whose first ``prefix_len`` cells encode a value in ``[lo, hi)``."""
    size = g * n * n
    for code in range(lo, hi):
        digits = []
        for _ in range(prefix_len):
            code, d = divmod(code, n)
            digits.append(d)
        cells = digits[::-1] + [-1] * (size - prefix_len)
        if not _consistent(cells, n, g):
            continue
        yield from _fill(cells, prefix_len, n, g)


def _fill(cells, k, n, g):
    if k == len(cells):
        yield tuple(cells)
        return
    for v in range(n):
        cells[k] = v
        if _consistent(cells, n, g):
            yield from _fill(cells, k + 1, n, g)
    cells[k] = -1


def _leq_matrix(n, mask):
    return np.array([[bool(mask >> (i * n + j) & 1) for j in range(n)] for i in range(n)])


def _structure(n, g, cells, order_mask):
    return GammaSemigroup(np.array(cells, dtype=np.int64).reshape(g, n, n), _leq_matrix(n, order_mask))


def _is_canonical(cells, n, g, order_mask):
    """True if no simultaneous relabeling of elements and gammas gives a smaller encoding."""
    own = (cells, order_mask)
    nn = n * n
    pairs = [(i, j) for i in range(n) for j in range(n) if order_mask >> (i * n + j) & 1]
    for sigma in permutations(range(n)):
        for tau in permutations(range(g)):
            new = [0] * len(cells)
            for c in range(g):
                for a in range(n):
                    for b in range(n):
                        new[tau[c] * nn + sigma[a] * n + sigma[b]] = sigma[cells[c * nn + a * n + b]]
            mask = sum(1 << (sigma[i] * n + sigma[j]) for i, j in pairs)
            if (tuple(new), mask) < own:
                return False
    return True


def _candidates(task):
    """Yield ``(structure, cells, order_mask, is_valid, is_hit)`` for one range."""
    n, g, prefix_len, lo, hi, order, where, dedup = task
    expr = Expr(where) if where else None
    orders = _orders(n, order)
    for cells in _tables(n, g, prefix_len, lo, hi):
        table = np.array(cells, dtype=np.int64).reshape(g, n, n)
        for mask in orders:
            leq = _leq_matrix(n, mask)
            right, left = compatibility_violations(table, leq)
            if right is not None or left is not None:
                yield None, cells, mask, False, False
                continue
            if dedup and not _is_canonical(cells, n, g, mask):
                yield None, cells, mask, True, False
                continue
            S = GammaSemigroup(table, leq)
            yield S, cells, mask, True, expr is None or expr(S)


def _chunk_list(task):
    stats = Stats()
    found = []
    for S, cells, mask, valid, hit in _candidates(task):
        stats.candidates += 1
        stats.valid += valid
        if hit:
            stats.hits += 1
            found.append((task[0], task[1], cells, mask))
    return found, stats


def _chunk_search(task):
    stats = Stats()
    witness = None
    upto = None
    for S, cells, mask, valid, hit in _candidates(task):
        stats.candidates += 1
        stats.valid += valid
        if hit:
            stats.hits += 1
            if witness is None:
                witness = (task[0], task[1], cells, mask)
                upto = Stats(stats.candidates, stats.valid, stats.hits)
    return witness, upto, stats


def _chunk_sweep(task):
    stats = Stats()
    reports = failures = 0
    first = None
    for S, cells, mask, valid, hit in _candidates(task):
        stats.candidates += 1
        stats.valid += valid
        if not hit:
            continue
        stats.hits += 1
        for report in check_all(S):
            reports += 1
            if not report.holds:
                failures += 1
                if first is None:
                    first = (task[0], task[1], cells, mask)
    return reports, failures, first, stats


def plan(spec, workers=1):
    """Contiguous prefix ranges covering the search space, in canonical order."""
    raw_candidate_count(spec)
    target = 1 if workers <= 1 else 4 * workers
    tasks = []
    for n in range(1, spec.max_m + 1):
        for g in range(1, spec.max_gamma + 1):
            size = g * n * n
            prefix_len = 0
            if n > 1:
                while prefix_len < size and n**prefix_len < target:
                    prefix_len += 1
            total = n**prefix_len
            parts = min(total, target)
            bounds = [total * i // parts for i in range(parts + 1)]
            for lo, hi in zip(bounds, bounds[1:]):
                tasks.append((n, g, prefix_len, lo, hi, spec.order, spec.where, spec.dedup))
    return tasks


def _map(fn, tasks, workers):
    if workers <= 1:
        return map(fn, tasks)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, tasks))


def enumerate_with_stats(spec, workers=1):
    structures = []
    total = Stats()
    for found, stats in _map(_chunk_list, plan(spec, workers), workers):
        structures.extend(_structure(*item) for item in found)
        total = total + stats
    return structures, total


def enumerate_structures(spec, workers=1):
    """Every valid structure within the bounds that satisfies ``spec.where``, in canonical order."""
    if workers <= 1:
        for task in plan(spec):
            for S, _, _, _, hit in _candidates(task):
                if hit:
                    yield S
        return
    yield from enumerate_with_stats(spec, workers)[0]


def search_witness(spec, workers=1):
    """First structure in canonical order satisfying ``spec.where``.

    Statistics count everything examined up to and including the witness.
    """
    total = Stats()
    for witness, upto, stats in _map(_chunk_search, plan(spec, workers), workers):
        if witness is not None:
            return WitnessReport("witness-found", _structure(*witness), total + upto)
        total = total + stats
    return WitnessReport("none-in-bounds", None, total)


def sweep_theorems(spec, workers=1):
    """Run every theorem check on every enumerated structure."""
    total = Stats()
    reports = failures = 0
    first = None
    for r, f, fst, stats in _map(_chunk_sweep, plan(spec, workers), workers):
        reports += r
        failures += f
        total = total + stats
        if first is None and fst is not None:
            first = fst
    first_failure = None
    if first is not None:
        S = _structure(*first)
        first_failure = (S, check_all(S))
    return SweepSummary(total.hits, reports, failures, first_failure, total)
