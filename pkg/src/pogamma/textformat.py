"""Line-oriented text format for structures.

::

    gsemigroup v1
    M 2
    G 1
    table 0
    0 1
    0 1
    order
    end

Row ``a`` of ``table c`` lists ``a c 0, a c 1, ...``.  Each line under ``order``
is a pair ``i j`` meaning ``i <= j``; reflexive pairs are implicit and
transitive pairs must be written out.  ``#`` starts a comment.
"""
from __future__ import annotations

import numpy as np

from .errors import ParseError
from .structure import Candidate

HEADER = "gsemigroup v1"


def _lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _int(token, lineno):
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", lineno) from None


def _index(token, bound, what, lineno):
    v = _int(token, lineno)
    if not 0 <= v < bound:
        raise ParseError(f"{what} {v} out of range [0, {bound})", lineno)
    return v


def parse(text):
    """Parse a document into a :class:`Candidate` (not yet validated)."""
    lines = list(_lines(text))
    if not lines or " ".join(lines[0][1]) != HEADER:
        raise ParseError(f"expected header {HEADER!r}", lines[0][0] if lines else 1)
    n = g = None
    tables = {}
    pairs = None
    ended = False
    pos = 1
    while pos < len(lines):
        lineno, tokens = lines[pos]
        pos += 1
        key = tokens[0]
        if ended:
            raise ParseError("content after 'end'", lineno)
        if key in ("M", "G"):
            if len(tokens) != 2:
                raise ParseError(f"expected '{key} <count>'", lineno)
            value = _int(tokens[1], lineno)
            if value < 1:
                raise ParseError(f"{key} must be at least 1", lineno)
            if key == "M":
                if n is not None:
                    raise ParseError("duplicate section 'M'", lineno)
                n = value
            else:
                if g is not None:
                    raise ParseError("duplicate section 'G'", lineno)
                g = value
        elif key == "table":
            if n is None or g is None:
                raise ParseError("'table' before 'M' and 'G'", lineno)
            if len(tokens) != 2:
                raise ParseError("expected 'table <gamma>'", lineno)
            c = _index(tokens[1], g, "gamma", lineno)
            if c in tables:
                raise ParseError(f"duplicate section 'table {c}'", lineno)
            rows = []
            for _ in range(n):
                if pos >= len(lines):
                    raise ParseError(f"table {c} has fewer than {n} rows", lineno)
                row_no, row = lines[pos]
                pos += 1
                if len(row) != n:
                    raise ParseError(f"expected {n} entries, got {len(row)}", row_no)
                rows.append([_index(t, n, "entry", row_no) for t in row])
            tables[c] = rows
        elif key == "order":
            if n is None:
                raise ParseError("'order' before 'M'", lineno)
            if pairs is not None:
                raise ParseError("duplicate section 'order'", lineno)
            if len(tokens) != 1:
                raise ParseError("unexpected tokens after 'order'", lineno)
            pairs = []
            while pos < len(lines) and lines[pos][1][0] != "end":
                pair_no, pair = lines[pos]
                pos += 1
                if len(pair) != 2:
                    raise ParseError("expected an order pair 'i j'", pair_no)
                pairs.append((_index(pair[0], n, "element", pair_no), _index(pair[1], n, "element", pair_no)))
        elif key == "end":
            if len(tokens) != 1:
                raise ParseError("unexpected tokens after 'end'", lineno)
            ended = True
        else:
            raise ParseError(f"unknown section {key!r}", lineno)
    last = lines[-1][0]
    if n is None or g is None:
        raise ParseError("missing 'M' or 'G' section", last)
    missing = [c for c in range(g) if c not in tables]
    if missing:
        raise ParseError(f"missing table {missing[0]}", last)
    if not ended:
        raise ParseError("missing 'end'", last)
    table = np.array([tables[c] for c in range(g)], dtype=np.int64)
    return Candidate.from_pairs(table, pairs or ())


def serialize(S):
    """Canonical document for a structure; ``parse`` inverts it exactly."""
    out = [HEADER, f"M {S.n}", f"G {S.g}"]
    for c in range(S.g):
        out.append(f"table {c}")
        out.extend(" ".join(str(v) for v in row) for row in S.mul[c])
    out.append("order")
    out.extend(f"{i} {j}" for i, j in S.order_pairs())
    out.append("end")
    return "\n".join(out) + "\n"
