"""Named structure predicates and boolean expressions over them.

Expressions use ``&``, ``|``, ``!`` and parentheses, e.g.
``leftRegular & !leftDuo``.  ``!`` binds tighter than ``&``, which binds
tighter than ``|``.
"""
from __future__ import annotations

import re

from . import ideals, regularity
from .errors import InputError

PREDICATES = {
    "intraRegular": lambda S: regularity.is_intra_regular(S),
    "intraRegularWeak": lambda S: regularity.is_intra_regular_weak(S),
    "leftRegular": lambda S: regularity.is_left_regular(S),
    "rightRegular": lambda S: regularity.is_right_regular(S),
    "leftRegularWeak": lambda S: regularity.is_left_regular_weak(S),
    "rightRegularWeak": lambda S: regularity.is_right_regular_weak(S),
    "leftDuo": lambda S: ideals.is_left_duo(S),
    "rightDuo": lambda S: ideals.is_right_duo(S),
}

PREDICATE_NAMES = tuple(PREDICATES)

_TOKEN = re.compile(r"\s*(?:([A-Za-z]\w*)|(.))")


def _tokenize(text):
    tokens = []
    for name, sym in _TOKEN.findall(text):
        if name:
            tokens.append(name)
        elif sym.strip():
            if sym not in "&|!()":
                raise InputError(f"unexpected character {sym!r} in predicate expression")
            tokens.append(sym)
    return tokens


class Expr:
    """A parsed predicate expression; call it on a structure to evaluate."""

    def __init__(self, text):
        self.text = text
        self._tokens = _tokenize(text)
        self._pos = 0
        if not self._tokens:
            raise InputError("empty predicate expression")
        self._tree = self._or()
        if self._pos != len(self._tokens):
            raise InputError(f"trailing tokens in predicate expression: {' '.join(self._tokens[self._pos:])}")
        del self._tokens

    def _peek(self):
        return self._tokens[self._pos] if self._pos < len(self._tokens) else None

    def _take(self):
        tok = self._peek()
        if tok is None:
            raise InputError(f"unexpected end of predicate expression {self.text!r}")
        self._pos += 1
        return tok

    def _or(self):
        node = self._and()
        while self._peek() == "|":
            self._take()
            node = ("or", node, self._and())
        return node

    def _and(self):
        node = self._not()
        while self._peek() == "&":
            self._take()
            node = ("and", node, self._not())
        return node

    def _not(self):
        if self._peek() == "!":
            self._take()
            return ("not", self._not())
        return self._atom()

    def _atom(self):
        tok = self._take()
        if tok == "(":
            node = self._or()
            if self._take() != ")":
                raise InputError(f"missing ')' in predicate expression {self.text!r}")
            return node
        if tok == "true":
            return ("const", True)
        if tok == "false":
            return ("const", False)
        if tok not in PREDICATES:
            raise InputError(f"unknown predicate {tok!r}; expected one of {', '.join(PREDICATE_NAMES)}")
        return ("pred", tok)

    def __call__(self, S):
        cache = {}

        def ev(node):
            kind = node[0]
            if kind == "pred":
                if node[1] not in cache:
                    cache[node[1]] = PREDICATES[node[1]](S)
                return cache[node[1]]
            if kind == "not":
                return not ev(node[1])
            if kind == "and":
                return ev(node[1]) and ev(node[2])
            if kind == "or":
                return ev(node[1]) or ev(node[2])
            return node[1]

        return ev(self._tree)

    def __repr__(self):
        return f"Expr({self.text!r})"


def evaluate_all(S):
    """Every named predicate, in :data:`PREDICATE_NAMES` order."""
    return {name: PREDICATES[name](S) for name in PREDICATE_NAMES}
