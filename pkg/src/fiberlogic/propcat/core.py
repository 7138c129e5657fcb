"""Fibers and prop-categories.

A prop-category pairs a base category with a fiber ``P(c)`` per object, a
contravariant action ``act(f, r) = P(f)(r)``, equality elements ``eq(c)`` in
``P(c x c)`` and quantifier maps ``quant(name, b, c, r)`` from ``P(b x c)`` to
``P(b)``.
"""

from __future__ import annotations

from collections.abc import Sequence
from typing import Callable

from ..syntax import TENSOR, UNIT, Language


class PropCatError(ValueError):
    pass


class Fiber:
    """One fiber: elements (or a probe set if symbolic), order and operations."""

    def __init__(self, elements: Sequence | None, leq: Callable, ops: dict,
                 probe: Sequence | None = None, contains: Callable | None = None):
        self.elements = elements
        self.symbolic = elements is None
        self.probe = elements if probe is None else probe
        if self.probe is None:
            raise PropCatError("symbolic fibers need a probe set")
        self.leq = leq
        self.ops = ops
        self._contains = contains

    def contains(self, r) -> bool:
        if self._contains is not None:
            return self._contains(r)
        return r in set(self.elements)

    def op(self, name, *args):
        return self.ops[name](*args)


class PropCategory:
    base = None
    language: Language = None

    def __init__(self):
        self._fibers = {}

    def fiber(self, c) -> Fiber:
        fb = self._fibers.get(c)
        if fb is None:
            fb = self.make_fiber(c)
            self._fibers[c] = fb
        return fb

    # subclasses implement: make_fiber, act, eq, quant, format_elem
    def leq(self, c, a, b) -> bool:
        return self.fiber(c).leq(a, b)

    def op(self, c, name, *args):
        return self.fiber(c).op(name, *args)

    def unit(self, c):
        return self.op(c, UNIT)

    def tensor(self, c, a, b):
        return self.op(c, TENSOR, a, b)

    def format_elem(self, c, r) -> str:
        return repr(r)

    def describe(self) -> str:
        return type(self).__name__
