"""Componentwise products of prop-categories."""

from __future__ import annotations

from ..syntax import Language
from .category import ProductCategory
from .core import Fiber, PropCategory, PropCatError
from .seqs import LazyProduct


class ProductPropCategory(PropCategory):
    """Objects, morphisms, fiber elements are tuples with one entry per factor.

    With no factors this is the terminal prop-category: one object, one
    morphism, and a one-element fiber. An explicit ``language`` may be any
    common sublanguage of the factors.
    """

    def __init__(self, factors, language: Language | None = None):
        super().__init__()
        self.factors = tuple(factors)
        langs = {pc.language for pc in self.factors}
        if language is None:
            if len(langs) > 1:
                raise PropCatError("factors disagree on the logic language")
            language = langs.pop() if langs else Language()
        else:
            for pc in self.factors:
                if not (set(language.connectives) <= set(pc.language.connectives)
                        and set(language.quantifiers) <= set(pc.language.quantifiers)):
                    raise PropCatError(f"{pc.describe()} does not support the requested language")
        self.language = language
        self.base = ProductCategory([pc.base for pc in self.factors])

    def make_fiber(self, c):
        fibers = [pc.fiber(x) for pc, x in zip(self.factors, c)]
        symbolic = any(f.symbolic for f in fibers)
        elements = None if symbolic else LazyProduct([f.elements for f in fibers])
        probe = LazyProduct([f.probe for f in fibers])
        ops = {}
        for name, _ in self.language.connectives:
            ops[name] = (lambda name: lambda *args: tuple(
                f.op(name, *(a[i] for a in args)) for i, f in enumerate(fibers)))(name)

        def leq(r, s):
            return all(f.leq(x, y) for f, x, y in zip(fibers, r, s))

        def contains(r):
            return (isinstance(r, tuple) and len(r) == len(fibers)
                    and all(f.contains(x) for f, x in zip(fibers, r)))

        return Fiber(elements, leq, ops, probe=probe, contains=contains)

    def act(self, f, r):
        return tuple(pc.act(g, x) for pc, g, x in zip(self.factors, f, r))

    def eq(self, c):
        return tuple(pc.eq(x) for pc, x in zip(self.factors, c))

    def quant(self, name, b, c, r):
        return tuple(pc.quant(name, x, y, z) for pc, x, y, z in zip(self.factors, b, c, r))

    def format_elem(self, c, r):
        return "<" + ", ".join(pc.format_elem(x, y) for pc, x, y in zip(self.factors, c, r)) + ">"

    def describe(self):
        return "product(" + ", ".join(pc.describe() for pc in self.factors) + ")"
