"""Finite categories with designated finite products.

Three concrete kinds share one duck-typed interface:

* ``TableCategory``: everything given by explicit tables.
* ``SetCategory``: objects are product words over finite atom sets, morphisms
  all functions between the carriers.  Products are word concatenation.
* ``ProductCategory``: componentwise product of a list of categories.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .seqs import LazyProduct, Mapped


class CategoryError(ValueError):
    pass


class Category:
    """Shared helpers.  Subclasses provide the primitive operations."""

    terminal = None

    # primitive: objects, hom, hom_count, dom, cod, compose, identity, bang,
    # product, pair

    def hom(self, a, b):
        return iter(self.hom_seq(a, b))

    def hom_count(self, a, b):
        return len(self.hom_seq(a, b))

    def morphisms(self):
        for a in self.objects:
            for b in self.objects:
                yield from self.hom(a, b)

    def has_product(self, b, c) -> bool:
        try:
            self.product(b, c)
            return True
        except CategoryError:
            return False

    def prod_obj(self, b, c):
        return self.product(b, c)[0]

    def p1(self, b, c):
        return self.product(b, c)[1]

    def p2(self, b, c):
        return self.product(b, c)[2]

    # n-ary products are left nested: ((c1 x c2) x c3) ...; [] -> 1, [c] -> c
    def nprod(self, objs):
        objs = list(objs)
        if not objs:
            return self.terminal
        acc = objs[0]
        for c in objs[1:]:
            acc = self.prod_obj(acc, c)
        return acc

    def nproj(self, objs, i):
        """i-th projection (0-based) out of the left-nested product."""
        objs = list(objs)
        n = len(objs)
        if n == 1:
            return self.identity(objs[0])
        # peel off from the right
        left = objs[:-1]
        lo = self.nprod(left)
        if i == n - 1:
            return self.p2(lo, objs[-1])
        return self.compose(self.nproj(left, i), self.p1(lo, objs[-1]))

    def npair(self, fs, dom=None):
        fs = list(fs)
        if not fs:
            if dom is None:
                raise CategoryError("empty pairing needs a domain")
            return self.bang(dom)
        acc = fs[0]
        for f in fs[1:]:
            acc = self.pair(acc, f)
        return acc

    def times(self, f, g):
        """f x g : a x c -> b x d."""
        a, c = self.dom(f), self.dom(g)
        return self.pair(self.compose(f, self.p1(a, c)), self.compose(g, self.p2(a, c)))

    def assoc(self, b, c, d):
        """Change-of-product iso b x (c x d) -> (b x c) x d."""
        cd = self.prod_obj(c, d)
        src_p1 = self.p1(b, cd)
        src_p2 = self.p2(b, cd)
        first = self.pair(src_p1, self.compose(self.p1(c, d), src_p2))
        return self.pair(first, self.compose(self.p2(c, d), src_p2))

    def inverse(self, f):
        for g in self.hom(self.cod(f), self.dom(f)):
            if (self.compose(g, f) == self.identity(self.dom(f))
                    and self.compose(f, g) == self.identity(self.cod(f))):
                return g
        raise CategoryError(f"morphism {f!r} is not invertible")

    def is_iso(self, f) -> bool:
        try:
            self.inverse(f)
            return True
        except CategoryError:
            return False

    def format_obj(self, c) -> str:
        return str(c)

    def format_mor(self, f) -> str:
        return str(f)


# ----------------------------------------------------------------- tables


class TableCategory(Category):
    def __init__(self, objects, morphisms, comp, ids, terminal, prods, pairs):
        """``morphisms``: {id: (dom, cod)}; ``comp``: {(g, f): gf};
        ``prods``: {(b, c): (bc, p1, p2)}; ``pairs``: {(f, g): <f,g>}."""
        self.objects = tuple(objects)
        self.mors = dict(morphisms)
        self.comp = dict(comp)
        self.ids = dict(ids)
        self.terminal = terminal
        self.prods = dict(prods)
        self.pairs = dict(pairs)
        self._hom = {}
        for m, (a, b) in self.mors.items():
            self._hom.setdefault((a, b), []).append(m)

    def hom_seq(self, a, b):
        return tuple(self._hom.get((a, b), ()))

    def dom(self, f):
        return self.mors[f][0]

    def cod(self, f):
        return self.mors[f][1]

    def compose(self, g, f):
        try:
            return self.comp[(g, f)]
        except KeyError:
            raise CategoryError(f"composite {g}∘{f} not in table") from None

    def identity(self, a):
        return self.ids[a]

    def bang(self, a):
        ms = self._hom.get((a, self.terminal), [])
        if len(ms) != 1:
            raise CategoryError(f"{a} has {len(ms)} maps to the terminal object")
        return ms[0]

    def product(self, b, c):
        try:
            return self.prods[(b, c)]
        except KeyError:
            raise CategoryError(f"no designated product for ({b}, {c})") from None

    def pair(self, f, g):
        try:
            return self.pairs[(f, g)]
        except KeyError:
            raise CategoryError(f"no pairing for ({f}, {g})") from None


# ------------------------------------------------------------- finite sets


@dataclass(frozen=True)
class Fn:
    """A function between carriers of two words, stored as its value table."""

    dom: tuple
    cod: tuple
    table: tuple

    def __repr__(self):
        return f"Fn({'×'.join(self.dom) or '1'}→{'×'.join(self.cod) or '1'}, {list(self.table)})"


class SetCategory(Category):
    def __init__(self, atoms, depth):
        if depth < 1:
            raise CategoryError("product depth must be at least 1")
        self.atoms = {name: tuple(elems) for name, elems in dict(atoms).items()}
        self.depth = depth
        self.terminal = ()
        words = [()]
        for n in range(1, depth + 1):
            words.extend(itertools.product(sorted(self.atoms), repeat=n))
        self.objects = tuple(words)
        self._carrier = {}
        self._index = {}

    def carrier(self, w):
        c = self._carrier.get(w)
        if c is None:
            c = tuple(itertools.product(*(self.atoms[a] for a in w)))
            self._carrier[w] = c
            self._index[w] = {x: i for i, x in enumerate(c)}
        return c

    def index(self, w, x):
        self.carrier(w)
        return self._index[w][x]

    def hom_seq(self, a, b):
        ca, cb = self.carrier(a), self.carrier(b)
        return Mapped(LazyProduct([cb] * len(ca)), lambda t: Fn(a, b, t))

    def make(self, dom, cod, fun):
        return Fn(dom, cod, tuple(fun(x) for x in self.carrier(dom)))

    def apply(self, f, x):
        return f.table[self.index(f.dom, x)]

    def dom(self, f):
        return f.dom

    def cod(self, f):
        return f.cod

    def compose(self, g, f):
        if f.cod != g.dom:
            raise CategoryError(f"cannot compose {g!r} after {f!r}")
        idx = self._index_of(g.dom)
        return Fn(f.dom, g.cod, tuple(g.table[idx[y]] for y in f.table))

    def _index_of(self, w):
        self.carrier(w)
        return self._index[w]

    def identity(self, a):
        return Fn(a, a, self.carrier(a))

    def bang(self, a):
        return Fn(a, (), ((),) * len(self.carrier(a)))

    def product(self, b, c):
        w = b + c
        if len(w) > self.depth:
            raise CategoryError(f"product {b}×{c} exceeds product depth {self.depth}")
        n = len(b)
        cw = self.carrier(w)
        return (w, Fn(w, b, tuple(x[:n] for x in cw)), Fn(w, c, tuple(x[n:] for x in cw)))

    def pair(self, f, g):
        if f.dom != g.dom:
            raise CategoryError("pairing needs a common domain")
        w = f.cod + g.cod
        if len(w) > self.depth:
            raise CategoryError(f"product {f.cod}×{g.cod} exceeds product depth {self.depth}")
        return Fn(f.dom, w, tuple(y + z for y, z in zip(f.table, g.table)))

    def inverse(self, f):
        if len(set(f.table)) != len(f.table) or len(f.table) != len(self.carrier(f.cod)):
            raise CategoryError(f"{f!r} is not a bijection")
        back = {y: x for x, y in zip(self.carrier(f.dom), f.table)}
        return Fn(f.cod, f.dom, tuple(back[y] for y in self.carrier(f.cod)))

    def format_obj(self, c):
        return "(" + " ".join(c) + ")"


# ------------------------------------------------------------------ products


class ProductCategory(Category):
    """Componentwise product; the empty product is the one-object category."""

    def __init__(self, factors):
        self.factors = tuple(factors)
        self.terminal = tuple(c.terminal for c in self.factors)
        self.objects = tuple(itertools.product(*(c.objects for c in self.factors)))

    def hom_seq(self, a, b):
        return LazyProduct([c.hom_seq(x, y) for c, x, y in zip(self.factors, a, b)])

    def dom(self, f):
        return tuple(c.dom(g) for c, g in zip(self.factors, f))

    def cod(self, f):
        return tuple(c.cod(g) for c, g in zip(self.factors, f))

    def compose(self, g, f):
        return tuple(c.compose(x, y) for c, x, y in zip(self.factors, g, f))

    def identity(self, a):
        return tuple(c.identity(x) for c, x in zip(self.factors, a))

    def bang(self, a):
        return tuple(c.bang(x) for c, x in zip(self.factors, a))

    def product(self, b, c):
        parts = [k.product(x, y) for k, x, y in zip(self.factors, b, c)]
        return (tuple(p[0] for p in parts), tuple(p[1] for p in parts), tuple(p[2] for p in parts))

    def pair(self, f, g):
        return tuple(k.pair(x, y) for k, x, y in zip(self.factors, f, g))

    def inverse(self, f):
        return tuple(k.inverse(x) for k, x in zip(self.factors, f))

    def format_obj(self, c):
        return "<" + ", ".join(k.format_obj(x) for k, x in zip(self.factors, c)) + ">"


class SubCategory(Category):
    """Image of a functor that is injective on objects.

    Objects, homs and designated products are transported along the functor.
    """

    def __init__(self, ambient, functor_obj, functor_mor, source):
        self.ambient = ambient
        self.source = source
        self.F = functor_obj
        self.Fm = functor_mor
        pre = {}
        for c in source.objects:
            d = functor_obj(c)
            if d in pre:
                raise CategoryError(f"object map is not injective: {pre[d]!r} and {c!r} both map to {d!r}")
            pre[d] = c
        self.pre = pre
        self.objects = tuple(functor_obj(c) for c in source.objects)
        self.terminal = functor_obj(source.terminal)
        self._hom = {}

    def hom_seq(self, a, b):
        key = (a, b)
        if key not in self._hom:
            seen = {}
            for f in self.source.hom(self.pre[a], self.pre[b]):
                seen.setdefault(self.Fm(f), None)
            self._hom[key] = tuple(seen)
        return self._hom[key]

    def dom(self, f):
        return self.ambient.dom(f)

    def cod(self, f):
        return self.ambient.cod(f)

    def compose(self, g, f):
        return self.ambient.compose(g, f)

    def identity(self, a):
        return self.ambient.identity(a)

    def bang(self, a):
        return self.Fm(self.source.bang(self.pre[a]))

    def product(self, b, c):
        bc, p1, p2 = self.source.product(self.pre[b], self.pre[c])
        return (self.F(bc), self.Fm(p1), self.Fm(p2))

    def preimage(self, g):
        a, b = self.pre[self.dom(g)], self.pre[self.cod(g)]
        for f in self.source.hom(a, b):
            if self.Fm(f) == g:
                return f
        raise CategoryError(f"{g!r} is not in the image")

    def pair(self, f, g):
        return self.Fm(self.source.pair(self.preimage(f), self.preimage(g)))

    def format_obj(self, c):
        return self.ambient.format_obj(c)
