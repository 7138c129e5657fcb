"""Morphisms of prop-categories and 2-cells between them."""

from __future__ import annotations

from dataclasses import dataclass

from ..propcat.category import CategoryError
from ..propcat.check import DEFAULT_LIMIT, Checker, CheckReport


class MorphismError(ValueError):
    pass


class PropMorphism:
    """A base functor ``obj``/``mor`` plus fiber maps ``fib(c, r)``."""

    def __init__(self, source, target, obj, mor, fib, name="F"):
        self.source = source
        self.target = target
        self.obj = obj
        self.mor = mor
        self.fib = fib
        self.name = name

    def __repr__(self):
        return f"PropMorphism({self.name}: {self.source.describe()} -> {self.target.describe()})"

    def a(self, b, c):
        """Change-of-product map F(b x c) -> F(b) x F(c)."""
        C, D = self.source.base, self.target.base
        _, p1, p2 = C.product(b, c)
        return D.pair(self.mor(p1), self.mor(p2))

    def a_inv(self, b, c):
        return self.target.base.inverse(self.a(b, c))

    def a_list(self, objs):
        """F([[c1]] x ... x [[cn]]) -> F c1 x ... x F cn, left nested; n = 0 gives the map to 1."""
        C, D = self.source.base, self.target.base
        objs = list(objs)
        dom = self.obj(C.nprod(objs))
        return D.npair([self.mor(C.nproj(objs, i)) for i in range(len(objs))], dom=dom)


def identity_morphism(pc, name="id") -> PropMorphism:
    return PropMorphism(pc, pc, lambda c: c, lambda f: f, lambda c, r: r, name)


def compose_morphisms(K: PropMorphism, F: PropMorphism, name=None) -> PropMorphism:
    """K after F."""
    if F.target is not K.source:
        raise MorphismError("morphisms are not composable")
    return PropMorphism(F.source, K.target, lambda c: K.obj(F.obj(c)), lambda f: K.mor(F.mor(f)),
                        lambda c, r: K.fib(F.obj(c), F.fib(c, r)), name or f"{K.name}∘{F.name}")


def value_map_morphism(source, target, h, name="h") -> PropMorphism:
    """Identity on the base, postcompose truth values with ``h`` (lattice hosts)."""
    hf = h if callable(h) else (lambda v: h[v])
    if source.base.objects != target.base.objects:
        raise MorphismError("value maps need a shared base category")
    return PropMorphism(source, target, lambda c: c, lambda f: f,
                        lambda c, r: tuple(hf(v) for v in r), name)


def table_morphism(source, target, omap, mmap, pmap, name="F") -> PropMorphism:
    """From explicit dictionaries; ``pmap`` is {c: {r: s}}."""

    def obj(c):
        try:
            return omap[c]
        except KeyError:
            raise MorphismError(f"object map undefined at {c!r}") from None

    def mor(f):
        try:
            return mmap[f]
        except KeyError:
            raise MorphismError(f"morphism map undefined at {f!r}") from None

    def fib(c, r):
        try:
            return pmap[c][r]
        except KeyError:
            raise MorphismError(f"fiber map undefined at {c!r}, {r!r}") from None

    return PropMorphism(source, target, obj, mor, fib, name)


# ----------------------------------------------------------------- checking


def check_morphism(F: PropMorphism, limit=DEFAULT_LIMIT, seed=0, max_witnesses=3) -> CheckReport:
    P, Q = F.source, F.target
    C, D = P.base, Q.base
    ck = Checker(f"morphism {F.name}", limit, seed, max_witnesses)
    O = list(C.objects)
    fo, fd = C.format_obj, D.format_obj
    prods = {}
    for b in O:
        for c in O:
            try:
                prods[(b, c)] = C.product(b, c)
            except CategoryError:
                pass
    fib = {c: P.fiber(c) for c in O}
    probe = any(f.symbolic for f in fib.values())

    def E(c):
        return fib[c].probe

    def t_lang():
        if P.language != Q.language:
            return (repr(P.language), repr(Q.language), {"issue": "languages differ"})

    ck.clause("language", "language", [([], t_lang)])
    if P.language != Q.language:
        return ck.report

    def t_obj(c):
        def t():
            d = F.obj(c)
            if d not in D.objects:
                return (repr(d), "object of target", {"object": fo(c)})
        return t

    ck.clause("functor.objects", "functor", [([], t_obj(c)) for c in O])

    def t_domcod(f):
        g = F.mor(f)
        if D.dom(g) != F.obj(C.dom(f)) or D.cod(g) != F.obj(C.cod(f)):
            return (f"{fd(D.dom(g))}->{fd(D.cod(g))}", f"{fd(F.obj(C.dom(f)))}->{fd(F.obj(C.cod(f)))}",
                    {"f": repr(f)})

    ck.clause("functor.dom-cod", "functor", [([C.hom_seq(a, b)], t_domcod) for a in O for b in O])

    def t_fid(a):
        def t():
            l, r = F.mor(C.identity(a)), D.identity(F.obj(a))
            if l != r:
                return (l, r, {"object": fo(a)})
        return t

    ck.clause("functor.identity", "functor", [([], t_fid(a)) for a in O])

    def t_fcomp(f, g):
        l, r = F.mor(C.compose(g, f)), D.compose(F.mor(g), F.mor(f))
        if l != r:
            return (l, r, {"f": repr(f), "g": repr(g)})

    ck.clause("functor.compose", "functor",
              [([C.hom_seq(a, b), C.hom_seq(b, c)], t_fcomp) for a in O for b in O for c in O])

    def t_term():
        t = F.obj(C.terminal)
        bad = [d for d in D.objects if D.hom_count(d, t) != 1]
        if bad:
            return (fd(t), "terminal", {"object with wrong number of maps": fd(bad[0])})

    ck.clause("products.terminal", "products", [([], t_term)])

    def t_iso(b, c):
        def t():
            if not D.is_iso(F.a(b, c)):
                return (repr(F.a(b, c)), "isomorphism", {"b": fo(b), "c": fo(c)})
        return t

    ck.clause("products.iso", "products", [([], t_iso(b, c)) for (b, c) in prods])

    def t_nat(a, b):
        def t(f, r):
            l = F.fib(a, P.act(f, r))
            rr = Q.act(F.mor(f), F.fib(b, r))
            if l != rr:
                return (Q.format_elem(F.obj(a), l), Q.format_elem(F.obj(a), rr),
                        {"f": repr(f), "r": P.format_elem(b, r)})
        return t

    ck.clause("fiber.natural", "natural", [([C.hom_seq(a, b), E(b)], t_nat(a, b)) for a in O for b in O], probe)

    def t_hom(c, op):
        def t(*args):
            d = F.obj(c)
            l = F.fib(c, P.op(c, op, *args))
            rr = Q.op(d, op, *(F.fib(c, x) for x in args))
            if l != rr or not Q.fiber(d).contains(l):
                return (Q.format_elem(d, l), Q.format_elem(d, rr),
                        {"object": fo(c), "op": op, "args": "; ".join(P.format_elem(c, x) for x in args)})
        return t

    ck.clause("fiber.homomorphism", "Condition 1",
              [([E(c)] * ar, t_hom(c, op)) for c in O for op, ar in P.language.connectives], probe)

    def t_mono(c):
        def t(r, s):
            d = F.obj(c)
            if P.leq(c, r, s) and not Q.leq(d, F.fib(c, r), F.fib(c, s)):
                return (Q.format_elem(d, F.fib(c, r)), Q.format_elem(d, F.fib(c, s)),
                        {"object": fo(c), "r": P.format_elem(c, r), "s": P.format_elem(c, s)})
        return t

    ck.clause("fiber.monotone", "Condition 1", [([E(c), E(c)], t_mono(c)) for c in O], probe)

    def t_quant(q, b, c):
        bc = prods[(b, c)][0]

        def t(r):
            l = F.fib(b, P.quant(q, b, c, r))
            rr = Q.quant(q, F.obj(b), F.obj(c), Q.act(F.a_inv(b, c), F.fib(bc, r)))
            if l != rr:
                return (Q.format_elem(F.obj(b), l), Q.format_elem(F.obj(b), rr),
                        {"quantifier": q, "b": fo(b), "c": fo(c), "r": P.format_elem(bc, r)})
        return t

    ck.clause("quantifier", "Condition 2",
              [([E(prods[(b, c)][0])], t_quant(q, b, c)) for q in P.language.quantifiers for (b, c) in prods],
              probe)

    def t_eq(c):
        def t():
            cc = prods[(c, c)][0]
            l = F.fib(cc, P.eq(c))
            rr = Q.act(F.a(c, c), Q.eq(F.obj(c)))
            if l != rr:
                return (Q.format_elem(F.obj(cc), l), Q.format_elem(F.obj(cc), rr), {"object": fo(c)})
        return t

    ck.clause("equality", "Condition 3", [([], t_eq(c)) for c in O if (c, c) in prods])
    return ck.report


# ------------------------------------------------------------------ 2-cells


@dataclass
class TwoCell:
    """Components ``eta[c]: F c -> H c`` in the common target."""

    F: PropMorphism
    H: PropMorphism
    eta: dict


def check_two_cell(cell: TwoCell, limit=DEFAULT_LIMIT, seed=0) -> CheckReport:
    F, H = cell.F, cell.H
    P, Q = F.source, F.target
    C, D = P.base, Q.base
    ck = Checker("2-cell", limit, seed)
    O = list(C.objects)

    def t_comp(c):
        def t():
            e = cell.eta[c]
            if D.dom(e) != F.obj(c) or D.cod(e) != H.obj(c):
                return (repr(e), f"{D.format_obj(F.obj(c))}->{D.format_obj(H.obj(c))}", {"object": C.format_obj(c)})
        return t

    ck.clause("components", "2-cell", [([], t_comp(c)) for c in O])

    def t_nat(f):
        a, b = C.dom(f), C.cod(f)
        l = D.compose(H.mor(f), cell.eta[a])
        r = D.compose(cell.eta[b], F.mor(f))
        if l != r:
            return (l, r, {"f": repr(f)})

    ck.clause("natural", "2-cell", [([C.hom_seq(a, b)], t_nat) for a in O for b in O])

    def t_fib(c):
        def t(r):
            l = F.fib(c, r)
            rr = Q.act(cell.eta[c], H.fib(c, r))
            if l != rr:
                return (Q.format_elem(F.obj(c), l), Q.format_elem(F.obj(c), rr), {"object": C.format_obj(c)})
        return t

    ck.clause("fibers", "2-cell", [([P.fiber(c).probe], t_fib(c)) for c in O])
    return ck.report
