"""Kernels, images, subprop-morphisms and the homomorphism theorem."""

from __future__ import annotations

import random
from dataclasses import dataclass

from ..propcat.category import CategoryError, SubCategory
from ..propcat.check import DEFAULT_LIMIT, Checker, CheckReport
from ..propcat.core import Fiber, PropCategory
from .morphism import MorphismError, PropMorphism, compose_morphisms


# ------------------------------------------------------------------- kernels


class Kernel:
    """The three relations induced by a morphism, computed from its maps.

    Symbolic fibers contribute their probe elements only.
    """

    def __init__(self, F: PropMorphism):
        self.F = F
        self.source = F.source
        P = F.source
        C = P.base
        self.objects = list(C.objects)
        self.obj_image = {c: F.obj(c) for c in self.objects}
        self.mor_image = {}
        for f in C.morphisms():
            self.mor_image[f] = F.mor(f)
        self.elements = {}
        for c in self.objects:
            self.elements[c] = [(r, F.fib(c, r)) for r in P.fiber(c).probe]

    def objects_related(self, c1, c2) -> bool:
        return self.obj_image[c1] == self.obj_image[c2]

    def morphisms_related(self, f1, f2) -> bool:
        return self.F.mor(f1) == self.F.mor(f2)

    def fiber_related(self, c1, r1, c2, r2) -> bool:
        d = self.obj_image[c1]
        if d != self.obj_image[c2]:
            return False
        return self.F.target.leq(d, self.F.fib(c1, r1), self.F.fib(c2, r2))

    def object_classes(self):
        groups = {}
        for c in self.objects:
            groups.setdefault(self.obj_image[c], []).append(c)
        return list(groups.values())

    def morphism_classes(self):
        groups = {}
        for f, g in self.mor_image.items():
            groups.setdefault(g, []).append(f)
        return list(groups.values())

    def fiber_pairs(self):
        """Every related pair ((c1, r1), (c2, r2))."""
        Q = self.F.target
        for cls in self.object_classes():
            d = self.obj_image[cls[0]]
            for c1 in cls:
                for c2 in cls:
                    for r1, s1 in self.elements[c1]:
                        for r2, s2 in self.elements[c2]:
                            if Q.leq(d, s1, s2):
                                yield (c1, r1), (c2, r2)


@dataclass
class KernelWitness:
    kind: str
    left: object
    right: object

    def __str__(self):
        return f"{self.kind}: {self.left!r} related to {self.right!r} by the first kernel but not the second"


def kernel(F: PropMorphism) -> Kernel:
    return Kernel(F)


def kernel_leq_witness(k1: Kernel, k2: Kernel):
    """None if every relation of k1 is contained in k2's, else a witness."""
    if k1.source is not k2.source:
        raise MorphismError("kernels of morphisms with different sources")
    for cls in k1.object_classes():
        for c in cls[1:]:
            if not k2.objects_related(cls[0], c):
                return KernelWitness("object", cls[0], c)
    for cls in k1.morphism_classes():
        for f in cls[1:]:
            if not k2.morphisms_related(cls[0], f):
                return KernelWitness("morphism", cls[0], f)
    Q1, Q2 = k1.F.target, k2.F.target
    for cls in k1.object_classes():
        d1 = k1.obj_image[cls[0]]
        d2 = k2.obj_image[cls[0]]
        # group the class's elements by their k1-image; each group carries its k2-images
        groups = {}
        for c in cls:
            e2 = dict(k2.elements[c])
            for r, s in k1.elements[c]:
                g = groups.setdefault(s, {})
                g.setdefault(e2[r], (c, r))
        keys = list(groups)
        leq1, leq2 = Q1.fiber(d1).leq, Q2.fiber(d2).leq
        for u1 in keys:
            for u2 in keys:
                if not leq1(u1, u2):
                    continue
                for v1, w1 in groups[u1].items():
                    for v2, w2 in groups[u2].items():
                        if not leq2(v1, v2):
                            return KernelWitness("fiber", w1, w2)
    return None


def kernel_leq(k1: Kernel, k2: Kernel) -> bool:
    return kernel_leq_witness(k1, k2) is None


def kernels_equal(k1: Kernel, k2: Kernel) -> bool:
    return kernel_leq(k1, k2) and kernel_leq(k2, k1)


# -------------------------------------------------------------------- images


class ImagePropCategory(PropCategory):
    """The image of a morphism whose object map is injective."""

    def __init__(self, F: PropMorphism):
        super().__init__()
        self.F = F
        P, Q = F.source, F.target
        self.base = SubCategory(Q.base, F.obj, F.mor, P.base)
        self.language = Q.language

    def make_fiber(self, d):
        F = self.F
        c = self.base.pre[d]
        src = F.source.fiber(c)
        tgt = F.target.fiber(d)
        images = tuple(dict.fromkeys(F.fib(c, r) for r in src.probe))
        elements = None if src.symbolic else images
        members = set(images)

        def contains(s):
            return s in members if not src.symbolic else tgt.contains(s)

        return Fiber(elements, tgt.leq, tgt.ops, probe=images, contains=contains)

    def act(self, g, s):
        return self.F.target.act(g, s)

    def eq(self, d):
        c = self.base.pre[d]
        cc = self.F.source.base.prod_obj(c, c)
        return self.F.fib(cc, self.F.source.eq(c))

    def quant(self, name, d1, d2, s):
        c1, c2 = self.base.pre[d1], self.base.pre[d2]
        return self.F.target.quant(name, d1, d2, self.F.target.act(self.F.a_inv(c1, c2), s))

    def format_elem(self, d, s):
        return self.F.target.format_elem(d, s)

    def describe(self):
        return f"image({self.F.name})"


def image_factor(F: PropMorphism):
    """(image, corestriction H, inclusion iota) with iota ∘ H = F."""
    try:
        I = ImagePropCategory(F)
    except CategoryError as exc:
        raise MorphismError(str(exc)) from None
    H = PropMorphism(F.source, I, F.obj, F.mor, F.fib, f"corestrict({F.name})")
    iota = PropMorphism(I, F.target, lambda d: d, lambda g: g, lambda d, s: s, f"incl({F.name})")
    return I, H, iota


def factorize(F: PropMorphism):
    """(epsilon, psi) with psi ∘ epsilon = F, epsilon full and onto, psi a subprop-morphism."""
    _, eps, psi = image_factor(F)
    return eps, psi


# --------------------------------------------------- subprop-morphisms, class E


def subprop_report(iota: PropMorphism, limit=DEFAULT_LIMIT, seed=0) -> CheckReport:
    P, Q = iota.source, iota.target
    C = P.base
    ck = Checker(f"subprop {iota.name}", limit, seed)
    O = list(C.objects)

    def t_faithful(a, b):
        def t():
            seen = {}
            for f in C.hom(a, b):
                g = iota.mor(f)
                if g in seen:
                    return (repr(seen[g]), repr(f), {"issue": "two morphisms with one image"})
                seen[g] = f
        return t

    ck.clause("faithful", "subprop", [([], t_faithful(a, b)) for a in O for b in O])

    def t_embed(c):
        def t(r, s):
            d = iota.obj(c)
            if P.leq(c, r, s) != Q.leq(d, iota.fib(c, r), iota.fib(c, s)):
                return (P.format_elem(c, r), P.format_elem(c, s), {"object": C.format_obj(c),
                                                                    "issue": "order not reflected"})
        return t

    ck.clause("order-embedding", "subprop", [([P.fiber(c).probe] * 2, t_embed(c)) for c in O],
              any(P.fiber(c).symbolic for c in O))
    return ck.report


def is_subprop_morphism(iota: PropMorphism, **kw) -> bool:
    return subprop_report(iota, **kw).ok


def class_e_report(K: PropMorphism, bijective=False) -> CheckReport:
    """Surjective (or bijective) on objects, full, fiberwise surjective."""
    P, E = K.source, K.target
    C, D = P.base, E.base
    ck = Checker(f"class E {K.name}", None)
    O = list(C.objects)

    def t_objects():
        img = [K.obj(c) for c in O]
        missing = [e for e in D.objects if e not in img]
        if missing:
            return (repr(missing[0]), "image", {"issue": "object not hit"})
        if bijective and len(set(img)) != len(img):
            return (len(set(img)), len(img), {"issue": "object map not injective"})

    ck.clause("objects", "class E", [([], t_objects)])

    def t_full(a, b):
        def t():
            img = {K.mor(f) for f in C.hom(a, b)}
            for g in D.hom(K.obj(a), K.obj(b)):
                if g not in img:
                    return (repr(g), "image", {"a": C.format_obj(a), "b": C.format_obj(b), "issue": "not full"})
        return t

    ck.clause("full", "class E", [([], t_full(a, b)) for a in O for b in O])

    def t_fib(c):
        def t():
            img = {K.fib(c, r) for r in P.fiber(c).probe}
            for s in E.fiber(K.obj(c)).probe:
                if s not in img:
                    return (E.format_elem(K.obj(c), s), "image", {"object": C.format_obj(c),
                                                                  "issue": "fiber map not onto"})
        return t

    ck.clause("fiberwise-onto", "class E", [([], t_fib(c)) for c in O])
    return ck.report


# ------------------------------------------------------------ completion


@dataclass
class Obstruction:
    witness: KernelWitness

    def __str__(self):
        return f"no completion: {self.witness}"


def complete_through(F: PropMorphism, K: PropMorphism, order="forward"):
    """H with H ∘ K = F, or an Obstruction when ker K is not below ker F.

    Preimages are chosen by first occurrence in table order; ``reverse`` scans
    backwards and an integer seeds a shuffle. The result does not depend on
    the choice.
    """
    if F.source is not K.source:
        raise MorphismError("F and K must share a source")
    rep = class_e_report(K)
    if not rep.ok:
        raise MorphismError(f"K fails the surjectivity hypotheses: {rep.violations[0]}")
    w = kernel_leq_witness(Kernel(K), Kernel(F))
    if w is not None:
        return Obstruction(w)
    P, E = K.source, K.target
    C = P.base
    objs = list(C.objects)
    mors = list(C.morphisms())
    if isinstance(order, int) and not isinstance(order, bool):
        shuffle = random.Random(order).shuffle
    elif order == "reverse":
        shuffle = list.reverse
    elif order == "forward":
        def shuffle(xs):
            pass
    else:
        raise ValueError("order must be 'forward', 'reverse' or an integer seed")
    shuffle(objs)
    shuffle(mors)
    opre, mpre, fpre = {}, {}, {}
    for c in objs:
        opre.setdefault(K.obj(c), c)
    for f in mors:
        mpre.setdefault(K.mor(f), f)
    for e, c in opre.items():
        elems = list(P.fiber(c).probe)
        shuffle(elems)
        table = {}
        for r in elems:
            table.setdefault(K.fib(c, r), r)
        fpre[e] = (c, table)

    def obj(e):
        return F.obj(opre[e])

    def mor(h):
        return F.mor(mpre[h])

    def fib(e, s):
        c, table = fpre[e]
        return F.fib(c, table[s])

    return PropMorphism(E, F.target, obj, mor, fib, f"complete({F.name}/{K.name})")


def morphisms_agree(F: PropMorphism, G: PropMorphism) -> bool:
    """Extensional equality on all objects, morphisms and fiber elements."""
    if F.source is not G.source and F.source.base.objects != G.source.base.objects:
        return False
    P = F.source
    for c in P.base.objects:
        if F.obj(c) != G.obj(c):
            return False
        for r in P.fiber(c).probe:
            if F.fib(c, r) != G.fib(c, r):
                return False
    return all(F.mor(f) == G.mor(f) for f in P.base.morphisms())


def diagonal_filler(e: PropMorphism, m: PropMorphism, u: PropMorphism, v: PropMorphism, order="forward"):
    """For a square v ∘ e = m ∘ u with e in E and m a subprop-morphism, the
    diagonal d with d ∘ e = u and m ∘ d = v, obtained by completing u through e."""
    d = complete_through(u, e, order)
    if isinstance(d, Obstruction):
        return d
    return d


__all__ = [
    "Kernel", "KernelWitness", "kernel", "kernel_leq", "kernel_leq_witness", "kernels_equal",
    "ImagePropCategory", "image_factor", "factorize", "subprop_report", "is_subprop_morphism",
    "class_e_report", "Obstruction", "complete_through", "morphisms_agree", "diagonal_filler",
]
