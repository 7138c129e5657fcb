"""The tautological structure a prop-category carries over its own data."""

from __future__ import annotations

import itertools

from ..propcat.category import CategoryError
from ..semantics import Structure
from ..syntax import Signature


def _decompositions(C, objs, target, max_arity):
    """Tuples of objects (length 0 or 2..max_arity) whose product is ``target``."""
    out = []
    if target == C.terminal:
        out.append(())
    for n in range(2, max_arity + 1):
        for combo in itertools.product(objs, repeat=n):
            try:
                if C.nprod(combo) == target:
                    out.append(combo)
            except CategoryError:
                continue
    return out


def internal_structure(pc, max_arity=2, objects=None, morphisms=None):
    """Return (signature, structure, names) for the internal structure of ``pc``.

    Sorts are the objects, function symbols the morphisms and relation
    symbols the fiber elements (probe elements for symbolic fibers). Every
    morphism gets a unary symbol ``m<k>`` and, for each way of writing its
    domain as a product of at most ``max_arity`` objects, a variant
    ``m<k>_<j>``; relation symbols follow the same pattern with ``r``.
    ``objects`` and ``morphisms`` optionally restrict the symbols generated.
    ``names`` maps each symbol to the entity it names.
    """
    C = pc.base
    objs = list(objects) if objects is not None else list(C.objects)
    sort_of = {c: f"o{i}" for i, c in enumerate(objs)}
    names = {s: c for c, s in sort_of.items()}
    funcs_sig, funcs = {}, {}
    mors = list(morphisms) if morphisms is not None else [f for a in objs for b in objs for f in C.hom(a, b)]
    for k, f in enumerate(mors):
        a, b = C.dom(f), C.cod(f)
        if a not in sort_of or b not in sort_of:
            continue
        name = f"m{k}"
        funcs_sig[name] = ((sort_of[a],), sort_of[b])
        funcs[name] = f
        names[name] = f
        for j, combo in enumerate(_decompositions(C, objs, a, max_arity)):
            v = f"{name}_{j}"
            funcs_sig[v] = (tuple(sort_of[c] for c in combo), sort_of[b])
            funcs[v] = f
            names[v] = f
    rels_sig, rels = {}, {}
    for c in objs:
        decs = _decompositions(C, objs, c, max_arity)
        for k, r in enumerate(pc.fiber(c).probe):
            name = f"r{sort_of[c][1:]}_{k}"
            rels_sig[name] = (sort_of[c],)
            rels[name] = r
            names[name] = (c, r)
            for j, combo in enumerate(decs):
                v = f"{name}_{j}"
                rels_sig[v] = tuple(sort_of[x] for x in combo)
                rels[v] = r
                names[v] = (c, r)
    sg = Signature(sort_of.values(), funcs_sig, rels_sig)
    S = Structure(pc, sg, {s: c for c, s in sort_of.items()}, funcs, rels, name=f"internal({pc.describe()})")
    return sg, S, names


__all__ = ["internal_structure"]
