"""Print-then-parse checks for every fixture file kind, compared up to α."""

import os

from fiberlogic.cli.formats import (
    parse_proof,
    parse_theory,
    print_interp,
    print_morphism,
    print_pc,
    print_proof,
    print_structure,
    print_theory,
)
from fiberlogic.fibered import morphisms_agree
from fiberlogic.syntax import alpha_eq, assertion_alpha_eq


def proofs_alpha_eq(p, q) -> bool:
    return (p.rule == q.rule and p.params == q.params and assertion_alpha_eq(p.concl, q.concl)
            and len(p.premises) == len(q.premises)
            and all(proofs_alpha_eq(a, b) for a, b in zip(p.premises, q.premises)))


def theories_alpha_eq(a, b) -> bool:
    return (a.signature == b.signature and a.language == b.language
            and len(a.assertions) == len(b.assertions)
            and all(assertion_alpha_eq(x, y) for x, y in zip(a.assertions, b.assertions)))


def _interp_alpha_eq(g, h) -> bool:
    if g.source != h.source or g.target != h.target or g.sorts != h.sorts:
        return False
    for f in g.funcs:
        (c1, t1), (c2, t2) = g.funcs[f], h.funcs[f]
        if c1 != c2 or t1 != t2:
            return False
    return all(g.rels[R][0] == h.rels[R][0] and alpha_eq(g.rels[R][1], h.rels[R][1]) for R in g.rels)


def roundtrip(ws, path, proof_theory=None) -> bool:
    """True if printing the loaded file and parsing it back gives the same object."""
    base = os.path.dirname(path)
    ext = os.path.splitext(path)[1]
    if ext == ".theory":
        T = ws.theory(path)
        return theories_alpha_eq(T, parse_theory(print_theory(T)))
    if ext == ".proof":
        p = ws.proof(path, proof_theory)
        return proofs_alpha_eq(p, parse_proof(print_proof(p), proof_theory))
    if ext == ".pc":
        pc = ws.pc(path)
        text = print_pc(pc)
        again = ws.parse_text("pc", text, base)
        return (print_pc(again) == text and again.language == pc.language
                and again.base.objects == pc.base.objects)
    if ext == ".structure":
        S = ws.structure(path)
        again = ws.parse_text("structure", print_structure(S, ws), base)
        return again.host is S.host and again.signature == S.signature and again.same_interpretation(S)
    if ext == ".mor":
        F = ws.morphism(path)
        again = ws.parse_text("morphism", print_morphism(F, ws), base)
        return again.source is F.source and again.target is F.target and morphisms_agree(F, again)
    if ext == ".interp":
        h = ws.interp(path)
        src, tgt = (ws.path_of(T) for T in h.theories)
        again = ws.parse_text("interp", print_interp(h, src, tgt), base)
        return _interp_alpha_eq(h, again)
    raise ValueError(f"unknown fixture kind {path}")


def corpus(root):
    out = []
    for dirpath, _, files in os.walk(root):
        for name in files:
            if os.path.splitext(name)[1] in (".theory", ".proof", ".pc", ".structure", ".mor", ".interp"):
                out.append(os.path.join(dirpath, name))
    return sorted(out)
