"""Interpretations of one signature in another and the induced translation of
theories and structures."""

from __future__ import annotations

from dataclasses import dataclass

from ..semantics import Structure, _formula, _term
from ..syntax import (
    App,
    Conn,
    Context,
    Eq,
    Equation,
    Quant,
    Rel,
    Sequent,
    Signature,
    Theory,
    Var,
    WellFormednessError,
    fresh_name,
    open_binder,
    substitute,
    tensor,
    unit,
    wf_formula,
    wf_term,
)


@dataclass(frozen=True)
class SignatureInterpretation:
    """Generator images of a translation ``source -> target``.

    ``sorts[σ]`` is a context over the target; ``funcs[f]`` is a pair
    ``(ctx, terms)`` where ``ctx`` lists the components of the argument sorts
    in order and ``terms`` has one term per component of the result sort;
    ``rels[R]`` is a pair ``(ctx, formula)``.
    """

    source: Signature
    target: Signature
    sorts: dict
    funcs: dict
    rels: dict
    language: object = None

    def __post_init__(self):
        self.check()

    def check(self):
        src, tgt = self.source, self.target
        for s in src.sorts:
            if s not in self.sorts:
                raise WellFormednessError(f"sort {s} has no image", "interpretation", s)
            for v, t in self.sorts[s]:
                if t not in tgt.sorts:
                    raise WellFormednessError(f"image of sort {s} uses unknown sort {t}", "unknown-sort", t)
        for f, (args, res) in src.fn.items():
            if f not in self.funcs:
                raise WellFormednessError(f"function symbol {f} has no image", "interpretation", f)
            ctx, terms = self.funcs[f]
            want = tuple(t for a in args for t in self.sorts[a].sorts)
            if ctx.sorts != want:
                raise WellFormednessError(f"context of {f} must have sorts {want}", "interpretation", f)
            out = self.sorts[res].sorts
            if len(terms) != len(out):
                raise WellFormednessError(f"{f} needs {len(out)} component terms", "interpretation", f)
            for i, (t, s) in enumerate(zip(terms, out), 1):
                got = wf_term(tgt, ctx, t)
                if got != s:
                    raise WellFormednessError(f"component {i} of {f} has sort {got}, expected {s}",
                                              "sort-mismatch", f)
        for R, args in src.rel.items():
            if R not in self.rels:
                raise WellFormednessError(f"relation symbol {R} has no image", "interpretation", R)
            ctx, phi = self.rels[R]
            want = tuple(t for a in args for t in self.sorts[a].sorts)
            if ctx.sorts != want:
                raise WellFormednessError(f"context of {R} must have sorts {want}", "interpretation", R)
            if self.language is not None:
                wf_formula(tgt, self.language, ctx, phi)

    # --------------------------------------------------------- translation

    def context(self, ctx: Context, avoid=()):
        """Translated context plus the component variables of each variable."""
        entries, comps = [], {}
        used = set(avoid)
        for x, s in ctx:
            img = self.sorts[s]
            names = []
            for i, (_, t) in enumerate(img, 1):
                base = x if len(img) == 1 else f"{x}_{i}"
                n = fresh_name(base, used) if base in used else base
                used.add(n)
                names.append(n)
                entries.append((n, t))
            comps[x] = [Var(n) for n in names]
        return Context(entries), comps

    def term(self, t, comps) -> list:
        if isinstance(t, Var):
            return list(comps[t.name])
        ctx, terms = self.funcs[t.fn]
        flat = [u for a in t.args for u in self.term(a, comps)]
        sub = dict(zip(ctx.vars, flat))
        return [substitute(u, sub) for u in terms]

    def formula(self, phi, tctx: Context, comps):
        if isinstance(phi, Rel):
            ctx, body = self.rels[phi.rel]
            flat = [u for a in phi.args for u in self.term(a, comps)]
            return substitute(body, dict(zip(ctx.vars, flat)))
        if isinstance(phi, Eq):
            ls, rs = self.term(phi.lhs, comps), self.term(phi.rhs, comps)
            parts = [Eq(s, l, r) for (_, s), l, r in zip(self.sorts[phi.sort], ls, rs)]
            if not parts:
                return unit()
            acc = parts[0]
            for p in parts[1:]:
                acc = tensor(acc, p)
            return acc
        if isinstance(phi, Conn):
            return Conn(phi.op, tuple(self.formula(a, tctx, comps) for a in phi.args))
        if isinstance(phi, Quant):
            x, body = open_binder(phi, set(comps))
            ext, more = self.context(Context([(x, phi.sort)]), avoid=set(tctx.vars))
            inner = self.formula(body, tctx + ext, {**comps, **more})
            for v, s in reversed(ext.entries):
                inner = Quant(phi.q, v, s, inner)
            return inner
        raise WellFormednessError(f"not a formula: {phi!r}")

    def assertion(self, a) -> list:
        tctx, comps = self.context(a.ctx)
        if isinstance(a, Equation):
            ls, rs = self.term(a.lhs, comps), self.term(a.rhs, comps)
            return [Equation(tctx, l, r, s) for (_, s), l, r in zip(self.sorts[a.sort], ls, rs)]
        return [Sequent(tctx, tuple(self.formula(h, tctx, comps) for h in a.hyps),
                        self.formula(a.concl, tctx, comps))]


def identity_interpretation(sg: Signature, language=None) -> SignatureInterpretation:
    sorts = {s: Context([("x", s)]) for s in sg.sorts}
    funcs = {}
    for f, (args, _) in sg.fn.items():
        ctx = Context((f"x{i + 1}", s) for i, s in enumerate(args))
        funcs[f] = (ctx, (App(f, tuple(Var(v) for v in ctx.vars)),))
    rels = {}
    for R, args in sg.rel.items():
        ctx = Context((f"x{i + 1}", s) for i, s in enumerate(args))
        rels[R] = (ctx, Rel(R, tuple(Var(v) for v in ctx.vars)))
    return SignatureInterpretation(sg, sg, sorts, funcs, rels, language)


def compose_interpretations(g: SignatureInterpretation, h: SignatureInterpretation) -> SignatureInterpretation:
    """g after h, by substitution of generator images."""
    if h.target != g.source:
        raise WellFormednessError("interpretations are not composable", "interpretation")
    sorts = {s: g.context(ctx)[0] for s, ctx in h.sorts.items()}
    funcs = {}
    for f, (ctx, terms) in h.funcs.items():
        tctx, comps = g.context(ctx)
        funcs[f] = (tctx, tuple(u for t in terms for u in g.term(t, comps)))
    rels = {}
    for R, (ctx, phi) in h.rels.items():
        tctx, comps = g.context(ctx)
        rels[R] = (tctx, g.formula(phi, tctx, comps))
    return SignatureInterpretation(h.source, g.target, sorts, funcs, rels, g.language or h.language)


def translate_theory(h: SignatureInterpretation, T: Theory) -> Theory:
    if T.signature != h.source:
        raise WellFormednessError("theory is not over the interpretation's source", "interpretation")
    out = []
    for a in T.assertions:
        out.extend(h.assertion(a))
    return Theory(h.target, T.language, out)


# ------------------------------------------------------------ structures


def precompose_structure(S: Structure, h: SignatureInterpretation) -> Structure:
    """The source-signature structure obtained by reading S through h."""
    if S.signature != h.target:
        raise WellFormednessError("structure is not over the interpretation's target", "interpretation")
    pc = S.host
    C = pc.base
    sorts = {s: S.sort_obj(ctx.sorts) for s, ctx in h.sorts.items()}

    def regroup(groups):
        # nested product of groups -> flat product of all components
        flat = [o for g in groups for o in g]
        nested = [C.nprod(g) for g in groups]
        parts = []
        for i, g in enumerate(groups):
            outer = C.nproj(nested, i)
            for j in range(len(g)):
                parts.append(C.compose(C.nproj(g, j), outer))
        return C.npair(parts, dom=C.nprod(nested)), flat

    funcs = {}
    for f, (args, _) in h.source.fn.items():
        ctx, terms = h.funcs[f]
        groups = [[S.sorts[t] for t in h.sorts[a].sorts] for a in args]
        reg, flat = regroup(groups)
        comps = C.npair([_term(S, t, ctx, flat) for t in terms], dom=C.nprod(flat))
        funcs[f] = C.compose(comps, reg)
    rels = {}
    for R, args in h.source.rel.items():
        ctx, phi = h.rels[R]
        groups = [[S.sorts[t] for t in h.sorts[a].sorts] for a in args]
        reg, _ = regroup(groups)
        rels[R] = pc.act(reg, _formula(S, phi, ctx))
    return Structure(pc, h.source, sorts, funcs, rels, name=f"{S.name}∘h")


__all__ = [
    "SignatureInterpretation", "identity_interpretation", "compose_interpretations",
    "translate_theory", "precompose_structure",
]
