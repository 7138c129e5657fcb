"""Structures in a prop-category, interpretation and satisfaction."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

from .syntax import (
    Conn,
    Context,
    Eq,
    Equation,
    Quant,
    Rel,
    Sequent,
    Signature,
    Var,
    App,
    WellFormednessError,
    open_binder,
    wf_assertion,
    wf_formula,
    wf_term,
)


class StructureError(ValueError):
    pass


@dataclass
class Structure:
    host: object
    signature: Signature
    sorts: dict
    funcs: dict
    rels: dict
    name: str = ""

    def __post_init__(self):
        C = self.host.base
        for s in self.signature.sorts:
            if s not in self.sorts:
                raise StructureError(f"sort {s} is not interpreted")
            if self.sorts[s] not in C.objects:
                raise StructureError(f"sort {s} interpreted by {self.sorts[s]!r}, not an object of the host")
        for f, (args, res) in self.signature.fn.items():
            if f not in self.funcs:
                raise StructureError(f"function symbol {f} is not interpreted")
            m = self.funcs[f]
            dom = self.sort_obj(args)
            if C.dom(m) != dom or C.cod(m) != self.sorts[res]:
                raise StructureError(
                    f"{f} must map {C.format_obj(dom)} to {C.format_obj(self.sorts[res])}")
        for R, args in self.signature.rel.items():
            if R not in self.rels:
                raise StructureError(f"relation symbol {R} is not interpreted")
            c = self.sort_obj(args)
            if not self.host.fiber(c).contains(self.rels[R]):
                raise StructureError(f"{R} must be an element of P({C.format_obj(c)})")

    @property
    def language(self):
        return self.host.language

    def sort_obj(self, sorts):
        return self.host.base.nprod([self.sorts[s] for s in sorts])

    def ctx_obj(self, ctx: Context):
        return self.sort_obj(ctx.sorts)

    def same_interpretation(self, other: "Structure") -> bool:
        return (self.sorts == other.sorts and self.funcs == other.funcs and self.rels == other.rels)


# ------------------------------------------------------------- interpretation


def interpret_term(S: Structure, t, ctx: Context):
    wf_term(S.signature, ctx, t)
    return _term(S, t, ctx, [S.sorts[s] for s in ctx.sorts])


def _term(S, t, ctx, objs):
    C = S.host.base
    if isinstance(t, Var):
        return C.nproj(objs, ctx.index(t.name))
    f = S.funcs[t.fn]
    if not t.args:
        return C.compose(f, C.bang(C.nprod(objs)))
    return C.compose(f, C.npair([_term(S, a, ctx, objs) for a in t.args]))


def interpret_formula(S: Structure, phi, ctx: Context):
    wf_formula(S.signature, S.language, ctx, phi)
    return _formula(S, phi, ctx)


def _formula(S, phi, ctx):
    pc = S.host
    C = pc.base
    objs = [S.sorts[s] for s in ctx.sorts]
    G = C.nprod(objs)
    if isinstance(phi, Rel):
        m = C.npair([_term(S, a, ctx, objs) for a in phi.args], dom=G)
        return pc.act(m, S.rels[phi.rel])
    if isinstance(phi, Eq):
        m = C.pair(_term(S, phi.lhs, ctx, objs), _term(S, phi.rhs, ctx, objs))
        return pc.act(m, pc.eq(S.sorts[phi.sort]))
    if isinstance(phi, Conn):
        return pc.op(G, phi.op, *(_formula(S, a, ctx) for a in phi.args))
    if isinstance(phi, Quant):
        x, body = open_binder(phi, ctx.vars)
        ext = ctx.extend(x, phi.sort)
        r = _formula(S, body, ext)
        s = S.sorts[phi.sort]
        a_s = change_of_product(C, objs, s)
        return pc.quant(phi.q, G, s, pc.act(a_s, r))
    raise WellFormednessError(f"not a formula: {phi!r}")


def change_of_product(C, objs, s):
    """The iso [[Γ]] x [[σ]] -> [[Γ, x:σ]] built from projections and pairing."""
    G = C.nprod(objs)
    q1, q2 = C.p1(G, s), C.p2(G, s)
    parts = [C.compose(C.nproj(objs, i), q1) for i in range(len(objs))] + [q2]
    return C.npair(parts)


# --------------------------------------------------------------- satisfaction


@dataclass
class SatisfactionReport:
    assertion: object
    verdict: bool
    left: object
    right: object
    fiber: object
    left_text: str = ""
    right_text: str = ""

    def to_record(self):
        from .cli.formats import print_assertion

        return {"assertion": print_assertion(self.assertion), "verdict": self.verdict,
                "left": self.left_text, "right": self.right_text, "object": str(self.fiber)}


def tensor_all(pc, c, values):
    """Left-associated tensor; the empty product is the unit."""
    if not values:
        return pc.unit(c)
    acc = values[0]
    for v in values[1:]:
        acc = pc.tensor(c, acc, v)
    return acc


def satisfies(S: Structure, a) -> SatisfactionReport:
    wf_assertion(S.signature, S.language, a)
    pc = S.host
    C = pc.base
    G = S.ctx_obj(a.ctx)
    if isinstance(a, Equation):
        objs = [S.sorts[s] for s in a.ctx.sorts]
        l = _term(S, a.lhs, a.ctx, objs)
        r = _term(S, a.rhs, a.ctx, objs)
        return SatisfactionReport(a, l == r, l, r, C.format_obj(G), C.format_mor(l), C.format_mor(r))
    left = tensor_all(pc, G, [_formula(S, h, a.ctx) for h in a.hyps])
    right = _formula(S, a.concl, a.ctx)
    return SatisfactionReport(a, bool(pc.leq(G, left, right)), left, right, C.format_obj(G),
                              pc.format_elem(G, left), pc.format_elem(G, right))


def holds(S: Structure, a) -> bool:
    return satisfies(S, a).verdict


# --------------------------------------------------------- bounded theories


@dataclass(frozen=True)
class Budget:
    """Size limits for assertion enumeration.

    Term depth counts function applications (a variable has depth 0);
    formula depth counts connectives and quantifiers (an atom has depth 0).
    Bound variables do not count towards the context length.
    """

    ctx: int = 3
    term: int = 3
    fml: int = 3
    ante: int = 2
    equations: bool = True
    sequents: bool = True
    functions: Optional[frozenset] = None
    relations: Optional[frozenset] = None
    connectives: Optional[frozenset] = None
    quantifiers: Optional[frozenset] = None
    sorts: Optional[frozenset] = None

    @classmethod
    def parse(cls, text: str) -> "Budget":
        kw = {}
        for part in filter(None, (p.strip() for p in text.split(","))):
            k, _, v = part.partition("=")
            if k not in ("ctx", "term", "fml", "ante"):
                raise ValueError(f"unknown budget key {k}")
            kw[k] = int(v)
        return cls(**kw)

    def __str__(self):
        return f"ctx={self.ctx},term={self.term},fml={self.fml},ante={self.ante}"


def _keep(allowed, name):
    return allowed is None or name in allowed


def enumerate_terms(sg: Signature, ctx: Context, depth: int, budget: Budget | None = None) -> dict:
    """All terms up to ``depth`` grouped by sort, in a fixed order."""
    fns = [(f, a, r) for f, a, r in sg.functions if budget is None or _keep(budget.functions, f)]
    by_sort = {s: [] for s in sorted(sg.sorts)}
    seen = set()

    def add(t, s):
        if t not in seen:
            seen.add(t)
            by_sort[s].append(t)

    for v, s in ctx:
        add(Var(v), s)
    for f, args, r in fns:
        if not args:
            add(App(f), r)
    for _ in range(depth):
        snapshot = {s: list(ts) for s, ts in by_sort.items()}
        for f, args, r in fns:
            if not args:
                continue
            for combo in itertools.product(*(snapshot[s] for s in args)):
                add(App(f, combo), r)
    if depth == 0:
        # constants have depth 1
        for s in by_sort:
            by_sort[s] = [t for t in by_sort[s] if isinstance(t, Var)]
    return by_sort


class _FormulaEnum:
    def __init__(self, sg, lang, budget):
        self.sg, self.lang, self.budget = sg, lang, budget
        self.cache = {}

    def formulas(self, ctx: Context, depth: int) -> list:
        key = (ctx.entries, depth)
        if key in self.cache:
            return self.cache[key]
        b = self.budget
        terms = enumerate_terms(self.sg, ctx, b.term, b)
        out = []
        for R, args in self.sg.relations:
            if not _keep(b.relations, R):
                continue
            for combo in itertools.product(*(terms[s] for s in args)):
                out.append(Rel(R, combo))
        for s in sorted(self.sg.sorts):
            for m in terms[s]:
                for n in terms[s]:
                    out.append(Eq(s, m, n))
        for op, ar in self.lang.connectives:
            if ar == 0 and _keep(b.connectives, op):
                out.append(Conn(op))
        if depth > 0:
            prev = self.formulas(ctx, depth - 1)
            seen = set(out)
            for op, ar in self.lang.connectives:
                if ar == 0 or not _keep(b.connectives, op):
                    continue
                for combo in itertools.product(prev, repeat=ar):
                    phi = Conn(op, combo)
                    if phi not in seen:
                        seen.add(phi)
                        out.append(phi)
            x = f"x{len(ctx) + 1}"
            while x in ctx:
                x += "'"
            for q in self.lang.quantifiers:
                if not _keep(b.quantifiers, q):
                    continue
                for s in sorted(self.sg.sorts):
                    if not _keep(b.sorts, s):
                        continue
                    for body in self.formulas(ctx.extend(x, s), depth - 1):
                        phi = Quant(q, x, s, body)
                        if phi not in seen:
                            seen.add(phi)
                            out.append(phi)
        self.cache[key] = out
        return out


def enumerate_contexts(sg: Signature, budget: Budget):
    sorts = [s for s in sorted(sg.sorts) if _keep(budget.sorts, s)]
    for n in range(budget.ctx + 1):
        for combo in itertools.product(sorts, repeat=n):
            yield Context((f"x{i + 1}", s) for i, s in enumerate(combo))


def enumerate_assertions(sg: Signature, lang, budget: Budget):
    """Every well-formed assertion within ``budget``, deterministically ordered."""
    fe = _FormulaEnum(sg, lang, budget)
    for ctx in enumerate_contexts(sg, budget):
        if budget.equations:
            terms = enumerate_terms(sg, ctx, budget.term, budget)
            for s in sorted(sg.sorts):
                for m in terms[s]:
                    for n in terms[s]:
                        yield Equation(ctx, m, n, s)
        if budget.sequents:
            fs = fe.formulas(ctx, budget.fml)
            for k in range(budget.ante + 1):
                for hyps in itertools.product(fs, repeat=k):
                    for c in fs:
                        yield Sequent(ctx, hyps, c)


def theory_of(S: Structure, budget: Budget = Budget()) -> list:
    """The satisfied assertions within ``budget`` (a truncation of Th(S))."""
    return [a for a in enumerate_assertions(S.signature, S.language, budget) if satisfies(S, a).verdict]
