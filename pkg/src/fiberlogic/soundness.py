"""Randomized soundness sweep for the proof rules.

Each trial draws a host, a random structure over a small fixed signature and a
random instance of a rule. The instance is validated with the proof checker
(premises become axioms), then evaluated: whenever all premises hold, the
conclusion must hold too.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .calculus import ADJOINT, AXIOM, EQUATIONAL, EXISTS, FORALL, LM, ProofNode, check_proof
from .semantics import Structure, holds
from .syntax import (
    UNIT,
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
    substitute,
    tensor,
)

SORT = "s"
SWEEP_SIGNATURE = Signature(
    {SORT},
    {"f": ((SORT,), SORT), "g": ((SORT, SORT), SORT), "c": ((), SORT)},
    {"R": (SORT,), "Q": (SORT, SORT)},
)


class Gen:
    """Random terms and formulas over :data:`SWEEP_SIGNATURE`."""

    def __init__(self, rng: random.Random, language, max_vars: int):
        self.rng = rng
        self.language = language
        self.max_vars = max_vars
        self.conns = [(op, ar) for op, ar in language.connectives]
        self.quants = [q for q in language.quantifiers]

    def term(self, ctx: Context, depth=2):
        rng = self.rng
        vs = list(ctx.vars)
        if depth == 0 or rng.random() < 0.45:
            if vs and rng.random() < 0.85:
                return Var(rng.choice(vs))
            return App("c")
        k = rng.randrange(3)
        if k == 0:
            return App("f", (self.term(ctx, depth - 1),))
        if k == 1:
            return App("g", (self.term(ctx, depth - 1), self.term(ctx, depth - 1)))
        return App("c")

    def atom(self, ctx: Context):
        rng = self.rng
        k = rng.randrange(4)
        if k == 0:
            return Rel("R", (self.term(ctx, 1),))
        if k == 1:
            return Rel("Q", (self.term(ctx, 1), self.term(ctx, 1)))
        if k == 2:
            return Eq(SORT, self.term(ctx, 1), self.term(ctx, 1))
        op = rng.choice([op for op, ar in self.conns if ar == 0])
        return Conn(op)

    def formula(self, ctx: Context, depth=2, cap=None):
        """Bound variables keep the context within ``cap`` (default ``max_vars``)."""
        rng = self.rng
        cap = self.max_vars if cap is None else cap
        if depth == 0 or rng.random() < 0.35:
            return self.atom(ctx)
        if self.quants and len(ctx) < cap and rng.random() < 0.3:
            x = f"y{len(ctx) + 1}"
            while x in ctx:
                x += "'"
            return Quant(rng.choice(self.quants), x, SORT, self.formula(ctx.extend(x, SORT), depth - 1, cap))
        op, ar = rng.choice([c for c in self.conns if c[1] > 0])
        return Conn(op, tuple(self.formula(ctx, depth - 1, cap) for _ in range(ar)))

    def hyps(self, ctx: Context, lo=0, hi=2, cap=None):
        return tuple(self.formula(ctx, cap=cap) for _ in range(self.rng.randint(lo, hi)))

    def context(self, n: int) -> Context:
        return Context((f"x{i + 1}", SORT) for i in range(n))


def random_structure(pc, rng: random.Random, sort_obj) -> Structure:
    C = pc.base
    sg = SWEEP_SIGNATURE
    objs = {SORT: sort_obj}
    funcs, rels = {}, {}
    for f, (args, res) in sg.fn.items():
        dom = C.nprod([objs[a] for a in args])
        hs = C.hom_seq(dom, objs[res])
        funcs[f] = hs[rng.randrange(len(hs))]
    for R, args in sg.rel.items():
        probe = pc.fiber(C.nprod([objs[a] for a in args])).probe
        rels[R] = probe[rng.randrange(len(probe))]
    return Structure(pc, sg, objs, funcs, rels, name="random")


# ----------------------------------------------------------- rule instances


def instance(rule: str, g: Gen):
    """Return (premises, conclusion, params) for a random instance of ``rule``."""
    rng = g.rng
    m = g.max_vars
    if rule == "Refl":
        ctx = g.context(rng.randint(0, m))
        t = g.term(ctx)
        return [], Equation(ctx, t, t, SORT), {}
    if rule == "Sym":
        ctx = g.context(rng.randint(0, m))
        a, b = g.term(ctx), g.term(ctx)
        return [Equation(ctx, a, b, SORT)], Equation(ctx, b, a, SORT), {}
    if rule == "Trans":
        ctx = g.context(rng.randint(0, m))
        a, b, c = g.term(ctx), g.term(ctx), g.term(ctx)
        return [Equation(ctx, a, b, SORT), Equation(ctx, b, c, SORT)], Equation(ctx, a, c, SORT), {}
    if rule in ("EqSubst", "Sub"):
        n = rng.randint(1, m)
        full = g.context(n)
        x = full.vars[rng.randrange(n)]
        target = full.remove(x)
        M, M2 = g.term(target), g.term(target)
        e = Equation(target, M, M2, SORT)
        if rule == "EqSubst":
            a, b = g.term(full), g.term(full)
            other = Equation(full, a, b, SORT)
            concl = Equation(target, substitute(a, {x: M}), substitute(b, {x: M2}), SORT)
        else:
            hs, c = g.hyps(full), g.formula(full)
            other = Sequent(full, hs, c)
            concl = Sequent(target, [substitute(h, {x: M}) for h in hs], substitute(c, {x: M2}))
        return [e, other], concl, {"var": x}
    if rule == "Ax":
        ctx = g.context(rng.randint(0, m))
        phi = g.formula(ctx)
        return [], Sequent(ctx, [phi], phi), {}
    if rule == "Cut":
        ctx = g.context(rng.randint(0, m))
        a, b, c = g.formula(ctx), g.formula(ctx), g.formula(ctx)
        return [Sequent(ctx, [a], b), Sequent(ctx, [b], c)], Sequent(ctx, [a], c), {}
    if rule == "Cwk":
        ctx = g.context(rng.randint(0, m - 1))
        hs, c = g.hyps(ctx, cap=m - 1), g.formula(ctx, cap=m - 1)
        return [Sequent(ctx, hs, c)], Sequent(ctx.extend(f"x{len(ctx) + 1}", SORT), hs, c), {}
    if rule == "Ω-Con":
        ctx = g.context(rng.randint(0, m - 1))
        x = f"x{len(ctx) + 1}"
        ext = ctx.extend(x, SORT)
        a, b = g.formula(ext), g.formula(ext)
        q = rng.choice(g.quants)
        return ([Sequent(ext, [a], b), Sequent(ext, [b], a)],
                Sequent(ctx, [Quant(q, x, SORT, a)], Quant(q, x, SORT, b)), {})
    if rule == "◇-Cong":
        ctx = g.context(rng.randint(0, m))
        op, ar = rng.choice(g.conns)
        ls = [g.formula(ctx) for _ in range(ar)]
        rs = [g.formula(ctx) for _ in range(ar)]
        prem = []
        for a, b in zip(ls, rs):
            prem += [Sequent(ctx, [a], b), Sequent(ctx, [b], a)]
        return prem, Sequent(ctx, [Conn(op, ls)], Conn(op, rs)), {}
    if rule in ("⊗-Ref-intro", "⊗-Ref-elim"):
        ctx = g.context(rng.randint(0, m))
        hs, c = list(g.hyps(ctx, 0, 2)), g.formula(ctx)
        i = rng.randint(0, len(hs))
        a, b = g.formula(ctx), g.formula(ctx)
        long = Sequent(ctx, hs[:i] + [a, b] + hs[i:], c)
        short = Sequent(ctx, hs[:i] + [tensor(a, b)] + hs[i:], c)
        if rule == "⊗-Ref-intro":
            return [long], short, {"pos": i}
        return [short], long, {"pos": i}
    if rule in ("e-Ref-intro", "e-Ref-elim"):
        ctx = g.context(rng.randint(0, m))
        hs, c = list(g.hyps(ctx, 0, 2)), g.formula(ctx)
        i = rng.randint(0, len(hs))
        long = Sequent(ctx, hs[:i] + [Conn(UNIT)] + hs[i:], c)
        short = Sequent(ctx, hs, c)
        if rule == "e-Ref-intro":
            return [short], long, {"pos": i}
        return [long], short, {"pos": i}
    if rule in ("=-Adj-fwd", "=-Adj-bwd"):
        ctx = g.context(rng.randint(1, m - 1))
        x = ctx.vars[-1]
        x2 = f"x{len(ctx) + 1}"
        ext = ctx.extend(x2, SORT)
        hs, psi = g.hyps(ctx, 0, 1, cap=m - 1), g.formula(ext)
        short = Sequent(ctx, hs, substitute(psi, {x2: Var(x)}))
        long = Sequent(ext, hs + (Eq(SORT, Var(x), Var(x2)),), psi)
        return ([short], long, {}) if rule.endswith("fwd") else ([long], short, {})
    if rule in ("∀-Adj-fwd", "∀-Adj-bwd"):
        ctx = g.context(rng.randint(0, m - 1))
        x = f"x{len(ctx) + 1}"
        ext = ctx.extend(x, SORT)
        hs, psi = g.hyps(ctx, 0, 2, cap=m - 1), g.formula(ext)
        inner = Sequent(ext, hs, psi)
        outer = Sequent(ctx, hs, Quant(FORALL, x, SORT, psi))
        return ([inner], outer, {}) if rule.endswith("fwd") else ([outer], inner, {})
    if rule in ("∃-Adj-fwd", "∃-Adj-bwd"):
        ctx = g.context(rng.randint(0, m - 1))
        x = f"x{len(ctx) + 1}"
        ext = ctx.extend(x, SORT)
        hs, phi, chi = g.hyps(ctx, 0, 1, cap=m - 1), g.formula(ext), g.formula(ctx, cap=m - 1)
        inner = Sequent(ext, hs + (phi,), chi)
        outer = Sequent(ctx, hs + (Quant(EXISTS, x, SORT, phi),), chi)
        return ([inner], outer, {}) if rule.endswith("fwd") else ([outer], inner, {})
    raise ValueError(f"no instance generator for {rule}")


# ------------------------------------------------------------------ sweep


@dataclass
class RuleResult:
    rule: str
    trials: int = 0
    nonvacuous: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations


@dataclass
class SoundnessReport:
    results: dict
    seed: int

    @property
    def ok(self):
        return all(r.ok for r in self.results.values())

    def summary(self) -> str:
        lines = [f"soundness sweep (seed {self.seed}): {'ok' if self.ok else 'VIOLATION'}"]
        for r in self.results.values():
            state = "ok" if r.ok else f"{len(r.violations)} violation(s)"
            lines.append(f"  {r.rule:<14} {r.trials:>4} trials  {r.nonvacuous:>4} non-vacuous  {state}")
            for v in r.violations[:3]:
                lines.append(f"    {v}")
        return "\n".join(lines)


def _hosts_entry(h):
    if isinstance(h, tuple):
        return h
    return h, h.base.objects[1] if len(h.base.objects) > 1 else h.base.terminal


def soundness_sweep(hosts, rules, trials=200, seed=0, attempts=6, max_vars=2) -> SoundnessReport:
    """Run ``trials`` instances of every rule, cycling through ``hosts``.

    ``hosts`` holds prop-categories or ``(prop-category, sort object)``
    pairs. For each trial up to ``attempts`` instances are drawn, keeping the
    first whose premises hold (so most trials are non-vacuous).
    """
    hosts = [_hosts_entry(h) for h in hosts]
    results = {}
    for rule in sorted(rules):
        res = RuleResult(rule)
        rng = random.Random(f"{seed}:{rule}")
        for t in range(trials):
            pc, sort_obj = hosts[t % len(hosts)]
            g = Gen(rng, pc.language, max_vars)
            S = random_structure(pc, rng, sort_obj)
            for _ in range(attempts):
                prem, concl, params = instance(rule, g)
                if all(holds(S, p) for p in prem):
                    break
            T = Theory(SWEEP_SIGNATURE, pc.language, prem)
            node = ProofNode(rule, concl, [ProofNode(AXIOM, p) for p in prem], params)
            check_proof(T, {rule, AXIOM}, node)
            res.trials += 1
            if all(holds(S, p) for p in prem):
                res.nonvacuous += 1
                if not holds(S, concl):
                    res.violations.append(f"{pc.describe()}: {concl!r} from {list(prem)!r}")
        results[rule] = res
    return SoundnessReport(results, seed)


def default_hosts():
    """Powerset, Łukasiewicz five-chain and their product, all over a two-element atom."""
    from .propcat import ProductPropCategory, chain, mk_lattice_propcat, mk_powerset_propcat
    from .syntax import Language

    atoms = {"B": (0, 1)}
    P = mk_powerset_propcat(atoms)
    L = mk_lattice_propcat(atoms, chain(5), 2)
    common = Language({op: ar for op, ar in L.language.connectives}, L.language.quantifiers)
    X = ProductPropCategory([P, L], common)
    return [(P, ("B",)), (L, ("B",)), (X, (("B",), ("B",)))]


BASE_SWEEP_RULES = EQUATIONAL | LM
ADJOINT_SWEEP_RULES = ADJOINT

__all__ = [
    "SWEEP_SIGNATURE", "Gen", "random_structure", "instance", "RuleResult", "SoundnessReport",
    "soundness_sweep", "default_hosts", "BASE_SWEEP_RULES", "ADJOINT_SWEEP_RULES",
]
