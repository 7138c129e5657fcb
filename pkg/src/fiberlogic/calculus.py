"""Proof objects for equational logic, the L^m rules and the adjoint rules.

Reversible rules come as two one-way rules.  A proof is a tree of
:class:`ProofNode`; :func:`check_proof` validates it against a theory and a
set of enabled rules, :func:`derive_bounded` searches for one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .syntax import (
    TENSOR,
    UNIT,
    App,
    Conn,
    Context,
    Eq,
    Equation,
    Quant,
    Sequent,
    Theory,
    Var,
    WellFormednessError,
    alpha_eq,
    alpha_key,
    fresh_name,
    free_vars,
    subformulas,
    substitute,
    subterms,
    wf_assertion,
    wf_formula,
    wf_term,
)

FORALL = "forall"
EXISTS = "exists"

EQUATIONAL = frozenset({"Refl", "Sym", "Trans", "EqSubst"})
LM = frozenset({"Ax", "Cut", "Cwk", "Sub", "Ω-Con", "◇-Cong", "⊗-Ref-intro", "⊗-Ref-elim",
                "e-Ref-intro", "e-Ref-elim"})
ADJOINT = frozenset({"=-Adj-fwd", "=-Adj-bwd", "∀-Adj-fwd", "∀-Adj-bwd", "∃-Adj-fwd", "∃-Adj-bwd"})
AXIOM = "Axiom"
ALL_RULES = EQUATIONAL | LM | ADJOINT | {AXIOM}
BASE_RULES = EQUATIONAL | LM | {AXIOM}

ALIASES = {
    "Omega-Con": "Ω-Con", "Diamond-Cong": "◇-Cong", "Tensor-Ref-intro": "⊗-Ref-intro",
    "Tensor-Ref-elim": "⊗-Ref-elim", "Eq-Adj-fwd": "=-Adj-fwd", "Eq-Adj-bwd": "=-Adj-bwd",
    "Forall-Adj-fwd": "∀-Adj-fwd", "Forall-Adj-bwd": "∀-Adj-bwd", "Exists-Adj-fwd": "∃-Adj-fwd",
    "Exists-Adj-bwd": "∃-Adj-bwd",
}


def rule_name(name: str) -> str:
    name = ALIASES.get(name, name)
    if name not in ALL_RULES:
        raise ValueError(f"unknown rule {name}")
    return name


@dataclass(frozen=True)
class ProofNode:
    rule: str
    concl: object
    premises: tuple = ()
    params: tuple = ()  # sorted (key, value) pairs: "var" for Sub/EqSubst, "pos" for Ref rules

    def __init__(self, rule, concl, premises=(), params=None):
        object.__setattr__(self, "rule", rule_name(rule))
        object.__setattr__(self, "concl", concl)
        object.__setattr__(self, "premises", tuple(premises))
        object.__setattr__(self, "params", tuple(sorted(dict(params or {}).items())))

    def param(self, key, default=None):
        return dict(self.params).get(key, default)

    def height(self) -> int:
        return 1 + max((p.height() for p in self.premises), default=0)

    def size(self) -> int:
        return 1 + sum(p.size() for p in self.premises)

    def axioms_used(self) -> list:
        out = [self.concl] if self.rule == AXIOM else []
        for p in self.premises:
            out.extend(p.axioms_used())
        return out


class ProofError(ValueError):
    def __init__(self, message, path=(), condition=""):
        where = "root" if not path else "root." + ".".join(map(str, path))
        super().__init__(f"at {where}: {message}")
        self.path = tuple(path)
        self.condition = condition


# ------------------------------------------------------------------- checking


def check_proof(T: Theory, enabled, p: ProofNode):
    """Return the root conclusion if ``p`` is a valid proof, else raise ProofError."""
    enabled = frozenset(rule_name(r) for r in enabled)
    return _check(T, enabled, p, ())


def _check(T, enabled, node, path):
    if node.rule not in enabled:
        raise ProofError(f"rule {node.rule} is not enabled", path, "disabled-rule")
    try:
        wf_assertion(T.signature, T.language, node.concl)
    except WellFormednessError as exc:
        raise ProofError(f"conclusion not well formed: {exc}", path, "well-formed") from None
    concls = [_check(T, enabled, q, path + (i,)) for i, q in enumerate(node.premises)]
    _RULES[node.rule](T, node, concls, lambda msg, cond="instance": _fail(msg, path, cond))
    return node.concl


def _fail(msg, path, cond):
    raise ProofError(msg, path, cond)


def _need(cond, fail, msg, tag="instance"):
    if not cond:
        fail(msg, tag)


def _arity(fail, prem, n):
    _need(len(prem) == n, fail, f"expected {n} premise(s), got {len(prem)}", "premises")


def _is_seq(a):
    return isinstance(a, Sequent)


def _is_eqn(a):
    return isinstance(a, Equation)


def _same_fs(xs, ys):
    return len(xs) == len(ys) and all(alpha_eq(a, b) for a, b in zip(xs, ys))


def _r_axiom(T, node, prem, fail):
    _arity(fail, prem, 0)
    _need(T.contains(node.concl), fail, "assertion is not an axiom of the theory", "axiom")


def _r_ax(T, node, prem, fail):
    _arity(fail, prem, 0)
    c = node.concl
    _need(_is_seq(c) and len(c.hyps) == 1 and alpha_eq(c.hyps[0], c.concl), fail,
          "Ax needs a sequent of the form φ ⊢ φ")


def _r_refl(T, node, prem, fail):
    _arity(fail, prem, 0)
    c = node.concl
    _need(_is_eqn(c) and c.lhs == c.rhs, fail, "Refl needs M = M")


def _r_sym(T, node, prem, fail):
    _arity(fail, prem, 1)
    p, c = prem[0], node.concl
    _need(_is_eqn(p) and _is_eqn(c), fail, "Sym relates equations")
    _need(p.ctx == c.ctx and p.sort == c.sort, fail, "context or sort disagree", "context")
    _need(c.lhs == p.rhs and c.rhs == p.lhs, fail, "Sym conclusion must swap the premise")


def _r_trans(T, node, prem, fail):
    _arity(fail, prem, 2)
    p, q, c = prem[0], prem[1], node.concl
    _need(all(map(_is_eqn, (p, q, c))), fail, "Trans relates equations")
    _need(p.ctx == q.ctx == c.ctx and p.sort == q.sort == c.sort, fail, "context or sort disagree", "context")
    _need(p.rhs == q.lhs, fail, "middle terms differ")
    _need(c.lhs == p.lhs and c.rhs == q.rhs, fail, "Trans conclusion mismatch")


def _subst_premises(node, prem, fail, rule):
    """Shared side conditions of EqSubst and Sub; returns (eq premise, other, x, target ctx)."""
    _arity(fail, prem, 2)
    e, other = prem
    _need(_is_eqn(e), fail, f"{rule}: first premise must be an equation")
    x = node.param("var")
    _need(x is not None, fail, f"{rule} needs the substituted variable", "instantiation")
    _need(x in other.ctx, fail, f"{rule}: variable {x} not in the premise context", "context")
    _need(other.ctx.sort_of(x) == e.sort, fail, f"{rule}: sort of {x} differs from the equation's sort", "sort")
    target = other.ctx.remove(x)
    _need(node.concl.ctx == target, fail, f"{rule}: conclusion context must be {target!r}", "context")
    _need(set(e.ctx.entries) <= set(target.entries), fail,
          f"{rule}: side condition VS(Δ) ⊆ VS(Γ,Γ′) fails for Δ={e.ctx!r}", "VS(Δ) ⊆ VS(Γ,Γ′)")
    return e, other, x


def _r_eqsubst(T, node, prem, fail):
    e, other, x = _subst_premises(node, prem, fail, "EqSubst")
    c = node.concl
    _need(_is_eqn(other) and _is_eqn(c) and other.sort == c.sort, fail, "EqSubst relates equations")
    _need(c.lhs == substitute(other.lhs, {x: e.lhs}) and c.rhs == substitute(other.rhs, {x: e.rhs}), fail,
          "EqSubst conclusion mismatch")


def _r_sub(T, node, prem, fail):
    e, other, x = _subst_premises(node, prem, fail, "Sub")
    c = node.concl
    _need(_is_seq(other) and _is_seq(c), fail, "Sub needs a sequent premise")
    hyps = [substitute(h, {x: e.lhs}) for h in other.hyps]
    _need(_same_fs(hyps, c.hyps), fail, "Sub: antecedents must be Φ[M/x]")
    _need(alpha_eq(substitute(other.concl, {x: e.rhs}), c.concl), fail, "Sub: consequent must be ψ[M′/x]")


def _r_cut(T, node, prem, fail):
    _arity(fail, prem, 2)
    p, q, c = prem[0], prem[1], node.concl
    _need(all(map(_is_seq, (p, q, c))), fail, "Cut relates sequents")
    _need(p.ctx == q.ctx == c.ctx, fail, "Cut contexts disagree", "context")
    _need(len(p.hyps) == len(q.hyps) == len(c.hyps) == 1, fail, "Cut takes single antecedents")
    _need(alpha_eq(p.concl, q.hyps[0]), fail, "cut formulas differ")
    _need(alpha_eq(c.hyps[0], p.hyps[0]) and alpha_eq(c.concl, q.concl), fail, "Cut conclusion mismatch")


def _r_cwk(T, node, prem, fail):
    _arity(fail, prem, 1)
    p, c = prem[0], node.concl
    _need(_is_seq(p) and _is_seq(c), fail, "Cwk relates sequents")
    _need(len(c.ctx) == len(p.ctx) + 1 and c.ctx.entries[:-1] == p.ctx.entries, fail,
          "Cwk appends exactly one variable to the context", "context")
    _need(_same_fs(p.hyps, c.hyps) and alpha_eq(p.concl, c.concl), fail, "Cwk must not change the sequent")


def _r_omega(T, node, prem, fail):
    _arity(fail, prem, 2)
    p, q, c = prem[0], prem[1], node.concl
    _need(all(map(_is_seq, (p, q, c))), fail, "Ω-Con relates sequents")
    _need(len(p.hyps) == len(q.hyps) == len(c.hyps) == 1, fail, "Ω-Con takes single antecedents")
    _need(p.ctx == q.ctx and len(p.ctx) == len(c.ctx) + 1 and p.ctx.entries[:-1] == c.ctx.entries, fail,
          "premise context must be the conclusion context plus the bound variable", "context")
    x, s = p.ctx.entries[-1]
    phi, psi = p.hyps[0], p.concl
    _need(alpha_eq(q.hyps[0], psi) and alpha_eq(q.concl, phi), fail, "Ω-Con premises must be converse")
    h = c.hyps[0]
    _need(isinstance(h, Quant) and isinstance(c.concl, Quant) and h.q == c.concl.q, fail,
          "Ω-Con conclusion must quantify both sides with the same quantifier")
    q_ = h.q
    _need(alpha_eq(h, Quant(q_, x, s, phi)) and alpha_eq(c.concl, Quant(q_, x, s, psi)), fail,
          "Ω-Con conclusion mismatch")


def _r_cong(T, node, prem, fail):
    c = node.concl
    _need(_is_seq(c) and len(c.hyps) == 1, fail, "◇-Cong takes a single antecedent")
    l, r = c.hyps[0], c.concl
    _need(isinstance(l, Conn) and isinstance(r, Conn) and l.op == r.op, fail,
          "◇-Cong relates two applications of the same connective")
    n = len(l.args)
    _arity(fail, prem, 2 * n)
    for i in range(n):
        a, b = prem[2 * i], prem[2 * i + 1]
        _need(_is_seq(a) and _is_seq(b) and a.ctx == b.ctx == c.ctx, fail, "◇-Cong premise context", "context")
        _need(len(a.hyps) == len(b.hyps) == 1, fail, "◇-Cong premises take single antecedents")
        _need(alpha_eq(a.hyps[0], l.args[i]) and alpha_eq(a.concl, r.args[i]) and
              alpha_eq(b.hyps[0], r.args[i]) and alpha_eq(b.concl, l.args[i]), fail,
              f"◇-Cong premises {2 * i}, {2 * i + 1} must relate argument {i} both ways")


def _seq_pair(prem, c, fail, rule):
    _arity(fail, prem, 1)
    p = prem[0]
    _need(_is_seq(p) and _is_seq(c), fail, f"{rule} relates sequents")
    _need(p.ctx == c.ctx, fail, f"{rule} keeps the context", "context")
    _need(alpha_eq(p.concl, c.concl), fail, f"{rule} keeps the consequent")
    return p


def _tensor_split(long, short, i, fail, rule):
    _need(0 <= i < len(short) and len(long) == len(short) + 1, fail, f"{rule}: bad position {i}")
    t = short[i]
    _need(isinstance(t, Conn) and t.op == TENSOR, fail, f"{rule}: position {i} is not a tensor")
    _need(_same_fs(long[:i], short[:i]) and _same_fs(long[i + 2:], short[i + 1:]), fail,
          f"{rule}: surrounding antecedents differ")
    _need(alpha_eq(long[i], t.args[0]) and alpha_eq(long[i + 1], t.args[1]), fail,
          f"{rule}: tensor factors differ")


def _r_tensor_intro(T, node, prem, fail):
    p = _seq_pair(prem, node.concl, fail, "⊗-Ref-intro")
    _tensor_split(p.hyps, node.concl.hyps, node.param("pos", 0), fail, "⊗-Ref-intro")


def _r_tensor_elim(T, node, prem, fail):
    p = _seq_pair(prem, node.concl, fail, "⊗-Ref-elim")
    _tensor_split(node.concl.hyps, p.hyps, node.param("pos", 0), fail, "⊗-Ref-elim")


def _unit_split(long, short, i, fail, rule):
    _need(0 <= i < len(long) and len(long) == len(short) + 1, fail, f"{rule}: bad position {i}")
    _need(long[i] == Conn(UNIT), fail, f"{rule}: position {i} is not e")
    _need(_same_fs(long[:i] + long[i + 1:], short), fail, f"{rule}: other antecedents differ")


def _r_unit_intro(T, node, prem, fail):
    p = _seq_pair(prem, node.concl, fail, "e-Ref-intro")
    _unit_split(node.concl.hyps, p.hyps, node.param("pos", 0), fail, "e-Ref-intro")


def _r_unit_elim(T, node, prem, fail):
    p = _seq_pair(prem, node.concl, fail, "e-Ref-elim")
    _unit_split(p.hyps, node.concl.hyps, node.param("pos", 0), fail, "e-Ref-elim")


def _eq_adj(short, long, fail, rule):
    """short: Φ ⊢ ψ[x/x′] [Γ,x:σ]; long: Φ, x =_σ x′ ⊢ ψ [Γ,x:σ,x′:σ]."""
    _need(_is_seq(short) and _is_seq(long), fail, f"{rule} relates sequents")
    _need(len(long.ctx) == len(short.ctx) + 1 and long.ctx.entries[:-1] == short.ctx.entries
          and len(short.ctx) >= 1, fail, f"{rule}: contexts must be [Γ,x:σ] and [Γ,x:σ,x′:σ]", "context")
    x, s = short.ctx.entries[-1]
    x2, s2 = long.ctx.entries[-1]
    _need(s == s2, fail, f"{rule}: x and x′ must share a sort", "sort")
    _need(len(long.hyps) == len(short.hyps) + 1, fail, f"{rule}: antecedent count")
    _need(_same_fs(short.hyps, long.hyps[:-1]), fail, f"{rule}: antecedents Φ differ")
    _need(long.hyps[-1] == Eq(s, Var(x), Var(x2)), fail, f"{rule}: last antecedent must be {x} = {x2}")
    _need(alpha_eq(short.concl, substitute(long.concl, {x2: Var(x)})), fail, f"{rule}: consequent must be ψ[x/x′]")


def _r_eqadj_fwd(T, node, prem, fail):
    _arity(fail, prem, 1)
    _eq_adj(prem[0], node.concl, fail, "=-Adj-fwd")


def _r_eqadj_bwd(T, node, prem, fail):
    _arity(fail, prem, 1)
    _eq_adj(node.concl, prem[0], fail, "=-Adj-bwd")


def _quant_adj(inner, outer, q, fail, rule, last_hyp):
    """inner in [Γ,x:σ]; outer in [Γ] with the quantified formula."""
    _need(_is_seq(inner) and _is_seq(outer), fail, f"{rule} relates sequents")
    _need(len(inner.ctx) == len(outer.ctx) + 1 and inner.ctx.entries[:-1] == outer.ctx.entries, fail,
          f"{rule}: contexts must be [Γ,x:σ] and [Γ]", "context")
    x, s = inner.ctx.entries[-1]
    if last_hyp:
        _need(len(inner.hyps) == len(outer.hyps) >= 1, fail, f"{rule}: antecedent count")
        rest_i, rest_o = inner.hyps[:-1], outer.hyps[:-1]
        _need(alpha_eq(inner.concl, outer.concl), fail, f"{rule}: consequents differ")
        body, quantified = inner.hyps[-1], outer.hyps[-1]
        others = list(rest_i) + [inner.concl]
    else:
        _need(len(inner.hyps) == len(outer.hyps), fail, f"{rule}: antecedent count")
        rest_i, rest_o = inner.hyps, outer.hyps
        body, quantified = inner.concl, outer.concl
        others = list(rest_i)
    _need(_same_fs(rest_i, rest_o), fail, f"{rule}: side formulas differ")
    _need(all(x not in free_vars(f) for f in others), fail,
          f"{rule}: side formulas must not mention {x}", "variable condition")
    _need(isinstance(quantified, Quant) and quantified.q == q, fail, f"{rule}: expected a {q} formula")
    _need(alpha_eq(quantified, Quant(q, x, s, body)), fail, f"{rule}: quantified formula mismatch")


def _r_all_fwd(T, node, prem, fail):
    _arity(fail, prem, 1)
    _quant_adj(prem[0], node.concl, FORALL, fail, "∀-Adj-fwd", False)


def _r_all_bwd(T, node, prem, fail):
    _arity(fail, prem, 1)
    _quant_adj(node.concl, prem[0], FORALL, fail, "∀-Adj-bwd", False)


def _r_ex_fwd(T, node, prem, fail):
    _arity(fail, prem, 1)
    _quant_adj(prem[0], node.concl, EXISTS, fail, "∃-Adj-fwd", True)


def _r_ex_bwd(T, node, prem, fail):
    _arity(fail, prem, 1)
    _quant_adj(node.concl, prem[0], EXISTS, fail, "∃-Adj-bwd", True)


_RULES = {
    AXIOM: _r_axiom, "Ax": _r_ax, "Refl": _r_refl, "Sym": _r_sym, "Trans": _r_trans,
    "EqSubst": _r_eqsubst, "Sub": _r_sub, "Cut": _r_cut, "Cwk": _r_cwk, "Ω-Con": _r_omega,
    "◇-Cong": _r_cong, "⊗-Ref-intro": _r_tensor_intro, "⊗-Ref-elim": _r_tensor_elim,
    "e-Ref-intro": _r_unit_intro, "e-Ref-elim": _r_unit_elim, "=-Adj-fwd": _r_eqadj_fwd,
    "=-Adj-bwd": _r_eqadj_bwd, "∀-Adj-fwd": _r_all_fwd, "∀-Adj-bwd": _r_all_bwd,
    "∃-Adj-fwd": _r_ex_fwd, "∃-Adj-bwd": _r_ex_bwd,
}


# --------------------------------------------------------------------- search


@dataclass
class Universe:
    terms: list = field(default_factory=list)
    formulas: list = field(default_factory=list)


def build_universe(T: Theory, goal) -> Universe:
    """Subterms and subformulas of T and the goal; terms closed once under the
    function symbols."""
    terms, formulas = {}, {}
    items = list(T.assertions) + [goal]
    for a in items:
        for v, _ in a.ctx:
            terms.setdefault(Var(v), None)
        if isinstance(a, Equation):
            for t in (a.lhs, a.rhs):
                for s in subterms(t):
                    terms.setdefault(s, None)
        else:
            for phi in (*a.hyps, a.concl):
                for s in subterms(phi):
                    terms.setdefault(s, None)
                for f in subformulas(phi):
                    formulas.setdefault(f, None)
    base = list(terms)
    import itertools

    for f, args, _ in T.signature.functions:
        for combo in itertools.product(base, repeat=len(args)):
            terms.setdefault(App(f, combo), None)
    return Universe(list(terms), list(formulas))


class _Search:
    def __init__(self, T, enabled, universe):
        self.T = T
        self.enabled = enabled
        self.u = universe
        self.failed = set()
        self.axioms = {alpha_key(a): a for a in T.assertions}

    def terms_in(self, ctx, sort):
        out = []
        for t in self.u.terms:
            try:
                if wf_term(self.T.signature, ctx, t) == sort:
                    out.append(t)
            except WellFormednessError:
                pass
        return out

    def formulas_in(self, ctx):
        out = []
        for f in self.u.formulas:
            try:
                wf_formula(self.T.signature, self.T.language, ctx, f)
                out.append(f)
            except WellFormednessError:
                pass
        return out

    def prove(self, goal, d):
        key = (alpha_key(goal), d)
        if d <= 0 or key in self.failed:
            return None
        for rule, params, subgoals in self.candidates(goal):
            if rule not in self.enabled:
                continue
            subs = []
            for g in subgoals:
                p = self.prove(g, d - 1)
                if p is None:
                    break
                subs.append(p)
            else:
                return ProofNode(rule, goal, subs, params)
        self.failed.add(key)
        return None

    # candidate backward steps, cheapest first
    def candidates(self, g):
        if alpha_key(g) in self.axioms:
            yield AXIOM, None, []
        if isinstance(g, Equation):
            yield from self.eq_candidates(g)
        else:
            yield from self.seq_candidates(g)

    def eq_candidates(self, g):
        if g.lhs == g.rhs:
            yield "Refl", None, []
        yield "Sym", None, [Equation(g.ctx, g.rhs, g.lhs, g.sort)]
        for k in self.terms_in(g.ctx, g.sort):
            if k != g.lhs and k != g.rhs:
                yield "Trans", None, [Equation(g.ctx, g.lhs, k, g.sort), Equation(g.ctx, k, g.rhs, g.sort)]
        for ax in self.axioms.values():
            if isinstance(ax, Equation) and ax.sort == g.sort:
                for x, s in ax.ctx:
                    if ax.ctx.remove(x) != g.ctx:
                        continue
                    for e in self.instances(g.ctx, s):
                        if (substitute(ax.lhs, {x: e.lhs}) == g.lhs
                                and substitute(ax.rhs, {x: e.rhs}) == g.rhs):
                            yield "EqSubst", {"var": x}, [e, ax]

    def instances(self, ctx, sort):
        """Equations M = M′ usable as the first premise of a substitution."""
        for m in self.terms_in(ctx, sort):
            yield Equation(ctx, m, m, sort)
        for ax in self.axioms.values():
            if isinstance(ax, Equation) and ax.sort == sort and set(ax.ctx.entries) <= set(ctx.entries):
                yield ax

    def seq_candidates(self, g):
        hyps, c, ctx = g.hyps, g.concl, g.ctx
        if len(hyps) == 1 and alpha_eq(hyps[0], c):
            yield "Ax", None, []
        if len(ctx):
            x, s = ctx.entries[-1]
            short = Context(ctx.entries[:-1])
            mentions = any(x in free_vars(f) for f in (*hyps, c))
            if not mentions:
                yield "Cwk", None, [Sequent(short, hyps, c)]
        # reflection rules
        for i, h in enumerate(hyps):
            if isinstance(h, Conn) and h.op == TENSOR:
                yield "⊗-Ref-intro", {"pos": i}, [Sequent(ctx, hyps[:i] + h.args + hyps[i + 1:], c)]
            if h == Conn(UNIT):
                yield "e-Ref-intro", {"pos": i}, [Sequent(ctx, hyps[:i] + hyps[i + 1:], c)]
        # congruence rules
        if len(hyps) == 1:
            h = hyps[0]
            if isinstance(h, Conn) and isinstance(c, Conn) and h.op == c.op and h.args:
                subs = []
                for a, b in zip(h.args, c.args):
                    subs += [Sequent(ctx, (a,), b), Sequent(ctx, (b,), a)]
                yield "◇-Cong", None, subs
            if isinstance(h, Quant) and isinstance(c, Quant) and h.q == c.q and h.sort == c.sort:
                z = fresh_name("z", set(ctx.vars) | free_vars(h) | free_vars(c))
                a = substitute(h.body, {h.var: Var(z)})
                b = substitute(c.body, {c.var: Var(z)})
                ext = ctx.extend(z, h.sort)
                yield "Ω-Con", None, [Sequent(ext, (a,), b), Sequent(ext, (b,), a)]
        # adjoint rules
        if isinstance(c, Quant) and c.q == FORALL:
            z = fresh_name(c.var, set(ctx.vars) | set().union(set(), *(free_vars(f) for f in hyps)))
            yield "∀-Adj-fwd", None, [Sequent(ctx.extend(z, c.sort), hyps, substitute(c.body, {c.var: Var(z)}))]
        if hyps and isinstance(hyps[-1], Quant) and hyps[-1].q == EXISTS:
            q = hyps[-1]
            avoid = set(ctx.vars) | free_vars(c) | set().union(set(), *(free_vars(f) for f in hyps))
            z = fresh_name(q.var, avoid)
            yield "∃-Adj-fwd", None, [Sequent(ctx.extend(z, q.sort), hyps[:-1] + (substitute(q.body, {q.var: Var(z)}),), c)]
        if len(ctx) >= 2 and hyps:
            (x, s), (x2, s2) = ctx.entries[-2], ctx.entries[-1]
            if s == s2 and hyps[-1] == Eq(s, Var(x), Var(x2)) and all(x2 not in free_vars(f) for f in hyps[:-1]):
                yield "=-Adj-fwd", None, [Sequent(Context(ctx.entries[:-1]), hyps[:-1],
                                                  substitute(c, {x2: Var(x)}))]
        if len(ctx):
            y, s = ctx.entries[-1]
            short = Context(ctx.entries[:-1])
            if all(y not in free_vars(f) for f in hyps):
                yield "∀-Adj-bwd", None, [Sequent(short, hyps, Quant(FORALL, y, s, c))]
            if hyps and all(y not in free_vars(f) for f in (*hyps[:-1], c)):
                yield "∃-Adj-bwd", None, [Sequent(short, hyps[:-1] + (Quant(EXISTS, y, s, hyps[-1]),), c)]
        # substitution into axioms
        for ax in self.axioms.values():
            if not isinstance(ax, Sequent) or len(ax.hyps) != len(hyps):
                continue
            for x, s in ax.ctx:
                if ax.ctx.remove(x) != ctx:
                    continue
                for e in self.instances(ctx, s):
                    if (_same_fs([substitute(h, {x: e.lhs}) for h in ax.hyps], hyps)
                            and alpha_eq(substitute(ax.concl, {x: e.rhs}), c)):
                        yield "Sub", {"var": x}, [e, ax]
        # cut and unit/tensor elimination (these grow the search most)
        if len(hyps) == 1:
            for m in self.formulas_in(ctx):
                if not alpha_eq(m, hyps[0]) and not alpha_eq(m, c):
                    yield "Cut", None, [Sequent(ctx, hyps, m), Sequent(ctx, (m,), c)]
        for i in range(len(hyps) - 1):
            yield "⊗-Ref-elim", {"pos": i}, [Sequent(ctx, hyps[:i] + (Conn(TENSOR, hyps[i:i + 2]),) + hyps[i + 2:], c)]
        for i in range(len(hyps) + 1):
            yield "e-Ref-elim", {"pos": i}, [Sequent(ctx, hyps[:i] + (Conn(UNIT),) + hyps[i:], c)]


def derive_bounded(T: Theory, enabled, goal, depth: int, universe: Optional[Universe] = None):
    """Search for a proof of ``goal`` of height at most ``depth``.

    Returns a ProofNode or None.  Iterative deepening gives the shortest
    proof within the enumeration, and search order is deterministic.
    """
    enabled = frozenset(rule_name(r) for r in enabled)
    wf_assertion(T.signature, T.language, goal)
    s = _Search(T, enabled, universe or build_universe(T, goal))
    for d in range(1, depth + 1):
        p = s.prove(goal, d)
        if p is not None:
            check_proof(T, enabled, p)
            return p
    return None
