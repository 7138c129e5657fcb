"""Multi-sorted first-order syntax: signatures, contexts, terms, formulas.

Terms and formulas are immutable dataclasses. Structural ``==`` on them is
plain syntactic equality; use :func:`alpha_eq` or :func:`alpha_key` whenever
bound-variable names should not matter.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Union

UNIT = "e"
TENSOR = "tensor"


class WellFormednessError(ValueError):
    """Raised when a term, formula or assertion fails the typing rules."""

    def __init__(self, message, kind="typing", subject=None):
        super().__init__(message)
        self.kind = kind
        self.subject = subject


# ---------------------------------------------------------------- signatures


@dataclass(frozen=True)
class Signature:
    sorts: frozenset
    functions: tuple = ()  # ((name, (arg sorts), result), ...)
    relations: tuple = ()  # ((name, (arg sorts)), ...)

    def __init__(self, sorts: Iterable[str], functions=None, relations=None):
        functions = dict(functions or {})
        relations = dict(relations or {})
        sorts = frozenset(sorts)
        for name, (args, res) in functions.items():
            for s in (*args, res):
                if s not in sorts:
                    raise WellFormednessError(f"function {name} uses undeclared sort {s}", "unknown-sort", s)
        for name, args in relations.items():
            for s in args:
                if s not in sorts:
                    raise WellFormednessError(f"relation {name} uses undeclared sort {s}", "unknown-sort", s)
        object.__setattr__(self, "sorts", sorts)
        object.__setattr__(
            self, "functions",
            tuple(sorted((n, tuple(a), r) for n, (a, r) in functions.items())))
        object.__setattr__(
            self, "relations", tuple(sorted((n, tuple(a)) for n, a in relations.items())))

    @property
    def fn(self) -> dict:
        return {n: (a, r) for n, a, r in self.functions}

    @property
    def rel(self) -> dict:
        return {n: a for n, a in self.relations}

    def extend(self, sorts=(), functions=None, relations=None) -> "Signature":
        fn = self.fn
        fn.update(functions or {})
        rel = self.rel
        rel.update(relations or {})
        return Signature(self.sorts | set(sorts), fn, rel)


@dataclass(frozen=True)
class Language:
    """Connective alphabet with arities plus quantifier alphabet.

    The unit ``e`` (arity 0) and ``tensor`` (arity 2) are always present.
    """

    connectives: tuple = ()
    quantifiers: tuple = ()

    def __init__(self, connectives: Mapping[str, int] | None = None, quantifiers: Iterable[str] = ()):
        conns = dict(connectives or {})
        for name, ar in ((UNIT, 0), (TENSOR, 2)):
            if conns.setdefault(name, ar) != ar:
                raise WellFormednessError(f"connective {name} must have arity {ar}", "arity", name)
        qs = tuple(sorted(set(quantifiers)))
        clash = set(conns) & set(qs)
        if clash:
            raise WellFormednessError(f"names used as both connective and quantifier: {sorted(clash)}")
        object.__setattr__(self, "connectives", tuple(sorted(conns.items())))
        object.__setattr__(self, "quantifiers", qs)

    @property
    def arity(self) -> dict:
        return dict(self.connectives)


@dataclass(frozen=True)
class Context:
    entries: tuple = ()

    def __init__(self, entries: Iterable = ()):
        entries = tuple((str(v), str(s)) for v, s in entries)
        names = [v for v, _ in entries]
        if len(set(names)) != len(names):
            raise WellFormednessError(f"repeated variable in context {names}", "context")
        object.__setattr__(self, "entries", entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __contains__(self, var):
        return any(v == var for v, _ in self.entries)

    @property
    def vars(self) -> tuple:
        return tuple(v for v, _ in self.entries)

    @property
    def sorts(self) -> tuple:
        return tuple(s for _, s in self.entries)

    def sort_of(self, var):
        for v, s in self.entries:
            if v == var:
                return s
        return None

    def index(self, var) -> int:
        return self.vars.index(var)

    def extend(self, var, sort) -> "Context":
        return Context(self.entries + ((var, sort),))

    def remove(self, var) -> "Context":
        return Context(e for e in self.entries if e[0] != var)

    def __add__(self, other: "Context") -> "Context":
        return Context(self.entries + tuple(other))

    def __repr__(self):
        return "[" + ", ".join(f"{v}:{s}" for v, s in self.entries) + "]"


def check_context(sg: Signature, ctx: Context):
    for v, s in ctx:
        if s not in sg.sorts:
            raise WellFormednessError(f"unknown sort {s} for variable {v}", "unknown-sort", s)


# --------------------------------------------------------------------- terms


@dataclass(frozen=True)
class Var:
    name: str

    def __repr__(self):
        return self.name


@dataclass(frozen=True)
class App:
    fn: str
    args: tuple = ()

    def __init__(self, fn, args=()):
        object.__setattr__(self, "fn", fn)
        object.__setattr__(self, "args", tuple(args))

    def __repr__(self):
        return f"{self.fn}({', '.join(map(repr, self.args))})"


Term = Union[Var, App]


# ------------------------------------------------------------------ formulas


@dataclass(frozen=True)
class Rel:
    rel: str
    args: tuple = ()

    def __init__(self, rel, args=()):
        object.__setattr__(self, "rel", rel)
        object.__setattr__(self, "args", tuple(args))

    def __repr__(self):
        return f"{self.rel}({', '.join(map(repr, self.args))})"


@dataclass(frozen=True)
class Eq:
    sort: str
    lhs: Term
    rhs: Term

    def __repr__(self):
        return f"{self.lhs!r} =_{self.sort} {self.rhs!r}"


@dataclass(frozen=True)
class Conn:
    op: str
    args: tuple = ()

    def __init__(self, op, args=()):
        object.__setattr__(self, "op", op)
        object.__setattr__(self, "args", tuple(args))

    def __repr__(self):
        if not self.args:
            return self.op
        return f"{self.op}({', '.join(map(repr, self.args))})"


@dataclass(frozen=True)
class Quant:
    q: str
    var: str
    sort: str
    body: "Formula"

    def __repr__(self):
        return f"{self.q}_{{{self.var}:{self.sort}}} {self.body!r}"


Formula = Union[Rel, Eq, Conn, Quant]


def unit() -> Conn:
    return Conn(UNIT)


def tensor(a, b) -> Conn:
    return Conn(TENSOR, (a, b))


# ---------------------------------------------------------------- assertions


@dataclass(frozen=True)
class Equation:
    ctx: Context
    lhs: Term
    rhs: Term
    sort: str

    def __repr__(self):
        return f"{self.lhs!r} = {self.rhs!r} : {self.sort} {self.ctx!r}"


@dataclass(frozen=True)
class Sequent:
    ctx: Context
    hyps: tuple
    concl: Formula

    def __init__(self, ctx, hyps, concl):
        object.__setattr__(self, "ctx", ctx if isinstance(ctx, Context) else Context(ctx))
        object.__setattr__(self, "hyps", tuple(hyps))
        object.__setattr__(self, "concl", concl)

    def __repr__(self):
        return f"{', '.join(map(repr, self.hyps))} |- {self.concl!r} {self.ctx!r}"


Assertion = Union[Equation, Sequent]


@dataclass(frozen=True)
class Theory:
    signature: Signature
    language: Language
    assertions: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "assertions", tuple(self.assertions))
        for a in self.assertions:
            wf_assertion(self.signature, self.language, a)

    def contains(self, a: Assertion) -> bool:
        key = alpha_key(a)
        return any(alpha_key(b) == key for b in self.assertions)

    def with_assertions(self, extra) -> "Theory":
        return Theory(self.signature, self.language, self.assertions + tuple(extra))


# ------------------------------------------------------------- well-formedness


def wf_term(sg: Signature, ctx: Context, t: Term) -> str:
    """Return the sort of ``t`` in ``ctx``; argument positions are 1-based."""
    if isinstance(t, Var):
        s = ctx.sort_of(t.name)
        if s is None:
            raise WellFormednessError(f"variable not in context: {t.name}", "unbound-variable", t)
        return s
    if isinstance(t, App):
        sig = sg.fn.get(t.fn)
        if sig is None:
            raise WellFormednessError(f"unknown function symbol {t.fn}", "unknown-symbol", t)
        args, res = sig
        if len(args) != len(t.args):
            raise WellFormednessError(
                f"arity mismatch for {t.fn}: expected {len(args)}, got {len(t.args)}", "arity", t)
        for i, (want, arg) in enumerate(zip(args, t.args), start=1):
            got = wf_term(sg, ctx, arg)
            if got != want:
                err = WellFormednessError(
                    f"sort mismatch at position {i} of {t!r}: expected {want}, got {got}", "sort-mismatch", t)
                err.position = i
                raise err
        return res
    raise WellFormednessError(f"not a term: {t!r}", "syntax", t)


def fresh_name(base: str, avoid) -> str:
    name = base
    while name in avoid:
        name += "'"
    return name


def wf_formula(sg: Signature, lang: Language, ctx: Context, phi: Formula) -> None:
    if isinstance(phi, Rel):
        args = sg.rel.get(phi.rel)
        if args is None:
            raise WellFormednessError(f"unknown relation symbol {phi.rel}", "unknown-symbol", phi)
        if len(args) != len(phi.args):
            raise WellFormednessError(f"arity mismatch for {phi.rel}", "arity", phi)
        for i, (want, arg) in enumerate(zip(args, phi.args), start=1):
            got = wf_term(sg, ctx, arg)
            if got != want:
                raise WellFormednessError(
                    f"sort mismatch at position {i} of {phi!r}: expected {want}, got {got}", "sort-mismatch", phi)
    elif isinstance(phi, Eq):
        if phi.sort not in sg.sorts:
            raise WellFormednessError(f"unknown sort {phi.sort}", "unknown-sort", phi)
        for side in (phi.lhs, phi.rhs):
            got = wf_term(sg, ctx, side)
            if got != phi.sort:
                raise WellFormednessError(
                    f"equality at sort {phi.sort} relates a term of sort {got}", "sort-mismatch", phi)
    elif isinstance(phi, Conn):
        ar = lang.arity.get(phi.op)
        if ar is None:
            raise WellFormednessError(f"unknown connective {phi.op}", "unknown-connective", phi)
        if ar != len(phi.args):
            raise WellFormednessError(
                f"connective {phi.op} has arity {ar}, applied to {len(phi.args)}", "arity", phi)
        for a in phi.args:
            wf_formula(sg, lang, ctx, a)
    elif isinstance(phi, Quant):
        if phi.q not in lang.quantifiers:
            raise WellFormednessError(f"unknown quantifier {phi.q}", "unknown-quantifier", phi)
        if phi.sort not in sg.sorts:
            raise WellFormednessError(f"unknown sort {phi.sort}", "unknown-sort", phi)
        x, body = open_binder(phi, ctx.vars)
        wf_formula(sg, lang, ctx.extend(x, phi.sort), body)
    else:
        raise WellFormednessError(f"not a formula: {phi!r}", "syntax", phi)


def wf_assertion(sg: Signature, lang: Language, a: Assertion) -> None:
    check_context(sg, a.ctx)
    if isinstance(a, Equation):
        for side in (a.lhs, a.rhs):
            got = wf_term(sg, a.ctx, side)
            if got != a.sort:
                raise WellFormednessError(f"equation at sort {a.sort} has side of sort {got}", "sort-mismatch", a)
    elif isinstance(a, Sequent):
        for phi in (*a.hyps, a.concl):
            wf_formula(sg, lang, a.ctx, phi)
    else:
        raise WellFormednessError(f"not an assertion: {a!r}", "syntax", a)


def open_binder(q: Quant, avoid) -> tuple:
    """Return (x, body) with the bound variable renamed away from ``avoid``."""
    if q.var not in avoid:
        return q.var, q.body
    x = fresh_name(q.var, set(avoid) | free_vars(q.body))
    return x, substitute(q.body, {q.var: Var(x)})


# ------------------------------------------------------------- free variables


def free_vars(e) -> set:
    if isinstance(e, Var):
        return {e.name}
    if isinstance(e, (App, Rel)):
        return set().union(*(free_vars(a) for a in e.args)) if e.args else set()
    if isinstance(e, Eq):
        return free_vars(e.lhs) | free_vars(e.rhs)
    if isinstance(e, Conn):
        return set().union(*(free_vars(a) for a in e.args)) if e.args else set()
    if isinstance(e, Quant):
        return free_vars(e.body) - {e.var}
    raise TypeError(f"not a term or formula: {e!r}")


def all_vars(e) -> set:
    """Every variable name occurring anywhere, bound or free."""
    if isinstance(e, Var):
        return {e.name}
    if isinstance(e, Quant):
        return {e.var} | all_vars(e.body)
    if isinstance(e, Eq):
        return all_vars(e.lhs) | all_vars(e.rhs)
    return set().union(set(), *(all_vars(a) for a in e.args))


# --------------------------------------------------------------- substitution


def substitute(e, subst: Mapping[str, Term], *, sg: Signature | None = None,
               source: Context | None = None, target: Context | None = None):
    """Simultaneous capture-avoiding substitution.

    When ``sg``, ``source`` and ``target`` are given the replacement terms are
    typed in ``target`` and checked against the sorts of the replaced variables
    in ``source``.
    """
    if sg is not None and source is not None and target is not None:
        for v, t in subst.items():
            want = source.sort_of(v)
            if want is None:
                raise WellFormednessError(f"variable not in context: {v}", "unbound-variable", v)
            got = wf_term(sg, target, t)
            if got != want:
                raise WellFormednessError(
                    f"sort mismatch substituting for {v}: expected {want}, got {got}", "sort-mismatch", v)
    return _subst(e, dict(subst))


def _subst(e, s):
    if isinstance(e, Var):
        return s.get(e.name, e)
    if isinstance(e, App):
        return App(e.fn, tuple(_subst(a, s) for a in e.args))
    if isinstance(e, Rel):
        return Rel(e.rel, tuple(_subst(a, s) for a in e.args))
    if isinstance(e, Eq):
        return Eq(e.sort, _subst(e.lhs, s), _subst(e.rhs, s))
    if isinstance(e, Conn):
        return Conn(e.op, tuple(_subst(a, s) for a in e.args))
    if isinstance(e, Quant):
        inner = {v: t for v, t in s.items() if v != e.var and v in free_vars(e.body)}
        if not inner:
            return e
        incoming = set().union(*(free_vars(t) for t in inner.values()))
        x = e.var
        if x in incoming:
            x = fresh_name(x, incoming | free_vars(e.body) | set(inner))
            inner[e.var] = Var(x)
        return Quant(e.q, x, e.sort, _subst(e.body, inner))
    raise TypeError(f"not a term or formula: {e!r}")


def substitute_assertion(a: Assertion, subst, ctx: Context) -> Assertion:
    if isinstance(a, Equation):
        return Equation(ctx, _subst(a.lhs, subst), _subst(a.rhs, subst), a.sort)
    return Sequent(ctx, tuple(_subst(h, subst) for h in a.hyps), _subst(a.concl, subst))


def rename_free(e, renaming: Mapping[str, str]):
    return substitute(e, {v: Var(w) for v, w in renaming.items()})


# -------------------------------------------------------------- α-equivalence


def canonical(e, env=()):
    """Locally nameless form: bound variables become binder indices.

    Binders are numbered left to right by depth; free variables keep names.
    """
    if isinstance(e, Var):
        for depth in range(len(env) - 1, -1, -1):
            if env[depth] == e.name:
                return ("b", depth)
        return ("v", e.name)
    if isinstance(e, App):
        return ("f", e.fn, tuple(canonical(a, env) for a in e.args))
    if isinstance(e, Rel):
        return ("R", e.rel, tuple(canonical(a, env) for a in e.args))
    if isinstance(e, Eq):
        return ("=", e.sort, canonical(e.lhs, env), canonical(e.rhs, env))
    if isinstance(e, Conn):
        return ("c", e.op, tuple(canonical(a, env) for a in e.args))
    if isinstance(e, Quant):
        return ("q", e.q, e.sort, canonical(e.body, env + (e.var,)))
    raise TypeError(f"not a term or formula: {e!r}")


def alpha_eq(a, b) -> bool:
    return canonical(a) == canonical(b)


def alpha_key(a):
    """Hashable key identifying an assertion, formula or term up to α."""
    if isinstance(a, Equation):
        return ("eqn", a.ctx.entries, canonical(a.lhs), canonical(a.rhs), a.sort)
    if isinstance(a, Sequent):
        return ("seq", a.ctx.entries, tuple(canonical(h) for h in a.hyps), canonical(a.concl))
    return canonical(a)


def assertion_alpha_eq(a: Assertion, b: Assertion) -> bool:
    return alpha_key(a) == alpha_key(b)


def equal_up_to_free_renaming(a, b) -> bool:
    """True if some bijective renaming of free variables makes ``a`` α-equal to ``b``."""
    fa, fb = sorted(free_vars(a)), sorted(free_vars(b))
    if len(fa) != len(fb):
        return False
    from itertools import permutations

    for perm in permutations(fb):
        tmp = {v: f"\0{i}" for i, v in enumerate(fa)}
        back = {f"\0{i}": w for i, w in enumerate(perm)}
        if alpha_eq(rename_free(rename_free(a, tmp), back), b):
            return True
    return False


# ---------------------------------------------------------------------- misc


def subterms(e) -> list:
    """All subterms occurring in a term or formula (free and bound occurrences)."""
    out = []

    def go(x):
        if isinstance(x, Var):
            out.append(x)
        elif isinstance(x, App):
            out.append(x)
            for a in x.args:
                go(a)
        elif isinstance(x, Rel):
            for a in x.args:
                go(a)
        elif isinstance(x, Eq):
            go(x.lhs)
            go(x.rhs)
        elif isinstance(x, Conn):
            for a in x.args:
                go(a)
        elif isinstance(x, Quant):
            go(x.body)

    go(e)
    return out


def subformulas(phi) -> list:
    out = [phi]
    if isinstance(phi, Conn):
        for a in phi.args:
            out.extend(subformulas(a))
    elif isinstance(phi, Quant):
        out.extend(subformulas(phi.body))
    return out


def term_depth(t) -> int:
    if isinstance(t, Var):
        return 0
    return 1 + max((term_depth(a) for a in t.args), default=0)


def formula_depth(phi) -> int:
    if isinstance(phi, (Rel, Eq)):
        return 0
    if isinstance(phi, Conn):
        return 1 + max((formula_depth(a) for a in phi.args), default=0)
    return 1 + formula_depth(phi.body)
