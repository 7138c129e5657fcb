"""Verification of the prop-category axioms (Conditions 1-6 plus category laws).

Each clause is a family of case groups.  A group is a list of sequences whose
cartesian product is the set of cases, plus a test returning ``None`` on
success or a ``(lhs, rhs, witness)`` triple on failure.  Clauses with at most
``limit`` cases are checked exhaustively, larger ones on a seeded uniform
sample; the report records which.
"""

from __future__ import annotations

import bisect
import random
from dataclasses import dataclass, field

from ..syntax import TENSOR, UNIT
from .category import CategoryError
from .core import PropCatError
from .seqs import LazyProduct

DEFAULT_LIMIT = 4000


@dataclass
class Violation:
    condition: str
    clause: str
    witness: dict
    lhs: str = ""
    rhs: str = ""

    def to_record(self):
        return {"condition": self.condition, "clause": self.clause, "witness": self.witness,
                "lhs": self.lhs, "rhs": self.rhs}

    def __str__(self):
        w = ", ".join(f"{k}={v}" for k, v in self.witness.items())
        side = f": {self.lhs} vs {self.rhs}" if self.lhs or self.rhs else ""
        return f"{self.condition} [{self.clause}] {w}{side}"


@dataclass
class ClauseResult:
    clause: str
    condition: str
    total: int
    checked: int
    exhaustive: bool
    probe: bool = False
    violations: list = field(default_factory=list)

    def to_record(self):
        return {"clause": self.clause, "condition": self.condition, "total": self.total,
                "checked": self.checked, "exhaustive": self.exhaustive, "probe": self.probe,
                "violations": [v.to_record() for v in self.violations]}


@dataclass
class CheckReport:
    subject: str
    clauses: list = field(default_factory=list)

    @property
    def violations(self):
        return [v for c in self.clauses for v in c.violations]

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def exhaustive(self) -> bool:
        return all(c.exhaustive and not c.probe for c in self.clauses)

    def failed_conditions(self):
        return sorted({v.condition for v in self.violations})

    def summary(self) -> str:
        lines = [f"{self.subject}: {'ok' if self.ok else 'VIOLATION'}"
                 f" ({'exhaustive' if self.exhaustive else 'partly sampled or probed'})"]
        for c in self.clauses:
            mode = "all" if c.exhaustive else "sampled"
            if c.probe:
                mode += ", probe set"
            status = "ok" if not c.violations else f"{len(c.violations)} violation(s)"
            lines.append(f"  {c.clause:<24} {c.condition:<12} {c.checked}/{c.total} [{mode}] {status}")
            for v in c.violations:
                lines.append(f"    {v}")
        return "\n".join(lines)

    def to_record(self):
        return {"subject": self.subject, "ok": self.ok, "exhaustive": self.exhaustive,
                "clauses": [c.to_record() for c in self.clauses]}


class Checker:
    def __init__(self, subject, limit=DEFAULT_LIMIT, seed=0, max_witnesses=3):
        self.report = CheckReport(subject)
        self.limit = limit
        self.seed = seed
        self.max_witnesses = max_witnesses

    def clause(self, name, condition, groups, probe=False):
        groups = [(LazyProduct(seqs), test) for seqs, test in groups]
        sizes = [len(g) for g, _ in groups]
        total = sum(sizes)
        res = ClauseResult(name, condition, total, 0, True, probe)
        self.report.clauses.append(res)

        def run(case, test):
            res.checked += 1
            try:
                out = test(*case)
            except (CategoryError, PropCatError, KeyError) as exc:
                out = ("error", str(exc), {"case": _short(case)})
            if out is not None:
                lhs, rhs, witness = out
                if self.max_witnesses is None or len(res.violations) < self.max_witnesses:
                    res.violations.append(Violation(condition, name, witness, _short(lhs), _short(rhs)))
                return True
            return False

        if self.limit is None or total <= self.limit:
            for space, test in groups:
                for case in space:
                    run(case, test)
            return res
        res.exhaustive = False
        rng = random.Random(f"{self.seed}:{name}")
        cum = []
        acc = 0
        for s in sizes:
            acc += s
            cum.append(acc)
        for _ in range(self.limit):
            k = rng.randrange(total)
            gi = bisect.bisect_right(cum, k)
            offset = k - (cum[gi - 1] if gi else 0)
            space, test = groups[gi]
            run(space[offset], test)
        return res


def _short(x, n=200):
    s = x if isinstance(x, str) else repr(x)
    return s if len(s) <= n else s[: n - 3] + "..."


# ---------------------------------------------------------------- check_fa


def check_fa(pc, limit=DEFAULT_LIMIT, seed=0, max_witnesses=3) -> CheckReport:
    """Check that ``pc`` is a prop-category; never raises on violations."""
    C = pc.base
    ck = Checker(pc.describe(), limit, seed, max_witnesses)
    O = list(C.objects)
    one = C.terminal
    fo = C.format_obj
    el = pc.format_elem
    prods = {}
    for b in O:
        for c in O:
            try:
                prods[(b, c)] = C.product(b, c)
            except CategoryError:
                pass

    def hom(a, b):
        return C.hom_seq(a, b)

    fib = {c: pc.fiber(c) for c in O}
    probe = any(f.symbolic for f in fib.values())

    def E(c):
        return fib[c].probe

    # ----- category laws
    def t_ident(f):
        a, b = C.dom(f), C.cod(f)
        l, r = C.compose(C.identity(b), f), C.compose(f, C.identity(a))
        if l != f or r != f:
            return (l, r, {"f": repr(f)})

    ck.clause("category.identity", "category", [([hom(a, b)], t_ident) for a in O for b in O])

    def t_assoc(f, g, h):
        l, r = C.compose(h, C.compose(g, f)), C.compose(C.compose(h, g), f)
        if l != r:
            return (l, r, {"f": repr(f), "g": repr(g), "h": repr(h)})

    ck.clause("category.assoc", "category",
              [([hom(a, b), hom(b, c), hom(c, d)], t_assoc) for a in O for b in O for c in O for d in O])

    def t_term(a):
        def t():
            n = C.hom_count(a, one)
            if n != 1:
                return (n, 1, {"object": fo(a)})
        return t

    ck.clause("category.terminal", "category", [([], t_term(a)) for a in O])

    def t_pair(b, c):
        bc, p1, p2 = prods[(b, c)]

        def t(f, g):
            h = C.pair(f, g)
            if C.dom(h) != C.dom(f) or C.cod(h) != bc:
                return (h, bc, {"pair of": f"{f!r}, {g!r}"})
            l1, l2 = C.compose(p1, h), C.compose(p2, h)
            if l1 != f or l2 != g:
                return ((l1, l2), (f, g), {"b": fo(b), "c": fo(c), "f": repr(f), "g": repr(g)})
        return t

    def t_unique(b, c):
        _, p1, p2 = prods[(b, c)]

        def t(h):
            k = C.pair(C.compose(p1, h), C.compose(p2, h))
            if k != h:
                return (k, h, {"b": fo(b), "c": fo(c), "h": repr(h)})
        return t

    ck.clause("category.product", "category",
              [([hom(a, b), hom(a, c)], t_pair(b, c)) for (b, c) in prods for a in O])
    ck.clause("category.product-unique", "category",
              [([hom(a, prods[(b, c)][0])], t_unique(b, c)) for (b, c) in prods for a in O])

    # ----- fibers: partial orders, closure (Condition 1) and monoids (Condition 4)
    def t_refl(c):
        def t(r):
            if not fib[c].leq(r, r):
                return ("not r<=r", "", {"object": fo(c), "r": el(c, r)})
        return t

    def t_antisym(c):
        def t(r, s):
            if r != s and fib[c].leq(r, s) and fib[c].leq(s, r):
                return (el(c, r), el(c, s), {"object": fo(c)})
        return t

    def t_trans(c):
        def t(r, s, u):
            f = fib[c]
            if f.leq(r, s) and f.leq(s, u) and not f.leq(r, u):
                return (el(c, r), el(c, u), {"object": fo(c), "middle": el(c, s)})
        return t

    ck.clause("fiber.reflexive", "Condition 1", [([E(c)], t_refl(c)) for c in O], probe)
    ck.clause("fiber.antisymmetric", "Condition 1", [([E(c), E(c)], t_antisym(c)) for c in O], probe)
    ck.clause("fiber.transitive", "Condition 1", [([E(c)] * 3, t_trans(c)) for c in O], probe)

    def t_closed(c, op):
        def t(*args):
            out = fib[c].op(op, *args)
            if not fib[c].contains(out):
                return (repr(out), "element of fiber", {"object": fo(c), "op": op})
        return t

    ck.clause("fiber.closed", "Condition 1",
              [([E(c)] * ar, t_closed(c, op)) for c in O for op, ar in pc.language.connectives], probe)

    def t_massoc(c):
        def t(r, s, u):
            f = fib[c]
            l = f.op(TENSOR, f.op(TENSOR, r, s), u)
            rr = f.op(TENSOR, r, f.op(TENSOR, s, u))
            if l != rr:
                return (el(c, l), el(c, rr), {"object": fo(c), "r": el(c, r), "s": el(c, s), "u": el(c, u)})
        return t

    def t_munit(c):
        def t(r):
            f = fib[c]
            e = f.op(UNIT)
            if f.op(TENSOR, e, r) != r or f.op(TENSOR, r, e) != r:
                return (el(c, f.op(TENSOR, e, r)), el(c, r), {"object": fo(c)})
        return t

    ck.clause("monoid.assoc", "Condition 4", [([E(c)] * 3, t_massoc(c)) for c in O], probe)
    ck.clause("monoid.unit", "Condition 4", [([E(c)], t_munit(c)) for c in O], probe)

    # ----- Condition 1: contravariant functor into posets, homomorphisms
    def t_fid(a):
        def t(r):
            out = pc.act(C.identity(a), r)
            if out != r:
                return (el(a, out), el(a, r), {"object": fo(a)})
        return t

    ck.clause("functor.identity", "Condition 1", [([E(a)], t_fid(a)) for a in O], probe)

    def t_fcomp(a, c):
        def t(f, g, r):
            l = pc.act(C.compose(g, f), r)
            rr = pc.act(f, pc.act(g, r))
            if l != rr or not fib[a].contains(l):
                return (el(a, l), el(a, rr), {"f": repr(f), "g": repr(g), "r": el(c, r)})
        return t

    ck.clause("functor.compose", "Condition 1",
              [([hom(a, b), hom(b, c), E(c)], t_fcomp(a, c)) for a in O for b in O for c in O], probe)

    def t_mono(a, b):
        def t(f, r, s):
            if fib[b].leq(r, s) and not fib[a].leq(pc.act(f, r), pc.act(f, s)):
                return (el(a, pc.act(f, r)), el(a, pc.act(f, s)), {"f": repr(f), "r": el(b, r), "s": el(b, s)})
        return t

    ck.clause("functor.monotone", "Condition 1",
              [([hom(a, b), E(b), E(b)], t_mono(a, b)) for a in O for b in O], probe)

    def t_hom(a, b, op):
        def t(f, *args):
            l = pc.act(f, fib[b].op(op, *args))
            rr = fib[a].op(op, *(pc.act(f, x) for x in args))
            if l != rr:
                return (el(a, l), el(a, rr), {"f": repr(f), "op": op,
                                              "args": "; ".join(el(b, x) for x in args)})
        return t

    ck.clause("functor.homomorphism", "Condition 1",
              [([hom(a, b)] + [E(b)] * ar, t_hom(a, b, op))
               for a in O for b in O for op, ar in pc.language.connectives], probe)

    # ----- Condition 2: equality elements
    def t_eq(c):
        def t():
            cc = prods[(c, c)][0]
            e = pc.eq(c)
            if not pc.fiber(cc).contains(e):
                return (repr(e), f"element of P({fo(cc)})", {"object": fo(c)})
        return t

    ck.clause("equality.member", "Condition 2", [([], t_eq(c)) for c in O if (c, c) in prods])

    # ----- Condition 3: quantifiers natural in the first argument
    qs = pc.language.quantifiers

    def t_qclosed(q, b, c):
        def t(r):
            out = pc.quant(q, b, c, r)
            if not fib[b].contains(out):
                return (repr(out), f"element of P({fo(b)})", {"quantifier": q, "b": fo(b), "c": fo(c)})
        return t

    ck.clause("quantifier.closed", "Condition 3",
              [([E(prods[(b, c)][0])], t_qclosed(q, b, c)) for q in qs for (b, c) in prods], probe)

    def t_nat(q, a, b, c):
        def t(f, r):
            fx = C.times(f, C.identity(c))
            l = pc.quant(q, a, c, pc.act(fx, r))
            rr = pc.act(f, pc.quant(q, b, c, r))
            if l != rr:
                return (el(a, l), el(a, rr), {"quantifier": q, "f": repr(f), "c": fo(c),
                                              "r": el(prods[(b, c)][0], r)})
        return t

    ck.clause("quantifier.natural", "Condition 3",
              [([hom(a, b), E(prods[(b, c)][0])], t_nat(q, a, b, c))
               for q in qs for a in O for b in O for c in O if (a, c) in prods and (b, c) in prods], probe)

    # ----- Condition 5
    def t_c5unit(q, b):
        def t(r):
            out = pc.quant(q, b, one, pc.act(prods[(b, one)][1], r))
            if out != r:
                return (el(b, out), el(b, r), {"quantifier": q, "b": fo(b), "r": el(b, r)})
        return t

    ck.clause("extra.unit", "Condition 5",
              [([E(b)], t_c5unit(q, b)) for q in qs for b in O if (b, one) in prods], probe)

    triples = []
    for b in O:
        for c in O:
            for d in O:
                if (c, d) in prods and (b, c) in prods:
                    cd, bc = prods[(c, d)][0], prods[(b, c)][0]
                    if (b, cd) in prods and (bc, d) in prods:
                        triples.append((b, c, d, cd, bc, prods[(bc, d)][0]))

    def t_c5assoc(q, b, c, d, cd, bc, bcd):
        def t(r):
            l = pc.quant(q, b, cd, pc.act(C.assoc(b, c, d), r))
            rr = pc.quant(q, b, c, pc.quant(q, bc, d, r))
            if l != rr:
                return (el(b, l), el(b, rr), {"quantifier": q, "b": fo(b), "c": fo(c), "d": fo(d),
                                              "R": el(bcd, r)})
        return t

    ck.clause("extra.assoc", "Condition 5",
              [([E(t[5])], t_c5assoc(q, *t)) for q in qs for t in triples], probe)

    # ----- Condition 6
    def t_c6unit():
        oo = prods[(one, one)][0]
        l, r = pc.eq(one), pc.unit(oo)
        if l != r:
            return (el(oo, l), el(oo, r), {"object": fo(one)})

    ck.clause("equality.unit", "Condition 6", [([], t_c6unit)] if (one, one) in prods else [])

    quads = []
    for (c1, c2), (c, q1, q2) in prods.items():
        if (c, c) in prods and (c1, c1) in prods and (c2, c2) in prods:
            quads.append((c1, c2, c))

    def t_c6prod(c1, c2, c):
        def t():
            cc, r1, r2 = prods[(c, c)]
            _, q1, q2 = prods[(c1, c2)]
            m1 = C.pair(C.compose(q1, r1), C.compose(q1, r2))
            m2 = C.pair(C.compose(q2, r1), C.compose(q2, r2))
            l = pc.eq(c)
            rr = pc.tensor(cc, pc.act(m1, pc.eq(c1)), pc.act(m2, pc.eq(c2)))
            if l != rr:
                return (el(cc, l), el(cc, rr), {"c1": fo(c1), "c2": fo(c2)})
        return t

    ck.clause("equality.product", "Condition 6", [([], t_c6prod(*q)) for q in quads])
    return ck.report
