"""Built-in prop-categories over finite sets: lattice-valued, powerset with
Mostowski quantifiers, fuzzy with exact rationals, and explicit tables."""

from __future__ import annotations

from fractions import Fraction
from functools import reduce

from ..syntax import TENSOR, UNIT, Language
from .category import SetCategory, TableCategory
from .core import Fiber, PropCategory, PropCatError
from .seqs import LazyProduct, Subsets


# ------------------------------------------------------------ value algebras


class ValueAlgebra:
    """Truth values with an order, named operations, top and bottom.

    ``values`` is None for the symbolic unit interval; ``probe`` then stands in
    for the carrier in checks.
    """

    def __init__(self, values, leq, ops, top, bottom, meet, join, probe=None,
                 contains=None, name="values"):
        self.values = None if values is None else tuple(values)
        self.leq = leq
        self.ops = dict(ops)  # name -> (arity, fn)
        self.top = top
        self.bottom = bottom
        self.meet2 = meet
        self.join2 = join
        self.probe = self.values if probe is None else tuple(probe)
        self._contains = contains
        self.name = name
        for name_, ar in ((UNIT, 0), (TENSOR, 2)):
            if name_ not in self.ops or self.ops[name_][0] != ar:
                raise PropCatError(f"value algebra needs {name_} of arity {ar}")

    def contains(self, v) -> bool:
        if self._contains is not None:
            return self._contains(v)
        return v in self.values

    def meet(self, xs):
        return reduce(self.meet2, xs, self.top)

    def join(self, xs):
        return reduce(self.join2, xs, self.bottom)

    def fold_tensor(self, xs):
        t = self.ops[TENSOR][1]
        return reduce(t, xs, self.ops[UNIT][1]())


def _lukasiewicz(x, y):
    return max(Fraction(0), x + y - 1)


TNORMS = {
    "min": min,
    "product": lambda x, y: x * y,
    "lukasiewicz": _lukasiewicz,
}


def _chain_ops(tnorm, negation):
    one, zero = Fraction(1), Fraction(0)
    ops = {
        "top": (0, lambda: one),
        "bot": (0, lambda: zero),
        "and": (2, min),
        "or": (2, max),
        TENSOR: (2, tnorm),
        UNIT: (0, lambda: one),
    }
    if negation:
        ops["not"] = (1, lambda x: 1 - x)
    return ops


def chain(n: int, tnorm="lukasiewicz", negation=False) -> ValueAlgebra:
    """The n-element chain {0, 1/(n-1), ..., 1} as exact rationals."""
    if n < 2:
        raise PropCatError("a chain needs at least two values")
    t = TNORMS[tnorm] if isinstance(tnorm, str) else tnorm
    values = tuple(Fraction(i, n - 1) for i in range(n))
    vs = set(values)
    for x in values:
        for y in values:
            if t(x, y) not in vs:
                raise PropCatError(f"t-norm not closed on the chain: {x}, {y}")
    return ValueAlgebra(values, lambda x, y: x <= y, _chain_ops(t, negation), Fraction(1), Fraction(0),
                        min, max, name=f"chain{n}")


def boolean(negation=False) -> ValueAlgebra:
    return chain(2, "min", negation)


def unit_interval(tnorm="product", probe=(0, Fraction(1, 2), 1), negation=False) -> ValueAlgebra:
    """Symbolic [0,1] with exact rationals; checks run on ``probe``."""
    t = TNORMS[tnorm] if isinstance(tnorm, str) else tnorm

    def contains(v):
        return isinstance(v, (int, Fraction)) and 0 <= v <= 1

    return ValueAlgebra(None, lambda x, y: x <= y, _chain_ops(t, negation), Fraction(1), Fraction(0),
                        min, max, probe=tuple(Fraction(p) for p in probe), contains=contains,
                        name="unit-interval")


def algebra_from_tables(values, leq_pairs, ops, name="values") -> ValueAlgebra:
    """Finite lattice given by its order; binary meets/joins are found by search.

    ``ops`` maps a connective to (arity, table) with table {args tuple: value}.
    """
    values = tuple(values)
    le = set(leq_pairs) | {(v, v) for v in values}

    def leq(x, y):
        return (x, y) in le

    for x in values:
        for y in values:
            if leq(x, y) and leq(y, x) and x != y:
                raise PropCatError(f"lattice law violation: order not antisymmetric at {x}, {y}")
            for z in values:
                if leq(x, y) and leq(y, z) and not leq(x, z):
                    raise PropCatError(f"lattice law violation: order not transitive at {x}, {y}, {z}")

    def bound(x, y, lower):
        cands = [z for z in values if (leq(z, x) and leq(z, y) if lower else leq(x, z) and leq(y, z))]
        best = [z for z in cands if all((leq(w, z) if lower else leq(z, w)) for w in cands)]
        if len(best) != 1:
            raise PropCatError(f"lattice law violation: no {'meet' if lower else 'join'} of {x}, {y}")
        return best[0]

    meets = {(x, y): bound(x, y, True) for x in values for y in values}
    joins = {(x, y): bound(x, y, False) for x in values for y in values}
    tops = [v for v in values if all(leq(w, v) for w in values)]
    bots = [v for v in values if all(leq(v, w) for w in values)]
    if len(tops) != 1 or len(bots) != 1:
        raise PropCatError("lattice law violation: missing top or bottom")
    fns = {}
    for op, (ar, table) in ops.items():
        table = dict(table)
        for key in LazyProduct([values] * ar):
            if key not in table:
                raise PropCatError(f"operation {op} undefined at {key}")
        fns[op] = (ar, (lambda t: lambda *a: t[a])(table))
    fns.setdefault("top", (0, lambda: tops[0]))
    fns.setdefault("bot", (0, lambda: bots[0]))
    fns.setdefault("and", (2, lambda x, y: meets[(x, y)]))
    fns.setdefault("or", (2, lambda x, y: joins[(x, y)]))
    fns.setdefault(UNIT, (0, lambda: tops[0]))
    fns.setdefault(TENSOR, (2, lambda x, y: meets[(x, y)]))
    return ValueAlgebra(values, leq, fns, tops[0], bots[0],
                        lambda x, y: meets[(x, y)], lambda x, y: joins[(x, y)], name=name)


# ---------------------------------------------------------- lattice-valued


class LatticePropCategory(PropCategory):
    """Fibers are all functions carrier -> values, ordered pointwise.

    Quantifier kinds: ``inf`` (meet over the second factor), ``sup`` (join),
    ``tnorm`` (iterated tensor over the second factor).
    """

    KINDS = ("inf", "sup", "tnorm")

    def __init__(self, atoms, algebra: ValueAlgebra, depth: int, quantifiers=None):
        super().__init__()
        self.base = SetCategory(atoms, depth)
        self.algebra = algebra
        self.quantifiers = dict(quantifiers if quantifiers is not None else {"forall": "inf", "exists": "sup"})
        for q, kind in self.quantifiers.items():
            if kind not in self.KINDS:
                raise PropCatError(f"unknown quantifier kind {kind} for {q}")
        self.language = Language({n: ar for n, (ar, _) in algebra.ops.items()}, self.quantifiers)

    def make_fiber(self, c):
        alg = self.algebra
        n = len(self.base.carrier(c))
        ops = {}
        for name, (ar, fn) in alg.ops.items():
            if ar == 0:
                v = fn()
                ops[name] = (lambda v: lambda: (v,) * n)(v)
            else:
                ops[name] = (lambda fn: lambda *args: tuple(fn(*xs) for xs in zip(*args)))(fn)
        elements = None if alg.values is None else LazyProduct([alg.values] * n)
        probe = LazyProduct([alg.probe] * n)

        def leq(r, s):
            return all(alg.leq(x, y) for x, y in zip(r, s))

        def contains(r):
            return isinstance(r, tuple) and len(r) == n and all(alg.contains(v) for v in r)

        return Fiber(elements, leq, ops, probe=probe, contains=contains)

    def act(self, f, r):
        idx = self.base._index_of(f.cod)
        return tuple(r[idx[y]] for y in f.table)

    def eq(self, c):
        cc = self.base.prod_obj(c, c)
        n = len(c)
        top, bot = self.algebra.top, self.algebra.bottom
        return tuple(top if x[:n] == x[n:] else bot for x in self.base.carrier(cc))

    def quant(self, name, b, c, r):
        kind = self.quantifiers[name]
        self.base.prod_obj(b, c)
        m = len(self.base.carrier(c))
        rows = [r[i * m:(i + 1) * m] for i in range(len(self.base.carrier(b)))]
        alg = self.algebra
        if kind == "inf":
            return tuple(alg.meet(row) for row in rows)
        if kind == "sup":
            return tuple(alg.join(row) for row in rows)
        return tuple(alg.fold_tensor(row) for row in rows)

    def format_elem(self, c, r):
        carrier = self.base.carrier(c)
        if len(carrier) == 1 and carrier[0] == ():
            return str(r[0])
        return "{" + ", ".join(f"{_fmt_point(x)}: {v}" for x, v in zip(carrier, r)) + "}"

    def describe(self):
        return f"lattice[{self.algebra.name}]"


def _fmt_point(x):
    return "(" + " ".join(map(str, x)) + ")"


def mk_lattice_propcat(atoms, L: ValueAlgebra, product_depth: int, quantifiers=None) -> LatticePropCategory:
    if L.values is None:
        raise PropCatError("lattice host needs a finite value algebra")
    return LatticePropCategory(atoms, L, product_depth, quantifiers)


def mk_fuzzy_propcat(atoms, tnorm="product", quantifiers=None, product_depth=2,
                     probe=(0, Fraction(1, 4), Fraction(1, 2), 1)) -> LatticePropCategory:
    """Fuzzy sets with exact rational truth values.

    ``quantifiers`` maps names to kinds among ``inf``, ``sup`` and ``tnorm``.
    """
    alg = unit_interval(tnorm, probe)
    t = alg.ops[TENSOR][1]
    ps = alg.probe
    for x in ps:
        if t(x, Fraction(1)) != x or t(Fraction(1), x) != x:
            raise PropCatError(f"t-norm law violation: 1 is not a unit at {x}")
        for y in ps:
            if t(x, y) != t(y, x):
                raise PropCatError(f"t-norm law violation: not commutative at {x}, {y}")
            for z in ps:
                if t(t(x, y), z) != t(x, t(y, z)):
                    raise PropCatError(f"t-norm law violation: not associative at {x}, {y}, {z}")
                if y <= z and not t(x, y) <= t(x, z):
                    raise PropCatError(f"t-norm law violation: not monotone at {x}, {y}, {z}")
    if quantifiers is None:
        quantifiers = {"forall": "inf", "exists": "sup", "Ωprod": "tnorm"}
    return LatticePropCategory(atoms, alg, product_depth, quantifiers)


# ------------------------------------------------------------------ powerset


def spec_forall(subset, carrier):
    return len(subset) == len(carrier)


def spec_exists(subset, carrier):
    return len(subset) > 0


def spec_exactly(n):
    def spec(subset, carrier):
        return len(subset) == n

    spec.__name__ = f"exactly{n}"
    return spec


def spec_atleast(n):
    def spec(subset, carrier):
        return len(subset) >= n

    spec.__name__ = f"atleast{n}"
    return spec


class PowersetPropCategory(PropCategory):
    """Subsets of carriers with Mostowski quantifiers.

    A quantifier spec is either a predicate ``spec(subset, carrier)`` or a
    mapping from object words to the family of accepted subsets.
    """

    def __init__(self, atoms, specs, depth):
        super().__init__()
        self.base = SetCategory(atoms, depth)
        self.specs = {}
        for name, spec in dict(specs).items():
            if callable(spec):
                self.specs[name] = spec
                continue
            table = {tuple(k): {frozenset(s) for s in v} for k, v in dict(spec).items()}
            for w in self.base.objects:
                if w not in table:
                    raise PropCatError(f"quantifier spec {name} missing carrier of object {w}")
            self.specs[name] = (lambda t: lambda subset, carrier, w=None: subset in t[w])(table)
            self.specs[name].by_word = True
        conns = {"top": 0, "bot": 0, "and": 2, "or": 2, "not": 1, "imp": 2, UNIT: 0, TENSOR: 2}
        self.language = Language(conns, self.specs)

    def make_fiber(self, c):
        carrier = frozenset(self.base.carrier(c))
        ops = {
            "top": lambda: carrier,
            "bot": lambda: frozenset(),
            "and": lambda a, b: a & b,
            "or": lambda a, b: a | b,
            "not": lambda a: carrier - a,
            "imp": lambda a, b: (carrier - a) | b,
            UNIT: lambda: carrier,
            TENSOR: lambda a, b: a & b,
        }

        def contains(r):
            return isinstance(r, frozenset) and r <= carrier

        return Fiber(Subsets(self.base.carrier(c)), lambda a, b: a <= b, ops, contains=contains)

    def act(self, f, r):
        return frozenset(x for x, y in zip(self.base.carrier(f.dom), f.table) if y in r)

    def eq(self, c):
        self.base.prod_obj(c, c)
        return frozenset(x + x for x in self.base.carrier(c))

    def quant(self, name, b, c, r):
        self.base.prod_obj(b, c)
        spec = self.specs[name]
        cc = self.base.carrier(c)
        out = []
        for x in self.base.carrier(b):
            row = frozenset(y for y in cc if x + y in r)
            ok = spec(row, cc, c) if getattr(spec, "by_word", False) else spec(row, cc)
            if ok:
                out.append(x)
        return frozenset(out)

    def format_elem(self, c, r):
        carrier = self.base.carrier(c)
        if carrier == ((),):
            return "top" if r else "bot"
        return "{" + ", ".join(_fmt_point(x) for x in carrier if x in r) + "}"

    def describe(self):
        return "powerset"


def mk_powerset_propcat(atoms, specs=None, product_depth=2) -> PowersetPropCategory:
    if specs is None:
        specs = {"forall": spec_forall, "exists": spec_exists}
    return PowersetPropCategory(atoms, specs, product_depth)


# ------------------------------------------------------------ explicit tables


class TablePropCategory(PropCategory):
    """Everything from finite tables, as read from an explicit presentation."""

    def __init__(self, base: TableCategory, language: Language, fibers, acts, quants, eqs):
        """``fibers``: {c: (elems, leq pairs, {op: {args: value}})};
        ``acts``: {f: {r: s}}; ``quants``: {(q, b, c): {r: s}}; ``eqs``: {c: elem}."""
        super().__init__()
        self.base = base
        self.language = language
        self.tables = {c: (tuple(e), set(l), {k: dict(v) for k, v in o.items()}) for c, (e, l, o) in fibers.items()}
        self.acts = {f: dict(t) for f, t in acts.items()}
        self.quants = {k: dict(t) for k, t in quants.items()}
        self.eqs = dict(eqs)
        for c in base.objects:
            if c not in self.tables:
                raise PropCatError(f"no fiber given for object {c}")
            ops = self.tables[c][2]
            for op, ar in language.connectives:
                if op not in ops:
                    raise PropCatError(f"fiber {c} lacks operation {op}")

    def make_fiber(self, c):
        elems, le, ops = self.tables[c]
        le = le | {(x, x) for x in elems}
        fns = {}
        for op, table in ops.items():
            def fn(*args, table=table, op=op):
                try:
                    return table[args]
                except KeyError:
                    raise PropCatError(f"operation {op} undefined at {args} in fiber {c}") from None
            fns[op] = fn
        return Fiber(elems, lambda a, b: (a, b) in le, fns)

    def act(self, f, r):
        try:
            return self.acts[f][r]
        except KeyError:
            raise PropCatError(f"action of {f} undefined at {r}") from None

    def eq(self, c):
        try:
            return self.eqs[c]
        except KeyError:
            raise PropCatError(f"no equality element for {c}") from None

    def quant(self, name, b, c, r):
        try:
            return self.quants[(name, b, c)][r]
        except KeyError:
            raise PropCatError(f"quantifier {name} undefined for ({b}, {c}) at {r}") from None

    def format_elem(self, c, r):
        return str(r)

    def describe(self):
        return "tables"
