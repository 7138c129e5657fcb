"""Readers and printers for every file kind: theories, proofs, prop-categories,
structures, morphisms, signature interpretations and probe sets.

Positions in errors are 1-based line and column numbers.
"""

from __future__ import annotations

import os
from fractions import Fraction

from ..calculus import ProofNode, rule_name
from ..fibered import (
    ImagePropCategory,
    MorphismError,
    PropMorphism,
    SignatureInterpretation,
    compose_morphisms,
    identity_morphism,
    pairing,
    projection,
    table_morphism,
    value_map_morphism,
)
from ..propcat import (
    CategoryError,
    LatticePropCategory,
    PowersetPropCategory,
    ProductPropCategory,
    PropCatError,
    SetCategory,
    TableCategory,
    TablePropCategory,
    algebra_from_tables,
    boolean,
    chain,
    mk_fuzzy_propcat,
    mk_lattice_propcat,
    mk_powerset_propcat,
    spec_atleast,
    spec_exactly,
    spec_exists,
    spec_forall,
)
from ..semantics import Structure, StructureError
from ..syntax import (
    App,
    Conn,
    Context,
    Eq,
    Equation,
    Language,
    Quant,
    Rel,
    Sequent,
    Signature,
    Theory,
    Var,
    WellFormednessError,
    wf_formula,
    wf_term,
)
from .sexp import Atom, ParseError, SList, quote, read_all, read_one, render

_SEMANTIC = (WellFormednessError, PropCatError, CategoryError, StructureError, MorphismError)


def _err(node, message, expected=None, kind="grammar"):
    line, col = (node.line, node.col) if node is not None else (0, 0)
    return ParseError(message, line, col, expected, kind=kind)


def _atom(node, what="a name") -> str:
    if not isinstance(node, Atom):
        raise _err(node, f"expected {what}", what)
    return node.text


def _list(node, head=None, what=None) -> SList:
    if not isinstance(node, SList):
        raise _err(node, f"expected {what or 'a list'}", what or "'('")
    if head is not None and node.head != head:
        raise _err(node, f"expected ({head} ...)", f"({head} ...)")
    return node


def _int(node, what="an integer") -> int:
    t = _atom(node, what)
    try:
        return int(t)
    except ValueError:
        raise _err(node, f"expected {what}, got {t}", what) from None


def _wrap(node, exc, kind="typing"):
    """Re-raise a semantic error as a positioned parse error."""
    return _err(node, str(exc), kind=kind)


def _sections(node: SList, start=1):
    """Group the tagged sub-lists of ``node`` by head."""
    out = {}
    for item in node.items[start:]:
        sl = _list(item, what="a tagged section")
        if sl.head is None:
            raise _err(sl, "section needs a name", "a section name")
        out.setdefault(sl.head, []).append(sl)
    return out


def _one(sections, key, node, required=True):
    xs = sections.get(key, [])
    if len(xs) > 1:
        raise _err(xs[1], f"duplicate ({key} ...) section")
    if not xs:
        if required:
            raise _err(node, f"missing ({key} ...) section", f"({key} ...)")
        return None
    return xs[0]


# ------------------------------------------------------------------ syntax


def parse_sort_ref(node, sg: Signature) -> str:
    s = _atom(node, "a sort")
    if s not in sg.sorts:
        raise _err(node, f"unknown sort {s}", "a declared sort", "reference")
    return s


def parse_ctx(node, sg: Signature) -> Context:
    node = _list(node, "ctx", "(ctx (x σ) ...)")
    entries = []
    for e in node.items[1:]:
        e = _list(e, what="(variable sort)")
        if len(e) != 2:
            raise _err(e, "context entries are (variable sort)", "(x σ)")
        entries.append((_atom(e[0], "a variable"), parse_sort_ref(e[1], sg)))
    try:
        return Context(entries)
    except WellFormednessError as exc:
        raise _wrap(node, exc) from None


def parse_term(node, sg: Signature, ctx: Context):
    fns = sg.fn
    if isinstance(node, Atom):
        name = node.text
        if name in ctx:
            return Var(name)
        if name in fns and not fns[name][0]:
            return App(name)
        raise _err(node, f"unknown variable or constant {name}", "a variable in context or a constant", "reference")
    node = _list(node, what="a term")
    f = node.head
    if f is None:
        raise _err(node, "a term application starts with a function symbol", "a function symbol")
    if f not in fns:
        raise _err(node, f"unknown function symbol {f}", "a function symbol", "reference")
    args = tuple(parse_term(a, sg, ctx) for a in node.items[1:])
    t = App(f, args)
    try:
        wf_term(sg, ctx, t)
    except WellFormednessError as exc:
        raise _wrap(node, exc) from None
    return t


def parse_formula(node, sg: Signature, lang: Language, ctx: Context):
    conns = lang.arity
    rels = sg.rel
    if isinstance(node, Atom):
        name = node.text
        if conns.get(name) == 0:
            return Conn(name)
        if name in rels and not rels[name]:
            return Rel(name)
        raise _err(node, f"unknown formula {name}", "a 0-ary connective or relation", "reference")
    node = _list(node, what="a formula")
    h = node.head
    if h is None:
        raise _err(node, "a formula starts with a connective, quantifier, relation or =", "a head symbol")
    args = node.items[1:]
    if h == "=":
        if len(args) == 3:
            s = parse_sort_ref(args[0], sg)
            lhs, rhs = parse_term(args[1], sg, ctx), parse_term(args[2], sg, ctx)
        elif len(args) == 2:
            lhs, rhs = parse_term(args[0], sg, ctx), parse_term(args[1], sg, ctx)
            s = wf_term(sg, ctx, lhs)
        else:
            raise _err(node, "equality takes two terms (and optionally a sort first)", "(= [σ] M N)")
        phi = Eq(s, lhs, rhs)
    elif h in lang.quantifiers:
        if len(args) != 2:
            raise _err(node, f"quantifier {h} takes a binding and a body", f"({h} (x σ) φ)")
        b = _list(args[0], what="(variable sort)")
        if len(b) != 2:
            raise _err(b, "binding is (variable sort)", "(x σ)")
        x, s = _atom(b[0], "a variable"), parse_sort_ref(b[1], sg)
        body = parse_formula(args[1], sg, lang, ctx.remove(x).extend(x, s))
        phi = Quant(h, x, s, body)
    elif h in conns:
        if len(args) != conns[h]:
            raise _err(node, f"connective {h} takes {conns[h]} argument(s), got {len(args)}", f"{conns[h]} argument(s)",
                       "typing")
        phi = Conn(h, tuple(parse_formula(a, sg, lang, ctx) for a in args))
    elif h in rels:
        phi = Rel(h, tuple(parse_term(a, sg, ctx) for a in args))
    else:
        raise _err(node, f"unknown connective, quantifier or relation {h}", "a declared symbol", "reference")
    try:
        wf_formula(sg, lang, ctx, phi)
    except WellFormednessError as exc:
        raise _wrap(node, exc) from None
    return phi


def print_term(t) -> str:
    if isinstance(t, Var):
        return t.name
    return "(" + " ".join([t.fn, *map(print_term, t.args)]) + ")"


def print_formula(phi) -> str:
    if isinstance(phi, Rel):
        return "(" + " ".join([phi.rel, *map(print_term, phi.args)]) + ")"
    if isinstance(phi, Eq):
        return f"(= {phi.sort} {print_term(phi.lhs)} {print_term(phi.rhs)})"
    if isinstance(phi, Conn):
        return "(" + " ".join([phi.op, *map(print_formula, phi.args)]) + ")"
    if isinstance(phi, Quant):
        return f"({phi.q} ({phi.var} {phi.sort}) {print_formula(phi.body)})"
    raise TypeError(f"not a formula: {phi!r}")


def print_ctx(ctx: Context) -> str:
    return "(ctx" + "".join(f" ({v} {s})" for v, s in ctx) + ")"


def print_assertion(a) -> str:
    if isinstance(a, Equation):
        return f"(eqn {print_ctx(a.ctx)} {print_term(a.lhs)} {print_term(a.rhs)} {a.sort})"
    hyps = "".join(f" (hyp {print_formula(h)})" for h in a.hyps)
    return f"(seq {print_ctx(a.ctx)}{hyps} (concl {print_formula(a.concl)}))"


def parse_assertion(node, sg: Signature, lang: Language):
    node = _list(node, what="(seq ...) or (eqn ...)")
    if node.head == "eqn":
        if len(node) != 5:
            raise _err(node, "equation is (eqn (ctx ...) lhs rhs sort)", "(eqn (ctx ...) M N τ)")
        ctx = parse_ctx(node[1], sg)
        s = parse_sort_ref(node[4], sg)
        lhs, rhs = parse_term(node[2], sg, ctx), parse_term(node[3], sg, ctx)
        for side, t in ((node[2], lhs), (node[3], rhs)):
            got = wf_term(sg, ctx, t)
            if got != s:
                raise _err(side, f"term has sort {got}, equation declares {s}", s, "typing")
        return Equation(ctx, lhs, rhs, s)
    if node.head == "seq":
        if len(node) < 3:
            raise _err(node, "sequent needs a context and a conclusion", "(seq (ctx ...) (hyp φ)... (concl ψ))")
        ctx = parse_ctx(node[1], sg)
        hyps, concl = [], None
        for item in node.items[2:]:
            item = _list(item, what="(hyp φ) or (concl ψ)")
            if item.head not in ("hyp", "concl") or len(item) != 2:
                raise _err(item, "expected (hyp φ) or (concl ψ)", "(hyp φ) or (concl ψ)")
            if concl is not None:
                raise _err(item, "nothing may follow the conclusion", "')'")
            phi = parse_formula(item[1], sg, lang, ctx)
            if item.head == "hyp":
                hyps.append(phi)
            else:
                concl = phi
        if concl is None:
            raise _err(node, "sequent lacks a conclusion", "(concl ψ)")
        return Sequent(ctx, hyps, concl)
    raise _err(node, "expected an assertion", "(seq ...) or (eqn ...)")


# ------------------------------------------------------------------ theories

_DECLS = ("name", "sort", "fn", "rel", "connective", "quantifier")


def parse_declarations(nodes):
    """Signature and language from (sort ...), (fn ...), (rel ...),
    (connective ...) and (quantifier ...) forms; other forms are skipped."""
    sorts, fns, rels, conns, quants = [], {}, {}, {}, []
    name = None
    for n in nodes:
        n = _list(n, what="a top-level form")
        h = n.head
        if h == "name":
            if len(n) != 2:
                raise _err(n, "name declaration is (name N)", "(name N)")
            name = _atom(n[1])
        elif h == "sort":
            if len(n) != 2:
                raise _err(n, "sort declaration is (sort σ)", "(sort σ)")
            sorts.append(_atom(n[1], "a sort name"))
    sortset = set(sorts)

    def sref(node):
        s = _atom(node, "a sort")
        if s not in sortset:
            raise _err(node, f"unknown sort {s}", "a declared sort", "reference")
        return s

    for n in nodes:
        h = n.head
        if h == "fn":
            if len(n) != 4:
                raise _err(n, "function declaration is (fn f (σ ...) τ)", "(fn f (σ ...) τ)")
            f = _atom(n[1], "a function name")
            if f in fns:
                raise _err(n, f"duplicate function symbol {f}")
            fns[f] = (tuple(sref(a) for a in _list(n[2], what="(σ ...)").items), sref(n[3]))
        elif h == "rel":
            if len(n) != 3:
                raise _err(n, "relation declaration is (rel R (σ ...))", "(rel R (σ ...))")
            r = _atom(n[1], "a relation name")
            if r in rels:
                raise _err(n, f"duplicate relation symbol {r}")
            rels[r] = tuple(sref(a) for a in _list(n[2], what="(σ ...)").items)
        elif h == "connective":
            if len(n) != 3:
                raise _err(n, "connective declaration is (connective name arity)", "(connective ◇ n)")
            conns[_atom(n[1])] = _int(n[2], "an arity")
        elif h == "quantifier":
            if len(n) != 2:
                raise _err(n, "quantifier declaration is (quantifier name)", "(quantifier Ω)")
            quants.append(_atom(n[1]))
    try:
        return name, Signature(sorts, fns, rels), Language(conns, quants)
    except WellFormednessError as exc:
        raise _wrap(nodes[0] if nodes else None, exc) from None


def parse_theory(text: str, path=None) -> Theory:
    try:
        nodes = read_all(text, path)
        nodes = [_list(n, what="a top-level form") for n in nodes]
        name, sg, lang = parse_declarations(nodes)
        assertions = []
        for n in nodes:
            if n.head in _DECLS:
                continue
            if n.head not in ("seq", "eqn"):
                raise _err(n, f"unknown top-level form {n.head}", "a declaration, (seq ...) or (eqn ...)")
            assertions.append(parse_assertion(n, sg, lang))
        T = Theory(sg, lang, assertions)
    except ParseError as exc:
        raise exc.with_path(path) from None
    return T


def print_declarations(sg: Signature, lang: Language | None = None) -> list:
    lines = [f"(sort {s})" for s in sorted(sg.sorts)]
    lines += [f"(fn {f} ({' '.join(a)}) {r})" for f, a, r in sg.functions]
    lines += [f"(rel {r} ({' '.join(a)}))" for r, a in sg.relations]
    if lang is not None:
        lines += [f"(connective {c} {ar})" for c, ar in lang.connectives if c not in ("e", "tensor")]
        lines += [f"(quantifier {q})" for q in lang.quantifiers]
    return lines


def print_theory(T: Theory) -> str:
    return "\n".join(print_declarations(T.signature, T.language) + [print_assertion(a) for a in T.assertions]) + "\n"


# -------------------------------------------------------------------- proofs


def parse_proof_node(node, sg: Signature, lang: Language) -> ProofNode:
    node = _list(node, "proof", "(proof ...)")
    secs = _sections(node)
    unknown = set(secs) - {"rule", "concl", "sub", "param"}
    if unknown:
        bad = secs[sorted(unknown)[0]][0]
        raise _err(bad, f"unknown proof section {bad.head}", "(rule ...), (concl ...), (sub ...) or (param ...)")
    r = _one(secs, "rule", node)
    try:
        rule = rule_name(_atom(r[1], "a rule name")) if len(r) == 2 else None
    except ValueError as exc:
        raise _err(r[1], str(exc), "a rule name", "reference") from None
    if rule is None:
        raise _err(r, "(rule NAME)")
    c = _one(secs, "concl", node)
    if len(c) != 2:
        raise _err(c, "(concl assertion)")
    concl = parse_assertion(c[1], sg, lang)
    params = {}
    for p in secs.get("param", []):
        if len(p) != 3:
            raise _err(p, "(param key value)")
        key, val = _atom(p[1]), _atom(p[2])
        params[key] = int(val) if key == "pos" else val
    sub = _one(secs, "sub", node, required=False)
    prems = [parse_proof_node(x, sg, lang) for x in sub.items[1:]] if sub is not None else []
    return ProofNode(rule, concl, prems, params)


def parse_proof(text: str, T: Theory, path=None) -> ProofNode:
    try:
        return parse_proof_node(read_one(text, path), T.signature, T.language)
    except ParseError as exc:
        raise exc.with_path(path) from None


def proof_sexp(p: ProofNode) -> list:
    out = ["proof", ["rule", p.rule], ["concl", print_assertion(p.concl)]]
    for k, v in p.params:
        out.append(["param", k, str(v)])
    if p.premises:
        out.append(["sub", *(proof_sexp(q) for q in p.premises)])
    return out


def print_proof(p: ProofNode) -> str:
    return render(proof_sexp(p)) + "\n"


# ---------------------------------------------------------- host value codecs


def _value_text(v) -> str:
    return str(v)


class SetCodec:
    """Objects are words ``(B B)``; points ``(0 1)``; morphisms
    ``(fun DOM COD IMG ...)`` listing images in carrier order."""

    def __init__(self, C: SetCategory):
        self.C = C
        self.by_text = {a: {str(e): e for e in es} for a, es in C.atoms.items()}

    def obj(self, node):
        node = _list(node, what="an object word (A ...)")
        w = tuple(_atom(a, "an atom") for a in node.items)
        for a, n in zip(w, node.items):
            if a not in self.C.atoms:
                raise _err(n, f"unknown atom {a}", "a declared atom", "reference")
        if w not in self.C.objects:
            raise _err(node, f"word {w} is longer than the product depth", kind="typing")
        return w

    def point(self, node, w):
        node = _list(node, what="a point (v ...)")
        if len(node) != len(w):
            raise _err(node, f"point of {self.C.format_obj(w)} needs {len(w)} coordinate(s)", kind="typing")
        out = []
        for a, n in zip(w, node.items):
            t = _atom(n, "an element")
            if t not in self.by_text[a]:
                raise _err(n, f"{t} is not an element of {a}", f"an element of {a}", "reference")
            out.append(self.by_text[a][t])
        return tuple(out)

    def mor(self, node):
        node = _list(node, "fun", "(fun DOM COD IMG ...)")
        if len(node) < 3:
            raise _err(node, "(fun DOM COD IMG ...)")
        a, b = self.obj(node[1]), self.obj(node[2])
        imgs = node.items[3:]
        n = len(self.C.carrier(a))
        if len(imgs) != n:
            raise _err(node, f"expected {n} image(s), one per element of the domain", f"{n} images", "typing")
        return self.C.make(a, b, lambda x, it=iter(imgs): self.point(next(it), b))

    def p_obj(self, w):
        return "(" + " ".join(w) + ")"

    def p_point(self, x):
        return "(" + " ".join(map(str, x)) + ")"

    def p_mor(self, f):
        return " ".join(["(fun", self.p_obj(f.dom), self.p_obj(f.cod), *map(self.p_point, f.table)]) + ")"


class PowersetCodec(SetCodec):
    def __init__(self, pc):
        super().__init__(pc.base)
        self.pc = pc

    def elem(self, node, c):
        if isinstance(node, Atom) and c == () and node.text in ("top", "bot"):
            return frozenset({()}) if node.text == "top" else frozenset()
        node = _list(node, "set", "(set POINT ...)")
        return frozenset(self.point(x, c) for x in node.items[1:])

    def p_elem(self, c, r):
        carrier = self.C.carrier(c)
        return " ".join(["(set", *(self.p_point(x) for x in carrier if x in r)]) + ")"


def _parse_value(node, alg):
    t = _atom(node, "a truth value")
    if alg.values is not None:
        for v in alg.values:
            if str(v) == t:
                return v
    try:
        v = Fraction(t)
    except (ValueError, ZeroDivisionError):
        raise _err(node, f"unknown truth value {t}", "a truth value", "reference") from None
    if not alg.contains(v):
        raise _err(node, f"{t} is not a truth value of {alg.name}", "a truth value", "typing")
    return v


class LatticeCodec(SetCodec):
    def __init__(self, pc):
        super().__init__(pc.base)
        self.pc = pc

    def value(self, node):
        return _parse_value(node, self.pc.algebra)

    def elem(self, node, c):
        n = len(self.C.carrier(c))
        if isinstance(node, Atom):
            if n != 1:
                raise _err(node, "a bare value is only allowed on a one-point carrier", "(vals v ...)", "typing")
            return (self.value(node),)
        node = _list(node, "vals", "(vals v ...)")
        if len(node) - 1 != n:
            raise _err(node, f"expected {n} value(s), one per point of the carrier", f"{n} values", "typing")
        return tuple(self.value(x) for x in node.items[1:])

    def p_value(self, v):
        return _value_text(v)

    def p_elem(self, c, r):
        return " ".join(["(vals", *map(_value_text, r)]) + ")"


class ProductCodec:
    def __init__(self, pc):
        self.pc = pc
        self.parts = [codec_for(f) for f in pc.factors]

    def _split(self, node, what):
        node = _list(node, "<>", f"(<> {what} ...)")
        if len(node) - 1 != len(self.parts):
            raise _err(node, f"expected {len(self.parts)} component(s)", f"{len(self.parts)} components", "typing")
        return node.items[1:]

    def obj(self, node):
        return tuple(k.obj(x) for k, x in zip(self.parts, self._split(node, "OBJ")))

    def mor(self, node):
        return tuple(k.mor(x) for k, x in zip(self.parts, self._split(node, "MOR")))

    def elem(self, node, c):
        return tuple(k.elem(x, ci) for k, x, ci in zip(self.parts, self._split(node, "ELEM"), c))

    def p_obj(self, c):
        return " ".join(["(<>", *(k.p_obj(x) for k, x in zip(self.parts, c))]) + ")"

    def p_mor(self, f):
        return " ".join(["(<>", *(k.p_mor(x) for k, x in zip(self.parts, f))]) + ")"

    def p_elem(self, c, r):
        return " ".join(["(<>", *(k.p_elem(ci, x) for k, ci, x in zip(self.parts, c, r))]) + ")"


class TableCodec:
    def __init__(self, pc):
        self.pc = pc

    def obj(self, node):
        t = _atom(node, "an object name")
        if t not in self.pc.base.objects:
            raise _err(node, f"unknown object {t}", "an object", "reference")
        return t

    def mor(self, node):
        t = _atom(node, "a morphism name")
        if t not in self.pc.base.mors:
            raise _err(node, f"unknown morphism {t}", "a morphism", "reference")
        return t

    def elem(self, node, c):
        t = _atom(node, "a fiber element")
        if t not in self.pc.tables[c][0]:
            raise _err(node, f"{t} is not an element of P({c})", f"an element of P({c})", "reference")
        return t

    def p_obj(self, c):
        return quote(c)

    def p_mor(self, f):
        return quote(f)

    def p_elem(self, c, r):
        return quote(r)


class ImageCodec:
    """Values of an image prop-category are values of the ambient one."""

    def __init__(self, pc):
        self.pc = pc
        self.inner = codec_for(pc.F.target)

    def obj(self, node):
        c = self.inner.obj(node)
        if c not in self.pc.base.objects:
            raise _err(node, "object is outside the image", kind="typing")
        return c

    def mor(self, node):
        return self.inner.mor(node)

    def elem(self, node, c):
        r = self.inner.elem(node, c)
        if not self.pc.fiber(c).contains(r):
            raise _err(node, "element is outside the image fiber", kind="typing")
        return r

    def p_obj(self, c):
        return self.inner.p_obj(c)

    def p_mor(self, f):
        return self.inner.p_mor(f)

    def p_elem(self, c, r):
        return self.inner.p_elem(c, r)


def codec_for(pc):
    if isinstance(pc, PowersetPropCategory):
        return PowersetCodec(pc)
    if isinstance(pc, LatticePropCategory):
        return LatticeCodec(pc)
    if isinstance(pc, ProductPropCategory):
        return ProductCodec(pc)
    if isinstance(pc, TablePropCategory):
        return TableCodec(pc)
    if isinstance(pc, ImagePropCategory):
        return ImageCodec(pc)
    raise TypeError(f"no value syntax for {pc.describe()}")


# ------------------------------------------------------------- workspace


class Workspace:
    """Loads files by path, caching each so cross-references share objects."""

    def __init__(self, probe=None):
        self.cache = {}
        self.probe = probe
        self.paths = {}  # id(obj) -> path it was loaded from

    def _key(self, path):
        return os.path.realpath(path)

    def _read(self, path):
        try:
            with open(path, encoding="utf-8") as fh:
                return fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read file: {exc.strerror}", path=path, kind="reference") from None

    def _load(self, path, kind, parse):
        key = (kind, self._key(path))
        if key not in self.cache:
            text = self._read(path)
            try:
                obj = parse(text, path)
            except ParseError as exc:
                raise (exc if exc.path else exc.with_path(path)) from None
            self.cache[key] = obj
            self.paths[id(obj)] = path
        return self.cache[key]

    def path_of(self, obj):
        return self.paths.get(id(obj))

    def theory(self, path) -> Theory:
        return self._load(path, "theory", parse_theory)

    def pc(self, path):
        return self._load(path, "pc", lambda text, p: self.parse_pc(read_one(text, p), os.path.dirname(p)))

    def structure(self, path) -> Structure:
        return self._load(path, "structure",
                          lambda text, p: self.parse_structure(read_one(text, p), os.path.dirname(p)))

    def morphism(self, path) -> PropMorphism:
        return self._load(path, "morphism",
                          lambda text, p: self.parse_morphism(read_one(text, p), os.path.dirname(p)))

    def interp(self, path) -> SignatureInterpretation:
        return self._load(path, "interp", lambda text, p: self.parse_interp(read_one(text, p), os.path.dirname(p)))

    def proof(self, path, T: Theory) -> ProofNode:
        return parse_proof(self._read(path), T, path)

    def load_probe(self, path):
        node = _list(read_one(self._read(path), path), "probe", "(probe v ...)")
        try:
            self.probe = tuple(Fraction(_atom(x)) for x in node.items[1:])
        except ValueError:
            raise _err(node, "probe values must be rationals", "rationals").with_path(path) from None
        return self.probe

    def parse_text(self, kind, text, base=".", path=None):
        """Parse ``text`` as a file of ``kind``; references resolve against ``base``."""
        try:
            if kind == "theory":
                return parse_theory(text, path)
            node = read_one(text, path)
            parsers = {"pc": self.parse_pc, "structure": self.parse_structure, "morphism": self.parse_morphism,
                       "interp": self.parse_interp}
            if kind not in parsers:
                raise ValueError(f"unknown file kind {kind}")
            return parsers[kind](node, base)
        except ParseError as exc:
            raise (exc if exc.path else exc.with_path(path)) from None

    # -------------------------------------------------------- references

    def _ref(self, node, base, loader, inline):
        """A quoted path, (include "path") or an inline form."""
        if isinstance(node, Atom):
            return loader(os.path.join(base, node.text))
        if node.head == "include":
            if len(node) != 2:
                raise _err(node, '(include "path")')
            return loader(os.path.join(base, _atom(node[1], "a path")))
        return inline(node, base)

    def _pc_ref(self, node, base):
        return self._ref(node, base, self.pc, self.parse_pc)

    def _mor_ref(self, node, base):
        return self._ref(node, base, self.morphism, self.parse_morphism)

    def _theory_ref(self, node, base):
        if not isinstance(node, Atom):
            raise _err(node, "theories are referenced by path", '"path"')
        return self.theory(os.path.join(base, node.text))

    # ------------------------------------------------------ prop-categories

    def parse_pc(self, node, base="."):
        node = _list(node, what="a prop-category form")
        try:
            if node.head == "builtin":
                pc = self._builtin(node)
            elif node.head == "product":
                pc = self._product(node, base)
            elif node.head == "tables":
                pc = self._tables(node)
            else:
                raise _err(node, f"unknown prop-category form {node.head}", "(builtin ...), (product ...) or (tables ...)")
        except _SEMANTIC as exc:
            raise _wrap(node, exc, "validation") from None
        pc.presentation = node
        return pc

    def _atoms(self, secs, node):
        atoms = {}
        for a in secs.get("atom", []):
            if len(a) < 2:
                raise _err(a, "(atom NAME element ...)")
            elems = []
            for x in a.items[2:]:
                t = _atom(x, "an element")
                elems.append(int(t) if t.lstrip("-").isdigit() else t)
            atoms[_atom(a[1])] = tuple(elems)
        if not atoms:
            raise _err(node, "at least one (atom ...) is required", "(atom NAME element ...)")
        return atoms

    def _depth(self, secs, node, default=2):
        d = _one(secs, "depth", node, required=False)
        return default if d is None else _int(d[1], "a depth")

    def _builtin(self, node):
        kind = _atom(node[1], "powerset, lattice or fuzzy") if len(node) > 1 else None
        secs = _sections(node, 2)
        atoms = self._atoms(secs, node)
        depth = self._depth(secs, node)
        if kind == "powerset":
            specs = {}
            C = SetCategory(atoms, depth)
            codec = SetCodec(C)
            for q in secs.get("quantifier", []):
                if len(q) != 3:
                    raise _err(q, "(quantifier NAME SPEC)")
                specs[_atom(q[1])] = self._mostowski(q[2], C, codec)
            return mk_powerset_propcat(atoms, specs or None, depth)
        if kind == "lattice":
            alg = self._algebra(_one(secs, "algebra", node))
            return mk_lattice_propcat(atoms, alg, depth, self._kinds(secs) or None)
        if kind == "fuzzy":
            t = _one(secs, "tnorm", node, required=False)
            tnorm = "product" if t is None else _atom(t[1], "a t-norm")
            p = _one(secs, "probe", node, required=False)
            probe = self.probe
            if probe is None:
                probe = (0, Fraction(1, 4), Fraction(1, 2), 1) if p is None else \
                    tuple(Fraction(_atom(x)) for x in p.items[1:])
            if tnorm not in ("min", "product", "lukasiewicz"):
                raise _err(t, f"unknown t-norm {tnorm}", "min, product or lukasiewicz", "reference")
            return mk_fuzzy_propcat(atoms, tnorm, self._kinds(secs) or None, depth, probe)
        raise _err(node, f"unknown builtin {kind}", "powerset, lattice or fuzzy", "reference")

    def _kinds(self, secs):
        out = {}
        for q in secs.get("quantifier", []):
            if len(q) != 3:
                raise _err(q, "(quantifier NAME inf|sup|tnorm)")
            out[_atom(q[1])] = _atom(q[2], "inf, sup or tnorm")
        return out

    def _mostowski(self, node, C, codec):
        if isinstance(node, Atom):
            named = {"forall": spec_forall, "exists": spec_exists}
            if node.text not in named:
                raise _err(node, f"unknown quantifier spec {node.text}", "forall, exists, (exactly n), (atleast n)",
                           "reference")
            return named[node.text]
        h = node.head
        if h in ("exactly", "atleast") and len(node) == 2:
            n = _int(node[1])
            return spec_exactly(n) if h == "exactly" else spec_atleast(n)
        if h == "by-carrier":
            table = {}
            for entry in node.items[1:]:
                entry = _list(entry, what="(OBJ (set ...) ...)")
                w = codec.obj(entry[0])
                fam = []
                for s in entry.items[1:]:
                    s = _list(s, "set", "(set POINT ...)")
                    fam.append(frozenset(codec.point(x, w) for x in s.items[1:]))
                table[w] = fam
            return table
        raise _err(node, "unknown quantifier spec", "forall, exists, (exactly n), (atleast n), (by-carrier ...)")

    def _algebra(self, node):
        if len(node) != 2:
            raise _err(node, "(algebra SPEC)")
        spec = node[1]
        if isinstance(spec, SList) and spec.head == "chain":
            n = _int(spec[1], "a chain length")
            rest = [_atom(x) for x in spec.items[2:]]
            tnorm = next((x for x in rest if x != "negation"), "lukasiewicz")
            return chain(n, tnorm, "negation" in rest)
        if isinstance(spec, SList) and spec.head == "boolean":
            return boolean("negation" in [_atom(x) for x in spec.items[1:]])
        if isinstance(spec, SList) and spec.head == "tables":
            secs = _sections(spec)
            values = [_atom(x) for x in _one(secs, "values", spec).items[1:]]
            known = set(values)

            def val(n):
                t = _atom(n, "a value")
                if t not in known:
                    raise _err(n, f"unknown value {t}", "a declared value", "reference")
                return t

            leq = []
            for sec in secs.get("leq", []):
                for pair in sec.items[1:]:
                    pair = _list(pair, what="(a b)")
                    leq.append((val(pair[0]), val(pair[1])))
            ops = {}
            for op in secs.get("op", []):
                name, ar = _atom(op[1]), _int(op[2], "an arity")
                table = {}
                for row in op.items[3:]:
                    row = _list(row, what="(args ... value)")
                    if len(row) != ar + 1:
                        raise _err(row, f"rows of {name} have {ar} argument(s) and a value", kind="typing")
                    table[tuple(val(x) for x in row.items[:-1])] = val(row.items[-1])
                ops[name] = (ar, table)
            return algebra_from_tables(values, leq, ops, name="tables")
        raise _err(spec, "unknown algebra", "(chain n [tnorm] [negation]), (boolean [negation]) or (tables ...)")

    def _product(self, node, base):
        factors, lang = [], None
        for item in node.items[1:]:
            if isinstance(item, SList) and item.head == "language":
                _, _, lang = parse_declarations(item.items[1:])
            else:
                factors.append(self._pc_ref(item, base))
        return ProductPropCategory(factors, lang)

    def _tables(self, node):
        secs = _sections(node)
        cat = _one(secs, "category", node)
        cs = _sections(cat)
        objects = [_atom(x, "an object") for x in _one(cs, "obj", cat).items[1:]]
        oset = set(objects)

        def obj(n):
            t = _atom(n, "an object")
            if t not in oset:
                raise _err(n, f"unknown object {t}", "a declared object", "reference")
            return t

        mors = {}
        for sec in cs.get("mor", []):
            for m in sec.items[1:]:
                m = _list(m, what="(f dom cod)")
                if len(m) != 3:
                    raise _err(m, "(f dom cod)")
                mors[_atom(m[0])] = (obj(m[1]), obj(m[2]))

        def mor(n):
            t = _atom(n, "a morphism")
            if t not in mors:
                raise _err(n, f"unknown morphism {t}", "a declared morphism", "reference")
            return t

        def rows(key, width):
            out = []
            for sec in cs.get(key, []):
                for r in sec.items[1:]:
                    r = _list(r, what=f"a ({key} ...) row")
                    if len(r) != width:
                        raise _err(r, f"rows of ({key} ...) have {width} entries", kind="grammar")
                    out.append(r)
            return out

        ids = {obj(r[0]): mor(r[1]) for r in rows("id", 2)}
        comp = {(mor(r[0]), mor(r[1])): mor(r[2]) for r in rows("comp", 3)}
        prods = {(obj(r[0]), obj(r[1])): (obj(r[2]), mor(r[3]), mor(r[4])) for r in rows("prod", 5)}
        pairs = {(mor(r[0]), mor(r[1])): mor(r[2]) for r in rows("pair", 3)}
        term = _one(cs, "terminal", cat)
        C = TableCategory(objects, mors, comp, ids, obj(term[1]), prods, pairs)
        lsec = _one(secs, "language", node)
        _, _, lang = parse_declarations(lsec.items[1:])
        fibers = {}
        for f in secs.get("fiber", []):
            c = obj(f[1])
            fs = _sections(f, 2)
            elems = [_atom(x, "an element") for x in _one(fs, "elems", f).items[1:]]
            eset = set(elems)

            def el(n, eset=eset, c=c):
                t = _atom(n, "a fiber element")
                if t not in eset:
                    raise _err(n, f"{t} is not an element of P({c})", f"an element of P({c})", "reference")
                return t

            leq = []
            for sec in fs.get("leq", []):
                for pair in sec.items[1:]:
                    pair = _list(pair, what="(a b)")
                    leq.append((el(pair[0]), el(pair[1])))
            ops = {}
            for op in fs.get("op", []):
                name = _atom(op[1])
                table = {}
                for row in op.items[2:]:
                    row = _list(row, what="(args ... value)")
                    table[tuple(el(x) for x in row.items[:-1])] = el(row.items[-1])
                ops[name] = table
            fibers[c] = (elems, leq, ops)

        def elem_of(n, c):
            t = _atom(n, "a fiber element")
            if c in fibers and t not in fibers[c][0]:
                raise _err(n, f"{t} is not an element of P({c})", f"an element of P({c})", "reference")
            return t

        def mapping(sec, src, dst):
            m = _one(_sections(sec, len(sec) - 1), "map", sec)
            out = {}
            for pair in m.items[1:]:
                pair = _list(pair, what="(r s)")
                out[elem_of(pair[0], src)] = elem_of(pair[1], dst)
            return out

        acts = {}
        for a in secs.get("act", []):
            f = mor(a[1])
            acts[f] = mapping(a, C.cod(f), C.dom(f))
        quants = {}
        for q in secs.get("quant", []):
            name, b, c = _atom(q[1]), obj(q[2]), obj(q[3])
            bc = C.product(b, c)[0]
            quants[(name, b, c)] = mapping(q, bc, b)
        eqs = {}
        for e in secs.get("eq", []):
            c = obj(e[1])
            eqs[c] = elem_of(e[2], C.product(c, c)[0])
        return TablePropCategory(C, lang, fibers, acts, quants, eqs)

    # ----------------------------------------------------------- structures

    def parse_structure(self, node, base="."):
        node = _list(node, "structure", "(structure ...)")
        secs = _sections(node)
        host_node = _one(secs, "host", node)
        pc = self._pc_ref(host_node[1], base)
        codec = codec_for(pc)
        nm = _one(secs, "name", node, required=False)
        name = _atom(nm[1]) if nm is not None else ""
        sig = _one(secs, "signature", node, required=False)
        declared = None
        if sig is not None:
            declared = self._theory_ref(sig[1], base).signature
        sorts, fdecl, rdecl, funcs, rels = {}, {}, {}, {}, {}
        for s in secs.get("sort", []):
            if len(s) != 3:
                raise _err(s, "(sort σ OBJ)")
            sorts[_atom(s[1])] = codec.obj(s[2])
        if declared is not None:
            missing = declared.sorts - set(sorts)
            if missing:
                raise _err(node, f"sort {sorted(missing)[0]} is not interpreted", "(sort σ OBJ)", "reference")
        sortset = set(sorts)

        def sref(n):
            t = _atom(n, "a sort")
            if t not in sortset:
                raise _err(n, f"unknown sort {t}", "a declared sort", "reference")
            return t

        C = pc.base
        for f in secs.get("fn", []):
            name_f = _atom(f[1], "a function symbol")
            if len(f) == 5:
                fdecl[name_f] = (tuple(sref(a) for a in _list(f[2]).items), sref(f[3]))
                funcs[name_f] = codec.mor(f[4])
            elif len(f) == 3 and declared is not None:
                if name_f not in declared.fn:
                    raise _err(f[1], f"unknown function symbol {name_f}", "a declared symbol", "reference")
                fdecl[name_f] = declared.fn[name_f]
                funcs[name_f] = codec.mor(f[2])
            else:
                raise _err(f, "(fn f (σ ...) τ MOR), or (fn f MOR) with a (signature ...)")
        for r in secs.get("rel", []):
            name_r = _atom(r[1], "a relation symbol")
            if len(r) == 4:
                rdecl[name_r] = tuple(sref(a) for a in _list(r[2]).items)
                node_e = r[3]
            elif len(r) == 3 and declared is not None:
                if name_r not in declared.rel:
                    raise _err(r[1], f"unknown relation symbol {name_r}", "a declared symbol", "reference")
                rdecl[name_r] = declared.rel[name_r]
                node_e = r[2]
            else:
                raise _err(r, "(rel R (σ ...) ELEM), or (rel R ELEM) with a (signature ...)")
            try:
                c = C.nprod([sorts[s] for s in rdecl[name_r]])
            except CategoryError as exc:
                raise _wrap(r, exc, "typing") from None
            rels[name_r] = codec.elem(node_e, c)
        try:
            sg = Signature(sorts, fdecl, rdecl)
            if declared is not None and sg != declared:
                raise _err(node, "interpreted symbols differ from the referenced signature", kind="reference")
            return Structure(pc, sg, sorts, funcs, rels, name=name)
        except _SEMANTIC as exc:
            raise _wrap(node, exc, "typing") from None

    # ------------------------------------------------------------ morphisms

    def parse_morphism(self, node, base="."):
        node = _list(node, "morphism", "(morphism ...)")
        secs = _sections(node)
        nm = _one(secs, "name", node, required=False)
        name = _atom(nm[1]) if nm is not None else "F"
        P = self._pc_ref(_one(secs, "src", node)[1], base)
        Q = self._pc_ref(_one(secs, "tgt", node)[1], base)
        kinds = [k for k in ("identity", "value-map", "projection", "pairing", "compose", "omap") if k in secs]
        if len(kinds) != 1:
            raise _err(node, "exactly one body is required",
                       "(identity), (value-map ...), (projection i), (pairing ...), (compose ...) or tables")
        kind = kinds[0]
        try:
            if kind == "identity":
                if P is not Q:
                    raise _err(node, "identity needs the same source and target", kind="typing")
                F = identity_morphism(P, name)
                F.is_identity = True
            elif kind == "value-map":
                vm = secs["value-map"][0]
                sa, ta = P.algebra, Q.algebra
                if len(vm) == 2 and isinstance(vm[1], SList) and vm[1].head == "at-least":
                    # threshold map onto the target's top and bottom
                    t = _parse_value(vm[1][1], sa)
                    F = value_map_morphism(P, Q, lambda v, t=t: ta.top if sa.leq(t, v) else ta.bottom, name)
                    F.value_rule = t
                    F.presentation = node
                    if F.source is not P or F.target is not Q:
                        raise _err(node, "body does not match the declared source and target", kind="typing")
                    return F
                table = {}
                for pair in vm.items[1:]:
                    pair = _list(pair, what="(v w)")
                    table[_parse_value(pair[0], sa)] = _parse_value(pair[1], ta)
                if sa.values is not None:
                    missing = [v for v in sa.values if v not in table]
                    if missing:
                        raise _err(vm, f"value map undefined at {missing[0]}", kind="typing")
                F = value_map_morphism(P, Q, table, name)
                F.value_table = table
            elif kind == "projection":
                i = _int(secs["projection"][0][1], "a factor index")
                if not isinstance(P, ProductPropCategory) or not 1 <= i <= len(P.factors):
                    raise _err(secs["projection"][0], "projection needs a product source and a valid index",
                               kind="typing")
                if P.factors[i - 1] is not Q:
                    raise _err(node, "target must be the projected factor", kind="typing")
                F = projection(P, i - 1)
                F.name = name
            elif kind == "pairing":
                Fs = [self._mor_ref(x, base) for x in secs["pairing"][0].items[1:]]
                F = pairing(Q, Fs)
                F.name = name
            elif kind == "compose":
                Fs = [self._mor_ref(x, base) for x in secs["compose"][0].items[1:]]
                if not Fs:
                    raise _err(secs["compose"][0], "compose needs at least one morphism")
                F = Fs[0]
                for K in Fs[1:]:
                    F = compose_morphisms(K, F)
                F.name = name
            else:
                F = self._table_morphism(secs, node, P, Q, name)
        except _SEMANTIC as exc:
            raise _wrap(node, exc, "typing") from None
        if F.source is not P or F.target is not Q:
            raise _err(node, "body does not match the declared source and target", kind="typing")
        F.presentation = node
        return F

    def _table_morphism(self, secs, node, P, Q, name):
        cp, cq = codec_for(P), codec_for(Q)
        om = _one(secs, "omap", node)
        mm = _one(secs, "mmap", node)
        if len(om) == 2 and isinstance(om[1], Atom) and om[1].text == "identity":
            omap = {c: c for c in P.base.objects}
        else:
            omap = {}
            for pair in om.items[1:]:
                pair = _list(pair, what="(OBJ OBJ)")
                omap[cp.obj(pair[0])] = cq.obj(pair[1])
        if len(mm) == 2 and isinstance(mm[1], Atom) and mm[1].text == "identity":
            mmap = None
        else:
            mmap = {}
            for pair in mm.items[1:]:
                pair = _list(pair, what="(MOR MOR)")
                mmap[cp.mor(pair[0])] = cq.mor(pair[1])
        pmap = {}
        for sec in secs.get("pmap", []):
            c = cp.obj(sec[1])
            if c not in omap:
                raise _err(sec[1], "object map undefined here", kind="reference")
            table = {}
            for pair in sec.items[2:]:
                pair = _list(pair, what="(ELEM ELEM)")
                table[cp.elem(pair[0], c)] = cq.elem(pair[1], omap[c])
            pmap[c] = table
        F = table_morphism(P, Q, omap, mmap or {}, pmap, name)
        if mmap is None:
            F.mor = lambda f: f
        return F

    # ------------------------------------------------------ interpretations

    def parse_interp(self, node, base="."):
        node = _list(node, "interp", "(interp ...)")
        secs = _sections(node)
        src = self._theory_ref(_one(secs, "source", node)[1], base)
        tgt = self._theory_ref(_one(secs, "target", node)[1], base)
        sa, ta = src.signature, tgt.signature
        sorts = {}
        for s in secs.get("sort", []):
            if len(s) != 3:
                raise _err(s, "(sort σ (ctx ...))")
            sorts[parse_sort_ref(s[1], sa)] = parse_ctx(s[2], ta)
        missing = sa.sorts - set(sorts)
        if missing:
            raise _err(node, f"sort {sorted(missing)[0]} has no image", "(sort σ (ctx ...))", "reference")

        def default_ctx(args):
            entries = []
            for i, a in enumerate(args, 1):
                entries += [(f"{v}{i}", s) for v, s in sorts[a]]
            return Context(entries)

        funcs, rels = {}, {}
        for f in secs.get("fn", []):
            name = _atom(f[1], "a function symbol")
            if name not in sa.fn:
                raise _err(f[1], f"unknown function symbol {name}", "a source symbol", "reference")
            rest = f.items[2:]
            ctx = parse_ctx(rest[0], ta) if len(rest) == 2 else default_ctx(sa.fn[name][0])
            terms = _list(rest[-1], "terms", "(terms M ...)")
            funcs[name] = (ctx, tuple(parse_term(t, ta, ctx) for t in terms.items[1:]))
        for r in secs.get("rel", []):
            name = _atom(r[1], "a relation symbol")
            if name not in sa.rel:
                raise _err(r[1], f"unknown relation symbol {name}", "a source symbol", "reference")
            rest = r.items[2:]
            ctx = parse_ctx(rest[0], ta) if len(rest) == 2 else default_ctx(sa.rel[name])
            rels[name] = (ctx, parse_formula(rest[-1], ta, tgt.language, ctx))
        try:
            h = SignatureInterpretation(sa, ta, sorts, funcs, rels, tgt.language)
        except WellFormednessError as exc:
            raise _wrap(node, exc) from None
        object.__setattr__(h, "theories", (src, tgt))
        return h


# ---------------------------------------------------------------- printers


def _host_ref(pc, ws: Workspace | None):
    path = ws.path_of(pc) if ws is not None else None
    if path is not None:
        return quote(os.path.abspath(path))
    pres = getattr(pc, "presentation", None)
    if pres is None:
        raise TypeError(f"{pc.describe()} has no file presentation")
    return repr(pres)


def print_structure(S: Structure, ws: Workspace | None = None, host=None) -> str:
    codec = codec_for(S.host)
    C = S.host.base
    lines = ["(structure"]
    if S.name:
        lines.append(f"  (name {quote(S.name)})")
    lines.append(f"  (host {host if host is not None else _host_ref(S.host, ws)})")
    for s in sorted(S.sorts):
        lines.append(f"  (sort {s} {codec.p_obj(S.sorts[s])})")
    for f, (args, r) in S.signature.fn.items():
        lines.append(f"  (fn {f} ({' '.join(args)}) {r} {codec.p_mor(S.funcs[f])})")
    for R, args in S.signature.rel.items():
        c = C.nprod([S.sorts[s] for s in args])
        lines.append(f"  (rel {R} ({' '.join(args)}) {codec.p_elem(c, S.rels[R])})")
    return "\n".join(lines) + ")\n"


def print_pc(pc) -> str:
    pres = getattr(pc, "presentation", None)
    if pres is None:
        raise TypeError(f"{pc.describe()} has no file presentation")
    return render(_normalize(pres)) + "\n"


def _normalize(node):
    if isinstance(node, Atom):
        return quote(node.text) if node.quoted else node.text
    return [_normalize(x) for x in node.items]


def print_morphism(F: PropMorphism, ws: Workspace | None = None) -> str:
    """Canonical explicit form: value maps stay value maps, everything else
    becomes object, morphism and fiber tables (only practical for small hosts)."""
    src, tgt = _host_ref(F.source, ws), _host_ref(F.target, ws)
    head = [f"(morphism (name {quote(F.name)})", f"  (src {src})", f"  (tgt {tgt})"]
    if getattr(F, "is_identity", False):
        return "\n".join(head + ["  (identity)"]) + ")\n"
    rule = getattr(F, "value_rule", None)
    if rule is not None:
        return "\n".join(head + [f"  (value-map (at-least {rule}))"]) + ")\n"
    vt = getattr(F, "value_table", None)
    if vt is not None:
        pairs = " ".join(f"({a} {b})" for a, b in vt.items())
        return "\n".join(head + [f"  (value-map {pairs})"]) + ")\n"
    cp, cq = codec_for(F.source), codec_for(F.target)
    P = F.source
    body = ["  (omap " + " ".join(f"({cp.p_obj(c)} {cq.p_obj(F.obj(c))})" for c in P.base.objects) + ")",
            "  (mmap " + " ".join(f"({cp.p_mor(f)} {cq.p_mor(F.mor(f))})" for f in P.base.morphisms()) + ")"]
    for c in P.base.objects:
        d = F.obj(c)
        body.append(f"  (pmap {cp.p_obj(c)} " + " ".join(
            f"({cp.p_elem(c, r)} {cq.p_elem(d, F.fib(c, r))})" for r in P.fiber(c).probe) + ")")
    return "\n".join(head + body) + ")\n"


def print_interp(h: SignatureInterpretation, source_path, target_path) -> str:
    lines = ["(interp", f"  (source {quote(os.path.abspath(source_path))})",
             f"  (target {quote(os.path.abspath(target_path))})"]
    for s in sorted(h.sorts):
        lines.append(f"  (sort {s} {print_ctx(h.sorts[s])})")
    for f in sorted(h.funcs):
        ctx, terms = h.funcs[f]
        lines.append(f"  (fn {f} {print_ctx(ctx)} (terms" + "".join(" " + print_term(t) for t in terms) + "))")
    for R in sorted(h.rels):
        ctx, phi = h.rels[R]
        lines.append(f"  (rel {R} {print_ctx(ctx)} {print_formula(phi)})")
    return "\n".join(lines) + ")\n"


def print_elem(pc, c, r) -> str:
    return codec_for(pc).p_elem(c, r)


__all__ = [
    "ParseError", "Workspace", "codec_for", "parse_assertion", "parse_ctx", "parse_formula", "parse_proof",
    "parse_term", "parse_theory", "print_assertion", "print_ctx", "print_elem", "print_formula",
    "print_interp", "print_morphism", "print_pc", "print_proof", "print_structure", "print_term",
    "print_theory", "read_all", "read_one",
]
