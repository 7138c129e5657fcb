from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from fiberlogic.propcat import (
    PropCatError,
    ProductPropCategory,
    algebra_from_tables,
    boolean,
    chain,
    check_fa,
    mk_fuzzy_propcat,
    mk_lattice_propcat,
    mk_powerset_propcat,
    spec_exactly,
    unit_interval,
)

from conftest import fx

half, quarter = Fraction(1, 2), Fraction(1, 4)
ATOMS = {"B": (0, 1)}
POW = mk_powerset_propcat(ATOMS)
L5 = mk_lattice_propcat(ATOMS, chain(5), 2)
G5 = mk_lattice_propcat(ATOMS, chain(5, "min"), 2, {"forall": "inf", "omega": "tnorm"})
HOSTS = [POW, L5, G5]


# ------------------------------------------------------ concrete values


def test_fuzzy_quantifiers_on_constant_half():
    pc = mk_fuzzy_propcat({"A": (0,), "B": (0, 1)})
    r = (half, half)  # element of P(A x B)
    assert pc.quant("Ωprod", ("A",), ("B",), r) == (quarter,)
    assert pc.quant("forall", ("A",), ("B",), r) == (half,)
    assert pc.quant("exists", ("A",), ("B",), r) == (half,)


def test_lukasiewicz_tensor():
    t = unit_interval("lukasiewicz").ops["tensor"][1]
    assert t(Fraction(7, 10), Fraction(6, 10)) == Fraction(3, 10)
    assert t(Fraction(3, 10), Fraction(6, 10)) == 0
    alg = chain(5)
    for a in alg.values:
        for b in alg.values:
            assert alg.ops["tensor"][1](a, b) == max(Fraction(0), a + b - 1)


def test_values_are_exact():
    pc = mk_fuzzy_propcat({"B": (0, 1, 2)})
    out = pc.quant("Ωprod", (), ("B",), (Fraction(1, 3),) * 3)
    assert out == (Fraction(1, 27),) and isinstance(out[0], Fraction)


def test_powerset_quantifier_edges():
    c = ("B",)
    empty, full = frozenset(), frozenset(POW.base.carrier(c))
    assert POW.quant("exists", (), c, empty) == frozenset()
    assert POW.quant("forall", (), c, full) == frozenset({()})
    assert POW.quant("forall", (), c, frozenset({(0,)})) == frozenset()


def test_equality_is_the_diagonal():
    assert POW.eq(("B",)) == frozenset({(0, 0), (1, 1)})
    one, zero = Fraction(1), Fraction(0)
    assert L5.eq(("B",)) == (one, zero, zero, one)


def test_terminal_only_base():
    pc = mk_powerset_propcat({})
    assert pc.base.objects == ((),)
    rep = check_fa(pc, limit=None)
    assert rep.ok and rep.exhaustive


def test_bad_inputs_raise():
    with pytest.raises(PropCatError):
        chain(1)
    with pytest.raises(PropCatError):
        chain(4, lambda x, y: (x + y) / 2)  # leaves the chain
    with pytest.raises(PropCatError):
        mk_fuzzy_propcat(ATOMS, tnorm=lambda x, y: x)
    with pytest.raises(PropCatError):
        algebra_from_tables(["a", "b"], [], {})  # no top


def test_algebra_from_tables_finds_bounds():
    alg = algebra_from_tables(["lo", "a", "b", "hi"], [("lo", "a"), ("lo", "b"), ("a", "hi"), ("b", "hi"),
                                                      ("lo", "hi")], {})
    assert alg.meet2("a", "b") == "lo" and alg.join2("a", "b") == "hi"
    assert alg.top == "hi" and alg.bottom == "lo"


# ---------------------------------------------------------- check_fa


@pytest.mark.parametrize("name", ["powerset.pc", "l5.pc", "fuzzy.pc", "table3.pc", "table2.pc", "two.pc"])
def test_fixture_hosts_are_prop_categories(ws, name):
    rep = check_fa(ws.pc(fx(name)))
    assert rep.ok, rep.summary()


def test_small_hosts_exhaustively():
    for pc in (mk_lattice_propcat({"B": (0,)}, chain(3), 2), mk_powerset_propcat({"B": (0,)})):
        rep = check_fa(pc, limit=None)
        assert rep.ok and rep.exhaustive


def test_mostowski_exactly_two_fails_condition_five(ws):
    rep = check_fa(ws.pc(fx("mostowski2.pc")))
    assert not rep.ok
    assert rep.failed_conditions() == ["Condition 5"]
    assert {v.clause for v in rep.violations} <= {"extra.unit", "extra.assoc"}


def _exactly_two_nested(diag, carrier):
    # oracle in plain sets: two over the pair vs two over each coordinate in turn
    pairs = two(diag)
    inner = {x for x in carrier if two({y for y in carrier if (x, y) in diag})}
    return pairs, two(inner)


def two(s):
    return len(s) == 2


def test_mostowski_diagonal_counterexample():
    pc = mk_powerset_propcat(ATOMS, {"two": spec_exactly(2)})
    B = ("B",)
    diag = frozenset({(0, 0), (1, 1)})
    whole, nested = _exactly_two_nested({(0, 0), (1, 1)}, (0, 1))
    assert whole and not nested
    lhs = pc.quant("two", (), ("B", "B"), diag)
    rhs = pc.quant("two", (), B, pc.quant("two", B, B, diag))
    assert lhs == frozenset({()}) and rhs == frozenset()


def test_product_host(ws):
    rep = check_fa(ws.pc(fx("pp.pc")), limit=500)
    assert rep.ok


def test_product_language_must_be_shared():
    with pytest.raises(PropCatError):
        ProductPropCategory([POW, L5])


def test_report_summary_and_record(ws):
    rep = check_fa(ws.pc(fx("mostowski2.pc")))
    rec = rep.to_record()
    assert rec["ok"] is False
    assert "Condition 5" in rep.summary()
    v = rep.violations[0].to_record()
    assert set(v) == {"condition", "clause", "witness", "lhs", "rhs"}


# ---------------------------------------------- Boolean lattice vs powerset


def test_boolean_lattice_matches_powerset():
    bl = mk_lattice_propcat(ATOMS, boolean(), 2)
    C = POW.base

    def ind(c, r):
        return tuple(Fraction(int(x in r)) for x in C.carrier(c))

    for c in C.objects:
        fib = POW.fiber(c)
        for r in fib.elements:
            for s in fib.elements:
                assert ind(c, r & s) == bl.op(c, "and", ind(c, r), ind(c, s))
                assert ind(c, r | s) == bl.op(c, "or", ind(c, r), ind(c, s))
                assert (r <= s) == bl.leq(c, ind(c, r), ind(c, s))
    for b in C.objects:
        for c in C.objects:
            if len(b) + len(c) > C.depth:
                continue
            bc = b + c
            for r in POW.fiber(bc).elements:
                for q in ("forall", "exists"):
                    assert ind(b, POW.quant(q, b, c, r)) == bl.quant(q, b, c, ind(bc, r))
    for c in C.objects:
        if 2 * len(c) <= C.depth:
            assert ind(c + c, POW.eq(c)) == bl.eq(c)


# ------------------------------------------------------------ properties


@st.composite
def morphism(draw, pc, a=None, b=None):
    C = pc.base
    a = a if a is not None else draw(st.sampled_from(C.objects))
    b = b if b is not None else draw(st.sampled_from(C.objects))
    hs = C.hom_seq(a, b)
    return hs[draw(st.integers(0, len(hs) - 1))]


@st.composite
def element(draw, pc, c):
    fib = pc.fiber(c)
    return fib.elements[draw(st.integers(0, len(fib.elements) - 1))]


@st.composite
def composable(draw, pc):
    C = pc.base
    a, b, c = (draw(st.sampled_from(C.objects)) for _ in range(3))
    f = draw(morphism(pc, a, b))
    g = draw(morphism(pc, b, c))
    r = draw(element(pc, c))
    return f, g, r


@given(st.sampled_from(HOSTS).flatmap(lambda pc: st.tuples(st.just(pc), composable(pc))))
@settings(max_examples=80)
def test_action_is_functorial(case):
    pc, (f, g, r) = case
    C = pc.base
    assert pc.act(C.identity(C.cod(g)), r) == r
    assert pc.act(C.compose(g, f), r) == pc.act(f, pc.act(g, r))


@given(st.sampled_from(HOSTS).flatmap(lambda pc: st.tuples(st.just(pc), composable(pc))),
       st.sampled_from(["and", "or", "tensor"]))
@settings(max_examples=80)
def test_action_preserves_connectives(case, op):
    pc, (f, g, r) = case
    c = pc.base.cod(g)
    s = pc.act(g, r)
    b = pc.base.dom(g)
    assert pc.act(g, pc.op(c, op, r, r)) == pc.op(b, op, s, s)
    assert pc.act(g, pc.unit(c)) == pc.unit(b)


@st.composite
def quantifier_square(draw, pc):
    # f: a -> b in the first factor, r over b x c; all words of length one
    C = pc.base
    a = b = c = ("B",)
    f = draw(morphism(pc, a, b))
    r = draw(element(pc, b + c))
    q = draw(st.sampled_from(pc.language.quantifiers))
    return f, r, q, a, b, c


@given(st.sampled_from(HOSTS).flatmap(lambda pc: st.tuples(st.just(pc), quantifier_square(pc))))
@settings(max_examples=80)
def test_quantifiers_are_natural(case):
    pc, (f, r, q, a, b, c) = case
    C = pc.base
    fc = C.times(f, C.identity(c))
    assert pc.act(f, pc.quant(q, b, c, r)) == pc.quant(q, a, c, pc.act(fc, r))


@given(st.lists(st.sampled_from(chain(5, "min").values), min_size=4, max_size=4).map(tuple))
def test_min_tnorm_quantifier_is_infimum(r):
    b = c = ("B",)
    assert G5.quant("omega", b, c, r) == G5.quant("forall", b, c, r)


@given(st.lists(st.sampled_from([Fraction(k, 8) for k in range(9)]), min_size=2, max_size=2).map(tuple))
def test_product_tnorm_quantifier_multiplies(r):
    pc = mk_fuzzy_propcat(ATOMS, product_depth=1)
    assert pc.quant("Ωprod", (), ("B",), r) == (r[0] * r[1],)
    assert pc.quant("forall", (), ("B",), r) == (min(r),)
    assert pc.quant("exists", (), ("B",), r) == (max(r),)
