from fractions import Fraction
from types import SimpleNamespace

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from fiberlogic.propcat import mk_powerset_propcat
from fiberlogic.propcat.category import Fn
from fiberlogic.semantics import (
    Budget,
    Structure,
    StructureError,
    enumerate_assertions,
    holds,
    interpret_formula,
    interpret_term,
    satisfies,
    theory_of,
)
from fiberlogic.syntax import (
    Conn,
    Context,
    Eq,
    Sequent,
    Var,
    alpha_key,
    substitute,
    wf_assertion,
)

from conftest import assertion, formula, fx, term
from strategies import CTX, SG, formulas, s_terms

X = [("x", "s")]
SWAPS = ["pow-swap", "l5-swap", "l3-swap", "g5-swap", "g3-swap", "two-swap", "fuzzy-unary", "table3", "pl5"]


def load(ws, name):
    return ws.structure(fx(f"{name}.structure"))


def rows(S, rel):
    """Oracle: a binary lattice-valued relation as a dict (a, b) -> value."""
    pts = S.host.base.carrier(("B", "B"))
    return dict(zip(pts, S.rels[rel]))


# ------------------------------------------------------- interpretation


def test_swap_squares_to_identity(ws):
    S = ws.structure(fx("swap.structure"))
    C = S.host.base
    ctx = Context(X)
    T = SimpleNamespace(signature=S.signature, language=S.language)
    assert interpret_term(S, term("(f x)", T, X), ctx).table == ((1,), (0,))
    assert interpret_term(S, term("(f (f x))", T, X), ctx) == C.identity(("B",))


def test_powerset_quantifiers_against_sets(ws, unary):
    S = load(ws, "pow-swap")
    Q = S.rels["Q"]
    pts = (0, 1)
    ex = frozenset((a,) for a in pts if any((a, b) in Q for b in pts))
    al = frozenset((a,) for a in pts if all((a, b) in Q for b in pts))
    ctx = Context(X)
    assert interpret_formula(S, formula("(exists (y s) (Q x y))", unary, X), ctx) == ex
    assert interpret_formula(S, formula("(forall (y s) (Q x y))", unary, X), ctx) == al
    assert al == frozenset({(0,)})


def test_lattice_quantifiers_against_tables(ws, unary):
    S = load(ws, "l5-swap")
    q = rows(S, "Q")
    ctx = Context(X)
    ex = tuple(max(q[(a, b)] for b in (0, 1)) for a in (0, 1))
    al = tuple(min(q[(a, b)] for b in (0, 1)) for a in (0, 1))
    assert interpret_formula(S, formula("(exists (y s) (Q x y))", unary, X), ctx) == ex
    assert interpret_formula(S, formula("(forall (y s) (Q x y))", unary, X), ctx) == al
    assert al == (Fraction(1, 2), Fraction(0))


def test_closed_double_quantifier(ws, unary):
    S = load(ws, "l5-swap")
    phi = formula("(exists (x s) (exists (y s) (Q x y)))", unary)
    assert interpret_formula(S, phi, Context()) == (Fraction(1),)


def test_reflexive_equality_is_top(ws, unary):
    for name in SWAPS:
        S = load(ws, name)
        ctx = Context(X)
        G = S.ctx_obj(ctx)
        assert interpret_formula(S, Eq("s", Var("x"), Var("x")), ctx) == S.host.op(G, "top"), name


def test_equation_satisfaction(ws, unary):
    inv = assertion("(eqn (ctx (x s)) (f (f x)) x s)", unary)
    for name in SWAPS:
        assert holds(load(ws, name), inv), name
    rep = satisfies(load(ws, "pow-const"), inv)
    assert not rep.verdict and rep.left != rep.right


def test_sequent_with_tensor_of_hypotheses(ws, unary):
    S = load(ws, "fuzzy-unary")
    # R = (1/2, 1) so R x ⊗ R x = (1/4, 1) under the product t-norm
    a = assertion("(seq (ctx (x s)) (hyp (R x)) (hyp (R x)) (concl (Q x (f x))))", unary)
    rep = satisfies(S, a)
    assert rep.left == (Fraction(1, 4), Fraction(1))
    q = rows(S, "Q")
    assert rep.right == (q[(0, 1)], q[(1, 0)])
    assert rep.verdict is False


def test_symmetry_matches_relation_table(ws, unary):
    a = assertion("(seq (ctx (x s) (y s)) (hyp (Q x y)) (concl (Q y x)))", unary)
    for name in ("l5-swap", "g5-swap", "g5-id", "fuzzy-unary"):
        S = load(ws, name)
        q = rows(S, "Q")
        expected = all(q[(a_, b)] <= q[(b, a_)] for a_ in (0, 1) for b in (0, 1))
        assert holds(S, a) == expected, name


def test_empty_antecedent_uses_unit(ws, unary):
    S = load(ws, "l5-swap")
    assert holds(S, assertion("(seq (ctx (x s)) (concl (top)))", unary))
    assert not holds(S, assertion("(seq (ctx (x s)) (concl (R x)))", unary))
    assert holds(S, assertion("(seq (ctx (x s)) (hyp (R x)) (concl (R x)))", unary))


def test_fixture_structures_model_the_theory(ws, unary):
    for name in SWAPS:
        S = load(ws, name)
        for a in unary.assertions:
            assert holds(S, a), (name, a)


def test_structure_validation(ws):
    S = load(ws, "pow-swap")
    funcs = dict(S.funcs)
    del funcs["f"]
    with pytest.raises(StructureError):
        Structure(S.host, S.signature, S.sorts, funcs, S.rels)
    with pytest.raises(StructureError):
        Structure(S.host, S.signature, S.sorts, S.funcs, {**S.rels, "R": frozenset({(5,)})})


def test_report_record(ws, unary):
    rec = satisfies(load(ws, "l5-swap"), unary.assertions[0]).to_record()
    assert rec["verdict"] is True
    assert rec["assertion"].startswith("(seq")


# ------------------------------------------------------ bounded theories


def test_budget_parse():
    b = Budget.parse("ctx=1,term=2,fml=0,ante=1")
    assert (b.ctx, b.term, b.fml, b.ante) == (1, 2, 0, 1)
    assert Budget.parse(str(b)) == b
    with pytest.raises(ValueError):
        Budget.parse("depth=3")


def test_enumeration_is_well_formed_and_duplicate_free(unary):
    b = Budget(ctx=1, term=1, fml=0, ante=1)
    seen = set()
    items = list(enumerate_assertions(unary.signature, unary.language, b))
    for a in items:
        wf_assertion(unary.signature, unary.language, a)
        seen.add(a)
    assert len(seen) == len(items)
    assert items == list(enumerate_assertions(unary.signature, unary.language, b))


def test_theory_of_grows_with_budget(ws):
    S = load(ws, "g5-swap")
    small = {alpha_key(a) for a in theory_of(S, Budget(ctx=0, term=1, fml=0, ante=1))}
    large = {alpha_key(a) for a in theory_of(S, Budget(ctx=1, term=1, fml=0, ante=1))}
    assert small and small < large


def test_theory_of_contains_identity_sequents(ws, unary):
    S = load(ws, "l5-swap")
    th = {alpha_key(a) for a in theory_of(S, Budget(ctx=1, term=1, fml=0, ante=1))}
    for phi in ("(R x1)", "(Q x1 (f x1))", "(top)"):
        f = formula(phi, unary, [("x1", "s")])
        assert alpha_key(Sequent(Context([("x1", "s")]), (f,), f)) in th


# ------------------------------------------------- substitution lemma


def _lemma_structure():
    pc = mk_powerset_propcat({"B": (0, 1)}, product_depth=8)
    C = pc.base
    B = ("B",)
    return Structure(
        pc, SG, {"s": B, "t": ()},
        {"f": Fn(B, B, ((1,), (0,))), "g": Fn(B, B, ((0,), (0,))), "c": Fn((), B, ((1,),)),
         "h": C.bang(B)},
        {"R": frozenset({(1,)}), "Q": frozenset({(0,)})},
    )


LEMMA = _lemma_structure()


@given(formulas, st.sampled_from(["x", "y"]), s_terms)
@settings(max_examples=60, deadline=None)
def test_substitution_lemma(phi, v, m):
    S, C = LEMMA, LEMMA.host.base
    objs = [S.sorts[s] for s in CTX.sorts]
    G = C.nprod(objs)
    tm = interpret_term(S, m, CTX)
    parts = [tm if name == v else C.nproj(objs, i) for i, name in enumerate(CTX.vars)]
    move = C.npair(parts, dom=G)
    lhs = interpret_formula(S, substitute(phi, {v: m}), CTX)
    rhs = S.host.act(move, interpret_formula(S, phi, CTX))
    assert lhs == rhs


@given(formulas)
@settings(max_examples=40, deadline=None)
def test_tensor_is_conjunction_in_powerset(phi):
    S = LEMMA
    G = S.ctx_obj(CTX)
    a = interpret_formula(S, phi, CTX)
    assert interpret_formula(S, Conn("tensor", (phi, phi)), CTX) == S.host.op(G, "and", a, a)
