import glob
import os

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from fiberlogic.calculus import (
    ADJOINT,
    ALL_RULES,
    AXIOM,
    BASE_RULES,
    ProofError,
    ProofNode,
    check_proof,
    derive_bounded,
)
from fiberlogic.cli.formats import parse_theory
from fiberlogic.syntax import Conn, Context, Sequent

from conftest import assertion, fx

CHAIN = parse_theory("""
(name chain)
(sort s)
(fn c () s)
(rel A (s)) (rel B (s)) (rel C (s))
(connective and 2)
(quantifier forall) (quantifier exists)
(seq (ctx (x s)) (hyp (A x)) (concl (B x)))
(seq (ctx (x s)) (hyp (B x)) (concl (C x)))
""")


CHAIN_A = assertion("(seq (ctx (x s)) (concl (A x)))", CHAIN).concl
CHAIN_EX = assertion("(seq (ctx) (concl (exists (x s) (A x))))", CHAIN).concl


def seq(text, T=CHAIN):
    return assertion(text, T)


def ax(text, T=CHAIN):
    return ProofNode(AXIOM, seq(text, T))


# -------------------------------------------------------------- checking


def test_ax_accepts_identity_sequent():
    a = seq("(seq (ctx (x s)) (hyp (and (A x) (B x))) (concl (and (A x) (B x))))")
    assert check_proof(CHAIN, BASE_RULES, ProofNode("Ax", a)) == a


def test_ax_rejects_other_sequents():
    with pytest.raises(ProofError):
        check_proof(CHAIN, BASE_RULES, ProofNode("Ax", seq("(seq (ctx (x s)) (hyp (A x)) (concl (B x)))")))


def test_axiom_up_to_alpha(unary):
    p = ProofNode(AXIOM, assertion("(seq (ctx (x s)) (hyp (forall (w s) (Q x w))) (concl (Q x x)))", unary))
    check_proof(unary, BASE_RULES, p)


def test_axiom_must_belong_to_theory():
    with pytest.raises(ProofError) as exc:
        check_proof(CHAIN, BASE_RULES, ax("(seq (ctx (x s)) (hyp (A x)) (concl (C x)))"))
    assert exc.value.condition == "axiom"


def test_disabled_rule():
    p = ProofNode("Ax", seq("(seq (ctx (x s)) (hyp (A x)) (concl (A x)))"))
    with pytest.raises(ProofError) as exc:
        check_proof(CHAIN, {AXIOM}, p)
    assert exc.value.condition == "disabled-rule"


def test_cut():
    p = ProofNode("Cut", seq("(seq (ctx (x s)) (hyp (A x)) (concl (C x)))"), [
        ax("(seq (ctx (x s)) (hyp (A x)) (concl (B x)))"),
        ax("(seq (ctx (x s)) (hyp (B x)) (concl (C x)))"),
    ])
    check_proof(CHAIN, BASE_RULES, p)
    wrong = ProofNode("Cut", p.concl, list(reversed(p.premises)))
    with pytest.raises(ProofError):
        check_proof(CHAIN, BASE_RULES, wrong)


def test_cwk_appends_one_variable():
    good = ProofNode("Cwk", seq("(seq (ctx (x s) (y s)) (hyp (A x)) (concl (B x)))"),
                     [ax("(seq (ctx (x s)) (hyp (A x)) (concl (B x)))")])
    check_proof(CHAIN, BASE_RULES, good)
    bad = ProofNode("Cwk", seq("(seq (ctx (y s) (x s)) (hyp (A x)) (concl (B x)))"), good.premises)
    with pytest.raises(ProofError) as exc:
        check_proof(CHAIN, BASE_RULES, bad)
    assert exc.value.condition == "context"


def test_equational_chain(unary):
    refl = ProofNode("Refl", assertion("(eqn (ctx (x s)) x x s)", unary))
    inv = ProofNode(AXIOM, assertion("(eqn (ctx (x s)) (f (f x)) x s)", unary))
    sym = ProofNode("Sym", assertion("(eqn (ctx (x s)) x (f (f x)) s)", unary), [inv])
    trans = ProofNode("Trans", assertion("(eqn (ctx (x s)) (f (f x)) (f (f x)) s)", unary), [inv, sym])
    for p in (refl, sym, trans):
        check_proof(unary, BASE_RULES, p)
    with pytest.raises(ProofError):
        check_proof(unary, BASE_RULES, ProofNode("Sym", inv.concl, [inv]))


def test_sub_side_condition(ws, unary):
    p = ws.proof(fx("bad", "sub-vs.proof"), unary)
    with pytest.raises(ProofError) as exc:
        check_proof(unary, ALL_RULES, p)
    assert exc.value.condition == "VS(Δ) ⊆ VS(Γ,Γ′)"
    assert exc.value.path == ()


def test_error_path_points_at_subproof(unary):
    bad_leaf = ProofNode("Ax", assertion("(seq (ctx (x s)) (hyp (R x)) (concl (Q x x)))", unary))
    p = ProofNode("Cwk", assertion("(seq (ctx (x s) (y s)) (hyp (R x)) (concl (Q x x)))", unary), [bad_leaf])
    with pytest.raises(ProofError) as exc:
        check_proof(unary, BASE_RULES, p)
    assert exc.value.path == (0,)


def test_quantifier_adjunction_keeps_variable_bound():
    inner = ProofNode("Ax", seq("(seq (ctx (x s)) (hyp (A x)) (concl (A x)))"))
    leaky = Sequent(Context(), (CHAIN_EX,), Conn("and", (CHAIN_A, CHAIN_A)))
    with pytest.raises(ProofError) as exc:
        check_proof(CHAIN, ALL_RULES, ProofNode("∃-Adj-fwd", leaky, [inner]))
    assert exc.value.condition == "well-formed"


def test_fixture_proofs_check(ws, unary):
    paths = sorted(glob.glob(fx("proofs", "*.proof")))
    assert len(paths) >= 6
    for path in paths:
        p = ws.proof(path, unary)
        rules = ALL_RULES if os.path.basename(path) == "forall.proof" else BASE_RULES
        check_proof(unary, rules, p)


def test_adjoint_rules_are_opt_in(ws, unary):
    p = ws.proof(fx("proofs", "forall.proof"), unary)
    with pytest.raises(ProofError) as exc:
        check_proof(unary, BASE_RULES, p)
    assert exc.value.condition == "disabled-rule"
    assert p.rule in ADJOINT


def test_proof_node_bookkeeping():
    leaf = ax("(seq (ctx (x s)) (hyp (A x)) (concl (B x)))")
    p = ProofNode("Cwk", leaf.concl, [leaf], {"var": "x", "pos": 0})
    assert p.params == (("pos", 0), ("var", "x"))
    assert p.height() == 2 and p.size() == 2
    assert p.axioms_used() == [leaf.concl]


# ---------------------------------------------------------------- search


def test_derive_finds_cut():
    goal = seq("(seq (ctx (x s)) (hyp (A x)) (concl (C x)))")
    p = derive_bounded(CHAIN, BASE_RULES, goal, 3)
    assert p is not None and p.rule == "Cut"
    assert check_proof(CHAIN, BASE_RULES, p) == goal


def test_derive_reports_not_found():
    goal = seq("(seq (ctx (x s)) (hyp (C x)) (concl (A x)))")
    assert derive_bounded(CHAIN, BASE_RULES, goal, 3) is None


def test_derive_respects_depth():
    goal = seq("(seq (ctx (x s)) (hyp (A x)) (concl (C x)))")
    assert derive_bounded(CHAIN, BASE_RULES, goal, 1) is None


def test_derive_uses_adjoint_rules():
    goal = seq("(seq (ctx) (hyp (exists (x s) (A x))) (concl (exists (x s) (B x))))")
    p = derive_bounded(CHAIN, ALL_RULES, goal, 4)
    assert p is not None
    check_proof(CHAIN, ALL_RULES, p)


GOALS = [
    "(seq (ctx (x s)) (hyp (A x)) (concl (A x)))",
    "(seq (ctx (x s)) (hyp (A x)) (concl (B x)))",
    "(seq (ctx (x s)) (hyp (A x)) (concl (C x)))",
    "(seq (ctx (x s) (y s)) (hyp (A x)) (concl (B x)))",
    "(seq (ctx (x s)) (hyp (A x)) (hyp (e)) (concl (B x)))",
    "(seq (ctx (x s)) (hyp (tensor (A x) (e))) (concl (B x)))",
    "(eqn (ctx (x s)) x x s)",
    "(seq (ctx (x s)) (hyp (C x)) (concl (B x)))",
]


@given(st.sampled_from(GOALS), st.integers(1, 4), st.sampled_from([BASE_RULES, ALL_RULES]))
@settings(max_examples=30, deadline=None)
def test_derived_proofs_recheck(goal, depth, rules):
    g = seq(goal)
    p = derive_bounded(CHAIN, rules, g, depth)
    if p is not None:
        assert check_proof(CHAIN, rules, p) == g
        assert p.height() <= depth
