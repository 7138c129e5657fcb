import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from fiberlogic.syntax import (
    App,
    Conn,
    Context,
    Eq,
    Language,
    Quant,
    Rel,
    Signature,
    Var,
    WellFormednessError,
    alpha_eq,
    alpha_key,
    free_vars,
    substitute,
    wf_formula,
    wf_term,
)

from strategies import CTX, LANG, SG, formulas, s_terms, substitutions, t_terms

x, y, z, u = Var("x"), Var("y"), Var("z"), Var("u")


def f(a):
    return App("f", (a,))


# ------------------------------------------------------------- typing


def test_wf_term_sorts():
    assert wf_term(SG, CTX, App("g", (f(x), u))) == "s"
    assert wf_term(SG, CTX, App("h", (App("c"),))) == "t"


def test_unbound_variable():
    with pytest.raises(WellFormednessError) as exc:
        wf_term(SG, CTX, Var("w"))
    assert exc.value.kind == "unbound-variable"


def test_sort_mismatch_reports_position():
    with pytest.raises(WellFormednessError) as exc:
        wf_term(SG, CTX, App("g", (x, y)))
    assert exc.value.kind == "sort-mismatch"
    assert exc.value.position == 2


def test_arity_mismatch():
    with pytest.raises(WellFormednessError) as exc:
        wf_term(SG, CTX, App("f", (x, x)))
    assert exc.value.kind == "arity"


def test_formula_errors():
    bad = [
        (Conn("imp", (Conn("top"), Conn("top"))), "unknown-connective"),
        (Conn("and", (Conn("top"),)), "arity"),
        (Quant("most", "x", "s", Rel("R", (x,))), "unknown-quantifier"),
        (Rel("R", (u,)), "sort-mismatch"),
        (Eq("t", x, x), "sort-mismatch"),
    ]
    for phi, kind in bad:
        with pytest.raises(WellFormednessError) as exc:
            wf_formula(SG, LANG, CTX, phi)
        assert exc.value.kind == kind, phi


def test_binder_scopes_its_variable():
    phi = Quant("exists", "w", "t", Rel("Q", (x, Var("w"))))
    wf_formula(SG, LANG, CTX, phi)
    with pytest.raises(WellFormednessError):
        wf_formula(SG, LANG, CTX, Rel("Q", (x, Var("w"))))


def test_language_always_has_unit_and_tensor():
    lang = Language({"and": 2})
    assert lang.arity["e"] == 0 and lang.arity["tensor"] == 2
    with pytest.raises(WellFormednessError):
        Language({"tensor": 3})
    with pytest.raises(WellFormednessError):
        Language({"all": 1}, ["all"])


def test_signature_rejects_undeclared_sort():
    with pytest.raises(WellFormednessError):
        Signature({"s"}, {"f": (("s",), "t")})
    with pytest.raises(WellFormednessError):
        Signature({"s"}, {}, {"R": ("t",)})


def test_context_rejects_repeats():
    with pytest.raises(WellFormednessError):
        Context([("x", "s"), ("x", "t")])


# ------------------------------------------------------- substitution


def test_substitution_avoids_capture():
    phi = Quant("exists", "y", "s", Rel("R", (App("g", (y, App("h", (x,)))),)))
    out = substitute(phi, {"x": y})
    assert isinstance(out, Quant) and out.var != "y"
    expected = Quant("exists", "z", "s", Rel("R", (App("g", (z, App("h", (y,)))),)))
    assert alpha_eq(out, expected)
    assert free_vars(out) == {"y"}


def test_substitution_leaves_bound_occurrences():
    phi = Quant("forall", "x", "s", Rel("R", (x,)))
    assert substitute(phi, {"x": App("c")}) == phi


def test_substitution_is_simultaneous():
    e = App("g", (x, App("h", (y,))))
    assert substitute(e, {"x": y, "y": x}) == App("g", (y, App("h", (x,))))


def test_alpha_equivalence():
    a = Quant("forall", "x", "s", Rel("R", (x,)))
    b = Quant("forall", "y", "s", Rel("R", (y,)))
    c = Quant("forall", "y", "s", Rel("R", (x,)))
    assert alpha_eq(a, b)
    assert not alpha_eq(a, c)
    assert alpha_key(a) == alpha_key(b)
    # shadowing: the inner binder wins
    d = Quant("forall", "x", "s", Quant("exists", "x", "s", Rel("R", (x,))))
    e = Quant("forall", "y", "s", Quant("exists", "z", "s", Rel("R", (z,))))
    assert alpha_eq(d, e)


# ------------------------------------------------------------ properties


@given(formulas)
def test_generated_formulas_are_well_formed(phi):
    wf_formula(SG, LANG, CTX, phi)


@given(st.one_of(s_terms.map(lambda t: (t, "s")), t_terms.map(lambda t: (t, "t"))))
def test_generated_terms_have_their_sort(pair):
    t, sort = pair
    assert wf_term(SG, CTX, t) == sort


@given(formulas)
def test_identity_substitution(phi):
    assert substitute(phi, {v: Var(v) for v in CTX.vars}) == phi


@given(formulas, substitutions())
def test_substitution_free_variables(phi, sub):
    out = substitute(phi, sub)
    expected = set(free_vars(phi)) - set(sub)
    for v in free_vars(phi) & set(sub):
        expected |= free_vars(sub[v])
    assert free_vars(out) == expected


@given(formulas, substitutions())
def test_substitution_preserves_well_formedness(phi, sub):
    wf_formula(SG, LANG, CTX, substitute(phi, sub, sg=SG, source=CTX, target=CTX))


@given(formulas, substitutions(), substitutions())
@settings(max_examples=60)
def test_substitution_composes(phi, s1, s2):
    # phi[s1][s2] is phi[s1 ; s2] up to bound names
    composed = {v: substitute(t, s2) for v, t in s1.items()}
    for v, t in s2.items():
        composed.setdefault(v, t)
    assert alpha_eq(substitute(substitute(phi, s1), s2), substitute(phi, composed))


@given(formulas, st.sampled_from(["a", "b", "x", "y"]))
def test_bound_renaming_is_alpha_equal(phi, fresh):
    if isinstance(phi, Quant) and fresh not in free_vars(phi.body):
        renamed = Quant(phi.q, fresh, phi.sort, substitute(phi.body, {phi.var: Var(fresh)}))
        assert alpha_eq(phi, renamed)
