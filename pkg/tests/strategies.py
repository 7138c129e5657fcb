"""Hypothesis generators for well-sorted terms and formulas.

Variable names fix their sort (x, y: s and u: t), so any generated formula is
well formed in the context ``CTX`` no matter how binders nest.
"""

import hypothesis.strategies as st

from fiberlogic.syntax import App, Conn, Context, Eq, Language, Quant, Rel, Signature, Theory, Var

SG = Signature(
    {"s", "t"},
    {"f": (("s",), "s"), "g": (("s", "t"), "s"), "c": ((), "s"), "h": (("s",), "t")},
    {"R": ("s",), "Q": ("s", "t")},
)
LANG = Language({"top": 0, "and": 2, "or": 2}, ("forall", "exists"))
THEORY = Theory(SG, LANG, ())
CTX = Context([("x", "s"), ("y", "s"), ("u", "t")])
SORT_OF = dict(CTX.entries)


def _s_terms():
    leaves = st.sampled_from([Var("x"), Var("y"), App("c")])

    def grow(inner):
        t_side = st.one_of(st.just(Var("u")), inner.map(lambda a: App("h", (a,))))
        return st.one_of(
            inner.map(lambda a: App("f", (a,))),
            st.tuples(inner, t_side).map(lambda p: App("g", p)),
        )

    return st.recursive(leaves, grow, max_leaves=5)


s_terms = _s_terms()
t_terms = st.one_of(st.just(Var("u")), s_terms.map(lambda a: App("h", (a,))))


def terms_of(sort):
    return s_terms if sort == "s" else t_terms


atoms = st.one_of(
    s_terms.map(lambda a: Rel("R", (a,))),
    st.tuples(s_terms, t_terms).map(lambda p: Rel("Q", p)),
    st.tuples(s_terms, s_terms).map(lambda p: Eq("s", *p)),
    st.tuples(t_terms, t_terms).map(lambda p: Eq("t", *p)),
    st.just(Conn("top")),
    st.just(Conn("e")),
)


def _grow(inner):
    binder = st.tuples(st.sampled_from(["forall", "exists"]), st.sampled_from(["x", "y", "u"]))
    return st.one_of(
        st.tuples(st.sampled_from(["and", "or", "tensor"]), inner, inner).map(lambda p: Conn(p[0], p[1:])),
        st.tuples(binder, inner).map(lambda p: Quant(p[0][0], p[0][1], SORT_OF[p[0][1]], p[1])),
    )


formulas = st.recursive(atoms, _grow, max_leaves=6)


@st.composite
def substitutions(draw):
    """A simultaneous substitution for a non-empty subset of the context."""
    names = draw(st.lists(st.sampled_from(CTX.vars), min_size=1, max_size=3, unique=True))
    return {v: draw(terms_of(SORT_OF[v])) for v in names}
