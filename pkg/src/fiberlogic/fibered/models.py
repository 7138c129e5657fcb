"""Transport of structures along morphisms, products of prop-categories and
the external product / homomorphic image / submodel operations."""

from __future__ import annotations

from ..propcat.product import ProductPropCategory
from ..semantics import Structure, _formula, _term
from .morphism import MorphismError, PropMorphism


def transport_structure(F: PropMorphism, S: Structure) -> Structure:
    """The structure F(S) in F's target."""
    if S.host is not F.source:
        raise MorphismError("structure is not hosted in the morphism's source")
    D = F.target.base
    sorts = {s: F.obj(o) for s, o in S.sorts.items()}
    funcs = {}
    for f, (args, _) in S.signature.fn.items():
        a = F.a_list([S.sorts[s] for s in args])
        funcs[f] = D.compose(F.mor(S.funcs[f]), D.inverse(a))
    rels = {}
    for R, args in S.signature.rel.items():
        objs = [S.sorts[s] for s in args]
        a = F.a_list(objs)
        rels[R] = F.target.act(D.inverse(a), F.fib(S.host.base.nprod(objs), S.rels[R]))
    return Structure(F.target, S.signature, sorts, funcs, rels, name=f"{F.name}({S.name})")


def transport_term_sides(F, S, FS, t, ctx):
    """Both sides of F(S)[[M]] = F(S[[M]]) ∘ a⁻¹."""
    D = F.target.base
    objs = [S.sorts[s] for s in ctx.sorts]
    lhs = _term(FS, t, ctx, [FS.sorts[s] for s in ctx.sorts])
    rhs = D.compose(F.mor(_term(S, t, ctx, objs)), D.inverse(F.a_list(objs)))
    return lhs, rhs


def transport_formula_sides(F, S, FS, phi, ctx):
    """Both sides of F(S)[[φ]] = Q(a⁻¹)(F^p(S[[φ]]))."""
    D = F.target.base
    objs = [S.sorts[s] for s in ctx.sorts]
    lhs = _formula(FS, phi, ctx)
    rhs = F.target.act(D.inverse(F.a_list(objs)), F.fib(S.host.base.nprod(objs), _formula(S, phi, ctx)))
    return lhs, rhs


# ------------------------------------------------------------------ products


def product_propcat(pcs, language=None):
    """Product prop-category with its projections."""
    P = ProductPropCategory(pcs, language)
    projections = [projection(P, i) for i in range(len(P.factors))]
    return P, projections


def projection(P: ProductPropCategory, i: int) -> PropMorphism:
    return PropMorphism(P, P.factors[i], lambda c: c[i], lambda f: f[i], lambda c, r: r[i], f"π{i + 1}")


def pairing(P: ProductPropCategory, Fs) -> PropMorphism:
    """The mediating morphism <F_1, ..., F_n> into the product."""
    Fs = list(Fs)
    if len(Fs) != len(P.factors):
        raise MorphismError("need one morphism per factor")
    if not Fs:
        raise MorphismError("pairing into the empty product needs a source; use bang_morphism")
    src = Fs[0].source
    if any(F.source is not src for F in Fs):
        raise MorphismError("pairing needs a common source")
    for F, pc in zip(Fs, P.factors):
        if F.target is not pc:
            raise MorphismError("morphism targets must be the factors")
    return PropMorphism(src, P, lambda c: tuple(F.obj(c) for F in Fs), lambda f: tuple(F.mor(f) for F in Fs),
                        lambda c, r: tuple(F.fib(c, r) for F in Fs), "<" + ", ".join(F.name for F in Fs) + ">")


def bang_morphism(source, terminal: ProductPropCategory) -> PropMorphism:
    if terminal.factors:
        raise MorphismError("target must be the empty product")
    return PropMorphism(source, terminal, lambda c: (), lambda f: (), lambda c, r: (), "!")


# ------------------------------------------------------------ external HSP


def external_product(structures, language=None):
    """Structure in the product of the hosts; returns (structure, product host, projections)."""
    structures = list(structures)
    sigs = {S.signature for S in structures}
    if len(sigs) > 1:
        raise MorphismError("external product needs a common signature")
    P, projs = product_propcat([S.host for S in structures], language)
    if structures:
        sg = structures[0].signature
    elif language is None:
        raise MorphismError("empty product needs a signature; use empty_product_structure")
    S = Structure(P, sg,
                  {s: tuple(T.sorts[s] for T in structures) for s in sg.sorts},
                  {f: tuple(T.funcs[f] for T in structures) for f in sg.fn},
                  {R: tuple(T.rels[R] for T in structures) for R in sg.rel},
                  name="×".join(T.name or "S" for T in structures))
    return S, P, projs


def empty_product_structure(signature, language):
    P, _ = product_propcat([], language)
    return Structure(P, signature, {s: () for s in signature.sorts}, {f: () for f in signature.fn},
                     {R: () for R in signature.rel}, name="1"), P


def hom_image(H: PropMorphism, S: Structure) -> Structure:
    return transport_structure(H, S)


def submodel(iota: PropMorphism, S_sub: Structure, S: Structure, **check_kw) -> Structure:
    """Validate that S factors through the subprop-morphism iota via S_sub; return S_sub."""
    from .kernel import subprop_report

    rep = subprop_report(iota, **check_kw)
    if not rep.ok:
        raise MorphismError(f"not a subprop-morphism: {rep.violations[0]}")
    if not transport_structure(iota, S_sub).same_interpretation(S):
        raise MorphismError("the transported structure differs from the given one")
    return S_sub
