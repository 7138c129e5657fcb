"""Entry point for the ``fiberlogic`` command."""

from __future__ import annotations

import argparse
import sys
import time

from ..calculus import ADJOINT, ALL_RULES, AXIOM, BASE_RULES, ProofError, check_proof, derive_bounded, rule_name
from ..fibered import (
    MorphismError,
    Obstruction,
    class_e_report,
    check_morphism,
    complete_through,
    compose_morphisms,
    external_product,
    factorize,
    hom_image,
    internal_structure,
    kernel,
    kernel_leq_witness,
    kernels_equal,
    morphisms_agree,
    submodel,
    subprop_report,
    transport_formula_sides,
    transport_structure,
    transport_term_sides,
    translate_theory,
)
from ..propcat import ProductPropCategory, PropCatError, check_fa
from ..propcat.check import DEFAULT_LIMIT
from ..semantics import Budget, StructureError, enumerate_assertions, holds, interpret_formula, interpret_term, satisfies, theory_of
from ..soundness import ADJOINT_SWEEP_RULES, BASE_SWEEP_RULES, default_hosts, soundness_sweep
from ..syntax import Context, Language, Sequent, WellFormednessError
from .formats import (
    ParseError,
    Workspace,
    codec_for,
    parse_assertion,
    parse_ctx,
    parse_formula,
    parse_term,
    print_assertion,
    print_proof,
    print_structure,
    print_theory,
    read_one,
)
from .report import Report

EXIT_OK, EXIT_VIOLATION, EXIT_ERROR = 0, 1, 2
DEFAULT_BUDGET = Budget(ctx=1, term=1, fml=0, ante=1)


class UsageError(Exception):
    pass


def _rules(text):
    presets = {"base": BASE_RULES, "adjoint": BASE_RULES | ADJOINT, "all": ALL_RULES}
    if text in presets:
        return presets[text]
    try:
        return frozenset(rule_name(r.strip()) for r in text.split(",") if r.strip()) | {AXIOM}
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _budget(args):
    try:
        return Budget.parse(args.budget) if args.budget else DEFAULT_BUDGET
    except ValueError as exc:
        raise UsageError(f"bad --budget: {exc}") from None


def common_language(langs):
    """Connectives (with equal arity) and quantifiers shared by every language."""
    langs = list(langs)
    conns = set(langs[0].connectives).intersection(*(l.connectives for l in langs[1:]))
    quants = set(langs[0].quantifiers).intersection(*(l.quantifiers for l in langs[1:]))
    return Language(dict(conns), quants)


def _kernel_witness(F, w):
    """Readable form of a kernel witness, in terms of F's source."""
    P = F.source
    C = P.base
    if w.kind == "object":
        return {"kind": w.kind, "left": C.format_obj(w.left), "right": C.format_obj(w.right)}
    if w.kind == "morphism":
        return {"kind": w.kind, "left": C.format_mor(w.left), "right": C.format_mor(w.right)}
    (c1, r1), (c2, r2) = w.left, w.right
    return {"kind": w.kind, "left": f"{P.format_elem(c1, r1)} in P{C.format_obj(c1)}",
            "right": f"{P.format_elem(c2, r2)} in P{C.format_obj(c2)}"}


def _violations(rep, report):
    for v in rep.violations:
        report.witness(v.to_record())


def _check_lines(rep):
    return rep.summary().splitlines()


# ------------------------------------------------------------------ commands


def cmd_check_pc(ws, args, report):
    pc = ws.pc(args.pc)
    rep = check_fa(pc, limit=args.limit, seed=args.seed)
    report.say(*_check_lines(rep))
    report.data["failed_conditions"] = rep.failed_conditions()
    report.data["exhaustive"] = rep.exhaustive
    report.verdict("prop-category", rep.ok, ", ".join(rep.failed_conditions()))
    _violations(rep, report)


def cmd_check_mor(ws, args, report):
    F = ws.morphism(args.mor)
    rep = check_morphism(F, limit=args.limit, seed=args.seed)
    report.say(*_check_lines(rep))
    report.data["failed_conditions"] = rep.failed_conditions()
    report.verdict("morphism", rep.ok, ", ".join(rep.failed_conditions()))
    _violations(rep, report)


def cmd_eval(ws, args, report):
    S = ws.structure(args.structure)
    sg, lang = S.signature, S.language
    try:
        ctx = parse_ctx(read_one(args.ctx, "--ctx"), sg) if args.ctx else Context()
    except ParseError as exc:
        raise exc.with_path("--ctx") from None
    try:
        node = read_one(args.expr, "<expression>")
        if args.term:
            value = interpret_term(S, parse_term(node, sg, ctx), ctx)
            text = codec_for(S.host).p_mor(value)
        else:
            value = interpret_formula(S, parse_formula(node, sg, lang, ctx), ctx)
            text = S.host.format_elem(S.ctx_obj(ctx), value)
    except ParseError as exc:
        raise exc.with_path("<expression>") from None
    C = S.host.base
    report.say(text)
    report.data["value"] = text
    report.data["object"] = C.format_obj(S.ctx_obj(ctx))


def cmd_sat(ws, args, report):
    S = ws.structure(args.structure)
    if args.theory:
        T = ws.theory(args.theory)
        for a in T.assertions:
            r = satisfies(S, a)
            report.verdict(print_assertion(a), r.verdict)
            if not r.verdict:
                report.witness(r.to_record())
        return
    budget = _budget(args)
    th = theory_of(S, budget)
    report.data["budget"] = str(budget)
    report.data["satisfied"] = len(th)
    report.say(f"{len(th)} assertion(s) satisfied within budget {budget}")
    if args.show:
        report.say(*map(print_assertion, th))


def _goal(T, text):
    return parse_assertion(read_one(text, "<goal>"), T.signature, T.language)


def cmd_prove(ws, args, report):
    T = ws.theory(args.theory)
    goal = _goal(T, args.goal)
    p = derive_bounded(T, _rules(args.rules), goal, args.depth)
    if p is None:
        report.verdict("derivable", False, f"no proof of height <= {args.depth}")
        return
    report.verdict("derivable", True, f"height {p.height()}, {p.size()} node(s)")
    text = print_proof(p)
    report.data["proof"] = text
    report.say(text.rstrip("\n"))


def cmd_checkproof(ws, args, report):
    T = ws.theory(args.theory)
    p = ws.proof(args.proof, T)
    try:
        concl = check_proof(T, _rules(args.rules), p)
    except ProofError as exc:
        report.verdict("proof", False, str(exc))
        report.witness({"path": list(exc.path), "condition": exc.condition, "message": str(exc)})
        return
    report.verdict("proof", True, print_assertion(concl))


def cmd_transport(ws, args, report):
    F = ws.morphism(args.mor)
    S = ws.structure(args.structure)
    FS = transport_structure(F, S)
    report.say(print_structure(FS, ws).rstrip("\n"))
    budget = _budget(args)
    lost, sides = [], []
    for a in enumerate_assertions(S.signature, S.language, budget):
        if holds(S, a) and not holds(FS, a):
            lost.append(print_assertion(a))
        if isinstance(a, Sequent):
            for phi in (*a.hyps, a.concl):
                lhs, rhs = transport_formula_sides(F, S, FS, phi, a.ctx)
                if lhs != rhs:
                    sides.append(print_assertion(a))
        else:
            for t in (a.lhs, a.rhs):
                lhs, rhs = transport_term_sides(F, S, FS, t, a.ctx)
                if lhs != rhs:
                    sides.append(print_assertion(a))
    report.verdict("satisfaction preserved", not lost)
    report.verdict("commutation", not sides)
    for a in lost[:3]:
        report.witness({"lost": a})
    for a in sides[:3]:
        report.witness({"sides differ": a})


def cmd_kernel(ws, args, report):
    F = ws.morphism(args.mor)
    k = kernel(F)
    report.data["object_classes"] = len(k.object_classes())
    report.data["morphism_classes"] = len(k.morphism_classes())
    report.say(f"kernel of {F.name}: {len(k.object_classes())} object class(es), "
               f"{len(k.morphism_classes())} morphism class(es)")
    if args.mor2:
        G = ws.morphism(args.mor2)
        k2 = kernel(G)
        for name, a, b in (("ker F <= ker G", k, k2), ("ker G <= ker F", k2, k)):
            w = kernel_leq_witness(a, b)
            report.verdict(name, w is None)
            if w is not None:
                report.witness({"relation": name, **_kernel_witness(F, w)})


def cmd_product(ws, args, report):
    pcs = [ws.pc(p) for p in args.pcs]
    langs = {pc.language for pc in pcs}
    P = ProductPropCategory(pcs, common_language(langs) if len(langs) > 1 else None)
    rep = check_fa(P, limit=args.limit, seed=args.seed)
    report.say(f"product of {len(pcs)} prop-categor{'y' if len(pcs) == 1 else 'ies'}: "
               f"{len(P.base.objects)} object(s)")
    report.say(*_check_lines(rep))
    report.verdict("prop-category", rep.ok, ", ".join(rep.failed_conditions()))
    _violations(rep, report)


def cmd_factor(ws, args, report):
    F = ws.morphism(args.mor)
    eps, psi = factorize(F)
    report.verdict("psi . eps = F", morphisms_agree(compose_morphisms(psi, eps), F))
    report.verdict("kernel(eps) = kernel(F)", kernels_equal(kernel(eps), kernel(F)))
    sub = subprop_report(psi, limit=args.limit, seed=args.seed)
    report.verdict("psi is a subprop-morphism", sub.ok)
    _violations(sub, report)
    ce = class_e_report(eps)
    report.verdict("eps is surjective, full and fiberwise onto", ce.ok)
    _violations(ce, report)
    if args.check_image:
        rep = check_fa(psi.source, limit=args.limit, seed=args.seed)
        report.verdict("image is a prop-category", rep.ok)
        _violations(rep, report)


def cmd_complete(ws, args, report):
    F = ws.morphism(args.f)
    K = ws.morphism(args.k)
    G = complete_through(F, K, args.order)
    if isinstance(G, Obstruction):
        w = G.witness
        wit = _kernel_witness(F, w)
        report.verdict("completion exists", False,
                       f"{wit['left']} and {wit['right']} are related by ker K but not by ker F")
        report.witness(wit)
        return
    report.verdict("completion exists", True, G.name)
    report.verdict("G . K = F", morphisms_agree(compose_morphisms(G, K), F))
    others = [o for o in ("forward", "reverse", args.seed) if o != args.order]
    report.verdict("independent of preimage order",
                   all(morphisms_agree(G, complete_through(F, K, o)) for o in others))
    if args.print:
        from .formats import print_morphism

        report.say(print_morphism(G, ws).rstrip("\n"))


def _common(structures, budget):
    S0 = structures[0]
    for a in enumerate_assertions(S0.signature, S0.language, budget):
        if all(holds(S, a) for S in structures):
            yield a


def cmd_hsp(ws, args, report):
    budget = _budget(args)
    report.data["budget"] = str(budget)
    if args.op == "product":
        inputs = [ws.structure(p) for p in args.files]
        langs = {S.language for S in inputs}
        out, _, _ = external_product(inputs, common_language(langs) if len(langs) > 1 else None)
    elif args.op == "image":
        if len(args.files) != 2:
            raise UsageError("hsp image MOR STRUCTURE")
        H = ws.morphism(args.files[0])
        S = ws.structure(args.files[1])
        inputs, out = [S], hom_image(H, S)
    elif args.op == "sub":
        if len(args.files) != 3:
            raise UsageError("hsp sub IOTA SUB-STRUCTURE STRUCTURE")
        iota = ws.morphism(args.files[0])
        S_sub, S = ws.structure(args.files[1]), ws.structure(args.files[2])
        inputs, out = [S], submodel(iota, S_sub, S, limit=args.limit, seed=args.seed)
    else:
        raise UsageError(f"unknown hsp operation {args.op}")
    n, missing = 0, []
    for a in _common(inputs, budget):
        try:
            ok = holds(out, a)
        except WellFormednessError:
            continue  # outside the output's language
        n += 1
        if not ok:
            missing.append(print_assertion(a))
    report.data["common"] = n
    report.say(f"{n} common assertion(s) checked against {out.name or args.op}")
    report.verdict("output satisfies the common assertions", not missing)
    for a in missing[:3]:
        report.witness({"not satisfied": a})


def cmd_internal(ws, args, report):
    pc = ws.pc(args.pc)
    sg, S, names = internal_structure(pc, max_arity=args.max_arity)
    report.data.update(sorts=len(sg.sorts), functions=len(sg.functions), relations=len(sg.relations))
    report.say(f"internal signature: {len(sg.sorts)} sort(s), {len(sg.functions)} function symbol(s), "
               f"{len(sg.relations)} relation symbol(s)")
    if args.show:
        C = pc.base
        for s in sorted(sg.sorts):
            report.say(f"  {s} = {C.format_obj(names[s])}")


def cmd_translate(ws, args, report):
    h = ws.interp(args.interp)
    T = ws.theory(args.theory)
    if T.signature != h.source:
        raise UsageError("theory signature differs from the interpretation's source")
    text = print_theory(translate_theory(h, T))
    report.data["theory"] = text
    report.say(text.rstrip("\n"))


def cmd_soundness(ws, args, report):
    which = args.rules
    runs = []
    if which in ("base", "all"):
        runs.append(("base rules on powerset, Ł5 and their product", default_hosts(), BASE_SWEEP_RULES))
    if which in ("adjoint", "all"):
        runs.append(("adjoint rules on powerset", default_hosts()[:1], ADJOINT_SWEEP_RULES))
    for title, hosts, rules in runs:
        rep = soundness_sweep(hosts, rules, trials=args.trials, seed=args.seed)
        report.say(title, *rep.summary().splitlines())
        for r in rep.results.values():
            report.verdict(f"{r.rule} sound", r.ok, f"{r.trials} trials, {r.nonvacuous} non-vacuous")
            for v in r.violations[:3]:
                report.witness({"rule": r.rule, "instance": v})


COMMANDS = {
    "check-pc": cmd_check_pc, "check-mor": cmd_check_mor, "eval": cmd_eval, "sat": cmd_sat,
    "prove": cmd_prove, "checkproof": cmd_checkproof, "transport": cmd_transport, "kernel": cmd_kernel,
    "product": cmd_product, "factor": cmd_factor, "complete": cmd_complete, "hsp": cmd_hsp,
    "internal": cmd_internal, "translate": cmd_translate, "soundness": cmd_soundness,
}


# -------------------------------------------------------------------- parser


def _limit(text):
    return None if text in ("none", "all") else int(text)


def _order(text):
    if text in ("forward", "reverse"):
        return text
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected forward, reverse or an integer") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for sampling (default 0)")
    common.add_argument("--trials", type=int, default=argparse.SUPPRESS, help="trials per rule (default 200)")
    common.add_argument("--budget", default=argparse.SUPPRESS,
                        help="enumeration budget (default ctx=1,term=1,fml=0,ante=1)")
    common.add_argument("--format", choices=("text", "records"), default=argparse.SUPPRESS)
    common.add_argument("--probe", default=argparse.SUPPRESS, help="file with probe values for symbolic fibers")
    common.add_argument("--limit", type=_limit, default=argparse.SUPPRESS,
                        help=f"cases per clause before sampling (default {DEFAULT_LIMIT}; 'none' for all)")

    p = argparse.ArgumentParser(prog="fiberlogic", parents=[common],
                                description="Check prop-categories, structures, proofs and morphisms.")
    sub = p.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def add(name, help_):
        return sub.add_parser(name, parents=[common], help=help_)

    add("check-pc", "check the prop-category axioms").add_argument("pc")
    add("check-mor", "check a morphism of prop-categories").add_argument("mor")
    e = add("eval", "interpret a formula or term in a structure")
    e.add_argument("structure")
    e.add_argument("expr")
    e.add_argument("--ctx", help='context, e.g. "(ctx (x s))"')
    e.add_argument("--term", action="store_true", help="EXPR is a term")
    s = add("sat", "check a theory, or enumerate the satisfied assertions")
    s.add_argument("structure")
    s.add_argument("theory", nargs="?")
    s.add_argument("--show", action="store_true", help="list the satisfied assertions")
    pr = add("prove", "search for a proof of bounded height")
    pr.add_argument("theory")
    pr.add_argument("goal")
    pr.add_argument("--depth", type=int, default=4)
    pr.add_argument("--rules", default="base", help="base, adjoint, all or a comma-separated list")
    cp = add("checkproof", "check a proof file")
    cp.add_argument("theory")
    cp.add_argument("proof")
    cp.add_argument("--rules", default="all")
    t = add("transport", "transport a structure along a morphism")
    t.add_argument("mor")
    t.add_argument("structure")
    k = add("kernel", "kernel of a morphism, optionally compared with another")
    k.add_argument("mor")
    k.add_argument("mor2", nargs="?")
    add("product", "product of prop-categories").add_argument("pcs", nargs="+")
    f = add("factor", "image factorization of a morphism")
    f.add_argument("mor")
    f.add_argument("--check-image", action="store_true", help="also check the image prop-category")
    c = add("complete", "complete F through K")
    c.add_argument("f")
    c.add_argument("k")
    c.add_argument("--order", type=_order, default="forward",
                   help="preimage order: forward, reverse or an integer shuffle seed")
    c.add_argument("--print", action="store_true", help="print the completion")
    h = add("hsp", "external product, homomorphic image or submodel")
    h.add_argument("op", choices=("product", "image", "sub"))
    h.add_argument("files", nargs="+")
    i = add("internal", "internal structure of a prop-category")
    i.add_argument("pc")
    i.add_argument("--max-arity", type=int, default=2)
    i.add_argument("--show", action="store_true")
    tr = add("translate", "translate a theory along a signature interpretation")
    tr.add_argument("interp")
    tr.add_argument("theory")
    so = add("soundness", "randomized rule soundness sweep")
    so.add_argument("--rules", choices=("base", "adjoint", "all"), default="all")
    return p


DEFAULTS = {"seed": 0, "trials": 200, "budget": None, "format": "text", "probe": None, "limit": DEFAULT_LIMIT}


def run(argv=None, out=None):
    """Run one command; returns (exit status, report or None)."""
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    for k, v in DEFAULTS.items():
        if not hasattr(args, k):
            setattr(args, k, v)
    inputs = {k: v for k, v in vars(args).items() if k not in DEFAULTS and k != "command" and v is not None}
    report = Report(args.command, inputs)
    start = time.perf_counter()
    ws = Workspace()
    try:
        if args.probe:
            ws.load_probe(args.probe)
        COMMANDS[args.command](ws, args, report)
        status = EXIT_OK if report.ok else EXIT_VIOLATION
    except (ParseError, UsageError, MorphismError, WellFormednessError, PropCatError, StructureError) as exc:
        report.verdict("input", False, str(exc))
        report.data["error"] = str(exc)
        status = EXIT_ERROR
    report.timing["seconds"] = round(time.perf_counter() - start, 3)
    if args.format == "records":
        print(report.to_json(), file=out)
    else:
        text = report.to_text()
        if status == EXIT_ERROR:
            print(f"error: {report.data['error']}", file=sys.stderr)
        elif text:
            print(text, file=out)
    return status, report


def main(argv=None) -> int:
    status, _ = run(argv)
    return status


if __name__ == "__main__":
    sys.exit(main())
