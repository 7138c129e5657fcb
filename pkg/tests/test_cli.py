import io
import json

import pytest
from hypothesis import given, settings

from fiberlogic.cli.formats import ParseError, Workspace, parse_formula, parse_theory, print_formula
from fiberlogic.cli.main import EXIT_ERROR, EXIT_OK, EXIT_VIOLATION, run
from fiberlogic.cli.report import SCHEMA, Report
from fiberlogic.cli.sexp import read_one
from fiberlogic.syntax import alpha_eq

from conftest import FIXTURES
from roundtrip import corpus, roundtrip
from strategies import CTX, LANG, SG, formulas


def cli(*argv):
    out = io.StringIO()
    status, report = run(list(argv), out)
    return status, report, out.getvalue()


# ------------------------------------------------------------ parse errors


def test_error_positions():
    with pytest.raises(ParseError) as exc:
        parse_theory("(sort s)\n(fn f (s) u)\n", "t.theory")
    err = exc.value
    assert (err.line, err.col) == (2, 1) or err.line == 2
    assert "t.theory:2:" in str(err)


def test_unknown_sort_in_context():
    T = "(sort s)\n(rel R (s))\n(seq (ctx (x q)) (hyp (R x)) (concl (R x)))\n"
    with pytest.raises(ParseError) as exc:
        parse_theory(T)
    assert exc.value.line == 3
    assert "q" in str(exc.value)


def test_unclosed_paren_reports_expected():
    with pytest.raises(ParseError) as exc:
        read_one("(sort s", "x")
    assert exc.value.expected == "')'"
    assert (exc.value.line, exc.value.col) == (1, 1)


def test_sort_mismatch_is_a_typing_error():
    T = "(sort s)\n(sort t)\n(fn f (s) s)\n(eqn (ctx (y t)) (f y) y s)\n"
    with pytest.raises(ParseError) as exc:
        parse_theory(T)
    assert exc.value.kind == "typing"
    assert exc.value.line == 4


def test_missing_file_is_a_reference_error():
    with pytest.raises(ParseError) as exc:
        Workspace().theory("/nonexistent/x.theory")
    assert exc.value.kind == "reference"


# ------------------------------------------------------------ round trip


def test_corpus_round_trip(ws, unary):
    files = corpus(str(FIXTURES))
    assert len(files) >= 40
    bad = [f for f in files if not roundtrip(ws, f, unary)]
    assert not bad


@given(formulas)
@settings(max_examples=150)
def test_formula_print_parse(phi):
    again = parse_formula(read_one(print_formula(phi)), SG, LANG, CTX)
    assert alpha_eq(again, phi)


# -------------------------------------------------------------- commands


def test_sat_swap_involution(chdir_fixtures):
    status, rep, text = cli("sat", "swap.structure", "involution.theory")
    assert status == EXIT_OK and rep.ok
    assert "result: ok" in text


def test_check_pc_mostowski(chdir_fixtures):
    status, rep, text = cli("check-pc", "mostowski2.pc")
    assert status == EXIT_VIOLATION
    assert rep.witnesses and rep.witnesses[0]["condition"] == "Condition 5"
    assert "VIOLATION" in text


def test_eval_fuzzy_quantifiers(chdir_fixtures):
    for q, want in (("Ωprod", "1/4"), ("forall", "1/2"), ("exists", "1/2")):
        status, rep, _ = cli("eval", "fuzzy.structure", f"({q} (y τ) (R y))", "--ctx", "(ctx (x σ))")
        assert status == EXIT_OK
        # σ has a single point, so the value has one entry
        assert rep.data["value"] == f"{{(0): {want}}}", q


def test_eval_term(chdir_fixtures):
    status, rep, _ = cli("eval", "pow-swap.structure", "(f (f x))", "--ctx", "(ctx (x s))", "--term")
    assert status == EXIT_OK
    assert rep.data["value"] == "(fun (B) (B) (0) (1))"


def test_eval_parse_error_is_exit_two(chdir_fixtures, capsys):
    status, rep, _ = cli("eval", "pow-swap.structure", "(R y)", "--ctx", "(ctx (x s))")
    assert status == EXIT_ERROR
    assert "<expression>" in capsys.readouterr().err


def test_records_round_trip(chdir_fixtures):
    status, rep, text = cli("--format", "records", "check-pc", "two.pc")
    rec = json.loads(text)
    assert rec["schema"] == SCHEMA and rec["ok"] is True and status == EXIT_OK
    again = Report.from_record(rec)
    assert again.to_record() == rec
    with pytest.raises(ValueError):
        Report.from_record({**rec, "schema": "other"})


@pytest.mark.parametrize("argv, status", [
    (["check-mor", "mor/l5-two.mor"], EXIT_OK),
    (["check-mor", "bad/l5-two-mutated.mor"], EXIT_VIOLATION),
    (["checkproof", "unary.theory", "proofs/forall.proof"], EXIT_OK),
    (["checkproof", "unary.theory", "proofs/forall.proof", "--rules", "base"], EXIT_VIOLATION),
    (["checkproof", "unary.theory", "bad/sub-vs.proof"], EXIT_VIOLATION),
    (["prove", "unary.theory", "(seq (ctx (x s)) (hyp (R x)) (hyp (e)) (concl (R x)))"], EXIT_OK),
    (["prove", "unary.theory", "(seq (ctx (x s)) (hyp (R x)) (concl (Q x x)))", "--depth", "2"], EXIT_VIOLATION),
    (["sat", "pow-const.structure", "unary.theory"], EXIT_VIOLATION),
    (["sat", "l5-swap.structure"], EXIT_OK),
    (["transport", "mor/g5-g3.mor", "g5-swap.structure"], EXIT_OK),
    (["kernel", "mor/g5-g3.mor", "complete/half.mor"], EXIT_VIOLATION),
    (["kernel", "mor/g5-g3.mor", "mor/g5-g3.mor"], EXIT_OK),
    (["product", "two.pc", "two.pc", "--limit", "300"], EXIT_OK),
    (["product", "powerset.pc", "l5.pc", "--limit", "200"], EXIT_OK),
    (["factor", "mor/g5-g3.mor", "--check-image"], EXIT_OK),
    (["complete", "complete/positive.mor", "mor/g5-g3.mor", "--order", "3"], EXIT_OK),
    (["complete", "complete/half.mor", "mor/g5-g3.mor"], EXIT_VIOLATION),
    (["hsp", "product", "pow-swap.structure", "l5-swap.structure"], EXIT_OK),
    (["hsp", "image", "mor/l5-two.mor", "l5-swap.structure"], EXIT_OK),
    (["hsp", "sub", "mor/g3-g5.mor", "g3-swap.structure", "g5-from-g3.structure"], EXIT_OK),
    (["hsp", "sub", "mor/g3-g5.mor", "g3-swap.structure", "g5-swap.structure"], EXIT_ERROR),
    (["internal", "table3.pc"], EXIT_OK),
    (["translate", "interp-pair.interp", "unary.theory"], EXIT_OK),
    (["soundness", "--trials", "5"], EXIT_OK),
    (["sat", "missing.structure"], EXIT_ERROR),
])
def test_command_status(chdir_fixtures, argv, status):
    got, rep, _ = cli(*argv)
    assert got == status, rep.to_text()


def test_complete_print_emits_a_loadable_morphism(chdir_fixtures):
    status, rep, text = cli("complete", "complete/positive.mor", "mor/g5-g3.mor", "--print")
    assert status == EXIT_OK
    assert "(morphism" in text


def test_translate_prints_a_theory(chdir_fixtures):
    _, _, text = cli("translate", "interp-pair.interp", "unary.theory")
    T = parse_theory(text)
    assert len(T.assertions) == 5


def test_sat_show_lists_assertions(chdir_fixtures):
    _, rep, _ = cli("sat", "two-swap.structure", "--show", "--budget", "ctx=0,term=1,fml=0,ante=0")
    assert rep.data["satisfied"] == len(rep.lines) - 1


def test_main_parser_flags_before_command(chdir_fixtures):
    status, rep, _ = cli("--seed", "3", "--limit", "none", "check-pc", "table2.pc")
    assert status == EXIT_OK
    assert rep.verdicts[0].ok
