"""The line-oriented proof script format: parse, serialize, explain."""

import pathlib

import pytest

from haft.derivations import (
    prove_cong_arg,
    prove_cong_fun,
    prove_eq_equivalence,
    prove_obs,
)
from haft.kernel import Axiom, Gen, Hyp, ModusPonens, check
from haft.logic import Eq0, alpha_eq, parse_formula
from haft.proofscript import explain, parse_proof_script, serialize
from haft.syntax import GROUND, Arrow, ParseError, Var

T0 = GROUND
T1 = Arrow(GROUND, GROUND)

SAMPLES = pathlib.Path(__file__).resolve().parent.parent / "samples" / "proofs"


SYMMETRY = """\
x : 0
y : 0
assume x == y
axiom eq-sym x; y
axiom forall-e all x:0. all y:0. x == y -> y == x; x
mp 2 1
axiom forall-e all y:0. x == y -> y == x; y
mp 4 3
hyp 1
mp 5 6
"""


# ------------------------------------------------------------------ parsing


def test_parse_symmetry_script():
    proof, hyps, env = parse_proof_script(SYMMETRY)
    assert len(hyps) == 1
    assert hyps[0] == Eq0(Var("x", T0), Var("y", T0))
    j = check(proof, hyps)
    assert str(j) == "x == y |- y == x"
    assert env == {"x": T0, "y": T0}


def test_comments_and_blank_lines_are_skipped():
    noisy = "# leading comment\n\n" + SYMMETRY.replace(
        "mp 2 1", "mp 2 1   # inline comment"
    )
    proof, hyps, _ = parse_proof_script(noisy)
    assert check(proof, hyps).conclusion == Eq0(Var("y", T0), Var("x", T0))


def test_last_step_is_the_root():
    text = "x : 0\naxiom eq-refl x\naxiom eq-sym x; x\n"
    proof, _, _ = parse_proof_script(text)
    assert proof == Axiom("eq-sym", (Var("x", T0), Var("x", T0)))


def test_gen_step():
    text = "x : 0\naxiom eq-refl x\ngen x 1\n"
    proof, _, _ = parse_proof_script(text)
    assert proof == Gen(Var("x", T0), Axiom("eq-refl", (Var("x", T0),)))


# ------------------------------------------------------------------- errors


@pytest.mark.parametrize(
    "text,needle",
    [
        ("x : 0\nmp 1 2\n", "step"),            # forward references
        ("x : 0\nhyp 1\n", "no assume"),        # no assumes at all
        ("x : 0\nassume x == x\nhyp 2\n", "between 1 and 1"),
        ("x : 0\nassume x == x\nhyp 0\n", "between 1 and 1"),
        ("x : 0\naxiom no-such x\n", "unknown"),
        ("x : 0\naxiom eq-sym x\n", "got 1"),
        ("x : 0\nfrobnicate 1\n", "step"),
        ("x : 0\ngen y 1\n", "y"),
    ],
)
def test_script_errors_mention_the_problem(text, needle):
    with pytest.raises(ParseError) as exc:
        parse_proof_script(text)
    assert needle in str(exc.value)


def test_script_errors_carry_line_numbers():
    text = "x : 0\nassume x == x\naxiom eq-sym x; missing\n"
    with pytest.raises(ParseError) as exc:
        parse_proof_script(text)
    assert exc.value.line == 3


def test_empty_script_rejected():
    with pytest.raises(ParseError, match="step"):
        parse_proof_script("x : 0\nassume x == x\n")


# ------------------------------------------------- serialize and round trip


def test_serialize_round_trips_structurally():
    proof, hyps, _ = parse_proof_script(SYMMETRY)
    text = serialize(proof, hyps)
    again, hyps2, _ = parse_proof_script(text)
    assert again == proof
    assert hyps2 == hyps


def test_serialize_deduplicates_shared_subtrees():
    # The same generalized reflexivity subtree feeds both sides of an
    # imp-k instance; the script must emit it once.
    x = Var("x", T0)
    shared = Gen(x, Axiom("eq-refl", (x,)))
    closed = parse_formula("all x:0. all x:0. x == x")
    proof = ModusPonens(Axiom("imp-k", (closed, closed)), shared)
    proof = ModusPonens(proof, shared)
    text = serialize(proof)
    assert text.count("axiom eq-refl") == 1
    assert text.count("gen x") == 1
    again, _, _ = parse_proof_script(text)
    assert again == proof


@pytest.mark.parametrize(
    "builder",
    [
        lambda: prove_cong_arg(T1, T0),
        lambda: prove_cong_fun(T0, T1),
        lambda: prove_eq_equivalence(T1)[2],
        lambda: prove_obs(T1),
    ],
)
def test_generated_proofs_round_trip(builder):
    pf = builder()
    text = serialize(pf.proof)
    again, hyps, _ = parse_proof_script(text)
    assert hyps == ()
    assert again == pf.proof
    assert alpha_eq(check(again).conclusion, pf.concl)


# ------------------------------------------------------------------ explain


def test_explain_shows_each_step_conclusion():
    proof, hyps, _ = parse_proof_script(SYMMETRY)
    text = explain(proof, hyps)
    lines = text.splitlines()
    assert lines[0].startswith("assume 1: x == y")
    # Every numbered step is followed by its judgment line.
    steps = [ln for ln in lines if ln and ln[0].isdigit()]
    concls = [ln for ln in lines if ln.startswith("   |- ")]
    assert len(steps) == len(concls) == 7
    assert lines[-1] == "   |- y == x"


# ------------------------------------------------------------ golden files


@pytest.mark.parametrize(
    "name,concl",
    [
        ("symmetry.proof", "x == y |- y == x"),
        ("obs.proof", None),
        ("refl_higher.proof", None),
        ("cong_arg.proof", None),
    ],
)
def test_sample_scripts_check(name, concl):
    text = (SAMPLES / name).read_text()
    proof, hyps, _ = parse_proof_script(text)
    j = check(proof, hyps)
    if concl is not None:
        assert str(j) == concl


def test_sample_scripts_match_serialized_form():
    # The generated samples are comment header plus serializer output.
    for name in ("obs.proof", "refl_higher.proof", "cong_arg.proof"):
        text = (SAMPLES / name).read_text()
        body = "".join(
            line for line in text.splitlines(keepends=True)
            if not line.startswith("#")
        )
        proof, hyps, _ = parse_proof_script(text)
        assert serialize(proof, hyps) == body
