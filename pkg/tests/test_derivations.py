"""Derived proofs: congruence, equivalence laws, and the observational
principle, all re-checked by the kernel."""

import pytest

from haft.abstraction import GRID_SMALL
from haft.derivations import (
    Pf,
    axiom,
    discharge,
    eq_sym,
    eq_trans,
    gen,
    generalize,
    hyp,
    imp_refl,
    imp_trans,
    mp,
    open_axiom,
    prove_cong_arg,
    prove_cong_fun,
    prove_eq_equivalence,
    prove_obs,
    specialize,
)
from haft.kernel import axiom_ids_used, check
from haft.logic import (
    Eq0,
    Forall,
    Imp,
    alpha_eq,
    eq,
    forall_many,
)
from haft.syntax import GROUND, Arrow, Var, app

T0 = GROUND
T1 = Arrow(GROUND, GROUND)

X = Var("x", T0)
Y = Var("y", T0)

# No congruence beyond the single ground-type axiom may appear in the
# emitted proofs; these are the complete permitted sets.
_ALLOWED_ARG = {
    "cong0", "comb-b", "eq-sym", "eq-trans",
    "forall-e", "forall-imp", "imp-k", "imp-s",
}
_ALLOWED_FUN = {
    "comb-k", "comb-q", "comb-s", "eq-sym", "eq-trans",
    "forall-e", "forall-imp", "imp-k", "imp-s",
}


# ------------------------------------------------------------ small helpers


def test_pf_carries_checked_conclusion():
    p = axiom("eq-refl", X)
    assert isinstance(p, Pf)
    assert check(p.proof).conclusion == p.concl


def test_imp_refl_and_trans():
    a = Eq0(X, X)
    b = Eq0(Y, Y)
    r = imp_refl(a)
    assert alpha_eq(r.concl, Imp(a, a))
    check(r.proof)
    ab = hyp(0, Imp(a, b))
    bc = hyp(1, Imp(b, a))
    tr = imp_trans(ab, bc)
    assert alpha_eq(tr.concl, Imp(a, a))
    check(tr.proof, (Imp(a, b), Imp(b, a)))


def test_specialize_instantiates_a_prefix():
    p = axiom("eq-sym", X, Y)
    inst = specialize(p, (app(Var("f", T1), Y), Y))
    f = Var("f", T1)
    assert inst.concl == Imp(Eq0(app(f, Y), Y), Eq0(Y, app(f, Y)))
    check(inst.proof)


def test_open_axiom_defaults_to_closure_variables():
    p = open_axiom("eq-sym", X, Y)
    assert p.concl == Imp(Eq0(X, Y), Eq0(Y, X))


def test_mp_rejects_mismatch():
    a = Eq0(X, X)
    with pytest.raises(Exception):
        mp(imp_refl(a), hyp(0, Eq0(Y, Y)))


def test_generalize_wraps_outside_in():
    p = imp_refl(Eq0(X, Y))
    q = generalize(p, [X, Y])
    assert q.concl == forall_many([X, Y], Imp(Eq0(X, Y), Eq0(X, Y)))
    check(q.proof)


def test_discharge_builds_implication():
    a = Eq0(X, X)
    p = hyp(0, a)
    out = discharge(p, (a,))
    assert alpha_eq(out.concl, Imp(a, a))
    assert check(out.proof).hypotheses == ()


def test_eq_sym_and_trans_wrappers():
    p = hyp(0, Eq0(X, Y))
    s = eq_sym(p)
    assert s.concl == Eq0(Y, X)
    check(s.proof, (Eq0(X, Y),))
    q = hyp(1, Eq0(Y, app(Var("f", T1), X)))
    t = eq_trans(p, q)
    assert t.concl == Eq0(X, app(Var("f", T1), X))
    check(t.proof, (Eq0(X, Y), Eq0(Y, app(Var("f", T1), X))))


# ----------------------------------------------------- congruence both ways


def _expected_cong_arg(sigma, tau):
    u = Var("u", Arrow(sigma, tau))
    a = Var("a", sigma)
    b = Var("b", sigma)
    matrix = Imp(eq(a, b), eq(app(u, a), app(u, b)))
    return forall_many([u, a, b], matrix)


def _expected_cong_fun(sigma, tau):
    u = Var("u", Arrow(sigma, tau))
    v = Var("v", Arrow(sigma, tau))
    a = Var("a", sigma)
    matrix = Imp(eq(u, v), eq(app(u, a), app(v, a)))
    return forall_many([u, v, a], matrix)


@pytest.mark.parametrize("sigma", GRID_SMALL, ids=str)
@pytest.mark.parametrize("tau", GRID_SMALL, ids=str)
def test_cong_arg_checks_and_matches_macro(sigma, tau):
    p = prove_cong_arg(sigma, tau)
    j = check(p.proof)
    assert j.hypotheses == ()
    assert alpha_eq(j.conclusion, p.concl)
    assert alpha_eq(p.concl, _expected_cong_arg(sigma, tau))
    used = axiom_ids_used(p.proof)
    assert used <= _ALLOWED_ARG
    assert "induction" not in used


@pytest.mark.parametrize("sigma", GRID_SMALL, ids=str)
@pytest.mark.parametrize("tau", GRID_SMALL, ids=str)
def test_cong_fun_checks_and_matches_macro(sigma, tau):
    p = prove_cong_fun(sigma, tau)
    j = check(p.proof)
    assert j.hypotheses == ()
    assert alpha_eq(j.conclusion, p.concl)
    assert alpha_eq(p.concl, _expected_cong_fun(sigma, tau))
    used = axiom_ids_used(p.proof)
    assert used <= _ALLOWED_FUN
    # The only congruence axiom in the catalog is the ground one, and
    # the function-side proof does not even need that.
    assert "cong0" not in used


# ------------------------------------------------------- equivalence and obs


@pytest.mark.parametrize("sigma", GRID_SMALL, ids=str)
def test_equality_is_an_equivalence(sigma):
    refl, sym, trans = prove_eq_equivalence(sigma)
    for p in (refl, sym, trans):
        j = check(p.proof)
        assert j.hypotheses == ()
        assert alpha_eq(j.conclusion, p.concl)
    x = Var("x", sigma)
    y = Var("y", sigma)
    z = Var("z", sigma)
    assert alpha_eq(refl.concl, Forall(x, eq(x, x)))
    assert alpha_eq(sym.concl, forall_many([x, y], Imp(eq(x, y), eq(y, x))))
    assert alpha_eq(
        trans.concl,
        forall_many([x, y, z], Imp(eq(x, y), Imp(eq(y, z), eq(x, z)))),
    )


def test_obs_at_higher_types():
    for sigma in GRID_SMALL[1:]:
        p = prove_obs(sigma)
        j = check(p.proof)
        x = Var("x", sigma)
        y = Var("y", sigma)
        assert alpha_eq(j.conclusion, forall_many([x, y], Imp(eq(x, y), eq(x, y))))


def test_obs_rejects_ground_type():
    with pytest.raises(ValueError):
        prove_obs(GROUND)
