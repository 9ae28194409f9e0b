"""Ready-made proofs about observational equality.

Everything here returns a `Pf`, a proof object paired with the
conclusion it was built to have.  The pairing is a convenience for
chaining; nothing is trusted, and callers can re-check any result
through the kernel.

The builders cover congruence of application on the argument side and
on the function side, reflexivity, symmetry and transitivity of
equality at every type, and the principle that terms agreeing under
every ground-valued observation are equal.  At higher types these are
genuine derivations: the hypothesis "all observations agree" is
instantiated at observations assembled from the composition and
transposition constants, the resulting ground equations are chained
with symmetry and transitivity, and the deduction transformer
discharges the hypothesis again.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .abstraction import identity_term
from .kernel import (
    Axiom,
    Gen,
    Hyp,
    ModusPonens,
    Proof,
    axiom_instance,
    axiom_parts,
    deduction,
)
from .logic import Eq0, Forall, Formula, Imp, alpha_eq, eq
from .syntax import (
    GROUND,
    App,
    Arrow,
    Const,
    ConstTag,
    FiniteType,
    Term,
    Var,
    app,
)

# ------------------------------------------------------------- primitives


@dataclass(frozen=True)
class Pf:
    """A proof together with the conclusion it was constructed to have."""

    proof: Proof
    concl: Formula


def axiom(schema_id: str, *params) -> Pf:
    return Pf(Axiom(schema_id, tuple(params)), axiom_instance(schema_id, tuple(params)))


def mp(imp: Pf, arg: Pf) -> Pf:
    if not isinstance(imp.concl, Imp) or not alpha_eq(imp.concl.left, arg.concl):
        raise ValueError(f"modus ponens mismatch: {imp.concl} applied to {arg.concl}")
    return Pf(ModusPonens(imp.proof, arg.proof), imp.concl.right)


def gen(var: Var, p: Pf) -> Pf:
    return Pf(Gen(var, p.proof), Forall(var, p.concl))


def generalize(p: Pf, variables: Sequence[Var]) -> Pf:
    for v in reversed(tuple(variables)):
        p = gen(v, p)
    return p


def hyp(index: int, formula: Formula) -> Pf:
    return Pf(Hyp(index), formula)


def specialize(p: Pf, objects: Sequence[Term]) -> Pf:
    """Strip universal quantifiers by instantiating at the given terms."""
    for t in objects:
        if not isinstance(p.concl, Forall):
            raise ValueError(f"cannot specialize a non-universal conclusion: {p.concl}")
        p = mp(axiom("forall-e", p.concl, t), p)
    return p


def open_axiom(schema_id: str, *params, objects: Sequence[Term] | None = None) -> Pf:
    """An axiom instance with its universal closure stripped again.

    With no objects the closure variables are re-instantiated at
    themselves, exposing the open core of the schema; otherwise the
    closure is instantiated at the given terms, left to right.
    """
    closure, _ = axiom_parts(schema_id, tuple(params))
    base = axiom(schema_id, *params)
    return specialize(base, tuple(objects) if objects is not None else closure)


def discharge(p: Pf, hypotheses: Sequence[Formula]) -> Pf:
    """Turn a proof under hypotheses into one of `last -> conclusion`."""
    hyps = tuple(hypotheses)
    return Pf(deduction(p.proof, hyps), Imp(hyps[-1], p.concl))


def imp_refl(a: Formula) -> Pf:
    """A -> A, by the classic two-axiom composition."""
    a_a = Imp(a, a)
    return mp(
        mp(axiom("imp-s", a, a_a, a), axiom("imp-k", a, a_a)),
        axiom("imp-k", a, a),
    )


def imp_trans(p: Pf, q: Pf) -> Pf:
    """From A -> B and B -> C, conclude A -> C."""
    if not isinstance(p.concl, Imp) or not isinstance(q.concl, Imp):
        raise ValueError("imp_trans needs two implications")
    a, b = p.concl.left, p.concl.right
    c = q.concl.right
    lifted = mp(axiom("imp-k", q.concl, a), q)
    return mp(mp(axiom("imp-s", a, b, c), lifted), p)


# --------------------------------------------------------- equation chains


def eq_sym(p: Pf) -> Pf:
    """s == t becomes t == s."""
    if not isinstance(p.concl, Eq0):
        raise ValueError(f"not a ground equation: {p.concl}")
    return mp(open_axiom("eq-sym", p.concl.lhs, p.concl.rhs), p)


def eq_trans(p: Pf, q: Pf) -> Pf:
    """r == s and s == t become r == t."""
    if not isinstance(p.concl, Eq0) or not isinstance(q.concl, Eq0):
        raise ValueError("eq_trans needs two ground equations")
    r, s = p.concl.lhs, p.concl.rhs
    t = q.concl.rhs
    return mp(mp(open_axiom("eq-trans", r, s, t), p), q)


def _identity_collapse(a: Term) -> Pf:
    """(s k k) a == a, unfolding the two constant steps."""
    k_outer = Const(ConstTag.K, (GROUND, Arrow(GROUND, GROUND)))
    k_inner = Const(ConstTag.K, (GROUND, GROUND))
    spread = open_axiom(
        "comb-s", GROUND, Arrow(GROUND, GROUND), GROUND, objects=(k_outer, k_inner, a)
    )
    drop = open_axiom(
        "comb-k", GROUND, Arrow(GROUND, GROUND), objects=(a, App(k_inner, a))
    )
    return eq_trans(spread, drop)


# ------------------------------------------------------ congruence lemmas


def prove_cong_arg(sigma: FiniteType, tau: FiniteType) -> Pf:
    """all f:(sigma>tau), x, y: equal arguments give equal values.

    Conclusion: all f, x, y. eq(x, y) -> eq(f x, f y).
    """
    f = Var("f", Arrow(sigma, tau))
    x = Var("x", sigma)
    y = Var("y", sigma)
    assumption = eq(x, y)
    if sigma == GROUND and tau == GROUND:
        return axiom("cong0", f)
    if tau == GROUND:
        # The map is itself a ground observation; instantiate at it.
        body = specialize(hyp(0, assumption), [f])
        return generalize(discharge(body, [assumption]), [f, x, y])
    # Higher result type: observe through u after composing with u.
    u = Var("u", Arrow(tau, GROUND))
    composed = app(Const(ConstTag.B, (sigma, tau, GROUND)), u, f)
    if sigma == GROUND:
        agree = mp(open_axiom("cong0", composed), hyp(0, assumption))
    else:
        agree = specialize(hyp(0, assumption), [composed])
    left = open_axiom("comb-b", sigma, tau, GROUND, objects=(u, f, x))
    right = open_axiom("comb-b", sigma, tau, GROUND, objects=(u, f, y))
    chained = eq_trans(eq_trans(eq_sym(left), agree), right)
    body = gen(u, chained)
    return generalize(discharge(body, [assumption]), [f, x, y])


def prove_cong_fun(sigma: FiniteType, tau: FiniteType) -> Pf:
    """all f, g:(sigma>tau), x: equal maps give equal values.

    Conclusion: all f, g, x. eq(f, g) -> eq(f x, g x).
    """
    fun_type = Arrow(sigma, tau)
    f = Var("f", fun_type)
    g = Var("g", fun_type)
    x = Var("x", sigma)
    assumption = eq(f, g)
    if tau == GROUND:
        # Observe a map by evaluating it at x: the transposition of the
        # ground identity turns the point x into an observation.
        ident = identity_term(GROUND)
        at_x = app(Const(ConstTag.Q, (sigma, GROUND, GROUND)), ident, x)

        def evaluates(h: Term) -> Pf:
            # at_x h == i (h x) == h x
            unfold = open_axiom(
                "comb-q", sigma, GROUND, GROUND, objects=(ident, x, h)
            )
            return eq_trans(unfold, _identity_collapse(App(h, x)))

        agree = specialize(hyp(0, assumption), [at_x])
        chained = eq_trans(eq_trans(eq_sym(evaluates(f)), agree), evaluates(g))
        return generalize(discharge(chained, [assumption]), [f, g, x])
    u = Var("u", Arrow(tau, GROUND))
    through_u = app(Const(ConstTag.Q, (sigma, tau, GROUND)), u, x)
    agree = specialize(hyp(0, assumption), [through_u])
    left = open_axiom("comb-q", sigma, tau, GROUND, objects=(u, x, f))
    right = open_axiom("comb-q", sigma, tau, GROUND, objects=(u, x, g))
    chained = eq_trans(eq_trans(eq_sym(left), agree), right)
    body = gen(u, chained)
    return generalize(discharge(body, [assumption]), [f, g, x])


# ------------------------------------------------- equivalence at a type


def prove_eq_equivalence(sigma: FiniteType) -> tuple[Pf, Pf, Pf]:
    """Reflexivity, symmetry and transitivity of equality at sigma.

    Conclusions:
        all x. eq(x, x)
        all x, y. eq(x, y) -> eq(y, x)
        all x, y, z. eq(x, y) -> (eq(y, z) -> eq(x, z))
    """
    x = Var("x", sigma)
    y = Var("y", sigma)
    z = Var("z", sigma)
    if sigma == GROUND:
        return (
            axiom("eq-refl", x),
            axiom("eq-sym", x, y),
            axiom("eq-trans", x, y, z),
        )
    obs = Var("f", Arrow(sigma, GROUND))
    fx, fy, fz = App(obs, x), App(obs, y), App(obs, z)

    refl = generalize(gen(obs, open_axiom("eq-refl", fx)), [x])

    xy = eq(x, y)
    flipped = eq_sym(specialize(hyp(0, xy), [obs]))
    sym = generalize(discharge(gen(obs, flipped), [xy]), [x, y])

    yz = eq(y, z)
    first = specialize(hyp(0, xy), [obs])
    second = specialize(hyp(1, yz), [obs])
    joined = gen(obs, eq_trans(first, second))
    trans = discharge(discharge(joined, [xy, yz]), [xy])
    trans = generalize(trans, [x, y, z])
    return refl, sym, trans


def prove_obs(sigma: FiniteType) -> Pf:
    """Agreement under every ground observation gives equality.

    At a higher type the antecedent already is the one-level unfolding
    of equality, so the principle is an instance of A -> A; at ground
    type there is no unfolding to reflect, hence the ValueError.
    """
    if sigma == GROUND:
        raise ValueError("equality at ground type is primitive, not observational")
    x = Var("x", sigma)
    y = Var("y", sigma)
    return generalize(imp_refl(eq(x, y)), [x, y])
