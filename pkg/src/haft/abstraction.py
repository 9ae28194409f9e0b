"""Bracket abstraction and the derived combinators.

With no binders in the term language, lambda abstraction is simulated:
abs(x, t) builds a term that behaves like the function sending x to t,
using the textbook three clauses

    abs(x, x)  = s k k          (the identity at x's type)
    abs(x, t)  = k t            when x does not occur in t
    abs(x, t u) = s (abs x t) (abs x u)

No eta clause is applied; the defining law is behavioural, checked by
normalization: abs(x, t) a  reduces to  t[a/x].

The module also houses the definability facts: the identity s k k, the
transposition q (s k k) that swaps its two arguments, and definitions
of the composition and transposition combinators from k and s alone,
whose laws verify_corollary checks by pure reduction over a type grid.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .reduction import DEFAULT_FUEL, normalize
from .syntax import (
    GROUND,
    App,
    Arrow,
    Const,
    ConstTag,
    FiniteType,
    Product,
    Term,
    TypingError,
    Var,
    arrow,
    parse_term,
    term_size,
    term_vars,
    type_of,
)

# ---------------------------------------------------------- substitution


def subst(t: Term, x: Var, a: Term) -> Term:
    """Replace every occurrence of x in t by a (no binders, no capture)."""
    ta = type_of(a)
    if ta != x.type:
        raise TypingError(
            "domain-mismatch",
            f"cannot substitute for {x.name}",
            expected=x.type,
            actual=ta,
        )

    def go(u: Term) -> Term:
        match u:
            case Var() if u == x:
                return a
            case App(fun, arg):
                return App(go(fun), go(arg))
            case _:
                return u

    return go(t)


# ------------------------------------------------------------ abstraction


@dataclass(frozen=True)
class AbstractionResult:
    term: Term
    var: Var
    growth: float  # size(term) / size(body)


def identity_term(sigma: FiniteType) -> Term:
    """s k k at the parameters that make it sigma > sigma."""
    return App(
        App(
            Const(ConstTag.S, (sigma, Arrow(sigma, sigma), sigma)),
            Const(ConstTag.K, (sigma, Arrow(sigma, sigma))),
        ),
        Const(ConstTag.K, (sigma, sigma)),
    )


def bracket(x: Var, body: Term) -> AbstractionResult:
    """Abstract x out of body; the result applied to a reduces to body[a/x]."""

    def go(t: Term) -> tuple[Term, FiniteType]:
        if t == x:
            return identity_term(x.type), x.type
        if x not in term_vars(t):
            ty = type_of(t)
            return App(Const(ConstTag.K, (ty, x.type)), t), ty
        match t:
            case App(fun, arg):
                f_abs, f_ty = go(fun)
                a_abs, a_ty = go(arg)
                if not isinstance(f_ty, Arrow):
                    raise TypingError("non-arrow", "ill-typed abstraction body", actual=f_ty)
                result = App(
                    App(Const(ConstTag.S, (x.type, a_ty, f_ty.codomain)), f_abs),
                    a_abs,
                )
                return result, f_ty.codomain
            case _:
                raise AssertionError(t)

    term, _ = go(body)
    return AbstractionResult(term, x, term_size(term) / max(1, term_size(body)))


def bracket_many(variables: Sequence[Var], body: Term) -> Term:
    """Abstract a whole prefix: bracket_many([x, y], t) acts like x, y |-> t."""
    term = body
    for v in reversed(variables):
        term = bracket(v, term).term
    return term


# ------------------------------------------------------ derived combinators


def transpose_term(rho: FiniteType, sigma: FiniteType) -> Term:
    """q (s k k) of type rho > ((rho>sigma) > sigma); applied: x, f |-> f x.

    The identity argument is pinned to sigma by hand: unification against
    the target type leaves the inner k parameters free, since s k k is
    the identity for every choice of the second k's junk parameter.
    """
    return App(Const(ConstTag.Q, (rho, sigma, sigma)), identity_term(sigma))


def composition_signature(rho: FiniteType, sigma: FiniteType, tau: FiniteType) -> FiniteType:
    return Arrow(Arrow(sigma, tau), Arrow(Arrow(rho, sigma), Arrow(rho, tau)))


def transposition_signature(rho: FiniteType, sigma: FiniteType, tau: FiniteType) -> FiniteType:
    return Arrow(Arrow(sigma, tau), Arrow(rho, Arrow(Arrow(rho, sigma), tau)))


def composition_def(rho: FiniteType, sigma: FiniteType, tau: FiniteType) -> Term:
    """s (k s) k, behaving like the primitive b: x, y, z |-> x (y z)."""
    return parse_term("s (k s) k", expected=composition_signature(rho, sigma, tau))


_Q_FROM_SK = "{b} (s ({b} {b} s) (k k)) {b}".format(b="(s (k s) k)")


def transposition_def(rho: FiniteType, sigma: FiniteType, tau: FiniteType) -> Term:
    """The k,s definition of the primitive q: x, y, z |-> x (z y).

    Every occurrence of the composition combinator in the defining
    expression is itself expanded to s (k s) k, so the result mentions
    only k and s.
    """
    return parse_term(_Q_FROM_SK, expected=transposition_signature(rho, sigma, tau))


def derived_combinators() -> dict[str, Callable[..., Term]]:
    """Type-parameterized schemas for the derived combinators."""
    return {
        "i": identity_term,
        "t": transpose_term,
        "b": composition_def,
        "q": transposition_def,
    }


# --------------------------------------------------------- grid and checks

GRID_SMALL: tuple[FiniteType, ...] = (
    GROUND,
    Arrow(GROUND, GROUND),
    Arrow(Arrow(GROUND, GROUND), GROUND),
    Product(GROUND, GROUND),
)

GRID_FULL: tuple[FiniteType, ...] = GRID_SMALL + (
    arrow(GROUND, GROUND, GROUND),
    Arrow(Product(GROUND, GROUND), GROUND),
    Product(GROUND, Arrow(GROUND, GROUND)),
)


def grid_types(name: str) -> tuple[FiniteType, ...]:
    if name == "small":
        return GRID_SMALL
    if name == "full":
        return GRID_FULL
    raise ValueError(f"unknown grid {name!r}")


@dataclass(frozen=True)
class CorollaryCheck:
    law: str  # "i" | "b" | "q"
    params: tuple[FiniteType, ...]
    ok: bool
    steps: int


@dataclass(frozen=True)
class CorollaryReport:
    checks: tuple[CorollaryCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


def verify_corollary(
    grid: Sequence[FiniteType] = GRID_SMALL, fuel: int = DEFAULT_FUEL
) -> CorollaryReport:
    """Check the k,s definability laws by reduction alone.

    For every type in the grid: s k k a reduces to a.  For every triple
    (rho, sigma, tau): the composition definition applied to x, y, z
    reduces to x (y z), and the transposition definition to x (z y),
    with x : sigma>tau, z : rho (composition's y : rho>sigma,
    transposition's y : rho, z : rho>sigma).  The checker never touches
    the proof kernel; everything is term rewriting plus a type match.
    """
    checks: list[CorollaryCheck] = []
    for sigma in grid:
        a = Var("a", sigma)
        report = normalize(App(identity_term(sigma), a), fuel)
        ok = report.term == a and type_of(identity_term(sigma)) == Arrow(sigma, sigma)
        checks.append(CorollaryCheck("i", (sigma,), ok, report.steps))
    for rho in grid:
        for sigma in grid:
            for tau in grid:
                x = Var("x", Arrow(sigma, tau))
                y = Var("y", Arrow(rho, sigma))
                z = Var("z", rho)
                b_def = composition_def(rho, sigma, tau)
                report = normalize(App(App(App(b_def, x), y), z), fuel)
                ok = (
                    report.term == App(x, App(y, z))
                    and type_of(b_def) == composition_signature(rho, sigma, tau)
                )
                checks.append(CorollaryCheck("b", (rho, sigma, tau), ok, report.steps))

                yq = Var("y", rho)
                zq = Var("z", Arrow(rho, sigma))
                q_def = transposition_def(rho, sigma, tau)
                report = normalize(App(App(App(q_def, x), yq), zq), fuel)
                ok = (
                    report.term == App(x, App(zq, yq))
                    and type_of(q_def) == transposition_signature(rho, sigma, tau)
                )
                checks.append(CorollaryCheck("q", (rho, sigma, tau), ok, report.steps))
    return CorollaryReport(tuple(checks))
