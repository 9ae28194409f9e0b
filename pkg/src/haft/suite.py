"""A one-shot verification battery over the whole engine.

Each row exercises one advertised property end to end and reports a
check count: the reduction laws of the derived combinators, the
congruence and equivalence proofs rebuilt and re-checked through the
kernel, the observational principle, self-interpretation of the
arithmetic axiom base, the abstraction law on generated triples,
recursor arithmetic against native integers, and hypothetical proofs
pushed through the deduction transformer.  Seeds and grids are fixed,
so the rendered output is reproducible byte for byte.
"""
from __future__ import annotations

from dataclasses import dataclass

from .abstraction import GRID_SMALL, bracket, bracket_many, subst, verify_corollary
from .derivations import (
    prove_cong_arg,
    prove_cong_fun,
    prove_eq_equivalence,
    prove_obs,
)
from .dialectica import certify_axiom_base
from .generate import beta_triples, random_proofs
from .kernel import check, discharge_all
from .logic import Imp, alpha_eq, eq, forall_many
from .reduction import DEFAULT_FUEL, normalize, numeral_value
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
    is_higher,
    numeral,
)

_SEED = 2026


@dataclass(frozen=True)
class SuiteRow:
    name: str
    ok: bool
    checks: int


@dataclass(frozen=True)
class SuiteReport:
    rows: tuple[SuiteRow, ...]

    @property
    def ok(self) -> bool:
        return all(row.ok for row in self.rows)


# ------------------------------------------------- recursor arithmetic


def _succ_step() -> Term:
    k = Var("k_", GROUND)
    p = Var("p_", GROUND)
    return bracket_many([k, p], App(Const(ConstTag.SUCC), p))


def numeral_add(m: int, n: int) -> Term:
    """m + n as a recursor term: count n successors on top of m."""
    return app(Const(ConstTag.R, (GROUND,)), numeral(m), _succ_step(), numeral(n))


def numeral_mul(m: int, n: int) -> Term:
    """m * n as a recursor term: n-fold addition of m.

    The inner addition recurses on the literal m, so the unevaluated
    accumulator never sits in recursion position.
    """
    k = Var("k_", GROUND)
    p = Var("p_", GROUND)
    add_m = bracket_many(
        [k, p], app(Const(ConstTag.R, (GROUND,)), p, _succ_step(), numeral(m))
    )
    return app(Const(ConstTag.R, (GROUND,)), numeral(0), add_m, numeral(n))


# -------------------------------------------------------------- the rows


def _expected_cong_arg(sigma: FiniteType, tau: FiniteType):
    f = Var("f", Arrow(sigma, tau))
    x = Var("x", sigma)
    y = Var("y", sigma)
    return forall_many([f, x, y], Imp(eq(x, y), eq(App(f, x), App(f, y))))


def _expected_cong_fun(sigma: FiniteType, tau: FiniteType):
    f = Var("f", Arrow(sigma, tau))
    g = Var("g", Arrow(sigma, tau))
    x = Var("x", sigma)
    return forall_many([f, g, x], Imp(eq(f, g), eq(App(f, x), App(g, x))))


def run_suite(grid=GRID_SMALL, fuel: int = DEFAULT_FUEL) -> SuiteReport:
    rows: list[SuiteRow] = []

    corollary = verify_corollary(grid, fuel)
    for law, label in (
        ("i", "identity-law"),
        ("b", "composition-law"),
        ("q", "transposition-law"),
    ):
        group = [c for c in corollary.checks if c.law == law]
        rows.append(SuiteRow(label, all(c.ok for c in group), len(group)))

    ok, n = True, 0
    for sigma in grid:
        for tau in grid:
            pf = prove_cong_arg(sigma, tau)
            concl = check(pf.proof).conclusion
            ok = ok and alpha_eq(concl, _expected_cong_arg(sigma, tau))
            n += 1
    rows.append(SuiteRow("congruence-argument", ok, n))

    ok, n = True, 0
    for sigma in grid:
        for tau in grid:
            pf = prove_cong_fun(sigma, tau)
            concl = check(pf.proof).conclusion
            ok = ok and alpha_eq(concl, _expected_cong_fun(sigma, tau))
            n += 1
    rows.append(SuiteRow("congruence-function", ok, n))

    ok, n = True, 0
    for sigma in grid:
        for pf in prove_eq_equivalence(sigma):
            ok = ok and alpha_eq(check(pf.proof).conclusion, pf.concl)
            n += 1
    rows.append(SuiteRow("equality-equivalence", ok, n))

    ok, n = True, 0
    for sigma in grid:
        if not is_higher(sigma):
            continue
        pf = prove_obs(sigma)
        ok = ok and alpha_eq(check(pf.proof).conclusion, pf.concl)
        n += 1
    rows.append(SuiteRow("observational-principle", ok, n))

    certify = certify_axiom_base(grid)
    rows.append(SuiteRow("self-interpretation", certify.ok, len(certify.rows)))

    ok, n = True, 0
    for var, body, arg in beta_triples(120, seed=_SEED):
        lhs = normalize(App(bracket(var, body).term, arg), fuel).term
        rhs = normalize(subst(body, var, arg), fuel).term
        ok = ok and lhs == rhs
        n += 1
    rows.append(SuiteRow("beta-expansion", ok, n))

    ok, n = True, 0
    for m in range(0, 11):
        for nn in range(0, 11):
            ok = ok and numeral_value(numeral_add(m, nn), fuel) == m + nn
            ok = ok and numeral_value(numeral_mul(m, nn), fuel) == m * nn
            n += 2
    rows.append(SuiteRow("recursor-arithmetic", ok, n))

    ok, n = True, 0
    for proof, hyps, concl in random_proofs(30, seed=_SEED):
        judgment = check(proof, hyps)
        good = alpha_eq(judgment.conclusion, concl)
        closed = discharge_all(proof, hyps)
        want = concl
        for h in reversed(hyps):
            want = Imp(h, want)
        good = good and alpha_eq(check(closed).conclusion, want)
        ok = ok and good
        n += 1
    rows.append(SuiteRow("proof-discharge", ok, n))

    return SuiteReport(tuple(rows))


def render_suite(report: SuiteReport) -> str:
    width = max(len(row.name) for row in report.rows)
    lines = []
    for row in report.rows:
        status = "ok" if row.ok else "FAIL"
        lines.append(f"{row.name:<{width}}  {status:<4}  {row.checks:>4} checks")
    lines.append(f"overall: {'ok' if report.ok else 'FAIL'} ({len(report.rows)} rows)")
    return "\n".join(lines) + "\n"
