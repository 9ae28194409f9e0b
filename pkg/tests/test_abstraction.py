"""Bracket abstraction, substitution, and the derived-combinator laws."""

import time

import pytest

from haft.abstraction import (
    GRID_FULL,
    GRID_SMALL,
    AbstractionResult,
    bracket,
    bracket_many,
    composition_def,
    derived_combinators,
    grid_types,
    identity_term,
    subst,
    transpose_term,
    transposition_def,
    verify_corollary,
)
from haft.generate import beta_triples
from haft.reduction import normalize
from haft.syntax import (
    GROUND,
    Arrow,
    Product,
    Var,
    app,
    numeral,
    parse_term,
    print_term,
    term_size,
    term_vars,
    type_of,
)

T0 = GROUND
T1 = Arrow(GROUND, GROUND)

X = Var("x", T0)
F = Var("f", T1)


# ------------------------------------------------------------- substitution


def test_subst_replaces_all_occurrences():
    body = parse_term("f (f x)", {"x": T0, "f": T1})
    got = subst(body, X, numeral(2))
    assert got == parse_term("f (f (succ (succ zero)))", {"f": T1})


def test_subst_requires_matching_type():
    from haft.syntax import TypingError

    with pytest.raises(TypingError) as exc:
        subst(X, X, F)
    assert exc.value.expected == T0
    assert exc.value.actual == T1


# ------------------------------------------------------------------ bracket


def test_bracket_clauses():
    # Variable itself: the identity combination s k k.
    res = bracket(X, X)
    assert res.term == identity_term(T0)
    # Variable absent: a constant function via k.
    res = bracket(X, numeral(1))
    assert print_term(res.term) == "k{0,0} (succ zero)"
    # Application: split through s.
    res = bracket(X, app(F, X))
    head = print_term(res.term)
    assert head.startswith("s{")


def test_bracket_removes_the_variable():
    body = parse_term("f (succ x)", {"x": T0, "f": T1})
    res = bracket(X, body)
    assert X not in term_vars(res.term)
    assert type_of(res.term) == Arrow(T0, T0)


def test_bracket_growth_metric():
    body = parse_term("f (succ x)", {"x": T0, "f": T1})
    res = bracket(X, body)
    assert isinstance(res, AbstractionResult)
    assert res.var == X
    assert res.growth == pytest.approx(term_size(res.term) / term_size(body))
    assert res.growth == pytest.approx(3.4)


def test_bracket_beta_law_on_corpus():
    for var, body, arg in beta_triples(120, seed=1):
        lam = bracket(var, body).term
        assert var not in term_vars(lam)
        lhs = normalize(app(lam, arg)).term
        rhs = normalize(subst(body, var, arg)).term
        assert lhs == rhs


def test_bracket_many_nests_right_to_left():
    y = Var("y", T0)
    body = app(F, X)
    lam = bracket_many([X, y], body)
    # Applying both arguments restores the body with y dropped.
    got = normalize(app(lam, numeral(1), numeral(2))).term
    assert got == normalize(subst(body, X, numeral(1))).term


# ------------------------------------------------------- derived combinators


def test_identity_term_law():
    for ty in GRID_SMALL:
        v = Var("a", ty)
        assert normalize(app(identity_term(ty), v)).term == v


def test_composition_def_law():
    # The k,s expression behaves like composition: x, y, z to x (y z).
    env = {"f": T1, "g": T1, "x": T0}
    b = composition_def(T0, T0, T0)
    assert {c for c in print_term(b) if c.isalpha()} <= {"s", "k"}
    got = normalize(
        app(b, parse_term("f", env), parse_term("g", env), parse_term("x", env))
    ).term
    assert got == parse_term("f (g x)", env)


def test_transposition_def_law():
    env = {"f": T1, "g": T1, "x": T0}
    q = transposition_def(T0, T0, T0)
    assert {c for c in print_term(q) if c.isalpha()} <= {"s", "k"}
    # x (z y) with x=f, y=x, z=g.
    got = normalize(
        app(q, parse_term("f", env), parse_term("x", env), parse_term("g", env))
    ).term
    assert got == parse_term("f (g x)", env)


def test_transpose_term_law():
    for sigma in (T0, T1):
        for tau in (T0, T1):
            t = transpose_term(sigma, tau)
            x = Var("x", sigma)
            f = Var("f", Arrow(sigma, tau))
            assert normalize(app(t, x, f)).term == app(f, x)


def test_derived_combinator_catalog():
    cat = derived_combinators()
    assert set(cat) == {"i", "t", "b", "q"}
    assert cat["b"] is composition_def
    assert cat["q"] is transposition_def
    assert cat["i"] is identity_term
    assert cat["t"] is transpose_term


def test_grid_types():
    assert grid_types("small") == GRID_SMALL
    assert grid_types("full") == GRID_FULL
    assert len(GRID_SMALL) == 4
    assert len(GRID_FULL) == 7
    assert set(GRID_SMALL) <= set(GRID_FULL)
    with pytest.raises(ValueError):
        grid_types("medium")


# ------------------------------------------------------------ the corollary


def test_verify_corollary_small_grid():
    start = time.perf_counter()
    report = verify_corollary(GRID_SMALL)
    elapsed = time.perf_counter() - start
    assert report.ok
    by_law = {}
    for c in report.checks:
        by_law.setdefault(c.law, []).append(c)
        assert c.ok
        assert c.steps > 0
    assert len(by_law["i"]) == 4
    assert len(by_law["b"]) == 64
    assert len(by_law["q"]) == 64
    assert elapsed < 1.0


def test_verify_corollary_check_params():
    report = verify_corollary((T0,))
    laws = sorted(c.law for c in report.checks)
    assert laws == ["b", "i", "q"]
    for c in report.checks:
        if c.law == "i":
            assert c.params == (T0,)
        else:
            assert c.params == (T0, T0, T0)
