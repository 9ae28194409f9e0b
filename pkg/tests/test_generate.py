"""Deterministic corpus generators used by the checks and the suite."""

import random

from haft.generate import beta_triples, closed_terms, random_proofs, term_pool
from haft.kernel import check
from haft.logic import is_quantifier_free
from haft.reduction import normalize
from haft.syntax import GROUND, Arrow, Var, term_vars, type_of

T0 = GROUND
T1 = Arrow(GROUND, GROUND)


def test_term_pool_is_deterministic():
    a = term_pool(random.Random(5), rounds=40)
    b = term_pool(random.Random(5), rounds=40)
    assert a == b
    c = term_pool(random.Random(6), rounds=40)
    assert a != c


def test_term_pool_terms_are_well_typed():
    for t in term_pool(random.Random(1), rounds=60):
        type_of(t)  # raises on ill-typed trees


def test_term_pool_accepts_seed_variables():
    x = Var("x", T0)
    pool = term_pool(random.Random(2), rounds=30, variables=(x,))
    assert any(x in term_vars(t) for t in pool)


def test_closed_terms_distinct_closed_and_counted():
    terms = closed_terms(300, seed=4)
    assert len(terms) == 300
    assert len(set(terms)) == 300
    for t in terms:
        assert term_vars(t) == set()
        type_of(t)


def test_closed_terms_depend_on_seed():
    assert closed_terms(50, seed=1) != closed_terms(50, seed=2)
    assert closed_terms(50, seed=1) == closed_terms(50, seed=1)


def test_beta_triples_shape():
    triples = beta_triples(80, seed=3)
    assert len(triples) == 80
    for var, body, arg in triples:
        assert var.type in (T0, T1)
        assert type_of(arg) == var.type
        assert term_vars(arg) == set()
        type_of(body)


def test_random_proofs_check_under_their_hypotheses():
    out = random_proofs(60, seed=8)
    assert len(out) == 60
    for proof, hyps, concl in out:
        assert 1 <= len(hyps) <= 3
        assert all(is_quantifier_free(h) for h in hyps)
        j = check(proof, hyps)
        assert j.conclusion == concl


def test_random_proofs_deterministic():
    a = random_proofs(20, seed=0)
    b = random_proofs(20, seed=0)
    assert a == b


def test_generated_terms_normalize_within_default_fuel():
    for t in closed_terms(120, seed=12):
        normalize(t)
