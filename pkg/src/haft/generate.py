"""Deterministic generators for terms, reduction triples, and proofs.

Everything here is driven by a seeded generator, so a given (count,
seed) pair always produces the same objects.  The generators build
well-typed data by construction: terms come from typed pools that only
ever apply a function type to a matching argument, and proofs are
assembled through the checked builders, so the interesting question
for the callers is not whether the objects are valid but whether the
engine agrees (normal forms, conclusions after discharge, and so on).
"""
from __future__ import annotations

import random
from typing import Sequence

from .derivations import Pf, axiom, gen, hyp, imp_refl, mp
from .kernel import Proof
from .logic import And, Eq0, Formula, Imp, Or
from .syntax import (
    GROUND,
    App,
    Arrow,
    Const,
    ConstTag,
    FiniteType,
    Product,
    Term,
    Var,
    numeral,
    term_size,
    type_of,
)

_POOL_SIZE_CAP = 120


def term_pool(
    rng: random.Random,
    rounds: int,
    variables: Sequence[Var] = (),
) -> list[Term]:
    """Grow typed pools by application; return the terms built.

    The pools start from numerals, the constants at a few small
    parameter choices, and the given variables.  Each round picks an
    arrow-typed member and a matching argument and applies them.
    Oversized results are returned but no longer fed back, keeping
    the pools from snowballing.
    """
    pools: dict[FiniteType, list[Term]] = {}

    def put(term: Term) -> None:
        pools.setdefault(type_of(term), []).append(term)

    for v in variables:
        put(v)
    for n in (0, 1, 2):
        put(numeral(n))
    put(Const(ConstTag.SUCC))
    small = (GROUND, Arrow(GROUND, GROUND))
    for s in small:
        for t in small:
            put(Const(ConstTag.K, (s, t)))
            put(Const(ConstTag.P, (s, t)))
            put(Const(ConstTag.P0, (s, t)))
            put(Const(ConstTag.P1, (s, t)))
            for r in small:
                put(Const(ConstTag.S, (r, s, t)))
                put(Const(ConstTag.B, (r, s, t)))
                put(Const(ConstTag.Q, (r, s, t)))
    put(Const(ConstTag.R, (GROUND,)))
    put(Const(ConstTag.R, (Arrow(GROUND, GROUND),)))

    built: list[Term] = []
    for _ in range(rounds):
        candidates = [
            ty for ty in pools if isinstance(ty, Arrow) and ty.domain in pools
        ]
        fn_type = rng.choice(candidates)
        fn = rng.choice(pools[fn_type])
        arg = rng.choice(pools[fn_type.domain])
        term = App(fn, arg)
        built.append(term)
        if term_size(term) <= _POOL_SIZE_CAP:
            put(term)
    return built


def closed_terms(count: int, seed: int = 0) -> list[Term]:
    """At least `count` distinct closed well-typed applied terms."""
    rng = random.Random(seed)
    seen: set[Term] = set()
    out: list[Term] = []
    while len(out) < count:
        for term in term_pool(rng, count):
            if term not in seen:
                seen.add(term)
                out.append(term)
    return out[:count]


def beta_triples(
    count: int, seed: int = 0
) -> list[tuple[Var, Term, Term]]:
    """Distinct (variable, body, argument) triples for the rewrite law.

    The body may mention the variable (and other free variables); the
    argument is a closed term of the variable's type.
    """
    rng = random.Random(seed)
    over = (Var("x", GROUND), Var("f", Arrow(GROUND, GROUND)))
    bodies = term_pool(rng, 3 * count, variables=over)
    closed: dict[FiniteType, list[Term]] = {
        GROUND: [numeral(n) for n in range(3)],
        Arrow(GROUND, GROUND): [Const(ConstTag.SUCC)],
    }
    for term in term_pool(rng, count):
        ty = type_of(term)
        if ty in closed and term_size(term) <= _POOL_SIZE_CAP:
            closed[ty].append(term)
    seen: set[tuple[Var, Term, Term]] = set()
    out: list[tuple[Var, Term, Term]] = []
    attempts = 0
    while len(out) < count and attempts < 50 * count:
        attempts += 1
        var = over[rng.randrange(len(over))]
        body = rng.choice(bodies)
        arg = rng.choice(closed[var.type])
        triple = (var, body, arg)
        if triple not in seen:
            seen.add(triple)
            out.append(triple)
    return out


def random_proofs(
    count: int, seed: int = 0
) -> list[tuple[Proof, tuple[Formula, ...], Formula]]:
    """Hypothetical proofs: (proof, hypotheses, expected conclusion).

    Each proof starts from one to three assumed formulas and applies a
    few forward construction moves: conjunction introduction, left
    disjunction introduction, weakening, generalization over a fresh
    variable, and a standalone A -> A.
    """
    rng = random.Random(seed)
    ground_vars = (Var("x", GROUND), Var("y", GROUND), Var("z", GROUND))
    atom_terms = tuple(ground_vars) + tuple(numeral(n) for n in range(3)) + (
        App(Const(ConstTag.SUCC), ground_vars[0]),
    )

    def rand_formula(depth: int) -> Formula:
        if depth > 0:
            pick = rng.randrange(4)
            if pick == 0:
                return And(rand_formula(depth - 1), rand_formula(depth - 1))
            if pick == 1:
                return Or(rand_formula(depth - 1), rand_formula(depth - 1))
            if pick == 2:
                return Imp(rand_formula(depth - 1), rand_formula(depth - 1))
        return Eq0(rng.choice(atom_terms), rng.choice(atom_terms))

    out: list[tuple[Proof, tuple[Formula, ...], Formula]] = []
    for _ in range(count):
        hyps = tuple(rand_formula(rng.randrange(3)) for _ in range(rng.randrange(1, 4)))
        have: list[Pf] = [hyp(j, h) for j, h in enumerate(hyps)]
        fresh_count = 0
        for _ in range(rng.randrange(2, 8)):
            pick = rng.choice(have)
            move = rng.randrange(5)
            if move == 0:
                other = rng.choice(have)
                new = mp(
                    mp(axiom("and-i", pick.concl, other.concl), pick), other
                )
            elif move == 1:
                new = mp(axiom("or-il", pick.concl, rand_formula(1)), pick)
            elif move == 2:
                new = mp(axiom("imp-k", pick.concl, rand_formula(1)), pick)
            elif move == 3:
                fresh_count += 1
                new = gen(Var(f"g{fresh_count}", GROUND), pick)
            else:
                new = imp_refl(rand_formula(1))
            have.append(new)
        root = have[-1]
        out.append((root.proof, hyps, root.concl))
    return out
