"""Proof objects and the checker that validates them.

A proof is a tree with four node kinds: an axiom-schema instance, a
reference to a hypothesis, modus ponens, and generalization.  `check`
recomputes the conclusion of every node bottom-up, so nothing outside
this module needs to be trusted.  Formulas are identified up to
renaming of bound variables.

Axiom schemas come in two groups.  The propositional and quantifier
schemas are open: their instances may contain free variables, and they
are parameterized by whole formulas (plus a witness term for the two
instantiation schemas).  The arithmetic schemas, covering equality,
the successor, induction, and the defining equations of the constants,
are closed: the registry takes the universal closure over the free
variables of the parameters in order of first occurrence, followed by
the schema's own canonical variables.  Defining equations at higher
type are spelled out through the one-level unfolding of observational
equality.

Generalization checks the eigenvariable condition only against the
hypotheses its subproof actually uses, which the checker tracks per
node.  That bookkeeping is what makes `deduction` work: it rewrites a
proof from hypotheses H, A of C into a proof from H of A -> C, leaving
subtrees that never touch A untouched apart from one weakening step.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .logic import (
    And,
    Bottom,
    Eq0,
    Exists,
    Forall,
    Formula,
    Imp,
    Or,
    alpha_eq,
    eq,
    forall_many,
    formula_vars,
    occurring_formula_vars,
    subst_formula,
)
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
    app,
    arrow,
    fresh_name,
    occurring_vars,
    print_term,
    type_of,
)

# -------------------------------------------------------------- proof tree


class Proof:
    """Base class of proof nodes."""


@dataclass(frozen=True)
class Axiom(Proof):
    schema_id: str
    params: tuple = ()


@dataclass(frozen=True)
class Hyp(Proof):
    index: int


@dataclass(frozen=True)
class ModusPonens(Proof):
    implication: Proof
    argument: Proof


@dataclass(frozen=True)
class Gen(Proof):
    var: Var
    body: Proof


@dataclass(frozen=True)
class Judgment:
    hypotheses: tuple[Formula, ...]
    conclusion: Formula

    def __str__(self) -> str:
        left = ", ".join(str(h) for h in self.hypotheses)
        return f"{left} |- {self.conclusion}" if left else f"|- {self.conclusion}"


class CheckError(Exception):
    """A proof failed to check; path locates the offending node."""

    def __init__(self, message: str, path: tuple[str, ...] = ()):
        self.message = message
        self.path = path
        super().__init__(f"{'/'.join(path) or 'root'}: {message}")


class SchemaError(ValueError):
    """An axiom schema was given unusable parameters."""

    def __init__(self, schema_id: str, message: str):
        self.schema_id = schema_id
        super().__init__(f"axiom {schema_id}: {message}")


# --------------------------------------------------------- axiom schemas


@dataclass(frozen=True)
class AxiomSchema:
    schema_id: str
    param_kinds: tuple[str, ...]
    shape: str
    parts: Callable[[tuple], tuple[tuple[Var, ...], Formula]]


def _ground_term(schema_id: str, t: Term, what: str) -> None:
    ty = type_of(t)
    if ty != GROUND:
        raise SchemaError(schema_id, f"{what} must have ground type, got {ty}")


def _typed_term(schema_id: str, t: Term, expected: FiniteType, what: str) -> None:
    ty = type_of(t)
    if ty != expected:
        raise SchemaError(
            schema_id, f"{what} {print_term(t)} has type {ty}, expected {expected}"
        )


def _s_imp_k(ps):
    a, b = ps
    return (), Imp(a, Imp(b, a))


def _s_imp_s(ps):
    a, b, c = ps
    return (), Imp(Imp(a, Imp(b, c)), Imp(Imp(a, b), Imp(a, c)))


def _s_and_el(ps):
    a, b = ps
    return (), Imp(And(a, b), a)


def _s_and_er(ps):
    a, b = ps
    return (), Imp(And(a, b), b)


def _s_and_i(ps):
    a, b = ps
    return (), Imp(a, Imp(b, And(a, b)))


def _s_or_il(ps):
    a, b = ps
    return (), Imp(a, Or(a, b))


def _s_or_ir(ps):
    a, b = ps
    return (), Imp(b, Or(a, b))


def _s_or_e(ps):
    a, b, c = ps
    return (), Imp(Imp(a, c), Imp(Imp(b, c), Imp(Or(a, b), c)))


def _s_efq(ps):
    (a,) = ps
    return (), Imp(Bottom(), a)


def _s_forall_e(ps):
    univ, t = ps
    if not isinstance(univ, Forall):
        raise SchemaError("forall-e", "first parameter must be a universal formula")
    _typed_term("forall-e", t, univ.var.type, "witness")
    return (), Imp(univ, subst_formula(univ.body, univ.var, t))


def _s_exists_i(ps):
    ex, t = ps
    if not isinstance(ex, Exists):
        raise SchemaError("exists-i", "first parameter must be an existential formula")
    _typed_term("exists-i", t, ex.var.type, "witness")
    return (), Imp(subst_formula(ex.body, ex.var, t), ex)


def _s_forall_imp(ps):
    (f,) = ps
    match f:
        case Forall(x, Imp(b, a)):
            if x in formula_vars(b):
                raise SchemaError(
                    "forall-imp", f"{x.name} occurs free in the antecedent"
                )
            return (), Imp(f, Imp(b, Forall(x, a)))
    raise SchemaError("forall-imp", "parameter must have the shape all x:t. B -> A")


def _s_exists_imp(ps):
    (f,) = ps
    match f:
        case Forall(x, Imp(a, b)):
            if x in formula_vars(b):
                raise SchemaError(
                    "exists-imp", f"{x.name} occurs free in the consequent"
                )
            return (), Imp(f, Imp(Exists(x, a), b))
    raise SchemaError("exists-imp", "parameter must have the shape all x:t. A -> B")


def _s_eq_refl(ps):
    (t,) = ps
    _ground_term("eq-refl", t, "parameter")
    return occurring_vars(t), Eq0(t, t)


def _s_eq_sym(ps):
    s, t = ps
    _ground_term("eq-sym", s, "first parameter")
    _ground_term("eq-sym", t, "second parameter")
    return occurring_vars(s, t), Imp(Eq0(s, t), Eq0(t, s))


def _s_eq_trans(ps):
    r, s, t = ps
    for i, u in enumerate(ps):
        _ground_term("eq-trans", u, f"parameter {i + 1}")
    return occurring_vars(r, s, t), Imp(Eq0(r, s), Imp(Eq0(s, t), Eq0(r, t)))


def _s_cong0(ps):
    (f,) = ps
    _typed_term("cong0", f, Arrow(GROUND, GROUND), "parameter")
    fvs = occurring_vars(f)
    used = {v.name for v in fvs}
    x = Var(fresh_name("x", used), GROUND)
    y = Var(fresh_name("y", used | {x.name}), GROUND)
    core = Imp(Eq0(x, y), Eq0(App(f, x), App(f, y)))
    return fvs + (x, y), core


def _s_succ_nonzero(ps):
    x = Var("x", GROUND)
    succ_x = App(Const(ConstTag.SUCC), x)
    return (x,), Imp(Eq0(succ_x, Const(ConstTag.ZERO)), Bottom())


def _s_succ_inj(ps):
    x = Var("x", GROUND)
    y = Var("y", GROUND)
    sx = App(Const(ConstTag.SUCC), x)
    sy = App(Const(ConstTag.SUCC), y)
    return (x, y), Imp(Eq0(sx, sy), Eq0(x, y))


def _s_induction(ps):
    (f,) = ps
    if not isinstance(f, Forall) or f.var.type != GROUND:
        raise SchemaError(
            "induction", "parameter must be a universal formula over a ground variable"
        )
    v, body = f.var, f.body
    base = subst_formula(body, v, Const(ConstTag.ZERO))
    bump = subst_formula(body, v, App(Const(ConstTag.SUCC), v))
    step = Forall(v, Imp(body, bump))
    return occurring_formula_vars(f), Imp(base, Imp(step, f))


def _s_comb_k(ps):
    sigma, tau = ps
    x = Var("x", sigma)
    y = Var("y", tau)
    return (x, y), eq(app(Const(ConstTag.K, (sigma, tau)), x, y), x)


def _s_comb_s(ps):
    rho, sigma, tau = ps
    x = Var("x", arrow(rho, sigma, tau))
    y = Var("y", arrow(rho, sigma))
    z = Var("z", rho)
    lhs = app(Const(ConstTag.S, (rho, sigma, tau)), x, y, z)
    return (x, y, z), eq(lhs, app(x, z, App(y, z)))


def _s_comb_b(ps):
    rho, sigma, tau = ps
    x = Var("x", arrow(sigma, tau))
    y = Var("y", arrow(rho, sigma))
    z = Var("z", rho)
    lhs = app(Const(ConstTag.B, (rho, sigma, tau)), x, y, z)
    return (x, y, z), eq(lhs, App(x, App(y, z)))


def _s_comb_q(ps):
    rho, sigma, tau = ps
    x = Var("x", arrow(sigma, tau))
    y = Var("y", rho)
    z = Var("z", arrow(rho, sigma))
    lhs = app(Const(ConstTag.Q, (rho, sigma, tau)), x, y, z)
    return (x, y, z), eq(lhs, App(x, App(z, y)))


def _s_comb_p0(ps):
    rho, sigma = ps
    x = Var("x", rho)
    y = Var("y", sigma)
    pair = app(Const(ConstTag.P, (rho, sigma)), x, y)
    return (x, y), eq(App(Const(ConstTag.P0, (rho, sigma)), pair), x)


def _s_comb_p1(ps):
    rho, sigma = ps
    x = Var("x", rho)
    y = Var("y", sigma)
    pair = app(Const(ConstTag.P, (rho, sigma)), x, y)
    return (x, y), eq(App(Const(ConstTag.P1, (rho, sigma)), pair), y)


def _s_comb_psurj(ps):
    rho, sigma = ps
    x = Var("x", Product(rho, sigma))
    left = App(Const(ConstTag.P0, (rho, sigma)), x)
    right = App(Const(ConstTag.P1, (rho, sigma)), x)
    return (x,), eq(app(Const(ConstTag.P, (rho, sigma)), left, right), x)


def _s_comb_r0(ps):
    (sigma,) = ps
    x = Var("x", sigma)
    y = Var("y", arrow(GROUND, sigma, sigma))
    lhs = app(Const(ConstTag.R, (sigma,)), x, y, Const(ConstTag.ZERO))
    return (x, y), eq(lhs, x)


def _s_comb_rs(ps):
    (sigma,) = ps
    x = Var("x", sigma)
    y = Var("y", arrow(GROUND, sigma, sigma))
    z = Var("z", GROUND)
    rec = Const(ConstTag.R, (sigma,))
    lhs = app(rec, x, y, App(Const(ConstTag.SUCC), z))
    rhs = app(y, z, app(rec, x, y, z))
    return (x, y, z), eq(lhs, rhs)


_CATALOG: tuple[tuple[str, tuple[str, ...], str, Callable], ...] = (
    ("imp-k", ("formula", "formula"), "A -> (B -> A)", _s_imp_k),
    (
        "imp-s",
        ("formula", "formula", "formula"),
        "(A -> (B -> C)) -> ((A -> B) -> (A -> C))",
        _s_imp_s,
    ),
    ("and-el", ("formula", "formula"), "A & B -> A", _s_and_el),
    ("and-er", ("formula", "formula"), "A & B -> B", _s_and_er),
    ("and-i", ("formula", "formula"), "A -> (B -> A & B)", _s_and_i),
    ("or-il", ("formula", "formula"), "A -> A | B", _s_or_il),
    ("or-ir", ("formula", "formula"), "B -> A | B", _s_or_ir),
    (
        "or-e",
        ("formula", "formula", "formula"),
        "(A -> C) -> ((B -> C) -> (A | B -> C))",
        _s_or_e,
    ),
    ("efq", ("formula",), "bot -> A", _s_efq),
    ("forall-e", ("formula", "term"), "(all x. A) -> A[x:=t]", _s_forall_e),
    ("exists-i", ("formula", "term"), "A[x:=t] -> ex x. A", _s_exists_i),
    (
        "forall-imp",
        ("formula",),
        "(all x. B -> A) -> (B -> all x. A), x not free in B",
        _s_forall_imp,
    ),
    (
        "exists-imp",
        ("formula",),
        "(all x. A -> B) -> ((ex x. A) -> B), x not free in B",
        _s_exists_imp,
    ),
    ("eq-refl", ("term",), "t == t", _s_eq_refl),
    ("eq-sym", ("term", "term"), "s == t -> t == s", _s_eq_sym),
    (
        "eq-trans",
        ("term", "term", "term"),
        "r == s -> (s == t -> r == t)",
        _s_eq_trans,
    ),
    ("cong0", ("term",), "x == y -> f x == f y, f of type (0>0)", _s_cong0),
    ("succ-nonzero", (), "succ x == zero -> bot", _s_succ_nonzero),
    ("succ-inj", (), "succ x == succ y -> x == y", _s_succ_inj),
    (
        "induction",
        ("formula",),
        "A[x:=zero] -> ((all x. A -> A[x:=succ x]) -> all x. A)",
        _s_induction,
    ),
    ("comb-k", ("type", "type"), "k x y = x", _s_comb_k),
    ("comb-s", ("type", "type", "type"), "s x y z = x z (y z)", _s_comb_s),
    ("comb-b", ("type", "type", "type"), "b x y z = x (y z)", _s_comb_b),
    ("comb-q", ("type", "type", "type"), "q x y z = x (z y)", _s_comb_q),
    ("comb-p0", ("type", "type"), "p0 (p x y) = x", _s_comb_p0),
    ("comb-p1", ("type", "type"), "p1 (p x y) = y", _s_comb_p1),
    ("comb-psurj", ("type", "type"), "p (p0 x) (p1 x) = x", _s_comb_psurj),
    ("comb-r0", ("type",), "rec x y zero = x", _s_comb_r0),
    ("comb-rs", ("type",), "rec x y (succ z) = y z (rec x y z)", _s_comb_rs),
)

SCHEMAS: Mapping[str, AxiomSchema] = {
    sid: AxiomSchema(sid, kinds, shape, fn) for sid, kinds, shape, fn in _CATALOG
}

_KIND_CLASSES = {"formula": Formula, "term": Term, "type": FiniteType}


def axiom_parts(schema_id: str, params: tuple = ()) -> tuple[tuple[Var, ...], Formula]:
    """Closure variables and core formula of an axiom instance."""
    schema = SCHEMAS.get(schema_id)
    if schema is None:
        raise SchemaError(schema_id, "unknown axiom schema")
    params = tuple(params)
    if len(params) != len(schema.param_kinds):
        wanted = ", ".join(schema.param_kinds) or "none"
        raise SchemaError(
            schema_id,
            f"takes {len(schema.param_kinds)} parameter(s) ({wanted}), got {len(params)}",
        )
    for i, (kind, p) in enumerate(zip(schema.param_kinds, params)):
        if not isinstance(p, _KIND_CLASSES[kind]):
            raise SchemaError(schema_id, f"parameter {i + 1} must be a {kind}")
    return schema.parts(params)


def axiom_instance(schema_id: str, params: tuple = ()) -> Formula:
    closure, core = axiom_parts(schema_id, params)
    return forall_many(closure, core)


# ---------------------------------------------------------------- checking

_NodeInfo = tuple[Formula, frozenset[int]]


def _analyze(
    node: Proof,
    hyps: tuple[Formula, ...],
    memo: dict[int, _NodeInfo],
    path: tuple[str, ...] = (),
) -> _NodeInfo:
    cached = memo.get(id(node))
    if cached is not None:
        return cached
    match node:
        case Axiom(schema_id, params):
            try:
                concl = axiom_instance(schema_id, params)
            except (SchemaError, TypingError) as err:
                raise CheckError(str(err), path) from None
            result = (concl, frozenset())
        case Hyp(index):
            if not 0 <= index < len(hyps):
                raise CheckError(
                    f"hypothesis index {index} out of range ({len(hyps)} available)",
                    path,
                )
            result = (hyps[index], frozenset((index,)))
        case ModusPonens(imp, arg):
            imp_f, imp_used = _analyze(imp, hyps, memo, path + ("imp",))
            arg_f, arg_used = _analyze(arg, hyps, memo, path + ("arg",))
            if not isinstance(imp_f, Imp):
                raise CheckError(f"modus ponens on a non-implication: {imp_f}", path)
            if not alpha_eq(imp_f.left, arg_f):
                raise CheckError(
                    f"modus ponens mismatch: needs {imp_f.left}, got {arg_f}", path
                )
            result = (imp_f.right, imp_used | arg_used)
        case Gen(var, body):
            body_f, body_used = _analyze(body, hyps, memo, path + ("body",))
            for i in sorted(body_used):
                if var in formula_vars(hyps[i]):
                    raise CheckError(
                        f"cannot generalize {var.name}: it is free in hypothesis {i}",
                        path,
                    )
            result = (Forall(var, body_f), body_used)
        case _:
            raise CheckError(f"not a proof node: {node!r}", path)
    memo[id(node)] = result
    return result


def check(proof: Proof, hypotheses: Sequence[Formula] = ()) -> Judgment:
    """Re-derive the conclusion of a proof, or raise CheckError."""
    hyps = tuple(hypotheses)
    concl, _ = _analyze(proof, hyps, {})
    return Judgment(hyps, concl)


def axiom_ids_used(proof: Proof) -> frozenset[str]:
    """The set of axiom schema ids occurring in a proof."""
    seen: set[int] = set()
    ids: set[str] = set()
    stack = [proof]
    while stack:
        node = stack.pop()
        if id(node) in seen:
            continue
        seen.add(id(node))
        match node:
            case Axiom(schema_id, _):
                ids.add(schema_id)
            case ModusPonens(imp, arg):
                stack.append(imp)
                stack.append(arg)
            case Gen(_, body):
                stack.append(body)
    return frozenset(ids)


# ------------------------------------------------------ deduction theorem


def deduction(proof: Proof, hypotheses: Sequence[Formula]) -> Proof:
    """Discharge the last hypothesis.

    Given a proof of C from hypotheses H, A, produce a proof of A -> C
    from H alone.  Subtrees that never use A are kept as they are and
    weakened in one step; the interesting cases thread A through modus
    ponens and generalization.
    """
    hyps = tuple(hypotheses)
    if not hyps:
        raise ValueError("deduction needs at least one hypothesis to discharge")
    m = len(hyps) - 1
    a = hyps[m]
    info: dict[int, _NodeInfo] = {}
    _analyze(proof, hyps, info)

    out: dict[int, Proof] = {}

    def go(node: Proof) -> Proof:
        done = out.get(id(node))
        if done is not None:
            return done
        concl, used = info[id(node)]
        if m not in used:
            new: Proof = ModusPonens(Axiom("imp-k", (concl, a)), node)
        else:
            match node:
                case Hyp(_):
                    a_a = Imp(a, a)
                    new = ModusPonens(
                        ModusPonens(
                            Axiom("imp-s", (a, a_a, a)), Axiom("imp-k", (a, a_a))
                        ),
                        Axiom("imp-k", (a, a)),
                    )
                case ModusPonens(imp, arg):
                    imp_f, _ = info[id(imp)]
                    assert isinstance(imp_f, Imp)
                    new = ModusPonens(
                        ModusPonens(
                            Axiom("imp-s", (a, imp_f.left, imp_f.right)), go(imp)
                        ),
                        go(arg),
                    )
                case Gen(var, body):
                    body_f, _ = info[id(body)]
                    bridged = Forall(var, Imp(a, body_f))
                    new = ModusPonens(
                        Axiom("forall-imp", (bridged,)), Gen(var, go(body))
                    )
                case _:
                    raise AssertionError(f"axiom marked as using a hypothesis: {node}")
        out[id(node)] = new
        return new

    return go(proof)


def discharge_all(proof: Proof, hypotheses: Sequence[Formula]) -> Proof:
    """Fold `deduction` over every hypothesis, last to first."""
    hyps = tuple(hypotheses)
    for k in range(len(hyps), 0, -1):
        proof = deduction(proof, hyps[:k])
    return proof
