"""Formulas over the term language, with equality primitive only at
ground type.

The only atomic predicates are falsum and s == t between terms of the
ground type.  Equality between terms of a higher type sigma is not a
formula former but a macro: eq(s, t) unfolds one level to

    all f : sigma>0 . f s == f t

with f deterministically fresh for the free variables of s and t.
Connectives are conjunction, disjunction, implication; quantifiers bind
typed variables; negation abbreviates A -> bot.

Concrete grammar (precedence loosest to tightest; '#' comments):

    formula ::= "all" ident ":" type "." formula
              | "ex"  ident ":" type "." formula
              | disj ("->" formula)?            right-associative
    disj    ::= conj ("|" conj)*                left-associative
    conj    ::= unit ("&" unit)*                left-associative
    unit    ::= "bot" | "(" formula ")"
              | term "==" term
              | term "==" "{" type "}" term     sugar via eq()

Quantifier bodies extend as far right as possible; a quantifier used as
an operand of & or | must be parenthesized.
"""
from __future__ import annotations

from dataclasses import dataclass

from .abstraction import subst
from .syntax import (
    GROUND,
    App,
    Arrow,
    FiniteType,
    ParseError,
    RESERVED_NAMES,
    Term,
    TokenStream,
    TypingError,
    Var,
    fresh_name,
    is_higher,
    occurring_vars,
    parse_term_tokens,
    parse_type_tokens,
    print_term,
    split_declarations,
    term_vars,
    tokenize,
    type_of,
)


class Formula:
    """Base class of the formula tree."""

    def __repr__(self) -> str:
        return format_formula(self)


@dataclass(frozen=True, repr=False)
class Bottom(Formula):
    pass


@dataclass(frozen=True, repr=False)
class Eq0(Formula):
    lhs: Term
    rhs: Term

    def __post_init__(self) -> None:
        for side in (self.lhs, self.rhs):
            ty = type_of(side)
            if ty != GROUND:
                raise TypingError(
                    "domain-mismatch",
                    "== is primitive only at the ground type",
                    expected=GROUND,
                    actual=ty,
                )


@dataclass(frozen=True, repr=False)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, repr=False)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, repr=False)
class Imp(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, repr=False)
class Forall(Formula):
    var: Var
    body: Formula


@dataclass(frozen=True, repr=False)
class Exists(Formula):
    var: Var
    body: Formula


def neg(a: Formula) -> Formula:
    return Imp(a, Bottom())


def forall_many(variables: tuple[Var, ...] | list[Var], body: Formula) -> Formula:
    for v in reversed(variables):
        body = Forall(v, body)
    return body


# ------------------------------------------------- observational equality


def eq(s: Term, t: Term) -> Formula:
    """Equality at any type: primitive at ground, one observation level
    above: all f : sigma>0 . f s == f t.  Unfolding is one level only;
    the inner equation is at ground type by construction."""
    ts = type_of(s)
    tt = type_of(t)
    if ts != tt:
        raise TypingError(
            "domain-mismatch", "cannot equate terms of different types", expected=ts, actual=tt
        )
    if not is_higher(ts):
        return Eq0(s, t)
    used = {v.name for v in term_vars(s) | term_vars(t)}
    f = Var(fresh_name("f", used), Arrow(ts, GROUND))
    return Forall(f, Eq0(App(f, s), App(f, t)))


# ----------------------------------------------------- structural queries


def formula_vars(phi: Formula) -> frozenset[Var]:
    """Free variables of a formula."""
    match phi:
        case Bottom():
            return frozenset()
        case Eq0(lhs, rhs):
            return term_vars(lhs) | term_vars(rhs)
        case And(a, b) | Or(a, b) | Imp(a, b):
            return formula_vars(a) | formula_vars(b)
        case Forall(v, body) | Exists(v, body):
            return formula_vars(body) - {v}
    raise AssertionError(phi)


def occurring_formula_vars(phi: Formula) -> tuple[Var, ...]:
    """Free variables in order of first occurrence, left to right."""
    seen: dict[Var, None] = {}

    def go(f: Formula, bound: frozenset[Var]) -> None:
        match f:
            case Bottom():
                pass
            case Eq0(lhs, rhs):
                for v in occurring_vars(lhs, rhs):
                    if v not in bound:
                        seen.setdefault(v)
            case And(a, b) | Or(a, b) | Imp(a, b):
                go(a, bound)
                go(b, bound)
            case Forall(v, body) | Exists(v, body):
                go(body, bound | {v})

    go(phi, frozenset())
    return tuple(seen)


def is_quantifier_free(phi: Formula) -> bool:
    match phi:
        case Bottom() | Eq0():
            return True
        case And(a, b) | Or(a, b) | Imp(a, b):
            return is_quantifier_free(a) and is_quantifier_free(b)
        case _:
            return False


def strip_foralls(phi: Formula) -> tuple[tuple[Var, ...], Formula]:
    prefix: list[Var] = []
    while isinstance(phi, Forall):
        prefix.append(phi.var)
        phi = phi.body
    return tuple(prefix), phi


def is_universal(phi: Formula) -> bool:
    """A block of universal quantifiers over a quantifier-free matrix."""
    _, matrix = strip_foralls(phi)
    return is_quantifier_free(matrix)


# ------------------------------------------------------------ substitution


def subst_formula(phi: Formula, x: Var, a: Term) -> Formula:
    """Capture-avoiding substitution; bound variables whose name would
    capture a free variable of a are renamed deterministically."""
    ta = type_of(a)
    if ta != x.type:
        raise TypingError(
            "domain-mismatch", f"cannot substitute for {x.name}", expected=x.type, actual=ta
        )
    a_names = {v.name for v in term_vars(a)}

    def go(f: Formula) -> Formula:
        match f:
            case Bottom():
                return f
            case Eq0(lhs, rhs):
                return Eq0(subst(lhs, x, a), subst(rhs, x, a))
            case And(l, r):
                return And(go(l), go(r))
            case Or(l, r):
                return Or(go(l), go(r))
            case Imp(l, r):
                return Imp(go(l), go(r))
            case Forall(v, body) | Exists(v, body):
                ctor = Forall if isinstance(f, Forall) else Exists
                if v == x:
                    return f
                if x not in formula_vars(body):
                    return f
                if v.name in a_names:
                    used = (
                        a_names
                        | {w.name for w in formula_vars(body)}
                        | {x.name, v.name}
                    )
                    v2 = Var(fresh_name(v.name, used), v.type)
                    body = go_rename(body, v, v2)
                    return ctor(v2, go(body))
                return ctor(v, go(body))
        raise AssertionError(f)

    def go_rename(f: Formula, old: Var, new: Var) -> Formula:
        return subst_formula(f, old, new)

    return go(phi)


# ------------------------------------------------------- alpha equivalence


def alpha_eq(a: Formula, b: Formula) -> bool:
    """Equality up to renaming of bound variables."""

    def terms(s: Term, t: Term, la: dict[Var, int], lb: dict[Var, int]) -> bool:
        match s, t:
            case (Var(), Var()):
                ia = la.get(s)
                ib = lb.get(t)
                if ia is not None or ib is not None:
                    return ia == ib and s.type == t.type
                return s == t
            case (App(f1, a1), App(f2, a2)):
                return terms(f1, f2, la, lb) and terms(a1, a2, la, lb)
            case _:
                return s == t

    def go(f: Formula, g: Formula, la: dict[Var, int], lb: dict[Var, int], depth: int) -> bool:
        match f, g:
            case (Bottom(), Bottom()):
                return True
            case (Eq0(l1, r1), Eq0(l2, r2)):
                return terms(l1, l2, la, lb) and terms(r1, r2, la, lb)
            case (And(l1, r1), And(l2, r2)) | (Or(l1, r1), Or(l2, r2)) | (
                Imp(l1, r1),
                Imp(l2, r2),
            ):
                return go(l1, l2, la, lb, depth) and go(r1, r2, la, lb, depth)
            case (Forall(v1, b1), Forall(v2, b2)) | (Exists(v1, b1), Exists(v2, b2)):
                if v1.type != v2.type:
                    return False
                la2 = dict(la)
                lb2 = dict(lb)
                la2[v1] = depth
                lb2[v2] = depth
                return go(b1, b2, la2, lb2, depth + 1)
            case _:
                return False

    return go(a, b, {}, {}, 0)


# --------------------------------------------------------------- printing

_PREC_QUANT = 0
_PREC_IMP = 1
_PREC_OR = 2
_PREC_AND = 3


def format_formula(phi: Formula) -> str:
    def go(f: Formula, prec: int) -> str:
        match f:
            case Bottom():
                return "bot"
            case Eq0(lhs, rhs):
                return f"{print_term(lhs)} == {print_term(rhs)}"
            case And(l, r):
                s = f"{go(l, _PREC_AND)} & {go(r, _PREC_AND + 1)}"
                return f"({s})" if prec > _PREC_AND else s
            case Or(l, r):
                s = f"{go(l, _PREC_OR)} | {go(r, _PREC_OR + 1)}"
                return f"({s})" if prec > _PREC_OR else s
            case Imp(l, r):
                s = f"{go(l, _PREC_IMP + 1)} -> {go(r, _PREC_IMP)}"
                return f"({s})" if prec > _PREC_IMP else s
            case Forall(v, body):
                s = f"all {v.name}:{v.type}. {go(body, _PREC_QUANT)}"
                return f"({s})" if prec > _PREC_QUANT else s
            case Exists(v, body):
                s = f"ex {v.name}:{v.type}. {go(body, _PREC_QUANT)}"
                return f"({s})" if prec > _PREC_QUANT else s
        raise AssertionError(f)

    return go(phi, 0)


# ---------------------------------------------------------------- parsing


def _parse_formula(ts: TokenStream, env: dict[str, FiniteType]) -> Formula:
    tok = ts.peek()
    if tok.kind == "ident" and tok.text in ("all", "ex"):
        ts.next()
        name_tok = ts.next()
        if name_tok.kind != "ident":
            raise ParseError("expected a variable name", name_tok.line, name_tok.col)
        if name_tok.text in RESERVED_NAMES:
            raise ParseError(
                f"{name_tok.text!r} is a reserved name and cannot be bound",
                name_tok.line,
                name_tok.col,
            )
        ts.expect(":")
        ty = parse_type_tokens(ts)
        ts.expect(".")
        v = Var(name_tok.text, ty)
        shadowed = env.get(name_tok.text)
        env[name_tok.text] = ty
        body = _parse_formula(ts, env)
        if shadowed is None:
            del env[name_tok.text]
        else:
            env[name_tok.text] = shadowed
        return (Forall if tok.text == "all" else Exists)(v, body)
    return _parse_imp(ts, env)


def _parse_imp(ts: TokenStream, env: dict[str, FiniteType]) -> Formula:
    left = _parse_or(ts, env)
    if ts.at("->"):
        ts.next()
        right = _parse_formula(ts, env)
        return Imp(left, right)
    return left


def _parse_or(ts: TokenStream, env: dict[str, FiniteType]) -> Formula:
    f = _parse_and(ts, env)
    while ts.at("|"):
        ts.next()
        f = Or(f, _parse_and(ts, env))
    return f


def _parse_and(ts: TokenStream, env: dict[str, FiniteType]) -> Formula:
    f = _parse_unit(ts, env)
    while ts.at("&"):
        ts.next()
        f = And(f, _parse_unit(ts, env))
    return f


def _paren_is_formula(ts: TokenStream) -> bool:
    """Decide whether '(' opens a grouped formula or a grouped term.

    Look past the matching ')': an equation or a further applied atom
    means the parenthesis belonged to a term.
    """
    depth = 0
    i = ts.pos
    while True:
        tok = ts.peek(i - ts.pos)
        if tok.kind == "eof":
            return True
        if tok.text == "(":
            depth += 1
        elif tok.text == ")":
            depth -= 1
            if depth == 0:
                after = ts.peek(i - ts.pos + 1)
                return not (after.text == "==" or after.kind == "ident" or after.text == "(")
        i += 1


def _parse_unit(ts: TokenStream, env: dict[str, FiniteType]) -> Formula:
    tok = ts.peek()
    if tok.kind == "ident" and tok.text == "bot":
        ts.next()
        return Bottom()
    if tok.text == "(" and _paren_is_formula(ts):
        ts.next()
        f = _parse_formula(ts, env)
        ts.expect(")")
        return f
    lhs = parse_term_tokens(ts, env)
    eq_tok = ts.expect("==")
    if ts.at("{"):
        ts.next()
        ty = parse_type_tokens(ts)
        ts.expect("}")
        rhs = parse_term_tokens(ts, env)
        for side, term in (("left", lhs), ("right", rhs)):
            actual = type_of(term)
            if actual != ty:
                raise TypingError(
                    "domain-mismatch",
                    f"{side} side of =={{{ty}}} has the wrong type",
                    expected=ty,
                    actual=actual,
                )
        return eq(lhs, rhs)
    rhs = parse_term_tokens(ts, env)
    try:
        return Eq0(lhs, rhs)
    except TypingError as err:
        raise TypingError(
            "domain-mismatch",
            f"== at {eq_tok.line}:{eq_tok.col} needs ground-type sides; "
            "use =={type} for higher types",
            expected=err.expected,
            actual=err.actual,
        ) from None


def parse_formula(text: str, env: dict[str, FiniteType] | None = None) -> Formula:
    ts = TokenStream(tokenize(text))
    f = _parse_formula(ts, dict(env or {}))
    if not ts.done():
        tok = ts.peek()
        raise ParseError(f"trailing input after formula: {tok.text!r}", tok.line, tok.col)
    return f


def parse_formula_file(text: str) -> tuple[Formula, dict[str, FiniteType]]:
    """Parse a formula file: declaration header lines, then one formula."""
    env, body = split_declarations(text)
    if not body.strip():
        raise ParseError("no formula found after declarations")
    return parse_formula(body, env), env
