"""Finite types, typed combinatory terms, and their concrete syntax.

The object language has a single ground type of naturals plus arrow and
product types.  Terms are binder-free: variables, typed constant
instances, and left-associated application.  The constants are the
combinators k, s, b, q, pairing p with projections p0/p1, zero,
successor, and the primitive recursor rec; each carries explicit type
parameters in the AST.

Concrete grammar (ASCII, whitespace-insensitive, '#' comments):

    type ::= "0" | "(" type ">" type ")" | "(" type "*" type ")"
    term ::= ident | const "{" type ("," type)* "}" | term term
    const ::= "k" | "s" | "b" | "q" | "p" | "p0" | "p1"
            | "zero" | "succ" | "rec"

Application associates left and parentheses group.  Brace parameters
may be omitted when they are forced by the context; the parser resolves
them by unification and the AST always stores them fully explicit.
Term files declare free variables with leading "name : type" lines.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Mapping

# ---------------------------------------------------------------- types


class FiniteType:
    """Base class of the type tree."""

    def __repr__(self) -> str:
        return str(self)


@dataclass(frozen=True, repr=False)
class Ground(FiniteType):
    def __str__(self) -> str:
        return "0"


@dataclass(frozen=True, repr=False)
class Arrow(FiniteType):
    domain: FiniteType
    codomain: FiniteType

    def __str__(self) -> str:
        return f"({self.domain}>{self.codomain})"


@dataclass(frozen=True, repr=False)
class Product(FiniteType):
    left: FiniteType
    right: FiniteType

    def __str__(self) -> str:
        return f"({self.left}*{self.right})"


GROUND = Ground()


def arrow(*types: FiniteType) -> FiniteType:
    """Right-fold types into a curried arrow: arrow(a, b, c) = (a>(b>c))."""
    if not types:
        raise ValueError("arrow() needs at least one type")
    result = types[-1]
    for ty in reversed(types[:-1]):
        result = Arrow(ty, result)
    return result


def is_higher(ty: FiniteType) -> bool:
    """Every type other than the ground type counts as higher."""
    return not isinstance(ty, Ground)


# ------------------------------------------------------------- constants


class ConstTag(Enum):
    K = "k"
    S = "s"
    B = "b"
    Q = "q"
    P = "p"
    P0 = "p0"
    P1 = "p1"
    ZERO = "zero"
    SUCC = "succ"
    R = "rec"


PARAM_ARITY: dict[ConstTag, int] = {
    ConstTag.K: 2,
    ConstTag.S: 3,
    ConstTag.B: 3,
    ConstTag.Q: 3,
    ConstTag.P: 2,
    ConstTag.P0: 2,
    ConstTag.P1: 2,
    ConstTag.ZERO: 0,
    ConstTag.SUCC: 0,
    ConstTag.R: 1,
}

_SURFACE_TO_TAG = {tag.value: tag for tag in ConstTag}

# Names that user files may not declare or bind: the constant surface
# names plus the keywords of the formula grammar.
RESERVED_NAMES = frozenset(_SURFACE_TO_TAG) | {"all", "ex", "bot"}


# ----------------------------------------------------------------- terms


class Term:
    """Base class of the term tree."""

    def __repr__(self) -> str:
        return print_term(self)


@dataclass(frozen=True, repr=False)
class Var(Term):
    name: str
    type: FiniteType


@dataclass(frozen=True, repr=False)
class Const(Term):
    tag: ConstTag
    params: tuple[FiniteType, ...] = ()


@dataclass(frozen=True, repr=False)
class App(Term):
    fun: Term
    arg: Term


def app(fun: Term, *args: Term) -> Term:
    """Left-fold application: app(f, x, y) = App(App(f, x), y)."""
    for a in args:
        fun = App(fun, a)
    return fun


def spine(t: Term) -> tuple[Term, list[Term]]:
    """Split t into its head and the list of applied arguments."""
    args: list[Term] = []
    while isinstance(t, App):
        args.append(t.arg)
        t = t.fun
    args.reverse()
    return t, args


def term_vars(t: Term) -> frozenset[Var]:
    """All variables of a term; with no binders these are all free."""
    match t:
        case Var():
            return frozenset((t,))
        case App(fun, arg):
            return term_vars(fun) | term_vars(arg)
        case _:
            return frozenset()


def occurring_vars(*terms: Term) -> tuple[Var, ...]:
    """Variables in first-occurrence order across terms, left to right."""
    seen: dict[Var, None] = {}

    def walk(t: Term) -> None:
        match t:
            case Var():
                seen.setdefault(t)
            case App(fun, arg):
                walk(fun)
                walk(arg)

    for t in terms:
        walk(t)
    return tuple(seen)


def term_size(t: Term) -> int:
    match t:
        case App(fun, arg):
            return 1 + term_size(fun) + term_size(arg)
        case _:
            return 1


def numeral(n: int) -> Term:
    """The closed term succ^n zero."""
    if n < 0:
        raise ValueError("numerals are non-negative")
    t: Term = Const(ConstTag.ZERO)
    for _ in range(n):
        t = App(Const(ConstTag.SUCC), t)
    return t


def fresh_name(base: str, used: set[str] | frozenset[str]) -> str:
    """Deterministic fresh identifier: base, base1, base2, ..."""
    if base not in used:
        return base
    i = 1
    while f"{base}{i}" in used:
        i += 1
    return f"{base}{i}"


# ---------------------------------------------------------------- errors


class TypingError(Exception):
    """Raised when a term fails to type.

    kind is one of "arity", "domain-mismatch", "non-arrow",
    "unknown-identifier", "unresolved".  path locates the offending
    subterm as a sequence of "fun"/"arg" steps from the root.
    """

    def __init__(
        self,
        kind: str,
        message: str,
        path: tuple[str, ...] = (),
        expected: FiniteType | None = None,
        actual: FiniteType | None = None,
    ):
        super().__init__(message)
        self.kind = kind
        self.message = message
        self.path = path
        self.expected = expected
        self.actual = actual

    def __str__(self) -> str:
        where = "/".join(self.path) if self.path else "root"
        extra = ""
        if self.expected is not None and self.actual is not None:
            extra = f" (expected {self.expected}, got {self.actual})"
        return f"{self.kind} at {where}: {self.message}{extra}"


class ParseError(Exception):
    def __init__(self, message: str, line: int = 0, col: int = 0):
        super().__init__(message)
        self.message = message
        self.line = line
        self.col = col

    def __str__(self) -> str:
        if self.line or self.col:
            return f"{self.line}:{self.col}: {self.message}"
        return self.message


# ------------------------------------------------------------ signatures


def constant_signature(tag: ConstTag, params: tuple[FiniteType, ...]) -> FiniteType:
    """Type of a constant instance; raises TypingError on wrong arity."""
    if len(params) != PARAM_ARITY[tag]:
        raise TypingError(
            "arity",
            f"{tag.value} takes {PARAM_ARITY[tag]} type parameters, got {len(params)}",
        )
    match tag:
        case ConstTag.K:
            sigma, tau = params
            return arrow(sigma, tau, sigma)
        case ConstTag.S:
            rho, sigma, tau = params
            return Arrow(arrow(rho, sigma, tau), Arrow(Arrow(rho, sigma), Arrow(rho, tau)))
        case ConstTag.B:
            rho, sigma, tau = params
            return Arrow(Arrow(sigma, tau), Arrow(Arrow(rho, sigma), Arrow(rho, tau)))
        case ConstTag.Q:
            rho, sigma, tau = params
            return Arrow(Arrow(sigma, tau), Arrow(rho, Arrow(Arrow(rho, sigma), tau)))
        case ConstTag.P:
            rho, sigma = params
            return arrow(rho, sigma, Product(rho, sigma))
        case ConstTag.P0:
            rho, sigma = params
            return Arrow(Product(rho, sigma), rho)
        case ConstTag.P1:
            rho, sigma = params
            return Arrow(Product(rho, sigma), sigma)
        case ConstTag.ZERO:
            return GROUND
        case ConstTag.SUCC:
            return Arrow(GROUND, GROUND)
        case ConstTag.R:
            (sigma,) = params
            return Arrow(sigma, Arrow(arrow(GROUND, sigma, sigma), Arrow(GROUND, sigma)))
    raise AssertionError(tag)


def type_of(t: Term, path: tuple[str, ...] = ()) -> FiniteType:
    """Type of a term, total by structural recursion."""
    match t:
        case Var(_, ty):
            return ty
        case Const(tag, params):
            return constant_signature(tag, params)
        case App(fun, arg):
            tf = type_of(fun, path + ("fun",))
            ta = type_of(arg, path + ("arg",))
            if not isinstance(tf, Arrow):
                raise TypingError(
                    "non-arrow",
                    "application head is not of arrow type",
                    path,
                    actual=tf,
                )
            if tf.domain != ta:
                raise TypingError(
                    "domain-mismatch",
                    "argument type does not match the head's domain",
                    path,
                    expected=tf.domain,
                    actual=ta,
                )
            return tf.codomain
    raise AssertionError(t)


# --------------------------------------------------------------- printing


def print_type(ty: FiniteType) -> str:
    return str(ty)


def print_term(t: Term) -> str:
    """Render with minimal parentheses; parse_term inverts this exactly."""
    match t:
        case Var(name, _):
            return name
        case Const(tag, params):
            if not params:
                return tag.value
            inner = ",".join(str(p) for p in params)
            return f"{tag.value}{{{inner}}}"
        case App(fun, arg):
            left = print_term(fun)
            right = print_term(arg)
            if isinstance(arg, App):
                right = f"({right})"
            return f"{left} {right}"
    raise AssertionError(t)


# -------------------------------------------------------------- tokenizer

_PUNCT2 = ("==", "->")
_PUNCT1 = "(){},:>*.&|;"


@dataclass(frozen=True)
class Token:
    kind: str  # "ident" | "num" | "punct" | "eof"
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if c in " \t\r":
            i += 1
            col += 1
            continue
        if c == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        two = text[i : i + 2]
        if two in _PUNCT2:
            tokens.append(Token("punct", two, line, col))
            i += 2
            col += 2
            continue
        if c in _PUNCT1:
            tokens.append(Token("punct", c, line, col))
            i += 1
            col += 1
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("num", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("ident", text[i:j], line, col))
            col += j - i
            i = j
            continue
        raise ParseError(f"unexpected character {c!r}", line, col)
    tokens.append(Token("eof", "", line, col))
    return tokens


class TokenStream:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self, ahead: int = 0) -> Token:
        return self.tokens[min(self.pos + ahead, len(self.tokens) - 1)]

    def next(self) -> Token:
        tok = self.peek()
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def expect(self, text: str) -> Token:
        tok = self.peek()
        if tok.text != text or tok.kind == "eof":
            raise ParseError(f"expected {text!r}, found {tok.text or 'end of input'!r}", tok.line, tok.col)
        return self.next()

    def at(self, text: str) -> bool:
        return self.peek().text == text and self.peek().kind != "eof"

    def done(self) -> bool:
        return self.peek().kind == "eof"


# ------------------------------------------------------------ type parser


def parse_type_tokens(ts: TokenStream) -> FiniteType:
    tok = ts.peek()
    if tok.kind == "num" and tok.text == "0":
        ts.next()
        return GROUND
    if tok.text == "(":
        ts.next()
        left = parse_type_tokens(ts)
        op = ts.next()
        if op.text == ">":
            right = parse_type_tokens(ts)
            ts.expect(")")
            return Arrow(left, right)
        if op.text == "*":
            right = parse_type_tokens(ts)
            ts.expect(")")
            return Product(left, right)
        raise ParseError(f"expected '>' or '*', found {op.text!r}", op.line, op.col)
    raise ParseError(f"expected a type, found {tok.text or 'end of input'!r}", tok.line, tok.col)


def parse_type(text: str) -> FiniteType:
    ts = TokenStream(tokenize(text))
    ty = parse_type_tokens(ts)
    if not ts.done():
        tok = ts.peek()
        raise ParseError(f"trailing input after type: {tok.text!r}", tok.line, tok.col)
    return ty


# ----------------------------------------------- pre-terms and elaboration

# The parser first builds pre-terms in which constant parameters may be
# missing, then resolves them against the usage context by first-order
# unification.  Metavariables never escape: elaboration fails loudly if
# any parameter stays undetermined.


@dataclass(frozen=True)
class _PVar:
    name: str
    line: int
    col: int


@dataclass(frozen=True)
class _PConst:
    tag: ConstTag
    params: tuple[FiniteType, ...] | None
    line: int
    col: int


@dataclass(frozen=True)
class _PApp:
    fun: "_PVar | _PConst | _PApp"
    arg: "_PVar | _PConst | _PApp"
    line: int
    col: int


@dataclass(frozen=True, repr=False)
class _Meta(FiniteType):
    index: int

    def __str__(self) -> str:
        return f"?{self.index}"


def _resolve(ty: FiniteType, sub: dict[int, FiniteType]) -> FiniteType:
    while isinstance(ty, _Meta) and ty.index in sub:
        ty = sub[ty.index]
    return ty


def _occurs(index: int, ty: FiniteType, sub: dict[int, FiniteType]) -> bool:
    ty = _resolve(ty, sub)
    match ty:
        case _Meta(i):
            return i == index
        case Arrow(a, b) | Product(a, b):
            return _occurs(index, a, sub) or _occurs(index, b, sub)
        case _:
            return False


def _unify(a: FiniteType, b: FiniteType, sub: dict[int, FiniteType]) -> bool:
    a = _resolve(a, sub)
    b = _resolve(b, sub)
    if a == b:
        return True
    if isinstance(a, _Meta):
        if _occurs(a.index, b, sub):
            return False
        sub[a.index] = b
        return True
    if isinstance(b, _Meta):
        return _unify(b, a, sub)
    match a, b:
        case (Arrow(d1, c1), Arrow(d2, c2)) | (Product(d1, c1), Product(d2, c2)):
            return _unify(d1, d2, sub) and _unify(c1, c2, sub)
        case _:
            return False


def _zonk(ty: FiniteType, sub: dict[int, FiniteType]) -> FiniteType:
    ty = _resolve(ty, sub)
    match ty:
        case Arrow(a, b):
            return Arrow(_zonk(a, sub), _zonk(b, sub))
        case Product(a, b):
            return Product(_zonk(a, sub), _zonk(b, sub))
        case _:
            return ty


def _has_meta(ty: FiniteType) -> bool:
    match ty:
        case _Meta():
            return True
        case Arrow(a, b) | Product(a, b):
            return _has_meta(a) or _has_meta(b)
        case _:
            return False


def _elaborate(
    pre: _PVar | _PConst | _PApp,
    env: Mapping[str, FiniteType],
    expected: FiniteType | None,
) -> Term:
    sub: dict[int, FiniteType] = {}
    counter = iter(range(1_000_000_000))

    def fresh() -> _Meta:
        return _Meta(next(counter))

    def walk(p: _PVar | _PConst | _PApp) -> tuple[Term, FiniteType]:
        match p:
            case _PVar(name, line, col):
                if name not in env:
                    raise TypingError(
                        "unknown-identifier", f"undeclared variable {name!r} at {line}:{col}"
                    )
                return Var(name, env[name]), env[name]
            case _PConst(tag, params, line, col):
                if params is None:
                    params = tuple(fresh() for _ in range(PARAM_ARITY[tag]))
                elif len(params) != PARAM_ARITY[tag]:
                    raise TypingError(
                        "arity",
                        f"{tag.value} takes {PARAM_ARITY[tag]} type parameters, "
                        f"got {len(params)} at {line}:{col}",
                    )
                return Const(tag, params), constant_signature(tag, params)
            case _PApp(fun, arg, line, col):
                tf_term, tf = walk(fun)
                ta_term, ta = walk(arg)
                result = fresh()
                if not _unify(tf, Arrow(ta, result), sub):
                    tfz = _zonk(tf, sub)
                    if isinstance(tfz, Arrow):
                        raise TypingError(
                            "domain-mismatch",
                            f"argument does not fit the function domain at {line}:{col}",
                            expected=tfz.domain,
                            actual=_zonk(ta, sub),
                        )
                    raise TypingError(
                        "not-a-function",
                        f"cannot apply a term of type {tfz} at {line}:{col}",
                    )
                return App(tf_term, ta_term), result
        raise AssertionError(p)

    term, ty = walk(pre)
    if expected is not None and not _unify(ty, expected, sub):
        raise TypingError(
            "domain-mismatch",
            "term does not have the expected type",
            expected=expected,
            actual=_zonk(ty, sub),
        )

    def rebuild(t: Term) -> Term:
        match t:
            case Const(tag, params):
                zonked = tuple(_zonk(p, sub) for p in params)
                for z in zonked:
                    if _has_meta(z):
                        raise ParseError(
                            f"cannot infer the type parameters of {tag.value}; "
                            "write them explicitly in braces"
                        )
                return Const(tag, zonked)
            case App(fun, arg):
                return App(rebuild(fun), rebuild(arg))
            case _:
                return t

    return rebuild(term)


# ------------------------------------------------------------ term parser


def _parse_atom(ts: TokenStream) -> _PVar | _PConst | _PApp:
    tok = ts.peek()
    if tok.text == "(":
        ts.next()
        inner = _parse_preterm(ts)
        ts.expect(")")
        return inner
    if tok.kind == "ident":
        ts.next()
        tag = _SURFACE_TO_TAG.get(tok.text)
        if tag is None:
            return _PVar(tok.text, tok.line, tok.col)
        params: tuple[FiniteType, ...] | None = None
        if ts.at("{"):
            ts.next()
            tys = [parse_type_tokens(ts)]
            while ts.at(","):
                ts.next()
                tys.append(parse_type_tokens(ts))
            ts.expect("}")
            params = tuple(tys)
        return _PConst(tag, params, tok.line, tok.col)
    raise ParseError(f"expected a term, found {tok.text or 'end of input'!r}", tok.line, tok.col)


_ATOM_START = {"("}


def _at_atom(ts: TokenStream) -> bool:
    tok = ts.peek()
    return tok.kind == "ident" or tok.text == "("


def _parse_preterm(ts: TokenStream) -> _PVar | _PConst | _PApp:
    t = _parse_atom(ts)
    while _at_atom(ts):
        a = _parse_atom(ts)
        t = _PApp(t, a, a.line, a.col)
    return t


def parse_term_tokens(
    ts: TokenStream,
    env: Mapping[str, FiniteType],
    expected: FiniteType | None = None,
) -> Term:
    return _elaborate(_parse_preterm(ts), env, expected)


def parse_term(
    text: str,
    env: Mapping[str, FiniteType] | None = None,
    expected: FiniteType | None = None,
) -> Term:
    """Parse a term; free variables must be provided in env."""
    ts = TokenStream(tokenize(text))
    term = parse_term_tokens(ts, env or {}, expected)
    if not ts.done():
        tok = ts.peek()
        raise ParseError(f"trailing input after term: {tok.text!r}", tok.line, tok.col)
    return term


# ------------------------------------------------------------ file format


def split_declarations(text: str) -> tuple[dict[str, FiniteType], str]:
    """Split leading "name : type" lines from the body of a source file."""
    env: dict[str, FiniteType] = {}
    lines = text.splitlines()
    body_from = len(lines)
    for idx, raw in enumerate(lines):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        try:
            toks = tokenize(stripped)
        except ParseError:
            body_from = idx
            break
        if len(toks) >= 2 and toks[0].kind == "ident" and toks[1].text == ":":
            name = toks[0].text
            if name in RESERVED_NAMES:
                raise ParseError(f"{name!r} is a reserved name", idx + 1, 1)
            ts = TokenStream(toks)
            ts.next()
            ts.next()
            ty = parse_type_tokens(ts)
            if not ts.done():
                tok = ts.peek()
                raise ParseError(f"trailing input after declaration: {tok.text!r}", idx + 1, tok.col)
            if name in env:
                raise ParseError(f"variable {name!r} declared twice", idx + 1, 1)
            env[name] = ty
        else:
            body_from = idx
            break
    body = "\n".join(lines[body_from:])
    return env, body


def parse_term_file(text: str) -> tuple[Term, dict[str, FiniteType]]:
    """Parse a term file: declaration header lines, then one term."""
    env, body = split_declarations(text)
    if not body.strip():
        raise ParseError("no term found after declarations")
    return parse_term(body, env), env
