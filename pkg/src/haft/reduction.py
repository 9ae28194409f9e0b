"""Rewriting for the combinator calculus.

The nine rules, oriented left to right:

    K      k x y        |> x
    S      s x y z      |> x z (y z)
    B      b x y z      |> x (y z)
    Q      q x y z      |> x (z y)
    P0P    p0 (p x y)   |> x
    P1P    p1 (p x y)   |> y
    PSurj  p (p0 x) (p1 x) |> x
    R0     rec x y zero     |> x
    RS     rec x y (succ n) |> y n (rec x y n)

The fixed strategy is leftmost-outermost: contract at the root when the
root matches a rule, otherwise descend into the function part before
the argument part.  The recursor fires only once the head of its
numeral argument is zero or succ, which under this strategy means that
argument gets reduced first.  A rightmost-innermost stepper is provided
for cross-checking normal forms; on well-typed terms both terminate and
agree.
"""
from __future__ import annotations

import sys
from dataclasses import dataclass

from .syntax import App, Const, ConstTag, Term

# Deep numerals in the arithmetic tests exceed the default interpreter
# recursion limit; terms are trees, so recursion depth tracks term depth.
sys.setrecursionlimit(max(sys.getrecursionlimit(), 100_000))

DEFAULT_FUEL = 1_000_000

RULE_IDS = ("K", "S", "B", "Q", "P0P", "P1P", "PSurj", "R0", "RS")


@dataclass(frozen=True)
class NormalizationReport:
    term: Term
    steps: int
    trace: tuple[str, ...] | None = None


class FuelExhausted(Exception):
    """Raised when normalization runs out of fuel; carries the partial term."""

    def __init__(self, partial: Term, steps: int):
        super().__init__(f"no normal form within {steps} steps")
        self.partial = partial
        self.steps = steps


def contract(t: Term) -> tuple[Term, str] | None:
    """Contract t at the root, or return None if the root is no redex."""
    match t:
        case App(App(Const(ConstTag.K), x), _):
            return x, "K"
        case App(App(App(Const(ConstTag.S), x), y), z):
            return App(App(x, z), App(y, z)), "S"
        case App(App(App(Const(ConstTag.B), x), y), z):
            return App(x, App(y, z)), "B"
        case App(App(App(Const(ConstTag.Q), x), y), z):
            return App(x, App(z, y)), "Q"
        case App(Const(ConstTag.P0), App(App(Const(ConstTag.P), x), _)):
            return x, "P0P"
        case App(Const(ConstTag.P1), App(App(Const(ConstTag.P), _), y)):
            return y, "P1P"
        case App(App(Const(ConstTag.P), App(Const(ConstTag.P0), x)), App(Const(ConstTag.P1), x2)) if x == x2:
            return x, "PSurj"
        case App(App(App(Const(ConstTag.R), x), _), Const(ConstTag.ZERO)):
            return x, "R0"
        case App(App(App(Const(ConstTag.R) as r, x), y), App(Const(ConstTag.SUCC), n)):
            rec = App(App(App(r, x), y), n)
            return App(App(y, n), rec), "RS"
    return None


def step(t: Term) -> tuple[Term, str] | None:
    """One leftmost-outermost step, or None when t is normal."""
    rooted = contract(t)
    if rooted is not None:
        return rooted
    if isinstance(t, App):
        inner = step(t.fun)
        if inner is not None:
            return App(inner[0], t.arg), inner[1]
        inner = step(t.arg)
        if inner is not None:
            return App(t.fun, inner[0]), inner[1]
    return None


def step_innermost(t: Term) -> tuple[Term, str] | None:
    """One rightmost-innermost step; used only to cross-check confluence."""
    if isinstance(t, App):
        inner = step_innermost(t.arg)
        if inner is not None:
            return App(t.fun, inner[0]), inner[1]
        inner = step_innermost(t.fun)
        if inner is not None:
            return App(inner[0], t.arg), inner[1]
    return contract(t)


def normalize(
    t: Term,
    fuel: int = DEFAULT_FUEL,
    trace: bool = False,
    strategy: str = "outermost",
) -> NormalizationReport:
    """Iterate the stepper to a normal form or raise FuelExhausted."""
    if strategy not in ("outermost", "innermost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    stepper = step if strategy == "outermost" else step_innermost
    rules: list[str] | None = [] if trace else None
    steps = 0
    while True:
        nxt = stepper(t)
        if nxt is None:
            return NormalizationReport(t, steps, tuple(rules) if rules is not None else None)
        if steps >= fuel:
            raise FuelExhausted(t, steps)
        t = nxt[0]
        steps += 1
        if rules is not None:
            rules.append(nxt[1])


def numeral_shape(t: Term) -> int | None:
    """Decode succ^n zero without normalizing; None if not that shape."""
    n = 0
    while True:
        match t:
            case Const(ConstTag.ZERO):
                return n
            case App(Const(ConstTag.SUCC), rest):
                n += 1
                t = rest
            case _:
                return None


def numeral_value(t: Term, fuel: int = DEFAULT_FUEL) -> int | None:
    """Value of a term of ground type: n iff it normalizes to succ^n zero."""
    return numeral_shape(normalize(t, fuel).term)
