"""A line-oriented surface format for proofs.

A proof script has three parts, in order:

    x : 0                        declarations of the free variables
    y : 0
    assume x == y                hypotheses, one per line
    axiom eq-sym x; y            numbered steps, starting at 1
    axiom forall-e all x:0. all y:0. x == y -> y == x; x
    mp 2 1
    ...

Step kinds:

    axiom <id> <param>; ...      an axiom schema instance; the number
                                 and kinds of parameters come from the
                                 schema (formulas, terms, or types)
    hyp <n>                      the n-th assumption, counting from 1
    mp <i> <j>                   modus ponens of step i on step j
    gen <x> <i>                  generalize step i over variable x

References are 1-based step numbers and must point backwards.  The
last step is the root of the proof.  '#' starts a comment.  Every free
variable, including those to be generalized, must be declared up
front; bound variables inside formulas need no declaration.

`serialize` writes a proof in this format, deduplicating structurally
identical subproofs into a single shared step.  A proof that uses one
variable name at two different types cannot be written as a script and
is rejected.
"""
from __future__ import annotations

from .kernel import (
    Axiom,
    CheckError,
    Gen,
    Hyp,
    Judgment,
    ModusPonens,
    Proof,
    SCHEMAS,
    _analyze,
)
from .logic import (
    Formula,
    format_formula,
    occurring_formula_vars,
    parse_formula,
)
from .syntax import (
    FiniteType,
    ParseError,
    Term,
    TypingError,
    Var,
    occurring_vars,
    parse_term,
    parse_type,
    print_term,
    split_declarations,
)

# ---------------------------------------------------------------- parsing


def _parse_params(schema_id: str, text: str, env: dict[str, FiniteType], line: int):
    schema = SCHEMAS.get(schema_id)
    if schema is None:
        raise ParseError(f"unknown axiom schema {schema_id!r}", line)
    parts = [p.strip() for p in text.split(";")] if text.strip() else []
    if len(parts) != len(schema.param_kinds):
        raise ParseError(
            f"axiom {schema_id} takes {len(schema.param_kinds)} parameter(s), "
            f"got {len(parts)}",
            line,
        )
    params = []
    for kind, part in zip(schema.param_kinds, parts):
        try:
            if kind == "formula":
                params.append(parse_formula(part, env))
            elif kind == "term":
                params.append(parse_term(part, env))
            else:
                params.append(parse_type(part))
        except ParseError as err:
            raise ParseError(
                f"in a parameter of axiom {schema_id}: {err.message}", line
            ) from None
        except TypingError as err:
            raise ParseError(
                f"in a parameter of axiom {schema_id}: {err}", line
            ) from None
    return tuple(params)


def _parse_ref(word: str, upto: int, line: int) -> int:
    if not word.isdigit() or not 1 <= int(word) <= upto:
        raise ParseError(f"step reference {word!r} must name an earlier step", line)
    return int(word)


def parse_proof_script(
    text: str,
) -> tuple[Proof, tuple[Formula, ...], dict[str, FiniteType]]:
    """Parse a script into its proof, hypotheses, and declarations."""
    env, body = split_declarations(text)
    offset = len(text.splitlines()) - len(body.splitlines())
    assumes: list[Formula] = []
    steps: list[Proof] = []
    for local, raw in enumerate(body.splitlines()):
        line = offset + local + 1
        code = raw.split("#", 1)[0].strip()
        if not code:
            continue
        word, _, rest = code.partition(" ")
        rest = rest.strip()
        if word == "assume":
            if steps:
                raise ParseError("assumptions must precede all steps", line)
            assumes.append(parse_formula(rest, env))
        elif word == "axiom":
            schema_id, _, params_text = rest.partition(" ")
            if not schema_id:
                raise ParseError("axiom needs a schema id", line)
            steps.append(Axiom(schema_id, _parse_params(schema_id, params_text, env, line)))
        elif word == "hyp":
            if not assumes:
                raise ParseError("hyp used but the script has no assume lines", line)
            if not rest.isdigit() or not 1 <= int(rest) <= len(assumes):
                raise ParseError(
                    f"hyp needs an assumption number between 1 and {len(assumes)}",
                    line,
                )
            steps.append(Hyp(int(rest) - 1))
        elif word == "mp":
            words = rest.split()
            if len(words) != 2:
                raise ParseError("mp needs two step numbers", line)
            i = _parse_ref(words[0], len(steps), line)
            j = _parse_ref(words[1], len(steps), line)
            steps.append(ModusPonens(steps[i - 1], steps[j - 1]))
        elif word == "gen":
            words = rest.split()
            if len(words) != 2:
                raise ParseError("gen needs a variable name and a step number", line)
            name = words[0]
            if name not in env:
                raise ParseError(f"cannot generalize undeclared variable {name!r}", line)
            i = _parse_ref(words[1], len(steps), line)
            steps.append(Gen(Var(name, env[name]), steps[i - 1]))
        else:
            raise ParseError(f"unknown step kind {word!r}", line)
    if not steps:
        raise ParseError("script contains no proof steps")
    return steps[-1], tuple(assumes), env


# ------------------------------------------------------------ serializing


def _linearize(proof: Proof) -> tuple[list[Proof], dict[Proof, int]]:
    order: list[Proof] = []
    index: dict[Proof, int] = {}

    def visit(node: Proof) -> None:
        if node in index:
            return
        match node:
            case ModusPonens(imp, arg):
                visit(imp)
                visit(arg)
            case Gen(_, body):
                visit(body)
        order.append(node)
        index[node] = len(order)

    visit(proof)
    return order, index


def _declarations(proof: Proof, hypotheses: tuple[Formula, ...]) -> dict[str, FiniteType]:
    decls: dict[str, FiniteType] = {}

    def add(v: Var) -> None:
        prev = decls.get(v.name)
        if prev is not None and prev != v.type:
            raise ValueError(
                f"variable {v.name!r} is used at types {prev} and {v.type}; "
                "such a proof has no script form"
            )
        decls.setdefault(v.name, v.type)

    def add_param(p) -> None:
        if isinstance(p, Term):
            for v in occurring_vars(p):
                add(v)
        elif isinstance(p, Formula):
            for v in occurring_formula_vars(p):
                add(v)

    for h in hypotheses:
        for v in occurring_formula_vars(h):
            add(v)
    seen: set[int] = set()
    stack = [proof]
    while stack:
        node = stack.pop()
        if id(node) in seen:
            continue
        seen.add(id(node))
        match node:
            case Axiom(_, params):
                for p in params:
                    add_param(p)
            case ModusPonens(imp, arg):
                stack.append(imp)
                stack.append(arg)
            case Gen(var, body):
                add(var)
                stack.append(body)
    return decls


def _render_param(p) -> str:
    if isinstance(p, Term):
        return print_term(p)
    if isinstance(p, Formula):
        return format_formula(p)
    return str(p)


def _render_step(node: Proof, index: dict[Proof, int]) -> str:
    match node:
        case Axiom(schema_id, params):
            if not params:
                return f"axiom {schema_id}"
            return f"axiom {schema_id} " + "; ".join(_render_param(p) for p in params)
        case Hyp(i):
            return f"hyp {i + 1}"
        case ModusPonens(imp, arg):
            return f"mp {index[imp]} {index[arg]}"
        case Gen(var, body):
            return f"gen {var.name} {index[body]}"
    raise ValueError(f"not a proof node: {node!r}")


def serialize(proof: Proof, hypotheses: tuple[Formula, ...] = ()) -> str:
    """Write a proof as a script that parses back to an equal proof."""
    lines: list[str] = []
    for name, ty in sorted(_declarations(proof, hypotheses).items()):
        lines.append(f"{name} : {ty}")
    for h in hypotheses:
        lines.append(f"assume {format_formula(h)}")
    order, index = _linearize(proof)
    for node in order:
        lines.append(_render_step(node, index))
    return "\n".join(lines) + "\n"


# -------------------------------------------------------------- explaining


def explain(proof: Proof, hypotheses: tuple[Formula, ...] = ()) -> str:
    """The steps of a proof with the conclusion re-derived at each one."""
    info: dict[int, tuple[Formula, frozenset[int]]] = {}
    _analyze(proof, hypotheses, info)
    order, index = _linearize(proof)
    lines: list[str] = []
    for n, h in enumerate(hypotheses, start=1):
        lines.append(f"assume {n}: {format_formula(h)}")
    width = len(str(len(order)))
    for node in order:
        concl, _ = info[id(node)]
        lines.append(f"{index[node]:>{width}}. {_render_step(node, index)}")
        lines.append(f"{' ' * (width + 2)}|- {format_formula(concl)}")
    return "\n".join(lines) + "\n"
