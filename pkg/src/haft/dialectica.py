"""The functional interpretation of formulas.

`translate` maps a formula A to a triple: existential witness
variables, universal challenge variables, and a quantifier-free
matrix, read as "there exist witnesses such that for all challenges
the matrix holds".  The clauses:

    atoms          unchanged, no witnesses, no challenges
    A & B          witnesses and challenges of both sides, side by side
    A | B          a fresh ground flag d joins the witnesses;
                   the matrix says d == zero ? A-matrix : B-matrix
    A -> B         witnesses: one functional per B-witness (applied to
                   the A-witnesses) and one per A-challenge (applied to
                   the A-witnesses and the B-challenges, curried);
                   challenges: the A-witnesses and the B-challenges
    all x. A       each witness becomes a functional of x;
                   x joins the challenges
    ex x. A        x joins the witnesses

Every variable entering a prefix is renamed through one shared supply,
so prefixes never collide; names are kept whenever possible.

A formula is self-interpreted when its translation has no witnesses
and re-closing the matrix under the challenge prefix gives the formula
back, up to bound renaming.  Universal closures of quantifier-free
formulas are the typical case.  `certify_axiom_base` runs that test
over the whole arithmetic axiom base: every equality, successor and
constant-equation instance over a type grid is expected to pass, and
the induction schema is expected to fail, since its conclusion nests a
universal formula inside an implication.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .abstraction import GRID_SMALL
from .kernel import axiom_instance
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
    forall_many,
    format_formula,
    formula_vars,
    neg,
    subst_formula,
)
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
    arrow,
    fresh_name,
    print_term,
)


@dataclass(frozen=True)
class DialecticaForm:
    """Witness prefix, challenge prefix, and quantifier-free matrix."""

    exist: tuple[Var, ...]
    univ: tuple[Var, ...]
    matrix: Formula

    def as_formula(self) -> Formula:
        """Re-quantify: exists-prefix, then forall-prefix, then matrix."""
        f = forall_many(self.univ, self.matrix)
        for v in reversed(self.exist):
            f = Exists(v, f)
        return f


def _subst_parallel(matrix: Formula, mapping: Mapping[Var, Term]) -> Formula:
    # Keys and values never overlap: every key is a prefix variable and
    # every value mentions only functionals and other prefixes, all
    # drawn from one fresh supply.  Sequential application is parallel.
    for v, t in mapping.items():
        matrix = subst_formula(matrix, v, t)
    return matrix


def translate(phi: Formula) -> DialecticaForm:
    used = {v.name for v in formula_vars(phi)}

    def fresh_var(base: str, ty: FiniteType) -> Var:
        name = fresh_name(base, used)
        used.add(name)
        return Var(name, ty)

    def functional(base: Var, over: tuple[Var, ...]) -> tuple[Var, Term]:
        fn = fresh_var(base.name, arrow(*(v.type for v in over), base.type))
        return fn, app(fn, *over)

    def go(f: Formula) -> DialecticaForm:
        match f:
            case Bottom() | Eq0():
                return DialecticaForm((), (), f)
            case And(a, b):
                da, db = go(a), go(b)
                return DialecticaForm(
                    da.exist + db.exist, da.univ + db.univ, And(da.matrix, db.matrix)
                )
            case Or(a, b):
                da, db = go(a), go(b)
                d = fresh_var("d", GROUND)
                took_left = Eq0(d, Const(ConstTag.ZERO))
                matrix = And(Imp(took_left, da.matrix), Imp(neg(took_left), db.matrix))
                return DialecticaForm(
                    (d,) + da.exist + db.exist, da.univ + db.univ, matrix
                )
            case Imp(a, b):
                da, db = go(a), go(b)
                witnesses: list[Var] = []
                for_b: dict[Var, Term] = {}
                for u in db.exist:
                    fn, applied = functional(u, da.exist)
                    witnesses.append(fn)
                    for_b[u] = applied
                for_a: dict[Var, Term] = {}
                for y in da.univ:
                    fn, applied = functional(y, da.exist + db.univ)
                    witnesses.append(fn)
                    for_a[y] = applied
                matrix = Imp(
                    _subst_parallel(da.matrix, for_a),
                    _subst_parallel(db.matrix, for_b),
                )
                return DialecticaForm(
                    tuple(witnesses), da.exist + db.univ, matrix
                )
            case Forall(x, body):
                x2 = fresh_var(x.name, x.type)
                da = go(subst_formula(body, x, x2))
                witnesses = []
                mapping: dict[Var, Term] = {}
                for u in da.exist:
                    fn, applied = functional(u, (x2,))
                    witnesses.append(fn)
                    mapping[u] = applied
                return DialecticaForm(
                    tuple(witnesses),
                    (x2,) + da.univ,
                    _subst_parallel(da.matrix, mapping),
                )
            case Exists(x, body):
                x2 = fresh_var(x.name, x.type)
                da = go(subst_formula(body, x, x2))
                return DialecticaForm((x2,) + da.exist, da.univ, da.matrix)
        raise AssertionError(f)

    return go(phi)


def self_interpreted(phi: Formula) -> bool:
    """No witnesses, and the challenge closure gives the formula back."""
    dt = translate(phi)
    return not dt.exist and alpha_eq(forall_many(dt.univ, dt.matrix), phi)


# ------------------------------------------------------------- certifying


@dataclass(frozen=True)
class CertifyRow:
    schema_id: str
    detail: str
    self_interpreted: bool
    expected: bool

    @property
    def agrees(self) -> bool:
        return self.self_interpreted == self.expected


@dataclass(frozen=True)
class CertifyReport:
    rows: tuple[CertifyRow, ...]

    @property
    def ok(self) -> bool:
        return all(row.agrees for row in self.rows)


def _detail(params: tuple) -> str:
    parts = []
    for p in params:
        if isinstance(p, Term):
            parts.append(print_term(p))
        elif isinstance(p, Formula):
            parts.append(format_formula(p))
        else:
            parts.append(str(p))
    return "; ".join(parts)


def certify_axiom_base(grid: Sequence[FiniteType] = GRID_SMALL) -> CertifyReport:
    """Run the self-interpretation test over the arithmetic axioms.

    Every instance over the grid is expected self-interpreted except
    induction, whose row is expected (and reported) to fail the test.
    """
    rows: list[CertifyRow] = []

    def add(schema_id: str, params: tuple, expected: bool = True) -> None:
        phi = axiom_instance(schema_id, params)
        rows.append(
            CertifyRow(schema_id, _detail(params), self_interpreted(phi), expected)
        )

    x = Var("x", GROUND)
    y = Var("y", GROUND)
    z = Var("z", GROUND)
    add("eq-refl", (x,))
    add("eq-sym", (x, y))
    add("eq-trans", (x, y, z))
    add("cong0", (Var("f", Arrow(GROUND, GROUND)),))
    add("succ-nonzero", ())
    add("succ-inj", ())
    for schema_id in ("comb-k", "comb-p0", "comb-p1", "comb-psurj"):
        for sigma in grid:
            for tau in grid:
                add(schema_id, (sigma, tau))
    for schema_id in ("comb-s", "comb-b", "comb-q"):
        for rho in grid:
            for sigma in grid:
                for tau in grid:
                    add(schema_id, (rho, sigma, tau))
    for schema_id in ("comb-r0", "comb-rs"):
        for sigma in grid:
            add(schema_id, (sigma,))
    add("induction", (Forall(x, Eq0(x, x)),), expected=False)
    return CertifyReport(tuple(rows))
