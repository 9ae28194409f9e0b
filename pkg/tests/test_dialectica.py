"""The functional translation: clause shapes, fresh naming, and the
axiom-base certification."""

import pytest

from haft.abstraction import GRID_SMALL
from haft.dialectica import (
    CertifyReport,
    CertifyRow,
    DialecticaForm,
    certify_axiom_base,
    self_interpreted,
    translate,
)
from haft.logic import (
    And,
    Bottom,
    Eq0,
    Exists,
    Forall,
    Imp,
    alpha_eq,
    eq,
    format_formula,
    parse_formula,
)
from haft.syntax import GROUND, Arrow, Var, type_of

T0 = GROUND
T1 = Arrow(GROUND, GROUND)

X = Var("x", T0)
Y = Var("y", T0)


def _tr(src, env=None):
    return translate(parse_formula(src, env or {"x": T0, "y": T0}))


# ------------------------------------------------------------ clause shapes


def test_atoms_translate_to_themselves():
    d = _tr("x == y")
    assert d == DialecticaForm((), (), Eq0(X, Y))
    assert translate(Bottom()) == DialecticaForm((), (), Bottom())
    assert d.as_formula() == Eq0(X, Y)


def test_conjunction_is_componentwise():
    d = _tr("(ex w:0. w == x) & (ex w:0. w == y)")
    assert [v.name for v in d.exist] == ["w", "w1"]
    assert d.univ == ()
    assert format_formula(d.matrix) == "w == x & w1 == y"


def test_freshening_respects_free_variables():
    # A free variable already called w1 pushes the second witness to w2.
    d = _tr("(ex w:0. w == w1) & (ex w:0. w == w1)", {"w1": T0})
    assert [v.name for v in d.exist] == ["w", "w2"]


def test_disjunction_introduces_a_ground_flag():
    d = _tr("x == y | y == x")
    assert [(v.name, v.type) for v in d.exist] == [("d", T0)]
    assert d.univ == ()
    assert format_formula(d.matrix) == (
        "(d == zero -> x == y) & ((d == zero -> bot) -> y == x)"
    )


def test_nested_disjunction_flags_stay_distinct():
    d = _tr("(x == y | y == x) | x == x")
    assert [v.name for v in d.exist] == ["d1", "d"]
    assert len({v.name for v in d.exist}) == 2


def test_existential_joins_witnesses():
    d = _tr("ex w:0. all u:0. w == u", {})
    assert [(v.name, v.type) for v in d.exist] == [("w", T0)]
    assert [(v.name, v.type) for v in d.univ] == [("u", T0)]
    assert format_formula(d.matrix) == "w == u"


def test_universal_lifts_witnesses_to_functionals():
    d = _tr("all u:0. ex w:0. w == u", {})
    assert [(v.name, str(v.type)) for v in d.exist] == [("w1", "(0>0)")]
    assert [(v.name, v.type) for v in d.univ] == [("u", T0)]
    assert format_formula(d.matrix) == "w1 u == u"


def test_implication_between_universals():
    d = _tr("(all a:0. a == x) -> (all c:0. c == x)", {"x": T0})
    # The antecedent's bound variable becomes a witness functional of the
    # consequent's challenge.
    assert [(v.name, str(v.type)) for v in d.exist] == [("a1", "(0>0)")]
    assert [(v.name, v.type) for v in d.univ] == [("c", T0)]
    assert format_formula(d.matrix) == "a1 c == x -> c == x"


def test_implication_with_witnesses_on_both_sides():
    d = _tr("(ex w:0. w == y) -> (ex v:0. v == succ y)", {"y": T0})
    assert [(v.name, str(v.type)) for v in d.exist] == [("v1", "(0>0)")]
    assert [(v.name, v.type) for v in d.univ] == [("w", T0)]
    assert format_formula(d.matrix) == "w == y -> v1 w == succ y"


def test_translation_output_is_well_typed():
    # Every exist/univ variable carries a finite type and the matrix is
    # quantifier-free over exactly those plus the original free variables.
    from haft.logic import is_quantifier_free

    for src in (
        "(all a:0. a == x) -> (ex w:0. w == x)",
        "all u:0. (ex w:0. w == u) | u == x",
        "(ex w:0. all u:0. w == u) -> (all c:0. ex v:0. v == c)",
    ):
        d = _tr(src, {"x": T0})
        assert is_quantifier_free(d.matrix)
        assert len({v.name for v in d.exist + d.univ}) == len(d.exist + d.univ)


def test_as_formula_order():
    d = _tr("all u:0. ex w:0. w == u", {})
    phi = d.as_formula()
    assert isinstance(phi, Exists)
    assert isinstance(phi.body, Forall)


# ------------------------------------------------------- self-interpretation


def test_atoms_and_universals_are_self_interpreted():
    assert self_interpreted(parse_formula("x == y", {"x": T0, "y": T0}))
    assert self_interpreted(parse_formula("all a:0. all h:(0>0). h a == h a", {}))
    assert self_interpreted(
        parse_formula("all a:0. a == x -> x == a", {"x": T0})
    )


def test_existentials_are_not_self_interpreted():
    assert not self_interpreted(parse_formula("ex w:0. w == x", {"x": T0}))
    assert not self_interpreted(parse_formula("x == y | y == x", {"x": T0, "y": T0}))


def test_higher_equality_macro_is_self_interpreted():
    f = Var("f", T1)
    g = Var("g", T1)
    assert self_interpreted(eq(f, g))


# ------------------------------------------------------------- certification


def test_certify_axiom_base_counts():
    report = certify_axiom_base(GRID_SMALL)
    assert isinstance(report, CertifyReport)
    assert report.ok
    rows = report.rows
    assert len(rows) == 271
    by_id = {}
    for row in rows:
        assert isinstance(row, CertifyRow)
        assert row.agrees
        by_id.setdefault(row.schema_id, []).append(row)
    # Six ground rows: equality laws, ground congruence, two successor laws.
    for sid in ("eq-refl", "eq-sym", "eq-trans", "cong0", "succ-nonzero", "succ-inj"):
        assert len(by_id[sid]) == 1
    # Two-parameter combinator schemas range over the grid squared.
    for sid in ("comb-k", "comb-p0", "comb-p1", "comb-psurj"):
        assert len(by_id[sid]) == len(GRID_SMALL) ** 2
    # Three-parameter ones over the grid cubed.
    for sid in ("comb-s", "comb-b", "comb-q"):
        assert len(by_id[sid]) == len(GRID_SMALL) ** 3
    # Recursor equations once per grid type.
    for sid in ("comb-r0", "comb-rs"):
        assert len(by_id[sid]) == len(GRID_SMALL)
    assert len(by_id["induction"]) == 1


def test_certify_reports_induction_as_not_self_interpreted():
    report = certify_axiom_base(GRID_SMALL)
    ind = [r for r in report.rows if r.schema_id == "induction"]
    assert len(ind) == 1
    assert ind[0].expected is False
    assert ind[0].self_interpreted is False
    assert ind[0].agrees


def test_certify_on_tiny_grid():
    report = certify_axiom_base((T0,))
    assert report.ok
    # 6 ground rows + 4 squares + 3 cubes + 2 recursor + 1 induction.
    assert len(report.rows) == 6 + 4 + 3 + 2 + 1
