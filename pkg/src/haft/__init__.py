"""Heyting arithmetic in all finite types, with observational equality.

The package is layered bottom-up:

    syntax        types, terms, elaboration, parsing, printing
    reduction     the nine rewrite rules and normalization
    abstraction   bracket abstraction and the derived combinators
    logic         formulas, the equality macro, substitution
    kernel        proof objects, axiom schemas, checking, deduction
    derivations   ready-made congruence and equivalence proofs
    proofscript   a textual proof format with serializer and explainer
    dialectica    the functional interpretation and certification
    generate      seeded generators for terms and proofs
    suite         the end-to-end verification battery
    cli           the `haft` command
"""
from .abstraction import (
    AbstractionResult,
    GRID_FULL,
    GRID_SMALL,
    bracket,
    bracket_many,
    composition_def,
    identity_term,
    subst,
    transpose_term,
    transposition_def,
    verify_corollary,
)
from .derivations import (
    Pf,
    prove_cong_arg,
    prove_cong_fun,
    prove_eq_equivalence,
    prove_obs,
)
from .dialectica import (
    CertifyReport,
    DialecticaForm,
    certify_axiom_base,
    self_interpreted,
    translate,
)
from .kernel import (
    Axiom,
    CheckError,
    Gen,
    Hyp,
    Judgment,
    ModusPonens,
    Proof,
    SCHEMAS,
    SchemaError,
    axiom_instance,
    axiom_ids_used,
    check,
    deduction,
    discharge_all,
)
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
    format_formula,
    neg,
    parse_formula,
    subst_formula,
)
from .proofscript import explain, parse_proof_script, serialize
from .reduction import (
    DEFAULT_FUEL,
    FuelExhausted,
    NormalizationReport,
    normalize,
    numeral_value,
)
from .suite import render_suite, run_suite
from .syntax import (
    App,
    Arrow,
    Const,
    ConstTag,
    FiniteType,
    GROUND,
    Ground,
    ParseError,
    Product,
    Term,
    TypingError,
    Var,
    numeral,
    parse_term,
    parse_type,
    print_term,
    type_of,
)

__version__ = "0.1.0"
