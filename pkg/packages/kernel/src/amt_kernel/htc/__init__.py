"""Here-and-there logic with constraints over finite boxes."""

from amt_kernel.htc.formula import (
    BOT,
    TOP,
    And,
    Atomic,
    Bot,
    ConstraintAtom,
    DefZ,
    Formula,
    Impl,
    Linear,
    Or,
    PropTrue,
    atom_den_contains,
    atom_vars,
    conj,
    defz,
    disj,
    evaluate,
    format_constraint,
    format_formula,
    formula_atoms,
    formula_vars,
    holds,
    iff,
    linear,
    neg,
    prop,
    top,
)
from amt_kernel.htc.models import (
    EQUIVALENT,
    Counterexample,
    Equivalent,
    EquivVerdict,
    Interpretation,
    Signature,
    Sort,
    VarDecl,
    equilibrium_models,
    equiv_models,
    ht_entails,
    ht_models,
    is_equilibrium,
    minimality_witness,
    sub_valuations,
    total_valuations,
    valuation_of,
)
from amt_kernel.htc.parser import ParsedTheory, parse_theory

__all__ = [
    "BOT",
    "EQUIVALENT",
    "TOP",
    "And",
    "Atomic",
    "Bot",
    "ConstraintAtom",
    "Counterexample",
    "DefZ",
    "EquivVerdict",
    "Equivalent",
    "Formula",
    "Impl",
    "Interpretation",
    "Linear",
    "Or",
    "ParsedTheory",
    "PropTrue",
    "Signature",
    "Sort",
    "VarDecl",
    "atom_den_contains",
    "atom_vars",
    "conj",
    "defz",
    "disj",
    "equilibrium_models",
    "equiv_models",
    "evaluate",
    "format_constraint",
    "format_formula",
    "formula_atoms",
    "formula_vars",
    "holds",
    "ht_entails",
    "ht_models",
    "iff",
    "is_equilibrium",
    "linear",
    "minimality_witness",
    "neg",
    "parse_theory",
    "prop",
    "sub_valuations",
    "top",
    "total_valuations",
    "valuation_of",
]
