"""Translations of T-logic programs into HT_c and the rewrites they justify."""

from amt_kernel.translate.rewrite import (
    ShiftMode,
    choice_variant,
    defined_variant,
    head_shift_equivalences,
    shift_head,
    shift_program_heads,
)
from amt_kernel.translate.tau import (
    AUX_PREFIX,
    TranslationOutput,
    aux_name,
    choice_axioms,
    project_equilibrium,
    project_solution,
    tau,
    tau_program,
)
from amt_kernel.translate.tau2 import bridge, lift_to_tau2, phi, project_tau2, tau2

__all__ = [
    "AUX_PREFIX",
    "ShiftMode",
    "TranslationOutput",
    "aux_name",
    "bridge",
    "choice_axioms",
    "choice_variant",
    "defined_variant",
    "head_shift_equivalences",
    "lift_to_tau2",
    "phi",
    "project_equilibrium",
    "project_solution",
    "project_tau2",
    "shift_head",
    "shift_program_heads",
    "tau",
    "tau2",
    "tau_program",
]
