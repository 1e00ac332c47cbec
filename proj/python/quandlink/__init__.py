"""Quandle counting invariants and linking numbers for virtual link diagrams."""

from ._core import (
    BudgetExceeded,
    ColoringReport,
    GaussCode,
    GaussCodeParseError,
    LinkingProfile,
    Presentation,
    Quandle,
    RecoveryResult,
    apply_r1,
    apply_r2,
    check_axioms,
    count_homomorphisms,
    decomposition_check,
    make_trivial,
    make_xn,
    parse_gauss_code,
    presentation,
    quandle_from_matrix,
    random_perturb,
    recover_abs_linking,
    subquandle,
    virtual_linking_numbers,
    xn_count_closed_form,
    xn_count_sweep,
)

__all__ = [
    "BudgetExceeded",
    "ColoringReport",
    "GaussCode",
    "GaussCodeParseError",
    "LinkingProfile",
    "Presentation",
    "Quandle",
    "RecoveryResult",
    "apply_r1",
    "apply_r2",
    "check_axioms",
    "count_homomorphisms",
    "decomposition_check",
    "make_trivial",
    "make_xn",
    "parse_gauss_code",
    "presentation",
    "quandle_from_matrix",
    "random_perturb",
    "recover_abs_linking",
    "subquandle",
    "virtual_linking_numbers",
    "xn_count_closed_form",
    "xn_count_sweep",
]

__version__ = "0.1.0"
