"""Dual-picture qubit circuit simulator.

A dense statevector engine and a Heisenberg-picture Pauli-descriptor
engine evolve the same circuits side by side; every reported quantity is
cross-checked between the two and against closed forms.  The bundled
four-qubit record-and-compare experiment shows that its entangled-pair
correlations (including a CHSH violation) are already present at the
analyzer step, before the final comparison gate runs.
"""

from .bell import (
    ChshResult,
    ChshSetting,
    ScanResult,
    TSIRELSON,
    canonical_setting,
    chsh,
    chsh_scan,
    correlation,
    scan_rows,
)
from .experiment import (
    BothPictures,
    ExperimentConfig,
    ExperimentReport,
    SignErrorAudit,
    Timeline,
    build_timeline,
    closed_form_descriptors_t2,
    correlation_t2,
    default_difference_grid,
    default_grid_configs,
    descriptors_at,
    descriptors_at_t2,
    joint_prob_both_one_at_t2,
    linear_terms_t2,
    pre_vs_post_report,
    prob_outcomes_differ_at_t4,
    record_marginal_t3,
    sign_error_audit,
    state_at,
    sweep_reports,
)
from .gates import (
    Gate,
    analyzer_rotation,
    cnot,
    hadamard,
    pauli_x,
    pauli_y,
    pauli_z,
    random_circuit,
)
from .heisenberg import (
    DescriptorSet,
    InvarianceReport,
    TermGrowthError,
    conjugation_images,
    descriptor_expectation,
    evolve,
    evolve_circuit,
    init_descriptors,
    untouched_invariance_check,
)
from .pauli import (
    Axis,
    OperatorSum,
    PauliString,
    expectation_in_all_zeros,
    isclose,
    max_term_deviation,
    multiply_strings,
)
from .states import (
    StateVector,
    apply_circuit,
    apply_gate,
    basis_label,
    dump_csv,
    expectation,
    joint_probability,
    new_all_zeros,
    to_conventional,
)
from .verification import CheckResult, compare_pictures, run_all_checks

__version__ = "0.1.0"

__all__ = [
    "Axis",
    "BothPictures",
    "CheckResult",
    "ChshResult",
    "ChshSetting",
    "DescriptorSet",
    "ExperimentConfig",
    "ExperimentReport",
    "Gate",
    "InvarianceReport",
    "OperatorSum",
    "PauliString",
    "ScanResult",
    "SignErrorAudit",
    "StateVector",
    "TermGrowthError",
    "Timeline",
    "TSIRELSON",
    "analyzer_rotation",
    "apply_circuit",
    "apply_gate",
    "basis_label",
    "build_timeline",
    "canonical_setting",
    "chsh",
    "chsh_scan",
    "closed_form_descriptors_t2",
    "compare_pictures",
    "conjugation_images",
    "correlation",
    "correlation_t2",
    "cnot",
    "default_difference_grid",
    "default_grid_configs",
    "descriptor_expectation",
    "descriptors_at",
    "descriptors_at_t2",
    "dump_csv",
    "evolve",
    "evolve_circuit",
    "expectation",
    "expectation_in_all_zeros",
    "hadamard",
    "init_descriptors",
    "isclose",
    "joint_prob_both_one_at_t2",
    "joint_probability",
    "linear_terms_t2",
    "max_term_deviation",
    "multiply_strings",
    "new_all_zeros",
    "pauli_x",
    "pauli_y",
    "pauli_z",
    "pre_vs_post_report",
    "prob_outcomes_differ_at_t4",
    "random_circuit",
    "record_marginal_t3",
    "run_all_checks",
    "scan_rows",
    "sign_error_audit",
    "state_at",
    "sweep_reports",
    "to_conventional",
    "untouched_invariance_check",
    "__version__",
]
