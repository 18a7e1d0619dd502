"""Assertive quantum logic over finite-dimensional Hilbert models.

The package separates two questions about a physical statement: whether
it is *true* in a state (a partial, three-valued matter) and whether it
is *empirically justified* there (a total, two-valued one).  Formulas of
the assertive language denote closed subspaces through their
justification conditions, and the quotient of formulas by equal
denotation is an orthomodular lattice, isomorphic to the lattice of the
model's closed subspaces.
"""

from .errors import (
    ModelError,
    NonQuantumFormulaError,
    ParseError,
    PragmaQLError,
    ProjectorError,
    UnknownNameError,
)
from .formula import (
    AQ,
    A,
    And,
    Assert,
    AssertiveFormula,
    Atom,
    C,
    E,
    Formula,
    FragmentReport,
    FragmentViolation,
    Iff,
    Implies,
    K,
    N,
    Not,
    Or,
    RadicalFormula,
    connective_depth,
    desugar,
    parse_assertive,
    parse_radical,
    print_formula,
    quantum_fragment_check,
    radical_atoms,
)
from .hilbert import (
    DEFAULT_EPS,
    Projector,
    StateVector,
    contains_state,
    identity_projector,
    join,
    leq,
    make_projector,
    make_state,
    meet,
    ortho,
    projector_from_span,
    projectors_close,
    random_projector,
    random_state,
    state_projector,
    zero_projector,
)
from .model import (
    Finding,
    Model,
    ValidationReport,
    bundled_model,
    bundled_model_document,
    bundled_model_names,
    load_model,
    load_model_file,
    qubit_zx,
    validate_model,
)
from .evaluation import (
    JustificationValue,
    Overlay,
    TruthValue3,
    born_probability,
    check_cc,
    classify_property,
    justify,
    load_overlay,
    pragmatic_extension,
    precedes,
    sigma,
    validate_overlay,
)
from .lattice import (
    LatticeElement,
    LawReport,
    QuotientLattice,
    export_lattice,
    find_distributivity_violation,
    generate_quotient,
    import_lattice,
    verify_isomorphism,
    verify_ortholattice,
    verify_orthomodular,
)

__version__ = "0.1.0"

__all__ = [
    "PragmaQLError", "ParseError", "ProjectorError", "ModelError",
    "UnknownNameError", "NonQuantumFormulaError",
    "Atom", "Not", "And", "Or", "Implies", "Iff",
    "Assert", "N", "K", "A", "C", "E", "AQ",
    "RadicalFormula", "AssertiveFormula", "Formula",
    "FragmentReport", "FragmentViolation",
    "parse_radical", "parse_assertive", "print_formula",
    "quantum_fragment_check", "desugar", "connective_depth", "radical_atoms",
    "DEFAULT_EPS", "Projector", "StateVector",
    "make_projector", "projector_from_span", "make_state",
    "zero_projector", "identity_projector", "state_projector",
    "ortho", "meet", "join", "leq", "projectors_close", "contains_state",
    "random_state", "random_projector",
    "Finding", "ValidationReport", "Model",
    "load_model", "load_model_file", "validate_model",
    "bundled_model", "bundled_model_document", "bundled_model_names", "qubit_zx",
    "TruthValue3", "JustificationValue", "Overlay", "load_overlay",
    "born_probability", "classify_property", "sigma",
    "pragmatic_extension", "justify", "precedes", "check_cc", "validate_overlay",
    "LatticeElement", "QuotientLattice", "LawReport",
    "generate_quotient", "verify_ortholattice", "verify_orthomodular",
    "find_distributivity_violation", "verify_isomorphism",
    "export_lattice", "import_lattice",
]
