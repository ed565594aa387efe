"""Exact characteristic-cycle computations over orbit stratifications.

The package takes a self-contained dataset (orbit poset with equivariant
fundamental groups, duality maps, pinned Kazhdan-Lusztig evaluations, a
representation catalog) and solves, over exact rationals with named free
parameters, for the index coefficient matrix and the characteristic cycles
of the intersection complexes, then builds and cross-checks the packet
structures the cycles determine.

Typical use:

    from microloc import load_bundled_dataset, euler_matrix, build_constraints, solve
    ds = load_bundled_dataset()
    sr = solve(build_constraints(ds, euler_matrix(ds)))
    sr.cc_table[("S8", "(1)")].at("S4")        # AffineInt: c-2
"""

from .affine import AffineInt, ZERO
from .data import (
    ArthurParameter,
    ComponentGroup,
    Dataset,
    DualityData,
    KLRecord,
    KLTable,
    Orbit,
    Representation,
    SchemaError,
    bundled_dataset_path,
    load_bundled_dataset,
    load_dataset,
    loads_dataset,
    validate_dataset,
)
from .duality import fourier_partner, hat, validate_duality
from .euler import (
    UNKNOWN,
    EulerMatrix,
    InsufficientKLData,
    MultiplicityMatrices,
    composition_multiplicity,
    composition_terms,
    euler_matrix,
    geometric_multiplicity_matrix,
    kl_value,
    local_euler,
)
from .packets import (
    AZCompatReport,
    Packet,
    WeakUnionReport,
    all_micro_packets,
    basic_arthur_packet,
    micro_packet,
    simplified_arthur_parameters,
    unitarity_report,
    verify_az_micro_compatibility,
    verify_weak_equals_union,
    weak_arthur_packet,
)
from .poset import OrbitPoset, Violation, closure_leq, validate_poset
from .solver import (
    Bound,
    CharacteristicCycle,
    CMatrix,
    ComputationError,
    ConstraintSystem,
    Equation,
    InconsistentSystem,
    MultiParameterMultiplicity,
    SkippedExpansion,
    SolveReport,
    admissible_assignment,
    build_constraints,
    characteristic_cycle,
    check_halfinteger_roots,
    localization_check_terms,
    parameter_bounds,
    reconstruct_local_euler,
    solve,
    special_cc_localization,
    verify_fourier_symmetry,
)

__version__ = "0.1.0"
