"""Canonical Landau-Ginzburg superpotentials for cominuscule homogeneous spaces.

Everything is built from Dynkin data alone: the minuscule poset, its order
ideals, the box-move denominators, the box-adding numerators, and the quantum
term.  All identities are verified by exact Laurent-polynomial expansion on
the distinguished torus.
"""
from .root_data import (
    CominusculeDatum,
    all_data,
    anticanonical_index,
    cartan_matrix,
    comin_coefficients,
    diagram_involution,
    dynkin_involution,
    highest_root,
    index_sequence,
    weyl_apply,
)
from .poset import (
    MinusculePoset,
    build_minuscule_poset,
    enumerate_order_ideals,
    ideal_sequence,
    quantum_ideals,
    reduced_word_wP,
)
from .moves import MoveEvent, MovePoset, denominator_polynomial, generate_move_poset, minimal_movable_filters
from .potential import (
    PluckerPolynomial,
    Superpotential,
    SuperpotentialTerm,
    apply_derivation,
    assemble_superpotential,
    numerator_polynomial,
    quantum_chevalley,
    quantum_derivation,
)
from .toric import (
    LaurentPolynomial,
    VerificationReport,
    expected_minor_monomial,
    label_linear_form,
    restrict_plucker,
    restrict_polynomial,
    restrict_polynomial_graded,
    verify_model,
)
from .weyl_oracle import levi_longest_image, minor_exponents_via_weights, weyl_orbit_size

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
