"""Combinatorics and integer linear algebra for simplicial wedges, composed
complexes and the characteristic matrices of the toric manifolds built on them."""

from .characteristic import (
    CharacteristicMatrix,
    Containment,
    RegularityMode,
    build_lambda_J,
    build_lambda_JN,
    check_regularity,
    diagonal_sphere_matrix,
    kernel_in_q_report,
    q_subgroup,
    rank_and_kernel,
)
from .constructions import (
    JSequence,
    composed_complex,
    parameter_transform_composed,
    parameter_transform_wedge,
    simplicial_wedge,
    sphere_parts,
)
from .errors import InputError, IntegerOverflowError, ResourceLimitError, ToricWedgeError
from .homology import BettiTable, hochster_betti, reduced_homology
from .intlinalg import (
    IntMatrix,
    Lattice,
    Membership,
    kernel_basis,
    lattice_membership,
    minor_det,
    smith_normal_form,
    spans_direct_summand,
)
from .simplicial import (
    SimplePolytope,
    SimplicialComplex,
    complex_from_maximal_faces,
    complex_from_minimal_non_faces,
    f_vector,
    full_simplex,
    full_subcomplex,
    h_vector,
    join,
    minimal_non_faces,
    nerve_of_simple_polytope,
    simplex_boundary,
)
from .toric_cohomology import RingPresentation, cohomology_presentation, toric_betti

__version__ = "0.1.0"
