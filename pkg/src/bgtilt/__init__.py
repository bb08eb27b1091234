"""Two-term tilting theory of Brauer graph algebras from ribbon combinatorics.

The combinatorial layer (ribbon_core, walks, tilt) classifies two-term
tilting complexes via admissible signed walks; the oracle layer re-derives
the same answers homologically from string-module Hom calculus so the two
routes can be checked against each other.
"""

from .errors import (
    BGTiltError,
    Disconnected,
    GraphMismatch,
    InternalInvariantViolation,
    InvalidString,
    NoSignature,
    NotAWalk,
    NotEnumerable,
    NotShortString,
    ParseError,
    SignMismatch,
    SummandOverlap,
    UnknownEdge,
    UnknownVertex,
    ValidationError,
)
from .ribbon_core import (
    BrauerGraph,
    CycleProfile,
    augmented_cyclic_order,
    cycle_profile,
    flip,
    is_tilting_discrete,
    opposite_graph,
    parse_graph,
    serialize_graph,
)
from .walks import (
    SignedWalk,
    check_pair,
    enumerate_admissible_walks,
    is_admissible,
    is_admissible_set,
    make_signed_walk,
)
from .tilt import (
    CompleteSet,
    HasseQuiver,
    PathLabel,
    TwoTermComplex,
    complex_of_walk,
    enumerate_two_term_tilting,
    hasse_quiver,
    hom_vanishes_into_shift,
    order_ge,
    walk_of_complex,
)
from .oracle import (
    AlgebraBasis,
    HomTarget,
    StringWord,
    crosscheck_bijection,
    hom_dim,
    min_proj_presentation,
    path_basis,
    pretilting_oracle,
    strings_of_walk,
)

__version__ = "1.0.0"
