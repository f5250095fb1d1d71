"""Exact soft-set algebra over integer lattice parameter spaces, with
convexity and concavity deciders and a randomized law checker."""

from .algebra import (
    alpha_inclusion,
    complement,
    intersection,
    intersection_all,
    is_soft_subset,
    union,
    union_all,
)
from .analysis import (
    check_alpha_cut_characterization,
    concave_witness,
    concave_witness_oracle,
    convex_witness,
    convex_witness_oracle,
    is_concave,
    is_concave_oracle,
    is_convex,
    is_convex_oracle,
    random_concave_soft_set,
    random_convex_soft_set,
    random_soft_set,
)
from .core import (
    CarrierMismatch,
    ElemSubset,
    GridBox,
    SoftSet,
    Universe,
    ValidationError,
    Witness,
    WitnessKind,
    make_soft_set,
)
from .document import DocumentError, parse, serialize
from .lattice import (
    is_hull_convex_2d,
    is_segment_convex,
    random_convex_lattice_set,
    segment_lattice_points,
)
from .suite import GeneratorConfig, theorem_suite

__version__ = "0.1.0"
