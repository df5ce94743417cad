"""Exact ECH-style combinatorics of prequantization circle bundles.

Indices, gradings, generator enumeration, and capacity spectra for circle
bundles over the sphere and the torus, with independent oracles
cross-checking every closed form.  All arithmetic is exact.
"""

from .bundles import (
    ExactAction,
    InvariantViolation,
    MorseProfile,
    OrbitSet,
    PrequantizationBundle,
    action_of,
    gamma_class,
    is_ech_generator,
)
from .generators import GradedGenerator, enumerate_by_action, enumerate_by_grading, sphere_pair_for_k
from .indices import (
    CurveEndData,
    ech_index,
    fredholm_index,
    grading,
    index_ambiguity,
    partition_of,
    relative_index,
    two_i_minus_ind,
)
from .obstruction import (
    CapacitySequence,
    GromovWidthReport,
    ObstructionResult,
    ball_capacities,
    ellipsoid_capacities,
    gromov_width_report,
    obstructs_embedding,
)
from .spectrum import (
    CapacityResult,
    TorusBounds,
    capacity_sphere,
    capacity_sphere_via_u,
    capacity_torus_bounds,
    capacity_torus_closed_form,
    sphere_u_step,
    torus_closed_form_exclusion,
    torus_d_bounds,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityResult",
    "CapacitySequence",
    "CurveEndData",
    "ExactAction",
    "GradedGenerator",
    "GromovWidthReport",
    "InvariantViolation",
    "MorseProfile",
    "ObstructionResult",
    "OrbitSet",
    "PrequantizationBundle",
    "TorusBounds",
    "action_of",
    "ball_capacities",
    "capacity_sphere",
    "capacity_sphere_via_u",
    "capacity_torus_bounds",
    "capacity_torus_closed_form",
    "ech_index",
    "ellipsoid_capacities",
    "enumerate_by_action",
    "enumerate_by_grading",
    "fredholm_index",
    "gamma_class",
    "grading",
    "gromov_width_report",
    "index_ambiguity",
    "is_ech_generator",
    "obstructs_embedding",
    "partition_of",
    "relative_index",
    "sphere_pair_for_k",
    "sphere_u_step",
    "torus_closed_form_exclusion",
    "torus_d_bounds",
    "two_i_minus_ind",
]
