"""Orthogonal decomposition, stability and replicator dynamics of normal form games."""

from .core import (
    DEFAULT_TOL,
    BimatrixGame,
    CapacityError,
    DimensionError,
    DomainError,
    GameError,
    IntegrationError,
    MatrixGame,
    NotSymmetricError,
    PreconditionError,
    Tolerances,
    inner_product,
    projection_matrix,
)
from .bases import BasisKind, basis_E, basis_K, basis_N, bimatrix_dimensions, dimensions
from .decompose import Decomposition, decompose, decompose_bimatrix, decompose_symmetric, gamma, symmetrize
from .classify import (
    StabilityReport,
    bimatrix_stability,
    is_potential,
    is_zero_sum,
    preference_digraph,
    stability_report,
    strict_stable_3,
)
from .dynamics import (
    SimplexPoint,
    Trajectory,
    divergence,
    field_split,
    integrate,
    lyapunov_derivative,
    replicator_field,
    replicator_field_bimatrix,
)
from .zeeman import (
    Zeeman3Params,
    Zeeman4Params,
    ZeemanReport,
    jacobian_at_barycenter,
    rotation_matrix,
    zeeman3,
    zeeman3_classify,
    zeeman4,
    zeeman4_classify,
)
from .nplayer import (
    TensorGame,
    anti_potential_dims,
    anti_zero_sum_tensor_basis,
    decompose_tensor,
    is_exact_zero_sum_tensor,
    tensor_inner_product,
    three_player_anti_potential_basis,
)

__version__ = "0.1.0"
