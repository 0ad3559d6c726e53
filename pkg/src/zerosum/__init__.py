"""0-1 solutions of a1 x1 + ... + al xl = 0 over F_p: dimension, minimal
solutions, structure classes and exhaustive verification sweeps."""

from .structure import (
    ReconstructionResult,
    StructureClass,
    classify,
    collinear,
    partner_form,
    reconstruct,
)
from .fp import Prime, RankAccumulator, inverse, nullspace_basis, row_rank
from .ratios import RatioDecomposition, check_necessary_conditions, decompose
from .sequences import (
    CanonicalForm,
    Sequence,
    canonical_form,
    enumerate_canonical,
    multiplicity_profile,
    subsums,
    thb_lower_bound,
)
from .solutions import (
    AffineReduction,
    SolutionSet,
    affine_dim,
    affine_reduce,
    enumerate_solutions,
    exceptional_pairs,
    minimal_basis,
    minimal_solutions,
    solution_dim,
    support_indices,
    support_mask,
)
from .verify import SweepSpec, VerificationReport, run_sweep

__version__ = "0.1.0"
