"""Numerical radius, Crawford number and A-weighted numerical range tools.

The core quantities live in :mod:`numrad.numrange` (classical) and
:mod:`numrad.weighted` (semi-inner-product geometry); operator matrices in
:mod:`numrad.blocks`; inequality evaluators in :mod:`numrad.bounds`; seeded
instance generators in :mod:`numrad.generators`; randomized suites in
:mod:`numrad.suite`.
"""

from .blocks import (
    BlockMatrix,
    assemble,
    b_norm,
    b_numerical_radius,
    flatten,
    norm_matrix,
    offdiag2,
    scalarize_fg,
    scalarize_weighted,
    w_nonneg,
)
from .bounds import BoundReport, PowerPair
from .errors import (
    ConstructionFailure,
    DimensionMismatch,
    DomainError,
    IndefiniteInput,
    NegativeEntry,
    NegativeWeight,
    NotHermitian,
    NumericalFailure,
    NumradError,
    SingularWeight,
    UnknownSuite,
)
from .generators import GenSpec, gen_blocks, gen_commuting_pair, gen_intertwined_pair, gen_matrix
from .kernel import AbsPowers, abs_value, adjoint, herm_eig, op_norm, psd_power, sqrt_psd
from .numrange import (
    RangeBoundary,
    ThetaSweepConfig,
    crawford,
    numerical_radius,
    range_boundary,
    spectral_radius,
)
from .suite import SuiteReport, run_suite
from .weighted import (
    Weight,
    a_adjoint,
    a_crawford,
    a_min_norm,
    a_norm,
    a_numerical_radius,
    identity_weight,
    make_weight,
)

__version__ = "0.1.0"
