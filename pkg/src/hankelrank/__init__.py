"""Exact sample points on the low-rank locus of linear Hankel matrix pencils.

The package computes, by exact rational arithmetic throughout, at
least one sample point per connected component of the real set
{x : rank H(x) <= r} for a linear Hankel pencil H(x), together with
checkable certificates (rational parametrizations whose encoded points
annihilate every (r+1)-minor).
"""

from .bounds import (
    BoundsReport,
    delta_bound,
    delta_oracle,
    homotopy_curve_bound,
    homotopy_terms,
    total_output_bound,
)
from .driver import (
    SamplePointsResult,
    SolveOptions,
    SolveTrace,
    change_vars_params,
    lift_params,
    low_rank_hankel,
    union_params,
)
from .errors import (
    ContractError,
    DimensionError,
    ExactnessError,
    FormatError,
    GenericityError,
    HankelRankError,
    RandomnessError,
    ResourceError,
    RetriesExhaustedError,
    VerificationError,
)
from .groebner import GBCaps, GroebnerBasis, buchberger, is_zero_dimensional, normal_form
from .hankel import (
    HankelGen,
    LinearHankelPencil,
    build_pencil,
    change_vars_pencil,
    eval_pencil,
    kernel_pattern,
    rank_at,
    rect_system,
    substitute_x1,
)
from .poly import GREVLEX, LEX, MonomialOrder, MultiPoly
from .polymatrix import PolyMatrix, determinant, jacobian, minors
from .realroots import (
    IsolatingInterval,
    RealSampleBox,
    evaluate_parametrization,
    isolate_real_roots,
    refine_root,
)
from .solver import (
    RationalParametrization,
    SolveOutcome,
    zero_dim_solve,
    zero_dim_solve_max_rank,
)
from .systems import (
    IncidenceSystem,
    LagrangeSystem,
    ParameterDraw,
    draw_parameters,
    fiber_system,
    incidence_system,
    lagrange_system,
)
from .verify import (
    PlantSpec,
    TableRow,
    check_property_g,
    load_table_rows,
    plant_rank_deficient,
    random_pencil,
    reproduce_degrees,
    verify_membership,
)

__version__ = "0.1.0"
