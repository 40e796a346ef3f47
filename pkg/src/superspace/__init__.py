"""Exact supergeometry toolkit.

Grassmann numbers over Gaussian rationals, block supermatrices with
Berezinian and supertrace, the special linear superalgebra of the 4|1
space with its parabolic/translation split and real form, the Klein
quadric model of the space of 2-planes, and the big cell of the flag of
2|0 inside 2|1 subspaces with its affine supergroup action.
"""

from .errors import (
    AlgebraMismatchError,
    DegeneratePlaneError,
    ExprSyntaxError,
    InputFormatError,
    InvalidPointError,
    MathDomainError,
    NonHermitianTranslationError,
    NotInBigCellError,
    NotInvertibleError,
    ParityError,
    PatternError,
    ShapeMismatchError,
    StructureError,
    SuperspaceError,
)
from .exprparse import parse_expression
from .grassmann import GaussianRational, GrassmannAlgebra, Parity, SuperNumber
from .supermatrix import EVEN, INHOMOGENEOUS, ODD, BlockShape, SuperMatrix
from .conformal import (
    AlgebraElement,
    Root,
    bracket,
    gl_basis,
    lorentz_act,
    odd_pair,
    pattern_basis,
    pattern_dimensions,
    pattern_roots,
    position_root,
    q_form,
    root_decomposition,
    sl_basis,
    split_pn,
    subspace_membership,
    verify_translation_algebra,
)
from .realform import (
    ConjugationConfig,
    DEFAULT_CONFIG,
    reality_conditions_poincare,
    resolve_j_sign,
    sigma,
    sigma_fixed_basis,
    theta_group,
    xi_differential,
    xi_group,
)
from .geometry import (
    Plane,
    PluckerPoint,
    PoincareElement,
    RealPoincareElement,
    chart,
    cone_region,
    from_chart,
    klein_form,
    plane_from_chart,
    plucker,
    poincare_act,
    projective_equal,
    real_klein_signature,
    real_poincare_act,
    theta_point,
    wedge_act,
)
from .superflag import (
    BigCellPoint,
    SuperPoincareElement,
    big_cell_escape_witness,
    flag_charts,
    pi_chart,
    pi_differential_is_bijective,
    point_from_real_coordinates,
    real_coordinates,
    reality_report,
    stabilizer_membership,
    superpoincare_act,
    twistor_check,
    xi_bigcell,
)
from .verify import CheckResult, SUITES, run_suites

__version__ = "0.1.0"
