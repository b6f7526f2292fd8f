"""Exact tools for deciding when a finite set of rational points is the
complete intersection of two plane curves of degrees m and n."""

from .curves import (
    CurveSpace,
    common_component,
    curve_through_points,
    find_overloaded_conic,
    find_overloaded_line,
    is_in_sigma_span,
    is_n_complete,
    vanishing_space,
)
from .decision import (
    CardinalityMismatch,
    ConditionAFailure,
    ConditionBFailure,
    Decision,
    condition_a,
    condition_b,
    decide_intersection_set,
    noether_decompose,
    verify_cayley_bacharach,
    verify_intersection_set,
)
from .independence import (
    IndependenceReport,
    PointSet,
    eval_matrix,
    fundamental_polynomial,
    independence_report,
    interpolate,
    is_essentially_dependent,
    is_n_independent,
    is_n_poised,
    max_independent_subset,
    vanishing_dim,
)
from .linalg import QMatrix, nullspace, rank, rref, solve
from .poly import Poly, d_func, dim_pi, evaluate, lift, multiply
