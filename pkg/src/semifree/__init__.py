"""Exact localization computations for semifree circle actions with
isolated fixed points: integration over fixed points, forced fixed-point
counts, the model ring of a product of two-spheres, the deduction pipeline
identifying points with subsets, and the cohomology of reductions.
"""

from .algebra import (
    IntMatrix,
    RatFunc,
    Rational,
    UniPoly,
    moment_matrix,
    ratfunc_to_poly,
    smith_normal_form,
    vandermonde_complete,
    vandermonde_kernel,
)
from .cube import (
    CubeClass,
    ModelData,
    alpha_class,
    beta_class,
    equivariant_chern_series,
    express_in_basis,
    hypercube_data,
    injectivity_rank_check,
    restrict_class,
)
from .fixed_points import (
    CountVector,
    FixedPoint,
    FixedPointData,
    counts,
    split_by_moment_sign,
    validate,
)
from .localization import (
    RestrictionAssignment,
    consistency_check,
    euler_class,
    gamma_restrictions,
    integrate,
    predict_counts,
    rep_chern_classes,
    search_candidates,
    verify_moment_equations,
)
from .pipeline import (
    Bijection,
    RestrictionTable,
    assemble_bijection,
    forced_level_square_sum,
    forced_level_sum,
    model_restriction_table,
    per_point_count,
    run_pipeline,
    solve_value_multiset,
)
from .reduction import (
    GradedQuotient,
    IdealPresentation,
    betti_by_counting,
    graded_quotient,
    kernel_generators,
    poincare_check,
    reduced_chern_series,
)

__version__ = "0.1.0"
