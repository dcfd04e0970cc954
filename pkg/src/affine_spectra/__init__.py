"""Spectral analysis of planar self-affine measures from diagonal systems:
closed forms, rigorous bounds and numerical estimates for moment scaling
exponents (L^q-spectra) and generalised q-dimensions."""

__version__ = "0.1.0"

from .logspace import LogValue, logsumexp
from .system import (
    DiagonalMap,
    DiagonalSystem,
    SystemDefinitionError,
    ValidationReport,
    detect_swap_family,
    load_system,
    swap_family,
    system_from_document,
    system_to_document,
    validate_system,
)
from .typeclasses import (
    ClassCountCapError,
    TypeClass,
    TypeClassTable,
    WordStats,
    enumerate_type_classes,
    type_class_count,
    word_stats,
)
from .projections import ProjectedSystem, ProjectionOverlapError, project, tau_pair, tau_projection
from .lq_spectrum import (
    SpectrumPoint,
    VariationalCertificate,
    big_psi,
    classify_and_bound,
    gamma_closed_forms,
    gamma_k,
    gamma_k_sweep,
    lower_bounds,
    natural_theta,
    psi_value,
    split_ratio_limit_consistency,
    swap_family_upper,
    variational_lower_bound,
)
from .split_binomial import growth_limit, sandwich_check, split_ratio
from .gendim import (
    FmRoots,
    GenDimPoint,
    UpperBoundBundle,
    UpperTriangularMap,
    corollary_equality,
    diagonal_entry_view,
    dq_finite_k,
    fm_roots,
    gendim_point,
    gendim_point_triangular,
    generalised_dimension,
    miao_counterexample_lower,
    p0_star,
    svf,
    u_roots,
    upper_bounds,
)
from .measure_lab import (
    GridMeasure,
    RenderConfig,
    empirical_tau,
    render,
    sample_depth_range,
    sample_measure,
)
