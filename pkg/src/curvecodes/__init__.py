"""Exact-arithmetic construction and analysis of evaluation codes on
elliptic and hyperelliptic curves over prime fields, with the genus and
asymptotic bound formulas and q-expansion cross-checks that go with them."""

from .agcodes import (
    CodeParameters,
    LinearCode,
    WeightDistribution,
    code_parameters,
    elliptic_sum_property,
    evaluation_code,
    macwilliams_transform,
    min_distance,
    parity_check_matrix,
    shokrollahi_check,
    weight_distribution,
)
from .bounds import (
    GenusReport,
    euler_phi,
    genus_prime_1mod12,
    genus_x0,
    gv_bound,
    mu,
    prop7_bound,
    tvz_exceeds_gv,
    tvz_line,
)
from .curves import (
    CurvePoint,
    HyperellipticModel,
    INFINITY,
    ModelCatalogEntry,
    WeierstrassModel,
    discriminant,
    ec_add,
    ec_group,
    ec_mul,
    ec_neg,
    enumerate_points,
    frobenius_count,
    group_structure,
    hecke_trace_by_count,
    x0_model,
)
from .errors import DomainError
from .ffcore import (
    FFMatrix,
    FFVector,
    PrimeFieldElement,
    check_matrix,
    field_arith,
    hamming,
    legendre_symbol,
    standard_form,
)
from .qseries import (
    EtaQuotientSpec,
    LaurentSeries,
    delta_series,
    eisenstein_normalized,
    eta_quotient,
    hecke_coeff_level11,
    j_series,
    modular_poly_check,
    sigma,
)
from .riemannroch import (
    MonomialFunction,
    ProjectiveFormRatio,
    conic_basis,
    eval_monomial,
    eval_projective,
    one_point_basis,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
