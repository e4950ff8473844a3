"""
Negative-dependence geometry: stability, lattice and Lorentzian verdicts.
"""

from ergm_geometry.geometry.verdicts import (
    StabilityOutcome,
    StabilityVerdict,
    WagnerWitness,
    LatticeResult,
    CubicOutcome,
    CubicVerdict,
    ConditionStatus,
    ConditionResult,
    NecessaryReport,
    MConvexResult,
    LorentzOutcome,
    LorentzVerdict,
    NegativeCoefficient,
    NotMConvex,
    SignatureFailure,
    SpectrumRecord,
)
from ergm_geometry.geometry.stability import (
    wagner_gap,
    wagner_gap_exact,
    falsify_stability,
    certify_product_form,
)
from ergm_geometry.geometry.lattice import negative_lattice_check
from ergm_geometry.geometry.oracles import (
    sr_cubic_beta2,
    sr_verdict_cubic,
    lorentzian_verdict_cubic,
    check_sr_necessary,
)
from ergm_geometry.geometry.lorentzian import (
    Signature,
    SupportSet,
    support,
    support_from_points,
    is_m_convex,
    is_m_convex_symmetric,
    matrix_signature,
    quadratic_matrix,
    quadratic_signature,
    is_lorentzian,
    is_lorentzian_distribution,
)
from ergm_geometry.geometry.scan import ScanPoint, lorentzian_scan

__all__ = [
    "StabilityOutcome",
    "StabilityVerdict",
    "WagnerWitness",
    "LatticeResult",
    "CubicOutcome",
    "CubicVerdict",
    "ConditionStatus",
    "ConditionResult",
    "NecessaryReport",
    "MConvexResult",
    "LorentzOutcome",
    "LorentzVerdict",
    "NegativeCoefficient",
    "NotMConvex",
    "SignatureFailure",
    "SpectrumRecord",
    "wagner_gap",
    "wagner_gap_exact",
    "falsify_stability",
    "certify_product_form",
    "negative_lattice_check",
    "sr_cubic_beta2",
    "sr_verdict_cubic",
    "lorentzian_verdict_cubic",
    "check_sr_necessary",
    "Signature",
    "SupportSet",
    "support",
    "support_from_points",
    "is_m_convex",
    "is_m_convex_symmetric",
    "matrix_signature",
    "quadratic_matrix",
    "quadratic_signature",
    "is_lorentzian",
    "is_lorentzian_distribution",
    "ScanPoint",
    "lorentzian_scan",
]
