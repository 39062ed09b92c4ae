"""Frame bounds, spectral gaps and spectra of Lebesgue-type measures."""

from .additive import (
    construct_spectrum,
    finite_local_complexity_audit,
    orthogonality_check,
    parity_audit,
    plus_space_report,
    zero_set_line_scan,
)
from .errors import (
    AuditFailure,
    DomainError,
    FramegapError,
    InsufficientPointsError,
    IterationLimitError,
    LemmaViolation,
    LinkFailure,
    NotSpectralError,
    ToleranceTooTightError,
    UnsupportedMeasureError,
)
from .frames import (
    bessel_count_check,
    frame_functional,
    jp_verify,
    jp_verify_additive,
    poisson_diagonal_sum,
    probe_frame_bounds,
)
from .kernels import BACKEND
from .measures import AdditiveLebesgue, RestrictedLebesgue, ft_additive, ft_restricted_lebesgue
from .pointsets import CosetUnion, DiagonalFamily, FiniteList, FiniteList2D, gap_stats
from .specfun import EvalPolicy, big_f, hurwitz_zeta2, inv_hurwitz_zeta2, sinc_pi
from .theorems import (
    check_gap_chain,
    check_gap_product_bound,
    check_min_gap_bound,
    gap_upper_bound_sharp,
    lattice_family,
    lattice_family_scan,
    min_gap_sharpness,
)

__version__ = "0.1.0"
