"""Certified simultaneous root finding with the Weierstrass (Durand-Kerner) iteration."""
from .certify import (
    BoundVec,
    Certificate,
    InclusionDisk,
    InclusionDiskSet,
    a_posteriori_1,
    a_posteriori_2,
    a_priori_bound,
    check_semilocal,
    inclusion_disks,
    step_decay_bounds,
)
from .core_math import PExponent, conjugate_exponent, p_norm
from .errors import (
    BoundUndefinedError,
    DegenerateGeometryError,
    DistinctnessError,
    DomainError,
    InconsistencyError,
    NotCertifiableError,
    PreconditionError,
    WDKError,
)
from .gauge import GaugeParams, radius_local1, radius_local2, radius_semi
from .local_theory import check_local1, check_local2, check_local3
from .polynomial import Polynomial, evaluate, from_roots
from .solver import SolveOptions, SolveReport, initial_guess, solve, verify_trace
from .weierstrass import correction, e_semilocal, step, two_point_step

__version__ = "0.1.0"
