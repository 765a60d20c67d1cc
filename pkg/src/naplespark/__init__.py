"""Parking-function lab.

Simulators for forward, backward-capable and obstructed parking rules on a
directed path, the component structures and reflection maps they induce, the
staged correspondences between the families, adjacent-pair statistics with
their tie-balancing involutions, and exhaustive enumeration, counting and
verification of the families' identities.
"""

from .bijection import k_decompose, xi, xi_bar, xi_bar_stages, xi_inverse
from .census import (
    CANDIDATE_GUARD,
    Claim,
    Family,
    VerifyReport,
    count_classical,
    count_contained,
    count_lpf,
    enumerate_family,
    naples_count_recursive,
    verify,
)
from .components import naples_components, obstruction_components, parking_components
from .core import (
    CarRecord,
    Interval,
    KDecomposition,
    Lot,
    ParkMode,
    ParkOutcome,
    Part,
    PrefSeq,
    TieChangeTuple,
    validate,
)
from .errors import (
    EndpointNotComponentBoundary,
    InvalidFamilyParams,
    InvalidLot,
    InvalidPreference,
    NotAParkingFunction,
    NotContained,
    ParkingError,
    TooLarge,
    WrongTieCase,
)
from .reflections import iota, phi, phi_bar, phi_restricted
from .rules import is_contained, park_classical, park_naples, park_obstructed
from .ties import (
    Stats,
    aim,
    boundary_cars,
    delta_ties,
    out_tail,
    psi_big,
    psi_small,
    stats,
    tcomp,
)

__version__ = "0.1.0"

__all__ = [
    "CANDIDATE_GUARD",
    "CarRecord",
    "Claim",
    "EndpointNotComponentBoundary",
    "Family",
    "Interval",
    "InvalidFamilyParams",
    "InvalidLot",
    "InvalidPreference",
    "KDecomposition",
    "Lot",
    "NotAParkingFunction",
    "NotContained",
    "ParkMode",
    "ParkOutcome",
    "ParkingError",
    "Part",
    "PrefSeq",
    "Stats",
    "TieChangeTuple",
    "TooLarge",
    "VerifyReport",
    "WrongTieCase",
    "aim",
    "boundary_cars",
    "count_classical",
    "count_contained",
    "count_lpf",
    "delta_ties",
    "enumerate_family",
    "iota",
    "is_contained",
    "k_decompose",
    "naples_components",
    "naples_count_recursive",
    "obstruction_components",
    "out_tail",
    "park_classical",
    "park_naples",
    "park_obstructed",
    "parking_components",
    "phi",
    "phi_bar",
    "phi_restricted",
    "psi_big",
    "psi_small",
    "stats",
    "tcomp",
    "validate",
    "verify",
    "xi",
    "xi_bar",
    "xi_bar_stages",
    "xi_inverse",
]
