"""Exact construction and verification of Sylvester-Gallai designs of skew flats."""

from .construct import GenSpec, gen_25, gen_fano_13, gen_planes_r5
from .geom import AffineSubspace
from .incidence import IncidenceDesign, fano_plane
from .verify import (
    HullArrangement,
    LineFamily,
    PreconditionError,
    TheoremReport,
    TheoremViolation,
    build_hulls,
    check_main_theorem,
    extract_transversal,
    find_ordinary_line,
)

__all__ = [
    "AffineSubspace",
    "GenSpec",
    "HullArrangement",
    "IncidenceDesign",
    "LineFamily",
    "PreconditionError",
    "TheoremReport",
    "TheoremViolation",
    "build_hulls",
    "check_main_theorem",
    "extract_transversal",
    "fano_plane",
    "find_ordinary_line",
    "gen_25",
    "gen_fano_13",
    "gen_planes_r5",
]
