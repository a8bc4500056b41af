"""Short antichains in root posets, semi-Catalan and semi-Shi arrangements, affine Weyl group elements."""

from .affine import (
    AffineRoot,
    AffineWeylElement,
    classify,
    element_from_biconvex,
    face_codimension,
    first_layer_ideal,
    inverse_from_point,
    is_biconvex,
    maximal_from_ideal,
    minimal_from_ideal,
    n_set,
    s_maximal_antichain,
    s_maximal_from_antichain,
)
from .arrangements import (
    build_arrangement,
    char_poly,
    char_poly_whitney,
    dominant_region_census,
    is_bounded,
    most_distant_alcove_check,
    psi_region,
    semi_shi_conjecture_report,
)
from .polynomials import IntPolynomial, zaslavsky_counts
from .posets import (
    Antichain,
    Ideal,
    closed_form_counts,
    count_antichains,
    enumerate_antichains,
    enumerate_ideals,
    ideal_closure,
)
from .rootsys import RootSystem, build_root_system, dual_system, subsystem
from .simplices import HalfSpaceSystem, lattice_points, simplex
from .verify import VerificationReport, run_verification

__version__ = "0.1.0"

__all__ = [
    "AffineRoot",
    "AffineWeylElement",
    "Antichain",
    "HalfSpaceSystem",
    "Ideal",
    "IntPolynomial",
    "RootSystem",
    "VerificationReport",
    "build_arrangement",
    "build_root_system",
    "char_poly",
    "char_poly_whitney",
    "classify",
    "closed_form_counts",
    "count_antichains",
    "dominant_region_census",
    "dual_system",
    "element_from_biconvex",
    "enumerate_antichains",
    "enumerate_ideals",
    "face_codimension",
    "first_layer_ideal",
    "ideal_closure",
    "inverse_from_point",
    "is_biconvex",
    "is_bounded",
    "lattice_points",
    "maximal_from_ideal",
    "minimal_from_ideal",
    "most_distant_alcove_check",
    "n_set",
    "psi_region",
    "run_verification",
    "s_maximal_antichain",
    "s_maximal_from_antichain",
    "semi_shi_conjecture_report",
    "simplex",
    "subsystem",
    "zaslavsky_counts",
]
