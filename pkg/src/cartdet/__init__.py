"""Determinants, spectra and nullities of grids, tori, cylinders and Möbius ladders."""

from .closed_forms import (
    Case,
    ClosedFormDet,
    closed_det,
    cycle_det,
    cylinder_det,
    grid_det,
    mobius_det,
    path_det,
    torus_det,
)
from .exact import InexactDivisionError, RankReport, bareiss_det, exact_rank, nullity_of
from .graphs import (
    Cycle,
    Cylinder,
    Graph,
    GraphFamily,
    Grid,
    MobiusLadder,
    Path,
    Torus,
    adjacency_matrix,
    build_cycle,
    build_mobius,
    build_path,
    cartesian_product,
    make_family,
    realize,
)
from .matrix import IntMatrix
from .spectra import (
    ExactEigenvalue,
    Spectrum,
    cycle_spectrum,
    family_spectrum,
    min_abs_eigenvalue,
    mobius_spectrum,
    path_spectrum,
    product_spectrum,
    spectral_det,
)

__version__ = "0.1.0"
