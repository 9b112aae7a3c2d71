"""Three-way determinant reports: closed form, exact oracle, spectral product."""

from __future__ import annotations

from dataclasses import dataclass

from .closed_forms import ClosedFormDet, closed_det
from .exact import bareiss_det
from .graphs import GraphFamily, adjacency_matrix, realize
from .spectra import ZERO_TOL, family_spectrum, min_abs_eigenvalue, spectral_det

METHODS = ("closed", "exact", "spectral")
SPECTRAL_RTOL = 1e-6


def spectral_matches(spectral: float, min_abs: float, reference: int) -> bool:
    """Float route agrees with an exact determinant.

    A nonzero reference is compared with relative tolerance; a zero
    reference only requires some eigenvalue to vanish, since the product of
    the remaining eigenvalues can be huge.
    """
    if reference == 0:
        return min_abs < ZERO_TOL
    return abs(spectral - reference) <= SPECTRAL_RTOL * max(1, abs(reference))


@dataclass(frozen=True)
class DetReport:
    family: GraphFamily
    closed: ClosedFormDet | None = None
    exact: int | None = None
    spectral: float | None = None
    min_abs: float | None = None

    @property
    def agree(self) -> bool | None:
        """``None`` when fewer than two methods were run."""
        have = [x is not None for x in (self.closed, self.exact, self.spectral)]
        if sum(have) < 2:
            return None
        ok = True
        if self.closed is not None and self.exact is not None:
            ok = self.closed.value == self.exact
        if self.spectral is not None:
            ref = self.exact if self.exact is not None else self.closed.value
            ok = ok and spectral_matches(self.spectral, self.min_abs, ref)
        return ok


def det_report(f: GraphFamily, methods=METHODS, *, check: bool = False) -> DetReport:
    unknown = set(methods) - set(METHODS)
    if unknown or not methods:
        raise ValueError(f"methods must be a nonempty subset of {METHODS}")
    closed = closed_det(f) if "closed" in methods else None
    exact = bareiss_det(adjacency_matrix(realize(f)), check=check) if "exact" in methods else None
    spectral = min_abs = None
    if "spectral" in methods:
        values = family_spectrum(f).values()
        spectral = spectral_det(values)
        min_abs = min_abs_eigenvalue(values)
    return DetReport(f, closed, exact, spectral, min_abs)
