"""Closed-form spectra of paths, cycles, Möbius ladders and box products.

An eigenvalue is kept symbolically as ``offset + sum(2*cos(k*pi/q))`` so that
product spectra can be inspected term by term; floats are produced only by
:meth:`ExactEigenvalue.value`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .graphs import Cycle, Cylinder, Grid, GraphFamily, MobiusLadder, Path, Torus

#: Below this magnitude an eigenvalue is treated as zero by diagnostics.
ZERO_TOL = 1e-9


@dataclass(frozen=True)
class ExactEigenvalue:
    offset: int
    cosine_terms: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        terms = []
        for k, q in self.cosine_terms:
            if q < 1:
                raise ValueError(f"cosine denominator must be positive, got {q}")
            terms.append((k % (2 * q), q))
        object.__setattr__(self, "cosine_terms", tuple(terms))

    def value(self) -> float:
        return self.offset + sum(2.0 * math.cos(k * math.pi / q) for k, q in self.cosine_terms)

    def __add__(self, other: ExactEigenvalue) -> ExactEigenvalue:
        return ExactEigenvalue(self.offset + other.offset, self.cosine_terms + other.cosine_terms)

    def __str__(self) -> str:
        parts = [f"2cos({k}pi/{q})" for k, q in self.cosine_terms]
        if self.offset or not parts:
            parts.insert(0, str(self.offset))
        return " + ".join(parts)


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: tuple[ExactEigenvalue, ...]

    def __len__(self) -> int:
        return len(self.eigenvalues)

    def __iter__(self) -> Iterator[ExactEigenvalue]:
        return iter(self.eigenvalues)

    def values(self) -> list[float]:
        return [e.value() for e in self.eigenvalues]


def path_spectrum(p: int) -> Spectrum:
    """``2cos(i*pi/(p+1))`` for ``i = 1..p``."""
    if p < 1:
        raise ValueError(f"path needs at least 1 vertex, got {p}")
    return Spectrum(tuple(ExactEigenvalue(0, ((i, p + 1),)) for i in range(1, p + 1)))


def cycle_spectrum(n: int) -> Spectrum:
    """``2cos(2j*pi/n)`` for ``j = 1..n``."""
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return Spectrum(tuple(ExactEigenvalue(0, ((2 * j, n),)) for j in range(1, n + 1)))


def mobius_spectrum(n: int) -> Spectrum:
    """``(-1)^j + 2cos(j*pi/n)`` for ``j = 1..2n``."""
    if n < 2:
        raise ValueError(f"Möbius ladder needs n >= 2, got {n}")
    return Spectrum(
        tuple(ExactEigenvalue(-1 if j % 2 else 1, ((j, n),)) for j in range(1, 2 * n + 1))
    )


def product_spectrum(s1: Spectrum, s2: Spectrum) -> Spectrum:
    """All sums ``a + b`` for ``a`` in ``s1``, ``b`` in ``s2``, row-major in ``(a, b)``."""
    if not len(s1) or not len(s2):
        raise ValueError("product_spectrum needs nonempty spectra")
    return Spectrum(tuple(a + b for a in s1 for b in s2))


def family_spectrum(f: GraphFamily) -> Spectrum:
    if isinstance(f, Path):
        return path_spectrum(f.p)
    if isinstance(f, Cycle):
        return cycle_spectrum(f.n)
    if isinstance(f, Grid):
        return product_spectrum(path_spectrum(f.p), path_spectrum(f.q))
    if isinstance(f, Torus):
        return product_spectrum(cycle_spectrum(f.m), cycle_spectrum(f.n))
    if isinstance(f, Cylinder):
        return product_spectrum(path_spectrum(f.p), cycle_spectrum(f.n))
    if isinstance(f, MobiusLadder):
        return mobius_spectrum(f.n)
    raise TypeError(f"not a graph family: {f!r}")


def _float_values(s: Spectrum | Sequence[float]) -> list[float]:
    return s.values() if isinstance(s, Spectrum) else list(s)


def spectral_det(s: Spectrum | Sequence[float]) -> float:
    """Product of the eigenvalues, multiplied in ascending order of magnitude.

    Diagnostic only: a float product cannot certify singularity, use
    :func:`cartdet.exact.bareiss_det` or :func:`cartdet.exact.exact_rank`.
    """
    vals = _float_values(s)
    if not vals:
        raise ValueError("spectral_det needs a nonempty spectrum")
    return math.prod(sorted(vals, key=abs))


def min_abs_eigenvalue(s: Spectrum | Sequence[float]) -> float:
    vals = _float_values(s)
    if not vals:
        raise ValueError("min_abs_eigenvalue needs a nonempty spectrum")
    return min(abs(v) for v in vals)
