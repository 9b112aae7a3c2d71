"""Closed-form adjacency determinants of grids, tori, cylinders and Möbius ladders.

All formulas use the classical parameters: a grid ``Grid(p, q)`` has
``m = p + 1`` and ``n = q + 1``, a cylinder ``Cylinder(p, n)`` has
``m = p + 1``. See :mod:`cartdet.graphs` for the translation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd

from .graphs import Cycle, Cylinder, Grid, GraphFamily, MobiusLadder, Path, Torus


class Case(str, enum.Enum):
    """Which branch of a piecewise formula produced a value."""

    SINGULAR = "singular"
    COPRIME = "coprime"                    # grid, gcd(m, n) = 1
    BOTH_ODD = "both-odd"                  # torus, m and n odd
    N_ODD_COPRIME = "n-odd-coprime"        # cylinder, n odd, gcd(m, n) = 1
    N_EVEN_COPRIME_HALF = "n-even-coprime-half"  # cylinder, n even, gcd(m, n/2) = 1
    RESIDUE_PM2 = "n=+-2-mod-6"            # Möbius ladder
    RESIDUE_PM1 = "n=+-1-mod-6"            # Möbius ladder
    ODD = "odd"                            # path with m = 2 (n odd), cycle with n odd
    TWO_MOD_FOUR = "n=2-mod-4"             # cycle

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ClosedFormDet:
    value: int
    case_label: Case


def _singular() -> ClosedFormDet:
    return ClosedFormDet(0, Case.SINGULAR)


def _require(name: str, value: int, minimum: int) -> None:
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")


def _neg_one_pow(e: int) -> int:
    return -1 if e % 2 else 1


def grid_det(p: int, q: int) -> ClosedFormDet:
    """``det A(P_p □ P_q)``: ``(-1)^((m-1)(n-1)/2)`` if ``gcd(m, n) = 1`` else 0."""
    _require("p", p, 1)
    _require("q", q, 1)
    m, n = p + 1, q + 1
    if gcd(m, n) != 1:
        return _singular()
    # coprime m, n are never both odd, so (m-1)(n-1) = p*q is even
    assert (p * q) % 2 == 0, (p, q)
    return ClosedFormDet(_neg_one_pow(p * q // 2), Case.COPRIME)


def torus_det(m: int, n: int) -> ClosedFormDet:
    """``det A(C_m □ C_n)``: ``4^gcd(m, n)`` if both odd else 0."""
    _require("m", m, 3)
    _require("n", n, 3)
    if m % 2 and n % 2:
        return ClosedFormDet(4 ** gcd(m, n), Case.BOTH_ODD)
    return _singular()


def cylinder_det(p: int, n: int) -> ClosedFormDet:
    """``det A(P_p □ C_n)`` with ``m = p + 1``."""
    _require("p", p, 1)
    _require("n", n, 3)
    m = p + 1
    if n % 2 and gcd(m, n) == 1:
        return ClosedFormDet(m, Case.N_ODD_COPRIME)
    if n % 2 == 0 and gcd(m, n // 2) == 1:
        return ClosedFormDet(_neg_one_pow(m - 1) * m * m, Case.N_EVEN_COPRIME_HALF)
    return _singular()


def mobius_det(n: int) -> ClosedFormDet:
    """``det A(M_2n)``: -3 if ``n = ±2 (mod 6)``, -9 if ``n = ±1 (mod 6)``, else 0."""
    _require("n", n, 2)
    r = n % 6
    if r in (2, 4):
        return ClosedFormDet(-3, Case.RESIDUE_PM2)
    if r in (1, 5):
        return ClosedFormDet(-9, Case.RESIDUE_PM1)
    return _singular()


def path_det(p: int) -> ClosedFormDet:
    """``det A(P_p)``: ``(-1)^(p/2)`` for even ``p`` (``n = p + 1`` odd), else 0."""
    _require("p", p, 1)
    n = p + 1
    if n % 2 == 0:
        return _singular()
    assert (n - 1) % 2 == 0
    return ClosedFormDet(_neg_one_pow((n - 1) // 2), Case.ODD)


def cycle_det(n: int) -> ClosedFormDet:
    _require("n", n, 3)
    if n % 2:
        return ClosedFormDet(2, Case.ODD)
    if n % 4 == 2:
        return ClosedFormDet(-4, Case.TWO_MOD_FOUR)
    return _singular()


def closed_det(f: GraphFamily) -> ClosedFormDet:
    if isinstance(f, Path):
        return path_det(f.p)
    if isinstance(f, Cycle):
        return cycle_det(f.n)
    if isinstance(f, Grid):
        return grid_det(f.p, f.q)
    if isinstance(f, Torus):
        return torus_det(f.m, f.n)
    if isinstance(f, Cylinder):
        return cylinder_det(f.p, f.n)
    if isinstance(f, MobiusLadder):
        return mobius_det(f.n)
    raise TypeError(f"not a graph family: {f!r}")
