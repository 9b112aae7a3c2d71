"""Sine and cosine products over multiples of ``a*pi/n`` with ``gcd(a, n) = 1``.

For such ``a`` and every real ``x``::

    sin(n x) = 2^(n-1) (-1)^((a-1)(n-1)/2) prod_{j=0}^{n-1} sin(x + a j pi / n)

and, setting ``x -> 0`` (resp. shifting by ``-pi/2``)::

    prod_{j=1}^{n-1} sin(a j pi / n) = (-1)^((a-1)(n-1)/2) n / 2^(n-1)
    prod_{j=1}^{n-1} cos(a j pi / n) = (-1)^(a(n-1)/2) / 2^(n-1)   (n odd), 0 (n even)

The closed forms are returned exactly; the ``numeric_*`` helpers evaluate
the products directly in floating point for comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class IdentityCheck:
    lhs: float
    rhs: float

    @property
    def abs_error(self) -> float:
        return abs(self.lhs - self.rhs)


@dataclass(frozen=True)
class SignedRatio:
    """``sign * numerator / denominator`` kept unreduced (``sign`` is -1, 0 or 1)."""

    sign: int
    numerator: int
    denominator: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.sign * self.numerator, self.denominator)

    def __float__(self) -> float:
        return self.sign * self.numerator / self.denominator


def _validate(n: int, a: int) -> None:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if math.gcd(a, n) != 1:
        raise ValueError(f"a={a} is not coprime to n={n}")


def _parity_sign(exponent2: int) -> int:
    """``(-1)^(exponent2 / 2)``; ``exponent2`` must be even."""
    assert exponent2 % 2 == 0, exponent2
    return -1 if (exponent2 // 2) % 2 else 1


def _angle(a: int, j: int, n: int) -> float:
    # a*j*pi/n reduced modulo 2*pi before the float multiply
    return (a * j % (2 * n)) * math.pi / n


def sine_product_identity(n: int, a: int, x: float) -> IdentityCheck:
    _validate(n, a)
    sign = _parity_sign((a - 1) * (n - 1))
    prod = math.prod(math.sin(x + _angle(a, j, n)) for j in range(n))
    return IdentityCheck(lhs=math.sin(n * x), rhs=2.0 ** (n - 1) * sign * prod)


def sine_product(n: int, a: int) -> SignedRatio:
    _validate(n, a)
    return SignedRatio(_parity_sign((a - 1) * (n - 1)), n, 2 ** (n - 1))


def cosine_product(n: int, a: int) -> SignedRatio:
    _validate(n, a)
    if n % 2 == 0:
        return SignedRatio(0, 0, 1)
    return SignedRatio(_parity_sign(a * (n - 1)), 1, 2 ** (n - 1))


def numeric_sine_product(n: int, a: int) -> float:
    return math.prod(math.sin(_angle(a, j, n)) for j in range(1, n))


def numeric_cosine_product(n: int, a: int) -> float:
    return math.prod(math.cos(_angle(a, j, n)) for j in range(1, n))
