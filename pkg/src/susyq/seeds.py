"""Seed solutions of the truncated-oscillator Schroedinger equation.

A seed at factorization energy eps (units hbar = omega = 1) is

    u(x) = e^{-x^2/2} [ b1 * 1F1((1-2*eps)/4, 1/2; x^2)
                        + b2 * x * 1F1((3-2*eps)/4, 3/2; x^2) ]

It solves u'' = (x^2 - 2*eps) u on x > 0 but is not required to satisfy
boundary conditions.  b2 = 0 gives the even branch, b1 = 0 the odd one.

All evaluation here works with Gaussian-stripped values

    v_n(x) = u^{(n)}(x) * e^{+x^2/2}

so that Wronskian code can track the overall e^{-k x^2/2} exponent
analytically.  Derivatives of order >= 2 come from the ODE itself via the
Leibniz-expanded recurrence

    u^{(n+2)} = (x^2 - 2*eps) u^{(n)} + 2 n x u^{(n-1)} + n (n-1) u^{(n-2)}

which holds verbatim for the stripped values v_n as well.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .kummer import kummer_m, kummer_m_deriv


class Parity(enum.IntEnum):
    EVEN = +1
    ODD = -1


def derivative_table(v0, v1, epsilon, x, max_order, dtype=np.float64):
    """Stack [v_0 .. v_max_order] from the first two values via the ODE recurrence.

    Works for any solution of u'' = (x^2 - 2*epsilon) u given its
    Gaussian-stripped value and first derivative (or the plain values,
    the recurrence is the same).
    """
    x = np.asarray(x, dtype=dtype)
    z = x * x
    eps = dtype(epsilon)
    table = [np.asarray(v0, dtype=dtype), np.asarray(v1, dtype=dtype)]
    for n in range(max_order - 1):
        nxt = (z - 2 * eps) * table[n]
        if n >= 1:
            nxt = nxt + (2 * n) * x * table[n - 1]
        if n >= 2:
            nxt = nxt + n * (n - 1) * table[n - 2]
        table.append(nxt)
    return np.array(table[: max_order + 1])


@dataclass(frozen=True)
class SeedSolution:
    """Non-physical oscillator solution at energy epsilon with coefficients (b1, b2)."""

    epsilon: float
    b1: float
    b2: float

    def __post_init__(self):
        if not np.isfinite(self.epsilon):
            raise ValueError("factorization energy must be finite")
        if self.b1 == 0 and self.b2 == 0:
            raise ValueError("seed must have at least one nonzero coefficient")

    @property
    def parity(self):
        """Parity.EVEN, Parity.ODD, or None for an indefinite mixed seed."""
        if self.b2 == 0:
            return Parity.EVEN
        if self.b1 == 0:
            return Parity.ODD
        return None

    @property
    def a_even(self) -> float:
        return (1 - 2 * self.epsilon) / 4

    @property
    def a_odd(self) -> float:
        return (3 - 2 * self.epsilon) / 4

    def scaled_first_two(self, x, dtype=np.float64):
        """(v0, v1) = (u e^{x^2/2}, u' e^{x^2/2}) at x (scalar or array), x >= 0."""
        x = np.asarray(x, dtype=dtype)
        z = x * x
        v0 = np.zeros_like(x)
        v1 = np.zeros_like(x)
        if self.b1 != 0:
            m = kummer_m(self.a_even, 0.5, z, dtype=dtype)
            mp = kummer_m_deriv(self.a_even, 0.5, z, dtype=dtype)
            v0 = v0 + self.b1 * m
            v1 = v1 + self.b1 * (2 * x * mp - x * m)
        if self.b2 != 0:
            m = kummer_m(self.a_odd, 1.5, z, dtype=dtype)
            mp = kummer_m_deriv(self.a_odd, 1.5, z, dtype=dtype)
            v0 = v0 + self.b2 * x * m
            v1 = v1 + self.b2 * (m + 2 * z * mp - z * m)
        return v0, v1

    def scaled_derivatives(self, x, max_order, dtype=np.float64):
        v0, v1 = self.scaled_first_two(x, dtype=dtype)
        return derivative_table(v0, v1, self.epsilon, x, max_order, dtype=dtype)


def make_seed(epsilon: float, parity: Parity) -> SeedSolution:
    """Definite-parity seed: odd is x e^{-x^2/2} 1F1((3-2e)/4, 3/2; x^2), even drops the x."""
    if Parity(parity) is Parity.ODD:
        return SeedSolution(epsilon=float(epsilon), b1=0.0, b2=1.0)
    return SeedSolution(epsilon=float(epsilon), b1=1.0, b2=0.0)


def make_seed_general(epsilon: float, b1: float, b2: float) -> SeedSolution:
    """Arbitrary linear combination; indefinite parity unless b1 or b2 vanishes."""
    return SeedSolution(epsilon=float(epsilon), b1=float(b1), b2=float(b2))


def seed_value(u: SeedSolution, x):
    """u(x) for x >= 0."""
    x = np.asarray(x, dtype=float)
    if np.any(x < 0):
        raise DomainError("seed solutions are defined on x >= 0")
    v0, _ = u.scaled_first_two(x)
    val = v0 * np.exp(-x * x / 2)
    return float(val) if val.ndim == 0 else val


def seed_derivs(u: SeedSolution, x, max_order: int):
    """[u(x), u'(x), ..., u^{(max_order)}(x)] at a point (or array) x > 0."""
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise DomainError("seed derivatives require x > 0")
    table = u.scaled_derivatives(x, max_order)
    return table * np.exp(-x * x / 2)
