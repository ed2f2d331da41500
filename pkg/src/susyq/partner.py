"""Partner potentials, transformed eigenfunctions, and added-state candidates.

The k-th order partner of the truncated oscillator V = x^2/2 (x > 0) is

    Vt = V - (d^2/dx^2) ln W(u_1, ..., u_k)

with seed solutions u_j at increasing factorization energies.  Transformed
eigenfunctions use the Crum representation

    psi_t ~ W(u_1, ..., u_k, psi) / W(u_1, ..., u_k)

and added-state candidates are ratios of a one-seed-deleted Wronskian to
the full one.  Everything is evaluated through the exponent-tracked
determinants of the wronskian module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import simpson

from .errors import DegenerateEnergyError, NonNormalizableError, SingularWronskianError
from .seeds import SeedSolution, derivative_table
from .wronskian import (
    WORK_DTYPE,
    SINGULAR_FLOOR,
    log_w_second_deriv,
    scaled_stack,
    sign_log_det_orders,
)


def truncated_oscillator_v(x):
    """The base potential x^2/2 on the half line."""
    x = np.asarray(x, dtype=float)
    return x * x / 2


@dataclass(frozen=True)
class BaseState:
    """Oscillator eigenfunction restricted to x > 0.

    branch 'odd' is psi_n = C_n e^{-x^2/2} H_{2n+1}(x) at E_n = 2n + 3/2,
    the physical states of the truncated oscillator; branch 'even' is
    chi_n = B_n e^{-x^2/2} H_{2n}(x) at 2n + 1/2, which solves the same
    equation but misses the boundary condition at the origin.
    """

    branch: str
    n: int

    def __post_init__(self):
        if self.branch not in ("odd", "even"):
            raise ValueError("branch must be 'odd' or 'even'")
        if self.n < 0:
            raise ValueError("quantum number must be non-negative")

    @property
    def hermite_index(self) -> int:
        return 2 * self.n + 1 if self.branch == "odd" else 2 * self.n

    @property
    def energy(self) -> float:
        return 2 * self.n + (1.5 if self.branch == "odd" else 0.5)

    @property
    def norm_constant(self) -> float:
        m = self.hermite_index
        # C_n = [sqrt(pi) 2^{2n} (2n+1)!]^{-1/2},  B_n = [sqrt(pi) 2^{2n-1} (2n)!]^{-1/2}
        return 1.0 / math.sqrt(math.sqrt(math.pi) * 2 ** (m - 1) * math.factorial(m))

    def _hermite_pair(self, x, dtype):
        """(H_m(x), H_{m-1}(x)) by the three-term recurrence H_{m+1} = 2x H_m - 2m H_{m-1}."""
        x = np.asarray(x, dtype=dtype)
        h_prev = np.zeros_like(x)
        h = np.ones_like(x)
        for m in range(self.hermite_index):
            h, h_prev = 2 * x * h - 2 * m * h_prev, h
        return h, h_prev

    def scaled_first_two(self, x, dtype=np.float64):
        x = np.asarray(x, dtype=dtype)
        h, h_lo = self._hermite_pair(x, dtype)
        c = dtype(self.norm_constant)
        v0 = c * h
        v1 = c * (2 * self.hermite_index * h_lo - x * h)
        return v0, v1

    def scaled_derivatives(self, x, max_order, dtype=np.float64):
        v0, v1 = self.scaled_first_two(x, dtype=dtype)
        return derivative_table(v0, v1, self.energy, x, max_order, dtype=dtype)


def base_state_value(s: BaseState, x):
    """Normalized value of psi_n or chi_n on [0, infinity)."""
    x = np.asarray(x, dtype=float)
    v0, _ = s.scaled_first_two(x)
    val = v0 * np.exp(-x * x / 2)
    return float(val) if val.ndim == 0 else val


@dataclass(frozen=True)
class PartnerPotential:
    """A k-th order partner defined by its ordered seed set (k = 0 is the identity)."""

    seeds: tuple[SeedSolution, ...]

    def __post_init__(self):
        eps = [s.epsilon for s in self.seeds]
        if any(e2 <= e1 for e1, e2 in zip(eps, eps[1:])):
            raise ValueError("factorization energies must be strictly increasing")

    @property
    def order(self) -> int:
        return len(self.seeds)

    @property
    def epsilons(self) -> tuple[float, ...]:
        return tuple(s.epsilon for s in self.seeds)


def partner_v(p: PartnerPotential, x):
    """Vt(x) = x^2/2 - (ln W)''(x) for x > 0."""
    return truncated_oscillator_v(x) - log_w_second_deriv(p.seeds, x)


def transformed_eigenfunction(p: PartnerPotential, s: BaseState, x):
    """Isospectral-branch eigenfunction of the partner Hamiltonian at s.energy.

    Returned with the analytic normalization 2^{-k/2} W(u_1..u_k, psi) /
    (W(u_1..u_k) * prod_j sqrt(|E - eps_j|)), which keeps the state unit-
    normalized on (0, inf); the overall sign is not meaningful.
    """
    k = p.order
    if k == 0:
        return base_state_value(s, x)
    if any(s.energy == e for e in p.epsilons):
        raise DegenerateEnergyError(
            f"state energy {s.energy} coincides with a factorization energy"
        )
    x = np.asarray(x, dtype=float)
    stack = scaled_stack(list(p.seeds) + [s], x, k)
    s_num, l_num = sign_log_det_orders(stack, list(range(k + 1)))
    s_den, l_den = sign_log_det_orders(stack[:, :k], list(range(k)))
    _raise_on_zero(s_den, x)
    # each intertwining order carries a 1/sqrt(2) in the operator convention
    scale = math.fsum(math.log(abs(s.energy - e)) for e in p.epsilons) / 2 + k * math.log(2) / 2
    xl = np.asarray(x, dtype=WORK_DTYPE)
    # Gaussian exponents: numerator e^{-(k+1)x^2/2}, denominator e^{-k x^2/2}
    val = s_num * s_den * np.exp(l_num - l_den - xl * xl / 2 - WORK_DTYPE(scale))
    val = np.asarray(val, dtype=float)
    return float(val) if val.ndim == 0 else val


def added_state(p: PartnerPotential, j: int, x):
    """Unnormalized candidate phi_{eps_j} = W(minor_j) / W at the factorization energy eps_j."""
    k = p.order
    if not 1 <= j <= k:
        raise IndexError(f"seed index {j} outside 1..{k}")
    x = np.asarray(x, dtype=float)
    stack = scaled_stack(list(p.seeds), x, k)
    s_den, l_den = sign_log_det_orders(stack, list(range(k)))
    _raise_on_zero(s_den, x)
    idx = [i for i in range(k) if i != j - 1]
    s_num, l_num = sign_log_det_orders(stack[:, idx], list(range(k - 1)))
    xl = np.asarray(x, dtype=WORK_DTYPE)
    # minor carries e^{-(k-1)x^2/2}, denominator e^{-k x^2/2}: net e^{+x^2/2}
    val = s_num * s_den * np.exp(l_num - l_den + xl * xl / 2)
    val = np.asarray(val, dtype=float)
    return float(val) if val.ndim == 0 else val


def _raise_on_zero(sign, x):
    if np.any(sign == 0):
        raise SingularWronskianError(f"Wronskian vanishes on the requested points near x = {x}")


# non-normalizable candidates have O(1) tails; genuine bound states on a
# domain as short as x_max = 8 can still carry ~1e-7 (e.g. E = 15/2)
TAIL_FRACTION = 1e-6


def normalize(f, grid) -> float:
    """Norm constant N with integral of (N f)^2 over (0, x_max] equal to 1.

    f must be vectorized over x; composite Simpson quadrature on the grid.
    Raises NonNormalizableError when |f(x_max)| exceeds 1e-8 of max|f|.
    """
    xs = np.linspace(grid.x_min, grid.x_max, grid.n + 2)
    vals = np.asarray(f(xs), dtype=float)
    peak = np.abs(vals).max()
    if peak == 0:
        raise NonNormalizableError("function vanishes identically on the grid")
    if abs(vals[-1]) > TAIL_FRACTION * peak:
        raise NonNormalizableError(
            f"tail |f(x_max)| = {abs(vals[-1]):.3e} exceeds {TAIL_FRACTION} * max|f|"
        )
    norm_sq = simpson(vals * vals, x=xs)
    if norm_sq <= 0 or not np.isfinite(norm_sq):
        raise NonNormalizableError("quadrature of f^2 is not positive and finite")
    return 1.0 / math.sqrt(norm_sq)
