"""Independent finite-difference verification of claimed spectra.

-1/2 f'' + V f = E f is discretized on a uniform grid over (x_min, x_max)
with Dirichlet values at both ends (x_min slightly above 0 keeps 1/x^2
terms of partner potentials finite).  Low eigenvalues come from bisection
on Sturm-sequence negative-pivot counts, which is robust against the huge
diagonal entries near the origin; eigenvectors are never computed here,
claimed eigenfunctions are checked through their pointwise residual.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, PotentialSingularityError

POTENTIAL_CAP = 1e12
RESIDUAL_POTENTIAL_CAP = 1e6
BRACKET_WIDTH = 1e-9


@dataclass(frozen=True)
class Grid:
    """Uniform interior grid for the Dirichlet problem on (x_min, x_max)."""

    x_min: float = 1e-4
    x_max: float = 10.0
    n: int = 4000

    def __post_init__(self):
        if self.x_min <= 0 or self.x_max <= self.x_min:
            raise ValueError("need 0 < x_min < x_max")
        if self.n < 100:
            raise ValueError("grid needs at least 100 interior points")

    @property
    def h(self) -> float:
        return (self.x_max - self.x_min) / (self.n + 1)

    @property
    def points(self) -> np.ndarray:
        return self.x_min + self.h * np.arange(1, self.n + 1)


@dataclass(frozen=True)
class Tridiag:
    """Symmetric tridiagonal operator: diag (n values) and off-diagonal (n-1 values)."""

    diag: np.ndarray
    off: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "diag", np.asarray(self.diag, dtype=float))
        object.__setattr__(self, "off", np.asarray(self.off, dtype=float))
        if self.off.shape != (max(self.diag.size - 1, 0),):
            raise ValueError("off-diagonal must have n-1 entries")


def discretize(V, g: Grid) -> Tridiag:
    """Three-point stencil: diag_i = 1/h^2 + V(x_i), off = -1/(2 h^2)."""
    x = g.points
    vals = np.asarray(V(x), dtype=float)
    if not np.all(np.isfinite(vals)) or np.any(np.abs(vals) > POTENTIAL_CAP):
        worst = x[np.argmax(np.where(np.isfinite(vals), np.abs(vals), np.inf))]
        raise PotentialSingularityError(f"potential exceeds {POTENTIAL_CAP:g} near x = {worst}")
    h2 = g.h * g.h
    return Tridiag(diag=1.0 / h2 + vals, off=np.full(g.n - 1, -0.5 / h2))


def sturm_count(t: Tridiag, shift: float) -> int:
    """Number of eigenvalues of t strictly below shift (negative pivots of t - shift*I)."""
    diag = t.diag
    off = t.off
    tiny = np.finfo(float).tiny
    count = 0
    d = 1.0
    for i in range(diag.size):
        q = diag[i] - shift
        if i:
            q -= off[i - 1] * off[i - 1] / d
        if q == 0.0:
            q = tiny
        if q < 0.0:
            count += 1
        d = q
    return count


def _gershgorin_bounds(t: Tridiag) -> tuple[float, float]:
    r = np.zeros_like(t.diag)
    if t.off.size:
        r[:-1] += np.abs(t.off)
        r[1:] += np.abs(t.off)
    return float((t.diag - r).min()), float((t.diag + r).max())


def eigenvalues_low(t: Tridiag, count: int) -> list[float]:
    """The `count` smallest eigenvalues, each bracketed to width 1e-9 by bisection."""
    if count < 1 or count > 20:
        raise ValueError("count must lie in 1..20")
    if count > t.diag.size:
        raise ValueError("cannot request more eigenvalues than matrix dimension")
    lo0, hi0 = _gershgorin_bounds(t)
    out = []
    for idx in range(1, count + 1):
        lo, hi = lo0, hi0
        while hi - lo > BRACKET_WIDTH:
            mid = 0.5 * (lo + hi)
            if sturm_count(t, mid) >= idx:
                hi = mid
            else:
                lo = mid
        out.append(0.5 * (lo + hi))
    return out


def residual(V, f, E: float, sample) -> float:
    """max_i |(-1/2 f'' + (V - E) f)(x_i)| / max(1, |f(x_i)|) with a 5-point f'' stencil."""
    sample = np.asarray(sample, dtype=float)
    if sample.size == 0:
        raise ValueError("need at least one sample point")
    vpts = np.asarray(V(sample), dtype=float)
    if np.any(np.abs(vpts) >= RESIDUAL_POTENTIAL_CAP):
        raise DomainError("sample points must stay away from potential poles")
    h = 1e-3
    if np.any(sample - 2 * h <= 0):
        raise DomainError("sample points must be interior (x > 2e-3)")
    f0 = np.asarray(f(sample), dtype=float)
    fpp = (
        -f(sample + 2 * h)
        + 16 * f(sample + h)
        - 30 * f0
        + 16 * f(sample - h)
        - f(sample - 2 * h)
    ) / (12 * h * h)
    res = np.abs(-0.5 * fpp + (vpts - E) * f0)
    return float((res / np.maximum(1.0, np.abs(f0))).max())
