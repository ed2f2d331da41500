"""Confluent hypergeometric function 1F1(a, b; z) for real parameters.

The direct Taylor series

    1F1(a, b; z) = sum_n (a)_n / (b)_n * z^n / n!

has all terms of one sign (beyond the first few) for z >= 0 and real a,
so it is summed directly there; for z < 0 the alternating series is
catastrophically ill-conditioned and the Kummer reflection
1F1(a, b; z) = e^z * 1F1(b - a, b; -z) is applied instead.

For negative non-integer a the first few terms still alternate and can
tower over a small result (a = -5.3, z = 16 peaks near 1e4 on a value of
0.5), so summation always runs in extended precision and rounds once at
the end.

Terminating cases (a a non-positive integer) are exact up to rounding:
the term recurrence hits an exact zero and the sum is the polynomial value.
"""

from __future__ import annotations

import numpy as np

from .errors import ConvergenceError, InvalidParameterError

TERM_CAP = 10_000


def _is_nonpositive_int(v: float) -> bool:
    return v <= 0 and float(v) == int(v)


def _series(a, b, z, dtype):
    """Sum the Taylor series at z >= 0 by term-ratio recurrence.

    Accumulation happens in longdouble whatever the target dtype; the
    tolerance (hence the term count) still follows the target.
    """
    work = np.longdouble
    one = work(1)
    a = work(a)
    b = work(b)
    z = np.asarray(z, dtype=work)
    term = np.ones_like(z)
    total = np.ones_like(z)
    tol = np.finfo(dtype).eps
    zmax = float(z.max()) if z.size else 0.0
    for n in range(TERM_CAP):
        term = term * ((a + n) / (b + n)) * z / (one * (n + 1))
        total = total + term
        if not np.any(term):
            return total
        # terms only decay monotonically past the series peak near n ~ z
        if n >= zmax and np.all(np.abs(term) <= tol * np.abs(total)):
            return total
    raise ConvergenceError(
        f"1F1 series did not converge within {TERM_CAP} terms "
        f"(a={float(a)}, b={float(b)}, max z={zmax})"
    )


def kummer_m(a: float, b: float, z, dtype=np.float64):
    """Evaluate 1F1(a, b; z) for real a, b and real z (scalar or array).

    Raises InvalidParameterError when b is a non-positive integer and
    ConvergenceError when the series fails to meet tolerance.
    """
    if _is_nonpositive_int(b):
        raise InvalidParameterError(f"1F1 undefined for b = {b} (non-positive integer)")
    z = np.asarray(z, dtype=dtype)
    scalar = z.ndim == 0
    z = np.atleast_1d(z)
    out = np.empty_like(z)
    neg = z < 0
    if neg.any():
        out[neg] = np.exp(z[neg]) * _series(b - a, b, -z[neg], dtype)
    pos = ~neg
    if pos.any():
        out[pos] = _series(a, b, z[pos], dtype)
    if scalar:
        return out[0] if dtype is not np.float64 else float(out[0])
    return out


def kummer_m_deriv(a: float, b: float, z, n: int = 1, dtype=np.float64):
    """n-th derivative of 1F1 with respect to z.

    Uses d^n/dz^n 1F1(a,b;z) = [(a)_n / (b)_n] 1F1(a+n, b+n; z),
    so b, b+1, ..., b+n-1 must all avoid the non-positive integers.
    """
    if n < 0:
        raise InvalidParameterError("derivative order must be non-negative")
    coeff = dtype(1)
    for i in range(n):
        if _is_nonpositive_int(b + i):
            raise InvalidParameterError(
                f"1F1 derivative undefined: b + {i} = {b + i} is a non-positive integer"
            )
        coeff = coeff * dtype(a + i) / dtype(b + i)
    return coeff * kummer_m(a + n, b + n, z, dtype=dtype)
