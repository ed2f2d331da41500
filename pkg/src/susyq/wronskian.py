"""Wronskians of seed sets and their analytic logarithmic derivatives.

Each seed carries a factor e^{-x^2/2}, so a k-seed Wronskian carries
e^{-k x^2/2}; at x = 10, k = 8 that is already e^{-400}.  All determinants
are therefore evaluated on Gaussian-stripped derivative tables and kept in
(sign, log|det|) form, with the stripped exponent restored only where it
does not cancel.

W' and W'' are themselves determinants with shifted derivative orders:

    W  = det(orders 0..k-1)
    W' = det(orders 0..k-2, k)
    W'' = det(orders 0..k-3, k-1, k) + det(orders 0..k-2, k+1)

so (ln W)'' = W''/W - (W'/W)^2 needs no numerical differentiation.

The elimination kernel runs in extended precision (numpy longdouble) by
default: the W''/W ratio sits under a (W'/W)^2 ~ (2kx)^2 subtraction, and
plain float64 LU leaves ~1e-7 noise in the partner potential at x ~ 6,
an order above what the closed-form checks allow.
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError, SingularWronskianError

WORK_DTYPE = np.longdouble

# |W| below this is treated as an exact zero of the transformation
SINGULAR_FLOOR = 1e-300


def _slogdet_batch(mats):
    """(sign, log|det|) of a (..., k, k) stack by LU with partial pivoting.

    Columns are equilibrated by their max modulus first (tracked in the
    log) so pivot selection is not skewed by the x^n growth of higher
    derivative rows.  Works for any float dtype, unlike LAPACK.
    """
    a = np.array(mats, copy=True)
    *lead, k, _ = a.shape
    a = a.reshape(-1, k, k)
    npts = a.shape[0]
    dt = a.dtype
    sign = np.ones(npts, dtype=dt)
    logd = np.zeros(npts, dtype=dt)

    colscale = np.abs(a).max(axis=1)
    zero_col = colscale == 0
    sign[zero_col.any(axis=1)] = 0
    colscale[colscale == 0] = 1
    a /= colscale[:, None, :]
    with np.errstate(divide="ignore"):
        logd += np.log(colscale).sum(axis=1)

    rows = np.arange(npts)
    for c in range(k):
        piv = np.abs(a[:, c:, c]).argmax(axis=1) + c
        swap = piv != c
        sign[swap] = -sign[swap]
        tmp = a[rows, piv].copy()
        a[rows, piv] = a[:, c]
        a[:, c] = tmp
        p = a[:, c, c]
        sign = sign * np.sign(p)
        with np.errstate(divide="ignore", invalid="ignore"):
            logd += np.log(np.abs(p))
            if c + 1 < k:
                f = np.where(p[:, None] != 0, a[:, c + 1 :, c] / p[:, None], 0)
                a[:, c + 1 :, c + 1 :] -= f[:, :, None] * a[:, None, c, c + 1 :]
    logd[sign == 0] = -np.inf
    return sign.reshape(lead), logd.reshape(lead)


def _check_domain(x):
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise DomainError("Wronskian evaluation requires x > 0")
    return x


def scaled_stack(funcs, x, max_order, dtype=WORK_DTYPE):
    """Derivative table of shape (max_order+1, len(funcs)) + x.shape, Gaussian stripped."""
    return np.stack(
        [f.scaled_derivatives(x, max_order, dtype=dtype) for f in funcs], axis=1
    )


def sign_log_det_orders(stack, orders):
    """(sign, log) of det[ v_{orders[i]} of func j ] from a precomputed stack."""
    k = stack.shape[1]
    if len(orders) != k:
        raise ValueError("need as many derivative orders as functions")
    if list(orders) != sorted(set(orders)):
        raise ValueError("derivative orders must be strictly increasing")
    if k == 0:
        shape = stack.shape[2:]
        return np.ones(shape), np.zeros(shape)
    # stack axes: (order, func, *pts) -> (*pts, row=order, col=func)
    sel = stack[list(orders)]
    mats = np.moveaxis(sel, (0, 1), (-2, -1))
    return _slogdet_batch(mats)


def det_orders(seeds, orders, x):
    """Determinant with rows u_j^{(orders[i])}(x), Gaussian factor included."""
    x = _check_domain(x)
    stack = scaled_stack(seeds, x, max(orders, default=0))
    sign, logd = sign_log_det_orders(stack, list(orders))
    k = len(seeds)
    val = sign * np.exp(logd - k * np.asarray(x, dtype=WORK_DTYPE) ** 2 / 2)
    val = np.asarray(val, dtype=float)
    return float(val) if val.ndim == 0 else val


def wronskian(seeds, x):
    """W(u_1, ..., u_k)(x); the empty Wronskian is 1."""
    k = len(seeds)
    if k == 0:
        x = _check_domain(x)
        return 1.0 if x.ndim == 0 else np.ones_like(x)
    return det_orders(seeds, list(range(k)), x)


def wronskian_minor(seeds, j: int, x):
    """Wronskian of the seed set with the j-th seed (1-based) deleted."""
    k = len(seeds)
    if not 1 <= j <= k:
        raise IndexError(f"seed index {j} outside 1..{k}")
    return wronskian([s for i, s in enumerate(seeds, start=1) if i != j], x)


def _log_w_ratios(stack):
    """(ln W)'' and W'/W from a stack holding orders 0..k+1 of k functions."""
    k = stack.shape[1]
    sw, lw = sign_log_det_orders(stack, list(range(k)))
    sw1, lw1 = sign_log_det_orders(stack, list(range(k - 1)) + [k])
    sb, lb = sign_log_det_orders(stack, list(range(k - 1)) + [k + 1])
    # a vanished W has lw = -inf and the ratios go NaN; the caller turns
    # those points into SingularWronskianError
    with np.errstate(over="ignore", invalid="ignore"):
        r1 = sw1 * sw * np.exp(lw1 - lw)
        r2 = sb * sw * np.exp(lb - lw)
        if k >= 2:
            sa, la = sign_log_det_orders(stack, list(range(k - 2)) + [k - 1, k])
            r2 = r2 + sa * sw * np.exp(la - lw)
    return (r2 - r1 * r1, r1, sw, lw)


def log_w_second_deriv(seeds, x):
    """(d^2/dx^2) ln|W(u_1, ..., u_k)| evaluated analytically."""
    x = _check_domain(x)
    k = len(seeds)
    if k == 0:
        return 0.0 if x.ndim == 0 else np.zeros_like(x)
    stack = scaled_stack(seeds, x, k + 1)
    result, _, sw, lw = _log_w_ratios(stack)
    true_log = lw - k * np.asarray(x, dtype=WORK_DTYPE) ** 2 / 2
    bad = (sw == 0) | (true_log < np.log(SINGULAR_FLOOR))
    if np.any(bad):
        where = np.asarray(x)[np.atleast_1d(bad)] if np.ndim(x) else x
        raise SingularWronskianError(f"Wronskian vanishes near x = {where}")
    result = np.asarray(result, dtype=float)
    return float(result) if result.ndim == 0 else result
