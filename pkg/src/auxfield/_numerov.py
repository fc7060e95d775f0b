"""Numerov sweeps for ``phi'' = (A - E B) phi`` on a uniform grid (numba kernels)."""

import numpy as np
from numba import njit

_BIG = 1e150


@njit(cache=True)
def count_nodes(A, B, E, h, phi0, phi1):
    """Outward sweep; returns (sign changes, last value, previous value).

    Values are periodically rescaled, so only signs and ratios are meaningful.
    """
    c = h * h / 12.0
    n = A.shape[0]
    y_prev = phi0
    y = phi1
    w_prev = 1.0 - c * (A[0] - E * B[0])
    w = 1.0 - c * (A[1] - E * B[1])
    nodes = 0
    if y_prev * y < 0.0:
        nodes += 1
    for i in range(1, n - 1):
        w_next = 1.0 - c * (A[i + 1] - E * B[i + 1])
        y_next = ((12.0 - 10.0 * w) * y - w_prev * y_prev) / w_next
        if y_next * y < 0.0 or (y_next == 0.0 and y != 0.0):
            nodes += 1
        y_prev, y = y, y_next
        w_prev, w = w, w_next
        if abs(y) > _BIG:
            y_prev /= _BIG
            y /= _BIG
    return nodes, y, y_prev


@njit(cache=True)
def sweep_out(A, B, E, h, phi0, phi1, stop):
    """Outward sweep storing ``phi[0..stop]`` without rescaling."""
    c = h * h / 12.0
    phi = np.zeros(stop + 1)
    phi[0] = phi0
    phi[1] = phi1
    for i in range(1, stop):
        w_prev = 1.0 - c * (A[i - 1] - E * B[i - 1])
        w = 1.0 - c * (A[i] - E * B[i])
        w_next = 1.0 - c * (A[i + 1] - E * B[i + 1])
        phi[i + 1] = ((12.0 - 10.0 * w) * phi[i] - w_prev * phi[i - 1]) / w_next
    return phi


@njit(cache=True)
def sweep_in(A, B, E, h, start):
    """Inward sweep from a Dirichlet end down to index ``start``; full-length output."""
    c = h * h / 12.0
    n = A.shape[0]
    phi = np.zeros(n)
    phi[n - 1] = 0.0
    phi[n - 2] = 1e-30
    for i in range(n - 2, start, -1):
        w_next = 1.0 - c * (A[i + 1] - E * B[i + 1])
        w = 1.0 - c * (A[i] - E * B[i])
        w_prev = 1.0 - c * (A[i - 1] - E * B[i - 1])
        phi[i - 1] = ((12.0 - 10.0 * w) * phi[i] - w_next * phi[i + 1]) / w_prev
        if abs(phi[i - 1]) > _BIG:
            for j in range(i - 1, n):
                phi[j] /= _BIG
    return phi
