"""Numeric symmetric eigensolver and spectrum bookkeeping.

The eigensolver is a cyclic Jacobi iteration.  It is the numeric oracle that
every exact formula in the package is checked against, so it must not share
any machinery with the exact path: no characteristic polynomials, no closed
forms, just plane rotations until the off-diagonal mass is gone.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

import numpy as np

from .exactmath import ExactSpectrum

__all__ = [
    "Spectrum",
    "eig_symmetric",
    "group_spectrum",
    "spectrum_matches",
]


class Spectrum:
    """Grouped numeric spectrum: (value, multiplicity) pairs, descending."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[tuple[float, int]]):
        es = [(float(v), int(m)) for v, m in entries]
        if any(m < 1 for _, m in es):
            raise ValueError("multiplicities must be positive")
        es.sort(key=lambda vm: vm[0], reverse=True)
        if any(es[i][0] <= es[i + 1][0] for i in range(len(es) - 1)):
            raise ValueError("grouped values must be strictly decreasing")
        self.entries: tuple[tuple[float, int], ...] = tuple(es)

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.entries)

    @property
    def distinct_count(self) -> int:
        return len(self.entries)

    def as_floats(self) -> list[float]:
        out: list[float] = []
        for v, m in self.entries:
            out.extend([v] * m)
        return out

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        if not isinstance(other, Spectrum):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self):
        inner = ", ".join(f"{v:.6g}^({m})" for v, m in self.entries)
        return f"Spectrum{{{inner}}}"

    def to_json(self) -> list[dict]:
        return [{"value": v, "mult": m} for v, m in self.entries]


def eig_symmetric(M, rel_tol: float = 1e-12, max_sweeps: int = 100) -> np.ndarray:
    """All eigenvalues of a symmetric matrix, ascending, by cyclic Jacobi.

    Sweeps rotate away every off-diagonal entry in row order until the
    off-diagonal Frobenius norm drops below rel_tol * ||M||_F.  Failure to
    converge within max_sweeps cannot happen for symmetric input and is
    reported as an internal error.
    """
    A = np.asarray(M)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("eig_symmetric needs a square matrix")
    if not np.array_equal(A, A.T):
        raise ValueError("eig_symmetric needs a symmetric matrix")
    A = A.astype(float)
    n = A.shape[0]
    if n == 1:
        return A.diagonal().copy()
    target = rel_tol * np.linalg.norm(A)
    # Entries below droptol are zeroed without rotating; the total mass so
    # dropped stays far below the convergence target.
    droptol = target / (4 * n)
    for _ in range(max_sweeps):
        off = A.copy()
        np.fill_diagonal(off, 0.0)
        if np.linalg.norm(off) <= target:
            ev = A.diagonal().copy()
            ev.sort()
            return ev
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) <= droptol:
                    A[p, q] = 0.0
                    A[q, p] = 0.0
                    continue
                tau = (A[q, q] - A[p, p]) / (2.0 * apq)
                t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.hypot(1.0, t)
                s = t * c
                rp = A[p].copy()
                rq = A[q].copy()
                A[p] = c * rp - s * rq
                A[q] = s * rp + c * rq
                cp = A[:, p].copy()
                cq = A[:, q].copy()
                A[:, p] = c * cp - s * cq
                A[:, q] = s * cp + c * cq
                A[p, q] = 0.0
                A[q, p] = 0.0
    raise RuntimeError("Jacobi iteration failed to converge (internal error)")


def group_spectrum(values: Sequence[float], tol: float = 1e-7) -> Spectrum:
    """Cluster sorted eigenvalues into (value, multiplicity) groups.

    Neighbors join the current group while their gap is at most
    tol * max(1, |value|).  Input must be sorted ascending.
    """
    vals = [float(v) for v in values]
    if any(vals[i] > vals[i + 1] for i in range(len(vals) - 1)):
        raise ValueError("group_spectrum expects ascending input")
    groups: list[tuple[float, int]] = []
    start = 0
    for i in range(1, len(vals) + 1):
        if i == len(vals) or vals[i] - vals[i - 1] > tol * max(1.0, abs(vals[i])):
            chunk = vals[start:i]
            groups.append((sum(chunk) / len(chunk), len(chunk)))
            start = i
    return Spectrum(groups)


def spectrum_matches(numeric: Spectrum, exact: ExactSpectrum, tol: float = 1e-6) -> bool:
    """True when a multiplicity-preserving pairing within tol exists.

    Both sides are expanded to full sorted eigenvalue lists and compared
    pointwise, which decides the interval-matching problem exactly.
    """
    num = sorted(numeric.as_floats())
    exa = sorted(exact.as_floats())
    if len(num) != len(exa):
        return False
    return all(abs(a - b) <= tol for a, b in zip(num, exa))
