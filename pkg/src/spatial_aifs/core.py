"""Intuitionistic fuzzy sequences and the difference operators defined on them.

A pattern is a finite sequence of (mu, nu) pairs over an ordered universe of
discourse. Every sequence carries an implicit baseline element (0, 0) at
index 0 which is never stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

AIFS_TOL = 1e-12


class AifsError(ValueError):
    """Base class for domain errors raised by this package."""


class EmptyInput(AifsError):
    pass


class LengthMismatch(AifsError):
    pass


class NotFuzzy(AifsError):
    pass


class InvalidPartition(AifsError):
    pass


class InvalidElement(AifsError):
    pass


@dataclass(frozen=True)
class AifsElement:
    """One (membership, non-membership) pair."""

    mu: float
    nu: float

    def __post_init__(self):
        mu, nu = float(self.mu), float(self.nu)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "nu", nu)
        problem = element_problem(mu, nu)
        if problem:
            raise InvalidElement(problem)

    @property
    def pi(self) -> float:
        """Hesitancy degree ``1 - (mu + nu)``."""
        return 1.0 - (self.mu + self.nu)

    def as_tuple(self) -> tuple[float, float]:
        return (self.mu, self.nu)


def element_problem(mu: float, nu: float, tol: float = AIFS_TOL) -> str | None:
    """Return a description of why ``(mu, nu)`` is not a valid element, or None."""
    if not (np.isfinite(mu) and np.isfinite(nu)):
        return f"non-finite value (mu={mu}, nu={nu})"
    if mu < -tol or mu > 1 + tol:
        return f"mu={mu} outside [0, 1]"
    if nu < -tol or nu > 1 + tol:
        return f"nu={nu} outside [0, 1]"
    if mu + nu > 1 + tol:
        return f"mu + nu = {mu + nu:.12g} exceeds 1"
    return None


@dataclass(frozen=True)
class AifsPattern:
    label: str
    elements: tuple[AifsElement, ...]

    def __post_init__(self):
        elements = tuple(
            e if isinstance(e, AifsElement) else AifsElement(*e) for e in self.elements
        )
        if not elements:
            raise EmptyInput(f"pattern {self.label!r} has no elements")
        object.__setattr__(self, "elements", elements)

    @classmethod
    def from_pairs(cls, label: str, pairs: Iterable[Sequence[float]]) -> "AifsPattern":
        return cls(label, tuple(AifsElement(float(m), float(n)) for m, n in pairs))

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def pairs(self) -> np.ndarray:
        """``(k, 2)`` float array of (mu, nu) rows."""
        return np.array([e.as_tuple() for e in self.elements], dtype=float)

    @property
    def mu(self) -> np.ndarray:
        return self.pairs[:, 0]

    @property
    def nu(self) -> np.ndarray:
        return self.pairs[:, 1]

    def is_fuzzy(self, tol: float = 1e-9) -> bool:
        return all(abs(e.mu + e.nu - 1.0) <= tol for e in self.elements)


def as_pairs(obj) -> np.ndarray:
    """Coerce a pattern or an array-like of raw pairs to a ``(k, 2)`` float array.

    Raw pairs are not checked against the AIFS constraints; the operators are
    total on real pairs.
    """
    if isinstance(obj, AifsPattern):
        arr = obj.pairs
    else:
        arr = np.asarray(obj, dtype=float)
        if arr.size == 0:
            raise EmptyInput("empty sequence")
        arr = arr.reshape(-1, 2)
    if len(arr) == 0:
        raise EmptyInput("empty sequence")
    return arr


def is_subset(y, x, tol: float = AIFS_TOL) -> bool:
    """Standard AIFS inclusion: ``mu_y <= mu_x`` and ``nu_y >= nu_x`` point-wise."""
    y, x = as_pairs(y), as_pairs(x)
    if len(y) != len(x):
        raise LengthMismatch(f"lengths differ: {len(y)} != {len(x)}")
    return bool(np.all(y[:, 0] <= x[:, 0] + tol) and np.all(y[:, 1] >= x[:, 1] - tol))


# --- operators ---------------------------------------------------------------


def delta(seq: Sequence[float]) -> np.ndarray:
    """First differences of ``seq`` with an implicit leading zero.

    >>> delta([0.5, 0.7, 0.4, 0.7]).round(12).tolist()
    [0.5, 0.2, -0.3, 0.3]
    """
    v = np.asarray(seq, dtype=float).ravel()
    if v.size == 0:
        raise EmptyInput("delta of an empty sequence")
    return np.diff(v, prepend=0.0)


def divided_difference_grid(grid, m: int, n: int) -> float:
    """Mixed second difference ``y[m,n] - y[m,n-1] - y[m-1,n] + y[m-1,n-1]``.

    ``grid[i][j]`` holds ``y_{i+1, j+1}`` (indices are 1-based as in the usual
    double-sequence notation). Row 0 and column 0 are the zero boundary.
    """
    g = np.asarray(grid, dtype=float)
    if g.ndim != 2:
        raise ValueError("grid must be two-dimensional")
    rows, cols = g.shape
    if not (1 <= m <= rows and 1 <= n <= cols):
        raise IndexError(f"({m}, {n}) outside 1..{rows} x 1..{cols}")

    def y(i, j):
        return 0.0 if i == 0 or j == 0 else g[i - 1, j - 1]

    return y(m, n) - y(m, n - 1) - y(m - 1, n) + y(m - 1, n - 1)


def novel_divided_difference(curr, prev) -> float:
    """Step size between two consecutive points of the (mu, nu) plane.

    Computes ``mu_k - mu_{k-1} + nu_{k-1} - nu_k``. Accepts ``AifsElement``
    instances or raw ``(mu, nu)`` pairs.
    """
    cm, cn = curr.as_tuple() if isinstance(curr, AifsElement) else curr
    pm, pn = prev.as_tuple() if isinstance(prev, AifsElement) else prev
    return (cm - pm) + (pn - cn)


PROJECTIONS = ("full", "membership_only", "nonmembership_only")


def novel_dd_sequence(pattern, projection: str = "full") -> np.ndarray:
    """Apply the novel divided difference along a pattern.

    ``membership_only`` zeroes the nu component first (giving ``mu_j - mu_{j-1}``),
    ``nonmembership_only`` zeroes mu (giving ``nu_{j-1} - nu_j``).
    """
    p = as_pairs(pattern)
    d_mu = np.diff(p[:, 0], prepend=0.0)
    g_nu = -np.diff(p[:, 1], prepend=0.0)
    if projection == "full":
        return d_mu + g_nu
    if projection == "membership_only":
        return d_mu
    if projection == "nonmembership_only":
        return g_nu
    raise ValueError(f"unknown projection {projection!r}; expected one of {PROJECTIONS}")


def total_variation(pattern) -> tuple[float, float]:
    """Membership-only and full absolute variation sums of a finite pattern."""
    return (
        float(np.abs(novel_dd_sequence(pattern, "membership_only")).sum()),
        float(np.abs(novel_dd_sequence(pattern, "full")).sum()),
    )
