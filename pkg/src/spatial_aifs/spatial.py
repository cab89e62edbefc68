"""Three-branched spatial distances, their norms and the spatial similarity measure.

All functions accept either ``AifsPattern`` objects or raw ``(k, 2)`` arrays of
(mu, nu) rows. Raw arrays are not validated, which lets the algebraic laws be
exercised on translated or scaled sequences that leave the unit simplex.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .core import EmptyInput, LengthMismatch, NotFuzzy, as_pairs

FUZZY_TOL = 1e-9


class SpatialValue(NamedTuple):
    """Branch triple ordered (membership dominant, non-membership dominant, equidominant)."""

    md: float
    nmd: float
    ed: float

    def complement(self) -> "SpatialValue":
        return SpatialValue(1.0 - self.md, 1.0 - self.nmd, 1.0 - self.ed)


def _steps(p: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # baseline (0, 0) at index 0
    d_mu = np.diff(p[:, 0], prepend=0.0)
    g_nu = -np.diff(p[:, 1], prepend=0.0)
    return d_mu, g_nu


def _paired(y, x) -> tuple[np.ndarray, np.ndarray]:
    y, x = as_pairs(y), as_pairs(x)
    if len(y) != len(x):
        raise LengthMismatch(f"lengths differ: {len(y)} != {len(x)}")
    return y, x


def branch_terms(y, x) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Per-index absolute differences of the membership, non-membership and full steps."""
    y, x = _paired(y, x)
    dy, gy = _steps(y)
    dx, gx = _steps(x)
    mem = np.abs(dy - dx)
    non = np.abs(gy - gx)
    full = np.abs((dy + gy) - (dx + gx))
    return mem, non, full


def spatial_distance(y, x) -> SpatialValue:
    mem, non, full = branch_terms(y, x)
    scale = 4.0 * len(mem)
    return SpatialValue(
        float((mem + full).sum() / scale),
        float((non + full).sum() / scale),
        float((mem + non).sum() / scale),
    )


def spatial_similarity(y, x) -> SpatialValue:
    """Spatial similarity measure: one minus each distance branch."""
    return spatial_distance(y, x).complement()


def spatial_norm(y) -> SpatialValue:
    """The three norms induced by the spatial distances (distance to the zero pattern)."""
    p = as_pairs(y)
    return spatial_distance(p, np.zeros_like(p))


def fuzzy_reduced_distance(y, x, tol: float = FUZZY_TOL) -> tuple[float, float]:
    """Two-branched distance for ordinary fuzzy sets (``mu + nu = 1`` everywhere).

    Returns ``(d1, d2)`` with ``d1 = sum|dmu_y - dmu_x| / 4k`` and ``d2 = 2 * d1``.
    """
    y, x = _paired(y, x)
    for name, p in (("y", y), ("x", x)):
        bad = np.flatnonzero(np.abs(p.sum(axis=1) - 1.0) > tol)
        if bad.size:
            raise NotFuzzy(f"{name}[{bad[0]}]: mu + nu = {p[bad[0]].sum():.12g} != 1")
    mem = np.abs(_steps(y)[0] - _steps(x)[0]).sum()
    k = len(y)
    return float(mem / (4.0 * k)), float(mem / (2.0 * k))


def real_reduced_distance(y, x) -> float:
    """Univalued bounded-variation distance ``sum|dy_j - dx_j| / 2k`` on real sequences."""
    y = np.asarray(y, dtype=float).ravel()
    x = np.asarray(x, dtype=float).ravel()
    if len(y) != len(x):
        raise LengthMismatch(f"lengths differ: {len(y)} != {len(x)}")
    if len(y) == 0:
        raise EmptyInput("empty sequence")
    diff = np.diff(y, prepend=0.0) - np.diff(x, prepend=0.0)
    return float(np.abs(diff).sum() / (2.0 * len(y)))
