"""Uniform interface over the spatial similarity branches and classical AIFS similarity measures.

Notation inside the measure functions: ``(a, b)`` are the (mu, nu) rows of the
first pattern and ``(c, d)`` those of the second.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, NamedTuple

import numpy as np

from .core import InvalidPartition, LengthMismatch, as_pairs
from .spatial import spatial_similarity


class MeasureId(str, Enum):
    S_Lp = "S_Lp"
    S_Bd = "S_Bd"
    S_C = "S_C"
    S_Dc = "S_Dc"
    S_Fz = "S_Fz"
    S_Hk = "S_Hk"
    S_Hy1_1 = "S_Hy1_1"
    S_Hy2_1 = "S_Hy2_1"
    S_Hy3_1 = "S_Hy3_1"
    S_Hy1_2 = "S_Hy1_2"
    S_Hy2_2 = "S_Hy2_2"
    S_Hy3_2 = "S_Hy3_2"
    S_Hy_3 = "S_Hy_3"
    S_Lzd = "S_Lzd"
    S_Ls = "S_Ls"
    S_M = "S_M"
    S_Hm = "S_Hm"
    S_Az_p = "S_Az_p"
    S_Az_p_h = "S_Az_p_h"
    SSM_MD = "SSM_MD"
    SSM_NMD = "SSM_NMD"
    SSM_ED = "SSM_ED"

    @classmethod
    def parse(cls, text: str) -> "MeasureId":
        key = text.strip().lower()
        for m in cls:
            if m.value.lower() == key:
                return m
        raise KeyError(text)


SSM_IDS = (MeasureId.SSM_MD, MeasureId.SSM_NMD, MeasureId.SSM_ED)


@dataclass(frozen=True)
class MeasureParams:
    """Free parameters of the parameterised measures.

    ``delta_set`` holds the 1-based indices handled by differences in ``S_Az_p_h``
    and ``gamma_set`` the indices compared directly. When ``gamma_set`` is None
    it is taken as the complement of ``delta_set``.
    """

    p: int = 1
    z: int = 2
    delta_set: frozenset[int] | None = None
    gamma_set: frozenset[int] | None = None

    def __post_init__(self):
        if int(self.p) != self.p or self.p < 1:
            raise ValueError(f"p must be an integer >= 1, got {self.p}")
        if int(self.z) != self.z or self.z < 2:
            raise ValueError(f"z must be an integer >= 2, got {self.z}")
        if self.delta_set is not None:
            object.__setattr__(self, "delta_set", frozenset(int(i) for i in self.delta_set))
        if self.gamma_set is not None:
            object.__setattr__(self, "gamma_set", frozenset(int(i) for i in self.gamma_set))


class CatalogEntry(NamedTuple):
    id: MeasureId
    name: str
    source: str
    params: tuple[str, ...]


@dataclass(frozen=True)
class MeasureSpec:
    """A measure together with the parameters it is evaluated with."""

    id: MeasureId
    params: MeasureParams = field(default_factory=MeasureParams)

    @property
    def label(self) -> str:
        names = CATALOG[self.id].params
        parts = []
        if "p" in names:
            parts.append(f"p={self.params.p}")
        if "z" in names:
            parts.append(f"z={self.params.z}")
        if "partition" in names and self.params.delta_set is not None:
            parts.append("delta={" + ",".join(map(str, sorted(self.params.delta_set))) + "}")
        return self.id.value + (f"({', '.join(parts)})" if parts else "")


# --- measures ----------------------------------------------------------------


def _cols(y, x):
    y, x = as_pairs(y), as_pairs(x)
    if len(y) != len(x):
        raise LengthMismatch(f"lengths differ: {len(y)} != {len(x)}")
    return y[:, 0], y[:, 1], x[:, 0], x[:, 1]


def _root(v: float, p: int) -> float:
    # guards against -0.0 and tiny negative rounding before fractional powers
    return max(v, 0.0) ** (1.0 / p)


def s_lp(y, x, p=1):
    a, b, c, d = _cols(y, x)
    k = len(a)
    s = (np.abs(a - c) ** p + np.abs(b - d) ** p).sum()
    return 1.0 - _root(s / (2 * k), p)


def s_bd(y, x, p=1, z=2):
    a, b, c, d = _cols(y, x)
    k = len(a)
    da, db = a - c, b - d
    s = (np.abs(z * da - db) ** p + np.abs(z * db - da) ** p).sum()
    return 1.0 - _root(s / (2 * k * (z + 1) ** p), p)


def s_c(y, x):
    a, b, c, d = _cols(y, x)
    return 1.0 - np.abs((a - b) - (c - d)).sum() / (2 * len(a))


def s_dc(y, x, p=1):
    a, b, c, d = _cols(y, x)
    m_y = (a + 1 - b) / 2
    m_x = (c + 1 - d) / 2
    return 1.0 - _root((np.abs(m_y - m_x) ** p).sum() / len(a), p)


def s_fz(y, x):
    # second term uses |a-c| + |b-d|; see README "Known discrepancies"
    a, b, c, d = _cols(y, x)
    s = (np.abs((a - b) - (c - d)) + np.abs(a - c) + np.abs(b - d)).sum()
    return 1.0 - s / (4 * len(a))


def s_hk(y, x):
    a, b, c, d = _cols(y, x)
    return 1.0 - (np.abs(a - c) + np.abs(b - d)).sum() / (2 * len(a))


def s_hy1_1(y, x):
    a, b, c, d = _cols(y, x)
    return 1.0 - np.maximum(np.abs(a - c), np.abs(b - d)).sum() / len(a)


def s_hy2_1(y, x):
    s = s_hy1_1(y, x)
    return (math.exp(s - 1) - math.exp(-1)) / (1 - math.exp(-1))


def s_hy3_1(y, x):
    s = s_hy1_1(y, x)
    return s / (2 - s)


def _hung_dp(y, x, p):
    a, b, c, d = _cols(y, x)
    return _root((np.abs(a - c) ** p + np.abs(b - d) ** p).sum(), p) / len(a)


def s_hy1_2(y, x, p=1):
    r = 2 ** (1 / p)
    return (r - _hung_dp(y, x, p)) / r


def s_hy2_2(y, x, p=1):
    r = 2 ** (1 / p)
    dp = _hung_dp(y, x, p)
    return (math.exp(-dp) - math.exp(-r)) / (1 - math.exp(-r))


def s_hy3_2(y, x, p=1):
    r = 2 ** (1 / p)
    dp = _hung_dp(y, x, p)
    return (r - dp) / (r * (1 + dp))


def s_hy_3(y, x):
    a, b, c, d = _cols(y, x)
    return float((1 - 0.5 * (np.abs(a - c) + np.abs(b - d))).mean())


def s_lzd(y, x):
    return s_lp(y, x, 2)


def s_ls(y, x, p=1):
    a, b, c, d = _cols(y, x)
    s_j = np.abs(a - c) / 2
    t_j = np.abs((1 - b) - (1 - d)) / 2
    return 1.0 - _root(((s_j + t_j) ** p).sum() / len(a), p)


def s_m(y, x, p=1):
    a, b, c, d = _cols(y, x)
    k = len(a)
    rho1 = 1.0 - _root((np.abs(a - c) ** p).sum() / k, p)
    rho2 = 1.0 - _root((np.abs(b - d) ** p).sum() / k, p)
    return 0.5 * (rho1 + rho2)


def s_hm(y, x):
    a, b, c, d = _cols(y, x)
    s = np.abs(a - c) + np.abs(b - d) + np.abs(np.maximum(a, d) - np.maximum(c, b))
    return 1.0 - s.sum() / (3 * len(a))


def s_az_p(y, x, p=1):
    a, b, c, d = _cols(y, x)
    k = len(a)
    # first index enters raw, the rest through first differences
    da = np.diff(a, prepend=0.0) - np.diff(c, prepend=0.0)
    db = np.diff(b, prepend=0.0) - np.diff(d, prepend=0.0)
    s = (np.abs(da) ** p + np.abs(db) ** p).sum()
    return 1.0 - _root(s, p) / (2 * k) ** (1 / p)


def s_az_p_h(y, x, p=1, delta_set=None, gamma_set=None):
    a, b, c, d = _cols(y, x)
    k = len(a)
    delta_idx, gamma_idx = check_partition(delta_set, k, gamma_set)
    s = 0.0
    if delta_idx:
        first = delta_idx[0] - 1
        s += abs(a[first] - c[first]) ** p + abs(b[first] - d[first]) ** p
        for j in delta_idx[1:]:
            i = j - 1
            da = (a[i] - a[i - 1]) - (c[i] - c[i - 1])
            db = (b[i] - b[i - 1]) - (d[i] - d[i - 1])
            s += abs(da) ** p + abs(db) ** p
    for j in gamma_idx:
        i = j - 1
        s += abs(a[i] - c[i]) ** p + abs(b[i] - d[i]) ** p
    return 1.0 - _root(s, p) / (2 * k) ** (1 / p)


def check_partition(delta_set, k: int, gamma_set=None) -> tuple[list[int], list[int]]:
    """Validate an index partition of ``1..k``; return both halves sorted."""
    if delta_set is None:
        raise InvalidPartition("S_Az_p_h needs an index partition (delta set)")
    delta = sorted({int(i) for i in delta_set})
    full = set(range(1, k + 1))
    if gamma_set is None:
        gamma = sorted(full - set(delta))
    else:
        gamma = sorted({int(i) for i in gamma_set})
    bad = [i for i in delta + gamma if i not in full]
    if bad:
        raise InvalidPartition(f"partition indices {bad} outside 1..{k}")
    if set(delta) & set(gamma):
        raise InvalidPartition(f"index sets overlap at {sorted(set(delta) & set(gamma))}")
    if set(delta) | set(gamma) != full:
        raise InvalidPartition(f"index sets miss {sorted(full - set(delta) - set(gamma))}")
    return delta, gamma


def _ssm_branch(i):
    def f(y, x):
        return spatial_similarity(y, x)[i]

    return f


_FUNCS: dict[MeasureId, Callable] = {
    MeasureId.S_Lp: s_lp,
    MeasureId.S_Bd: s_bd,
    MeasureId.S_C: s_c,
    MeasureId.S_Dc: s_dc,
    MeasureId.S_Fz: s_fz,
    MeasureId.S_Hk: s_hk,
    MeasureId.S_Hy1_1: s_hy1_1,
    MeasureId.S_Hy2_1: s_hy2_1,
    MeasureId.S_Hy3_1: s_hy3_1,
    MeasureId.S_Hy1_2: s_hy1_2,
    MeasureId.S_Hy2_2: s_hy2_2,
    MeasureId.S_Hy3_2: s_hy3_2,
    MeasureId.S_Hy_3: s_hy_3,
    MeasureId.S_Lzd: s_lzd,
    MeasureId.S_Ls: s_ls,
    MeasureId.S_M: s_m,
    MeasureId.S_Hm: s_hm,
    MeasureId.S_Az_p: s_az_p,
    MeasureId.S_Az_p_h: s_az_p_h,
    MeasureId.SSM_MD: _ssm_branch(0),
    MeasureId.SSM_NMD: _ssm_branch(1),
    MeasureId.SSM_ED: _ssm_branch(2),
}

CATALOG: dict[MeasureId, CatalogEntry] = {
    e.id: e
    for e in [
        CatalogEntry(MeasureId.S_Lp, "Normalised Minkowski", "Atanassov", ("p",)),
        CatalogEntry(MeasureId.S_Bd, "Boran-Akay", "Boran et al.", ("p", "z")),
        CatalogEntry(MeasureId.S_C, "Chen score difference", "Chen et al.", ()),
        CatalogEntry(MeasureId.S_Dc, "Dengfeng-Chuntian median", "Dengfeng et al.", ("p",)),
        CatalogEntry(MeasureId.S_Fz, "Fan-Zhangyan", "Fan et al.", ()),
        CatalogEntry(MeasureId.S_Hk, "Hong-Kim normalised Hamming", "Hong et al.", ()),
        CatalogEntry(MeasureId.S_Hy1_1, "Hung-Yang max distance", "Hung et al. (Hausdorff)", ()),
        CatalogEntry(MeasureId.S_Hy2_1, "Hung-Yang exponential", "Hung et al. (Hausdorff)", ()),
        CatalogEntry(MeasureId.S_Hy3_1, "Hung-Yang rational", "Hung et al. (Hausdorff)", ()),
        CatalogEntry(MeasureId.S_Hy1_2, "Hung-Yang Lp linear", "Hung et al. (Lp metric)", ("p",)),
        CatalogEntry(MeasureId.S_Hy2_2, "Hung-Yang Lp exponential", "Hung et al. (Lp metric)", ("p",)),
        CatalogEntry(MeasureId.S_Hy3_2, "Hung-Yang Lp rational", "Hung et al. (Lp metric)", ("p",)),
        CatalogEntry(MeasureId.S_Hy_3, "Hung-Yang averaged Hamming", "Hung et al.", ()),
        CatalogEntry(MeasureId.S_Lzd, "Li-Zhongxian-Degang Euclidean", "Li et al.", ()),
        CatalogEntry(MeasureId.S_Ls, "Liang-Shi", "Liang et al.", ("p",)),
        CatalogEntry(MeasureId.S_M, "Mitchell", "Mitchell", ("p",)),
        CatalogEntry(MeasureId.S_Hm, "Max-augmented Hamming", "Nagan et al.", ()),
        CatalogEntry(MeasureId.S_Az_p, "Bounded variation", "Ashraf et al.", ("p",)),
        CatalogEntry(
            MeasureId.S_Az_p_h, "Hybrid bounded variation", "Ashraf et al.", ("p", "partition")
        ),
        CatalogEntry(MeasureId.SSM_MD, "Spatial similarity, membership dominant", "spatial", ()),
        CatalogEntry(
            MeasureId.SSM_NMD, "Spatial similarity, non-membership dominant", "spatial", ()
        ),
        CatalogEntry(MeasureId.SSM_ED, "Spatial similarity, equidominant", "spatial", ()),
    ]
}


def measure_catalog() -> list[CatalogEntry]:
    """All implemented measures in a stable order."""
    return [CATALOG[m] for m in MeasureId]


def _kwargs(id: MeasureId, params: MeasureParams) -> dict:
    kwargs = {}
    names = CATALOG[id].params
    if "p" in names:
        kwargs["p"] = params.p
    if "z" in names:
        kwargs["z"] = params.z
    if "partition" in names:
        kwargs["delta_set"] = params.delta_set
        kwargs["gamma_set"] = params.gamma_set
    return kwargs


def measure_value(id: MeasureId, params: MeasureParams | None, y, x) -> float:
    """Scalar value of measure ``id``; SSM ids give their own branch."""
    id = MeasureId(id)
    return float(_FUNCS[id](y, x, **_kwargs(id, params or MeasureParams())))


def similarity(id: MeasureId, params: MeasureParams | None, y, x):
    """Evaluate measure ``id`` between two patterns.

    Scalar measures return a float. The three SSM ids return the whole
    ``SpatialValue`` triple, since the branches are computed together.
    """
    id = MeasureId(id)
    if id in SSM_IDS:
        return spatial_similarity(y, x)
    return measure_value(id, params, y, x)
