"""Embedded benchmark problems and their reference comparison tables.

Golden rows are stored exactly as printed: a row name, the measure it maps to,
the printed 4-decimal values per known pattern (or None where only the result
column was printed) and the printed result column.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .classifier import ClassificationProblem, classify
from .core import AifsPattern
from .measures import MeasureId, MeasureParams, MeasureSpec
from .report import fmt, round_half_up, text_table

MATCH_TOL = 5e-5
U = "Unclassified"

# Ordered row definitions shared by the tables: (row name, measure id, params).
_ROWS = [
    ("S_L1", MeasureId.S_Lp, MeasureParams(p=1)),
    ("S_Hk", MeasureId.S_Hk, MeasureParams()),
    ("S_L2", MeasureId.S_Lp, MeasureParams(p=2)),
    ("S_Lzd", MeasureId.S_Lzd, MeasureParams()),
    ("S_M(p=1)", MeasureId.S_M, MeasureParams(p=1)),
    ("S_Fz", MeasureId.S_Fz, MeasureParams()),
    ("S_C", MeasureId.S_C, MeasureParams()),
    ("S_Hy1^1", MeasureId.S_Hy1_1, MeasureParams()),
    ("S_Hy2^1", MeasureId.S_Hy2_1, MeasureParams()),
    ("S_Hy3^1", MeasureId.S_Hy3_1, MeasureParams()),
    ("S_Hy1^2(p=1)", MeasureId.S_Hy1_2, MeasureParams(p=1)),
    ("S_Hy2^2(p=1)", MeasureId.S_Hy2_2, MeasureParams(p=1)),
    ("S_Hy3^2(p=1)", MeasureId.S_Hy3_2, MeasureParams(p=1)),
    ("S_Hy^3", MeasureId.S_Hy_3, MeasureParams()),
    ("S_Bd(p=1,z=2)", MeasureId.S_Bd, MeasureParams(p=1, z=2)),
    ("S_Dc(p=1)", MeasureId.S_Dc, MeasureParams(p=1)),
    ("S_Ls(p=1)", MeasureId.S_Ls, MeasureParams(p=1)),
    ("S_Hm", MeasureId.S_Hm, MeasureParams()),
    ("S_Az1", MeasureId.S_Az_p, MeasureParams(p=1)),
    ("S_Az2", MeasureId.S_Az_p, MeasureParams(p=2)),
    ("S_Az1^h", MeasureId.S_Az_p_h, MeasureParams(p=1)),
    ("S_Az2^h", MeasureId.S_Az_p_h, MeasureParams(p=2)),
    ("MD-S_bv", MeasureId.SSM_MD, MeasureParams()),
    ("NMD-S_bv", MeasureId.SSM_NMD, MeasureParams()),
    ("ED-S_bv", MeasureId.SSM_ED, MeasureParams()),
]
ROW_MEASURES = {name: MeasureSpec(mid, params) for name, mid, params in _ROWS}

PARTITION_NOTE = "unverifiable: partition unstated"


@dataclass(frozen=True)
class GoldenRow:
    name: str
    values: tuple[float, ...] | None  # per known pattern, single-query tables only
    results: tuple[str, ...]  # one per query

    @property
    def spec(self) -> MeasureSpec:
        return ROW_MEASURES[self.name]


@dataclass(frozen=True)
class BenchmarkCase:
    name: str
    title: str
    problem: ClassificationProblem
    golden: tuple[GoldenRow, ...]
    # (row name, query label) -> annotation for cells that are shown but not asserted
    excluded: dict = field(default_factory=dict)
    notes: tuple[str, ...] = ()


def _pat(label, pairs):
    return AifsPattern.from_pairs(label, pairs)


def _single_query_golden(table) -> tuple[GoldenRow, ...]:
    return tuple(GoldenRow(name, tuple(vals), (res,)) for name, vals, res in table)


def _example1():
    known = [
        _pat("B1", [(0.5, 0.3), (0.7, 0.0), (0.4, 0.5), (0.7, 0.3)]),
        _pat("B2", [(0.5, 0.2), (0.6, 0.1), (0.2, 0.7), (0.7, 0.3)]),
        _pat("B3", [(0.5, 0.4), (0.7, 0.1), (0.4, 0.6), (0.7, 0.2)]),
    ]
    unknown = [_pat("A", [(0.4, 0.3), (0.7, 0.1), (0.3, 0.6), (0.7, 0.3)])]
    table = [
        ("S_L1", [0.9500, 0.9375, 0.9500], U),
        ("S_Hk", [0.9500, 0.9375, 0.9500], U),
        ("S_L2", [0.9293, 0.9209, 0.9293], U),
        ("S_Lzd", [0.9293, 0.9209, 0.9293], U),
        ("S_M(p=1)", [0.9500, 0.9375, 0.9500], U),
        ("S_Fz", [0.9500, 0.9375, 0.9625], "B3"),
        ("S_C", [0.9500, 0.9375, 0.9750], "B3"),
        ("S_Hy1^1", [0.9250, 0.9250, 0.9250], U),
        ("S_Hy2^1", [0.8857, 0.8857, 0.8857], U),
        ("S_Hy3^1", [0.8605, 0.8605, 0.8605], U),
        ("S_Hy1^2(p=1)", [0.9500, 0.9375, 0.9500], U),
        ("S_Hy2^2(p=1)", [0.8899, 0.8641, 0.8899], U),
        ("S_Hy3^2(p=1)", [0.8636, 0.8333, 0.8636], U),
        ("S_Hy^3", [0.9500, 0.9375, 0.9500], U),
        ("S_Bd(p=1,z=2)", [0.9500, 0.9375, 0.9667], "B3"),
        ("S_Dc(p=1)", [0.9500, 0.9375, 0.9750], "B3"),
        ("S_Ls(p=1)", [0.9500, 0.9375, 0.9500], U),
        ("S_Hm", [0.9500, 0.9333, 0.9583], "B3"),
        ("S_Az1", [0.9250, 0.9000, 0.9125], "B1"),
        ("S_Az2", [0.9134, 0.8882, 0.9065], "B1"),
        ("S_Az1^h", [0.9250, 0.9125, 0.9375], "B3"),
        ("S_Az2^h", [0.9134, 0.9065, 0.9209], "B3"),
        ("MD-S_bv", [0.9500, 0.9250, 0.9688], "B3"),
        ("NMD-S_bv", [0.9625, 0.9250, 0.9750], "B3"),
        ("ED-S_bv", [0.9625, 0.9500, 0.9563], "B1"),
    ]
    return known, unknown, ("y1", "y2", "y3", "y4"), _single_query_golden(table)


def _example2():
    known = [
        _pat("B1", [(0.34, 0.34), (0.19, 0.48), (0.02, 0.12)]),
        _pat("B2", [(0.35, 0.33), (0.20, 0.47), (0.00, 0.14)]),
        _pat("B3", [(0.33, 0.35), (0.21, 0.46), (0.01, 0.13)]),
    ]
    unknown = [_pat("A", [(0.37, 0.31), (0.23, 0.44), (0.04, 0.10)])]
    table = [
        ("S_L1", [0.9700, 0.9700, 0.9700], U),
        ("S_Hk", [0.9700, 0.9700, 0.9700], U),
        ("S_L2", [0.9689, 0.9689, 0.9689], U),
        ("S_Lzd", [0.9689, 0.9689, 0.9689], U),
        ("S_M(p=1)", [0.9700, 0.9700, 0.9700], U),
        ("S_Fz", [0.9700, 0.9700, 0.9700], U),
        ("S_C", [0.9700, 0.9700, 0.9700], U),
        ("S_Hy1^1", [0.9700, 0.9700, 0.9700], U),
        ("S_Hy2^1", [0.9532, 0.9532, 0.9532], U),
        ("S_Hy3^1", [0.9417, 0.9417, 0.9417], U),
        ("S_Hy1^2(p=1)", [0.9700, 0.9700, 0.9700], U),
        ("S_Hy2^2(p=1)", [0.9326, 0.9326, 0.9326], U),
        ("S_Hy3^2(p=1)", [0.9151, 0.9151, 0.9151], U),
        ("S_Hy^3", [0.9700, 0.9700, 0.9700], U),
        ("S_Bd(p=1,z=2)", [0.9700, 0.9700, 0.9700], U),
        ("S_Dc(p=1)", [0.9700, 0.9700, 0.9700], U),
        ("S_Ls(p=1)", [0.9700, 0.9700, 0.9700], U),
        ("S_Hm", [0.9700, 0.9700, 0.9700], U),
        ("S_Az1", [0.9800, 0.9867, 0.9767], "B2"),
        ("S_Az2", [0.9784, 0.9859, 0.9742], "B2"),
        ("S_Az1^h", [0.9800, 0.9767, 0.9700], "B1"),
        ("S_Az2^h", [0.9784, 0.9735, 0.9689], "B1"),
        ("MD-S_bv", [0.9850, 0.9900, 0.9825], "B2"),
        ("NMD-S_bv", [0.9850, 0.9900, 0.9825], "B2"),
        ("ED-S_bv", [0.9900, 0.9933, 0.9883], "B2"),
    ]
    return known, unknown, ("y1", "y2", "y3"), _single_query_golden(table)


def _example3():
    known = [
        _pat("B1", [(1.0, 0.0), (0.8, 0.0), (0.7, 0.1)]),
        _pat("B2", [(0.8, 0.1), (1.0, 0.0), (0.9, 0.0)]),
        _pat("B3", [(0.6, 0.2), (0.8, 0.0), (1.0, 0.0)]),
    ]
    unknown = [_pat("A", [(0.5, 0.3), (0.6, 0.2), (0.8, 0.1)])]
    table = [
        ("S_L1", [0.7833, 0.7833, 0.8500], "B3"),
        ("S_Hk", [0.7833, 0.7833, 0.8500], "B3"),
        ("S_L2", [0.7323, 0.7585, 0.8419], "B3"),
        ("S_Lzd", [0.7323, 0.7585, 0.8419], "B3"),
        ("S_M(p=1)", [0.7833, 0.7833, 0.8500], "B3"),
        ("S_Fz", [0.7833, 0.7833, 0.8500], "B3"),
        ("S_C", [0.7833, 0.7833, 0.8500], "B3"),
        ("S_Hy1^1", [0.7333, 0.7333, 0.8333], "B3"),
        ("S_Hy2^1", [0.6297, 0.6297, 0.7571], "B3"),
        ("S_Hy3^1", [0.5789, 0.5789, 0.7143], "B3"),
        ("S_Hy1^2(p=1)", [0.7833, 0.7833, 0.8500], "B3"),
        ("S_Hy2^2(p=1)", [0.5933, 0.5933, 0.7003], "B3"),
        ("S_Hy3^2(p=1)", [0.5465, 0.5465, 0.6538], "B3"),
        ("S_Hy^3", [0.7833, 0.7833, 0.8500], "B3"),
        ("S_Bd(p=1,z=2)", [0.7833, 0.7833, 0.8500], "B3"),
        ("S_Dc(p=1)", [0.7833, 0.7833, 0.8500], "B3"),
        ("S_Ls(p=1)", [0.7833, 0.7833, 0.8500], "B3"),
        ("S_Hm", [0.7667, 0.7667, 0.8444], "B3"),
        ("S_Az1", [0.7167, 0.8333, 0.9167], "B3"),
        ("S_Az2", [0.6918, 0.8000, 0.9087], "B3"),
        ("S_Az1^h", [0.8000, 0.8167, 0.9000], "B3"),
        ("S_Az2^h", [0.7354, 0.7655, 0.8709], "B3"),
        ("MD-S_bv", [0.7667, 0.8583, 0.9417], "B3"),
        ("NMD-S_bv", [0.8083, 0.8917, 0.9333], "B3"),
        ("ED-S_bv", [0.8583, 0.9167, 0.9583], "B3"),
    ]
    return known, unknown, ("y1", "y2", "y3"), _single_query_golden(table)


def _example4():
    known = [
        _pat("B1", [(0.94, 0.00), (0.88, 0.00), (0.82, 0.00), (0.78, 0.02), (0.75, 0.05), (0.72, 0.08)]),
        _pat("B2", [(0.86, 0.07), (0.92, 0.04), (0.98, 0.01), (0.98, 0.00), (0.95, 0.00), (0.92, 0.00)]),
        _pat("B3", [(0.66, 0.14), (0.72, 0.08), (0.78, 0.02), (0.84, 0.00), (0.90, 0.00), (0.96, 0.00)]),
    ]
    unknown = [
        _pat("A", [(0.53, 0.27), (0.56, 0.24), (0.59, 0.21), (0.64, 0.18), (0.70, 0.15), (0.76, 0.12)])
    ]
    table = [
        ("S_L1", [0.8158, 0.7600, 0.8325], "B3"),
        ("S_Hk", [0.8158, 0.7600, 0.8325], "B3"),
        ("S_L2", [0.7842, 0.7445, 0.8301], "B3"),
        ("S_Lzd", [0.7842, 0.7445, 0.8301], "B3"),
        ("S_M(p=1)", [0.8158, 0.7600, 0.8325], "B3"),
        ("S_Fz", [0.8192, 0.7600, 0.8325], "B3"),
        ("S_C", [0.8225, 0.7600, 0.8325], "B3"),
        ("S_Hy1^1", [0.7900, 0.6950, 0.8200], "B3"),
        ("S_Hy2^1", [0.7003, 0.5841, 0.7394], "B3"),
        ("S_Hy3^1", [0.6529, 0.5326, 0.6949], "B3"),
        ("S_Hy1^2(p=1)", [0.8158, 0.7600, 0.8325], "B3"),
        ("S_Hy2^2(p=1)", [0.6437, 0.5591, 0.6708], "B3"),
        ("S_Hy3^2(p=1)", [0.5962, 0.5135, 0.6236], "B3"),
        ("S_Hy^3", [0.8158, 0.7600, 0.8325], "B3"),
        ("S_Bd(p=1,z=2)", [0.8203, 0.7600, 0.8325], "B3"),
        ("S_Dc(p=1)", [0.8225, 0.7600, 0.8325], "B3"),
        ("S_Ls(p=1)", [0.8158, 0.7600, 0.8325], "B3"),
        ("S_Hm", [0.8111, 0.7383, 0.8283], "B3"),
        ("S_Az1", [0.8867, 0.9250, 0.9617], "B3"),
        ("S_Az2", [0.8437, 0.8804, 0.9427], "B3"),
        ("S_Az1^h", [0.8233, 0.8342, 0.9133], "B3"),
        ("S_Az2^h", [0.7894, 0.7895, 0.8848], "B3"),
        ("MD-S_bv", [0.9075, 0.9367, 0.9733], "B3"),
        ("NMD-S_bv", [0.9225, 0.9508, 0.9708], "B3"),
        ("ED-S_bv", [0.9433, 0.9625, 0.9808], "B3"),
    ]
    return known, unknown, tuple(f"y{i}" for i in range(1, 7)), _single_query_golden(table)


def _example5():
    known = [
        _pat("B1", [(0.4, 0.0), (0.3, 0.5), (0.1, 0.7), (0.4, 0.3), (0.1, 0.7)]),
        _pat("B2", [(0.7, 0.0), (0.2, 0.6), (0.0, 0.9), (0.7, 0.0), (0.1, 0.8)]),
        _pat("B3", [(0.3, 0.3), (0.6, 0.1), (0.2, 0.7), (0.2, 0.6), (0.1, 0.9)]),
        _pat("B4", [(0.1, 0.7), (0.2, 0.4), (0.8, 0.0), (0.2, 0.7), (0.2, 0.7)]),
        _pat("B5", [(0.1, 0.8), (0.0, 0.8), (0.2, 0.8), (0.2, 0.8), (0.8, 0.1)]),
    ]
    unknown = [
        _pat("Al", [(0.8, 0.1), (0.6, 0.1), (0.2, 0.8), (0.6, 0.1), (0.1, 0.6)]),
        _pat("Bob", [(0.0, 0.8), (0.4, 0.4), (0.6, 0.1), (0.1, 0.7), (0.1, 0.8)]),
        _pat("Joe", [(0.8, 0.1), (0.8, 0.1), (0.0, 0.6), (0.2, 0.7), (0.0, 0.5)]),
        _pat("Ted", [(0.6, 0.1), (0.5, 0.4), (0.3, 0.4), (0.7, 0.2), (0.3, 0.4)]),
    ]
    b2 = ("B2", "B4", "B3", "B1")
    b1 = ("B1", "B4", "B3", "B1")
    table = [
        ("S_L1", b2),
        ("S_Hk", b2),
        ("S_L2", b1),
        ("S_Lzd", b1),
        ("S_M(p=1)", b2),
        ("S_Fz", (U, "B4", "B3", "B1")),
        ("S_C", b1),
        ("S_Hy1^1", b2),
        ("S_Hy2^1", b2),
        ("S_Hy3^1", b2),
        ("S_Bd(p=1,z=2)", b1),
        ("S_Dc(p=1)", b1),
        ("S_Hy1^2(p=1)", b2),
        ("S_Hy2^2(p=1)", b2),
        ("S_Hy3^2(p=1)", b2),
        ("S_Hy^3", b2),
        ("S_Ls(p=1)", b2),
        ("S_Hm", b2),
        ("S_Az1", b1),
        ("S_Az2", b1),
        ("S_Az1^h", b1),
        ("S_Az2^h", b1),
        ("MD-S_bv", b1),
        ("NMD-S_bv", b1),
        ("ED-S_bv", b1),
    ]
    golden = tuple(GoldenRow(name, None, res) for name, res in table)
    universe = ("Temperature", "Headache", "Stomach pain", "Cough", "Chest pain")
    return known, unknown, universe, golden


# Query of the cancer-diagnosis case as originally printed; the
# fourth element (0.5, 0.5) contradicts every printed value of that table.
EXAMPLE6_QUERY_AS_PRINTED = ((0.3, 0.5), (0.4, 0.4), (0.6, 0.2), (0.5, 0.5), (0.9, 0.0))
EXAMPLE6_QUERY = ((0.3, 0.5), (0.4, 0.4), (0.6, 0.2), (0.5, 0.1), (0.9, 0.0))


def _example6():
    known = [
        _pat("B1", [(0.4, 0.4), (0.3, 0.3), (0.5, 0.1), (0.5, 0.2), (0.6, 0.2)]),
        _pat("B2", [(0.2, 0.6), (0.3, 0.5), (0.2, 0.3), (0.7, 0.1), (0.8, 0.0)]),
        _pat("B3", [(0.1, 0.9), (0.0, 0.1), (0.2, 0.7), (0.1, 0.8), (0.2, 0.8)]),
        _pat("B4", [(0.8, 0.2), (0.9, 0.0), (1.0, 0.0), (0.7, 0.2), (0.6, 0.4)]),
    ]
    unknown = [_pat("A", EXAMPLE6_QUERY)]
    table = [
        ("S_L1", [0.8800, 0.8800, 0.5200, 0.6700], U),
        ("S_Hk", [0.8800, 0.8800, 0.5200, 0.6700], U),
        ("S_L2", [0.8586, 0.8388, 0.4862, 0.6464], "B1"),
        ("S_Lzd", [0.8586, 0.8388, 0.4862, 0.6464], "B1"),
        ("S_M(p=1)", [0.8800, 0.8800, 0.5200, 0.6700], U),
        ("S_Dc(p=1)", [0.9200, 0.8800, 0.5800, 0.6900], "B1"),
        ("S_Hy1^1", [0.8600, 0.8200, 0.4400, 0.6000], "B1"),
        ("S_Hy2^1", [0.7933, 0.7394, 0.3217, 0.4785], "B1"),
        ("S_Hy3^1", [0.7544, 0.6949, 0.2821, 0.4286], "B1"),
        ("S_Hy1^2(p=1)", [0.8800, 0.8800, 0.5200, 0.6700], U),
        ("S_Hy2^2(p=1)", [0.7532, 0.7532, 0.2863, 0.4412], U),
        ("S_Hy3^2(p=1)", [0.7097, 0.7097, 0.2653, 0.4036], U),
        ("S_Hy^3", [0.8800, 0.8800, 0.5200, 0.6700], U),
        ("S_Fz", [0.9000, 0.8800, 0.5500, 0.6800], "B1"),
        ("S_Bd(p=1,z=2)", [0.9067, 0.8800, 0.5667, 0.6900], "B1"),
        ("S_C", [0.9200, 0.8800, 0.5800, 0.6900], "B1"),
        ("S_Ls(p=1)", [0.8800, 0.8800, 0.5200, 0.6700], U),
        ("S_Hm", [0.8867, 0.8600, 0.5267, 0.6533], "B1"),
        ("S_Az1", [0.8625, 0.8125, 0.6375, 0.6875], "B1"),
        ("S_Az2", [0.8380, 0.7331, 0.5655, 0.6779], "B1"),
        ("S_Az1^h", [0.8750, 0.8000, 0.5500, 0.5125], "B1"),
        ("S_Az2^h", [0.8459, 0.7764, 0.5417, 0.5191], "B1"),
        ("MD-S_bv", [0.9200, 0.8600, 0.8400, 0.8100], "B1"),
        ("NMD-S_bv", [0.9350, 0.9150, 0.7650, 0.8150], "B1"),
        ("ED-S_bv", [0.9450, 0.9250, 0.8550, 0.8750], "B1"),
    ]
    universe = ("Character of stool", "Bellyache", "Ictussileus", "Chronic sileus", "Anemia")
    return known, unknown, universe, _single_query_golden(table)


_BUILDERS = {
    "example1": ("Numeric benchmark, 4 features", _example1, ()),
    "example2": ("Numeric benchmark, 3 features", _example2, ()),
    "example3": ("Numeric benchmark, 3 features", _example3, ()),
    "example4": ("Numeric benchmark, 6 features", _example4, ()),
    "example5": (
        "Medical diagnosis",
        _example5,
        ("only the result column is printed for this case",),
    ),
    "example6": (
        "Cancer diagnosis",
        _example6,
        (
            "query element 4 is (0.5, 0.1); the printed (0.5, 0.5) reproduces none of the table",
        ),
    ),
}

BENCHMARK_NAMES = tuple(_BUILDERS)


def get_case(name: str) -> BenchmarkCase:
    try:
        title, build, notes = _BUILDERS[name]
    except KeyError:
        raise KeyError(f"unknown benchmark {name!r}; choose from {', '.join(BENCHMARK_NAMES)}")
    known, unknown, universe, golden = build()
    excluded = {}
    for row in golden:
        if row.spec.id is MeasureId.S_Az_p_h:
            for q in unknown:
                excluded[(row.name, q.label)] = PARTITION_NOTE
    if name == "example5":
        excluded[("S_Fz", "Al")] = "printed cell disagrees with the printed ranking discussion"
    problem = ClassificationProblem(tuple(known), tuple(unknown), universe)
    return BenchmarkCase(name, title, problem, golden, excluded, notes)


def list_benchmarks() -> list[dict]:
    out = []
    for name in BENCHMARK_NAMES:
        case = get_case(name)
        out.append(
            {
                "name": name,
                "title": case.title,
                "k": case.problem.k,
                "classes": len(case.problem.known),
                "queries": len(case.problem.unknown),
            }
        )
    return out


# --- comparison ----------------------------------------------------------------


@dataclass
class CellDiff:
    row: str
    query: str
    known: str
    golden: float
    computed: float
    status: str  # "match", "mismatch" or "excluded"
    note: str = ""

    @property
    def rounded(self) -> float:
        return round_half_up(self.computed)


@dataclass
class ResultDiff:
    row: str
    query: str
    golden: str
    computed: str
    status: str
    note: str = ""


@dataclass
class BenchmarkComparison:
    case: str
    cells: list[CellDiff]
    results: list[ResultDiff]
    notes: tuple[str, ...] = ()

    @property
    def asserted_cells(self) -> list[CellDiff]:
        return [c for c in self.cells if c.status != "excluded"]

    @property
    def failures(self) -> list:
        return [d for d in self.cells + self.results if d.status == "mismatch"]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "case": self.case,
            "ok": self.ok,
            "notes": list(self.notes),
            "cells": [
                {
                    "row": c.row,
                    "query": c.query,
                    "known": c.known,
                    "golden": c.golden,
                    "computed": c.computed,
                    "rounded": c.rounded,
                    "status": c.status,
                    "note": c.note,
                }
                for c in self.cells
            ],
            "results": [
                {
                    "row": r.row,
                    "query": r.query,
                    "golden": r.golden,
                    "computed": r.computed,
                    "status": r.status,
                    "note": r.note,
                }
                for r in self.results
            ],
            "summary": {
                "cells": len(self.cells),
                "asserted_cells": len(self.asserted_cells),
                "cell_mismatches": sum(c.status == "mismatch" for c in self.cells),
                "results": len(self.results),
                "result_mismatches": sum(r.status == "mismatch" for r in self.results),
            },
        }

    def to_text(self) -> str:
        lines = [f"== {self.case} =="]
        lines += [f"note: {n}" for n in self.notes]
        rows = []
        for c in self.cells:
            rows.append(
                [c.row, c.query, c.known, f"{c.golden:.4f}", fmt(c.computed), c.status, c.note]
            )
        if rows:
            lines.append(
                text_table(["row", "query", "known", "golden", "computed", "status", "note"], rows)
            )
        rrows = [[r.row, r.query, r.golden, r.computed, r.status, r.note] for r in self.results]
        lines.append("")
        lines.append(text_table(["row", "query", "golden result", "computed", "status", "note"], rrows))
        s = self.to_dict()["summary"]
        lines.append("")
        lines.append(
            f"cells: {s['asserted_cells']} asserted, {s['cell_mismatches']} mismatched; "
            f"results: {s['results']} compared, {s['result_mismatches']} mismatched"
        )
        return "\n".join(lines)


def _selected(row: GoldenRow, selection) -> bool:
    if selection is None:
        return True
    return row.spec.id in selection


def run_benchmark(case: BenchmarkCase | str, selection=None) -> BenchmarkComparison:
    """Recompute a reference table and diff it cell by cell.

    ``selection`` restricts the comparison to a collection of ``MeasureId``.
    Rows for ``S_Az_p_h`` are evaluated with the full difference partition only
    for display; their cells are never asserted.
    """
    if isinstance(case, str):
        case = get_case(case)
    known_labels = [b.label for b in case.problem.known]
    rows = [r for r in case.golden if _selected(r, selection)]
    cells: list[CellDiff] = []
    results: list[ResultDiff] = []
    for row in rows:
        spec = row.spec
        if spec.id is MeasureId.S_Az_p_h:
            spec = MeasureSpec(
                spec.id,
                MeasureParams(p=spec.params.p, delta_set=range(1, case.problem.k + 1)),
            )
        report = classify(case.problem, [spec])
        for qi, q in enumerate(report.queries):
            note = case.excluded.get((row.name, q.query), "")
            outcome = q.outcomes[0]
            if row.values is not None:
                for lab, gold in zip(known_labels, row.values):
                    got = outcome.values[lab]
                    if note:
                        status = "excluded"
                    else:
                        status = "match" if abs(round_half_up(got) - gold) <= MATCH_TOL else "mismatch"
                    cells.append(CellDiff(row.name, q.query, lab, gold, got, status, note))
            computed = outcome.printed_decision or U
            gold_res = row.results[qi]
            if note:
                status = "excluded"
            else:
                status = "match" if computed == gold_res else "mismatch"
            results.append(ResultDiff(row.name, q.query, gold_res, computed, status, note))
    return BenchmarkComparison(case.name, cells, results, case.notes)
