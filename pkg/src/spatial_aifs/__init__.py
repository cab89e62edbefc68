"""Spatial (three-branched) distance and similarity measures for intuitionistic fuzzy sequences."""

from .benchmarks import BENCHMARK_NAMES, get_case, list_benchmarks, run_benchmark
from .classifier import ClassificationProblem, classify, strong_classification
from .core import (
    AifsElement,
    AifsError,
    AifsPattern,
    EmptyInput,
    InvalidElement,
    InvalidPartition,
    LengthMismatch,
    NotFuzzy,
    delta,
    divided_difference_grid,
    novel_dd_sequence,
    novel_divided_difference,
)
from .measures import MeasureId, MeasureParams, MeasureSpec, measure_catalog, measure_value, similarity
from .spatial import (
    SpatialValue,
    fuzzy_reduced_distance,
    real_reduced_distance,
    spatial_distance,
    spatial_norm,
    spatial_similarity,
)

__version__ = "0.1.0"
