from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracle import rounded
from oracle import spatial_distance as oracle_distance
from spatial_aifs.benchmarks import get_case
from spatial_aifs.core import EmptyInput, LengthMismatch, NotFuzzy
from spatial_aifs.properties import make_rng, random_aifs
from spatial_aifs.spatial import (
    SpatialValue,
    branch_terms,
    fuzzy_reduced_distance,
    real_reduced_distance,
    spatial_distance,
    spatial_norm,
    spatial_similarity,
)

unit = st.floats(0, 1, allow_nan=False)


@st.composite
def element(draw):
    u, v = draw(unit), draw(unit)
    return (1 - u, 1 - v) if u + v > 1 else (u, v)


@st.composite
def patterns(draw, n=2, gen=None):
    gen = element() if gen is None else gen
    k = draw(st.integers(1, 16))
    return [np.array(draw(st.lists(gen, min_size=k, max_size=k))) for _ in range(n)]


def _ex(name):
    case = get_case(name)
    return {b.label: b for b in case.problem.known}, case.problem.unknown[0]


def test_example1_anchor_values():
    known, a = _ex("example1")
    d = spatial_distance(known["B1"], a)
    assert d.md == pytest.approx(0.05, abs=1e-15)
    assert d.nmd == pytest.approx(0.0375, abs=1e-15)
    assert d.ed == pytest.approx(0.0375, abs=1e-15)
    assert rounded(spatial_similarity(known["B1"], a).ed) == 0.9625


def test_against_exact_oracle_on_all_examples():
    for name in ("example1", "example2", "example3", "example4", "example5", "example6"):
        case = get_case(name)
        for q in case.problem.unknown:
            for b in case.problem.known:
                exact = oracle_distance(b.pairs.tolist(), q.pairs.tolist())
                got = spatial_distance(b, q)
                assert got == pytest.approx([float(v) for v in exact], abs=1e-14)


@pytest.mark.parametrize(
    "case,label,expected",
    [
        ("example2", "B2", (0.9900, 0.9900, 0.9933)),
        ("example3", "B3", (0.9417, 0.9333, 0.9583)),
        ("example4", "B3", (0.9733, 0.9708, 0.9808)),
        ("example6", "B1", (0.9200, 0.9350, 0.9450)),
    ],
)
def test_reference_similarity_triples(case, label, expected):
    known, a = _ex(case)
    s = spatial_similarity(known[label], a)
    assert tuple(rounded(v) for v in s) == expected


def test_identity_and_errors():
    y = [(0.2, 0.3), (0.5, 0.5)]
    assert spatial_distance(y, y) == (0, 0, 0)
    assert spatial_similarity(y, y) == (1, 1, 1)
    with pytest.raises(LengthMismatch):
        spatial_distance(y, y[:1])
    with pytest.raises(EmptyInput):
        spatial_distance([], [])


def test_norms():
    assert spatial_norm([(0, 0), (0, 0)]) == (0, 0, 0)
    c = 0.6
    assert spatial_norm([(c, 0)]).md == pytest.approx(c / 2)
    y = [(0.3, 0.2), (0.1, 0.7)]
    assert spatial_norm(y) == spatial_distance(y, [(0, 0), (0, 0)])


def test_fuzzy_reduction_examples():
    assert fuzzy_reduced_distance([(1, 0)], [(0, 1)]) == (0.25, 0.5)
    y = [(0.3, 0.7), (0.9, 0.1)]
    assert fuzzy_reduced_distance(y, y) == (0, 0)
    with pytest.raises(NotFuzzy, match=r"x\[1\]"):
        fuzzy_reduced_distance(y, [(0.3, 0.7), (0.5, 0.1)])


def test_real_reduction_examples():
    assert real_reduced_distance([1], [0]) == 0.5
    assert real_reduced_distance([0.2, 0.9], [0.2, 0.9]) == 0
    with pytest.raises(LengthMismatch):
        real_reduced_distance([1, 2], [1])


def test_range_bound_not_universal():
    # alternating extremes push the dominant branches past 1; random data never gets close
    y = [(0, 1), (1, 0), (0, 1), (1, 0)]
    x = [(1, 0), (0, 1), (1, 0), (0, 1)]
    d = spatial_distance(y, x)
    exact = oracle_distance(y, x)
    assert exact == (Fraction(21, 16), Fraction(21, 16), Fraction(7, 8))
    assert d.md == d.nmd == 1.3125
    assert d.ed <= 1


def test_reduction_claims_that_do_not_hold():
    # on fuzzy inputs the full-step term doubles the membership term instead of vanishing
    y, x = [(0.3, 0.7), (0.9, 0.1)], [(0.6, 0.4), (0.2, 0.8)]
    mem, _, full = branch_terms(y, x)
    assert np.allclose(full, 2 * mem)
    assert spatial_distance(y, x).md == pytest.approx(3 * fuzzy_reduced_distance(y, x)[0])
    # on (v, 0) embeddings the equidominant branch is half the univalued distance
    yv, xv = [0.2, 0.8, 0.5], [0.6, 0.1, 0.5]
    emb = spatial_distance([(v, 0) for v in yv], [(v, 0) for v in xv])
    assert emb.ed == pytest.approx(real_reduced_distance(yv, xv) / 2)


@given(patterns())
def test_symmetry_and_complement(pair):
    y, x = pair
    a, b = spatial_distance(y, x), spatial_distance(x, y)
    assert a == pytest.approx(b, abs=1e-12)
    assert spatial_similarity(y, x) == SpatialValue(*(1 - v for v in a))


@given(patterns(3))
def test_triangle(triple):
    y, x, z = triple
    for a, b, c in zip(spatial_distance(y, x), spatial_distance(y, z), spatial_distance(z, x)):
        assert a <= b + c + 1e-12


@given(patterns(2), st.floats(-5, 5, allow_nan=False))
def test_translation_and_homogeneity(pair, eta):
    y, x = pair
    w = np.linspace(-2, 3, 2 * len(y)).reshape(-1, 2)
    base = spatial_distance(y, x)
    assert spatial_distance(y + w, x + w) == pytest.approx(base, abs=1e-12)
    assert spatial_distance(eta * y, eta * x) == pytest.approx([abs(eta) * v for v in base], abs=1e-12)


@settings(max_examples=200)
@given(patterns())
def test_sharp_bounds(pair):
    # each step difference is at most 2 and each full-step difference at most 4
    d = spatial_distance(*pair)
    assert 0 <= d.ed <= 1
    assert 0 <= d.md <= 1.5 and 0 <= d.nmd <= 1.5


def test_uniform_random_pairs_within_unit_range():
    rng = make_rng(7)
    for _ in range(2000):
        k = int(rng.integers(1, 17))
        d = spatial_distance(random_aifs(rng, k), random_aifs(rng, k))
        assert all(0 <= v <= 1 for v in d)


@given(patterns(gen=st.integers(0, 1024).map(lambda m: (m / 1024, 1 - m / 1024))))
def test_fuzzy_md_equals_nmd_exactly(pair):
    y, x = pair
    d = spatial_distance(y, x)
    d1, d2 = fuzzy_reduced_distance(y, x)
    assert d.md == d.nmd
    assert d.ed == pytest.approx(d2, abs=1e-12)
    assert d2 == 2 * d1


@given(st.data())
def test_real_embeddings(data):
    k = data.draw(st.integers(1, 16))
    yv = data.draw(st.lists(unit, min_size=k, max_size=k))
    xv = data.draw(st.lists(unit, min_size=k, max_size=k))
    ref = real_reduced_distance(yv, xv)
    assert spatial_distance([(v, 0) for v in yv], [(v, 0) for v in xv]).md == pytest.approx(ref, abs=1e-12)
    assert spatial_distance([(0, v) for v in yv], [(0, v) for v in xv]).nmd == pytest.approx(ref, abs=1e-12)
