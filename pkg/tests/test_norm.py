"""Modular and Luxemburg norm tests against closed forms and invariants."""

import math

import numpy as np
import pytest

from conftest import constant_norm_oracle
from varseq.exponent import ExponentFunction
from varseq.harness import CorpusSpec, XorShift64Star, generate_corpus
from varseq.lattice import Sequence, ZInterval, truncate
from varseq.norm import (
    characteristic_norm,
    check_norm_modular_relations,
    check_scaling_bounds,
    luxemburg_norm,
    modular,
)

GOLDEN = (1.0 + math.sqrt(5.0)) / 2.0


def test_modular_zero_and_basic():
    p = ExponentFunction.constant(2.0)
    assert modular(Sequence(0, []), p).value == 0.0
    m = modular(Sequence(0, [3.0, 4.0]), p)
    assert m.value == 25.0 and m.nonzero_terms == 2


def test_norm_constant_exponent_closed_form():
    a = Sequence(0, [3.0, 4.0])
    p = ExponentFunction.constant(2.0)
    assert luxemburg_norm(a, p).value == pytest.approx(5.0, rel=1e-12)


def test_norm_two_exponent_golden_ratio():
    """a = (1, 1) with p = (1, 2) solves 1/x + 1/x^2 = 1, the golden ratio."""
    a = Sequence(0, [1.0, 1.0])
    p = ExponentFunction(0, [1.0, 2.0], 2.0)
    assert luxemburg_norm(a, p).value == pytest.approx(GOLDEN, rel=1e-12)


def test_norm_single_point_equals_value():
    # one nonzero entry: bracket degenerates, norm is |a(k)| exactly
    a = Sequence(7, [2.5])
    for p0 in (1.0, 2.0, 5.5):
        nv = luxemburg_norm(a, ExponentFunction.constant(p0))
        assert nv.value == 2.5 and nv.iterations == 0


def test_norm_matches_constant_oracle_random():
    rng = XorShift64Star(31337)
    for _ in range(150):
        width = rng.randint(1, 40)
        vals = [rng.uniform() * 3.0 for _ in range(width)]
        a = Sequence(rng.randint(-50, 50), vals)
        p0 = rng.uniform_range(1.0, 8.0)
        got = luxemburg_norm(a, ExponentFunction.constant(p0)).value
        want = constant_norm_oracle(a, p0)
        assert got == pytest.approx(want, rel=1e-10)


def test_norm_homogeneity_and_monotonicity():
    rng = XorShift64Star(99)
    p = ExponentFunction(-5, 1.3 + np.arange(11) % 3, 2.0)
    for _ in range(40):
        a = Sequence(-5, [rng.uniform() for _ in range(11)])
        n0 = luxemburg_norm(a, p).value
        assert luxemburg_norm(a.scaled(3.0), p).value == pytest.approx(3.0 * n0, rel=1e-10)
        # pointwise domination implies norm domination
        b = Sequence(-5, a.values * (0.2 + 0.8 * np.linspace(0, 1, 11)))
        assert luxemburg_norm(b, p).value <= n0 * (1 + 1e-12)


def test_unit_modular_identity():
    spec = CorpusSpec(
        seed=555,
        count=50,
        window_width=32,
        value_law="uniform01",
        exponent_law="random-range",
        alpha_list=(0.0,),
    )
    for item in generate_corpus(spec):
        nv = luxemburg_norm(item.a, item.p)
        unit = modular(item.a.scaled(1.0 / nv.value), item.p).value
        assert unit == pytest.approx(1.0, abs=1e-8)


def test_norm_modular_chain_both_regimes():
    spec = CorpusSpec(
        seed=556,
        count=40,
        window_width=32,
        value_law="geometric-decay",
        exponent_law="bump",
        alpha_list=(0.0,),
    )
    for item in generate_corpus(spec):
        n0 = luxemburg_norm(item.a, item.p).value
        for target in (0.5, 2.0):
            scaled = item.a.scaled(target / n0)
            rep = check_norm_modular_relations(scaled, item.p)
            assert rep.ok, rep


def test_scaling_bounds():
    spec = CorpusSpec(
        seed=557,
        count=30,
        window_width=24,
        value_law="spike",
        exponent_law="lh-decay",
        alpha_list=(0.0,),
    )
    for item in generate_corpus(spec):
        for lam in (0.3, 1.0, 2.7):
            rep = check_scaling_bounds(item.a, item.p, lam)
            assert rep.ok, rep


def test_fatou_truncation_monotone():
    rng = XorShift64Star(404)
    p = ExponentFunction(-20, 1.2 + np.abs(np.sin(np.arange(41))), 1.8)
    for _ in range(25):
        a = Sequence(-15, [rng.uniform() for _ in range(31)])
        full = luxemburg_norm(a, p).value
        prev = 0.0
        for k in range(0, 18, 3):
            v = luxemburg_norm(truncate(a, ZInterval(-k, k)), p).value
            assert v >= prev - 1e-11 * max(1.0, full)
            prev = v
        assert prev == pytest.approx(full, rel=4e-12)


def test_characteristic_norm_matches_explicit():
    p = ExponentFunction(-3, [1.5, 2.0, 2.5, 3.0, 1.2, 2.2, 1.9], 2.0)
    runs = [ZInterval(-4, -2), ZInterval(1, 5)]
    explicit = Sequence(-4, [1.0, 1.0, 1.0, 0.0, 0.0, 1.0, 1.0, 1.0, 1.0, 1.0])
    want = luxemburg_norm(explicit, p).value
    got = characteristic_norm(runs, p).value
    assert got == pytest.approx(want, rel=1e-10)


def test_characteristic_norm_large_sets_constant_exponent():
    # ||chi_E||_p0 = |E|^(1/p0); set size far beyond any explicit window
    runs = [ZInterval(-10**9, 10**9)]
    n = 2 * 10**9 + 1
    for p0 in (1.0, 2.0, 4.0):
        got = characteristic_norm(runs, ExponentFunction.constant(p0)).value
        assert got == pytest.approx(n ** (1.0 / p0), rel=1e-10)


def test_characteristic_norm_empty_and_singleton():
    p = ExponentFunction.constant(2.0)
    assert characteristic_norm([], p).value == 0.0
    assert characteristic_norm([ZInterval(5, 5)], p).value == 1.0


def test_norm_rejects_bad_tolerance():
    with pytest.raises(ValueError):
        luxemburg_norm(Sequence(0, [1.0]), ExponentFunction.constant(2.0), rel_tol=0.0)
