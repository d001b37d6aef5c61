import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from tornheim_lab.errors import InsufficientTerms, NonConvergent
from tornheim_lab.honesty import SUITE, run_honesty
from tornheim_lab.series import (DEFAULT_CONFIG, Accel, PartialSumSequence, SummationConfig, ValueWithError,
                                 accelerate, diagonal_convolution, ladder, limit_of_terms, sum_double_diagonal,
                                 sum_single, taper)

finite = st.floats(-1e6, 1e6, allow_nan=False)
errs = st.floats(0, 1e3, allow_nan=False)


@given(finite, finite, errs, finite, finite, errs)
def test_value_with_error_propagation(ar, ai, ea, br, bi, eb):
    a = ValueWithError(complex(ar, ai), ea)
    b = ValueWithError(complex(br, bi), eb)
    assert (a + b).abs_err == ea + eb
    assert (a - b).abs_err == ea + eb
    assert (a * b).abs_err == pytest.approx(abs(a.value) * eb + abs(b.value) * ea + ea * eb)
    assert a.scale(-3).abs_err == pytest.approx(3 * ea)
    assert (-a).abs_err == ea


def test_value_with_error_rejects_bad_input():
    with pytest.raises(ValueError):
        ValueWithError(float("nan"))
    with pytest.raises(ValueError):
        ValueWithError(1.0, -1e-3)
    with pytest.raises(ZeroDivisionError):
        ValueWithError(1.0) / 0
    with pytest.raises(ArithmeticError):
        ValueWithError(1.0) / ValueWithError(1e-3, 1e-2)


def test_config_validation():
    with pytest.raises(ValueError):
        SummationConfig(max_diagonal=50, min_diagonal=64)
    with pytest.raises(ValueError):
        SummationConfig(target_abs_tol=0)
    assert SummationConfig(accel="levin_u").accel is Accel.LEVIN_U


def test_taper_is_a_smooth_step():
    t = np.linspace(-0.5, 1.5, 2001)
    w = taper(t)
    assert w[t <= 0].min() == 1.0 and w[t >= 1].max() == 0.0
    assert np.all(np.diff(w) <= 0)
    assert taper(np.array([0.5]))[0] == pytest.approx(0.5)


def test_ladder_is_geometric():
    cuts = ladder(4000, DEFAULT_CONFIG)
    assert cuts[-1] == 4000 and cuts[0] >= DEFAULT_CONFIG.min_diagonal
    assert np.allclose(np.diff(np.log(cuts)), math.log(DEFAULT_CONFIG.ladder_ratio))


def test_sum_single_twisted_log():
    z = cmath.exp(2j * math.pi / 3)
    v = sum_single(lambda n: np.exp(2j * math.pi * (n % 3) / 3) / n)
    assert abs(v.value - (-cmath.log(1 - z))) < 1e-9
    assert v.abs_err < 1e-8


def test_sum_single_zero_series():
    v = sum_single(lambda n: np.zeros(len(n)))
    assert v.value == 0 and v.abs_err == 0


def test_sum_single_basel_against_direct_oracle():
    n = np.arange(1, 10 ** 6 + 1, dtype=float)
    direct = math.fsum(1 / n[::-1] ** 2)
    tail = (1 / 10 ** 6 - 1 / (10 ** 6 + 1), 1 / 10 ** 6)  # integral bounds on the omitted tail
    v = sum_single(lambda k: 1.0 / k.astype(float) ** 2)
    assert direct + tail[0] - 1e-12 <= v.value.real <= direct + tail[1] + 1e-12


def test_sum_single_accepts_scalar_callables():
    v = sum_single(lambda n: 1.0 / (n * n))
    assert v.value.real == pytest.approx(math.pi ** 2 / 6, abs=1e-9)


def test_double_diagonal_finite_support_is_exact():
    v = sum_double_diagonal(lambda m, n: ((m + n) <= 3) * 1.0)
    assert v.value == 3 and v.abs_err == 0
    again = sum_double_diagonal(lambda m, n: ((m + n) <= 3) * 1.0)
    assert again == v


def test_double_diagonal_factorizing_series():
    v = sum_double_diagonal(lambda m, n: 1.0 / (m.astype(float) * n) ** 2)
    assert abs(v.value - (math.pi ** 2 / 6) ** 2) < 1e-9


def test_double_diagonal_two_zeta3():
    v = sum_double_diagonal(lambda m, n: 1.0 / (m * n * (m + n.astype(float))))
    assert abs(v.value - 2.4041138063191885) < 1e-9


def test_diagonal_convolution_matches_loops():
    rng = np.random.default_rng(1)
    a = rng.normal(size=40) + 1j * rng.normal(size=40)
    b = rng.normal(size=40)
    d = diagonal_convolution(a, b)
    for N in range(1, 41):
        ref = sum(a[m - 1] * b[N - m - 1] for m in range(1, N))
        assert abs(d[N - 1] - ref) < 1e-12


def test_accelerate_geometric():
    n = np.arange(1, 21)
    v = accelerate(PartialSumSequence.from_terms(0.5 ** n))
    assert abs(v.value - 1) < 1e-12


def test_accelerate_constant():
    v = accelerate(PartialSumSequence([2.5] * 12))
    assert v.value == 2.5 and v.abs_err == 0


@pytest.mark.parametrize("method", ["levin_u", "epsilon", "aitken"])
def test_accelerate_alternating_harmonic(method):
    n = np.arange(1, 41)
    v = accelerate(PartialSumSequence.from_terms((-1.0) ** (n + 1) / n), method, 10)
    assert abs(v.value - math.log(2)) < 1e-10


def test_accelerate_too_short():
    with pytest.raises(InsufficientTerms):
        accelerate(PartialSumSequence([1.0, 2.0, 3.0]), "levin_u", 10)


def test_divergent_series_raises():
    with pytest.raises(NonConvergent) as info:
        sum_single(lambda n: 1.0 / n)
    assert info.value.gap > 1e-4


def test_partial_sum_sequence_differences():
    terms = np.array([1.0, 0.5, 0.25])
    seq = PartialSumSequence.from_terms(terms)
    assert np.allclose(np.diff(seq.sums), terms[1:])
    assert seq.last_term_magnitude == 0.25


@settings(max_examples=20, deadline=None)
@given(st.floats(2.2, 6.0))
def test_acceleration_consistency(p):
    # |accelerated - raw partial sum| <= abs_err + tail bound from the last term
    R = DEFAULT_CONFIG.max_diagonal
    c = np.arange(1, R + 1, dtype=float) ** -p
    v = limit_of_terms(c)
    raw = math.fsum(c)
    assert abs(v.value - raw) <= v.abs_err + c[-1] * R


def test_engine_honesty_suite_size():
    assert len(SUITE) == 20
    results = run_honesty()
    assert sum(r.honest for r in results) >= 19
