"""Container layer: construction, indexing, split-Horner evaluation, comparison."""

import numpy as np
import pytest
from hypothesis import given, strategies as st

from tracelaurent import DomainError, LaurentPoly, as_matrix, laurent_close


def half_sum():
    return LaurentPoly.from_terms(1, {1: 1.0, -1: 1.0})


class TestEval:
    def test_half_sum_at_i(self):
        # i + 1/i = 0
        assert half_sum().eval(1j) == pytest.approx(0.0, abs=1e-15)

    def test_half_sum_at_two(self):
        assert half_sum().eval(2.0) == pytest.approx(2.5)

    def test_worked_center_value(self):
        p = LaurentPoly.from_terms(2, {2: 1.0, 0: 1.5, -2: 1.0})
        assert p.eval(1.0) == pytest.approx(3.5)

    def test_zero_rejected(self):
        with pytest.raises(DomainError):
            half_sum().eval(0.0)

    def test_split_horner_extremes(self):
        # The positive-power half is evaluated in z and the negative half in
        # 1/z, so a lopsided argument only stresses the half that matters.
        p = half_sum()
        assert p.eval(1e3) == pytest.approx(1000.001, rel=1e-15)
        assert p.eval(1e-3) == pytest.approx(1000.001, rel=1e-15)

    def test_matches_direct_sum(self):
        rng = np.random.default_rng(7)
        coeffs = rng.normal(size=9) + 1j * rng.normal(size=9)
        p = LaurentPoly(4, coeffs)
        for z in (0.5 + 0.25j, -1.5j, 2.0, -0.3 + 0.9j):
            direct = sum(c * z ** k for k, c in p.terms())
            assert p.eval(z) == pytest.approx(direct, rel=1e-12)

    def test_call_alias(self):
        assert half_sum()(2.0) == half_sum().eval(2.0)


class TestContainer:
    def test_getitem_by_exponent(self):
        p = LaurentPoly.from_terms(2, {2: 1.0, 0: 1.5, -2: 1.0})
        assert p[2] == 1.0 and p[0] == 1.5 and p[1] == 0.0
        with pytest.raises(ValueError):
            p[3]

    def test_degree_bound_positive(self):
        with pytest.raises(ValueError):
            LaurentPoly(0, [1.0])

    def test_length_checked(self):
        with pytest.raises(ValueError):
            LaurentPoly(2, [1.0, 2.0])

    def test_exponent_range_checked(self):
        with pytest.raises(ValueError):
            LaurentPoly.from_terms(1, {2: 1.0})

    def test_non_finite_rejected(self):
        with pytest.raises(DomainError):
            LaurentPoly(1, [1.0, float("nan"), 1.0])
        with pytest.raises(DomainError):
            as_matrix([[1.0, float("inf")], [0.0, 1.0]])

    def test_coeffs_read_only(self):
        p = half_sum()
        with pytest.raises(ValueError):
            p.coeffs[0] = 5.0

    @given(
        st.integers(1, 6).flatmap(
            lambda n: st.tuples(
                st.just(n),
                st.dictionaries(
                    st.integers(-n, n),
                    st.complex_numbers(allow_nan=False, allow_infinity=False, max_magnitude=1e6),
                    max_size=2 * n + 1,
                ),
            )
        )
    )
    def test_terms_round_trip(self, case):
        n, terms = case
        p = LaurentPoly.from_terms(n, terms)
        for k in range(-n, n + 1):
            assert p[k] == terms.get(k, 0.0)


class TestClose:
    def test_equal_tables(self):
        p = half_sum()
        assert laurent_close(p, half_sum(), 1e-12)

    def test_perturbation_beyond_tolerance(self):
        p = LaurentPoly.from_terms(2, {2: 1.0, 0: 1.5, -2: 1.0})
        q = LaurentPoly.from_terms(2, {2: 1.0, 0: 1.5 + 1e-6, -2: 1.0})
        assert not laurent_close(p, q, 1e-9)
        assert laurent_close(p, q, 1e-5)

    def test_scaling_by_p_magnitude(self):
        # The bound scales with max |p_k|: a 1e-8 shift on a 1e3 coefficient
        # passes at tol 1e-10 because 1e-10 * (1 + 1e3) > 1e-8.
        p = LaurentPoly.from_terms(1, {1: 1e3})
        q = LaurentPoly.from_terms(1, {1: 1e3 + 1e-8})
        assert laurent_close(p, q, 1e-10)

    def test_degree_mismatch_is_usage_error(self):
        with pytest.raises(ValueError):
            laurent_close(half_sum(), LaurentPoly.from_terms(2, {1: 1.0}), 1e-9)

    def test_tolerance_must_be_positive(self):
        with pytest.raises(ValueError):
            laurent_close(half_sum(), half_sum(), 0.0)


@given(
    st.complex_numbers(allow_nan=False, allow_infinity=False, min_magnitude=0.1, max_magnitude=10),
    st.complex_numbers(allow_nan=False, allow_infinity=False, max_magnitude=5),
    st.complex_numbers(allow_nan=False, allow_infinity=False, max_magnitude=5),
)
def test_eval_is_linear_in_coefficients(z, alpha, beta):
    rng = np.random.default_rng(11)
    a = rng.normal(size=7) + 1j * rng.normal(size=7)
    b = rng.normal(size=7) + 1j * rng.normal(size=7)
    p, q = LaurentPoly(3, a), LaurentPoly(3, b)
    combo = LaurentPoly(3, alpha * a + beta * b)
    expected = alpha * p.eval(z) + beta * q.eval(z)
    scale = 1.0 + abs(expected)
    assert abs(combo.eval(z) - expected) <= 1e-9 * scale
