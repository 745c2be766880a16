from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from hopflab.coeffs import ExactRing, GaussianRational, RationalFunction, SeriesRing, TruncSeries

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gaussians = st.builds(GaussianRational, fractions, fractions)


@given(gaussians, gaussians, gaussians)
def test_gaussian_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == GaussianRational()
    if a:
        assert a * a.inverse() == 1


@given(gaussians)
def test_gaussian_conjugate_norm_is_real(a):
    assert (a * a.conjugate()).is_real()


def test_imaginary_unit_squares_to_minus_one():
    i = GaussianRational(0, 1)
    assert i * i == -1
    assert str(GaussianRational(Fraction(1, 2), -3)) == "(1/2 - 3*I)"


@given(st.integers(-6, 6), st.integers(-6, 6))
def test_q_powers_multiply(a, b):
    ring = ExactRing()
    assert ring.q(a) * ring.q(b) == ring.q(a + b)


def test_q_is_s_squared_and_classical_q_is_one():
    assert ExactRing().q() == RationalFunction.s() ** 2
    assert ExactRing(classical=True).q() == 1


@given(st.integers(-5, 5), st.integers(-5, 5))
def test_rational_function_inverse(a, b):
    s = RationalFunction.s()
    x = s ** 2 + a * s + RationalFunction.const(b) + 1 if a or b else s + 1
    if x:
        assert x * x.inverse() == 1


@given(st.lists(fractions, min_size=1, max_size=5), st.lists(fractions, min_size=1, max_size=5))
def test_series_product_is_truncated_cauchy_product(u, v):
    x, y = TruncSeries("t", u, 4), TruncSeries("t", v, 4)
    prod = x * y
    for k in range(5):
        want = sum((x[i] * y[k - i] for i in range(k + 1)), start=Fraction(0))
        assert prod[k] == want


def test_series_q_expansion_matches_exponential():
    ring = SeriesRing("t", 4, Fraction(1, 2))
    q = ring.q()
    assert [q[k] for k in range(5)] == [1, Fraction(1, 2), Fraction(1, 8), Fraction(1, 48),
                                         Fraction(1, 384)]
    assert q * ring.q(-1) == 1


def test_series_inverse_needs_unit_constant_term():
    x = TruncSeries("t", [0, 1], 3)
    try:
        x.inverse()
    except ArithmeticError:
        pass
    else:
        raise AssertionError("inverse of a non-unit series should fail")
