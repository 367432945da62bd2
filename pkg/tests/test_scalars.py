from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ccg25.scalars import Cyclo8, SqrtSum, mpf_to_fraction, squarefree_decompose


def test_squarefree_decompose():
    assert squarefree_decompose(1) == (1, 1)
    assert squarefree_decompose(60) == (2, 15)
    assert squarefree_decompose(72) == (6, 2)
    assert squarefree_decompose(79) == (1, 79)


def test_sqrt_reduction():
    assert SqrtSum.sqrt(6) * SqrtSum.sqrt(10) == SqrtSum.sqrt(15) * 2
    assert SqrtSum.sqrt(Fraction(3, 5)) * SqrtSum.sqrt(Fraction(3, 5)) == Fraction(3, 5)
    assert (SqrtSum.sqrt(20) - 2 * SqrtSum.sqrt(5)) == 0


def test_sqrt_negative_rejected():
    with pytest.raises(ValueError):
        SqrtSum.sqrt(-2)


rationals = st.builds(Fraction, st.integers(min_value=-40, max_value=40),
                      st.integers(min_value=1, max_value=12))


@settings(max_examples=60, deadline=None)
@given(rationals, rationals, rationals)
def test_sqrtsum_field_axioms(a, b, c):
    x = SqrtSum.sqrt(2) * a + SqrtSum.sqrt(3) * b + c
    y = SqrtSum.sqrt(6) * b - a
    assert x + y - y == x
    assert (x * y) - (y * x) == 0
    if x:
        assert x * x.inverse() == 1


def test_sqrtsum_three_term_inverse():
    x = SqrtSum.sqrt(2) + SqrtSum.sqrt(3) * Fraction(5, 7) - Fraction(1, 3) + SqrtSum.sqrt(30)
    assert x * x.inverse() == 1


def test_sqrtsum_sign():
    assert (SqrtSum.sqrt(2) - Fraction(3, 2)).sign() < 0
    assert (SqrtSum.sqrt(2) - Fraction(7, 5)).sign() > 0
    assert SqrtSum().sign() == 0


def test_cyclo8_basic():
    z = Cyclo8.zeta()
    assert z ** 8 == Cyclo8(1)
    assert z ** 4 == Cyclo8(-1)
    assert Cyclo8.sqrt2() * Cyclo8.sqrt2() == Cyclo8(2)
    assert Cyclo8.i_unit() * Cyclo8.i_unit() == Cyclo8(-1)


@settings(max_examples=40, deadline=None)
@given(rationals, rationals, rationals, rationals)
def test_cyclo8_inverse(a, b, c, d):
    x = Cyclo8(a, b, c, d)
    if x:
        assert x * x.inverse() == Cyclo8(1)


def test_cyclo8_conjugate_matches_complex():
    x = Cyclo8(1, Fraction(2, 3), -1, Fraction(1, 5))
    z = complex(x)
    zc = complex(x.conjugate())
    assert abs(z.conjugate() - zc) < 1e-12


def test_mpf_to_fraction_roundtrip():
    from mpmath import mp
    with mp.workprec(120):
        x = mp.sqrt(2)
        f = mpf_to_fraction(x)
        assert abs(f * f - 2) < Fraction(1, 10 ** 34)
