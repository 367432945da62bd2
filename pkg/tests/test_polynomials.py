import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mp

from ccg25.polynomials import (Frac, MultiPoly, UniPoly, eval_and_gradient,
                               isolate_roots, resultant, sturm_count)

X2_MINUS_2 = UniPoly((Fraction(-2), Fraction(0), Fraction(1)))


def test_sturm_examples():
    assert sturm_count(X2_MINUS_2, Fraction(0), Fraction(2)) == 1
    assert sturm_count(UniPoly((Fraction(1), Fraction(0), Fraction(1))),
                       Fraction(-10), Fraction(10)) == 0


def test_sturm_zero_polynomial_rejected():
    with pytest.raises(ValueError):
        sturm_count(UniPoly(), Fraction(0), Fraction(1))


def test_sturm_endpoint_roots_are_excluded():
    p = UniPoly.from_roots([Fraction(0), Fraction(1), Fraction(2)])
    assert sturm_count(p, Fraction(0), Fraction(2)) == 1  # only the root at 1
    assert sturm_count(p, Fraction(-1), Fraction(3)) == 3


small_fracs = st.builds(Fraction, st.integers(min_value=-30, max_value=30),
                        st.integers(min_value=1, max_value=8))


@settings(max_examples=100, deadline=None)
@given(small_fracs, small_fracs, small_fracs, small_fracs)
def test_sturm_counts_roots_inside(r1, r2, a, b):
    # (x - r1)(x - r2)(x^2 + 1) has exactly the real roots {r1, r2}
    p = UniPoly.from_roots([r1, r2]) * UniPoly((Fraction(1), Fraction(0), Fraction(1)))
    lo, hi = min(a, b), max(a, b)
    if lo == hi or p(lo) == 0 or p(hi) == 0:
        return
    want = len({r for r in (r1, r2) if lo < r < hi})
    assert sturm_count(p, lo, hi) == want


def test_isolate_sqrt2():
    ivs = isolate_roots(X2_MINUS_2, width=Fraction(1, 10 ** 12))
    assert len(ivs) == 2
    lo, hi = ivs[1]
    mid = float((lo + hi) / 2)
    assert abs(mid - 2 ** 0.5) < 1e-11


def test_isolate_interval_signs():
    rng = random.Random(4)
    for _ in range(25):
        roots = sorted(Fraction(rng.randint(-9, 9), rng.randint(1, 7)) for _ in range(3))
        if len(set(roots)) != 3:
            continue
        p = UniPoly.from_roots(roots) * UniPoly((Fraction(1), Fraction(0), Fraction(1)))
        for lo, hi in isolate_roots(p, width=Fraction(1, 10 ** 6)):
            a, b = p(lo), p(hi)
            assert a == 0 or b == 0 or (a > 0) != (b > 0)


def test_isolate_respects_width_and_disjoint():
    p = UniPoly.from_roots([Fraction(1, 3), Fraction(1, 3), Fraction(2)])
    ivs = isolate_roots(p, width=Fraction(1, 1000))
    assert len(ivs) == 2
    assert all(hi - lo <= Fraction(1, 1000) for lo, hi in ivs)
    assert ivs[0][1] <= ivs[1][0]


def make_poly(vars, entries):
    return MultiPoly.from_terms(vars, entries)


def test_resultant_examples():
    V = ("x", "y")
    x = MultiPoly.variable("x", V)
    y = MultiPoly.variable("y", V)
    two = MultiPoly.constant(2, V)
    r = resultant(x - y, y * y - two, "y")
    assert r == x * x - two
    assert resultant(x * x, x * x * x, "x").is_zero


def test_resultant_detects_common_roots():
    V = ("x", "y")
    x = MultiPoly.variable("x", V)
    y = MultiPoly.variable("y", V)
    one = MultiPoly.constant(1, V)
    shared = x * y - one
    p = shared * (x + y)
    q = shared * (x * x + y)
    assert resultant(p, q, "y").is_zero  # common factor
    p2 = x * y - one
    q2 = x * y - MultiPoly.constant(2, V)
    r = resultant(p2, q2, "y")
    assert not r.is_zero


def test_resultant_var_absent_rejected():
    V = ("x", "y")
    x = MultiPoly.variable("x", V)
    with pytest.raises(ValueError):
        resultant(x, x + MultiPoly.constant(1, V), "y")


def test_eval_and_gradient_exact():
    V = ("x", "y")
    p = make_poly(V, [((2, 1), 1), ((0, 1), 1)])  # x^2 y + y
    val, grad = eval_and_gradient(p, (Fraction(2), Fraction(3)))
    assert val == 15 and grad == (Fraction(12), Fraction(5))
    c = MultiPoly.constant(5, V)
    val, grad = eval_and_gradient(c, (Fraction(7), Fraction(-1)))
    assert val == 5 and grad == (0, 0)


def test_eval_and_gradient_dimension_mismatch():
    p = MultiPoly.variable("x", ("x", "y"))
    with pytest.raises(ValueError):
        eval_and_gradient(p, (Fraction(1),))


def test_gradient_matches_finite_differences():
    rng = random.Random(7)
    V = ("x", "y", "z")
    terms = [((rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 2)),
              Fraction(rng.randint(-5, 5))) for _ in range(12)]
    p = make_poly(V, terms)
    with mp.workprec(200):
        h = mp.mpf(10) ** -8
        for _ in range(50):
            pt = [mp.mpf(rng.randint(1, 9)) / rng.randint(1, 9) for _ in range(3)]
            _, grad = eval_and_gradient(p, [Fraction(str(x)) for x in map(float, pt)])
            for i in range(3):
                up = list(pt); up[i] += h
                dn = list(pt); dn[i] -= h
                fd = (p.evaluate(up) - p.evaluate(dn)) / (2 * h)
                gi = mp.mpf(grad[i].numerator) / grad[i].denominator
                scale = max(abs(gi), mp.mpf(1))
                assert abs(fd - gi) / scale < mp.mpf(10) ** -6


def test_exact_div():
    V = ("x", "y")
    x = MultiPoly.variable("x", V)
    y = MultiPoly.variable("y", V)
    p = (x + y) * (x * x - y) * MultiPoly.constant(Fraction(3, 7), V)
    q = p.exact_div(x + y)
    assert q == (x * x - y).scale(Fraction(3, 7))
    with pytest.raises(ValueError):
        (x * x + y).exact_div(x + y)


def test_frac_equality_and_poly_check():
    V = ("x",)
    x = MultiPoly.variable("x", V)
    one = MultiPoly.constant(1, V)
    a = Frac(x * x - one, x - one)
    b = Frac(x + one)
    assert a.equals(b)
    assert a.equals_poly(x + one)
