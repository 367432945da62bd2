import math
import random
from fractions import Fraction

import pytest
from mpmath import mp

from ccg25.errors import FeasibilityError
from ccg25.moduli import (F_POLY, construct_curve, count_solutions, derive_data,
                          f_explicit_value, f_value, family33_curve, feasibility,
                          level_set_s1, omega_from_orbit, perturbed_residual,
                          s1_product_identity, scan, scan_column, sigma,
                          solve_uvw, tau_chart, tau_inverse, verify_f_identity,
                          w_closed)
from ccg25.scalars import SqrtSum, to_mpc
from ccg25.sl2 import GroupElement, orbit_point

EG_EXACT = (Fraction(11, 6), Fraction(1331, 864), Fraction(19487171, 17915904))
RMK = (Fraction(1), Fraction(1, 16), Fraction(1, 4096))


def rand_triple(rng):
    return tuple(Fraction(rng.randint(1, 12), rng.randint(1, 12)) for _ in range(3))


def test_derive_data_special_points():
    m = derive_data(1, 1, 1)
    assert (m.t2, m.t3, m.t4, m.t5) == (1, 1, 1, 1)
    assert m.x2 == m.y2 == m.z2 == 4 and m.xyz == 8 and m.h == 0
    assert m.in_s and m.slacks == (0, 0, 0)
    assert m.q2 == 4 and m.q_sign > 0
    m = derive_data(*RMK)
    assert m.x2 == m.y2 == m.z2 == 4 and m.g == 1 and m.in_s
    m = derive_data(*EG_EXACT)
    assert m.t2 == Fraction(14641, 7776)
    assert m.x2 == Fraction(125, 33) and m.z2 == 4 and m.in_s


def test_derive_data_rejects_nonpositive():
    with pytest.raises(ValueError):
        derive_data(0, 1, 1)


def test_f_values():
    assert f_value(1, Fraction(1, 2), Fraction(1, 8)) == (0, 0)
    assert f_value(1, 1, 1) == (0, 0)
    rng = random.Random(2)
    for _ in range(25):
        t = rand_triple(rng)
        explicit, derived = f_value(*t)
        assert explicit == derived


def test_f_symbolic_identity():
    assert verify_f_identity()


def test_feasibility():
    m = derive_data(1, 1, 1)
    slacks, q, in_s = feasibility(m)
    assert slacks == (0, 0, 0) and abs(q - 2) < 1e-12 and in_s
    m = derive_data(*EG_EXACT)
    assert m.slacks[2] == 0 and all(s <= 0 for s in m.slacks) and m.in_s
    assert not derive_data(1, 1, 100).in_s


def test_sigma():
    assert sigma(1, 1, 1) == (1, 1, 1)
    rng = random.Random(6)
    for _ in range(100):
        t = rand_triple(rng)
        T = sigma(*t)
        assert sigma(*T) == t
        g = t[1] ** 3 / (t[0] ** 2 * t[2])
        assert f_explicit_value(*T) == g ** 21 * f_explicit_value(*t)


def test_sigma_geometry_invariants():
    rng = random.Random(61)
    for _ in range(100):
        t = rand_triple(rng)
        m = derive_data(*t)
        mT = derive_data(*sigma(*t))
        assert abs(mT.Z - m.Z) < 1e-12 * max(1, abs(m.Z))
        assert abs(mT.Y - m.Q) < 1e-12 * max(1, abs(m.Q))


def test_solve_uvw():
    m = derive_data(1, 1, 1)
    sols = solve_uvw(m)
    assert len(sols) == 1
    u, v, w = sols[0]
    assert abs(complex(to_mpc(u)) - 1) < 1e-30 and abs(complex(to_mpc(v)) - 1) < 1e-30
    m = derive_data(*EG_EXACT)
    sols = solve_uvw(m)
    assert len(sols) == 2
    u, v, w = sols[0]
    assert abs(complex(to_mpc(w)) - 1) < 1e-30
    assert abs(complex(to_mpc(u - v))) < 1e-30
    assert abs(complex(to_mpc(u)).real - m.X / 2) < 1e-12
    # a square beyond 4: no unit-circle solutions
    m = derive_data(1, 1, 100)
    assert max(m.x2, m.y2, m.z2) > 4 and solve_uvw(m) == []


def test_reconstruct_angles_identity_point():
    from ccg25.moduli import reconstruct_angles
    m = derive_data(1, 1, 1)
    sol = reconstruct_angles(m, solve_uvw(m)[0])
    assert sol.residual < 1e-30
    assert all(abs(float(t)) < 1e-30 or abs(float(t) - 2 * math.pi) < 1e-30 for t in sol.thetas)


def test_construct_standard_exact():
    cc = construct_curve(1, 1, 1)
    r1, r2 = cc.pencil.rows
    assert r1[2][2] == -SqrtSum.sqrt(6) and r1[3][3] == -4 and r1[4][4] == -3
    assert r2[2][1] == SqrtSum.sqrt(6) and r2[3][2] == 3 and r2[4][3] == 2
    assert cc.certificate.reducible and cc.certificate.gram_defect == 0.0
    assert cc.certificate.w_closed == pytest.approx(40 * math.pi, rel=1e-12)


def test_construct_infeasible():
    with pytest.raises(FeasibilityError):
        construct_curve(1, 1, 100)
    with pytest.raises(ValueError):
        construct_curve(1, 1, 1, branch=1)  # only one solution there


def test_construct_branches_conjugate():
    cc0 = construct_curve(*EG_EXACT, branch=0, compute_w=False)
    cc1 = construct_curve(*EG_EXACT, branch=1, compute_w=False)
    assert cc1.solution.conjugate_branch
    distinct = False
    for p, q in zip(cc0.plucker.coords, cc1.plucker.coords):
        for a, b in zip(p.coeffs, q.coeffs):
            za, zb = complex(to_mpc(a)), complex(to_mpc(b))
            assert abs(za - zb.conjugate()) < 1e-40
            distinct |= abs(za - zb) > 1e-12
    assert distinct


def test_count_solutions():
    assert count_solutions(1, 1, 1) == 1
    assert count_solutions(*RMK) == 1
    assert count_solutions(*EG_EXACT) == 2
    assert count_solutions(1, 1, 100) == 0


def test_tau_chart():
    ch = tau_chart(1, 1, 1)
    assert (ch.a2, ch.b2, ch.c2) == (1, 1, 1)
    rng = random.Random(17)
    for _ in range(100):
        t = rand_triple(rng)
        assert tau_inverse(tau_chart(*t)) == t
        cT = tau_chart(*sigma(*t))
        c = tau_chart(*t)
        assert (cT.a2, cT.b2, cT.c2) == (c.c2, c.b2, c.a2)


def test_w_closed():
    assert w_closed(1, 1, 1).pi_multiple == 40
    assert w_closed(1, Fraction(1, 16), 1).pi_multiple == Fraction(184, 7)
    # sigma-related parameters give the same value on solution-set points
    samples = scan(2, Fraction(1, 2), Fraction(3, 2), 6)
    seen = 0
    for s in samples:
        if not s.in_s:
            continue
        seen += 1
        t0 = Fraction(s.t0).limit_denominator(10 ** 14)
        t1 = Fraction(s.t1).limit_denominator(10 ** 14)
        w1 = w_closed(t0, t1, 2)
        w2 = w_closed(2 * t0, 2 * t1, Fraction(1, 2))
        assert abs(w1.value - w2.value) <= 1e-10 * abs(w1.value)
    assert seen >= 3


def test_level_set():
    p = level_set_s1(Fraction(11, 6))
    assert p.f1 == Fraction(1331, 864) and p.f2 == Fraction(1331, 864)
    p = level_set_s1(1)
    assert p.f1 == 1 and p.f2 == Fraction(1, 16)
    for k in range(4):
        s = Fraction(1) + Fraction(5, 6) * Fraction(k, 3)
        pt = level_set_s1(s)
        assert all(not r for r in pt.membership)
    assert s1_product_identity()
    with pytest.raises(ValueError):
        level_set_s1(Fraction(2))


def test_family33():
    pen, info = family33_curve(math.pi)
    assert info["t1"] == pytest.approx(1.0)
    assert complex(to_mpc(pen.rows[0][3][3])) == pytest.approx(-4)
    pen, info = family33_curve(0.0)
    assert info["t1"] == pytest.approx(1 / 16)
    assert complex(to_mpc(pen.rows[0][3][3])) == pytest.approx(-2)


def test_perturbed_residual():
    om = omega_from_orbit(orbit_point(GroupElement(Fraction(1), Fraction(0),
                                                   Fraction(1), Fraction(1)), "open"))
    assert all(not r for r in perturbed_residual(om))
    om = omega_from_orbit(orbit_point(GroupElement.identity(), "u5v"))
    assert all(not r for r in perturbed_residual(om))
    rs = perturbed_residual([Fraction(1), 0, 0, 0, 0, 0, Fraction(1)])
    assert rs[2] == 1 and all(not r for i, r in enumerate(rs) if i != 2)


def test_scan_structure():
    samples = scan(1, 1, Fraction(11, 6), 4, workers=2)
    assert samples == scan(1, 1, Fraction(11, 6), 4)  # deterministic merge
    blue = [s for s in samples if s.kind == "segment"]
    assert min(abs(s.t1 - 1 / 16) for s in blue) < 1e-9
    assert min(abs(s.t1 - 1) for s in blue) < 1e-9
    tip = [s for s in samples if abs(s.t0 - 11 / 6) < 1e-12 and s.in_s]
    assert len(tip) == 1 and abs(tip[0].t1 - 1331 / 864) < 1e-9 and tip[0].count == 2


def test_scan_example5_row_infeasible():
    # the root present at this column fails the inequalities, so the row
    # contributes nothing to the solution set
    col = scan_column(Fraction(1475, 10000), Fraction(8, 15))
    assert all(not s.in_s for s in col)


def test_scan_sample_csv():
    samples = scan(1, 1, Fraction(3, 2), 2)
    row = samples[0].csv_row()
    assert len(row.split(",")) == 10


def test_reconstruct_blue_segment_angle_pattern():
    # on the segment t0 = 1, the reconstructed angles repeat the pattern
    # theta1 = theta5, theta2 = theta4 up to the Z6 reparametrization lattice
    from ccg25.scalars import mpf_to_fraction
    theta_hat = 1.0
    t1f = (5 - 3 * math.cos(theta_hat)) / (20 + 12 * math.cos(theta_hat))
    with mp.workprec(240):
        t1 = mpf_to_fraction(mp.mpf(t1f))
    t6 = t1 ** 3
    cc = construct_curve(1, t1, t6, membership_tol=Fraction(1, 10 ** 10), compute_w=False)
    th = [float(t) for t in cc.solution.thetas]
    d15 = th[0] - th[4]
    d24 = th[1] - th[3]

    def wraps_to_zero(x):
        return abs((x + math.pi) % (2 * math.pi) - math.pi) < 1e-8

    assert any(wraps_to_zero(d15 + 2 * math.pi * k * (1 - 5) / 6)
               and wraps_to_zero(d24 + 2 * math.pi * k * (2 - 4) / 6) for k in range(6))


def test_branches_equal_w():
    cc0 = construct_curve(*EG_EXACT, branch=0)
    cc1 = construct_curve(*EG_EXACT, branch=1)
    assert abs(cc0.certificate.w_numeric - cc1.certificate.w_numeric) \
        <= 1e-8 * abs(cc0.certificate.w_numeric)


def test_h_zero_ellipse_bounds():
    # on H = 0 with Z in (-2, 2), real Y forces X in (-2, 2) and both roots
    # Y stay within [-2, 2]
    rng = random.Random(1000)
    count = 0
    while count < 1000:
        X = rng.uniform(-1.999, 1.999)
        Z = rng.uniform(-1.999, 1.999)
        disc = (4 - X * X) * (4 - Z * Z)
        for sign in (1, -1):
            Y = (X * Z + sign * math.sqrt(disc)) / 2
            h = -X * Y * Z + X * X + Y * Y + Z * Z - 4
            assert abs(h) < 1e-9
            assert abs(Y) <= 2 + 1e-12
            count += 1


def test_f_gradient_finite_difference_at_ones():
    from ccg25.polynomials import eval_and_gradient
    val, grad = eval_and_gradient(F_POLY, (Fraction(1), Fraction(1), Fraction(1)))
    assert val == 0
    with mp.workprec(240):
        h = mp.mpf(10) ** -8
        for i in range(3):
            up = [mp.mpf(1)] * 3
            dn = [mp.mpf(1)] * 3
            up[i] += h
            dn[i] -= h
            fd = (F_POLY.evaluate(up) - F_POLY.evaluate(dn)) / (2 * h)
            gi = mp.mpf(grad[i].numerator) / grad[i].denominator
            assert abs(fd - gi) <= mp.mpf(10) ** -6 * max(1, abs(gi))
