import math
import random
from fractions import Fraction

import numpy as np
import pytest

from ccg25.errors import ContractViolationError, DegenerateInputError
from ccg25.grassmann import (Certificate, PencilCurve, PlueckerCurve,
                             center_genericity, center_map, certify,
                             gram_and_defect, jp_checks, pluecker_residual,
                             ramification, second_ff_norm, w_numeric,
                             wedge_pencil)
from ccg25.moduli import (construct_curve, family33_curve, omega_from_orbit,
                          tangential_curve, transversal_curve)
from ccg25.polynomials import UniPoly
from ccg25.scalars import SqrtSum, to_mpc
from ccg25.sl2 import E_BASIS, PAIR_INDEX, GroupElement, SkewTensor, orbit_point

S6 = SqrtSum.sqrt(6)
ONE = UniPoly.constant(Fraction(1))
ZERO = UniPoly.zero()


def standard_pencil() -> PencilCurve:
    row1 = (ONE, ZERO, UniPoly.monomial(-S6, 2), UniPoly.monomial(Fraction(-4), 3),
            UniPoly.monomial(Fraction(-3), 4))
    row2 = (ZERO, ONE, UniPoly.monomial(S6, 1), UniPoly.monomial(Fraction(3), 2),
            UniPoly.monomial(Fraction(2), 3))
    return PencilCurve(row1, row2)


def test_wedge_standard_curve():
    F = wedge_pencil(standard_pencil())
    mags = [1, 6, 9, 4, 6, 16, 9, 6, 6, 1]
    for p, m in zip(F.coords, mags):
        lead = p.coeffs[-1]
        sq = lead * lead
        assert sq == m or not (sq - m)
    for r in pluecker_residual(F):
        assert r.is_zero


def test_wedge_constant_rows():
    pen = PencilCurve((ONE, ZERO, ZERO, ZERO, ZERO), (ZERO, ONE, ZERO, ZERO, ZERO))
    F = wedge_pencil(pen)
    assert F.coords[0] == ONE and all(p.is_zero for p in F.coords[1:])


def test_wedge_dependent_rows_rejected():
    with pytest.raises(DegenerateInputError):
        wedge_pencil(PencilCurve((ONE, ONE, ZERO, ZERO, ZERO), (ONE, ONE, ZERO, ZERO, ZERO)))


def test_wedge_decomposability_random_pencils():
    rng = random.Random(12)
    for _ in range(100):
        rows = []
        for _ in range(2):
            rows.append(tuple(UniPoly([Fraction(rng.randint(-3, 3)) for _ in range(rng.randint(1, 4))])
                              for _ in range(5)))
        try:
            F = wedge_pencil(PencilCurve(*rows))
        except DegenerateInputError:
            continue
        for r in pluecker_residual(F):
            assert r.is_zero


def test_nondecomposable_residual():
    coords = [ONE, ZERO, ZERO, ZERO, ZERO, ZERO, ZERO, ONE, ZERO, ZERO]
    F = PlueckerCurve(coords, normalize=False)
    rs = pluecker_residual(F)
    assert rs[0] == ONE and all(r.is_zero for r in rs[1:])


def test_gram_standard_and_scaled():
    F = wedge_pencil(standard_pencil())
    G, defect = gram_and_defect(F)
    assert defect == 0.0
    for k in range(7):
        want = [1, 6, 15, 20, 15, 6, 1][k]
        assert G[k][k] == want or not (G[k][k] - want)
    scaled = list(F.coords)
    scaled[9] = scaled[9].scale(Fraction(2))
    G2, defect2 = gram_and_defect(PlueckerCurve(scaled, normalize=False))
    assert abs(defect2 - 3.0) < 1e-12  # |4 - 1| * c with c = 1


def test_gram_needs_degree_six():
    with pytest.raises(ValueError):
        gram_and_defect(PlueckerCurve([ONE] + [ZERO] * 9, normalize=False))


def test_gram_defect_unitary_invariance():
    rng = np.random.default_rng(42)
    curves = [wedge_pencil(standard_pencil()),
              wedge_pencil(family33_curve(math.pi / 2)[0]),
              wedge_pencil(family33_curve(1.0)[0]),
              construct_curve(Fraction(11, 6), Fraction(1331, 864),
                              Fraction(19487171, 17915904), compute_w=False).plucker,
              construct_curve(1, Fraction(1, 16), Fraction(1, 4096), compute_w=False).plucker]
    pairs = [(i, j) for i in range(5) for j in range(i + 1, 5)]
    for _ in range(4):
        M = rng.normal(size=(5, 5)) + 1j * rng.normal(size=(5, 5))
        U, _ = np.linalg.qr(M)
        wedge_u = np.zeros((10, 10), dtype=complex)
        for a, (i, j) in enumerate(pairs):
            for b, (k, l) in enumerate(pairs):
                wedge_u[a, b] = U[i, k] * U[j, l] - U[i, l] * U[j, k]
        for F in curves:
            coeff_rows = []
            deg = F.degree
            arr = np.array([[complex(to_mpc(p[k])) for k in range(deg + 1)] for p in F.coords])
            moved = wedge_u @ arr
            coords = [UniPoly([complex(c) for c in row]) for row in moved]
            _, d0 = gram_and_defect(F)
            _, d1 = gram_and_defect(PlueckerCurve(coords, normalize=False))
            assert abs(d0 - d1) < 1e-12


def test_ramification_requires_membership():
    coords = [ONE, ZERO, ZERO, ZERO, ZERO, ZERO, ZERO, ONE, ZERO, ZERO]
    with pytest.raises(ContractViolationError):
        ramification(PlueckerCurve(coords, normalize=False))


def test_ramification_standard_reducible():
    red, div = ramification(wedge_pencil(standard_pencil()))
    assert red and div == []


def test_ramification_family33():
    F = wedge_pencil(family33_curve(math.pi / 2)[0])
    red, div = ramification(F)
    assert not red
    support = sorted(str(p) for p, _ in div)
    assert len(div) == 2 and "inf" in support


def test_ccurve_form_support_contained():
    # diagonal-family pencils with arbitrary amplitudes and angles wedge into
    # G(2,5) monomial curves; ramification support stays within {0, inf}
    rng = random.Random(31)
    for _ in range(100):
        def amp():
            t = rng.uniform(0.2, 2.5)
            th = rng.uniform(0, 2 * math.pi)
            return math.sqrt(t) * complex(math.cos(th), math.sin(th))
        row1 = (ONE, ZERO, UniPoly.monomial(amp(), 2), UniPoly.monomial(amp(), 3),
                UniPoly.monomial(amp(), 4))
        row2 = (ZERO, ONE, UniPoly.monomial(amp(), 1), UniPoly.monomial(amp(), 2),
                UniPoly.monomial(amp(), 3))
        F = wedge_pencil(PencilCurve(row1, row2))
        red, div = ramification(F)
        if red:
            continue
        for p, _ in div:
            assert p == "inf" or abs(complex(to_mpc(p))) < 1e-8


def test_jp_checks():
    ns, res = jp_checks(standard_pencil())
    assert ns is False  # 4 + 3 != 6
    assert max(res) < 1e-12
    row2 = (ZERO, ONE, UniPoly.monomial(Fraction(2), 1), UniPoly.monomial(Fraction(3), 2),
            UniPoly.monomial(Fraction(2), 3))
    pen = PencilCurve(standard_pencil().rows[0], row2)
    ns2, res2 = jp_checks(pen)
    assert abs(res2[0] - 2) < 1e-12
    with pytest.raises(ValueError):
        jp_checks(PencilCurve((ONE, ONE, ZERO, ZERO, ZERO), (ZERO, ONE, ZERO, ZERO, ZERO)))


def test_second_ff():
    F = wedge_pencil(standard_pencil())
    for z in (0.0, 0.5 + 0.5j, 3.0):
        assert abs(second_ff_norm(F, z) - 20 / 3) < 1e-12
    F2 = wedge_pencil(family33_curve(math.pi / 2)[0])
    assert abs(second_ff_norm(F2, 0.0) - 20 / 3) < 1e-10  # ramified point
    assert abs(second_ff_norm(F2, 0.0) - second_ff_norm(F2, 1.0)) > 1e-3
    with pytest.raises(ContractViolationError):
        tau = omega_from_orbit(orbit_point(GroupElement(
            Fraction(1), Fraction(1), Fraction(1), Fraction(2)), "open"))
        second_ff_norm(tangential_curve(tau, Fraction(1)), 0.0)


def test_w_numeric_standard_and_reversal():
    F = wedge_pencil(standard_pencil())
    w = w_numeric(F)
    assert abs(w - 40 * math.pi) < 1e-6 * 40 * math.pi
    F2 = construct_curve(1, Fraction(1, 16), Fraction(1, 4096), compute_w=False).plucker
    w2 = w_numeric(F2)
    assert abs(w2 - 184 * math.pi / 7) < 1e-6 * w2
    w2r = w_numeric(F2.reversed())
    assert abs(w2 - w2r) < 1e-6 * abs(w2)


def test_tangential_gram_defect_sampled():
    rng = random.Random(14)
    produced = 0
    while produced < 50:
        g = GroupElement(*(Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(4)))
        if not g.det():
            continue
        tau = omega_from_orbit(orbit_point(g, "open"))
        curve = tangential_curve(tau, Fraction(1))
        if curve.degree != 6:
            continue
        produced += 1
        _, defect = gram_and_defect(curve)
        assert defect > 1e-3, "sampled tangential curve unexpectedly constantly curved"


def test_certificate_json_roundtrip():
    import json
    cc = construct_curve(1, 1, 1)
    doc = json.loads(cc.certificate.to_json())
    assert doc["reducible"] is True
    assert doc["gram_defect"] == 0.0
    assert doc["ramified"] == []
    assert doc["precision_bits"] == 200
    assert set(doc) == {"plucker_residual_max", "gram", "gram_defect", "reducible",
                        "ramified", "curvature_constant", "w_closed", "w_numeric",
                        "tolerance", "precision_bits"}


def _skew(entries):
    v = [Fraction(0)] * 10
    for pair, val in entries.items():
        v[PAIR_INDEX[pair]] = val
    return SkewTensor(v)


def test_center_genericity_name_system():
    A = _skew({(0, 3): S6, (1, 2): Fraction(-3)})
    B = _skew({(0, 4): Fraction(2), (1, 3): Fraction(-1)})
    C = _skew({(1, 4): S6, (2, 3): Fraction(-3)})
    res = center_genericity(A, B, C)
    assert res.generic and res.method.startswith("macaulay")


def test_center_genericity_degenerate():
    D = [_skew({(0, k): Fraction(1)}) for k in (1, 2, 3)]
    res = center_genericity(*D)
    assert not res.generic and res.witness is not None
    for q in center_map(*D):
        total = Fraction(0)
        for (i, j, k), cf in q.items():
            total += Fraction(cf) * res.witness[0] ** i * res.witness[1] ** j * res.witness[2] ** k
        assert total == 0


def test_center_genericity_random_and_dependent():
    rng = random.Random(8)
    for _ in range(3):
        mats = [SkewTensor([Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(10)])
                for _ in range(3)]
        res = center_genericity(*mats)
        assert res.generic
    A = _skew({(0, 1): Fraction(1)})
    with pytest.raises(DegenerateInputError):
        center_genericity(A, A.scale(Fraction(2)), _skew({(0, 2): Fraction(1)}))


def test_orbit_point_constant_curve_in_grassmannian():
    # the E-embedded orbit point, seen as a constant curve, satisfies all
    # five quadrics exactly
    rng = random.Random(23)
    for _ in range(10):
        g = GroupElement(*(Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(4)))
        if not g.det():
            continue
        pt = orbit_point(g, "open")
        skew = None
        for a, E in zip(pt, E_BASIS):
            piece = E.scale(a)
            skew = piece if skew is None else skew + piece
        F = PlueckerCurve([UniPoly((c,)) for c in skew.v], normalize=False)
        for r in pluecker_residual(F):
            assert r.is_zero or not any(r.coeffs)
