import random
from fractions import Fraction

import pytest

from ccg25.scalars import Cyclo8, SqrtSum
from ccg25.sl2 import (E_BASIS, BinaryForm, GroupElement, SkewTensor,
                       UV_QUARTIC_PLAIN, act_plain, commutation_check,
                       form_to_skew, invariant_quadric, isotropy24, orbit_point,
                       rep_matrix, transvectant, wedge_action)

S6 = SqrtSum.sqrt(6)


def rand_sl2(rng):
    while True:
        a, b, c = (Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(3))
        if a:
            return GroupElement(a, b, c, (1 + b * c) / a)


def rand_gl2(rng):
    while True:
        g = GroupElement(*(Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(4)))
        if g.det():
            return g


def mat_eq(M, N):
    return all(not (a - b) or a == b for row_m, row_n in zip(M, N) for a, b in zip(row_m, row_n))


def test_rep_matrix_identity():
    M = rep_matrix(GroupElement.identity(), 6)
    for k in range(7):
        for l in range(7):
            assert (M[k][l] == (1 if k == l else 0)) or not (M[k][l] - (1 if k == l else 0))


def test_rep_matrix_diagonal_projective_form():
    # g^{-1}-substitution convention: diag(lam,1) acts as diag(lam^-4,...,1),
    # projectively equal to diag(1, lam, ..., lam^4)
    lam = Fraction(3)
    M = rep_matrix(GroupElement(lam, Fraction(0), Fraction(0), Fraction(1)), 4)
    base = M[0][0]
    for k in range(5):
        assert M[k][k] == base * lam ** k
    for k in range(5):
        for l in range(5):
            if k != l:
                assert not M[k][l]


def test_rep_matrix_singular_rejected():
    with pytest.raises(ValueError):
        rep_matrix(GroupElement(Fraction(1), Fraction(1), Fraction(1), Fraction(1)), 4)


def test_homomorphism_random_pairs():
    rng = random.Random(100)
    for _ in range(100):
        g, h = rand_sl2(rng), rand_sl2(rng)
        Mg, Mh, Mgh = rep_matrix(g, 6), rep_matrix(h, 6), rep_matrix(g @ h, 6)
        for k in range(7):
            for l in range(7):
                acc = None
                for m in range(7):
                    piece = Mg[k][m] * Mh[m][l]
                    acc = piece if acc is None else acc + piece
                assert acc == Mgh[k][l] or not (acc - Mgh[k][l])


def test_transvectant_examples():
    u6 = BinaryForm.from_plain(6, [Fraction(1)] + [Fraction(0)] * 6)
    v6 = BinaryForm.from_plain(6, [Fraction(0)] * 6 + [Fraction(1)])
    t = transvectant(u6, v6, 6)
    assert t.n == 0 and t.coeffs[0] == 1
    p = BinaryForm.from_plain(6, UV_QUARTIC_PLAIN)
    assert transvectant(p, p, 6).coeffs[0] == Fraction(1, 3)
    assert invariant_quadric(p.coeffs) == Fraction(1, 3)
    with pytest.raises(ValueError):
        transvectant(u6, BinaryForm.from_plain(2, [1, 0, 1]), 4)


def test_transvectant_equivariance():
    rng = random.Random(5)
    for _ in range(10):
        g = rand_sl2(rng)
        f = BinaryForm.from_plain(5, [Fraction(rng.randint(-4, 4)) for _ in range(6)])
        h = BinaryForm.from_plain(4, [Fraction(rng.randint(-4, 4)) for _ in range(5)])
        assert transvectant(f.act(g), h.act(g), 2) == transvectant(f, h, 2).act(g)


def test_e_basis_orthonormal():
    for i, Ei in enumerate(E_BASIS):
        for j, Ej in enumerate(E_BASIS):
            ip = Ei.inner(Ej)
            want = 1 if i == j else 0
            assert ip == want or not (ip - want)


def test_form_to_skew_examples():
    u6 = BinaryForm.from_plain(6, [Fraction(1)] + [Fraction(0)] * 6)
    assert form_to_skew(u6) == E_BASIS[0]
    p = BinaryForm.from_plain(6, UV_QUARTIC_PLAIN)
    target = (E_BASIS[1] - E_BASIS[5]).scale(SqrtSum.sqrt(6).inverse())
    assert form_to_skew(p) == target
    with pytest.raises(ValueError):
        form_to_skew(BinaryForm.from_plain(4, [1, 0, 0, 0, 1]))


def test_orbit_points():
    op = orbit_point(GroupElement.identity(), "open")
    assert op[1] == 1 and op[5] == -1
    assert all(not op[i] for i in (0, 2, 3, 4, 6))
    op2 = orbit_point(GroupElement(Fraction(1), Fraction(0), Fraction(1), Fraction(1)), "open")
    assert op2[1] == -4 and op2[2] == SqrtSum.sqrt(10) * 2
    assert op2[3] == -SqrtSum.sqrt(30) and op2[4] == SqrtSum.sqrt(10) and op2[5] == -1
    op3 = orbit_point(GroupElement.identity(), "u5v")
    assert op3[1] == 1 and all(not op3[i] for i in range(7) if i != 1)
    u6pt = orbit_point(GroupElement.identity(), "u6")
    assert u6pt[0] == 1 and all(not u6pt[i] for i in range(1, 7))


def test_quadric_orbit_identities():
    rng = random.Random(77)
    for _ in range(50):
        g = rand_gl2(rng)
        assert invariant_quadric(orbit_point(g, "open")) == 2 * g.det() ** 6
        q = invariant_quadric(orbit_point(g, "u5v"))
        assert not q
    assert invariant_quadric((1, 0, 0, 0, 0, 0, 0)) == 0


def test_isotropy24():
    iso = isotropy24()
    assert len(iso) == 24
    plain = [Cyclo8(x) for x in UV_QUARTIC_PLAIN]
    for gel in iso:
        moved = act_plain(gel, plain, 6)
        ratio = None
        for m, orig in zip(moved, UV_QUARTIC_PLAIN):
            if orig == 0:
                assert not m
            else:
                r = m / Cyclo8(orig)
                ratio = ratio if ratio is not None else r
                assert r == ratio
    # diag(xi, 1/xi) with xi = e^{i pi/4} flips the sign of u^5 v - u v^5
    xi = Cyclo8.zeta()
    moved = act_plain(GroupElement(xi, Cyclo8(0), Cyclo8(0), xi.inverse()), plain, 6)
    assert moved[1] == Cyclo8(-1) and moved[5] == Cyclo8(1)
    for g1 in iso[:8]:
        for g2 in iso:
            assert any((g1 @ g2).is_projectively_equal(h) for h in iso)


def test_commutation_check():
    assert commutation_check(GroupElement.identity())
    assert commutation_check(GroupElement(Fraction(1), Fraction(7, 3), Fraction(0), Fraction(1)))
    assert commutation_check(GroupElement(Fraction(2), Fraction(0), Fraction(0), Fraction(1, 2)))
    rng = random.Random(3)
    for _ in range(5):
        assert commutation_check(rand_sl2(rng))


def test_wedge_action_preserves_v6_span():
    # the E-span is invariant: each transformed basis element reprojects exactly
    rng = random.Random(9)
    for _ in range(10):
        g = rand_sl2(rng)
        for E in E_BASIS:
            moved = wedge_action(g, E, 4)
            recon = None
            for Ek in E_BASIS:
                coef = moved.inner(Ek)
                piece = Ek.scale(coef)
                recon = piece if recon is None else recon + piece
            assert moved == recon


def test_orbit_satisfies_amplitude_constraints():
    from ccg25.moduli import omega_from_orbit, perturbed_residual
    rng = random.Random(21)
    for _ in range(100):
        g = rand_gl2(rng)
        for which in ("open", "u5v"):
            om = omega_from_orbit(orbit_point(g, which))
            for r in perturbed_residual(om):
                assert not r


def test_clebsch_gordan_ranks():
    # plain-basis transvectant images of the wedge basis of V4 ^ V4:
    # p = 1 spans V6 (rank 7) and p = 3 spans V2 (rank 3)
    def plain_monomial(n, l):
        plain = [Fraction(0)] * (n + 1)
        plain[l] = Fraction(1)
        return BinaryForm.from_plain(n, plain)

    for p, dim in ((1, 7), (3, 3)):
        rows = []
        for k in range(5):
            for l in range(k + 1, 5):
                f = plain_monomial(4, k)
                h = plain_monomial(4, l)
                t = transvectant(f, h, p)
                rows.append([Fraction(x) if isinstance(x, int) else x for x in t.plain()])
        rank = 0
        cols = len(rows[0])
        r = 0
        work = [row[:] for row in rows]
        for c in range(cols):
            piv = None
            for i in range(r, len(work)):
                if work[i][c]:
                    piv = i
                    break
            if piv is None:
                continue
            work[r], work[piv] = work[piv], work[r]
            for i in range(len(work)):
                if i != r and work[i][c]:
                    f2 = work[i][c] / work[r][c]
                    work[i] = [x - f2 * y for x, y in zip(work[i], work[r])]
            rank += 1
            r += 1
        assert rank == dim


def test_wedge_action_preserves_antisymmetry():
    rng = random.Random(19)
    for _ in range(10):
        g = rand_sl2(rng)
        A = SkewTensor([Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(10)])
        M = rep_matrix(g, 4)
        Am = A.matrix()
        MA = [[sum_prod(M[i], [Am[k][j] for k in range(5)]) for j in range(5)] for i in range(5)]
        MAMt = [[sum_prod(MA[i], M[j]) for j in range(5)] for i in range(5)]
        for i in range(5):
            for j in range(5):
                assert not (MAMt[i][j] + MAMt[j][i])


def sum_prod(row, col):
    acc = None
    for a, b in zip(row, col):
        piece = a * b
        acc = piece if acc is None else acc + piece
    return acc
