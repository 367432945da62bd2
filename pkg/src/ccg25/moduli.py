"""The diagonal-family engine: moduli data, branch solving, curve assembly.

Coordinates on the moduli side are (t0, t1, t6), all positive; the derived
quantities follow the normalization a00 = 1, a22 = a33, theta0 = theta6 = 0:

    t2 = 5 t0 t1 / (3 t0 + 2)          t3 = 5 t0 t1 t6 / (t0 t1^2 + 4 t6)
    t4 = 5 t0 t1^2 t6 / (3 t1^3 + 2 t0 t6)          t5 = t6

X, Y, Z are the three combination ratios whose membership in [-2, 2],
together with the vanishing of the degree-~24 polynomial F(t0, t1, t6),
cuts out the semialgebraic solution set S.  F is carried twice: as the
transcribed explicit polynomial and as the symbolic product
168750000 H t0^6 t1^11 t6^4 / (t2 t3 t4^2); the two must agree exactly
(transcription firewall), both per evaluation and as polynomials.

Curve assembly solves the unit-circle system u^2 - Xu + 1 = 0 etc., picks
angle branches by finite enumeration (2 for theta3, 3 for theta2, residual
<= 1e-10 required), and emits the standard 2x5 pencil together with its
wedge and a full certificate.  When every angle is 0 or pi the pencil is
built over exact radicals, so the two special curves with X = Y = Z = 2
come out coefficient-exact.

sqrt of a positive rational always means the positive root; arguments of
complex numbers live in (-pi, pi].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt
from typing import Optional, Sequence

from mpmath import mp

from .errors import (CertificationError, FeasibilityError,
                     TranscriptionFaultError)
from .grassmann import (Certificate, PencilCurve, PlueckerCurve, certify,
                        wedge_pencil)
from .polynomials import Frac, MultiPoly, UniPoly, isolate_roots
from .scalars import SqrtSum, to_mpc, to_mpf
from .sl2 import E_BASIS

TVARS = ("t0", "t1", "t6")

# explicit F(t0, t1, t6): (exp t0, exp t1, exp t6, coefficient)
F_TERMS = (
    (9, 6, 3, 9),
    (8, 9, 2, 6912), (8, 6, 3, -366), (8, 4, 4, -10260),
    (7, 2, 5, 435888), (7, 4, 4, 299592), (7, 7, 3, -397332), (7, 6, 3, 2560),
    (7, 9, 2, -58329), (7, 12, 1, 63504),
    (6, 0, 6, 65088), (6, 2, 5, 225504), (6, 5, 4, 31968), (6, 4, 4, 533856),
    (6, 7, 3, -451260), (6, 6, 3, -128), (6, 10, 2, -1296), (6, 9, 2, -44868),
    (6, 12, 1, 16416),
    (5, 0, 6, 78720), (5, 3, 5, -1366848), (5, 2, 5, 154368), (5, 5, 4, -2480688),
    (5, 4, 4, 203712), (5, 8, 3, 2125440), (5, 7, 3, 541536), (5, 10, 2, -501336),
    (5, 9, 2, 2560), (5, 13, 1, -190512), (5, 12, 1, -58329), (5, 15, 0, 63504),
    (4, 0, 6, 22016), (4, 3, 5, 15552), (4, 2, 5, 99840), (4, 6, 4, 145152),
    (4, 5, 4, -2192448), (4, 8, 3, 1076544), (4, 7, 3, 533856), (4, 11, 2, 31104),
    (4, 10, 2, -451260), (4, 13, 1, -1296), (4, 12, 1, -366), (4, 15, 0, 6912),
    (3, 0, 6, -1024), (3, 3, 5, -645120), (3, 6, 4, 5774976), (3, 5, 4, 154368),
    (3, 9, 3, -3048192), (3, 8, 3, -2480688), (3, 11, 2, 2125440), (3, 10, 2, 299592),
    (3, 13, 1, -397332), (3, 15, 0, 9),
    (2, 3, 5, 22016), (2, 6, 4, 15552), (2, 9, 3, 145152), (2, 8, 3, 225504),
    (2, 11, 2, 31968), (2, 13, 1, -10260),
    (1, 11, 2, 435888), (1, 9, 3, -1366848), (1, 6, 4, 78720),
    (0, 9, 3, 65088),
)

F_POLY = MultiPoly.from_terms(TVARS, (((a, b, c), k) for a, b, c, k in F_TERMS))


def f_explicit_value(t0, t1, t6):
    """Evaluate the transcribed F; exact on rational inputs."""
    return F_POLY.evaluate((t0, t1, t6))


def f_norm_value(t0, t1, t6):
    """The positive-coefficient majorant sum |coef| t0^a t1^b t6^c (scale for residuals)."""
    total = Fraction(0)
    for a, b, c, k in F_TERMS:
        total += abs(k) * t0 ** a * t1 ** b * t6 ** c
    return total


def derived_tees(t0: Fraction, t1: Fraction, t6: Fraction) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    t2 = 5 * t0 * t1 / (3 * t0 + 2)
    t3 = 5 * t0 * t1 * t6 / (t0 * t1 ** 2 + 4 * t6)
    t4 = 5 * t0 * t1 ** 2 * t6 / (3 * t1 ** 3 + 2 * t0 * t6)
    return t2, t3, t4, t6


def rational_sqrt(x: Fraction) -> Optional[Fraction]:
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True)
class ModuliPoint:
    """Exact derived data attached to a parameter triple (t0, t1, t6)."""

    t0: Fraction
    t1: Fraction
    t6: Fraction
    t2: Fraction
    t3: Fraction
    t4: Fraction
    t5: Fraction
    g: Fraction
    x2: Fraction          # X^2, exact
    y2: Fraction
    z2: Fraction
    xyz: Fraction
    h: Fraction           # -XYZ + X^2 + Y^2 + Z^2 - 4
    f_explicit: Fraction
    f_derived: Fraction
    slacks: tuple[Fraction, Fraction, Fraction]
    q2: Fraction
    q_sign: int
    x_sign: int
    y_sign: int
    z_sign: int
    in_s: bool

    @property
    def X(self) -> float:
        return self.x_sign * math.sqrt(float(self.x2))

    @property
    def Y(self) -> float:
        return self.y_sign * math.sqrt(float(self.y2))

    @property
    def Z(self) -> float:
        return self.z_sign * math.sqrt(float(self.z2))

    @property
    def Q(self) -> float:
        return self.q_sign * math.sqrt(float(self.q2))

    def x_exact(self) -> Optional[Fraction]:
        r = rational_sqrt(self.x2)
        return None if r is None else self.x_sign * r

    def z_exact(self) -> Optional[Fraction]:
        r = rational_sqrt(self.z2)
        return None if r is None else self.z_sign * r


def derive_data(t0, t1, t6, tol: Fraction = Fraction(0)) -> ModuliPoint:
    """All derived moduli data; exact for rational inputs.

    tol > 0 relaxes the membership test |F| <= tol * ||F|| and
    slack <= tol * scale, for points known only approximately.
    """
    t0, t1, t6 = Fraction(t0), Fraction(t1), Fraction(t6)
    if t0 <= 0 or t1 <= 0 or t6 <= 0:
        raise ValueError("moduli parameters must be positive")
    t2, t3, t4, t5 = derived_tees(t0, t1, t6)
    g = t1 ** 3 / (t0 ** 2 * t6)
    nx = 9 * t2 ** 2 + 16 * t1 * t3 - t0 * t4
    ny = 4 * t2 * t3 + 9 * t1 * t4 - t0 * t5
    nz = 64 * t3 ** 2 + 81 * t2 * t4 - t0 * t6
    x2 = nx ** 2 / (144 * t2 ** 2 * t1 * t3)
    y2 = ny ** 2 / (36 * t2 * t3 * t1 * t4)
    z2 = nz ** 2 / (5184 * t3 ** 2 * t2 * t4)
    xyz = nx * ny * nz / (5184 * t1 * t2 ** 2 * t3 ** 2 * t4)
    h = -xyz + x2 + y2 + z2 - 4
    f_exp = f_explicit_value(t0, t1, t6)
    f_der = h * 168750000 * t0 ** 6 * t1 ** 11 * t6 ** 4 / (t2 * t3 * t4 ** 2)
    if f_exp != f_der:
        raise TranscriptionFaultError(
            f"explicit and derived F disagree at ({t0}, {t1}, {t6}): {f_exp} vs {f_der}")
    s_x = nx ** 2 - 576 * t1 * t2 ** 2 * t3
    s_y = ny ** 2 - 144 * t1 * t2 * t3 * t4
    s_z = nz ** 2 - 20736 * t2 * t3 ** 2 * t4
    nq = -t1 * t6 + 9 * t2 * t5 + 4 * t3 * t4
    q2 = nq ** 2 / (36 * t2 * t3 * t4 * t5)
    fn = f_norm_value(t0, t1, t6)
    slack_scales = (576 * t1 * t2 ** 2 * t3, 144 * t1 * t2 * t3 * t4, 20736 * t2 * t3 ** 2 * t4)
    in_s = abs(f_exp) <= tol * fn and all(
        s <= tol * sc for s, sc in zip((s_x, s_y, s_z), slack_scales))
    sign = lambda v: (v > 0) - (v < 0)
    return ModuliPoint(
        t0=t0, t1=t1, t6=t6, t2=t2, t3=t3, t4=t4, t5=t5, g=g,
        x2=x2, y2=y2, z2=z2, xyz=xyz, h=h,
        f_explicit=f_exp, f_derived=f_der,
        slacks=(s_x, s_y, s_z), q2=q2, q_sign=sign(nq),
        x_sign=sign(nx), y_sign=sign(ny), z_sign=sign(nz), in_s=in_s,
    )


def f_value(t0, t1, t6) -> tuple[Fraction, Fraction]:
    """(explicit, derived) values of F; they are guarded to agree exactly."""
    mp_ = derive_data(t0, t1, t6)
    return mp_.f_explicit, mp_.f_derived


def feasibility(mp_: ModuliPoint) -> tuple[tuple[Fraction, Fraction, Fraction], float, bool]:
    """Inequality slacks, the Q combination, and the membership flag."""
    return mp_.slacks, mp_.Q, mp_.in_s


def sigma(t0, t1, t6) -> tuple[Fraction, Fraction, Fraction]:
    """The reciprocal-reparametrization involution (g t0, g t1, g^3 t6)."""
    t0, t1, t6 = Fraction(t0), Fraction(t1), Fraction(t6)
    g = t1 ** 3 / (t0 ** 2 * t6)
    return (g * t0, g * t1, g ** 3 * t6)


# -- symbolic firewall ---------------------------------------------------------

def derived_f_symbolic() -> Frac:
    """F as the rational expression 168750000 H t0^6 t1^11 t6^4 / (t2 t3 t4^2)."""
    one = MultiPoly.constant(1, TVARS)
    t0 = MultiPoly.variable("t0", TVARS)
    t1 = MultiPoly.variable("t1", TVARS)
    t6 = MultiPoly.variable("t6", TVARS)
    def fr(p):
        return Frac(p)
    c = lambda k: MultiPoly.constant(k, TVARS)
    t2 = Frac(c(5) * t0 * t1, c(3) * t0 + c(2))
    t3 = Frac(c(5) * t0 * t1 * t6, t0 * t1 * t1 + c(4) * t6)
    t4 = Frac(c(5) * t0 * t1 * t1 * t6, c(3) * t1 * t1 * t1 + c(2) * t0 * t6)
    t5 = fr(t6)
    ft0, ft1, ft6 = fr(t0), fr(t1), fr(t6)
    nx = t2 * t2.scale(9) + (ft1 * t3).scale(16) - ft0 * t4
    ny = (t2 * t3).scale(4) + (ft1 * t4).scale(9) - ft0 * t5
    nz = (t3 * t3).scale(64) + (t2 * t4).scale(81) - ft0 * ft6
    x2 = (nx * nx) / (t2 * t2 * ft1 * t3).scale(144)
    y2 = (ny * ny) / (t2 * t3 * ft1 * t4).scale(36)
    z2 = (nz * nz) / (t3 * t3 * t2 * t4).scale(5184)
    xyz = (nx * ny * nz) / (ft1 * t2 * t2 * t3 * t3 * t4).scale(5184)
    H = x2 + y2 + z2 - xyz - fr(c(4))
    mon = fr((t0 ** 6) * (t1 ** 11) * (t6 ** 4)).scale(168750000)
    return H * mon / (t2 * t3 * t4 * t4)


def verify_f_identity() -> bool:
    """Exact polynomial identity: derived F equals the transcribed F."""
    return derived_f_symbolic().equals_poly(F_POLY)


# -- branch solving ------------------------------------------------------------

def count_solutions(t0, t1, t6) -> int:
    mp_ = derive_data(t0, t1, t6)
    if not mp_.in_s:
        return 0
    if mp_.x2 == 4 and mp_.y2 == 4 and mp_.z2 == 4 and mp_.xyz == 8:
        return 1
    return 2


def solve_uvw(mp_: ModuliPoint, precision: int = 200,
              tol: Fraction = Fraction(0)) -> list[tuple]:
    """Unit-circle triples (u, v, w) with v = u w; 0, 1, or 2 of them.

    tol forgives squares exceeding 4 by at most 4*tol (rational
    approximations of points sitting exactly on a discriminant boundary).
    """
    def gap(v2: Fraction) -> Optional[Fraction]:
        d = 4 - v2
        if d < 0:
            return Fraction(0) if -d <= 4 * tol else None
        return d
    gaps = [gap(v) for v in (mp_.x2, mp_.y2, mp_.z2)]
    if any(d is None for d in gaps):
        return []
    with mp.workprec(precision):
        X = to_mpf(mp_.x_sign) * mp.sqrt(to_mpf(4 - gaps[0]))
        Y = to_mpf(mp_.y_sign) * mp.sqrt(to_mpf(4 - gaps[1]))
        Z = to_mpf(mp_.z_sign) * mp.sqrt(to_mpf(4 - gaps[2]))
        if mp_.x2 == 4 and mp_.y2 == 4 and mp_.z2 == 4 and mp_.xyz == 8:
            u = mp.mpc(X / 2)
            w = mp.mpc(Z / 2)
            return [(u, u * w, w)]
        u = mp.mpc(X / 2, mp.sqrt(gaps[0]) / 2)
        w_plus = mp.mpc(Z / 2, mp.sqrt(gaps[2]) / 2)
        best = None
        for w in (w_plus, mp.conj(w_plus)):
            v = u * w
            resid = abs(2 * mp.re(v) - Y)
            if best is None or resid < best[0]:
                best = (resid, w, v)
        _, w, v = best
        return [(u, v, w), (mp.conj(u), mp.conj(v), mp.conj(w))]


@dataclass
class AngleSolution:
    thetas: tuple  # theta1..theta5 as mpf, theta0 = theta6 = 0 implied
    residual: float
    branch: tuple[int, int]


def _wrap(x):
    twopi = 2 * mp.pi
    y = mp.fmod(x, twopi)
    if y > mp.pi:
        y -= twopi
    if y <= -mp.pi:
        y += twopi
    return y


def reconstruct_angles(mp_: ModuliPoint, uvw: tuple, precision: int = 200,
                       residual_tol: float = 1e-10) -> AngleSolution:
    """Solve the six angle congruences for theta1..theta5 by branch search.

    theta3 has 2 branches from 2*theta3 = arg(y3), theta2 has 3 from
    3*theta2 = arg(y1 x3); the remaining angles follow linearly and every
    candidate is scored by the maximum congruence residual.  Ties go to the
    lexicographically smallest angle tuple in [0, 2 pi)^5.
    """
    u, v, w = uvw
    with mp.workprec(precision):
        t0, t1, t2, t3, t4, t5, t6 = (to_mpf(x) for x in
                                      (mp_.t0, mp_.t1, mp_.t2, mp_.t3, mp_.t4, mp_.t5, mp_.t6))
        y1 = mp.sqrt(t0 * t4) / (4 * mp.sqrt(t1 * t3) * u - 3 * t2)
        x1 = y1 * u
        y2 = mp.sqrt(t0 * t5) / (3 * mp.sqrt(t1 * t4) * v - 2 * mp.sqrt(t2 * t3))
        x2 = y2 * v
        y3 = mp.sqrt(t0 * t6) / (9 * mp.sqrt(t2 * t4) * w - 8 * t3)
        x3 = y3 * w
        args = {k: mp.arg(val) for k, val in
                (("x1", x1), ("y1", y1), ("x2", x2), ("y2", y2), ("x3", x3), ("y3", y3))}
        candidates = []
        for k3 in range(2):
            th3 = _wrap(args["y3"] / 2 + k3 * mp.pi)
            for k2 in range(3):
                th2 = _wrap((args["y1"] + args["x3"]) / 3 + 2 * mp.pi * k2 / 3)
                th4 = _wrap(args["x3"] - th2)
                th1 = _wrap(args["x1"] - th3 + th4)
                th5 = _wrap(th1 + th4 - args["x2"])
                resid = max(
                    abs(_wrap(th1 + th3 - th4 - args["x1"])),
                    abs(_wrap(2 * th2 - th4 - args["y1"])),
                    abs(_wrap(th1 + th4 - th5 - args["x2"])),
                    abs(_wrap(th2 + th3 - th5 - args["y2"])),
                    abs(_wrap(th2 + th4 - args["x3"])),
                    abs(_wrap(2 * th3 - args["y3"])),
                    abs(abs(y1) - 1), abs(abs(y2) - 1), abs(abs(y3) - 1),
                )
                thetas = tuple(mp.fmod(t + 2 * mp.pi, 2 * mp.pi) for t in (th1, th2, th3, th4, th5))
                candidates.append((float(resid), tuple(float(t) for t in thetas), thetas, (k3, k2)))
        candidates.sort(key=lambda c: (c[0] > residual_tol, c[1]))
        best = candidates[0]
        if best[0] > residual_tol:
            raise FeasibilityError(
                f"angle reconstruction residual {best[0]:.3e} exceeds {residual_tol:.1e} "
                "(point off the solution set or precision exhausted)")
        return AngleSolution(thetas=best[2], residual=best[0], branch=best[3])


# -- curve assembly --------------------------------------------------------------

@dataclass
class DiagonalSolution:
    """Fully assembled recipe: branch triple, angles, amplitudes, scalings."""

    uvw: tuple
    thetas: tuple           # theta1..theta5
    omegas: tuple           # omega_0..omega_6
    scalings: tuple         # a00, a11, a22, a33, a44
    conjugate_branch: bool


@dataclass
class ConstructedCurve:
    pencil: PencilCurve
    plucker: PlueckerCurve
    certificate: Certificate
    solution: DiagonalSolution
    point: ModuliPoint

    def __iter__(self):
        return iter((self.pencil, self.plucker, self.certificate))


def _theta_sign(theta, tol=1e-25) -> Optional[int]:
    """+1 / -1 when theta is 0 or pi (mod 2 pi) to within tol, else None.

    Evaluated at the current mpmath working precision so that exact lattice
    angles computed at 200 bits are recognized.
    """
    t = mp.fmod(mp.mpf(theta), 2 * mp.pi)
    if t < 0:
        t += 2 * mp.pi
    for target, s in ((mp.mpf(0), 1), (mp.pi, -1), (2 * mp.pi, 1)):
        if abs(t - target) < tol:
            return s
    return None


def construct_curve(t0, t1, t6, branch: int = 0, precision: int = 200,
                    tol: float = 1e-10, compute_w: bool = True,
                    membership_tol: Fraction = Fraction(0)) -> ConstructedCurve:
    """Assemble and certify the constantly curved curve at (t0, t1, t6).

    branch selects among the unit-circle triples returned by solve_uvw.
    membership_tol relaxes the exact in-S test for rational approximations
    of algebraic points.  The returned certificate is required to show
    vanishing Plucker residuals and Gram defect <= tol, otherwise
    CertificationError.
    """
    mp_ = derive_data(t0, t1, t6, tol=membership_tol)
    if not mp_.in_s:
        raise FeasibilityError(
            f"({t0}, {t1}, {t6}) is not in the solution set: F = {float(mp_.f_explicit):.6e}, "
            f"slack signs {[('<=0' if s <= 0 else '>0') for s in mp_.slacks]}")
    triples = solve_uvw(mp_, precision=precision, tol=membership_tol)
    if not 0 <= branch < len(triples):
        raise ValueError(f"branch {branch} invalid: {len(triples)} solution(s) here")
    uvw = triples[branch]
    # the second branch carries the conjugated triple; conjugating the
    # principal angle solution keeps the two curves coefficient-conjugate
    angles = reconstruct_angles(mp_, triples[0], precision=precision)
    if branch == 1:
        with mp.workprec(precision):
            negated = tuple(mp.fmod(2 * mp.pi - t, 2 * mp.pi) for t in angles.thetas)
        angles = AngleSolution(thetas=negated, residual=angles.residual, branch=angles.branch)
    th = (0,) + tuple(angles.thetas) + (0,)  # theta0..theta6

    with mp.workprec(precision):
        signs = [_theta_sign(t) for t in th]
        sq = {k: mp.sqrt(to_mpf(v)) for k, v in
              (("t0", mp_.t0), ("t1", mp_.t1), ("t2", mp_.t2), ("t3", mp_.t3),
               ("t4", mp_.t4), ("t5", mp_.t5), ("t6", mp_.t6))}
        omegas = tuple(sq[f"t{i}"] * mp.exp(1j * mp.mpf(th[i])) for i in range(7))
        scalings = (mp.mpf(1), 1 / sq["t0"], 1 / sq["t1"], 1 / sq["t1"], sq["t1"] / sq["t6"])

        if all(s is not None for s in signs):
            pencil = _exact_pencil(mp_, signs)
        else:
            pencil = _float_pencil(mp_, th, sq)
        plucker = wedge_pencil(pencil)
        w_pi = w_closed(mp_.t0, mp_.t1, mp_.g)
        cert = certify(plucker, tol=tol, precision_bits=precision,
                       w_closed=w_pi.value, compute_w=compute_w)
    scale = plucker.coeff_scale() ** 2
    if cert.plucker_residual_max > 1e-12 * max(scale, 1e-300) or not cert.curvature_constant:
        raise CertificationError(
            f"assembled curve failed its certificate: residual {cert.plucker_residual_max:.2e}, "
            f"defect {cert.gram_defect:.2e}")
    solution = DiagonalSolution(
        uvw=uvw, thetas=angles.thetas, omegas=omegas,
        scalings=scalings, conjugate_branch=(branch == 1))
    return ConstructedCurve(pencil=pencil, plucker=plucker, certificate=cert,
                            solution=solution, point=mp_)


def _exact_pencil(mp_: ModuliPoint, signs: Sequence[int]) -> PencilCurve:
    """Standard parameterization with exact radical entries (angles 0 or pi)."""
    e1, e2, e3, e4 = signs[1], signs[2], signs[3], signs[4]
    alpha2 = -SqrtSum.sqrt(6 * mp_.t2 / (mp_.t0 * mp_.t1)) * e2
    beta3 = -SqrtSum.sqrt(mp_.t3 / (mp_.t0 * mp_.t1)) * (4 * e3)
    phi4 = -SqrtSum.sqrt(mp_.t4 * mp_.t1 / (mp_.t0 * mp_.t6)) * (3 * e4)
    u1 = SqrtSum.sqrt(6) * e1
    v2 = SqrtSum.sqrt(mp_.t2 / mp_.t1) * (3 * e2)
    z3 = SqrtSum.sqrt(mp_.t3 * mp_.t1 / mp_.t6) * (2 * e3)
    Z, O = Fraction(0), Fraction(1)
    row1 = (UniPoly((O,)), UniPoly(), UniPoly((Z, Z, alpha2)),
            UniPoly((Z, Z, Z, beta3)), UniPoly((Z, Z, Z, Z, phi4)))
    row2 = (UniPoly(), UniPoly((O,)), UniPoly((Z, u1)),
            UniPoly((Z, Z, v2)), UniPoly((Z, Z, Z, z3)))
    return PencilCurve(row1, row2)


def _float_pencil(mp_: ModuliPoint, th: Sequence, sq: dict) -> PencilCurve:
    e = [mp.exp(1j * to_mpf(t)) for t in th]
    om = [sq[f"t{i}"] * e[i] for i in range(7)]
    s6 = mp.sqrt(6)
    inv_w0 = 1 / om[0]
    a22 = 1 / sq["t1"]
    a33 = a22
    a44 = sq["t1"] / sq["t6"]
    a11 = 1 / sq["t0"]
    alpha2 = -s6 * om[2] * a22 * inv_w0
    beta3 = -4 * om[3] * a33 * inv_w0
    phi4 = -3 * om[4] * a44 * inv_w0
    d2 = inv_w0 / a11
    u1 = s6 * om[1] * a22 * d2
    v2 = 3 * om[2] * a33 * d2
    z3 = 2 * om[3] * a44 * d2
    Z = mp.mpc(0)
    row1 = (UniPoly((mp.mpc(1),)), UniPoly(), UniPoly((Z, Z, alpha2)),
            UniPoly((Z, Z, Z, beta3)), UniPoly((Z, Z, Z, Z, phi4)))
    row2 = (UniPoly(), UniPoly((mp.mpc(1),)), UniPoly((Z, u1)),
            UniPoly((Z, Z, v2)), UniPoly((Z, Z, Z, z3)))
    return PencilCurve(row1, row2)


# -- tau chart -------------------------------------------------------------------

@dataclass(frozen=True)
class TauChart:
    a2: Fraction
    b2: Fraction
    c2: Fraction

    @property
    def values(self) -> tuple[float, float, float]:
        return (math.sqrt(float(self.a2)), math.sqrt(float(self.b2)), math.sqrt(float(self.c2)))


def tau_chart(t0, t1, t6) -> TauChart:
    """(A, B, C) = (sqrt(t0), sqrt(t0/t6) t1, sqrt(t1/(t0 t6)) t1), stored squared."""
    t0, t1, t6 = Fraction(t0), Fraction(t1), Fraction(t6)
    if t0 <= 0 or t1 <= 0 or t6 <= 0:
        raise ValueError("positivity violated")
    return TauChart(a2=t0, b2=t0 * t1 ** 2 / t6, c2=t1 ** 3 / (t0 * t6))


def tau_inverse(chart: TauChart) -> tuple[Fraction, Fraction, Fraction]:
    """Recover (t0, t1, t6) = (A^2, A^4 C^2 / B^2, A^10 C^4 / B^6)."""
    a2, b2, c2 = chart.a2, chart.b2, chart.c2
    return (a2, a2 ** 2 * c2 / b2, a2 ** 5 * c2 ** 2 / b2 ** 3)


# -- W functional ----------------------------------------------------------------

@dataclass(frozen=True)
class WValue:
    pi_multiple: Fraction
    value: float

    def __float__(self):
        return self.value


def w_closed(t0, t1, g) -> WValue:
    """Closed-form integral of |A|^2 over the curve, as an exact multiple of pi."""
    t0, t1, g = Fraction(t0), Fraction(t1), Fraction(g)
    if t0 <= 0 or t1 <= 0 or g <= 0:
        raise ValueError("positivity violated")
    lam = 1 / g
    bracket = (
        1664 * lam ** 4 * t1 ** 2
        + 192 * lam ** 3 * (lam + 1) * t1 ** 2 * t0
        - 144 * lam * (87 * lam ** 2 + 548 * lam + 87) * t1 * t0 ** 5
        - 48 * lam ** 2 * t1 * t0 ** 4 * (673 * (lam + 1) - 1863 * t1)
        + 32 * lam ** 2 * t1 * t0 ** 3 * (1701 * (lam + 1) * t1 - 374 * lam)
        + 144 * lam ** 2 * (101 * lam ** 2 + 4 * lam + 101) * t1 ** 2 * t0 ** 2
        - 9 * (249 * lam ** 2 + 1396 * lam + 249) * t0 ** 8
        - 36 * lam * t0 ** 7 * (158 * (lam + 1) - 567 * t1)
        - 2673 * (lam + 1) * t0 ** 9
        - 4 * lam * t0 ** 6 * (574 * lam + 4671 * (lam + 1) * t1)
        + 3564 * t0 ** 10
    )
    denom = 105 * (3 * t0 + 2) ** 2 * (2 * lam + 3 * t0) ** 2 * (4 * lam * t1 + t0 ** 3) ** 2
    multiple = 2 * (20 + Fraction(16) * bracket / denom)
    return WValue(pi_multiple=multiple, value=float(multiple) * math.pi)


# -- the g = 1 level set ----------------------------------------------------------

S1_QUADRATIC = MultiPoly.from_terms(
    ("t0", "t1"),
    [((8, 0), 441), ((7, 0), -42), ((6, 0), 1), ((5, 1), -72), ((4, 1), -5136),
     ((3, 1), -1592), ((2, 2), 7056), ((1, 2), -672), ((0, 2), 16)],
)
S1_LINEAR = MultiPoly.from_terms(("t0", "t1"), [((1, 0), 1), ((0, 0), -1)])
S1_CUBIC = MultiPoly.from_terms(("t0", "t1"), [((3, 0), 2), ((1, 1), -3), ((0, 1), 1)])


@dataclass
class S1Point:
    s: Fraction
    f1: SqrtSum
    f2: SqrtSum
    membership: tuple  # residuals of F on the two branches (exact SqrtSum)

    @property
    def f1_float(self) -> float:
        return float(self.f1)

    @property
    def f2_float(self) -> float:
        return float(self.f2)


def level_set_s1(s) -> S1Point:
    """The two psi-branch values of t1 over t0 = s on the g = 1 level set.

    F1/F2 = s^3 (199 + 642 s + 9 s^2 +- 30 Delta) / (4 (21 s - 1)^2) with
    Delta = (3 s + 2) sqrt((4 s + 1)(11 - 6 s)); exact radical arithmetic,
    and the membership residuals F(s, Fi, Fi^3/s^2) are computed exactly.
    """
    s = Fraction(s)
    if not Fraction(1) <= s <= Fraction(11, 6):
        raise ValueError(f"s = {s} outside [1, 11/6]")
    delta = SqrtSum.sqrt((4 * s + 1) * (11 - 6 * s)) * (3 * s + 2)
    base = SqrtSum.from_rational(199 + 642 * s + 9 * s ** 2)
    scale = Fraction(s ** 3, 4 * (21 * s - 1) ** 2)
    f1 = (base + delta * 30) * scale
    f2 = (base - delta * 30) * scale
    resids = []
    for f in (f1, f2):
        t6 = f ** 3 * (1 / s ** 2)
        resids.append(F_POLY.evaluate((SqrtSum.from_rational(s), f, t6)))
    return S1Point(s=s, f1=f1, f2=f2, membership=tuple(resids))


def s1_product_identity() -> bool:
    """The exact g = 1 factorization of F.

    F(t0, t1, t1^3/t0^2) t0^9 equals
    16 (3 t0 + 2)^2 t1^15 (quadratic)(t0 - 1)(2 t0^3 - 3 t1 t0 + t1),
    which proves the three-branch structure of the level set in one identity
    (the leading factors are strictly positive on t0, t1 > 0).
    """
    V = ("t0", "t1")
    cleared = MultiPoly.from_terms(
        V, (((a - 2 * c + 9, b + 3 * c), k) for a, b, c, k in F_TERMS))
    positive = MultiPoly.from_terms(V, [((2, 0), 144), ((1, 0), 192), ((0, 0), 64)])
    t1_15 = MultiPoly.from_terms(V, [((0, 15), 1)])
    prod = S1_QUADRATIC * S1_LINEAR * S1_CUBIC * t1_15 * positive
    return cleared == prod


# -- generators -------------------------------------------------------------------

def perturbed_residual(omega: Sequence) -> list:
    """The five quadratic constraints on the diagonal amplitudes."""
    w = list(omega)
    if len(w) != 7:
        raise ValueError("need 7 amplitudes")
    return [
        w[0] * w[4] - 4 * (w[1] * w[3]) + 3 * (w[2] * w[2]),
        w[0] * w[5] - 3 * (w[1] * w[4]) + 2 * (w[2] * w[3]),
        w[0] * w[6] - 9 * (w[2] * w[4]) + 8 * (w[3] * w[3]),
        w[2] * w[6] - 4 * (w[3] * w[5]) + 3 * (w[4] * w[4]),
        w[1] * w[6] - 3 * (w[2] * w[5]) + 2 * (w[3] * w[4]),
    ]


def omega_from_orbit(point7: Sequence) -> list:
    """Amplitudes from orbit coordinates: omega_i = a_i / sqrt(binom(6,i))."""
    out = []
    for i, a in enumerate(point7):
        root = SqrtSum.sqrt(Fraction(1, comb(6, i)))
        if isinstance(a, (int, Fraction, SqrtSum)):
            out.append(root * a)
        else:
            out.append(a / math.sqrt(comb(6, i)))
    return out


def _residual_ok(omega: Sequence, tol: float = 1e-10) -> bool:
    scale = max((abs(complex(to_mpc(x))) for x in omega), default=0.0) ** 2
    for r in perturbed_residual(omega):
        if isinstance(r, (int, Fraction, SqrtSum)):
            if r != 0 and r:
                return False
        elif abs(complex(to_mpc(r))) > tol * max(scale, 1e-300):
            return False
    return True


def transversal_curve(omega: Sequence, tol: float = 1e-10) -> PlueckerCurve:
    """(E_0..E_6) diag(omega) Z_6(z) with the amplitude constraints enforced."""
    if not _residual_ok(omega, tol):
        raise ValueError("amplitudes violate the five quadratic constraints")
    coords = []
    for r in range(10):
        coeffs = []
        for i in range(7):
            e = E_BASIS[i].v[r]
            if isinstance(e, (int, Fraction, SqrtSum)) and isinstance(omega[i], (int, Fraction, SqrtSum)):
                coeffs.append(SqrtSum.sqrt(comb(6, i)) * omega[i] * e)
            else:
                coeffs.append(math.sqrt(comb(6, i)) * complex(to_mpc(omega[i])) * complex(to_mpc(e)))
        coords.append(UniPoly(coeffs))
    return PlueckerCurve(coords, normalize=False)


def tangential_curve(tau: Sequence, mu, tol: float = 1e-10) -> PlueckerCurve:
    """(E_0..E_6) L Z_6(z) with the unipotent lower-triangular L(tau, mu)."""
    if not _residual_ok(tau, tol):
        raise ValueError("amplitudes violate the five quadratic constraints")
    if not complex(to_mpc(mu)):
        raise ValueError("mu must be nonzero")
    t = [complex(to_mpc(x)) for x in tau]
    m = complex(to_mpc(mu))
    r = {k: math.sqrt(k) for k in (3, 5, 6, 10, 15, 30)}
    L = [
        [t[0]],
        [r[6] * t[1], -m * t[0]],
        [r[15] * t[2], -r[10] * m * t[1], m ** 2 * t[0]],
        [2 * r[5] * t[3], -r[30] * m * t[2], 2 * r[3] * m ** 2 * t[1], -m ** 3 * t[0]],
        [r[15] * t[4], -2 * r[10] * m * t[3], 6 * m ** 2 * t[2], -2 * r[3] * m ** 3 * t[1],
         m ** 4 * t[0]],
        [r[6] * t[5], -5 * m * t[4], 2 * r[10] * m ** 2 * t[3], -r[30] * m ** 3 * t[2],
         r[10] * m ** 4 * t[1], -m ** 5 * t[0]],
        [t[6], -r[6] * m * t[5], r[15] * m ** 2 * t[4], -2 * r[5] * m ** 3 * t[3],
         r[15] * m ** 4 * t[2], -r[6] * m ** 5 * t[1], m ** 6 * t[0]],
    ]
    coords = []
    for row in range(10):
        coeffs = []
        for col in range(7):
            acc = 0j
            for k in range(col, 7):
                if col < len(L[k]):
                    acc += complex(to_mpc(E_BASIS[k].v[row])) * L[k][col]
            coeffs.append(acc * math.sqrt(comb(6, col)))
        coords.append(UniPoly(coeffs))
    return PlueckerCurve(coords, normalize=False)


def family33_t1(theta: float) -> float:
    return (5 - 3 * math.cos(theta)) / (20 + 12 * math.cos(theta))


def family33_curve(theta: float) -> tuple[PencilCurve, dict]:
    """The explicit one-parameter family of standard parameterizations.

    Returns the pencil and its moduli data t0 = 1, t1(theta), g = 1; the
    angle convention here makes theta = pi the standard curve.
    """
    e = complex(math.cos(theta), math.sin(theta))
    s6 = math.sqrt(6)
    Z = 0j
    row1 = (UniPoly((1 + 0j,)), UniPoly(), UniPoly((Z, Z, -s6)),
            UniPoly((Z, Z, Z, -3 + e)), UniPoly((Z, Z, Z, Z, -3 + 0j)))
    row2 = (UniPoly(), UniPoly((1 + 0j,)), UniPoly((Z, s6)),
            UniPoly((Z, Z, 3 + 0j)), UniPoly((Z, Z, Z, 3 + e)))
    info = {"t0": 1.0, "t1": family33_t1(theta), "g": 1.0, "theta": theta}
    return PencilCurve(row1, row2), info


def generators(kind: str, **kw):
    """Dispatch for the three curve generators (family33 / transversal / tangential)."""
    if kind == "family33":
        return family33_curve(kw["theta"])
    if kind == "transversal":
        return transversal_curve(kw["omega"], tol=kw.get("tol", 1e-10))
    if kind == "tangential":
        return tangential_curve(kw["tau"], kw["mu"], tol=kw.get("tol", 1e-10))
    raise ValueError(f"unknown generator kind {kind!r}")


# -- parameter-space scan ----------------------------------------------------------

@dataclass
class ScanSample:
    t0: float
    t1: float
    g: float
    f_resid: float
    x: float
    y: float
    z: float
    in_s: bool
    count: int
    w_over_pi: float
    kind: str = "root"   # "root" | "segment"

    def csv_row(self) -> str:
        def fmt(v: float) -> str:
            return f"{v:.12g}"
        return ",".join([
            fmt(self.t0), fmt(self.t1), fmt(self.g), fmt(self.f_resid),
            fmt(self.x), fmt(self.y), fmt(self.z),
            "1" if self.in_s else "0", str(self.count), fmt(self.w_over_pi),
        ])


SCAN_CSV_HEADER = "t0,t1,g,F,X,Y,Z,in_S,count,W_over_pi"


def _column_poly(g: Fraction, t0: Fraction) -> UniPoly:
    """F(t0, t1, t1^3 / (t0^2 g)) as an exact polynomial in t1."""
    c6 = 1 / (t0 ** 2 * g)
    coeffs: dict[int, Fraction] = {}
    for a, b, c, k in F_TERMS:
        e = b + 3 * c
        coeffs[e] = coeffs.get(e, Fraction(0)) + k * t0 ** a * c6 ** c
    n = max(coeffs) if coeffs else 0
    return UniPoly([coeffs.get(i, Fraction(0)) for i in range(n + 1)])


def _slack_polys(g: Fraction, t0: Fraction) -> list[UniPoly]:
    """The three inequality slacks along a scan column, cleared to polynomials."""
    V = ("t1",)
    t1 = MultiPoly.variable("t1", V)
    c = lambda k: MultiPoly.constant(k, V)
    ft0 = Frac(c(t0))
    ft1 = Frac(t1)
    ft6 = Frac(t1 ** 3).scale(1 / (t0 ** 2 * g))
    t2 = ft0 * ft1.scale(5) / (ft0.scale(3) + Frac(c(2)))
    t3 = (ft0 * ft1 * ft6).scale(5) / (ft0 * ft1 * ft1 + ft6.scale(4))
    t4 = (ft0 * ft1 * ft1 * ft6).scale(5) / ((ft1 * ft1 * ft1).scale(3) + (ft0 * ft6).scale(2))
    nx = (t2 * t2).scale(9) + (ft1 * t3).scale(16) - ft0 * t4
    ny = (t2 * t3).scale(4) + (ft1 * t4).scale(9) - ft0 * ft6
    nz = (t3 * t3).scale(64) + (t2 * t4).scale(81) - ft0 * ft6
    s_x = nx * nx - (ft1 * t2 * t2 * t3).scale(576)
    s_y = ny * ny - (ft1 * t2 * t3 * t4).scale(144)
    s_z = nz * nz - (t2 * t3 * t3 * t4).scale(20736)
    return [s.num.as_unipoly("t1") for s in (s_x, s_y, s_z)]


def scan_column(g: Fraction, t0: Fraction, width: Fraction = Fraction(1, 10 ** 24),
                in_s_tol: Fraction = Fraction(1, 10 ** 18)) -> list[ScanSample]:
    """All positive t1 roots of the column polynomial, with feasibility data."""
    p = _column_poly(g, t0)
    samples: list[ScanSample] = []
    if p.is_zero:
        return _segment_column(g, t0, width, in_s_tol)
    from .polynomials import root_bound
    hi = root_bound(p)
    for lo_, hi_ in isolate_roots(p, (Fraction(0), hi), width):
        t1 = (lo_ + hi_) / 2
        if t1 <= 0:
            continue
        samples.append(_sample_at(g, t0, t1, in_s_tol))
    return samples


def _sample_at(g: Fraction, t0: Fraction, t1: Fraction, in_s_tol: Fraction,
               kind: str = "root") -> ScanSample:
    t6 = t1 ** 3 / (t0 ** 2 * g)
    mp_ = derive_data(t0, t1, t6, tol=in_s_tol)
    count = 0
    if mp_.in_s:
        near_one = (abs(mp_.x2 - 4) <= in_s_tol * 4 and abs(mp_.y2 - 4) <= in_s_tol * 4
                    and abs(mp_.z2 - 4) <= in_s_tol * 4)
        count = 1 if near_one else 2
    fn = f_norm_value(t0, t1, t6)
    resid = float(mp_.f_explicit / fn) if fn else 0.0
    w = w_closed(t0, t1, g)
    return ScanSample(
        t0=float(t0), t1=float(t1), g=float(g), f_resid=resid,
        x=mp_.X, y=mp_.Y, z=mp_.Z, in_s=mp_.in_s, count=count,
        w_over_pi=float(w.pi_multiple), kind=kind)


def _segment_column(g: Fraction, t0: Fraction, width: Fraction,
                    in_s_tol: Fraction) -> list[ScanSample]:
    """Column where F vanishes identically in t1 (the blue-segment case).

    Membership is then cut out by the inequalities alone; their boundary
    roots are isolated and the feasible sub-intervals reported through
    endpoint and midpoint samples.
    """
    raw: list[Fraction] = []
    for sp in _slack_polys(g, t0):
        if sp.is_zero:
            continue
        from .polynomials import root_bound
        for lo_, hi_ in isolate_roots(sp, (Fraction(0), root_bound(sp)), width):
            raw.append((lo_ + hi_) / 2)
    # the three slacks can vanish simultaneously; merge near-identical roots
    boundaries: list[Fraction] = []
    for b in sorted(raw):
        if not boundaries or b - boundaries[-1] > 8 * width:
            boundaries.append(b)
    samples = []
    feasible_pts = []
    for b in boundaries:
        s = _sample_at(g, t0, b, max(in_s_tol, Fraction(1, 10 ** 12)), kind="segment")
        if s.in_s:
            feasible_pts.append(b)
            samples.append(s)
    for a, b in zip(feasible_pts, feasible_pts[1:]):
        mid = (a + b) / 2
        s = _sample_at(g, t0, mid, in_s_tol, kind="segment")
        if s.in_s:
            samples.append(s)
    return sorted(samples, key=lambda s: s.t1)


def scan(g, t0_lo, t0_hi, resolution: int, width: Fraction = Fraction(1, 10 ** 24),
         workers: int = 1) -> list[ScanSample]:
    """Grid scan over t0 at fixed g; deterministic column-major ordering."""
    if resolution < 2:
        raise ValueError("resolution must be at least 2")
    g, t0_lo, t0_hi = Fraction(g), Fraction(t0_lo), Fraction(t0_hi)
    grid = [t0_lo + (t0_hi - t0_lo) * j / (resolution - 1) for j in range(resolution)]
    if workers > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=workers) as pool:
            columns = list(pool.map(lambda t0: scan_column(g, t0, width), grid))
    else:
        columns = [scan_column(g, t0, width) for t0 in grid]
    out: list[ScanSample] = []
    for col in columns:
        out.extend(col)
    return out
