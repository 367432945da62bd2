"""SL2 representations on binary forms, transvectants, and the V6 skew model.

Conventions fixed here and relied on everywhere else:

  * A degree-n binary form is stored against the normalized basis
    e_l = sqrt(C(n,l)) u^(n-l) v^l; "plain" coefficient lists are against
    the monomials u^(n-l) v^l themselves.
  * The group acts by substitution with the INVERSE matrix,
    (g.f)(u,v) = f(g^{-1} (u,v)^t), so rep_matrix(diag(lam,1), 4) is
    diag(lam^-4, ..., 1), projectively equal to diag(1, lam, ..., lam^4).
    All projective comparisons normalize the first nonzero entry to 1.
  * wedge^2 C^5 coordinates are ordered lexicographically:
    (0,1),(0,2),(0,3),(0,4),(1,2),(1,3),(1,4),(2,3),(2,4),(3,4).

Exact inputs (Fraction / SqrtSum / Cyclo8 entries) stay exact through every
operation here; anything else falls through to mpmath complex arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from mpmath import mp

from .scalars import Cyclo8, SqrtSum, conj, is_exact, to_mpc

PAIRS: tuple[tuple[int, int], ...] = (
    (0, 1), (0, 2), (0, 3), (0, 4), (1, 2),
    (1, 3), (1, 4), (2, 3), (2, 4), (3, 4),
)
PAIR_INDEX = {p: k for k, p in enumerate(PAIRS)}


@dataclass(frozen=True)
class GroupElement:
    """2x2 invertible matrix (a, b; c, d) over any scalar kind."""

    a: object
    b: object
    c: object
    d: object

    @staticmethod
    def identity() -> "GroupElement":
        return GroupElement(Fraction(1), Fraction(0), Fraction(0), Fraction(1))

    @staticmethod
    def diag(x, y) -> "GroupElement":
        return GroupElement(x, Fraction(0) * 1, Fraction(0), y) if is_exact(x) else GroupElement(x, 0.0, 0.0, y)

    def det(self):
        return self.a * self.d - self.b * self.c

    def __matmul__(self, o: "GroupElement") -> "GroupElement":
        return GroupElement(
            self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d,
        )

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def is_projectively_equal(self, o: "GroupElement") -> bool:
        mine, theirs = self.entries(), o.entries()
        for i in range(4):
            for j in range(4):
                if mine[i] * theirs[j] != mine[j] * theirs[i]:
                    return False
        return True


def act_plain(g: GroupElement, plain: Sequence, n: int) -> list:
    """Plain coefficients of g.f where f has plain coefficients `plain`.

    Substitutes (u, v) -> g^{-1} (u, v)^t = ((d u - b v)/det, (-c u + a v)/det)
    and expands; exact whenever the inputs are exact.
    """
    det = g.det()
    U = (g.d, _negate(g.b))          # coefficients of (u, v) in the new u-slot
    V = (_negate(g.c), g.a)
    # powers of the two linear forms, as plain coefficient lists
    upow = [[_one_like(g.a)]]
    vpow = [[_one_like(g.a)]]
    for _ in range(n):
        upow.append(_linmul(upow[-1], U))
        vpow.append(_linmul(vpow[-1], V))
    out = [None] * (n + 1)
    for j, c in enumerate(plain):
        if _is_zero(c):
            continue
        term = _formmul(upow[n - j], vpow[j])
        for k, t in enumerate(term):
            piece = c * t
            out[k] = piece if out[k] is None else out[k] + piece
    out = [(_zero_like(g.a) if x is None else x) for x in out]
    if det != _one_like(g.a) and not _is_zero(det - _one_like(g.a)):
        scale = det ** n
        out = [_divide(x, scale) for x in out]
    return out


def _negate(x):
    return -x


def _one_like(x):
    if isinstance(x, (int, Fraction)):
        return Fraction(1)
    if isinstance(x, SqrtSum):
        return SqrtSum.from_rational(1)
    if isinstance(x, Cyclo8):
        return Cyclo8(1)
    return 1.0 if isinstance(x, (float, complex)) else mp.mpf(1)


def _zero_like(x):
    return _one_like(x) - _one_like(x)


def _is_zero(x) -> bool:
    try:
        return x == 0 or not x
    except TypeError:
        return False


def _divide(x, y):
    if isinstance(y, (int, Fraction)) and isinstance(x, (int, Fraction)):
        return Fraction(x) / Fraction(y)
    if isinstance(y, (SqrtSum, Cyclo8)):
        return y.inverse() * x
    return x / y


def _linmul(form: list, lin: tuple) -> list:
    """Multiply a plain form by the linear form lin[0]*u + lin[1]*v."""
    out = [None] * (len(form) + 1)
    for k, c in enumerate(form):
        for off, l in enumerate(lin):
            piece = c * l
            idx = k + off
            out[idx] = piece if out[idx] is None else out[idx] + piece
    return [x if x is not None else _zero_like(lin[0]) for x in out]


def _formmul(f: list, g: list) -> list:
    out = [None] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            piece = a * b
            idx = i + j
            out[idx] = piece if out[idx] is None else out[idx] + piece
    return out


class BinaryForm:
    """Degree-n form stored against the normalized basis e_l."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Sequence):
        coeffs = tuple(coeffs)
        if len(coeffs) != n + 1:
            raise ValueError(f"degree-{n} form needs {n + 1} coefficients, got {len(coeffs)}")
        self.n = n
        self.coeffs = coeffs

    @staticmethod
    def from_plain(n: int, plain: Sequence) -> "BinaryForm":
        cs = []
        for l, c in enumerate(plain):
            root = SqrtSum.sqrt(Fraction(1, comb(n, l)))
            if is_exact(c):
                c = Fraction(c) if isinstance(c, int) else c
                cs.append(root * c if not isinstance(c, Cyclo8) else c * _cyclo_scale(root))
            else:
                cs.append(c / float(SqrtSum.sqrt(comb(n, l))))
        return BinaryForm(n, cs)

    def plain(self) -> list:
        out = []
        for l, c in enumerate(self.coeffs):
            root = SqrtSum.sqrt(comb(self.n, l))
            if is_exact(c):
                out.append(root * c if not isinstance(c, Cyclo8) else c * _cyclo_scale(root))
            else:
                out.append(c * float(root))
        return out

    def act(self, g: GroupElement) -> "BinaryForm":
        return BinaryForm.from_plain(self.n, act_plain(g, self.plain(), self.n))

    def __eq__(self, other) -> bool:
        return isinstance(other, BinaryForm) and self.n == other.n and all(
            a == b or _is_zero(a - b) for a, b in zip(self.coeffs, other.coeffs)
        )

    def __repr__(self):
        return f"BinaryForm(n={self.n}, {list(self.coeffs)})"


def _cyclo_scale(root: SqrtSum) -> Cyclo8:
    """Rational SqrtSum scalars may multiply Cyclo8 values; radicals may not."""
    return Cyclo8(root.as_fraction())


def rep_matrix(g: GroupElement, n: int) -> list[list]:
    """Matrix of g on V_n in the normalized basis: g.e_l = sum_k e_k M[k][l]."""
    if _is_zero(g.det()):
        raise ValueError("singular group element")
    cols = []
    for l in range(n + 1):
        plain = [_zero_like(g.a)] * (n + 1)
        plain[l] = _one_like(g.a)
        cols.append(act_plain(g, plain, n))
    M = [[None] * (n + 1) for _ in range(n + 1)]
    for l in range(n + 1):
        for k in range(n + 1):
            entry = cols[l][k]
            ratio = Fraction(comb(n, l), comb(n, k))
            if is_exact(entry):
                M[k][l] = SqrtSum.sqrt(ratio) * entry if not isinstance(entry, Cyclo8) else entry * _cyclo_scale(SqrtSum.sqrt(ratio))
            else:
                M[k][l] = entry * float(SqrtSum.sqrt(ratio))
    return M


def transvectant(f: BinaryForm, h: BinaryForm, p: int) -> BinaryForm:
    """p-th transvectant (f, h)_p, a form of degree deg f + deg h - 2p.

    Differential sum with the classical normalization
    (m-p)! (n-p)! / (m! n!), which for equal degrees is ((n-p)!/n!)^2.
    """
    m, n = f.n, h.n
    if p < 0 or p > m or p > n:
        raise ValueError(f"transvectant order {p} exceeds a degree ({m}, {n})")
    fp, hp = f.plain(), h.plain()
    factor = Fraction(factorial(m - p) * factorial(n - p), factorial(m) * factorial(n))
    total = None
    for i in range(p + 1):
        df = _plain_partial(fp, m, p - i, i)
        dh = _plain_partial(hp, n, i, p - i)
        term = _formmul(df, dh)
        sign = -1 if i % 2 else 1
        coef = sign * comb(p, i)
        term = [t * coef for t in term]
        total = term if total is None else [a + b for a, b in zip(total, term)]
    total = [t * factor for t in total]
    return BinaryForm.from_plain(m + n - 2 * p, total)


def _plain_partial(plain: Sequence, n: int, a: int, b: int) -> list:
    """d^(a+b) / du^a dv^b of a degree-n plain form; degree drops to n-a-b."""
    m = n - a - b
    out = []
    for j2 in range(m + 1):
        j = j2 + b
        fa = _falling(n - j, a) * _falling(j, b)
        out.append(plain[j] * fa)
    return out


def _falling(x: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= x - i
    return out


# -- skew 5x5 model of V6 -----------------------------------------------------

class SkewTensor:
    """Point of wedge^2 C^5 as the 10-vector (p01, ..., p34) in lex order."""

    __slots__ = ("v",)

    def __init__(self, v: Sequence):
        v = tuple(v)
        if len(v) != 10:
            raise ValueError("SkewTensor needs 10 coordinates")
        self.v = v

    @staticmethod
    def from_matrix(m: Sequence[Sequence]) -> "SkewTensor":
        for i in range(5):
            for j in range(5):
                if not _is_zero(m[i][j] + m[j][i]):
                    raise ValueError("matrix is not antisymmetric")
        return SkewTensor(tuple(m[i][j] for i, j in PAIRS))

    @staticmethod
    def basis_vector(i: int, j: int) -> "SkewTensor":
        v = [Fraction(0)] * 10
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        v[PAIR_INDEX[(i, j)]] = Fraction(sign)
        return SkewTensor(v)

    def matrix(self) -> list[list]:
        zero = _zero_like(self.v[0]) if self.v else Fraction(0)
        m = [[zero] * 5 for _ in range(5)]
        for (i, j), x in zip(PAIRS, self.v):
            m[i][j] = x
            m[j][i] = -x
        return m

    def inner(self, other: "SkewTensor"):
        """Hermitian pairing sum_{i<j} p_ij conj(q_ij)."""
        total = None
        for x, y in zip(self.v, other.v):
            piece = x * conj(y)
            total = piece if total is None else total + piece
        return total

    def __add__(self, other: "SkewTensor") -> "SkewTensor":
        return SkewTensor(tuple(a + b for a, b in zip(self.v, other.v)))

    def __sub__(self, other: "SkewTensor") -> "SkewTensor":
        return SkewTensor(tuple(a - b for a, b in zip(self.v, other.v)))

    def scale(self, c) -> "SkewTensor":
        return SkewTensor(tuple(x * c for x in self.v))

    def __eq__(self, other) -> bool:
        return isinstance(other, SkewTensor) and all(_is_zero(a - b) for a, b in zip(self.v, other.v))

    def __repr__(self):
        return f"SkewTensor({list(self.v)})"


def e_basis() -> tuple[SkewTensor, ...]:
    """Orthonormal basis E_0..E_6 of V_6 inside wedge^2 C^5 (exact radicals)."""
    def S(q):
        return SqrtSum.sqrt(Fraction(*q) if isinstance(q, tuple) else q)

    z = Fraction(0)
    one = Fraction(1)
    rows = [
        {(0, 1): one},
        {(0, 2): one},
        {(0, 3): S((3, 5)), (1, 2): S((2, 5))},
        {(0, 4): S((1, 5)), (1, 3): S((1, 5)) * 2},
        {(1, 4): S((3, 5)), (2, 3): S((2, 5))},
        {(2, 4): one},
        {(3, 4): one},
    ]
    out = []
    for entries in rows:
        v = [z] * 10
        for pair, val in entries.items():
            v[PAIR_INDEX[pair]] = val
        out.append(SkewTensor(v))
    return tuple(out)


E_BASIS = e_basis()


def form_to_skew(f: BinaryForm) -> SkewTensor:
    """Embed a degree-6 form as sum a_i E_i (the standard 6-plane picture)."""
    if f.n != 6:
        raise ValueError(f"form_to_skew needs degree 6, got {f.n}")
    total = None
    for a, E in zip(f.coeffs, E_BASIS):
        piece = E.scale(a)
        total = piece if total is None else total + piece
    return total


def wedge_action(g: GroupElement, t: SkewTensor, n: int = 4) -> SkewTensor:
    """rho^n(g) acting on wedge^2: M A M^t on the matrix picture."""
    M = rep_matrix(g, n)
    A = t.matrix()
    MA = [[_dot(M[i], [A[k][j] for k in range(5)]) for j in range(5)] for i in range(5)]
    MAMt = [[_dot(MA[i], M[j]) for j in range(5)] for i in range(5)]
    return SkewTensor(tuple(MAMt[i][j] for i, j in PAIRS))


def _dot(row, col):
    total = None
    for a, b in zip(row, col):
        piece = a * b
        total = piece if total is None else total + piece
    return total


def commutation_check(A: GroupElement, n: int = 4) -> bool:
    """rho^4(A) . (E_0..E_6) == (E_0..E_6) rho^6(A) as 10x7 arrays."""
    det = A.det()
    if is_exact(det):
        if not _is_zero(det - 1):
            raise ValueError("commutation_check needs det A = 1")
    elif abs(complex(to_mpc(det)) - 1) > 1e-9:
        raise ValueError("commutation_check needs det A = 1")
    lhs_cols = [wedge_action(A, E, 4) for E in E_BASIS]
    rho6 = rep_matrix(A, 6)
    exact = all(is_exact(x) for col in lhs_cols for x in col.v)
    for r in range(10):
        for c in range(7):
            rhs = None
            for k in range(7):
                piece = E_BASIS[k].v[r] * rho6[k][c]
                rhs = piece if rhs is None else rhs + piece
            diff = lhs_cols[c].v[r] - rhs
            if exact:
                if not _is_zero(diff):
                    return False
            elif abs(complex(to_mpc(diff))) > 1e-20:
                return False
    return True


# -- the three orbit parametrizations ----------------------------------------

def orbit_point(g: GroupElement, which: str) -> tuple:
    """Projective 7-vector of g acting on uv(u^4-v^4), u^5 v, or u^6.

    Coordinates are against E_0..E_6 (equivalently the normalized e-basis of
    V_6); exact radical arithmetic on exact inputs.
    """
    if _is_zero(g.det()):
        raise ValueError("singular group element")
    a, b, c, d = g.entries()
    exact = all(is_exact(x) for x in g.entries())
    if exact:
        a, b, c, d = (Fraction(x) if isinstance(x, int) else x for x in (a, b, c, d))
        s6, s10, s30 = SqrtSum.sqrt(6), SqrtSum.sqrt(10), SqrtSum.sqrt(30)
    else:
        s6, s10, s30 = (float(SqrtSum.sqrt(k)) for k in (6, 10, 30))
    if which == "open":
        return (
            s6 * (d * c ** 5 - d ** 5 * c),
            d ** 4 * (a * d + 5 * b * c) - 5 * a * c ** 4 * d - b * c ** 5,
            s10 * (a * c ** 3 * (2 * a * d + b * c) - b * d ** 3 * (a * d + 2 * b * c)),
            s30 * (b ** 2 * d ** 2 * (a * d + b * c) - a ** 2 * c ** 2 * (a * d + b * c)),
            s10 * (a ** 3 * c * (a * d + 2 * b * c) - b ** 3 * d * (2 * a * d + b * c)),
            5 * a * b ** 4 * d + b ** 5 * c - a ** 4 * (a * d + 5 * b * c),
            s6 * (b * a ** 5 - b ** 5 * a),
        )
    if which == "u5v":
        return (
            s6 * (-(d ** 5) * c),
            d ** 4 * (a * d + 5 * b * c),
            s10 * (-(b * d ** 3) * (a * d + 2 * b * c)),
            s30 * (b ** 2 * d ** 2 * (a * d + b * c)),
            s10 * (-(b ** 3) * d * (2 * a * d + b * c)),
            5 * a * b ** 4 * d + b ** 5 * c,
            s6 * (-(b ** 5) * a),
        )
    if which == "u6":
        s15, s20 = (SqrtSum.sqrt(15), SqrtSum.sqrt(20)) if exact else (
            float(SqrtSum.sqrt(15)), float(SqrtSum.sqrt(20)))
        return (
            d ** 6,
            s6 * (-b * d ** 5),
            s15 * (b ** 2 * d ** 4),
            s20 * (-(b ** 3) * d ** 3),
            s15 * (b ** 4 * d ** 2),
            s6 * (-(b ** 5) * d),
            b ** 6,
        )
    raise ValueError(f"unknown orbit {which!r}")


def invariant_quadric(x: Sequence):
    """q(x) = 2 x0 x6 - 2 x1 x5 + 2 x2 x4 - x3^2 on V_6 coordinates."""
    if len(x) != 7:
        raise ValueError("need a 7-vector")
    return 2 * (x[0] * x[6]) - 2 * (x[1] * x[5]) + 2 * (x[2] * x[4]) - x[3] * x[3]


def isotropy24() -> list[GroupElement]:
    """The 24 projective symmetries of uv(u^4 - v^4), with Q(zeta_8) entries."""
    zeta = Cyclo8.zeta()
    iu = Cyclo8.i_unit()
    half_sqrt2 = Cyclo8.sqrt2() * Fraction(1, 2)  # 1/sqrt(2)
    zero, one = Cyclo8(0), Cyclo8(1)
    out = []
    for k in range(4):
        xi = zeta ** k
        xinv = zeta ** ((8 - k) % 8)
        h = half_sqrt2
        out.extend([
            GroupElement(xi, zero, zero, xinv),
            # antidiagonal family normalized to det 1 (xi, -xi would repeat
            # one projective element four times and break the group)
            GroupElement(zero, xi, -xinv, zero),
            GroupElement(h * xinv, -(h * xinv), h * xi, h * xi),
            GroupElement(h * iu * xinv, -(h * xinv), h * xi, -(h * iu * xi)),
            GroupElement(-(h * xinv), -(h * xinv), h * xi, -(h * xi)),
            GroupElement(-(h * iu * xinv), -(h * xinv), h * xi, h * iu * xi),
        ])
    return out


UV_QUARTIC_PLAIN = [Fraction(0), Fraction(1), Fraction(0), Fraction(0), Fraction(0), Fraction(-1), Fraction(0)]
# plain coefficients of uv(u^4 - v^4) = u^5 v - u v^5 as a sextic
