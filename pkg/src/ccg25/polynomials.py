"""Polynomial kernels: dense univariate, sparse multivariate, Sturm, resultants.

UniPoly stores a dense low-to-high coefficient tuple over whatever scalar
kind supports +, -, * and comparison with 0 (Fraction, SqrtSum, mpmath
numbers, complex).  The zero polynomial is the empty tuple and reports
degree -1 (the "distinguished sentinel").  Exact-only operations (divmod,
gcd, Sturm sequences, root isolation) require Fraction coefficients.

MultiPoly is a sparse map from exponent tuples to Fraction coefficients
over a fixed, named variable tuple; no zero coefficient is ever stored.

Root counting follows Sturm: the chain is the negated-remainder sequence
with each member scaled to a primitive integer polynomial (positive scaling
preserves the sign structure).  Endpoint roots are divided out exactly
before counting, so counts on open intervals are unconditional.

Resultants are Sylvester determinants evaluated by Bareiss fraction-free
elimination; every division performed is exact by construction and checked.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

from mpmath import mp

from .scalars import to_mpc, to_mpf


class UniPoly:
    """Dense univariate polynomial; coefficients indexed by power of z."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = list(coeffs)
        while cs and _is_exact_zero(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "UniPoly":
        return UniPoly()

    @staticmethod
    def constant(c) -> "UniPoly":
        return UniPoly((c,))

    @staticmethod
    def monomial(c, k: int) -> "UniPoly":
        return UniPoly((Fraction(0),) * k + (c,))

    @staticmethod
    def from_roots(roots: Sequence[Fraction]) -> "UniPoly":
        p = UniPoly((Fraction(1),))
        for r in roots:
            p = p * UniPoly((-Fraction(r), Fraction(1)))
        return p

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def leading(self):
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(tuple(self[k] + other[k] for k in range(n)))

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(tuple(self[k] - other[k] for k in range(n)))

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if self.is_zero or other.is_zero:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if _is_exact_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    def scale(self, c) -> "UniPoly":
        return UniPoly(tuple(x * c for x in self.coeffs))

    def __eq__(self, other) -> bool:
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        return Fraction(0) if acc is None else acc

    def derivative(self) -> "UniPoly":
        return UniPoly(tuple(k * c for k, c in enumerate(self.coeffs) if k))

    def reversed_to(self, n: int) -> "UniPoly":
        """Coefficient reversal z -> 1/z cleared to formal degree n."""
        if n < self.degree:
            raise ValueError("formal degree below actual degree")
        padded = list(self.coeffs) + [Fraction(0)] * (n - self.degree)
        return UniPoly(tuple(reversed(padded)))

    def map_coeffs(self, fn: Callable) -> "UniPoly":
        return UniPoly(tuple(fn(c) for c in self.coeffs))

    def eval_mpc(self, z):
        acc = mp.mpc(0)
        for c in reversed(self.coeffs):
            acc = acc * z + to_mpc(c)
        return acc

    def __repr__(self):
        if self.is_zero:
            return "UniPoly(0)"
        return "UniPoly(" + ", ".join(map(str, self.coeffs)) + ")"

    # -- exact (Fraction) operations ----------------------------------------

    def divmod(self, d: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if d.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        q = [Fraction(0)] * max(0, self.degree - d.degree + 1)
        r = list(self.coeffs)
        dl = d.leading()
        while len(r) - 1 >= d.degree and any(x != 0 for x in r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) - 1 < d.degree:
                break
            k = len(r) - 1 - d.degree
            f = r[-1] / dl
            q[k] = f
            for i, c in enumerate(d.coeffs):
                r[k + i] -= f * c
        return UniPoly(q), UniPoly(r)

    def content(self) -> Fraction:
        c = Fraction(0)
        for x in self.coeffs:
            c = _fraction_gcd(c, Fraction(x))
        return c

    def primitive(self) -> "UniPoly":
        """Scale by a positive rational so coefficients are coprime integers."""
        if self.is_zero:
            return self
        c = self.content()
        return self.scale(1 / c)

    def gcd(self, other: "UniPoly") -> "UniPoly":
        a, b = self, other
        while not b.is_zero:
            a, b = b, a.divmod(b)[1]
        if a.is_zero:
            return a
        return a.primitive()

    def squarefree_part(self) -> "UniPoly":
        if self.degree <= 0:
            return self
        g = self.gcd(self.derivative())
        if g.degree <= 0:
            return self.primitive()
        return self.divmod(g)[0].primitive()


def _is_exact_zero(c) -> bool:
    try:
        return c == 0
    except TypeError:  # pragma: no cover
        return False


def _fraction_gcd(a: Fraction, b: Fraction) -> Fraction:
    from math import gcd

    if a == 0:
        return abs(b)
    if b == 0:
        return abs(a)
    num = gcd(a.numerator, b.numerator)
    den = a.denominator * b.denominator // gcd(a.denominator, b.denominator)
    return Fraction(num, den)


# -- Sturm machinery ---------------------------------------------------------

def sturm_chain(p: UniPoly) -> list[UniPoly]:
    chain = [p.primitive(), p.derivative().primitive()]
    while chain[-1].degree > 0:
        rem = chain[-2].divmod(chain[-1])[1]
        if rem.is_zero:
            break
        chain.append((-rem).primitive())
    return [q for q in chain if not q.is_zero]


def _sign_variations(chain: Sequence[UniPoly], x: Fraction) -> int:
    signs = []
    for q in chain:
        v = q(x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(p: UniPoly, a: Fraction, b: Fraction) -> int:
    """Exact number of distinct real roots of p in the open interval (a, b).

    Endpoint roots are removed by exact deflation, which leaves the open
    count unchanged; multiple roots are handled by working with the
    squarefree part.
    """
    if p.is_zero:
        raise ValueError("sturm_count of the zero polynomial")
    a, b = Fraction(a), Fraction(b)
    if not a < b:
        raise ValueError(f"need a < b, got a={a}, b={b}")
    q = p.squarefree_part()
    for endpoint in (a, b):
        while not q.is_zero and q.degree >= 1 and q(endpoint) == 0:
            q = q.divmod(UniPoly((-endpoint, Fraction(1))))[0]
    if q.degree <= 0:
        return 0
    chain = sturm_chain(q)
    return _sign_variations(chain, a) - _sign_variations(chain, b)


def root_bound(p: UniPoly) -> Fraction:
    """Cauchy bound: all real roots lie in (-B, B)."""
    if p.is_zero or p.degree == 0:
        return Fraction(1)
    lead = abs(Fraction(p.leading()))
    return 1 + max(abs(Fraction(c)) for c in p.coeffs[:-1]) / lead


def isolate_roots(
    p: UniPoly,
    interval: tuple[Fraction, Fraction] | None = None,
    width: Fraction = Fraction(1, 10**12),
) -> list[tuple[Fraction, Fraction]]:
    """Disjoint rational intervals of width <= `width`, one real root each.

    Covers every distinct real root of p inside the query interval (the
    whole real line by default).  Bisection runs on the squarefree part, so
    interval endpoints change sign around each enclosed root; intervals are
    returned sorted by left endpoint.  Roots hit exactly during bisection
    are returned centred in a width-`width` interval.
    """
    if p.is_zero:
        raise ValueError("isolate_roots of the zero polynomial")
    width = Fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    q = p.squarefree_part()
    if q.degree <= 0:
        return []
    if interval is None:
        bound = root_bound(q)
        lo, hi = -bound, bound
    else:
        lo, hi = Fraction(interval[0]), Fraction(interval[1])
        if not lo < hi:
            raise ValueError("empty query interval")

    # endpoints of the master interval must not be roots of q for the
    # variation counts to mean "roots in (lo, hi]"; deflate them away
    for endpoint in (lo, hi):
        while q.degree >= 1 and q(endpoint) == 0:
            q = q.divmod(UniPoly((-endpoint, Fraction(1))))[0]
    if q.degree <= 0:
        return []
    chain = sturm_chain(q)

    def count(x: Fraction, y: Fraction) -> int:
        return _sign_variations(chain, x) - _sign_variations(chain, y)

    def nonroot(x: Fraction, lo: Fraction, hi: Fraction) -> Fraction:
        # deterministic nudge off an exact root, staying inside (lo, hi)
        step = (hi - lo) / 8
        while True:
            for cand in (x + step, x - step):
                if lo < cand < hi and q(cand) != 0:
                    return cand
            step /= 2

    out: list[tuple[Fraction, Fraction]] = []
    stack = [(lo, hi)]
    while stack:
        a, b = stack.pop()
        n = count(a, b)
        if n == 0:
            continue
        if n == 1 and b - a <= width:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        if q(mid) == 0:
            mid = nonroot(mid, a, b)
        stack.append((a, mid))
        stack.append((mid, b))
    return sorted(out)


def refine_root(p: UniPoly, lo: Fraction, hi: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    """Shrink a sign-changing enclosure by bisection to the requested width."""
    flo = p(lo)
    if flo == 0:
        return lo, lo
    while hi - lo > width:
        mid = (lo + hi) / 2
        v = p(mid)
        if v == 0:
            return mid, mid
        if (flo > 0) == (v > 0):
            lo, flo = mid, v
        else:
            hi = mid
    return lo, hi


# -- sparse multivariate polynomials over Q ----------------------------------

class MultiPoly:
    """Sparse polynomial over Q in named variables.

    terms: exponent tuple -> nonzero Fraction.  The variable tuple is fixed
    at construction and all arithmetic demands identical variable tuples.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: tuple[str, ...], terms: dict[tuple[int, ...], Fraction] | None = None):
        self.vars = tuple(vars)
        self.terms = {e: Fraction(c) for e, c in (terms or {}).items() if c != 0}

    # -- constructors ------------------------------------------------------

    @staticmethod
    def constant(c, vars: tuple[str, ...]) -> "MultiPoly":
        c = Fraction(c)
        z = (0,) * len(vars)
        return MultiPoly(vars, {z: c} if c else {})

    @staticmethod
    def variable(name: str, vars: tuple[str, ...]) -> "MultiPoly":
        e = [0] * len(vars)
        e[vars.index(name)] = 1
        return MultiPoly(vars, {tuple(e): Fraction(1)})

    @staticmethod
    def from_terms(vars: tuple[str, ...], entries: Iterable[tuple[tuple[int, ...], RationalLike]]) -> "MultiPoly":
        d: dict[tuple[int, ...], Fraction] = {}
        for e, c in entries:
            d[e] = d.get(e, Fraction(0)) + Fraction(c)
        return MultiPoly(vars, d)

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree_in(self, var: str) -> int:
        if self.is_zero:
            return -1
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def total_degree(self) -> int:
        if self.is_zero:
            return -1
        return max(sum(e) for e in self.terms)

    def _check(self, other: "MultiPoly"):
        if self.vars != other.vars:
            raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return MultiPoly(self.vars, out)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) - c
        return MultiPoly(self.vars, out)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return MultiPoly(self.vars, out)

    def scale(self, c) -> "MultiPoly":
        c = Fraction(c)
        return MultiPoly(self.vars, {e: q * c for e, q in self.terms.items()})

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative power of a MultiPoly")
        out = MultiPoly.constant(1, self.vars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, MultiPoly) and self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, tuple(sorted(self.terms.items()))))

    # -- calculus / evaluation ----------------------------------------------

    def partial(self, var: str) -> "MultiPoly":
        i = self.vars.index(var)
        out: dict[tuple[int, ...], Fraction] = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            e2 = list(e)
            e2[i] -= 1
            out[tuple(e2)] = out.get(tuple(e2), Fraction(0)) + c * e[i]
        return MultiPoly(self.vars, out)

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != len(self.vars):
            raise ValueError(f"point has {len(point)} coordinates, need {len(self.vars)}")
        total = None
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                if k:
                    term = term * x ** k
            total = term if total is None else total + term
        if total is None:
            return Fraction(0) if all(isinstance(x, (int, Fraction)) for x in point) else to_mpf(0)
        return total

    def coeffs_in(self, var: str) -> list["MultiPoly"]:
        """Coefficient list (low to high in var); entries keep the full var tuple."""
        i = self.vars.index(var)
        n = self.degree_in(var)
        if n < 0:
            return []
        buckets: list[dict] = [dict() for _ in range(n + 1)]
        for e, c in self.terms.items():
            e2 = list(e)
            k = e2[i]
            e2[i] = 0
            buckets[k][tuple(e2)] = c
        return [MultiPoly(self.vars, b) for b in buckets]

    def substitute(self, var: str, value: "MultiPoly | Fraction | int") -> "MultiPoly":
        if not isinstance(value, MultiPoly):
            value = MultiPoly.constant(value, self.vars)
        self._check(value)
        out = MultiPoly.constant(0, self.vars)
        power = MultiPoly.constant(1, self.vars)
        for k, coeff in enumerate(self.coeffs_in(var)):
            if k:
                power = power * value
            out = out + coeff * power
        return out

    def as_unipoly(self, var: str) -> UniPoly:
        """Collapse to a UniPoly in var; the other variables must be absent."""
        i = self.vars.index(var)
        coeffs = [Fraction(0)] * (self.degree_in(var) + 1)
        for e, c in self.terms.items():
            if any(k and j != i for j, k in enumerate(e)):
                raise ValueError("polynomial is not univariate in " + var)
            coeffs[e[i]] = c
        return UniPoly(coeffs)

    def content(self) -> Fraction:
        c = Fraction(0)
        for q in self.terms.values():
            c = _fraction_gcd(c, q)
        return c

    def primitive(self) -> "MultiPoly":
        if self.is_zero:
            return self
        return self.scale(1 / self.content())

    def exact_div(self, d: "MultiPoly") -> "MultiPoly":
        """Quotient self / d when the division is exact; ValueError otherwise.

        Leading-term reduction under lex order: if self is a multiple of d,
        lt(d) divides lt(remainder) at every step, so the loop terminates
        with zero remainder.
        """
        self._check(d)
        if d.is_zero:
            raise ZeroDivisionError("exact_div by zero polynomial")
        rem = {e: c for e, c in self.terms.items()}
        quot: dict[tuple[int, ...], Fraction] = {}
        d_lead_e = max(d.terms)
        d_lead_c = d.terms[d_lead_e]
        while rem:
            e = max(rem)
            if any(a < b for a, b in zip(e, d_lead_e)):
                raise ValueError("division is not exact")
            qe = tuple(a - b for a, b in zip(e, d_lead_e))
            qc = rem[e] / d_lead_c
            quot[qe] = quot.get(qe, Fraction(0)) + qc
            for e2, c2 in d.terms.items():
                te = tuple(a + b for a, b in zip(qe, e2))
                nc = rem.get(te, Fraction(0)) - qc * c2
                if nc:
                    rem[te] = nc
                else:
                    rem.pop(te, None)
        return MultiPoly(self.vars, quot)

    def __repr__(self):
        if self.is_zero:
            return "MultiPoly(0)"
        bits = []
        for e in sorted(self.terms, reverse=True):
            mono = "*".join(f"{v}^{k}" for v, k in zip(self.vars, e) if k)
            c = self.terms[e]
            bits.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(bits)


RationalLike = int | Fraction


def eval_and_gradient(p: MultiPoly, point: Sequence) -> tuple[Fraction, tuple[Fraction, ...]]:
    """Exact value and exact gradient of p at a rational point."""
    if len(point) != len(p.vars):
        raise ValueError(f"point has {len(point)} coordinates, polynomial has {len(p.vars)} variables")
    value = p.evaluate(point)
    grads = tuple(p.partial(v).evaluate(point) for v in p.vars)
    return value, grads


# -- resultants ---------------------------------------------------------------

def sylvester_matrix(p: MultiPoly, q: MultiPoly, var: str) -> list[list[MultiPoly]]:
    pc = p.coeffs_in(var)
    qc = q.coeffs_in(var)
    m, n = len(pc) - 1, len(qc) - 1
    size = m + n
    zero = MultiPoly.constant(0, p.vars)
    rows = []
    for i in range(n):
        row = [zero] * size
        for j, c in enumerate(reversed(pc)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for j, c in enumerate(reversed(qc)):
            row[i + j] = c
        rows.append(row)
    return rows


def det_bareiss(matrix: list[list[MultiPoly]], vars: tuple[str, ...]) -> MultiPoly:
    """Fraction-free determinant; all interior divisions are exact."""
    n = len(matrix)
    if n == 0:
        return MultiPoly.constant(1, vars)
    m = [row[:] for row in matrix]
    sign = 1
    prev = MultiPoly.constant(1, vars)
    for k in range(n - 1):
        if m[k][k].is_zero:
            for i in range(k + 1, n):
                if not m[i][k].is_zero:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return MultiPoly.constant(0, vars)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = num.exact_div(prev)
            m[i][k] = MultiPoly.constant(0, vars)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def resultant(p: MultiPoly, q: MultiPoly, var: str) -> MultiPoly:
    """Resultant of p and q with respect to var (Sylvester determinant)."""
    if p.vars != q.vars:
        raise ValueError("variable tuples differ")
    if var not in p.vars:
        raise ValueError(f"unknown variable {var}")
    dp, dq = p.degree_in(var), q.degree_in(var)
    if dp < 1 and dq < 1:
        raise ValueError(f"{var} absent from both polynomials")
    if p.is_zero or q.is_zero:
        return MultiPoly.constant(0, p.vars)
    if dp < 1:
        return p ** dq
    if dq < 1:
        return q ** dp
    return det_bareiss(sylvester_matrix(p, q, var), p.vars)


# -- unreduced rational functions ---------------------------------------------

class Frac:
    """Quotient of MultiPolys, never reduced; equality by cross-multiplication.

    Good enough for assembling the derived moduli polynomials exactly
    without multivariate gcd computations.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly | None = None):
        if den is None:
            den = MultiPoly.constant(1, num.vars)
        if den.is_zero:
            raise ZeroDivisionError("Frac with zero denominator")
        self.num = num
        self.den = den

    def __add__(self, other: "Frac") -> "Frac":
        return Frac(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "Frac") -> "Frac":
        return Frac(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self) -> "Frac":
        return Frac(-self.num, self.den)

    def __mul__(self, other: "Frac") -> "Frac":
        return Frac(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "Frac") -> "Frac":
        if other.num.is_zero:
            raise ZeroDivisionError("division by zero Frac")
        return Frac(self.num * other.den, self.den * other.num)

    def scale(self, c) -> "Frac":
        return Frac(self.num.scale(c), self.den)

    def equals(self, other: "Frac") -> bool:
        return (self.num * other.den) == (other.num * self.den)

    def equals_poly(self, p: MultiPoly) -> bool:
        return self.num == (p * self.den)
