"""Exact scalar towers used throughout the package.

Three exact number types sit on top of ``fractions.Fraction``:

  SqrtSum   finite sums  sum_d  q_d * sqrt(d)  with q_d rational and d a
            squarefree positive integer (d = 1 carries the rational part).
            Closed under +, -, *, and division (a genuine subfield of the
            reals).  This is where sqrt(6), sqrt(10), sqrt(3/5), sqrt(79), ...
            live when identities have to hold exactly.

  Cyclo8    the cyclotomic field Q(zeta), zeta = exp(i*pi/4), stored as
            four rational coordinates against 1, zeta, zeta^2, zeta^3 with
            zeta^4 = -1.  It contains i = zeta^2 and sqrt(2) = zeta - zeta^3,
            which is exactly what the order-24 isotropy matrices need.

  Fraction  plain rationals; always reduced, positive denominator (the
            invariants come for free from the stdlib type).

Floating-point work uses mpmath with an explicit precision in bits
(>= 53 everywhere); ``to_mpf`` / ``to_mpc`` convert any of the exact types
at the requested precision.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

import mpmath
from mpmath import mp

RationalLike = Union[int, Fraction]


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Write n >= 1 as s*s*d with d squarefree; return (s, d)."""
    if n < 1:
        raise ValueError(f"need a positive integer, got {n}")
    s, d = 1, 1
    p = 2
    m = n
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    d *= m
    return s, d


class SqrtSum:
    """Exact element of Q(sqrt(p1), sqrt(p2), ...): a finite sum q_d*sqrt(d).

    terms maps squarefree d >= 1 to a nonzero Fraction; the empty dict is 0.
    Distinct squarefree radicals are linearly independent over Q, so equality
    and zero-testing are literal dict comparisons.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, Fraction] | None = None):
        self.terms = {d: q for d, q in (terms or {}).items() if q != 0}

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_rational(q: RationalLike) -> "SqrtSum":
        q = Fraction(q)
        return SqrtSum({1: q} if q else {})

    @staticmethod
    def sqrt(q: RationalLike) -> "SqrtSum":
        """Exact sqrt(q) for rational q >= 0 (sqrt(p/r) = sqrt(p*r)/r)."""
        q = Fraction(q)
        if q < 0:
            raise ValueError("SqrtSum.sqrt of a negative rational")
        if q == 0:
            return SqrtSum()
        s, d = squarefree_decompose(q.numerator * q.denominator)
        return SqrtSum({d: Fraction(s, q.denominator)})

    # -- predicates / extraction ------------------------------------------

    @property
    def is_rational(self) -> bool:
        return all(d == 1 for d in self.terms)

    def as_fraction(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return self.terms[1]

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "SqrtSum | None":
        if isinstance(x, SqrtSum):
            return x
        if isinstance(x, (int, Fraction)):
            return SqrtSum.from_rational(x)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for d, q in o.terms.items():
            out[d] = out.get(d, Fraction(0)) + q
        return SqrtSum(out)

    __radd__ = __add__

    def __neg__(self):
        return SqrtSum({d: -q for d, q in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[int, Fraction] = {}
        for d1, q1 in self.terms.items():
            for d2, q2 in o.terms.items():
                s, d = squarefree_decompose(d1 * d2)
                q = q1 * q2 * s
                out[d] = out.get(d, Fraction(0)) + q
        return SqrtSum(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return (self ** (-k)).inverse()
        out = SqrtSum.from_rational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> "SqrtSum":
        """Exact 1/x by peeling radicals one prime at a time.

        Split x = A + B*sqrt(p) over the subfield omitting p; then
        1/x = (A - B*sqrt(p)) / (A^2 - p*B^2) and the denominator lives in
        the smaller field, so recursion terminates.
        """
        if not self.terms:
            raise ZeroDivisionError("inverse of zero SqrtSum")
        if self.is_rational:
            return SqrtSum.from_rational(1 / self.terms[1])
        # pick any prime dividing some radicand
        dmax = max(d for d in self.terms if d > 1)
        p = 2
        while dmax % p:
            p += 1 if p == 2 else 2
        a_terms: dict[int, Fraction] = {}
        b_terms: dict[int, Fraction] = {}
        for d, q in self.terms.items():
            if d % p == 0:
                b_terms[d // p] = q
            else:
                a_terms[d] = q
        A, B = SqrtSum(a_terms), SqrtSum(b_terms)
        sqrt_p = SqrtSum({p: Fraction(1)})
        denom = A * A - B * B * p  # free of sqrt(p)
        num = A - B * sqrt_p
        return num * denom.inverse()

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        if self.is_rational:
            return hash(self.terms.get(1, Fraction(0)))
        return hash(tuple(sorted(self.terms.items())))

    # -- numeric -----------------------------------------------------------

    def to_mpf(self) -> mpmath.mpf:
        """Value at the current mpmath working precision."""
        total = mp.mpf(0)
        for d, q in self.terms.items():
            t = mp.mpf(q.numerator) / q.denominator
            if d != 1:
                t *= mp.sqrt(d)
            total += t
        return total

    def __float__(self) -> float:
        with mp.workprec(80):
            return float(self.to_mpf())

    def sign(self) -> int:
        """Exact sign; 0 only for the exact zero."""
        if not self.terms:
            return 0
        if self.is_rational:
            q = self.terms[1]
            return (q > 0) - (q < 0)
        # nonzero by linear independence; 120 bits decides it at our scales
        with mp.workprec(120):
            v = self.to_mpf()
        return 1 if v > 0 else -1

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for d in sorted(self.terms):
            q = self.terms[d]
            parts.append(str(q) if d == 1 else f"{q}*sqrt({d})")
        return " + ".join(parts).replace("+ -", "- ")


SQRT6 = SqrtSum.sqrt(6)
SQRT10 = SqrtSum.sqrt(10)
SQRT15 = SqrtSum.sqrt(15)
SQRT30 = SqrtSum.sqrt(30)


class Cyclo8:
    """Element of Q(zeta_8): c0 + c1*zeta + c2*zeta^2 + c3*zeta^3, zeta^4 = -1."""

    __slots__ = ("c",)

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        self.c = (Fraction(c0), Fraction(c1), Fraction(c2), Fraction(c3))

    @staticmethod
    def zeta() -> "Cyclo8":
        return Cyclo8(0, 1, 0, 0)

    @staticmethod
    def i_unit() -> "Cyclo8":
        return Cyclo8(0, 0, 1, 0)

    @staticmethod
    def sqrt2() -> "Cyclo8":
        return Cyclo8(0, 1, 0, -1)  # zeta - zeta^3

    @staticmethod
    def _coerce(x) -> "Cyclo8 | None":
        if isinstance(x, Cyclo8):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyclo8(x)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclo8(*(a + b for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclo8(*(-a for a in self.c))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = [Fraction(0)] * 4
        for i, a in enumerate(self.c):
            if not a:
                continue
            for j, b in enumerate(o.c):
                if not b:
                    continue
                k = i + j
                if k >= 4:
                    out[k - 4] -= a * b  # zeta^4 = -1
                else:
                    out[k] += a * b
        return Cyclo8(*out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return (self ** (-k)).inverse()
        out = Cyclo8(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def galois(self, k: int) -> "Cyclo8":
        """Automorphism zeta -> zeta^k for odd k in {1,3,5,7}."""
        out = Cyclo8()
        for i, a in enumerate(self.c):
            out = out + Cyclo8(a) * (Cyclo8.zeta() ** (i * k))
        return out

    def conjugate(self) -> "Cyclo8":
        return self.galois(7)  # zeta^7 = zeta^{-1} = conj(zeta)

    def inverse(self) -> "Cyclo8":
        prod = Cyclo8(1)
        for k in (3, 5, 7):
            prod = prod * self.galois(k)
        norm = (self * prod).c
        if norm[1] or norm[2] or norm[3] or not norm[0]:
            raise ZeroDivisionError("Cyclo8 norm failure (zero element?)")
        return prod * Cyclo8(1 / norm[0])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.c == o.c

    def __hash__(self):
        return hash(self.c)

    def __bool__(self):
        return any(self.c)

    def to_mpc(self) -> mpmath.mpc:
        z = mp.expjpi(mp.mpf(1) / 4)
        out = mp.mpc(0)
        for i, a in enumerate(self.c):
            if a:
                out += (mp.mpf(a.numerator) / a.denominator) * z ** i
        return out

    def __complex__(self) -> complex:
        with mp.workprec(60):
            return complex(self.to_mpc())

    def __repr__(self):
        names = ["", "*z", "*z^2", "*z^3"]
        parts = [f"{a}{n}" for a, n in zip(self.c, names) if a]
        return "(" + (" + ".join(parts) if parts else "0") + ")"


# -- generic conversions ----------------------------------------------------

def to_mpf(x) -> mpmath.mpf:
    """Real value at the current working precision; raises on complex input."""
    if isinstance(x, SqrtSum):
        return x.to_mpf()
    if isinstance(x, Fraction):
        return mp.mpf(x.numerator) / x.denominator
    if isinstance(x, int):
        return mp.mpf(x)
    if isinstance(x, (float, mpmath.mpf)):
        return mp.mpf(x)
    raise TypeError(f"cannot interpret {type(x).__name__} as a real scalar")


def to_mpc(x) -> mpmath.mpc:
    """Complex value at the current working precision."""
    if isinstance(x, Cyclo8):
        return x.to_mpc()
    if isinstance(x, (complex, mpmath.mpc)):
        return mp.mpc(x)
    return mp.mpc(to_mpf(x))


def conj(x):
    """Complex conjugate across every scalar kind used in the package."""
    if isinstance(x, (int, Fraction, SqrtSum, float, mpmath.mpf)):
        return x
    if isinstance(x, Cyclo8):
        return x.conjugate()
    if isinstance(x, (complex, mpmath.mpc)):
        return x.conjugate()
    raise TypeError(f"no conjugate for {type(x).__name__}")


def is_exact(x) -> bool:
    return isinstance(x, (int, Fraction, SqrtSum, Cyclo8))


def mpf_to_fraction(x) -> Fraction:
    """Exact dyadic rational value of an mpf (no double-precision round trip)."""
    sign, man, exp, _ = mp.mpf(x)._mpf_
    if man == 0:
        return Fraction(0)
    value = Fraction(-man if sign else man)
    return value * Fraction(2) ** exp
