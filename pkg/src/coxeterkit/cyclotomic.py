"""Exact arithmetic in cyclotomic fields Q(zeta_N).

A value is a sparse map ``exponent -> Fraction`` over the raw power basis
{zeta_N^k : 0 <= k < N}.  Arithmetic only reduces exponents mod N; equality,
zero and rationality tests reduce modulo the N-th cyclotomic polynomial, so
printed forms stay close to how a value was built (e.g. "z5+z5^4" rather
than its rewritten power-basis remainder).

Printed grammar (used throughout the CLI):

    value    := rational | term (("+"|"-") term)*
    term     := [magnitude "*"] "z" N ["^" k]      -- k omitted when k = 1
    rational := Fraction syntax, e.g. "3", "-1/2"

A value that reduces to an element of Q prints as a plain rational.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import ValidationError

Rational = Fraction


def _poly_div_exact(p: list[int], q: tuple[int, ...]) -> list[int]:
    # long division by a monic integer polynomial; remainder must vanish
    p = list(p)
    dq = len(q) - 1
    out = [0] * (len(p) - dq)
    for i in range(len(p) - 1, dq - 1, -1):
        c = p[i]
        if c:
            out[i - dq] = c
            for j in range(dq + 1):
                p[i - dq + j] -= c * q[j]
    if any(p):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (constant term first) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValidationError(f"cyclotomic polynomial needs n >= 1, got {n}")
    p = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            p = _poly_div_exact(p, cyclotomic_polynomial(d))
    return tuple(p)


def _reduce_terms(terms: dict[int, Fraction], n: int) -> dict[int, Fraction]:
    """Power-basis remainder of sum a_k x^k modulo the n-th cyclotomic polynomial."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    dense = [Fraction(0)] * n
    for k, c in terms.items():
        dense[k] += c
    for i in range(n - 1, deg - 1, -1):
        c = dense[i]
        if c:
            dense[i] = Fraction(0)
            for j in range(deg):
                dense[i - deg + j] -= c * phi[j]
    return {k: c for k, c in enumerate(dense[:deg]) if c}


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    while a and not a[-1]:
        a.pop()
    db = len(b) - 1
    lead = b[-1]
    q = [Fraction(0)] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        c = a[-1] / lead
        k = len(a) - 1 - db
        q[k] = c
        for j in range(db + 1):
            a[k + j] -= c * b[j]
        while a and not a[-1]:
            a.pop()
    return q, a


class Cyclotomic:
    """An exact element of Q(zeta_N), N = ``conductor``."""

    __slots__ = ("conductor", "terms")
    __hash__ = None  # use canonical_key() for set/dict membership

    def __init__(self, conductor: int, terms: dict):
        if conductor < 1:
            raise ValidationError(f"conductor must be >= 1, got {conductor}")
        acc: dict[int, Fraction] = {}
        for k, c in terms.items():
            c = Fraction(c)
            if c:
                k %= conductor
                acc[k] = acc.get(k, Fraction(0)) + c
        self.conductor = conductor
        self.terms = {k: c for k, c in acc.items() if c}

    @classmethod
    def from_rational(cls, q) -> "Cyclotomic":
        return cls(1, {0: Fraction(q)})

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "Cyclotomic":
        return cls(n, {k % n: Fraction(1)})

    @classmethod
    def zero(cls) -> "Cyclotomic":
        return cls(1, {})

    @classmethod
    def one(cls) -> "Cyclotomic":
        return cls(1, {0: Fraction(1)})

    # -- conductor handling ------------------------------------------------

    def _lifted(self, m: int) -> dict[int, Fraction]:
        if m % self.conductor:
            raise ValidationError("can only lift to a multiple of the conductor")
        step = m // self.conductor
        return {k * step: c for k, c in self.terms.items()}

    @staticmethod
    def _coerce(x):
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyclotomic(1, {0: Fraction(x)})
        return None

    def _pair(self, other):
        m = math.lcm(self.conductor, other.conductor)
        return m, self._lifted(m), other._lifted(m)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        m, a, b = self._pair(other)
        for k, c in b.items():
            a[k] = a.get(k, Fraction(0)) + c
        return Cyclotomic(m, a)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.conductor, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        m, a, b = self._pair(other)
        out: dict[int, Fraction] = {}
        for k1, c1 in a.items():
            for k2, c2 in b.items():
                k = (k1 + k2) % m
                out[k] = out.get(k, Fraction(0)) + c1 * c2
        return Cyclotomic(m, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = Cyclotomic.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse, by the extended Euclidean algorithm
        against the conductor's cyclotomic polynomial."""
        red = self.reduced()
        if not red:
            raise ZeroDivisionError("inverse of zero cyclotomic value")
        if set(red) <= {0}:
            return Cyclotomic(1, {0: 1 / red[0]})
        n = self.conductor
        phi = [Fraction(c) for c in cyclotomic_polynomial(n)]
        deg = len(phi) - 1
        p = [red.get(k, Fraction(0)) for k in range(deg)]
        # extended gcd: u*p + v*phi = r, with r eventually a nonzero constant
        r0, r1 = phi, p
        u0, u1 = [Fraction(0)], [Fraction(1)]
        while True:
            while r1 and not r1[-1]:
                r1.pop()
            if len(r1) == 1:
                break
            q, r2 = _poly_divmod(r0, r1)
            # u2 = u0 - q*u1
            u2 = list(u0) + [Fraction(0)] * max(0, len(q) + len(u1) - 1 - len(u0))
            for i, qc in enumerate(q):
                if qc:
                    for j, uc in enumerate(u1):
                        u2[i + j] -= qc * uc
            r0, r1 = r1, r2
            u0, u1 = u1, u2
        c = r1[0]
        return Cyclotomic(n, {k: uc / c for k, uc in enumerate(u1) if uc})

    # -- predicates and conversions -----------------------------------------

    def reduced(self) -> dict[int, Fraction]:
        return _reduce_terms(self.terms, self.conductor)

    def is_zero(self) -> bool:
        return not self.reduced()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return set(self.reduced()) <= {0}

    def rational_value(self) -> Fraction:
        red = self.reduced()
        if set(red) <= {0}:
            return red.get(0, Fraction(0))
        raise ValidationError("value is not rational")

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.conductor == other.conductor:
            return self.reduced() == other.reduced()
        return (self - other).is_zero()

    def conjugate(self) -> "Cyclotomic":
        """Image under zeta -> zeta^-1 (complex conjugation on Q(zeta_N))."""
        n = self.conductor
        return Cyclotomic(n, {(n - k) % n: c for k, c in self.terms.items()})

    def canonical_key(self, conductor: int | None = None):
        """Hashable exact form at a fixed conductor (own conductor by default)."""
        m = conductor or self.conductor
        red = _reduce_terms(self._lifted(m), m)
        if set(red) <= {0}:
            return ("q", red.get(0, Fraction(0)))
        return ("c", m) + tuple(sorted(red.items()))

    def to_float(self) -> float:
        """Real part of the value at zeta_N = exp(2*pi*i/N).

        Evaluates the reduced form, so exact zeros return exactly 0.0;
        accurate to about 1e-12 for coefficient magnitudes up to 1e3.
        """
        n = self.conductor
        return math.fsum(
            float(c) * math.cos(2.0 * math.pi * k / n) for k, c in self.reduced().items()
        )

    # -- printing ------------------------------------------------------------

    def __str__(self) -> str:
        if self.is_rational():
            return str(self.rational_value())
        parts = []
        for k, c in sorted(self.terms.items()):
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                body = f"z{self.conductor}" + (f"^{k}" if k != 1 else "")
                if mag != 1:
                    body = f"{mag}*{body}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+" if c > 0 else "-") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Cyclotomic({self.conductor}, {self.terms})"


def real_cos_pi_over(m) -> Cyclotomic:
    """Exact cos(pi/m) as (zeta_2m + zeta_2m^-1)/2; m = inf gives the limit 1."""
    if isinstance(m, float) and math.isinf(m):
        return Cyclotomic.one()
    if not isinstance(m, int) or isinstance(m, bool) or m < 2:
        raise ValidationError(f"need an integer m >= 2 or infinity, got {m!r}")
    half = Fraction(1, 2)
    return Cyclotomic(2 * m, {1: half, 2 * m - 1: half})
