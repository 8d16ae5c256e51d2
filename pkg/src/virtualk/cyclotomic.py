"""Exact arithmetic in the cyclotomic fields Q(zeta_n).

A scalar is a residue modulo the n-th cyclotomic polynomial Phi_n.  It is
stored as a vector of deg(Phi_n) integer numerators over a single positive
denominator, kept in lowest terms, so two scalars are equal exactly when
their stored data agree and no tolerance appears anywhere.  Phi_n is
irreducible over Q, hence every nonzero residue is invertible; reducing
modulo x^n - 1 instead would introduce zero divisors and leave constants
like 1/(zeta - 1) undefined.

``CycPoly`` provides dense univariate polynomials with ``Cyc`` coefficients,
the workhorse for the quotient-ring reductions in the ring modules.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import Iterable

Rat = Fraction


def _int_poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _int_poly_divexact(a: list[int], b: list[int]) -> list[int]:
    """Exact division of integer polynomials; ``b`` must be monic."""
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in reversed(range(len(q))):
        c = a[i + len(b) - 1]
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    if any(a):
        raise ArithmeticError("division was not exact")
    return q


@cache
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, ascending degree (integer, monic).

    Computed by iterated exact division of x^n - 1 by Phi_d over the proper
    divisors d of n.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    if n == 1:
        return (-1, 1)
    num = [-1] + [0] * (n - 1) + [1]
    den = [1]
    for d in range(1, n):
        if n % d == 0:
            den = _int_poly_mul(den, list(cyclotomic_polynomial(d)))
    return tuple(_int_poly_divexact(num, den))


def phi_degree(n: int) -> int:
    """deg(Phi_n), the dimension of Q(zeta_n) over Q."""
    return len(cyclotomic_polynomial(n)) - 1


@cache
def _xpow(n: int) -> tuple[tuple[int, ...], ...]:
    # x^k mod Phi_n for k = 0 .. n-1, as integer coefficient rows.
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    rows = []
    row = [1] + [0] * (deg - 1) if deg > 0 else []
    for _ in range(max(n, 1)):
        rows.append(tuple(row))
        shifted = [0] + row
        c = shifted[deg] if len(shifted) > deg else 0
        shifted = shifted[:deg]
        while len(shifted) < deg:
            shifted.append(0)
        if c:
            shifted = [s - c * phi[i] for i, s in enumerate(shifted)]
        row = shifted
    return tuple(rows)


def _reduce_int_coeffs(n: int, coeffs: list[int]) -> list[int]:
    # Any power vector -> length deg(Phi_n).  zeta^e = zeta^(e mod n) since
    # Phi_n divides x^n - 1, so exponents are folded before the table rows.
    deg = phi_degree(n)
    folded = [0] * n
    for e, c in enumerate(coeffs):
        if c:
            folded[e % n] += c
    out = [0] * deg
    table = _xpow(n)
    for e in range(n):
        c = folded[e]
        if c:
            row = table[e]
            for i in range(deg):
                out[i] += c * row[i]
    return out


def _normalized(num: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if den < 0:
        den = -den
        num = [-c for c in num]
    if den != 1:
        g = math.gcd(den, *num)
        if g > 1:
            num = [c // g for c in num]
            den //= g
    return tuple(num), den


class Cyc:
    """An element of Q(zeta_n): integer numerator vector over one denominator."""

    __slots__ = ("n", "num", "den")

    def __init__(self, n: int, coeffs: Iterable[int] = (), den: int = 1):
        if n < 1:
            raise ValueError("n must be a positive integer")
        num = _reduce_int_coeffs(n, [int(c) for c in coeffs])
        num_t, den = _normalized(num, den)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "num", num_t)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("Cyc values are immutable")

    @classmethod
    def _raw(cls, n: int, num: tuple[int, ...], den: int) -> "Cyc":
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "num", num)
        object.__setattr__(obj, "den", den)
        return obj

    @classmethod
    def zero(cls, n: int) -> "Cyc":
        return cls._raw(n, (0,) * phi_degree(n), 1)

    @classmethod
    def one(cls, n: int) -> "Cyc":
        return cls.rational(n, 1)

    @classmethod
    def rational(cls, n: int, value: int | Fraction) -> "Cyc":
        value = Fraction(value)
        deg = phi_degree(n)
        num = [value.numerator] + [0] * (deg - 1)
        num_t, den = _normalized(num, value.denominator)
        return cls._raw(n, num_t, den)

    @classmethod
    def from_rats(cls, n: int, coeffs: Iterable[int | Fraction]) -> "Cyc":
        """Build from a rational coefficient vector of any length."""
        fracs = [Fraction(c) for c in coeffs]
        den = math.lcm(*(f.denominator for f in fracs)) if fracs else 1
        nums = [f.numerator * (den // f.denominator) for f in fracs]
        num = _reduce_int_coeffs(n, nums)
        num_t, den = _normalized(num, den)
        return cls._raw(n, num_t, den)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Rational coordinates with respect to 1, zeta, ..., zeta^(deg-1)."""
        return tuple(Fraction(c, self.den) for c in self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational scalar: %s" % self)
        return Fraction(self.num[0], self.den)

    def _coerce(self, other) -> "Cyc | None":
        if isinstance(other, Cyc):
            if other.n != self.n:
                raise ValueError(
                    "mixed cyclotomic orders: %d vs %d" % (self.n, other.n)
                )
            return other
        if isinstance(other, int):
            return Cyc.rational(self.n, other)
        if isinstance(other, Fraction):
            return Cyc.rational(self.n, other)
        return None

    def __bool__(self) -> bool:
        return any(self.num)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Cyc.rational(self.n, other)
        if not isinstance(other, Cyc):
            return NotImplemented
        return self.n == other.n and self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.n, self.num, self.den))

    def __neg__(self) -> "Cyc":
        return Cyc._raw(self.n, tuple(-c for c in self.num), self.den)

    def __add__(self, other) -> "Cyc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            num = [a + b for a, b in zip(self.num, o.num)]
            num_t, den = _normalized(num, self.den)
        else:
            num = [a * o.den + b * self.den for a, b in zip(self.num, o.num)]
            num_t, den = _normalized(num, self.den * o.den)
        return Cyc._raw(self.n, num_t, den)

    __radd__ = __add__

    def __sub__(self, other) -> "Cyc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "Cyc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "Cyc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.num, o.num
        deg = len(a)
        conv = [0] * (2 * deg - 1) if deg else []
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    conv[i + j] += ai * bj
        if len(conv) > deg:
            out = conv[:deg]
            table = _xpow(self.n)
            for e in range(deg, len(conv)):
                c = conv[e]
                if c:
                    row = table[e % self.n]
                    for i in range(deg):
                        out[i] += c * row[i]
        else:
            out = conv + [0] * (deg - len(conv))
        num_t, den = _normalized(out, self.den * o.den)
        return Cyc._raw(self.n, num_t, den)

    __rmul__ = __mul__

    def scale_int(self, k: int) -> "Cyc":
        num_t, den = _normalized([c * k for c in self.num], self.den)
        return Cyc._raw(self.n, num_t, den)

    def inv(self) -> "Cyc":
        """Multiplicative inverse via the extended Euclidean algorithm mod Phi_n."""
        if not self:
            raise ZeroDivisionError("0 has no inverse in Q(zeta_%d)" % self.n)
        if self.is_rational():
            return Cyc.rational(self.n, 1 / Fraction(self.num[0], self.den))
        a = [Fraction(c, self.den) for c in self.num]
        mod = [Fraction(c) for c in cyclotomic_polynomial(self.n)]
        s = _frac_modular_inverse(a, mod)
        return Cyc.from_rats(self.n, s)

    def __truediv__(self, other) -> "Cyc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other) -> "Cyc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, k: int) -> "Cyc":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** (-k)
        result = Cyc.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __complex__(self) -> complex:
        # Debug embedding only; nothing in the engine depends on it.
        z = complex(math.cos(2 * math.pi / self.n), math.sin(2 * math.pi / self.n))
        total = 0j
        for e, c in enumerate(self.num):
            total += c * z**e
        return total / self.den

    def __repr__(self) -> str:
        return format_cyc(self)

    __str__ = __repr__


def zeta_pow(n: int, k: int) -> Cyc:
    """zeta_n^k as an exact scalar (exponent reduced mod n)."""
    row = _xpow(n)[k % n]
    return Cyc._raw(n, row, 1)


def format_cyc(value: Cyc, zeta: str = "zeta") -> str:
    """Deterministic human-readable form, descending powers of zeta."""
    terms = []
    for e in reversed(range(len(value.num))):
        c = value.num[e]
        if not c:
            continue
        mag = Fraction(abs(c), value.den)
        if e == 0:
            body = str(mag)
        else:
            sym = zeta if e == 1 else "%s^%d" % (zeta, e)
            body = sym if mag == 1 else "%s*%s" % (mag, sym)
        if not terms:
            terms.append(body if c > 0 else "-" + body)
        else:
            terms.append((" + " if c > 0 else " - ") + body)
    return "".join(terms) if terms else "0"


def _frac_strip(a: list[Fraction]) -> list[Fraction]:
    while a and not a[-1]:
        a.pop()
    return a


def _frac_divmod(a: list[Fraction], b: list[Fraction]):
    rem = list(a)
    quo = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    for i in reversed(range(len(quo))):
        c = rem[i + len(b) - 1] / lead
        quo[i] = c
        if c:
            for j, bj in enumerate(b):
                rem[i + j] -= c * bj
    return quo, _frac_strip(rem)


def _frac_modular_inverse(a: list[Fraction], mod: list[Fraction]) -> list[Fraction]:
    # s with s*a == g (mod `mod`), scaled so the constant gcd g becomes 1.
    old_r, r = _frac_strip(list(a)), list(mod)
    old_s, s = [Fraction(1)], []
    while r:
        q, rem = _frac_divmod(old_r, r)
        old_r, r = r, rem
        prod = [Fraction(0)] * (len(q) + len(s) - 1) if s else []
        for i, qi in enumerate(q):
            if qi:
                for j, sj in enumerate(s):
                    prod[i + j] += qi * sj
        new_s = [Fraction(0)] * max(len(old_s), len(prod))
        for i, c in enumerate(old_s):
            new_s[i] += c
        for i, c in enumerate(prod):
            new_s[i] -= c
        old_s, s = s, _frac_strip(new_s)
    if len(old_r) != 1:
        raise ArithmeticError("element shares a factor with the modulus")
    g = old_r[0]
    return [c / g for c in old_s]


@dataclass(frozen=True)
class CycPoly:
    """Dense polynomial over Q(zeta_n); ascending coefficients, no trailing zeros."""

    n: int
    coeffs: tuple[Cyc, ...]

    @classmethod
    def from_cycs(cls, n: int, coeffs: Iterable[Cyc]) -> "CycPoly":
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        return cls(n, tuple(cs))

    @classmethod
    def from_ints(cls, n: int, coeffs: Iterable[int | Fraction]) -> "CycPoly":
        return cls.from_cycs(n, (Cyc.rational(n, c) for c in coeffs))

    @classmethod
    def zero(cls, n: int) -> "CycPoly":
        return cls(n, ())

    @classmethod
    def one_poly(cls, n: int) -> "CycPoly":
        return cls(n, (Cyc.one(n),))

    @classmethod
    def monomial(cls, n: int, k: int, coeff: Cyc | int = 1) -> "CycPoly":
        c = coeff if isinstance(coeff, Cyc) else Cyc.rational(n, coeff)
        if not c:
            return cls.zero(n)
        return cls(n, (Cyc.zero(n),) * k + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "CycPoly") -> "CycPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return CycPoly.from_cycs(self.n, out)

    def __neg__(self) -> "CycPoly":
        return CycPoly(self.n, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "CycPoly") -> "CycPoly":
        return self + (-other)

    def __mul__(self, other: "CycPoly") -> "CycPoly":
        if self.is_zero() or other.is_zero():
            return CycPoly.zero(self.n)
        out = [Cyc.zero(self.n)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = out[i + j] + a * b
        return CycPoly.from_cycs(self.n, out)

    def scale(self, c: Cyc | int | Fraction) -> "CycPoly":
        c = c if isinstance(c, Cyc) else Cyc.rational(self.n, c)
        if not c:
            return CycPoly.zero(self.n)
        return CycPoly(self.n, tuple(a * c for a in self.coeffs))

    def __call__(self, x: Cyc) -> Cyc:
        total = Cyc.zero(self.n)
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def derivative(self) -> "CycPoly":
        return CycPoly.from_cycs(
            self.n, (c * e for e, c in enumerate(self.coeffs) if e)
        )

    def divmod_by(self, d: "CycPoly") -> tuple["CycPoly", "CycPoly"]:
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lead_inv = d.coeffs[-1].inv()
        rem = list(self.coeffs)
        qlen = max(len(rem) - len(d.coeffs) + 1, 0)
        quo = [Cyc.zero(self.n)] * qlen
        for i in reversed(range(qlen)):
            c = rem[i + len(d.coeffs) - 1] * lead_inv
            quo[i] = c
            if c:
                for j, dj in enumerate(d.coeffs):
                    rem[i + j] = rem[i + j] - c * dj
        return CycPoly.from_cycs(self.n, quo), CycPoly.from_cycs(
            self.n, rem[: len(d.coeffs) - 1]
        )


def cycpoly_modular_inverse(a: CycPoly, mod: CycPoly) -> CycPoly:
    """Inverse of ``a`` modulo ``mod`` when they are coprime over Q(zeta_n)."""
    old_r, r = a, mod
    old_s, s = CycPoly.one_poly(a.n), CycPoly.zero(a.n)
    while not r.is_zero():
        q, rem = old_r.divmod_by(r)
        old_r, r = r, rem
        old_s, s = s, old_s - q * s
    if old_r.degree != 0:
        raise ArithmeticError("element is not invertible modulo the given polynomial")
    return old_s.scale(old_r.coeffs[0].inv())
