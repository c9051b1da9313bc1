"""Exact arithmetic in the cyclotomic field Q(zeta_n).

Elements are represented by their coordinates in the power basis
1, zeta, ..., zeta^(phi(n)-1) of Q[x]/Phi_n(x), where Phi_n is the n-th
cyclotomic polynomial.  Coordinates are `fractions.Fraction` values, so
every operation is exact; there is no floating point anywhere in this
package.

Working modulo Phi_n (rather than modulo x^n - 1) makes zeta a *primitive*
n-th root of unity, so 1 - zeta^i is invertible for 1 <= i <= n-1.  That
property is what the Kummer-theoretic machinery in the rest of the package
relies on.

Polynomials are coefficient lists in increasing degree order, trailing
zeros stripped, matching the usual conventions of small exact-arithmetic
libraries.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


def _poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_sub(p, q):
    out = [Fraction(0)] * max(len(p), len(q))
    for i, a in enumerate(p):
        out[i] += a
    for i, b in enumerate(q):
        out[i] -= b
    return _poly_trim(out)


def _poly_mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return _poly_trim(out)


def _poly_divmod_exact(p, q):
    """Divide p by q in Q[x]; works in Z[x] too when the division is exact."""
    p = list(p)
    quot = [0] * max(len(p) - len(q) + 1, 0)
    lead = q[-1]
    while len(p) >= len(q) and p:
        factor = Fraction(p[-1], lead) if p[-1] % lead else p[-1] // lead
        quot[len(p) - len(q)] = factor
        for i, b in enumerate(q):
            p[len(p) - len(q) + i] -= factor * b
        _poly_trim(p)
    return quot, p


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n in increasing degree order.

    Computed by exact division of x^n - 1 by the product of Phi_d over the
    proper divisors d of n; Phi_1 = x - 1 is the base case.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    if n == 1:
        return (-1, 1)
    num = [-1] + [0] * (n - 1) + [1]
    den = [1]
    for d in range(1, n):
        if n % d == 0:
            den = _poly_mul(den, list(cyclotomic_polynomial(d)))
    quot, rem = _poly_divmod_exact(num, den)
    if rem:
        raise AssertionError("cyclotomic division was not exact")
    return tuple(int(c) for c in quot)


@lru_cache(maxsize=None)
def phi_degree(n: int) -> int:
    """Euler totient of n, read off as the degree of Phi_n."""
    return len(cyclotomic_polynomial(n)) - 1


def _reduce_mod_phi(coeffs, n):
    """Reduce a Fraction coefficient list modulo Phi_n, returning phi(n) coords."""
    d = phi_degree(n)
    phi = cyclotomic_polynomial(n)
    work = list(coeffs)
    # Phi_n is monic with integer coefficients, so the remainder is exact.
    for i in range(len(work) - 1, d - 1, -1):
        c = work[i]
        if c:
            for j in range(d + 1):
                work[i - d + j] -= c * phi[j]
    work = work[:d]
    work += [Fraction(0)] * (d - len(work))
    return tuple(Fraction(c) for c in work)


class CycNum:
    """An element of K = Q(zeta_n), held in canonical reduced form.

    Two values with the same n are equal iff their coordinate tuples are
    equal; the constructor always reduces modulo Phi_n and normalises the
    Fractions, so equality is structural.  Instances are immutable and safe
    to share between threads.
    """

    __slots__ = ("n", "coeffs", "_hash")

    def __init__(self, n: int, coeffs=()):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", _reduce_mod_phi([Fraction(c) for c in coeffs], n))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *args):
        raise AttributeError("CycNum is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "CycNum":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "CycNum":
        return cls(n, (1,))

    @classmethod
    def rational(cls, n: int, value) -> "CycNum":
        return cls(n, (Fraction(value),))

    @classmethod
    def root_of_unity(cls, n: int, k: int = 1) -> "CycNum":
        """zeta_n^k reduced modulo Phi_n; k is taken modulo n."""
        k %= n
        return cls(n, (0,) * k + (1,))

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_one(self) -> bool:
        return self == CycNum.one(self.n)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycNum):
            if other.n != self.n:
                raise ValueError(f"mixed cyclotomic orders {self.n} and {other.n}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycNum.rational(self.n, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CycNum(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CycNum(self.n, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return CycNum(self.n, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        d = len(self.coeffs)
        out = [Fraction(0)] * (2 * d - 1 if d else 0)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return CycNum(self.n, out)

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        """Multiplicative inverse via the extended Euclidean algorithm in Q[x]."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_%d)" % self.n)
        # extended gcd of Phi_n and the representing polynomial; Phi_n is
        # irreducible over Q so the gcd is a nonzero constant
        r0 = [Fraction(c) for c in cyclotomic_polynomial(self.n)]
        r1 = _poly_trim([c for c in self.coeffs])
        s0, s1 = [], [Fraction(1)]
        while r1:
            q, r = _poly_divmod_exact(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        const = r0[0]
        if len(r0) != 1:
            raise AssertionError("gcd with Phi_n is not constant")
        return CycNum(self.n, [c / const for c in s0])

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

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = CycNum.one(self.n)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- equality / hashing / display --------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycNum.rational(self.n, other)
        if not isinstance(other, CycNum):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        h = object.__getattribute__(self, "_hash")
        if h is None:
            h = hash((self.n, self.coeffs))
            object.__setattr__(self, "_hash", h)
        return h

    def serialize(self) -> list[str]:
        """Power-basis coordinates as 'p/q' strings (CLI report format)."""
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @classmethod
    def deserialize(cls, n: int, strings) -> "CycNum":
        return cls(n, [Fraction(s) for s in strings])

    def __repr__(self):
        if self.is_zero():
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                z = "z" if k == 1 else f"z^{k}"
                if c == 1:
                    terms.append(z)
                elif c == -1:
                    terms.append(f"-{z}")
                else:
                    terms.append(f"{c}*{z}")
        return " + ".join(terms).replace("+ -", "- ")
