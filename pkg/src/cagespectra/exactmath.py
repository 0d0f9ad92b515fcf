"""Exact arithmetic: rational polynomials, quadratic surds, exact spectra.

Everything in this module is division-safe big-integer / Fraction work.  The
closed-form spectral results live in the field Q(sqrt(r)) for various small
square-free r, so a dedicated surd type is cheaper and safer than a general
computer-algebra dependency.  Characteristic polynomials of integer matrices
are computed with the Berkowitz algorithm, which is division-free and
therefore exact over the integers.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

import numpy as np

__all__ = [
    "CharPolyCapError",
    "ExactSpectrum",
    "RationalPolynomial",
    "Surd",
    "char_poly_exact",
    "divides",
    "eval_poly_matrix",
    "poly_matrix_equals",
    "square_free_decomposition",
]

Rational = Union[int, Fraction]


class CharPolyCapError(ValueError):
    """Matrix dimension exceeds the configured exact char-poly cap."""


def square_free_decomposition(r: int) -> tuple[int, int]:
    """Write r = f * s**2 with f square-free; return (f, s).  Requires r >= 0."""
    if r < 0:
        raise ValueError("negative radicand")
    if r in (0, 1):
        return r, 1
    f, s = 1, 1
    p = 2
    while p * p <= r:
        if r % p == 0:
            e = 0
            while r % p == 0:
                r //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                f *= p
        p += 1 if p == 2 else 2
    return f * r, s


def _sign(x: Rational) -> int:
    return (x > 0) - (x < 0)


class Surd:
    """Exact real of the form a + b*sqrt(r), a and b rational, r square-free.

    Construction normalizes: the radicand is reduced to its square-free part
    (the square factor is absorbed into b), and b == 0 forces r == 0.  Sums
    and products require compatible radicands, which is all the closed forms
    here ever need; mixing two distinct irrational radicands raises.
    """

    __slots__ = ("a", "b", "r")

    def __init__(self, a: Rational, b: Rational = 0, r: int = 0):
        a, b = Fraction(a), Fraction(b)
        r = int(r)
        if b == 0:
            r = 0
        else:
            f, s = square_free_decomposition(r)
            if f == 0:
                b, r = Fraction(0), 0
            elif f == 1:
                a += b * s
                b, r = Fraction(0), 0
            else:
                b, r = b * s, f
        self.a, self.b, self.r = a, b, r

    @classmethod
    def sqrt(cls, x: Rational) -> "Surd":
        """Exact square root of a nonnegative rational, as a surd."""
        x = Fraction(x)
        if x < 0:
            raise ValueError("sqrt of negative rational")
        # sqrt(p/q) = sqrt(p*q) / q
        return cls(0, Fraction(1, x.denominator), x.numerator * x.denominator)

    # -- predicates -------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    @property
    def is_integer(self) -> bool:
        return self.b == 0 and self.a.denominator == 1

    def conjugate(self) -> "Surd":
        return Surd(self.a, -self.b, self.r)

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "Surd":
        if isinstance(x, Surd):
            return x
        if isinstance(x, (int, Fraction)):
            return Surd(x)
        return NotImplemented  # type: ignore[return-value]

    def _common_r(self, other: "Surd") -> int:
        if self.r == 0:
            return other.r
        if other.r == 0 or other.r == self.r:
            return self.r
        raise ValueError(f"incompatible radicands {self.r} and {other.r}")

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        r = self._common_r(other)
        return Surd(self.a + other.a, self.b + other.b, r)

    __radd__ = __add__

    def __neg__(self):
        return Surd(-self.a, -self.b, self.r)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        r = self._common_r(other)
        return Surd(
            self.a * other.a + self.b * other.b * r,
            self.a * other.b + self.b * other.a,
            r,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        r = self._common_r(other)
        denom = other.a * other.a - other.b * other.b * r
        if denom == 0:
            if other.a == 0 and other.b == 0:
                raise ZeroDivisionError("surd division by zero")
            # a = +-b*sqrt(r) cannot happen for nonzero rational a, b with
            # r square-free > 1, so denom == 0 only for the zero surd.
            raise ZeroDivisionError("surd division by zero")
        return self * Surd(other.a / denom, -other.b / denom, r) if r else Surd(
            self.a / other.a, self.b / other.a, self.r
        )

    def __rtruediv__(self, other):
        return Surd._coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative surd power")
        out = Surd(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparison -------------------------------------------------------

    def sign(self) -> int:
        if self.b == 0:
            return _sign(self.a)
        if self.a == 0:
            return _sign(self.b)
        sa, sb = _sign(self.a), _sign(self.b)
        if sa == sb:
            return sa
        return sa if self.a * self.a > self.b * self.b * self.r else sb

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.a, self.b, self.r) == (other.a, other.b, other.r)

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.r))

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.r)

    # -- formatting -------------------------------------------------------

    def __repr__(self):
        return f"Surd({self.a!r}, {self.b!r}, {self.r!r})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        root = f"√{self.r}"
        if abs(self.b) != 1:
            root = f"{abs(self.b)}{root}"
        sign = "+" if self.b > 0 else "-"
        if self.a == 0:
            return root if self.b > 0 else f"-{root}"
        return f"{self.a}{sign}{root}"

    def to_json(self) -> dict:
        return {
            "a": [self.a.numerator, self.a.denominator],
            "b": [self.b.numerator, self.b.denominator],
            "r": self.r,
        }


class RationalPolynomial:
    """Dense univariate polynomial with exact Fraction coefficients.

    Coefficients are stored in ascending order of degree with no trailing
    zeros; the zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rational]):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c: Rational) -> "RationalPolynomial":
        return cls([c])

    @classmethod
    def x(cls) -> "RationalPolynomial":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def int_coeffs(self) -> tuple[int, ...]:
        if not self.is_integral:
            raise ValueError("polynomial has non-integer coefficients")
        return tuple(c.numerator for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, RationalPolynomial):
            other = RationalPolynomial([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RationalPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, RationalPolynomial):
            other = RationalPolynomial([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial([c * other for c in self.coeffs])
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return RationalPolynomial([])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            if ci:
                for j, cj in enumerate(other.coeffs):
                    out[i + j] += ci * cj
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        out = RationalPolynomial([1])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other: "RationalPolynomial"):
        if not isinstance(other, RationalPolynomial) or not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return RationalPolynomial([]), RationalPolynomial(rem)
        quo = [Fraction(0)] * (dq + 1)
        lead = other.coeffs[-1]
        for i in range(dq, -1, -1):
            c = rem[i + len(other.coeffs) - 1] / lead
            quo[i] = c
            if c:
                for j, oc in enumerate(other.coeffs):
                    rem[i + j] -= c * oc
        return RationalPolynomial(quo), RationalPolynomial(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        """Evaluate at x by Horner; x may be rational, float or a Surd."""
        acc = x * 0  # zero of the right type
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"RationalPolynomial({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                xs = "x" if i == 1 else f"x^{i}"
                body = xs if mag == 1 else f"{mag}{xs}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms)


def divides(p: RationalPolynomial, q: RationalPolynomial) -> bool:
    """True when q divides p exactly (zero remainder)."""
    if not q.coeffs:
        return not p.coeffs
    return not (p % q).coeffs


def char_poly_exact(M, cap: int = 64) -> RationalPolynomial:
    """Characteristic polynomial det(xI - M) of a square integer matrix.

    Uses the division-free Berkowitz recurrence over Python big integers, so
    the result is exact regardless of coefficient growth.  Matrices larger
    than `cap` are refused (callers fall back to the numeric eigensolver).
    """
    A = np.asarray(M)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("char_poly_exact needs a square matrix")
    n = A.shape[0]
    if n > cap:
        raise CharPolyCapError(f"dimension {n} exceeds exact char-poly cap {cap}")
    rows = [[int(x) for x in row] for row in A.tolist()]

    coeffs = [1]  # descending coefficients of det(xI - leading minor)
    for i in range(n):
        a = rows[i][i]
        R = rows[i][:i]
        S = [rows[j][i] for j in range(i)]
        # Toeplitz column: 1, -a, -R.S, -R.M.S, ... for the i-th pivot
        t = [1, -a]
        v = S
        for step in range(i):
            t.append(-sum(rv * vv for rv, vv in zip(R, v)))
            if step < i - 1:
                v = [sum(rows[j][m] * v[m] for m in range(i)) for j in range(i)]
        coeffs = [
            sum(t[m] * coeffs[j - m] for m in range(max(0, j - len(coeffs) + 1), min(j + 1, len(t))))
            for j in range(len(coeffs) + 1)
        ]
    return RationalPolynomial(list(reversed(coeffs)))


def _int_horner(int_coeffs: Sequence[int], A: np.ndarray) -> np.ndarray:
    n = A.shape[0]
    # Entrywise bound for the Horner intermediates: multiplying by A scales
    # the max-abs entry by at most max row sum of |A|.
    rowmax = int(np.abs(A).sum(axis=1).max()) if n else 0
    bound = 0
    for c in reversed(int_coeffs):
        bound = bound * max(1, rowmax) + abs(int(c))
    use_object = bound >= 2**62
    work = A.astype(object) if use_object else A.astype(np.int64)
    eye = np.eye(n, dtype=work.dtype)
    acc = np.zeros_like(work)
    for c in reversed(int_coeffs):
        acc = acc @ work + int(c) * eye
    return acc


def eval_poly_matrix(p: RationalPolynomial, A) -> np.ndarray:
    """Evaluate p at a square integer matrix; returns a Fraction matrix."""
    A = np.asarray(A)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("eval_poly_matrix needs a square matrix")
    if p.degree < 0:
        return np.full(A.shape, Fraction(0), dtype=object)
    lcm = math.lcm(*(c.denominator for c in p.coeffs))
    scaled = [int(c * lcm) for c in p.coeffs]
    num = _int_horner(scaled, A)
    out = np.empty(A.shape, dtype=object)
    for i in range(A.shape[0]):
        for j in range(A.shape[1]):
            out[i, j] = Fraction(int(num[i, j]), lcm)
    return out


def poly_matrix_equals(p: RationalPolynomial, A, target) -> bool:
    """Exact test p(A) == target without materializing a Fraction matrix."""
    A = np.asarray(A)
    target = np.asarray(target)
    if p.degree < 0:
        return not target.any()
    lcm = math.lcm(*(c.denominator for c in p.coeffs))
    scaled = [int(c * lcm) for c in p.coeffs]
    num = _int_horner(scaled, A)
    return bool(np.array_equal(num, lcm * target.astype(num.dtype)))


class ExactSpectrum:
    """Multiset of exact eigenvalues: (surd value, multiplicity) pairs.

    Entries are normalized on construction: equal values merged, sorted in
    strictly decreasing numeric order.
    """

    __slots__ = ("entries",)

    def __init__(self, pairs: Iterable[tuple]):
        merged: dict[Surd, int] = {}
        for value, mult in pairs:
            if not isinstance(value, Surd):
                value = Surd(value)
            mult = int(mult)
            if mult < 0:
                raise ValueError("negative multiplicity")
            if mult == 0:
                continue
            merged[value] = merged.get(value, 0) + mult
        self.entries: tuple[tuple[Surd, int], ...] = tuple(
            sorted(merged.items(), key=lambda vm: float(vm[0]), reverse=True)
        )

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.entries)

    @property
    def distinct_count(self) -> int:
        return len(self.entries)

    def trace_components(self) -> dict[int, Fraction]:
        """Sum of value*multiplicity, split by radicand (key 0 = rational part)."""
        comps: dict[int, Fraction] = {}
        for v, m in self.entries:
            comps[0] = comps.get(0, Fraction(0)) + m * v.a
            if v.r:
                comps[v.r] = comps.get(v.r, Fraction(0)) + m * v.b
        return {r: c for r, c in comps.items() if c != 0}

    @property
    def is_traceless(self) -> bool:
        return not self.trace_components()

    def as_floats(self) -> list[float]:
        out: list[float] = []
        for v, m in self.entries:
            out.extend([float(v)] * m)
        return out

    def __eq__(self, other):
        if not isinstance(other, ExactSpectrum):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __repr__(self):
        inner = ", ".join(f"{v}^({m})" for v, m in self.entries)
        return f"ExactSpectrum{{{inner}}}"

    def to_json(self) -> list[dict]:
        return [dict(v.to_json(), mult=m) for v, m in self.entries]
