"""Exact truncated q-series with fractional exponents, theta series via
weight-enumerator substitution, E4 and Delta_24, decomposition in the
ring they generate, and the extremal-defect computation.

Exponents live in (1/den) * Z; coefficients are exact (big ints, or
Fractions inside decompositions).  A series knows the exponent bound up
to which its coefficients are exact and arithmetic propagates the
minimum of the operands' bounds.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .codes import SWEPolynomial
from .errors import DomainError, InputError, ResourceError


@dataclass(frozen=True)
class QSeries:
    den: int  # exponent denominator
    coeffs: tuple  # sorted tuple of (exponent numerator, coefficient)
    order: int  # exact for exponents with numerator <= order

    @classmethod
    def from_dict(cls, den: int, coeffs: dict, order: int) -> "QSeries":
        items = tuple(
            sorted((e, c) for e, c in coeffs.items() if c != 0 and e <= order)
        )
        return cls(den, items, order)

    @classmethod
    def one(cls, order: int, den: int = 1) -> "QSeries":
        return cls.from_dict(den, {0: 1}, order * den)

    def coefficient(self, exponent) -> int:
        """Coefficient at a true (possibly fractional) exponent."""
        e = Fraction(exponent) * self.den
        if e.denominator != 1:
            return 0
        e = int(e)
        if e > self.order:
            raise InputError(
                f"exponent {exponent} beyond exact truncation "
                f"{Fraction(self.order, self.den)}"
            )
        for en, c in self.coeffs:
            if en == e:
                return c
        return 0

    def as_dict(self) -> dict:
        return dict(self.coeffs)

    @property
    def order_exponent(self) -> Fraction:
        return Fraction(self.order, self.den)

    def rescale(self, new_den: int) -> "QSeries":
        """Re-express with a (multiple) exponent denominator."""
        if new_den == self.den:
            return self
        if new_den % self.den != 0:
            raise InputError(f"{new_den} is not a multiple of denominator {self.den}")
        f = new_den // self.den
        return QSeries(
            new_den,
            tuple((e * f, c) for e, c in self.coeffs),
            self.order * f,
        )

    def reduce_den(self) -> "QSeries":
        """Smallest denominator representing the same exponents."""
        g = self.den
        for e, _ in self.coeffs:
            g = gcd(g, e)
            if g == 1:
                return self
        if g == self.den:
            g = self.den  # all exponents multiples of den (or series empty)
        return QSeries(
            self.den // g,
            tuple((e // g, c) for e, c in self.coeffs),
            self.order // g,
        )

    def _align(self, other: "QSeries"):
        d = self.den * other.den // gcd(self.den, other.den)
        return self.rescale(d), other.rescale(d)

    def __add__(self, other):
        a, b = self._align(other)
        out = dict(a.coeffs)
        for e, c in b.coeffs:
            out[e] = out.get(e, 0) + c
        return QSeries.from_dict(a.den, out, min(a.order, b.order))

    def __neg__(self):
        return QSeries(self.den, tuple((e, -c) for e, c in self.coeffs), self.order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return QSeries(self.den, (), self.order)
            return QSeries(
                self.den, tuple((e, c * other) for e, c in self.coeffs), self.order
            )
        a, b = self._align(other)
        order = min(a.order, b.order)
        out: dict = {}
        for e1, c1 in a.coeffs:
            if e1 > order:
                break
            for e2, c2 in b.coeffs:
                e = e1 + e2
                if e > order:
                    break
                out[e] = out.get(e, 0) + c1 * c2
        return QSeries.from_dict(a.den, out, order)

    __rmul__ = __mul__

    def pow(self, k: int) -> "QSeries":
        if k < 0:
            return self.inverse().pow(-k)
        if k == 0:
            return QSeries(self.den, ((0, 1),), self.order)
        result = None
        base = self
        while True:
            if k & 1:
                result = base if result is None else result * base
            k >>= 1
            if not k:
                break
            base = base * base
        return result

    def inverse(self) -> "QSeries":
        """Reciprocal of a series with invertible constant term."""
        c0 = dict(self.coeffs).get(0, 0)
        if c0 == 0:
            raise DomainError("cannot invert a series with zero constant term")
        inv0 = c0 if c0 in (1, -1) else Fraction(1, 1) / c0
        order = self.order
        inv: dict = {0: inv0}
        items = [(e, c) for e, c in self.coeffs if e > 0]
        for e in range(1, order + 1):
            s = 0
            for ei, ci in items:
                if ei > e:
                    break
                prev = inv.get(e - ei)
                if prev:
                    s += ci * prev
            if s:
                inv[e] = -s * inv0
        return QSeries.from_dict(self.den, inv, order)

    def render(self, max_terms: int = 12) -> str:
        parts = []
        for e, c in self.coeffs[:max_terms]:
            if e == 0:
                parts.append(str(c))
            else:
                exp = Fraction(e, self.den)
                parts.append(f"{c}*q^{exp}")
        tail = " + ..." if len(self.coeffs) > max_terms else ""
        return " + ".join(parts) + tail if parts else "0"

    def to_json(self) -> str:
        return json.dumps(
            {
                "denominator": self.den,
                "order": self.order,
                "terms": [[e, str(c)] for e, c in self.coeffs],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "QSeries":
        obj = json.loads(text)
        coeffs = {int(e): int(c) for e, c in obj["terms"]}
        return cls.from_dict(obj["denominator"], coeffs, obj["order"])


def f_series(j: int, k: int, precision: int) -> QSeries:
    """The class theta sum over x = j (mod 2k) with exponents x^2 / 2k.

    Exact through exponent `precision`.  f_0 and f_k hit each exponent
    from both signs; for 0 < j < k the classes of j and -j are distinct
    but equal as series, and the weight-enumerator convention counts a
    +-j component with a single factor f_j.
    """
    if not 0 <= j <= k:
        raise InputError(f"class index {j} out of range 0..{k}")
    m = 2 * k
    den = m
    order = precision * den  # exponent numerators are x^2
    coeffs: dict = {}
    # x = j + m*t over all integers t with x^2 <= order
    t = 0
    while True:
        added = False
        for x in {j + m * t, j - m * t}:
            if x * x <= order:
                coeffs[x * x] = coeffs.get(x * x, 0) + 1
                added = True
        if not added:  # |x| only grows with t
            break
        t += 1
    return QSeries.from_dict(den, coeffs, order).reduce_den()


def theta_from_swe(w: SWEPolynomial, k: int, precision: int) -> QSeries:
    """Substitute x_j <- f_j into the weight enumerator and expand."""
    fs = [f_series(j, k, precision) for j in range(k + 1)]
    # common denominator for accumulation
    total = None
    pow_cache: dict = {}

    def f_pow(j, a):
        key = (j, a)
        if key not in pow_cache:
            pow_cache[key] = fs[j].pow(a)
        return pow_cache[key]

    for comp, count in sorted(w.coefficients.items()):
        term = None
        for j, a in enumerate(comp):
            if a == 0:
                continue
            p = f_pow(j, a)
            term = p if term is None else term * p
        if term is None:  # zero-length code edge
            term = QSeries.one(precision)
        term = term * count
        total = term if total is None else total + term
    if total is None:
        total = QSeries(1, (), precision)
    return total.reduce_den()


def sigma3(m: int) -> int:
    return sum(d ** 3 for d in range(1, m + 1) if m % d == 0)


def e4(precision: int) -> QSeries:
    """Eisenstein series of weight 4 in q^2: 1 + 240 sum sigma_3(m) q^{2m}."""
    coeffs = {0: 1}
    for m in range(1, precision // 2 + 1):
        coeffs[2 * m] = 240 * sigma3(m)
    return QSeries.from_dict(1, coeffs, precision)


def delta24(precision: int) -> QSeries:
    """The cusp form q^2 prod (1 - q^{2m})^24, truncated exactly."""
    one = QSeries.from_dict(1, {0: 1}, precision)
    prod = one
    for m in range(1, precision // 2 + 1):
        factor = QSeries.from_dict(1, {0: 1, 2 * m: -1}, precision)
        prod = prod * factor.pow(24)
    shifted = {e + 2: c for e, c in prod.coeffs if e + 2 <= precision}
    return QSeries.from_dict(1, shifted, precision)


@dataclass
class DecompositionResult:
    coefficients: list  # a_0 .. a_mu as exact Fractions
    remainder: QSeries

    def reconstruct(self, j: int, precision: int) -> QSeries:
        basis = _e4_delta_basis(j, len(self.coefficients) - 1, precision)
        total = QSeries(1, (), precision)
        for a, g in zip(self.coefficients, basis):
            if a:
                total = total + g * a
        return total + self.remainder


def _e4_delta_basis(j: int, mu: int, precision: int):
    """The series E4^{j-3s} Delta^s for s = 0..mu (negative powers via
    the series reciprocal)."""
    E = e4(precision)
    D = delta24(precision)
    out = []
    for s in range(mu + 1):
        p = j - 3 * s
        g = E.pow(p) if p >= 0 else E.inverse().pow(-p)
        if s:
            g = g * D.pow(s)
        out.append(g)
    return out


def decompose_e4_delta(theta: QSeries, j: int, mu: int) -> DecompositionResult:
    """Solve theta = sum_{s<=mu} a_s E4^{j-3s} Delta^s + remainder.

    The system is triangular because Delta^s starts at q^{2s}; the
    remainder starts at exponent >= 2(mu+1).
    """
    t = theta.reduce_den()
    if t.den != 1:
        raise InputError("decomposition needs integer exponents")
    if t.order < 2 * (mu + 1):
        raise ResourceError(
            f"need precision >= {2 * (mu + 1)}, series exact only to {t.order}"
        )
    precision = t.order
    basis = _e4_delta_basis(j, mu, precision)
    residual = t
    coeffs = []
    for s in range(mu + 1):
        a = Fraction(residual.coefficient(2 * s))
        # leading coefficient of E4^{j-3s} Delta^s at q^{2s} is 1
        coeffs.append(a)
        if a:
            residual = residual - basis[s] * a
    for e, c in residual.coeffs:
        if e < 2 * (mu + 1) and c != 0:
            raise AssertionError("remainder has a low-order term")
    coeffs = [a if a.denominator != 1 else a for a in coeffs]
    return DecompositionResult(coeffs, residual)


def extremal_defect(n: int, k: int, precision: int | None = None) -> int:
    """The forced coefficient at q^{2(mu+1)} when a Type II Z_2k-code of
    length n had no Euclidean weight below 4k(mu+1); positivity proves
    the bound instance (n, k).

    Computed from theta of sqrt(2k) Z^n decomposed through order mu+1:
    the defect is minus the coefficient a_{mu+1}.
    """
    if n % 8 != 0:
        raise DomainError(f"length {n} is not divisible by 8")
    j = n // 8
    mu = n // 24
    if precision is None:
        precision = 2 * mu + 4
    theta0 = f_series(0, k, precision).pow(n)
    theta0 = theta0.reduce_den()
    dec = decompose_e4_delta(theta0, j, mu + 1)
    defect = -dec.coefficients[mu + 1]
    if defect.denominator != 1:
        raise AssertionError("defect is not an integer")
    return int(defect)


def extremal_theta(n: int, precision: int = 16) -> QSeries:
    """The unique series in span{E4^{j-3s} Delta^s, s <= mu} equal to
    1 + O(q^{2(mu+1)}): the theta series an extremal even unimodular
    lattice of dimension n must have."""
    if n % 8 != 0:
        raise DomainError(f"length {n} is not divisible by 8")
    j = n // 8
    mu = n // 24
    basis = _e4_delta_basis(j, mu, precision)
    total = basis[0]
    for s in range(1, mu + 1):
        c = total.coefficient(2 * s)
        if c:
            total = total - basis[s] * c
    return total
