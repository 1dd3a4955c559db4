"""Quasimodular representations of the graph series.

The generating series attached to a genus-g graph is a power series in q with
only even exponents, and it lies in the weight-(6g-6) graded piece of
Q[E2, E4, E6], where the Eisenstein series are taken in q^2:

    E2 = 1 - 24 sum sigma_1(n) q^{2n}
    E4 = 1 + 240 sum sigma_3(n) q^{2n}
    E6 = 1 - 504 sum sigma_5(n) q^{2n}

Given enough q-coefficients, the representation is found by solving an exact
linear system over the rationals; extra coefficients make the system
overdetermined and provide a consistency check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .laurent import coeff_str


class Inconsistent(ValueError):
    """An overdetermined fit has no exact solution; something upstream is wrong."""


class Underdetermined(ValueError):
    """Too few series coefficients to pin down the representation."""


def divisor_sigma(n: int, power: int = 1) -> int:
    """Sum of the ``power``-th powers of the divisors of n."""
    if n < 1:
        raise ValueError("n must be positive")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d**power
            e = n // d
            if e != d:
                total += e**power
        d += 1
    return total


@dataclass(frozen=True)
class QSeries:
    """Power series in q, truncated: coefficients are known exactly for all
    exponents < ``order`` (the series is O(q^order)).

    Exponents with no stored coefficient are zero.  Reading a coefficient at
    or beyond the truncation order raises, rather than silently returning 0.
    """

    coeffs: dict
    order: int

    def __post_init__(self):
        clean = {e: c for e, c in self.coeffs.items() if c != 0 and e < self.order}
        if any(e < 0 for e in clean):
            raise ValueError("negative exponents are not allowed in a QSeries")
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def zero(cls, order: int) -> "QSeries":
        return cls({}, order)

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls({0: 1}, order)

    def coeff(self, exponent: int):
        if exponent >= self.order:
            raise ValueError(f"coefficient of q^{exponent} lies beyond the truncation O(q^{self.order})")
        return self.coeffs.get(exponent, 0)

    def truncate(self, order: int) -> "QSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return QSeries({e: c for e, c in self.coeffs.items() if e < order}, order)

    def __add__(self, other: "QSeries") -> "QSeries":
        order = min(self.order, other.order)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return QSeries(out, order)

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + other.scale(-1)

    def scale(self, c) -> "QSeries":
        return QSeries({e: c * v for e, v in self.coeffs.items()}, self.order)

    def __mul__(self, other: "QSeries") -> "QSeries":
        # truncated Cauchy product; valid because both factors have
        # non-negative exponents
        order = min(self.order, other.order)
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                if e < order:
                    out[e] = out.get(e, 0) + c1 * c2
        return QSeries(out, order)

    def __pow__(self, k: int) -> "QSeries":
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = QSeries.one(self.order)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def same_coefficients(self, other: "QSeries") -> bool:
        """Equality of coefficients on the common truncation range."""
        order = min(self.order, other.order)
        return all(
            self.coeffs.get(e, 0) == other.coeffs.get(e, 0)
            for e in set(self.coeffs) | set(other.coeffs)
            if e < order
        )

    def is_zero(self) -> bool:
        return not self.coeffs

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = coeff_str(self.coeffs[e])
            if e == 0:
                parts.append(c)
            else:
                parts.append(f"{c}*q^{e}")
        return "+".join(parts).replace("+-", "-")


def eisenstein(weight: int, order: int) -> QSeries:
    """Normalized Eisenstein series of weight 2, 4 or 6, expanded in q^2 and
    truncated to O(q^order)."""
    if weight not in (2, 4, 6):
        raise ValueError("weight must be 2, 4 or 6")
    mult, power = {2: (-24, 1), 4: (240, 3), 6: (-504, 5)}[weight]
    coeffs = {0: 1}
    n = 1
    while 2 * n < order:
        coeffs[2 * n] = mult * divisor_sigma(n, power)
        n += 1
    return QSeries(coeffs, order)


def weight_monomials(weight: int) -> list:
    """All (i, j, k) with 2i + 4j + 6k = weight, in a fixed deterministic
    order (i ascending, then j ascending)."""
    out = []
    for i in range(weight // 2 + 1):
        for j in range((weight - 2 * i) // 4 + 1):
            rest = weight - 2 * i - 4 * j
            if rest % 6 == 0:
                out.append((i, j, rest // 6))
    return out


@dataclass(frozen=True)
class QuasimodularRep:
    """Exact coefficients over the monomial basis E2^i E4^j E6^k of one
    weight-homogeneous graded piece."""

    weight: int
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (i, j, k), c in self.coeffs.items():
            if 2 * i + 4 * j + 6 * k != self.weight:
                raise ValueError(f"monomial {(i, j, k)} is not of weight {self.weight}")
            if c != 0:
                clean[(i, j, k)] = Fraction(c)
        object.__setattr__(self, "coeffs", clean)

    def coeff(self, ijk):
        return self.coeffs.get(tuple(ijk), Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for ijk in weight_monomials(self.weight):
            c = self.coeffs.get(ijk)
            if c is None:
                continue
            mono = "*".join(
                f"E{w}^{p}" for w, p in zip((2, 4, 6), ijk) if p
            )
            parts.append(f"({coeff_str(c)})*{mono}" if mono else f"({coeff_str(c)})")
        return " + ".join(parts)


def _monomial_series(ijk, order: int) -> QSeries:
    i, j, k = ijk
    return eisenstein(2, order) ** i * eisenstein(4, order) ** j * eisenstein(6, order) ** k


def eval_rep(rep: QuasimodularRep, order: int) -> QSeries:
    """Expand the Eisenstein-monomial combination back into a q-series."""
    total = QSeries.zero(order)
    for ijk, c in rep.coeffs.items():
        total = total + _monomial_series(ijk, order).scale(c)
    return total


def _solve_exact(rows, rhs):
    """Gaussian elimination over exact rationals.

    Returns the unique solution; raises Underdetermined when the coefficient
    matrix has deficient column rank and Inconsistent when the (possibly
    overdetermined) system has no solution.
    """
    m = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    nrows, ncols = len(m), len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if m[i][ncols] != 0:
            raise Inconsistent("overdetermined linear system has no exact solution")
    if len(pivots) < ncols:
        raise Underdetermined(
            f"system determines only {len(pivots)} of {ncols} unknowns; supply more series coefficients"
        )
    sol = [Fraction(0)] * ncols
    for row, c in enumerate(pivots):
        sol[c] = m[row][ncols]
    return sol


def fit(series: QSeries, g: int) -> QuasimodularRep:
    """Express a genus-g graph series exactly in the weight-(6g-6) monomials
    E2^i E4^j E6^k.

    The series must carry at least as many even-exponent coefficients as
    there are monomials; any extra coefficients turn the solve into an
    overdetermined consistency check.
    """
    if g < 2:
        raise ValueError("genus must be at least 2")
    weight = 6 * g - 6
    monos = weight_monomials(weight)
    exponents = list(range(0, series.order, 2))
    if len(exponents) < len(monos):
        raise Underdetermined(
            f"need at least {len(monos)} even q-coefficients for weight {weight}, have {len(exponents)}"
        )
    if any(e % 2 for e in series.coeffs):
        raise ValueError("graph series must be even in q")
    basis = [_monomial_series(ijk, series.order) for ijk in monos]
    rows = [[b.coeff(e) for b in basis] for e in exponents]
    rhs = [series.coeff(e) for e in exponents]
    sol = _solve_exact(rows, rhs)
    return QuasimodularRep(weight, dict(zip(monos, sol)))
