"""Truncated q-series over exact rationals.

A QSeries tracks coefficients of q^0 .. q^T for a declared precision T and
never invents values beyond it: products and sums carry the minimum of the
operand precisions.  Coefficients are Python ints or Fractions; integer
series stay integer so the hot paths (eta products, Eisenstein series)
avoid Fraction overhead.

Provides the weight-2 and weight-4 Eisenstein series

    L(q) = 1 - 24 sum sigma(n) q^n,      M(q) = 1 + 240 sum sigma_3(n) q^n,

the squared difference (a*L(q^a) - b*L(q^b))^2, Euler products
prod (1 - q^{mn})^e, and eta-quotient expansions.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from .arith import sigma

Coeff = Union[int, Fraction]


class QSeries:
    """Immutable dense truncated power series in q."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Coeff]):
        cs = tuple(coeffs)
        if not cs:
            raise ValueError("QSeries needs at least the q^0 coefficient")
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, *a):
        raise AttributeError("QSeries is immutable")

    @property
    def precision(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, n: int) -> Coeff:
        if n < 0:
            return 0
        if n > self.precision:
            raise ValueError(f"coefficient q^{n} beyond tracked precision {self.precision}")
        return self.coeffs[n]

    def __getitem__(self, n: int) -> Coeff:
        return self.coefficient(n)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        t = min(self.precision, other.precision)
        return self.coeffs[: t + 1] == other.coeffs[: t + 1] and self.precision == other.precision

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:6])
        return f"QSeries[T={self.precision}]({head}{', ...' if self.precision > 5 else ''})"

    def __add__(self, other: "QSeries") -> "QSeries":
        t = min(self.precision, other.precision)
        a, b = self.coeffs, other.coeffs
        return QSeries(a[i] + b[i] for i in range(t + 1))

    def __sub__(self, other: "QSeries") -> "QSeries":
        t = min(self.precision, other.precision)
        a, b = self.coeffs, other.coeffs
        return QSeries(a[i] - b[i] for i in range(t + 1))

    def __neg__(self) -> "QSeries":
        return QSeries(-c for c in self.coeffs)

    def __mul__(self, other: "QSeries") -> "QSeries":
        if not isinstance(other, QSeries):
            return NotImplemented
        t = min(self.precision, other.precision)
        a, b = self.coeffs, other.coeffs
        out = [0] * (t + 1)
        for i in range(t + 1):
            ai = a[i]
            if ai == 0:
                continue
            for j in range(t + 1 - i):
                bj = b[j]
                if bj != 0:
                    out[i + j] += ai * bj
        return QSeries(out)

    def scale(self, c: Coeff) -> "QSeries":
        return QSeries(c * x for x in self.coeffs)

    def shift(self, s: int) -> "QSeries":
        """Multiply by q^s (s >= 0), dropping coefficients past the precision."""
        if s < 0:
            raise ValueError("shift: s must be >= 0")
        t = self.precision
        return QSeries([0] * min(s, t + 1) + list(self.coeffs[: max(t + 1 - s, 0)]))

    def substitute_power(self, t: int) -> "QSeries":
        """q -> q^t; precision preserved, coefficients beyond it dropped."""
        if t < 1:
            raise ValueError("substitute_power: t must be >= 1")
        T = self.precision
        out = [0] * (T + 1)
        for n in range(T // t + 1):
            out[t * n] = self.coeffs[n]
        return QSeries(out)


def zero(T: int) -> QSeries:
    return QSeries([0] * (T + 1))


def one(T: int) -> QSeries:
    return QSeries([1] + [0] * T)


def add(a: QSeries, b: QSeries) -> QSeries:
    return a + b


def scale(c: Coeff, a: QSeries) -> QSeries:
    return a.scale(c)


def mul(a: QSeries, b: QSeries) -> QSeries:
    return a * b


def substitute_power(a: QSeries, t: int) -> QSeries:
    return a.substitute_power(t)


def eisenstein_L(t: int, T: int) -> QSeries:
    """L(q^t) = 1 - 24 sum sigma(n) q^{tn}, truncated at T."""
    if t < 1:
        raise ValueError("eisenstein_L: t must be >= 1")
    out = [0] * (T + 1)
    out[0] = 1
    for n in range(1, T // t + 1):
        out[t * n] = -24 * sigma(1, n)
    return QSeries(out)


def eisenstein_M(t: int, T: int) -> QSeries:
    """M(q^t) = 1 + 240 sum sigma_3(n) q^{tn}, truncated at T."""
    if t < 1:
        raise ValueError("eisenstein_M: t must be >= 1")
    out = [0] * (T + 1)
    out[0] = 1
    for n in range(1, T // t + 1):
        out[t * n] = 240 * sigma(3, n)
    return QSeries(out)


def eisenstein_weight2(t: int, T: int) -> QSeries:
    """L(q) - t*L(q^t): the weight-2 holomorphic combination for t >= 2."""
    if t < 2:
        raise ValueError("eisenstein_weight2: t must be >= 2")
    return eisenstein_L(1, T) - eisenstein_L(t, T).scale(t)


def squared_difference(alpha: int, beta: int, T: int) -> QSeries:
    """(alpha*L(q^alpha) - beta*L(q^beta))^2 with constant term (alpha-beta)^2."""
    if alpha < 1 or beta < 1:
        raise ValueError("squared_difference: alpha, beta must be >= 1")
    d = eisenstein_L(alpha, T).scale(alpha) - eisenstein_L(beta, T).scale(beta)
    return d * d


def _pentagonal_terms(m: int, T: int) -> list[tuple[int, int]]:
    """Sparse expansion of prod (1 - q^{mn}): [(exponent, +-1), ...] up to T."""
    terms = [(0, 1)]
    k = 1
    while True:
        e1 = m * k * (3 * k - 1) // 2
        e2 = m * k * (3 * k + 1) // 2
        if e1 > T and e2 > T:
            break
        s = 1 if k % 2 == 0 else -1
        if e1 <= T:
            terms.append((e1, s))
        if e2 <= T:
            terms.append((e2, s))
        k += 1
    terms.sort()
    return terms


def _mul_sparse(dense: list, sparse: list[tuple[int, int]], T: int) -> list:
    out = [0] * (T + 1)
    for e, s in sparse:
        if s == 1:
            for n in range(e, T + 1):
                out[n] += dense[n - e]
        else:
            for n in range(e, T + 1):
                out[n] -= dense[n - e]
    return out


def _div_sparse(dense: list, sparse: list[tuple[int, int]], T: int) -> list:
    # divisor has constant term 1; c_n = b_n - sum_{e>0} s*c_{n-e}
    out = [0] * (T + 1)
    tail = [(e, s) for e, s in sparse if e > 0]
    for n in range(T + 1):
        acc = dense[n]
        for e, s in tail:
            if e > n:
                break
            acc -= s * out[n - e]
        out[n] = acc
    return out


def euler_product_power(m: int, e: int, T: int) -> QSeries:
    """prod_{n>=1} (1 - q^{mn})^e; negative e via exact series division."""
    if m < 1:
        raise ValueError("euler_product_power: m must be >= 1")
    sparse = _pentagonal_terms(m, T)
    out = [1] + [0] * T
    for _ in range(abs(e)):
        out = _mul_sparse(out, sparse, T) if e > 0 else _div_sparse(out, sparse, T)
    return QSeries(out)


def eta_quotient_series(exponents: dict[int, int], T: int) -> QSeries:
    """Expansion of prod_delta eta(delta*z)^{r_delta} as a q-series.

    The leading power is s = (sum delta*r_delta)/24, which must be a
    non-negative integer (holomorphy at infinity plus the mod-24 condition).
    """
    s24 = sum(d * r for d, r in exponents.items())
    if s24 % 24 != 0:
        raise ValueError(f"eta quotient has non-integral leading exponent {s24}/24")
    s = s24 // 24
    if s < 0:
        raise ValueError(f"eta quotient has a pole at infinity (leading exponent {s})")
    out = [1] + [0] * T
    for d, r in sorted(exponents.items()):
        if r == 0:
            continue
        sparse = _pentagonal_terms(d, T)
        for _ in range(abs(r)):
            out = _mul_sparse(out, sparse, T) if r > 0 else _div_sparse(out, sparse, T)
    return QSeries(out).shift(s)
