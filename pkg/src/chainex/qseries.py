"""Truncated formal power series with exact integer coefficients, plus
builders for every closed-form generating function used by the verifier.

Arithmetic is exact: Python integers never overflow, and every identity
check in this project is an exact coefficient-by-coefficient equality.
Binary operations carry the minimum truncation order of their operands;
reading a coefficient beyond the truncation order raises instead of
silently returning zero.
"""

from __future__ import annotations

from typing import Iterable, List


class SeriesError(ValueError):
    """Raised for truncation violations and non-invertible operands."""


class PowerSeries:
    """Formal power series in q truncated at a fixed order."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[int], order: int = None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
            if order < 0:
                raise SeriesError("a series needs at least a constant term")
        if len(coeffs) > order + 1:
            coeffs = coeffs[: order + 1]
        elif len(coeffs) < order + 1:
            coeffs.extend([0] * (order + 1 - len(coeffs)))
        self.coeffs = coeffs
        self.order = order

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        return cls([1], order)

    @classmethod
    def zero(cls, order: int) -> "PowerSeries":
        return cls([0], order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coefficient: int = 1) -> "PowerSeries":
        c = [0] * (order + 1)
        if exponent <= order:
            c[exponent] = coefficient
        return cls(c, order)

    def coeff(self, n: int) -> int:
        if n < 0:
            return 0
        if n > self.order:
            raise SeriesError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def __add__(self, other):
        if isinstance(other, int):
            other = PowerSeries([other], self.order)
        order = min(self.order, other.order)
        return PowerSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], order)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = PowerSeries([other], self.order)
        order = min(self.order, other.order)
        return PowerSeries([a - b for a, b in zip(self.coeffs, other.coeffs)], order)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return PowerSeries([-a for a in self.coeffs], self.order)

    def __mul__(self, other):
        if isinstance(other, int):
            return PowerSeries([a * other for a in self.coeffs], self.order)
        order = min(self.order, other.order)
        out = [0] * (order + 1)
        for i, a in enumerate(self.coeffs[: order + 1]):
            if a == 0:
                continue
            for j in range(order + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return PowerSeries(out, order)

    __rmul__ = __mul__

    def invert(self) -> "PowerSeries":
        """Multiplicative inverse; the constant term must be +1 or -1 so the
        inverse stays over the integers."""
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise SeriesError(f"constant term {c0} is not a unit over the integers")
        out = [0] * (self.order + 1)
        out[0] = c0
        for n in range(1, self.order + 1):
            acc = sum(self.coeffs[k] * out[n - k] for k in range(1, n + 1))
            out[n] = -c0 * acc
        return PowerSeries(out, self.order)

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise SeriesError(f"cannot extend truncation {self.order} to {order}")
        return PowerSeries(self.coeffs[: order + 1], order)

    def shift(self, exponent: int) -> "PowerSeries":
        """Multiply by q**exponent."""
        return PowerSeries([0] * exponent + self.coeffs, self.order)

    def matches(self, other: "PowerSeries") -> bool:
        """Exact agreement over the common truncation range."""
        order = min(self.order, other.order)
        return self.coeffs[: order + 1] == other.coeffs[: order + 1]

    def __eq__(self, other):
        return isinstance(other, PowerSeries) and self.matches(other)

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __repr__(self):
        return f"PowerSeries(order={self.order}, coeffs={self.coeffs[:8]}...)"

    def __str__(self):
        terms = []
        for n, c in enumerate(self.coeffs):
            if c == 0 and n > 0:
                continue
            if n == 0:
                terms.append(str(c))
            elif n == 1:
                terms.append(f"{c}*q")
            else:
                terms.append(f"{c}*q^{n}")
        return " + ".join(terms)

    def to_json(self):
        return {"schema": 1, "order": self.order,
                "coeffs": [str(c) for c in self.coeffs]}


def exact_divide(numerator: List[int], denominator: List[int]) -> List[int]:
    """Exact polynomial division over the integers; raises on any remainder
    or inexact leading division."""
    num = list(numerator)
    den = list(denominator)
    while den and den[-1] == 0:
        den.pop()
    while num and num[-1] == 0:
        num.pop()
    if not den:
        raise SeriesError("division by the zero polynomial")
    if not num:
        return [0]
    if len(num) < len(den):
        raise SeriesError("inexact polynomial division")
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        if c % lead != 0:
            raise SeriesError("inexact polynomial division")
        out[k] = c // lead
        for j, d in enumerate(den):
            num[k + j] -= out[k] * d
    if any(num):
        raise SeriesError("polynomial division left a remainder")
    return out


# ---------------------------------------------------------------------------
# Pochhammer products
# ---------------------------------------------------------------------------

def _factor(e: int, order: int, negate: bool) -> PowerSeries:
    c = [0] * (order + 1)
    c[0] = 1
    if e <= order:
        c[e] = 1 if negate else -1
    return PowerSeries(c, order)


def poch_finite(first: int, step: int, count: int, order: int,
                negate: bool = False) -> PowerSeries:
    """Finite Pochhammer product: prod_{i<count} (1 - q^(first+i*step)),
    or with plus signs when ``negate``."""
    if step < 1:
        raise SeriesError("step must be >= 1")
    out = PowerSeries.one(order)
    for i in range(count):
        out = out * _factor(first + i * step, order, negate)
    return out


def poch_inf(first: int, step: int, order: int, negate: bool = False) -> PowerSeries:
    """Infinite Pochhammer product, truncated once the factor exponent
    exceeds the order (later factors are 1 + O(q^(order+1)))."""
    if first < 1:
        raise SeriesError("the infinite product needs first exponent >= 1")
    if step < 1:
        raise SeriesError("step must be >= 1")
    out = PowerSeries.one(order)
    e = first
    while e <= order:
        out = out * _factor(e, order, negate)
        e += step
    return out


def gaussian_binomial(n: int, m: int) -> PowerSeries:
    """The Gaussian polynomial [n choose m]_q, computed by exact polynomial
    division of finite Pochhammer products."""
    if not n >= m >= 0:
        raise SeriesError(f"need n >= m >= 0, got n={n}, m={m}")
    degree = m * (n - m)
    order = max(degree, 0)

    def poly(count):
        return poch_finite(1, 1, count, n * (n + 1) // 2).coeffs

    num = poly(n)
    den_series = poch_finite(1, 1, m, n * (n + 1) // 2) * poch_finite(1, 1, n - m, n * (n + 1) // 2)
    quotient = exact_divide(num, den_series.coeffs)
    return PowerSeries(quotient, order)


# ---------------------------------------------------------------------------
# q-binomial theorem specializations
# ---------------------------------------------------------------------------

def q_binomial_sum(a_exp, z_exp: int, order: int, a_negate: bool = False) -> PowerSeries:
    """Left side of the q-binomial theorem with a = (-)q^a_exp and
    z = q^z_exp: sum_n (a;q)_n / (q;q)_n * z^n.  Pass a_exp=None for a=0."""
    if z_exp < 1:
        raise SeriesError("z must specialize to a positive power of q")
    total = PowerSeries.zero(order)
    n = 0
    while n * z_exp <= order:
        if a_exp is None:
            num = PowerSeries.one(order)
        else:
            num = poch_finite(a_exp, 1, n, order, negate=a_negate)
        term = num * poch_finite(1, 1, n, order).invert()
        total = total + term.shift(n * z_exp)
        n += 1
    return total


def q_binomial_product(a_exp, z_exp: int, order: int, a_negate: bool = False) -> PowerSeries:
    """Right side of the q-binomial theorem under the same specialization:
    (az;q)_inf / (z;q)_inf."""
    if z_exp < 1:
        raise SeriesError("z must specialize to a positive power of q")
    den_inv = poch_inf(z_exp, 1, order).invert()
    if a_exp is None:
        return den_inv
    return poch_inf(a_exp + z_exp, 1, order, negate=a_negate) * den_inv


# ---------------------------------------------------------------------------
# Generating-function builders
# ---------------------------------------------------------------------------

DEFAULT_ORDER = 60


def series_partition_count(order: int = DEFAULT_ORDER) -> PowerSeries:
    """1/(q;q)_inf: coefficients are the partition numbers p(n)."""
    return poch_inf(1, 1, order).invert()


def series_sigma_mex(order: int = DEFAULT_ORDER) -> PowerSeries:
    """(-q;q)_inf^2: coefficient of q^n is the sum of classic mex values
    over all partitions of n."""
    s = poch_inf(1, 1, order, negate=True)
    return s * s


def series_chain_mex_shifted(r: int, order: int = DEFAULT_ORDER) -> PowerSeries:
    """Coefficient of q^n is the sum of (chain_mex + r - 1) over all
    partitions of n: the (r+1)-strict generating function times the sum of
    inverse products over the r nonzero residue classes mod r+1."""
    strict = poch_inf(r + 1, r + 1, order) * poch_inf(1, 1, order).invert()
    acc = PowerSeries.zero(order)
    for m in range(1, r + 1):
        acc = acc + poch_inf(m, r + 1, order).invert()
    return strict * acc


def series_chain_mex_sum(r: int, order: int = DEFAULT_ORDER) -> PowerSeries:
    """Coefficient of q^n is the sum of r-chain mex over all partitions
    of n (the shifted builder minus (r-1) copies of every partition)."""
    return series_chain_mex_shifted(r, order) - series_partition_count(order) * (r - 1)


def series_chain_mex_offset_sum(r: int, order: int = DEFAULT_ORDER) -> PowerSeries:
    """Coefficient of q^n is the sum of (chain_mex + class offset) over all
    partitions of n."""
    strict = poch_inf(r + 1, r + 1, order) * poch_inf(1, 1, order).invert()
    inner = PowerSeries.one(order)
    for n in range(1, order + 1):
        num = PowerSeries.monomial(n, order) - PowerSeries.monomial(n + r * n, order)
        den = (_factor(n, order, False) * poch_finite(r + 1, r + 1, n, order)).invert()
        inner = inner + num * den
    return strict * inner


def series_maex_defect(order: int = DEFAULT_ORDER) -> PowerSeries:
    """Coefficient of q^n is the sum of (largest part - classic maex) over
    all partitions of n."""
    acc = PowerSeries.zero(order)
    for n in range(1, order + 1):
        acc = acc + poch_finite(2, 2, n - 1, order).shift(n)
    return series_partition_count(order) * acc


def series_chain_maex_sum(r: int, order: int = DEFAULT_ORDER) -> PowerSeries:
    """Coefficient of q^n is the sum of (largest - chain_maex + class
    offset) over all partitions of n; sum form."""
    strict = poch_inf(r + 1, r + 1, order) * poch_inf(1, 1, order).invert()
    acc = PowerSeries.zero(order)
    for n in range(1, order + 1):
        term = poch_finite(r + 1, r + 1, n, order) * _factor(n, order, False).invert()
        acc = acc + term.shift(n)
    return strict + series_partition_count(order) * acc


def series_chain_maex_product(r: int, order: int = DEFAULT_ORDER) -> PowerSeries:
    """Same series as series_chain_maex_sum built as the product of the
    (r+1)-strict count and the bottom-multiplicity count; the two
    constructions must agree coefficientwise."""
    return series_strict_count(r + 1, order) * series_bottom_multiplicity_count(r + 1, order)


def series_strict_count(r: int, order: int = DEFAULT_ORDER) -> PowerSeries:
    """(q^r;q^r)_inf/(q;q)_inf: counts r-strict partitions."""
    return poch_inf(r, r, order) * poch_inf(1, 1, order).invert()


def series_top_multiplicity_count(r: int, order: int = DEFAULT_ORDER) -> PowerSeries:
    """Counts partitions whose largest part has multiplicity not divisible
    by r while every other part has multiplicity divisible by r.

    The modulus r is the explicit parameter (r >= 2).
    """
    if r < 2:
        raise SeriesError("modulus must be >= 2")
    acc = PowerSeries.one(order)
    for n in range(1, order + 1):
        num = PowerSeries.monomial(n, order) - PowerSeries.monomial(n + (r - 1) * n, order)
        den = (_factor(n, order, False) * poch_finite(r, r, n, order)).invert()
        acc = acc + num * den
    return acc


def series_bottom_multiplicity_count(r: int, order: int = DEFAULT_ORDER) -> PowerSeries:
    """Counts partitions where only the smallest part may have multiplicity
    not divisible by r (modulus explicit, r >= 2)."""
    if r < 2:
        raise SeriesError("modulus must be >= 2")
    acc = PowerSeries.zero(order)
    for n in range(1, order + 1):
        term = poch_finite(r, r, n, order) * _factor(n, order, False).invert()
        acc = acc + term.shift(n)
    return PowerSeries.one(order) + poch_inf(r, r, order).invert() * acc


def series_sum_largest(order: int = DEFAULT_ORDER) -> PowerSeries:
    """Coefficient of q^n is the sum of largest parts over all partitions
    of n."""
    acc = PowerSeries.zero(order)
    for n in range(1, order + 1):
        acc = acc + _factor(n, order, False).invert().shift(n)
    return series_partition_count(order) * acc


def series_parts_above(r: int, j: int, order: int = DEFAULT_ORDER) -> PowerSeries:
    """Counts partitions of n whose smallest r-repeating part is j (equally:
    whose largest multiple of r occurs j times, or gap-class partitions with
    j parts above the (r-1)-chain maex).

    q^(jr)/(1-q^j) * 1/(q^(j+1);q)_inf * prod_{n<j} (1+q^n+...+q^(n(r-1))).
    """
    if r < 2 or j < 1:
        raise SeriesError("need r >= 2 and j >= 1")
    out = _factor(j, order, False).invert().shift(j * r)
    out = out * poch_inf(j + 1, 1, order).invert()
    for n in range(1, j):
        geom = PowerSeries.zero(order)
        for t in range(r):
            if n * t > order:
                break
            geom = geom + PowerSeries.monomial(n * t, order)
        out = out * geom
    return out


# ---------------------------------------------------------------------------
# Bivariate series for the chain-maex distribution
# ---------------------------------------------------------------------------

class BivariateSeries:
    """Truncated series in z and q with exact integer coefficients."""

    __slots__ = ("rows", "z_order", "q_order")

    def __init__(self, z_order: int, q_order: int, rows=None):
        self.z_order = z_order
        self.q_order = q_order
        if rows is None:
            rows = [[0] * (q_order + 1) for _ in range(z_order + 1)]
        self.rows = rows

    def coeff(self, z_deg: int, q_deg: int) -> int:
        if not (0 <= z_deg <= self.z_order and 0 <= q_deg <= self.q_order):
            raise SeriesError(
                f"coefficient (z^{z_deg}, q^{q_deg}) beyond truncation "
                f"({self.z_order}, {self.q_order})")
        return self.rows[z_deg][q_deg]

    def add_row(self, z_deg: int, series: PowerSeries):
        if z_deg > self.z_order:
            return
        for n in range(min(series.order, self.q_order) + 1):
            self.rows[z_deg][n] += series.coeffs[n]

    def column_sums(self) -> PowerSeries:
        """Specialize z = 1."""
        return PowerSeries(
            [sum(row[n] for row in self.rows) for n in range(self.q_order + 1)],
            self.q_order)

    def matches(self, other: "BivariateSeries") -> bool:
        zo = min(self.z_order, other.z_order)
        qo = min(self.q_order, other.q_order)
        return all(self.rows[m][: qo + 1] == other.rows[m][: qo + 1]
                   for m in range(zo + 1))


def maex_bivariate(r: int, z_order: int, q_order: int) -> BivariateSeries:
    """Coefficient of z^m q^n counts partitions of n with r-chain maex m.

    Built from the closed single-sum form, expanding each inverse infinite
    Pochhammer in z via Euler's series.
    """
    out = BivariateSeries(z_order, q_order)
    n = 0
    while (r + 1) * (n + 1) <= q_order:
        base = poch_finite(r + 1, r + 1, n, q_order) \
            * poch_finite(1, 1, n, q_order).invert()
        base = base.shift((r + 1) * (n + 1))
        # 1/(z q^(n+1); q)_inf = sum_m z^m q^((n+1)m) / (q;q)_m
        m = 0
        while (n + 1) * m <= q_order and r + m <= z_order:
            piece = base * poch_finite(1, 1, m, q_order).invert()
            out.add_row(r + m, piece.shift((n + 1) * m))
            m += 1
        n += 1
    return out


def maex_bivariate_double_sum(r: int, z_order: int, q_order: int) -> BivariateSeries:
    """Same bivariate series from the intermediate double-sum form, used to
    cross-check maex_bivariate."""
    out = BivariateSeries(z_order, q_order)
    for m in range(r, z_order + 1):
        ell = 1
        while (m + 1) * ell <= q_order:
            piece = poch_finite(1, 1, m - r, q_order).invert() \
                * poch_finite(r + 1, r + 1, ell - 1, q_order) \
                * poch_finite(1, 1, ell - 1, q_order).invert()
            out.add_row(m, piece.shift((m + 1) * ell))
            ell += 1
    return out
