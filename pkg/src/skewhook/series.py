"""Exact truncated power series in q, and in (q, t).

A series knows its truncation degree ``N``; coefficients above ``N`` are
unknown.  Binary operations require equal truncation degrees; use
:meth:`TruncatedSeries.truncate` to reconcile operands explicitly.
"""

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ValidationError


class TruncatedSeries:
    """Univariate series sum_{i<=N} c_i q^i with integer coefficients."""

    __slots__ = ("N", "coeffs")

    def __init__(self, coeffs: Iterable[int], N: int):
        if N < 0:
            raise ValidationError("truncation degree must be nonnegative")
        c = [int(x) for x in coeffs][: N + 1]
        c.extend([0] * (N + 1 - len(c)))
        self.N = N
        self.coeffs = tuple(c)

    @classmethod
    def zero(cls, N: int) -> "TruncatedSeries":
        return cls((), N)

    @classmethod
    def one(cls, N: int) -> "TruncatedSeries":
        return cls((1,), N)

    @classmethod
    def monomial(cls, a: int, N: int, coeff: int = 1) -> "TruncatedSeries":
        if a < 0:
            raise ValidationError("negative exponent")
        return cls([0] * a + [coeff], N)

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self.coeffs)}, N={self.N})"

    def _check(self, other: "TruncatedSeries") -> None:
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"cannot combine TruncatedSeries with {type(other).__name__}")
        if other.N != self.N:
            raise ValidationError(f"truncation degree mismatch: {self.N} vs {other.N}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.N == other.N and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.N, self.coeffs))

    def __getitem__(self, i: int) -> int:
        if not 0 <= i <= self.N:
            raise IndexError(f"coefficient {i} is beyond the truncation degree {self.N}")
        return self.coeffs[i]

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.N)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries([a - b for a, b in zip(self.coeffs, other.coeffs)], self.N)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-a for a in self.coeffs], self.N)

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, int):
            return TruncatedSeries([a * other for a in self.coeffs], self.N)
        self._check(other)
        N = self.N
        out = [0] * (N + 1)
        b = other.coeffs
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(N + 1 - i):
                    if b[j]:
                        out[i + j] += a * b[j]
        return TruncatedSeries(out, N)

    __rmul__ = __mul__

    def shift(self, a: int) -> "TruncatedSeries":
        """Multiply by q^a."""
        if a < 0:
            raise ValidationError("negative shift")
        return TruncatedSeries([0] * a + list(self.coeffs), self.N)

    def truncate(self, N: int) -> "TruncatedSeries":
        if N > self.N:
            raise ValidationError(f"cannot extend a series truncated at {self.N} to {N}")
        return TruncatedSeries(self.coeffs, N)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def degree(self) -> int:
        """Largest index with a nonzero coefficient (-1 for zero)."""
        for i in range(self.N, -1, -1):
            if self.coeffs[i]:
                return i
        return -1

    def to_json(self) -> dict:
        return {"N": self.N, "coeffs": [str(c) for c in self.coeffs]}


def geom_factor(h: int, N: int) -> TruncatedSeries:
    """1/(1 - q^h) = sum_m q^{mh}, truncated at N."""
    if h < 1:
        raise ValidationError("geom_factor needs h >= 1")
    return TruncatedSeries([1 if i % h == 0 else 0 for i in range(N + 1)], N)


def one_minus_q_power(h: int, N: int) -> TruncatedSeries:
    """1 - q^h, truncated at N."""
    c = [0] * (N + 1)
    c[0] = 1
    if h <= N:
        c[h] -= 1
    return TruncatedSeries(c, N)


def mul_geom(s: TruncatedSeries, h: int) -> TruncatedSeries:
    """s / (1 - q^h), computed by a running sum instead of a full product."""
    c = list(s.coeffs)
    for i in range(h, s.N + 1):
        c[i] += c[i - h]
    return TruncatedSeries(c, s.N)


def product(factors: Iterable[TruncatedSeries], N: int) -> TruncatedSeries:
    out = TruncatedSeries.one(N)
    for f in factors:
        out = out * f
    return out


def q_factorial_product(n: int, N: int) -> TruncatedSeries:
    """prod_{i=1}^n (1 - q^i)."""
    return product((one_minus_q_power(i, N) for i in range(1, n + 1)), N)


def complete_homogeneous(m: int, exponents: Sequence[int], N: int) -> TruncatedSeries:
    """h_m(q^{e_1}, ..., q^{e_r}) as a truncated series, by DP over the arguments."""
    if m < 0:
        return TruncatedSeries.zero(N)
    # table[j] = h_j of the arguments processed so far
    table = [TruncatedSeries.one(N)] + [TruncatedSeries.zero(N)] * m
    for e in exponents:
        for j in range(1, m + 1):
            table[j] = table[j] + table[j - 1].shift(e) if e <= N else table[j]
    return table[m]


def q_binomial(n: int, k: int, N: int) -> TruncatedSeries:
    """Gaussian binomial [n choose k]_q via the q-Pascal recurrence."""
    if k < 0 or k > n:
        return TruncatedSeries.zero(N)
    row = [TruncatedSeries.one(N)]
    for i in range(1, n + 1):
        new = []
        for j in range(i + 1):
            left = row[j - 1] if j >= 1 else TruncatedSeries.zero(N)
            right = row[j].shift(j) if j < i else TruncatedSeries.zero(N)
            new.append(left + right)
        row = new
    return row[k]


def series_limit_q1(s: TruncatedSeries, degree: int | None = None) -> Fraction:
    """Value at q = 1 of a polynomial known to have degree at most ``degree``.

    The series must be exact up to that degree, so ``degree <= s.N`` and every
    coefficient between ``degree`` and ``N`` must vanish.
    """
    if degree is None:
        degree = s.N
    if degree > s.N:
        raise ValidationError(f"polynomial degree {degree} exceeds the truncation degree {s.N}")
    if any(s.coeffs[degree + 1:]):
        raise ValidationError("series is not a polynomial of the stated degree")
    return Fraction(sum(s.coeffs))


class BivariateSeries:
    """Series in q and t, truncated at q-degree N with t-degree at most N."""

    __slots__ = ("N", "table")

    def __init__(self, table: Iterable[Iterable[int]], N: int):
        if N < 0:
            raise ValidationError("truncation degree must be nonnegative")
        rows = [list(r) for r in table][: N + 1]
        out = []
        for a in range(N + 1):
            r = [int(x) for x in rows[a]][: N + 1] if a < len(rows) else []
            out.append(tuple(r + [0] * (N + 1 - len(r))))
        self.N = N
        self.table = tuple(out)

    @classmethod
    def zero(cls, N: int) -> "BivariateSeries":
        return cls((), N)

    @classmethod
    def one(cls, N: int) -> "BivariateSeries":
        return cls([[1]], N)

    @classmethod
    def monomial(cls, a: int, b: int, N: int) -> "BivariateSeries":
        t = [[0] * (N + 1) for _ in range(N + 1)]
        if a <= N and b <= N:
            t[a][b] = 1
        return cls(t, N)

    @classmethod
    def from_q(cls, s: TruncatedSeries) -> "BivariateSeries":
        return cls([[c] for c in s.coeffs], s.N)

    def __repr__(self) -> str:
        return f"BivariateSeries({self.to_json()['coeffs']}, N={self.N})"

    def _check(self, other: "BivariateSeries") -> None:
        if not isinstance(other, BivariateSeries):
            raise TypeError(f"cannot combine BivariateSeries with {type(other).__name__}")
        if other.N != self.N:
            raise ValidationError(f"truncation degree mismatch: {self.N} vs {other.N}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        return self.N == other.N and self.table == other.table

    def __hash__(self) -> int:
        return hash((self.N, self.table))

    def coeff(self, a: int, b: int) -> int:
        if not 0 <= a <= self.N:
            raise IndexError(f"q-degree {a} is beyond the truncation degree {self.N}")
        return self.table[a][b] if 0 <= b <= self.N else 0

    def __add__(self, other: "BivariateSeries") -> "BivariateSeries":
        self._check(other)
        return BivariateSeries(
            [[x + y for x, y in zip(r, s)] for r, s in zip(self.table, other.table)], self.N
        )

    def __sub__(self, other: "BivariateSeries") -> "BivariateSeries":
        self._check(other)
        return BivariateSeries(
            [[x - y for x, y in zip(r, s)] for r, s in zip(self.table, other.table)], self.N
        )

    def __mul__(self, other) -> "BivariateSeries":
        if isinstance(other, int):
            return BivariateSeries([[x * other for x in r] for r in self.table], self.N)
        self._check(other)
        N = self.N
        out = [[0] * (N + 1) for _ in range(N + 1)]
        terms = [(b, d, y) for b, r in enumerate(other.table) for d, y in enumerate(r) if y]
        for a, r in enumerate(self.table):
            for c, x in enumerate(r):
                if not x:
                    continue
                for b, d, y in terms:
                    if a + b > N:
                        continue
                    if c + d <= N:
                        out[a + b][c + d] += x * y
        return BivariateSeries(out, N)

    __rmul__ = __mul__

    def shift(self, a: int, b: int = 0) -> "BivariateSeries":
        """Multiply by q^a t^b."""
        N = self.N
        out = [[0] * (N + 1) for _ in range(N + 1)]
        for i in range(N + 1 - a):
            for j in range(N + 1 - b):
                out[i + a][j + b] = self.table[i][j]
        return BivariateSeries(out, N)

    def mul_geom(self, h: int, with_t: bool) -> "BivariateSeries":
        """Divide by 1 - t q^h (or 1 - q^h when ``with_t`` is false)."""
        N = self.N
        out = [list(r) for r in self.table]
        dt = 1 if with_t else 0
        for a in range(h, N + 1):
            for b in range(dt, N + 1):
                out[a][b] += out[a - h][b - dt]
        return BivariateSeries(out, N)

    def at_t1(self) -> TruncatedSeries:
        return TruncatedSeries([sum(r) for r in self.table], self.N)

    def to_json(self) -> dict:
        coeffs = [
            [a, b, str(x)] for a, r in enumerate(self.table) for b, x in enumerate(r) if x
        ]
        return {"N": self.N, "coeffs": coeffs}
