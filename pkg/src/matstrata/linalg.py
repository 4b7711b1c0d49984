"""Exact linear algebra over arbitrary-precision rationals.

Everything here works with ``fractions.Fraction`` scalars; no floating
point is used anywhere in the package.  Matrices are small and dense, so
plain Gaussian elimination with exact division is the right tool.  The
only performance concession is pivot choice: among the nonzero candidates
in a column we eliminate with the one of smallest bit size, which keeps
intermediate numerators and denominators from blowing up.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, DocumentError, NotSquare

ZERO = Fraction(0)
ONE = Fraction(1)

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(text) -> Fraction:
    """Parse ``"a"`` or ``"a/b"`` (b > 0) into a Fraction.

    Integers are accepted as-is.  Anything else (floats, decimal points,
    negative denominators) is rejected: exactness is part of the wire
    contract.
    """
    if isinstance(text, bool):
        raise DocumentError("not a rational value: %r" % (text,))
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, Fraction):
        return text
    if not isinstance(text, str) or not _RATIONAL_RE.match(text.strip()):
        raise DocumentError("not a rational value: %r" % (text,))
    value = text.strip()
    if "/" in value and value.split("/")[1].lstrip("0") == "":
        raise DocumentError("zero denominator in %r" % (text,))
    return Fraction(value)


def format_rational(value: Fraction) -> str:
    """Canonical string form: lowest terms, positive denominator."""
    return str(value)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    raise TypeError("matrix entries must be Fraction or int, got %r" % (x,))


class QMatrix:
    """Immutable dense matrix of exact rationals."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, entries: Iterable[Iterable]):
        data = tuple(tuple(_as_fraction(x) for x in row) for row in entries)
        if not data or not data[0]:
            raise ValueError("matrix must have at least one row and column")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise ValueError("rows have unequal lengths")
        self._data = data
        self.rows = len(data)
        self.cols = width

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "QMatrix":
        cols = rows if cols is None else cols
        return cls([[ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, values: Sequence) -> "QMatrix":
        vals = [_as_fraction(v) for v in values]
        n = len(vals)
        return cls([[vals[i] if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def unit(cls, n: int, r: int, s: int) -> "QMatrix":
        """The matrix unit with a single 1 in (0-based) position (r, s)."""
        return cls(
            [[ONE if (i, j) == (r, s) else ZERO for j in range(n)] for i in range(n)]
        )

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, key) -> Fraction:
        i, j = key
        return self._data[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i]

    def row_lists(self) -> list[list[Fraction]]:
        return [list(row) for row in self._data]

    def vec(self) -> tuple[Fraction, ...]:
        """Row-major flattening."""
        return tuple(x for row in self._data for x in row)

    def trace(self) -> Fraction:
        if not self.is_square:
            raise NotSquare("trace of a %dx%d matrix" % self.shape)
        return sum((self._data[i][i] for i in range(self.rows)), ZERO)

    def transpose(self) -> "QMatrix":
        return QMatrix(zip(*self._data))

    def __add__(self, other: "QMatrix") -> "QMatrix":
        if self.shape != other.shape:
            raise DimensionMismatch("adding %s to %s" % (self.shape, other.shape))
        return QMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self._data, other._data)
            ]
        )

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        if self.shape != other.shape:
            raise DimensionMismatch("subtracting %s from %s" % (other.shape, self.shape))
        return QMatrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self._data, other._data)
            ]
        )

    def __neg__(self) -> "QMatrix":
        return QMatrix([[-x for x in row] for row in self._data])

    def scale(self, c) -> "QMatrix":
        c = _as_fraction(c)
        return QMatrix([[c * x for x in row] for row in self._data])

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(
                "multiplying %s by %s" % (self.shape, other.shape)
            )
        cols = other.transpose()._data
        return QMatrix(
            [
                [
                    sum((a * b for a, b in zip(row, col) if a and b), ZERO)
                    for col in cols
                ]
                for row in self._data
            ]
        )

    def is_zero(self) -> bool:
        return all(x == 0 for row in self._data for x in row)

    def inverse(self) -> "QMatrix":
        """Exact inverse via Gauss-Jordan; raises on singular input."""
        if not self.is_square:
            raise NotSquare("inverse of a %dx%d matrix" % self.shape)
        n = self.rows
        aug = [list(row) + [ONE if i == j else ZERO for j in range(n)]
               for i, row in enumerate(self._data)]
        reduced, pivots = rref(aug)
        if len(pivots) < n or pivots != list(range(n)):
            raise ValueError("matrix is singular")
        return QMatrix([row[n:] for row in reduced])

    def __eq__(self, other) -> bool:
        return isinstance(other, QMatrix) and self._data == other._data

    def __hash__(self) -> int:
        return hash(self._data)

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(format_rational(x) for x in row) for row in self._data
        )
        return "QMatrix[%s]" % body


def _pivot_size(value: Fraction) -> int:
    return value.numerator.bit_length() + value.denominator.bit_length()


def rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form (in place) and the list of pivot columns.

    Pivot rows are chosen by smallest bit size among the nonzero
    candidates; any choice would be correct over the rationals.
    """
    m = len(rows)
    ncols = len(rows[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        best = None
        for i in range(r, m):
            v = rows[i][c]
            if v:
                size = _pivot_size(v)
                if best is None or size < best[0]:
                    best = (size, i)
        if best is None:
            continue
        i = best[1]
        if i != r:
            rows[r], rows[i] = rows[i], rows[r]
        piv = rows[r][c]
        if piv != 1:
            rows[r] = [x / piv for x in rows[r]]
        lead = rows[r]
        for i2 in range(m):
            if i2 != r:
                f = rows[i2][c]
                if f:
                    rows[i2] = [a - f * b if b else a for a, b in zip(rows[i2], lead)]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return rows, pivots


def rank(matrix: QMatrix) -> int:
    """Exact row rank over the rationals."""
    _, pivots = rref(matrix.row_lists())
    return len(pivots)


def kernel_basis(matrix: QMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of the right null space; length equals cols - rank."""
    reduced, pivots = rref(matrix.row_lists())
    ncols = matrix.cols
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [ZERO] * ncols
        vec[free] = ONE
        for r, c in enumerate(pivots):
            vec[c] = -reduced[r][free]
        basis.append(tuple(vec))
    return basis


class SpanBuilder:
    """Incremental row-echelon span of vectors in Q^n.

    Rows are kept sparse (column -> value) with leading coefficient 1,
    each fully reduced against the rows already present.  ``add`` reports
    whether the vector actually enlarged the span, which is exactly the
    membership test the greedy complement construction needs.
    """

    def __init__(self, length: int):
        self.length = length
        self._rows: list[tuple[int, dict[int, Fraction]]] = []

    @property
    def dim(self) -> int:
        return len(self._rows)

    def _reduce(self, vector: Sequence[Fraction]) -> list[Fraction]:
        v = list(vector)
        for c, row in self._rows:
            f = v[c]
            if f:
                for col, val in row.items():
                    v[col] -= f * val
        return v

    def contains(self, vector: Sequence[Fraction]) -> bool:
        return not any(self._reduce(vector))

    def add(self, vector: Sequence[Fraction]) -> bool:
        if len(vector) != self.length:
            raise DimensionMismatch(
                "vector of length %d in a span of length %d"
                % (len(vector), self.length)
            )
        v = self._reduce(vector)
        lead = next((j for j, x in enumerate(v) if x), None)
        if lead is None:
            return False
        piv = v[lead]
        new_row = {j: x / piv for j, x in enumerate(v) if x}
        # keep existing rows reduced against the new one
        for c, row in self._rows:
            f = row.get(lead)
            if f:
                for col, val in new_row.items():
                    row[col] = row.get(col, ZERO) - f * val
                    if not row[col]:
                        del row[col]
        self._rows.append((lead, new_row))
        self._rows.sort(key=lambda item: item[0])
        return True


def subspace_dim(vectors: Iterable[Sequence[Fraction]]) -> int:
    """Dimension of the span of equal-length rational vectors."""
    vectors = [tuple(_as_fraction(x) for x in v) for v in vectors]
    if not vectors:
        return 0
    length = len(vectors[0])
    if any(len(v) != length for v in vectors):
        raise DimensionMismatch("vectors of unequal length")
    builder = SpanBuilder(length)
    for v in vectors:
        builder.add(v)
    return builder.dim


class QPoly:
    """Polynomial with rational coefficients, stored lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial reported as -1."""
        return len(self.coeffs) - 1

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __call__(self, x) -> Fraction:
        x = _as_fraction(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def deflate(self, root) -> "QPoly":
        """Exact synthetic division by (x - root); root must be a root."""
        root = _as_fraction(root)
        out: list[Fraction] = []
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * root + c
            out.append(acc)
        remainder = out.pop()
        if remainder != 0:
            raise ValueError("%s is not a root of %s" % (root, self))
        return QPoly(reversed(out))

    def __mul__(self, other: "QPoly") -> "QPoly":
        if not self.coeffs or not other.coeffs:
            return QPoly([])
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPoly(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if power == 0:
                body = format_rational(mag)
            else:
                x = "x" if power == 1 else "x^%d" % power
                if mag == 1:
                    body = x
                elif mag.denominator == 1:
                    body = "%s%s" % (mag, x)
                else:
                    body = "(%s)%s" % (mag, x)
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += " %s %s" % (sign, body)
        return text

    def __repr__(self) -> str:
        return "QPoly(%s)" % (self,)


def char_poly(matrix: QMatrix) -> QPoly:
    """Monic characteristic polynomial det(xI - M), exactly.

    Uses the Faddeev-LeVerrier trace recurrence, which stays in rational
    arithmetic (the only divisions are by the step index).
    """
    if not matrix.is_square:
        raise NotSquare("characteristic polynomial of a %dx%d matrix" % matrix.shape)
    n = matrix.rows
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    m_k = matrix
    c = -m_k.trace()
    coeffs[n - 1] = c
    for k in range(2, n + 1):
        shifted = m_k + QMatrix.identity(n).scale(c)
        m_k = matrix @ shifted
        c = -m_k.trace() / k
        coeffs[n - k] = c
    return QPoly(coeffs)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def rational_roots(poly: QPoly) -> tuple[dict[Fraction, int], bool]:
    """All rational roots with exact multiplicities.

    Works on the primitive integer form of the polynomial; candidates are
    +/- (divisor of the constant term) / (divisor of the leading
    coefficient), and each found root is deflated out so multiplicities
    are exact.  The flag reports whether the roots account for the whole
    degree (the polynomial splits over the rationals).
    """
    if poly.degree < 1 or not poly.is_monic:
        raise ValueError("expected a monic polynomial of degree >= 1")
    denom_lcm = math.lcm(*(c.denominator for c in poly.coeffs))
    ints = [int(c * denom_lcm) for c in poly.coeffs]
    content = math.gcd(*ints)
    ints = [v // content for v in ints]

    roots: dict[Fraction, int] = {}
    remaining = poly

    # powers of x first
    zero_mult = next(i for i, c in enumerate(ints) if c)
    if zero_mult:
        roots[ZERO] = zero_mult
        for _ in range(zero_mult):
            remaining = remaining.deflate(ZERO)
        ints = ints[zero_mult:]

    if remaining.degree >= 1:
        candidates = set()
        for num in _divisors(ints[0]):
            for den in _divisors(ints[-1]):
                candidates.add(Fraction(num, den))
                candidates.add(Fraction(-num, den))
        for cand in sorted(candidates):
            mult = 0
            while remaining.degree >= 1 and remaining(cand) == 0:
                remaining = remaining.deflate(cand)
                mult += 1
            if mult:
                roots[cand] = mult
    splits = remaining.degree <= 0
    return roots, splits


def residual_factor(poly: QPoly) -> QPoly:
    """What is left of ``poly`` after deflating all its rational roots."""
    roots, _ = rational_roots(poly)
    out = poly
    for root, mult in roots.items():
        for _ in range(mult):
            out = out.deflate(root)
    return out
