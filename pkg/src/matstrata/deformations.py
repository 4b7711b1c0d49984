"""Miniversal deformations of matrices under conjugation.

The tangent space to the conjugation orbit of A is the image of the
commutator operator B -> AB - BA; its kernel is the centralizer of A,
whose dimension equals the minimal number of parameters of a versal
family through A (Arnold's criterion).  This module exposes both routes
to that number: the block-size formula on a Jordan type, and the exact
kernel computation on the n^2 x n^2 operator; tests require the two to
agree everywhere.

A first-order family is versal iff it is transversal: its direction span
plus the orbit tangent space must fill all of gl(n).  Families are built
here two ways (a greedy complement of matrix units, and the classical
star pattern read off the Jordan form) and every constructed family is
pushed through the transversality verifier before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    NotSquare,
    PatternNotTransversal,
    ShapeMismatch,
    SymbolicEigenvalue,
)
from .jordan import JordanType, jordan_matrix
from .linalg import QMatrix, SpanBuilder, ZERO


@dataclass(frozen=True)
class DeformationFamily:
    """First-order data of a family: base point plus one direction matrix
    per parameter."""

    base: QMatrix
    directions: tuple[QMatrix, ...]
    parameter_names: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "directions", tuple(self.directions))
        object.__setattr__(self, "parameter_names", tuple(self.parameter_names))
        for d in self.directions:
            if d.shape != self.base.shape:
                raise ShapeMismatch(
                    "direction of shape %s in a family at shape %s"
                    % (d.shape, self.base.shape)
                )
        if len(self.directions) != len(self.parameter_names):
            raise ShapeMismatch(
                "%d directions but %d parameter names"
                % (len(self.directions), len(self.parameter_names))
            )


@dataclass(frozen=True)
class StarPattern:
    """Free-entry positions of a structured family, 1-based (row, col)."""

    size: int
    positions: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "positions", tuple(map(tuple, self.positions)))
        seen = set()
        for r, c in self.positions:
            if not (1 <= r <= self.size and 1 <= c <= self.size):
                raise ValueError("star (%d,%d) outside a %d x %d matrix"
                                 % (r, c, self.size, self.size))
            if (r, c) in seen:
                raise ValueError("duplicate star (%d,%d)" % (r, c))
            seen.add((r, c))


def _parameter_names(count: int) -> tuple[str, ...]:
    return tuple("t%d" % (i + 1) for i in range(count))


def ad_matrix(a: QMatrix) -> QMatrix:
    """Matrix of B -> AB - BA on the matrix units, row-major vectorization.

    Column (r, s) holds vec(A e_rs - e_rs A): the s-th column of the
    result picks up column r of A, and row r picks up minus row s of A.
    """
    if not a.is_square:
        raise NotSquare("commutator operator of a %dx%d matrix" % a.shape)
    n = a.rows
    size = n * n
    entries = [[ZERO] * size for _ in range(size)]
    for r in range(n):
        for s in range(n):
            col = r * n + s
            for i in range(n):
                entries[i * n + s][col] += a[i, r]
            for j in range(n):
                entries[r * n + j][col] -= a[s, j]
    return QMatrix(entries)


def _commutator_vec(a: QMatrix, r: int, s: int) -> list[Fraction]:
    """vec([A, e_rs]) without building the full operator matrix."""
    n = a.rows
    v = [ZERO] * (n * n)
    for i in range(n):
        v[i * n + s] += a[i, r]
    for j in range(n):
        v[r * n + j] -= a[s, j]
    return v


def orbit_tangent_span(a: QMatrix) -> SpanBuilder:
    """Span of the conjugation-orbit tangent space at ``a`` (the image of
    the commutator operator)."""
    if not a.is_square:
        raise NotSquare("orbit tangent space of a %dx%d matrix" % a.shape)
    n = a.rows
    builder = SpanBuilder(n * n)
    for r in range(n):
        for s in range(n):
            builder.add(_commutator_vec(a, r, s))
    return builder


def centralizer_dim(a: QMatrix) -> int:
    """Dimension of {B : AB = BA}, the kernel of the commutator operator.

    By rank-nullity this is n^2 minus the orbit tangent dimension, which
    is how it is computed here; the direct kernel route is exercised by
    the test suite.
    """
    if not a.is_square:
        raise NotSquare("centralizer of a %dx%d matrix" % a.shape)
    n = a.rows
    return n * n - orbit_tangent_span(a).dim


def miniversal_param_count(jt: JordanType) -> int:
    """Number of parameters of a miniversal conjugation family, from the
    block sizes alone: each eigenvalue contributes
    ``n1 + 3 n2 + 5 n3 + ...`` over its decreasing block sizes.

    Symbolic eigenvalues are fine; distinctness is taken at face value.
    """
    total = 0
    for _, blocks in jt.spectrum:
        total += sum((2 * j - 1) * size for j, size in enumerate(blocks, start=1))
    return total


def is_transversal(family: DeformationFamily) -> bool:
    """True iff the family's directions plus the orbit tangent space at
    its base span all of gl(n)."""
    base = family.base
    if not base.is_square:
        raise ShapeMismatch("family base must be square, got %s" % (base.shape,))
    n = base.rows
    builder = orbit_tangent_span(base)
    for d in family.directions:
        builder.add(d.vec())
    return builder.dim == n * n


def miniversal_greedy(a: QMatrix) -> DeformationFamily:
    """Transversal family built by the greedy matrix-unit complement.

    Matrix units are scanned in row-major order; a unit is kept iff it
    strictly enlarges the span of the orbit tangent space plus the units
    already kept.  The result always has exactly ``centralizer_dim(a)``
    directions and passes :func:`is_transversal` by construction.
    """
    if not a.is_square:
        raise NotSquare("miniversal family of a %dx%d matrix" % a.shape)
    n = a.rows
    builder = orbit_tangent_span(a)
    directions = []
    for r in range(n):
        for s in range(n):
            unit = QMatrix.unit(n, r, s)
            if builder.add(unit.vec()):
                directions.append(unit)
    return DeformationFamily(a, tuple(directions), _parameter_names(len(directions)))


def structured_star_pattern(jt: JordanType) -> StarPattern:
    """Star positions of the classical miniversal family at a Jordan matrix.

    For every ordered pair of blocks (i, j) sharing an eigenvalue, the
    rows-of-i by columns-of-j sub-block gets min(n_i, n_j) stars in the
    leftmost entries of its last row.  The star count always equals the
    block-size parameter formula.
    """
    offsets = []
    offset = 0
    for value, blocks in jt.spectrum:
        for size in blocks:
            offsets.append((value, offset, size))
            offset += size
    positions = []
    for value_i, off_i, n_i in offsets:
        for value_j, off_j, n_j in offsets:
            if value_i != value_j:
                continue
            last_row = off_i + n_i  # 1-based
            for c in range(min(n_i, n_j)):
                positions.append((last_row, off_j + c + 1))
    return StarPattern(jt.n, tuple(positions))


def miniversal_structured(jt: JordanType) -> tuple[StarPattern, DeformationFamily]:
    """Structured miniversal family at the Jordan matrix of ``jt``.

    The transversality verifier is authoritative: if the fixed placement
    ever failed to be transversal the call would raise
    :class:`PatternNotTransversal` rather than return an unverified
    family.
    """
    if jt.has_symbolic:
        raise SymbolicEigenvalue(
            "structured family needs concrete eigenvalues: %r" % (jt,)
        )
    base = jordan_matrix(jt)
    pattern = structured_star_pattern(jt)
    n = jt.n
    directions = tuple(
        QMatrix.unit(n, r - 1, c - 1) for r, c in pattern.positions
    )
    family = DeformationFamily(
        base, directions, _parameter_names(len(directions))
    )
    builder = orbit_tangent_span(base)
    for d in directions:
        builder.add(d.vec())
    if builder.dim != n * n:
        raise PatternNotTransversal(builder.dim, n * n)
    return pattern, family


def combined_orbit_codim(a: QMatrix) -> int:
    """Codimension of the scaled-conjugation orbit tangent space.

    The group is conjugation combined with multiplication by a nonzero
    scalar, so the tangent space gains the single direction ``a`` itself:
    the result is ``n^2 - dim(Im(ad_a) + span{a})``.
    """
    if not a.is_square:
        raise NotSquare("combined orbit of a %dx%d matrix" % a.shape)
    n = a.rows
    builder = orbit_tangent_span(a)
    builder.add(a.vec())
    return n * n - builder.dim


def projective_count(jt: JordanType) -> int:
    """Parameter count under the scaled action, following the reference
    tables: the conjugation count for a nonzero nilpotent matrix, one
    less for everything else (including the zero matrix, whose tabulated
    value n^2 - 1 deliberately disagrees with the tangent-space
    codimension n^2; see :func:`combined_orbit_codim`).
    """
    if jt.has_symbolic:
        raise SymbolicEigenvalue(
            "projective count needs concrete eigenvalues: %r" % (jt,)
        )
    base = miniversal_param_count(jt)
    if jt.is_nilpotent and not jt.is_zero_matrix:
        return base
    return base - 1
