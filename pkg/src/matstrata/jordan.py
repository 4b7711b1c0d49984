"""Jordan structure of rational matrices, computed exactly.

The Jordan type of a matrix (each eigenvalue with its partition of block
sizes) is derived from rank sequences of powers of ``M - vI``: the number
of blocks of size >= k for eigenvalue v equals
``rank((M - vI)^(k-1)) - rank((M - vI)^k)``.  This avoids eigenvector
chains entirely and stays exact.

Matrices whose characteristic polynomial does not split over the
rationals are rejected with :class:`IrrationalSpectrum`; every concrete
example handled by this package has rational (or purely symbolic)
spectrum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import IrrationalSpectrum, NotSquare, SymbolicEigenvalue
from .linalg import QMatrix, ZERO, char_poly, rank, rational_roots, residual_factor
from .partitions import Partition, partitions_of


@dataclass(frozen=True, order=True)
class Symbol:
    """A named abstract eigenvalue (distinct from every rational and from
    every other symbol)."""

    name: str

    def __str__(self) -> str:
        return self.name


Eigenvalue = Fraction | Symbol


def eigenvalue_key(value: Eigenvalue):
    """Canonical sort key: rationals ascending, then symbols by name."""
    if isinstance(value, Symbol):
        return (1, value.name)
    return (0, value)


def _as_eigenvalue(value) -> Eigenvalue:
    if isinstance(value, Symbol):
        return value
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    raise TypeError("eigenvalue must be Fraction, int or Symbol: %r" % (value,))


class JordanType:
    """Multiset of (eigenvalue, block partition) pairs, canonically ordered.

    Equality is structural: the constructor sorts the spectrum (rational
    eigenvalues ascending, then symbols lexicographically) and rejects
    repeated eigenvalues, so two equal types compare equal.
    """

    __slots__ = ("spectrum",)

    def __init__(self, spectrum: Iterable[tuple]):
        pairs = [(_as_eigenvalue(v), Partition(blocks)) for v, blocks in spectrum]
        pairs.sort(key=lambda pair: eigenvalue_key(pair[0]))
        if not pairs:
            raise ValueError("Jordan type must have at least one eigenvalue")
        for (a, _), (b, _) in zip(pairs, pairs[1:]):
            if a == b:
                raise ValueError("repeated eigenvalue %s" % (a,))
        if any(not blocks for _, blocks in pairs):
            raise ValueError("every eigenvalue needs at least one block")
        object.__setattr__(self, "spectrum", tuple(pairs))

    def __setattr__(self, name, value):
        raise AttributeError("JordanType is immutable")

    @property
    def n(self) -> int:
        return sum(blocks.weight for _, blocks in self.spectrum)

    @property
    def eigenvalues(self) -> tuple[Eigenvalue, ...]:
        return tuple(v for v, _ in self.spectrum)

    def blocks_for(self, value: Eigenvalue) -> Partition:
        for v, blocks in self.spectrum:
            if v == value:
                return blocks
        raise KeyError(value)

    def multiplicities(self) -> dict[Eigenvalue, int]:
        """Eigenvalue -> algebraic multiplicity; determines the
        characteristic polynomial."""
        return {v: blocks.weight for v, blocks in self.spectrum}

    @property
    def has_symbolic(self) -> bool:
        return any(isinstance(v, Symbol) for v, _ in self.spectrum)

    @property
    def is_nilpotent(self) -> bool:
        if len(self.spectrum) != 1:
            return False
        value, _ = self.spectrum[0]
        return not isinstance(value, Symbol) and value == 0

    @property
    def is_zero_matrix(self) -> bool:
        return self.is_nilpotent and self.spectrum[0][1][0] == 1

    def __eq__(self, other) -> bool:
        return isinstance(other, JordanType) and self.spectrum == other.spectrum

    def __hash__(self) -> int:
        return hash(self.spectrum)

    def __repr__(self) -> str:
        body = ", ".join("%s: %r" % (v, blocks) for v, blocks in self.spectrum)
        return "{%s}" % body


def jordan_block(value, size: int) -> QMatrix:
    """The size x size upper bidiagonal block with ``value`` on the
    diagonal and 1 on the superdiagonal."""
    value = _as_eigenvalue(value)
    if isinstance(value, Symbol):
        raise SymbolicEigenvalue("cannot build a concrete block for %s" % value)
    return QMatrix(
        [
            [
                value if i == j else (Fraction(1) if j == i + 1 else ZERO)
                for j in range(size)
            ]
            for i in range(size)
        ]
    )


def jordan_matrix(jt: JordanType) -> QMatrix:
    """Block-diagonal Jordan matrix in canonical order (eigenvalues
    ascending, block sizes decreasing within each eigenvalue)."""
    if jt.has_symbolic:
        raise SymbolicEigenvalue(
            "Jordan matrix requires concrete rational eigenvalues: %r" % (jt,)
        )
    n = jt.n
    entries = [[ZERO] * n for _ in range(n)]
    offset = 0
    for value, blocks in jt.spectrum:
        for size in blocks:
            for i in range(size):
                entries[offset + i][offset + i] = value
                if i + 1 < size:
                    entries[offset + i][offset + i + 1] = Fraction(1)
            offset += size
    return QMatrix(entries)


def jordan_type(matrix: QMatrix) -> JordanType:
    """Exact Jordan type of a rational matrix.

    Raises :class:`IrrationalSpectrum` (naming the residual factor) when
    the characteristic polynomial has irrational or complex roots.
    """
    if not matrix.is_square:
        raise NotSquare("Jordan type of a %dx%d matrix" % matrix.shape)
    n = matrix.rows
    poly = char_poly(matrix)
    roots, splits = rational_roots(poly)
    if not splits:
        raise IrrationalSpectrum(residual_factor(poly))
    identity = QMatrix.identity(n)
    spectrum = []
    for value, mult in roots.items():
        shifted = matrix - identity.scale(value)
        power = shifted
        ranks = [n, rank(shifted)]
        while ranks[-1] > n - mult:
            power = power @ shifted
            ranks.append(rank(power))
        counts = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
        blocks = conjugate_counts(counts)
        assert blocks.weight == mult
        spectrum.append((value, blocks))
    return JordanType(spectrum)


def conjugate_counts(counts: Sequence[int]) -> Partition:
    """Block partition from the 'number of blocks of size >= k' sequence."""
    sizes = []
    for k, c in enumerate(counts, start=1):
        next_c = counts[k] if k < len(counts) else 0
        sizes.extend([k] * (c - next_c))
    return Partition(sorted(sizes, reverse=True))


def enumerate_jordan_types(
    n: int, pool: Sequence
) -> Iterator[JordanType]:
    """All Jordan types of total size ``n`` with eigenvalues drawn from
    ``pool`` (each eigenvalue used at most once)."""
    values = sorted((_as_eigenvalue(v) for v in pool), key=eigenvalue_key)

    def rec(remaining: int, start: int) -> Iterator[list]:
        if remaining == 0:
            yield []
            return
        for i in range(start, len(values)):
            for weight in range(1, remaining + 1):
                for blocks in partitions_of(weight):
                    for rest in rec(remaining - weight, i + 1):
                        yield [(values[i], blocks)] + rest

    for spectrum in rec(n, 0):
        if spectrum:
            yield JordanType(spectrum)
