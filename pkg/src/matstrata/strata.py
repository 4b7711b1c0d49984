"""Partition-indexed stratification of n x n matrices.

One stratum per partition of n.  A partition (m_1 >= ... >= m_k) names
the stratum whose points are matrices built from k eigenvalue parameters
p_1 ... p_k, with parameter p_i "occupying" m_i of the bidiagonal factors
of the stratum template.  Each factor is nonderogatory, so at a generic
(all-distinct) point eigenvalue p_i shows up in m_i Jordan blocks of size
1, and parameter collisions merge factors into bigger blocks without ever
changing the miniversal parameter count: it is sum(m_i^2) across the
whole stratum, one more than the scaled-action count at every point
except the all-zero one.

Degenerations between Jordan types ("jump" families, constant type for
nonzero parameter values) are governed by the dominance order on block
partitions, per eigenvalue, within a fixed characteristic polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Mapping, Sequence

from .deformations import (
    combined_orbit_codim,
    miniversal_param_count,
    projective_count,
)
from .errors import SizeMismatch, UnassignedParameter
from .jordan import (
    JordanType,
    Symbol,
    jordan_type,
)
from .linalg import QMatrix, ZERO, format_rational
from .partitions import Partition, conjugate_partition, dominates, partitions_of

_LETTERS = "pqrstuvwxyz"


def parameter_names(count: int) -> tuple[str, ...]:
    """p, q, r, ... for small parameter lists, p1, p2, ... beyond."""
    if count <= len(_LETTERS):
        return tuple(_LETTERS[:count])
    return tuple("p%d" % (i + 1) for i in range(count))


@dataclass(frozen=True)
class Stratum:
    """The stratum of matrices indexed by one partition of n."""

    parts: Partition

    def __post_init__(self):
        object.__setattr__(self, "parts", Partition(self.parts))
        if not self.parts:
            raise ValueError("a stratum needs a nonempty partition")

    @property
    def n(self) -> int:
        return self.parts.weight

    @property
    def num_parameters(self) -> int:
        return len(self.parts)

    @property
    def parameter_names(self) -> tuple[str, ...]:
        return parameter_names(len(self.parts))

    @property
    def conjugation_params(self) -> int:
        """Miniversal parameter count under conjugation, constant across
        the stratum: sum of the squared parts."""
        return sum(m * m for m in self.parts)

    @property
    def projective_generic_params(self) -> int:
        return self.conjugation_params - 1

    def __repr__(self) -> str:
        return "Stratum%r" % (self.parts,)


class SymbolicMatrix:
    """Square matrix whose entries are rational constants or parameter
    symbols; only the diagonal and a 0/1 superdiagonal may be nonzero."""

    __slots__ = ("size", "entries")

    def __init__(self, entries: Iterable[Iterable]):
        rows = tuple(tuple(row) for row in entries)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("symbolic matrix must be square")
        for i, row in enumerate(rows):
            for j, entry in enumerate(row):
                if j == i:
                    if not isinstance(entry, (Fraction, Symbol)):
                        raise ValueError("bad diagonal entry %r" % (entry,))
                elif j == i + 1:
                    if entry not in (0, 1):
                        raise ValueError("superdiagonal entries must be 0 or 1")
                elif entry != 0:
                    raise ValueError(
                        "entry (%d,%d) must be zero in a stratum template" % (i, j)
                    )
        self.size = n
        self.entries = rows

    def parameters(self) -> tuple[str, ...]:
        seen: list[str] = []
        for row in self.entries:
            for entry in row:
                if isinstance(entry, Symbol) and entry.name not in seen:
                    seen.append(entry.name)
        return tuple(seen)

    def instantiate(self, assignment: Mapping[str, Fraction]) -> QMatrix:
        out = []
        for row in self.entries:
            new_row = []
            for entry in row:
                if isinstance(entry, Symbol):
                    if entry.name not in assignment:
                        raise UnassignedParameter(
                            "no value for parameter %s" % entry.name
                        )
                    new_row.append(Fraction(assignment[entry.name]))
                else:
                    new_row.append(Fraction(entry))
            out.append(new_row)
        return QMatrix(out)

    def entry_strings(self) -> list[list[str]]:
        return [
            [
                str(e) if isinstance(e, Symbol) else format_rational(Fraction(e))
                for e in row
            ]
            for row in self.entries
        ]

    def __eq__(self, other) -> bool:
        return isinstance(other, SymbolicMatrix) and self.entries == other.entries

    def __repr__(self) -> str:
        body = "; ".join(" ".join(r) for r in self.entry_strings())
        return "SymbolicMatrix[%s]" % body


@dataclass(frozen=True)
class SymmetrySpec:
    """Groups of parameter positions (1-based) that may be permuted:
    one orbit per maximal run of equal part sizes, singletons omitted."""

    orbits: tuple[tuple[int, ...], ...]

    def label(self) -> str:
        if not self.orbits:
            return "trivial"
        return " x ".join("S%d" % len(orbit) for orbit in self.orbits)


def enumerate_strata(n: int) -> list[Stratum]:
    """All strata of n x n matrices, one per partition of n, in
    reverse-lexicographic partition order."""
    if n < 1:
        raise ValueError("n must be >= 1, got %d" % n)
    return [Stratum(parts) for parts in partitions_of(n)]


def template(stratum: Stratum) -> SymbolicMatrix:
    """The displayed form of a stratum: a direct sum of nonderogatory
    bidiagonal factors.

    Factor j (for j = 1 .. m_1) carries the parameters p_i with m_i >= j
    on its diagonal, in increasing i, with 1s on its superdiagonal, so
    parameter p_i appears in exactly m_i factors.
    """
    parts = stratum.parts
    names = stratum.parameter_names
    n = stratum.n
    entries: list[list] = [[ZERO] * n for _ in range(n)]
    offset = 0
    for j in range(1, parts[0] + 1):
        factor_params = [names[i] for i, m in enumerate(parts) if m >= j]
        size = len(factor_params)
        for i, name in enumerate(factor_params):
            entries[offset + i][offset + i] = Symbol(name)
            if i + 1 < size:
                entries[offset + i][offset + i + 1] = 1
        offset += size
    return SymbolicMatrix(entries)


def template_jordan_type(
    stratum: Stratum, assignment: Mapping[str, Fraction]
) -> JordanType:
    """Jordan type of the stratum template at a concrete parameter point.

    Each factor is nonderogatory, so a value v assigned to parts
    {m_i : p_i = v} contributes the conjugate of that multiset as its
    block partition.
    """
    names = stratum.parameter_names
    by_value: dict[Fraction, list[int]] = {}
    for name, size in zip(names, stratum.parts):
        if name not in assignment:
            raise UnassignedParameter("no value for parameter %s" % name)
        value = Fraction(assignment[name])
        by_value.setdefault(value, []).append(size)
    spectrum = []
    for value, sizes in by_value.items():
        merged = Partition(sorted(sizes, reverse=True))
        spectrum.append((value, conjugate_partition(merged)))
    return JordanType(spectrum)


def classify(matrix: QMatrix) -> tuple[Stratum, dict[str, Fraction]]:
    """Stratum and canonical parameter assignment of a rational matrix.

    Each eigenvalue occupies the conjugate of its block partition; the
    union of those parts, sorted decreasingly with equal sizes ordered by
    ascending eigenvalue, is the stratum.  The assignment is the unique
    representative in that canonical order.

    Raises :class:`IrrationalSpectrum` if the spectrum is not rational.
    """
    jt = jordan_type(matrix)
    pieces: list[tuple[int, Fraction]] = []
    for value, blocks in jt.spectrum:
        for size in conjugate_partition(blocks):
            pieces.append((size, value))
    pieces.sort(key=lambda item: (-item[0], item[1]))
    stratum = Stratum(Partition([size for size, _ in pieces]))
    names = stratum.parameter_names
    assignment = {name: value for name, (_, value) in zip(names, pieces)}
    return stratum, assignment


def symmetry(stratum: Stratum) -> SymmetrySpec:
    """Parameter permutations preserving the template: exchanging
    parameters of equal part size."""
    orbits = []
    parts = stratum.parts
    start = 0
    for i in range(1, len(parts) + 1):
        if i == len(parts) or parts[i] != parts[start]:
            if i - start >= 2:
                orbits.append(tuple(range(start + 1, i + 1)))
            start = i
    return SymmetrySpec(tuple(orbits))


def stratum_param_count(stratum: Stratum, action: str) -> int:
    """Miniversal parameter count for a stratum under either action.

    ``conjugation`` gives sum(m_i^2); ``projective`` gives the generic
    scaled-action count, one less.  (The all-zero point of a stratum is
    the exception; see :func:`stratum_table`.)
    """
    if action == "conjugation":
        return stratum.conjugation_params
    if action in ("projective", "projective-generic"):
        return stratum.projective_generic_params
    raise ValueError("unknown action %r" % (action,))


def jump_exists(src: JordanType, dst: JordanType) -> bool:
    """Whether a family constant at ``dst`` for nonzero parameter values
    can land on ``src`` at zero.

    Requires distinct types with identical characteristic polynomials,
    and per-eigenvalue dominance of the destination block partition over
    the source one (the orbit-closure criterion).
    """
    if src.n != dst.n:
        raise SizeMismatch("jump between sizes %d and %d" % (src.n, dst.n))
    if src == dst:
        return False
    if src.multiplicities() != dst.multiplicities():
        return False
    return all(
        dominates(dst.blocks_for(value), src.blocks_for(value))
        for value in src.eigenvalues
    )


def realized_jordan_types(
    stratum: Stratum, pool: Sequence
) -> set[JordanType]:
    """Every Jordan type the stratum template takes as its parameters
    range over ``pool`` (all collision patterns included)."""
    values = [Fraction(v) for v in pool]
    names = stratum.parameter_names
    out = set()
    for combo in product(values, repeat=len(names)):
        out.add(template_jordan_type(stratum, dict(zip(names, combo))))
    return out


def stratum_adjacency(
    n: int, eigenvalue_pool: Sequence
) -> list[tuple[Stratum, Stratum]]:
    """Directed stratum pairs (S1, S2) such that some type realized in S1
    jumps to some type realized in S2, by exhaustive enumeration of
    parameter assignments over the pool."""
    pool = [Fraction(v) for v in eigenvalue_pool]
    if len(set(pool)) < n:
        raise ValueError(
            "eigenvalue pool needs at least %d distinct values" % n
        )
    strata = enumerate_strata(n)
    realized = {s: realized_jordan_types(s, pool) for s in strata}
    pairs = []
    for s1 in strata:
        for s2 in strata:
            if s1 == s2:
                continue
            if any(
                jump_exists(t1, t2)
                for t1 in realized[s1]
                for t2 in realized[s2]
            ):
                pairs.append((s1, s2))
    return pairs


def transitive_closure(
    pairs: Iterable[tuple[Stratum, Stratum]]
) -> list[tuple[Stratum, Stratum]]:
    """Closure of the adjacency relation: degenerations that factor
    through intermediate strata appear as explicit pairs."""
    edges = set(pairs)
    changed = True
    while changed:
        changed = False
        for a, b in list(edges):
            for c, d in list(edges):
                if b == c and a != d and (a, d) not in edges:
                    edges.add((a, d))
                    changed = True
    nodes = sorted({s for pair in edges for s in pair}, key=lambda s: s.parts,
                   reverse=True)
    order = {s: i for i, s in enumerate(nodes)}
    return sorted(edges, key=lambda pair: (order[pair[0]], order[pair[1]]))


@dataclass(frozen=True)
class StratumRow:
    """Everything the per-stratum table reports."""

    stratum: Stratum
    matrix: SymbolicMatrix
    symmetry: SymmetrySpec
    conjugation_space: str
    projective_space: str
    conjugation_params: int
    projective_generic_params: int
    projective_zero_params: int
    zero_type: JordanType
    warnings: tuple[str, ...]


def _space_label(prefix: str, dim: int, spec: SymmetrySpec) -> str:
    base = "%s^%d" % (prefix, dim)
    if spec.orbits:
        return "%s/%s" % (base, spec.label().replace(" ", ""))
    return base


def stratum_table(n: int) -> list[StratumRow]:
    """Per-stratum report for n x n matrices: template, orbifold
    parameterization, and the miniversal parameter counts under both
    actions (generic and all-zero point for the scaled action)."""
    rows = []
    for stratum in enumerate_strata(n):
        spec = symmetry(stratum)
        k = stratum.num_parameters
        zero_type = JordanType([(ZERO, conjugate_partition(stratum.parts))])
        zero_params = projective_count(zero_type)
        warnings: tuple[str, ...] = ()
        if zero_type.is_zero_matrix:
            tangent = n * n
            warnings = (
                "at the zero matrix the tabulated scaled-action count is %d "
                "but the combined tangent-space codimension is %d; both are "
                "reported, neither is reconciled" % (zero_params, tangent),
            )
        rows.append(
            StratumRow(
                stratum=stratum,
                matrix=template(stratum),
                symmetry=spec,
                conjugation_space=_space_label("C", k, spec),
                projective_space=_space_label("CP", k - 1, spec),
                conjugation_params=stratum.conjugation_params,
                projective_generic_params=stratum.projective_generic_params,
                projective_zero_params=zero_params,
                zero_type=zero_type,
                warnings=warnings,
            )
        )
    return rows


def reference_table(n: int) -> list[StratumRow]:
    """The dimension-2, -3 and -4 tables; other sizes go through
    :func:`stratum_table` directly."""
    if n not in (2, 3, 4):
        raise ValueError("reference tables cover n in {2, 3, 4}, got %d" % n)
    return stratum_table(n)


def classify_report(matrix: QMatrix) -> dict:
    """Classification plus every parameter count for one matrix; the
    zero-matrix discrepancy between the tabulated scaled-action count and
    the tangent codimension is surfaced as a warning."""
    stratum, assignment = classify(matrix)
    jt = jordan_type(matrix)
    conj = miniversal_param_count(jt)
    proj = projective_count(jt)
    combined = combined_orbit_codim(matrix)
    warnings = []
    if proj != combined:
        warnings.append(
            "scaled-action counts disagree at this point: tabulated value %d, "
            "tangent-space codimension %d (the zero matrix is the only such "
            "point)" % (proj, combined)
        )
    return {
        "stratum": stratum,
        "assignment": assignment,
        "jordan_type": jt,
        "conjugation_params": conj,
        "projective_params": proj,
        "combined_orbit_codim": combined,
        "warnings": warnings,
    }
