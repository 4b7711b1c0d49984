"""Named invariant sweeps behind the ``verify`` command.

Every check is exact: it either enumerates its whole domain or draws
seeded random samples, and failures carry a concrete counterexample.
Pure-combinatorial checks (partition counts, parity of the stratum
counts) are cheap enough that they always run to at least size 10; the
matrix sweeps honor ``max_n``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .deformations import (
    DeformationFamily,
    ad_matrix,
    centralizer_dim,
    combined_orbit_codim,
    is_transversal,
    miniversal_greedy,
    miniversal_param_count,
    miniversal_structured,
)
from .errors import PatternNotTransversal
from .jordan import (
    JordanType,
    enumerate_jordan_types,
    jordan_matrix,
    jordan_type,
)
from .linalg import QMatrix, QPoly, ZERO, char_poly, kernel_basis, rank, rational_roots
from .partitions import Partition, conjugate_partition, dominates, partitions_of
from .strata import (
    Stratum,
    classify,
    enumerate_strata,
    jump_exists,
    stratum_adjacency,
    stratum_table,
    template,
    template_jordan_type,
)

DEFAULT_SEED = 31415


@dataclass
class CheckResult:
    name: str
    passed: bool
    details: str
    counterexample: str | None = None


def _ok(name: str, details: str) -> CheckResult:
    return CheckResult(name, True, details)


def _fail(name: str, details: str, example) -> CheckResult:
    return CheckResult(name, False, details, str(example))


# ---------------------------------------------------------------------------
# deterministic random generators

def random_matrix(rng: random.Random, rows: int, cols: int) -> QMatrix:
    return QMatrix(
        [
            [
                Fraction(rng.randint(-4, 4), rng.choice((1, 1, 1, 2, 3)))
                for _ in range(cols)
            ]
            for _ in range(rows)
        ]
    )


def random_invertible(rng: random.Random, n: int) -> QMatrix:
    while True:
        m = random_matrix(rng, n, n)
        if rank(m) == n:
            return m


def random_partition(rng: random.Random, n: int) -> Partition:
    parts = []
    remaining = n
    while remaining:
        p = rng.randint(1, remaining)
        parts.append(p)
        remaining -= p
    return Partition(sorted(parts, reverse=True))


def random_jordan_type(rng: random.Random, n: int, pool) -> JordanType:
    pool = list(pool)
    k = rng.randint(1, min(n, len(pool)))
    values = rng.sample(pool, k)
    cuts = sorted(rng.sample(range(1, n), k - 1)) if k > 1 else []
    weights = [b - a for a, b in zip([0] + cuts, cuts + [n])]
    return JordanType(
        [(Fraction(v), random_partition(rng, w)) for v, w in zip(values, weights)]
    )


def eigenvalue_pool(n: int) -> list[Fraction]:
    """{0, 1, ..., max(n, 5) - 1}: enough distinct values for any type of
    size n, and the standard {0..4} pool for the small sweeps."""
    return [Fraction(i) for i in range(max(n, 5))]


def partition_count(n: int) -> int:
    """Partition function by the pentagonal-number recurrence; the
    independent oracle for the stratum count."""
    table = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m and g2 > m:
                break
            sign = 1 if k % 2 else -1
            if g1 <= m:
                total += sign * table[m - g1]
            if g2 <= m:
                total += sign * table[m - g2]
            k += 1
        table[m] = total
    return table[n]


def set_partitions(items: list):
    """All ways to split ``items`` into nonempty unordered classes."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for split in set_partitions(rest):
        for i in range(len(split)):
            yield split[:i] + [[first] + split[i]] + split[i + 1:]
        yield [[first]] + split


# ---------------------------------------------------------------------------
# exact linear algebra checks

def check_rank_kernel(max_n: int, rng: random.Random) -> CheckResult:
    name = "rank-kernel-identity"
    count = 0
    for _ in range(40):
        rows = rng.randint(1, max(2, max_n))
        cols = rng.randint(1, max(2, max_n) + 1)
        m = random_matrix(rng, rows, cols)
        basis = kernel_basis(m)
        if rank(m) + len(basis) != cols:
            return _fail(name, "rank + kernel size != cols", m)
        for v in basis:
            image = [
                sum((m[i, j] * v[j] for j in range(cols)), ZERO)
                for i in range(rows)
            ]
            if any(image):
                return _fail(name, "kernel vector not annihilated", (m, v))
        count += 1
    return _ok(name, "%d random matrices" % count)


def check_rank_row_ops(max_n: int, rng: random.Random) -> CheckResult:
    name = "rank-row-operation-invariance"
    for _ in range(25):
        n = rng.randint(2, max(2, max_n))
        m = random_matrix(rng, n, n)
        r = rank(m)
        rows = m.row_lists()
        rng.shuffle(rows)
        scale = Fraction(rng.choice((1, 2, 3, -1, -5)), rng.choice((1, 2, 7)))
        rows[0] = [scale * x for x in rows[0]]
        if rank(QMatrix(rows)) != r:
            return _fail(name, "rank changed under row operations", m)
    return _ok(name, "25 random matrices")


def check_charpoly_similarity(max_n: int, rng: random.Random) -> CheckResult:
    name = "charpoly-similarity-invariance"
    top = min(max_n, 4)
    for _ in range(15):
        n = rng.randint(1, max(1, top))
        m = random_matrix(rng, n, n)
        p = random_invertible(rng, n)
        conj = p.inverse() @ m @ p
        if char_poly(conj) != char_poly(m):
            return _fail(name, "characteristic polynomial not invariant", m)
    return _ok(name, "15 random conjugations, n <= %d" % top)


def check_rational_roots(max_n: int, rng: random.Random) -> CheckResult:
    name = "rational-roots-exact"
    for _ in range(25):
        roots = {}
        poly = QPoly([1])
        for _ in range(rng.randint(1, 4)):
            r = Fraction(rng.randint(-3, 3), rng.choice((1, 1, 2)))
            mult = rng.randint(1, 2)
            roots[r] = roots.get(r, 0) + mult
            for _ in range(mult):
                poly = poly * QPoly([-r, 1])
        if rng.random() < 0.5:
            poly = poly * QPoly([1, 0, 1])  # irreducible x^2 + 1
            expect_split = False
        else:
            expect_split = True
        found, splits = rational_roots(poly)
        if found != roots or splits != expect_split:
            return _fail(name, "roots or split flag wrong", poly)
        for r, mult in found.items():
            probe = poly
            for _ in range(mult):
                if probe(r) != 0:
                    return _fail(name, "multiplicity too high", (poly, r))
                probe = probe.deflate(r)
            if probe.degree >= 1 and probe(r) == 0:
                return _fail(name, "multiplicity too low", (poly, r))
    return _ok(name, "25 constructed polynomials")


# ---------------------------------------------------------------------------
# Jordan structure checks

def check_jordan_roundtrip(max_n: int, rng: random.Random) -> CheckResult:
    name = "jordan-roundtrip"
    count = 0
    for n in range(1, max_n + 1):
        for jt in enumerate_jordan_types(n, eigenvalue_pool(n)):
            if jordan_type(jordan_matrix(jt)) != jt:
                return _fail(name, "round trip failed", jt)
            count += 1
    return _ok(name, "%d Jordan types, n <= %d" % (count, max_n))


def check_jordan_conjugation(max_n: int, rng: random.Random) -> CheckResult:
    name = "jordan-conjugation-invariance"
    top = min(max_n, 4)
    for _ in range(12):
        n = rng.randint(1, max(1, top))
        jt = random_jordan_type(rng, n, range(5))
        m = jordan_matrix(jt)
        p = random_invertible(rng, n)
        if jordan_type(p.inverse() @ m @ p) != jt:
            return _fail(name, "type changed under conjugation", jt)
    return _ok(name, "12 random conjugations, n <= %d" % top)


def check_conjugate_involution(max_n: int, rng: random.Random) -> CheckResult:
    name = "partition-conjugate-involution"
    top = max(max_n, 8)
    count = 0
    for n in range(1, top + 1):
        for p in partitions_of(n):
            c = conjugate_partition(p)
            if c.weight != p.weight or conjugate_partition(c) != p:
                return _fail(name, "conjugate not an involution", p)
            count += 1
    return _ok(name, "%d partitions, n <= %d" % (count, top))


def check_dominance_order(max_n: int, rng: random.Random) -> CheckResult:
    name = "dominance-partial-order"
    top = max(max_n, 8)
    for n in range(1, top + 1):
        ps = list(partitions_of(n))
        for p in ps:
            if not dominates(p, p):
                return _fail(name, "not reflexive", p)
        for p in ps:
            for q in ps:
                if p != q and dominates(p, q) and dominates(q, p):
                    return _fail(name, "not antisymmetric", (p, q))
        for p in ps:
            for q in ps:
                if not dominates(p, q):
                    continue
                for r in ps:
                    if dominates(q, r) and not dominates(p, r):
                        return _fail(name, "not transitive", (p, q, r))
    return _ok(name, "all partitions, weights <= %d" % top)


def check_rank_sequences(max_n: int, rng: random.Random) -> CheckResult:
    name = "rank-sequence-multiplicity"
    top = min(max_n, 4)
    count = 0
    for n in range(1, top + 1):
        for jt in enumerate_jordan_types(n, eigenvalue_pool(n)):
            m = jordan_matrix(jt)
            p = random_invertible(rng, n)
            m = p.inverse() @ m @ p
            roots, _ = rational_roots(char_poly(m))
            identity = QMatrix.identity(n)
            for value, mult in roots.items():
                shifted = m - identity.scale(value)
                ranks = [n]
                power = identity
                while ranks[-1] > n - mult:
                    power = power @ shifted
                    ranks.append(rank(power))
                drops = sum(ranks[k - 1] - ranks[k] for k in range(1, len(ranks)))
                if drops != mult:
                    return _fail(name, "rank drops miss multiplicity", (jt, value))
            count += 1
    return _ok(name, "%d conjugated Jordan matrices, n <= %d" % (count, top))


# ---------------------------------------------------------------------------
# deformation checks

def check_formula_vs_centralizer(max_n: int, rng: random.Random) -> CheckResult:
    name = "block-formula-vs-centralizer-kernel"
    count = 0
    for n in range(1, max_n + 1):
        for jt in enumerate_jordan_types(n, eigenvalue_pool(n)):
            if miniversal_param_count(jt) != centralizer_dim(jordan_matrix(jt)):
                return _fail(name, "formula disagrees with kernel dimension", jt)
            count += 1
    return _ok(name, "%d Jordan types, n <= %d" % (count, max_n))


def check_centralizer_conjugation(max_n: int, rng: random.Random) -> CheckResult:
    name = "centralizer-conjugation-invariance"
    top = min(max_n, 4)
    for _ in range(10):
        n = rng.randint(1, max(1, top))
        m = jordan_matrix(random_jordan_type(rng, n, range(5)))
        p = random_invertible(rng, n)
        if centralizer_dim(p.inverse() @ m @ p) != centralizer_dim(m):
            return _fail(name, "centralizer dimension not invariant", m)
    return _ok(name, "10 random conjugations, n <= %d" % top)


def check_ad_rank_complement(max_n: int, rng: random.Random) -> CheckResult:
    name = "commutator-rank-plus-centralizer"
    top = min(max_n, 4)
    count = 0
    for n in range(1, top + 1):
        for jt in enumerate_jordan_types(n, [Fraction(v) for v in range(3)]):
            m = jordan_matrix(jt)
            op = ad_matrix(m)
            if rank(op) + centralizer_dim(m) != n * n:
                return _fail(name, "rank-nullity violated for the operator", jt)
            if len(kernel_basis(op)) != centralizer_dim(m):
                return _fail(name, "kernel route disagrees", jt)
            count += 1
    return _ok(name, "%d Jordan matrices, n <= %d" % (count, top))


def check_parity_formula(max_n: int, rng: random.Random) -> CheckResult:
    name = "parameter-parity-by-type"
    count = 0
    exhaustive_top = min(max(max_n, 6), 6)
    for n in range(1, exhaustive_top + 1):
        for jt in enumerate_jordan_types(n, eigenvalue_pool(n)):
            if miniversal_param_count(jt) % 2 != n % 2:
                return _fail(name, "parity broken", jt)
            count += 1
    sampled_top = max(max_n, 8)
    for n in range(7, sampled_top + 1):
        for _ in range(1000):
            jt = random_jordan_type(rng, n, range(n))
            if miniversal_param_count(jt) % 2 != n % 2:
                return _fail(name, "parity broken", jt)
            count += 1
    return _ok(
        name,
        "%d types (exhaustive n <= %d, sampled to n = %d)"
        % (count, exhaustive_top, sampled_top),
    )


def check_parity_strata(max_n: int, rng: random.Random) -> CheckResult:
    name = "parameter-parity-by-stratum"
    top = max(max_n, 10)
    count = 0
    for n in range(1, top + 1):
        for s in enumerate_strata(n):
            if s.conjugation_params % 2 != n % 2:
                return _fail(name, "parity broken", s)
            count += 1
    return _ok(name, "%d strata, n <= %d" % (count, top))


def check_nilpotency_criterion(max_n: int, rng: random.Random) -> CheckResult:
    name = "nilpotency-criterion"
    top = min(max_n, 4)
    count = 0
    for n in range(1, top + 1):
        for jt in enumerate_jordan_types(n, eigenvalue_pool(n)):
            m = jordan_matrix(jt)
            candidates = [m]
            if count % 3 == 0:
                p = random_invertible(rng, n)
                candidates.append(p.inverse() @ m @ p)
            for a in candidates:
                expected = centralizer_dim(a) - (0 if jt.is_nilpotent else 1)
                if combined_orbit_codim(a) != expected:
                    return _fail(name, "combined codimension off", jt)
            count += 1
    return _ok(name, "%d Jordan matrices plus conjugates, n <= %d" % (count, top))


def check_greedy_transversal(max_n: int, rng: random.Random) -> CheckResult:
    name = "greedy-family-transversal"
    count = 0
    for n in range(1, max_n + 1):
        for jt in enumerate_jordan_types(n, eigenvalue_pool(n)):
            m = jordan_matrix(jt)
            family = miniversal_greedy(m)
            if len(family.directions) != centralizer_dim(m):
                return _fail(name, "direction count wrong", jt)
            if not is_transversal(family):
                return _fail(name, "greedy family not transversal", jt)
            count += 1
    return _ok(name, "%d Jordan types, n <= %d" % (count, max_n))


def check_structured_transversal(max_n: int, rng: random.Random) -> CheckResult:
    name = "structured-family-transversal"
    count = 0
    for n in range(1, max_n + 1):
        for jt in enumerate_jordan_types(n, eigenvalue_pool(n)):
            try:
                pattern, family = miniversal_structured(jt)
            except PatternNotTransversal as exc:
                return _fail(name, str(exc), jt)
            if len(pattern.positions) != miniversal_param_count(jt):
                return _fail(name, "star count differs from the formula", jt)
            if not is_transversal(family):
                return _fail(name, "structured family not transversal", jt)
            count += 1
    return _ok(name, "%d Jordan types, n <= %d" % (count, max_n))


def check_nonversal_example(max_n: int, rng: random.Random) -> CheckResult:
    name = "upper-triangular-family-not-versal"
    base = QMatrix([[0, 1], [0, 0]])
    triangular = DeformationFamily(
        base,
        (QMatrix.unit(2, 0, 0), QMatrix.unit(2, 0, 1), QMatrix.unit(2, 1, 1)),
        ("t1", "t2", "t3"),
    )
    full = DeformationFamily(
        base,
        tuple(QMatrix.unit(2, r, s) for r in range(2) for s in range(2)),
        ("t1", "t2", "t3", "t4"),
    )
    if is_transversal(triangular):
        return _fail(name, "3-parameter triangular family wrongly transversal", base)
    if not is_transversal(full):
        return _fail(name, "4-parameter full family wrongly non-transversal", base)
    return _ok(
        name,
        "3-parameter upper-triangular family is not transversal; "
        "the 4-parameter family is",
    )


# ---------------------------------------------------------------------------
# strata checks

def check_partition_function(max_n: int, rng: random.Random) -> CheckResult:
    name = "stratum-count-vs-recurrence"
    top = max(max_n, 10)
    for n in range(1, top + 1):
        if len(enumerate_strata(n)) != partition_count(n):
            return _fail(name, "stratum count disagrees with the recurrence", n)
    return _ok(
        name,
        "n <= %d; recurrence gives p(10) = %d" % (top, partition_count(10)),
    )


def check_stratum_constancy(max_n: int, rng: random.Random) -> CheckResult:
    name = "stratum-parameter-constancy"
    top = min(max_n, 6)
    count = 0
    for n in range(1, top + 1):
        for s in enumerate_strata(n):
            names = s.parameter_names
            tmpl = template(s)
            for split in set_partitions(list(range(len(names)))):
                assignment = {}
                for value, cls in enumerate(split):
                    for idx in cls:
                        assignment[names[idx]] = Fraction(value)
                jt = template_jordan_type(s, assignment)
                if jt != jordan_type(tmpl.instantiate(assignment)):
                    return _fail(name, "template type disagrees with the rank "
                                 "oracle", (s, assignment))
                if miniversal_param_count(jt) != s.conjugation_params:
                    return _fail(name, "parameter count not constant", (s, jt))
                count += 1
    return _ok(name, "%d collision patterns, n <= %d" % (count, top))


def check_classification_roundtrip(max_n: int, rng: random.Random) -> CheckResult:
    name = "classification-roundtrip"
    top = min(max_n, 5)
    count = 0
    for n in range(1, top + 1):
        for jt in enumerate_jordan_types(n, eigenvalue_pool(n)):
            stratum, assignment = classify(jordan_matrix(jt))
            if template_jordan_type(stratum, assignment) != jt:
                return _fail(name, "assignment does not reproduce the type", jt)
            count += 1
    return _ok(name, "%d Jordan types, n <= %d" % (count, top))


def _admissible_pairs(n: int):
    """Jordan type pairs with identical characteristic polynomials."""
    groups: dict = {}
    for jt in enumerate_jordan_types(n, eigenvalue_pool(n)):
        key = tuple(sorted(jt.multiplicities().items(),
                           key=lambda item: (str(item[0]), item[1])))
        groups.setdefault(key, []).append(jt)
    for members in groups.values():
        for a in members:
            for b in members:
                yield a, b


def check_jump_monotonicity(max_n: int, rng: random.Random) -> CheckResult:
    name = "jump-parameter-monotonicity"
    top = min(max_n, 5)
    count = 0
    for n in range(1, top + 1):
        for a, b in _admissible_pairs(n):
            if jump_exists(a, b):
                if miniversal_param_count(a) <= miniversal_param_count(b):
                    return _fail(name, "jump does not lower the count", (a, b))
                count += 1
    return _ok(name, "%d jumps verified, n <= %d" % (count, top))


def check_jump_partial_order(max_n: int, rng: random.Random) -> CheckResult:
    name = "jump-strict-partial-order"
    top = min(max_n, 5)
    for n in range(1, top + 1):
        groups: dict = {}
        for jt in enumerate_jordan_types(n, eigenvalue_pool(n)):
            key = tuple(sorted(jt.multiplicities().items(),
                               key=lambda item: (str(item[0]), item[1])))
            groups.setdefault(key, []).append(jt)
        for members in groups.values():
            for a in members:
                if jump_exists(a, a):
                    return _fail(name, "not irreflexive", a)
            for a in members:
                for b in members:
                    if not jump_exists(a, b):
                        continue
                    for c in members:
                        if jump_exists(b, c) and not jump_exists(a, c):
                            return _fail(name, "not transitive", (a, b, c))
    return _ok(name, "all admissible pairs, n <= %d" % top)


def gl6_example_matrices() -> tuple[QMatrix, QMatrix]:
    """The two 6 x 6 matrices with four generic eigenvalue parameters that
    land in different strata with equal parameter counts; instantiated at
    p, q, r, s = 2, 3, 5, 7."""
    p, q, r, s = (Fraction(v) for v in (2, 3, 5, 7))
    zero = Fraction(0)
    one = Fraction(1)
    first = QMatrix(
        [
            [p, zero, zero, zero, zero, zero],
            [zero, p, zero, zero, zero, zero],
            [zero, zero, p, one, zero, zero],
            [zero, zero, zero, q, one, zero],
            [zero, zero, zero, zero, r, one],
            [zero, zero, zero, zero, zero, s],
        ]
    )
    second = QMatrix(
        [
            [p, zero, zero, zero, zero, zero],
            [zero, q, zero, zero, zero, zero],
            [zero, zero, r, one, zero, zero],
            [zero, zero, zero, p, zero, zero],
            [zero, zero, zero, zero, q, zero],
            [zero, zero, zero, zero, zero, r],
        ]
    )
    return first, second


def check_gl6_example(max_n: int, rng: random.Random) -> CheckResult:
    name = "gl6-distinct-strata-equal-counts"
    first, second = gl6_example_matrices()
    s1, _ = classify(first)
    s2, _ = classify(second)
    if s1.parts != Partition((3, 1, 1, 1)):
        return _fail(name, "first matrix misclassified", s1)
    if s2.parts != Partition((2, 2, 2)):
        return _fail(name, "second matrix misclassified", s2)
    if s1 == s2:
        return _fail(name, "strata not distinct", s1)
    if s1.conjugation_params != 12 or s2.conjugation_params != 12:
        return _fail(
            name, "parameter counts wrong",
            (s1.conjugation_params, s2.conjugation_params),
        )
    return _ok(name, "strata (3,1,1,1) and (2,2,2), both with 12 parameters")


def check_adjacency_small(max_n: int, rng: random.Random) -> CheckResult:
    name = "stratum-adjacency-small"
    pairs2 = stratum_adjacency(2, [0, 1])
    expect2 = [(Stratum(Partition((2,))), Stratum(Partition((1, 1))))]
    if pairs2 != expect2:
        return _fail(name, "n = 2 adjacency wrong", pairs2)
    pairs3 = set(
        (a.parts, b.parts) for a, b in stratum_adjacency(3, [0, 1, 2])
    )
    need = {((3,), (2, 1)), ((2, 1), (1, 1, 1))}
    if not need <= pairs3:
        return _fail(name, "n = 3 adjacency misses required pairs", pairs3)
    if ((1, 1, 1), (2, 1)) in pairs3 or ((2, 1), (3,)) in pairs3:
        return _fail(name, "n = 3 adjacency contains a reversed pair", pairs3)
    return _ok(name, "n = 2 exact; n = 3 contains the required chains")


REFERENCE_COUNTS = {
    2: {
        (2,): (4, 3, 3),
        (1, 1): (2, 1, 2),
    },
    3: {
        (3,): (9, 8, 8),
        (2, 1): (5, 4, 5),
        (1, 1, 1): (3, 2, 3),
    },
    4: {
        (4,): (16, 15, 15),
        (3, 1): (10, 9, 10),
        (2, 2): (8, 7, 8),
        (2, 1, 1): (6, 5, 6),
        (1, 1, 1, 1): (4, 3, 4),
    },
}


def check_reference_tables(max_n: int, rng: random.Random) -> CheckResult:
    name = "reference-table-reproduction"
    sizes = [n for n in (2, 3, 4) if n <= max(max_n, 4)]
    for n in sizes:
        expected = REFERENCE_COUNTS[n]
        rows = stratum_table(n)
        if len(rows) != len(expected):
            return _fail(name, "row count wrong for n = %d" % n, rows)
        for row in rows:
            key = tuple(row.stratum.parts)
            got = (
                row.conjugation_params,
                row.projective_generic_params,
                row.projective_zero_params,
            )
            if expected[key] != got:
                return _fail(
                    name,
                    "counts for stratum %s of gl(%d) wrong" % (key, n),
                    got,
                )
    return _ok(name, "dimensions %s match the published counts" % sizes)


ALL_CHECKS = [
    check_rank_kernel,
    check_rank_row_ops,
    check_charpoly_similarity,
    check_rational_roots,
    check_jordan_roundtrip,
    check_jordan_conjugation,
    check_conjugate_involution,
    check_dominance_order,
    check_rank_sequences,
    check_formula_vs_centralizer,
    check_centralizer_conjugation,
    check_ad_rank_complement,
    check_parity_formula,
    check_parity_strata,
    check_nilpotency_criterion,
    check_greedy_transversal,
    check_structured_transversal,
    check_nonversal_example,
    check_partition_function,
    check_stratum_constancy,
    check_classification_roundtrip,
    check_jump_monotonicity,
    check_jump_partial_order,
    check_gl6_example,
    check_adjacency_small,
    check_reference_tables,
]


def run_all(max_n: int, seed: int = DEFAULT_SEED) -> list[CheckResult]:
    """Run every invariant suite with sweeps capped at ``max_n``."""
    if max_n < 1:
        raise ValueError("max_n must be >= 1, got %d" % max_n)
    results = []
    for check in ALL_CHECKS:
        rng = random.Random(seed)
        results.append(check(max_n, rng))
    return results
