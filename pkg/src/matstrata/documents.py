"""JSON wire formats.

Rationals cross the boundary as strings ("5", "-3/7") so no exactness is
lost; matrix indices in human-facing positions (star patterns) are
1-based.  Emitted JSON is canonical: sorted keys, fixed separators, so
identical inputs give byte-identical output.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .deformations import DeformationFamily, StarPattern
from .errors import DocumentError
from .jordan import JordanType, Symbol
from .linalg import QMatrix, format_rational, parse_rational
from .partitions import Partition
from .strata import Stratum


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def matrix_to_doc(matrix: QMatrix) -> dict:
    return {
        "n": matrix.rows,
        "entries": [
            [format_rational(matrix[i, j]) for j in range(matrix.cols)]
            for i in range(matrix.rows)
        ],
    }


def parse_matrix_doc(obj) -> QMatrix:
    if not isinstance(obj, dict) or "entries" not in obj:
        raise DocumentError("matrix document must be an object with 'entries'")
    entries = obj["entries"]
    if not isinstance(entries, list) or not entries:
        raise DocumentError("'entries' must be a nonempty array of rows")
    if any(not isinstance(row, list) for row in entries):
        raise DocumentError("every row of 'entries' must be an array")
    n = len(entries)
    if any(len(row) != n for row in entries):
        raise DocumentError("matrix must be square (n x n entries)")
    if "n" in obj and obj["n"] != n:
        raise DocumentError(
            "declared size %r does not match %d rows" % (obj["n"], n)
        )
    return QMatrix([[parse_rational(x) for x in row] for row in entries])


def jordan_type_to_doc(jt: JordanType) -> dict:
    spectrum = []
    for value, blocks in jt.spectrum:
        item: dict = {"blocks": list(blocks)}
        if isinstance(value, Symbol):
            item["symbol"] = value.name
        else:
            item["value"] = format_rational(value)
        spectrum.append(item)
    return {"n": jt.n, "spectrum": spectrum}


def parse_jordan_type_doc(obj) -> JordanType:
    if not isinstance(obj, dict) or "spectrum" not in obj:
        raise DocumentError("Jordan type document must be an object with 'spectrum'")
    spectrum = obj["spectrum"]
    if not isinstance(spectrum, list) or not spectrum:
        raise DocumentError("'spectrum' must be a nonempty array")
    pairs = []
    for item in spectrum:
        if not isinstance(item, dict) or "blocks" not in item:
            raise DocumentError("spectrum entries need 'blocks'")
        blocks = item["blocks"]
        if (
            not isinstance(blocks, list)
            or not blocks
            or any(not isinstance(b, int) or isinstance(b, bool) for b in blocks)
        ):
            raise DocumentError("'blocks' must be a nonempty array of integers")
        try:
            partition = Partition(blocks)
        except ValueError as exc:
            raise DocumentError(str(exc)) from exc
        if "symbol" in item:
            name = item["symbol"]
            if not isinstance(name, str) or not name:
                raise DocumentError("'symbol' must be a nonempty string")
            value = Symbol(name)
        elif "value" in item:
            value = parse_rational(item["value"])
        else:
            raise DocumentError("spectrum entries need 'value' or 'symbol'")
        pairs.append((value, partition))
    try:
        jt = JordanType(pairs)
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc
    if "n" in obj and obj["n"] != jt.n:
        raise DocumentError(
            "declared size %r does not match total block weight %d"
            % (obj["n"], jt.n)
        )
    return jt


def family_to_doc(family: DeformationFamily) -> dict:
    return {
        "base": matrix_to_doc(family.base),
        "directions": [matrix_to_doc(d) for d in family.directions],
        "parameters": list(family.parameter_names),
    }


def star_pattern_to_doc(pattern: StarPattern) -> dict:
    return {"stars": [[r, c] for r, c in pattern.positions]}


def stratum_to_doc(stratum: Stratum) -> dict:
    return {"n": stratum.n, "parts": list(stratum.parts)}


def assignment_to_doc(assignment: dict[str, Fraction]) -> dict:
    return {name: format_rational(value) for name, value in assignment.items()}


def unwrap(obj):
    """Descend into command-report envelopes so that the JSON one command
    prints can be fed to another."""
    while isinstance(obj, dict) and "results" in obj and "command" in obj:
        obj = obj["results"]
    return obj


def parse_matrix_or_jordan_doc(obj) -> tuple[str, object]:
    """Detect and parse either document kind; returns ('matrix', QMatrix)
    or ('jordan', JordanType)."""
    obj = unwrap(obj)
    if isinstance(obj, dict) and "spectrum" in obj:
        return "jordan", parse_jordan_type_doc(obj)
    if isinstance(obj, dict) and "entries" in obj:
        return "matrix", parse_matrix_doc(obj)
    raise DocumentError(
        "expected a matrix document ('entries') or a Jordan type document "
        "('spectrum')"
    )
