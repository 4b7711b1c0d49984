"""Command-line front end.

Subcommands wrap the library one-to-one; every command reads JSON
documents, and emits either a readable text report (default) or a
canonical JSON run report with ``--format json``.  Exit codes: 0 success,
1 domain error (irrational spectrum, non-transversal pattern), 2 input
error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys

from . import verify as verify_mod
from .deformations import (
    miniversal_greedy,
    miniversal_structured,
    orbit_tangent_span,
)
from .documents import (
    assignment_to_doc,
    dumps,
    family_to_doc,
    jordan_type_to_doc,
    matrix_to_doc,
    parse_matrix_doc,
    parse_matrix_or_jordan_doc,
    star_pattern_to_doc,
    stratum_to_doc,
    unwrap,
)
from .errors import (
    DocumentError,
    IrrationalSpectrum,
    MatStrataError,
    PatternNotTransversal,
    SizeMismatch,
)
from .jordan import Symbol, jordan_matrix, jordan_type
from .linalg import QMatrix, format_rational
from .partitions import dominates
from .strata import classify_report, stratum_table

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_INPUT = 2
EXIT_VERIFY = 3


def _read_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            raw = handle.read()
    except OSError as exc:
        raise DocumentError("cannot read %s: %s" % (path, exc)) from exc
    try:
        obj = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise DocumentError("%s is not valid JSON: %s" % (path, exc)) from exc
    digest = hashlib.sha256(raw.encode("utf-8")).hexdigest()
    return obj, digest


def _report(command: str, inputs: dict, results, warnings: list[str]) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "results": results,
        "warnings": warnings,
    }


def _emit(args, report: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        sys.stdout.write(dumps(report))
    else:
        for line in text_lines:
            print(line)
        for warning in report["warnings"]:
            print("warning: %s" % warning)


def _matrix_lines(doc: dict) -> list[str]:
    rows = doc["entries"]
    width = max(len(x) for row in rows for x in row)
    return ["[%s]" % " ".join(x.rjust(width) for x in row) for row in rows]


def _jordan_text(doc: dict) -> list[str]:
    lines = ["n = %d" % doc["n"]]
    for item in doc["spectrum"]:
        label = item.get("value", item.get("symbol"))
        lines.append(
            "eigenvalue %s: blocks (%s)"
            % (label, ",".join(str(b) for b in item["blocks"]))
        )
    return lines


def cmd_jordan(args) -> int:
    obj, digest = _read_json(args.matrix)
    matrix = parse_matrix_doc(unwrap(obj))
    jt = jordan_type(matrix)
    doc = jordan_type_to_doc(jt)
    report = _report("jordan", {"matrix": digest}, doc, [])
    _emit(args, report, _jordan_text(doc))
    return EXIT_OK


def cmd_classify(args) -> int:
    obj, digest = _read_json(args.matrix)
    matrix = parse_matrix_doc(unwrap(obj))
    info = classify_report(matrix)
    results = {
        "stratum": stratum_to_doc(info["stratum"]),
        "assignment": assignment_to_doc(info["assignment"]),
        "jordan_type": jordan_type_to_doc(info["jordan_type"]),
        "conjugation_params": info["conjugation_params"],
        "projective_params": info["projective_params"],
        "combined_orbit_codim": info["combined_orbit_codim"],
    }
    report = _report("classify", {"matrix": digest}, results, info["warnings"])
    lines = [
        "stratum: (%s)" % ",".join(str(p) for p in info["stratum"].parts),
        "assignment: %s"
        % ", ".join(
            "%s = %s" % (name, format_rational(value))
            for name, value in info["assignment"].items()
        ),
        "conjugation parameters: %d" % info["conjugation_params"],
        "projective parameters: %d" % info["projective_params"],
        "combined orbit codimension: %d" % info["combined_orbit_codim"],
    ]
    _emit(args, report, lines)
    return EXIT_OK


def _is_jordan_arrangement(matrix: QMatrix) -> bool:
    """Block-diagonal with Jordan blocks, in any block order."""
    n = matrix.rows
    for i in range(n):
        for j in range(n):
            entry = matrix[i, j]
            if j == i:
                continue
            if j == i + 1:
                if entry not in (0, 1):
                    return False
                if entry == 1 and matrix[i, i] != matrix[j, j]:
                    return False
            elif entry != 0:
                return False
    return True


def cmd_miniversal(args) -> int:
    obj, digest = _read_json(args.matrix)
    kind, payload = parse_matrix_or_jordan_doc(obj)
    if args.method == "greedy":
        matrix = payload if kind == "matrix" else jordan_matrix(payload)
        family = miniversal_greedy(matrix)
        pattern = None
    else:
        if kind == "matrix":
            if not _is_jordan_arrangement(payload):
                raise DocumentError(
                    "structured method needs the matrix already in Jordan "
                    "form (or a Jordan type document)"
                )
            jt = jordan_type(payload)
        else:
            jt = payload
        pattern, family = miniversal_structured(jt)
    n = family.base.rows
    builder = orbit_tangent_span(family.base)
    for direction in family.directions:
        builder.add(direction.vec())
    achieved = builder.dim
    results = {
        "method": args.method,
        "family": family_to_doc(family),
        "stars": star_pattern_to_doc(pattern) if pattern else None,
        "transversal": achieved == n * n,
        "achieved_dimension": achieved,
        "required_dimension": n * n,
    }
    report = _report("miniversal", {"matrix": digest}, results, [])
    lines = [
        "method: %s" % args.method,
        "parameters: %d" % len(family.directions),
        "transversal: %s (dimension %d of %d)"
        % ("yes" if achieved == n * n else "no", achieved, n * n),
    ]
    if pattern:
        lines.append(
            "stars (1-based): %s"
            % " ".join("(%d,%d)" % pos for pos in pattern.positions)
        )
    for name, direction in zip(family.parameter_names, family.directions):
        lines.append("direction %s:" % name)
        lines.extend("  " + line for line in _matrix_lines(matrix_to_doc(direction)))
    _emit(args, report, lines)
    return EXIT_OK


def _strata_rows(n: int, action: str) -> tuple[list[dict], list[str], list[list[str]]]:
    rows = stratum_table(n)
    row_docs = []
    warnings: list[str] = []
    blocks = []
    for row in rows:
        parts = list(row.stratum.parts)
        doc = {
            "parts": parts,
            "template": row.matrix.entry_strings(),
            "symmetry": [list(orbit) for orbit in row.symmetry.orbits],
        }
        text = ["stratum (%s)" % ",".join(str(p) for p in parts)]
        if action == "conjugation":
            doc["parameterization"] = row.conjugation_space
            doc["params"] = row.conjugation_params
            text.append("  parameterized by %s" % row.conjugation_space)
            text.append("  miniversal parameters: %d" % row.conjugation_params)
        else:
            doc["parameterization"] = row.projective_space
            doc["generic_params"] = row.projective_generic_params
            doc["zero_params"] = row.projective_zero_params
            text.append("  parameterized by %s" % row.projective_space)
            text.append(
                "  miniversal parameters: %d generic, %d at the all-zero point"
                % (row.projective_generic_params, row.projective_zero_params)
            )
        text.append("  template:")
        width = max(len(x) for line in row.matrix.entry_strings() for x in line)
        for line in row.matrix.entry_strings():
            text.append("    [%s]" % " ".join(x.rjust(width) for x in line))
        row_docs.append(doc)
        if action != "conjugation":
            warnings.extend(row.warnings)
        blocks.append(text)
    return row_docs, warnings, blocks


def cmd_strata(args) -> int:
    row_docs, warnings, blocks = _strata_rows(args.n, args.action)
    results = {"n": args.n, "action": args.action, "strata": row_docs}
    report = _report("strata", {"n": args.n}, results, warnings)
    lines = ["%d x %d matrices, %s action, %d strata"
             % (args.n, args.n, args.action, len(row_docs))]
    for block in blocks:
        lines.append("")
        lines.extend(block)
    _emit(args, report, lines)
    return EXIT_OK


def _load_type(path: str):
    obj, digest = _read_json(path)
    kind, payload = parse_matrix_or_jordan_doc(obj)
    if kind == "matrix":
        return jordan_type(payload), digest
    return payload, digest


def cmd_jump(args) -> int:
    src, digest_from = _load_type(getattr(args, "from"))
    dst, digest_to = _load_type(args.to)
    if src.n != dst.n:
        raise SizeMismatch("jump between sizes %d and %d" % (src.n, dst.n))
    chains = []
    if src == dst:
        verdict = False
        reason = "identical Jordan types"
    elif src.multiplicities() != dst.multiplicities():
        verdict = False
        reason = "characteristic polynomials differ"
    else:
        verdict = True
        failed = []
        for value in src.eigenvalues:
            b_from = src.blocks_for(value)
            b_to = dst.blocks_for(value)
            holds = dominates(b_to, b_from)
            chains.append(
                {
                    "value": value.name if isinstance(value, Symbol)
                    else format_rational(value),
                    "from_blocks": list(b_from),
                    "to_blocks": list(b_to),
                    "dominates": holds,
                }
            )
            if not holds:
                verdict = False
                prefix_to = prefix_from = 0
                for k in range(max(len(b_to), len(b_from))):
                    prefix_to += b_to[k] if k < len(b_to) else 0
                    prefix_from += b_from[k] if k < len(b_from) else 0
                    if prefix_to < prefix_from:
                        failed.append("dominance fails at k=%d for eigenvalue %s"
                                      % (k + 1, value))
                        break
        reason = (
            "destination blocks dominate source blocks for every eigenvalue"
            if verdict
            else "; ".join(failed)
        )
    results = {
        "jump": verdict,
        "from": jordan_type_to_doc(src),
        "to": jordan_type_to_doc(dst),
        "reason": reason,
        "eigenvalue_chains": chains,
    }
    report = _report(
        "jump", {"from": digest_from, "to": digest_to}, results, []
    )
    lines = ["jump: %s" % ("yes" if verdict else "no"), "reason: %s" % reason]
    for chain in chains:
        lines.append(
            "eigenvalue %s: (%s) -> (%s) dominance %s"
            % (
                chain["value"],
                ",".join(str(b) for b in chain["from_blocks"]),
                ",".join(str(b) for b in chain["to_blocks"]),
                "holds" if chain["dominates"] else "fails",
            )
        )
    _emit(args, report, lines)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = verify_mod.run_all(args.max_n)
    all_passed = all(r.passed for r in results)
    docs = [
        {
            "name": r.name,
            "passed": r.passed,
            "details": r.details,
            "counterexample": r.counterexample,
        }
        for r in results
    ]
    report = _report(
        "verify",
        {"max_n": args.max_n},
        {"checks": docs, "all_passed": all_passed},
        [],
    )
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append("%s %s: %s" % (status, r.name, r.details))
        if not r.passed and r.counterexample:
            lines.append("     counterexample: %s" % r.counterexample)
    lines.append(
        "%d/%d checks passed" % (sum(r.passed for r in results), len(results))
    )
    _emit(args, report, lines)
    return EXIT_OK if all_passed else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matstrata",
        description=(
            "Exact Jordan structure, miniversal deformations and the "
            "partition-indexed stratification of square rational matrices."
        ),
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_format(p):
        p.add_argument(
            "--format", choices=("text", "json"), default="text",
            help="output format (default: text)",
        )

    p = sub.add_parser("jordan", help="Jordan type of a matrix")
    p.add_argument("matrix", help="path to a matrix JSON document")
    add_format(p)
    p.set_defaults(func=cmd_jordan)

    p = sub.add_parser("classify", help="stratum and parameter counts of a matrix")
    p.add_argument("matrix", help="path to a matrix JSON document")
    add_format(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("miniversal", help="miniversal deformation family")
    p.add_argument("matrix", help="path to a matrix or Jordan type JSON document")
    p.add_argument(
        "--method", choices=("greedy", "structured"), default="greedy",
        help="greedy matrix-unit complement or the structured star pattern",
    )
    add_format(p)
    p.set_defaults(func=cmd_miniversal)

    p = sub.add_parser("strata", help="per-stratum table for n x n matrices")
    p.add_argument("--n", type=int, required=True, help="matrix size (>= 1)")
    p.add_argument(
        "--action", choices=("conjugation", "projective"), default="conjugation",
        help="group action for the parameter counts",
    )
    add_format(p)
    p.set_defaults(func=cmd_strata)

    p = sub.add_parser("jump", help="jump deformation test between two matrices")
    p.add_argument("--from", required=True, dest="from",
                   help="source matrix or Jordan type JSON document")
    p.add_argument("--to", required=True,
                   help="destination matrix or Jordan type JSON document")
    add_format(p)
    p.set_defaults(func=cmd_jump)

    p = sub.add_parser("verify", help="run every invariant suite")
    p.add_argument("--max-n", type=int, default=4,
                   help="sweep sizes up to this bound (default 4; <= 6 is fast)")
    add_format(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.subcommand == "strata" and args.n < 1:
        parser.error("--n must be >= 1")
    if args.subcommand == "verify" and args.max_n < 1:
        parser.error("--max-n must be >= 1")
    try:
        return args.func(args)
    except DocumentError as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    except SizeMismatch as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    except IrrationalSpectrum as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_DOMAIN
    except PatternNotTransversal as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_DOMAIN
    except MatStrataError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_DOMAIN


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
