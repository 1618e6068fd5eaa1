"""Command-line front end.

Every subcommand reads one ideal ``(…)`` or complex ``<…>`` (text grammar or
JSON), computes a report and prints it either as text or, with ``--json``,
as a versioned JSON document.  Complexes given where an ideal is expected are
read through their facet ideal, and ideals given where a complex is expected
through their facet complex.

Exit codes: 0 computed (verdicts live in the payload), 2 bad input,
3 precondition violated.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Callable, Optional, Sequence, Union

from . import oracles
from .core import (
    FacetIdealError,
    MonomialIdeal,
    ParseError,
    PreconditionError,
    SimplicialComplex,
    facet_complex,
    facet_ideal,
    format_object,
    format_sets,
    parse,
)
from .duality import (
    alexander_dual,
    cover_complex,
    covering_number,
    dual_ideal,
    is_unmixed,
    nonface_complex,
)
from .homalg import (
    FieldSpec,
    betti_table,
    eagon_reiner_check,
    is_cohen_macaulay,
    is_componentwise_linear,
    krull_dimension,
    reduced_homology,
    skeleton_report,
)
from .linquo import SearchLimitExceeded, componentwise_linear_via_quotients, shelling_from_quotients
from .trees import DEFAULT_MAX_FACETS, free_vertices, is_forest, is_leaf, is_tree

SCHEMA_VERSION = 1

# above this many generators the Taylor-complex oracle is skipped
ORACLE_MAX_GENS = 12

Parsed = Union[MonomialIdeal, SimplicialComplex]


class CommandError(FacetIdealError):
    """Bad command-line usage detected after argument parsing."""


def as_ideal(obj: Parsed) -> MonomialIdeal:
    return obj if isinstance(obj, MonomialIdeal) else facet_ideal(obj)


def as_complex(obj: Parsed) -> SimplicialComplex:
    return obj if isinstance(obj, SimplicialComplex) else facet_complex(obj)


def _sets(obj, masks) -> list[list[str]]:
    return format_sets(obj.ambient, masks)


def _monomials(obj, masks) -> list[str]:
    return [obj.ambient.format_monomial(m) for m in masks]


def cmd_covers(obj: Parsed, args) -> dict:
    cx = as_complex(obj)
    covers = cover_complex(cx).facets
    verdicts = {
        "minimal_covers": _monomials(cx, covers),
        "covering_number": covering_number(cx),
        "unmixed": is_unmixed(cx),
    }
    if args.oracle:
        verdicts["oracle_agrees"] = set(covers) == oracles.brute_minimal_covers(cx)
    return {
        "input": format_object(cx),
        "verdicts": verdicts,
        "certificates": {"minimal_covers": _sets(cx, covers)},
    }


def cmd_dual(obj: Parsed, args) -> dict:
    ideal = as_ideal(obj)
    cx = facet_complex(ideal)
    dual = dual_ideal(ideal)
    nonfaces = nonface_complex(ideal)
    verdicts = {
        "facet_complex": format_object(cx),
        "cover_complex": _monomials(cx, cover_complex(cx).facets),
        "nonface_complex": _monomials(ideal, nonfaces.facets),
        "dual_ideal": format_object(dual),
        "alexander_dual": _monomials(ideal, alexander_dual(nonfaces).facets),
    }
    if args.oracle:
        verdicts["oracle_agrees"] = (
            dual_ideal(dual) == ideal
            and cover_complex(cover_complex(cx)) == cx
            and set(nonfaces.facets) == oracles.brute_nonface_facets(ideal)
        )
    return {"input": format_object(ideal), "verdicts": verdicts, "certificates": {}}


def cmd_tree(obj: Parsed, args) -> dict:
    cx = as_complex(obj)
    max_facets = None if args.max_facets <= 0 else args.max_facets
    table = []
    for f in cx.facets:
        leaf, partner = is_leaf(cx, f)
        table.append(
            {
                "facet": cx.ambient.format_monomial(f),
                "leaf": leaf,
                "partner": None if partner is None else cx.ambient.format_monomial(partner),
                "free_vertices": [cx.ambient.names[v] for v in free_vertices(cx, f)],
            }
        )
    verdict = is_forest(cx, max_facets=max_facets)
    verdicts = {"leaves": table, "forest": verdict.is_forest, "tree": verdict.is_forest and is_tree(cx)}
    if args.oracle:
        verdicts["oracle_agrees"] = verdict.is_forest == oracles.brute_is_forest(cx)
    key = "leaf_order" if verdict.is_forest else "leafless_subcollection"
    return {
        "input": format_object(cx),
        "verdicts": verdicts,
        "certificates": {key: _sets(cx, verdict.witness)},
    }


def cmd_cm(obj: Parsed, args) -> dict:
    ideal = as_ideal(obj)
    view = nonface_complex(ideal)
    cm = is_cohen_macaulay(ideal, args.field)
    verdicts = {
        "cohen_macaulay": cm,
        "krull_dimension": krull_dimension(ideal),
        "nonface_complex": _monomials(ideal, view.facets),
        "reduced_homology": reduced_homology(view.as_complex(), args.field).as_dict(),
    }
    certificates = {}
    if cm:
        try:
            shelling = shelling_from_quotients(ideal, args.max_nodes)
        except (PreconditionError, SearchLimitExceeded):
            verdicts["shelling_found"] = False
        else:
            verdicts["shelling_found"] = True
            certificates.update(shelling.to_json())
    if args.oracle:
        verdicts["oracle_agrees"] = eagon_reiner_check(ideal, args.field) == cm
    return {"input": format_object(ideal), "verdicts": verdicts, "certificates": certificates}


def cmd_scm(obj: Parsed, args) -> dict:
    ideal = as_ideal(obj)
    report = skeleton_report(ideal, args.field)
    scm = all(r.cohen_macaulay for r in report)
    verdicts = {
        "sequentially_cohen_macaulay": scm,
        "skeleta": [
            {"dimension": r.dimension, "ideal": format_object(r.ideal), "cohen_macaulay": r.cohen_macaulay}
            for r in report
        ],
    }
    if args.oracle:
        verdicts["oracle_agrees"] = is_componentwise_linear(dual_ideal(ideal), args.field) == scm
    return {"input": format_object(ideal), "verdicts": verdicts, "certificates": {}}


def cmd_linquo(obj: Parsed, args) -> dict:
    ideal = as_ideal(obj)
    target = dual_ideal(ideal) if args.dual else ideal
    degrees = None if args.component is None else [args.component]
    report = componentwise_linear_via_quotients(target, args.field, args.max_nodes, degrees)
    components = []
    certificates = {}
    for v in report.components:
        entry = {
            "degree": v.degree,
            "component": format_object(v.component),
            "certified": v.certified,
            "linear_resolution": v.linear,
        }
        if not v.linear:
            table = betti_table(v.component, args.field)
            entry["nonlinear_betti"] = {
                f"{i},{j}": b for (i, j), b in sorted(table.entries.items()) if i >= 1 and j != i + v.degree - 1
            }
        components.append(entry)
        if v.certificate is not None:
            certificates[f"component_{v.degree}"] = v.certificate.to_json()
    verdicts = {
        "ideal": format_object(target),
        "components": components,
        "certified": report.certified,
        "componentwise_linear": report.componentwise_linear,
    }
    if args.oracle:
        verdicts["oracle_agrees"] = all(
            v.certificate.replay(v.component) for v in report.components if v.certificate is not None
        )
    return {"input": format_object(ideal), "verdicts": verdicts, "certificates": certificates}


def cmd_betti(obj: Parsed, args) -> dict:
    ideal = as_ideal(obj)
    table = betti_table(ideal, args.field)
    verdicts = {
        "betti": table.to_json(),
        "projective_dimension": table.projective_dimension(),
        "diagram": table.format(),
    }
    if args.oracle and len(ideal.generators) <= ORACLE_MAX_GENS:
        verdicts["oracle_agrees"] = table.entries == oracles.taylor_betti(ideal, args.field.characteristic)
    return {"input": format_object(ideal), "verdicts": verdicts, "certificates": {}}


COMMANDS: dict[str, tuple[Callable[[Parsed, argparse.Namespace], dict], str, bool]] = {
    "covers": (cmd_covers, "minimal vertex covers, covering number, unmixedness", False),
    "dual": (cmd_dual, "facet/cover/nonface complexes, dual ideal and Alexander dual", False),
    "tree": (cmd_tree, "leaf table, free vertices and forest verdict with witness", False),
    "cm": (cmd_cm, "Cohen-Macaulay verdict for R/I, with a shelling when one is found", True),
    "scm": (cmd_scm, "sequential Cohen-Macaulay verdict from the pure skeleta", True),
    "linquo": (cmd_linquo, "linear-quotient certificates for each homogeneous component", True),
    "betti": (cmd_betti, "graded Betti numbers of R/I", True),
}


def _field(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except FacetIdealError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="facetideal",
        description="Facet ideals, Stanley-Reisner duality and simplicial trees.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", nargs="?", help="ideal '(xyz, zu)' or complex '<xyz, zu>'; stdin if omitted or '-'")
    common.add_argument("-f", "--file", type=Path, help="read the input from this file")
    common.add_argument("--json", action="store_true", help="print the report as JSON")
    common.add_argument("--oracle", action="store_true", help="cross-check against brute-force computations")
    common.add_argument("--cert-dir", type=Path, help="write certificates as JSON files into this directory")
    common.add_argument("--timing", action="store_true", help="include wall-clock seconds in the report")
    common.add_argument(
        "--max-facets",
        type=int,
        default=DEFAULT_MAX_FACETS,
        help="refuse forest checks above this many facets; 0 disables the guard (default %(default)s)",
    )
    common.add_argument("--max-nodes", type=int, default=None, help="bound on quotient-order search nodes")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text, uses_field) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        if uses_field:
            p.add_argument("--field", type=_field, default=FieldSpec(0), help="q (default) or fp:<prime>")
        if name == "linquo":
            p.add_argument("--component", type=int, help="only the degree-k component")
            p.add_argument("--dual", action="store_true", help="work on the dual ideal of the input")
    return parser


def read_input(args) -> str:
    if args.file is not None:
        if args.input is not None:
            raise CommandError("give the input either inline or with --file, not both")
        try:
            return args.file.read_text()
        except OSError as exc:
            raise CommandError(f"cannot read {args.file}: {exc.strerror}") from None
    if args.input is None or args.input == "-":
        return sys.stdin.read()
    return args.input


def run(args) -> dict:
    func, _, uses_field = COMMANDS[args.command]
    start = time.perf_counter()
    obj = parse(read_input(args))
    body = func(obj, args)
    report = {"schema": SCHEMA_VERSION, "command": args.command, "input": body["input"]}
    if uses_field:
        report["field"] = str(args.field)
    report["verdicts"] = body["verdicts"]
    report["certificates"] = body["certificates"]
    if args.timing:
        report["seconds"] = round(time.perf_counter() - start, 6)
    return report


def write_certificates(report: dict, directory: Path) -> list[Path]:
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, cert in report["certificates"].items():
        path = directory / f"{report['command']}-{name}.json"
        payload = {"schema": SCHEMA_VERSION, "input": report["input"], name: cert}
        path.write_text(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
        written.append(path)
    return written


def _text_value(value) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, list) and all(isinstance(v, str) for v in value):
        return ", ".join(value) if value else "(none)"
    if isinstance(value, dict):
        return "  ".join(f"{k}:{v}" for k, v in value.items())
    return str(value)


def format_text(report: dict) -> str:
    lines = [f"{report['command']}: {report['input']}"]
    if "field" in report:
        lines.append(f"field: {report['field']}")
    for key, value in report["verdicts"].items():
        label = key.replace("_", " ")
        if key == "diagram":
            lines.append(value)
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{label}:")
            for row in value:
                lines.append("  " + "  ".join(f"{k.replace('_', ' ')}={_text_value(v)}" for k, v in row.items()))
        else:
            lines.append(f"{label}: {_text_value(value)}")
    for name, cert in report["certificates"].items():
        lines.append(f"certificate {name}: {json.dumps(cert, ensure_ascii=False)}")
    if "seconds" in report:
        lines.append(f"seconds: {report['seconds']}")
    return "\n".join(lines)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = run(args)
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return 3
    except SearchLimitExceeded as exc:
        print(f"search limit reached: {exc}", file=sys.stderr)
        return 3
    except (ParseError, CommandError, FacetIdealError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    if args.cert_dir is not None:
        write_certificates(report, args.cert_dir)
    if args.json:
        print(json.dumps(report, indent=2, ensure_ascii=False))
    else:
        print(format_text(report))
    return 0


if __name__ == "__main__":
    sys.exit(main())
