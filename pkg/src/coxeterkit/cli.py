"""Command-line front-end.

Commands:
    coxeterkit classify <file>     name the components of a graph JSON file
    coxeterkit chartable <type>    exact character table (TSV or JSON)
    coxeterkit irreps <type>       irreducible labels and dimensions
    coxeterkit realize <type>      order, generators and conjugacy classes
    coxeterkit verify <type>       run the invariant suite for one type

Exit codes: 0 success/finite, 1 input error, 2 not finite (or failed
verification), 3 unsupported type or guard exceeded.  Output is
byte-deterministic for a fixed command and input.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .classify import TypeLabel, classify, parse_type_label
from .cyclotomic import Cyclotomic
from .errors import GuardError, UnsupportedTypeError, ValidationError
from .families import (
    dihedral_irreducibles,
    dn_irreducibles,
    hyperoctahedral_dimensions,
    hyperoctahedral_irreducibles,
    irreducible_characters,
)
from .graphs import parse_graph_json
from .groups import MAX_ORDER, element_text, realize
from .reps import ClassFunction
from .specht import hook_dimension, partition_text, partitions_of
from .verify import run_verification

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NOT_FINITE = 2
EXIT_UNSUPPORTED = 3


def format_value(v, float_mode: bool = False) -> str:
    if float_mode:
        f = v.to_float() if isinstance(v, Cyclotomic) else float(Fraction(v))
        return f"{f:.12g}"
    if isinstance(v, Cyclotomic):
        return str(v)
    return str(Fraction(v))


def _dim_int(v) -> int:
    if isinstance(v, Cyclotomic):
        return int(v.rational_value())
    return int(Fraction(v))


def _class_headers(domain) -> list[str]:
    classes = domain.classes
    return [f"{element_text(rep)} [{size}]" for rep, size in zip(classes.reps, classes.sizes)]


def _chartable_rows(label: TypeLabel) -> list[ClassFunction]:
    chars = irreducible_characters(label)
    return chars


def _print_table(chars: list[ClassFunction], fmt: str, float_mode: bool, out) -> None:
    domain = chars[0].domain
    headers = _class_headers(domain)
    if fmt == "json":
        import json

        classes = domain.classes
        data = {
            "classes": [
                {"representative": element_text(rep), "size": size}
                for rep, size in zip(classes.reps, classes.sizes)
            ],
            "rows": [
                {
                    "label": c.name or "",
                    "values": [format_value(v, float_mode) for v in c.values],
                }
                for c in chars
            ],
        }
        out.write(json.dumps(data, sort_keys=True, indent=2) + "\n")
        return
    out.write("\t".join(["irrep"] + headers) + "\n")
    for c in chars:
        cells = [c.name or ""] + [format_value(v, float_mode) for v in c.values]
        out.write("\t".join(cells) + "\n")


def cmd_classify(args, out) -> int:
    try:
        with open(args.path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        out.write(f"error: {e}\n")
        return EXIT_INPUT
    graph = parse_graph_json(text)
    result = classify(graph)
    if args.format == "json":
        import json

        data = {
            "finite": result.is_finite,
            "components": [
                {
                    "vertices": list(c.vertices),
                    "type": str(c.label) if c.label else None,
                    "witness": str(c.witness) if c.witness else None,
                }
                for c in result.components
            ],
        }
        out.write(json.dumps(data, sort_keys=True, indent=2) + "\n")
    else:
        out.write(str(result) + "\n")
    return EXIT_OK if result.is_finite else EXIT_NOT_FINITE


def cmd_chartable(args, out) -> int:
    label = parse_type_label(args.type)
    chars = _chartable_rows(label)
    _print_table(chars, args.format, args.float, out)
    return EXIT_OK


def cmd_irreps(args, out) -> int:
    label = parse_type_label(args.type)
    rows: list[tuple[str, int]] = []
    if label.family == "A":
        n = label.rank + 1
        rows = [(partition_text(s), hook_dimension(s)) for s in partitions_of(n)]
    elif label.family == "B":
        rows = [(str(lbl), d) for lbl, d in hyperoctahedral_dimensions(label.rank)]
    elif label.family == "D":
        rows = [(str(lbl), d) for lbl, _, d in dn_irreducibles(label.rank)]
    elif label.family == "I2":
        chars = dihedral_irreducibles(label.bond)
        rows = [(c.name, _dim_int(c.identity_value)) for c in chars]
    else:
        raise UnsupportedTypeError(f"irreducibles of {label} are out of scope")
    if args.format == "json":
        import json

        out.write(
            json.dumps(
                {"irreps": [{"label": l, "dim": d} for l, d in rows]},
                sort_keys=True,
                indent=2,
            )
            + "\n"
        )
    else:
        for l, d in rows:
            out.write(f"{l}\t{d}\n")
    return EXIT_OK


def cmd_realize(args, out) -> int:
    label = parse_type_label(args.type)
    group = realize(label, args.max_order)
    classes = group.classes
    if args.format == "json":
        import json

        data = {
            "type": str(label),
            "order": group.order,
            "generators": [element_text(g) for g in group.generators],
            "classes": [
                {"representative": element_text(rep), "size": size}
                for rep, size in zip(classes.reps, classes.sizes)
            ],
        }
        out.write(json.dumps(data, sort_keys=True, indent=2) + "\n")
        return EXIT_OK
    out.write(f"type\t{label}\n")
    out.write(f"order\t{group.order}\n")
    for i, g in enumerate(group.generators):
        out.write(f"generator {i}\t{element_text(g)}\n")
    out.write(f"classes\t{classes.count}\n")
    for rep, size in zip(classes.reps, classes.sizes):
        out.write(f"class\t{element_text(rep)}\t{size}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    label = parse_type_label(args.type)
    checks = run_verification(label, args.max_order)
    failed = 0
    for name, ok, detail in checks:
        status = "PASS" if ok else "FAIL"
        if not ok:
            failed += 1
        out.write(f"{status}\t{name}\t{detail}\n")
    return EXIT_OK if failed == 0 else EXIT_NOT_FINITE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coxeterkit",
        description="Classify Coxeter graphs and compute exact character tables "
        "for the infinite families A, B, D and I2.",
    )
    parser.add_argument(
        "--format", choices=("tsv", "json"), default="tsv", help="output format"
    )
    parser.add_argument(
        "--float",
        action="store_true",
        help="print numeric values as floats (12 significant digits) instead of exact forms",
    )
    parser.add_argument(
        "--max-order",
        type=int,
        default=MAX_ORDER,
        help=f"override the group-order guard (default {MAX_ORDER})",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("classify", help="classify a graph JSON file")
    p.add_argument("path")
    p.set_defaults(fn=cmd_classify)
    for name, fn, help_text in (
        ("chartable", cmd_chartable, "exact character table of a type"),
        ("irreps", cmd_irreps, "irreducible labels and dimensions"),
        ("realize", cmd_realize, "order, generators and conjugacy classes"),
        ("verify", cmd_verify, "run the invariant suite for a type"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("type")
        p.set_defaults(fn=fn)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args, out)
    except (UnsupportedTypeError, GuardError) as e:
        out.write(f"unsupported: {e}\n")
        return EXIT_UNSUPPORTED
    except ValidationError as e:
        out.write(f"error: {e}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
