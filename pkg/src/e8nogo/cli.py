"""Command-line surface.

Commands: roots, sl2, decompose, centralizer, reality, nogo-dim, toe.
Global flags: --format {text,json}, --seed N.

Exit codes: 0 success (and, for `toe`, theorem reproduced), 1 theorem
discrepancy, 2 usage error.  All output is exact; no floating point is ever
printed.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .errors import LieError
from .roots import SimpleType, build_root_system, irrep
from .sl2 import classify_sl2_upto_index
from .chevalley import build_e8_chevalley, centralizer, identify_type
from .decomp import peel_to_bitable, refine_bitable, sl2_weights
from .reality import dual_weight, frobenius_schur
from .toe import (
    default_context,
    dimension_no_go,
    render_report,
    report_to_json_dict,
    theorem_report,
)

USAGE_ERROR = 2
DISCREPANCY = 1


@dataclass
class CliConfig:
    command: str
    output_format: str
    seed: int


def _parse_type(text: str) -> SimpleType:
    try:
        return SimpleType.parse(text)
    except LieError as exc:
        raise SystemExit(_usage(str(exc)))


def _parse_product(text: str):
    try:
        return tuple(SimpleType.parse(part) for part in text.split("x"))
    except LieError as exc:
        raise SystemExit(_usage(str(exc)))


def _parse_vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(c) for c in text.split(","))
    except ValueError:
        raise SystemExit(_usage(f"cannot parse integer vector from {text!r}"))


def _usage(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return USAGE_ERROR


def cmd_roots(args, fmt: str) -> int:
    t = _parse_type(args.type)
    rs = build_root_system(t)
    info = {
        "type": str(t),
        "roots": 2 * len(rs.positive_roots),
        "positive": len(rs.positive_roots),
        "dual_coxeter": rs.dual_coxeter,
    }
    if fmt == "json":
        print(json.dumps(info, sort_keys=True))
    else:
        print(
            f"{info['roots']} roots, {info['positive']} positive, "
            f"h∨={info['dual_coxeter']}"
        )
        if args.list:
            print(rs.render_roots())
    return 0


def cmd_sl2(args, fmt: str, seed: int) -> int:
    t = _parse_type(args.type)
    try:
        classes = classify_sl2_upto_index(t, args.max_index, seed=seed)
    except LieError as exc:
        return _usage(str(exc))
    if fmt == "json":
        out = [
            {"labels": json.loads(d.to_json()), "index": str(idx)}
            for d, idx in classes
        ]
        print(json.dumps({"type": str(t), "classes": out}, sort_keys=True))
        return 0
    print(f"{len(classes)} sl2 classes of {t} with index <= {args.max_index}:")
    for d, idx in classes:
        print(f"index {idx}:")
        for line in d.render().splitlines():
            print("  " + line)
    return 0


def _decomposition(args, seed: int):
    alg = build_e8_chevalley()
    h1 = _parse_vector(args.h1)
    hs = [h1, _parse_vector(args.h2) if args.h2 else (0,) * 8]
    if any(len(h) != 8 for h in hs):
        raise SystemExit(_usage("defining vectors must have 8 coordinates"))
    return alg, hs


def cmd_decompose(args, fmt: str, seed: int) -> int:
    alg, hs = _decomposition(args, seed)
    try:
        weights = sl2_weights(hs, alg, seed=seed)
        table = peel_to_bitable(weights)
        if args.refine:
            from .chevalley import commuting_pair, sl2_triple_from_defining_vector

            if any(any(c) for c in hs[1:]):
                t1, t2 = commuting_pair(hs[0], hs[1], alg, seed=seed)
                gens = [t1.e, t1.f, t2.e, t2.f]
            else:
                t1 = sl2_triple_from_defining_vector(hs[0], alg, seed=seed)
                gens = t1.elements()
            z = identify_type(centralizer(gens))
            table = refine_bitable(hs, z, alg, table=table)
            from .toe import normalize_factor_order

            z, table = normalize_factor_order(z, table)
    except LieError as exc:
        return _usage(str(exc))
    if fmt == "json":
        print(json.dumps(table.to_json_dict(), sort_keys=True))
        return 0
    print(table.render())
    if args.refine:
        print(f"centralizer: {'x'.join(str(t) for t in z.identified_type)}")
        for (m, n), rep in sorted(table.contents.items()):
            names = " + ".join(
                ("" if mult == 1 else f"{mult}*") + "⊗".join(
                    str(irrep(tt, w).dimension)
                    for tt, w in zip(label.algebra, label.weight)
                )
                for label, mult in rep.entries
            )
            print(f"V_{{{m},{n}}} = {names}")
    return 0


def cmd_centralizer(args, fmt: str, seed: int) -> int:
    alg, hs = _decomposition(args, seed)
    from .chevalley import commuting_pair, sl2_triple_from_defining_vector

    try:
        if any(any(c) for c in hs[1:]):
            t1, t2 = commuting_pair(hs[0], hs[1], alg, seed=seed)
            gens = [t1.e, t1.f, t2.e, t2.f]
        else:
            t1 = sl2_triple_from_defining_vector(hs[0], alg, seed=seed)
            gens = t1.elements()
        z = identify_type(centralizer(gens))
    except LieError as exc:
        return _usage(str(exc))
    info = {
        "dim": z.dim,
        "type": "x".join(str(t) for t in z.identified_type),
        "simple_coroots": [
            [list(v) for v in factor] for factor in z.simple_root_map
        ],
    }
    if fmt == "json":
        print(json.dumps(info, sort_keys=True))
    else:
        print(f"dim {info['dim']}, type {info['type']}")
        for t, factor in zip(z.identified_type, z.simple_root_map):
            print(f"  {t}:")
            for v in factor:
                print("    " + " ".join(str(c) for c in v))
    return 0


def cmd_reality(args, fmt: str) -> int:
    algebra = _parse_product(args.type)
    coords = _parse_vector(args.weight)
    total = sum(t.rank for t in algebra)
    if len(coords) != total:
        return _usage(f"weight needs {total} coordinates for {args.type}")
    weights = []
    pos = 0
    for t in algebra:
        weights.append(tuple(coords[pos : pos + t.rank]))
        pos += t.rank
    try:
        label = irrep(algebra, weights)
    except LieError as exc:
        return _usage(str(exc))
    fs = frobenius_schur(label)
    dual = dual_weight(label)
    info = {
        "type": args.type,
        "weight": [list(w) for w in label.weight],
        "dimension": label.dimension,
        "reality": str(fs),
        "self_dual": dual == label,
    }
    if fmt == "json":
        print(json.dumps(info, sort_keys=True))
    else:
        print(
            f"{args.type} weight {args.weight}: dim {info['dimension']}, "
            f"{info['reality']}"
        )
    return 0


def cmd_nogo_dim(fmt: str) -> int:
    info = dimension_no_go()
    if fmt == "json":
        print(json.dumps(info, sort_keys=True))
        return 0
    dims = ", ".join(str(d) for d in info["minus_eigenspace_dims"])
    print(
        f"three generations need {info['required']} = "
        f"{'×'.join(str(f) for f in info['required_factors'])} odd-weight dimensions"
    )
    print(f"odd eigenspace of any involution from an sl2 center: {dims}")
    print(f"hard cap (trace bound): {info['serre_bound']}")
    print(
        "verdict: excluded by counting"
        if info["excluded"]
        else "verdict: not excluded"
    )
    print(
        f"one generation needs {info['one_generation_required']}: "
        + (
            "excluded"
            if info["one_generation_excluded_by_dimension"]
            else "not excluded by dimension alone (see `toe`)"
        )
    )
    return 0


def cmd_toe(args, fmt: str, seed: int) -> int:
    report = theorem_report(args.mode, default_context(seed))
    if fmt == "json":
        print(json.dumps(report_to_json_dict(report), sort_keys=True))
    else:
        print(render_report(report))
    return 0 if report["all_toe3_fail"] else DISCREPANCY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="e8nogo",
        description=(
            "Exact computations in E8: root systems, sl2 subalgebras, adjoint "
            "decompositions, reality types, and the chirality no-go check."
        ),
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--seed", type=int, default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", help="root system summary")
    p.add_argument("type")
    p.add_argument("--list", action="store_true", help="print the positive roots")

    p = sub.add_parser("sl2", help="low-index sl2 classes")
    p.add_argument("type")
    p.add_argument("--max-index", type=int, default=2)

    p = sub.add_parser("decompose", help="isotypic multiplicity table")
    p.add_argument("--h1", required=True, help="defining vector, simple-root coords")
    p.add_argument("--h2", help="second defining vector")
    p.add_argument("--refine", action="store_true")

    p = sub.add_parser("centralizer", help="centralizer of sl2 triples")
    p.add_argument("--h1", required=True)
    p.add_argument("--h2")

    p = sub.add_parser("reality", help="reality type of an irreducible")
    p.add_argument("type", help="e.g. B5 or A1xB4")
    p.add_argument("weight", help="fundamental coordinates, comma separated")

    sub.add_parser("nogo-dim", help="dimension counting obstruction")

    p = sub.add_parser("toe", help="full no-go report")
    p.add_argument("--mode", choices=("toe2", "toe2prime"), default="toe2")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = args.format
    seed = args.seed
    try:
        if args.command == "roots":
            return cmd_roots(args, fmt)
        if args.command == "sl2":
            return cmd_sl2(args, fmt, seed)
        if args.command == "decompose":
            return cmd_decompose(args, fmt, seed)
        if args.command == "centralizer":
            return cmd_centralizer(args, fmt, seed)
        if args.command == "reality":
            return cmd_reality(args, fmt)
        if args.command == "nogo-dim":
            return cmd_nogo_dim(fmt)
        if args.command == "toe":
            return cmd_toe(args, fmt, seed)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    return _usage(f"unknown command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
