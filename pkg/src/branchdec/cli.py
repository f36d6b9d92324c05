"""Command line interface.

Exit codes: 0 for a completed run (boolean answers are payload, never
process status), 1 for malformed input or broken catalog data, 2 for an
unknown algebra or pair id, 3 for questions the data cannot support or
enumeration beyond the rank bound.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .catalog import (
    CatalogBundle,
    CatalogError,
    UnknownIdError,
    load_catalog,
)
from .cone_kernel import PointednessError
from .decider import (
    QUESTIONS,
    answer_question,
    discretely_decomposable,
    rho_compat_check,
    symmetric_type_verdict,
    transitive_check,
    virtually_symmetric_verdict,
)
from .involution import (
    EmbeddingRecord,
    InvolutionData,
    InvolutionError,
    build_theta_involution,
)
from .parabolic import (
    DEFAULT_MAX_RANK,
    UnsupportedQuery,
    build_parabolic,
    enumerate_parabolics,
    is_symmetric_type,
    is_virtually_symmetric_type,
)
from .root_core import DatumError, parse_vector, vneg

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_UNKNOWN_ID = 2
EXIT_UNSUPPORTED = 3


class _ArgumentError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with its own code on bad flags; route through ours
    def error(self, message):
        raise _ArgumentError(message)


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2)


def _load(ns) -> CatalogBundle:
    path = Path(ns.catalog) if ns.catalog else None
    return load_catalog(path, force=ns.force)


def _parse_x(text: str, dim: int):
    return parse_vector(text, expect_dim=dim)


# ---------------------------------------------------------------------------
# subcommands


def cmd_catalog(ns) -> int:
    cat = _load(ns)
    if ns.format == "json":
        payload = {
            "version": cat.version,
            "checksum": cat.checksum,
            "algebras": cat.algebra_ids(),
            "pairs": cat.pair_ids(),
        }
        print(_dump_json(payload))
        return EXIT_OK
    print(f"catalog version {cat.version}")
    print(f"checksum {cat.checksum}")
    print("algebras:")
    for a in cat.algebra_ids():
        d = cat.algebra(a)
        print(f"  {a}  dim {d.dim_g}  rank {d.dim_t}")
    print("pairs:")
    for p in cat.pair_ids():
        pair = cat.pair(p)
        print(f"  {p}  dim' {pair.dim_gprime}")
    print("derived pairs: theta:<algebra>, swap:<doubled algebra>")
    return EXIT_OK


def _pair_payload(pair) -> dict:
    if isinstance(pair, InvolutionData):
        return {
            "id": pair.pair_id,
            "kind": "involution",
            "base": pair.base.name,
            "label": pair.label,
            "matrix": [[str(c) for c in row] for row in pair.matrix],
            "eps_entries": len(pair.eps),
            "zero_weight_fixed_dim": pair.zero_weight_fixed_dim,
            "dim_gprime": pair.dim_gprime,
            "dim_t_sigma": len(pair.t_sigma_basis()),
            "dim_t_minus_sigma": len(pair.t_minus_sigma_basis()),
            "table_rows": [
                {"X": [str(c) for c in r.x], "levi": r.levi}
                for r in pair.table_rows
            ],
        }
    assert isinstance(pair, EmbeddingRecord)
    return {
        "id": pair.pair_id,
        "kind": "embedding",
        "base": pair.base.name,
        "label": pair.label,
        "tprime_rows": [[str(c) for c in row] for row in pair.tprime_rows],
        "extra_zero_dim": pair.extra_zero_dim,
        "dim_gprime": pair.dim_gprime,
        "table_rows": [
            {"X": [str(c) for c in r.x], "levi": r.levi}
            for r in pair.table_rows
        ],
    }


def cmd_pair(ns) -> int:
    cat = _load(ns)
    pair = cat.pair(ns.pair)
    payload = _pair_payload(pair)
    if ns.format == "json":
        print(_dump_json(payload))
        return EXIT_OK
    print(f"{payload['id']}  ({payload['kind']})")
    print(f"  label: {payload['label']}")
    print(f"  base: {payload['base']}")
    print(f"  dim g': {payload['dim_gprime']}")
    if payload["kind"] == "involution":
        print("  matrix rows:")
        for row in payload["matrix"]:
            print("    " + " ".join(row))
        print(f"  sign entries: {payload['eps_entries']}")
        print(f"  dim t^sigma: {payload['dim_t_sigma']}"
              f"  dim t^-sigma: {payload['dim_t_minus_sigma']}")
    else:
        print("  subalgebra torus rows:")
        for row in payload["tprime_rows"]:
            print("    " + " ".join(row))
    for row in payload["table_rows"]:
        print(f"  table row: X={','.join(row['X'])}  levi {row['levi']}")
    return EXIT_OK


def cmd_parabolic(ns) -> int:
    cat = _load(ns)
    base = cat.algebra(ns.algebra)
    if ns.enumerate:
        qs = enumerate_parabolics(
            base, dominant_only=ns.dominant, max_rank=ns.max_rank
        )
        if ns.format == "json":
            print(_dump_json([q.describe() for q in qs]))
            return EXIT_OK
        print(f"{len(qs)} parabolic classes for {base.name}")
        for q in qs:
            d = q.describe()
            print(f"  X={','.join(d['X'])}  dim l {d['dim_levi']}"
                  f"  dim u {d['dim_u']}  S {d['S']}")
        return EXIT_OK
    if ns.x is None:
        raise DatumError("parabolic needs --X (or --enumerate)")
    q = build_parabolic(base, _parse_x(ns.x, base.ambient_dim))
    d = q.describe()
    d["symmetric_type"] = is_symmetric_type(q)
    d["virtually_symmetric_type"] = is_virtually_symmetric_type(q)
    if ns.format == "json":
        print(_dump_json(d))
        return EXIT_OK
    print(f"parabolic of {base.name} at X={','.join(d['X'])}")
    for key in ("dim_levi", "dim_u", "u_compact", "u_noncompact", "S"):
        print(f"  {key}: {d[key]}")
    print(f"  rho_u: {','.join(d['rho_u'])}")
    print(f"  symmetric type: {d['symmetric_type']}")
    print(f"  virtually symmetric: {d['virtually_symmetric_type']}")
    return EXIT_OK


def cmd_check(ns) -> int:
    cat = _load(ns)
    pair = cat.pair(ns.pair)
    q = build_parabolic(pair.base, _parse_x(ns.x, pair.base.ambient_dim))
    verdict = answer_question(pair, q, ns.question)
    payload = verdict.to_json_dict()
    if ns.format == "text":
        print(f"{verdict.question}: {str(verdict.answer).lower()}")
        for note in verdict.notes:
            print(f"  note: {note}")
    else:
        print(_dump_json(payload))
    return EXIT_OK


_CLASSIFY_COLUMNS = ("deco", "admissible", "transitive", "rho",
                     "symtype", "virtsym")


def _classify_cell(pair, q, question: str) -> str:
    try:
        verdict = answer_question(pair, q, question)
    except UnsupportedQuery:
        return "unsupported"
    return str(verdict.answer).lower()


def cmd_classify(ns) -> int:
    cat = _load(ns)
    pair = cat.pair(ns.pair)
    qs = enumerate_parabolics(
        pair.base, dominant_only=True, max_rank=ns.max_rank
    )
    rows = []
    for q in qs:
        cells = {c: _classify_cell(pair, q, c) for c in _CLASSIFY_COLUMNS}
        rows.append({
            "X": ",".join(str(c) for c in q.x),
            "dim_levi": q.dim_levi,
            "dim_u": q.dim_u,
            **cells,
        })
    if ns.format == "json":
        print(_dump_json({"pair": ns.pair, "rows": rows}))
        return EXIT_OK
    header = ["X", "dim_levi", "dim_u", *_CLASSIFY_COLUMNS]
    print("\t".join(header))
    for row in rows:
        print("\t".join(str(row[h]) for h in header))
    return EXIT_OK


def _verify_checks(cat: CatalogBundle, max_rank: int):
    """Yield (name, passed, detail) triples; order is deterministic."""
    for pid in cat.pair_ids():
        pair = cat.pair(pid)
        for row in pair.table_rows:
            for x in (row.x, vneg(row.x)):
                q = build_parabolic(pair.base, x)
                deco_note = ""
                try:
                    t = transitive_check(pair, q)
                    r = rho_compat_check(pair, q)
                    ok = t.answer and r.answer
                except UnsupportedQuery as exc:
                    ok, deco_note = False, str(exc)
                xs = ",".join(str(c) for c in x)
                yield (
                    f"table-row {pid} levi {row.levi} X={xs}",
                    ok,
                    deco_note,
                )
    for aid in cat.algebra_ids():
        base = cat.algebra(aid)
        if base.dim_t > 3:
            continue
        theta = build_theta_involution(base)
        qs = enumerate_parabolics(base, max_rank=max_rank)
        bad = 0
        for q in qs:
            if not discretely_decomposable(theta, q, validate=False).answer:
                bad += 1
        yield (
            f"theta-sweep {aid} ({len(qs)} parabolics)",
            bad == 0,
            "" if bad == 0 else f"{bad} failures",
        )


def cmd_verify(ns) -> int:
    try:
        cat = _load(ns)
    except CatalogError as exc:
        print(f"catalog-integrity: FAIL ({exc})")
        print("verify: 1 check, 1 failed")
        return 1
    print("catalog-integrity: PASS")
    total, failed = 1, 0
    checks = _verify_checks(cat, ns.max_rank)
    while True:
        # time the lazy production of the next check, not just the print
        t0 = time.monotonic()
        try:
            name, ok, detail = next(checks)
        except StopIteration:
            break
        elapsed = (time.monotonic() - t0) * 1000
        total += 1
        tag = "PASS" if ok else "FAIL"
        suffix = f" ({detail})" if detail and not ok else ""
        print(f"{name}: {tag}{suffix}")
        if not ok:
            failed += 1
        print(f"  [{name}] {elapsed:.1f} ms", file=sys.stderr)
    if failed:
        print(f"verify: {total} checks, {failed} failed")
        return 1
    print(f"verify: {total} checks, all passed")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser and dispatch


def build_arg_parser() -> _Parser:
    parser = _Parser(prog="branchdec", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: _Parser) -> None:
        p.add_argument("--catalog", default=None,
                       help="catalog directory (default: packaged data or "
                            "BRANCHDEC_CATALOG)")
        p.add_argument("--force", action="store_true",
                       help="load the catalog even if integrity checks fail")
        p.add_argument("--format", choices=("json", "tsv", "text"),
                       default="text")

    p = sub.add_parser("catalog", help="list catalog contents")
    common(p)
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("pair", help="show one pair record")
    common(p)
    p.add_argument("--pair", required=True)
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("parabolic", help="inspect or enumerate parabolics")
    common(p)
    p.add_argument("--algebra", required=True)
    p.add_argument("--X", dest="x", default=None,
                   help="defining element, comma separated rationals")
    p.add_argument("--enumerate", action="store_true")
    p.add_argument("--dominant", action="store_true")
    p.add_argument("--max-rank", type=int, default=DEFAULT_MAX_RANK)
    p.set_defaults(func=cmd_parabolic)

    p = sub.add_parser("check", help="answer one question for one parabolic")
    common(p)
    p.add_argument("--pair", required=True)
    p.add_argument("--X", dest="x", required=True)
    p.add_argument("--question", required=True, choices=QUESTIONS)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("classify",
                       help="all questions for all dominant parabolics")
    common(p)
    p.add_argument("--pair", required=True)
    p.add_argument("--max-rank", type=int, default=DEFAULT_MAX_RANK)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="run the catalog verification report")
    common(p)
    p.add_argument("--max-rank", type=int, default=DEFAULT_MAX_RANK)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_arg_parser()
    try:
        ns = parser.parse_args(argv)
    except _ArgumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return ns.func(ns)
    except UnknownIdError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN_ID
    except UnsupportedQuery as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (CatalogError, DatumError, InvolutionError,
            PointednessError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
