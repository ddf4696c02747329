"""Command-line pipelines: generate, oracle, construct, verify, check-theorems.

All commands read and write the JSON documents of :mod:`boxdim.docio`;
``-`` names standard input.  Exit codes: 0 success, 1 verification failure,
2 usage or format error, 3 oracle limit exceeded.
"""

from __future__ import annotations

import argparse
import sys

from .boxes import BoxRepresentation, box_representation_violation, brute_boxicity
from .constructions import (base_box_from_cover, bip_box_from_cobip, box_from_realizer,
                            cobip_box_from_bip, cover_box_from_base,
                            extended_double_cover, natural_height2_poset,
                            realizer_from_box)
from .docio import DocumentError, parse, serialize, to_document
from .generators import (complete_multipartite, crown, hypercube, kn_minus_matching,
                         random_graph, random_height2)
from .graphs import (Graph, bipartition_of, brute_chromatic, chain_length_coloring,
                     transitive_orientation, underlying_comparability_graph)
from .limits import DEFAULT_LIMITS, OracleLimitError
from .posets import Poset, Realizer, brute_dimension, realizer_violation

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _load(path: str, kinds: tuple[type, ...]):
    obj = parse(_read(path))
    if not isinstance(obj, kinds):
        names = " or ".join(k.__name__ for k in kinds)
        raise UsageError(f"{path}: expected a {names} document")
    return obj


def _emit(obj) -> None:
    sys.stdout.write(serialize(obj))


def _report(payload: dict) -> None:
    _emit({"kind": "report", "version": "1", "payload": payload})


# ---------------------------------------------------------------------------
# generate
# ---------------------------------------------------------------------------

def _cmd_generate(args) -> int:
    family = args.family
    params = args.params
    want = args.as_kind

    def ints(count):
        if len(params) != count:
            raise UsageError(f"{family} takes {count} parameter(s)")
        try:
            return [int(x) for x in params]
        except ValueError as exc:
            raise UsageError(f"{family}: parameters must be integers") from exc

    def int_and_prob():
        if len(params) != 2:
            raise UsageError(f"{family} takes <n> <p>")
        try:
            return int(params[0]), float(params[1])
        except ValueError as exc:
            raise UsageError(f"{family}: expected an integer and a probability") from exc

    try:
        if family == "crown":
            (n,) = ints(1)
            obj = crown(n)
        elif family == "multipartite":
            k, q = ints(2)
            graph, poset = complete_multipartite(k, q)
            obj = graph if want == "graph" else poset
        elif family == "kn-minus-matching":
            (n,) = ints(1)
            graph, poset = kn_minus_matching(n)
            obj = graph if want == "graph" else poset
        elif family == "hypercube":
            (d,) = ints(1)
            if want == "poset":
                raise UsageError("hypercube produces a graph document")
            obj = hypercube(d)
        elif family == "random-height2":
            n, p = int_and_prob()
            obj = random_height2(n, p, args.seed)
        elif family == "random-graph":
            n, p = int_and_prob()
            if want == "poset":
                raise UsageError("random-graph produces a graph document")
            obj = random_graph(n, p, args.seed)
        else:
            raise UsageError(f"unknown family {family!r}")
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if want == "graph" and isinstance(obj, Poset):
        obj = underlying_comparability_graph(obj)
    _emit(obj)
    return EXIT_OK


# ---------------------------------------------------------------------------
# oracle
# ---------------------------------------------------------------------------

def _as_graph(obj) -> Graph:
    return obj if isinstance(obj, Graph) else underlying_comparability_graph(obj)


def _as_poset(obj, path: str) -> Poset:
    if isinstance(obj, Poset):
        return obj
    oriented = transitive_orientation(obj)
    if oriented is None:
        raise UsageError(f"{path}: graph admits no transitive orientation")
    return oriented


def _cmd_oracle(args) -> int:
    obj = _load(args.file, (Graph, Poset))
    if args.quantity == "boxicity":
        result = brute_boxicity(_as_graph(obj), max_n=args.limit)
        witness = to_document(result.witness)
    elif args.quantity == "dimension":
        result = brute_dimension(_as_poset(obj, args.file), max_n=args.limit)
        witness = to_document(result.witness)
    else:
        result = brute_chromatic(_as_graph(obj), max_n=args.limit)
        witness = {"colors": {str(v): c for v, c in sorted(result.witness.color.items())}}
    _report({"oracle": args.quantity, "value": result.value, "witness": witness})
    return EXIT_OK


# ---------------------------------------------------------------------------
# construct
# ---------------------------------------------------------------------------

def _parts_of(graph: Graph, path: str):
    parts = bipartition_of(graph)
    if parts is None:
        raise UsageError(f"{path}: graph is not bipartite")
    return parts


def _cmd_construct(args) -> int:
    op = args.operation
    files = args.files

    def need(count, usage):
        if len(files) != count:
            raise UsageError(f"construct {op} takes {usage}")

    try:
        if op == "realizer-from-box":
            need(2, "<poset> <box-rep>")
            p = _load(files[0], (Poset,))
            b = _load(files[1], (BoxRepresentation,))
            _emit(realizer_from_box(p, b))
        elif op == "box-from-realizer":
            need(2, "<poset> <realizer>")
            p = _load(files[0], (Poset,))
            r = _load(files[1], (Realizer,))
            _emit(box_from_realizer(p, r, chain_length_coloring(p)))
        elif op == "double-cover":
            need(1, "<graph>")
            g = _load(files[0], (Graph,))
            cover, _ = extended_double_cover(g)
            _emit(cover)
        elif op == "cover-box":
            need(2, "<graph> <box-rep>")
            g = _load(files[0], (Graph,))
            b = _load(files[1], (BoxRepresentation,))
            _emit(cover_box_from_base(g, b))
        elif op == "base-box":
            need(2, "<graph> <box-rep-of-cover>")
            g = _load(files[0], (Graph,))
            b = _load(files[1], (BoxRepresentation,))
            _emit(base_box_from_cover(g, b))
        elif op == "bip-from-cobip":
            need(2, "<bipartite-graph> <box-rep-of-completion>")
            h = _load(files[0], (Graph,))
            b = _load(files[1], (BoxRepresentation,))
            _emit(bip_box_from_cobip(h, _parts_of(h, files[0]), b))
        elif op == "cobip-from-bip":
            need(2, "<bipartite-graph> <box-rep>")
            h = _load(files[0], (Graph,))
            b = _load(files[1], (BoxRepresentation,))
            _emit(cobip_box_from_bip(h, _parts_of(h, files[0]), b))
        else:
            raise UsageError(f"unknown construction {op!r}")
    except ValueError as exc:
        # Semantically invalid inputs (failed preconditions) are verification
        # failures of the supplied data, not usage errors.
        _report({"ok": False, "error": str(exc)})
        return EXIT_VERIFY
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _cmd_verify(args) -> int:
    if args.what == "box-rep":
        if len(args.files) != 1:
            raise UsageError("verify box-rep takes <box-rep>")
        box = _load(args.files[0], (BoxRepresentation,))
        violation = box_representation_violation(box)
    else:
        if len(args.files) != 2:
            raise UsageError("verify realizer takes <realizer> <poset>")
        realizer = _load(args.files[0], (Realizer,))
        poset = _load(args.files[1], (Poset,))
        try:
            violation = realizer_violation(poset, realizer)
        except ValueError as exc:
            violation = str(exc)
    _report({"subject": args.what, "ok": violation is None, "violation": violation})
    return EXIT_OK if violation is None else EXIT_VERIFY


# ---------------------------------------------------------------------------
# check-theorems
# ---------------------------------------------------------------------------

def _is_height2(p: Poset) -> bool:
    return all(not p._pred[v] or not p._succ[v] for v in range(1, p.n + 1))


def _poset_checks(p: Poset, limit: int | None, checks: list, values: dict) -> None:
    dim_cap = limit if limit is not None else max(DEFAULT_LIMITS.dimension_max_n, p.n)
    box_cap = limit if limit is not None else max(DEFAULT_LIMITS.boxicity_max_n, p.n)
    chrom_cap = limit if limit is not None else max(DEFAULT_LIMITS.chromatic_max_n, p.n)
    dim = brute_dimension(p, max_n=dim_cap)
    graph = underlying_comparability_graph(p)
    box = brute_boxicity(graph, max_n=box_cap)
    chi = brute_chromatic(graph, max_n=chrom_cap)
    values.update({"dimension": dim.value, "boxicity": box.value,
                   "chromatic": chi.value})
    chain = p.is_chain()

    if dim.value > 1:
        ok = dim.value <= 2 * box.value
        checks.append({"name": "dimension <= 2 * boxicity", "ok": ok,
                       "tight": dim.value == 2 * box.value})
    else:
        checks.append({"name": "dimension <= 2 * boxicity",
                       "skipped": "dimension 1 (total order)"})

    if chi.value >= 2:
        checks.append({"name": "boxicity <= (chromatic - 1) * dimension",
                       "ok": box.value <= (chi.value - 1) * dim.value})
    else:
        checks.append({"name": "boxicity <= (chromatic - 1) * dimension",
                       "skipped": "single color class"})

    realizer = realizer_from_box(p, box.witness)
    expected = 1 if chain else 2 * box.value
    checks.append({"name": "realizer built from optimal box witness verifies",
                   "ok": len(realizer) == expected, "size": len(realizer)})

    if not chain and chi.value >= 2:
        built = box_from_realizer(p, dim.witness, chain_length_coloring(p))
        checks.append({"name": "box representation built from optimal realizer verifies",
                       "ok": len(built) == (chi.value - 1) * dim.value,
                       "size": len(built)})
    else:
        checks.append({"name": "box representation built from optimal realizer verifies",
                       "skipped": "total order or single color class"})

    if _is_height2(p) and p.relation and not chain:
        checks.append({"name": "height-2 sandwich: boxicity <= dimension <= 2 * boxicity",
                       "ok": box.value <= dim.value <= 2 * box.value})


def _graph_checks(g: Graph, limit: int | None, checks: list, values: dict) -> None:
    box_cap = limit if limit is not None else max(DEFAULT_LIMITS.boxicity_max_n, g.n)
    box = brute_boxicity(g, max_n=box_cap)
    values["boxicity"] = box.value

    parts = bipartition_of(g)
    if parts is not None:
        from .constructions import associated_cobipartite
        star = associated_cobipartite(g, parts)
        star_box = brute_boxicity(star, max_n=box_cap)
        values["completion_boxicity"] = star_box.value
        if star_box.value <= 1:
            checks.append({"name": "interval completion gives boxicity <= 2",
                           "ok": box.value <= 2})
        else:
            checks.append({"name": "completion sandwich: box*/2 <= box <= box*",
                           "ok": star_box.value <= 2 * box.value
                           and box.value <= star_box.value})
        rebuilt = bip_box_from_cobip(g, parts, star_box.witness)
        checks.append({"name": "bipartite representation rebuilt from completion verifies",
                       "ok": len(rebuilt) == max(2, max(star_box.value, 1)),
                       "size": len(rebuilt)})

    cover, cmap = extended_double_cover(g)
    cover_cap = limit if limit is not None else DEFAULT_LIMITS.boxicity_max_n
    if cover.n <= cover_cap:
        cover_box = brute_boxicity(cover, max_n=cover_cap)
        values["cover_boxicity"] = cover_box.value
        checks.append({"name": "cover sandwich: box/2 <= cover box <= box + 2",
                       "ok": 2 * cover_box.value >= box.value
                       and cover_box.value <= box.value + 2})
        built = cover_box_from_base(g, box.witness)
        checks.append({"name": "cover representation built from base verifies",
                       "ok": len(built) == box.value + 2, "size": len(built)})
        back = base_box_from_cover(g, cover_box.witness)
        checks.append({"name": "base representation rebuilt from cover verifies",
                       "ok": len(back) <= 2 * max(cover_box.value, 1), "size": len(back)})
        dim_cap = limit if limit is not None else DEFAULT_LIMITS.dimension_max_n
        if cover.n <= dim_cap and g.n > 1:
            cover_order = natural_height2_poset(cover, cmap.parts)
            cover_dim = brute_dimension(cover_order, max_n=dim_cap)
            values["cover_dimension"] = cover_dim.value
            checks.append({"name": "cover order sandwich: dim/2 - 2 <= box <= 2 * dim",
                           "ok": cover_dim.value / 2 - 2 <= box.value
                           <= 2 * cover_dim.value})
    else:
        checks.append({"name": "extended double cover checks",
                       "skipped": f"cover has {cover.n} vertices; rerun with "
                                  f"--limit {cover.n}"})

    oriented = transitive_orientation(g)
    if oriented is not None and not g.is_complete():
        _poset_checks(oriented, limit, checks, values)


def _cmd_check(args) -> int:
    obj = _load(args.file, (Graph, Poset))
    checks: list[dict] = []
    values: dict = {"input": "poset" if isinstance(obj, Poset) else "graph",
                    "n": obj.n}
    if isinstance(obj, Poset):
        _poset_checks(obj, args.limit, checks, values)
    else:
        _graph_checks(obj, args.limit, checks, values)
    ok = all(c.get("ok", True) for c in checks)
    _report({**values, "checks": checks, "ok": ok})
    return EXIT_OK if ok else EXIT_VERIFY


# ---------------------------------------------------------------------------
# entry points
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boxdim",
        description="Box representations, realizers, and exact oracles over "
                    "JSON documents ('-' reads standard input).")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="emit a named instance as a document")
    gen.add_argument("family",
                     choices=["crown", "multipartite", "kn-minus-matching",
                              "hypercube", "random-height2", "random-graph"])
    gen.add_argument("params", nargs="*")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--as", dest="as_kind", choices=["graph", "poset"], default=None)
    gen.set_defaults(func=_cmd_generate)

    orc = sub.add_parser("oracle", help="exact value plus witness")
    orc.add_argument("quantity", choices=["boxicity", "dimension", "chromatic"])
    orc.add_argument("file")
    orc.add_argument("--limit", type=int, default=None)
    orc.set_defaults(func=_cmd_oracle)

    con = sub.add_parser("construct", help="run a constructive transformation")
    con.add_argument("operation",
                     choices=["realizer-from-box", "box-from-realizer", "double-cover",
                              "cover-box", "base-box", "bip-from-cobip", "cobip-from-bip"])
    con.add_argument("files", nargs="*")
    con.set_defaults(func=_cmd_construct)

    ver = sub.add_parser("verify", help="check a certificate, report pass/fail")
    ver.add_argument("what", choices=["box-rep", "realizer"])
    ver.add_argument("files", nargs="*")
    ver.set_defaults(func=_cmd_verify)

    chk = sub.add_parser("check-theorems",
                         help="run all applicable bound checks on an instance")
    chk.add_argument("file")
    chk.add_argument("--limit", type=int, default=None)
    chk.set_defaults(func=_cmd_check)
    return parser


def cli_main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except OracleLimitError as exc:
        print(f"boxdim: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (DocumentError, UsageError) as exc:
        print(f"boxdim: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(cli_main())
