"""The ``isola`` command.

Each subcommand reads its arguments, calls one library function and prints
compact JSON (or text/DOT where ``--format`` allows). Vertices are numbered
from 1 on the command line and in every output.

Exit status: 0 on success, 1 on malformed input or a domain error (the error
is printed as ``{"error": ...}``), 2 when ``verify`` finds a failing law.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Any, Sequence

from . import __version__
from .cograph import CographError, classify, copaw, is_cograph, neg, paw, sum_cographs
from .cotree import FLAVORS, canonical_key, count_cographs, enumerate_cographs, is_isomorphic
from .factorization import BundleData, GrassmannianFamily, hecke
from .io import (
    FormatError,
    _label,
    category_to_json,
    dumps,
    expr_to_json,
    graph_to_graph6,
    graph_to_json,
    graph_to_text,
    jsonable,
    map_from_json,
    map_to_json,
    one_to_json,
    one_to_text,
    poset_to_dot,
    poset_to_json,
    poset_to_text,
)
from .io import read_graph as _read_graph
from .isolability import IsolabilityError, IsolabilityObject, PointIsolation, SubsetIsolation, skeleton, tensor
from .line import DiscreteFamily, K_poset, LineFamily, line_poset, ran_unital, tensor_line
from .morphism import MorphismError, classify_map, factor_da, hom_count, hom_enumerate, hom_hop, hom_vop
from .onecograph import count_one_structures, one_structures
from .poset import FinitePoset, PosetError

__all__ = ["main", "build_parser"]


class UsageError(Exception):
    """Bad command-line usage; reported like any other input error."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with 2, which means "law failed" here
        raise UsageError(message)


def _graph(text: str, *, check: bool = True):
    return _read_graph(text, check=check)


def _emit(obj: Any) -> None:
    sys.stdout.write(dumps(obj) + "\n")


def _points(k: int) -> list[int]:
    return list(range(1, k + 1))


def _observers(args: argparse.Namespace) -> IsolabilityObject:
    pts = _points(args.points)
    if args.subsets:
        return SubsetIsolation(pts, nonempty=args.nonempty)
    return PointIsolation(pts)


def _carrier_out(lam, configs: Sequence[Any], count_only: bool) -> dict:
    out: dict[str, Any] = {"lambda": graph_to_json(lam), "count": len(configs)}
    if not count_only:
        out["configs"] = jsonable(list(configs))
    return out


def _poset_out(p: FinitePoset, args: argparse.Namespace, title: str) -> None:
    if getattr(args, "png", None):
        from .plotting import hasse_png

        hasse_png(p, args.png, _label, title)
    if args.format == "dot":
        sys.stdout.write(poset_to_dot(p))
    elif args.format == "text":
        sys.stdout.write(poset_to_text(p))
    else:
        _emit({"size": len(p), **poset_to_json(p)})


# -- handlers ----------------------------------------------------------------------------


def cmd_check(args: argparse.Namespace) -> int:
    _emit({"cograph": is_cograph(_graph(args.graph, check=False))})
    return 0


def cmd_canon(args: argparse.Namespace) -> int:
    c = _graph(args.graph)
    if args.format == "text":
        print(canonical_key(c))
    else:
        _emit({"key": canonical_key(c), "cotree": expr_to_json(c)})
    return 0


def cmd_iso(args: argparse.Namespace) -> int:
    _emit({"isomorphic": is_isomorphic(_graph(args.graph), _graph(args.other))})
    return 0


def _graph_out(c, fmt: str) -> None:
    if fmt == "text":
        print(graph_to_text(c))
    elif fmt == "graph6":
        print(graph_to_graph6(c))
    else:
        _emit(graph_to_json(c))


def cmd_neg(args: argparse.Namespace) -> int:
    _graph_out(neg(_graph(args.graph)), args.format)
    return 0


def cmd_sum(args: argparse.Namespace) -> int:
    _graph_out(sum_cographs(args.kind, [_graph(g) for g in args.graph]), args.format)
    return 0


def cmd_depth(args: argparse.Namespace) -> int:
    k = classify(_graph(args.graph))
    _emit(
        {
            "depth": k.depth,
            "codepth": k.codepth,
            "irreflexive": k.irreflexive,
            "reflexive": k.reflexive,
            "apartness": k.apartness,
            "equivalence": k.equivalence,
            "connected": k.connected,
            "coconnected": k.coconnected,
        }
    )
    return 0


def cmd_paws(args: argparse.Namespace) -> int:
    if args.k < 1:
        raise CographError("k must be at least 1")
    _graph_out((copaw if args.co else paw)(args.k), args.format)
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    if args.n < 0:
        raise CographError("n must be non-negative")
    if args.count:
        _emit({"count": count_cographs(args.n, args.flavor, method=args.method)})
        return 0
    cs = enumerate_cographs(args.n, args.flavor, method=args.method)
    if args.format == "text":
        for c in cs:
            print(graph_to_text(c))
    else:
        _emit({"count": len(cs), "cographs": [graph_to_json(c) for c in cs]})
    return 0


def _span_json(s) -> dict:
    return {"apex": graph_to_json(s.apex), "back": [v + 1 for v in s.back.f], "forward": [v + 1 for v in s.forward.f]}


def cmd_hom(args: argparse.Namespace) -> int:
    a, b = _graph(args.src), _graph(args.tgt)
    if args.kind == "map":
        if args.count:
            _emit({"count": hom_count(a, b)})
        else:
            maps = [[v + 1 for v in m.f] for m in hom_enumerate(a, b)]
            _emit({"count": len(maps), "maps": maps})
        return 0
    spans = (hom_vop if args.kind == "vop" else hom_hop)(a, b)
    out: dict[str, Any] = {"count": len(spans)}
    if not args.count:
        out["spans"] = [_span_json(s) for s in spans]
    _emit(out)
    return 0


def cmd_factor(args: argparse.Namespace) -> int:
    try:
        data = json.loads(args.map)
    except json.JSONDecodeError as exc:
        raise FormatError(f"bad JSON: {exc}") from None
    m = map_from_json(data)
    disp, accr = factor_da(m)
    cls = classify_map(m)
    _emit(
        {
            "class": {k: getattr(cls, k) for k in ("dispersive", "accretive", "surjective", "injective", "fibration", "attached")},
            "dispersive": map_to_json(disp),
            "accretive": map_to_json(accr),
        }
    )
    return 0


def cmd_one_structures(args: argparse.Namespace) -> int:
    lam = _graph(args.graph)
    if args.count:
        _emit({"count": count_one_structures(lam)})
        return 0
    gs = one_structures(lam)
    if args.format == "text":
        for g in gs:
            print(one_to_text(g))
    else:
        _emit({"count": len(gs), "structures": [one_to_json(g) for g in gs]})
    return 0


def cmd_points(args: argparse.Namespace) -> int:
    lam = _graph(args.graph)
    _emit(_carrier_out(lam, _observers(args).carrier(lam), args.count))
    return 0


def cmd_skeleton(args: argparse.Namespace) -> int:
    lam = _graph(args.graph)
    _emit(_carrier_out(lam, skeleton(args.k, _observers(args)).carrier(lam), args.count))
    return 0


def cmd_tensor(args: argparse.Namespace) -> int:
    lam = _graph(args.graph)
    obj = tensor(PointIsolation(_points(args.points)), PointIsolation(_points(args.other)))
    _emit(_carrier_out(lam, obj.carrier(lam), args.count))
    return 0


def cmd_kposet(args: argparse.Namespace) -> int:
    _poset_out(K_poset(_graph(args.graph)), args, "K")
    return 0


def cmd_line(args: argparse.Namespace) -> int:
    lam = _graph(args.graph)
    if args.dim < 1:
        raise CographError("dim must be at least 1")
    p = line_poset(lam) if args.dim == 1 else tensor_line(args.dim, lam)
    _poset_out(p, args, "L" if args.dim == 1 else f"L^{args.dim}")
    return 0


def cmd_ran(args: argparse.Namespace) -> int:
    fam = LineFamily() if args.family == "line" else DiscreteFamily(PointIsolation(_points(args.points)))
    cat = ran_unital(fam, args.n)
    _emit(category_to_json(cat, lambda o: {"n": o[0], "x": jsonable(o[1])}, table=args.table))
    return 0


def _bundle(args: argparse.Namespace) -> BundleData:
    if args.points < 0 or args.fiber < 1:
        raise IsolabilityError("need points >= 0 and fiber >= 1")
    return BundleData.constant(_points(args.points), [chr(ord("a") + i) for i in range(args.fiber)])


def cmd_hecke(args: argparse.Namespace) -> int:
    lam = _graph(args.graph)
    _emit(_carrier_out(lam, hecke(_bundle(args)).carrier(lam), args.count))
    return 0


def cmd_grass(args: argparse.Namespace) -> int:
    lam = _graph(args.graph)
    bd = _bundle(args)
    section = tuple(args.section.split(",")) if args.section else bd.bun()[0]
    _emit(_carrier_out(lam, GrassmannianFamily(bd, section).carrier(lam), args.count))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    from .laws import UnknownLawError, run_suite

    bounds_file = args.bounds or os.environ.get("ISOLA_BOUNDS")
    overrides: dict = {}
    if bounds_file:
        try:
            overrides = json.loads(Path(bounds_file).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise FormatError(f"cannot read bounds file: {exc}") from None
        if not isinstance(overrides, dict) or not all(isinstance(v, dict) for v in overrides.values()):
            raise FormatError("bounds file must map law ids to objects")
    try:
        rep = run_suite(args.laws, overrides, mutation_seed=args.mutate, jobs=args.jobs)
    except UnknownLawError as exc:
        raise FormatError(f"unknown law {exc.args[0]!r}") from None
    if not rep.results:
        raise FormatError("the law filter selected nothing")
    if args.report_dir:
        out = Path(args.report_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "report.json").write_text(dumps(rep.to_json()) + "\n", encoding="utf-8")
        (out / "report.txt").write_text(rep.to_text(), encoding="utf-8")
    fig_dir = args.figures or args.report_dir
    if fig_dir:
        from .plotting import runtime_chart

        Path(fig_dir).mkdir(parents=True, exist_ok=True)
        runtime_chart(rep.results, Path(fig_dir) / "law_runtimes.png")
    if args.format == "text":
        sys.stdout.write(rep.to_text())
    else:
        # runtimes vary between runs; they go to the report files only
        _emit(rep.to_json(timings=False))
    return 0 if rep.passed else 2


# -- parser -----------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="isola", description="Finite cographs, isolability structures and their law checks.")
    p.add_argument("--version", action="version", version=f"isola {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(name: str, fn, help_: str, formats: Sequence[str] = ("json",)) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_, description=help_)
        sp.set_defaults(fn=fn)
        if len(formats) > 1:
            sp.add_argument("--format", choices=formats, default="json")
        else:
            sp.set_defaults(format="json")
        return sp

    graph_help = 'cograph as "n=3; edges=1-2; loops=1", JSON, a cotree encoding or graph6'

    sp = cmd("check", cmd_check, "Is the relation a cograph?")
    sp.add_argument("--graph", required=True, help=graph_help)

    sp = cmd("canon", cmd_canon, "Canonical cotree of a cograph", ("json", "text"))
    sp.add_argument("--graph", required=True, help=graph_help)

    sp = cmd("iso", cmd_iso, "Are two cographs isomorphic?")
    sp.add_argument("--graph", required=True, help=graph_help)
    sp.add_argument("--other", required=True, help=graph_help)

    sp = cmd("neg", cmd_neg, "Negation (complement including loops)", ("json", "text", "graph6"))
    sp.add_argument("--graph", required=True, help=graph_help)

    sp = cmd("sum", cmd_sum, "Connected or co-connected sum of cographs", ("json", "text", "graph6"))
    sp.add_argument("--kind", choices=("csum", "dsum"), required=True, help="dsum: no cross edges; csum: all cross edges")
    sp.add_argument("--graph", action="append", required=True, help="repeat once per summand")

    sp = cmd("depth", cmd_depth, "Depth, co-depth and class membership")
    sp.add_argument("--graph", required=True, help=graph_help)

    sp = cmd("paws", cmd_paws, "The k-th paw or co-paw", ("json", "text", "graph6"))
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--co", action="store_true", help="the co-paw instead")

    sp = cmd("enumerate", cmd_enumerate, "Cographs on n vertices up to isomorphism", ("json", "text"))
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--flavor", choices=FLAVORS, default="irr")
    sp.add_argument("--method", choices=("cotree", "filter"), default="cotree")
    sp.add_argument("--count", action="store_true")

    sp = cmd("hom", cmd_hom, "Maps, or vertical/horizontal spans, between two cographs")
    sp.add_argument("--src", required=True, help=graph_help)
    sp.add_argument("--tgt", required=True, help=graph_help)
    sp.add_argument("--kind", choices=("map", "vop", "hop"), default="map")
    sp.add_argument("--count", action="store_true")

    sp = cmd("factor", cmd_factor, "Dispersive/accretive factorization of a map")
    sp.add_argument("--map", required=True, help='JSON {"src":..,"tgt":..,"f":[..]}')

    sp = cmd("one-structures", cmd_one_structures, "1-structures (orientations that are 1-cographs)", ("json", "text"))
    sp.add_argument("--graph", required=True, help=graph_help)
    sp.add_argument("--count", action="store_true")

    def observers(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--points", type=int, required=True, help="number of points, named 1..k")
        sp.add_argument("--subsets", action="store_true", help="isolate subsets of the points instead")
        sp.add_argument("--nonempty", action="store_true", help="with --subsets: forbid the empty subset")

    sp = cmd("points", cmd_points, "Configurations of isolated points over a cograph")
    sp.add_argument("--graph", required=True, help=graph_help)
    observers(sp)
    sp.add_argument("--count", action="store_true")

    sp = cmd("skeleton", cmd_skeleton, "The k-skeleton of point or subset isolation over a cograph")
    sp.add_argument("--graph", required=True, help=graph_help)
    sp.add_argument("--k", type=int, required=True)
    observers(sp)
    sp.add_argument("--count", action="store_true")

    sp = cmd("tensor", cmd_tensor, "Tensor product of two point isolations over a cograph")
    sp.add_argument("--graph", required=True, help=graph_help)
    sp.add_argument("--points", type=int, required=True)
    sp.add_argument("--other", type=int, required=True, help="points of the second factor")
    sp.add_argument("--count", action="store_true")

    sp = cmd("kposet", cmd_kposet, "Loop-free cographs containing a cograph, by inclusion", ("json", "text", "dot"))
    sp.add_argument("--graph", required=True, help=graph_help)
    sp.add_argument("--png", help="also draw the Hasse diagram to this file")

    sp = cmd("line", cmd_line, "The isolability line (or a tensor power) over a cograph", ("json", "text", "dot"))
    sp.add_argument("--graph", required=True, help=graph_help)
    sp.add_argument("--dim", type=int, default=1)
    sp.add_argument("--png", help="also draw the Hasse diagram to this file")

    sp = cmd("ran", cmd_ran, "Truncated unital Ran category")
    sp.add_argument("--n", type=int, required=True, help="largest number of points")
    sp.add_argument("--family", choices=("line", "points"), default="line")
    sp.add_argument("--points", type=int, default=2, help="with --family points: how many points")
    sp.add_argument("--table", action="store_true", help="include the composition table")

    def bundle(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--graph", required=True, help=graph_help)
        sp.add_argument("--points", type=int, required=True, help="points of the base, named 1..k")
        sp.add_argument("--fiber", type=int, required=True, help="fiber size; elements are named a, b, ...")
        sp.add_argument("--count", action="store_true")

    sp = cmd("hecke", cmd_hecke, "Hecke modifications over a configuration")
    bundle(sp)

    sp = cmd("grass", cmd_grass, "Grassmannian fiber over a fixed bundle")
    bundle(sp)
    sp.add_argument("--section", help="the fixed bundle as comma separated fiber names (default: the first)")

    sp = cmd("verify", cmd_verify, "Run the law suite", ("json", "text"))
    sp.add_argument("--laws", default="*", help="comma separated ids or globs, e.g. 'CG-*,LINE-RAN-HOM'")
    sp.add_argument("--bounds", help="JSON file overriding bounds (default: $ISOLA_BOUNDS)")
    sp.add_argument("--mutate", type=int, metavar="SEED", help="corrupt one carrier per mutable law")
    sp.add_argument("--jobs", type=int, default=1, help="worker processes")
    sp.add_argument("--report-dir", help="write report.json, report.txt and law_runtimes.png here")
    sp.add_argument("--figures", help="write law_runtimes.png here")
    return p


_DOMAIN_ERRORS = (FormatError, CographError, MorphismError, IsolabilityError, PosetError, UsageError)


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "jobs", 1) < 1:
            raise UsageError("--jobs must be at least 1")
        return args.fn(args)
    except _DOMAIN_ERRORS as exc:
        _emit({"error": str(exc), "kind": type(exc).__name__})
        return 1


if __name__ == "__main__":
    sys.exit(main())
