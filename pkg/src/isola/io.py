"""Reading and writing cographs, maps, posets and configurations.

Every external format numbers vertices from 1; internally they start at 0.
The text form of a cograph is ``n=<k>; edges=i-j,...; loops=i,...``. JSON
output is compact with a fixed field order so that equal values always
serialise to equal bytes.
"""

from __future__ import annotations

import json
import re
from typing import Any, Callable, Sequence

import networkx as nx

from .cograph import Cograph, CographError
from .cotree import Leaf, Node, canonical_form, from_expr, parse_expr
from .morphism import GraphMap, PartialGraphMap
from .onecograph import OneCograph
from .poset import FiniteCategory, FinitePoset, WeakOrder

__all__ = [
    "FormatError",
    "dumps",
    "parse_graph_text",
    "graph_to_text",
    "graph_to_json",
    "graph_from_json",
    "graph_from_graph6",
    "graph_to_graph6",
    "read_graph",
    "expr_to_json",
    "map_to_json",
    "map_from_json",
    "partial_to_json",
    "partial_from_json",
    "one_to_json",
    "one_from_json",
    "one_to_text",
    "weak_order_from_text",
    "poset_to_json",
    "poset_from_json",
    "poset_to_dot",
    "poset_to_text",
    "category_to_json",
    "config_to_json",
    "config_from_json",
    "jsonable",
]


class FormatError(ValueError):
    """Malformed external input."""


def dumps(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


# -- cographs -----------------------------------------------------------------------

_PAIR = re.compile(r"^\s*(\d+)\s*-\s*(\d+)\s*$")


def _vertex(tok: str, n: int) -> int:
    tok = tok.strip()
    if not tok.isdigit():
        raise FormatError(f"bad vertex {tok!r}")
    v = int(tok)
    if not 1 <= v <= n:
        raise FormatError(f"vertex {v} out of range 1..{n}")
    return v - 1


def parse_graph_text(text: str, *, check: bool = False) -> Cograph:
    """Parse ``n=4; edges=1-2,2-3; loops=1``. Fields other than ``n`` are optional."""
    fields: dict[str, str] = {}
    for part in text.split(";"):
        if not part.strip():
            continue
        if "=" not in part:
            raise FormatError(f"expected key=value, got {part.strip()!r}")
        key, val = part.split("=", 1)
        key = key.strip().lower()
        if key not in ("n", "edges", "loops"):
            raise FormatError(f"unknown field {key!r}")
        if key in fields:
            raise FormatError(f"field {key!r} given twice")
        fields[key] = val.strip()
    if "n" not in fields or not fields["n"].isdigit():
        raise FormatError("missing or bad vertex count n")
    n = int(fields["n"])
    edges = []
    for tok in filter(None, (t.strip() for t in fields.get("edges", "").split(","))):
        m = _PAIR.match(tok)
        if not m:
            raise FormatError(f"bad edge {tok!r}")
        edges.append((_vertex(m.group(1), n), _vertex(m.group(2), n)))
    loops = [_vertex(t, n) for t in fields.get("loops", "").split(",") if t.strip()]
    return _build(n, edges, loops, check)


def _build(n: int, edges: Sequence[tuple[int, int]], loops: Sequence[int], check: bool) -> Cograph:
    rows = [0] * n
    for a, b in edges:
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    for a in loops:
        rows[a] |= 1 << a
    return Cograph.build(n, rows, check=check)


def graph_to_text(c: Cograph) -> str:
    edges = ",".join(f"{a + 1}-{b + 1}" for a, b in c.edges())
    text = f"n={c.n}; edges={edges}"
    if c.loops():
        text += "; loops=" + ",".join(str(a + 1) for a in c.loops())
    return text


def graph_to_json(c: Cograph) -> dict:
    return {"n": c.n, "edges": [[a + 1, b + 1] for a, b in c.edges()], "loops": [a + 1 for a in c.loops()]}


def graph_from_json(d: Any, *, check: bool = False) -> Cograph:
    if not isinstance(d, dict) or not isinstance(d.get("n"), int) or d["n"] < 0:
        raise FormatError("cograph JSON needs an integer field n")
    n = d["n"]
    try:
        edges = [(_vertex(str(a), n), _vertex(str(b), n)) for a, b in d.get("edges", [])]
        loops = [_vertex(str(a), n) for a in d.get("loops", [])]
    except (TypeError, ValueError) as exc:
        raise FormatError(f"bad edge list: {exc}") from None
    return _build(n, edges, loops, check)


def graph_from_graph6(text: str, loops: Sequence[int] = (), *, check: bool = False) -> Cograph:
    """Loop-free graph from graph6; ``loops`` are 1-based."""
    raw = text.strip()
    if raw.startswith(">>graph6<<"):
        raw = raw[len(">>graph6<<") :]
    try:
        g = nx.from_graph6_bytes(raw.encode("ascii"))
    except Exception as exc:  # networkx raises several types here
        raise FormatError(f"bad graph6 string: {exc}") from None
    n = g.number_of_nodes()
    return _build(n, list(g.edges()), [_vertex(str(a), n) for a in loops], check)


def graph_to_graph6(c: Cograph) -> str:
    """graph6 of the loop-free part; loops are not representable and are dropped."""
    g = nx.Graph()
    g.add_nodes_from(range(c.n))
    g.add_edges_from(c.edges())
    return nx.to_graph6_bytes(g, header=False).decode("ascii").strip()


def read_graph(spec: str, *, check: bool = False) -> Cograph:
    """Guess the format: JSON object, text form, cotree encoding, or graph6."""
    s = spec.strip()
    if s.startswith("{"):
        try:
            data = json.loads(s)
        except json.JSONDecodeError as exc:
            raise FormatError(f"bad JSON: {exc}") from None
        return graph_from_json(data, check=check)
    if s.lower().startswith("n="):
        return parse_graph_text(s, check=check)
    if s and s[0] in "([.*":
        try:
            return from_expr(parse_expr(s))
        except CographError as exc:
            raise FormatError(str(exc)) from None
    if s == "":
        raise FormatError("empty graph description")
    return graph_from_graph6(s, check=check)


def expr_to_json(c: Cograph) -> Any:
    """Cotree as nested lists: ``{"leaf":loop}`` or ``{"dsum"|"csum":[...]}``."""

    def walk(e: Any) -> Any:
        if isinstance(e, Leaf):
            return {"leaf": e.loop}
        assert isinstance(e, Node)
        return {e.tag: [walk(ch) for ch in e.children]}

    e = canonical_form(c)
    return None if e is None else walk(e)


# -- maps ------------------------------------------------------------------------------


def map_to_json(m: GraphMap) -> dict:
    return {"src": graph_to_json(m.src), "tgt": graph_to_json(m.tgt), "f": [x + 1 for x in m.f]}


def _one_based(values: Any, n: int, what: str) -> tuple[int, ...]:
    if not isinstance(values, list):
        raise FormatError(f"{what} must be a list")
    return tuple(_vertex(str(v), n) for v in values)


def map_from_json(d: Any) -> GraphMap:
    if not isinstance(d, dict) or not {"src", "tgt", "f"} <= d.keys():
        raise FormatError("map JSON needs src, tgt and f")
    src, tgt = graph_from_json(d["src"]), graph_from_json(d["tgt"])
    return GraphMap(src, tgt, _one_based(d["f"], tgt.n, "f"))


def partial_to_json(p: PartialGraphMap) -> dict:
    return {
        "src": graph_to_json(p.src),
        "tgt": graph_to_json(p.tgt),
        "domain": [a + 1 for a in p.domain],
        "f": [x + 1 for x in p.f],
    }


def partial_from_json(d: Any) -> PartialGraphMap:
    if not isinstance(d, dict) or not {"src", "tgt", "domain", "f"} <= d.keys():
        raise FormatError("partial map JSON needs src, tgt, domain and f")
    src, tgt = graph_from_json(d["src"]), graph_from_json(d["tgt"])
    return PartialGraphMap(src, _one_based(d["domain"], src.n, "domain"), tgt, _one_based(d["f"], tgt.n, "f"))


# -- 1-cographs and weak orders ---------------------------------------------------------------


def one_to_json(g: OneCograph) -> dict:
    return {"n": g.n, "dedges": [[a + 1, b + 1] for a, b in g.dedges()], "loops": [a + 1 for a in g.loops()]}


def one_from_json(d: Any) -> OneCograph:
    if not isinstance(d, dict) or not isinstance(d.get("n"), int):
        raise FormatError("1-cograph JSON needs an integer field n")
    n = d["n"]
    dedges = [(_vertex(str(a), n), _vertex(str(b), n)) for a, b in d.get("dedges", [])]
    loops = [_vertex(str(a), n) for a in d.get("loops", [])]
    try:
        return OneCograph.from_edges(n, dedges, loops)
    except CographError as exc:
        raise FormatError(str(exc)) from None


def one_to_text(g: OneCograph) -> str:
    arcs = ",".join(f"{a + 1}>{b + 1}" for a, b in g.dedges())
    text = f"n={g.n}; dedges={arcs}"
    if g.loops():
        text += "; loops=" + ",".join(str(a + 1) for a in g.loops())
    return text


def weak_order_from_text(text: str) -> WeakOrder:
    """Inverse of ``str(WeakOrder)``: ``1<{2,3}<4``."""
    if text == "":
        return WeakOrder(())
    blocks = []
    for tok in text.split("<"):
        tok = tok.strip()
        if tok.startswith("{") and tok.endswith("}"):
            items = tok[1:-1].split(",")
        else:
            items = [tok]
        if not all(t.strip().isdigit() for t in items):
            raise FormatError(f"bad block {tok!r}")
        blocks.append(tuple(sorted(int(t) - 1 for t in items)))
    try:
        return WeakOrder(tuple(blocks))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


# -- posets and categories -----------------------------------------------------------------


def _label(x: Any) -> str:
    if isinstance(x, WeakOrder):
        return str(x)
    if isinstance(x, Cograph):
        return graph_to_text(x)
    if isinstance(x, tuple) and all(isinstance(t, WeakOrder) for t in x):
        return " | ".join(str(t) for t in x)
    if isinstance(x, tuple) and len(x) == 2 and isinstance(x[0], Cograph) and isinstance(x[1], OneCograph):
        return one_to_text(x[1])
    return str(x)


def poset_to_json(p: FinitePoset, label: Callable[[Any], str] = _label) -> dict:
    return {"elements": [label(x) for x in p.elements], "leq": [[bool(v) for v in row] for row in p.leq]}


def poset_from_json(d: Any) -> FinitePoset:
    if not isinstance(d, dict) or "elements" not in d or "leq" not in d:
        raise FormatError("poset JSON needs elements and leq")
    try:
        return FinitePoset(tuple(d["elements"]), tuple(tuple(bool(v) for v in row) for row in d["leq"]))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def poset_to_dot(p: FinitePoset, label: Callable[[Any], str] = _label, name: str = "poset") -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i, x in enumerate(p.elements):
        lines.append(f"  n{i} [label={json.dumps(label(x))}];")
    for i, j in p.covers():
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_to_text(p: FinitePoset, label: Callable[[Any], str] = _label) -> str:
    lines = [f"{len(p)} elements"]
    for i, x in enumerate(p.elements):
        ups = [label(p.elements[j]) for a, j in p.covers() if a == i]
        lines.append(f"{label(x)}" + (f"  <  {', '.join(ups)}" if ups else ""))
    return "\n".join(lines) + "\n"


def category_to_json(cat: FiniteCategory, label: Callable[[Any], Any], *, table: bool = False) -> dict:
    out: dict[str, Any] = {"objects": [label(o) for o in cat.objects], "hom_counts": cat.hom_counts()}
    if table:
        out["composition"] = [
            [a, b, c, [x + 1 for x in g], [x + 1 for x in f], [x + 1 for x in h]]
            for a, b, c, g, f, h in cat.composition_table()
        ]
    return out


# -- configurations ---------------------------------------------------------------------------


def config_to_json(lam: Cograph, points: Sequence[Any]) -> dict:
    return {"lambda": graph_to_json(lam), "points": [jsonable(p) for p in points]}


def _tupled(x: Any) -> Any:
    return tuple(_tupled(v) for v in x) if isinstance(x, list) else x


def config_from_json(d: Any) -> tuple[Cograph, list]:
    if not isinstance(d, dict) or "lambda" not in d or "points" not in d:
        raise FormatError("configuration JSON needs lambda and points")
    return graph_from_json(d["lambda"]), [_tupled(p) for p in d["points"]]


# -- generic --------------------------------------------------------------------------------------


def jsonable(x: Any) -> Any:
    """Best-effort conversion of law witnesses and results to JSON values."""
    if x is None or isinstance(x, (bool, int, float, str)):
        return x
    if isinstance(x, Cograph):
        return graph_to_text(x)
    if isinstance(x, OneCograph):
        return one_to_text(x)
    if isinstance(x, WeakOrder):
        return str(x)
    if isinstance(x, GraphMap):
        return {"src": graph_to_text(x.src), "tgt": graph_to_text(x.tgt), "f": [v + 1 for v in x.f]}
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (set, frozenset)):
        return sorted((jsonable(v) for v in x), key=repr)
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    return repr(x)
