"""Cotrees: canonical forms, isomorphism and enumeration of cographs.

Internal nodes alternate between disconnected sums (``dsum``) and connected
sums (``csum``); leaves carry a loop flag. A cotree is encoded as a short
ASCII string, which doubles as the sort key for children:

* ``.``  leaf without loop, ``*`` leaf with loop
* ``(`` ... ``)`` disconnected sum of the enclosed children
* ``[`` ... ``]`` connected sum of the enclosed children

Bracketed encodings are prefix free, so sorting children by encoding gives
one canonical tree per isomorphism class.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .cograph import (
    Cograph,
    CographError,
    all_relations,
    cocomponents,
    components,
    csum,
    dsum,
    empty,
    is_cograph,
)

__all__ = [
    "CographExpr",
    "Leaf",
    "Node",
    "canonical_form",
    "canonical_key",
    "from_expr",
    "parse_expr",
    "is_isomorphic",
    "cotree_depth",
    "enumerate_cographs",
    "count_cographs",
    "FLAVORS",
]

FLAVORS = ("irr", "refl", "any")


@dataclass(frozen=True)
class Leaf:
    loop: bool = False

    def encode(self) -> str:
        return "*" if self.loop else "."

    @property
    def size(self) -> int:
        return 1


@dataclass(frozen=True)
class Node:
    tag: str  # "dsum" or "csum"
    children: tuple["CographExpr", ...]

    def encode(self) -> str:
        inner = "".join(ch.encode() for ch in self.children)
        return f"({inner})" if self.tag == "dsum" else f"[{inner}]"

    @property
    def size(self) -> int:
        return sum(ch.size for ch in self.children)


CographExpr = Leaf | Node


def _canon(c: Cograph, verts: tuple[int, ...]) -> CographExpr:
    if len(verts) == 1:
        return Leaf(c.has_loop(verts[0]))
    sub = c.induced(verts)
    comps = components(sub)
    if len(comps) > 1:
        tag, groups = "dsum", comps
    else:
        groups = cocomponents(sub)
        if len(groups) == 1:
            raise CographError("vertex set is both connected and co-connected; not a cograph")
        tag = "csum"
    kids = [_canon(c, tuple(verts[i] for i in g)) for g in groups]
    kids.sort(key=lambda e: e.encode())
    return Node(tag, tuple(kids))


def canonical_form(c: Cograph) -> CographExpr | None:
    """Canonical cotree of ``c``; ``None`` for the empty cograph."""
    if not is_cograph(c):
        raise CographError("not a cograph")
    if c.n == 0:
        return None
    return _canon(c, tuple(range(c.n)))


def canonical_key(c: Cograph) -> str:
    """Encoding of the canonical cotree; equal keys iff isomorphic."""
    e = canonical_form(c)
    return "" if e is None else e.encode()


def from_expr(e: CographExpr | None) -> Cograph:
    """Realise a cotree as a cograph, numbering leaves left to right."""
    if e is None:
        return empty()
    if isinstance(e, Leaf):
        return Cograph(1, (1,) if e.loop else (0,))
    op = dsum if e.tag == "dsum" else csum
    out = empty()
    for ch in e.children:
        out = op(out, from_expr(ch))
    return out


def parse_expr(text: str) -> CographExpr | None:
    """Inverse of ``encode``; also accepts non-canonical child orders."""
    if text == "":
        return None
    pos = 0

    def node() -> CographExpr:
        nonlocal pos
        if pos >= len(text):
            raise CographError("unexpected end of cotree encoding")
        ch = text[pos]
        pos += 1
        if ch in ".*":
            return Leaf(ch == "*")
        if ch in "([":
            close, tag = (")", "dsum") if ch == "(" else ("]", "csum")
            kids = []
            while pos < len(text) and text[pos] != close:
                kids.append(node())
            if pos >= len(text):
                raise CographError(f"missing {close!r} in cotree encoding")
            pos += 1
            if len(kids) < 2:
                raise CographError("sum nodes need at least two children")
            return Node(tag, tuple(kids))
        raise CographError(f"bad character {ch!r} in cotree encoding")

    e = node()
    if pos != len(text):
        raise CographError("trailing characters in cotree encoding")
    return e


def is_isomorphic(a: Cograph, b: Cograph) -> bool:
    return a.n == b.n and canonical_key(a) == canonical_key(b)


def cotree_depth(e: CographExpr | None) -> int:
    """Depth computed on the cotree instead of by searching for paws.

    A disconnected sum can extend an even-depth child by one isolated vertex
    taken from a sibling; a connected sum extends an odd-depth child by one
    vertex joined to everything.
    """
    if e is None:
        return 0
    if isinstance(e, Leaf):
        return 1
    ds = [cotree_depth(ch) for ch in e.children]
    bump = 0 if e.tag == "dsum" else 1
    return max(d + 1 if d % 2 == bump else d for d in ds)


# -- enumeration ------------------------------------------------------------


def _partitions(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for p in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - p, p):
            yield (p,) + rest


def _multisets(items: list[str], k: int, start: int = 0) -> Iterator[tuple[str, ...]]:
    if k == 0:
        yield ()
        return
    for i in range(start, len(items)):
        for rest in _multisets(items, k - 1, i):
            yield (items[i],) + rest


@lru_cache(maxsize=None)
def _trees(n: int, root: str, loops: tuple[bool, ...]) -> tuple[str, ...]:
    # Encodings of canonical cotrees with n leaves whose root is `root`
    # (a leaf counts as either root type).
    if n == 1:
        return tuple(sorted(Leaf(flag).encode() for flag in loops))
    child_root = "csum" if root == "dsum" else "dsum"
    out: set[str] = set()
    for parts in _partitions(n, n - 1):
        # group equal part sizes so each multiset of children appears once
        sizes = sorted(set(parts))
        choices: list[list[tuple[str, ...]]] = []
        for s in sizes:
            pool = sorted(_trees(s, child_root, loops))
            choices.append(list(_multisets(pool, parts.count(s))))
        for combo in _product(choices):
            kids = sorted(k for group in combo for k in group)
            body = "".join(kids)
            out.add(f"({body})" if root == "dsum" else f"[{body}]")
    return tuple(sorted(out))


def _product(lists: list[list[tuple[str, ...]]]) -> Iterator[tuple[tuple[str, ...], ...]]:
    if not lists:
        yield ()
        return
    for head in lists[0]:
        for tail in _product(lists[1:]):
            yield (head,) + tail


def _loop_flags(flavor: str) -> tuple[bool, ...]:
    if flavor not in FLAVORS:
        raise CographError(f"unknown flavor {flavor!r}; expected one of {FLAVORS}")
    return {"irr": (False,), "refl": (True,), "any": (False, True)}[flavor]


def _from_cotrees(n: int, flavor: str) -> list[str]:
    loops = _loop_flags(flavor)
    if n == 0:
        return [""]
    if n == 1:
        return sorted(Leaf(f).encode() for f in loops)
    return sorted(set(_trees(n, "dsum", loops)) | set(_trees(n, "csum", loops)))


def _from_filter(n: int, flavor: str) -> list[str]:
    loops = _loop_flags(flavor)
    keys = set()
    for c in all_relations(n, loops=True):
        ls = c.loops()
        if flavor == "irr" and ls or flavor == "refl" and len(ls) != n:
            continue
        if is_cograph(c):
            keys.add(canonical_key(c))
    return sorted(keys)


def enumerate_cographs(n: int, flavor: str = "irr", *, method: str = "cotree") -> list[Cograph]:
    """One representative per isomorphism class, sorted by canonical encoding.

    ``method="cotree"`` builds canonical cotrees directly; ``method="filter"``
    filters every symmetric relation on ``n`` vertices. Both give the same list.
    """
    if n < 0:
        raise CographError("n must be non-negative")
    if method == "cotree":
        keys = _from_cotrees(n, flavor)
    elif method == "filter":
        keys = _from_filter(n, flavor)
    else:
        raise CographError(f"unknown enumeration method {method!r}")
    return [from_expr(parse_expr(k)) for k in keys]


def count_cographs(n: int, flavor: str = "irr", *, method: str = "cotree") -> int:
    if method == "cotree":
        return len(_from_cotrees(n, flavor))
    return len(_from_filter(n, flavor))
