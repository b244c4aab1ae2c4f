"""Finite cographs with loops.

A cograph here is a finite set ``{0, ..., n-1}`` with a symmetric relation.
Loops live on the diagonal. Rows are stored as integer bitmasks, so
``rows[i] >> j & 1`` says whether ``(i, j)`` is related.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Cograph",
    "CographError",
    "CographClass",
    "is_cograph",
    "is_cograph_p4",
    "neg",
    "csum",
    "dsum",
    "sum_cographs",
    "indexed_sum",
    "components",
    "cocomponents",
    "depth",
    "codepth",
    "vertex_depth",
    "paw",
    "copaw",
    "classify",
    "trivial",
    "complete",
    "clique",
    "empty",
]


class CographError(ValueError):
    """Raised when an input violates a cograph invariant."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _rows_from_matrix(matrix: Sequence[Sequence[object]]) -> tuple[int, ...]:
    n = len(matrix)
    rows = []
    for i, row in enumerate(matrix):
        if len(row) != n:
            raise CographError(f"row {i} has length {len(row)}, expected {n}")
        mask = 0
        for j, v in enumerate(row):
            if v:
                mask |= 1 << j
        rows.append(mask)
    return tuple(rows)


def _check_symmetric(rows: Sequence[int]) -> None:
    n = len(rows)
    full = (1 << n) - 1
    for i, r in enumerate(rows):
        if r & ~full:
            raise CographError(f"row {i} mentions a vertex outside 0..{n - 1}")
        for j in _bits(r):
            if not rows[j] >> i & 1:
                raise CographError(f"relation is not symmetric at ({i}, {j})")


def _quadruple_ok(rows: Sequence[int]) -> bool:
    # If (w,x), (y,x), (y,z) are related then one of (y,w), (w,z), (z,x) is.
    # For fixed w, x, y a bad z is a neighbour of y outside N(w) and N(x).
    n = len(rows)
    for x in range(n):
        nx = rows[x]
        for w in _bits(nx):
            nw = rows[w]
            for y in _bits(nx):
                if nw >> y & 1:
                    continue
                if rows[y] & ~nw & ~nx:
                    return False
    return True


def _irreflexive_rows(rows: Sequence[int]) -> tuple[int, ...]:
    return tuple(r & ~(1 << i) for i, r in enumerate(rows))


def _has_induced_p4(rows: Sequence[int]) -> tuple[int, int, int, int] | None:
    irr = _irreflexive_rows(rows)
    for b, nb in enumerate(irr):
        for c in _bits(nb):
            nc = irr[c]
            ends_b = nb & ~nc & ~(1 << c)
            ends_c = nc & ~nb & ~(1 << b)
            for a in _bits(ends_b):
                far = ends_c & ~irr[a]
                if far:
                    d = next(_bits(far))
                    return (a, b, c, d)
    return None


@dataclass(frozen=True)
class Cograph:
    """Immutable symmetric relation on ``n`` vertices satisfying the cograph condition."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.n:
            raise CographError(f"expected {self.n} rows, got {len(self.rows)}")
        _check_symmetric(self.rows)

    @classmethod
    def build(cls, n: int, rows: Iterable[int], *, check: bool = True) -> "Cograph":
        c = cls(n, tuple(rows))
        if check and not _quadruple_ok(c.rows):
            p4 = _has_induced_p4(c.rows)
            raise CographError("relation contains an induced path " + "-".join(str(v + 1) for v in p4))
        return c

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        loops: Iterable[int] = (),
        *,
        check: bool = True,
    ) -> "Cograph":
        rows = [0] * n
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise CographError(f"edge ({a}, {b}) out of range for n={n}")
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        for a in loops:
            if not 0 <= a < n:
                raise CographError(f"loop {a} out of range for n={n}")
            rows[a] |= 1 << a
        return cls.build(n, rows, check=check)

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[object]], *, check: bool = True) -> "Cograph":
        return cls.build(len(matrix), _rows_from_matrix(matrix), check=check)

    def related(self, a: int, b: int) -> bool:
        return bool(self.rows[a] >> b & 1)

    def has_loop(self, a: int) -> bool:
        return bool(self.rows[a] >> a & 1)

    def neighbours(self, a: int) -> int:
        """Bitmask of vertices related to ``a``, excluding ``a`` itself."""
        return self.rows[a] & ~(1 << a)

    def edges(self) -> list[tuple[int, int]]:
        """Off-diagonal related pairs ``(i, j)`` with ``i < j``."""
        return [(i, j) for i in range(self.n) for j in _bits(self.rows[i] >> (i + 1) << (i + 1))]

    def loops(self) -> list[int]:
        return [i for i in range(self.n) if self.has_loop(i)]

    def pairs(self) -> frozenset[tuple[int, int]]:
        """The full relation as ordered pairs, both directions and loops."""
        return frozenset((i, j) for i in range(self.n) for j in _bits(self.rows[i]))

    def matrix(self) -> list[list[bool]]:
        return [[bool(r >> j & 1) for j in range(self.n)] for r in self.rows]

    @property
    def is_irreflexive(self) -> bool:
        return not self.loops()

    @property
    def is_reflexive(self) -> bool:
        return len(self.loops()) == self.n

    def irr(self) -> "Cograph":
        return Cograph(self.n, _irreflexive_rows(self.rows))

    def refl(self) -> "Cograph":
        return Cograph(self.n, tuple(r | (1 << i) for i, r in enumerate(self.rows)))

    def induced(self, vertices: Sequence[int]) -> "Cograph":
        """Induced sub-cograph on ``vertices``, relabelled in the given order."""
        rows = []
        for a in vertices:
            mask = 0
            for k, b in enumerate(vertices):
                if self.rows[a] >> b & 1:
                    mask |= 1 << k
            rows.append(mask)
        return Cograph(len(vertices), tuple(rows))

    def relabel(self, perm: Sequence[int]) -> "Cograph":
        """Cograph whose vertex ``perm[i]`` plays the role of old vertex ``i``."""
        rows = [0] * self.n
        for i in range(self.n):
            for j in _bits(self.rows[i]):
                rows[perm[i]] |= 1 << perm[j]
        return Cograph(self.n, tuple(rows))

    def is_subrelation_of(self, other: "Cograph") -> bool:
        return self.n == other.n and all(a & ~b == 0 for a, b in zip(self.rows, other.rows))

    def __repr__(self) -> str:
        return f"Cograph(n={self.n}, edges={self.edges()}, loops={self.loops()})"


def _as_rows(g: Cograph | Sequence[Sequence[object]]) -> tuple[int, ...]:
    if isinstance(g, Cograph):
        return g.rows
    rows = _rows_from_matrix(g)
    _check_symmetric(rows)
    return rows


def is_cograph(g: Cograph | Sequence[Sequence[object]]) -> bool:
    """Quadruple condition checked literally over all quadruples of vertices."""
    return _quadruple_ok(_as_rows(g))


def is_cograph_p4(g: Cograph | Sequence[Sequence[object]]) -> bool:
    """Independent recogniser: the loop-free part has no induced path on four vertices."""
    return _has_induced_p4(_as_rows(g)) is None


def empty() -> Cograph:
    return Cograph(0, ())


def trivial(n: int) -> Cograph:
    """``n`` vertices, no relation at all."""
    return Cograph(n, (0,) * n)


def complete(n: int) -> Cograph:
    """``n`` vertices, every pair related, loops included."""
    full = (1 << n) - 1
    return Cograph(n, (full,) * n)


def clique(n: int) -> Cograph:
    """Complete graph without loops."""
    return complete(n).irr()


def neg(c: Cograph) -> Cograph:
    """Complement of the relation on all pairs, diagonal included."""
    full = (1 << c.n) - 1
    return Cograph(c.n, tuple(full & ~r for r in c.rows))


def _sum(a: Cograph, b: Cograph, connected: bool) -> Cograph:
    shift = a.n
    fb = ((1 << b.n) - 1) << shift if connected else 0
    fa = (1 << a.n) - 1 if connected else 0
    rows = [r | fb for r in a.rows] + [(r << shift) | fa for r in b.rows]
    return Cograph(a.n + b.n, tuple(rows))


def csum(a: Cograph, b: Cograph) -> Cograph:
    """Connected sum: every vertex of ``a`` related to every vertex of ``b``."""
    return _sum(a, b, True)


def dsum(a: Cograph, b: Cograph) -> Cograph:
    """Disconnected sum: no relation across the two parts."""
    return _sum(a, b, False)


def sum_cographs(kind: str, parts: Sequence[Cograph]) -> Cograph:
    """Fold ``csum`` or ``dsum`` over ``parts``; ``kind`` is ``"csum"`` or ``"dsum"``."""
    if kind not in ("csum", "dsum"):
        raise CographError(f"unknown sum kind {kind!r}")
    op = csum if kind == "csum" else dsum
    out = empty()
    for p in parts:
        out = op(out, p)
    return out


def indexed_sum(lam: Cograph, parts: Sequence[Cograph]) -> Cograph:
    """Sum of ``parts[a]`` indexed by a reflexive cograph ``lam``.

    Inside a part its own relation is used. Two different parts ``a`` and
    ``b`` are fully related when ``(a, b)`` is related in ``lam`` and
    unrelated otherwise. Vertices are numbered part by part.
    """
    if not lam.is_reflexive:
        raise CographError("indexing cograph must be reflexive")
    if len(parts) != lam.n:
        raise CographError(f"need {lam.n} parts, got {len(parts)}")
    offsets = [0]
    for p in parts:
        offsets.append(offsets[-1] + p.n)
    blocks = [((1 << p.n) - 1) << offsets[a] for a, p in enumerate(parts)]
    rows = []
    for a, p in enumerate(parts):
        across = 0
        for b in _bits(lam.neighbours(a)):
            across |= blocks[b]
        for r in p.rows:
            rows.append((r << offsets[a]) | across)
    return Cograph.build(offsets[-1], rows, check=False)


def _classes(n: int, adj: Sequence[int]) -> list[tuple[int, ...]]:
    seen = 0
    out = []
    for s in range(n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(tuple(_bits(comp)))
    return out


def components(c: Cograph) -> list[tuple[int, ...]]:
    """Classes of the equivalence relation generated by the relation."""
    return _classes(c.n, c.rows)


def cocomponents(c: Cograph) -> list[tuple[int, ...]]:
    """Classes of the equivalence relation generated by the complement."""
    return _classes(c.n, neg(c).rows)


def paw(k: int) -> Cograph:
    """Path-like cograph on ``k`` vertices: for ``i < j``, related iff ``j`` is even (1-based)."""
    edges = [(i - 1, j - 1) for j in range(2, k + 1, 2) for i in range(1, j)]
    return Cograph.from_edges(k, edges, check=False)


def copaw(k: int) -> Cograph:
    """Loop-free part of the complement of ``paw(k)``."""
    return neg(paw(k)).irr()


@lru_cache(maxsize=4096)
def _paw_search(irr: tuple[int, ...], start: int | None) -> int:
    n = len(irr)
    if n == 0:
        return 0
    memo: dict[int, int] = {}

    def extend(chosen: int, length: int) -> int:
        if chosen in memo:
            return memo[chosen]
        best = length
        want_all = (length + 1) % 2 == 0
        for v in _bits(((1 << n) - 1) & ~chosen):
            hit = irr[v] & chosen
            if (want_all and hit == chosen) or (not want_all and hit == 0):
                best = max(best, extend(chosen | (1 << v), length + 1))
                if best == n:
                    break
        memo[chosen] = best
        return best

    if start is not None:
        return extend(1 << start, 1)
    return max(extend(1 << v, 1) for v in range(n))


def vertex_depth(c: Cograph, w: int) -> int:
    """Largest ``k`` with an induced copy of ``paw(k)`` whose first vertex is ``w``."""
    if not 0 <= w < c.n:
        raise CographError(f"vertex {w} out of range")
    return _paw_search(_irreflexive_rows(c.rows), w)


def depth(c: Cograph) -> int:
    """Largest ``k`` such that ``paw(k)`` embeds as an induced sub-cograph (loops ignored)."""
    return _paw_search(_irreflexive_rows(c.rows), None)


def codepth(c: Cograph) -> int:
    return depth(neg(c))


@dataclass(frozen=True)
class CographClass:
    irreflexive: bool
    reflexive: bool
    apartness: bool
    equivalence: bool
    connected: bool
    coconnected: bool
    depth: int
    codepth: int

    def in_depth_le(self, k: int) -> bool:
        return self.depth <= k

    def in_codepth_le(self, k: int) -> bool:
        return self.codepth <= k


def _is_equivalence(c: Cograph) -> bool:
    if not c.is_reflexive:
        return False
    for i in range(c.n):
        for j in _bits(c.rows[i]):
            if c.rows[j] | c.rows[i] != c.rows[i]:
                return False
    return True


def classify(c: Cograph) -> CographClass:
    """Membership flags and filtration degrees of ``c``."""
    return CographClass(
        irreflexive=c.is_irreflexive,
        reflexive=c.is_reflexive,
        apartness=c.is_irreflexive and _is_equivalence(neg(c)),
        equivalence=_is_equivalence(c),
        connected=len(components(c)) == 1,
        coconnected=len(cocomponents(c)) == 1,
        depth=depth(c),
        codepth=codepth(c),
    )


def all_relations(n: int, *, loops: bool = True) -> Iterator[Cograph]:
    """Every symmetric relation on ``n`` vertices, unchecked (not all are cographs)."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    diag = range(n) if loops else ()
    for ebits in product((0, 1), repeat=len(pairs)):
        rows = [0] * n
        for (i, j), on in zip(pairs, ebits):
            if on:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        for lbits in product((0, 1), repeat=len(diag)):
            r = list(rows)
            for i, on in zip(diag, lbits):
                if on:
                    r[i] |= 1 << i
            yield Cograph(n, tuple(r))
