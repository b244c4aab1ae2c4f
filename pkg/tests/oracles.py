"""Slow, obviously-correct reference computations.

Nothing here imports from ``isola``; graphs are plain ``(n, frozenset of
pairs)`` values where a pair ``(i, j)`` has ``i <= j`` and ``(i, i)`` is a loop.
"""

from __future__ import annotations

from itertools import combinations, permutations, product
from math import comb

Rel = tuple[int, frozenset]


def all_relations(n: int, loops: bool = True) -> list[Rel]:
    pairs = [(i, j) for i in range(n) for j in range(i, n) if loops or i != j]
    out = []
    for bits in product((0, 1), repeat=len(pairs)):
        out.append((n, frozenset(p for p, b in zip(pairs, bits) if b)))
    return out


def related(g: Rel, a: int, b: int) -> bool:
    return (min(a, b), max(a, b)) in g[1]


def has_induced_p4(g: Rel) -> bool:
    """Four distinct vertices a-b-c-d forming an induced path, loops ignored."""
    n = g[0]
    for a, b, c, d in permutations(range(n), 4):
        if a > d:
            continue
        if related(g, a, b) and related(g, b, c) and related(g, c, d):
            if not (related(g, a, c) or related(g, b, d) or related(g, a, d)):
                return True
    return False


def is_cograph(g: Rel) -> bool:
    return not has_induced_p4(g)


def relabel(g: Rel, perm) -> Rel:
    return (g[0], frozenset((min(perm[a], perm[b]), max(perm[a], perm[b])) for a, b in g[1]))


def canon(g: Rel) -> tuple:
    """Smallest sorted pair list over all relabellings."""
    return min(tuple(sorted(relabel(g, p)[1])) for p in permutations(range(g[0])))


def flavor_ok(g: Rel, flavor: str) -> bool:
    loops = sum(1 for a, b in g[1] if a == b)
    if flavor == "irr":
        return loops == 0
    if flavor == "refl":
        return loops == g[0]
    return True


def cograph_classes(n: int, flavor: str) -> set:
    return {canon(g) for g in all_relations(n) if flavor_ok(g, flavor) and is_cograph(g)}


def hom_count(a: Rel, b: Rel) -> int:
    """Vertex maps carrying related pairs (loops included) to related pairs."""
    count = 0
    for f in product(range(b[0]), repeat=a[0]):
        if all(related(b, f[x], f[y]) for x, y in a[1]):
            count += 1
    return count


def ordered_partitions(items: list) -> list[tuple[frozenset, ...]]:
    """Every ordered set partition (weak order) of ``items``."""
    if not items:
        return [()]
    out = []
    for k in range(1, len(items) + 1):
        for first in combinations(items, k):
            rest = [x for x in items if x not in first]
            out.extend((frozenset(first),) + tail for tail in ordered_partitions(rest))
    return out


def line_size(n: int, edges) -> int:
    """Weak orders of ``range(n)`` putting the ends of each edge in different blocks."""
    count = 0
    for wo in ordered_partitions(list(range(n))):
        block = {v: i for i, b in enumerate(wo) for v in b}
        if all(block[a] != block[b] for a, b in edges):
            count += 1
    return count


def monotone_maps(m: int, n: int) -> int:
    """Weakly increasing maps from an m-chain to an n-chain, by listing them."""
    return sum(1 for f in product(range(n), repeat=m) if all(f[i] <= f[i + 1] for i in range(m - 1)))


def stars_and_bars(n: int, m: int) -> int:
    return comb(n + m - 1, m) if m else 1


def point_configs(n: int, edges, k: int) -> int:
    """Maps into ``k`` points separating the ends of every edge."""
    return sum(1 for f in product(range(k), repeat=n) if all(f[a] != f[b] for a, b in edges))


def subset_configs(n: int, edges, k: int) -> int:
    """Tuples of subsets of ``k`` points, disjoint along every edge."""
    subsets = range(1 << k)
    return sum(1 for f in product(subsets, repeat=n) if all(f[a] & f[b] == 0 for a, b in edges))


def hecke_size(points: int, fiber: int, n: int) -> int:
    """Configurations of ``n`` unconstrained points plus two bundles agreeing off them."""
    total = 0
    for z in product(range(points), repeat=n):
        inside = len(set(z))
        total += fiber ** (2 * inside) * fiber ** (points - inside)
    return total


def transitive_orientations(n: int, edges) -> int:
    """Orientations of a loop-free graph whose arrow relation is transitive."""
    edges = list(edges)
    count = 0
    for bits in product((0, 1), repeat=len(edges)):
        arrows = {(a, b) if flip == 0 else (b, a) for (a, b), flip in zip(edges, bits)}
        if all((a, d) in arrows for a, b in arrows for c, d in arrows if b == c):
            count += 1
    return count
