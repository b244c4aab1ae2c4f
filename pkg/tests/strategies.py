"""Hypothesis strategies for cographs, maps and permutations."""

from __future__ import annotations

from hypothesis import strategies as st

from isola.cograph import Cograph, csum, dsum


@st.composite
def cographs(draw, max_n: int = 6, min_n: int = 0, flavor: str = "any") -> Cograph:
    """Random cotree: start from singletons and merge two parts at a time."""
    n = draw(st.integers(min_n, max_n))
    parts = []
    for _ in range(n):
        if flavor == "any":
            loop = draw(st.booleans())
        else:
            loop = flavor == "refl"
        parts.append(Cograph.from_edges(1, loops=[0] if loop else []))
    if not parts:
        return Cograph(0, ())
    while len(parts) > 1:
        i = draw(st.integers(0, len(parts) - 1))
        a = parts.pop(i)
        j = draw(st.integers(0, len(parts) - 1))
        b = parts.pop(j)
        parts.append((csum if draw(st.booleans()) else dsum)(a, b))
    c = parts[0]
    perm = draw(st.permutations(range(c.n)))
    return c.relabel(perm)


@st.composite
def relabelled(draw, c: Cograph) -> Cograph:
    return c.relabel(draw(st.permutations(range(c.n))))
