"""Colour operations on built graphs: orientation flip and parity recolouring."""

from __future__ import annotations

from collections import deque

from .graph import MISSING, ColoredGraph


class ParityError(ValueError):
    """The colour-count parity classes are empty or not well defined."""


def parity_classes(g: ColoredGraph, symbol: str) -> list[int]:
    """Parity of the number of ``symbol`` edges on any path from the root.

    Raises :class:`ParityError` if some cycle uses an odd number of such edges
    or the colour has no edges at all.
    """
    if symbol not in g.symbols:
        raise ParityError(f"no colour {symbol!r} in the graph")
    if all(g.nbr[v][g.index((symbol, 1))] == MISSING for v in range(len(g))):
        raise ParityError(f"graph has no {symbol}-edges")
    par = [-1] * len(g)
    par[g.root] = 0
    queue = deque([g.root])
    flips = [1 if s == symbol else 0 for s, _ in g.letters]
    while queue:
        v = queue.popleft()
        for li, w in enumerate(g.nbr[v]):
            if w == MISSING:
                continue
            want = par[v] ^ flips[li]
            if par[w] < 0:
                par[w] = want
                queue.append(w)
            elif par[w] != want:
                raise ParityError(f"a cycle through vertex {w} has an odd number of {symbol}-edges")
    return par


def flip_alternate_orientation(g: ColoredGraph, flip: str = "a", parity: str = "b") -> ColoredGraph:
    """Reverse every ``flip``-edge lying in the odd ``parity`` class.

    Applied to ``<a,b | b^2, a^n, (ab)^{2m}>`` this yields
    ``<a,b | b^2, a^n, (aba^-1b)^m>``; it is an involution on graphs.
    """
    if g.is_involution(flip):
        raise ValueError("only a non-involution colour can be reversed")
    par = parity_classes(g, parity)
    fwd = g.index((flip, 1))
    back = g.index((flip, -1))
    rows = [list(r) for r in g.nbr]
    for v in range(len(g)):
        if par[v]:
            rows[v][fwd], rows[v][back] = g.nbr[v][back], g.nbr[v][fwd]
    return ColoredGraph(g.colors, rows, g.root)


def parity_recolor(g: ColoredGraph, swap: tuple[str, str] = ("b", "c"), parity: str = "d") -> ColoredGraph:
    """Exchange the two ``swap`` colours on edges in the odd ``parity`` class.

    Applied to ``<b,c,d | (bc)^n, (cd)^{2m}, (db)^{2m}>`` this yields
    ``<b,c,d | (bc)^n, (bdcd)^m>``; it is an involution on graphs.
    """
    x, y = swap
    if not (g.is_involution(x) and g.is_involution(y)):
        raise ValueError("recolouring swaps two involution colours")
    par = parity_classes(g, parity)
    ix, iy = g.index((x, 1)), g.index((y, 1))
    rows = [list(r) for r in g.nbr]
    for v in range(len(g)):
        if par[v]:
            rows[v][ix], rows[v][iy] = g.nbr[v][iy], g.nbr[v][ix]
    return ColoredGraph(g.colors, rows, g.root)
