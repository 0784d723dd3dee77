"""Geometric builders: regular tilings from coordinates, their truncations, hex strips.

A regular tiling ``{p, q}`` (``p``-gon faces, ``q`` at each vertex) is
developed from real coordinates: each vertex carries an orientation-preserving
isometry of the sphere, the plane or the Poincare disc taking the origin star
to its own star.  All isometries are Mobius maps, so one code path covers the
three geometries.  Vertices are identified by position.
"""

from __future__ import annotations

import cmath
import itertools
import math
from collections import deque

import numpy as np

from .graph import ColoredGraph, ColorLabel, GraphBuilder

Mobius = np.ndarray
_CELL = 1e-6
_TOL = 1e-7


def _rotation(theta: float) -> Mobius:
    return np.array([[cmath.exp(0.5j * theta), 0], [0, cmath.exp(-0.5j * theta)]], dtype=complex)


class RegularTiling:
    """Lazily developed regular tiling ``{p, q}`` with a consistent rotation system.

    Vertex ``v`` has darts ``0..q-1`` in counterclockwise order; ``dart(v, k)``
    returns ``(w, j)``, the far vertex and the index of the same edge at ``w``.
    Digon tilings ``{2, q}`` are multigraphs on two antipodal vertices.
    """

    def __init__(self, p: int, q: int):
        if p < 2 or q < 3:
            raise ValueError("need p >= 2 and q >= 3")
        self.p, self.q = p, q
        s = 1.0 / p + 1.0 / q
        ratio = math.cos(math.pi / p) / math.sin(math.pi / q)
        if s > 0.5 + 1e-12:
            self.geometry = "spherical"
            half = math.acos(max(-1.0, min(1.0, ratio)))
            c, si = math.cos(half), math.sin(half)
            self.step = np.array([[c, si], [-si, c]], dtype=complex)
        elif abs(s - 0.5) <= 1e-12:
            self.geometry = "euclidean"
            self.step = np.array([[1, 1], [0, 1]], dtype=complex)
        else:
            self.geometry = "hyperbolic"
            half = math.acosh(ratio)
            c, si = math.cosh(half), math.sinh(half)
            self.step = np.array([[c, si], [si, c]], dtype=complex)
        self.rot = [_rotation(2 * math.pi * k / q) for k in range(q)]
        self.half_turn = _rotation(math.pi)
        self.frames: list[Mobius] = []
        self.points: list[tuple[float, ...]] = []
        self.keys: dict[tuple, list[int]] = {}
        self.darts: list[list[tuple[int, int] | None]] = []
        self._add(np.eye(2, dtype=complex))

    @property
    def finite(self) -> bool:
        return self.geometry == "spherical"

    def _point(self, m: Mobius) -> tuple[float, ...]:
        b, d = m[0, 1], m[1, 1]
        if self.geometry == "spherical":
            nb, nd = abs(b) ** 2, abs(d) ** 2
            t = b * d.conjugate()
            return (2 * t.real / (nb + nd), 2 * t.imag / (nb + nd), (nb - nd) / (nb + nd))
        z = b / d
        return (z.real, z.imag)

    def _lookup(self, pt: tuple[float, ...]) -> int | None:
        cell = tuple(math.floor(x / _CELL) for x in pt)
        for off in itertools.product((-1, 0, 1), repeat=len(pt)):
            for w in self.keys.get(tuple(c + o for c, o in zip(cell, off)), ()):
                if max(abs(x - y) for x, y in zip(pt, self.points[w])) < _TOL:
                    return w
        return None

    def _add(self, m: Mobius) -> int:
        v = len(self.frames)
        pt = self._point(m)
        self.frames.append(m)
        self.points.append(pt)
        cell = tuple(math.floor(x / _CELL) for x in pt)
        self.keys.setdefault(cell, []).append(v)
        self.darts.append([None] * self.q)
        return v

    def dart(self, v: int, k: int) -> tuple[int, int]:
        hit = self.darts[v][k]
        if hit is not None:
            return hit
        m = self.frames[v] @ self.rot[k] @ self.step @ self.half_turn
        m = m / cmath.sqrt(np.linalg.det(m))
        w = self._lookup(self._point(m))
        if w is None:
            w = self._add(m)
            j = 0
        else:
            rel = np.linalg.solve(self.frames[w], m)
            angle = cmath.phase(rel[0, 0] / rel[1, 1])
            j = round(angle / (2 * math.pi / self.q)) % self.q
        self.darts[v][k] = (w, j)
        self.darts[w][j] = (v, k)
        return (w, j)


def truncated_tiling(n: int, m: int, radius: int | None = None, max_vertices: int = 400_000) -> ColoredGraph:
    """Cayley graph of ``<a, b | b^2, a^n, (ab)^m>`` as a truncated ``{m, n}`` tiling.

    Every vertex of the tiling becomes an ``a``-cycle of length ``n`` oriented
    counterclockwise; tiling edges become ``b``-edges.  Finite cases are built
    whole; otherwise the ``radius``-ball around the root is returned.
    """
    if n < 3 or m < 2:
        raise ValueError("truncated tiling needs n >= 3 and m >= 2")
    h = RegularTiling(m, n)
    if not h.finite and radius is None:
        raise ValueError("an infinite tiling needs a radius")
    colors = [ColorLabel("a", False), ColorLabel("b", True)]
    b = GraphBuilder(colors)
    ids: dict[tuple[int, int], int] = {}
    dist: dict[int, int] = {}

    def vid(x: tuple[int, int]) -> int:
        if x not in ids:
            ids[x] = b.add_vertex()
        return ids[x]

    root = vid((0, 0))
    dist[root] = 0
    queue = deque([(0, 0)])
    limit = None if h.finite else radius
    while queue:
        x = queue.popleft()
        u = ids[x]
        if limit is not None and dist[u] >= limit:
            continue
        v, k = x
        far = h.dart(v, k)
        nbrs = [((v, (k + 1) % n), "a", 1), ((v, (k - 1) % n), "a", -1), (far, "b", 1)]
        for y, s, e in nbrs:
            new = y not in ids
            w = vid(y)
            b.connect(u, w, s, e)
            if new:
                dist[w] = dist[u] + 1
                queue.append(y)
        if len(ids) > max_vertices:
            raise RuntimeError("truncated tiling exceeded the vertex limit")
    # close edges between already known vertices at the rim
    for (v, k), u in list(ids.items()):
        for y, s, e in (((v, (k + 1) % n), "a", 1), ((v, (k - 1) % n), "a", -1)):
            if y in ids:
                b.connect(u, ids[y], s, e)
        far = h.dart(v, k)
        if far in ids:
            b.connect(u, ids[far], "b", 1)
    g = b.freeze(root)
    return g.relabel_bfs() if limit is None else g.ball(radius)


def hex_strip(count: int, alternate: bool = False, coloring: str = "two", radius: int = 8) -> ColoredGraph:
    """Brick-wall strip on a cylinder with ``count`` parallel rays.

    Vertices are ``(i, j)`` with ``i`` modulo ``count``; rays join ``(i, j)``
    to ``(i, j+1)`` and a rung joins ``(i, j)`` to ``(i+1, j)`` when ``i + j``
    is even.  ``coloring="two"`` uses ``a`` on rays (every other ray reversed
    when ``alternate``) and ``b`` on rungs; ``coloring="three"`` uses ``b``/``d``
    alternately on rays and ``c`` on rungs.
    """
    if count < 4 or count % 2:
        raise ValueError("count must be even and at least 4")
    if coloring == "two":
        colors = [ColorLabel("a", False), ColorLabel("b", True)]
    elif coloring == "three":
        colors = [ColorLabel("b", True), ColorLabel("c", True), ColorLabel("d", True)]
    else:
        raise ValueError("coloring must be 'two' or 'three'")
    span = radius + 2
    bld = GraphBuilder(colors)
    ids = {}
    for i in range(count):
        for j in range(-span, span + 1):
            ids[(i, j)] = bld.add_vertex()
    for i in range(count):
        for j in range(-span, span):
            u, w = ids[(i, j)], ids[(i, j + 1)]
            if coloring == "two":
                if alternate and i % 2:
                    bld.connect(w, u, "a", 1)
                else:
                    bld.connect(u, w, "a", 1)
            else:
                bld.connect(u, w, "b" if (i + j) % 2 == 0 else "d", 1)
        for j in range(-span, span + 1):
            if (i + j) % 2 == 0:
                bld.connect(ids[(i, j)], ids[((i + 1) % count, j)], "b" if coloring == "two" else "c", 1)
    g = bld.freeze(ids[(0, 0)])
    return g.ball(radius)
