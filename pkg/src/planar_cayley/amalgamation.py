"""Amalgamation builders: copies of a subdivided auxiliary graph glued along cycles.

An auxiliary Cayley graph ``G2`` is subdivided by a metaedge map: each colour
``x`` of ``G2`` becomes a path spelling a word ``sigma(x)`` in the target
colours.  Vertices of ``G2`` become the *corners* of a copy.  For each basic
cycle (a cycle induced by one of the glue words) of a copy, a further copy is
attached so that the cycle is shared, the labels agree, and the new copy has
its corners on the other society of the cycle, i.e. on vertices that are not
corners of the first copy.  Copies are created lazily, only where the
breadth-first ball around the root needs them.

Mohar and twist-squeeze amalgamations are the special cases where the glue
cycles are subdivided into halves or every other edge into three.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field

from .graph import MISSING, ColoredGraph, ColorLabel, GraphBuilder
from .words import Letter, Word, inverse, normalize, rotations


class AuxiliaryTooSmall(RuntimeError):
    """The auxiliary ball does not reach far enough for the requested radius."""


class GluingError(RuntimeError):
    """No label-consistent placement of a copy exists on some basic cycle."""


@dataclass(frozen=True)
class MetaedgeMap:
    """Substitution of auxiliary colours by target words, and the glue words.

    ``substitution`` maps every auxiliary symbol to a non-empty target word;
    words of involution symbols must equal their own inverse.  ``glue`` lists
    the auxiliary words whose cycles are shared between copies.
    """

    substitution: Mapping[str, Word]
    glue: tuple[Word, ...]
    target: tuple[ColorLabel, ...]


@dataclass
class _Copy:
    origin: int
    corner: dict[int, int] = field(default_factory=dict)
    path: dict[tuple[int, int], list[int]] = field(default_factory=dict)
    glued: set[frozenset] = field(default_factory=set)


@dataclass
class AmalgamationResult:
    graph: ColoredGraph
    copies: int
    aux_vertices: int
    meta: dict = field(default_factory=dict)


class _Engine:
    def __init__(self, g2: ColoredGraph, mm: MetaedgeMap, max_vertices: int):
        self.g2 = g2
        self.mm = mm
        self.max_vertices = max_vertices
        self.tinv = frozenset(c.symbol for c in mm.target if c.involution)
        self.builder = GraphBuilder(mm.target)
        self.copies: list[_Copy] = []
        self.roles: list[list[tuple[int, str, object]]] = []
        g2inv = g2.involutions
        self.sigma: dict[int, Word] = {}
        for li, (s, e) in enumerate(g2.letters):
            w = normalize(mm.substitution[s], self.tinv)
            if not w:
                raise ValueError(f"empty image for {s}")
            if s in g2inv and inverse(w, self.tinv) != w:
                raise ValueError(f"image of involution {s} is not symmetric")
            self.sigma[li] = w if e == 1 else inverse(w, self.tinv)
        self.glue_variants: list[tuple[int, ...]] = []
        seen = set()
        for w in mm.glue:
            w = normalize(w, g2inv)
            for v in rotations(w) + rotations(inverse(w, g2inv)):
                cols = tuple(g2.index(x) for x in v)
                if cols not in seen:
                    seen.add(cols)
                    self.glue_variants.append(cols)
        self._cycle_cache: dict[tuple[int, int], list[tuple[frozenset, list[int], list[int]]]] = {}
        self._origin_cycles = self._cycles_at(g2.root)

    # -- auxiliary graph helpers ------------------------------------------
    def edge_key(self, u: int, li: int) -> tuple[int, int]:
        """Canonical key of the auxiliary edge leaving ``u`` by letter ``li``."""
        g2 = self.g2
        w = g2.nbr[u][li]
        if w == MISSING:
            raise AuxiliaryTooSmall(f"auxiliary vertex {u} is incomplete")
        s, e = g2.letters[li]
        if s in g2.involutions:
            return (min(u, w), li)
        if e == 1:
            return (u, li)
        return (w, g2.inv[li])

    def _trace(self, u: int, cols: Sequence[int]) -> list[int] | None:
        path = [u]
        nbr = self.g2.nbr
        for c in cols:
            u = nbr[u][c]
            if u == MISSING:
                raise AuxiliaryTooSmall("a glue cycle leaves the auxiliary ball")
            path.append(u)
        return path

    def _cycles_at(self, u: int) -> list[tuple[frozenset, list[int], list[int]]]:
        """Glue cycles through ``u`` as (edge-key set, vertex list, letter list) from ``u``."""
        out = []
        keys = set()
        for cols in self.glue_variants:
            path = self._trace(u, cols)
            if path[-1] != u or len(set(path[:-1])) != len(cols):
                continue
            key = frozenset(self.edge_key(path[i], c) for i, c in enumerate(cols))
            if key in keys:
                continue
            keys.add(key)
            out.append((key, path, list(cols)))
        return out

    def cycles_through_edge(self, ek: tuple[int, int]) -> list[tuple[frozenset, list[int], list[int]]]:
        hit = self._cycle_cache.get(ek)
        if hit is None:
            t, _ = ek
            hit = [c for c in self._cycles_at(t) if ek in c[0]]
            self._cycle_cache[ek] = hit
        return hit

    # -- target graph helpers ----------------------------------------------
    def new_vertex(self) -> int:
        if len(self.builder.rows) >= self.max_vertices:
            raise RuntimeError("amalgamation exceeded the vertex limit")
        self.roles.append([])
        return self.builder.add_vertex()

    def corner(self, k: int, u: int, existing: int | None = None) -> int:
        cp = self.copies[k]
        v = cp.corner.get(u)
        if v is None:
            v = self.new_vertex() if existing is None else existing
            cp.corner[u] = v
            self.roles[v].append((k, "corner", u))
        elif existing is not None and existing != v:
            raise GluingError("copy corner placed on two vertices")
        return v

    def edge(self, k: int, ek: tuple[int, int], given: list[int] | None = None) -> list[int]:
        """Materialise an auxiliary edge of copy ``k``; returns its vertex path."""
        cp = self.copies[k]
        got = cp.path.get(ek)
        t, li = ek
        word = self.sigma[li]
        if got is not None:
            if given is not None and given != got:
                raise GluingError("metaedge placed on two different paths")
            return got
        h = self.g2.nbr[t][li]
        if given is None:
            a = self.corner(k, t)
            b = self.corner(k, h)
            inner = [self.new_vertex() for _ in range(len(word) - 1)]
            got = [a] + inner + [b]
        else:
            got = list(given)
            self.corner(k, t, got[0])
            self.corner(k, h, got[-1])
        for i in range(1, len(got) - 1):
            self.roles[got[i]].append((k, "inner", (ek, i)))
        for i, (s, e) in enumerate(word):
            self.builder.connect(got[i], got[i + 1], s, e)
        cp.path[ek] = got
        return got

    def complete_corner(self, k: int, u: int) -> None:
        for li in range(len(self.g2.letters)):
            self.edge(k, self.edge_key(u, li))

    def cycle_walk(self, k: int, start: int, cols: Sequence[int]) -> tuple[list[int], list[Letter], list[bool]]:
        """Expanded vertices, labels and corner flags of a cycle of copy ``k``."""
        verts: list[int] = []
        labels: list[Letter] = []
        flags: list[bool] = []
        u = start
        for c in cols:
            ek = self.edge_key(u, c)
            p = self.edge(k, ek)
            if ek[0] != u or ek[1] != c:
                p = p[::-1]
            word = self.sigma[c]
            verts.extend(p[:-1])
            labels.extend(word)
            flags.extend([True] + [False] * (len(word) - 1))
            u = self.g2.nbr[u][c]
        return verts, labels, flags

    # -- gluing -------------------------------------------------------------
    def glue(self, k: int, key: frozenset, path: list[int], cols: list[int]) -> None:
        cp = self.copies[k]
        if key in cp.glued:
            return
        cp.glued.add(key)
        verts, labels, flags = self.cycle_walk(k, path[0], cols)
        n = len(verts)
        tinv = self.tinv
        for vkey, vpath, vcols in self._origin_cycles:
            exp: list[Letter] = []
            offs: list[int] = []
            for c in vcols:
                offs.append(len(exp))
                exp.extend(self.sigma[c])
            if len(exp) != n:
                continue
            for p in range(n):
                if flags[p]:
                    continue
                for direction in (1, -1):
                    ok = True
                    for i in range(n):
                        if direction == 1:
                            lab = labels[(p + i) % n]
                        else:
                            s, e = labels[(p - i - 1) % n]
                            lab = (s, 1) if s in tinv else (s, -e)
                        if lab != exp[i]:
                            ok = False
                            break
                    if not ok:
                        continue
                    if any(flags[(p + direction * o) % n] for o in offs):
                        continue
                    self._attach(verts, p, direction, vkey, vpath, vcols)
                    return
        raise GluingError("no placement of a copy on a basic cycle")

    def _attach(self, verts, p, direction, vkey, vpath, vcols) -> None:
        n = len(verts)
        k = len(self.copies)
        self.copies.append(_Copy(origin=verts[p % n]))
        self.copies[k].glued.add(vkey)
        pos = 0
        for j, c in enumerate(vcols):
            u = vpath[j]
            word = self.sigma[c]
            seg = [verts[(p + direction * (pos + i)) % n] for i in range(len(word) + 1)]
            ek = self.edge_key(u, c)
            if ek[0] != u or ek[1] != c:
                seg = seg[::-1]
            self.edge(k, ek, seg)
            pos += len(word)

    # -- driver -------------------------------------------------------------
    def complete(self, v: int) -> None:
        for _ in range(64):
            corners = [(k, u) for k, kind, u in self.roles[v] if kind == "corner"]
            if corners:
                k, u = corners[0]
                self.complete_corner(k, u)
                return
            for k, kind, data in list(self.roles[v]):
                ek, _ = data
                for key, path, cols in self.cycles_through_edge(ek):
                    self.glue(k, key, path, cols)
        raise GluingError(f"vertex {v} is never a corner")

    def run(self, radius: int) -> ColoredGraph:
        self.copies.append(_Copy(origin=-1))
        root = self.corner(0, self.g2.root)
        self.copies[0].origin = root
        while True:
            g = self.builder.freeze(root)
            dist = g.distances()
            todo = [v for v in range(len(g)) if 0 <= dist[v] <= radius and not g.is_complete(v)]
            if not todo:
                return g.ball(radius)
            for v in todo:
                self.complete(v)


def amalgamate(g2: ColoredGraph, mm: MetaedgeMap, radius: int, max_vertices: int = 2_000_000) -> AmalgamationResult:
    """Radius-``radius`` ball of the amalgamation of ``g2`` with itself."""
    eng = _Engine(g2, mm, max_vertices)
    g = eng.run(radius)
    return AmalgamationResult(g, len(eng.copies), len(g2), {"vertices_built": len(eng.builder.rows)})


def mohar_amalgamation(
    g2: ColoredGraph,
    along: Word,
    radius: int,
    split: Mapping[str, Word],
    target: Sequence[ColorLabel],
) -> AmalgamationResult:
    """Glue copies along the cycles of ``along`` whose edges ``split`` halves."""
    sub = {s: split.get(s, ((s, 1),)) for s in g2.symbols}
    return amalgamate(g2, MetaedgeMap(sub, (along,), tuple(target)), radius)


def twist_squeeze_amalgamation(
    g2: ColoredGraph,
    along: Sequence[Word],
    radius: int,
    squeeze: Mapping[str, Word],
    target: Sequence[ColorLabel],
) -> AmalgamationResult:
    """Glue copies along ``along`` cycles, every other edge squeezed into three."""
    sub = {s: squeeze.get(s, ((s, 1),)) for s in g2.symbols}
    return amalgamate(g2, MetaedgeMap(sub, tuple(along), tuple(target)), radius)


def metaedge_substitution_builder(core: ColoredGraph, mm: MetaedgeMap, radius: int) -> AmalgamationResult:
    """General metaedge substitution of ``core`` followed by copy gluing."""
    return amalgamate(core, mm, radius)
