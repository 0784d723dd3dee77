"""Edge-coloured directed multigraphs, rooted, possibly with an incomplete boundary.

Each colour is a generator symbol.  Every vertex has one outgoing slot per
letter: ``s`` and ``s^-1`` for a non-involution, a single slot ``s`` for an
involution.  An involution edge is therefore a self-inverse dart pair.  Parallel
edges of different colours are allowed.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass

from .words import Letter

MISSING = -1


class ColoringConflict(ValueError):
    """Raised when an edge insertion would give a vertex two darts of one letter."""


@dataclass(frozen=True, order=True)
class ColorLabel:
    symbol: str
    involution: bool = False


@dataclass(frozen=True)
class Dart:
    tail: int
    head: int
    color: str
    dir: int  # +1 forward, -1 backward, 0 for involutions


@dataclass(frozen=True)
class Blocked:
    """A traced word left the known part of the graph."""

    vertex: int
    position: int


@dataclass(frozen=True)
class Closed:
    """A non-empty traced word returned to its start vertex."""


CLOSED = Closed()


@dataclass(frozen=True)
class Conflict:
    reason: str
    vertex: int | None = None
    letter: Letter | None = None


def sorted_colors(colors: Iterable[ColorLabel]) -> tuple[ColorLabel, ...]:
    return tuple(sorted(colors, key=lambda c: c.symbol))


def letters_for(colors: Sequence[ColorLabel]) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for c in colors:
        out.append((c.symbol, 1))
        if not c.involution:
            out.append((c.symbol, -1))
    return tuple(out)


class ColoredGraph:
    """Immutable coloured graph stored as a letter-indexed adjacency table."""

    __slots__ = ("_boundary", "_dist", "_involutions", "colors", "inv", "letter_index", "letters", "nbr", "root")

    def __init__(self, colors: Sequence[ColorLabel], nbr: Sequence[Sequence[int]], root: int = 0):
        self.colors = sorted_colors(colors)
        self._involutions = frozenset(c.symbol for c in self.colors if c.involution)
        self.letters = letters_for(self.colors)
        self.letter_index = {l: i for i, l in enumerate(self.letters)}
        self.inv = tuple(self.letter_index[(s, 1 if s in self._involutions else -e)] for s, e in self.letters)
        self.nbr = tuple(tuple(row) for row in nbr)
        self.root = root
        self._dist: tuple[int, ...] | None = None
        self._boundary = frozenset(v for v, row in enumerate(self.nbr) if MISSING in row)
        for row in self.nbr:
            if len(row) != len(self.letters):
                raise ValueError("adjacency row width does not match the alphabet")

    def is_involution(self, symbol: str) -> bool:
        if symbol not in self.symbols:
            raise KeyError(symbol)
        return symbol in self._involutions

    @property
    def involutions(self) -> frozenset[str]:
        return self._involutions

    @property
    def symbols(self) -> tuple[str, ...]:
        return tuple(c.symbol for c in self.colors)

    def __len__(self) -> int:
        return len(self.nbr)

    @property
    def n_vertices(self) -> int:
        return len(self.nbr)

    def index(self, letter: Letter) -> int:
        s, e = letter
        if s in self.involutions:
            e = 1
        return self.letter_index[(s, e)]

    def neighbor(self, v: int, letter: Letter) -> int | None:
        w = self.nbr[v][self.index(letter)]
        return None if w == MISSING else w

    def is_complete(self, v: int) -> bool:
        return MISSING not in self.nbr[v]

    @property
    def boundary(self) -> frozenset[int]:
        return self._boundary

    @property
    def is_finite_complete(self) -> bool:
        return not self.boundary

    def degree(self, v: int) -> int:
        return sum(1 for w in self.nbr[v] if w != MISSING)

    def darts(self) -> Iterator[Dart]:
        for v, row in enumerate(self.nbr):
            for (s, e), w in zip(self.letters, row):
                if w != MISSING:
                    yield Dart(v, w, s, 0 if self.is_involution(s) else e)

    def edges(self) -> list[tuple[int, int, str]]:
        """Undirected edges, one record each: non-involutions as ``tail -> head``."""
        out = []
        for v, row in enumerate(self.nbr):
            for li, ((s, e), w) in enumerate(zip(self.letters, row)):
                if w == MISSING:
                    continue
                if self.is_involution(s):
                    if v < w:
                        out.append((v, w, s))
                elif e == 1:
                    out.append((v, w, s))
        return out

    def distances(self, source: int | None = None, limit: int | None = None) -> list[int]:
        if source is None and self._dist is not None and limit is None:
            return list(self._dist)
        src = self.root if source is None else source
        dist = [-1] * len(self.nbr)
        dist[src] = 0
        queue = deque([src])
        while queue:
            v = queue.popleft()
            dv = dist[v]
            if limit is not None and dv >= limit:
                continue
            for w in self.nbr[v]:
                if w != MISSING and dist[w] < 0:
                    dist[w] = dv + 1
                    queue.append(w)
        if source is None and limit is None:
            self._dist = tuple(dist)
        return dist

    def complete_radius(self) -> float:
        """Largest ``r`` such that every vertex at distance below ``r`` is complete."""
        dist = self.distances()
        bad = [dist[v] for v in self.boundary if dist[v] >= 0]
        return float("inf") if not bad else min(bad)

    def ball(self, radius: int, center: int | None = None) -> ColoredGraph:
        """Induced subgraph on vertices within ``radius``, relabelled in BFS order."""
        c = self.root if center is None else center
        order = bfs_order(self, c, radius)
        index = {v: i for i, v in enumerate(order)}
        rows = []
        for v in order:
            rows.append([index.get(w, MISSING) if w != MISSING else MISSING for w in self.nbr[v]])
        return ColoredGraph(self.colors, rows, 0)

    def relabel_bfs(self) -> ColoredGraph:
        order = bfs_order(self, self.root, None)
        index = {v: i for i, v in enumerate(order)}
        rows = [[index.get(w, MISSING) if w != MISSING else MISSING for w in self.nbr[v]] for v in order]
        return ColoredGraph(self.colors, rows, 0)

    def recolor(self, mapping: Mapping[str, str]) -> ColoredGraph:
        """Rename colour symbols, keeping directions."""
        colors = [ColorLabel(mapping.get(c.symbol, c.symbol), c.involution) for c in self.colors]
        new = ColoredGraph(colors, [[MISSING] * len(self.letters) for _ in self.nbr], self.root)
        rows = [list(r) for r in new.nbr]
        for v, row in enumerate(self.nbr):
            for (s, e), w in zip(self.letters, row):
                rows[v][new.letter_index[(mapping.get(s, s), e)]] = w
        return ColoredGraph(colors, rows, self.root)

    def with_root(self, root: int) -> ColoredGraph:
        return ColoredGraph(self.colors, self.nbr, root)


def bfs_order(g: ColoredGraph, start: int, radius: int | None) -> list[int]:
    """Vertices in canonical BFS order, children taken in letter order."""
    seen = {start: 0}
    order = [start]
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        d = seen[v]
        if radius is not None and d >= radius:
            continue
        for w in g.nbr[v]:
            if w != MISSING and w not in seen:
                seen[w] = d + 1
                order.append(w)
    return order


class GraphBuilder:
    """Mutable construction helper for :class:`ColoredGraph`."""

    def __init__(self, colors: Sequence[ColorLabel]):
        self.colors = sorted_colors(colors)
        self.letters = letters_for(self.colors)
        self.letter_index = {l: i for i, l in enumerate(self.letters)}
        inv = {c.symbol for c in self.colors if c.involution}
        self.involutions = frozenset(inv)
        self.inv = [self.letter_index[(s, 1 if s in inv else -e)] for s, e in self.letters]
        self.rows: list[list[int]] = []

    def add_vertex(self) -> int:
        self.rows.append([MISSING] * len(self.letters))
        return len(self.rows) - 1

    def add_vertices(self, n: int) -> list[int]:
        return [self.add_vertex() for _ in range(n)]

    def index(self, symbol: str, sign: int = 1) -> int:
        if symbol in self.involutions:
            sign = 1
        return self.letter_index[(symbol, sign)]

    def connect(self, u: int, v: int, symbol: str, sign: int = 1) -> None:
        """Insert the edge ``u --symbol^sign--> v`` together with its reverse dart."""
        li = self.index(symbol, sign)
        lj = self.inv[li]
        for a, l, b in ((u, li, v), (v, lj, u)):
            cur = self.rows[a][l]
            if cur != MISSING and cur != b:
                raise ColoringConflict(f"vertex {a} already has a {self.letters[l]} dart")
        self.rows[u][li] = v
        self.rows[v][lj] = u

    def freeze(self, root: int = 0) -> ColoredGraph:
        return ColoredGraph(self.colors, self.rows, root)


def from_darts(colors: Sequence[ColorLabel], n: int, darts: Iterable[tuple[int, int, str, int]], root: int = 0) -> ColoredGraph:
    """Build a graph from ``(tail, head, colour, dir)`` records."""
    b = GraphBuilder(colors)
    b.add_vertices(n)
    for tail, head, color, d in darts:
        b.connect(tail, head, color, -1 if d == -1 else 1)
    return b.freeze(root)


def trace_word(g: ColoredGraph, start: int, word: Sequence[Letter]) -> int | Blocked | Closed:
    """Follow ``word`` from ``start``."""
    v = start
    inv = g.involutions
    for pos, (s, e) in enumerate(word):
        w = g.nbr[v][g.letter_index[(s, 1 if s in inv else e)]]
        if w == MISSING:
            return Blocked(v, pos)
        v = w
    if word and v == start:
        return CLOSED
    return v


def walk(g: ColoredGraph, start: int, word: Sequence[Letter]) -> list[int] | None:
    """Vertex sequence of the walk, or ``None`` when blocked."""
    path = [start]
    v = start
    inv = g.involutions
    for s, e in word:
        v = g.nbr[v][g.letter_index[(s, 1 if s in inv else e)]]
        if v == MISSING:
            return None
        path.append(v)
    return path


def extend_color_map(
    source: ColoredGraph,
    target: ColoredGraph,
    seed: Mapping[int, int],
    colors: Mapping[str, str] | None = None,
    *,
    partial: bool = False,
    limit: int | None = None,
) -> dict[int, int] | Conflict:
    """Extend a partial vertex map by BFS so that darts map to darts.

    ``colors`` renames source symbols to target symbols (directions kept).
    With ``partial`` a dart missing on either side is skipped instead of
    reported.  ``limit`` bounds the BFS depth from the seed.
    """
    cmap = dict(colors or {})
    letter_map = []
    for s, e in source.letters:
        t = cmap.get(s, s)
        try:
            letter_map.append(target.index((t, e)))
        except KeyError:
            return Conflict(f"colour {t} absent from target")
        if source.is_involution(s) != target.is_involution(t):
            return Conflict(f"involution flag mismatch on {s}")
    fwd: dict[int, int] = dict(seed)
    back: dict[int, int] = {}
    for a, b in fwd.items():
        if b in back and back[b] != a:
            return Conflict("seed is not injective", a)
        back[b] = a
    depth = {a: 0 for a in fwd}
    queue = deque(fwd)
    while queue:
        u = queue.popleft()
        if limit is not None and depth[u] >= limit:
            continue
        t = fwd[u]
        for li, tl in enumerate(letter_map):
            su = source.nbr[u][li]
            tu = target.nbr[t][tl]
            if su == MISSING or tu == MISSING:
                if su == tu or partial:
                    continue
                return Conflict("dart present on one side only", u, source.letters[li])
            if su in fwd:
                if fwd[su] != tu:
                    return Conflict("inconsistent image", su, source.letters[li])
                continue
            if tu in back:
                return Conflict("map is not injective", su, source.letters[li])
            fwd[su] = tu
            back[tu] = su
            depth[su] = depth[u] + 1
            queue.append(su)
    return fwd


@dataclass(frozen=True)
class SabidussiResult:
    passed: bool
    witness: tuple[int, int] | None = None
    checked: int = 0
    reason: str = ""


def sabidussi_check(g: ColoredGraph, radius: int | None = None) -> SabidussiResult:
    """Colour-preserving local isomorphism between the root and every vertex.

    On a complete finite graph every vertex must be the image of the root
    under a global colour automorphism.  On a ball, every vertex whose
    ``radius``-neighbourhood lies in the complete part is compared with the
    root up to that radius.
    """
    n = len(g)
    if g.is_finite_complete:
        for v in range(n):
            m = extend_color_map(g, g, {g.root: v})
            if isinstance(m, Conflict):
                return SabidussiResult(False, (g.root, v), v, m.reason)
            if len(m) != n:
                return SabidussiResult(False, (g.root, v), v, "graph is not connected")
        return SabidussiResult(True, None, n)
    if radius is None:
        raise ValueError("a radius is required for graphs with a boundary")
    dist = g.distances()
    inner = g.complete_radius()
    if inner < radius:
        return SabidussiResult(True, None, 0, "ball too small for the requested radius")
    checked = 0
    for v in range(n):
        if dist[v] < 0 or dist[v] + radius > inner:
            continue
        m = extend_color_map(g, g, {g.root: v}, limit=radius)
        checked += 1
        if isinstance(m, Conflict):
            return SabidussiResult(False, (g.root, v), checked, m.reason)
    return SabidussiResult(True, None, checked)


def rooted_canonical_form(g: ColoredGraph, radius: int | None = None) -> bytes:
    """Canonical bytes of the rooted coloured graph (or its ``radius``-ball).

    Vertices are numbered in BFS order with children visited in the fixed
    letter order; each row lists the neighbour numbers per letter, ``.``
    marking a dart that is missing or leaves the ball.
    """
    order = bfs_order(g, g.root, radius)
    index = {v: i for i, v in enumerate(order)}
    head = ",".join(f"{s}{'+' if e == 1 else '-'}" for s, e in g.letters)
    parts = [head]
    for v in order:
        cells = []
        for w in g.nbr[v]:
            j = index.get(w) if w != MISSING else None
            cells.append("." if j is None else str(j))
        parts.append(",".join(cells))
    return ";".join(parts).encode("ascii")


def edge_key(g: ColoredGraph, u: int, v: int, symbol: str) -> tuple[int, int, str]:
    if g.is_involution(symbol) and v < u:
        u, v = v, u
    return (u, v, symbol)
