"""Rotation systems induced by spins, face tracing and planarity checks.

Each vertex of a cubic coloured graph has three darts.  A spin is one of the
two cyclic orders of them: ``+1`` is the graph's letter order (``a+, a-, b``
or ``b, c, d``), ``-1`` the reverse.  A spin assignment fixes for every colour
whether its edges preserve or reverse spin; spins then propagate from the
root, and a colour is consistent when every edge agrees with its class.
"""

from __future__ import annotations

import itertools
from collections import Counter, deque
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field

from .graph import MISSING, ColoredGraph
from .words import Word

PRESERVE = "preserve"
REVERSE = "reverse"


class SpinError(ValueError):
    """A colour class is contradicted by some edge."""

    def __init__(self, symbol: str, u: int, v: int):
        super().__init__(f"colour {symbol} is inconsistent on edge {u}-{v}")
        self.symbol = symbol
        self.edge = (u, v)


@dataclass(frozen=True)
class SpinAssignment:
    """Per-colour class plus the propagated spin of every vertex."""

    classes: Mapping[str, str]
    spins: tuple[int, ...]

    def signature(self) -> dict[str, str]:
        return dict(sorted(self.classes.items()))


def propagate_spins(g: ColoredGraph, classes: Mapping[str, str], strict: bool = True) -> tuple[int, ...]:
    """Spins of all vertices from the root's ``+1`` and the colour classes.

    With ``strict`` an inconsistent edge raises :class:`SpinError`.
    """
    for s in g.symbols:
        if classes.get(s) not in (PRESERVE, REVERSE):
            raise ValueError(f"no preserve/reverse class for colour {s}")
    flip = [1 if classes[s] == PRESERVE else -1 for s, _ in g.letters]
    spin = [0] * len(g)
    spin[g.root] = 1
    queue = deque([g.root])
    while queue:
        v = queue.popleft()
        for li, w in enumerate(g.nbr[v]):
            if w == MISSING:
                continue
            want = spin[v] * flip[li]
            if spin[w] == 0:
                spin[w] = want
                queue.append(w)
            elif spin[w] != want and strict:
                raise SpinError(g.letters[li][0], v, w)
    return tuple(spin)


def spin_assignment(g: ColoredGraph, classes: Mapping[str, str]) -> SpinAssignment:
    return SpinAssignment(dict(classes), propagate_spins(g, classes))


@dataclass(frozen=True)
class ConsistencyResult:
    passed: bool
    color: str | None = None
    edge: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.passed


def check_consistency(g: ColoredGraph, spin: SpinAssignment) -> ConsistencyResult:
    """Every edge of every colour joins vertices as its class demands."""
    for v in range(len(g)):
        for li, w in enumerate(g.nbr[v]):
            if w == MISSING or w < v:
                continue
            s = g.letters[li][0]
            same = spin.spins[v] == spin.spins[w]
            if same != (spin.classes[s] == PRESERVE):
                return ConsistencyResult(False, s, (v, w))
    return ConsistencyResult(True)


@dataclass(frozen=True)
class RotationSystem:
    """Cyclic dart order (letter indices) at each vertex; missing darts are dropped."""

    graph: ColoredGraph
    order: tuple[tuple[int, ...], ...]

    def successor(self, v: int, li: int) -> int | None:
        cyc = self.order[v]
        if len(cyc) < len(self.graph.letters):
            return None
        k = cyc.index(li)
        return cyc[(k + 1) % len(cyc)]


def derive_rotation_system(g: ColoredGraph, spin: SpinAssignment) -> RotationSystem:
    k = len(g.letters)
    base = tuple(range(k))
    rev = tuple(reversed(base))
    out = []
    for v in range(len(g)):
        cyc = base if spin.spins[v] >= 0 else rev
        out.append(tuple(li for li in cyc if g.nbr[v][li] != MISSING))
    return RotationSystem(g, tuple(out))


@dataclass(frozen=True)
class Face:
    darts: tuple[tuple[int, int], ...]
    closed: bool

    @property
    def size(self) -> int:
        return len(self.darts)


@dataclass
class FaceCensus:
    faces: list[Face]
    darts_total: int
    duplicate: bool = False
    histogram: dict[int, int] = field(default_factory=dict)

    @property
    def closed(self) -> list[Face]:
        return [f for f in self.faces if f.closed]

    @property
    def open_count(self) -> int:
        return sum(1 for f in self.faces if not f.closed)

    def to_json(self) -> dict:
        return {
            "closed": len(self.closed),
            "open": self.open_count,
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
        }


def _step(r: RotationSystem, v: int, li: int) -> tuple[int, int] | None:
    g = r.graph
    w = g.nbr[v][li]
    if w == MISSING:
        return None
    nxt = r.successor(w, g.inv[li])
    if nxt is None:
        return None
    return (w, nxt)


def trace_faces(r: RotationSystem) -> FaceCensus:
    """Partition darts into face walks by the reverse-then-rotate rule.

    Walks running into an incomplete vertex are open; they are traced from
    their earliest dart so every dart is used once.
    """
    g = r.graph
    darts = [(v, li) for v in range(len(g)) for li in range(len(g.letters)) if g.nbr[v][li] != MISSING]
    seen: set[tuple[int, int]] = set()
    faces: list[Face] = []
    # predecessors let open walks start at their true beginning
    pred: dict[tuple[int, int], tuple[int, int]] = {}
    for d in darts:
        nd = _step(r, *d)
        if nd is not None:
            pred[nd] = d
    duplicate = False
    for d in darts:
        if d in seen:
            continue
        start = d
        hops = 0
        while start in pred and pred[start] != d and hops <= len(darts):
            start = pred[start]
            hops += 1
        closed_loop = start in pred and pred[start] == d
        if closed_loop:
            start = d
        walk = []
        cur = start
        closed = False
        while True:
            if cur in seen:
                duplicate = True
                break
            seen.add(cur)
            walk.append(cur)
            nxt = _step(r, *cur)
            if nxt is None:
                break
            if nxt == start:
                closed = True
                break
            cur = nxt
        faces.append(Face(tuple(walk), closed))
    hist = Counter(f.size for f in faces if f.closed)
    return FaceCensus(faces, len(darts), duplicate, dict(sorted(hist.items())))


def face_word(g: ColoredGraph, face: Face) -> Word:
    return tuple(g.letters[li] for _, li in face.darts)


@dataclass(frozen=True)
class PlanarityResult:
    passed: bool
    detail: str

    def __bool__(self) -> bool:
        return self.passed


def planarity_verify(g: ColoredGraph, census: FaceCensus) -> PlanarityResult:
    """Euler's formula on complete graphs; a clean dart partition on balls."""
    used = sum(f.size for f in census.faces)
    if census.duplicate or used != census.darts_total:
        return PlanarityResult(False, "face walks do not partition the darts")
    if g.is_finite_complete:
        if census.open_count:
            return PlanarityResult(False, "open face walk in a complete graph")
        v = len(g)
        e = census.darts_total // 2
        f = len(census.faces)
        chi = v - e + f
        return PlanarityResult(chi == 2, f"V-E+F = {v}-{e}+{f} = {chi}")
    return PlanarityResult(True, f"{len(census.closed)} closed and {census.open_count} open walks, no dart reused")


def embed(g: ColoredGraph, classes: Mapping[str, str]) -> tuple[SpinAssignment, RotationSystem, FaceCensus]:
    spin = spin_assignment(g, classes)
    rot = derive_rotation_system(g, spin)
    return spin, rot, trace_faces(rot)


# -- measuring the spin signature ---------------------------------------------


def _sides_split(g: ColoredGraph, rot: RotationSystem, cycle: list[int], cols: list[int]) -> bool:
    """Jordan test: no component of the graph minus ``cycle`` meets both sides.

    ``cycle`` lists vertices, ``cols`` the letters leaving each of them.
    """
    on = set(cycle)
    side: dict[int, set[int]] = {1: set(), -1: set()}
    for i, v in enumerate(cycle):
        out = cols[i]
        back = g.inv[cols[i - 1]]
        cyc = rot.order[v]
        if len(cyc) < len(g.letters):
            return True
        k = cyc.index(out)
        # darts strictly between ``out`` and ``back`` counterclockwise lie left
        j = (k + 1) % len(cyc)
        s = 1
        while cyc[j] != out:
            if cyc[j] == back:
                s = -1
            else:
                w = g.nbr[v][cyc[j]]
                if w not in on:
                    side[s].add(w)
            j = (j + 1) % len(cyc)
    if not side[1] or not side[-1]:
        return True
    comp: dict[int, int] = {}
    for seed in side[1]:
        if seed in comp:
            continue
        comp[seed] = 1
        queue = deque([seed])
        while queue:
            x = queue.popleft()
            for w in g.nbr[x]:
                if w != MISSING and w not in on and w not in comp:
                    comp[w] = 1
                    queue.append(w)
    return not any(w in comp for w in side[-1])


def _relator_cycles(g: ColoredGraph, relators: Iterable[Word], start: int, limit: int) -> list[tuple[list[int], list[int]]]:
    from .words import inverse, rotations

    out = []
    seen = set()
    inv = g.involutions
    for r in relators:
        for w in rotations(tuple(r)) + rotations(inverse(tuple(r), inv)):
            cols = [g.index(x) for x in w]
            v = start
            path = [v]
            ok = True
            for c in cols:
                v = g.nbr[v][c]
                if v == MISSING:
                    ok = False
                    break
                path.append(v)
            if not ok or path[-1] != start or len(set(path[:-1])) != len(cols):
                continue
            key = frozenset(zip(path[:-1], cols))
            if key in seen:
                continue
            seen.add(key)
            out.append((path[:-1], cols))
            if len(out) >= limit:
                return out
    return out


def _faces_at(g: ColoredGraph, rot: RotationSystem, v: int, max_len: int) -> list[Word] | None:
    words = []
    for li in rot.order[v]:
        walk = []
        cur = (v, li)
        for _ in range(max_len + 1):
            walk.append(g.letters[cur[1]])
            nxt = _step(rot, *cur)
            if nxt is None:
                return None
            cur = nxt
            if cur == (v, li):
                break
        else:
            return None
        words.append(tuple(walk))
    return words


def planar_signatures(
    g: ColoredGraph,
    face_relators: Sequence[Word],
    all_relators: Sequence[Word],
    cycle_limit: int = 64,
) -> list[dict[str, str]]:
    """Colour classes whose induced rotation system looks planar on ``g``.

    Complete graphs are tested by Euler's formula.  On balls a signature must
    be consistent, every face at the root must close along a face relator
    (when there are face relators), and no relator cycle through the root may
    have its two sides joined in the ball.
    """
    from .words import cyclic_variants

    syms = sorted(g.symbols)
    targets = {v for r in face_relators for v in cyclic_variants(tuple(r), g.involutions)}
    max_face = max((len(r) for r in face_relators), default=0)
    cycles = _relator_cycles(g, all_relators, g.root, cycle_limit)
    good = []
    for combo in itertools.product((PRESERVE, REVERSE), repeat=len(syms)):
        classes = dict(zip(syms, combo))
        try:
            spin = spin_assignment(g, classes)
        except SpinError:
            continue
        rot = derive_rotation_system(g, spin)
        if g.is_finite_complete:
            if planarity_verify(g, trace_faces(rot)):
                good.append(classes)
            continue
        if targets:
            words = _faces_at(g, rot, g.root, max_face)
            if words is None or any(w not in targets for w in words):
                continue
        if all(_sides_split(g, rot, c, cols) for c, cols in cycles):
            good.append(classes)
    return good
