"""Todd-Coxeter coset enumeration over the trivial subgroup.

Two definition strategies are available: ``"felsch"`` defines cosets in
breadth-first order and closes every relator through each new edge before
the next definition; ``"hlt"`` scans whole relators from each coset in turn
and defines cosets along them.  Both share the coincidence routine.

In ball mode cosets are only defined up to a depth horizon, so the table is
partial; the caller extracts the inner ball and certifies it by enlarging
the horizon and checking the ball does not change.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import MISSING, Closed, ColoredGraph, rooted_canonical_form, trace_word
from .presentation import Presentation
from .words import inverse, rotations


class BudgetExceeded(RuntimeError):
    """The enumeration needed more cosets than allowed; no graph is returned."""


@dataclass(frozen=True)
class BallSpec:
    radius: int
    coset_budget: int = 2_000_000
    margin: int | None = None
    strategy: str = "felsch"
    certify: bool = True


@dataclass(frozen=True)
class BallCertificate:
    radius: int
    horizon: int
    check_horizon: int
    stable: bool
    relators_close: bool
    vertices: int


@dataclass
class BallGraph:
    graph: ColoredGraph
    radius: int
    certificate: BallCertificate | None = None
    meta: dict = field(default_factory=dict)


class CosetTable:
    def __init__(self, p: Presentation, budget: int, strategy: str = "felsch"):
        from .graph import letters_for, sorted_colors

        self.colors = sorted_colors(p.generators)
        self.letters = letters_for(self.colors)
        self.letter_index = {l: i for i, l in enumerate(self.letters)}
        inv_set = p.involutions
        self.inv = [self.letter_index[(s, 1 if s in inv_set else -e)] for s, e in self.letters]
        self.ncols = len(self.letters)
        self.budget = budget
        self.strategy = strategy
        rels = []
        for r in p.all_relators:
            rels.append([self.letter_index[(s, 1 if s in inv_set else e)] for s, e in r])
        self.relators = rels
        # conjugates of every relator and its inverse, grouped by first column
        by_first: list[list[tuple[int, ...]]] = [[] for _ in range(self.ncols)]
        seen = set()
        for r in p.all_relators:
            for w in rotations(r) + rotations(inverse(r, inv_set)):
                cols = tuple(self.letter_index[(s, 1 if s in inv_set else e)] for s, e in w)
                if cols and cols not in seen:
                    seen.add(cols)
                    by_first[cols[0]].append(cols)
        self.conjugates = by_first
        self.table: list[list[int]] = []
        self.parent: list[int] = []
        self.depth: list[int] = []
        self.live = 0
        self.deductions: list[tuple[int, int]] = []
        self.new_coset(0)

    # -- bookkeeping -------------------------------------------------------
    def new_coset(self, depth: int) -> int:
        if self.live >= self.budget:
            raise BudgetExceeded(f"coset budget {self.budget} exhausted")
        self.table.append([MISSING] * self.ncols)
        self.parent.append(len(self.parent))
        self.depth.append(depth)
        self.live += 1
        return len(self.table) - 1

    def find(self, c: int) -> int:
        parent = self.parent
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def is_live(self, c: int) -> bool:
        return self.parent[c] == c

    def define(self, c: int, x: int) -> int:
        d = self.new_coset(self.depth[c] + 1)
        self.table[c][x] = d
        self.table[d][self.inv[x]] = c
        self.deductions.append((c, x))
        return d

    def _relax(self, u: int, v: int) -> None:
        depth = self.depth
        if depth[v] > depth[u] + 1:
            depth[v] = depth[u] + 1
        elif depth[u] > depth[v] + 1:
            depth[u] = depth[v] + 1

    # -- coincidences --------------------------------------------------------
    def coincidence(self, a: int, b: int) -> None:
        table, inv = self.table, self.inv
        queue: list[int] = []

        def merge(k: int, l: int) -> None:
            k, l = self.find(k), self.find(l)
            if k == l:
                return
            if k > l:
                k, l = l, k
            self.parent[l] = k
            self.depth[k] = min(self.depth[k], self.depth[l])
            self.live -= 1
            queue.append(l)

        merge(a, b)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            row = table[e]
            for x in range(self.ncols):
                f = row[x]
                if f == MISSING:
                    continue
                ix = inv[x]
                if table[f][ix] == e:
                    table[f][ix] = MISSING
                e1 = self.find(e)
                f1 = self.find(f)
                if table[e1][x] != MISSING:
                    merge(f1, table[e1][x])
                elif table[f1][ix] != MISSING:
                    merge(e1, table[f1][ix])
                else:
                    table[e1][x] = f1
                    table[f1][ix] = e1
                    self._relax(e1, f1)
                    self.deductions.append((e1, x))

    # -- relator scanning -------------------------------------------------
    def scan_and_fill(self, c: int, w: tuple[int, ...] | list[int], define_limit: int | None = None) -> None:
        """Scan ``w`` at ``c``; deduce a single gap and record coincidences.

        With ``define_limit`` set (HLT), cosets are defined along the word
        while their depth stays within the limit.
        """
        table, inv = self.table, self.inv
        n = len(w)
        f = c
        i = 0
        b = c
        j = n - 1
        while True:
            while i <= j and table[f][w[i]] != MISSING:
                f = table[f][w[i]]
                i += 1
            if i > j:
                if f != c:
                    self.coincidence(f, c)
                return
            while j >= i and table[b][inv[w[j]]] != MISSING:
                b = table[b][inv[w[j]]]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                table[f][w[i]] = b
                table[b][inv[w[i]]] = f
                self._relax(f, b)
                self.deductions.append((f, w[i]))
                return
            if define_limit is None or self.depth[f] >= define_limit:
                return
            self.define(f, w[i])

    def process_deductions(self) -> None:
        conj = self.conjugates
        while self.deductions:
            c, x = self.deductions.pop()
            if not self.is_live(c):
                continue
            # conjugates include inverses, so scanning from c covers every
            # relator cycle through the new edge
            for w in conj[x]:
                if not self.is_live(c):
                    break
                self.scan_and_fill(c, w)

    # -- drivers ---------------------------------------------------------------
    def run(self, horizon: int | None) -> bool:
        """Enumerate; returns True when the table is complete."""
        if self.strategy == "hlt":
            return self._run_hlt(horizon)
        return self._run_felsch(horizon)

    def _run_felsch(self, horizon: int | None) -> bool:
        table = self.table
        complete = True
        c = 0
        while c < len(table):
            if self.is_live(c):
                for x in range(self.ncols):
                    if not self.is_live(c):
                        break
                    if table[c][x] != MISSING:
                        continue
                    if horizon is not None and self.depth[c] >= horizon:
                        complete = False
                        break
                    self.define(c, x)
                    self.process_deductions()
            c += 1
        self.process_deductions()
        return complete and self._all_full()

    def _run_hlt(self, horizon: int | None) -> bool:
        table = self.table
        c = 0
        limit = horizon if horizon is not None else 1 << 60
        while c < len(table):
            if self.is_live(c) and self.depth[c] < limit:
                for r in self.relators:
                    if not self.is_live(c):
                        break
                    self.scan_and_fill(c, r, define_limit=limit)
                    self.process_deductions()
                if self.is_live(c):
                    for x in range(self.ncols):
                        if table[c][x] == MISSING and self.depth[c] < limit:
                            self.define(c, x)
                            self.process_deductions()
                        if not self.is_live(c):
                            break
            c += 1
        self.process_deductions()
        return self._all_full()

    def _all_full(self) -> bool:
        return all(MISSING not in self.table[c] for c in range(len(self.table)) if self.is_live(c))

    def to_graph(self, radius: int | None = None) -> ColoredGraph:
        """Live cosets as a graph, in BFS order from the identity coset."""
        table = self.table
        order = [0]
        dist = {0: 0}
        i = 0
        while i < len(order):
            v = order[i]
            i += 1
            if radius is not None and dist[v] >= radius:
                continue
            for w in table[v]:
                if w != MISSING:
                    w = self.find(w)
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        order.append(w)
        index = {v: k for k, v in enumerate(order)}
        rows = []
        for v in order:
            row = []
            for w in table[v]:
                if w == MISSING:
                    row.append(MISSING)
                else:
                    row.append(index.get(self.find(w), MISSING))
            rows.append(row)
        return ColoredGraph(self.colors, rows, 0)


def build_finite(p: Presentation, budget: int = 100_000, strategy: str = "felsch") -> ColoredGraph:
    """Complete Cayley graph of a finite group, or :class:`BudgetExceeded`."""
    t = CosetTable(p, budget, strategy)
    if not t.run(None):
        raise BudgetExceeded("enumeration did not close")
    g = t.to_graph()
    if g.boundary:
        raise BudgetExceeded("enumeration did not close")
    return g


def default_margin(p: Presentation) -> int:
    return (p.max_relator_length + 1) // 2 + 1


def build_ball(p: Presentation, spec: BallSpec) -> BallGraph:
    """Radius-``spec.radius`` ball of the Cayley graph, breadth-first ordered.

    Cosets are defined up to ``radius + margin``; with ``certify`` the horizon
    is then raised by two and the ball must come out identical.  A finite
    group is returned whole when the enumeration closes.
    """
    margin = default_margin(p) if spec.margin is None else spec.margin
    horizon = spec.radius + margin
    t = CosetTable(p, spec.coset_budget, spec.strategy)
    complete = t.run(horizon)
    g = t.to_graph(None if complete else spec.radius)
    stable = True
    check = horizon
    if not complete and spec.certify:
        before = rooted_canonical_form(g)
        check = horizon + 2
        complete = t.run(check)
        g = t.to_graph(None if complete else spec.radius)
        stable = complete or rooted_canonical_form(g) == before
    closes = relators_close(g, p, spec.radius)
    cert = BallCertificate(spec.radius, horizon, check, stable, closes, len(g))
    return BallGraph(g, spec.radius, cert, {"complete": complete, "strategy": spec.strategy})


def relators_close(g: ColoredGraph, p: Presentation, radius: int) -> bool:
    """Every relator closes from every vertex whose trace stays in the ball."""
    dist = g.distances()
    bounded = bool(g.boundary)
    for v in range(len(g)):
        for r in p.all_relators:
            if bounded and dist[v] + len(r) // 2 > radius - 1:
                continue
            if not isinstance(trace_word(g, v, r), Closed):
                return False
    return True
