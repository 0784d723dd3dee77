"""Independent reference computations used to freeze expected values.

Nothing here imports the construction code: groups are realised as
permutation groups or through sympy's coset enumeration, and graph facts
come from networkx.
"""

from __future__ import annotations

from itertools import combinations

import networkx as nx
import numpy as np
from sympy.combinatorics.fp_groups import FpGroup
from sympy.combinatorics.free_groups import free_group


def fp_order(symbols: str, relators: list[list[tuple[str, int]]]) -> int:
    """Group order by sympy's coset enumeration."""
    F, *gens = free_group(",".join(symbols))
    names = dict(zip(symbols, gens))
    rels = []
    for r in relators:
        w = F.identity
        for s, e in r:
            w = w * names[s] ** e
        rels.append(w)
    return int(FpGroup(F, rels).order())


def perm_cayley(gens: dict[str, tuple[int, ...]]) -> nx.MultiDiGraph:
    """Right Cayley graph of the permutation group generated by ``gens``.

    Every generator contributes an arc ``x -> xg``, so an involution edge
    appears as a pair of opposite arcs.
    """
    ident = tuple(range(len(next(iter(gens.values())))))

    def mul(p, q):
        return tuple(q[p[i]] for i in range(len(p)))

    seen = {ident: 0}
    queue = [ident]
    h = nx.MultiDiGraph()
    h.add_node(0)
    while queue:
        x = queue.pop(0)
        for s, g in sorted(gens.items()):
            y = mul(x, g)
            if y not in seen:
                seen[y] = len(seen)
                h.add_node(seen[y])
                queue.append(y)
            h.add_edge(seen[x], seen[y], gen=s)
    return h


def dart_digraph(g) -> nx.MultiDiGraph:
    """Arcs of a coloured graph in the convention of :func:`perm_cayley`."""
    h = nx.MultiDiGraph()
    h.add_nodes_from(range(len(g)))
    for d in g.darts():
        if d.dir != -1:
            h.add_edge(d.tail, d.head, gen=d.color)
    return h


def colour_isomorphic(a: nx.MultiDiGraph, b: nx.MultiDiGraph) -> bool:
    match = nx.algorithms.isomorphism.categorical_multiedge_match("gen", None)
    return nx.is_isomorphic(a, b, edge_match=match)


def brute_vertex_connectivity(h: nx.Graph, cap: int = 3) -> int:
    """Smallest separating vertex set size, by exhaustive search up to ``cap``."""
    g = nx.Graph(h)
    nodes = sorted(g)
    for k in range(1, cap):
        for S in combinations(nodes, k):
            rest = g.subgraph([v for v in nodes if v not in S])
            if rest.number_of_nodes() and not nx.is_connected(rest):
                return k
    return cap


def gf2_rank(rows: list[list[int]]) -> int:
    m = np.array(rows, dtype=np.uint8) % 2
    rank = 0
    r, c = m.shape
    for col in range(c):
        piv = next((i for i in range(rank, r) if m[i, col]), None)
        if piv is None:
            continue
        m[[rank, piv]] = m[[piv, rank]]
        for i in range(r):
            if i != rank and m[i, col]:
                m[i] ^= m[rank]
        rank += 1
    return rank


# Permutation realisations of the two finite rows used by the exactness tests.
# S3 acting on three points: a is a 3-cycle, b a transposition, ab has order 2.
PRISM_GENS = {"a": (1, 2, 0), "b": (1, 0, 2)}
# Three commuting involutions on six points.
CUBE_GENS = {"b": (1, 0, 2, 3, 4, 5), "c": (0, 1, 3, 2, 4, 5), "d": (0, 1, 2, 3, 5, 4)}
