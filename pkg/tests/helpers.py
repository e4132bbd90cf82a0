"""Shared test utilities: brute-force oracles and randomized fixture builders.

Everything here is deliberately naive — the point is to check the real
implementations against code too simple to be wrong."""

from __future__ import annotations

import itertools
import random

from qcolour import EdgeColouring, Graph, Matching
from qcolour.analysis import RootedTree


def brute_force_matching_size(g: Graph) -> int:
    """Maximum matching size by branching on the lowest uncovered vertex."""

    def rec(v: int, used: frozenset[int]) -> int:
        while v < g.n and v in used:
            v += 1
        if v >= g.n:
            return 0
        best = rec(v + 1, used)  # leave v exposed
        for w, _eid in g.adjacency[v]:
            if w not in used:
                best = max(best, 1 + rec(v + 1, used | {v, w}))
        return best

    return rec(0, frozenset())


def connected_graphs_up_to(nmax: int) -> list[Graph]:
    """Every connected labelled graph with 1 <= n <= nmax vertices."""
    out: list[Graph] = []
    for n in range(1, nmax + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for bits in range(1 << len(pairs)):
            edges = tuple(p for i, p in enumerate(pairs) if bits >> i & 1)
            if n > 1 and len(edges) < n - 1:
                continue
            g = Graph(n, edges)
            if _is_connected(g):
                out.append(g)
    return out


def _is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w, _ in g.adjacency[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = tuple(
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    )
    return Graph(n, edges)


def random_pair_tree(
    rng: random.Random, shape: str = "tree"
) -> tuple[RootedTree, EdgeColouring, Matching]:
    """A rooted tree plus a synthetic colouring meeting the pairing rules.

    The host graph is the tree plus one pendant matching edge per tree
    vertex.  Colours are assigned root-down so that every tree vertex
    sees at most two distinct colours, all root edges carry the root's
    matching colour, and each leaf's final edge carries the leaf's
    matching colour — exactly the preconditions of the pairing
    construction.  A small colour pool forces repeated matching colours,
    which is what makes pairs appear.  ``shape="path"`` chains the
    vertices instead of random attachment.
    """
    t = rng.randint(2, 13)
    parent = {v: (v - 1 if shape == "path" else rng.randrange(v)) for v in range(1, t)}
    tree_edges = [(parent[v], v) for v in range(1, t)]
    mate_edges = [(v, t + v) for v in range(t)]
    g = Graph(2 * t, tuple(tree_edges) + tuple(mate_edges))
    m = Matching.from_edge_ids(g, range(t - 1, 2 * t - 1))

    children: dict[int, list[int]] = {v: [] for v in range(t)}
    for v in range(1, t):
        children[parent[v]].append(v)

    pool: list[int] = []
    counter = itertools.count()

    def fresh() -> int:
        c = next(counter)
        pool.append(c)
        return c

    def pick(avoid: int | None = None) -> int:
        reusable = [c for c in pool if c != avoid]
        if reusable and rng.random() < 0.65:
            return rng.choice(reusable)
        c = fresh()
        while c == avoid:  # cannot happen, but keeps the contract obvious
            c = fresh()
        return c

    ecol: dict[int, int] = {}  # tree-edge id (v-1) -> colour, keyed by child v
    mcl: dict[int, int] = {}
    mcl[0] = pick()
    for c in children[0]:
        ecol[c] = mcl[0]
    order = [0]
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        for c in children[v]:
            order.append(c)
        if v == 0:
            continue
        x = ecol[v]
        if not children[v]:
            mcl[v] = x
        elif rng.random() < 0.5:
            mcl[v] = x
            extra = pick(avoid=x) if rng.random() < 0.7 else None
            for c in children[v]:
                ecol[c] = x if extra is None or rng.random() < 0.5 else extra
        else:
            z = pick(avoid=x)
            mcl[v] = z
            for c in children[v]:
                ecol[c] = rng.choice([x, z])

    values = [ecol[v] for v in range(1, t)] + [mcl[v] for v in range(t)]
    col = EdgeColouring.from_values(g, values)
    tree = RootedTree.build(
        g, 0, parent, {v: v - 1 for v in range(1, t)}
    )
    return tree, col, m


def check_pair_properties(
    tree_ordered: RootedTree,
    pairs: tuple[tuple[int, int], ...],
    col: EdgeColouring,
    m: Matching,
) -> None:
    """Re-verify the pairing guarantees from outside the implementation."""
    from qcolour.analysis import matched_colour_map

    mcl = matched_colour_map(col, m)
    firsts = [u for u, _ in pairs]
    assert len(set(firsts)) == len(firsts), "repeated first coordinate"
    assert len(pairs) == len(tree_ordered.leaves())
    interiors_of_matched: list[set[int]] = []
    for u, v in pairs:
        assert u != v
        assert tree_ordered.index[u] <= tree_ordered.index[v]
        assert mcl[u] == mcl[v]
        path = tree_ordered.path(u, v)
        for eid in tree_ordered.path_edges(u, v):
            assert col.colour[eid] == mcl[u], "pair path is not monochromatic"
        for w in path[1:-1]:
            assert mcl[w] != mcl[u], "interior vertex repeats the pair colour"
        if m.mate[u] == v:
            interiors_of_matched.append(set(path[1:-1]))
    for a, b in itertools.combinations(interiors_of_matched, 2):
        assert not (a & b), "matched pairs share an interior vertex"
