"""Immutable simple graphs with stable edge ids, plus edge-list text I/O."""

from __future__ import annotations

from dataclasses import dataclass, field


class GraphFormatError(ValueError):
    """An edge-list document violates the text format."""


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph.

    Vertices are ``0..n-1``.  Edges are unordered pairs carried in a fixed
    order; the position of an edge in ``edges`` is its id, and every other
    structure in this package (subsets, matchings, colourings) refers to
    edges by that id.  Instances are immutable once constructed.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[tuple[int, int], ...], ...] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        object.__setattr__(self, "edges", tuple((int(u), int(v)) for u, v in self.edges))
        seen: set[tuple[int, int]] = set()
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for eid, (u, v) in enumerate(self.edges):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {eid} endpoint out of range: ({u}, {v})")
            if u == v:
                raise ValueError(f"edge {eid} is a self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"edge {eid} duplicates pair ({u}, {v})")
            seen.add(key)
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        object.__setattr__(self, "adjacency", tuple(tuple(row) for row in adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    def endpoints(self, eid: int) -> tuple[int, int]:
        return self.edges[eid]

    def other_end(self, eid: int, v: int) -> int:
        u, w = self.edges[eid]
        if v == u:
            return w
        if v == w:
            return u
        raise ValueError(f"vertex {v} is not an endpoint of edge {eid}")

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])


@dataclass(frozen=True)
class EdgeSubset:
    """A set of edge ids over a parent graph."""

    graph: Graph
    members: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", frozenset(self.members))
        for eid in self.members:
            if not (0 <= eid < self.graph.m):
                raise ValueError(f"edge id {eid} out of range")

    def __contains__(self, eid: int) -> bool:
        return eid in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def complement(self) -> EdgeSubset:
        return EdgeSubset(self.graph, frozenset(range(self.graph.m)) - self.members)

    def vertices(self) -> frozenset[int]:
        """All endpoints of member edges."""
        out: set[int] = set()
        for eid in self.members:
            u, v = self.graph.edges[eid]
            out.add(u)
            out.add(v)
        return frozenset(out)


@dataclass(frozen=True)
class Component:
    """One connected component of a spanning subgraph: its vertices (sorted),
    the ids of the kept edges inside it (sorted), and whether any edge is
    present."""

    vertices: tuple[int, ...]
    edge_ids: tuple[int, ...]

    @property
    def has_edges(self) -> bool:
        return bool(self.edge_ids)

    @property
    def min_vertex(self) -> int:
        return self.vertices[0]


def components(g: Graph, keep: EdgeSubset | None = None) -> list[Component]:
    """Connected components of the subgraph (V(g), keep).

    Every vertex of ``g`` appears in exactly one component (isolated vertices
    form singletons).  ``keep=None`` means all edges.  Components are listed
    by minimum vertex id; within one, vertices and edge ids are sorted, so the
    output is independent of edge order.
    """
    if keep is None:
        keep = EdgeSubset(g, frozenset(range(g.m)))
    elif keep.graph is not g and keep.graph != g:
        raise ValueError("edge subset belongs to a different graph")
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for eid in keep.members:
        u, v = g.edges[eid]
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv

    verts: dict[int, list[int]] = {}
    for v in range(g.n):
        verts.setdefault(find(v), []).append(v)
    eids: dict[int, list[int]] = {root: [] for root in verts}
    for eid in sorted(keep.members):
        u, _ = g.edges[eid]
        eids[find(u)].append(eid)
    out = [
        Component(tuple(sorted(vs)), tuple(es))
        for vs, es in ((verts[r], eids[r]) for r in verts)
    ]
    out.sort(key=lambda c: c.vertices[0])
    return out


def is_triangle_free(g: Graph) -> bool:
    """True iff no three vertices are pairwise adjacent."""
    neighbours = [set(v for v, _ in g.adjacency[u]) for u in range(g.n)]
    for u, v in g.edges:
        if neighbours[u] & neighbours[v]:
            return False
    return True


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format.

    Line 1 is ``n m``; each following non-comment line is one edge ``u v``.
    Lines starting with ``#`` and blank lines are ignored.  Malformed input
    raises :class:`GraphFormatError` naming the offending line.
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise GraphFormatError(
                    f"line {lineno}: header must be 'n m', got {raw!r}"
                )
            try:
                n, m = int(fields[0]), int(fields[1])
            except ValueError:
                raise GraphFormatError(
                    f"line {lineno}: header must be 'n m', got {raw!r}"
                ) from None
            if n < 0 or m < 0:
                raise GraphFormatError(f"line {lineno}: negative count in header")
            header = (n, m)
            continue
        n, m = header
        if len(edges) >= m:
            raise GraphFormatError(f"line {lineno}: more than {m} edges")
        if len(fields) != 2:
            raise GraphFormatError(f"line {lineno}: edge must be 'u v', got {raw!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphFormatError(
                f"line {lineno}: edge must be 'u v', got {raw!r}"
            ) from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(
                f"line {lineno}: endpoint out of range 0..{n - 1}: ({u}, {v})"
            )
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphFormatError(
                f"line {lineno}: duplicate of edge on line {seen[key]}"
            )
        seen[key] = lineno
        edges.append((u, v))
    if header is None:
        raise GraphFormatError("line 1: missing 'n m' header")
    if len(edges) != header[1]:
        raise GraphFormatError(
            f"line {len(text.splitlines()) + 1}: expected {header[1]} edges, got {len(edges)}"
        )
    return Graph(header[0], tuple(edges))


def serialize_graph(g: Graph) -> str:
    """Inverse of :func:`parse_graph` on its own output: ``n m`` header, then
    one ``u v`` line per edge in id order, LF line endings."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
