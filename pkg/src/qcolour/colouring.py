"""Edge colourings under the per-vertex colour budget, and the matching-based
approximation algorithm.

A colouring is *valid for q* when every vertex sees at most q distinct
colours on its incident edges.  The approximation colours a maximum matching
with one colour per edge and every edge-containing component of the leftover
graph with one shared colour, giving |M| + h colours total.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import EdgeSubset, Graph, components
from .matching import Matching, maximum_matching


class ColouringFormatError(ValueError):
    """A colouring document violates the text format or the parent graph."""


@dataclass(frozen=True)
class EdgeColouring:
    """An assignment of a colour to every edge of a graph.

    Stored in canonical form: colours are the integers ``0..c-1``, numbered
    by first appearance in edge-id order.  ``from_values`` relabels arbitrary
    hashable colour values into this form.
    """

    graph: Graph
    colour: tuple[int, ...]
    num_colours: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.colour) != self.graph.m:
            raise ValueError(
                f"expected {self.graph.m} colour entries, got {len(self.colour)}"
            )
        nxt = 0
        for c in self.colour:
            if c == nxt:
                nxt += 1
            elif not (0 <= c < nxt):
                raise ValueError(
                    "colours must be canonical: 0..c-1 in order of first appearance"
                )
        object.__setattr__(self, "num_colours", nxt)

    @classmethod
    def from_values(cls, g: Graph, values) -> EdgeColouring:
        values = list(values)
        relabel: dict = {}
        out: list[int] = []
        for v in values:
            if v not in relabel:
                relabel[v] = len(relabel)
            out.append(relabel[v])
        return cls(g, tuple(out))

    def palette(self) -> range:
        return range(self.num_colours)

    def colour_class(self, c: int) -> EdgeSubset:
        """All edges carrying colour ``c``."""
        if not (0 <= c < self.num_colours):
            raise ValueError(f"colour {c} not in palette")
        return EdgeSubset(
            self.graph,
            frozenset(eid for eid, col in enumerate(self.colour) if col == c),
        )

    def vertex_colours(self, v: int) -> frozenset[int]:
        return frozenset(self.colour[eid] for _, eid in self.graph.adjacency[v])


@dataclass(frozen=True)
class ValidityReport:
    """Outcome of checking a colouring against the per-vertex budget q."""

    valid: bool
    q: int
    colours_used: int
    vertex_colour_counts: tuple[int, ...]
    first_violation: tuple[int, tuple[int, ...]] | None

    def to_json_dict(self) -> dict:
        return {
            "valid": self.valid,
            "q": self.q,
            "colours_used": self.colours_used,
            "vertex_colour_counts": list(self.vertex_colour_counts),
            "first_violation": None
            if self.first_violation is None
            else {
                "vertex": self.first_violation[0],
                "colours": list(self.first_violation[1]),
            },
        }


def validate(g: Graph, col: EdgeColouring, q: int) -> ValidityReport:
    """Check that every vertex sees at most ``q`` distinct incident colours.

    The first violation (smallest vertex id) is reported with the full set of
    colours seen there.
    """
    if q < 1:
        raise ValueError("q must be a positive integer")
    if col.graph != g:
        raise ValueError("colouring belongs to a different graph")
    counts: list[int] = []
    first: tuple[int, tuple[int, ...]] | None = None
    for v in range(g.n):
        seen = col.vertex_colours(v)
        counts.append(len(seen))
        if len(seen) > q and first is None:
            first = (v, tuple(sorted(seen)))
    return ValidityReport(
        valid=first is None,
        q=q,
        colours_used=col.num_colours,
        vertex_colour_counts=tuple(counts),
        first_violation=first,
    )


def matching_based_colouring(g: Graph) -> tuple[EdgeColouring, Matching, int]:
    """The approximation algorithm for q = 2.

    Computes a maximum matching M, gives each matching edge its own colour,
    and gives each edge-containing component of the leftover graph one shared
    fresh colour.  Returns ``(colouring, matching, h)`` where h is the number
    of those components; the palette size is ``|M| + h``.
    """
    if g.m == 0:
        raise ValueError("graph has no edges to colour")
    m = maximum_matching(g)
    values: list[object] = [None] * g.m
    for slot, eid in enumerate(sorted(m.edges.members)):
        values[eid] = ("m", slot)
    rest = m.edges.complement()
    h = 0
    for comp in components(g, rest):
        if not comp.has_edges:
            continue
        h += 1
        for eid in comp.edge_ids:
            values[eid] = ("c", comp.min_vertex)
    assert all(v is not None for v in values)
    col = EdgeColouring.from_values(g, values)
    assert col.num_colours == m.size + h
    return col, m, h


def parse_colouring(text: str, g: Graph) -> EdgeColouring:
    """Parse ``u v colour`` lines, one per edge in edge-id order.

    The edge list must biject with the graph's: line i must name edge i
    (either endpoint order).  Colours are arbitrary nonnegative integers and
    are canonicalized on load.
    """
    values: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 3:
            raise ColouringFormatError(
                f"line {lineno}: expected 'u v colour', got {raw!r}"
            )
        try:
            u, v, c = int(fields[0]), int(fields[1]), int(fields[2])
        except ValueError:
            raise ColouringFormatError(
                f"line {lineno}: expected 'u v colour', got {raw!r}"
            ) from None
        eid = len(values)
        if eid >= g.m:
            raise ColouringFormatError(f"line {lineno}: more than {g.m} edges")
        a, b = g.edges[eid]
        if (u, v) not in ((a, b), (b, a)):
            raise ColouringFormatError(
                f"line {lineno}: expected edge {eid} = ({a}, {b}), got ({u}, {v})"
            )
        if c < 0:
            raise ColouringFormatError(f"line {lineno}: negative colour {c}")
        values.append(c)
    if len(values) != g.m:
        raise ColouringFormatError(
            f"expected one line per edge ({g.m}), got {len(values)}"
        )
    return EdgeColouring.from_values(g, values)


def serialize_colouring(col: EdgeColouring) -> str:
    g = col.graph
    lines = [
        f"{u} {v} {col.colour[eid]}" for eid, (u, v) in enumerate(g.edges)
    ]
    return "\n".join(lines) + ("\n" if lines else "")
