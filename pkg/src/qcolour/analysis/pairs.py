"""Collection and classification of matching-colour pairs.

Once a cascading forest sequence exists, every tree yields one pair per
leaf.  Grouping those pairs by their shared matching colour gives, for
each paired colour, a support set whose repetition content drives the
counting arguments.  Colours whose support repeats enough are *high*;
the rest are *low*, and low colours with small supports are tracked
separately.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..colouring import EdgeColouring
from ..matching import Matching
from .decompose import matched_colour_map
from .forests import RootedForestSeq
from .repetition import repetition_content, tree_repetition_pairs

__all__ = ["PairRecord", "RepetitionPairs", "collect_repetition_pairs"]


@dataclass(frozen=True)
class PairRecord:
    """One extracted pair: two vertices sharing a matching colour.

    ``path`` is the unique tree path from ``u`` to ``v``; ``matched`` is
    true when ``u`` and ``v`` are partners of the same matching edge.
    """

    u: int
    v: int
    colour: int
    path: tuple[int, ...]
    matched: bool


@dataclass(frozen=True)
class RepetitionPairs:
    """All pairs of a forest sequence, grouped and classified by colour.

    ``supports[j]`` is the vertex support of colour ``j`` (both ends of
    every pair), ``firsts``/``seconds`` the two projections,
    ``matched_pairs[j]`` the records whose ends are matching partners,
    and ``repetition[j]`` the repetition content of the support.  A
    paired colour is *high* when its content reaches half the pair
    count less the matched-pair count, otherwise *low*; ``low_large``
    and ``low_small`` split the low colours by support size.
    """

    seq: RootedForestSeq
    records: tuple[PairRecord, ...]
    supports: dict[int, frozenset[int]] = field(hash=False)
    firsts: dict[int, frozenset[int]] = field(hash=False)
    seconds: dict[int, frozenset[int]] = field(hash=False)
    matched_pairs: dict[int, tuple[PairRecord, ...]] = field(hash=False)
    repetition: dict[int, int] = field(hash=False)
    high: frozenset[int]
    low: frozenset[int]
    low_large: frozenset[int]
    low_small: frozenset[int]

    @property
    def paired_colours(self) -> frozenset[int]:
        return self.high | self.low

    def pairs_of(self, colour: int) -> tuple[PairRecord, ...]:
        return tuple(r for r in self.records if r.colour == colour)

    @property
    def total_repetition(self) -> int:
        return sum(self.repetition.values())


def collect_repetition_pairs(
    seq: RootedForestSeq,
    col: EdgeColouring,
    m: Matching,
) -> RepetitionPairs:
    """Extract, check and classify the pairs of a forest sequence.

    Re-derives each tree's pairs, records their paths, and asserts the
    structural guarantees: distinct first coordinates overall, order
    ``u`` strictly before ``v``, equal matching colours, monochromatic
    pair paths whose interior avoids the shared colour, and
    interior-disjoint paths for matched pairs.
    """
    g = seq.graph
    if col.graph is not g or m.graph is not g:
        raise ValueError("forest sequence, colouring and matching disagree on graph")
    mcl = matched_colour_map(col, m)

    records: list[PairRecord] = []
    for tree in seq.trees():
        pairs, ordered = tree_repetition_pairs(tree, col, m)
        assert ordered.postorder == tree.postorder, (
            "tree order must be stable under re-extraction"
        )
        for u, v in pairs:
            path = tree.path(u, v)
            colour = mcl[u]
            assert colour is not None
            records.append(
                PairRecord(
                    u=u,
                    v=v,
                    colour=colour,
                    path=path,
                    matched=m.mate[u] == v,
                )
            )

    firsts_all = [r.u for r in records]
    assert len(firsts_all) == len(set(firsts_all)), (
        "pair first coordinates must be globally distinct"
    )
    for r in records:
        assert r.u != r.v
        assert seq.preceq(r.u, r.v), "each pair must respect the sequence order"
        assert mcl[r.u] == mcl[r.v] == r.colour
        tree = seq.tree_containing(r.u, r.v)
        for eid in tree.path_edges(r.u, r.v):
            assert col.colour[eid] == r.colour, "pair paths must be monochromatic"
        for x in r.path[1:-1]:
            assert mcl[x] != r.colour, (
                "interior vertices must not repeat the pair colour"
            )

    by_colour: dict[int, list[PairRecord]] = {}
    for r in records:
        by_colour.setdefault(r.colour, []).append(r)

    matched_recs = [r for r in records if r.matched]
    for i, r1 in enumerate(matched_recs):
        for r2 in matched_recs[i + 1 :]:
            shared = set(r1.path[1:-1]) & set(r2.path[1:-1])
            assert not shared, "matched pairs must have interior-disjoint paths"

    supports: dict[int, frozenset[int]] = {}
    firsts: dict[int, frozenset[int]] = {}
    seconds: dict[int, frozenset[int]] = {}
    matched_pairs: dict[int, tuple[PairRecord, ...]] = {}
    repetition: dict[int, int] = {}
    high = set()
    low = set()
    low_large = set()
    low_small = set()
    for colour in sorted(by_colour):
        recs = by_colour[colour]
        support = frozenset(r.u for r in recs) | frozenset(r.v for r in recs)
        supports[colour] = support
        firsts[colour] = frozenset(r.u for r in recs)
        seconds[colour] = frozenset(r.v for r in recs)
        matched_pairs[colour] = tuple(r for r in recs if r.matched)
        rp = repetition_content(support, m, col)
        repetition[colour] = rp
        threshold = Fraction(len(recs) - len(matched_pairs[colour]), 2)
        if rp >= threshold:
            high.add(colour)
        else:
            low.add(colour)
            if len(support) >= 6:
                low_large.add(colour)
            else:
                assert len(support) == 4, (
                    "low supports are closed under matching partners, "
                    "hence even and of size at least four"
                )
                low_small.add(colour)

    return RepetitionPairs(
        seq=seq,
        records=tuple(records),
        supports=supports,
        firsts=firsts,
        seconds=seconds,
        matched_pairs=matched_pairs,
        repetition=repetition,
        high=frozenset(high),
        low=frozenset(low),
        low_large=frozenset(low_large),
        low_small=frozenset(low_small),
    )
