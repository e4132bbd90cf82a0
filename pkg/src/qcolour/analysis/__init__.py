"""Structural analysis of valid q=2 edge colourings against a perfect matching.

The pipeline has four stages, each usable on its own:

1. :func:`decompose` — split a colouring into matching / non-matching
   colours and locate every class inside the graph minus the matching.
2. :func:`build_cascading_sequence` — grow the rooted forests that
   connect the non-matching classes of each component.
3. :func:`collect_repetition_pairs` — extract one vertex pair per tree
   leaf and classify the paired matching colours.
4. :func:`verify_bound_chain` — check every counting relation with
   exact rationals and report the certified colour/ratio statistics.

:func:`analyse` runs all four.
"""

from __future__ import annotations

from ..colouring import EdgeColouring
from ..graph import Graph
from ..matching import Matching
from .bounds import BoundEntry, BoundReport, verify_bound_chain
from .decompose import (
    ClassSpansComponentsError,
    ColourDecomposition,
    DisconnectedColourClassError,
    ImperfectMatchingError,
    InvalidColouringError,
    StructuralError,
    UnanchoredComponentError,
    decompose,
    matched_colour_map,
)
from .forests import RootedForestSeq, RootedTree, build_cascading_sequence
from .pairs import PairRecord, RepetitionPairs, collect_repetition_pairs
from .repetition import path_repetition, repetition_content, tree_repetition_pairs

__all__ = [
    "BoundEntry",
    "BoundReport",
    "ClassSpansComponentsError",
    "ColourDecomposition",
    "DisconnectedColourClassError",
    "ImperfectMatchingError",
    "InvalidColouringError",
    "PairRecord",
    "RepetitionPairs",
    "RootedForestSeq",
    "RootedTree",
    "StructuralError",
    "UnanchoredComponentError",
    "analyse",
    "build_cascading_sequence",
    "collect_repetition_pairs",
    "decompose",
    "matched_colour_map",
    "path_repetition",
    "repetition_content",
    "tree_repetition_pairs",
    "verify_bound_chain",
]


def analyse(
    g: Graph,
    matching: Matching,
    colouring: EdgeColouring,
    triangle_free: bool | None = None,
) -> BoundReport:
    """Run the full pipeline and return the bound report for one instance."""
    dec = decompose(g, matching, colouring)
    seq = build_cascading_sequence(dec)
    rp = collect_repetition_pairs(seq, colouring, matching)
    return verify_bound_chain(dec, rp, triangle_free)
