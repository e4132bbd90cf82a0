"""Cascading sequences of rooted forests linking non-matching colour classes.

Within one component of G minus M carrying non-matching classes H_1..H_k, the
builder grows forests in rounds: the first is rooted inside one anchor class,
and each later one is rooted at vertices of already-reached classes (a new
root may reuse a leaf of the round before, nothing else).  Trees extend only
along non-matching edges, pass only through vertices lying in no class, and
stop the moment they touch an unreached class — that contact vertex becomes a
leaf, one per class per round.  Consequently every class except the anchor is
claimed exactly once, so the total leaf count over the sequence is k - 1.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from ..graph import Graph
from .decompose import ColourDecomposition, UnanchoredComponentError


@dataclass(frozen=True)
class RootedTree:
    """A rooted tree on a subset of a graph's vertices.

    ``postorder`` fixes the per-tree vertex order: children precede parents
    and the root comes last, so larger index means closer to the root.
    """

    graph: Graph
    root: int
    parent: dict[int, int]
    parent_edge: dict[int, int]
    children: dict[int, tuple[int, ...]]
    postorder: tuple[int, ...]
    index: dict[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        assert self.postorder[-1] == self.root
        assert set(self.parent) == set(self.postorder) - {self.root}
        assert set(self.parent_edge) == set(self.parent)
        for v, p in self.parent.items():
            assert v in self.children.get(p, ())
            u, w = self.graph.edges[self.parent_edge[v]]
            assert {u, w} == {v, p}
        expect = self._postorder_of(self.root)
        assert expect == list(self.postorder), "postorder disagrees with child order"
        object.__setattr__(
            self, "index", {v: i for i, v in enumerate(self.postorder)}
        )

    def _postorder_of(self, v: int) -> list[int]:
        out: list[int] = []
        for c in self.children.get(v, ()):
            out.extend(self._postorder_of(c))
        out.append(v)
        return out

    @classmethod
    def build(
        cls,
        graph: Graph,
        root: int,
        parent: dict[int, int],
        parent_edge: dict[int, int],
        child_order: dict[int, tuple[int, ...]] | None = None,
    ) -> RootedTree:
        """Assemble a tree from parent pointers; children default to vertex-id
        order unless ``child_order`` pins a specific arrangement."""
        kids: dict[int, list[int]] = {v: [] for v in list(parent) + [root]}
        for v, p in parent.items():
            kids[p].append(v)
        children: dict[int, tuple[int, ...]] = {}
        for v, lst in kids.items():
            if child_order is not None and v in child_order:
                ordered = list(child_order[v])
                assert sorted(ordered) == sorted(lst)
                children[v] = tuple(ordered)
            else:
                children[v] = tuple(sorted(lst))
        post: list[int] = []
        stack: list[tuple[int, int]] = [(root, 0)]
        while stack:
            v, i = stack.pop()
            if i < len(children[v]):
                stack.append((v, i + 1))
                stack.append((children[v][i], 0))
            else:
                post.append(v)
        return cls(graph, root, dict(parent), dict(parent_edge), children, tuple(post))

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.postorder)

    def leaves(self) -> tuple[int, ...]:
        return tuple(
            sorted(v for v in self.postorder if v != self.root and not self.children[v])
        )

    def internal_vertices(self) -> tuple[int, ...]:
        leaf_set = set(self.leaves())
        return tuple(
            sorted(v for v in self.postorder if v != self.root and v not in leaf_set)
        )

    def depth(self, v: int) -> int:
        d = 0
        while v != self.root:
            v = self.parent[v]
            d += 1
        return d

    def path(self, u: int, v: int) -> tuple[int, ...]:
        """Vertices of the unique u-v path in the tree, endpoints included."""
        anc_u = [u]
        x = u
        while x != self.root:
            x = self.parent[x]
            anc_u.append(x)
        pos = {x: i for i, x in enumerate(anc_u)}
        down = [v]
        x = v
        while x not in pos:
            x = self.parent[x]
            down.append(x)
        return tuple(anc_u[: pos[x]]) + tuple(reversed(down))

    def path_edges(self, u: int, v: int) -> tuple[int, ...]:
        """Edge ids along the u-v path."""
        verts = self.path(u, v)
        out = []
        for x, y in zip(verts, verts[1:]):
            out.append(self.parent_edge[x] if self.parent.get(x) == y else self.parent_edge[y])
        return tuple(out)

    def preceq(self, x: int, y: int) -> bool:
        """Per-tree order: larger postorder index is closer to the root."""
        return self.index[x] <= self.index[y]


@dataclass(frozen=True)
class RootedForestSeq:
    """A sequence of forests F_1..F_t whose consecutive members may share only
    a root-at-a-leaf vertex, with members two or more apart fully disjoint.

    The partial order ``preceq`` is the transitive closure of the per-tree
    postorders, glued at shared vertices.
    """

    graph: Graph
    forests: tuple[tuple[RootedTree, ...], ...]
    _reach: dict[int, frozenset[int]] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        succ: dict[int, set[int]] = {}
        for forest in self.forests:
            for tree in forest:
                po = tree.postorder
                for a, b in zip(po, po[1:]):
                    succ.setdefault(a, set()).add(b)
                succ.setdefault(po[-1], set())
        reach: dict[int, frozenset[int]] = {}
        for start in succ:
            seen: set[int] = set()
            stack = list(succ[start])
            while stack:
                x = stack.pop()
                if x in seen:
                    continue
                seen.add(x)
                stack.extend(succ.get(x, ()))
            assert start not in seen, "cascading order contains a cycle"
            reach[start] = frozenset(seen)
        object.__setattr__(self, "_reach", reach)

    def trees(self):
        for forest in self.forests:
            yield from forest

    def vertices(self) -> frozenset[int]:
        out: set[int] = set()
        for tree in self.trees():
            out |= tree.vertices
        return frozenset(out)

    def leaf_count(self) -> int:
        return sum(len(t.leaves()) for t in self.trees())

    def preceq(self, x: int, y: int) -> bool:
        if x == y:
            return x in self._reach
        return y in self._reach.get(x, frozenset())

    def maximal_elements(self, vertices) -> tuple[int, ...]:
        vs = sorted(set(vertices))
        return tuple(
            x for x in vs if not any(y != x and self.preceq(x, y) for y in vs)
        )

    def tree_containing(self, u: int, v: int) -> RootedTree | None:
        """The unique tree holding both u and v, if any (two trees can share
        at most one vertex, so for u != v it is unique)."""
        found = None
        for tree in self.trees():
            if u in tree.index and v in tree.index:
                assert found is None or u == v
                found = tree
                if u != v:
                    return found
        return found


def build_cascading_sequence(dec: ColourDecomposition) -> RootedForestSeq:
    """Construct the forest sequence realizing the leaf-count identity
    (k_i - 1 leaves per component), then finalize each tree's vertex order via
    the pairing construction so the order is ready for downstream checks.

    Components are processed independently and their rounds merged
    positionally — trees from different components are vertex-disjoint, so
    the cascading conditions are preserved.  Raises
    :class:`UnanchoredComponentError` on a component with k_i = 0.
    """
    from .repetition import tree_repetition_pairs

    g = dec.graph
    in_matching = dec.matching.edges.members
    per_component: list[list[list[RootedTree]]] = []

    for comp, colours in zip(dec.gm_components, dec.component_colours):
        if not colours:
            raise UnanchoredComponentError(
                f"component with vertices {comp.vertices[:4]}... has no "
                "non-matching colour class"
            )
        class_vertices: dict[int, frozenset[int]] = {
            c: dec.colour_class(c).vertices() for c in colours
        }
        vertex_class: dict[int, int] = {}
        for c in colours:
            for v in class_vertices[c]:
                vertex_class[v] = c
        anchor = min(colours, key=lambda c: min(class_vertices[c]))
        visited = {anchor}
        used: set[int] = set()
        prev_leaves: list[int] = []
        rounds: list[list[RootedTree]] = []

        while len(visited) < len(colours):
            allowed = sorted(
                {
                    v
                    for c in visited
                    for v in class_vertices[c]
                    if v not in used
                }
                | set(prev_leaves)
            )
            reached: set[int] = set()
            claimed: dict[int, int] = {}
            trees: list[RootedTree] = []
            for r in allowed:
                parent: dict[int, int] = {}
                parent_edge: dict[int, int] = {}
                local = {r}
                local_claims: dict[int, int] = {}
                queue: deque[int] = deque([r])
                while queue:
                    x = queue.popleft()
                    if x != r and x in vertex_class:
                        continue  # a claimed leaf ends its branch
                    for y, eid in g.adjacency[x]:
                        if eid in in_matching or y in used or y in reached or y in local:
                            continue
                        cls = vertex_class.get(y)
                        if cls is None:
                            parent[y] = x
                            parent_edge[y] = eid
                            local.add(y)
                            queue.append(y)
                        elif cls not in visited and cls not in claimed and cls not in local_claims:
                            local_claims[cls] = y
                            parent[y] = x
                            parent_edge[y] = eid
                            local.add(y)
                reached |= local
                if not local_claims:
                    continue  # nothing new reachable from here; vertices stay free
                keep = {r}
                for leaf in local_claims.values():
                    x = leaf
                    while x not in keep:
                        keep.add(x)
                        x = parent[x]
                raw = RootedTree.build(
                    g,
                    r,
                    {v: parent[v] for v in keep if v != r},
                    {v: parent_edge[v] for v in keep if v != r},
                )
                _, ordered = tree_repetition_pairs(raw, dec.colouring, dec.matching)
                trees.append(ordered)
                claimed.update(local_claims)
                used |= keep
            assert claimed, "cascade stalled before reaching every class"
            rounds.append(trees)
            visited |= set(claimed)
            prev_leaves = sorted(claimed.values())
        per_component.append(rounds)

    depth = max((len(r) for r in per_component), default=0)
    forests = []
    for i in range(depth):
        merged: list[RootedTree] = []
        for rounds in per_component:
            if i < len(rounds):
                merged.extend(rounds[i])
        forests.append(tuple(merged))
    return RootedForestSeq(graph=g, forests=tuple(forests))
