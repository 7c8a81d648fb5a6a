from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from dualtrees.complex.planar_complex import Diagram, boundary_walk
from dualtrees.duality.spanning_tree import SpanningTreePair


@dataclass
class RootedTree:
    """
    A tree hanging from ``root`` with the children of every vertex kept in
    a fixed order. For a dual tree the vertices are faces and
    ``entry_edge[f]`` is the primal edge crossed when entering f from its
    parent.
    """

    root: int
    children: Dict[int, List[int]]
    parent: Dict[int, int] = field(default_factory=dict)
    entry_edge: Dict[int, int] = field(default_factory=dict)

    def __post_init__(self):

        if not self.parent:

            for v, cs in self.children.items():
                for c in cs:
                    self.parent[c] = v

    @classmethod
    def from_edges(cls, edges: Sequence[Tuple[int, int]], root: int) -> "RootedTree":
        """
        root an abstract tree, children in edge-list order
        """

        adjacency: Dict[int, List[int]] = {root: []}

        for a, b in edges:

            adjacency.setdefault(a, []).append(b)
            adjacency.setdefault(b, []).append(a)

        children: Dict[int, List[int]] = {v: [] for v in adjacency}
        seen = {root}
        queue = deque([root])

        while queue:

            u = queue.popleft()

            for w in adjacency[u]:

                if w not in seen:

                    seen.add(w)
                    children[u].append(w)
                    queue.append(w)

        return cls(root=root, children=children)

    @property
    def vertices(self) -> List[int]:
        return list(self.preorder())

    def degree(self, v: int) -> int:

        return len(self.children.get(v, [])) + (0 if v == self.root else 1)

    def is_leaf(self, v: int) -> bool:
        return len(self.children.get(v, [])) == 0

    def path_to(self, v: int) -> List[int]:
        """
        the vertices from the root down to v
        """

        path = [v]

        while path[-1] != self.root:
            path.append(self.parent[path[-1]])

        return path[::-1]

    def preorder(self, key: Optional[Callable[[int], tuple]] = None) -> Iterator[int]:
        """
        depth-first preorder; siblings in stored order, or sorted by key
        """

        stack = [self.root]

        while stack:

            v = stack.pop()

            yield v

            cs = self.children.get(v, [])

            if key is not None:
                cs = sorted(cs, key=key)

            stack.extend(reversed(cs))

    def leaves(self, key: Optional[Callable[[int], tuple]] = None) -> List[int]:

        return [v for v in self.preorder(key) if self.is_leaf(v)]

    def heavy_below(self) -> Dict[int, int]:
        """
        number of strict descendants of degree at least three
        """

        below: Dict[int, int] = {}

        for v in reversed(list(self.preorder())):

            below[v] = sum(
                (1 if self.degree(c) >= 3 else 0) + below[c]
                for c in self.children.get(v, [])
            )

        return below

    def branch_weights(self) -> Dict[int, int]:
        """
        weight of the subtree suspended from the parent of each non-root
        vertex c through c; in it c keeps its full degree
        """

        below = self.heavy_below()

        return {
            c: (1 if self.degree(c) >= 3 else 0) + below[c]
            for c in self.parent
        }


def subtree_weight(tree: RootedTree, v: int) -> int:
    """
    the number of vertices of degree at least three in the subtree below v,
    where v itself counts its children only
    """

    below = tree.heavy_below()

    return (1 if len(tree.children.get(v, [])) >= 3 else 0) + below[v]


def rooted_dual_tree(d: Diagram, pair: SpanningTreePair) -> RootedTree:
    """
    the dual tree hanging from the outer face. children of the outer face
    follow the boundary walk from the base, children of any other face
    follow its boundary orbit from the dart after the one it was entered by
    """

    complex = d.complex
    dual_edges = pair.dual_tree
    root = d.outer_face

    walk = boundary_walk(d)

    children: Dict[int, List[int]] = {root: []}
    entry_edge: Dict[int, int] = {}
    parent: Dict[int, int] = {}
    stack: List[Tuple[int, Tuple[int, ...]]] = [(root, walk.darts)]

    while stack:

        f, darts = stack.pop()

        for x in darts:

            e = int(complex.edge_of_dart[x])

            if e not in dual_edges:
                continue

            y = int(complex.opposite[x])
            g = int(complex.face_of_dart[y])

            if g == f or g in children:
                continue

            children[f].append(g)
            children[g] = []
            parent[g] = f
            entry_edge[g] = e

            orbit = complex.faces[g]
            i = orbit.index(y)
            stack.append((g, orbit[i + 1 :] + orbit[:i]))

    return RootedTree(root=root, children=children, parent=parent, entry_edge=entry_edge)
