"""Immutable undirected simple graphs and certified trees.

Vertices are integer ids 0..n-1. Graphs never change after construction;
deleting vertices is expressed as taking the induced subgraph on the
remaining ids, which returns a fresh graph together with the id remap.
All queries are therefore safe under concurrent reads.
"""

from __future__ import annotations

from collections import deque
from functools import cached_property
from typing import Iterable


class GraphError(ValueError):
    """Rejected input: malformed graph, bad vertex id, or guard violation."""


def vertex_set(vertices: Iterable[int]) -> tuple[int, ...]:
    """Normalize an iterable of vertex ids into a sorted duplicate-free tuple."""
    return tuple(sorted(set(vertices)))


class Graph:
    """Undirected simple graph backed by sorted per-vertex neighbor tuples.

    Construct through :func:`build_graph`, which validates the edge list.
    """

    def __init__(self, n: int, adj: tuple[tuple[int, ...], ...]):
        self.n = n
        self.adj = adj

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range 0..{self.n - 1}")

    def neighbors(self, v: int) -> tuple[int, ...]:
        self.check_vertex(v)
        return self.adj[v]

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2

    def distances_from(self, source: int) -> list[int | None]:
        """BFS distances from source; None marks unreachable vertices."""
        self.check_vertex(source)
        dist: list[int | None] = [None] * self.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in self.adj[u]:
                if dist[w] is None:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def distance(self, u: int, v: int) -> int | None:
        """Shortest-path edge count between u and v; None if unreachable."""
        self.check_vertex(v)
        return self.distances_from(u)[v]

    @cached_property
    def distance_matrix(self) -> tuple[tuple[int | None, ...], ...]:
        """All-pairs BFS distances, computed once per graph."""
        return tuple(tuple(self.distances_from(v)) for v in range(self.n))

    def connected_components(self) -> list[tuple[int, ...]]:
        """Partition of the vertices into connected components, sorted by smallest member."""
        seen = [False] * self.n
        parts: list[tuple[int, ...]] = []
        for start in range(self.n):
            if seen[start]:
                continue
            seen[start] = True
            comp = [start]
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            parts.append(vertex_set(comp))
        return parts

    def is_connected(self) -> bool:
        return len(self.connected_components()) <= 1

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
        """Induced subgraph on the given vertices.

        Returns the new graph plus the id remap: element i of the remap is
        the original id of new vertex i.
        """
        keep = vertex_set(vertices)
        for v in keep:
            self.check_vertex(v)
        index = {orig: new for new, orig in enumerate(keep)}
        adj = tuple(
            tuple(index[w] for w in self.adj[orig] if w in index) for orig in keep
        )
        return Graph(len(keep), adj), keep

    def without(self, removed: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
        """Induced subgraph on the complement of `removed`, with id remap."""
        gone = set(removed)
        for v in gone:
            self.check_vertex(v)
        return self.induced_subgraph(v for v in range(self.n) if v not in gone)


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph on vertices 0..n-1; duplicate edges collapse.

    Rejects self-loops and out-of-range endpoints, naming the offending edge.
    """
    if n < 0:
        raise GraphError(f"vertex count must be >= 0, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if u == v:
            raise GraphError(f"self-loop ({u}, {v}) not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


class TreeCert:
    """A graph certified to be a tree, with its leaves and supports cached.

    A leaf is a degree-1 vertex; a support is a vertex adjacent to a leaf.
    Obtain instances through :func:`certify_tree`.
    """

    def __init__(self, graph: Graph):
        self.graph = graph
        leaf_children: dict[int, list[int]] = {}
        leaves = []
        for v in range(graph.n):
            if graph.degree(v) == 1:
                leaves.append(v)
                leaf_children.setdefault(graph.adj[v][0], []).append(v)
        self.leaves = tuple(leaves)
        self.supports = vertex_set(leaf_children)
        self._leaf_children = {s: tuple(ls) for s, ls in leaf_children.items()}

    @property
    def n(self) -> int:
        return self.graph.n

    def is_leaf(self, v: int) -> bool:
        return self.graph.degree(v) == 1

    def support_of(self, leaf: int) -> int:
        """The unique neighbor of a leaf."""
        if not self.is_leaf(leaf):
            raise GraphError(f"vertex {leaf} is not a leaf")
        return self.graph.adj[leaf][0]

    def leaf_neighbors(self, v: int) -> tuple[int, ...]:
        """The leaves adjacent to v (empty when v is not a support)."""
        self.graph.check_vertex(v)
        return self._leaf_children.get(v, ())

    def __repr__(self) -> str:
        return f"TreeCert(n={self.n}, leaves={list(self.leaves)})"


def certify_tree(graph: Graph) -> TreeCert:
    """Certify that a graph is a tree (connected, exactly n-1 edges).

    Raises GraphError with the failing reason otherwise.
    """
    if graph.n == 0:
        raise GraphError("not a tree: empty graph")
    if graph.edge_count != graph.n - 1:
        raise GraphError(
            f"not a tree: {graph.edge_count} edges on {graph.n} vertices"
        )
    if not graph.is_connected():
        raise GraphError("not a tree: graph is disconnected")
    return TreeCert(graph)


def read_edge_list(text: str) -> tuple[Graph, dict[str, str]]:
    """Parse the edge-list text format.

    The first non-comment line is the vertex count n, then one `u v` pair per
    line (0-based ids, whitespace-separated).  Lines starting with `#` are
    skipped; comments of the form `# key: value` are collected and returned
    as annotations.
    """
    annotations: dict[str, str] = {}
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if ":" in body:
                key, _, value = body.partition(":")
                if key.strip():
                    annotations[key.strip()] = value.strip()
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 1:
                raise GraphError(f"line {lineno}: expected vertex count, got {line!r}")
            try:
                n = int(parts[0])
            except ValueError:
                raise GraphError(f"line {lineno}: vertex count must be an integer") from None
            continue
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: edge endpoints must be integers") from None
        edges.append((u, v))
    if n is None:
        raise GraphError("missing vertex count line")
    return build_graph(n, edges), annotations


def format_edge_list(graph: Graph, annotations: dict[str, str] | None = None) -> str:
    """Serialize a graph in the edge-list format, byte-stable.

    Annotations are emitted first as `# key: value` comments in the given
    order; edges follow in lexicographic order.
    """
    lines = []
    for key, value in (annotations or {}).items():
        lines.append(f"# {key}: {value}")
    lines.append(str(graph.n))
    for u, v in graph.edges():
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"
