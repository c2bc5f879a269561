"""Module (interval) detection and primality tests.

A module of a graph is a vertex set M such that every vertex outside M is
adjacent to all of M or to none of M.  The empty set, singletons, and the
full vertex set are trivial modules; a graph on at least four vertices whose
modules are all trivial is prime, otherwise decomposable.

Two independent routes are kept side by side on purpose: a subset-scan brute
force that works on any small graph, and the leaf-distance criterion that
works only on trees.  Each is the oracle for the other in the test suite, so
neither may be rewritten in terms of the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .graph import Graph, GraphError, TreeCert, vertex_set

# Subset scans are 2^n; past this they stop being desk-scale.
BRUTE_FORCE_GUARD = 20


@dataclass(frozen=True)
class ModuleWitness:
    """A nontrivial module: 2 <= |members| < n, members sorted."""

    members: tuple[int, ...]


def is_module(graph: Graph, members: Iterable[int]) -> bool:
    """Check the defining property: outsiders see all of M or none of M."""
    mset = set(members)
    for v in mset:
        graph.check_vertex(v)
    size = len(mset)
    if size <= 1:
        return True
    for v in range(graph.n):
        if v in mset:
            continue
        hits = sum(1 for w in graph.adj[v] if w in mset)
        if hits not in (0, size):
            return False
    return True


def _check_guard(graph: Graph, guard: int) -> None:
    if graph.n > guard:
        raise GraphError(
            f"graph on {graph.n} vertices is too large for brute force (guard {guard})"
        )


def iter_nontrivial_modules(
    graph: Graph, guard: int = BRUTE_FORCE_GUARD
) -> Iterator[tuple[int, ...]]:
    """Enumerate every nontrivial module, by increasing size then lexicographic."""
    _check_guard(graph, guard)
    for size in range(2, graph.n):
        for members in combinations(range(graph.n), size):
            if is_module(graph, members):
                yield members


def find_nontrivial_module(
    graph: Graph, guard: int = BRUTE_FORCE_GUARD
) -> ModuleWitness | None:
    """First nontrivial module in the fixed search order, or None if prime-like."""
    for members in iter_nontrivial_modules(graph, guard):
        return ModuleWitness(members)
    return None


def is_indecomposable(graph: Graph, guard: int = BRUTE_FORCE_GUARD) -> bool:
    """All modules trivial, with no floor on the vertex count."""
    return find_nontrivial_module(graph, guard) is None


def is_prime_brute_force(graph: Graph, guard: int = BRUTE_FORCE_GUARD) -> bool:
    """Primality by exhaustive module search: n >= 4 and only trivial modules."""
    if graph.n < 4:
        return False
    return find_nontrivial_module(graph, guard) is None


def tree_is_prime(tree: TreeCert) -> bool:
    """Primality of a tree: n >= 4 and every two distinct leaves at distance >= 3.

    Two leaves at distance 2 share a support, and distance 1 is impossible
    beyond a single edge, so the criterion reduces to every support having
    exactly one leaf neighbor, i.e. as many supports as leaves.
    """
    return tree.n >= 4 and len(tree.leaves) == len(tree.supports)


def forest_is_prime(graph: Graph) -> bool:
    """Primality of an induced subgraph of a tree.

    Such a graph is a forest; it is prime iff it is connected (hence a tree)
    and passes the leaf-distance criterion.  Rejects graphs with cycles,
    which this shortcut does not cover.
    """
    if graph.n == 0:
        return False
    if graph.edge_count > graph.n - 1:
        raise GraphError("forest_is_prime needs a forest; graph has a cycle")
    if graph.n < 4 or graph.edge_count != graph.n - 1:
        return False
    if not graph.is_connected():
        return False
    return tree_is_prime(TreeCert(graph))


def is_prime(graph: Graph, guard: int = BRUTE_FORCE_GUARD) -> bool:
    """Primality of any graph: tree criterion when the graph is a tree, else brute force."""
    if graph.n >= 1 and graph.edge_count == graph.n - 1 and graph.is_connected():
        return tree_is_prime(TreeCert(graph))
    return is_prime_brute_force(graph, guard)


def tree_module_witness(tree: TreeCert) -> ModuleWitness | None:
    """Smallest pair of distinct leaves sharing a support, or None.

    Nontrivial modules of a tree are exactly the sets of two or more leaves
    hanging off one support, so a shared-support leaf pair exists iff the
    tree is decomposable with some nontrivial module.  None is returned both
    for prime trees and for trees below four vertices whose modules are all
    trivial (single vertex, single edge).
    """
    best: tuple[int, int] | None = None
    for support in tree.supports:
        children = tree.leaf_neighbors(support)
        if len(children) >= 2:
            pair = (children[0], children[1])
            if best is None or pair < best:
                best = pair
    if best is None:
        return None
    return ModuleWitness(vertex_set(best))


def tree_nontrivial_module_count(tree: TreeCert) -> int:
    """Number of nontrivial modules of a tree, from its support structure.

    A support with m >= 2 leaf children contributes every leaf subset of
    size >= 2, i.e. 2^m - m - 1 modules; nothing else is a nontrivial module
    of a tree.
    """
    total = 0
    for support in tree.supports:
        m = len(tree.leaf_neighbors(support))
        if m >= 2:
            total += 2**m - m - 1
    return total
