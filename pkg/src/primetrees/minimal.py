"""Minimality of prime trees for a pinned vertex set.

A prime graph is minimal for a set X when no proper induced subgraph
containing X is prime.  The definitional test scans every vertex superset of
X; it is exponential and guarded, and serves as the oracle for the
three-condition checker, which is linear-time after the distance table.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .critical import Condition, ConditionReport, _leaf_distance_condition, _validated_set
from .graph import Graph, GraphError, TreeCert, certify_tree, vertex_set
from .modules import forest_is_prime, tree_is_prime

# Definitional minimality scans 2^(n-|X|) subsets.
MINIMALITY_GUARD = 16


def prime_proper_subgraph_witness(
    tree: TreeCert, members, guard: int = MINIMALITY_GUARD
) -> tuple[int, ...] | None:
    """Smallest proper vertex set W >= X with T[W] prime, or None.

    None means T is minimal for X by definition.  Search order is increasing
    size, then lexicographic, so the witness is deterministic.
    """
    if not tree_is_prime(tree):
        raise GraphError("minimality is defined for prime trees only")
    if tree.n > guard:
        raise GraphError(
            f"tree on {tree.n} vertices is too large for the definitional scan (guard {guard})"
        )
    chosen = vertex_set(members)
    for v in chosen:
        tree.graph.check_vertex(v)
    rest = [v for v in range(tree.n) if v not in set(chosen)]
    for size in range(len(rest)):
        for extra in combinations(rest, size):
            candidate = vertex_set(chosen + extra)
            sub, _ = tree.graph.induced_subgraph(candidate)
            if forest_is_prime(sub):
                return candidate
    return None


def is_minimal_brute_force(tree: TreeCert, members, guard: int = MINIMALITY_GUARD) -> bool:
    """Definitional minimality: no proper induced prime subgraph contains X."""
    return prime_proper_subgraph_witness(tree, members, guard) is None


def check_minimal_set(tree: TreeCert, members) -> ConditionReport:
    """Verdicts of the three conditions equivalent to "this prime tree is
    minimal for this vertex set", for trees with at least 5 vertices.

    All conditions are evaluated even after a failure.  Condition 3 speaks
    about a support's unique pendant leaf; a support with several pendant
    leaves (condition 1 already failed then) is skipped.
    """
    if tree.n < 5:
        raise GraphError("the characterization is stated for trees with >= 5 vertices")
    chosen = _validated_set(tree, members)
    cset = set(chosen)
    leaves = set(tree.leaves)
    dist = tree.graph.distance_matrix
    conds = [_leaf_distance_condition(tree)]

    c2 = Condition(2, True, None, "every leaf or its support is in the set")
    for x in sorted(leaves):
        if x not in cset and tree.support_of(x) not in cset:
            c2 = Condition(
                2, False, (x,), f"leaf {x} and its support {tree.support_of(x)} are both outside"
            )
            break
    conds.append(c2)

    c3 = Condition(
        3, True, None,
        "support members without their pendant leaf have degree 2 and a member leaf at distance 2",
    )
    for xi in chosen:
        pendant = tree.leaf_neighbors(xi)
        if len(pendant) != 1 or pendant[0] in cset:
            continue
        ok = tree.graph.degree(xi) == 2 and any(
            xj != xi and xj in leaves and dist[xi][xj] == 2 for xj in chosen
        )
        if not ok:
            c3 = Condition(
                3, False, (xi,),
                f"support member {xi} (pendant leaf outside): degree "
                f"{tree.graph.degree(xi)}, no member leaf at distance 2",
            )
            break
    conds.append(c3)
    return ConditionReport(tuple(conds))


def _find_deletion(graph: Graph, keep: set[int], pinned: set[int]) -> set[int] | None:
    """One legal shrink step: a single vertex, else a leaf-support pair.

    A step removes vertices outside the pinned set and leaves a prime tree.
    Single deletions alone can stall before minimality (a pendant 2-path can
    be removable only as a whole), so leaf-support pairs back them up.
    Vertices are scanned in increasing id order.
    """
    for v in sorted(keep - pinned):
        sub, _ = graph.induced_subgraph(keep - {v})
        if forest_is_prime(sub):
            return {v}
    current, idmap = graph.induced_subgraph(keep)
    cert = certify_tree(current)
    for leaf in cert.leaves:
        y = idmap[leaf]
        support = idmap[cert.support_of(leaf)]
        if y in pinned or support in pinned:
            continue
        sub, _ = graph.induced_subgraph(keep - {y, support})
        if forest_is_prime(sub):
            return {y, support}
    return None


def extract_minimal_subtree(tree: TreeCert, members) -> tuple[TreeCert, tuple[int, ...]]:
    """Greedily shrink a prime tree to a subtree minimal for the given set.

    Returns the subtree plus the id remap (new id -> id in the input tree).
    The result contains the set, is prime, and passes the minimality
    conditions (or is the 4-vertex path, which is minimal for everything).
    """
    if not tree_is_prime(tree):
        raise GraphError("extraction needs a prime tree")
    pinned = set(vertex_set(members))
    for v in pinned:
        tree.graph.check_vertex(v)
    keep = set(range(tree.n))
    while True:
        step = _find_deletion(tree.graph, keep, pinned)
        if step is None:
            break
        keep -= step
    sub, idmap = tree.graph.induced_subgraph(keep)
    cert = certify_tree(sub)
    if cert.n > 4:
        back = {orig: new for new, orig in enumerate(idmap)}
        inner = vertex_set(back[x] for x in pinned)
        if not inner or not check_minimal_set(cert, inner).overall:
            raise RuntimeError("extraction stopped at a non-minimal subtree")
    return cert, idmap


def is_k_minimal(tree: TreeCert, k: int) -> bool:
    """Minimal for some k-element vertex set.

    The 4-vertex prime tree is minimal for every subset.  Above that, each
    leaf needs itself or its support picked, and those pairs are disjoint in
    a prime tree, so more leaves than k rules the tree out before scanning.
    """
    if k < 0:
        raise GraphError(f"k must be >= 0, got {k}")
    if not tree_is_prime(tree):
        return False
    if tree.n == 4:
        return k <= 4
    if len(tree.leaves) > k:
        return False
    return any(
        check_minimal_set(tree, chosen).overall
        for chosen in combinations(range(tree.n), k)
    )


@dataclass(frozen=True)
class MinimalForm:
    """Shape tag for a tree/3-set pair tested for minimality."""

    kind: str
    params: tuple[int, ...] = ()

    def __str__(self) -> str:
        if not self.params:
            return self.kind
        return f"{self.kind}({', '.join(map(str, self.params))})"


def classify_three_minimal(tree: TreeCert, members) -> MinimalForm:
    """Classify a (tree, 3-set) pair into the known minimal shapes.

    Shapes: P4 (minimal for every triple); PK, a path with the set covering
    both leaves; SKMN, a three-leg star with the set equal to its leaves and
    middle leg >= 2; S12N, legs (1, 2, n) with the set {short leaf, middle of
    the 2-leg, tip of the n-leg}; S122, legs (1, 2, 2) with the set {short
    leaf, both 2-leg midpoints}.  Everything else is NotMinimal.
    """
    chosen = vertex_set(members)
    if len(chosen) != 3:
        raise GraphError(f"classification needs exactly 3 distinct vertices, got {len(chosen)}")
    for v in chosen:
        tree.graph.check_vertex(v)
    if not tree_is_prime(tree):
        return MinimalForm("NotMinimal")
    if tree.n == 4:
        return MinimalForm("P4")
    if not check_minimal_set(tree, chosen).overall:
        return MinimalForm("NotMinimal")
    degrees = [tree.graph.degree(v) for v in range(tree.n)]
    if max(degrees) <= 2:
        return MinimalForm("PK", (tree.n,))
    center = degrees.index(3)
    legs: list[list[int]] = []
    for first in tree.graph.adj[center]:
        leg = [first]
        prev = center
        while tree.graph.degree(leg[-1]) == 2:
            nxt = next(w for w in tree.graph.adj[leg[-1]] if w != prev)
            prev = leg[-1]
            leg.append(nxt)
        legs.append(leg)
    legs.sort(key=len)
    cset = set(chosen)
    if cset == {leg[-1] for leg in legs}:
        return MinimalForm("SKMN", tuple(len(leg) for leg in legs))
    if len(legs[0]) == 1:
        short_leaf = legs[0][0]
        if (
            len(legs[1]) == 2
            and len(legs[2]) == 2
            and cset == {short_leaf, legs[1][0], legs[2][0]}
        ):
            return MinimalForm("S122")
        for mid_leg, long_leg in ((legs[1], legs[2]), (legs[2], legs[1])):
            if len(mid_leg) == 2 and cset == {short_leaf, mid_leg[0], long_leg[-1]}:
                return MinimalForm("S12N", (len(long_leg),))
    raise RuntimeError("minimal triple does not match any known shape")
