"""Critical and non-critical vertices of prime trees, and family classification.

A vertex x of a prime graph G is critical when G - x is decomposable.  For a
prime tree, deleting an internal vertex always disconnects (hence
decomposes), so only leaf deletions can stay prime; the per-deletion check
uses the tree criterion, which keeps the whole sweep quadratic.  A brute
force over all single-vertex deletions is kept as the oracle for general
prime graphs and for cross-checking the tree route.
"""

from __future__ import annotations

from dataclasses import dataclass

from .enumeration import canonical_form
from .families import path, pkt, pmn, spider
from .graph import Graph, GraphError, TreeCert, certify_tree, vertex_set
from .modules import (
    BRUTE_FORCE_GUARD,
    ModuleWitness,
    is_prime_brute_force,
    tree_is_prime,
)


@dataclass(frozen=True)
class NoncriticalSet:
    """The non-critical vertices of a prime graph; k is their count."""

    vertices: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.vertices)


def _as_tree(value: Graph | TreeCert) -> TreeCert | None:
    if isinstance(value, TreeCert):
        return value
    if value.n >= 1 and value.edge_count == value.n - 1 and value.is_connected():
        return TreeCert(value)
    return None


def noncritical_vertices(
    value: Graph | TreeCert, guard: int = BRUTE_FORCE_GUARD
) -> NoncriticalSet:
    """All x with G - x still prime.  Defined for prime graphs only.

    Trees bypass the subset-scan entirely: internal deletions disconnect,
    and leaf deletions are re-tested with the leaf-distance criterion.
    """
    tree = _as_tree(value)
    if tree is not None:
        if not tree_is_prime(tree):
            raise GraphError("non-critical vertices are defined for prime graphs only")
        keep = []
        for x in tree.leaves:
            remainder, _ = tree.graph.without({x})
            if tree_is_prime(certify_tree(remainder)):
                keep.append(x)
        return NoncriticalSet(vertex_set(keep))
    graph = value if isinstance(value, Graph) else value.graph
    if not is_prime_brute_force(graph, guard):
        raise GraphError("non-critical vertices are defined for prime graphs only")
    return noncritical_vertices_brute_force(graph, guard)


def noncritical_vertices_brute_force(
    graph: Graph, guard: int = BRUTE_FORCE_GUARD
) -> NoncriticalSet:
    """Oracle route: test every single-vertex deletion by subset scan."""
    if not is_prime_brute_force(graph, guard):
        raise GraphError("non-critical vertices are defined for prime graphs only")
    keep = []
    for x in range(graph.n):
        remainder, _ = graph.without({x})
        if is_prime_brute_force(remainder, guard):
            keep.append(x)
    return NoncriticalSet(vertex_set(keep))


def is_k_critical(tree: TreeCert, k: int) -> bool:
    """Exactly k non-critical vertices (input must be a prime tree)."""
    return noncritical_vertices(tree).k == k


# ---------------------------------------------------------------------------
# condition reports


@dataclass(frozen=True)
class Condition:
    """One numbered condition verdict; failing verdicts carry a witness."""

    index: int
    holds: bool
    witness: tuple[int, ...] | None = None
    note: str = ""


@dataclass(frozen=True)
class ConditionReport:
    """Ordered condition verdicts; overall truth is their conjunction."""

    conditions: tuple[Condition, ...]

    @property
    def overall(self) -> bool:
        return all(c.holds for c in self.conditions)

    def failures(self) -> tuple[Condition, ...]:
        return tuple(c for c in self.conditions if not c.holds)


def _leaf_distance_condition(tree: TreeCert) -> Condition:
    """Condition shared by both characterizations: leaf pairs at distance >= 3."""
    dist = tree.graph.distance_matrix
    leaves = tree.leaves
    for i in range(len(leaves)):
        for j in range(i + 1, len(leaves)):
            d = dist[leaves[i]][leaves[j]]
            if d is not None and d < 3:
                return Condition(
                    1, False, (leaves[i], leaves[j]),
                    f"leaves {leaves[i]} and {leaves[j]} at distance {d}",
                )
    return Condition(1, True, None, "every two leaves at distance >= 3")


def _validated_set(tree: TreeCert, members) -> tuple[int, ...]:
    chosen = vertex_set(members)
    if not chosen:
        raise GraphError("vertex set must be nonempty")
    for v in chosen:
        tree.graph.check_vertex(v)
    return chosen


def check_noncritical_set(tree: TreeCert, members) -> ConditionReport:
    """Verdicts of the four conditions equivalent to "the non-critical
    vertices of this prime tree are exactly this set".

    All four conditions are evaluated even after one fails, so the report is
    usable as a diagnostic.  Needs at least 5 vertices and a nonempty set.
    """
    n = tree.n
    if n < 5:
        raise GraphError("the characterization is stated for trees with >= 5 vertices")
    chosen = _validated_set(tree, members)
    cset = set(chosen)
    leaves = set(tree.leaves)
    dist = tree.graph.distance_matrix
    conds = [_leaf_distance_condition(tree)]

    non_leaf = sorted(cset - leaves)
    if non_leaf:
        conds.append(
            Condition(2, False, (non_leaf[0],), f"member {non_leaf[0]} is not a leaf")
        )
    elif len(cset) > n // 2:
        conds.append(
            Condition(2, False, chosen, f"set size {len(cset)} exceeds floor(n/2) = {n // 2}")
        )
    else:
        conds.append(Condition(2, True, None, "all members are leaves, size within floor(n/2)"))

    c3 = Condition(
        3, True, None,
        "each outside leaf has a degree-2 support and exactly one member at distance 3",
    )
    for x in sorted(leaves - cset):
        support_degree = tree.graph.degree(tree.support_of(x))
        hits = sum(1 for xi in chosen if dist[x][xi] == 3)
        if support_degree != 2 or hits != 1:
            c3 = Condition(
                3, False, (x,),
                f"leaf {x}: support degree {support_degree}, {hits} member(s) at distance 3",
            )
            break
    conds.append(c3)

    c4 = Condition(
        4, True, None,
        "members with a degree-2 support keep every other leaf at distance >= 4",
    )
    for xi in chosen:
        if xi not in leaves:
            continue
        if tree.graph.degree(tree.support_of(xi)) != 2:
            continue
        for y in sorted(leaves - {xi}):
            if dist[xi][y] < 4:
                c4 = Condition(
                    4, False, (xi, y),
                    f"member {xi} has a degree-2 support but leaf {y} is at distance {dist[xi][y]}",
                )
                break
        if not c4.holds:
            break
    conds.append(c4)
    return ConditionReport(tuple(conds))


def unique_module_of_leaf_deletion(tree: TreeCert, leaf: int) -> ModuleWitness | None:
    """The single nontrivial module left by deleting a leaf of a prime tree.

    Returns None when the deletion stays prime.  When it decomposes, the
    remainder has exactly one nontrivial module, a pair {y, s} of a leaf y
    and the deleted leaf's support s; anything else would contradict the
    support-structure description of tree modules, so it raises.
    """
    if not tree_is_prime(tree):
        raise GraphError("input must be a prime tree")
    if not tree.is_leaf(leaf):
        raise GraphError(f"vertex {leaf} is not a leaf")
    remainder, idmap = tree.graph.without({leaf})
    cert = certify_tree(remainder)
    if tree_is_prime(cert):
        return None
    crowded = [s for s in cert.supports if len(cert.leaf_neighbors(s)) >= 2]
    if len(crowded) != 1 or len(cert.leaf_neighbors(crowded[0])) != 2:
        raise RuntimeError("leaf deletion left more than one nontrivial module")
    members = vertex_set(idmap[v] for v in cert.leaf_neighbors(crowded[0]))
    if tree.support_of(leaf) not in members:
        raise RuntimeError("unique module does not contain the deleted leaf's support")
    return ModuleWitness(members)


# ---------------------------------------------------------------------------
# family classification


@dataclass(frozen=True)
class CriticalFamily:
    """Named-family tag with recovered parameters; kind 'Other' otherwise."""

    kind: str
    params: tuple[int, ...] = ()

    def __str__(self) -> str:
        if not self.params:
            return self.kind
        return f"{self.kind}({', '.join(map(str, self.params))})"


def classify_critical_family(tree: TreeCert) -> CriticalFamily:
    """Match a prime tree against the named families by canonical form.

    Candidate parameters are recovered from the vertex and leaf counts, then
    confirmed by canonical-code equality with a freshly built member, so no
    case analysis is trusted without the isomorphism check.  Precedence is
    path, spider, single-hub, double-hub; the 5-vertex spider coincides with
    the 5-path and reports as a path.
    """
    if not tree_is_prime(tree):
        raise GraphError("family classification is defined for prime trees only")
    n = tree.n
    code = canonical_form(tree)
    if code == canonical_form(path(n).cert):
        return CriticalFamily("Path", (n,))
    if n % 2 == 1 and n >= 5:
        m = (n - 1) // 2
        if code == canonical_form(spider(m).cert):
            return CriticalFamily("Spider", (m,))
    pairs = len(tree.leaves) - 2
    k = n - 2 * pairs
    if pairs >= 1 and k >= 4 and code == canonical_form(pkt(k, pairs).cert):
        return CriticalFamily("Pkt", (k, pairs))
    m = n - 2 * pairs
    if pairs >= 2 and m >= 4:
        for n1 in range(1, pairs // 2 + 1):
            n2 = pairs - n1
            if code == canonical_form(pmn(m, n1, n2).cert):
                return CriticalFamily("Pmn", (m, n1, n2))
    return CriticalFamily("Other")
