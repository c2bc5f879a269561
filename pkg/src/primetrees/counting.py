"""Closed-form counts of special tree classes, paired with enumeration.

All arithmetic is exact integer arithmetic; the nearest-integer bracket in
the three-part partition formula never meets a half integer because squares
are 0, 1, 4, or 9 mod 12.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Literal

from .critical import noncritical_vertices
from .enumeration import all_trees
from .graph import TreeCert
from .minimal import is_k_minimal
from .modules import tree_is_prime

CountKind = Literal["critical2", "minimal3"]


def _round_nearest(num: int, den: int) -> int:
    """Nearest integer to num/den, exactly; half integers are rejected."""
    if (2 * num + den) % (2 * den) == 0:
        raise ArithmeticError(f"{num}/{den} is a half integer; no nearest integer")
    return (2 * num + den) // (2 * den)


def partitions_two_parts(k: int) -> int:
    """Number of partitions of k into exactly 2 positive parts.

    Closed form floor(k/2) on the stated range k >= 3; tiny cases are pinned
    directly.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if k < 3:
        return 1 if k == 2 else 0
    return k // 2


def partitions_three_parts(k: int) -> int:
    """Number of partitions of k into exactly 3 positive parts.

    Uses the at-most-3-parts bracket [(k+3)^2 / 12] minus the counts with
    fewer parts.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return _round_nearest((k + 3) ** 2, 12) - k // 2 - 1


def count_minus2_critical_formula(n: int) -> int:
    """Closed-form number of nonisomorphic prime trees on n vertices having
    exactly two non-critical vertices; stated for n >= 5."""
    if n < 5:
        raise ValueError(f"the count is stated for n >= 5, got {n}")
    q = n // 4
    r = n % 4
    if r == 0:
        return q * q - 1
    if r == 1:
        return q * q
    if r == 2:
        return q * (q + 1) - 1
    return q * (q + 1)


def count_3minimal_formula(n: int) -> int:
    """Closed-form number of nonisomorphic trees on n vertices minimal for
    some 3-element vertex set; stated for n >= 4."""
    if n < 4:
        raise ValueError(f"the count is stated for n >= 4, got {n}")
    if n in (4, 5):
        return 1
    if n == 6:
        return 2
    return _round_nearest((n - 1) ** 2, 12) - (n - 4) // 2 + (n - 2) // 2 - 1


def is_minus2_critical(tree: TreeCert) -> bool:
    """Prime tree with exactly two non-critical vertices."""
    return tree_is_prime(tree) and noncritical_vertices(tree).k == 2


def is_3_minimal(tree: TreeCert) -> bool:
    return is_k_minimal(tree, 3)


_PREDICATES: dict[str, tuple[int, Callable[[TreeCert], bool], Callable[[int], int]]] = {
    "critical2": (5, is_minus2_critical, count_minus2_critical_formula),
    "minimal3": (4, is_3_minimal, count_3minimal_formula),
}


@dataclass(frozen=True)
class CountRow:
    n: int
    formula: int
    enumerated: int | None = None

    @property
    def agree(self) -> bool | None:
        if self.enumerated is None:
            return None
        return self.formula == self.enumerated


@dataclass(frozen=True)
class CountTable:
    kind: str
    rows: tuple[CountRow, ...]

    @property
    def all_agree(self) -> bool:
        return all(row.agree for row in self.rows)

    def disagreements(self) -> tuple[CountRow, ...]:
        return tuple(row for row in self.rows if row.agree is False)


def count_table(
    kind: CountKind, n_max: int, verify: bool = True
) -> CountTable:
    """Formula values for each n up to n_max, with enumeration next to them.

    With verify=False only the formula column is filled; with verify=True
    every n is also counted by exhaustive enumeration over the isomorphism
    classes, so a False `agree` pinpoints a wrong formula or a wrong
    predicate, never sampling noise.
    """
    if kind not in _PREDICATES:
        raise ValueError(f"unknown count kind {kind!r}")
    n_min, predicate, formula = _PREDICATES[kind]
    if n_max < n_min:
        raise ValueError(f"n_max must be >= {n_min} for {kind}, got {n_max}")
    rows = []
    for n in range(n_min, n_max + 1):
        enumerated = None
        if verify:
            enumerated = sum(1 for tree in all_trees(n) if predicate(tree))
        rows.append(CountRow(n, formula(n), enumerated))
    return CountTable(kind, tuple(rows))
