"""Fusion of suborbits by outer automorphisms, and the bounds it yields.

An outer subgroup X can merge suborbits into orbits of the extended group,
but only suborbits of equal length, and never more than |X| of them into one
orbit. Grouping suborbits by length therefore lower-bounds the number of
fused orbits, which in turn lower-bounds the diameter of any candidate graph.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .groups import CaseFamily
from .tables import ConcreteTable, distinct_nontrivial_lengths


@dataclass(frozen=True)
class FusionConstraint:
    """The only fusion datum any argument needs: |X|."""

    x_order: int

    def __post_init__(self) -> None:
        if self.x_order < 1:
            raise ValueError("x_order must be >= 1")


@dataclass(frozen=True)
class LengthGroup:
    length: int
    multiplicity: int


def length_groups(ct: ConcreteTable) -> tuple[LengthGroup, ...]:
    """Nontrivial suborbits grouped by exact length, sorted by length."""
    groups: dict[int, int] = {}
    for row in ct.nontrivial_rows:
        groups[row.length] = groups.get(row.length, 0) + row.count
    return tuple(LengthGroup(length, mult) for length, mult in sorted(groups.items()))


def min_fused_classes(groups: tuple[LengthGroup, ...], c: FusionConstraint) -> int:
    """Lower bound on the number of nontrivial fused orbits under |X|-fusion.

    Each length group of multiplicity k splits into at least ceil(k / |X|)
    orbits because an orbit absorbs at most |X| equal-length suborbits.
    """
    x = c.x_order
    return sum(-(-g.multiplicity // x) for g in groups)


def exhaustive_min_fused_classes(groups: tuple[LengthGroup, ...], c: FusionConstraint) -> int:
    """Cross-check oracle: minimize parts over all partitions into parts <= |X|.

    Exponential-free dynamic program per length group; guarded to tables with
    at most 40 nontrivial suborbits since it exists only to validate
    min_fused_classes on small instances.
    """
    total = sum(g.multiplicity for g in groups)
    if total > 40:
        raise ValueError(f"exhaustive cross-check limited to 40 suborbits, got {total}")
    x = c.x_order
    result = 0
    for g in groups:
        best: list[int | None] = [None] * (g.multiplicity + 1)
        best[0] = 0
        for t in range(1, g.multiplicity + 1):
            options = [best[t - p] for p in range(1, min(x, t) + 1) if best[t - p] is not None]
            best[t] = 1 + min(options)  # type: ignore[type-var]
        assert best[g.multiplicity] is not None
        result += best[g.multiplicity]
    return result


def fused_diameter_bound(family: CaseFamily, param: int, c: FusionConstraint) -> Fraction:
    """The coarse diameter lower bound (q + 6) / |X| for the ree family."""
    if family.kind != "ree":
        raise ValueError("the (q + 6) / |X| bound applies to the ree family only")
    q = family.q_value(param)
    return Fraction(q + 6, c.x_order)


def excludes_diameter_two(ct: ConcreteTable, c: FusionConstraint) -> bool:
    """True when >= 3 distinct nontrivial lengths force diameter >= 3.

    Fusion only merges equal lengths, so three distinct nontrivial lengths
    survive as at least three distinct fused orbits.
    """
    return len(distinct_nontrivial_lengths(ct)) >= 3


def smallest_fused_candidates(ct: ConcreteTable, c: FusionConstraint) -> tuple[str, ...]:
    """Labels of all rows whose length is among the two smallest nontrivial lengths.

    Fusion never shrinks an orbit, so any fused orbit that is among the two
    smallest must be assembled from these rows; the set over-approximates the
    first sphere of any candidate graph (and the last one in the swapped case).
    """
    lengths = distinct_nontrivial_lengths(ct)[:2]
    chosen = [r for r in ct.nontrivial_rows if r.length in lengths]
    chosen.sort(key=lambda r: (r.length, r.label))
    return tuple(r.label for r in chosen)
