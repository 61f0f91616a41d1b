"""
Definition-level non-dominated sorting.

Quadratic and deliberately plain: every other algorithm is checked against it.
"""
from typing import Sequence

from .core import ObjectiveVector, PointSet, RankAssignment, dominates_strict, dominates_weak


def sort_naive(points: PointSet) -> RankAssignment:
    """
    Rank every point as one plus the maximum rank of its dominators.

    A dominator always precedes the dominated point in lexicographic order,
    so a single pass over the sorted points sees final ranks only.
    """
    order = points.lex_order()
    m = points.n_objectives
    ranks = [0] * len(points)
    for position, p in enumerate(order):
        rank = 0
        for q in order[:position]:
            if ranks[q] >= rank and dominates_strict(points.points[q], points.points[p], m):
                rank = ranks[q] + 1
        ranks[p] = rank
    return points.expand(ranks)


def count_levels(ranks: RankAssignment | Sequence[int]) -> int:
    """Number of non-domination levels, i.e. one plus the maximum rank."""
    values = list(ranks)
    if not values:
        return 0
    return max(values) + 1


def update_naive(
    points: Sequence[ObjectiveVector],
    L: Sequence[int],
    H: Sequence[int],
    m: int,
    ranks: list[int],
) -> None:
    """Brute-force two-set update: raise ranks of ``H`` using final ranks of ``L``."""
    for h in H:
        for l in L:
            if dominates_weak(points[l], points[h], m) and ranks[l] + 1 > ranks[h]:
                ranks[h] = ranks[l] + 1


def verify_ranks(points: PointSet, ranks: RankAssignment) -> list[str]:
    """
    Check the max-dominator property and return a list of violations.

    Every point of rank r > 0 needs a dominator of rank r - 1, and no point may
    be dominated by a point of equal or higher rank.
    """
    problems = []
    unique = points.points
    m = points.n_objectives
    unique_ranks = {}
    for index, group in enumerate(points.group_of):
        previous = unique_ranks.setdefault(group, ranks[index])
        if previous != ranks[index]:
            problems.append(f"Duplicates of point {group} received ranks {previous} and {ranks[index]}.")

    for p, rank_p in unique_ranks.items():
        has_witness = rank_p == 0
        for q, rank_q in unique_ranks.items():
            if not dominates_strict(unique[q], unique[p], m):
                continue
            if rank_q >= rank_p:
                problems.append(f"Point {p} (rank {rank_p}) is dominated by point {q} (rank {rank_q}).")
            if rank_q == rank_p - 1:
                has_witness = True
        if not has_witness:
            problems.append(f"Point {p} has rank {rank_p} but no dominator of rank {rank_p - 1}.")
    return problems
