"""
Best Order Sort.

Points are visited round-robin over the per-objective sorted lists. A point
is ranked the first time it shows up, against the points already seen in the
same list only; an objective is dropped from a point's consider set once the
point has been seen in that objective's list.

``bos_helper_a`` and ``bos_helper_b`` run the same scan as a subproblem
solver inside divide-and-conquer: ranks may start from non-zero lower bounds,
and in the two-set form only ``L`` feeds the rank lists while only ``H`` gets
ranked.
"""
from dataclasses import dataclass
from typing import Collection, Iterable, Sequence

from .core import ObjectiveVector, PointSet, RankAssignment


@dataclass
class BosCounters:
    """
    Optional instrumentation for a scan.

    Subclasses may override ``on_objective_removed`` and ``on_new_point`` to
    observe the scan order.
    """
    new_points: int = 0
    dominance_checks: int = 0
    scanned_positions: int = 0

    def on_objective_removed(self, index: int, objective: int) -> None:
        pass

    def on_new_point(self, index: int) -> None:
        pass


def _dominates_on(q: ObjectiveVector, p: ObjectiveVector, objectives: Iterable[int]) -> bool:
    for k in objectives:
        if q[k] > p[k]:
            return False
    return True


def objective_sorted_lists(
    points: Sequence[ObjectiveVector],
    indices: Sequence[int],
    m: int,
) -> list[list[int]]:
    """
    One permutation of ``indices`` per objective in ``[0, m)``.

    ``points`` is lexicographically sorted, so ties on an objective are broken
    by index, which keeps every dominator ahead of the points it dominates.
    """
    return [sorted(indices, key=lambda i, j=j: (points[i][j], i)) for j in range(m)]


def find_rank(
    point: ObjectiveVector,
    start_rank: int,
    rank_lists: Sequence[Sequence[int]],
    consider_sets,
    points: Sequence[ObjectiveVector],
    counters: BosCounters | None = None,
) -> int:
    """
    Smallest rank ``r >= start_rank`` whose list holds no dominator of ``point``.

    A candidate dominator ``q`` is only compared on the objectives left in
    ``consider_sets[q]``. Linear scan upwards from the lower bound.
    """
    rank = start_rank
    while rank < len(rank_lists):
        dominated = False
        for q in rank_lists[rank]:
            if counters is not None:
                counters.dominance_checks += 1
            if _dominates_on(points[q], point, consider_sets[q]):
                dominated = True
                break
        if not dominated:
            return rank
        rank += 1
    return rank


def highest_dominated_rank(
    point: ObjectiveVector,
    rank_lists: Sequence[Sequence[int]],
    consider_sets,
    points: Sequence[ObjectiveVector],
    counters: BosCounters | None = None,
) -> int:
    """
    Highest rank whose list holds a dominator of ``point``, or -1.

    Scans downwards, so gaps between the occupied ranks do not matter.
    """
    for rank in range(len(rank_lists) - 1, -1, -1):
        for q in rank_lists[rank]:
            if counters is not None:
                counters.dominance_checks += 1
            if _dominates_on(points[q], point, consider_sets[q]):
                return rank
    return -1


def _scan(
    points: Sequence[ObjectiveVector],
    indices: Sequence[int],
    m: int,
    ranks: list[int],
    sources: Collection[int] | None = None,
    targets: Collection[int] | None = None,
    counters: BosCounters | None = None,
) -> None:
    """
    Round-robin domination scan over ``indices``.

    ``sources`` are the points inserted into rank lists, ``targets`` the points
    whose ranks are looked up; ``None`` means every point. Stops once every
    target has been seen. In the two-set form the ranks of ``sources`` may
    leave gaps, so targets take one above the highest dominated rank instead
    of the first free one.
    """
    size = len(indices)
    remaining = size if targets is None else len(targets)
    two_set = sources is not None and targets is not None
    if size == 0 or remaining == 0:
        return

    lists = objective_sorted_lists(points, indices, m)
    consider = {i: list(range(m)) for i in indices}
    rank_lists = [[] for _ in range(m)]
    seen = set()

    for position in range(size):
        for j in range(m):
            p = lists[j][position]
            consider[p].remove(j)
            if counters is not None:
                counters.scanned_positions += 1
                counters.on_objective_removed(p, j)

            if p not in seen:
                seen.add(p)
                if counters is not None:
                    counters.new_points += 1
                    counters.on_new_point(p)
                if two_set and p in targets:
                    top = highest_dominated_rank(points[p], rank_lists[j], consider, points, counters)
                    ranks[p] = max(ranks[p], top + 1)
                    remaining -= 1
                elif targets is None or p in targets:
                    ranks[p] = find_rank(points[p], ranks[p], rank_lists[j], consider, points, counters)
                    remaining -= 1

            if sources is None or p in sources:
                objective_ranks = rank_lists[j]
                while len(objective_ranks) <= ranks[p]:
                    objective_ranks.append([])
                objective_ranks[ranks[p]].append(p)

            if remaining == 0:
                return


def sort_bos(points: PointSet, counters: BosCounters | None = None) -> RankAssignment:
    """Standalone Best Order Sort over all objectives."""
    order = points.lex_order()
    ordered = [points.points[i] for i in order]
    ranks = [0] * len(ordered)
    _scan(ordered, range(len(ordered)), points.n_objectives, ranks, counters=counters)

    unique_ranks = [0] * len(ordered)
    for position, index in enumerate(order):
        unique_ranks[index] = ranks[position]
    return points.expand(unique_ranks)


def bos_helper_a(
    points: Sequence[ObjectiveVector],
    S: Sequence[int],
    m: int,
    ranks: list[int],
    counters: BosCounters | None = None,
) -> None:
    """
    Finalize ranks inside ``S`` using the first ``m`` objectives.

    ``S`` holds indices into the lexicographically sorted ``points``; the
    incoming ranks are lower bounds and only ever increase.
    """
    _scan(points, S, m, ranks, counters=counters)


def bos_helper_b(
    points: Sequence[ObjectiveVector],
    L: Sequence[int],
    H: Sequence[int],
    m: int,
    ranks: list[int],
    counters: BosCounters | None = None,
) -> None:
    """
    Raise ranks of ``H`` using the final ranks of ``L`` on the first ``m`` objectives.

    Points of ``L`` fill the rank lists without lookup, points of ``H`` are
    looked up without being inserted. Ranks of ``L`` are never touched, and
    each point of ``H`` ends at one above its highest ranked dominator in ``L``
    or keeps its incoming rank if that is larger.
    """
    if not L or not H:
        return
    merged = sorted([*L, *H])
    _scan(points, merged, m, ranks, sources=set(L), targets=set(H), counters=counters)
