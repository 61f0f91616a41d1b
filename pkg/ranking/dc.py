"""
Divide-and-conquer non-dominated sorting.

``helper_a(S, m)`` finalizes ranks inside ``S`` on the first ``m`` objectives,
``helper_b(L, H, m)`` raises ranks of ``H`` using the final ranks of ``L``.
Both recurse on three-way median splits of objective ``m`` and bottom out in
the two-objective sweeps.

Every subset is a list of indices into one lexicographically sorted array of
distinct points, kept in increasing index order, so index order is
lexicographic order throughout.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Sequence

import numpy as np
from sortedcontainers import SortedDict

from .core import ObjectiveVector, PointSet, RankAssignment, dominates_strict, dominates_weak


class SubproblemKind(str, Enum):
    A = 'A'
    B = 'B'


class SubproblemHook:
    """
    Delegate consulted before every helper call.

    Returning True reports the subproblem as handled and stops the recursion
    for it; the base implementation declines everything.
    """

    def on_helper_a(self, S: list[int], m: int, state: 'WorkingState') -> bool:
        return False

    def on_helper_b(self, L: list[int], H: list[int], m: int, state: 'WorkingState') -> bool:
        return False


@dataclass
class WorkingState:
    points: Sequence[ObjectiveVector]
    ranks: list[int]
    hook: SubproblemHook | None = None
    trace: list | None = None
    # called as on_compare(p, q, m) whenever p is tested against q on [1; m]
    on_compare: Callable[[int, int, int], None] | None = None
    n_objectives: int = field(init=False)

    def __post_init__(self):
        self.n_objectives = len(self.points[0]) if self.points else 0

    @classmethod
    def fresh(cls, points: Sequence[ObjectiveVector], **kwargs) -> 'WorkingState':
        return cls(points=points, ranks=[0] * len(points), **kwargs)

    def raise_rank(self, target: int, source: int) -> None:
        if self.ranks[source] + 1 > self.ranks[target]:
            self.ranks[target] = self.ranks[source] + 1


class LevelRepresentativeTree:
    """
    Staircase of level representatives for the two-objective sweeps.

    Keyed by the second objective; a representative with a greater key always
    carries a strictly greater level, so the predecessor of a query value is
    the highest level that weakly dominates it.
    """

    def __init__(self):
        self._by_value = SortedDict()

    def __len__(self):
        return len(self._by_value)

    def query(self, value: float) -> tuple[int, int] | None:
        """``(level, point index)`` of the highest level with key <= ``value``."""
        position = self._by_value.bisect_right(value)
        if position == 0:
            return None
        return self._by_value.peekitem(position - 1)[1]

    def insert(self, value: float, level: int, index: int) -> None:
        found = self.query(value)
        if found is not None and found[0] >= level:
            return
        position = self._by_value.bisect_left(value)
        while position < len(self._by_value) and self._by_value.peekitem(position)[1][0] <= level:
            self._by_value.popitem(position)
        self._by_value[value] = (level, index)

    def representatives(self) -> list[tuple[float, int, int]]:
        return [(value, level, index) for value, (level, index) in self._by_value.items()]

    def is_staircase(self) -> bool:
        levels = [level for level, _ in self._by_value.values()]
        return all(a < b for a, b in zip(levels, levels[1:]))


def median_value(values: Sequence[float]) -> float:
    """Element of rank ``len(values) // 2``."""
    k = len(values) // 2
    return float(np.partition(np.asarray(values, dtype=float), k)[k])


def partition_by_value(
    indices: Sequence[int],
    m: int,
    pivot: float,
    points: Sequence[ObjectiveVector],
) -> tuple[list[int], list[int], list[int]]:
    """Stable split of ``indices`` into objective-``m`` values below, at and above ``pivot``."""
    low, mid, high = [], [], []
    k = m - 1
    for i in indices:
        value = points[i][k]
        if value < pivot:
            low.append(i)
        elif value > pivot:
            high.append(i)
        else:
            mid.append(i)
    return low, mid, high


def split_by_median(
    indices: Sequence[int],
    m: int,
    points: Sequence[ObjectiveVector],
) -> tuple[list[int], list[int], list[int]]:
    pivot = median_value([points[i][m - 1] for i in indices])
    return partition_by_value(indices, m, pivot, points)


def sweep_a(S: Sequence[int], state: WorkingState) -> None:
    points, ranks = state.points, state.ranks
    tree = LevelRepresentativeTree()
    for p in S:
        value = points[p][1]
        found = tree.query(value)
        if found is not None:
            level, q = found
            if state.on_compare is not None:
                state.on_compare(q, p, 2)
            if level + 1 > ranks[p]:
                ranks[p] = level + 1
        tree.insert(value, ranks[p], p)


def sweep_b(L: Sequence[int], H: Sequence[int], state: WorkingState) -> None:
    points, ranks = state.points, state.ranks
    tree = LevelRepresentativeTree()
    i = 0
    for h in H:
        while i < len(L) and L[i] < h:
            l = L[i]
            tree.insert(points[l][1], ranks[l], l)
            i += 1
        found = tree.query(points[h][1])
        if found is not None:
            level, q = found
            if state.on_compare is not None:
                state.on_compare(q, h, 2)
            if level + 1 > ranks[h]:
                ranks[h] = level + 1


def helper_a(S: list[int], m: int, state: WorkingState) -> None:
    if not S:
        return
    if state.trace is not None:
        state.trace.append((SubproblemKind.A, len(S), m))
    if state.hook is not None and state.hook.on_helper_a(S, m, state):
        return

    points = state.points
    if len(S) == 1:
        return
    if len(S) == 2:
        p, q = S
        if state.on_compare is not None:
            state.on_compare(p, q, m)
        if dominates_strict(points[p], points[q], m):
            state.raise_rank(q, p)
        return
    if m == 2:
        sweep_a(S, state)
        return

    values = [points[i][m - 1] for i in S]
    if min(values) == max(values):
        helper_a(S, m - 1, state)
        return

    low, mid, high = partition_by_value(S, m, median_value(values), points)
    helper_a(low, m, state)
    helper_b(low, mid, m - 1, state)
    helper_a(mid, m - 1, state)
    helper_b(sorted(low + mid), high, m - 1, state)
    helper_a(high, m, state)


def helper_b(L: list[int], H: list[int], m: int, state: WorkingState) -> None:
    if not L or not H:
        return
    if state.trace is not None:
        state.trace.append((SubproblemKind.B, len(L) + len(H), m))
    if state.hook is not None and state.hook.on_helper_b(L, H, m, state):
        return

    points = state.points
    if len(L) == 1 or len(H) == 1:
        for h in H:
            for l in L:
                if state.on_compare is not None:
                    state.on_compare(l, h, m)
                if dominates_weak(points[l], points[h], m):
                    state.raise_rank(h, l)
        return
    if m == 2:
        sweep_b(L, H, state)
        return

    k = m - 1
    left_values = [points[l][k] for l in L]
    right_values = [points[h][k] for h in H]
    if max(left_values) <= min(right_values):
        helper_b(L, H, m - 1, state)
        return

    pivot = median_value(left_values + right_values)
    l_low, l_mid, l_high = partition_by_value(L, m, pivot, points)
    h_low, h_mid, h_high = partition_by_value(H, m, pivot, points)
    helper_b(l_low, h_low, m, state)
    helper_b(l_low, h_mid, m - 1, state)
    helper_b(l_mid, h_mid, m - 1, state)
    helper_b(sorted(l_low + l_mid), h_high, m - 1, state)
    helper_b(l_high, h_high, m, state)


def run_dc(
    points: PointSet,
    hook: SubproblemHook | None = None,
    trace: list | None = None,
    on_compare: Callable[[int, int, int], None] | None = None,
) -> RankAssignment:
    """Sort ``points`` lexicographically and run ``helper_a`` over all objectives."""
    order = points.lex_order()
    ordered = [points.points[i] for i in order]
    state = WorkingState.fresh(ordered, hook=hook, trace=trace, on_compare=on_compare)
    helper_a(list(range(len(ordered))), points.n_objectives, state)

    unique_ranks = [0] * len(ordered)
    for position, index in enumerate(order):
        unique_ranks[index] = state.ranks[position]
    return points.expand(unique_ranks)


def sort_dc(points: PointSet) -> RankAssignment:
    return run_dc(points)
