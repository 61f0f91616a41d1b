"""
Domain types and dominance predicates shared by every sorting algorithm.

All objectives are minimized. Points are plain tuples of floats so that the
hot loops of the algorithms compare native Python numbers.
"""
import hashlib
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

ObjectiveVector = tuple[float, ...]

MIN_OBJECTIVES = 2


class PointSetError(ValueError):
    """Base class for invalid point set input."""


class DimensionMismatchError(PointSetError):
    pass


class InvalidValueError(PointSetError):
    pass


class EmptyPointSetError(PointSetError):
    pass


def dominates_strict(a: Sequence[float], b: Sequence[float], m: int) -> bool:
    """Return True if ``a`` strictly dominates ``b`` on the first ``m`` objectives."""
    strict = False
    for i in range(m):
        if a[i] > b[i]:
            return False
        if a[i] < b[i]:
            strict = True
    return strict


def dominates_weak(a: Sequence[float], b: Sequence[float], m: int) -> bool:
    """Return True if ``a`` is no worse than ``b`` on the first ``m`` objectives."""
    for i in range(m):
        if a[i] > b[i]:
            return False
    return True


def lex_compare(a: Sequence[float], b: Sequence[float]) -> int:
    """Three-way lexicographic comparison, first objective most significant."""
    for x, y in zip(a, b):
        if x < y:
            return -1
        if x > y:
            return 1
    return 0


@dataclass(frozen=True)
class RankAssignment:
    """One non-negative rank per original input point."""
    ranks: tuple[int, ...]

    def __len__(self):
        return len(self.ranks)

    def __iter__(self):
        return iter(self.ranks)

    def __getitem__(self, index):
        return self.ranks[index]

    def checksum(self) -> str:
        """Stable digest of the rank sequence, used to cross-check algorithms."""
        digest = hashlib.blake2b(digest_size=8)
        digest.update(','.join(map(str, self.ranks)).encode('ascii'))
        return digest.hexdigest()


@dataclass(frozen=True)
class PointSet:
    """
    Distinct points plus the map from original input indices to them.

    ``points`` keeps first-occurrence order; ``group_of[i]`` is the index in
    ``points`` of the representative of original point ``i``.
    """
    points: tuple[ObjectiveVector, ...]
    group_of: tuple[int, ...]

    def __len__(self):
        return len(self.points)

    @property
    def n_objectives(self) -> int:
        return len(self.points[0])

    @property
    def n_original(self) -> int:
        return len(self.group_of)

    def lex_order(self) -> list[int]:
        """Indices of the unique points in lexicographic order."""
        return sorted(range(len(self.points)), key=self.points.__getitem__)

    def expand(self, unique_ranks: Sequence[int]) -> RankAssignment:
        """Broadcast ranks of unique points back to every original index."""
        return RankAssignment(tuple(unique_ranks[g] for g in self.group_of))

    def original_points(self) -> list[ObjectiveVector]:
        return [self.points[g] for g in self.group_of]


def build_point_set(raw: Iterable[Sequence[float]]) -> PointSet:
    """
    Validate raw objective vectors and group componentwise-equal ones.

    Raises ``DimensionMismatchError`` on ragged input and
    ``InvalidValueError`` on NaN, infinities or fewer than two objectives.
    """
    points = []
    group_of = []
    seen = {}
    dimension = None
    for index, row in enumerate(raw):
        vector = tuple(float(value) for value in row)
        if dimension is None:
            dimension = len(vector)
            if dimension < MIN_OBJECTIVES:
                raise InvalidValueError(
                    f"At least {MIN_OBJECTIVES} objectives are required, got {dimension}."
                )
        elif len(vector) != dimension:
            raise DimensionMismatchError(
                f"Point {index} has {len(vector)} objectives, expected {dimension}."
            )
        if not all(math.isfinite(value) for value in vector):
            raise InvalidValueError(f"Point {index} has a non-finite objective value.")

        representative = seen.get(vector)
        if representative is None:
            representative = len(points)
            seen[vector] = representative
            points.append(vector)
        group_of.append(representative)

    if not points:
        raise EmptyPointSetError("Cannot rank an empty set of points.")
    return PointSet(points=tuple(points), group_of=tuple(group_of))
