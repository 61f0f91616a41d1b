"""
Seeded benchmark datasets.

- ``n_levels == 0``: points uniform in the unit hypercube.
- ``n_levels == 1``: points uniform on the simplex ``sum(x) == 1``, all mutually
  non-dominated.
- ``n_levels == L >= 2``: L stacked simplex sheets. Sheet k holds points on
  ``sum(x) == 1 + k * LEVEL_SPACING``; each of its points is a point of sheet
  k - 1 plus a strictly positive offset, so it has a dominator of rank k - 1,
  while nothing on sheets >= k can dominate it. The result has exactly L levels.

Every dataset is a pure function of its spec: numpy's PCG64 generator seeded
with ``spec.seed``.
"""
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ranking.core import MIN_OBJECTIVES, PointSet, build_point_set

GENERATOR_NAME = 'numpy.PCG64'
LEVEL_SPACING = 1.0
MAX_SEED = 2 ** 64


class InfeasibleSpecError(ValueError):
    pass


class DatasetFormatError(ValueError):
    pass


@dataclass(frozen=True)
class DatasetSpec:
    n_points: int
    n_objectives: int
    n_levels: int = 0
    seed: int = 0

    def __post_init__(self):
        if self.n_points < 1:
            raise InfeasibleSpecError("A dataset needs at least one point.")
        if self.n_objectives < MIN_OBJECTIVES:
            raise InfeasibleSpecError(f"A dataset needs at least {MIN_OBJECTIVES} objectives.")
        if self.n_levels < 0:
            raise InfeasibleSpecError("The number of levels cannot be negative.")
        if self.n_points < self.n_levels:
            raise InfeasibleSpecError(
                f"Cannot build {self.n_levels} levels from {self.n_points} points."
            )
        if not 0 <= self.seed < MAX_SEED:
            raise InfeasibleSpecError("Seed must be a 64-bit unsigned integer.")

    def __str__(self):
        return f"N={self.n_points} M={self.n_objectives} L={self.n_levels} seed={self.seed}"

    @property
    def file_name(self) -> str:
        return f"N{self.n_points}_M{self.n_objectives}_L{self.n_levels}_{self.seed}.txt"


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _simplex(rng: np.random.Generator, count: int, n_objectives: int) -> np.ndarray:
    """Uniform samples on ``sum(x) == 1, x >= 0`` via normalized exponentials."""
    samples = rng.standard_exponential((count, n_objectives))
    return samples / samples.sum(axis=1, keepdims=True)


def _redraw_duplicates(values: np.ndarray, draw) -> np.ndarray:
    while True:
        _, first = np.unique(values, axis=0, return_index=True)
        if len(first) == len(values):
            return values
        duplicates = np.setdiff1d(np.arange(len(values)), first)
        values[duplicates] = draw(len(duplicates))


def _to_point_set(values: np.ndarray) -> PointSet:
    return build_point_set(values.tolist())


def generate_uniform(spec: DatasetSpec) -> PointSet:
    if spec.n_levels != 0:
        raise InfeasibleSpecError("Uniform datasets do not prescribe a number of levels.")
    rng = _rng(spec.seed)
    values = rng.random((spec.n_points, spec.n_objectives))
    values = _redraw_duplicates(values, lambda count: rng.random((count, spec.n_objectives)))
    return _to_point_set(values)


def generate_hyperplane(spec: DatasetSpec) -> PointSet:
    if spec.n_levels != 1:
        raise InfeasibleSpecError("Hyperplane datasets have exactly one level.")
    rng = _rng(spec.seed)
    values = _simplex(rng, spec.n_points, spec.n_objectives)
    values = _redraw_duplicates(values, lambda count: _simplex(rng, count, spec.n_objectives))
    return _to_point_set(values)


def generate_leveled(spec: DatasetSpec) -> PointSet:
    if spec.n_levels == 1:
        return generate_hyperplane(spec)
    if spec.n_levels < 2:
        raise InfeasibleSpecError("Leveled datasets need at least two levels.")

    rng = _rng(spec.seed)
    n_levels = spec.n_levels
    # sheet k never holds more points than sheet k - 1
    counts = [spec.n_points // n_levels + (1 if k < spec.n_points % n_levels else 0) for k in range(n_levels)]
    while True:
        sheets = [_simplex(rng, counts[0], spec.n_objectives)]
        for count in counts[1:]:
            offsets = LEVEL_SPACING * _simplex(rng, count, spec.n_objectives)
            sheets.append(sheets[-1][:count] + offsets)
        values = np.vstack(sheets)
        if len(np.unique(values, axis=0)) == len(values):
            return _to_point_set(values)


def generate(spec: DatasetSpec) -> PointSet:
    if spec.n_levels == 0:
        return generate_uniform(spec)
    if spec.n_levels == 1:
        return generate_hyperplane(spec)
    return generate_leveled(spec)


def write_dataset(path: str | Path, spec: DatasetSpec, points: PointSet) -> Path:
    """
    Write ``N M L seed`` followed by one line of 17-significant-digit values per point.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    rows = points.original_points()
    with path.open('w', encoding='utf-8', newline='\n') as handle:
        handle.write(f"{len(rows)} {spec.n_objectives} {spec.n_levels} {spec.seed} # generator={GENERATOR_NAME}\n")
        for row in rows:
            handle.write(' '.join(f"{value:.17g}" for value in row))
            handle.write('\n')
    return path


def read_dataset(path: str | Path) -> tuple[DatasetSpec, PointSet]:
    path = Path(path)
    try:
        lines = path.read_text(encoding='utf-8').splitlines()
    except OSError as exc:
        raise DatasetFormatError(f"Cannot read dataset {path}: {exc}") from exc

    lines = [line.split('#', 1)[0].strip() for line in lines]
    lines = [line for line in lines if line]
    if not lines:
        raise DatasetFormatError(f"Dataset {path} is empty.")

    try:
        n_points, n_objectives, n_levels, seed = (int(token) for token in lines[0].split())
        rows = [[float(token) for token in line.split()] for line in lines[1:]]
    except ValueError as exc:
        raise DatasetFormatError(f"Malformed dataset {path}: {exc}") from exc

    if len(rows) != n_points:
        raise DatasetFormatError(f"Dataset {path} declares {n_points} points but holds {len(rows)}.")
    if any(len(row) != n_objectives for row in rows):
        raise DatasetFormatError(f"Dataset {path} has rows without exactly {n_objectives} values.")
    try:
        spec = DatasetSpec(n_points, n_objectives, n_levels, seed)
        return spec, build_point_set(rows)
    except ValueError as exc:
        raise DatasetFormatError(f"Invalid dataset {path}: {exc}") from exc
