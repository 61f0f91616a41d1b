"""
Benchmark harness.

Runs the sorting algorithms over a grid of generated datasets, normalizes the
timings by the divide-and-conquer average of each cell, and records the
divide-and-conquer subproblems of one dataset so both subproblem solvers can
be timed on them in isolation.
"""
import csv
import hashlib
import logging
import math
import time
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Sequence

import numpy as np

from ranking.bos import bos_helper_a, bos_helper_b
from ranking.core import ObjectiveVector, PointSet, RankAssignment
from ranking.dc import SubproblemHook, SubproblemKind, WorkingState, helper_a, helper_b, run_dc
from ranking.hybrid import SwitchPolicy, switch_interval
from ranking.sorters import ALGORITHMS, get_sorter

from .datagen import DatasetSpec, generate, write_dataset

logger = logging.getLogger(__name__)

TIMING_HEADER = ['N', 'M', 'L', 'trial', 'algo', 'time_ns', 'checksum']
SUMMARY_HEADER = ['N', 'M', 'L', 'algo', 'ratio_avg', 'ratio_min', 'ratio_max']
SUBPROBLEM_HEADER = ['n', 'm', 'kind', 't_dc_ns', 't_bos_ns', 'rel_gap']
BOUNDS_HEADER = ['m', 'n_lo', 'n_hi', 'n_min', 'n_max']

GRID_OBJECTIVES = (3, 5, 7, 10, 15, 20, 25, 30)
GRID_LEVELS = (1, 2, 3, 5, 10, 20)
SUBPROBLEM_SOLVERS = ('dc', 'bos')


class CorrectnessFailure(RuntimeError):
    def __init__(self, spec: DatasetSpec, checksums: dict[str, str]):
        self.spec = spec
        self.checksums = checksums
        details = ', '.join(f"{name}={value}" for name, value in checksums.items())
        super().__init__(f"Rank mismatch on dataset {spec}: {details}")


class MissingCellError(KeyError):
    pass


class SolverMismatchError(RuntimeError):
    pass


def grid_sizes(n_lo: int, n_hi: int) -> list[int]:
    """``floor(10 ** (n / 4))`` for every integer n in ``[n_lo, n_hi]``, computed exactly."""
    if not 1 <= n_lo <= n_hi:
        raise ValueError("Expected 1 <= n_lo <= n_hi.")
    return [math.isqrt(math.isqrt(10 ** n)) for n in range(n_lo, n_hi + 1)]


def derive_seed(base_seed: int, n_points: int, n_objectives: int, n_levels: int, trial: int) -> int:
    key = f"{base_seed}:{n_points}:{n_objectives}:{n_levels}:{trial}".encode('ascii')
    return int.from_bytes(hashlib.blake2b(key, digest_size=8).digest(), 'big')


@dataclass(frozen=True)
class TimingRow:
    n_points: int
    n_objectives: int
    n_levels: int
    trial: int
    algorithm: str
    time_ns: int
    checksum: str

    @property
    def cell(self) -> tuple[int, int, int]:
        return self.n_points, self.n_objectives, self.n_levels

    def as_csv_row(self) -> list:
        return [self.n_points, self.n_objectives, self.n_levels, self.trial,
                self.algorithm, self.time_ns, self.checksum]


@dataclass(frozen=True)
class RatioSummary:
    n_points: int
    n_objectives: int
    n_levels: int
    algorithm: str
    ratio_avg: float
    ratio_min: float
    ratio_max: float

    def as_csv_row(self) -> list:
        return [self.n_points, self.n_objectives, self.n_levels, self.algorithm,
                repr(self.ratio_avg), repr(self.ratio_min), repr(self.ratio_max)]


@dataclass
class GridConfig:
    sizes: Sequence[int]
    objectives: Sequence[int]
    levels: Sequence[int]
    trials: int = 10
    algorithms: Sequence[str] = ('bos', 'dc', 'hybrid')
    policy: SwitchPolicy = field(default_factory=SwitchPolicy)
    base_seed: int = 0
    persist_dir: Path | None = None

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("At least one trial per cell is required.")
        unknown = [name for name in self.algorithms if name not in ALGORITHMS]
        if unknown:
            raise ValueError(f"Unknown algorithms: {', '.join(unknown)}.")
        if not self.algorithms:
            raise ValueError("Select at least one algorithm.")


def time_call(sorter: Callable[[PointSet], RankAssignment], points: PointSet) -> tuple[RankAssignment, int]:
    start = time.perf_counter_ns()
    ranks = sorter(points)
    return ranks, time.perf_counter_ns() - start


def run_grid(config: GridConfig, on_row: Callable[[TimingRow], None] | None = None) -> list[TimingRow]:
    """
    Time every selected algorithm on every (N, M, L, trial) dataset.

    Each algorithm gets one untimed warm-up run per cell. The rows of a trial
    are only emitted once all algorithms agree on the rank checksum;
    disagreement raises ``CorrectnessFailure``.
    """
    sorters = {name: get_sorter(name, config.policy) for name in config.algorithms}
    rows = []
    for n_points in config.sizes:
        for n_objectives in config.objectives:
            for n_levels in config.levels:
                if n_levels > n_points:
                    logger.warning("Skipping N=%d M=%d L=%d: more levels than points",
                                   n_points, n_objectives, n_levels)
                    continue
                logger.info("Cell N=%d M=%d L=%d", n_points, n_objectives, n_levels)
                warmed_up = set()
                for trial in range(config.trials):
                    spec = DatasetSpec(
                        n_points, n_objectives, n_levels,
                        derive_seed(config.base_seed, n_points, n_objectives, n_levels, trial),
                    )
                    points = generate(spec)
                    if config.persist_dir is not None:
                        write_dataset(Path(config.persist_dir) / spec.file_name, spec, points)

                    trial_rows = []
                    for name, sorter in sorters.items():
                        if name not in warmed_up:
                            sorter(points)
                            warmed_up.add(name)
                        ranks, elapsed = time_call(sorter, points)
                        trial_rows.append(TimingRow(
                            n_points, n_objectives, n_levels, trial, name, elapsed, ranks.checksum(),
                        ))
                        logger.debug("%s %s: %d ns", spec, name, elapsed)

                    checksums = {row.algorithm: row.checksum for row in trial_rows}
                    if len(set(checksums.values())) > 1:
                        logger.error("Rank mismatch on dataset %s", spec)
                        raise CorrectnessFailure(spec, checksums)
                    rows.extend(trial_rows)
                    if on_row is not None:
                        for row in trial_rows:
                            on_row(row)
    return rows


def summarize_ratios(rows: Iterable[TimingRow]) -> list[RatioSummary]:
    """
    Per cell and algorithm, avg/min/max of ``time / avg(T_DC)`` over the trials.

    Raises ``MissingCellError`` for a cell without divide-and-conquer rows.
    """
    cells = defaultdict(lambda: defaultdict(list))
    for row in rows:
        cells[row.cell][row.algorithm].append(row.time_ns)

    summaries = []
    for cell in sorted(cells):
        times = cells[cell]
        if not times.get('dc'):
            raise MissingCellError(f"No divide-and-conquer timings for N={cell[0]} M={cell[1]} L={cell[2]}.")
        baseline = np.mean(times['dc'])
        for algorithm in sorted(times, key=_algorithm_order):
            ratios = np.asarray(times[algorithm], dtype=float) / baseline
            summaries.append(RatioSummary(
                *cell, algorithm, float(ratios.mean()), float(ratios.min()), float(ratios.max()),
            ))
    return summaries


def _algorithm_order(name: str) -> tuple[int, str]:
    return (ALGORITHMS.index(name) if name in ALGORITHMS else len(ALGORITHMS), name)


def write_timing_csv(rows: Iterable[TimingRow], path: str | Path) -> None:
    with Path(path).open('w', encoding='utf-8', newline='') as handle:
        writer = csv.writer(handle, lineterminator='\n')
        writer.writerow(TIMING_HEADER)
        writer.writerows(row.as_csv_row() for row in rows)


def read_timing_csv(path: str | Path) -> list[TimingRow]:
    with Path(path).open(encoding='utf-8', newline='') as handle:
        reader = csv.DictReader(handle)
        if reader.fieldnames != TIMING_HEADER:
            raise ValueError(f"Unexpected timing header: {reader.fieldnames}")
        return [
            TimingRow(int(record['N']), int(record['M']), int(record['L']), int(record['trial']),
                      record['algo'], int(record['time_ns']), record['checksum'])
            for record in reader
        ]


def write_summary_csv(summaries: Iterable[RatioSummary], path: str | Path) -> None:
    with Path(path).open('w', encoding='utf-8', newline='') as handle:
        writer = csv.writer(handle, lineterminator='\n')
        writer.writerow(SUMMARY_HEADER)
        writer.writerows(summary.as_csv_row() for summary in summaries)


@dataclass(frozen=True)
class SubproblemRecord:
    """
    A helper call captured during a divide-and-conquer run.

    ``indices`` refer to the lexicographically sorted unique points of the
    dataset. For kind B the first ``split`` indices are ``L``, the rest ``H``.
    ``lower_bounds`` are the ranks of ``indices`` when the call was made.
    """
    kind: SubproblemKind
    m: int
    indices: tuple[int, ...]
    split: int
    lower_bounds: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.indices)

    @property
    def targets(self) -> tuple[int, ...]:
        return self.indices if self.kind is SubproblemKind.A else self.indices[self.split:]

    def localize(self, points: Sequence[ObjectiveVector]):
        """
        Standalone copy of the subproblem.

        Returns ``(local_points, lower_bounds, first, second, targets)`` where
        indices are re-based onto ``local_points`` in lexicographic order;
        ``second`` is None for kind A.
        """
        union = sorted(self.indices)
        position = {index: local for local, index in enumerate(union)}
        local_points = [points[index] for index in union]
        bounds = [0] * len(union)
        for index, bound in zip(self.indices, self.lower_bounds):
            bounds[position[index]] = bound

        if self.kind is SubproblemKind.A:
            first = [position[index] for index in self.indices]
            return local_points, bounds, first, None, first
        first = [position[index] for index in self.indices[:self.split]]
        second = [position[index] for index in self.indices[self.split:]]
        return local_points, bounds, first, second, second


class RecordingHook(SubproblemHook):
    """Observes helper calls above the sweep base cases; never handles them."""

    def __init__(self):
        self.records = []
        self.state = None

    def on_helper_a(self, S, m, state):
        self.state = state
        if m >= 3 and len(S) >= 2:
            self.records.append(SubproblemRecord(
                SubproblemKind.A, m, tuple(S), len(S), tuple(state.ranks[i] for i in S),
            ))
        return False

    def on_helper_b(self, L, H, m, state):
        self.state = state
        if m >= 3:
            indices = (*L, *H)
            self.records.append(SubproblemRecord(
                SubproblemKind.B, m, indices, len(L), tuple(state.ranks[i] for i in indices),
            ))
        return False


@dataclass
class SubproblemRecording:
    points: list[ObjectiveVector]
    records: list[SubproblemRecord]
    ranks: RankAssignment
    # final ranks of `points`, in the same lexicographic order
    sorted_ranks: list[int]


def record_subproblems(points: PointSet) -> SubproblemRecording:
    hook = RecordingHook()
    ranks = run_dc(points, hook=hook)
    ordered = [points.points[i] for i in points.lex_order()]
    logger.info("Recorded %d subproblems on %d points", len(hook.records), len(ordered))
    sorted_ranks = list(hook.state.ranks) if hook.state is not None else [0] * len(ordered)
    return SubproblemRecording(points=ordered, records=hook.records, ranks=ranks, sorted_ranks=sorted_ranks)


@dataclass(frozen=True)
class SubproblemTiming:
    ranks: tuple[int, ...]
    time_ns: int


def _replay(solver: str, record: SubproblemRecord, local_points, ranks, first, second) -> None:
    if solver == 'dc':
        state = WorkingState(points=local_points, ranks=ranks)
        if record.kind is SubproblemKind.A:
            helper_a(list(first), record.m, state)
        else:
            helper_b(list(first), list(second), record.m, state)
    elif record.kind is SubproblemKind.A:
        bos_helper_a(local_points, first, record.m, ranks)
    else:
        bos_helper_b(local_points, first, second, record.m, ranks)


def time_subproblem(
    points: Sequence[ObjectiveVector],
    record: SubproblemRecord,
    solver: str,
    repeats: int = 5,
) -> SubproblemTiming:
    """Replay ``record`` with ``solver`` on fresh lower bounds; median wall time of ``repeats`` runs."""
    if solver not in SUBPROBLEM_SOLVERS:
        raise ValueError(f"Unknown subproblem solver '{solver}', expected one of {SUBPROBLEM_SOLVERS}.")
    local_points, bounds, first, second, targets = record.localize(points)
    times = []
    ranks = bounds
    for _ in range(max(1, repeats)):
        ranks = list(bounds)
        start = time.perf_counter_ns()
        _replay(solver, record, local_points, ranks, first, second)
        times.append(time.perf_counter_ns() - start)
    return SubproblemTiming(
        ranks=tuple(ranks[i] for i in targets),
        time_ns=int(np.median(times)),
    )


@dataclass(frozen=True)
class SubproblemTimingRow:
    n: int
    m: int
    kind: str
    t_dc_ns: int
    t_bos_ns: int
    rel_gap: float

    def as_csv_row(self) -> list:
        return [self.n, self.m, self.kind, self.t_dc_ns, self.t_bos_ns, repr(self.rel_gap)]


def relative_gap(t_dc: int, t_bos: int) -> float:
    """``(T_bos - T_dc) / max(T_dc, T_bos)``; negative when Best Order Sort is faster."""
    slowest = max(t_dc, t_bos)
    return 0.0 if slowest == 0 else (t_bos - t_dc) / slowest


def compare_subproblem(
    points: Sequence[ObjectiveVector],
    record: SubproblemRecord,
    repeats: int = 5,
) -> SubproblemTimingRow:
    dc, bos = (time_subproblem(points, record, solver, repeats) for solver in SUBPROBLEM_SOLVERS)
    if dc.ranks != bos.ranks:
        raise SolverMismatchError(
            f"Solvers disagree on a kind-{record.kind.value} subproblem of {record.size} points, m={record.m}."
        )
    return SubproblemTimingRow(
        record.size, record.m, record.kind.value, dc.time_ns, bos.time_ns,
        relative_gap(dc.time_ns, bos.time_ns),
    )


def time_recorded_subproblems(recording: SubproblemRecording, repeats: int = 5) -> list[SubproblemTimingRow]:
    rows = [compare_subproblem(recording.points, record, repeats) for record in recording.records]
    logger.info("Timed %d subproblems with %d repeats each", len(rows), repeats)
    return rows


def write_subproblem_csv(rows: Iterable[SubproblemTimingRow], path: str | Path) -> None:
    with Path(path).open('w', encoding='utf-8', newline='') as handle:
        writer = csv.writer(handle, lineterminator='\n')
        writer.writerow(SUBPROBLEM_HEADER)
        writer.writerows(row.as_csv_row() for row in rows)


def bos_favoured_band(rows: Iterable[SubproblemTimingRow]) -> tuple[int, int] | None:
    """Smallest and largest subproblem size whose median gap favours Best Order Sort."""
    gaps = defaultdict(list)
    for row in rows:
        gaps[row.n].append(row.rel_gap)
    favoured = [n for n, values in gaps.items() if np.median(values) < 0]
    if not favoured:
        return None
    return min(favoured), max(favoured)


def bos_favoured_bounds(rows: Iterable[SubproblemTimingRow]) -> dict[int, tuple[int, int]]:
    """Per objective count, the smallest and largest size whose median gap favours Best Order Sort."""
    gaps = defaultdict(list)
    for row in rows:
        gaps[row.m, row.n].append(row.rel_gap)
    bounds = {}
    for (m, n), values in sorted(gaps.items()):
        if np.median(values) < 0:
            lo, hi = bounds.get(m, (n, n))
            bounds[m] = min(lo, n), max(hi, n)
    return bounds


@dataclass(frozen=True)
class SwitchBoundRow:
    m: int
    n_lo: int | None
    n_hi: int | None
    n_min: float
    n_max: float

    def as_csv_row(self) -> list:
        observed = ['', ''] if self.n_lo is None else [self.n_lo, self.n_hi]
        return [self.m, *observed, repr(self.n_min), repr(self.n_max)]


def compare_switch_bounds(
    rows: Iterable[SubproblemTimingRow],
    policy: SwitchPolicy,
    n_objectives: int,
) -> list[SwitchBoundRow]:
    """Observed Best Order Sort bounds next to the policy's switch interval, for every recorded m."""
    rows = list(rows)
    bounds = bos_favoured_bounds(rows)
    result = []
    for m in sorted({row.m for row in rows}):
        n_lo, n_hi = bounds.get(m, (None, None))
        n_min, n_max = switch_interval(m, policy, n_objectives)
        result.append(SwitchBoundRow(m, n_lo, n_hi, n_min, n_max))
    return result


def write_bounds_csv(rows: Iterable[SwitchBoundRow], path: str | Path) -> None:
    with Path(path).open('w', encoding='utf-8', newline='') as handle:
        writer = csv.writer(handle, lineterminator='\n')
        writer.writerow(BOUNDS_HEADER)
        writer.writerows(row.as_csv_row() for row in rows)
