"""
Machine-dependent timing checks; enable with NDS_RUN_SLOW_TESTS=True.
"""
import logging
import time
from unittest import skipUnless

import numpy as np
from django.conf import settings
from django.test import SimpleTestCase

from benchmarks.datagen import DatasetSpec, generate
from benchmarks.harness import (
    GRID_LEVELS,
    bos_favoured_band,
    grid_sizes,
    record_subproblems,
    time_recorded_subproblems,
)
from ranking.hybrid import DInterpretation, SwitchPolicy
from ranking.oracle import count_levels, sort_naive
from ranking.sorters import get_sorter

logger = logging.getLogger(__name__)

SLOW = skipUnless(settings.NDS_RUN_SLOW_TESTS, 'Set NDS_RUN_SLOW_TESTS=True to run timing tests.')


def median_time(sorter, points, trials=5):
    times = []
    for _ in range(trials):
        start = time.perf_counter_ns()
        sorter(points)
        times.append(time.perf_counter_ns() - start)
    return float(np.median(times))


@SLOW
class GeneratorGridTests(SimpleTestCase):
    def test_levels_on_desk_grid(self):
        cap = settings.NDS_BENCHMARK['DESK_MAX_OBJECTIVES']
        for n_points in grid_sizes(8, 14):
            for n_objectives in (3, 5, 7, 10, 15):
                if n_objectives > cap:
                    continue
                for n_levels in GRID_LEVELS:
                    spec = DatasetSpec(n_points, n_objectives, n_levels, seed=n_points * n_objectives + n_levels)
                    self.assertEqual(count_levels(sort_naive(generate(spec))), n_levels, str(spec))


@SLOW
class GrowthTests(SimpleTestCase):
    def test_dc_grows_subquadratically(self):
        sorter = get_sorter('dc')
        for n_points in (10 ** 4, 2 * 10 ** 4, 4 * 10 ** 4):
            small = median_time(sorter, generate(DatasetSpec(n_points, 3, 0, 1)))
            large = median_time(sorter, generate(DatasetSpec(2 * n_points, 3, 0, 1)))
            self.assertLess(large / small, 3, f"N={n_points}")

    def test_naive_grows_quadratically(self):
        sorter = get_sorter('naive')
        for n_points in (2000, 4000):
            small = median_time(sorter, generate(DatasetSpec(n_points, 3, 0, 1)))
            large = median_time(sorter, generate(DatasetSpec(2 * n_points, 3, 0, 1)))
            self.assertGreater(large / small, 3, f"N={n_points}")


@SLOW
class HybridSpeedupTests(SimpleTestCase):
    def test_hybrid_beats_both_components(self):
        for n_objectives in (5, 7, 10):
            points = generate(DatasetSpec(10 ** 5, n_objectives, 1, 2017))
            hybrid = median_time(get_sorter('hybrid', SwitchPolicy()), points)
            bos = median_time(get_sorter('bos'), points)
            dc = median_time(get_sorter('dc'), points)
            logger.info("M=%d hybrid=%.0f bos=%.0f dc=%.0f", n_objectives, hybrid, bos, dc)
            self.assertLessEqual(hybrid, 0.9 * min(bos, dc), f"M={n_objectives}")

    def test_three_objectives_report(self):
        points = generate(DatasetSpec(10 ** 5, 3, 1, 2017))
        dc = median_time(get_sorter('dc'), points)
        bos = median_time(get_sorter('bos'), points)
        for interpretation in DInterpretation:
            # with M = 3 both readings give d = 3
            policy = SwitchPolicy(d_interpretation=interpretation)
            hybrid = median_time(get_sorter('hybrid', policy), points)
            logger.warning("M=3 d=%s: speedup over BOS %.2f, over DC %.2f",
                           interpretation.value, bos / hybrid, dc / hybrid)


@SLOW
class SubproblemBandTests(SimpleTestCase):
    def test_bos_favoured_band_is_interior(self):
        points = generate(DatasetSpec(10 ** 4, 10, 1, 2017))
        rows = time_recorded_subproblems(record_subproblems(points), repeats=5)
        band = bos_favoured_band(rows)
        if band is None:
            logger.warning("Best Order Sort was not faster on any recorded subproblem size")
            return
        logger.info("Best Order Sort favoured for sizes %d..%d", *band)
        self.assertGreater(band[0], 10)
        self.assertLess(band[1], len(points))
