import numpy as np
from django.test import SimpleTestCase

from ranking.core import RankAssignment, build_point_set
from ranking.oracle import count_levels, sort_naive, update_naive, verify_ranks

from .helpers import random_point_set


class SortNaiveTests(SimpleTestCase):
    def test_single_point(self):
        self.assertEqual(sort_naive(build_point_set([(0, 0)])).ranks, (0,))

    def test_chain(self):
        self.assertEqual(sort_naive(build_point_set([(0, 0), (1, 1), (2, 2)])).ranks, (0, 1, 2))

    def test_antichain(self):
        self.assertEqual(sort_naive(build_point_set([(0, 2), (1, 1), (2, 0)])).ranks, (0, 0, 0))

    def test_equal_points_share_rank(self):
        self.assertEqual(sort_naive(build_point_set([(1, 1), (1, 1), (2, 2)])).ranks, (0, 0, 1))

    def test_rank_is_one_plus_max_dominator(self):
        # (3, 3) is dominated by (1, 1) [rank 0] and (2, 2.5) [rank 1]
        ranks = sort_naive(build_point_set([(3, 3), (1, 1), (2, 2.5), (0, 4)]))
        self.assertEqual(ranks.ranks, (2, 0, 1, 0))

    def test_random_outputs_satisfy_definition(self):
        for seed in range(20):
            point_set = random_point_set(seed, 60, 3, alphabet=4)
            self.assertEqual(verify_ranks(point_set, sort_naive(point_set)), [])

    def test_invariant_under_permutation(self):
        rng = np.random.default_rng(7)
        raw = rng.random((80, 4)).tolist()
        ranks = sort_naive(build_point_set(raw)).ranks
        permutation = rng.permutation(len(raw))
        permuted = sort_naive(build_point_set([raw[i] for i in permutation])).ranks
        self.assertEqual(list(permuted), [ranks[i] for i in permutation])

    def test_levels_are_downward_closed(self):
        ranks = sort_naive(random_point_set(3, 200, 2))
        self.assertEqual(set(ranks), set(range(count_levels(ranks))))


class CountLevelsTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(count_levels([0, 0, 0]), 1)
        self.assertEqual(count_levels([0, 1, 2]), 3)
        self.assertEqual(count_levels([0, 1, 1, 0]), 2)

    def test_empty(self):
        self.assertEqual(count_levels([]), 0)


class UpdateNaiveTests(SimpleTestCase):
    def test_raises_dominated_targets_only(self):
        points = [(0, 0, 0), (1, 1, 1), (2, 0, 5)]
        ranks = [3, 0, 0]
        update_naive(points, [0], [1, 2], 3, ranks)
        self.assertEqual(ranks, [3, 4, 4])

    def test_keeps_higher_lower_bound(self):
        points = [(0, 0), (1, 1)]
        ranks = [0, 7]
        update_naive(points, [0], [1], 2, ranks)
        self.assertEqual(ranks, [0, 7])


class VerifyRanksTests(SimpleTestCase):
    def test_detects_wrong_ranks(self):
        point_set = build_point_set([(0, 0), (1, 1)])
        self.assertTrue(verify_ranks(point_set, RankAssignment((0, 0))))
        self.assertTrue(verify_ranks(point_set, RankAssignment((0, 2))))
