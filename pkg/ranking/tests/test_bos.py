import numpy as np
from django.test import SimpleTestCase
from hypothesis import given, settings

from ranking.bos import BosCounters, bos_helper_a, bos_helper_b, find_rank, objective_sorted_lists, sort_bos
from ranking.core import build_point_set
from ranking.oracle import sort_naive, update_naive

from .helpers import random_point_set, random_raw, two_sets
from .strategies import raw_points


class SortBosTests(SimpleTestCase):
    def test_chain(self):
        self.assertEqual(sort_bos(build_point_set([(2, 2), (0, 0), (1, 1)])).ranks, (2, 0, 1))

    def test_antichain(self):
        self.assertEqual(sort_bos(build_point_set([(0, 2, 1), (1, 1, 1), (2, 0, 1)])).ranks, (0, 0, 0))

    def test_duplicates(self):
        self.assertEqual(sort_bos(build_point_set([(1, 1), (0, 0), (1, 1)])).ranks, (1, 0, 1))

    def test_random_sets_match_oracle(self):
        for seed in range(10):
            point_set = random_point_set(seed, 50, 4)
            self.assertEqual(sort_bos(point_set), sort_naive(point_set))

    def test_every_point_is_ranked_once(self):
        for seed, n_objectives in enumerate([2, 3, 5, 8]):
            point_set = random_point_set(seed, 120, n_objectives, alphabet=5)
            counters = BosCounters()
            sort_bos(point_set, counters=counters)
            self.assertEqual(counters.new_points, len(point_set))

    @settings(max_examples=150, deadline=None)
    @given(raw_points())
    def test_matches_oracle(self, raw):
        point_set = build_point_set(raw)
        self.assertEqual(sort_bos(point_set), sort_naive(point_set))


class ObjectiveSortedListsTests(SimpleTestCase):
    def test_ties_broken_by_index(self):
        points = [(0, 1), (1, 1), (2, 0)]
        self.assertEqual(objective_sorted_lists(points, [0, 1, 2], 2), [[0, 1, 2], [2, 0, 1]])


class FindRankTests(SimpleTestCase):
    def setUp(self):
        self.points = [(1, 1, 1), (2, 2, 2), (9, 0, 0), (5, 5, 5)]
        self.consider = {i: [0, 1, 2] for i in range(len(self.points))}

    def test_stops_at_first_list_without_dominator(self):
        rank_lists = [[0], [1], [2]]
        self.assertEqual(find_rank(self.points[3], 0, rank_lists, self.consider, self.points), 2)

    def test_no_lists_yet(self):
        self.assertEqual(find_rank(self.points[3], 0, [], self.consider, self.points), 0)

    def test_starts_at_lower_bound(self):
        rank_lists = [[2], [2], [0], [2]]
        self.assertEqual(find_rank(self.points[3], 2, rank_lists, self.consider, self.points), 3)

    def test_lower_bound_past_lists(self):
        self.assertEqual(find_rank(self.points[3], 4, [[0]], self.consider, self.points), 4)

    def test_compares_on_consider_set_only(self):
        consider = dict(self.consider)
        consider[2] = [1, 2]
        self.assertEqual(find_rank(self.points[3], 0, [[2]], consider, self.points), 1)


class BosHelperATests(SimpleTestCase):
    def test_single_point_keeps_lower_bound(self):
        ranks = [3]
        bos_helper_a([(4, 4, 4)], [0], 3, ranks)
        self.assertEqual(ranks, [3])

    def test_chain_from_zero(self):
        ranks = [0, 0]
        bos_helper_a([(0, 0, 0), (1, 1, 1)], [0, 1], 3, ranks)
        self.assertEqual(ranks, [0, 1])

    def test_incomparable_points_keep_bounds(self):
        ranks = [2, 0]
        bos_helper_a([(0, 1, 0), (1, 0, 1)], [0, 1], 3, ranks)
        self.assertEqual(ranks, [2, 0])

    def test_zero_bounds_on_all_objectives_is_a_full_sort(self):
        point_set = random_point_set(11, 80, 4)
        order = point_set.lex_order()
        ordered = [point_set.points[i] for i in order]
        ranks = [0] * len(ordered)
        bos_helper_a(ordered, list(range(len(ordered))), 4, ranks)
        expected = sort_naive(point_set)
        self.assertEqual(ranks, [expected[i] for i in order])

    def test_only_subset_is_touched(self):
        points = [(0, 0, 0), (1, 1, 1), (2, 2, 2)]
        ranks = [5, 0, 0]
        bos_helper_a(points, [1, 2], 3, ranks)
        self.assertEqual(ranks, [5, 0, 1])


class BosHelperBTests(SimpleTestCase):
    def test_dominated_target(self):
        ranks = [0, 0]
        bos_helper_b([(1, 1, 1), (2, 2, 2)], [0], [1], 3, ranks)
        self.assertEqual(ranks, [0, 1])

    def test_target_ahead_of_sources(self):
        ranks = [0, 4]
        bos_helper_b([(0, 0, 0), (1, 1, 1)], [1], [0], 3, ranks)
        self.assertEqual(ranks, [0, 4])

    def test_empty_sides_are_no_ops(self):
        ranks = [1, 2]
        bos_helper_b([(0, 0), (1, 1)], [], [1], 2, ranks)
        bos_helper_b([(0, 0), (1, 1)], [0], [], 2, ranks)
        self.assertEqual(ranks, [1, 2])

    def test_random_sets_match_brute_force(self):
        for seed in range(10):
            points, L, H = two_sets(seed, 20, 20, 4)
            ranks = [0] * len(points)
            left = build_point_set([points[l] for l in L])
            for l, rank in zip(L, sort_naive(left)):
                ranks[l] = rank
            expected = list(ranks)
            update_naive(points, L, H, 4, expected)

            bos_helper_b(points, L, H, 4, ranks)
            self.assertEqual(ranks, expected)
            self.assertEqual([ranks[l] for l in L], [expected[l] for l in L])

    def test_gapped_source_ranks(self):
        ranks = [4, 0]
        bos_helper_b([(1, 1, 1), (2, 2, 2)], [0], [1], 3, ranks)
        self.assertEqual(ranks, [4, 5])

    def test_gap_below_dominator_among_other_sources(self):
        points = [(0, 0, 5), (1, 1, 1), (2, 2, 2)]
        ranks = [0, 3, 0]
        bos_helper_b(points, [0, 1], [2], 3, ranks)
        self.assertEqual(ranks, [0, 3, 4])

    def test_arbitrary_source_ranks_match_brute_force(self):
        rng = np.random.default_rng(11)
        for seed in range(20):
            points, L, H = two_sets(seed, 15, 15, 3)
            ranks = [0] * len(points)
            for l in L:
                ranks[l] = int(rng.integers(0, 8))
            for h in H:
                ranks[h] = int(rng.integers(0, 3))
            expected = list(ranks)
            update_naive(points, L, H, 3, expected)

            bos_helper_b(points, L, H, 3, ranks)
            self.assertEqual(ranks, expected)

    def test_stops_once_targets_are_ranked(self):
        rng = np.random.default_rng(5)
        points = sorted(map(tuple, rng.random((30, 3)).tolist()))
        counters = BosCounters()
        bos_helper_b(points, list(range(1, 30)), [0], 3, [0] * 30, counters=counters)
        # the lexicographically smallest point is first in the first objective list
        self.assertEqual(counters.new_points, 1)


class ScanOrderRecorder(BosCounters):
    def __init__(self):
        super().__init__()
        self.events = []

    def on_objective_removed(self, index, objective):
        self.events.append(('removed', index, objective))

    def on_new_point(self, index):
        self.events.append(('new', index, None))


class ScanOrderTests(SimpleTestCase):
    def assertRemovedObjectivesStayBehind(self, points, events):
        removed = []
        for event, index, objective in events:
            if event == 'removed':
                removed.append((index, objective))
                continue
            for earlier, j in removed:
                self.assertGreaterEqual(points[index][j], points[earlier][j], (index, earlier, j))

    def test_removed_objective_bounds_later_points(self):
        for seed, alphabet in enumerate([None, None, 3, 2, 4]):
            rng = np.random.default_rng(seed)
            n_objectives = 3 + seed % 3
            points = sorted(map(tuple, random_raw(rng, 60, n_objectives, alphabet)))
            recorder = ScanOrderRecorder()
            bos_helper_a(points, range(len(points)), n_objectives, [0] * len(points), counters=recorder)
            self.assertRemovedObjectivesStayBehind(points, recorder.events)
            self.assertEqual(recorder.new_points, len(points))

    def test_two_set_scan_keeps_the_order(self):
        for seed in range(5):
            points, L, H = two_sets(seed, 25, 25, 4)
            recorder = ScanOrderRecorder()
            bos_helper_b(points, L, H, 4, [0] * len(points), counters=recorder)
            self.assertRemovedObjectivesStayBehind(points, recorder.events)

    @settings(max_examples=100, deadline=None)
    @given(raw_points())
    def test_removed_objective_bounds_later_points_on_drawn_sets(self, raw):
        points = sorted(map(tuple, raw))
        recorder = ScanOrderRecorder()
        bos_helper_a(points, range(len(points)), len(points[0]), [0] * len(points), counters=recorder)
        self.assertRemovedObjectivesStayBehind(points, recorder.events)

    def test_counters_on_a_chain(self):
        counters = BosCounters()
        sort_bos(build_point_set([(0, 0), (1, 1), (2, 2)]), counters=counters)
        self.assertEqual(counters.new_points, 3)
        self.assertEqual(counters.scanned_positions, 5)
        self.assertEqual(counters.dominance_checks, 3)
