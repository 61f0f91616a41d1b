import numpy as np

from ranking.core import build_point_set


def random_raw(rng, n_points, n_objectives, alphabet=None):
    """Random rows, continuous in [0, 1) or drawn from ``range(alphabet)``."""
    if alphabet is None:
        return rng.random((n_points, n_objectives)).tolist()
    return rng.integers(0, alphabet, size=(n_points, n_objectives)).astype(float).tolist()


def random_point_set(seed, n_points, n_objectives, alphabet=None):
    return build_point_set(random_raw(np.random.default_rng(seed), n_points, n_objectives, alphabet))


def two_sets(seed, n_left, n_right, n_objectives):
    """
    Lexicographically sorted union of two random sets.

    Returns ``(points, L, H)`` with ``L`` and ``H`` as increasing index lists.
    """
    rng = np.random.default_rng(seed)
    tagged = [(tuple(row), 'L') for row in random_raw(rng, n_left, n_objectives)]
    tagged += [(tuple(row), 'H') for row in random_raw(rng, n_right, n_objectives)]
    tagged.sort()
    points = [point for point, _ in tagged]
    L = [i for i, (_, side) in enumerate(tagged) if side == 'L']
    H = [i for i, (_, side) in enumerate(tagged) if side == 'H']
    return points, L, H
