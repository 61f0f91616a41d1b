from functools import partial
from typing import Callable

from .bos import sort_bos
from .core import PointSet, RankAssignment
from .dc import sort_dc
from .hybrid import SwitchPolicy, sort_hybrid
from .oracle import sort_naive

Sorter = Callable[[PointSet], RankAssignment]

ALGORITHMS = ('naive', 'bos', 'dc', 'hybrid')

ALGORITHM_CHOICES = [
    ('naive', 'Naive (definition)'),
    ('bos', 'Best Order Sort'),
    ('dc', 'Divide-and-conquer'),
    ('hybrid', 'Hybrid'),
]


def get_sorter(name: str, policy: SwitchPolicy | None = None) -> Sorter:
    """Look up a sorting algorithm by name; ``policy`` only applies to the hybrid."""
    if name == 'naive':
        return sort_naive
    if name == 'bos':
        return sort_bos
    if name == 'dc':
        return sort_dc
    if name == 'hybrid':
        return partial(sort_hybrid, policy=policy or SwitchPolicy())
    raise KeyError(f"Unknown algorithm '{name}'. Choose from: {', '.join(ALGORITHMS)}.")
