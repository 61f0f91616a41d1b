"""
Divide-and-conquer with Best Order Sort on mid-sized subproblems.

A subproblem of ``n`` points restricted to the first ``m`` objectives goes to
the adapted Best Order Sort when ``n_min <= n <= n_max`` with

    n_min = c_left * m * ln(m + 1)
    n_max = max(0, c_right * m * (ln(d + 1) ** exponent - offset))

where ``d`` is either ``m`` or the objective count of the whole input.
"""
import math
from dataclasses import dataclass
from enum import Enum

from .bos import bos_helper_a, bos_helper_b
from .core import PointSet, RankAssignment
from .dc import SubproblemHook, WorkingState, run_dc


class DInterpretation(str, Enum):
    SUBPROBLEM = 'm'
    ORIGINAL = 'M'


@dataclass(frozen=True)
class SwitchPolicy:
    c_left: float = 1.0
    c_right: float = 150.0
    exponent: float = 0.9
    offset: float = 1.5
    d_interpretation: DInterpretation = DInterpretation.SUBPROBLEM
    enabled: bool = True

    def __post_init__(self):
        for name in ('c_left', 'c_right', 'exponent', 'offset'):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite.")
        if not 0 < self.exponent <= 2:
            raise ValueError("exponent must lie in (0, 2].")
        object.__setattr__(self, 'd_interpretation', DInterpretation(self.d_interpretation))

    @classmethod
    def from_settings(cls, **overrides) -> 'SwitchPolicy':
        """Policy from ``settings.NDS_SWITCH_POLICY``, with keyword overrides."""
        from django.conf import settings

        configured = settings.NDS_SWITCH_POLICY
        values = {
            'c_left': configured['C_LEFT'],
            'c_right': configured['C_RIGHT'],
            'exponent': configured['EXPONENT'],
            'offset': configured['OFFSET'],
            'd_interpretation': configured['D_MODE'],
            'enabled': configured['ENABLED'],
        }
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)


def switch_interval(m: int, policy: SwitchPolicy, n_objectives: int) -> tuple[float, float]:
    """``(n_min, n_max)`` for a subproblem on ``m`` objectives; empty when disabled."""
    if not policy.enabled:
        return math.inf, 0.0
    d = m if policy.d_interpretation is DInterpretation.SUBPROBLEM else n_objectives
    n_min = max(0.0, policy.c_left * m * math.log(m + 1))
    n_max = max(0.0, policy.c_right * m * (math.log(d + 1) ** policy.exponent - policy.offset))
    return n_min, n_max


def should_switch(
    n: int,
    m: int,
    policy: SwitchPolicy,
    n_objectives: int,
    interval: tuple[float, float] | None = None,
) -> bool:
    """``interval`` is a precomputed ``switch_interval(m, policy, n_objectives)``."""
    # two objectives are always left to the sweeps
    if not policy.enabled or m < 3:
        return False
    n_min, n_max = interval or switch_interval(m, policy, n_objectives)
    return n_min <= n <= n_max


class HybridHook(SubproblemHook):
    """Hands subproblems inside the switch interval to the adapted Best Order Sort."""

    def __init__(self, policy: SwitchPolicy, n_objectives: int):
        self.policy = policy
        self.n_objectives = n_objectives
        self._intervals = {}
        self.delegated = 0

    def decide(self, n: int, m: int) -> bool:
        interval = self._intervals.get(m)
        if interval is None:
            interval = self._intervals[m] = switch_interval(m, self.policy, self.n_objectives)
        return should_switch(n, m, self.policy, self.n_objectives, interval)

    def on_helper_a(self, S, m, state: WorkingState) -> bool:
        if not self.decide(len(S), m):
            return False
        bos_helper_a(state.points, S, m, state.ranks)
        self.delegated += 1
        return True

    def on_helper_b(self, L, H, m, state: WorkingState) -> bool:
        if not self.decide(len(L) + len(H), m):
            return False
        bos_helper_b(state.points, L, H, m, state.ranks)
        self.delegated += 1
        return True


def sort_hybrid(
    points: PointSet,
    policy: SwitchPolicy | None = None,
    trace: list | None = None,
) -> RankAssignment:
    hook = HybridHook(policy or SwitchPolicy(), points.n_objectives)
    return run_dc(points, hook=hook, trace=trace)
