"""Shared argument handling for the benchmark commands."""
from django.core.management.base import CommandError

from ranking.serializers import SwitchPolicySerializer


def add_policy_arguments(parser):
    group = parser.add_argument_group('switch policy')
    group.add_argument('--switch-off', action='store_true', help='Never hand subproblems to Best Order Sort.')
    group.add_argument('--c-left', type=float, help='Coefficient of the left bound n_min.')
    group.add_argument('--c-right', type=float, help='Coefficient of the right bound n_max.')
    group.add_argument('--exponent', type=float, help='Exponent of ln(d + 1) in n_max.')
    group.add_argument('--offset', type=float, help='Subtrahend in n_max.')
    group.add_argument('--d-mode', choices=['m', 'M'], help="d = subproblem objectives ('m') or all objectives ('M').")


def policy_from_options(options):
    """Validate the policy flags; unset flags fall back to settings."""
    data = {
        'c_left': options.get('c_left'),
        'c_right': options.get('c_right'),
        'exponent': options.get('exponent'),
        'offset': options.get('offset'),
        'd_interpretation': options.get('d_mode'),
    }
    data = {key: value for key, value in data.items() if value is not None}
    if options.get('switch_off'):
        data['enabled'] = False

    serializer = SwitchPolicySerializer(data=data)
    if not serializer.is_valid():
        raise CommandError(f"Invalid switch policy: {serializer.errors}")
    return serializer.save()


def parse_int_list(value, name):
    try:
        items = [int(item) for item in value.split(',') if item.strip()]
    except ValueError:
        raise CommandError(f"--{name} expects comma-separated integers, got '{value}'.")
    if not items:
        raise CommandError(f"--{name} needs at least one value.")
    return items


def parse_range(value, name):
    try:
        low, high = (int(item) for item in value.split(':'))
    except ValueError:
        raise CommandError(f"--{name} expects LOW:HIGH, got '{value}'.")
    return low, high
