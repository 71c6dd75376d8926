from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile(
    "repo",
    deadline=None,
    max_examples=30,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")

# filled by tests/test_acceptance.py; printed in the terminal summary
ACCEPTANCE_LINES = []


def small_rationals(nonzero=True):
    nums = st.integers(-9, 9)
    if nonzero:
        nums = nums.filter(lambda v: v != 0)
    return st.builds(Fraction, nums, st.integers(1, 9))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
