import sys
from fractions import Fraction

from hypothesis import settings, strategies as st

from jrworms.exactnum import GoldenNum

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")


def fractions(bound=10**4, max_den=10**3):
    return st.builds(Fraction, st.integers(-bound, bound), st.integers(1, max_den))


def goldens(bound=10**4, max_den=10**3):
    return st.builds(GoldenNum, fractions(bound, max_den), fractions(bound, max_den))


def points(bound=50, max_den=200):
    return st.tuples(goldens(bound, max_den), goldens(bound, max_den))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod and mod.SUMMARY:
        terminalreporter.section("acceptance criteria")
        for line in sorted(mod.SUMMARY, key=lambda s: int(s.split()[2])):
            terminalreporter.write_line(line)
