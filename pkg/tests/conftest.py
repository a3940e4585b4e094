from math import gcd

from hypothesis import strategies as st


@st.composite
def coprime_pair(draw, n_max=400):
    n = draw(st.integers(2, n_max))
    q = draw(st.integers(1, n - 1).filter(lambda q: gcd(n, q) == 1))
    return n, q


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.lines():
            terminalreporter.write_line(line)
