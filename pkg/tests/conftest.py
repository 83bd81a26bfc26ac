import os
import sys

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", max_examples=400, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def partitions(draw, nmax=5, dmax=8, nmin=1, n=None):
    n = n if n is not None else draw(st.integers(nmin, nmax))
    parts = draw(st.lists(st.integers(0, dmax), min_size=n, max_size=n))
    parts.sort()
    return tuple(parts)


@st.composite
def nonzero_partitions(draw, nmax=5, dmax=6, nmin=1, n=None):
    lam = draw(partitions(nmax=nmax, dmax=dmax, nmin=nmin, n=n))
    if not any(lam):
        lam = lam[:-1] + (1,)
    return lam


@st.composite
def equal_degree_pair(draw, nmax=5, dmax=9):
    from symshift.partitions import partitions_of

    n = draw(st.integers(1, nmax))
    d = draw(st.integers(0, dmax))
    pool = partitions_of(d, n)
    return draw(st.sampled_from(pool)), draw(st.sampled_from(pool))


def pytest_terminal_summary(terminalreporter):
    # capture swallows the per-criterion lines, so repeat them at the end
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(results):
        terminalreporter.write_line(results[num][1])
