import pytest
from hypothesis import strategies as st

from ramseykern import ramsey, solvers
from ramseykern._backend import available_backends
from ramseykern.graph import Graph

BACKENDS = available_backends()


@pytest.fixture(params=sorted(BACKENDS))
def backend(request, monkeypatch):
    """Run the test once per importable kernel backend."""
    mod = BACKENDS[request.param]
    monkeypatch.setattr(solvers, "kernels", mod)
    monkeypatch.setattr(ramsey, "kernels", mod)
    return request.param


@st.composite
def graphs(draw, min_n=0, max_n=10):
    n = draw(st.integers(min_n, max_n))
    bits = draw(st.lists(st.booleans(), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Graph.from_edges(n, [p for p, b in zip(pairs, bits) if b])


@pytest.hookimpl(tryfirst=True, hookwrapper=True)
def pytest_runtest_makereport(item, call):
    # exposes the call-phase outcome to fixtures (used by the acceptance gate)
    outcome = yield
    rep = outcome.get_result()
    setattr(item, "rep_" + rep.when, rep)
