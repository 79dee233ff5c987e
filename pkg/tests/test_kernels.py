import pytest
from hypothesis import given, settings, strategies as st

from dggpaths import kernels
from dggpaths._pathcount_py import prefix_histogram as py_histogram


def test_backend_selected():
    assert kernels.BACKEND in kernels.BACKENDS
    assert "python" in kernels.BACKENDS


@pytest.mark.parametrize("p,q,hist", [
    (1, 1, [0, 1]),
    (3, 3, [0, 1, 0, 1]),
    (5, 4, [0, 4, 0, 2, 0, 5]),
    (5, 5, [0, 18, 0, 7, 0, 11]),
    (4, 4, [0, 0, 0, 0, 0]),
    (7, 7, [0, 3364, 0, 1518, 0, 663, 0, 1183]),
])
@pytest.mark.parametrize("backend", sorted(kernels.BACKENDS))
def test_known_histograms(backend, p, q, hist):
    assert kernels.prefix_histogram(p, q, backend) == hist


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6), st.integers(1, 6))
def test_backends_agree(p, q):
    results = {b: kernels.prefix_histogram(p, q, b) for b in kernels.BACKENDS}
    assert len({tuple(r) for r in results.values()}) == 1


@pytest.mark.skipif("cython" not in kernels.BACKENDS, reason="extension not built")
def test_compiled_rejects_bad_dims():
    with pytest.raises(ValueError):
        kernels.prefix_histogram(0, 3, "cython")


def test_python_histogram_large_q():
    # long thin grid exercises recursion depth
    assert sum(py_histogram(3, 16)) == 987


def test_falls_back_without_extension(monkeypatch):
    import importlib
    import sys
    import dggpaths
    monkeypatch.setitem(sys.modules, "dggpaths._pathcount", None)
    monkeypatch.delattr(dggpaths, "_pathcount", raising=False)
    try:
        fresh = importlib.reload(kernels)
        assert fresh.BACKEND == "python"
        assert set(fresh.BACKENDS) == {"python"}
        assert fresh.prefix_histogram(5, 5) == [0, 18, 0, 7, 0, 11]
    finally:
        monkeypatch.undo()
        importlib.reload(kernels)
