import pytest
from hypothesis import given
from hypothesis import strategies as st

from pivotloop.errors import GroundMismatch, UnknownVertex
from pivotloop.vertexset import Ground, VertexSet


def test_ground_order_and_index():
    g = Ground(["p", "q", "r"])
    assert g.n == 3 and g.index("r") == 2
    assert g.full_mask == 0b111
    assert list(g) == ["p", "q", "r"]


@pytest.mark.parametrize("labels", [["a", "a"], ["a b"], [""], ["x-y"]])
def test_ground_rejects_bad_labels(labels):
    with pytest.raises(ValueError):
        Ground(labels)


def test_unknown_vertex():
    g = Ground("pq")
    with pytest.raises(UnknownVertex):
        g.subset(["z"])


def test_string_is_one_label():
    g = Ground(["pq", "p"])
    assert g.subset("pq").mask == 0b01


def test_formatting():
    g = Ground("pqrs")
    assert str(g.subset(["r", "p"])) == "{p,r}"
    assert str(g.empty()) == "{}"


def test_mixed_grounds_rejected():
    a = Ground("pq").subset(["p"])
    b = Ground("pr").subset(["p"])
    with pytest.raises(GroundMismatch):
        a ^ b


@given(st.integers(0, 63), st.integers(0, 63))
def test_set_algebra_matches_python_sets(x, y):
    g = Ground("abcdef")
    X, Y = g.from_mask(x), g.from_mask(y)
    sx, sy = set(X), set(Y)
    assert set(X ^ Y) == sx ^ sy
    assert set(X | Y) == sx | sy
    assert set(X & Y) == sx & sy
    assert set(X - Y) == sx - sy
    assert set(~X) == set(g) - sx
    assert (X <= Y) == (sx <= sy)
    assert (X < Y) == (sx < sy)
    assert len(X) == len(sx)
    assert X.indices() == sorted(g.index(v) for v in sx)


def test_vertexset_hash_and_iter_order():
    g = Ground("pqrs")
    X = VertexSet(g, 0b1010)
    assert list(X) == ["q", "s"]
    assert {X: 1}[g.subset(["s", "q"])] == 1
