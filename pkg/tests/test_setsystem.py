import pytest
from hypothesis import given
from hypothesis import strategies as st

from pivotloop import setsystem as ss
from pivotloop.errors import NonInvertibleFlip, NotGraphic, ParseError, UnknownVertex
from pivotloop.graphs import Graph, all_graphs, parse_graph
from pivotloop.linalg import diag_add, ppt
from pivotloop.setsystem import SetSystem
from pivotloop.vertexset import Ground

import oracles
from strategies import graphs, set_systems

V123 = Ground("123")


def fam(*sets, ground=V123):
    return SetSystem.from_sets(ground, [list(s) for s in sets])


# --- worked examples -----------------------------------------------------


def test_loop_complement_example():
    M = fam("", "1", "12", "3", "123")
    assert ss.ss_loop_complement(M, V123.subset(["3"])) == fam("", "1", "12", "13")


def test_loop_complement_graph_pair():
    G = Graph.from_edges(V123, edges=[("1", "2"), ("1", "3")], loops=["1", "3"])
    M = ss.ss_of_matrix(G)
    assert M == fam("", "1", "12", "3", "123")
    H = diag_add(G, V123.subset(["3"]))
    assert ss.ss_of_matrix(H) == fam("", "1", "12", "13")
    assert ss.graph_of_ss(fam("", "1", "12", "13")) == H


def test_loop_complement_breaks_delta_matroid():
    M = fam("", "1", "2", "3", "12", "23", "13")
    assert ss.is_delta_matroid(M)
    with pytest.raises(NotGraphic):
        ss.graph_of_ss(M)
    N = ss.ss_loop_complement(M, V123.subset(["1"]))
    assert N == fam("", "2", "3", "23", "123")
    check = ss.is_delta_matroid(N)
    assert not check
    X, Y, x = check.witness
    assert (X, Y, x) == (V123.empty(), V123.full(), "1")
    assert check.render() == "not a delta-matroid; witness X={} Y={1,2,3} x=1"


def test_pqrs_graph_family(pqrs_graph, pqrs_ss):
    assert ss.ss_of_matrix(pqrs_graph) == pqrs_ss
    g = pqrs_graph.ground
    expected = SetSystem.from_sets(
        g, [[], ["q"], ["p", "r"], ["p", "s"], ["q", "r"], ["q", "s"], ["r", "s"], ["p", "q", "r"], ["p", "q", "s"], ["q", "r", "s"]]
    )
    assert ss.ss_pivot(pqrs_ss, g.subset(["p", "q", "r"])) == expected


def test_maximal_members_and_dual_pivot(pqrs_ss):
    g = pqrs_ss.ground
    M = pqrs_ss
    D = ss.ss_dual_pivot(M, g.subset(["r"]))
    expected = SetSystem.from_sets(
        g,
        [[], ["q"], ["s"], ["p", "q"], ["p", "r"], ["q", "s"], ["r", "s"], ["p", "q", "r"], ["p", "q", "s"], ["p", "r", "s"], ["q", "r", "s"]],
    )
    assert D == expected
    top = SetSystem.from_sets(g, [["p", "q", "r"], ["p", "q", "s"], ["p", "r", "s"], ["q", "r", "s"]])
    assert ss.ss_max(M) == top == ss.ss_max(D)
    assert ss.ss_max(ss.ss_pivot(M, g.subset(["q"]))) == SetSystem.from_sets(g, [["p", "q", "r", "s"]])


# --- flips and S3 --------------------------------------------------------


def test_flip_constants():
    assert ss.ALPHA_DUAL == ss.Flip2x2(1, 0, 1, 1)
    assert ss.ALPHA_PLUS @ ss.ALPHA_PLUS == ss.IDENTITY
    assert ss.ALPHA_STAR @ ss.ALPHA_STAR == ss.IDENTITY
    assert (ss.ALPHA_STAR @ ss.ALPHA_PLUS) ** 3 == ss.IDENTITY
    assert ss.ALPHA_STAR @ ss.ALPHA_PLUS @ ss.ALPHA_STAR == ss.ALPHA_DUAL
    assert len(ss.ALL_FLIPS) == 16 and len(ss.GL2) == 6
    assert sorted(f.classify() for f in ss.GL2) == ["1", "a", "b", "c", "f", "g"]
    assert {f.order() for f in ss.GL2} == {1, 2, 3}
    with pytest.raises(NonInvertibleFlip):
        ss.Flip2x2(1, 1, 1, 1).require_invertible()
    with pytest.raises(ValueError):
        ss.Flip2x2(2, 0, 0, 1)


def flip_by_definition(M, a, j):
    out = 0
    jb = 1 << j
    for z in range(1 << M.n):
        zin, other = M.family >> z & 1, M.family >> (z ^ jb) & 1
        if z & jb:
            out |= ((a.a11 & zin) ^ (a.a12 & other)) << z
        else:
            out |= ((a.a21 & other) ^ (a.a22 & zin)) << z
    return out


@given(set_systems(min_n=2), st.sampled_from(ss.ALL_FLIPS), st.sampled_from(ss.ALL_FLIPS), st.data())
def test_vertex_flip_definition_and_commutation(M, a, b, data):
    j, k = data.draw(st.lists(st.integers(0, M.n - 1), min_size=2, max_size=2, unique=True))
    lj, lk = M.ground.labels[j], M.ground.labels[k]
    assert ss.vertex_flip(M, a, lj).family == flip_by_definition(M, a, j)
    assert ss.vertex_flip(ss.vertex_flip(M, a, lj), b, lk) == ss.vertex_flip(ss.vertex_flip(M, b, lk), a, lj)
    assert ss.vertex_flip(ss.vertex_flip(M, a, lj), b, lj) == ss.vertex_flip(M, b @ a, lj)


@given(set_systems(), st.data())
def test_pivot_is_symmetric_difference(M, data):
    x = data.draw(st.integers(0, M.ground.full_mask))
    X = M.ground.from_mask(x)
    assert set(ss.ss_pivot(M, X).masks()) == {z ^ x for z in M.masks()}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_central_identity_exhaustive(n):
    g = Ground("abc"[:n])
    for f in range(1 << (1 << n)):
        M = SetSystem(g, f)
        for x in range(1 << n):
            X = g.from_mask(x)
            lhs = ss.ss_loop_complement(ss.ss_pivot(ss.ss_loop_complement(M, X), X), X)
            rhs = ss.ss_pivot(ss.ss_loop_complement(ss.ss_pivot(M, X), X), X)
            assert lhs == rhs == ss.ss_dual_pivot(M, X)


@given(set_systems(), st.data())
def test_operations_are_involutions(M, data):
    X = M.ground.from_mask(data.draw(st.integers(0, M.ground.full_mask)))
    for op in (ss.ss_pivot, ss.ss_loop_complement, ss.ss_dual_pivot):
        assert op(op(M, X), X) == M


# --- extremal members ----------------------------------------------------


@given(set_systems(), st.data())
def test_max_min_invariance(M, data):
    X = M.ground.from_mask(data.draw(st.integers(0, M.ground.full_mask)))
    ms = M.masks()
    naive_max = {z for z in ms if not any(w != z and w & z == z for w in ms)}
    naive_min = {z for z in ms if not any(w != z and w & z == w for w in ms)}
    assert set(ss.ss_max(M).masks()) == naive_max
    assert set(ss.ss_min(M).masks()) == naive_min
    assert ss.ss_max(ss.ss_dual_pivot(M, X)) == ss.ss_max(M)
    assert ss.ss_min(ss.ss_loop_complement(M, X)) == ss.ss_min(M)


# --- bridges and delta-matroids ------------------------------------------


@given(graphs(max_n=5), st.data())
def test_matrix_bridges(G, data):
    M = ss.ss_of_matrix(G)
    assert M.family == oracles.principal_minor_family(G.to_lists())
    X = G.ground.from_mask(data.draw(st.integers(0, G.ground.full_mask)))
    assert ss.ss_of_matrix(diag_add(G, X)) == ss.ss_loop_complement(M, X)
    if X.mask in M:
        assert ss.ss_of_matrix(ppt(G, X)) == ss.ss_pivot(M, X)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_graphic_round_trip_exhaustive(n):
    for G in all_graphs(Ground("abcd"[:n])):
        M = ss.ss_of_matrix(G)
        assert ss.graph_of_ss(M) == G
        assert ss.is_delta_matroid(M)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_delta_matroid_exhaustive(n):
    g = Ground("abc"[:n])
    for f in range(1, 1 << (1 << n)):
        assert bool(ss.is_delta_matroid(SetSystem(g, f))) == oracles.exchange_axiom(f, n)


def test_empty_family_and_not_graphic():
    check = ss.is_delta_matroid(SetSystem(V123, 0))
    assert not check and check.render() == "not a delta-matroid; empty family"
    with pytest.raises(NotGraphic):
        ss.graph_of_ss(fam("1"))


# --- text format ---------------------------------------------------------


def test_text_round_trip(pqrs_ss):
    text = pqrs_ss.to_text()
    assert text.splitlines()[:4] == ["vertices: p q r s", "{}", "{p}", "{q}"]
    assert len(text.splitlines()) == 11
    assert ss.parse_set_system(text) == pqrs_ss


@pytest.mark.parametrize(
    "text, exc",
    [
        ("{a}\n", ParseError),
        ("vertices: a b\n{a}\n{a}\n", ParseError),
        ("vertices: a b\n{a,a}\n", ParseError),
        ("vertices: a b\na\n", ParseError),
        ("vertices: a b\n{c}\n", UnknownVertex),
        ("", ParseError),
    ],
)
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        ss.parse_set_system(text)


def test_parse_error_offset():
    with pytest.raises(ParseError) as info:
        ss.parse_set_system("vertices: a b\n{a}\n{a}\n")
    assert info.value.offset == len("vertices: a b\n{a}\n")


def test_family_size_limit():
    with pytest.raises(ValueError):
        ss.ss_of_matrix(parse_graph("vertices: " + " ".join(f"v{i}" for i in range(17)) + "\n"))
