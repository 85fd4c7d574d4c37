import pytest
from hypothesis import given
from hypothesis import strategies as st

from pivotloop import setsystem as ss
from pivotloop import words as wd
from pivotloop.errors import InapplicableOperation, NotALoop, ParseError, UndefinedPivot, UnknownVertex
from pivotloop.graphs import Graph, SimpleGraph, all_graphs
from pivotloop.vertexset import Ground
from pivotloop.words import OpKind, OpToken

from strategies import ground, set_systems

ABC = Ground("abc")


@pytest.mark.parametrize(
    "word, expected",
    [
        ("*{a} +{a} *{a}", "+{a} *{a} +{a}"),
        ("*{a,b} +{a} *{a,c}", "+{a} *{a,b,c} +{a}"),
        ("", ""),
        ("+{a} +{a}", ""),
        ("!{b}", "+{b} *{b} +{b}"),
        ("+{a} *{a} +{a} *{a} +{a} *{a}", ""),
        ("*{}", ""),
    ],
)
def test_normalize_examples(word, expected):
    assert str(wd.normalize(wd.parse_word(word, ABC), ABC)) == expected


def test_parse_tokens():
    toks = wd.parse_word("  *{a,b}\t+{c} !{}  loc{a} edge{b,c} ", ABC)
    assert [str(t) for t in toks] == ["*{a,b}", "+{c}", "!{}", "loc{a}", "edge{b,c}"]


@pytest.mark.parametrize(
    "text, offset",
    [
        ("*{a}+{b}", 4),
        ("*{a,}", 4),
        ("*{a", 3),
        ("x{a}", 0),
        ("loc{a,b}", 0),
        ("*{a,a}", 4),
        ("é *{a}", 0),
    ],
)
def test_parse_errors_with_byte_offsets(text, offset):
    with pytest.raises(ParseError) as info:
        wd.parse_word(text, ABC)
    assert info.value.offset == offset


def test_parse_offset_counts_bytes():
    with pytest.raises(UnknownVertex) as info:
        wd.parse_word("*{b}\u3000*{z}", ABC)  # ideographic space is 3 bytes in UTF-8
    assert info.value.offset == len("*{b}\u3000*{".encode())


def test_unknown_vertex():
    with pytest.raises(UnknownVertex) as info:
        wd.parse_word("*{a} +{z}", ABC)
    assert info.value.offset == 7


def test_token_arity():
    with pytest.raises(ValueError):
        OpToken(OpKind.LOCAL, ABC.subset(["a", "b"]))
    with pytest.raises(ValueError):
        OpToken(OpKind.EDGE, ABC.subset(["a"]))


def test_triples_biject_with_gl2():
    mats = [wd.triple_matrix(*t) for t in wd.TRIPLES]
    assert len(set(mats)) == 6 and set(mats) == set(ss.GL2)
    assert wd.triple_matrix(1, 1, 1) == ss.ALPHA_DUAL
    assert wd.triple_matrix(0, 1, 0) == ss.ALPHA_STAR


def test_group_element_basics():
    e = wd.word_to_element(wd.parse_word("*{a} +{a}", ABC), ABC)
    assert e["a"] == ss.ALPHA_PLUS @ ss.ALPHA_STAR
    assert e.names() == {"a": "g", "b": "1", "c": "1"}
    assert e.order() == 3
    assert (e ** 3).is_identity()
    with pytest.raises(Exception):
        wd.GroupElement(ABC, [ss.Flip2x2(1, 1, 1, 1)] * 3)


@given(st.lists(st.sampled_from(ss.GL2), min_size=1, max_size=4))
def test_order_two_characterisation(entries):
    e = wd.GroupElement(ground(len(entries)), entries)
    assert 6 % e.order() == 0
    order2 = {ss.IDENTITY, ss.ALPHA_PLUS, ss.ALPHA_STAR, ss.ALPHA_DUAL}
    assert (e * e).is_identity() == all(m in order2 for m in entries)
    assert wd.word_to_element(wd.normal_form(e).to_word(), e.ground) == e


@st.composite
def words(draw, g, max_len=12):
    kinds = [OpKind.PIVOT, OpKind.LOOP, OpKind.DUAL]
    return [
        OpToken(draw(st.sampled_from(kinds)), g.from_mask(draw(st.integers(0, g.full_mask))))
        for _ in range(draw(st.integers(0, max_len)))
    ]


@given(set_systems(), st.data())
def test_normal_form_sound(M, data):
    word = data.draw(words(M.ground))
    nf = wd.normalize(word, M.ground)
    assert nf.X <= nf.Y
    assert wd.apply_word_ss(M, word) == nf.apply_ss(M)


@given(set_systems(), st.data())
def test_concatenation_is_composition(M, data):
    w1, w2 = data.draw(words(M.ground, 6)), data.draw(words(M.ground, 6))
    g = M.ground
    e1, e2 = wd.word_to_element(w1, g), wd.word_to_element(w2, g)
    assert wd.word_to_element(w1 + w2, g) == e1.then(e2)
    assert e1.then(e2).apply_ss(M) == e2.apply_ss(e1.apply_ss(M))


@pytest.mark.parametrize("n", [1, 2])
def test_graph_words_reduce_to_defined_normal_form(n):
    g = ground(n)
    alphabet = [OpToken(OpKind.PIVOT, g.from_mask(m)) for m in range(1, 1 << n)]
    alphabet += [OpToken(OpKind.LOOP, g.from_mask(1 << i)) for i in range(n)]
    for G in all_graphs(g):
        stack = [(G, [])]
        while stack:
            H, word = stack.pop()
            assert wd.normalize(word, g).apply_graph(G) == H
            if len(word) < 4:
                for tok in alphabet:
                    try:
                        stack.append((wd.apply_token_graph(H, tok), word + [tok]))
                    except InapplicableOperation:
                        pass


def test_apply_word_graph_reports_step(pqrs_graph):
    word = wd.parse_word("*{q} *{q} *{r}", pqrs_graph.ground)
    with pytest.raises(UndefinedPivot) as info:
        wd.apply_word_graph(pqrs_graph, word)
    assert info.value.step == 2
    assert str(info.value).startswith("step 2: ")
    with pytest.raises(NotALoop):
        wd.apply_word_graph(pqrs_graph, wd.parse_word("loc{r}", pqrs_graph.ground))


def test_apply_word_simple():
    S = SimpleGraph.from_edges("abc", edges=[("a", "b"), ("b", "c")])
    out = wd.apply_word_simple(S, wd.parse_word("*{b} loc{a} *{} edge{a,c}", S.ground))
    assert isinstance(out, SimpleGraph)
    with pytest.raises(InapplicableOperation) as info:
        wd.apply_word_simple(S, wd.parse_word("*{b} +{a}", S.ground))
    assert info.value.step == 1
    with pytest.raises(InapplicableOperation):
        wd.apply_word_simple(S, wd.parse_word("*{a,b,c}", S.ground))


def test_loop_word_on_graph_is_total():
    G = Graph("ab", [0, 0])
    H = wd.apply_word_graph(G, wd.parse_word("+{a,b} +{a}", G.ground))
    assert list(H.loops()) == ["b"]
