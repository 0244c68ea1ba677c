import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from distgraph import (
    Graph6Error,
    build_graph,
    decode_graph6,
    encode_graph6,
    random_graph,
)
from distgraph.families import complete, cycle


def test_hand_checked_encodings():
    # single vertex: just the size byte 63 + 1
    assert encode_graph6(build_graph(1, [])) == "@"
    # two vertices: one adjacency bit, padded with zeros
    assert encode_graph6(build_graph(2, [(0, 1)])) == "A_"
    assert encode_graph6(build_graph(2, [])) == "A?"
    # bits for n=3 are x(0,1) x(0,2) x(1,2)
    assert encode_graph6(build_graph(3, [(0, 1), (1, 2)])) == "Bg"
    assert encode_graph6(complete(3)) == "Bw"
    assert encode_graph6(complete(5)) == "D~{"


def test_decode_hand_checked():
    assert decode_graph6("Bw") == complete(3)
    assert decode_graph6("A_").edges() == [(0, 1)]
    assert decode_graph6(">>graph6<<A_").edges() == [(0, 1)]
    assert decode_graph6("D~{") == complete(5)


def test_roundtrip_all_classes(classes_by_n):
    for n in range(1, 8):
        for g in classes_by_n[n]:
            assert decode_graph6(encode_graph6(g)) == g


@given(st.integers(1, 30), st.integers(0, 2**32))
@settings(max_examples=120, deadline=None)
def test_roundtrip_random(n, seed):
    g = random_graph(n, 0.5, seed)
    text = encode_graph6(g)
    assert all(63 <= ord(ch) <= 126 for ch in text)
    assert decode_graph6(text) == g


def test_size_limit():
    assert decode_graph6(encode_graph6(random_graph(62, 0.2, 1))).n == 62
    with pytest.raises(Graph6Error):
        encode_graph6(random_graph(63, 0.1, 1))


def test_decode_diagnostics():
    with pytest.raises(Graph6Error):
        decode_graph6("")
    with pytest.raises(Graph6Error):
        decode_graph6("B")  # truncated: n=3 needs one data byte
    with pytest.raises(Graph6Error):
        decode_graph6("Bww")  # trailing garbage
    with pytest.raises(Graph6Error):
        decode_graph6("A" + chr(30))  # non-printable data byte
    with pytest.raises(Graph6Error):
        decode_graph6("A~")  # nonzero padding bits
    with pytest.raises(Graph6Error):
        decode_graph6("~~~")  # extended size prefix unsupported


def test_encoding_injective_on_classes(classes_by_n):
    texts = [encode_graph6(g) for g in classes_by_n[6]]
    assert len(set(texts)) == len(texts)
    assert all(t[0] == "E" for t in texts)


def test_known_cycle_encoding():
    # pairs run (0,1)(0,2)(1,2)(0,3)(1,3)(2,3)(0,4)(1,4)(2,4)(3,4), so C5
    # gives the bit string 1010011001, zero-padded to twelve positions
    assert encode_graph6(cycle(5)) == "Dhc"
