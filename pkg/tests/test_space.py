import pytest

from oracle import adjacency_matrix, matrix_from_edges, nonzero_vectors
from nzcgraph import (ExplicitTooLarge, InvalidParams, SpaceParams, VectorLabel, build_explicit,
                      build_quotient, degrees, edge_count, expand_quotient, support_of)
from nzcgraph.space import class_degree, is_prime_power, mask_positions, vector_masks

GRID = [(q, n) for q in (2, 3, 4) for n in (1, 2, 3)] + [(5, 2), (2, 4)]


def test_params_validation():
    with pytest.raises(InvalidParams):
        SpaceParams(1, 2)
    with pytest.raises(InvalidParams):
        SpaceParams(2, 0)
    assert SpaceParams(4, 1).is_prime_power
    assert not SpaceParams(6, 1).is_prime_power


@pytest.mark.parametrize("q,expected", [(2, True), (4, True), (6, False), (9, True),
                                        (12, False), (25, True), (49, True), (10, False)])
def test_is_prime_power(q, expected):
    assert is_prime_power(q) is expected


def test_vector_label():
    lab = VectorLabel((1, 0, 1), 2)
    assert lab.support == {1, 3}
    assert mask_positions(support_of(lab)) == {1, 3}
    assert VectorLabel((0, 2, 0), 3).support == {2}
    assert VectorLabel((1, 1), 2).support == {1, 2}
    with pytest.raises(InvalidParams):
        VectorLabel((0, 0), 2)
    with pytest.raises(InvalidParams):
        VectorLabel((3, 0), 3)


def test_build_explicit_2_2():
    g = build_explicit(SpaceParams(2, 2))
    assert g.vertex_count == 3
    assert g.edges == ((0, 2), (1, 2))
    assert g.labels == ("1,0", "0,1", "1,1")


def test_build_explicit_2_3():
    g = build_explicit(SpaceParams(2, 3))
    assert (g.vertex_count, edge_count(g)) == (7, 15)


def test_build_explicit_3_1_is_k2():
    g = build_explicit(SpaceParams(3, 1))
    assert g.vertex_count == 2 and g.edges == ((0, 1),)


@pytest.mark.parametrize("q,n", GRID)
def test_explicit_matches_coordinate_oracle(q, n):
    g = build_explicit(SpaceParams(q, n))
    vecs = nonzero_vectors(q, n)
    assert g.labels == tuple(",".join(map(str, v)) for v in vecs)
    assert matrix_from_edges(g.vertex_count, g.edges) == adjacency_matrix(q, n)


def test_cap():
    with pytest.raises(ExplicitTooLarge) as exc:
        build_explicit(SpaceParams(2, 5), cap=30)
    assert "30" in str(exc.value)
    with pytest.raises(ExplicitTooLarge):
        expand_quotient(build_quotient(SpaceParams(2, 5)), cap=30)


def test_cap_env(monkeypatch):
    monkeypatch.setenv("NZC_EXPLICIT_CAP", "5")
    with pytest.raises(ExplicitTooLarge):
        build_explicit(SpaceParams(2, 3))


def test_quotient_2_2():
    sq = build_quotient(SpaceParams(2, 2))
    assert [(c.mask, c.size, c.degree) for c in sq.classes] == [(1, 1, 1), (2, 1, 1), (3, 1, 2)]


def test_quotient_2_3():
    sq = build_quotient(SpaceParams(2, 3))
    assert [c.size for c in sq.classes] == [1] * 7
    assert [c.degree for c in sq.classes] == [3, 3, 3, 5, 5, 5, 6]


def test_quotient_3_2():
    sq = build_quotient(SpaceParams(3, 2))
    assert [(mask_positions(c.mask), c.size, c.degree) for c in sq.classes] == [
        ({1}, 2, 5), ({2}, 2, 5), ({1, 2}, 4, 7)]
    assert sq.vertex_count == 8


@pytest.mark.parametrize("q,n", [(2, 6), (3, 5), (7, 8), (11, 3)])
def test_quotient_invariants(q, n):
    sq = build_quotient(SpaceParams(q, n))
    assert len(sq.classes) == 2 ** n - 1
    assert sq.vertex_count == q ** n - 1
    assert [c.size for c in sq.classes] == [(q - 1) ** c.weight for c in sq.classes]
    keys = [(c.weight, c.mask) for c in sq.classes]
    assert keys == sorted(keys)


@pytest.mark.parametrize("q,n", GRID)
def test_degree_law_vertex_by_vertex(q, n):
    params = SpaceParams(q, n)
    g = build_explicit(params)
    masks = vector_masks(params).tolist()
    for v, d in enumerate(degrees(g)):
        assert d == class_degree(q, n, bin(masks[v]).count("1"))


@pytest.mark.parametrize("q,n", GRID)
def test_quotient_edge_sum(q, n):
    params = SpaceParams(q, n)
    sq = build_quotient(params)
    assert sum(c.size * c.degree for c in sq.classes) == 2 * edge_count(build_explicit(params))


@pytest.mark.parametrize("q,n", GRID)
def test_expand_quotient_equals_explicit(q, n):
    params = SpaceParams(q, n)
    e = expand_quotient(build_quotient(params))
    g = build_explicit(params)
    assert e == g
    assert e.labels == g.labels


def test_expand_3_1():
    assert expand_quotient(build_quotient(SpaceParams(3, 1))).edges == ((0, 1),)


@pytest.mark.parametrize("q,n", [(2, 3), (3, 2), (3, 3)])
def test_adjacency_monotone_in_support(q, n):
    g = build_explicit(SpaceParams(q, n))
    masks = vector_masks(SpaceParams(q, n)).tolist()
    adj = g.adjacency
    for a in range(g.vertex_count):
        for b in range(g.vertex_count):
            if masks[a] & masks[b] != masks[a]:
                continue  # support(a) not inside support(b)
            for c in adj[a]:
                assert c == b or c in adj[b]
