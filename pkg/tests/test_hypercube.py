import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from cubepalette.errors import DomainError, RangeError
from cubepalette.hypercube import (
    Coloring,
    EdgeRef,
    all_palettes,
    coloring_from_palettes,
    edge_from_index,
    edge_index,
    incidence_table,
    make_hypercube,
    monochromatic,
    neighbors,
    palette,
    palette_matrix,
)

from conftest import colorings


@pytest.mark.parametrize("n, vertices, edges", [(2, 4, 4), (5, 32, 80), (1, 2, 1), (24, 1 << 24, 24 << 23)])
def test_make_hypercube_counts(n, vertices, edges):
    h = make_hypercube(n)
    assert (h.vertex_count, h.edge_count) == (vertices, edges)


@pytest.mark.parametrize("n", [0, 25, -1])
def test_make_hypercube_guard(n):
    with pytest.raises(RangeError):
        make_hypercube(n)


@pytest.mark.parametrize("n, v, dim, idx", [(2, 0, 1, 0), (2, 1, 2, 3), (3, 5, 2, 7)])
def test_edge_index_examples(n, v, dim, idx):
    assert edge_index(n, v, dim) == idx
    assert edge_from_index(n, idx) == EdgeRef(v, dim)


def test_edge_index_canonicalizes_either_endpoint():
    assert edge_index(3, 7, 2) == edge_index(3, 5, 2)
    assert edge_index(2, 3, 1) == edge_index(2, 2, 1)


def test_edge_index_errors():
    with pytest.raises(RangeError):
        edge_index(3, 0, 4)
    with pytest.raises(RangeError):
        edge_index(3, 0, 0)
    with pytest.raises(RangeError):
        edge_index(3, 8, 1)
    with pytest.raises(RangeError):
        edge_from_index(2, 4)
    with pytest.raises(RangeError):
        edge_from_index(2, -1)


@pytest.mark.parametrize("n", range(1, 11))
def test_index_bijection_exhaustive(n):
    seen = set()
    for v in range(1 << n):
        for dim in range(1, n + 1):
            if v >> (dim - 1) & 1:
                continue
            idx = edge_index(n, v, dim)
            assert edge_from_index(n, idx) == (v, dim)
            seen.add(idx)
    assert seen == set(range(n << (n - 1)))


def test_index_is_dimension_major():
    n = 4
    for idx in range(n << (n - 1)):
        assert edge_from_index(n, idx).dimension == idx // (1 << (n - 1)) + 1


@pytest.mark.parametrize("n, v, expected", [(2, 0, [1, 2]), (3, 7, [6, 5, 3]), (2, 3, [2, 1])])
def test_neighbors_examples(n, v, expected):
    assert neighbors(n, v) == expected


@pytest.mark.parametrize("n", range(1, 11))
def test_degree_exhaustive(n):
    for v in range(1 << n):
        nb = neighbors(n, v)
        assert len(nb) == n == len(set(nb))
        assert all(bin(v ^ w).count("1") == 1 for w in nb)


def test_fig1_palettes(fig1):
    assert palette(fig1, 0) == (1, 1)
    assert palette(fig1, 2) == (2, 1)
    assert set(all_palettes(fig1)) == {(1, 1), (2, 1), (1, 2), (2, 2)}


def test_monochromatic_palettes():
    assert set(all_palettes(monochromatic(3))) == {(1, 1, 1)}
    pals = all_palettes(monochromatic(2))
    assert len(pals) == 4 and len(set(pals)) == 1


@given(colorings(n_max=6))
def test_palette_length_and_count(c):
    pals = all_palettes(c)
    assert len(pals) == 1 << c.n
    assert all(len(p) == c.n for p in pals)


@given(colorings(n_max=6))
def test_edge_consistency(c):
    pal = palette_matrix(c)
    for idx in range(c.edge_count):
        u, w = edge_from_index(c.n, idx).endpoints()
        dim = edge_from_index(c.n, idx).dimension
        assert pal[u, dim - 1] == pal[w, dim - 1] == c.colors[idx]


@given(colorings(n_max=4), st.data())
def test_vectorized_palette_matches_scalar(c, data):
    v = data.draw(st.integers(0, (1 << c.n) - 1))
    assert tuple(palette_matrix(c)[v]) == palette(c, v)


@given(colorings(n_max=5), st.randoms(use_true_random=False))
def test_relabel_equivariance(c, rnd):
    sigma = list(range(1, c.k + 1))
    rnd.shuffle(sigma)
    relabeled = Coloring(c.n, c.k, c.mode, np.array([sigma[x - 1] for x in c.colors]))
    for p, q in zip(all_palettes(c), all_palettes(relabeled)):
        assert q == tuple(sigma[x - 1] for x in p)
    assert (len(set(all_palettes(c))) == 1 << c.n) == (len(set(all_palettes(relabeled))) == 1 << c.n)


@given(colorings(n_max=5))
def test_coloring_from_palettes_roundtrip(c):
    assert coloring_from_palettes(c.n, c.k, c.mode, palette_matrix(c)) == c


def test_coloring_from_palettes_rejects_disagreement():
    with pytest.raises(DomainError):
        coloring_from_palettes(2, 2, "general", [(1, 1), (2, 1), (1, 2), (2, 1)])


def test_coloring_validation():
    with pytest.raises(DomainError):
        Coloring(2, 2, "general", np.array([1, 2, 3, 1]))
    with pytest.raises(DomainError):
        Coloring(2, 2, "general", np.array([1, 2, 1]))
    with pytest.raises(DomainError):
        Coloring(2, 2, "general", np.array([0, 1, 1, 1]))
    with pytest.raises(DomainError):
        Coloring(2, 2, "sideways", np.array([1, 1, 1, 1]))
    with pytest.raises(RangeError):
        Coloring(2, 0, "general", np.array([1, 1, 1, 1]))


def test_coloring_is_immutable(fig1):
    with pytest.raises(ValueError):
        fig1.colors[0] = 2


def test_incidence_table_brute_force():
    n = 4
    table = incidence_table(n)
    for v, i in itertools.product(range(1 << n), range(1, n + 1)):
        assert table[v, i - 1] == edge_index(n, v, i)
