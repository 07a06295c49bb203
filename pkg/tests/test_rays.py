import json
import logging
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from wreathstab.rays import (
    CapExceededError,
    ClusterType,
    RayPartition,
    agility,
    betti,
    degree,
    enumerate_ray_partitions,
    length,
    poincare_table,
    stream_json,
)


def conf_poincare(n, m):
    """Ranks of H^*(Conf_n(R^m)): prod_{j<n} (1 + j t^(m-1))."""
    poly = {0: 1}
    for j in range(1, n):
        nxt = {}
        for deg, c in poly.items():
            nxt[deg] = nxt.get(deg, 0) + c
            nxt[deg + m - 1] = nxt.get(deg + m - 1, 0) + j * c
        poly = nxt
    return dict(sorted(poly.items()))


def test_length_examples():
    K = ClusterType((2, 1))
    singles = RayPartition(tuple(((c,),) for c in K.cells()))
    assert length(singles) == 3
    assert length(RayPartition((tuple(K.cells()),))) == 1
    assert length(RayPartition((((1, 1), (2, 1)), ((1, 2),)))) == 2


def test_agility_examples():
    K = ClusterType((2, 3, 1))
    singles = RayPartition(tuple((c,) for c in K.cells()))
    assert agility(singles, K) == K.r
    assert agility(RayPartition((tuple(K.cells()),)), K) == 1
    K22 = ClusterType((2, 2))
    Q = RayPartition((((1, 1), (2, 1)), ((1, 2), (2, 2))))
    assert agility(Q, K22) == 1


def test_degree_examples():
    K = ClusterType((3, 2))
    singles = RayPartition(tuple((c,) for c in K.cells()))
    assert degree(singles, K, 4, 5) == 0
    assert degree(RayPartition((((1, 1), (1, 2)),)), ClusterType((2,)), 0, 2) == 1
    assert degree(RayPartition((((1, 1), (2, 1)),)), ClusterType((1, 1)), 1, 2) == 2


def test_enumeration_examples():
    assert len(list(enumerate_ray_partitions(ClusterType((1,))))) == 1
    assert len(list(enumerate_ray_partitions(ClusterType((2,))))) == 2
    l2 = [Q for Q in enumerate_ray_partitions(ClusterType((1, 1, 1))) if length(Q) == 2]
    assert len(l2) == 3


@pytest.mark.parametrize("sizes", [(1,), (2,), (2, 1), (1, 2), (3, 1), (2, 2), (1, 1, 2), (3, 2)])
def test_enumeration_is_exhaustive_and_unique(sizes):
    # ray partitions of m cells are in bijection with permutations (rays <-> cycles)
    K = ClusterType(sizes)
    rays = list(enumerate_ray_partitions(K))
    assert len(rays) == factorial(K.total)
    assert len(set(rays)) == len(rays)
    assert all(Q.covers(K) for Q in rays)


@pytest.mark.parametrize("sizes,p,q", [((2, 1), 1, 2), ((2, 2), 0, 3), ((1, 3), 2, 2), ((2, 1, 1), 1, 3)])
def test_filter_and_betti_agree_with_expanded_degrees(sizes, p, q):
    K = ClusterType(sizes)
    by_degree = {}
    for Q in enumerate_ray_partitions(K):
        d = degree(Q, K, p, q)
        by_degree[d] = by_degree.get(d, 0) + 1
    assert poincare_table(K, p, q) == dict(sorted(by_degree.items()))
    for d in range(0, max(by_degree) + 2):
        filtered = list(enumerate_ray_partitions(K, (p, q, d)))
        assert len(filtered) == by_degree.get(d, 0) == betti(K, p, q, d)


def test_poincare_examples():
    assert poincare_table(ClusterType((1,)), 0, 2) == {0: 1}
    assert poincare_table(ClusterType((2,)), 0, 2) == {0: 1, 1: 1}
    assert poincare_table(ClusterType((1, 1)), 0, 3) == {0: 1, 2: 1}
    assert betti(ClusterType((2,)), 0, 2, 1) == 1


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("q", [2, 3, 4])
def test_single_row_is_conf_of_r_q(n, q):
    assert poincare_table(ClusterType((n,)), 3, q) == conf_poincare(n, q)


@pytest.mark.parametrize("r", range(1, 7))
@pytest.mark.parametrize("p,q", [(0, 2), (1, 2), (2, 3)])
def test_singleton_clusters_are_conf_of_r_p_plus_q(r, p, q):
    assert poincare_table(ClusterType((1,) * r), p, q) == conf_poincare(r, p + q)


@settings(max_examples=30, deadline=None)
@given(
    st.lists(st.integers(1, 3), min_size=1, max_size=4).filter(lambda s: sum(s) <= 7),
    st.integers(0, 3),
    st.integers(2, 4),
)
def test_betti_invariants(sizes, p, q):
    K = ClusterType(tuple(sizes))
    table = poincare_table(K, p, q)
    assert table[0] == 1
    assert sum(table.values()) == factorial(K.total)
    assert poincare_table(ClusterType(tuple(reversed(sizes))), p, q) == table


def test_betti_rejects_bad_input():
    K = ClusterType((2,))
    with pytest.raises(ValueError):
        betti(K, -1, 2, 0)
    with pytest.raises(ValueError):
        betti(K, 0, 0, 0)
    with pytest.raises(ValueError):
        betti(K, 0, 2, -1)
    with pytest.raises(ValueError):
        ClusterType((2, 0))


def test_ray_partition_validation():
    with pytest.raises(ValueError):
        RayPartition((((1, 2), (1, 1)),))
    with pytest.raises(ValueError):
        RayPartition((((1, 2),), ((1, 1),)))
    with pytest.raises(ValueError):
        RayPartition((((1, 1),), ((1, 1),)))


def test_cell_cap(monkeypatch, caplog):
    with pytest.raises(CapExceededError):
        betti(ClusterType((13,)), 0, 2, 0)
    monkeypatch.setenv("WREATHSTAB_MAX_CELLS", "3")
    with pytest.raises(CapExceededError):
        betti(ClusterType((2, 2)), 0, 2, 0)
    monkeypatch.delenv("WREATHSTAB_MAX_CELLS")
    with caplog.at_level(logging.WARNING):
        assert betti(ClusterType((1,) * 13), 0, 2, 0, max_cells=13) == 1
    assert "beyond the default cap" in caplog.text


def test_stream_json_round_trip():
    K = ClusterType((2, 1))
    rays = list(enumerate_ray_partitions(K))
    lines = list(stream_json(rays))
    back = [RayPartition(tuple(tuple(tuple(c) for c in part) for part in json.loads(s))) for s in lines]
    assert back == rays
