"""Carrier enumeration order, the reserved header row, and capacity math."""

import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from edgestego import EdgeMap, capacity_bytes, enumerate_carriers


def _edge_map(width, height, coords):
    membership = np.zeros((height, width), dtype=bool)
    for x, y in coords:
        membership[y, x] = True
    return EdgeMap(membership)


def test_carriers_come_out_row_major():
    carriers = enumerate_carriers(_edge_map(8, 5, [(2, 1), (0, 3), (5, 1)]))
    assert carriers == [(2, 1), (5, 1), (0, 3)]
    # second route: sort by y, then x
    assert carriers == sorted([(2, 1), (0, 3), (5, 1)], key=lambda p: (p[1], p[0]))


def test_header_row_is_reserved():
    edges = _edge_map(30, 4, [(x, 0) for x in range(30)])
    assert enumerate_carriers(edges) == []
    assert capacity_bytes(edges) == 0


def test_row_zero_edges_are_skipped_not_reordered():
    edges = _edge_map(10, 4, [(3, 0), (9, 0), (1, 2), (4, 2)])
    assert enumerate_carriers(edges) == [(1, 2), (4, 2)]


def test_empty_map_has_no_capacity():
    edges = EdgeMap(np.zeros((6, 6), dtype=bool))
    assert enumerate_carriers(edges) == []
    assert capacity_bytes(edges) == 0


def test_seven_carriers_hold_seven_bytes():
    # 7 carriers * 9 bits = 63 bits -> 7 whole bytes
    edges = _edge_map(27, 3, [(x, 1) for x in range(7)])
    assert capacity_bytes(edges) == 7


def test_capacity_of_5630_carriers():
    # large-count arithmetic: 5630 carriers give 50670 bits, 6333 whole bytes
    membership = np.zeros((80, 80), dtype=bool)
    membership.reshape(-1)[80 : 80 + 5630] = True  # skips row 0 entirely
    edges = EdgeMap(membership)
    assert edges.count == 5630
    assert len(enumerate_carriers(edges)) == 5630
    assert capacity_bytes(edges) == 6333


@given(st.integers(1, 12), st.integers(1, 12), st.integers(0, 2**32 - 1))
def test_capacity_matches_bit_counting(width, height, seed):
    rng = np.random.default_rng(seed)
    edges = EdgeMap(rng.random((height, width)) < 0.3)
    carriers = enumerate_carriers(edges)
    bits = 0
    for _ in carriers:
        bits += 9  # three LSBs in each of the three channels
    assert capacity_bytes(edges) == bits // 8
    assert len(carriers) <= edges.count


@given(st.integers(1, 12), st.integers(2, 12), st.integers(0, 2**32 - 1))
def test_carriers_are_exactly_the_non_reserved_edges(width, height, seed):
    rng = np.random.default_rng(seed)
    membership = rng.random((height, width)) < 0.4
    carriers = enumerate_carriers(EdgeMap(membership))
    expected = [
        (x, y) for y in range(1, height) for x in range(width) if membership[y, x]
    ]
    assert carriers == expected


def test_construction_order_is_irrelevant():
    rng = np.random.default_rng(1)
    coords = list(zip(rng.integers(0, 10, 30).tolist(), rng.integers(0, 10, 30).tolist()))
    forward = _edge_map(10, 10, coords)
    backward = _edge_map(10, 10, list(reversed(coords)))
    assert enumerate_carriers(forward) == enumerate_carriers(backward)
