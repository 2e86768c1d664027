"""Carrier pixel selection and hiding-capacity arithmetic.

Edge pixels become payload carriers in row-major order (top-to-bottom,
left-to-right). The whole first row (y == 0) is reserved for the embedded
header and never carries payload, even where it contains edges.
"""

from __future__ import annotations

import numpy as np

from .image import EdgeMap

RESERVED_ROWS = 1  # row 0 holds the header
BITS_PER_CARRIER = 9  # 3 LSBs in each of the 3 channels


def _carrier_arrays(edges: EdgeMap) -> tuple[np.ndarray, np.ndarray]:
    """Carrier coordinates as (xs, ys) arrays in row-major order."""
    ys, xs = np.nonzero(edges.membership)  # np.nonzero scans row-major
    eligible = ys >= RESERVED_ROWS
    return xs[eligible], ys[eligible]


def enumerate_carriers(edges: EdgeMap) -> list[tuple[int, int]]:
    """All edge coordinates outside the reserved row, as ordered (x, y) pairs."""
    xs, ys = _carrier_arrays(edges)
    return list(zip(xs.tolist(), ys.tolist()))


def capacity_bytes(edges: EdgeMap) -> int:
    """Whole payload bytes the carriers can hold: floor(9 * carriers / 8)."""
    xs, _ = _carrier_arrays(edges)
    return BITS_PER_CARRIER * xs.size // 8
