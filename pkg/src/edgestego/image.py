"""In-memory pixel grids shared by every stage of the pipeline.

Coordinates are (x, y) with the origin at the top-left corner, x growing
rightward and y growing downward. Arrays are indexed [y, x].
"""

from __future__ import annotations

import numpy as np

from .errors import ZeroDimension


class RgbImage:
    """A 24-bit image: ``pixels`` is a (height, width, 3) uint8 array in RGB order."""

    def __init__(self, pixels: np.ndarray):
        pixels = np.asarray(pixels)
        if pixels.ndim != 3 or pixels.shape[2] != 3:
            raise ValueError(f"expected (height, width, 3) pixels, got {pixels.shape}")
        if pixels.dtype != np.uint8:
            raise ValueError(f"expected uint8 pixels, got {pixels.dtype}")
        if pixels.shape[0] == 0 or pixels.shape[1] == 0:
            raise ZeroDimension("image must be at least 1x1")
        self.pixels = pixels

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RgbImage):
            return NotImplemented
        return self.pixels.shape == other.pixels.shape and bool(
            np.array_equal(self.pixels, other.pixels)
        )

    def __repr__(self) -> str:
        return f"RgbImage({self.width}x{self.height})"


class GrayImage:
    """A single-channel image: ``values`` is a (height, width) uint8 array."""

    def __init__(self, values: np.ndarray):
        values = np.asarray(values)
        if values.ndim != 2:
            raise ValueError(f"expected (height, width) values, got {values.shape}")
        if values.dtype != np.uint8:
            raise ValueError(f"expected uint8 values, got {values.dtype}")
        if values.shape[0] == 0 or values.shape[1] == 0:
            raise ZeroDimension("image must be at least 1x1")
        self.values = values

    @property
    def width(self) -> int:
        return self.values.shape[1]

    @property
    def height(self) -> int:
        return self.values.shape[0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, GrayImage):
            return NotImplemented
        return self.values.shape == other.values.shape and bool(
            np.array_equal(self.values, other.values)
        )

    def __repr__(self) -> str:
        return f"GrayImage({self.width}x{self.height})"


class EdgeMap:
    """Per-pixel edge membership: ``membership`` is a (height, width) bool array."""

    def __init__(self, membership: np.ndarray):
        membership = np.asarray(membership)
        if membership.ndim != 2:
            raise ValueError(f"expected (height, width) membership, got {membership.shape}")
        if membership.dtype != np.bool_:
            raise ValueError(f"expected bool membership, got {membership.dtype}")
        if membership.shape[0] == 0 or membership.shape[1] == 0:
            raise ZeroDimension("edge map must be at least 1x1")
        self.membership = membership

    @property
    def width(self) -> int:
        return self.membership.shape[1]

    @property
    def height(self) -> int:
        return self.membership.shape[0]

    @property
    def count(self) -> int:
        """Number of pixels flagged as edges."""
        return int(np.count_nonzero(self.membership))

    def __eq__(self, other) -> bool:
        if not isinstance(other, EdgeMap):
            return NotImplemented
        return self.membership.shape == other.membership.shape and bool(
            np.array_equal(self.membership, other.membership)
        )

    def __repr__(self) -> str:
        return f"EdgeMap({self.width}x{self.height}, {self.count} edges)"
