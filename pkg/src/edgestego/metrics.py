"""Distortion measurement and protocol-level stability checks."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .canny import CannyParams, detect_edges
from .errors import DimensionMismatch
from .image import RgbImage


@dataclass(frozen=True)
class DiffReport:
    """Channel-level difference statistics between two equally sized images."""

    changed_pixels: int
    changed_channels: int
    max_channel_delta: int
    mse: float
    psnr_db: float  # +inf for identical images


def _check_dims(a: RgbImage, b: RgbImage):
    if a.width != b.width or a.height != b.height:
        raise DimensionMismatch(
            f"{a.width}x{a.height} vs {b.width}x{b.height}"
        )


def diff(a: RgbImage, b: RgbImage) -> DiffReport:
    """MSE/PSNR over all channel values plus change counts."""
    _check_dims(a, b)
    delta = a.pixels.astype(np.int32) - b.pixels.astype(np.int32)
    abs_delta = np.abs(delta)
    mse = float(np.mean(np.square(delta).astype(np.float64)))
    psnr = math.inf if mse == 0.0 else 10.0 * math.log10(255.0**2 / mse)
    return DiffReport(
        changed_pixels=int(np.count_nonzero(abs_delta.any(axis=2))),
        changed_channels=int(np.count_nonzero(abs_delta)),
        max_channel_delta=int(abs_delta.max()),
        mse=mse,
        psnr_db=psnr,
    )


def verify_stability(original: RgbImage, carrier: RgbImage, params: CannyParams) -> bool:
    """True iff both images produce the identical edge map under ``params``."""
    _check_dims(original, carrier)
    return detect_edges(original, params) == detect_edges(carrier, params)
