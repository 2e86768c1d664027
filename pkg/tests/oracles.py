"""Brute-force reference implementations used to cross-check the pipeline.

Everything here is deliberately naive: scalar loops, direct definitions,
fixpoint iteration. None of it shares code with the package, so agreement
between the two is meaningful evidence.
"""

import math

import numpy as np


def masked_gray_reference(r, g, b):
    """Scalar luminance of one pixel after zeroing the three payload bits."""
    luma = 0.299 * (r & 0xF8) + 0.587 * (g & 0xF8) + 0.114 * (b & 0xF8)
    return int(math.floor(luma + 0.5))


def gaussian_taps(sigma):
    """1-D Gaussian taps built with plain math.exp, radius ceil(3*sigma)."""
    radius = math.ceil(3.0 * sigma)
    taps = [math.exp(-(i * i) / (2.0 * sigma * sigma)) for i in range(-radius, radius + 1)]
    total = sum(taps)
    return [t / total for t in taps]


def smooth_reference(values, sigma):
    """Direct 2-D convolution with the separable kernel's outer product.

    Borders clamp to the nearest pixel; the float accumulator is rounded
    half-up once at the end. Summation order differs from a separable
    implementation, so comparisons should allow a +/-1 slack.
    """
    taps = gaussian_taps(sigma)
    radius = len(taps) // 2
    height, width = values.shape
    out = np.zeros((height, width), dtype=np.uint8)
    for y in range(height):
        for x in range(width):
            acc = 0.0
            for dy in range(-radius, radius + 1):
                sy = min(max(y + dy, 0), height - 1)
                for dx in range(-radius, radius + 1):
                    sx = min(max(x + dx, 0), width - 1)
                    acc += taps[dy + radius] * taps[dx + radius] * float(values[sy, sx])
            out[y, x] = min(max(int(math.floor(acc + 0.5)), 0), 255)
    return out


_SOBEL_X = ((-1, 0, 1), (-2, 0, 2), (-1, 0, 1))
_SOBEL_Y = ((1, 2, 1), (0, 0, 0), (-1, -2, -1))  # positive response to brighter top


def sobel_reference(values):
    """Per-pixel 3x3 correlation with clamp-to-edge borders."""
    height, width = values.shape
    gx = np.zeros((height, width), dtype=np.int64)
    gy = np.zeros((height, width), dtype=np.int64)
    for y in range(height):
        for x in range(width):
            ax = ay = 0
            for dy in (-1, 0, 1):
                sy = min(max(y + dy, 0), height - 1)
                for dx in (-1, 0, 1):
                    sx = min(max(x + dx, 0), width - 1)
                    v = int(values[sy, sx])
                    ax += _SOBEL_X[dy + 1][dx + 1] * v
                    ay += _SOBEL_Y[dy + 1][dx + 1] * v
            gx[y, x] = ax
            gy[y, x] = ay
    return gx, gy


def direction_reference(gx, gy):
    """Scalar atan2 binning to the nearest of 0/45/90/135 degrees."""
    height, width = gx.shape
    bins = np.zeros((height, width), dtype=np.uint8)
    for y in range(height):
        for x in range(width):
            angle = math.degrees(math.atan2(gy[y, x], gx[y, x])) % 180.0
            if 22.5 <= angle < 67.5:
                bins[y, x] = 45
            elif 67.5 <= angle < 112.5:
                bins[y, x] = 90
            elif 112.5 <= angle < 157.5:
                bins[y, x] = 135
    return bins


# Neighbor pairs per direction bin, as (dx, dy) with y growing downward.
# The gradient points across the edge, so these are the two pixels the
# candidate must dominate.
_NMS_NEIGHBORS = {
    0: ((-1, 0), (1, 0)),      # horizontal gradient: left / right
    45: ((1, -1), (-1, 1)),    # up-right / down-left
    90: ((0, -1), (0, 1)),     # vertical gradient: up / down
    135: ((-1, -1), (1, 1)),   # up-left / down-right
}


def nms_reference(magnitude, direction):
    """Exhaustive non-maximum suppression; out-of-bounds neighbors count as 0."""
    height, width = magnitude.shape
    out = np.zeros_like(magnitude)
    for y in range(height):
        for x in range(width):
            keep = True
            for dx, dy in _NMS_NEIGHBORS[int(direction[y, x])]:
                ny, nx = y + dy, x + dx
                other = magnitude[ny, nx] if 0 <= ny < height and 0 <= nx < width else 0
                if magnitude[y, x] < other:
                    keep = False
            if keep:
                out[y, x] = magnitude[y, x]
    return out


def hysteresis_reference(thinned, low, high):
    """Double threshold plus edge linking, by relaxation to a fixpoint.

    Start from the strong pixels and repeatedly absorb any candidate
    (magnitude >= low) that touches the current set 8-connectedly, until
    nothing changes.
    """
    height, width = thinned.shape
    candidate = thinned >= low
    result = thinned >= high
    changed = True
    while changed:
        changed = False
        for y in range(height):
            for x in range(width):
                if not candidate[y, x] or result[y, x]:
                    continue
                for dy in (-1, 0, 1):
                    for dx in (-1, 0, 1):
                        ny, nx = y + dy, x + dx
                        if (dy or dx) and 0 <= ny < height and 0 <= nx < width and result[ny, nx]:
                            result[y, x] = True
                            changed = True
                            break
                    if result[y, x]:
                        break
    return result


def count_components(membership):
    """Number of 8-connected components of true cells, by flood fill."""
    height, width = membership.shape
    seen = np.zeros((height, width), dtype=bool)
    count = 0
    for y in range(height):
        for x in range(width):
            if not membership[y, x] or seen[y, x]:
                continue
            count += 1
            stack = [(y, x)]
            seen[y, x] = True
            while stack:
                cy, cx = stack.pop()
                for dy in (-1, 0, 1):
                    for dx in (-1, 0, 1):
                        ny, nx = cy + dy, cx + dx
                        if 0 <= ny < height and 0 <= nx < width:
                            if membership[ny, nx] and not seen[ny, nx]:
                                seen[ny, nx] = True
                                stack.append((ny, nx))
    return count
