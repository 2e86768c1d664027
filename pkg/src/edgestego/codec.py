"""Payload framing and the embed/extract operations.

Wire format (a compatibility contract between conforming implementations):

* Header: 80 bits = magic 0x5347 (16) | version 1 (8) | sigma tenths (8) |
  low threshold (8) | high threshold (8) | payload byte count (32), every
  field most-significant-bit first. The bits occupy bit 0 of channels
  R, G, B of row-0 pixels (0,0), (1,0), ... - three bits per pixel, 27
  pixels, with the final pixel's blue channel left untouched.
* Payload: bytes serialized MSB-first, consumed 9 bits per carrier pixel:
  the first three bits land in R's bits 2,1,0, the next three in G's, the
  last three in B's. Carrier pixels are taken in row-major order from the
  recomputed edge map; a trailing partial group is zero-padded.

Extraction re-runs the detector on the carrier itself. That recovers the
embedder's exact edge map because the detector masks channel bits 0..2
before looking at anything, and both header and payload live entirely in
those bits.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass

import numpy as np

from .canny import CannyParams, detect_edges
from .carrier import _carrier_arrays
from .errors import (
    BadMagic,
    CapacityExceeded,
    CorruptHeader,
    ImageTooNarrow,
    ImageTooSmall,
    ParamOutOfRange,
    TruncatedPayload,
    UnsupportedVersion,
)
from .image import RgbImage

HEADER_MAGIC = 0x5347  # "SG"
HEADER_VERSION = 1
HEADER_BITS = 80
HEADER_PIXELS = 27  # ceil(80 / 3)
MAX_PAYLOAD_BYTES = 2**32 - 1

_HEADER_STRUCT = struct.Struct(">HBBBBI")


@dataclass(frozen=True)
class StegoHeader:
    """The self-describing in-image record: detector params plus payload length."""

    params: CannyParams
    payload_len: int

    def to_bytes(self) -> bytes:
        return _HEADER_STRUCT.pack(
            HEADER_MAGIC,
            HEADER_VERSION,
            self.params.sigma_tenths,
            self.params.low_threshold,
            self.params.high_threshold,
            self.payload_len,
        )

    @classmethod
    def from_bytes(cls, raw: bytes) -> "StegoHeader":
        magic, version, sigma_tenths, low, high, payload_len = _HEADER_STRUCT.unpack(raw)
        if magic != HEADER_MAGIC:
            raise BadMagic(f"expected magic 0x{HEADER_MAGIC:04X}, found 0x{magic:04X}")
        if version != HEADER_VERSION:
            raise UnsupportedVersion(f"header version {version}, expected {HEADER_VERSION}")
        try:
            params = CannyParams(sigma_tenths, low, high)
        except ParamOutOfRange as exc:
            raise CorruptHeader(str(exc)) from exc
        return cls(params, payload_len)


def lsb_replace(value: int, n: int, bits: int) -> int:
    """Replace the ``n`` least significant bits of an 8-bit value with ``bits``."""
    if not 1 <= n <= 3:
        raise ValueError(f"n must be 1..3, got {n}")
    if not 0 <= value <= 0xFF:
        raise ValueError(f"value must be 0..255, got {value}")
    if not 0 <= bits < (1 << n):
        raise ValueError(f"bits must fit in {n} bits, got {bits}")
    return (value & ~((1 << n) - 1)) | bits


def pack_bits(data: bytes) -> np.ndarray:
    """Serialize bytes to a 0/1 array, most significant bit of each byte first."""
    return np.unpackbits(np.frombuffer(data, dtype=np.uint8))


def _check_geometry(image: RgbImage):
    if image.width < 3 or image.height < 3:
        raise ImageTooSmall(f"need at least 3x3 pixels, got {image.width}x{image.height}")
    if image.width < HEADER_PIXELS:
        raise ImageTooNarrow(
            f"header row needs {HEADER_PIXELS} pixels, image is {image.width} wide"
        )


def _write_header(pixels: np.ndarray, header: StegoHeader):
    bits = pack_bits(header.to_bytes())  # 80 bits for 80 channel slots
    row = pixels[0].reshape(-1)
    row[:HEADER_BITS] = (row[:HEADER_BITS] & 0xFE) | bits


def _read_header_bits(pixels: np.ndarray) -> bytes:
    row = pixels[0].reshape(-1)
    return np.packbits(row[:HEADER_BITS] & 1).tobytes()


def read_header(carrier: RgbImage) -> StegoHeader:
    """Parse and validate the embedded header without touching the payload."""
    _check_geometry(carrier)
    return StegoHeader.from_bytes(_read_header_bits(carrier.pixels))


def embed(image: RgbImage, payload: bytes, params: CannyParams) -> RgbImage:
    """Hide ``payload`` in the edge pixels of ``image``; returns a new image.

    Only bit 0 of the 27 header pixels in row 0 and bits 0..2 of the carrier
    pixels that actually receive payload are modified.
    """
    _check_geometry(image)
    if len(payload) > MAX_PAYLOAD_BYTES:
        raise CapacityExceeded(required=len(payload), available=MAX_PAYLOAD_BYTES)

    edges = detect_edges(image, params)
    xs, ys = _carrier_arrays(edges)
    capacity = 9 * xs.size // 8
    if len(payload) > capacity:
        raise CapacityExceeded(required=len(payload), available=capacity)

    out = image.pixels.copy()
    _write_header(out, StegoHeader(params, len(payload)))

    bits = pack_bits(payload)
    n_groups = -(-bits.size // 9)
    if n_groups:
        padded = np.zeros(n_groups * 9, dtype=np.uint8)
        padded[: bits.size] = bits
        triples = padded.reshape(-1, 3)
        fields = (triples[:, 0] << 2) | (triples[:, 1] << 1) | triples[:, 2]
        fields = fields.reshape(n_groups, 3)  # one 3-bit field per channel
        sel_y, sel_x = ys[:n_groups], xs[:n_groups]
        out[sel_y, sel_x] = (out[sel_y, sel_x] & 0xF8) | fields
    return RgbImage(out)


def extract(carrier: RgbImage) -> tuple[bytes, CannyParams]:
    """Recover (payload, params) from a carrier produced by :func:`embed`."""
    _check_geometry(carrier)
    header = StegoHeader.from_bytes(_read_header_bits(carrier.pixels))

    edges = detect_edges(carrier, header.params)
    xs, ys = _carrier_arrays(edges)
    capacity = 9 * xs.size // 8
    if header.payload_len > capacity:
        raise TruncatedPayload(
            f"header claims {header.payload_len} bytes but the carrier holds {capacity}"
        )

    total_bits = 8 * header.payload_len
    n_groups = -(-total_bits // 9)
    channels = carrier.pixels[ys[:n_groups], xs[:n_groups]] & 0x07
    bits = np.stack(
        [(channels >> 2) & 1, (channels >> 1) & 1, channels & 1], axis=-1
    ).reshape(-1)[:total_bits]
    payload = np.packbits(bits).tobytes()[: header.payload_len]
    return payload, header.params
