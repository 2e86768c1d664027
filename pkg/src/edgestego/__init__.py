"""edgestego: hide binary payloads in the edge pixels of 24-bit BMP images.

The payload is written into the three least significant bits of every color
channel of pixels that lie on detected edges. The detector runs on a
grayscale projection that masks those same bits first, so the receiver can
re-run it on the carrier image and land on the identical pixel set.
"""

from .bmp import read_bmp, write_bmp
from .canny import (
    CannyParams,
    GradientField,
    detect_edges,
    gaussian_kernel,
    gradients,
    hysteresis,
    non_max_suppression,
    smooth,
    sobel,
    to_masked_gray,
)
from .carrier import capacity_bytes, enumerate_carriers
from .codec import StegoHeader, embed, extract, lsb_replace, pack_bits, read_header
from .errors import (
    BadMagic,
    CapacityExceeded,
    CorruptHeader,
    DimensionMismatch,
    ImageTooNarrow,
    ImageTooSmall,
    MalformedFile,
    ParamOutOfRange,
    StegoError,
    TruncatedPayload,
    UnsupportedFormat,
    UnsupportedVersion,
    ZeroDimension,
)
from .image import EdgeMap, GrayImage, RgbImage
from .metrics import DiffReport, diff, verify_stability

__version__ = "0.1.0"

__all__ = [
    "BadMagic",
    "CannyParams",
    "CapacityExceeded",
    "CorruptHeader",
    "DiffReport",
    "DimensionMismatch",
    "EdgeMap",
    "GradientField",
    "GrayImage",
    "ImageTooNarrow",
    "ImageTooSmall",
    "MalformedFile",
    "ParamOutOfRange",
    "RgbImage",
    "StegoError",
    "StegoHeader",
    "TruncatedPayload",
    "UnsupportedFormat",
    "UnsupportedVersion",
    "ZeroDimension",
    "capacity_bytes",
    "detect_edges",
    "diff",
    "embed",
    "enumerate_carriers",
    "extract",
    "gaussian_kernel",
    "gradients",
    "hysteresis",
    "lsb_replace",
    "non_max_suppression",
    "pack_bits",
    "read_bmp",
    "read_header",
    "smooth",
    "sobel",
    "to_masked_gray",
    "verify_stability",
    "write_bmp",
]
