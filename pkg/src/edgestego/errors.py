"""Exception hierarchy for the edgestego library."""


class StegoError(Exception):
    """Base class for all edgestego errors."""


class MalformedFile(StegoError):
    """The input bytes are not a structurally valid BMP file."""


class UnsupportedFormat(StegoError):
    """The BMP is valid but not 24-bit BI_RGB without palette or alpha."""


class ZeroDimension(StegoError):
    """Image width or height is zero."""


class ParamOutOfRange(StegoError):
    """Detector parameter outside its allowed range."""


class ImageTooSmall(StegoError):
    """Image smaller than the 3x3 minimum the detector needs."""


class ImageTooNarrow(StegoError):
    """Image narrower than the 27 pixels the header row needs."""


class CapacityExceeded(StegoError):
    """Payload does not fit in the pixels selected by the detector."""

    def __init__(self, required: int, available: int):
        self.required = required
        self.available = available
        super().__init__(
            f"payload needs {required} bytes but the image can hold {available}"
        )


class BadMagic(StegoError):
    """The image does not carry an embedded header."""


class UnsupportedVersion(StegoError):
    """The embedded header declares a format version this library cannot read."""


class CorruptHeader(StegoError):
    """The embedded header carries out-of-range parameter fields."""


class TruncatedPayload(StegoError):
    """The declared payload length exceeds what the carrier can hold."""


class DimensionMismatch(StegoError):
    """Two images that must share dimensions do not."""
