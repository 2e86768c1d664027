"""Command-line interface for covering and uncovering payloads in BMP images.

Exit codes: 0 success, 1 usage, 2 I/O, 3 image format, 4 capacity,
5 extraction/header. Diagnostics go to stderr; results go to stdout or to
the requested output files.
"""

from __future__ import annotations

import argparse
import re
import sys

import numpy as np

from . import __version__
from .bmp import read_bmp, write_bmp
from .canny import CannyParams, detect_edges
from .carrier import capacity_bytes, enumerate_carriers
from .codec import HEADER_MAGIC, HEADER_VERSION, embed, extract, read_header
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
from .image import RgbImage
from .metrics import diff

EXIT_USAGE = 1
EXIT_IO = 2
EXIT_FORMAT = 3
EXIT_CAPACITY = 4
EXIT_EXTRACTION = 5

_EXIT_CODES: dict[type, int] = {
    ParamOutOfRange: EXIT_USAGE,
    MalformedFile: EXIT_FORMAT,
    UnsupportedFormat: EXIT_FORMAT,
    ZeroDimension: EXIT_FORMAT,
    ImageTooSmall: EXIT_FORMAT,
    ImageTooNarrow: EXIT_FORMAT,
    DimensionMismatch: EXIT_FORMAT,
    CapacityExceeded: EXIT_CAPACITY,
    BadMagic: EXIT_EXTRACTION,
    UnsupportedVersion: EXIT_EXTRACTION,
    CorruptHeader: EXIT_EXTRACTION,
    TruncatedPayload: EXIT_EXTRACTION,
}

_REMEDIES: dict[type, str] = {
    ParamOutOfRange: "use --sigma 1.0..3.0 and thresholds 0..255 with low <= high",
    MalformedFile: "the input is not a readable BMP file; check the path and file contents",
    UnsupportedFormat: "re-save the image as an uncompressed 24-bit BMP without palette or alpha",
    ZeroDimension: "the image has no pixels; supply a real image",
    ImageTooSmall: "the detector needs at least a 3x3 image",
    ImageTooNarrow: "the header row needs 27 pixels; use an image at least 27 wide",
    CapacityExceeded: "use a smaller payload, a busier image, or lower thresholds",
    BadMagic: "this image carries no embedded header; check you have the right file",
    UnsupportedVersion: "the carrier was made by a newer tool version; upgrade",
    CorruptHeader: "the header bits are damaged; the carrier was modified in transit",
    TruncatedPayload: "the carrier was altered or this is not the embedded image",
}


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; this tool reserves 1 for that."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _sigma_tenths(text: str) -> int:
    if not re.fullmatch(r"\d+\.\d", text):
        raise argparse.ArgumentTypeError(
            f"sigma must be a decimal with exactly one fractional digit (e.g. 1.5), got '{text}'"
        )
    tenths = int(text.replace(".", ""))
    if not 10 <= tenths <= 30:
        raise argparse.ArgumentTypeError(f"sigma must be between 1.0 and 3.0, got {text}")
    return tenths


def _threshold(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"threshold must be an integer, got '{text}'")
    if not 0 <= value <= 255:
        raise argparse.ArgumentTypeError(f"threshold must be 0..255, got {value}")
    return value


def _add_param_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--sigma", type=_sigma_tenths, required=True, metavar="S",
                        help="Gaussian sigma, 1.0..3.0 with one fractional digit")
    parser.add_argument("--low", type=_threshold, required=True, metavar="T",
                        help="low threshold, 0..255")
    parser.add_argument("--high", type=_threshold, required=True, metavar="T",
                        help="high threshold, 0..255")


def _load_image(path: str) -> RgbImage:
    with open(path, "rb") as handle:
        return read_bmp(handle.read())


def _save_image(path: str, image: RgbImage):
    with open(path, "wb") as handle:
        handle.write(write_bmp(image))


def _cmd_embed(args) -> int:
    params = CannyParams(args.sigma, args.low, args.high)
    cover = _load_image(args.in_path)
    with open(args.data, "rb") as handle:
        payload = handle.read()

    edges = detect_edges(cover, params)
    carriers = enumerate_carriers(edges)
    capacity = capacity_bytes(edges)
    carrier = embed(cover, payload, params)
    _save_image(args.out, carrier)

    print(f"carrier pixels: {len(carriers)}")
    print(f"capacity bytes: {capacity}")
    print(f"payload bytes: {len(payload)}")
    return 0


def _cmd_extract(args) -> int:
    carrier = _load_image(args.in_path)
    header = read_header(carrier)
    for flag, expected, actual in (
        ("--expect-sigma", args.expect_sigma, header.params.sigma_tenths),
        ("--expect-low", args.expect_low, header.params.low_threshold),
        ("--expect-high", args.expect_high, header.params.high_threshold),
    ):
        if expected is not None and expected != actual:
            raise CorruptHeader(
                f"{flag} mismatch: carrier header says {actual}, expected {expected}"
            )

    payload, params = extract(carrier)
    with open(args.out, "wb") as handle:
        handle.write(payload)

    print(f"sigma: {params.sigma:.1f}")
    print(f"low threshold: {params.low_threshold}")
    print(f"high threshold: {params.high_threshold}")
    print(f"payload bytes: {len(payload)}")
    return 0


def _cmd_capacity(args) -> int:
    params = CannyParams(args.sigma, args.low, args.high)
    image = _load_image(args.in_path)
    edges = detect_edges(image, params)
    carriers = enumerate_carriers(edges)

    print(f"edge pixels: {edges.count}")
    print(f"carrier pixels: {len(carriers)}")
    print(f"capacity bits: {9 * len(carriers)}")
    print(f"capacity bytes: {capacity_bytes(edges)}")
    if args.coords:
        shown = carriers[: args.coords]
        print(" ; ".join(f"({x:03d},{y:03d})" for x, y in shown))
    return 0


def _cmd_edges(args) -> int:
    params = CannyParams(args.sigma, args.low, args.high)
    image = _load_image(args.in_path)
    edges = detect_edges(image, params)

    rendered = np.zeros((edges.height, edges.width, 3), dtype=np.uint8)
    rendered[edges.membership] = 255
    _save_image(args.out, RgbImage(rendered))
    print(f"edge pixels: {edges.count}")
    return 0


def _cmd_inspect(args) -> int:
    header = read_header(_load_image(args.in_path))
    print(f"magic: 0x{HEADER_MAGIC:04X}")
    print(f"version: {HEADER_VERSION}")
    print(f"sigma: {header.params.sigma:.1f}")
    print(f"low threshold: {header.params.low_threshold}")
    print(f"high threshold: {header.params.high_threshold}")
    print(f"payload bytes: {header.payload_len}")
    return 0


def _cmd_metrics(args) -> int:
    report = diff(_load_image(args.a), _load_image(args.b))
    psnr = "inf" if report.psnr_db == float("inf") else f"{report.psnr_db:.4f}"
    if args.machine:
        print(
            f"changed_pixels={report.changed_pixels} "
            f"changed_channels={report.changed_channels} "
            f"max_channel_delta={report.max_channel_delta} "
            f"mse={report.mse:.6f} psnr_db={psnr}"
        )
    else:
        print(f"changed pixels:    {report.changed_pixels}")
        print(f"changed channels:  {report.changed_channels}")
        print(f"max channel delta: {report.max_channel_delta}")
        print(f"mse:               {report.mse:.6f}")
        print(f"psnr (dB):         {psnr}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="edgestego",
        description="Hide binary payloads in the 3 LSBs of edge pixels of 24-bit BMPs.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("embed", help="hide a payload file inside a cover image")
    p.add_argument("--in", dest="in_path", required=True, metavar="BMP", help="cover image")
    p.add_argument("--data", required=True, metavar="FILE", help="payload file")
    _add_param_flags(p)
    p.add_argument("--out", required=True, metavar="BMP", help="carrier image to write")
    p.set_defaults(func=_cmd_embed)

    p = sub.add_parser("extract", help="recover the payload from a carrier image")
    p.add_argument("--in", dest="in_path", required=True, metavar="BMP", help="carrier image")
    p.add_argument("--out", required=True, metavar="FILE", help="recovered payload file")
    p.add_argument("--expect-sigma", type=_sigma_tenths, metavar="S",
                   help="fail if the carrier header's sigma differs")
    p.add_argument("--expect-low", type=_threshold, metavar="T",
                   help="fail if the carrier header's low threshold differs")
    p.add_argument("--expect-high", type=_threshold, metavar="T",
                   help="fail if the carrier header's high threshold differs")
    p.set_defaults(func=_cmd_extract)

    p = sub.add_parser("capacity", help="report how many bytes an image can hide")
    p.add_argument("--in", dest="in_path", required=True, metavar="BMP")
    _add_param_flags(p)
    p.add_argument("--coords", type=int, default=0, metavar="N",
                   help="also print the first N carrier coordinates")
    p.set_defaults(func=_cmd_capacity)

    p = sub.add_parser("edges", help="render the detected edges as a black/white BMP")
    p.add_argument("--in", dest="in_path", required=True, metavar="BMP")
    _add_param_flags(p)
    p.add_argument("--out", required=True, metavar="BMP")
    p.set_defaults(func=_cmd_edges)

    p = sub.add_parser("inspect", help="dump the embedded header of a carrier image")
    p.add_argument("--in", dest="in_path", required=True, metavar="BMP")
    p.set_defaults(func=_cmd_inspect)

    p = sub.add_parser("metrics", help="channel-level difference report for two images")
    p.add_argument("--a", required=True, metavar="BMP")
    p.add_argument("--b", required=True, metavar="BMP")
    p.add_argument("--machine", action="store_true",
                   help="single-line key=value output")
    p.set_defaults(func=_cmd_metrics)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        print("remedy: check the file paths and permissions", file=sys.stderr)
        return EXIT_IO
    except StegoError as exc:
        code = _EXIT_CODES.get(type(exc), EXIT_FORMAT)
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        remedy = _REMEDIES.get(type(exc))
        if remedy:
            print(f"remedy: {remedy}", file=sys.stderr)
        return code


if __name__ == "__main__":
    sys.exit(main())
