"""Bit-exact .lzwv archive format for encoded streams.

Layout: a 13-byte header (magic ``LZWV``, 1-byte version, original length
as 8-byte little-endian unsigned), then every code packed LSB-first at a
width determined purely by its position in the stream. Widths grow with
position instead of with dictionary state, so encoder and decoder never
disagree on them and no clear/reset codes are needed. Counts are not
stored; they replay deterministically from the codes.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass

from .codec import EncodedStream

MAGIC = b"LZWV"
VERSION = 1
HEADER_LEN = 13
FILE_EXTENSION = ".lzwv"

_HEADER_STRUCT = struct.Struct("<4sBQ")


class ContainerError(ValueError):
    """Base class for archive corruption, named by class."""


class BadMagic(ContainerError):
    pass


class UnsupportedVersion(ContainerError):
    pass


class TruncatedPayload(ContainerError):
    pass


class NonzeroPadding(ContainerError):
    pass


@dataclass(frozen=True)
class ContainerHeader:
    original_length: int

    def to_bytes(self) -> bytes:
        return _HEADER_STRUCT.pack(MAGIC, VERSION, self.original_length)

    @classmethod
    def parse(cls, data: bytes) -> "ContainerHeader":
        if len(data) >= 4 and data[:4] != MAGIC:
            raise BadMagic(f"expected magic {MAGIC!r}, found {bytes(data[:4])!r}")
        if len(data) < HEADER_LEN:
            raise TruncatedPayload(f"header needs {HEADER_LEN} bytes, found {len(data)}")
        _, version, original_length = _HEADER_STRUCT.unpack_from(data)
        if version != VERSION:
            raise UnsupportedVersion(f"version {version} not supported (expected {VERSION})")
        return cls(original_length)


def is_archive(data: bytes) -> bool:
    """Cheap sniff: does this look like a .lzwv archive?"""
    return data[:4] == MAGIC


def code_width(k: int) -> int:
    """Bit width of the k-th code (1-indexed) in any stream.

    The code at position k is at most 254 + k (256 base entries plus the
    k-1 entries created by earlier flushes, minus one for 0-indexing), so
    this is exactly the number of bits that position can ever need.
    """
    return max(9, (k + 254).bit_length())


def pack(stream: EncodedStream) -> bytes:
    """Serialize a stream to archive bytes (header + LSB-first payload)."""
    out = bytearray(ContainerHeader(stream.original_length).to_bytes())
    acc = 0
    nbits = 0
    for k, code in enumerate(stream.codes, start=1):
        width = code_width(k)
        if code < 0 or code >> width:
            raise ValueError(f"code {code} at position {k} does not fit in {width} bits")
        acc |= code << nbits
        nbits += width
        while nbits >= 8:
            out.append(acc & 0xFF)
            acc >>= 8
            nbits -= 8
    if nbits:
        out.append(acc & 0xFF)
    return bytes(out)


def unpack(data: bytes) -> EncodedStream:
    """Parse archive bytes back into an EncodedStream.

    Reads codes while enough bits remain for the next position's width;
    valid archives end with fewer than 8 pad bits, all zero. Anything else
    is reported as the corruption class it implies.
    """
    header = ContainerHeader.parse(data)
    payload = data[HEADER_LEN:]
    total_bits = len(payload) * 8
    codes: list[int] = []
    acc = 0
    nbits = 0
    consumed = 0  # bits taken out of payload so far
    byte_pos = 0
    k = 1
    while total_bits - consumed >= code_width(k):
        width = code_width(k)
        while nbits < width:
            acc |= payload[byte_pos] << nbits
            byte_pos += 1
            nbits += 8
        codes.append(acc & ((1 << width) - 1))
        acc >>= width
        nbits -= width
        consumed += width
        k += 1
    remaining = total_bits - consumed
    if remaining >= 8:
        # pack() never leaves a whole spare byte; a code was cut off.
        raise TruncatedPayload(f"{remaining} trailing bits cannot hold a code at position {k}")
    if remaining and (acc & ((1 << remaining) - 1)):
        raise NonzeroPadding(f"{remaining} pad bits are not zero")
    m = len(codes)
    if m * (m + 1) // 2 < header.original_length:
        # m codes can decode to at most m(m+1)/2 bytes.
        raise TruncatedPayload(
            f"{m} codes cannot produce the declared {header.original_length} bytes"
        )
    return EncodedStream(tuple(codes), header.original_length)
