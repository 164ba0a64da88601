"""Shared ingestion: analyze raw bytes or an .lzwv archive the same way.

Raw input runs the counting encoder; archives are unpacked and their
dictionary and register replayed from the code stream, which is how an
already-archived log gets analyzed without re-reading the original.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import container
from .codec import (
    CountRegister,
    EncodedStream,
    PatternDictionary,
    decode,
    encode_with_counts,
    replay_counts,
)


@dataclass
class FileAnalysis:
    original: bytes
    stream: EncodedStream
    dictionary: PatternDictionary
    counts: CountRegister


def analyze_bytes(data: bytes) -> FileAnalysis:
    stream, dictionary, counts = encode_with_counts(data)
    return FileAnalysis(original=data, stream=stream, dictionary=dictionary, counts=counts)


def analyze_archive(data: bytes) -> FileAnalysis:
    stream = container.unpack(data)
    dictionary, counts = replay_counts(stream)
    return FileAnalysis(
        original=decode(stream), stream=stream, dictionary=dictionary, counts=counts
    )


def analyze_auto(data: bytes) -> FileAnalysis:
    """Sniff the magic: archives replay, anything else encodes fresh."""
    if container.is_archive(data):
        return analyze_archive(data)
    return analyze_bytes(data)
