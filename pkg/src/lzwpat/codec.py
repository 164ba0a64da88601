"""Pattern-counting LZW codec.

Greedy LZW over raw bytes (alphabet 0..255) with a dictionary that is never
reset, plus an occurrence register: every time a buffered phrase ``w`` is
flushed, the count of each of its prefixes (lengths 1..len(w)) goes up by
one, and the failed extension ``wc`` enters both dictionaries with count 1.
The register therefore reflects what the greedy parse observed, not exact
substring occurrence counts -- overlapping or straddled occurrences are
undercounted by design.

The encoder keys its working dictionary on (prefix_code, byte) pairs and
walks parent-code chains for the prefix increments, so the whole pass is
O(n) with no byte-string building until the artifacts are materialized at
the end.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

#: Codes 0..255 are fixed single-byte patterns; created entries start here.
FIRST_CODE = 256


class CorruptStream(ValueError):
    """A code stream that no encoder run could have produced."""


@dataclass(frozen=True)
class EncodedStream:
    """Compression output before bit packing: codes plus source length."""

    codes: tuple[int, ...]
    original_length: int


@dataclass
class PatternDictionary:
    """Ordered mapping of code -> pattern discovered during one encode.

    Codes 0..255 always map to the 256 single-byte patterns; created
    entries are assigned densely from 256 in creation order and every
    prefix of an entry is itself an entry.
    """

    entries: dict[int, bytes]
    next_code: int

    @classmethod
    def base(cls) -> "PatternDictionary":
        return cls({i: bytes([i]) for i in range(FIRST_CODE)}, FIRST_CODE)

    def pattern_for(self, code: int) -> bytes:
        try:
            return self.entries[code]
        except KeyError:
            raise CorruptStream(f"unresolvable code {code}") from None

    @property
    def multi_byte_entries(self) -> int:
        return self.next_code - FIRST_CODE


@dataclass
class CountRegister:
    """Occurrence register: pattern -> count, plus an increment counter.

    ``total_increments`` counts prefix increments only (not the initial 1
    assigned at entry creation); after encoding n bytes it equals n.
    """

    counts: dict[bytes, int]
    total_increments: int = 0

    @classmethod
    def base(cls) -> "CountRegister":
        return cls({bytes([i]): 0 for i in range(FIRST_CODE)}, 0)


class EncodeResult(NamedTuple):
    stream: EncodedStream
    dictionary: PatternDictionary
    counts: CountRegister


def increment_prefixes(register: CountRegister, phrase: bytes) -> CountRegister:
    """Add 1 to the count of every prefix of ``phrase`` (lengths 1..len).

    All prefixes must already be registered (guaranteed by prefix closure);
    a missing one surfaces as a KeyError, which means internal corruption.
    Mutates and returns ``register``.
    """
    counts = register.counts
    for j in range(1, len(phrase) + 1):
        counts[phrase[:j]] += 1
    register.total_increments += len(phrase)
    return register


def encode_with_counts(data: bytes) -> EncodeResult:
    """Encode ``data``, returning the code stream, dictionary, and register.

    The working dictionary is keyed on (code of w, next byte) so each input
    byte costs O(1); prefix increments walk the parent-code chain of the
    flushed phrase, which by prefix closure visits exactly its prefixes.
    """
    table: dict[tuple[int, int], int] = {}
    parents: list[int] = []  # parents[code - 256] = code of entry minus last byte
    tails: list[int] = []  # tails[code - 256] = last byte of entry
    counts_by_code = [0] * FIRST_CODE
    codes: list[int] = []
    next_code = FIRST_CODE
    total_increments = 0
    w = -1  # code of the buffered phrase; -1 means empty
    w_len = 0

    def flush(code: int, length: int) -> None:
        nonlocal total_increments
        codes.append(code)
        c = code
        while c >= FIRST_CODE:
            counts_by_code[c] += 1
            c = parents[c - FIRST_CODE]
        counts_by_code[c] += 1
        total_increments += length

    for b in data:
        if w < 0:
            w, w_len = b, 1
            continue
        extended = table.get((w, b))
        if extended is not None:
            w, w_len = extended, w_len + 1
        else:
            flush(w, w_len)
            table[(w, b)] = next_code
            parents.append(w)
            tails.append(b)
            counts_by_code.append(1)
            next_code += 1
            w, w_len = b, 1
    if w >= 0:
        flush(w, w_len)

    patterns = [bytes([i]) for i in range(FIRST_CODE)]
    for parent, tail in zip(parents, tails):
        patterns.append(patterns[parent] + bytes([tail]))
    dictionary = PatternDictionary(
        entries={code: patterns[code] for code in range(next_code)},
        next_code=next_code,
    )
    register = CountRegister(
        counts={patterns[code]: counts_by_code[code] for code in range(next_code)},
        total_increments=total_increments,
    )
    return EncodeResult(EncodedStream(tuple(codes), len(data)), dictionary, register)


def _resolve(code: int, entries: list[bytes], prev: bytes | None, position: int) -> bytes:
    """Resolve ``code`` against the incrementally rebuilt entry list."""
    if 0 <= code < len(entries):
        return entries[code]
    if code == len(entries) and prev is not None:
        # Code for the entry being defined right now: the flushed phrase was
        # previous-phrase + its own first byte (the KwKwK case).
        return prev + prev[:1]
    raise CorruptStream(f"code {code} at position {position} exceeds the dictionary")


def decode(stream: EncodedStream) -> bytes:
    """Invert :func:`encode_with_counts`, rebuilding the dictionary as it reads."""
    entries = [bytes([i]) for i in range(FIRST_CODE)]
    out = bytearray()
    prev: bytes | None = None
    for position, code in enumerate(stream.codes, start=1):
        cur = _resolve(code, entries, prev, position)
        out += cur
        if prev is not None:
            entries.append(prev + cur[:1])
        prev = cur
    if len(out) != stream.original_length:
        raise CorruptStream(
            f"decoded {len(out)} bytes but the stream declares {stream.original_length}"
        )
    return bytes(out)


def replay_counts(stream: EncodedStream) -> tuple[PatternDictionary, CountRegister]:
    """Rebuild dictionary and register from a code stream alone.

    Applies the encoder's creation and prefix-increment rules in the same
    order while decoding, so the result is identical to what the original
    encode produced -- counts need never be stored next to an archive.
    """
    entries = [bytes([i]) for i in range(FIRST_CODE)]
    register = CountRegister.base()
    decoded_length = 0
    prev: bytes | None = None
    for position, code in enumerate(stream.codes, start=1):
        cur = _resolve(code, entries, prev, position)
        if prev is not None:
            created = prev + cur[:1]
            entries.append(created)
            register.counts[created] = 1
        increment_prefixes(register, cur)
        decoded_length += len(cur)
        prev = cur
    if decoded_length != stream.original_length:
        raise CorruptStream(
            f"decoded {decoded_length} bytes but the stream declares {stream.original_length}"
        )
    dictionary = PatternDictionary(
        entries={code: pattern for code, pattern in enumerate(entries)},
        next_code=len(entries),
    )
    return dictionary, register
