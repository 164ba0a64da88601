"""Deliberately naive reference encoder used as the test oracle.

This is a straight transliteration of the textbook greedy LZW parse with
an occurrence register bolted on: the dictionary is keyed by byte strings,
the buffer grows by concatenation, and prefix counting slices the buffer.
No optimizations on purpose -- it must stay an independent check on the
production encoder.
"""


def reference_encode(data: bytes):
    """Return (codes, pattern_to_code, counts, total_increments)."""
    dictionary = {bytes([i]): i for i in range(256)}
    counts = {bytes([i]): 0 for i in range(256)}
    next_code = 256
    codes = []
    total_increments = 0
    w = b""
    for i in range(len(data)):
        c = data[i : i + 1]
        wc = w + c
        if wc in dictionary:
            w = wc
        else:
            codes.append(dictionary[w])
            for j in range(1, len(w) + 1):
                counts[w[:j]] += 1
                total_increments += 1
            dictionary[wc] = next_code
            counts[wc] = 1
            next_code += 1
            w = c
    if w:
        codes.append(dictionary[w])
        for j in range(1, len(w) + 1):
            counts[w[:j]] += 1
            total_increments += 1
    return codes, dictionary, counts, total_increments
