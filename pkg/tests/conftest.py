import json
import random
from pathlib import Path

import pytest

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def golden():
    return json.loads((DATA_DIR / "golden.json").read_text())


def random_corpus(seed: int, count: int, max_len: int = 1024) -> list[bytes]:
    """Deterministic mix of inputs that stress the parser differently:

    uniform random bytes (short phrases), tiny alphabets (long phrases and
    deep dictionaries), single-byte runs (KwKwK on decode), and printable
    ASCII (ordinary log text).
    """
    rng = random.Random(seed)
    corpus = []
    for i in range(count):
        kind = i % 4
        n = rng.randrange(max_len + 1)
        if kind == 0:
            corpus.append(rng.randbytes(n))
        elif kind == 1:
            alphabet = rng.randbytes(rng.randint(2, 8))
            corpus.append(bytes(rng.choice(alphabet) for _ in range(n)))
        elif kind == 2:
            corpus.append(bytes([rng.randrange(256)]) * n)
        else:
            corpus.append(bytes(rng.randint(0x20, 0x7E) for _ in range(n)))
    return corpus
