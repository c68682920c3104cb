import functools
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from weightbench.cli import default_corpus_dir  # noqa: E402
from weightbench.permgroup import load_group  # noqa: E402

CORPUS = default_corpus_dir()
GROUP_NAMES = sorted(p.stem for p in CORPUS.glob("*.grp"))
PRIMES = (2, 3, 5, 7)


@functools.lru_cache(maxsize=None)
def corpus_group(name):
    return load_group(CORPUS / f"{name}.grp")


def corpus_pairs():
    out = []
    for name in GROUP_NAMES:
        G = corpus_group(name)
        out += [(name, p) for p in PRIMES if G.order % p == 0]
    return out


@pytest.fixture
def group():
    return corpus_group
