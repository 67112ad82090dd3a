from pathlib import Path

import pytest

from ucir import read_corpus

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


def load_corpus(n: int):
    with open(DATA_DIR / f"graphs{n}.g6") as fh:
        return [g for _, g in read_corpus(fh)]


@pytest.fixture(scope="session")
def corpus():
    """All isomorphism classes of simple graphs, keyed by order 1..7."""
    return {n: load_corpus(n) for n in range(1, 8)}


@pytest.fixture(scope="session")
def small_graphs(corpus):
    """Every graph on at most 5 vertices (52 of them)."""
    return [g for n in range(1, 6) for g in corpus[n]]
