import random

import pytest

from spreadbounds.oracle import greedy_partial_spread

CORPUS_SIZE = 200


def corpus_instances():
    rng = random.Random(1234)
    shapes = [(q, n, t) for q in (2, 3) for n in range(3, 7) for t in range(2, n)]
    for _ in range(CORPUS_SIZE):
        yield rng.choice(shapes), rng.randrange(2**32)


@pytest.fixture(scope="session")
def greedy_corpus():
    """200 random maximal partial spreads over q in {2,3}, n <= 6."""
    out = []
    for (q, n, t), seed in corpus_instances():
        out.append(greedy_partial_spread(q, n, t, random.Random(seed), point_limit=400))
    return out
