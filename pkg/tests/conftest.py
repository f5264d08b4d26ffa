import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from shadowpos.graph_core import Graph, build_graph


def random_connected_graph(n: int, rng: random.Random) -> Graph:
    """Random spanning tree plus random extra edges — always connected."""
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        edges.add(tuple(sorted((order[i], rng.choice(order[:i])))))
    extra = rng.randint(0, n * (n - 1) // 2 - (n - 1))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    for p in pairs[:extra]:
        edges.add(p)
    return build_graph(n, sorted(edges))


@pytest.fixture
def rng():
    return random.Random(12345)
