import random

from hypothesis import strategies as st

from socolor.graphs import Graph


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 9, min_m: int = 0):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if not pairs:
        return Graph(n)
    picks = draw(st.lists(st.sampled_from(pairs), min_size=min_m, max_size=len(pairs)))
    return Graph(n, picks)


def seeded_graph(seed: int, lo: int = 2, hi: int = 10) -> Graph:
    rng = random.Random(seed)
    n = rng.randint(lo, hi)
    p = rng.uniform(0.1, 0.9)
    from socolor.graphs import random_graph

    return random_graph(n, p, seed)
