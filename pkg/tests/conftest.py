import random

from hypothesis import strategies as st

from centroidal.graph import Graph

ACCEPTANCE_LINES: list[str] = []


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 8):
    """Random labelled connected graph: a random tree plus random extra edges, relabelled."""
    n = draw(st.integers(min_n, max_n))
    edges = {(draw(st.integers(0, i - 1)), i) for i in range(1, n)}
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=2 * n))
    edges |= {(min(u, v), max(u, v)) for u, v in extra if u != v}
    perm = draw(st.permutations(range(n)))
    return Graph.from_edges(n, ((perm[u], perm[v]) for u, v in edges))


def random_tree(n: int, rng: random.Random) -> Graph:
    return Graph.from_edges(n, ((rng.randrange(i), i) for i in range(1, n)))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
