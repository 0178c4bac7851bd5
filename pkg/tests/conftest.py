import pytest

from dodgreedy.elections import Election
from dodgreedy.graphs import Graph

# smallest graph (vertex count, then edge-set order) whose best-case greedy
# misses the independence number: forced first pick is vertex 2, after which
# {0, 1, 3, 4} is a clique, so greedy stops at 2 while alpha({3,5,6}) = 3
GREEDY_GAP_EDGES = [
    (0, 1), (0, 3), (0, 4), (0, 5), (0, 6),
    (1, 3), (1, 4), (1, 5), (1, 6),
    (2, 5), (2, 6), (3, 4),
]


@pytest.fixture
def four_voter() -> Election:
    return Election.from_names(
        ["C", "D", "P"],
        [["C", "P", "D"], ["P", "C", "D"], ["P", "D", "C"], ["D", "P", "C"]],
    )


@pytest.fixture
def three_voter() -> Election:
    return Election.from_names(
        ["C", "D", "P"],
        [["P", "C", "D"], ["D", "P", "C"], ["C", "D", "P"]],
    )


@pytest.fixture
def greedy_gap_graph() -> Graph:
    return Graph(7, GREEDY_GAP_EDGES)
