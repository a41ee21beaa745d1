import functools

import pytest

from design_spectra.generators import (bipartite_kneser, complete_graph, double_cover,
                                       rook_graph, subspace_graph)

# name -> (builder, expected (m, d, c))
CORPUS = {
    **{f"kneser{n}": (functools.partial(bipartite_kneser, n), (n, n - 1, n - 2))
       for n in range(3, 9)},
    "S(2,3)": (functools.partial(subspace_graph, 2, 3), (7, 3, 1)),
    "S(2,4)": (functools.partial(subspace_graph, 2, 4), (15, 7, 3)),
    "S(3,3)": (functools.partial(subspace_graph, 3, 3), (13, 4, 1)),
    "S(3,4)": (functools.partial(subspace_graph, 3, 4), (40, 13, 4)),
    "S(4,3)": (functools.partial(subspace_graph, 4, 3), (21, 5, 1)),
    "S(5,3)": (functools.partial(subspace_graph, 5, 3), (31, 6, 1)),
    "cover(rook4)": (lambda: double_cover(rook_graph(4)), (16, 6, 2)),
    **{f"cover(K{n})": (functools.partial(lambda n: double_cover(complete_graph(n)), n),
                        (n, n - 1, n - 2)) for n in (3, 4, 5)},
}


@functools.lru_cache(maxsize=None)
def corpus_graph(name):
    return CORPUS[name][0]()


@pytest.fixture(params=sorted(CORPUS))
def design_case(request):
    name = request.param
    return name, corpus_graph(name), CORPUS[name][1]


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
