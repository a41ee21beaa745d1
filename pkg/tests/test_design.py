import pytest

from design_spectra.design import (COMMON_NEIGHBORS, COMPLETE_BIPARTITE, DISCONNECTED,
                                   IRREGULAR, NOT_BIPARTITE, UNEQUAL_PARTS, DesignParams,
                                   NotDesignGraph, check_design, param_identity)
from design_spectra.generators import (complete_bipartite, complete_graph, cycle_graph,
                                       double_cover, rook_graph)
from design_spectra.graph import from_edge_list


def test_corpus_parameters(design_case):
    name, g, want = design_case
    p = check_design(g)
    assert p.as_tuple() == want
    assert param_identity(p)


@pytest.mark.parametrize("g, reason", [
    (from_edge_list(4, [(0, 1), (2, 3)]), DISCONNECTED),
    (rook_graph(4), NOT_BIPARTITE),
    (cycle_graph(5), NOT_BIPARTITE),
    (complete_bipartite(2, 3), UNEQUAL_PARTS),
    (from_edge_list(6, [(0, 3), (0, 4), (0, 5), (1, 3), (2, 4)]), IRREGULAR),
    (cycle_graph(8), COMMON_NEIGHBORS),
    (complete_bipartite(3, 3), COMPLETE_BIPARTITE),
])
def test_rejections(g, reason):
    with pytest.raises(NotDesignGraph) as exc:
        check_design(g)
    assert exc.value.reason == reason


def test_c6_is_the_smallest_design():
    assert check_design(cycle_graph(6)).as_tuple() == (3, 2, 1)


def test_cover_of_k6():
    assert check_design(double_cover(complete_graph(6))).as_tuple() == (6, 5, 4)


def test_param_identity():
    assert param_identity(DesignParams(7, 3, 1))
    assert param_identity(DesignParams(16, 6, 2))
    assert not param_identity(DesignParams(7, 3, 2))
