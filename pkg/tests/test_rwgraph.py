from math import comb

import pytest

from staircase.errors import ResourceLimitError
from staircase.perm import staircase_permutation
from staircase.report import MISMATCH
from staircase.rwgraph import (
    build_word_graph,
    count_four_cycles,
    detect_move,
    euler_like_invariant,
    structure_report,
)


def test_detect_move_kinds():
    assert detect_move((1, 2, 1), (2, 1, 2)) == "braid"
    assert detect_move((1, 3, 2), (3, 1, 2)) == "commutation"
    assert detect_move((1, 2, 1), (1, 2, 1)) is None
    assert detect_move((1, 2, 3), (3, 2, 1)) is None


def test_census_values():
    # (ell, vertices, edges, braid, four_cycles)
    expected = {
        3: (6, 6, 2, 1),
        4: (10, 12, 3, 3),
        5: (15, 20, 4, 6),
        6: (21, 30, 5, 10),
    }
    for ell, (v, e, b, c) in expected.items():
        g = build_word_graph(staircase_permutation(ell + 1))
        assert g.vertex_count == v == comb(ell + 1, 2)
        assert g.edge_count == e == ell * (ell - 1)
        assert g.braid_edge_count() == b == ell - 1
        assert count_four_cycles(g) == c == comb(ell - 1, 2)
        assert euler_like_invariant(g) == 1


def test_printed_edge_claim_is_flagged():
    rep = structure_report(5)
    flagged = [r for r in rep.mismatches() if "printed" in r.name]
    assert len(flagged) == 1
    assert flagged[0].observed == 20
    assert flagged[0].claimed == 30
    assert flagged[0].verdict == MISMATCH


def test_structure_report_other_rows_match():
    for ell in (3, 4):
        rep = structure_report(ell)
        bad = [r for r in rep.mismatches() if "printed" not in r.name]
        assert bad == []


def test_four_cycles_are_chordless():
    # a 4-clique holds no chordless 4-cycle
    from staircase.graphs import SimpleGraph

    k4 = SimpleGraph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    assert count_four_cycles(k4) == 0
    c4 = SimpleGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert count_four_cycles(c4) == 1


def test_vertex_cap():
    with pytest.raises(ResourceLimitError):
        build_word_graph(staircase_permutation(7), cap_vertices=10)


def test_dot_is_deterministic():
    g1 = build_word_graph(staircase_permutation(5))
    g2 = build_word_graph(staircase_permutation(5))
    assert g1.to_dot() == g2.to_dot()
    assert g1.to_dot().startswith("graph")
