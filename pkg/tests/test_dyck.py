import math

import pytest

from slidechrom import (
    DyckGraph,
    PartialDyckPath,
    count_paths,
    dyck_graph,
    enumerate_paths,
    restriction_map,
)

# the two worked path literals used throughout
SIX = "ENEEENENEENNEENEE@6,5"
THREE = "ENEENENEE@3,3"


def test_parse_round_trip():
    p = PartialDyckPath.parse(THREE)
    assert p.n == 3 and p.r == 3
    assert p.literal == THREE
    assert PartialDyckPath.parse(p.literal) == p


def test_parse_errors():
    for bad in (
        "EEE@3,0",          # step-count mismatch
        "ENEENENEE@3",      # malformed suffix
        "XNEENENEE@3,3",    # bad character
        "NNNEEE@3,0",       # dips below the diagonal at the end? (valid actually)
    ):
        if bad == "NNNEEE@3,0":
            PartialDyckPath.parse(bad)  # this one is fine
            continue
        with pytest.raises(ValueError):
            PartialDyckPath.parse(bad)


def test_weakly_above_enforced():
    # first step E from (0,0) goes below y=x when r=0
    with pytest.raises(ValueError):
        PartialDyckPath.parse("ENNE@2,0")
    PartialDyckPath.parse("NENE@2,0")


def test_heights_three():
    p = PartialDyckPath.parse(THREE)
    # east steps of E N EE N E N EE from (0,3): heights 3,4,4,5,6,6
    assert p.east_heights() == (3, 4, 4, 5, 6, 6)


def test_graph_three():
    g = dyck_graph(PartialDyckPath.parse(THREE))
    assert g.sorted_edges() == [(1, 2), (2, 3)]
    assert restriction_map(PartialDyckPath.parse(THREE)) == (1, 3, 3)


def test_graph_six():
    p = PartialDyckPath.parse(SIX)
    g = dyck_graph(p)
    assert g.sorted_edges() == [
        (1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5), (5, 6),
    ]
    assert restriction_map(p) == (1, 4, 5, 5, 5, 5)


def test_edge_rule_matches_heights():
    for n, r in ((3, 2), (4, 1), (4, 3)):
        for p in enumerate_paths(n, r):
            g = dyck_graph(p)
            h = p.east_heights()
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    assert g.has_edge(i, j) == (h[i + r - 1] >= j + r)


def test_interval_property():
    # neighborhoods of dyck graphs are intervals: i~j with i<k<j forces i~k, k~j
    for p in enumerate_paths(4, 2):
        g = dyck_graph(p)
        for i, j in g.sorted_edges():
            for k in range(i + 1, j):
                assert g.has_edge(i, k) and g.has_edge(k, j)


def test_graph_validation():
    with pytest.raises(ValueError):
        DyckGraph(3, frozenset({(1, 3)}))  # gap violates interval property
    with pytest.raises(ValueError):
        DyckGraph(2, frozenset({(2, 1)}))  # must be i < j


def test_restriction_values_in_range():
    for p in enumerate_paths(3, 3):
        rho = restriction_map(p)
        assert len(rho) == 3
        assert all(0 <= v <= 3 for v in rho)
        # rho is weakly increasing in the vertex
        assert all(rho[i] <= rho[i + 1] for i in range(2))


def test_count_matches_enumeration():
    for n in range(0, 5):
        for r in range(0, 4):
            assert count_paths(n, r) == sum(1 for _ in enumerate_paths(n, r))


def test_count_formula():
    # ballot-type count C(2n+r, n) - C(2n+r, n-1)
    assert count_paths(3, 3) == 48
    assert count_paths(6, 5) == math.comb(17, 6) - math.comb(17, 5)
    assert count_paths(0, 0) == 1
    assert count_paths(0, 4) == 1


def test_enumeration_is_lex_and_unique():
    lits = [p.steps for p in enumerate_paths(3, 2)]
    assert lits == sorted(lits)
    assert len(set(lits)) == len(lits)


def test_r_zero_graph_is_complete_prefix_free():
    # with r=0 the first east step has height >= 1 always; n=1 gives no edges
    p, = list(enumerate_paths(1, 0))
    assert dyck_graph(p).sorted_edges() == []
    assert restriction_map(p) == (0,)


def test_json():
    p = PartialDyckPath.parse(THREE)
    assert p.to_json() == {"n": 3, "r": 3, "steps": "ENEENENEE"}
