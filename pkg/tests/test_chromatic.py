import itertools

from slidechrom import (
    PartialDyckPath,
    TPolynomial,
    WeakComposition,
    Window,
    acyclic_orientations,
    chromatic_brute,
    chromatic_via_slides,
    compare_chromatic,
    dyck_graph,
    enumerate_paths,
    fundamental_expansion,
    omega_labeling,
    partition_generating_function,
    poset_of_orientation,
    restriction_map,
    verify_backstable,
    verify_fundamental_expansion,
)

THREE = PartialDyckPath.parse("ENEENENEE@3,3")


def wc(entries, lo=1):
    return WeakComposition(tuple(entries), lo)


def test_displayed_three_vertex_expansion():
    rep = compare_chromatic(THREE, Window(1, 3))
    assert rep.equal and rep.nonnegative
    assert rep.expansion == {
        wc([1, 1, 1]): {0: 1, 1: 1},
        wc([2, 0, 1]): {1: 1},
        wc([1, 2], lo=0): {1: 1},
        wc([1, 1, 0, 1], lo=0): {1: 1},
        wc([1, 1, 1], lo=-1): {2: 1},
    }


def test_displayed_expansion_evaluates_to_descent_count():
    # setting every x to 1 counts proper colorings with <= 3 colors by descents
    poly, _ = chromatic_via_slides(THREE, Window(1, 3))
    assert poly.evaluate_all_ones() == {0: 1, 1: 3}


def test_brute_zero_when_no_colors():
    # r=0 leaves an empty positive window: no proper coloring of a vertex
    p, = list(enumerate_paths(1, 0))
    assert chromatic_brute(p, Window(1, 0)).is_zero()


def test_brute_counts_colorings():
    # edge {1,2} with rho=(2,2): exactly the colorings (1,2) and (2,1),
    # the latter carrying the lone descent
    p = PartialDyckPath.parse("EENNEE@2,2")
    assert dyck_graph(p).sorted_edges() == [(1, 2)]
    assert restriction_map(p) == (2, 2)
    poly = chromatic_brute(p, Window(1, 2))
    assert poly.evaluate_all_ones() == {0: 1, 1: 1}


def test_theorem_equality_small_sweep():
    for n in range(0, 4):
        for r in range(0, 4):
            for p in enumerate_paths(n, r):
                rep = compare_chromatic(p, Window(1, r))
                assert rep.ok, p.literal


def test_orientation_partition_identity():
    # brute force equals the sum over acyclic orientations of the
    # ascent-weighted partition generating functions
    for n in range(1, 4):
        for r in range(0, 3):
            w = Window(1, r)
            for p in enumerate_paths(n, r):
                g = dyck_graph(p)
                rho = restriction_map(p)
                total = TPolynomial.zero(w)
                for o in acyclic_orientations(g):
                    P = poset_of_orientation(o).with_labels(
                        omega=omega_labeling(g, o), rho=rho
                    )
                    gf = partition_generating_function(P, w)
                    total = total + gf.scale_t(o.ascent_arcs())
                assert chromatic_brute(p, w) == total, p.literal


def test_backstable_windows():
    for m in (1, 2):
        for n in range(0, 4):
            for r in range(0, 3):
                for p in enumerate_paths(n, r):
                    assert verify_backstable(p, m).equal, (p.literal, m)


def test_fundamental_expansion_three():
    exp = fundamental_expansion(THREE)
    assert exp == {
        (1, 1, 1): {0: 1, 1: 2, 2: 1},
        (1, 2): {1: 1},
        (2, 1): {1: 1},
    }


def test_fundamental_expansion_weights():
    # t-coefficients over all alpha sum to n! (one term per permutation)
    for p in enumerate_paths(3, 2):
        exp = fundamental_expansion(p)
        assert sum(c for tc in exp.values() for c in tc.values()) == 6


def test_verify_fundamental_truncations():
    for n in range(1, 4):
        for r in range(0, 3):
            for p in enumerate_paths(n, r):
                assert verify_fundamental_expansion(p, n), p.literal


def test_expansion_keys_are_descent_compositions():
    # every slide index that appears has weight n and support above -n
    p = PartialDyckPath.parse("ENEEENENEENNEENEE@6,5")
    _, exp = chromatic_via_slides(p, Window(1, 5))
    for a in exp:
        assert a.weight() == 6
        assert a.lo >= 1 - 6
