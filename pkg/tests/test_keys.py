import itertools
import random

import pytest

from slidechrom import (
    NegativeRecord,
    PartialDyckPath,
    TPolynomial,
    WeakComposition,
    Window,
    chromatic_brute,
    demazure_operator,
    divided_difference,
    expand_in_keys,
    is_key_positive,
    key_expansion_of_chromatic,
    key_polynomial,
    load_negative_fixtures,
    search_negative_records,
)
from slidechrom.keys import KeyExpansionError
from slidechrom.tpoly import t_const, t_is_nonnegative


def wc(entries, lo=1):
    return WeakComposition(tuple(entries), lo)


def x(i, w):
    return TPolynomial.monomial(wc([1], lo=i), w)


# ------------------------------------------------------ divided differences


def test_divided_difference_symmetric_kills():
    w = Window(1, 2)
    p = x(1, w) * x(2, w)
    assert divided_difference(p, 1).is_zero()


def test_divided_difference_basic():
    w = Window(1, 2)
    # d1(x1) = 1
    assert divided_difference(x(1, w), 1) == TPolynomial.one(w)
    # d1(x1^2) = x1 + x2
    assert divided_difference(x(1, w) * x(1, w), 1) == x(1, w) + x(2, w)
    # d1(x2) = -1
    assert divided_difference(x(2, w), 1) == -TPolynomial.one(w)


def test_demazure_idempotent():
    w = Window(1, 3)
    rng = random.Random(3)
    for _ in range(50):
        p = TPolynomial.zero(w)
        for _ in range(rng.randint(1, 3)):
            e = WeakComposition(
                tuple(rng.randint(0, 2) for _ in range(3)), 1
            )
            p = p + TPolynomial.monomial(e, w, t_const(rng.randint(1, 3)))
        for i in (1, 2):
            q = demazure_operator(p, i)
            assert demazure_operator(q, i) == q


def test_demazure_braid():
    w = Window(1, 3)
    rng = random.Random(4)
    for _ in range(30):
        p = TPolynomial.zero(w)
        for _ in range(rng.randint(1, 3)):
            e = WeakComposition(tuple(rng.randint(0, 2) for _ in range(3)), 1)
            p = p + TPolynomial.monomial(e, w)
        lhs = demazure_operator(demazure_operator(demazure_operator(p, 1), 2), 1)
        rhs = demazure_operator(demazure_operator(demazure_operator(p, 2), 1), 2)
        assert lhs == rhs


# ------------------------------------------------------------------- keys


def test_key_polynomials_small():
    w = Window(1, 2)
    assert key_polynomial(wc([0, 1]), 2) == x(1, w) + x(2, w)
    assert key_polynomial(wc([1, 0]), 2) == x(1, w)
    k02 = key_polynomial(wc([0, 2]), 2)
    assert k02 == (
        x(1, w) * x(1, w) + x(1, w) * x(2, w) + x(2, w) * x(2, w)
    )


def test_key_of_weakly_decreasing_is_monomial():
    # anti-dominant? dominant (weakly decreasing) compositions give monomials
    w = Window(1, 3)
    assert key_polynomial(wc([3, 1, 0]), 3) == TPolynomial.monomial(
        wc([3, 1, 0]), w
    )


def test_key_support_validation():
    with pytest.raises(ValueError):
        key_polynomial(wc([1], lo=0), 2)
    with pytest.raises(ValueError):
        key_polynomial(wc([0, 0, 1]), 2)


def test_key_padding_independence():
    # trailing zeros in the index do not change the polynomial beyond window
    a = wc([2, 0, 1])
    k3 = key_polynomial(a, 3)
    k4 = key_polynomial(a, 4)
    assert k3 == k4.with_window(Window(1, 4)) or set(k3.terms) <= set(k4.terms)


def test_expand_in_keys_round_trip():
    for r in (2, 3):
        for entries in itertools.product(range(3), repeat=r):
            a = WeakComposition(entries, 1)
            exp = expand_in_keys(key_polynomial(a, r), r)
            want_index = a if a.weight() else WeakComposition()
            assert exp == {want_index: {0: 1}}


def test_expand_in_keys_x2():
    w = Window(1, 2)
    exp = expand_in_keys(x(2, w), 2)
    assert exp == {wc([0, 1]): {0: 1}, wc([1, 0]): {0: -1}}


def test_expand_in_keys_random_round_trip():
    rng = random.Random(12)
    r = 3
    for _ in range(40):
        combo = {}
        p = TPolynomial.zero(Window(1, r))
        for _ in range(rng.randint(1, 3)):
            a = WeakComposition(tuple(rng.randint(0, 2) for _ in range(r)), 1)
            c = {rng.randint(0, 2): rng.choice([-2, -1, 1, 2])}
            if a.weight() == 0:
                a = WeakComposition()
            combo[a] = c if a not in combo else combo[a]
        # rebuild from the de-duplicated dict
        for a, c in combo.items():
            p = p + key_polynomial(a, r).scaled(c)
        assert expand_in_keys(p, r) == combo


def test_is_key_positive():
    assert is_key_positive({wc([1]): {0: 2}})
    assert not is_key_positive({wc([1]): {0: 2, 1: -1}})


# ---------------------------------------------------------------- chromatic


def test_three_vertex_chromatic_key_positive():
    p = PartialDyckPath.parse("ENEENENEE@3,3")
    exp = key_expansion_of_chromatic(p)
    assert exp == {
        wc([1, 1, 1]): {0: 1, 1: 1},
        wc([2, 0, 1]): {1: 1},
    }
    assert is_key_positive(exp)


def test_key_expansion_reconstructs_chromatic():
    for lit in ("ENEENENEE@3,3", "EENNEE@2,2", "ENE@1,1"):
        p = PartialDyckPath.parse(lit)
        r = p.r
        w = Window(1, r)
        exp = key_expansion_of_chromatic(p)
        total = TPolynomial.zero(w)
        for b, tc in exp.items():
            total = total + key_polynomial(b, r).scaled(tc)
        assert total == chromatic_brute(p, w), lit


def test_no_negatives_tiny():
    assert search_negative_records(2, 2) == []


# ----------------------------------------------------------------- fixtures


def test_negative_record_json_round_trip():
    rec = NegativeRecord(
        path="EENEENENEENEENENE@6,5",
        composition=wc([1, 3, 0, 2]),
        coefficient=((2, -1),),
    )
    assert NegativeRecord.from_json(rec.to_json()) == rec


def test_fixture_records_present():
    recs = load_negative_fixtures()
    assert len(recs) >= 1
    # every pinned record names an n=6 path and a genuinely negative value
    for rec in recs:
        p = PartialDyckPath.parse(rec.path)
        assert p.n == 6 and p.r <= 6
        assert any(c < 0 for _, c in rec.coefficient)


def test_fixture_records_replay():
    # recompute each pinned path and confirm the exact negative coefficients
    recs = load_negative_fixtures()
    by_path: dict[str, list[NegativeRecord]] = {}
    for rec in recs:
        by_path.setdefault(rec.path, []).append(rec)
    cache: dict = {}
    for lit, pinned in sorted(by_path.items()):
        exp = key_expansion_of_chromatic(PartialDyckPath.parse(lit), cache)
        negs = {
            b: tuple(sorted(tc.items()))
            for b, tc in exp.items()
            if not t_is_nonnegative(tc)
        }
        assert negs == {rec.composition: rec.coefficient for rec in pinned}, lit
