"""Sharing layer: certificates, profile cross-checks, admissibility stats,
box enumeration, and the shared-pair search."""

import random
from fractions import Fraction as F
from math import gcd

import pytest

from urskit.arith import SContext, is_s_unit
from urskit.heights import Magnitude, counting, counting_trunc, height
from urskit.polys import RatPoly, TrinomialFamily, build_from_roots
from urskit.sharing import (
    PairSequence,
    SearchBudgetError,
    admissibility_report,
    ord_profile_equal,
    s_integer_box,
    search_shared_pairs,
    share_check,
)

S2 = SContext.of([2])
S3 = SContext.of([3])
S23 = SContext.of([2, 3])
P7 = TrinomialFamily(7, 1, F(1), F(1)).polynomial()


def test_share_check_examples():
    sp = share_check(S23, P7, F(0), F(-1))
    assert sp.u == 1 and sp.shares

    sp = share_check(S23, P7, F(5), F(5))
    assert sp.u == 1 and sp.shares

    assert share_check(S3, P7, F(1), F(0)).shares  # u = 3
    assert not share_check(S2, P7, F(1), F(0)).shares


def test_share_check_rejects_non_s_integer():
    with pytest.raises(ValueError, match="not an S-integer"):
        share_check(S23, P7, F(1, 5), F(0))


def test_share_check_vanishing_convention():
    P = build_from_roots([F(1), F(-1)])  # X^2 - 1
    both = share_check(S23, P, F(1), F(-1))
    assert both.shares and both.u is None
    one = share_check(S23, P, F(0), F(1))  # P(0) = -1, P(1) = 0
    assert not one.shares and one.u is None
    other = share_check(S23, P, F(1), F(0))  # u = 0, not a unit
    assert not other.shares and other.u == 0


def test_ord_profile_examples():
    assert ord_profile_equal(S23, P7, F(0), F(-1))
    assert not ord_profile_equal(S2, P7, F(1), F(0))
    assert ord_profile_equal(S2, P7, F(7), F(7))


def test_ord_profile_vanishing_error():
    P = build_from_roots([F(1)])
    with pytest.raises(ValueError, match="vanishing"):
        ord_profile_equal(S23, P, F(1), F(0))


def test_share_iff_profile_randomized():
    rng = random.Random(11)
    box = s_integer_box(S23, 12, 1)
    checked = 0
    for _ in range(400):
        x, y = rng.choice(box), rng.choice(box)
        if P7.evaluate(x) == 0 or P7.evaluate(y) == 0:
            continue
        sp = share_check(S23, P7, x, y)
        assert sp.shares == ord_profile_equal(S23, P7, x, y)
        checked += 1
    assert checked > 300


def test_share_symmetry_up_to_inversion():
    rng = random.Random(13)
    box = s_integer_box(S23, 10, 1)
    for _ in range(200):
        x, y = rng.choice(box), rng.choice(box)
        fwd = share_check(S23, P7, x, y)
        rev = share_check(S23, P7, y, x)
        assert fwd.shares == rev.shares
        if fwd.u not in (None, 0) and rev.u is not None:
            assert rev.u == 1 / fwd.u


def test_sharing_implies_counting_equality():
    pairs = search_shared_pairs(S23, P7, 8, 0)
    assert pairs
    for sp in pairs:
        px, py = P7.evaluate(sp.x), P7.evaluate(sp.y)
        if px == 0 or py == 0:
            continue
        assert counting(S23, px) == counting(S23, py)
        for level in (1, 2, 3):
            assert counting_trunc(S23, level, px) == counting_trunc(S23, level, py)


# --- admissibility -------------------------------------------------------------


def test_admissibility_example():
    seq = PairSequence.build(
        S23, P7, [(F(2), F(0)), (F(4), F(0)), (F(8), F(0)), (F(16), F(0))]
    )
    rep = admissibility_report(seq, Magnitude(5))
    assert rep.x_stats.rows_at_or_below == 2
    assert rep.x_stats.tail_length == 2
    assert rep.x_stats.max_height == Magnitude(16)
    assert not rep.vacuous


def test_admissibility_empty_and_constant():
    empty = admissibility_report(PairSequence(S23, P7, ()), Magnitude(5))
    assert empty.vacuous and empty.x_stats.rows_at_or_below == 0

    const = PairSequence.build(S23, P7, [(F(0), F(0))] * 3)
    rep = admissibility_report(const, Magnitude(2))
    assert rep.x_stats.rows_at_or_below == 3
    assert rep.x_stats.tail_length == 0
    assert rep.x_stats.max_height == Magnitude(1)


# --- box enumeration ------------------------------------------------------------


def box_oracle(S, bound, exp_bound):
    """Direct filter over a superset of candidates."""
    out = set()
    denoms = {1}
    for p in S.primes:
        denoms = {d * p**e for d in denoms for e in range(exp_bound + 1)}
    for d in denoms:
        for a in range(-bound, bound + 1):
            if gcd(a, d) == 1 and height(F(a, d) if d else F(a)).value <= bound:
                out.add(F(a, d))
    return sorted(out, key=lambda v: (v.numerator, v.denominator))


@pytest.mark.parametrize("bound,exp", [(0, 0), (1, 0), (6, 1), (9, 2), (12, 3)])
def test_s_integer_box_matches_oracle(bound, exp):
    assert s_integer_box(S23, bound, exp) == box_oracle(S23, bound, exp)


def test_s_integer_box_bound_zero_empty():
    assert s_integer_box(S23, 0, 4) == []


# --- shared-pair search -----------------------------------------------------------


def search_oracle(S, P, bound, exp):
    values = box_oracle(S, bound, exp)
    hits = []
    for x in values:
        for y in values:
            if x == y:
                continue
            px, py = P.evaluate(x), P.evaluate(y)
            if py == 0:
                if px == 0:
                    hits.append((x, y, None))
                continue
            u = px / py
            if is_s_unit(S, u):
                hits.append((x, y, u))
    hits.sort(key=lambda t: (t[0].numerator, t[0].denominator, t[1].numerator, t[1].denominator))
    return hits


def test_search_examples():
    found = search_shared_pairs(S23, P7, 5, 0)
    as_tuples = [(sp.x, sp.y, sp.u) for sp in found]
    assert (F(0), F(-1), F(1)) in as_tuples
    assert (F(-1), F(0), F(1)) in as_tuples
    assert search_shared_pairs(S23, P7, 0, 0) == []


def test_search_degenerate_square():
    P = RatPoly.of([0, 0, 1])  # X^2, not in the trinomial family
    found = search_shared_pairs(S2, P, 2, 0)
    as_tuples = [(sp.x, sp.y, sp.u) for sp in found]
    assert (F(1), F(2), F(1, 4)) in as_tuples
    assert search_oracle(S2, P, 2, 0) == as_tuples


def test_search_matches_oracle_with_denominators():
    found = search_shared_pairs(S23, P7, 6, 1)
    assert [(sp.x, sp.y, sp.u) for sp in found] == search_oracle(S23, P7, 6, 1)


def test_search_worker_determinism():
    one = search_shared_pairs(S23, P7, 8, 1, workers=1)
    three = search_shared_pairs(S23, P7, 8, 1, workers=3)
    assert one == three


def test_search_budget_partial_results():
    with pytest.raises(SearchBudgetError) as err:
        search_shared_pairs(S23, P7, 8, 0, pair_budget=40)
    assert err.value.completed == 40
    assert err.value.total > 40
    with pytest.raises(SearchBudgetError) as err3:
        search_shared_pairs(S23, P7, 8, 0, pair_budget=40, workers=3)
    assert err3.value.partial == err.value.partial
