"""Family classifiers, cycle enumeration, closure and containment checks."""

import pytest
from hypothesis import given, settings

from helpers import hypergraphs
from hychro import build
from hychro.classify import (NO, UNKNOWN, YES, PreconditionError,
                             check_closure_l0, check_contraction_containment,
                             classify, enumerate_pure_big_cycles, in_l0,
                             in_l0_exhaustive, in_l0_prime, in_l1,
                             in_l1_exhaustive)

# two 4-edges overlapping in two vertices, covered by a 2-edge inside the union
COVERED = build(6, [[1, 2, 3, 4], [3, 4, 5, 6], [3, 5]])
# the same pair with no covering 2-edge
UNCOVERED = build(6, [[1, 2, 3, 4], [3, 4, 5, 6]])
K3 = build(3, [[1, 2], [2, 3], [1, 3]])


def test_frozen_verdicts_covered_pair():
    assert in_l0(COVERED).value == YES
    assert in_l0_prime(COVERED).value == NO
    assert in_l1(COVERED).value == NO


def test_frozen_verdicts_triangle():
    rep = classify(K3)
    assert rep.in_l1.value == YES
    assert rep.in_l0.value == YES
    assert rep.in_l0_prime.value == YES
    assert rep.is_graph
    assert rep.is_sperner
    assert rep.all_even
    assert rep.big_edge_count == 0


def test_odd_edge_rejected_with_witness_edge():
    h = build(3, [[1, 2, 3]])
    v = in_l0(h)
    assert v.value == NO
    assert v.odd_edge == (1, 2, 3)
    assert in_l1(h).value == NO
    assert in_l0_prime(h).value == NO


def test_uncovered_cycle_rejected_with_witness():
    v = in_l0(UNCOVERED)
    assert v.value == NO
    assert v.witness is not None
    assert v.witness.is_valid_for(UNCOVERED)
    union = v.witness.edge_union()
    for e in UNCOVERED.two_edges():
        assert not set(e) <= union


def test_l1_witness_is_a_real_cycle():
    v = in_l1(COVERED)
    assert v.value == NO
    assert v.witness is not None
    assert v.witness.is_valid_for(COVERED)
    assert v.witness.length >= 2


def test_forest_instances_are_l1():
    h = build(7, [[1, 2, 3, 4], [4, 5, 6, 7]])
    assert in_l1(h).value == YES
    assert in_l0(h).value == YES
    assert in_l0_prime(h).value == NO  # no 2-edges at all


def test_empty_and_tiny():
    assert in_l1(build(0, [])).value == YES
    assert in_l0(build(0, [])).value == YES
    assert in_l0_prime(build(0, [])).value == NO
    assert in_l0_prime(build(1, [])).value == YES


def test_budget_exhaustion_reports_unknown():
    v = in_l0(UNCOVERED, budget=1)
    assert v.value == UNKNOWN
    assert in_l0_prime(UNCOVERED, budget=1).value in (NO, UNKNOWN)


def test_pure_big_cycle_enumeration():
    cycles = list(enumerate_pure_big_cycles(UNCOVERED))
    assert len(cycles) >= 1
    for c in cycles:
        assert c.is_valid_for(UNCOVERED)
        assert all(len(e) > 2 for e in c.edges)
    assert list(enumerate_pure_big_cycles(build(7, [[1, 2, 3, 4], [4, 5, 6, 7]]))) == []


@settings(max_examples=150, deadline=None)
@given(hypergraphs(max_n=6, max_m=5))
def test_family_inclusions(h):
    l1 = in_l1(h).value
    l0 = in_l0(h).value
    l0p = in_l0_prime(h).value
    if l1 == YES:
        assert l0 == YES
    if l0p == YES:
        assert l0 == YES
        assert h.two_edge_spanning_connected()


@settings(max_examples=100, deadline=None)
@given(hypergraphs(max_n=5, max_m=4))
def test_restricted_matches_exhaustive(h):
    assert in_l0(h).value == in_l0_exhaustive(h).value
    assert in_l1(h).value == in_l1_exhaustive(h).value


def test_closure_on_reduced_covered_pair():
    h = COVERED.sperner()
    rep = check_closure_l0(h, (1, 2, 3, 4))
    assert rep.holds
    assert rep.deleted.value == YES
    assert rep.contracted.value == YES
    assert check_contraction_containment(h, (1, 2, 3, 4))


def test_closure_l0_prime_on_star_with_big_edge():
    # 2-edge star at 5 spans everything and avoids the big edge's inside pairs
    h = build(6, [[1, 5], [2, 5], [3, 5], [4, 5], [5, 6], [1, 2, 3, 4]])
    assert h.is_sperner()
    assert in_l0_prime(h).value == YES
    rep = check_closure_l0(h, (1, 2, 3, 4), family="l0prime")
    assert rep.holds
    assert check_contraction_containment(h, (1, 2, 3, 4))


def test_closure_preconditions():
    with pytest.raises(PreconditionError):
        check_closure_l0(COVERED, (1, 2, 3, 4))  # not Sperner
    hs = COVERED.sperner()
    with pytest.raises(PreconditionError):
        check_closure_l0(hs, (3, 5))  # pivot must be a big edge
    with pytest.raises(PreconditionError):
        check_closure_l0(hs, (1, 2, 3, 5))  # absent edge
    with pytest.raises(PreconditionError):
        check_closure_l0(build(3, [[1, 2, 3]]), (1, 2, 3))  # not a member
    with pytest.raises(PreconditionError):
        check_contraction_containment(COVERED, (1, 2, 3, 4))


def test_classify_reports_shared_witness():
    rep = classify(UNCOVERED)
    assert rep.in_l0.value == NO
    assert rep.witness is not None
    assert rep.witness.is_valid_for(UNCOVERED)
