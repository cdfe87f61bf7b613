"""Omega-indexed lex sums: order, anchors, invariance, witness search."""

from fractions import Fraction

import pytest

from ordcut import cuts, hahnomega, sampling
from ordcut.errors import DomainError
from ordcut.hahnomega import (MINUS, PLUS, OmegaGroup, index_cut,
                              omega_classify, omega_compare, omega_element,
                              omega_gap_at, omega_invariance, omega_member,
                              omega_periodic, omega_point, omega_tail,
                              omega_translate, omega_witness_search,
                              omega_zero, omega_zero_subgroup)
from ordcut.lexgroups import LexGroup, element
from ordcut.scalars import KIND_Q, KIND_Z, Scalar, quad_z

GZ = OmegaGroup(KIND_Z)
GQ = OmegaGroup(KIND_Q)
SQRT2 = Scalar.make(0, 1, 2)


def test_group_validation():
    with pytest.raises(DomainError):
        OmegaGroup(quad_z(2))


def test_compare_examples():
    e0 = omega_element(GZ, [(0, 1)])
    e1 = omega_element(GZ, [(1, 1)])
    assert omega_compare(e1, e0) == -1
    assert omega_compare(omega_zero(GZ), omega_zero(GZ)) == 0
    x = omega_element(GZ, [(0, 1), (5, -2)])
    y = omega_element(GZ, [(0, 1), (3, 1)])
    assert omega_compare(x, y) == -1


def test_compare_compatible_with_addition():
    rng = sampling.rng_for(0)
    for _ in range(300):
        x = sampling.sample_omega_element(GZ, rng, 4)
        y = sampling.sample_omega_element(GZ, rng, 4)
        z = sampling.sample_omega_element(GZ, rng, 4)
        if omega_compare(x, y) < 0:
            assert omega_compare(x + z, y + z) < 0


def test_member_examples():
    ones = omega_periodic(GZ, (), (1,))
    assert omega_member(ones, omega_element(GZ, [(0, 1)])) == MINUS
    assert omega_member(ones, omega_element(GZ, [(0, 2)])) == PLUS
    gap = omega_gap_at(GQ, [], 1, SQRT2)
    assert omega_member(gap, omega_element(GQ, [(1, Fraction(3, 2))])) == PLUS
    assert omega_member(gap, omega_element(GQ, [(1, Fraction(7, 5))])) == MINUS
    pt = omega_point(GZ, [(0, 3)])
    assert omega_member(pt, omega_element(GZ, [(0, 3)])) == MINUS


def test_anchor_validation():
    with pytest.raises(DomainError):
        omega_gap_at(GZ, [], 1, Fraction(1, 2))  # discrete factor
    with pytest.raises(DomainError):
        omega_gap_at(GQ, [], 1, Fraction(1, 2))  # anchor inside the factor
    with pytest.raises(DomainError):
        omega_gap_at(GQ, [(3, 1)], 1, SQRT2)  # prefix support past the index
    with pytest.raises(DomainError):
        omega_periodic(GZ, (), ())
    with pytest.raises(DomainError):
        omega_periodic(GZ, (), (0, 0))
    with pytest.raises(DomainError):
        omega_periodic(GZ, (), (-1, 2))


def test_invariance_and_classification():
    ones = omega_periodic(GZ, (), (1,))
    assert omega_invariance(ones).index is None
    assert omega_classify(ones) == hahnomega.TIGHTENED
    assert str(index_cut(ones)) == "top"
    gap = omega_gap_at(GQ, [], 1, SQRT2)
    assert omega_invariance(gap) == omega_tail(GQ, 2)
    assert omega_classify(gap) == hahnomega.GAPPED
    assert str(index_cut(gap)) == "L^{>1}"
    pt = omega_point(GZ, [(0, 3)])
    assert omega_invariance(pt) == omega_zero_subgroup(GZ)
    assert omega_classify(pt) == hahnomega.RP_BELOW
    assert str(index_cut(pt)) == "top"


def test_tail_chain():
    """Tail(i+1) is the immediate predecessor of Tail(i) for i <= 8."""
    for i in range(9):
        big = omega_tail(GZ, i)
        small = omega_tail(GZ, i + 1)
        sep = omega_element(GZ, [(i, 1)])
        assert big.member(sep) and not small.member(sep)
    assert not omega_zero_subgroup(GZ).member(omega_element(GZ, [(7, 1)]))


def test_witness_search_examples():
    ones = omega_periodic(GZ, (), (1,))
    w = omega_witness_search(ones, omega_element(GZ, [(3, 1)]), 6)
    assert w is not None
    y, z = w
    assert omega_member(ones, y) != omega_member(ones, z)
    gap = omega_gap_at(GQ, [], 1, SQRT2)
    inside = omega_element(GQ, [(5, 1)])  # lies in Tail(2) = invariance
    assert omega_witness_search(gap, inside, 8) is None
    pt = omega_point(GZ, [(0, 3)])
    w2 = omega_witness_search(pt, omega_element(GZ, [(0, 1)]), 6)
    assert w2 is not None
    with pytest.raises(DomainError):
        omega_witness_search(pt, omega_zero(GZ), 6)


def test_invariance_oracle_agreement():
    """Stabilizer samples never yield witnesses; outsiders always do."""
    rng = sampling.rng_for(0)
    anchors = [omega_periodic(GZ, (), (1,)),
               omega_periodic(GZ, (2,), (1, 3)),
               omega_point(GZ, [(0, 2), (2, -1)]),
               omega_gap_at(GQ, [(0, Fraction(1, 2))], 2, SQRT2)]
    for anchor in anchors:
        inv = omega_invariance(anchor)
        for _ in range(25):
            g = sampling.sample_omega_nonzero(anchor.group, rng, 4, 5)
            found = omega_witness_search(anchor, g, 8)
            if inv.member(g):
                assert found is None
            else:
                assert found is not None
                y, z = found
                assert z == y + g
                assert omega_member(anchor, y) != omega_member(anchor, z)


def test_translate():
    ones = omega_periodic(GZ, (), (1,))
    g = omega_element(GZ, [(0, 2)])
    t = omega_translate(ones, g)
    # phase preserved: coordinate stream shifts only where g is supported
    assert t.coord(0) == Scalar.make(3)
    assert all(t.coord(i) == Scalar.make(1) for i in range(1, 6))
    rng = sampling.rng_for(1)
    anchors = [omega_periodic(GZ, (), (1, 2)),
               omega_point(GZ, [(1, 4)]),
               omega_gap_at(GQ, [], 1, SQRT2)]
    for anchor in anchors:
        for _ in range(30):
            g = sampling.sample_omega_element(anchor.group, rng, 4, 4)
            shifted = omega_translate(anchor, g)
            assert omega_classify(shifted) == omega_classify(anchor)
            x = sampling.sample_omega_element(anchor.group, rng, 4, 4)
            assert omega_member(shifted, x + g) == omega_member(anchor, x)


def test_finite_rank_consistency():
    """A point anchor supported below n behaves like the rank-n lex cut."""
    rng = sampling.rng_for(2)
    n = 4
    lex = LexGroup((KIND_Z,) * n)
    pt = omega_point(GZ, [(0, 1), (2, -2)])
    c = cuts.principal(lex, cuts.BELOW, (1, 0, -2, 0), n)
    for _ in range(200):
        x = sampling.sample_omega_element(GZ, rng, 4, n - 1)
        lifted = element(lex, tuple(x.coord(i) for i in range(n)))
        assert omega_member(pt, x) == cuts.member(c, lifted)
    gap_o = omega_gap_at(GQ, [(0, Fraction(1, 2))], 1, SQRT2)
    lex_q = LexGroup((KIND_Q,) * 2)
    gap_c = cuts.gap_cut(lex_q, (Scalar.make(Fraction(1, 2)),), 2, SQRT2)
    for _ in range(200):
        x = sampling.sample_omega_element(GQ, rng, 4, 1)
        lifted = element(lex_q, (x.coord(0), x.coord(1)))
        assert omega_member(gap_o, x) == cuts.member(gap_c, lifted)
