import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fintopo import (
    FiniteSpace,
    GroundMismatch,
    MissingEmptyOrFull,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
    PointOutOfRange,
    PointSet,
    SetFamily,
    SizeTooLarge,
    validate_topology,
)
from fintopo.core import bit_members, mask_of, topology_violation
from strategies import space_and_subset, spaces

import oracles


def all_small_spaces(max_points=3):
    from fintopo import enumerate_topologies
    for n in range(1, max_points + 1):
        yield from enumerate_topologies(n)


class TestPointSet:
    def test_basic_ops_match_frozensets(self):
        a = PointSet.from_points([0, 2], 4)
        b = PointSet.from_points([1, 2], 4)
        assert (a | b).members == (0, 1, 2)
        assert (a & b).members == (2,)
        assert (a - b).members == (0,)
        assert a.complement().members == (1, 3)
        assert not a.issubset(b)
        assert a.issubset(a | b)
        assert PointSet.empty(4).isdisjoint(a)
        assert 2 in a and 1 not in a
        assert len(a) == 2 and list(a) == [0, 2]

    @given(st.integers(0, 15), st.integers(0, 15))
    def test_ops_agree_with_set_model(self, m1, m2):
        a, b = PointSet(m1, 4), PointSet(m2, 4)
        sa, sb = set(a.members), set(b.members)
        assert set((a | b).members) == sa | sb
        assert set((a & b).members) == sa & sb
        assert set((a - b).members) == sa - sb
        assert a.issubset(b) == (sa <= sb)
        assert a.isdisjoint(b) == (not (sa & sb))

    def test_mask_out_of_range_rejected(self):
        with pytest.raises(PointOutOfRange):
            PointSet(16, 4)
        with pytest.raises(PointOutOfRange):
            PointSet(-1, 4)
        with pytest.raises(PointOutOfRange):
            PointSet.from_points([4], 4)

    def test_ground_mismatch_rejected(self):
        with pytest.raises(GroundMismatch):
            PointSet(1, 2) | PointSet(1, 3)

    def test_render(self):
        s = PointSet.from_points([1, 3], 4)
        assert s.render() == "{1,3}"
        assert s.render(("i", "j", "k", "l")) == "{j,l}"
        assert PointSet.empty(4).render() == "{}"

    def test_bit_helpers_roundtrip(self):
        assert bit_members(0b1011) == (0, 1, 3)
        assert mask_of((0, 1, 3), 4) == 0b1011
        assert mask_of((), 4) == 0


class TestSetFamily:
    def test_canonical_order_and_dedup(self):
        fam = SetFamily.from_masks(3, [7, 1, 1, 0])
        assert fam.masks == (0, 1, 7)

    def test_membership_and_iter(self):
        fam = SetFamily.from_masks(2, [0, 3])
        assert PointSet(0, 2) in fam
        assert PointSet(1, 2) not in fam
        assert [s.mask for s in fam] == [0, 3]
        assert len(fam) == 2


class TestFiniteSpaceValidation:
    def test_missing_empty_or_full(self):
        with pytest.raises(MissingEmptyOrFull):
            FiniteSpace(2, (1, 3))
        with pytest.raises(MissingEmptyOrFull):
            FiniteSpace(2, (0, 1))

    def test_union_closure_enforced(self):
        with pytest.raises(NotClosedUnderUnion):
            validate_topology(3, [0, 1, 2, 7])

    def test_intersection_closure_enforced(self):
        with pytest.raises(NotClosedUnderIntersection):
            validate_topology(3, [0, 3, 5, 7])

    def test_out_of_range_open_rejected(self):
        with pytest.raises(PointOutOfRange):
            FiniteSpace(2, (0, 3, 4))

    def test_size_bound(self):
        with pytest.raises(SizeTooLarge):
            FiniteSpace(17, (0, (1 << 17) - 1))
        with pytest.raises(PointOutOfRange):
            FiniteSpace(0, (0,))

    def test_topology_violation_reports_first_problem(self):
        assert topology_violation(2, (0, 3)) is None
        assert topology_violation(2, (0, 1)) is not None
        assert topology_violation(3, (0, 1, 2, 7)) is not None

    def test_validate_topology_builds_space(self):
        sp = validate_topology(2, [0, 1, 3])
        assert sp.opens == (0, 1, 3)


class TestInteriorClosure:
    def test_against_oracle_small(self):
        for sp in all_small_spaces(3):
            t = oracles.tables(sp)
            for mask in sp.subset_masks():
                a = oracles.members(mask, sp.size)
                assert oracles.as_mask(t["interior"](a)) == sp.interior_mask(mask)
                assert oracles.as_mask(t["closure"](a)) == sp.closure_mask(mask)

    @settings(max_examples=200, deadline=None)
    @given(space_and_subset(max_points=5))
    def test_against_oracle_random(self, pair):
        sp, ps = pair
        t = oracles.tables(sp)
        a = oracles.members(ps.mask, sp.size)
        assert sp.interior(ps).mask == oracles.as_mask(t["interior"](a))
        assert sp.closure(ps).mask == oracles.as_mask(t["closure"](a))

    def test_min_neighborhoods_are_smallest_opens(self):
        for sp in all_small_spaces(3):
            for p in range(sp.size):
                expected = sp.full_mask
                for m in sp.opens:
                    if m >> p & 1:
                        expected &= m
                assert sp.min_neighborhoods[p] == expected

    def test_closed_sets_are_complements(self):
        sp = FiniteSpace(4, (0, 10, 11, 14, 15))
        assert sorted(sp.closed_masks) == sorted(
            sp.full_mask ^ m for m in sp.opens)
        assert sp.is_open(PointSet(10, 4))
        assert sp.is_closed(PointSet(5, 4))
        assert not sp.is_closed(PointSet(10, 4))

    def test_interior_closure_guard_ground(self):
        sp = FiniteSpace(2, (0, 3))
        with pytest.raises(GroundMismatch):
            sp.interior(PointSet(1, 3))


class TestFamilyMask:
    def test_roundtrip(self):
        for sp in all_small_spaces(3):
            rebuilt = FiniteSpace(sp.size, tuple(
                m for m in sp.subset_masks() if sp.family_mask >> m & 1))
            assert rebuilt == sp

    @settings(max_examples=100, deadline=None)
    @given(spaces(max_points=4))
    def test_family_mask_bits_match_opens(self, sp):
        for m in sp.subset_masks():
            assert bool(sp.family_mask >> m & 1) == (m in sp.open_mask_set)
