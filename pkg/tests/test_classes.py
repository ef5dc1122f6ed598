import pytest
from hypothesis import given, settings

from fintopo import (
    ClassLabel,
    DUAL_LABEL,
    GroundMismatch,
    PointSet,
    RALPHA_ANALOGY,
    RALPHA_INT_CL,
    alpha_closure,
    alpha_interior,
    classify,
    enumerate_topologies,
    family_of,
    satisfies,
    sc_star_closure,
    sc_star_closure_verified,
    sc_star_interior,
    semi_closure,
)
from fintopo.classes import label_from_name
from strategies import space_and_subset

import oracles


def small_spaces(max_points=3):
    for n in range(1, max_points + 1):
        yield from enumerate_topologies(n)


def oracle_family_masks(space, label, defn=RALPHA_ANALOGY):
    """The label's family recomputed by the naive path, as a mask set."""
    t = oracles.tables(space)
    pts = t["points"]

    def comp(fam):
        return frozenset(pts - x for x in fam)

    by_name = {
        "Open": t["opens"],
        "Closed": t["closeds"],
        "RegularOpen": t["regular_open"],
        "RegularClosed": t["regular_closed"],
        "SemiOpen": t["semi_open"],
        "SemiClosed": t["semi_closed"],
        "AlphaOpen": t["alpha_open"],
        "AlphaClosed": t["alpha_closed"],
        "GAlphaClosed": t["g_alpha_closed"],
        "GAlphaOpen": comp(t["g_alpha_closed"]),
        "RGAlphaClosed": t["rg_alpha_closed"][defn],
        "RGAlphaOpen": comp(t["rg_alpha_closed"][defn]),
        "CStarOpen": t["c_star_open"],
        "CStarClosed": comp(t["c_star_open"]),
        "SCStarOpen": t["sc_star_open"],
        "SCStarClosed": t["sc_star_closed"],
        "GClosed": t["g_closed"],
        "GOpen": comp(t["g_closed"]),
        "GSCStarClosed": t["gsc_star_closed"],
        "GSCStarOpen": comp(t["gsc_star_closed"]),
        "SCStarGClosed": t["sc_star_g_closed"],
        "SCStarGOpen": comp(t["sc_star_g_closed"]),
        "RegularlySCStarOpen": t["regularly_sc_star_open"],
        "RegularlySCStarClosed": comp(t["regularly_sc_star_open"]),
        "RGSCStarClosed": t["rgsc_star_closed"],
        "RGSCStarOpen": comp(t["rgsc_star_closed"]),
    }
    return frozenset(oracles.as_mask(s) for s in by_name[label.value])


class TestGoldenFamilies:
    """Hand-checked families of the three fixture spaces."""

    def test_shared_core_families(self, shared_core_space):
        sp = shared_core_space
        expect = {
            ClassLabel.CLOSED: (0, 1, 4, 5, 15),
            ClassLabel.G_CLOSED: (0, 1, 4, 5, 7, 13, 15),
            ClassLabel.SC_STAR_CLOSED: tuple(range(16)),
            ClassLabel.GSC_STAR_CLOSED: tuple(range(16)),
            ClassLabel.SC_STAR_G_CLOSED: tuple(range(16)),
            ClassLabel.SEMI_CLOSED: (0, 1, 4, 5, 15),
            ClassLabel.C_STAR_OPEN: (0, 15),
            ClassLabel.REGULAR_OPEN: (0, 15),
            ClassLabel.ALPHA_OPEN: (0, 10, 11, 14, 15),
        }
        for label, masks in expect.items():
            assert family_of(sp, label).masks == masks, label

    def test_layered_subset_k_membership(self, layered_space):
        k = PointSet.from_points([2], 4)
        assert satisfies(layered_space, k, ClassLabel.ALPHA_CLOSED)
        assert satisfies(layered_space, k, ClassLabel.SC_STAR_CLOSED)
        assert satisfies(layered_space, k, ClassLabel.GSC_STAR_CLOSED)
        assert not satisfies(layered_space, k, ClassLabel.CLOSED)

    def test_partition_families(self, partition_space):
        sp = partition_space
        clopens = (0, 1, 2, 3, 12, 13, 14, 15)
        assert family_of(sp, ClassLabel.REGULAR_CLOSED).masks == clopens
        assert family_of(sp, ClassLabel.SEMI_OPEN).masks == clopens
        assert family_of(sp, ClassLabel.C_STAR_OPEN).masks == clopens

    def test_shared_core_closures(self, shared_core_space):
        sp = shared_core_space
        j = PointSet.from_points([1], 4)
        assert semi_closure(sp, j).mask == 15
        assert alpha_closure(sp, j).mask == 15
        assert sc_star_closure(sp, j).mask == j.mask


class TestOracleAgreement:
    def test_every_family_matches_oracle(self):
        for sp in small_spaces(3):
            for label in ClassLabel:
                got = frozenset(family_of(sp, label).masks)
                want = oracle_family_masks(sp, label)
                assert got == want, (sp, label)

    def test_ralpha_families_under_both_readings(self):
        for sp in small_spaces(3):
            for label in (ClassLabel.RG_ALPHA_CLOSED, ClassLabel.RG_ALPHA_OPEN):
                for defn in (RALPHA_ANALOGY, RALPHA_INT_CL):
                    got = frozenset(family_of(sp, label, defn).masks)
                    assert got == oracle_family_masks(sp, label, defn)

    def test_closure_operators_match_oracle(self):
        for sp in small_spaces(3):
            t = oracles.tables(sp)
            for mask in sp.subset_masks():
                a = oracles.members(mask, sp.size)
                ps = PointSet(mask, sp.size)
                assert semi_closure(sp, ps).mask == oracles.as_mask(t["scl"][a])
                assert alpha_closure(sp, ps).mask == oracles.as_mask(
                    t["alpha_cl"][a])
                assert alpha_interior(sp, ps).mask == oracles.as_mask(
                    t["alpha_int"][a])
                assert sc_star_closure(sp, ps).mask == oracles.as_mask(
                    t["sc_cl"][a])
                assert sc_star_interior(sp, ps).mask == oracles.as_mask(
                    t["sc_int"][a])

    @settings(max_examples=150, deadline=None)
    @given(space_and_subset(max_points=4))
    def test_random_membership_matches_oracle(self, pair):
        sp, ps = pair
        a = oracles.members(ps.mask, sp.size)
        for label in (ClassLabel.SEMI_OPEN, ClassLabel.ALPHA_OPEN,
                      ClassLabel.C_STAR_OPEN, ClassLabel.SC_STAR_CLOSED,
                      ClassLabel.G_CLOSED, ClassLabel.GSC_STAR_CLOSED,
                      ClassLabel.RGSC_STAR_CLOSED, ClassLabel.G_ALPHA_CLOSED):
            want = oracles.as_mask(a) in oracle_family_masks(sp, label)
            assert satisfies(sp, ps, label) == want, label


class TestInvariants:
    def test_duality(self):
        for sp in small_spaces(3):
            for mask in sp.subset_masks():
                ps = PointSet(mask, sp.size)
                co = ps.complement()
                for label in ClassLabel:
                    assert satisfies(sp, ps, label) == satisfies(
                        sp, co, DUAL_LABEL[label]), label

    def test_closure_operator_laws(self):
        for sp in small_spaces(3):
            for mask in sp.subset_masks():
                ps = PointSet(mask, sp.size)
                for op in (semi_closure, alpha_closure, sc_star_closure):
                    once = op(sp, ps)
                    assert ps.issubset(once)
                    assert op(sp, once) == once
                ai = alpha_interior(sp, ps)
                assert ai.issubset(ps)
                si = sc_star_interior(sp, ps)
                assert si.issubset(ps)

    def test_sc_star_closure_verified_flag(self):
        for sp in small_spaces(3):
            for mask in sp.subset_masks():
                result, ok = sc_star_closure_verified(sp, PointSet(mask, sp.size))
                assert ok
                assert result.mask == mask

    def test_sc_star_degeneracy_measured(self):
        # Every subset of every small space lands in the SC*-closed family;
        # this is a measured outcome the docs record, not an assumption.
        for sp in small_spaces(3):
            fam = family_of(sp, ClassLabel.SC_STAR_CLOSED)
            assert fam.masks == tuple(sp.subset_masks())


class TestClassifyAndNames:
    def test_classify_agrees_with_satisfies(self, layered_space):
        ps = PointSet.from_points([2], 4)
        rep = classify(layered_space, ps)
        for label in ClassLabel:
            assert (label in rep.labels) == satisfies(layered_space, ps, label)

    def test_sorted_labels_declaration_order(self, shared_core_space):
        rep = classify(shared_core_space, PointSet(0, 4))
        order = list(ClassLabel)
        got = rep.sorted_labels()
        assert list(got) == sorted(got, key=order.index)

    def test_label_lookup(self):
        assert label_from_name("AlphaOpen") is ClassLabel.ALPHA_OPEN
        with pytest.raises(KeyError):
            label_from_name("NotALabel")

    def test_ground_mismatch_guard(self, shared_core_space):
        with pytest.raises(GroundMismatch):
            satisfies(shared_core_space, PointSet(1, 3), ClassLabel.CLOSED)
