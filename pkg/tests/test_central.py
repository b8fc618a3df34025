"""Chain classes, coset partitions, central subobjects, group identification."""

import pytest
from hypothesis import given, settings, strategies as st

import fusionrings as fr
from fusionrings.errors import NotAGroup


class TestMergeClosure:
    def test_group_ring_gives_singletons(self, s3ring):
        part = fr.merge_closure(s3ring)
        assert all(len(b) == 1 for b in part.blocks)
        assert len(part.blocks) == 6

    def test_rep_s3_collapses(self, reps3):
        part = fr.merge_closure(reps3)
        assert len(part.blocks) == 1

    def test_rep_z4_blocks(self, repz4):
        part = fr.merge_closure(repz4)
        assert len(part.blocks) == 4

    def test_su2_parity_blocks(self, su2):
        part = fr.merge_closure(su2, depth=6)
        assert len(part.blocks) == 2
        explored = set(su2.elements(6))
        unit_block = set(part.blocks[part.block_of["V0"]])
        assert unit_block & explored == {"V0", "V2", "V4", "V6"}

    def test_matches_brute_force_oracle(self, explicit_fixtures):
        for name, ring in explicit_fixtures.items():
            fast = fr.merge_closure(ring)
            slow = fr.chain_oracle(ring, max_len=6)
            assert fast.same_partition(slow), name


class TestSigmaCosets:
    def test_repz4_even_subobject(self, repz4):
        sub = fr.check_subobject(repz4, ["chi0", "chi2"])
        part = fr.sigma_cosets(repz4, sub)
        assert len(part.blocks) == 2
        assert part.block_of["chi1"] == part.block_of["chi3"]

    def test_whole_basis_single_block(self, reps3):
        sub = fr.check_subobject(reps3, reps3.labels())
        part = fr.sigma_cosets(reps3, sub)
        assert len(part.blocks) == 1

    def test_group_ring_subgroup_cosets(self, s3ring):
        sub = fr.check_subobject(s3ring, ["e", "r", "r2"])
        part = fr.sigma_cosets(s3ring, sub)
        assert len(part.blocks) == 2


class TestCentralSubobjects:
    def test_normal_subgroup_is_central_here(self, s3ring):
        sub = fr.check_subobject(s3ring, ["e", "r", "r2"])
        res = fr.is_central_subobject(s3ring, sub)
        assert res.central
        assert res.table.size == 2

    def test_non_normal_subgroup_is_not_central(self, s3ring):
        sub = fr.check_subobject(s3ring, ["e", "s"])
        res = fr.is_central_subobject(s3ring, sub)
        assert not res.central
        assert res.witness is not None

    def test_rep_s3_trivial_subobject_not_central(self, reps3):
        sub = fr.check_subobject(reps3, ["1"])
        res = fr.is_central_subobject(reps3, sub)
        assert not res.central

    def test_enumeration_rep_z4(self, repz4):
        subs = fr.enumerate_central_subobjects(repz4)
        members = [s.sorted_in(repz4) for s in subs]
        assert members == [["chi0"], ["chi0", "chi2"],
                           ["chi0", "chi1", "chi2", "chi3"]]

    def test_enumeration_rep_s3(self, reps3):
        subs = fr.enumerate_central_subobjects(reps3)
        assert [len(s) for s in subs] == [3]

    def test_center_subobject_cross_checks(self, explicit_fixtures):
        for name, ring in explicit_fixtures.items():
            sub = fr.center_subobject(ring)
            assert ring.unit in sub, name

    def test_generated_center(self, su2, so3):
        su2_center = fr.center_subobject(su2, 6)
        assert {"V0", "V2"} <= set(su2_center.members)
        assert "V1" not in su2_center
        # trivial center: everything is chain-equivalent to the unit
        so3_center = fr.center_subobject(so3, 6)
        assert set(so3.elements(6)) <= set(so3_center.members)


class TestChainGroup:
    def test_group_ring_recovers_group(self, s3ring):
        table, desc = fr.chain_group(s3ring)
        assert desc.order == 6 and not desc.is_abelian
        assert desc.flag == "exact"

    def test_abelian_invariants_z6(self):
        ring = fr.group_ring(fr.cyclic_group(6))
        table, _ = fr.chain_group(ring)
        assert fr.abelian_invariants(table) == [6]

    def test_abelian_invariants_klein(self, kleinring):
        table, _ = fr.chain_group(kleinring)
        assert fr.abelian_invariants(table) == [2, 2]

    def test_abelian_invariants_z2_x_z4(self):
        ring = fr.direct_product(fr.group_ring(fr.cyclic_group(2)),
                                 fr.group_ring(fr.cyclic_group(4)))
        table, _ = fr.chain_group(ring)
        assert fr.abelian_invariants(table) == [2, 4]

    def test_direct_product_mixes_factors(self, prodring):
        _, desc = fr.chain_group(prodring)
        assert desc.order == 2  # the character-ring factor collapses

    def test_stability_flag_generated(self, su2):
        _, desc = fr.chain_group(su2, 6)
        assert desc.flag == "stable_at_depth(6)"
        assert desc.abelian_invariants == [2]

    def test_infinite_chain_group_presentation(self, zring):
        pres, desc = fr.chain_group(zring, 5)
        assert desc.name == "Z"
        assert desc.presentation["relations"] == []

    @given(st.integers(min_value=1, max_value=8))
    @settings(max_examples=8, deadline=None)
    def test_cyclic_group_ring_chain_group(self, n):
        ring = fr.group_ring(fr.cyclic_group(n))
        table, desc = fr.chain_group(ring)
        assert desc.order == n
        assert desc.is_abelian


class TestGroupIdentification:
    def test_isomorphic_relabel(self, z4ring):
        t1, _ = fr.chain_group(z4ring)
        ring2 = fr.group_ring(fr.cyclic_group(4))
        t2, _ = fr.chain_group(ring2)
        assert fr.tables_isomorphic(t1, t2)

    def test_z4_not_klein(self, z4ring, kleinring):
        t1, _ = fr.chain_group(z4ring)
        t2, _ = fr.chain_group(kleinring)
        assert not fr.tables_isomorphic(t1, t2)

    def test_candidate_naming(self, s3ring):
        reference, _ = fr.chain_group(s3ring)
        _, desc = fr.chain_group(s3ring, candidates={"S3": reference})
        assert desc.name == "S3"

    def test_group_table_verify_rejects_bad_table(self):
        mult = ((0, 1), (1, 1))  # not a latin square
        table = fr.GroupTable(mult, 0, ("e", "a"))
        with pytest.raises(NotAGroup):
            table.verify()
